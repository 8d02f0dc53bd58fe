# coarse search
gridResolution = 512  # Fibonacci-sphere directions
minGridResolution = 8

# local refinement on spherical angles
maxRefineIters = 200
refineImprovementTol = 1e-12  # stop when a sweep improves the entropy by less
angleTol = 1e-10  # xatol of each bounded line search

unitNormTol = 1e-12

# random POVM scan
povmOutcomes = (3, 4)
povmMaxRedraws = 1000  # draws allowed per accepted POVM
completenessTol = 1e-10
defaultSeed = 0

# oracle vs closed form
oracleGapTol = 1e-6
povmSlack = 1e-9
