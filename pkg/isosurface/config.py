# sampling grid over [-1, 1]^3
defaultResolution = 129  # odd, so the origin and the axes are grid points; memory ~ resolution^3
minResolution = 9

# edge refinement
refineTol = 1e-8  # bits
minRefineTol = 1e-10
maxBisectIters = 200

# tetrahedron T
insideTol = 1e-9  # min lambda allowed for a grid point or an emitted vertex
clipEps = 1e-12  # vertices with lambda > -clipEps are kept by the clipper

degenerateArea = 1e-14

# convexity witnesses
defaultTrials = 10000
convexityGapTol = 1e-9
witnessPairs = {
    # two zero-discord classical states on different axes; the mixture is not classical
    'axes_mixture': ((0.5, 0., 0.), (0., 0.5, 0.)),
    # two positive-discord states whose mixture lies on the c1 axis
    'classical_mixture': ((0.6, 0.3, 0.), (0.6, -0.3, 0.)),
}
