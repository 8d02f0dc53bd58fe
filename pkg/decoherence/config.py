# channel
maxFlipProb = 0.5

# trajectories
defaultRate = 1.0  # Gamma, decaying components scale as exp(-Gamma t)
defaultTimeSpan = 3.0
defaultSteps = 101
minSteps = 2

# event detection
bisectTol = 1e-12  # in the scale factor s = exp(-Gamma t)
edgeClassTol = 1e-12  # tolerance for recognizing edge-type initial conditions
