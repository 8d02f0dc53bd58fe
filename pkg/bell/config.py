# state classification
physicalTol = 1e-12  # min eigenvalue allowed below zero
classicalTol = 1e-9  # components with |c_j| <= tol count as zero on an axis
spectrumSumTol = 1e-12  # allowed deviation of sum(lambda) from 1
unitNormTol = 1e-12
rotationDetTol = 1e-9
correlationEntryTol = 1e-12  # slack on |T_jk| <= 1

# measures
discordFloor = -1e-12  # anything below is an implementation bug
probabilityTol = 1e-12  # slack on p in [0, 1] for the binary entropy

# Bell labels (a, b) in the fixed eigenvalue order used everywhere
bellLabels = ((0, 0), (0, 1), (1, 0), (1, 1))
