from .state import (
    CorrelationVector, BellSpectrum, StateClass, BellFrame,
    UnphysicalStateError, SpectrumNormalizationError,
    spectrum, spectrum_array, correlation_from_spectrum, random_physical,
    is_physical, check_physical, is_separable, classify,
    density_matrix, correlation_density_matrix, correlation_matrix,
    partial_transpose, bell_diagonalize, rotation_to_unitary,
)
from .measures import (
    CorrelationMeasures, FIELDS,
    binary_entropy, mutual_information, joint_entropy, classical_correlation,
    discord, concurrence, entanglement_of_formation, all_measures,
)
