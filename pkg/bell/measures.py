"""
Closed-form correlation measures of Bell-diagonal states, in bits.

    I = 2 - S(rho_AB) = sum_ab lambda_ab log2(4 lambda_ab)
    C = 1 - H2((1 + c) / 2),  c = max_j |c_j|
    D = I - C
    concurrence = max(0, 2 lambda_max - 1)
    EoF = H2((1 + sqrt(1 - concurrence^2)) / 2)

The EoF-from-concurrence function is Wootters' formula for two qubits.

Every measure has a vectorized `*_field` form over (..., 3) arrays. Outside T
the fields use the continuous extension in which nonpositive eigenvalues
contribute nothing to the entropies; the scalar functions refuse unphysical
input instead.
"""
from utils import *
from . import config
from .state import CorrelationVector, check_physical, spectrum_array


def _xlog2(x, y):
    """ x * log2(y), taken as 0 wherever x <= 0. """
    x = np.asarray(x, dtype=float)
    pos = x > 0
    return np.where(pos, x * np.log2(np.where(pos, y, 1.)), 0.)

def _h2(p):
    p = np.asarray(p, dtype=float)
    return -(_xlog2(p, p) + _xlog2(1 - p, 1 - p))


@dataclass(frozen=True)
class CorrelationMeasures:
    mutual_info: float
    classical: float
    discord: float
    concurrence: float
    eof: float
    c_max: float

    def to_dict(self):
        return dataclasses.asdict(self)


# %% fields

def mutual_info_field(c):
    lam = spectrum_array(c)
    return np.sum(_xlog2(lam, 4 * lam), axis=-1)

def joint_entropy_field(c):
    lam = spectrum_array(c)
    return -np.sum(_xlog2(lam, lam), axis=-1)

def c_max_field(c):
    return np.max(np.abs(np.asarray(c, dtype=float)), axis=-1)

def classical_field(c):
    cm = np.clip(c_max_field(c), 0, 1)
    return 1 - _h2((1 + cm) / 2)

def discord_field(c):
    return mutual_info_field(c) - classical_field(c)

def concurrence_field(c):
    lam = spectrum_array(c)
    return np.maximum(0, 2 * np.max(lam, axis=-1) - 1)

def eof_field(c):
    conc = np.clip(concurrence_field(c), 0, 1)
    return _h2((1 + np.sqrt(1 - conc ** 2)) / 2)


# %% scalar measures

def binary_entropy(p):
    if not -config.probabilityTol <= p <= 1 + config.probabilityTol:
        raise DomainError(f'probability {p} outside [0, 1]')
    p = min(max(p, 0.), 1.)
    if p == 0 or p == 1:
        return 0.
    return float(-p * np.log2(p) - (1 - p) * np.log2(1 - p))

def mutual_information(c):
    return float(mutual_info_field(check_physical(c)))

def joint_entropy(c):
    """ Von Neumann entropy S(rho_AB) in bits. """
    return float(joint_entropy_field(check_physical(c)))

def classical_correlation(c):
    c = check_physical(c)
    return 1 - binary_entropy((1 + min(c.c_max, 1.)) / 2)

def discord(c):
    d = mutual_information(c) - classical_correlation(c)
    assert d >= config.discordFloor, f'negative discord {d} at {tuple(c)}'
    return d

def concurrence(c):
    return float(concurrence_field(check_physical(c)))

def entanglement_of_formation(c):
    conc = min(concurrence(c), 1.)
    return binary_entropy((1 + np.sqrt(1 - conc ** 2)) / 2)

def all_measures(c) -> CorrelationMeasures:
    c = check_physical(c)
    mi = mutual_information(c)
    cc = classical_correlation(c)
    d = mi - cc
    assert d >= config.discordFloor, f'negative discord {d} at {tuple(c)}'
    return CorrelationMeasures(
        mutual_info=mi,
        classical=cc,
        discord=d,
        concurrence=concurrence(c),
        eof=entanglement_of_formation(c),
        c_max=c.c_max)


FIELDS = {
    'discord': discord_field,
    'classical': classical_field,
    'mutual_info': mutual_info_field,
    'concurrence': concurrence_field,
    'eof': eof_field,
}
