"""
Bell-diagonal two-qubit states.

A Bell-diagonal state is labeled by the correlation triple (c1, c2, c3):

    rho = (I + sum_j c_j sigma_j (x) sigma_j) / 4 = sum_ab lambda_ab |beta_ab><beta_ab|

with |beta_ab> = (|0,b> + (-1)^a |1,1+b>) / sqrt(2). The physical states fill the
tetrahedron T (all lambda_ab >= 0) whose vertices are the four Bell states; the
separable ones fill the octahedron |c1|+|c2|+|c3| <= 1; the classical ones lie
on the Cartesian axes.
"""
from utils import *
from scipy.spatial.transform import Rotation
from . import config

BELL_LABELS = config.bellLabels

# lambda_ab = (1 + SIGNS[ab] . c) / 4
SIGNS = np.array([[(-1) ** a, -(-1) ** (a + b), (-1) ** b]
                  for a, b in BELL_LABELS], dtype=float)

PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

I2 = np.eye(2, dtype=complex)


class UnphysicalStateError(DomainError):
    """ The correlation triple lies outside the state tetrahedron. """

    def __init__(self, c, spectrum=None):
        c = CorrelationVector(*c)
        s = spectrum or c.spectrum()
        label, value = min(s.labeled(), key=lambda x: x[1])
        self.c = c
        self.label = label
        super().__init__('unphysical state {}: lambda_{}{} = {} < 0'.format(
            tuple(c), *label, fmt_float(value)))


class SpectrumNormalizationError(DomainError):
    pass


class CorrelationVector(NamedTuple):
    c1: float
    c2: float
    c3: float

    @classmethod
    def from_array(cls, arr):
        c1, c2, c3 = np.asarray(arr, dtype=float).reshape(3)
        return cls(float(c1), float(c2), float(c3))

    def as_array(self):
        return np.array(self, dtype=float)

    @property
    def l1_norm(self):
        return abs(self.c1) + abs(self.c2) + abs(self.c3)

    @property
    def c_max(self):
        return max(abs(self.c1), abs(self.c2), abs(self.c3))

    def spectrum(self):
        return spectrum(self)


class BellSpectrum(NamedTuple):
    """ Eigenvalues lambda_ab in the order (0,0), (0,1), (1,0), (1,1). """
    l00: float
    l01: float
    l10: float
    l11: float

    def __getitem__(self, key):
        if isinstance(key, tuple):
            a, b = key
            key = 2 * a + b
        return tuple.__getitem__(self, key)

    def labeled(self):
        return list(zip(BELL_LABELS, self))

    def as_array(self):
        return np.array(self, dtype=float)

    @property
    def max_label(self):
        # np.argmax returns the first maximum, i.e. the lexicographically smallest label
        return BELL_LABELS[int(np.argmax(self.as_array()))]


@dataclass(frozen=True)
class StateClass:
    physical: bool
    separable: bool
    classical: bool
    dominant_vertex: Tuple[int, int]

    def to_dict(self):
        return dict(physical=self.physical,
                    separable=self.separable,
                    classical_state=self.classical,
                    dominant_vertex=list(self.dominant_vertex))


class BellFrame(NamedTuple):
    """ T = ra @ diag(c) @ rb.T with det(ra) = det(rb) = +1. """
    c: CorrelationVector
    ra: np.ndarray
    rb: np.ndarray


# %% spectrum map

def spectrum_array(c):
    """ Vectorized spectrum: (..., 3) correlation triples -> (..., 4) eigenvalues. """
    c = np.asarray(c, dtype=float)
    return (1 + c @ SIGNS.T) / 4

def spectrum(c) -> BellSpectrum:
    """ Eigenvalues of the Bell-diagonal state; unphysical c gives negative entries. """
    return BellSpectrum(*map(float, spectrum_array(tuple(c))))

def correlation_from_spectrum(s, tol=config.spectrumSumTol) -> CorrelationVector:
    lam = np.asarray(tuple(s), dtype=float)
    total = lam.sum()
    if abs(total - 1) > tol:
        raise SpectrumNormalizationError(
            f'spectrum sums to {fmt_float(total)}, expected 1')
    return CorrelationVector.from_array(SIGNS.T @ lam)

def random_physical(rng, size):
    """ Uniform samples of the tetrahedron T as an (size, 3) array. """
    lam = rng.dirichlet(np.ones(4), size=size)
    return lam @ SIGNS


# %% classification

def is_physical(c, tol=config.physicalTol):
    return min(spectrum(c)) >= -tol

def check_physical(c, tol=config.physicalTol):
    c = CorrelationVector(*c)
    s = spectrum(c)
    if min(s) < -tol:
        raise UnphysicalStateError(c, s)
    return c

def is_separable(c):
    c = check_physical(c)
    return c.l1_norm <= 1

def classify(c, tol=config.classicalTol, physical_tol=config.physicalTol) -> StateClass:
    """
    Flags are nested: classical => separable => physical, so an unphysical
    triple is reported as neither separable nor classical.
    """
    c = CorrelationVector(*c)
    s = spectrum(c)
    physical = min(s) >= -physical_tol
    separable = physical and c.l1_norm <= 1
    on_axis = sum(abs(x) > tol for x in c) <= 1
    return StateClass(physical=physical,
                      separable=separable,
                      classical=separable and on_axis,
                      dominant_vertex=s.max_label)


# %% matrix realizations

def correlation_density_matrix(T):
    """ (I + sum_jk T_jk sigma_j (x) sigma_k) / 4 for a 3x3 correlation matrix T. """
    T = np.asarray(T, dtype=float)
    rho = np.eye(4, dtype=complex)
    for j, k in itertools.product(range(3), repeat=2):
        if T[j, k]:
            rho += T[j, k] * np.kron(PAULI[j], PAULI[k])
    return rho / 4

def density_matrix(c, tol=config.physicalTol):
    """ 4x4 density matrix in the computational basis |00>, |01>, |10>, |11>. """
    c = check_physical(c, tol)
    return correlation_density_matrix(np.diag(c))

def correlation_matrix(rho):
    """ T_jk = tr(rho sigma_j (x) sigma_k). """
    rho = np.asarray(rho)
    return np.array([[np.trace(rho @ np.kron(PAULI[j], PAULI[k])).real
                      for k in range(3)] for j in range(3)])

def partial_transpose(rho):
    """ Transpose on qubit B. """
    rho = np.asarray(rho).reshape(2, 2, 2, 2)
    return rho.transpose(0, 3, 2, 1).reshape(4, 4)


# %% local-unitary reduction

def bell_diagonalize(T) -> BellFrame:
    """
    Factor T = ra @ diag(c) @ rb.T with proper rotations ra, rb.

    Singular values come out in descending order; a reflection in either
    factor is removed by negating its last column and the last component of c.
    """
    T = np.asarray(T, dtype=float)
    if T.shape != (3, 3):
        raise DomainError(f'correlation matrix must be 3x3, got {T.shape}')
    if np.any(np.abs(T) > 1 + config.correlationEntryTol):
        raise DomainError('correlation matrix entries must lie in [-1, 1]')
    u, s, vt = np.linalg.svd(T)
    ra, rb, c = u.copy(), vt.T.copy(), s.copy()
    if np.linalg.det(ra) < 0:
        ra[:, -1] *= -1
        c[-1] *= -1
    if np.linalg.det(rb) < 0:
        rb[:, -1] *= -1
        c[-1] *= -1
    return BellFrame(CorrelationVector.from_array(c), ra, rb)

def rotation_to_unitary(R):
    """ SU(2) element U with U sigma_k U^dag = sum_j R_jk sigma_j. """
    R = np.asarray(R, dtype=float)
    if abs(np.linalg.det(R) - 1) > config.rotationDetTol:
        raise DomainError('not a proper rotation')
    rotvec = Rotation.from_matrix(R).as_rotvec()
    angle = np.linalg.norm(rotvec)
    if angle == 0:
        return I2.copy()
    n = rotvec / angle
    return np.cos(angle / 2) * I2 - 1j * np.sin(angle / 2) * np.einsum('j,jab->ab', n, PAULI)
