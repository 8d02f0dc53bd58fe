"""
Numerical minimization of the measured conditional entropy

    S~(B|A) = min_{E_k} sum_k p_k S(rho_B|k)

over projective measurements on qubit A, computed from the full 4x4 density
matrix. Nothing here uses the closed forms of `bell.measures`; the two are
compared in `verify_closed_form`.
"""
from utils import *
from scipy.optimize import minimize_scalar
from bell.state import PAULI, density_matrix
from . import config


class MeasurementDirection(NamedTuple):
    x: float
    y: float
    z: float

    @classmethod
    def from_angles(cls, theta, phi):
        return cls(float(np.sin(theta) * np.cos(phi)),
                   float(np.sin(theta) * np.sin(phi)),
                   float(np.cos(theta)))

    def as_array(self):
        return np.array(self, dtype=float)

    @property
    def angles(self):
        return float(np.arccos(np.clip(self.z, -1, 1))), float(np.arctan2(self.y, self.x))


@dataclass(frozen=True)
class OracleResult:
    min_entropy: float
    argmin: MeasurementDirection
    evaluations: int
    refined: bool


def check_direction(n):
    n = np.asarray(tuple(n), dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1) > config.unitNormTol:
        raise DomainError(f'measurement direction {tuple(n)} is not a unit vector')
    return n


# %% conditional states

def von_neumann_entropy(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 0]
    return float(-np.sum(w * np.log2(w)))

def conditional_branch(rho, ket):
    """
    Outcome |k> on qubit A: returns (<k|rho_A|k>, rho_B|k) where
    rho_B|k = <k|rho_AB|k> / <k|rho_A|k>.
    """
    rho4 = np.asarray(rho).reshape(2, 2, 2, 2)
    block = np.einsum('a,abcd,c->bd', np.conj(ket), rho4, ket)
    weight = float(np.trace(block).real)
    if weight <= 0:
        return 0., None
    return weight, block / weight

def projector_kets(n):
    """ Eigenvectors of n.sigma, i.e. the supports of (I +- n.sigma)/2. """
    _, vecs = np.linalg.eigh(np.einsum('j,jab->ab', n, PAULI))
    return vecs.T

def _projective_entropy(rho, n):
    total = 0.
    for ket in projector_kets(n):
        p, cond = conditional_branch(rho, ket)
        if p > 0:
            total += p * von_neumann_entropy(cond)
    return total

def conditional_entropy_for_direction(c, n):
    n = check_direction(n)
    rho = density_matrix(c)
    return _projective_entropy(rho, n)


# %% minimization

def fibonacci_sphere(n):
    """ n quasi-uniform unit vectors, none at the poles. """
    i = np.arange(n) + 0.5
    z = 1 - 2 * i / n
    r = np.sqrt(1 - z ** 2)
    phi = np.pi * (3 - np.sqrt(5)) * i
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)

def _grid_argmin(points, values):
    """ Minimum value; ties go to the lexicographically smallest direction. """
    best = values.min()
    ties = points[values == best]
    order = np.lexsort(ties.T[::-1])
    return ties[order[0]], best

@timeit
def minimize_conditional_entropy(c, grid_resolution=config.gridResolution, refine=True):
    if grid_resolution < config.minGridResolution:
        raise DomainError(f'grid resolution must be >= {config.minGridResolution}')
    rho = density_matrix(c)
    evaluations = 0

    def objective(theta, phi):
        nonlocal evaluations
        evaluations += 1
        return _projective_entropy(rho, MeasurementDirection.from_angles(theta, phi).as_array())

    points = fibonacci_sphere(grid_resolution)
    values = np.array([_projective_entropy(rho, n) for n in points])
    evaluations += len(points)
    n0, best = _grid_argmin(points, values)
    argmin = MeasurementDirection(*map(float, n0))

    if refine:
        theta, phi = argmin.angles
        step = np.sqrt(4 * np.pi / grid_resolution)  # typical grid spacing
        for it in range(config.maxRefineIters):
            start = best
            for axis in (0, 1):
                x0 = (theta, phi)[axis]
                f = (lambda x: objective(x, phi)) if axis == 0 else (lambda x: objective(theta, x))
                res = minimize_scalar(f, bounds=(x0 - step, x0 + step), method='bounded',
                                      options=dict(xatol=config.angleTol))
                if res.fun < best:
                    best = float(res.fun)
                    if axis == 0:
                        theta = float(res.x)
                    else:
                        phi = float(res.x)
            if start - best < config.refineImprovementTol:
                break
        debug('refined %s in %d sweeps: %s', tuple(c), it + 1, best)
        argmin = MeasurementDirection.from_angles(theta, phi)

    return OracleResult(min_entropy=float(best), argmin=argmin,
                        evaluations=evaluations, refined=refine)

def reduced_state_b(rho):
    return np.einsum('abad->bd', np.asarray(rho).reshape(2, 2, 2, 2))

def oracle_classical_correlation(c, **kwds):
    """ C = S(rho_B) - S~(B|A). """
    s_b = von_neumann_entropy(reduced_state_b(density_matrix(c)))
    return s_b - minimize_conditional_entropy(c, **kwds).min_entropy
