"""
Random rank-one POVMs on qubit A.

Elements E_k = 2 q_k |k><k| with Bloch vectors n_k. Completeness sum_k E_k = I
holds iff sum_k q_k = 1 and sum_k q_k n_k = 0 with all q_k >= 0. Three-outcome
POVMs need coplanar directions, so they are drawn on a random great circle;
four-outcome POVMs use directions anywhere on the sphere.
"""
from utils import *
from bell.state import density_matrix
from . import config
from .measurement import conditional_branch, projector_kets, von_neumann_entropy


class CompletenessError(DomainError):
    def __init__(self, outcomes, draws, accepted):
        self.draws, self.accepted = draws, accepted
        super().__init__(
            f'no complete {outcomes}-outcome POVM after {draws} draws '
            f'({accepted} accepted so far)')


def _random_unit(rng, size):
    v = rng.normal(size=(size, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)

def _draw_directions(rng, outcomes):
    if outcomes == 3:
        u, w = np.linalg.qr(rng.normal(size=(3, 2)))[0].T
        alpha = rng.uniform(0, 2 * np.pi, size=outcomes)
        return np.outer(np.cos(alpha), u) + np.outer(np.sin(alpha), w)
    return _random_unit(rng, outcomes)

def solve_weights(directions):
    """ Weights q making the POVM complete, or None if none exist. """
    A = np.vstack([np.ones(len(directions)), directions.T])
    b = np.array([1., 0., 0., 0.])
    q, *_ = np.linalg.lstsq(A, b, rcond=None)
    if np.abs(A @ q - b).max() > config.completenessTol or np.any(q < 0):
        return None
    return q

def random_povm(rng, outcomes, max_redraws=config.povmMaxRedraws, accepted=0):
    for _ in range(max_redraws):
        directions = _draw_directions(rng, outcomes)
        q = solve_weights(directions)
        if q is not None:
            return directions, q
    raise CompletenessError(outcomes, max_redraws, accepted)

def povm_entropy(rho, directions, weights):
    """ sum_k p_k S(rho_B|k) with p_k = 2 q_k <k|rho_A|k>. """
    total = 0.
    for n, q in zip(directions, weights):
        ket = projector_kets(n)[1]  # +1 eigenvector of n.sigma
        w, cond = conditional_branch(rho, ket)
        if w > 0:
            total += 2 * q * w * von_neumann_entropy(cond)
    return total

def povm_sanity_scan(c, trials, outcomes, seed=config.defaultSeed):
    if outcomes not in config.povmOutcomes:
        raise DomainError(f'outcomes must be one of {config.povmOutcomes}')
    if trials < 1:
        raise DomainError('trials must be >= 1')
    rho = density_matrix(c)
    rng = np.random.default_rng(seed)
    best = np.inf
    for i in progress(range(trials), desc='POVM scan'):
        directions, q = random_povm(rng, outcomes, accepted=i)
        best = min(best, povm_entropy(rho, directions, q))
    return float(best)
