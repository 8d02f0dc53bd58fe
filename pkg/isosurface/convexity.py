from utils import *
from bell.state import random_physical
from . import config
from .field import ScalarFieldId


class Shape(enum.Enum):
    CONVEX = 'convex'
    CONCAVE = 'concave'
    AFFINE = 'affine'
    NEITHER = 'neither'


@dataclass(frozen=True, eq=False)
class ConvexityReport:
    """
    Midpoint test f((x+y)/2) against (f(x)+f(y))/2. A gap above the tolerance
    violates convexity, one below minus the tolerance violates concavity.
    """
    field: ScalarFieldId
    violations_convex: list  # (x, y, gap) with gap > tol
    violations_concave: list  # (x, y, gap) with gap < -tol
    trials: int
    seed: int
    witnesses: dict  # name -> gap of the fixed witness pairs

    @property
    def classification(self) -> Shape:
        if self.violations_convex and self.violations_concave:
            return Shape.NEITHER
        if self.violations_convex:
            return Shape.CONCAVE
        if self.violations_concave:
            return Shape.CONVEX
        return Shape.AFFINE

    def summary(self):
        return dict(field=self.field.value, trials=self.trials, seed=self.seed,
                    violations_convex=len(self.violations_convex),
                    violations_concave=len(self.violations_concave),
                    witnesses=self.witnesses,
                    classification=self.classification.value)


def midpoint_gaps(field, x, y):
    return field((x + y) / 2) - (field(x) + field(y)) / 2


def convexity_witness(field, trials=config.defaultTrials, seed=0,
                      gap_tol=config.convexityGapTol) -> ConvexityReport:
    field = ScalarFieldId(field)
    if trials < 1:
        raise DomainError(f'trials must be >= 1, got {trials}')
    rng = np.random.default_rng(seed)
    x, y = random_physical(rng, trials), random_physical(rng, trials)

    names = list(config.witnessPairs)
    wx = np.array([config.witnessPairs[k][0] for k in names], dtype=float)
    wy = np.array([config.witnessPairs[k][1] for k in names], dtype=float)
    x, y = np.vstack([wx, x]), np.vstack([wy, y])

    gaps = midpoint_gaps(field, x, y)
    cases = [(tuple(map(float, a)), tuple(map(float, b)), float(g))
             for a, b, g in zip(x, y, gaps)]
    report = ConvexityReport(
        field=field,
        violations_convex=[v for v in cases if v[2] > gap_tol],
        violations_concave=[v for v in cases if v[2] < -gap_tol],
        trials=trials, seed=seed,
        witnesses={k: float(g) for k, g in zip(names, gaps)})
    notice('%s: %d convexity and %d concavity violations in %d pairs -> %s', field.value,
           len(report.violations_convex), len(report.violations_concave),
           len(cases), report.classification.value)
    return report
