from utils import *
from bell.state import spectrum_array
from bell.measures import FIELDS
from . import config


class ScalarFieldId(enum.Enum):
    DISCORD = 'discord'
    CLASSICAL = 'classical'
    MUTUAL_INFO = 'mutual_info'
    CONCURRENCE = 'concurrence'
    EOF = 'eof'

    def __call__(self, points):
        """ Field values at (..., 3) points, continuously extended outside T. """
        return FIELDS[self.value](points)


@dataclass(frozen=True, eq=False)
class FieldGrid:
    field: ScalarFieldId
    axis: np.ndarray  # 1D grid coordinates shared by c1, c2, c3
    values: np.ndarray  # (n, n, n)
    inside: np.ndarray  # (n, n, n) grid points in T
    valid_cells: np.ndarray  # (n-1, n-1, n-1) cells with a corner in T

    @property
    def resolution(self):
        return len(self.axis)

    @property
    def spacing(self):
        return float(self.axis[1] - self.axis[0])

    def value_at(self, c):
        """ Grid value at a point that is a grid node. """
        idx = tuple(int(round((x + 1) / self.spacing)) for x in c)
        return float(self.values[idx])

    def range_in_t(self):
        v = self.values[self.inside]
        return float(v.min()), float(v.max())


def check_resolution(resolution):
    if resolution < config.minResolution or resolution % 2 == 0:
        raise DomainError(
            f'resolution must be odd and >= {config.minResolution}, got {resolution}')

def grid_points(resolution):
    axis = np.linspace(-1, 1, resolution)
    return axis, np.stack(np.meshgrid(axis, axis, axis, indexing='ij'), axis=-1)

def cell_any(mask):
    """ (n-1)^3 mask of cells with at least one of their 8 corners set. """
    out = np.zeros(tuple(s - 1 for s in mask.shape), dtype=bool)
    for i, j, k in itertools.product((0, 1), repeat=3):
        out |= mask[i:mask.shape[0] - 1 + i, j:mask.shape[1] - 1 + j, k:mask.shape[2] - 1 + k]
    return out

@timeit
def sample_field(field, resolution=config.defaultResolution):
    field = ScalarFieldId(field)
    check_resolution(resolution)
    axis, pts = grid_points(resolution)
    values = field(pts)
    inside = spectrum_array(pts).min(axis=-1) >= -config.insideTol
    debug('sampled %s on %d^3 grid', field.value, resolution)
    return FieldGrid(field, axis, values, inside, cell_any(inside))
