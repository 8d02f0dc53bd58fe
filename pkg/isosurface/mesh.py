from utils import *
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components
from .field import ScalarFieldId


class EmptyMeshError(DomainError):
    pass


class MeshExportError(OSError):
    pass


@dataclass(frozen=True, eq=False)
class TriangleMesh:
    field: ScalarFieldId
    level: float
    vertices: np.ndarray  # (n, 3) points in c-space
    triangles: np.ndarray  # (m, 3) vertex indices, oriented along the field gradient
    residuals: np.ndarray  # (n,) |field(v) - level|
    clipped: np.ndarray  # (n,) vertices created by clipping against the faces of T

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_triangles(self):
        return len(self.triangles)

    @property
    def max_residual(self):
        """ Over vertices on the level set proper, i.e. not produced by clipping. """
        r = self.residuals[~self.clipped]
        return float(r.max()) if len(r) else 0.

    def is_empty(self):
        return self.num_triangles == 0

    def summary(self):
        count, _ = connected_components(self)
        return dict(field=self.field.value, level=self.level,
                    vertices=self.num_vertices, triangles=self.num_triangles,
                    clipped_vertices=int(self.clipped.sum()),
                    max_residual=self.max_residual, components=count)


def connected_components(mesh):
    """ Number of vertex-connected pieces and the piece label of each triangle. """
    if mesh.is_empty():
        return 0, np.zeros(0, dtype=int)
    tri = mesh.triangles
    rows = np.concatenate([tri[:, 0], tri[:, 1], tri[:, 2]])
    cols = np.concatenate([tri[:, 1], tri[:, 2], tri[:, 0]])
    n = mesh.num_vertices
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    # every vertex of an extracted mesh belongs to some triangle
    count, labels = _csgraph_components(graph, directed=False)
    return int(count), labels[tri[:, 0]]

def axis_distance(mesh):
    """ Largest distance from a vertex to its nearest Cartesian axis. """
    v = mesh.vertices
    sq = np.sum(v ** 2, axis=1, keepdims=True) - v ** 2
    return float(np.sqrt(np.maximum(sq.min(axis=1), 0)).max())


# %% export

def _write(path, text):
    path = Path(path)
    try:
        with open(path, 'w', newline='\n') as f:
            f.write(text)
    except OSError as e:
        raise MeshExportError(f'cannot write mesh to {path}: {e}') from e
    notice('wrote %s', path)

def obj_text(mesh):
    lines = ['v {} {} {}'.format(*map(fmt_float, v)) for v in mesh.vertices]
    lines += ['f {} {} {}'.format(*(t + 1)) for t in mesh.triangles]
    return '\n'.join(lines) + '\n'

def export_obj(mesh, path):
    if mesh.is_empty():
        raise EmptyMeshError('refusing to export an empty mesh')
    _write(path, obj_text(mesh))

def export_csv(mesh, path):
    if mesh.is_empty():
        raise EmptyMeshError('refusing to export an empty mesh')
    df = pd.DataFrame(mesh.vertices, columns=['x', 'y', 'z'])
    df['residual'] = mesh.residuals
    _write(path, df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n'))

def load_obj(path):
    vertices, faces = [], []
    with open(path) as f:
        for line in f:
            tag, *rest = line.split() or ['']
            if tag == 'v':
                vertices.append([float(x) for x in rest[:3]])
            elif tag == 'f':
                faces.append([int(x.split('/')[0]) - 1 for x in rest[:3]])
    return np.array(vertices, dtype=float).reshape(-1, 3), np.array(faces, dtype=int).reshape(-1, 3)
