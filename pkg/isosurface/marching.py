"""
Level surfaces by marching tetrahedra.

Every grid cube is split into 6 tetrahedra around the cube diagonal that
points away from the origin (a Kuhn split mirrored into each octant), so the
decomposition is conforming and symmetric under coordinate permutations and
reflections. Crossing points on tetrahedron edges are bisected against the
true field, not interpolated, and the triangles are finally clipped to the
four half-spaces lambda_ab >= 0 of the state tetrahedron.
"""
from utils import *
from bell.state import spectrum_array
from . import config
from .field import ScalarFieldId, FieldGrid, sample_field
from .mesh import TriangleMesh, EmptyMeshError


class LevelOutOfRangeError(DomainError):
    pass


TET_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

def _edge(i, j):
    return TET_EDGES.index((min(i, j), max(i, j)))

def _build_case_table():
    """ Triangles, as triples of local edges, for each above/below pattern of the 4 corners. """
    table = []
    for case in range(16):
        above = [v for v in range(4) if case >> v & 1]
        below = [v for v in range(4) if not case >> v & 1]
        if len(above) in (0, 4):
            tris = []
        elif len(above) in (1, 3):
            a = above[0] if len(above) == 1 else below[0]
            tris = [[_edge(a, o) for o in range(4) if o != a]]
        else:
            (i, j), (k, l) = above, below
            # quad ik-il-jl-jk
            tris = [[_edge(i, k), _edge(i, l), _edge(j, l)],
                    [_edge(i, k), _edge(j, l), _edge(j, k)]]
        table.append(tris)
    return table

CASE_TRIANGLES = _build_case_table()

# corner paths 0 -> e_a -> e_a + e_b -> (1,1,1) for each axis order
KUHN_PATHS = np.array([
    [[0, 0, 0], np.eye(3, dtype=int)[a], np.eye(3, dtype=int)[a] + np.eye(3, dtype=int)[b], [1, 1, 1]]
    for a, b, _ in itertools.permutations(range(3))
], dtype=int)  # (6, 4, 3)


def crossing_cells(grid: FieldGrid, level):
    v = grid.values
    n = grid.resolution
    lo = np.full((n - 1,) * 3, np.inf)
    hi = np.full((n - 1,) * 3, -np.inf)
    for i, j, k in itertools.product((0, 1), repeat=3):
        corner = v[i:n - 1 + i, j:n - 1 + j, k:n - 1 + k]
        lo = np.minimum(lo, corner)
        hi = np.maximum(hi, corner)
    return np.argwhere((lo <= level) & (hi > level) & grid.valid_cells)

def cell_tetrahedra(cells, grid: FieldGrid):
    """ (len(cells) * 6, 4) flat grid indices of the tetrahedra of each cell, in cell order. """
    n = grid.resolution
    center = grid.axis[cells] + grid.spacing / 2
    toward_origin = center < 0  # (m, 3)
    steps = KUHN_PATHS[None]  # (1, 6, 4, 3)
    offsets = np.where(toward_origin[:, None, None, :], 1 - steps, steps)
    corners = cells[:, None, None, :] + offsets  # (m, 6, 4, 3)
    flat = (corners[..., 0] * n + corners[..., 1]) * n + corners[..., 2]
    return flat.reshape(-1, 4)


def refine_crossings(field, lo, hi, level, tol, max_iters=config.maxBisectIters):
    """
    Bisect each segment lo -> hi (field <= level at lo, > level at hi) until the
    field at the midpoint is within tol of the level.
    """
    a, b = lo.copy(), hi.copy()
    x = (a + b) / 2
    res = np.full(len(a), np.inf)
    active = np.ones(len(a), dtype=bool)
    for _ in range(max_iters):
        idx = np.flatnonzero(active)
        if not len(idx):
            break
        mid = (a[idx] + b[idx]) / 2
        fm = field(mid)
        x[idx] = mid
        res[idx] = np.abs(fm - level)
        # the bracket can no longer be halved in floating point
        stalled = np.all((mid == a[idx]) | (mid == b[idx]), axis=1)
        up = fm > level
        b[idx[up]] = mid[up]
        a[idx[~up]] = mid[~up]
        active[idx[(res[idx] <= tol) | stalled]] = False
    missed = int(np.sum(res > tol))
    if missed:
        warn('%d crossing points did not reach the residual tolerance %g', missed, tol)
    return x


def _clip_polygon(poly, lam, points, cache, new_points):
    """ Sutherland-Hodgman against lambda_k >= 0 for k = 0..3. """
    for k in range(4):
        out = []
        for u, w in zip(poly, poly[1:] + poly[:1]):
            du, dw = lam(u)[k], lam(w)[k]
            u_in, w_in = du > -config.clipEps, dw > -config.clipEps
            if u_in:
                out.append(u)
            if u_in != w_in:
                key = (min(u, w), max(u, w), k)
                if key not in cache:
                    p, q = key[:2]
                    dp, dq = lam(p)[k], lam(q)[k]
                    t = min(max(dp / (dp - dq), 0.), 1.)
                    cache[key] = len(points) + len(new_points)
                    new_points.append(_point(p, points, new_points) * (1 - t)
                                      + _point(q, points, new_points) * t)
                out.append(cache[key])
        poly = out
        if len(poly) < 3:
            return []
    return poly

def _point(i, points, new_points):
    return points[i] if i < len(points) else new_points[i - len(points)]

def clip_to_tetrahedron(points, triangles):
    """
    Clip triangles to T. Returns (points, triangles, clipped) where clipped
    flags the vertices created on the faces of T.
    """
    lam = spectrum_array(points)
    outside = lam <= -config.clipEps  # (n, 4)
    tri_out = outside[triangles]  # (m, 3, 4)
    keep = ~tri_out.any(axis=(1, 2))
    drop = tri_out.all(axis=1).any(axis=1)
    todo = np.flatnonzero(~keep & ~drop)

    new_points, cache = [], {}
    new_lam = {}

    def lam_of(i):
        if i < len(points):
            return lam[i]
        if i not in new_lam:
            new_lam[i] = spectrum_array(new_points[i - len(points)])
        return new_lam[i]

    pieces = [(int(t), triangles[t][None]) for t in np.flatnonzero(keep)]
    for t in todo:
        poly = _clip_polygon(list(map(int, triangles[t])), lam_of, points, cache, new_points)
        fan = [[poly[0], poly[i], poly[i + 1]] for i in range(1, len(poly) - 1)]
        if fan:
            pieces.append((int(t), np.array(fan, dtype=int)))
    pieces.sort(key=lambda x: x[0])
    tris = np.concatenate([p for _, p in pieces]) if pieces else np.zeros((0, 3), dtype=int)
    if new_points:
        points = np.vstack([points, np.array(new_points)])
    clipped = np.zeros(len(points), dtype=bool)
    clipped[len(points) - len(new_points):] = True
    debug('clipping: %d kept, %d dropped, %d cut', keep.sum(), drop.sum(), len(todo))
    return points, tris, clipped

def _drop_degenerate(points, tris):
    a, b, c = (points[tris[:, i]] for i in range(3))
    area = 0.5 * np.linalg.norm(np.cross(b - a, c - a), axis=1)
    distinct = (tris[:, 0] != tris[:, 1]) & (tris[:, 1] != tris[:, 2]) & (tris[:, 0] != tris[:, 2])
    return tris[distinct & (area > config.degenerateArea)]

def _compact(points, tris, clipped):
    used, inverse = np.unique(tris, return_inverse=True)
    return points[used], inverse.reshape(-1, 3), clipped[used]


@timeit
def extract_level_surface(field, level, resolution=config.defaultResolution,
                          refine_tol=config.refineTol, grid=None):
    field = ScalarFieldId(field)
    if refine_tol < config.minRefineTol:
        raise DomainError(f'refine_tol must be >= {config.minRefineTol}')
    if grid is None:
        grid = sample_field(field, resolution)
    fmin, fmax = grid.range_in_t()
    if not fmin < level < fmax:
        raise LevelOutOfRangeError(
            f'{field.value} level {level} outside ({fmin:.6g}, {fmax:.6g}) on T')

    cells = crossing_cells(grid, level)
    tets = cell_tetrahedra(cells, grid)
    vals = grid.values.ravel()[tets]
    above = vals > level
    case = (above * (1 << np.arange(4))).sum(axis=1)
    crossing = (case != 0) & (case != 15)
    tets, above, case = tets[crossing], above[crossing], case[crossing]
    if not len(tets):
        raise EmptyMeshError(f'no {field.value} = {level} crossings on the grid')

    # unique crossing edges, oriented below -> above
    ends = np.array(TET_EDGES)
    ea, eb = tets[:, ends[:, 0]], tets[:, ends[:, 1]]  # (m, 6)
    cut = above[:, ends[:, 0]] != above[:, ends[:, 1]]
    lo = np.where(above[:, ends[:, 0]], eb, ea)
    hi = np.where(above[:, ends[:, 0]], ea, eb)
    nn = grid.resolution ** 3
    keys = np.where(cut, np.minimum(ea, eb) * nn + np.maximum(ea, eb), -1)
    ukeys, first = np.unique(keys[cut], return_index=True)
    edge_lo, edge_hi = lo[cut][first], hi[cut][first]
    edge_vid = np.where(cut, np.searchsorted(ukeys, keys), -1)

    shape = (grid.resolution,) * 3
    p_lo = grid.axis[np.stack(np.unravel_index(edge_lo, shape), axis=1)]
    p_hi = grid.axis[np.stack(np.unravel_index(edge_hi, shape), axis=1)]

    # a crossing within tol of a grid node is that node, shared by all its edges
    flat = grid.values.ravel()
    snap_lo = np.abs(flat[edge_lo] - level) <= refine_tol
    snap_hi = ~snap_lo & (np.abs(flat[edge_hi] - level) <= refine_tol)
    free = ~(snap_lo | snap_hi)
    pos = np.where(snap_lo[:, None], p_lo, p_hi)
    pos[free] = refine_crossings(field, p_lo[free], p_hi[free], level, refine_tol)
    codes = np.where(snap_lo, edge_lo, np.where(snap_hi, edge_hi, nn + np.arange(len(ukeys))))
    _, rep, vertex_of_edge = np.unique(codes, return_index=True, return_inverse=True)
    points = pos[rep]
    vertex_of_edge = vertex_of_edge.ravel()
    debug('%d crossing edges, %d snapped to grid nodes', len(ukeys), int((~free).sum()))

    # triangles in tetrahedron order
    owner, slot, tris, ref = [], [], [], []
    for c in range(1, 15):
        sel = np.flatnonzero(case == c)
        if not len(sel):
            continue
        for s, tri in enumerate(CASE_TRIANGLES[c]):
            owner.append(sel)
            slot.append(np.full(len(sel), s))
            tris.append(vertex_of_edge[edge_vid[sel][:, tri]])
            ref.append(edge_vid[sel, tri[0]])
    owner, slot = np.concatenate(owner), np.concatenate(slot)
    order = np.lexsort((slot, owner))
    tris, ref = np.concatenate(tris)[order], np.concatenate(ref)[order]

    # orient normals toward increasing field
    a, b, c = (points[tris[:, i]] for i in range(3))
    normal = np.cross(b - a, c - a)
    flip = np.einsum('ij,ij->i', normal, p_hi[ref] - p_lo[ref]) < 0
    tris[flip] = tris[flip][:, [0, 2, 1]]

    points, tris, clipped = clip_to_tetrahedron(points, tris)
    tris = _drop_degenerate(points, tris)
    if not len(tris):
        raise EmptyMeshError(f'{field.value} = {level} surface lies outside T')
    points, tris, clipped = _compact(points, tris, clipped)

    mesh = TriangleMesh(field=field, level=float(level), vertices=points, triangles=tris,
                        residuals=np.abs(field(points) - level), clipped=clipped)
    notice('%s = %g: %d vertices, %d triangles, max residual %.3g',
           field.value, level, mesh.num_vertices, mesh.num_triangles, mesh.max_residual)
    return mesh
