from .field import ScalarFieldId, FieldGrid, sample_field, grid_points
from .mesh import (
    TriangleMesh, EmptyMeshError, MeshExportError,
    connected_components, axis_distance, export_obj, export_csv, load_obj,
)
from .marching import LevelOutOfRangeError, extract_level_surface
from .convexity import Shape, ConvexityReport, convexity_witness
