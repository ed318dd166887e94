"""Typed topological spaces on finite data: closures, tracks, connectedness,
surgery, local indexing, branches, and a DBSCAN bridge."""

from .branches import (Branch, TrackComponents, diff_branches, enumerate_branches,
                       track_components)
from .builders import (boundary_epsilon, build_directed_2d_space, build_metric_space,
                       build_planar_space, build_relation_space, min_pairwise_gamma)
from .closure import (ClusterSet, TrackDecomposition, cl1, closure_levels, cluster, cln,
                      is_accumulation_point, tr, track_count, tracks)
from .connectivity import (Bipartition, Port, StraightnessReport, closure_decomposition,
                           component, is_closure_connected, is_straight, is_type_p_connected,
                           overlap_components, port)
from .dbscan import NOISE, DbscanResult, compare_with_tr, dbscan_classify
from .errors import (InvariantError, PreconditionError, SpaceBuildError, TopologyError,
                     UnknownElementError)
from .indexing import (IndexMap, IndexValue, PqStage, UniformityReport, base_index,
                       combined_index, extend_index_A1, full_extension, index_closure_connected_set,
                       index_inverse, index_roundtrip, is_pq_straight, is_uniformly_typed,
                       pq_decomposition, reference_point)
from .space import (Coord2, TypedSpace, TypeLabel, ValidationReport, is_symmetrically_typed,
                    u_min, validate_space)
from .surgery import (CutRecord, RemovalRecord, SurgeryLog, SurgeryRecord, SurroundingTree, cut,
                      separation_surgeries, straighten, surgery, surgery_eligible,
                      surrounding_tree)

__version__ = "0.1.0"
