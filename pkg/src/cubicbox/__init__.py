"""Touching 3-box intersection representations for graphs of max degree 3.

Build a box per vertex so that boxes intersect exactly when vertices are
adjacent, and intersecting boxes only share boundary points.  Construction
is linear-time; verification is an independent quadratic oracle.
"""

__version__ = "0.1.0"

from .graph import (Graph, GraphFormatError, DegreeError, CubicCompletion,
                    parse_graph, serialize_graph, complete_to_cubic,
                    random_cubic, random_max_degree3)
from .extract import (WorkingStructure, ExtractionStats, is_saturated,
                      extend_cycle, extend_path, refresh_removables,
                      find_saturated, find_induced_cycle)
from .partition import (Partition, TheoryViolation, build_partition,
                        primary_partition, fine_partition, validate_partition,
                        CLASS_NAMES)
from .intervals import (Orderings, build_orderings, intervals_x, intervals_y,
                        intervals_z, TEN)
from .boxes import (VerificationReport, assemble_boxes, intersection_graph,
                    verify, restrict)
from .pipeline import BuildResult, build_representation, construct_boxes

__all__ = [
    "__version__",
    "Graph", "GraphFormatError", "DegreeError", "CubicCompletion",
    "parse_graph", "serialize_graph", "complete_to_cubic",
    "random_cubic", "random_max_degree3",
    "WorkingStructure", "ExtractionStats", "is_saturated", "extend_cycle",
    "extend_path", "refresh_removables", "find_saturated",
    "find_induced_cycle",
    "Partition", "TheoryViolation", "build_partition", "primary_partition",
    "fine_partition", "validate_partition", "CLASS_NAMES",
    "Orderings", "build_orderings", "intervals_x", "intervals_y",
    "intervals_z", "TEN",
    "VerificationReport", "assemble_boxes", "intersection_graph", "verify",
    "restrict",
    "BuildResult", "build_representation", "construct_boxes",
]
