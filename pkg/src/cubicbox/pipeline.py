"""End-to-end construction of touching 3-box representations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boxes import VerificationReport, assemble_boxes, restrict, verify
from .extract import ExtractionStats
from .graph import Graph, complete_to_cubic
from .intervals import Orderings, build_orderings, intervals_x, intervals_y, intervals_z
from .partition import Partition, build_partition

__all__ = ["BuildResult", "construct_boxes", "build_representation"]


@dataclass
class BuildResult:
    graph: Graph
    completed: Graph
    original_count: int
    boxes: np.ndarray            # boxes of the original vertices
    completed_boxes: np.ndarray  # boxes of the cubic completion
    partition: Partition
    orderings: Orderings
    report: VerificationReport | None
    stats: list[ExtractionStats]


def construct_boxes(g: Graph) -> tuple[np.ndarray, Partition, Orderings]:
    """Boxes for a cubic graph; structural validation included, geometric
    verification not."""
    part = build_partition(g, validate=True)
    orderings = build_orderings(g, part)
    ix = intervals_x(part, orderings)
    iy = intervals_y(part, orderings)
    iz = intervals_z(part, orderings)
    return assemble_boxes(ix, iy, iz), part, orderings


def build_representation(h: Graph, check: bool = True) -> BuildResult:
    """Complete to cubic, construct, restrict back, and (optionally) verify.

    With check=True the boxes are verified against both the completed graph
    and the original graph before being returned; a failed verification
    raises AssertionError since it disproves the construction.
    """
    comp = complete_to_cubic(h)
    boxes_full, part, orderings = construct_boxes(comp.completed)
    boxes = restrict(boxes_full, comp.original_count)
    report = None
    if check:
        if comp.original_count < comp.completed.n:
            full_report = verify(comp.completed, boxes_full)
            if not full_report.ok:
                raise AssertionError(
                    f"verification failed on the cubic completion: "
                    f"{full_report.to_json_dict()}")
        report = verify(h, boxes)
        if not report.ok:
            raise AssertionError(
                f"verification failed after restriction: "
                f"{report.to_json_dict()}")
    return BuildResult(h, comp.completed, comp.original_count, boxes,
                       boxes_full, part, orderings, report, part.stats)
