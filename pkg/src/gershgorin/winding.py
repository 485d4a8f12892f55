"""Argument-principle eigenvalue counting along arc contours.

The count is the total phase change of det(zI - A) around the contour,
divided by 2*pi. Phases come from LU determinants at sample points
(log-magnitudes are discarded; only phases accumulate), and any segment
whose phase increment reaches pi/2 is bisected, so a 2*pi aliasing error
is impossible in an accepted result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AmbiguousWindingError,
    EigenvalueOnContourError,
    QuadratureBudgetError,
    SpectrumProximityError,
)
from .geometry import TWO_PI, Arc, Contour
from .matrix import _logdet_phase, as_matrix, homotopy_member

DEFAULT_SAMPLES_PER_TURN = 16

_MIN_SEGMENTS_PER_ARC = 4
_EVALUATION_BUDGET = 1_000_000
_RESIDUAL_LIMIT = 0.1
_SPLIT_THRESHOLD = math.pi / 2.0


@dataclass(frozen=True)
class WindingCount:
    """Accepted integer count with its phase residual and evaluation cost."""

    count: int
    residual: float
    samples_used: int


class _PhaseProbe:
    """Budgeted det-phase evaluator for one matrix."""

    def __init__(self, a: np.ndarray):
        self.a = a
        self.evaluations = 0

    def at(self, z: complex) -> float:
        self.evaluations += 1
        if self.evaluations > _EVALUATION_BUDGET:
            raise QuadratureBudgetError("quadrature not converged")
        try:
            return _logdet_phase(self.a, z)
        except SpectrumProximityError as err:
            raise EigenvalueOnContourError("eigenvalue on contour") from err


def _principal(x: float) -> float:
    return (x + math.pi) % TWO_PI - math.pi


def _segment_delta(probe: _PhaseProbe, arc: Arc, t1: float, p1: float,
                   t2: float, p2: float) -> float:
    delta = _principal(p2 - p1)
    if abs(delta) < _SPLIT_THRESHOLD:
        return delta
    tm = 0.5 * (t1 + t2)
    pm = probe.at(arc.point_at(tm))
    return (_segment_delta(probe, arc, t1, p1, tm, pm)
            + _segment_delta(probe, arc, tm, pm, t2, p2))


def count_inside(a, gamma: Contour, *,
                 samples_per_turn: int = DEFAULT_SAMPLES_PER_TURN) -> WindingCount:
    """Number of eigenvalues of A enclosed by the contour, with multiplicity.

    Initial sampling is ``samples_per_turn`` points per full turn of arc
    angle (at least 4 per arc); segments are bisected adaptively. The
    result is rejected ("ambiguous winding") if the accumulated phase ends
    up more than 0.1 turns away from an integer.
    """
    a = as_matrix(a)
    n = a.shape[0]
    probe = _PhaseProbe(a)
    total = 0.0
    for loop in gamma.loops:
        for arc in loop:
            segments = max(_MIN_SEGMENTS_PER_ARC,
                           math.ceil(samples_per_turn * arc.span / TWO_PI))
            thetas = np.linspace(arc.theta_start, arc.theta_end, segments + 1)
            phases = [probe.at(arc.point_at(t)) for t in thetas]
            for k in range(segments):
                total += _segment_delta(probe, arc, thetas[k], phases[k],
                                        thetas[k + 1], phases[k + 1])
    raw = total / TWO_PI
    count = round(raw)
    residual = abs(raw - count)
    if residual > _RESIDUAL_LIMIT or not 0 <= count <= n:
        raise AmbiguousWindingError("ambiguous winding")
    return WindingCount(count=int(count), residual=float(residual),
                        samples_used=probe.evaluations)


def count_along_homotopy(a, gamma: Contour, t_grid, *,
                         samples_per_turn: int = DEFAULT_SAMPLES_PER_TURN
                         ) -> list[WindingCount]:
    """count_inside for every member A(t) of the diagonal homotopy.

    The contour must be built from the regions of A itself: the disks of
    A(t) shrink toward the centers as t decreases, so one fixed contour
    stays clear of the spectrum for the whole family.
    """
    a = as_matrix(a)
    grid = [float(t) for t in t_grid]
    if not grid or grid[0] != 0.0 or grid[-1] != 1.0:
        raise ValueError("t grid must start at 0 and end at 1")
    if any(t2 < t1 for t1, t2 in zip(grid, grid[1:])):
        raise ValueError("t grid must be sorted")
    return [count_inside(homotopy_member(a, t), gamma,
                         samples_per_turn=samples_per_turn) for t in grid]
