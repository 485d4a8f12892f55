"""Adaptive homotopy tracking of matched eigenvalue chains, discrete
eigenvalue paths, and the three-way counting cross-check.

The tracker walks t from 0 to 1 through A(t) = A_0 + t(A - A_0). A step is
accepted when the bottleneck matching distance between consecutive spectra
stays below an acceptance epsilon tied to the region gap, so matched
eigenvalues cannot jump between regions; on rejection the step is bisected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GershgorinError, PathEscapeError, StepUnderflowError
from .geometry import (
    RegionSet,
    connected_regions,
    contains,
    gershgorin_disks,
    region_contour,
    region_gap,
    region_of,
)
from .matching import matching_distance
from .matrix import (
    ORACLE_MAX_DIM,
    as_matrix,
    eigenvalues_oracle,
    homotopy_member,
)
from .winding import count_inside

import math

_STEP_FLOOR = 1e-6


@dataclass(frozen=True)
class HomotopyTrace:
    """Accepted grid 0 = t_0 < ... < t_N = 1 with chained spectra.

    ``spectra[i+1]`` is stored in the order matched to ``spectra[i]``, so a
    fixed position j follows one eigenvalue chain through the whole family.
    ``region_counts[i][r]`` counts the chained eigenvalues of A(t_i) lying
    in region r of A (the t = 1 regions).
    """

    t_values: tuple[float, ...]
    spectra: tuple[tuple[complex, ...], ...]
    region_counts: tuple[tuple[int, ...], ...]
    step_epsilon: float


@dataclass(frozen=True)
class EigenPath:
    """Discrete eigenvalue path (t_i, lambda_j(t_i)) pinned to a home region."""

    path_index: int
    points: tuple[tuple[float, complex], ...]
    home_region: int


@dataclass(frozen=True)
class RegionCheck:
    """Four independently computed counts for one region."""

    region_index: int
    disk_indices: tuple[int, ...]
    multiplicity: int
    homotopy_count: int
    winding_count: int
    oracle_count: int

    @property
    def agree(self) -> bool:
        return (self.multiplicity == self.homotopy_count
                == self.winding_count == self.oracle_count)


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[RegionCheck, ...]

    @property
    def all_agree(self) -> bool:
        return all(c.agree for c in self.checks)


def _default_epsilon(a: np.ndarray, rs: RegionSet) -> float:
    gap = region_gap(rs)
    if math.isfinite(gap):
        return gap / 3.0
    diag = np.diagonal(a)
    spread = float(max(abs(x - y) for x in diag for y in diag))
    return 0.1 * (1.0 + spread)


def _region_count_row(rs: RegionSet, values) -> tuple[int, ...]:
    row = [0] * len(rs.regions)
    for value in values:
        r = region_of(rs, value)
        if r is None:
            raise GershgorinError(
                "eigenvalue escaped every Gershgorin region of A")
        row[r] += 1
    return tuple(row)


def track(a, *, epsilon: float | None = None) -> HomotopyTrace:
    """Walk the diagonal homotopy adaptively and chain the matched spectra.

    epsilon defaults to gap/3 when there are k >= 2 regions (mirroring the
    2-epsilon separation that makes region membership stable under one
    step), and to 0.1 * (1 + diagonal spread) for a single region, where
    the counting is trivial anyway.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if n > ORACLE_MAX_DIM:
        raise ValueError(f"tracking is limited to n <= {ORACLE_MAX_DIM}, got n = {n}")
    rs = connected_regions(gershgorin_disks(a))
    if epsilon is None:
        epsilon = _default_epsilon(a, rs)
    epsilon = float(epsilon)
    if not (math.isfinite(epsilon) and epsilon > 0):
        raise ValueError("epsilon must be a positive finite number")

    start = tuple(sorted((complex(v) for v in np.diagonal(a)),
                         key=lambda z: (z.real, z.imag)))
    t_values = [0.0]
    spectra = [start]
    counts = [_region_count_row(rs, start)]
    t = 0.0
    step = 1.0
    while t < 1.0:
        t_next = 1.0 if step >= 1.0 - t else t + step
        candidate = eigenvalues_oracle(homotopy_member(a, t_next))
        match = matching_distance(spectra[-1], candidate)
        if match.distance < epsilon:
            aligned = tuple(candidate[match.assignment[j]] for j in range(n))
            t_values.append(t_next)
            spectra.append(aligned)
            counts.append(_region_count_row(rs, aligned))
            t = t_next
            step = min(2.0 * step, 1.0)
        else:
            step *= 0.5
            if step < _STEP_FLOOR:
                raise StepUnderflowError("step underflow")
    return HomotopyTrace(t_values=tuple(t_values), spectra=tuple(spectra),
                         region_counts=tuple(counts), step_epsilon=epsilon)


def extract_paths(trace: HomotopyTrace, rs: RegionSet) -> list[EigenPath]:
    """One discrete path per chain position, verified against its home region.

    The home region is the one containing the t = 0 point (a diagonal
    entry of A); every later point must still pass the membership test,
    otherwise the chain contradicts path containment and an error is
    raised.
    """
    n = len(trace.spectra[0])
    paths = []
    for j in range(n):
        points = tuple((trace.t_values[i], trace.spectra[i][j])
                       for i in range(len(trace.t_values)))
        home = region_of(rs, points[0][1])
        if home is None:
            raise PathEscapeError("path escapes region")
        for _, value in points:
            if not contains(rs, home, value):
                raise PathEscapeError("path escapes region")
        paths.append(EigenPath(path_index=j, points=points, home_region=home))
    return paths


def verify_gershgorin_part2(a, *, inflation: float | None = None,
                            epsilon: float | None = None) -> VerificationReport:
    """Cross-check the per-region eigenvalue count four independent ways.

    For each region: the disk multiplicity, the chained homotopy count at
    t = 1, the argument-principle winding count around the region contour,
    and the oracle membership count. Disjoint regions are required (always
    true of the connected-component decomposition).
    """
    a = as_matrix(a)
    rs = connected_regions(gershgorin_disks(a))
    trace = track(a, epsilon=epsilon)
    spectrum = eigenvalues_oracle(a)
    final_counts = trace.region_counts[-1]
    checks = []
    for r, region in enumerate(rs.regions):
        gamma = region_contour(rs, r, inflation)
        winding = count_inside(a, gamma).count
        oracle_count = sum(1 for value in spectrum if contains(rs, r, value))
        checks.append(RegionCheck(
            region_index=r,
            disk_indices=region.disk_indices,
            multiplicity=region.multiplicity,
            homotopy_count=final_counts[r],
            winding_count=winding,
            oracle_count=oracle_count,
        ))
    return VerificationReport(checks=tuple(checks))
