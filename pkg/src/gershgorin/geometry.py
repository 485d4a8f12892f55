"""Gershgorin disks, connected-region decomposition, region gaps, and
counting contours built from exact circular arcs.

A contour is the complete oriented boundary of the union of a region's
inflated disks: arcs are traversed counterclockwise around their own
centers, which keeps the union on the left, so outer loops come out
counterclockwise and (rare) hole loops clockwise. Discretization is left
entirely to the consumer; this module stays exact-arc.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ContourSeparationError, GershgorinError
from .matrix import as_matrix

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Disk:
    """Closed disk centered at a diagonal entry with the off-diagonal row sum."""

    center: complex
    radius: float
    row_index: int

    def __post_init__(self):
        if not (cmath.isfinite(self.center) and math.isfinite(self.radius)):
            raise ValueError("disk center and radius must be finite")
        if self.radius < 0:
            raise ValueError("disk radius must be nonnegative")


@dataclass(frozen=True)
class Region:
    """Connected component of the disk union; indices are matrix row indices."""

    disk_indices: tuple[int, ...]

    def __post_init__(self):
        if not self.disk_indices:
            raise ValueError("region must contain at least one disk")
        object.__setattr__(self, "disk_indices", tuple(sorted(self.disk_indices)))

    @property
    def multiplicity(self) -> int:
        return len(self.disk_indices)


@dataclass(frozen=True)
class RegionSet:
    """Disks plus their partition into connected regions.

    Regions are ordered by smallest member row index, so the decomposition
    is independent of the order the disks were supplied in.
    """

    disks: tuple[Disk, ...]
    regions: tuple[Region, ...]

    @property
    def extent_scale(self) -> float:
        return 1.0 + max(abs(d.center) + d.radius for d in self.disks)

    def disk_by_row(self, row_index: int) -> Disk:
        for d in self.disks:
            if d.row_index == row_index:
                return d
        raise KeyError(f"no disk with row index {row_index}")

    def region_disks(self, region_index: int) -> tuple[Disk, ...]:
        region = self.regions[region_index]
        return tuple(self.disk_by_row(i) for i in region.disk_indices)


def gershgorin_disks(a) -> tuple[Disk, ...]:
    """One disk per row: center a_ii, radius = sum of off-diagonal |a_ij|."""
    a = as_matrix(a)
    abs_a = np.abs(a)
    disks = []
    for i in range(a.shape[0]):
        row = abs_a[i].copy()
        row[i] = 0.0
        disks.append(Disk(center=complex(a[i, i]), radius=float(row.sum()),
                          row_index=i))
    return tuple(disks)


def connected_regions(disks) -> RegionSet:
    """Partition disks into connected components of their union.

    Two disks are connected iff |c_i - c_j| <= r_i + r_j + 1e-12 * scale,
    so tangency counts as connected (a union of closed disks sharing a
    point is a connected set).
    """
    disks = tuple(disks)
    if not disks:
        raise ValueError("need at least one disk")
    rows = [d.row_index for d in disks]
    if len(set(rows)) != len(rows):
        raise ValueError("disk row indices must be unique")
    scale = 1.0 + max(abs(d.center) + d.radius for d in disks)
    tol = 1e-12 * scale

    parent = list(range(len(disks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            if abs(disks[i].center - disks[j].center) <= (
                    disks[i].radius + disks[j].radius + tol):
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(len(disks)):
        groups.setdefault(find(i), []).append(i)
    regions = [Region(tuple(disks[i].row_index for i in members))
               for members in groups.values()]
    regions.sort(key=lambda r: r.disk_indices[0])
    return RegionSet(disks=disks, regions=tuple(regions))


def region_gap(rs: RegionSet) -> float:
    """Minimum clearance between disks of distinct regions; +inf when k = 1."""
    if len(rs.regions) < 2:
        return math.inf
    region_of_row = {}
    for r, region in enumerate(rs.regions):
        for row in region.disk_indices:
            region_of_row[row] = r
    gap = math.inf
    disks = rs.disks
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            if region_of_row[disks[i].row_index] == region_of_row[disks[j].row_index]:
                continue
            clearance = (abs(disks[i].center - disks[j].center)
                         - disks[i].radius - disks[j].radius)
            gap = min(gap, clearance)
    return gap


def contains(rs: RegionSet, region_index: int, z) -> bool:
    """Membership of z in region ``region_index`` with a 1e-9 * scale margin."""
    z = complex(z)
    tol = 1e-9 * rs.extent_scale
    return any(abs(z - d.center) <= d.radius + tol
               for d in rs.region_disks(region_index))


def region_of(rs: RegionSet, z) -> int | None:
    """Index of the first region containing z, or None."""
    for r in range(len(rs.regions)):
        if contains(rs, r, z):
            return r
    return None


@dataclass(frozen=True)
class Arc:
    """Circular arc traversed counterclockwise from theta_start to theta_end."""

    center: complex
    radius: float
    theta_start: float
    theta_end: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("arc radius must be positive")
        span = self.theta_end - self.theta_start
        if not 0.0 < span <= TWO_PI + 1e-9:
            raise ValueError("arc span must lie in (0, 2*pi]")

    @property
    def span(self) -> float:
        return self.theta_end - self.theta_start

    def point_at(self, theta: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * theta)

    @property
    def start_point(self) -> complex:
        return self.point_at(self.theta_start)

    @property
    def end_point(self) -> complex:
        return self.point_at(self.theta_end)


@dataclass(frozen=True)
class Contour:
    """One or more closed arc loops bounding a region's inflated disk union."""

    loops: tuple[tuple[Arc, ...], ...]

    def __post_init__(self):
        if not self.loops or any(not loop for loop in self.loops):
            raise ValueError("contour needs at least one nonempty loop")
        tol = 1e-9 * (1.0 + max(abs(a.center) + a.radius for a in self.arcs))
        for loop in self.loops:
            for k, arc in enumerate(loop):
                succ = loop[(k + 1) % len(loop)]
                if abs(arc.end_point - succ.start_point) > tol:
                    raise ValueError("contour loop is not closed")

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(a for loop in self.loops for a in loop)


def circle_contour(center, radius: float) -> Contour:
    """Contour consisting of a single full circle."""
    return Contour(loops=((Arc(complex(center), float(radius), 0.0, TWO_PI),),))


def _covered_intervals(i: int, circles) -> list[tuple[float, float]]:
    """Angular windows of circle i's boundary hidden inside other circles."""
    c_i, r_i = circles[i]
    intervals = []
    for j, (c_j, r_j) in enumerate(circles):
        if j == i:
            continue
        d = abs(c_j - c_i)
        if d >= r_i + r_j or d + r_j <= r_i:
            continue  # disjoint, or j inside i: hides nothing
        # Intersection points via the radical line; exact same coordinates
        # are produced for both circles, which keeps later stitching tight.
        along = (d * d + r_i * r_i - r_j * r_j) / (2.0 * d)
        h = math.sqrt(max(r_i * r_i - along * along, 0.0))
        u = (c_j - c_i) / d
        p_lo = c_i + (along - 1j * h) * u
        p_hi = c_i + (along + 1j * h) * u
        start = cmath.phase(p_lo - c_i) % TWO_PI
        width = (cmath.phase(p_hi - c_i) - cmath.phase(p_lo - c_i)) % TWO_PI
        if width <= 1e-12:
            continue  # bare tangency
        intervals.append((start, start + width))
    return intervals


def _merge_circular(intervals: list[tuple[float, float]]):
    """Merge angular intervals on a circle; None when they cover everything."""
    ivs = sorted(intervals)
    merged = [list(ivs[0])]
    for s, e in ivs[1:]:
        if s <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    # the last interval may spill past 2*pi and swallow leading ones
    while len(merged) > 1 and merged[-1][1] - TWO_PI >= merged[0][0]:
        merged[-1][1] = max(merged[-1][1], merged[0][1] + TWO_PI)
        merged.pop(0)
    if any(e - s >= TWO_PI for s, e in merged):
        return None
    return merged


def _boundary_arcs(circles: list[tuple[complex, float]], scale: float) -> list[Arc]:
    tol = 1e-12 * scale
    kept: list[tuple[complex, float]] = []
    for c, r in circles:
        if any(abs(c - c2) <= tol and abs(r - r2) <= tol for c2, r2 in kept):
            continue  # coincident duplicate
        kept.append((c, r))
    alive = [
        (c_i, r_i)
        for i, (c_i, r_i) in enumerate(kept)
        if not any(j != i and abs(c_i - kept[j][0]) + r_i <= kept[j][1] + tol
                   for j in range(len(kept)))
    ]
    arcs: list[Arc] = []
    for i, (c_i, r_i) in enumerate(alive):
        intervals = _covered_intervals(i, alive)
        if not intervals:
            arcs.append(Arc(c_i, r_i, 0.0, TWO_PI))
            continue
        merged = _merge_circular(intervals)
        if merged is None:
            continue  # boundary of this circle fully interior
        count = len(merged)
        for k in range(count):
            end_cov = merged[k][1]
            next_start = merged[(k + 1) % count][0] + (TWO_PI if k == count - 1 else 0.0)
            width = next_start - end_cov
            if width <= 1e-12:
                continue  # coverage windows meet; neighbours stitch through
            start = end_cov % TWO_PI
            arcs.append(Arc(c_i, r_i, start, start + width))
    return arcs


def _stitch_loops(arcs: list[Arc], tol: float) -> tuple[tuple[Arc, ...], ...]:
    loops: list[tuple[Arc, ...]] = []
    remaining = list(range(len(arcs)))
    while remaining:
        first = remaining.pop(0)
        if arcs[first].span >= TWO_PI - 1e-12:
            loops.append((arcs[first],))
            continue
        chain = [first]
        cursor = arcs[first].end_point
        while True:
            if abs(cursor - arcs[chain[0]].start_point) <= tol:
                loops.append(tuple(arcs[k] for k in chain))
                break
            best = None
            best_dist = tol
            for k in remaining:
                dist = abs(arcs[k].start_point - cursor)
                if dist <= best_dist:
                    best, best_dist = k, dist
            if best is None:
                raise GershgorinError("contour stitching failed to close a loop")
            remaining.remove(best)
            chain.append(best)
            cursor = arcs[best].end_point
    return tuple(loops)


def region_contour(rs: RegionSet, region_index: int,
                   inflation: float | None = None) -> Contour:
    """Boundary of the region's disks inflated by ``inflation``.

    The default inflation is gap/3 (one third of the clearance to the
    nearest other region); for a single region, where the gap is
    unbounded, it falls back to 0.1 * scale. Any inflation below gap/2
    keeps this region strictly inside and every other region strictly
    outside.
    """
    gap = region_gap(rs)
    scale = rs.extent_scale
    if inflation is None:
        inflation = gap / 3.0 if math.isfinite(gap) else 0.1 * scale
    inflation = float(inflation)
    if not (math.isfinite(inflation) and inflation > 0):
        raise ValueError("inflation must be a positive finite number")
    if inflation >= gap / 2.0:
        raise ContourSeparationError("contour would touch another region")
    circles = [(d.center, d.radius + inflation)
               for d in rs.region_disks(region_index)]
    arcs = _boundary_arcs(circles, scale)
    loops = _stitch_loops(arcs, tol=1e-9 * scale)
    return Contour(loops=loops)


def contour_winding_number(contour: Contour, z) -> int:
    """Winding number of the contour around z, exact per-arc arithmetic.

    On each arc the argument increment of (point - z) has a closed form
    with a principal-branch correction term, so no sampling is involved.
    """
    z = complex(z)
    total = 0.0
    for loop in contour.loops:
        for arc in loop:
            total += _arc_winding_increment(arc, z)
    return round(total / TWO_PI)


def _arc_winding_increment(arc: Arc, z: complex) -> float:
    w = z - arc.center
    dist = abs(w)
    if abs(dist - arc.radius) <= 1e-12 * (dist + arc.radius):
        raise ValueError("point lies on the contour")
    th1, th2 = arc.theta_start, arc.theta_end
    if dist < arc.radius:
        # g(t) = R e^{it} (1 - (w/R) e^{-it}); second factor stays in the
        # right half-plane, so its principal phase is a continuous branch.
        u = w / arc.radius
        corr = (cmath.phase(1.0 - u * cmath.exp(-1j * th2))
                - cmath.phase(1.0 - u * cmath.exp(-1j * th1)))
        return (th2 - th1) + corr
    v = arc.radius / w
    return (cmath.phase(1.0 - v * cmath.exp(1j * th2))
            - cmath.phase(1.0 - v * cmath.exp(1j * th1)))
