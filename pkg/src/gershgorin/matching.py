"""Optimal bottleneck (min-max) matching between equal-size multisets of
complex numbers, and an empirical perturbation probe built on it.

The distance is min over permutations of max_j |a_j - b_perm(j)|. It is
computed by binary search over the sorted pairwise distances with a
maximum-bipartite-matching feasibility test on each threshold graph, so the
result is exact on the input floats (the optimum is always one of the n^2
pairwise distances).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .matrix import as_matrix, eigenvalues_oracle, max_entry_norm

_PROBE_BISECTIONS = 30


@dataclass(frozen=True)
class MatchResult:
    """Bottleneck distance plus the permutation that achieves it.

    ``assignment[j]`` is the index in the second multiset matched to element
    j of the first; among all optimal permutations it is the
    lexicographically smallest one.
    """

    distance: float
    assignment: tuple[int, ...]


def _has_perfect_matching(adj: np.ndarray, fixed_rows: int = 0,
                          used_cols: Sequence[bool] | None = None) -> bool:
    """Kuhn's algorithm on the boolean adjacency, skipping pre-assigned rows."""
    n = adj.shape[0]
    used = [False] * n if used_cols is None else list(used_cols)
    match_col = [-1] * n

    def augment(row: int, seen: list[bool]) -> bool:
        for col in range(n):
            if adj[row, col] and not used[col] and not seen[col]:
                seen[col] = True
                if match_col[col] < 0 or augment(match_col[col], seen):
                    match_col[col] = row
                    return True
        return False

    matched = 0
    for row in range(fixed_rows, n):
        if augment(row, [False] * n):
            matched += 1
    return matched == n - fixed_rows


def _bottleneck_assignment(a: Sequence[complex], b: Sequence[complex]):
    av = np.asarray(tuple(a), dtype=complex)
    bv = np.asarray(tuple(b), dtype=complex)
    n = av.shape[0]
    dist = np.abs(av[:, None] - bv[None, :])
    levels = np.unique(dist)
    lo, hi = 0, levels.shape[0] - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_perfect_matching(dist <= levels[mid]):
            hi = mid
        else:
            lo = mid + 1
    optimum = float(levels[lo])
    adj = dist <= optimum

    # Lexicographically smallest optimal permutation: fix rows greedily,
    # keeping a feasible completion at every step.
    assignment: list[int] = []
    used = [False] * n
    for row in range(n):
        for col in range(n):
            if not adj[row, col] or used[col]:
                continue
            used[col] = True
            if _has_perfect_matching(adj, fixed_rows=row + 1, used_cols=used):
                assignment.append(col)
                break
            used[col] = False
        else:
            raise AssertionError("threshold graph lost its perfect matching")
    return optimum, tuple(assignment)


def matching_distance(s1, s2) -> MatchResult:
    """Optimal bottleneck matching between two equal-length multisets.

    Accepts :class:`~gershgorin.matrix.SpectrumMultiset` or any sequence of
    complex numbers; the assignment refers to the given element order.
    """
    v1 = tuple(s1)
    v2 = tuple(s2)
    if len(v1) != len(v2):
        raise ValueError("incomparable multisets")
    distance, assignment = _bottleneck_assignment(v1, v2)
    return MatchResult(distance=distance, assignment=assignment)


def _random_perturbation(rng: np.random.Generator, n: int, delta: float) -> np.ndarray:
    """Matrix with entries in the complex unit square scaled to max-entry delta."""
    while True:
        raw = rng.uniform(-1.0, 1.0, (n, n)) + 1j * rng.uniform(-1.0, 1.0, (n, n))
        peak = max_entry_norm(raw)
        if peak > 0:
            return raw * (delta / peak)


def pointwise_continuity_probe(a, epsilon: float, trials: int, *,
                               seed: int | None = None) -> float:
    """Empirically probe how large a perturbation keeps spectra within epsilon.

    Bisects on delta; at each candidate, ``trials`` random perturbations E
    with max-entry norm exactly delta are applied and the candidate passes if
    every trial keeps the bottleneck spectral distance below epsilon. Returns
    the largest tested passing delta (the upper search bound
    1 + max-entry(A) if even that passes). This is a probe, not a
    certificate: it reports observed behaviour of random perturbations only.
    """
    a = as_matrix(a)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    base = eigenvalues_oracle(a)

    def all_pass(delta: float) -> bool:
        for _ in range(trials):
            perturbed = eigenvalues_oracle(a + _random_perturbation(rng, n, delta))
            if matching_distance(base, perturbed).distance >= epsilon:
                return False
        return True

    hi = 1.0 + max_entry_norm(a)
    if all_pass(hi):
        return hi
    lo = 0.0  # delta = 0 passes vacuously
    for _ in range(_PROBE_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if all_pass(mid):
            lo = mid
        else:
            hi = mid
    return lo
