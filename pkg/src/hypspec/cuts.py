"""Minimal separating multicurves restricted to pants curves.

L_i of a surface is the least total length of disjoint simple closed
geodesics cutting it into at least i+1 pieces.  Restricted to pants
curves this is a minimum-weight edge-subset problem on the dual
multigraph: find the cheapest edge set whose removal leaves >= i+1
connected components.  Small instances are solved by exhaustive
bitmask search, larger ones by a best-first branch-and-bound that
returns the identical optimum.  A constructive pants-block cut gives
the classical existence bound 78 i (g-1).
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .surfaces import PantsSurface

EXHAUSTIVE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class Multicut:
    """An edge set, its canonical total length, and the component count after removal."""

    edge_labels: tuple[str, ...]
    total_length: float
    component_count: int


def _canonical_length(surface: PantsSurface, labels) -> float:
    by_label = {e.label: e.length for e in surface.edges}
    return math.fsum(by_label[l] for l in sorted(labels))


def component_count_after_removal(surface: PantsSurface, labels) -> int:
    """Connected components of the dual graph with the labeled edges removed."""
    removed = set(labels)
    n = len(surface.vertices)
    index = {v: i for i, v in enumerate(surface.vertices)}
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for e in surface.edges:
        if e.label in removed:
            continue
        ra, rb = find(index[e.a]), find(index[e.b])
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def make_multicut(surface: PantsSurface, labels) -> Multicut:
    """Multicut record for an explicit edge set (length and components computed)."""
    labels = tuple(sorted(labels))
    known = {e.label for e in surface.edges}
    unknown = [l for l in labels if l not in known]
    if unknown:
        raise KeyError(f"unknown edge labels: {unknown}")
    return Multicut(
        edge_labels=labels,
        total_length=_canonical_length(surface, labels),
        component_count=component_count_after_removal(surface, labels),
    )


def _validate_i(surface: PantsSurface, i: int) -> None:
    g = surface.genus
    if not 1 <= i <= 2 * g - 3:
        raise ValueError(f"i must satisfy 1 <= i <= 2g-3 = {2 * g - 3}, got {i}")


# ===================================================================
# exhaustive search (small edge counts)
# ===================================================================

def _min_cut_exhaustive(surface: PantsSurface, i: int) -> Multicut:
    edges = sorted(surface.edges, key=lambda e: e.label)
    m = len(edges)
    lengths = [e.length for e in edges]
    best_key: tuple[float, tuple[str, ...]] | None = None
    best_labels: tuple[str, ...] | None = None
    target = i + 1
    for mask in range(1, 1 << m):
        total = math.fsum(lengths[j] for j in range(m) if mask >> j & 1)
        if best_key is not None and total > best_key[0]:
            continue
        labels = tuple(edges[j].label for j in range(m) if mask >> j & 1)
        key = (total, labels)
        if best_key is not None and key >= best_key:
            continue
        if component_count_after_removal(surface, labels) >= target:
            best_key = key
            best_labels = labels
    if best_labels is None:
        raise ValueError(f"no edge subset separates the surface into {target} components")
    return make_multicut(surface, best_labels)


# ===================================================================
# best-first branch and bound
# ===================================================================

def _min_cut_branch_and_bound(surface: PantsSurface, i: int) -> Multicut:
    """Best-first search over canonical subsets.

    Children extend a subset only with higher edge indices, so each
    subset is enumerated once; the heap pops by (total length, label
    tuple), hence the first feasible pop is the optimum under the same
    tie-break as the exhaustive search.  A greedy incumbent caps queue
    growth: children strictly longer than it are pruned.
    """
    edges = sorted(surface.edges, key=lambda e: e.label)
    m = len(edges)
    lengths = [e.length for e in edges]
    labels_arr = [e.label for e in edges]
    target = i + 1

    # greedy incumbent: cheapest-first accumulation until feasible
    order = sorted(range(m), key=lambda j: (lengths[j], labels_arr[j]))
    acc: list[int] = []
    incumbent_len = math.inf
    for j in order:
        acc.append(j)
        labels = [labels_arr[k] for k in acc]
        if component_count_after_removal(surface, labels) >= target:
            incumbent_len = _canonical_length(surface, labels)
            break

    heap: list[tuple[float, tuple[str, ...], tuple[int, ...]]] = []
    heapq.heappush(heap, (0.0, (), ()))
    while heap:
        total, labels, idxs = heapq.heappop(heap)
        if labels and component_count_after_removal(surface, labels) >= target:
            return make_multicut(surface, labels)
        start = idxs[-1] + 1 if idxs else 0
        for j in range(start, m):
            child_idxs = idxs + (j,)
            child_total = math.fsum(lengths[k] for k in child_idxs)
            if child_total > incumbent_len:
                continue
            child_labels = tuple(sorted(labels + (labels_arr[j],)))
            heapq.heappush(heap, (child_total, child_labels, child_idxs))
    raise ValueError(f"no edge subset separates the surface into {target} components")


def min_separating_length(
    surface: PantsSurface, i: int, *, method: str = "auto"
) -> Multicut:
    """Cheapest pants-curve set splitting the surface into >= i+1 pieces.

    Ties in total length break toward the lexicographically smallest
    label tuple, so the result is independent of evaluation order.
    ``method`` is "exhaustive", "bnb", or "auto" (exhaustive up to
    20 edges, branch-and-bound beyond).
    """
    _validate_i(surface, i)
    if method == "auto":
        method = "exhaustive" if len(surface.edges) <= EXHAUSTIVE_EDGE_LIMIT else "bnb"
    if method == "exhaustive":
        if len(surface.edges) > EXHAUSTIVE_EDGE_LIMIT + 6:
            raise ValueError(
                f"exhaustive search capped at {EXHAUSTIVE_EDGE_LIMIT + 6} edges, "
                f"surface has {len(surface.edges)}"
            )
        return _min_cut_exhaustive(surface, i)
    if method == "bnb":
        return _min_cut_branch_and_bound(surface, i)
    raise ValueError(f"unknown method {method!r}")


# ===================================================================
# constructive bounds
# ===================================================================

def bers_upper_bound(i: int, genus: int) -> float:
    """Existence bound 78 i (g-1) on L_i from short pants decompositions."""
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    if not 1 <= i <= 2 * genus - 3:
        raise ValueError(f"i must satisfy 1 <= i <= 2g-3 = {2 * genus - 3}, got {i}")
    return 78.0 * i * (genus - 1)


def pants_block_cut(
    surface: PantsSurface, i: int, picked: tuple[str, ...] | None = None
) -> Multicut:
    """Cut along every boundary curve of ``i`` chosen pants.

    Removing all curves incident to the picked pants isolates each of
    them, leaving at least i+1 components with at most 3i curves cut.
    ``picked`` defaults to the first i pants in sorted id order.
    """
    _validate_i(surface, i)
    if picked is None:
        picked = tuple(sorted(surface.vertices)[:i])
    else:
        picked = tuple(picked)
        missing = [v for v in picked if v not in surface.vertices]
        if missing:
            raise KeyError(f"unknown pants ids: {missing}")
        if len(set(picked)) != i:
            raise ValueError(f"picked must contain exactly i={i} distinct pants")
    chosen = set(picked)
    labels = sorted(
        e.label for e in surface.edges if e.a in chosen or e.b in chosen
    )
    cut = make_multicut(surface, labels)
    if cut.component_count < i + 1:  # pragma: no cover - guaranteed by construction
        raise AssertionError(
            f"block cut produced {cut.component_count} components, expected >= {i + 1}"
        )
    if len(cut.edge_labels) > 3 * i:  # pragma: no cover - trivalence bound
        raise AssertionError("block cut exceeded 3i curves")
    return cut
