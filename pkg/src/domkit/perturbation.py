"""Bondage, total bondage, reinforcement, and total reinforcement numbers.

All four are found by exhaustive search over edge subsets in ascending
cardinality.  Each candidate is tested with a from-scratch bounded
search that decides whether the perturbed graph still admits a cover at
the unperturbed value (bondage kinds) or already admits a strictly
smaller one (reinforcement kinds).  Subsets of one size are tried in
lexicographic order of the normalized edge list, so witnesses are
deterministic and the first hit is provably minimum.

Result encoding: ``value`` is the parameter when a witness exists, 0
when the parameter cannot be realized by any edge set (reinforcement of
a graph that is already at the floor), and None when the search bound
was exhausted without success (including total bondage of graphs like
stars where no qualifying edge set exists at all).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .domination import (
    domination_number,
    has_dominating_set_within,
    has_total_dominating_set_within,
    total_domination_number,
)
from .graph import Edge, Graph


class EmptyGraphError(ValueError):
    """Bondage is undefined for graphs without edges."""


@dataclass(frozen=True)
class PerturbResult:
    """Outcome of a minimum edge-perturbation search.

    value    -- positive size of the witness, 0 for the cannot-realize
                marker, None when undefined / not found within the bound
    witness  -- the minimum edge set, present iff value is positive
    base     -- the unperturbed parameter value
    """

    value: int | None
    witness: tuple[Edge, ...] | None
    base: int

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_undefined(self) -> bool:
        return self.value is None


def _resolve_max_k(g: Graph, max_k: int | None, space_size: int) -> int:
    # Default switches to a depth-2 cap once exhaustive search over all
    # edge subsets stops being a desk-scale affair.
    if max_k is not None:
        return max_k
    return space_size if g.num_edges <= 12 else 2


def bondage_number(g: Graph, max_k: int | None = None) -> PerturbResult:
    """Minimum number of edge removals that raise the domination number."""
    if g.num_edges == 0:
        raise EmptyGraphError("bondage needs at least one edge")
    base = domination_number(g).value
    candidates = sorted(g.edges)
    limit = min(_resolve_max_k(g, max_k, len(candidates)), len(candidates))
    for k in range(1, limit + 1):
        for subset in combinations(candidates, k):
            if not has_dominating_set_within(g.remove_edges(subset), base):
                return PerturbResult(k, subset, base)
    return PerturbResult(None, None, base)


def total_bondage_number(g: Graph, max_k: int | None = None) -> PerturbResult:
    """Minimum number of edge removals that raise the total domination number.

    Edge sets whose removal isolates a vertex do not qualify and are
    skipped; when every set at every size is skipped or fails, the
    parameter is undefined (value None).
    """
    base = total_domination_number(g).value  # raises on isolated vertices
    candidates = sorted(g.edges)
    degrees = {v: g.degree(v) for v in g.vertices}
    limit = min(_resolve_max_k(g, max_k, len(candidates)), len(candidates))
    for k in range(1, limit + 1):
        for subset in combinations(candidates, k):
            removed: dict[str, int] = {}
            for a, b in subset:
                removed[a] = removed.get(a, 0) + 1
                removed[b] = removed.get(b, 0) + 1
            if any(degrees[v] == c for v, c in removed.items()):
                continue
            if not has_total_dominating_set_within(g.remove_edges(subset), base):
                return PerturbResult(k, subset, base)
    return PerturbResult(None, None, base)


def reinforcement_number(g: Graph, max_k: int | None = None) -> PerturbResult:
    """Minimum number of edge additions that lower the domination number.

    When the domination number is already 1 no addition can lower it;
    the result is the 0 marker by convention.
    """
    base = domination_number(g).value
    if base <= 1:
        return PerturbResult(0, None, base)
    candidates = g.complement_edges()
    limit = min(_resolve_max_k(g, max_k, len(candidates)), len(candidates))
    for k in range(1, limit + 1):
        for subset in combinations(candidates, k):
            if has_dominating_set_within(g.add_edges(subset), base - 1):
                return PerturbResult(k, subset, base)
    return PerturbResult(None, None, base)


def total_reinforcement_number(g: Graph, max_k: int | None = None) -> PerturbResult:
    """Minimum number of edge additions that lower the total domination number.

    When the total domination number is already 2 (its floor) the result
    is the 0 marker by convention.
    """
    base = total_domination_number(g).value  # raises on isolated vertices
    if base <= 2:
        return PerturbResult(0, None, base)
    candidates = g.complement_edges()
    limit = min(_resolve_max_k(g, max_k, len(candidates)), len(candidates))
    for k in range(1, limit + 1):
        for subset in combinations(candidates, k):
            if has_total_dominating_set_within(g.add_edges(subset), base - 1):
                return PerturbResult(k, subset, base)
    return PerturbResult(None, None, base)
