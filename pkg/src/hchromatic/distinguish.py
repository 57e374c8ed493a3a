"""Graphs H that separate the H-chromatic functions of a finite family.

Large distinguishers are kept symbolic as a plan: a list of connected graphs
with (possibly astronomically large) multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .errors import PreconditionError
from .graphs import (
    Graph,
    canonical_form,
    components,
    disjoint_union,
    embedding_count,
    is_connected,
    is_isomorphic,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

MATERIALIZE_BUDGET = 10_000


@dataclass(frozen=True)
class DistinguisherPlan:
    parts: tuple[tuple[Graph, int], ...]
    constants: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for g, mult in self.parts:
            if mult < 1:
                raise PreconditionError("plan multiplicities must be positive")
            if not is_connected(g):
                raise PreconditionError("plan parts must be connected")

    @property
    def total_vertices(self) -> int:
        return sum(g.n * m for g, m in self.parts)

    def graphs(self) -> list[Graph]:
        return [g for g, _ in self.parts]

    def to_record(self) -> list[dict]:
        out = []
        for g, mult in self.parts:
            if g.loops:
                out.append({"edge_list": to_edge_list(g), "multiplicity": str(mult)})
            else:
                out.append({"graph6": to_graph6(g), "multiplicity": str(mult)})
        return out

    @classmethod
    def from_record(cls, rec: list[dict]) -> DistinguisherPlan:
        parts = []
        for item in rec:
            g = parse_graph6(item["graph6"]) if "graph6" in item else parse_edge_list(item["edge_list"])
            parts.append((g, int(item["multiplicity"])))
        return cls(tuple(parts))


def materialize(plan: DistinguisherPlan, budget: int = MATERIALIZE_BUDGET) -> Graph:
    if plan.total_vertices > budget:
        raise PreconditionError(f"plan has {plan.total_vertices} vertices, above the budget of {budget}")
    return disjoint_union(*[g for g, m in plan.parts for _ in range(m)])


def _order_key(g: Graph):
    return (-g.n, -g.m, canonical_form(g))


def _check_distinct(gs: Sequence[Graph]):
    for a, b in combinations(gs, 2):
        if is_isomorphic(a, b):
            raise PreconditionError("family members must be pairwise non-isomorphic")


def _distinct_components(gs: Sequence[Graph]) -> list[Graph]:
    seen = {}
    for g in gs:
        for c in components(g):
            seen.setdefault(canonical_form(c), c)
    return sorted(seen.values(), key=_order_key)


# ---------------------------------------------------------------------------
# two graphs

def pairwise_order(g1: Graph, g2: Graph) -> tuple[Graph, Graph]:
    """(A, B) with A having more vertices, or as many and at least as many edges.
    Then B has no copy of A, so the all-distinct coefficient of X_A^B vanishes."""
    if (g1.n, g1.m) >= (g2.n, g2.m):
        return g1, g2
    return g2, g1


def pairwise_distinguisher(g1: Graph, g2: Graph) -> Graph:
    """A graph H with X_{g1}^H != X_{g2}^H."""
    if is_isomorphic(g1, g2):
        raise PreconditionError("isomorphic graphs cannot be distinguished")
    return pairwise_order(g1, g2)[1]


# ---------------------------------------------------------------------------
# connected families: weighted union of a finite connected distinguisher

def uniform_distinguisher_connected(gs: Sequence[Graph]) -> DistinguisherPlan:
    gs = list(gs)
    if not gs:
        raise PreconditionError("empty family")
    if any(not is_connected(g) for g in gs):
        raise PreconditionError("every family member must be connected")
    _check_distinct(gs)
    if len(gs) == 1:
        return DistinguisherPlan(((gs[0], 1),))
    from .hcolor import coloring_census

    finite = [pairwise_distinguisher(a, b) for a, b in combinations(gs, 2)]
    hs = _distinct_components(finite)
    bound = 1
    for g in gs:
        for h in hs:
            counts = coloring_census(g, h).counts
            if counts:
                bound = max(bound, max(counts.values()))
    parts = tuple((h, (2 * bound) ** j) for j, h in enumerate(hs, start=1))
    return DistinguisherPlan(parts, {"N": bound})


def plan_hcsf(g: Graph, plan: DistinguisherPlan):
    """X_g over the plan's union (g connected), in the m_aug(total) basis."""
    from .hcolor import hcsf_disjoint_components

    return hcsf_disjoint_components(g, plan.parts)


# ---------------------------------------------------------------------------
# arbitrary families: the all-distinct coefficient

def falling(n: int, k: int) -> int:
    return math.perm(n, k) if 0 <= k <= n else 0


def general_distinguisher(gs: Sequence[Graph]) -> DistinguisherPlan:
    gs = list(gs)
    if not gs:
        raise PreconditionError("empty family")
    _check_distinct(gs)
    hs = _distinct_components(gs)
    l = len(hs)
    c1 = max(len(components(g)) for g in gs)
    c2 = max(h.n for h in hs)
    c3 = math.comb(l + c1, c1)
    c4 = max(falling(c1 * c2, g.n) for g in gs)
    ms: list[int] = []
    for j in range(l):
        if j == 0:
            ms.append(c3 * c4 + c1 + 1)
        else:
            ms.append(c3 * c4 * math.prod(ms) ** c1 + c1)
    consts = {"C1": c1, "C2": c2, "C3": c3, "C4": c4}
    return DistinguisherPlan(tuple(zip(hs, ms)), consts)


def usage_vector(g: Graph, plan: DistinguisherPlan) -> tuple[int, ...]:
    """How many components of g are isomorphic to each plan part."""
    keys = [canonical_form(h) for h in plan.graphs()]
    vec = [0] * len(keys)
    for c in components(g):
        key = canonical_form(c)
        if key not in keys:
            raise PreconditionError("g has a component missing from the plan")
        vec[keys.index(key)] += 1
    return tuple(vec)


def reverse_dominated(s: Sequence[int], t: Sequence[int]) -> bool:
    """s <_R t: they differ, and at the last differing index s is smaller."""
    for a, b in zip(reversed(s), reversed(t)):
        if a != b:
            return a < b
    return False


def a1k_count(g: Graph, plan: DistinguisherPlan) -> int:
    """Colorings of g of type (1^k) over the plan's union, never materialized.

    Sum over usage vectors v (how many copies of each part are hit) of
    beta_v * prod_j C(M_j, v_j), where beta_v counts embeddings of g into the
    union of v_j copies of H_j that hit every copy.
    """
    hs = plan.graphs()
    mults = [m for _, m in plan.parts]
    cap = len(components(g))

    @lru_cache(maxsize=None)
    def emb(u: tuple[int, ...]) -> int:
        if sum(u) == 0:
            return 1 if g.n == 0 else 0
        return embedding_count(g, disjoint_union(*[h for h, c in zip(hs, u) for _ in range(c)]))

    total = 0
    for v in product(*[range(min(cap, m) + 1) for m in mults]):
        if sum(v) == 0 or sum(v) > cap:
            continue
        beta = 0
        for u in product(*[range(x + 1) for x in v]):
            e = emb(u)
            if e:
                sign = -1 if (sum(v) - sum(u)) % 2 else 1
                beta += sign * math.prod(math.comb(a, b) for a, b in zip(v, u)) * e
        if beta:
            total += beta * math.prod(math.comb(m, x) for m, x in zip(mults, v))
    return total


def domination_margin_holds(s: Sequence[int], t: Sequence[int], plan: DistinguisherPlan) -> bool:
    """prod_j P(M_j, t_j) > C3*C4 * prod_j P(M_j, s_j) for s <_R t."""
    c = plan.constants["C3"] * plan.constants["C4"]
    ms = [m for _, m in plan.parts]
    lhs = math.prod(falling(m, x) for m, x in zip(ms, t))
    rhs = c * math.prod(falling(m, x) for m, x in zip(ms, s))
    return lhs > rhs
