"""Counting (H, phi)-colorings by type and assembling X_G^H.

Everything is computed under the identity labeling of V(H).  The
coefficient of m_lam in X_G^H is then d_lam * augmented_scale(lam, |V(H)|),
where d_lam counts colorings of type lam; in the m_aug(|V(H)|) basis the
coefficients are the d_lam themselves.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Sequence

from .errors import PreconditionError, RefusalError
from .graphs import Graph, embedding_count, is_connected
from .symfunc import Partition, SymFunc, augmented_scale

NAIVE_LIMIT = 8


@dataclass(frozen=True)
class ColoringCensus:
    g_vertices: int
    h_vertices: int
    counts: dict = field(default_factory=dict)  # Partition -> int

    def __post_init__(self):
        object.__setattr__(self, "counts", {k: v for k, v in sorted(self.counts.items(), reverse=True) if v})

    def __getitem__(self, lam: Partition) -> int:
        return self.counts.get(tuple(lam), 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __add__(self, other: ColoringCensus) -> ColoringCensus:
        if (self.g_vertices, self.h_vertices) != (other.g_vertices, other.h_vertices):
            raise ValueError("cannot merge censuses of different shapes")
        merged = dict(self.counts)
        for k, v in other.counts.items():
            merged[k] = merged.get(k, 0) + v
        return ColoringCensus(self.g_vertices, self.h_vertices, merged)


def allowed_colors(h: Graph) -> list[frozenset[int]]:
    """Colors a neighbour of a u-colored vertex may take: N(u), plus u if looped."""
    return [h.adj[u] | {u} if u in h.loops else h.adj[u] for u in range(h.n)]


def coloring_polynomial(g: Graph, h: Graph, first_colors: Iterable[int] | None = None) -> dict[tuple[int, ...], int]:
    """Map from color-count vectors (length |V(h)|) to the number of
    colorings realizing them, under the identity labeling."""
    k, n = g.n, h.n
    if k == 0:
        return {(0,) * n: 1}
    if n == 0:
        return {}
    order = g.bfs_order()
    pos = {v: i for i, v in enumerate(order)}
    back = [sorted(pos[u] for u in g.adj[v] if pos[u] < i) for i, v in enumerate(order)]
    last_use = [i for i in range(k)]
    for i, v in enumerate(order):
        for u in g.adj[v]:
            last_use[i] = max(last_use[i], pos[u])
    # frontier[i]: positions j < i whose colours still constrain some position >= i
    frontier = [tuple(j for j in range(i) if last_use[j] >= i) for i in range(k + 1)]
    allow = allowed_colors(h)
    looped_h = frozenset(h.loops)
    all_colors = frozenset(range(n))
    g_loop = [v in g.loops for v in order]
    first = frozenset(first_colors) if first_colors is not None else all_colors
    memo: dict = {}
    zero = (0,) * n

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * k + 100))

    def solve(i: int, colors: dict[int, int]) -> dict[tuple[int, ...], int]:
        if i == k:
            return {zero: 1}
        key = (i, tuple(colors[j] for j in frontier[i]))
        hit = memo.get(key)
        if hit is not None:
            return hit
        if back[i]:
            cand = allow[colors[back[i][0]]]
            for j in back[i][1:]:
                cand = cand & allow[colors[j]]
        else:
            cand = first if i == 0 else all_colors
        if g_loop[i]:
            cand = cand & looped_h
        out: dict[tuple[int, ...], int] = {}
        keep = frontier[i + 1]
        for c in sorted(cand):
            nxt = {j: colors[j] for j in keep if j != i}
            if i in keep:
                nxt[i] = c
            for vec, cnt in solve(i + 1, nxt).items():
                bumped = vec[:c] + (vec[c] + 1,) + vec[c + 1:]
                out[bumped] = out.get(bumped, 0) + cnt
        memo[key] = out
        return out

    return solve(0, {})


def _census_from_polynomial(k: int, n: int, poly: dict[tuple[int, ...], int]) -> ColoringCensus:
    counts: dict[Partition, int] = {}
    for vec, cnt in poly.items():
        lam = tuple(sorted((x for x in vec if x), reverse=True))
        counts[lam] = counts.get(lam, 0) + cnt
    return ColoringCensus(k, n, counts)


def _census_shard(args) -> ColoringCensus:
    g, h, colors = args
    return _census_from_polynomial(g.n, h.n, coloring_polynomial(g, h, colors))


def coloring_census(g: Graph, h: Graph, first_colors: Iterable[int] | None = None, jobs: int = 1) -> ColoringCensus:
    """d_lam for every type lam, under the identity labeling of V(h).

    ``first_colors`` restricts the colour of the first searched vertex; censuses
    over a partition of the colour set add up to the full census.  ``jobs > 1``
    shards the search that way over worker processes.
    """
    if jobs > 1 and first_colors is None and h.n > 1 and g.n > 0:
        from multiprocessing import Pool

        shards = [(g, h, [c]) for c in range(h.n)]
        with Pool(min(jobs, h.n)) as pool:
            parts = pool.map(_census_shard, shards)
        total = ColoringCensus(g.n, h.n)
        for p in parts:
            total = total + p
        return total
    return _census_shard((g, h, first_colors))


def census_to_maug(census: ColoringCensus) -> SymFunc:
    return SymFunc("m_aug", census.g_vertices, tuple(census.counts.items()), census.h_vertices)


def assemble_hcsf(census: ColoringCensus) -> SymFunc:
    """X_G^H in the m basis: c_lam = d_lam * augmented_scale(lam, |V(H)|)."""
    n = census.h_vertices
    terms = tuple((lam, d * augmented_scale(lam, n)) for lam, d in census.counts.items())
    return SymFunc("m", census.g_vertices, terms)


def hcsf(g: Graph, h: Graph, jobs: int = 1) -> SymFunc:
    return assemble_hcsf(coloring_census(g, h, jobs=jobs))


def hcsf_naive(g: Graph, h: Graph, limit: int = NAIVE_LIMIT) -> SymFunc:
    """Literal sum over all |V(h)|! labelings and all colour maps.

    Independent of the census engine: it never fixes a labeling and reads the
    m-coefficients off the resulting polynomial, checking symmetry on the way.
    """
    k, n = g.n, h.n
    if n > limit:
        raise RefusalError(f"naive oracle refuses |V(H)| = {n} > {limit}")
    poly: dict[tuple[int, ...], int] = {}
    g_edges = list(g.edges)
    g_loops = list(g.loops)
    for labels in permutations(range(n)):
        # labels[u] is the colour carried by H-vertex u
        inv = [0] * n
        for u, c in enumerate(labels):
            inv[c] = u
        for kappa in product(range(n), repeat=k):
            if any(not h.adjacent(inv[kappa[a]], inv[kappa[b]]) for a, b in g_edges):
                continue
            if any(inv[kappa[v]] not in h.loops for v in g_loops):
                continue
            vec = [0] * n
            for c in kappa:
                vec[c] += 1
            vec = tuple(vec)
            poly[vec] = poly.get(vec, 0) + 1
    coeffs: dict[Partition, int] = {}
    for vec, cnt in poly.items():
        lam = tuple(sorted((x for x in vec if x), reverse=True))
        padded = lam + (0,) * (n - len(lam))
        if lam in coeffs:
            if coeffs[lam] != cnt:
                raise AssertionError(f"naive sum is not symmetric at {vec}")
        else:
            coeffs[lam] = poly.get(padded, 0)
            if coeffs[lam] != cnt:
                raise AssertionError(f"naive sum is not symmetric at {vec}")
    return SymFunc.from_dict("m", k, coeffs)


def hcsf_disjoint_components(g: Graph, parts: Sequence[tuple[Graph, int]]) -> SymFunc:
    """X_g^H for H = disjoint union of ``mult`` copies of each part graph.

    A connected g lands inside a single component, so under one labeling the
    type counts add up across components.  The result is returned in the
    m_aug(N) basis, N = total vertex count of H, which keeps huge N symbolic.
    """
    if not is_connected(g):
        raise PreconditionError("hcsf_disjoint_components needs a connected g")
    total_n = 0
    counts: dict[Partition, int] = {}
    for hj, mult in parts:
        if mult < 1:
            raise PreconditionError("multiplicities must be positive")
        if not is_connected(hj):
            raise PreconditionError("every part graph must be connected")
        total_n += mult * hj.n
        for lam, d in coloring_census(g, hj).counts.items():
            counts[lam] = counts.get(lam, 0) + mult * d
    return SymFunc("m_aug", g.n, tuple(counts.items()), total_n)


def embedding_identity_sides(g: Graph, h: Graph) -> tuple[int, int]:
    """(d_{1^k} from the census, embedding count); they agree for simple g, h."""
    census = coloring_census(g, h)
    return census[(1,) * g.n], embedding_count(g, h)


def verify_embedding_identity(g: Graph, h: Graph) -> bool:
    left, right = embedding_identity_sides(g, h)
    return left == right
