"""Finite undirected graphs (loops allowed, no parallel edges) and the
structural analyses the coloring formulas consume.

Vertices are ``0..n-1``.  Graph values are immutable; every function here is
pure.
"""

from __future__ import annotations

import heapq
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import ParseError, PreconditionError, UnsupportedInputError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = frozenset()
    loops: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"edge ({u},{v}) is a loop; pass it in `loops`")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        for v in self.loops:
            if not 0 <= v < self.n:
                raise ValueError(f"loop at {v} out of range for n={self.n}")
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "loops", frozenset(self.loops))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge] = (), loops: Iterable[int] = ()) -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges), frozenset(loops))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets, loops excluded."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @property
    def m(self) -> int:
        return len(self.edges)

    def is_simple(self) -> bool:
        return not self.loops

    def degree(self, v: int) -> int:
        return len(self.adj[v]) + (2 if v in self.loops else 0)

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return u in self.loops
        return v in self.adj[u]

    def __repr__(self) -> str:
        es = sorted(self.edges)
        lp = f", loops={sorted(self.loops)}" if self.loops else ""
        return f"Graph(n={self.n}, edges={es}{lp})"

    def bfs_order(self) -> list[int]:
        """Vertices in BFS order, component by component from the smallest vertex."""
        seen = [False] * self.n
        order = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            q = deque([s])
            while q:
                v = q.popleft()
                order.append(v)
                for u in sorted(self.adj[v]):
                    if not seen[u]:
                        seen[u] = True
                        q.append(u)
        return order

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(
            self.n,
            ((perm[u], perm[v]) for u, v in self.edges),
            (perm[v] for v in self.loops),
        )

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, renumbered in the order given."""
        idx = {v: i for i, v in enumerate(vertices)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return Graph.from_edges(len(vertices), es, (idx[v] for v in self.loops if v in idx))


# ---------------------------------------------------------------------------
# construction

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n == 1:
        return Graph(1, loops=frozenset({0}))
    if n == 2:
        raise PreconditionError("C_2 would need parallel edges")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """S_n = K_{1,n-1}; the centre is vertex 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def augmented_star(n: int) -> Graph:
    """S_n with a loop on its centre (vertex 0)."""
    s = star(n)
    return Graph(n, s.edges, frozenset({0}))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts are numbered consecutively in the order given."""
    if not parts or any(p <= 0 for p in parts):
        raise PreconditionError(f"complete multipartite needs positive part sizes, got {list(parts)}")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def complement(g: Graph) -> Graph:
    if g.loops:
        raise UnsupportedInputError("complement is defined for simple graphs only")
    return Graph.from_edges(g.n, (e for e in combinations(range(g.n), 2) if e not in g.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, loops, off = [], [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        loops.extend(v + off for v in g.loops)
        off += g.n
    return Graph.from_edges(off, edges, loops)


def k_minus(n: int) -> Graph:
    """K_n with the edge (0,1) removed."""
    if n < 2:
        raise PreconditionError("K_n^- needs n >= 2")
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if e != (0, 1)))


def k_minus_minus(n: int) -> Graph:
    """K_n with the two non-adjacent edges (0,1) and (2,3) removed."""
    if n < 4:
        raise PreconditionError("K_n^{--} needs n >= 4")
    gone = {(0, 1), (2, 3)}
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if e not in gone))


_BUILDERS = {
    "complete": complete,
    "edgeless": edgeless,
    "path": path,
    "cycle": cycle,
    "star": star,
    "augmented_star": augmented_star,
    "K_minus": k_minus,
    "K_minus_minus": k_minus_minus,
}


def build_named(kind: str, params) -> Graph:
    """Build a named graph.

    ``params`` is a list of integers for the sized families (one entry), a
    partition for ``complete_multipartite``, a single graph for
    ``complement_of`` and a list of graphs for ``disjoint_union``.
    """
    if kind == "complete_multipartite":
        return complete_multipartite(list(params))
    if kind == "complement_of":
        return complement(params[0] if isinstance(params, (list, tuple)) else params)
    if kind == "disjoint_union":
        return disjoint_union(*params)
    if kind not in _BUILDERS:
        raise PreconditionError(f"unknown graph kind {kind!r}")
    if len(params) != 1:
        raise PreconditionError(f"{kind} takes exactly one size parameter")
    size = int(params[0])
    if size <= 0:
        raise PreconditionError(f"{kind} needs a positive size, got {size}")
    return _BUILDERS[kind](size)


# ---------------------------------------------------------------------------
# text formats

def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 size header", len(data))
        vals = [c - 63 for c in data[2:8]]
        off = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte graph6 size header", len(data))
        vals = [c - 63 for c in data[1:4]]
        off = 4
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n, off


def parse_graph6(text: str) -> Graph:
    raw = text.strip().encode("ascii", errors="replace")
    start = 0
    if raw.startswith(b">>graph6<<"):
        start = 10
    data = raw[start:]
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the graph6 range", start + i)
    n, off = _graph6_size(data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[off:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}", start + off + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, bit = divmod(k, 6)
            if (body[byte] - 63) >> (5 - bit) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.loops:
        raise UnsupportedInputError("graph6 encodes simple graphs only")
    n = g.n
    if n < 63:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """First significant line: vertex count.  Then ``u v`` or ``loop v`` lines,
    1-indexed; ``#`` starts a comment."""
    n = None
    edges, loops = [], []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        here = offset
        offset += len(line.encode())
        if not body:
            continue
        tok = body.split()
        try:
            if n is None:
                if len(tok) != 1:
                    raise ParseError("header must be a single vertex count", here)
                n = int(tok[0])
                if n < 0:
                    raise ParseError("negative vertex count", here)
                continue
            if tok[0] == "loop":
                if len(tok) != 2:
                    raise ParseError("expected `loop v`", here)
                vs = [int(tok[1])]
            else:
                if len(tok) != 2:
                    raise ParseError("expected `u v`", here)
                vs = [int(tok[0]), int(tok[1])]
        except ValueError:
            raise ParseError(f"non-integer token in {body!r}", here) from None
        if any(not 1 <= v <= n for v in vs):
            raise ParseError(f"vertex out of range 1..{n} in {body!r}", here)
        if len(vs) == 1 or vs[0] == vs[1]:
            loops.append(vs[0] - 1)
        else:
            edges.append((vs[0] - 1, vs[1] - 1))
    if n is None:
        raise ParseError("missing vertex-count header", 0)
    return Graph.from_edges(n, edges, loops)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u + 1} {v + 1}" for u, v in sorted(g.edges)]
    lines += [f"loop {v + 1}" for v in sorted(g.loops)]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, format: str) -> Graph:
    if format == "graph6":
        return parse_graph6(text)
    if format == "edge_list":
        return parse_edge_list(text)
    raise PreconditionError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# structure

def component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def components(g: Graph) -> list[Graph]:
    """Connected components, ordered by smallest original vertex."""
    return [g.induced(c) for c in component_vertex_sets(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_vertex_sets(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """Side (0/1) per vertex, the smallest vertex of each component on side 0;
    None if some component has an odd cycle or a loop."""
    if g.loops:
        return None
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.adj[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    q.append(u)
                elif side[u] == side[v]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


@dataclass(frozen=True)
class BipartiteProfile:
    per_component: tuple[tuple[int, int], ...]
    diff: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return sum(a + b for a, b in self.per_component)

    @property
    def min_sum(self) -> int:
        return (self.vertex_count - sum(self.diff)) // 2

    @cached_property
    def s_multiset(self) -> tuple[int, ...]:
        """All 2^l side sums, sorted; built as min-sum plus subset sums of diff."""
        sums = [self.min_sum]
        for d in self.diff:
            sums = sums + [s + d for s in sums]
        return tuple(sorted(sums))


def bipartite_profile(g: Graph) -> BipartiteProfile | None:
    if g.loops:
        raise UnsupportedInputError("bipartite_profile needs a simple graph")
    side = two_coloring(g)
    if side is None:
        return None
    per = []
    for comp in component_vertex_sets(g):
        a = sum(1 for v in comp if side[v] == 0)
        per.append((a, len(comp) - a))
    return BipartiteProfile(tuple(per), tuple(abs(a - b) for a, b in per))


def _require_simple(g: Graph, what: str):
    if g.loops:
        raise UnsupportedInputError(f"{what} needs a simple graph")


def independent_sets(g: Graph, maximal_only: bool = False) -> list[int]:
    """Bitmasks of all non-empty (maximal) independent sets."""
    _require_simple(g, "independent set enumeration")
    nbr = [sum(1 << u for u in g.adj[v]) for v in range(g.n)]
    out = []

    def grow(i: int, chosen: int, blocked: int):
        if i == g.n:
            if chosen and (not maximal_only or _is_maximal(chosen)):
                out.append(chosen)
            return
        # exclude i
        grow(i + 1, chosen, blocked)
        if not blocked >> i & 1:
            grow(i + 1, chosen | 1 << i, blocked | nbr[i])

    def _is_maximal(s: int) -> bool:
        for v in range(g.n):
            if not s >> v & 1 and not nbr[v] & s:
                return False
        return True

    grow(0, 0, 0)
    return out


def independent_set_census(g: Graph, maximal_only: bool = False) -> Counter:
    """Multiset (as a Counter) of sizes of the non-empty (maximal) independent sets."""
    return Counter(bin(s).count("1") for s in independent_sets(g, maximal_only))


def _pattern_order(g: Graph) -> list[int]:
    # place high-degree vertices first and keep each new vertex attached when possible
    order, placed = [], set()
    remaining = set(range(g.n))
    while remaining:
        frontier = [v for v in remaining if g.adj[v] & placed]
        pool = frontier or list(remaining)
        v = max(pool, key=lambda x: (len(g.adj[x] & placed), len(g.adj[x]), -x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def _embeddings(g: Graph, h: Graph, stop_at_first: bool = False) -> int:
    if g.n > h.n:
        return 0
    order = _pattern_order(g)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[u] for u in g.adj[v] if pos[u] < i] for i, v in enumerate(order)]
    need_loop = [v in g.loops for v in order]
    image = [0] * g.n
    used = [False] * h.n
    count = 0

    def rec(i: int) -> bool:
        nonlocal count
        if i == g.n:
            count += 1
            return stop_at_first
        if back[i]:
            cands = h.adj[image[back[i][0]]]
            for j in back[i][1:]:
                cands = cands & h.adj[image[j]]
        else:
            cands = range(h.n)
        for c in cands:
            if used[c] or (need_loop[i] and c not in h.loops):
                continue
            used[c] = True
            image[i] = c
            if rec(i + 1):
                return True
            used[c] = False
        return False

    rec(0)
    return count


def embedding_count(g: Graph, h: Graph) -> int:
    """Number of injective maps V(g) -> V(h) sending edges to edges (loops to loops).

    For ``h == g`` this is |Aut(g)|; in general it equals the number of
    (not necessarily induced) copies of g in h times |Aut(g)|.
    """
    return _embeddings(g, h)


def automorphism_count(g: Graph) -> int:
    return embedding_count(g, g)


def contains_subgraph(h: Graph, pattern: Graph) -> bool:
    _require_simple(pattern, "subgraph containment")
    return _embeddings(pattern, h, stop_at_first=True) > 0


@dataclass(frozen=True)
class DegreeStarSequences:
    degree_seq: tuple[int, ...]  # d_1..d_k
    star_seq: tuple[int, ...]    # z_2..z_k


def degree_and_star_sequences(g: Graph) -> DegreeStarSequences:
    _require_simple(g, "degree/star sequences")
    k = g.n
    deg = Counter(len(g.adj[v]) for v in range(k))
    d = tuple(deg.get(i, 0) for i in range(1, k + 1))
    z = []
    for size in range(2, k + 1):
        if size == 2:
            z.append(g.m)
        else:
            i = size - 1
            z.append(sum(math.comb(j, i) * d[j - 1] for j in range(i, k + 1)))
    return DegreeStarSequences(d, tuple(z))


def star_counts_direct(g: Graph) -> tuple[int, ...]:
    """z_2..z_k by choosing a centre and a leaf set explicitly (no formula)."""
    k = g.n
    z = []
    for size in range(2, k + 1):
        leaves = size - 1
        total = 0
        for c in range(k):
            total += sum(1 for _ in combinations(sorted(g.adj[c]), leaves))
        z.append(total // 2 if size == 2 else total)
    return tuple(z)


# ---------------------------------------------------------------------------
# canonical forms

def _refine(adj: Sequence[frozenset[int]], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for idx, c in enumerate(cells):
            for v in c:
                cell_of[v] = idx
        new, changed = [], False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(sorted(Counter(cell_of[u] for u in adj[v]).items())) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
            for key in keys:
                new.append([v for v in c if sig[v] == key])
        cells = new
        if not changed:
            return cells


def canonical_form(g: Graph) -> tuple:
    """Hashable isomorphism invariant that is complete for small graphs.

    Colour refinement followed by individualisation; the certificate is the
    lexicographically smallest relabelled edge list over all leaves of the
    search tree.  Exact, but exponential on highly symmetric inputs - meant
    for graphs up to roughly a dozen vertices.
    """
    n = g.n
    if n == 0:
        return (0, (), ())
    init: dict = {}
    for v in range(n):
        init.setdefault((v in g.loops, len(g.adj[v])), []).append(v)
    cells = [init[k] for k in sorted(init)]
    best = None

    def cert(order: list[int]) -> tuple:
        lab = {v: i for i, v in enumerate(order)}
        es = tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in g.edges))
        lp = tuple(sorted(lab[v] for v in g.loops))
        return (n, es, lp)

    def search(cells: list[list[int]]):
        nonlocal best
        cells = _refine(g.adj, cells)
        for i, c in enumerate(cells):
            if len(c) > 1:
                for v in c:
                    rest = [u for u in c if u != v]
                    search(cells[:i] + [[v], rest] + cells[i + 1:])
                return
        c = cert([c[0] for c in cells])
        if best is None or c < best:
            best = c

    search(cells)
    return best


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if (g1.n, g1.m, len(g1.loops)) != (g2.n, g2.m, len(g2.loops)):
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    return canonical_form(g1) == canonical_form(g2)


def from_canonical(form: tuple) -> Graph:
    n, es, lp = form
    return Graph.from_edges(n, es, lp)


# ---------------------------------------------------------------------------
# enumeration of small graphs

@lru_cache(maxsize=None)
def _graph_forms(n: int) -> tuple[tuple, ...]:
    if n == 0:
        return (canonical_form(Graph(0)),)
    forms = set()
    for base in _graph_forms(n - 1):
        g = from_canonical(base)
        for mask in range(1 << (n - 1)):
            es = list(g.edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            forms.add(canonical_form(Graph.from_edges(n, es)))
    return tuple(sorted(forms))


def all_graphs(n: int) -> list[Graph]:
    """One representative of each isomorphism class of simple graphs on n vertices."""
    return [from_canonical(f) for f in _graph_forms(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]


# ---------------------------------------------------------------------------
# free trees

def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    if n == 1:
        return Graph(1)
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def tree_canonical_string(g: Graph) -> str:
    """AHU encoding rooted at the centre (minimum over both centres if bicentral)."""
    n = g.n
    if n == 1:
        return "()"
    deg = [len(g.adj[v]) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in g.adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    centres = layer

    def enc(root: int) -> str:
        parent = {root: -1}
        order = [root]
        for v in order:
            for u in g.adj[v]:
                if u not in parent:
                    parent[u] = v
                    order.append(u)
        code: dict[int, str] = {}
        for v in reversed(order):
            kids = sorted(code[u] for u in g.adj[v] if parent.get(u) == v and u != parent[v])
            code[v] = "(" + "".join(kids) + ")"
        return code[root]

    return min(enc(c) for c in centres)


def _trees_from_prefix(args: tuple[int, int | None]) -> dict[str, tuple[Edge, ...]]:
    n, first = args
    found: dict[str, tuple[Edge, ...]] = {}
    if n <= 2:
        seqs = [()]
    elif first is None:
        seqs = product(range(n), repeat=n - 2)
    else:
        seqs = ((first,) + rest for rest in product(range(n), repeat=n - 3))
    for seq in seqs:
        t = prufer_decode(seq, n)
        key = tree_canonical_string(t)
        if key not in found:
            found[key] = tuple(sorted(t.edges))
    return found


def _free_trees_prufer(n: int, jobs: int = 1) -> dict[str, tuple[Edge, ...]]:
    if n <= 2 or jobs <= 1:
        return _trees_from_prefix((n, None))
    from multiprocessing import Pool

    with Pool(jobs) as pool:
        parts = pool.map(_trees_from_prefix, [(n, f) for f in range(n)])
    merged: dict[str, tuple[Edge, ...]] = {}
    for part in parts:
        for k, v in part.items():
            merged.setdefault(k, v)
    return merged


@lru_cache(maxsize=None)
def _free_trees_leaf(n: int) -> tuple[tuple[str, tuple[Edge, ...]], ...]:
    # every tree on n vertices is a tree on n-1 vertices plus a leaf
    if n == 1:
        return (("()", ()),)
    found: dict[str, tuple[Edge, ...]] = {}
    for _, edges in _free_trees_leaf(n - 1):
        for v in range(n - 1):
            t = Graph.from_edges(n, edges + ((v, n - 1),))
            key = tree_canonical_string(t)
            if key not in found:
                found[key] = tuple(sorted(t.edges))
    return tuple(sorted(found.items()))


def free_trees(n: int, method: str = "leaf", jobs: int = 1) -> list[Graph]:
    """All non-isomorphic trees on n vertices, ordered by canonical string.

    ``method="prufer"`` decodes all n^(n-2) Pruefer sequences and de-duplicates;
    ``method="leaf"`` grows trees one leaf at a time, which is far cheaper and
    gives the same set.
    """
    if n < 1:
        return []
    if method == "prufer":
        merged = _free_trees_prufer(n, jobs)
    elif method == "leaf":
        merged = dict(_free_trees_leaf(n))
    else:
        raise PreconditionError(f"unknown tree enumeration method {method!r}")
    return [Graph.from_edges(n, merged[k]) for k in sorted(merged)]
