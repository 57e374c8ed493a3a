"""Property suites that cross-check every formula against the census oracles.

Each suite returns a SuiteResult; failures carry a serialized reproducer.
Findings (conjecture probes) are reported separately and never fail a suite.
"""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from . import closedform as cf
from .distinguish import (
    DistinguisherPlan,
    a1k_count,
    domination_margin_holds,
    general_distinguisher,
    materialize,
    plan_hcsf,
    reverse_dominated,
    uniform_distinguisher_connected,
    usage_vector,
)
from .equiv import augstar_equivalent, kmn_equivalent, star_domain_equal_by_degseq
from .graphs import (
    Graph,
    all_graphs,
    augmented_star,
    bipartite_profile,
    complement,
    complete,
    complete_bipartite,
    complete_multipartite,
    connected_graphs,
    contains_subgraph,
    cycle,
    disjoint_union,
    edgeless,
    embedding_count,
    free_trees,
    is_bipartite,
    is_connected,
    k_minus,
    path,
    star,
    to_edge_list,
)
from .hcolor import coloring_census, hcsf, hcsf_naive
from .symfunc import SymFunc, change_basis, monotone_in, omega, partitions_of, rank


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str, *graphs: Graph):
        rep = " | ".join(to_edge_list(g).strip().replace("\n", ";") for g in graphs)
        self.failures.append(f"{what} [{rep}]" if graphs else what)


class _Clock:
    def __init__(self, budget: float | None):
        self.deadline = None if budget is None else time.monotonic() + budget

    def out(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def graphs_up_to(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in all_graphs(k)]


def random_graph(rng: random.Random, n: int, p: float = 0.5, loop_p: float = 0.0) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    loops = [v for v in range(n) if rng.random() < loop_p]
    return Graph.from_edges(n, edges, loops)


# ---------------------------------------------------------------------------

def suite_lemma31(budget: float | None = None, random_pairs: int = 200, seed: int = 0) -> SuiteResult:
    """Single-labeling assembly equals the all-labelings sum."""
    res, clock = SuiteResult("lemma31"), _Clock(budget)
    small = graphs_up_to(4)
    for g, h in product(small, small):
        if clock.out():
            res.truncated = True
            return res
        if hcsf(g, h) != hcsf_naive(g, h):
            res.fail("census and naive sums differ", g, h)
        res.checked += 1
    rng = random.Random(seed)
    for _ in range(random_pairs):
        if clock.out():
            res.truncated = True
            break
        g = random_graph(rng, rng.randint(1, 5))
        h = random_graph(rng, rng.randint(1, 4), loop_p=0.3)
        if hcsf(g, h) != hcsf_naive(g, h):
            res.fail("census and naive sums differ", g, h)
        res.checked += 1
    return res


def suite_prop35(budget: float | None = None, max_n: int = 5) -> SuiteResult:
    """All-distinct coloring count equals the embedding count."""
    res, clock = SuiteResult("prop35"), _Clock(budget)
    gs = graphs_up_to(max_n)
    for g, h in product(gs, gs):
        if clock.out():
            res.truncated = True
            break
        d = coloring_census(g, h)[(1,) * g.n]
        if d != embedding_count(g, h):
            res.fail(f"d_(1^k)={d} but embeddings={embedding_count(g, h)}", g, h)
        res.checked += 1
    return res


# ---------------------------------------------------------------------------

def _forced_centre_oracle(k1: int, k2: int, n: int) -> SymFunc:
    """k1 vertices pinned to the centre colour, k2 free over the n leaves,
    counted map by map."""
    counts: Counter = Counter()
    for kappa in product(range(n), repeat=k2):
        vec = Counter(kappa)
        lam = tuple(sorted(list(vec.values()) + [k1], reverse=True))
        counts[lam] += 1
    return SymFunc.from_dict("m_aug", k1 + k2, dict(counts), n + 1)


def suite_closedforms(budget: float | None = None, max_g: int = 6, max_h: int = 4) -> SuiteResult:
    res, clock = SuiteResult("closedforms"), _Clock(budget)
    gs = graphs_up_to(max_g)
    bip = [g for g in gs if is_bipartite(g)]

    def check(ok: bool, what: str, *graphs):
        res.checked += 1
        if not ok:
            res.fail(what, *graphs)

    # complete bipartite H, both summation forms
    for g in bip:
        for h1, h2 in product(range(1, max_h + 1), repeat=2):
            if h1 > h2:
                continue
            if clock.out():
                res.truncated = True
                return res
            ref = hcsf(g, complete_bipartite(h1, h2))
            check(cf.hcsf_complete_bipartite_H(g, h1, h2) == ref, f"K_{h1},{h2} closed form", g)
            check(cf.kmn_half_pair_sum(g, h1, h2) == ref, f"K_{h1},{h2} half pair sum", g)
    # pair terms are the complete bipartite functions when both sides are non-empty
    for k1 in range(1, max_g):
        for k2 in range(k1, max_g - k1 + 1):
            for h1, h2 in product(range(1, max_h + 1), repeat=2):
                ref = hcsf(complete_bipartite(k1, k2), complete_bipartite(h1, h2))
                check(cf.kmn_pair_term(k1, k2, h1, h2) == ref, f"pair term K_{k1},{k2} on K_{h1},{h2}")
    # stars as H
    for g in bip:
        for n in range(1, max_h + 1):
            check(cf.hcsf_star_H(g, n) == hcsf(g, star(n + 1)), f"star S_{n + 1} closed form", g)
    # partial stars against forced-centre counting, and the splitting identity
    for k1 in range(1, max_g):
        for k2 in range(1, max_g - k1 + 1):
            for n in range(1, max_h + 1):
                ps = cf.partial_star(k1, k2, n)
                check(ps == change_basis(_forced_centre_oracle(k1, k2, n), "m"), f"partial star ({k1},{k2},{n})")
                split = ps + cf.partial_star(k2, k1, n)
                check(split == hcsf(complete_bipartite(k1, k2), star(n + 1)), f"partial star split ({k1},{k2},{n})")
    # augmented stars
    for g in gs:
        if g.m == 0:
            continue
        if clock.out():
            res.truncated = True
            return res
        for n in range(1, max_h + 1):
            check(cf.hcsf_augmented_star(g, n) == hcsf(g, augmented_star(n + 1)), f"augmented star n={n}", g)
    # stars as G, through the star sequence of H
    for k in range(2, max_g + 1):
        for h in graphs_up_to(max_h + 1):
            check(cf.hcsf_star_G(k, h) == hcsf(star(k), h), f"star-sequence form k={k}", h)
    # complete multipartite G
    for k in range(1, max_g + 1):
        for lam in partitions_of(k):
            g = complete_multipartite(lam)
            for h in graphs_up_to(max_h + 1):
                if contains_subgraph(h, k_minus(len(lam) + 1)):
                    continue
                check(cf.hcsf_multipartite(lam, h) == hcsf(g, h), f"multipartite {lam}", h)
    # edgeless G
    for n in range(1, max_g + 1):
        for i in range(1, max_h + 1):
            check(cf.hcsf_edgeless(n, i) == hcsf(edgeless(n), edgeless(i)), f"edgeless ({n},{i})")
            check(cf.hcsf_edgeless(n, i) == hcsf(edgeless(n), complete(i)), f"edgeless vs K_{i} ({n},{i})")
    # power-sum expansion
    for k1 in range(1, 4):
        for k2 in range(1, 4):
            for n in range(max(k1, k2), max(k1, k2) + 2):
                ref = change_basis(hcsf(complete_bipartite(k1, k2), star(n + 1)), "p")
                check(cf.star_p_expansion(k1, k2, n) == ref, f"p-expansion ({k1},{k2},{n})")
    # scaling in the star size
    for g in bip:
        if not is_connected(g) or g.n < 2:
            continue
        a, b = bipartite_profile(g).per_component[0]
        for n in range(1, max_h + 1):
            diff = hcsf(g, star(n + 2)) - hcsf(g, star(n + 1)) * (n + 1)
            if n + 1 > max(a, b):
                check(diff.is_zero(), f"star scaling n={n}", g)
            else:
                check(all(len(lam) == n + 2 for lam, _ in diff.terms), f"star scaling support n={n}", g)
    # no rainbow colorings onto a K_{m,n} with m smaller than every side
    for g in bip:
        prof = bipartite_profile(g)
        if any(min(p) == 0 for p in prof.per_component):
            continue
        if any(min(p) == 1 for p in prof.per_component):
            continue  # star components
        m = min(min(p) for p in prof.per_component) - 1
        if m < 1:
            continue
        for n in range(1, max_h + 1):
            check(hcsf(g, complete_bipartite(m, n)).coeff((1,) * g.n) == 0, f"rainbow coefficient K_{m},{n}", g)
    # complements of triangle-free graphs with m edges share the augmented-star function
    for k in range(2, max_g + 1):
        by_m: dict[int, list[SymFunc]] = {}
        for g in all_graphs(k):
            if contains_subgraph(g, complete(3)):
                continue
            c = complement(g)
            if c.m == 0:
                continue
            by_m.setdefault(g.m, []).append(cf.hcsf_augmented_star(c, 2))
        for fs in by_m.values():
            check(all(f == fs[0] for f in fs), f"triangle-free complement family k={k}")
    # different left sides of K_{m,n} give functions that are not proportional
    g = complete_bipartite(3, 3)
    for n in (2, 3):
        fs = {m: hcsf(g, complete_bipartite(m, n)) for m in (3, 4, 5)}
        for m1, m2 in ((3, 4), (4, 5), (3, 5)):
            check(scalar_witness(fs[m1], fs[m2]) is not None, f"K_3,3 m={m1},{m2} n={n}")
    # classical bases
    for k in range(1, max_g + 1):
        for lam in partitions_of(k):
            check(cf.classical_realizations(lam, "p") == change_basis(SymFunc.single("p", lam), "m"), f"p realization {lam}")
            check(cf.classical_realizations(lam, "e") == change_basis(SymFunc.single("e", lam), "m"), f"e realization {lam}")
            same = cf.e_scalar(lam) == cf.e_scalar_squares(lam)
            check(same == (max(lam) <= 2), f"e normaliser agreement {lam}")
        check(len(cf.classical_realizations((k,), "beta_basis")) == len(partitions_of(k)), f"basis size {k}")
    return res


def scalar_witness(f: SymFunc, g: SymFunc):
    """Two partitions whose coefficients fail cross-multiplication, or None
    when f and g are scalar multiples of each other."""
    lams = sorted(set(f.coeffs()) | set(g.coeffs()), reverse=True)
    for l1, l2 in combinations(lams, 2):
        if f.coeff(l1) * g.coeff(l2) != f.coeff(l2) * g.coeff(l1):
            return l1, l2
    return None


# ---------------------------------------------------------------------------

def suite_equiv(budget: float | None = None, max_n: int = 6) -> SuiteResult:
    res, clock = SuiteResult("equiv"), _Clock(budget)
    bip = [g for g in graphs_up_to(max_n) if is_bipartite(g)]
    x12 = [hcsf(g, complete_bipartite(1, 2)) for g in bip]
    x22 = [hcsf(g, complete_bipartite(2, 2)) for g in bip]
    for i, j in combinations_with_replacement(range(len(bip)), 2):
        if clock.out():
            res.truncated = True
            return res
        dec = kmn_equivalent(bip[i], bip[j])
        res.checked += 1
        if dec != (x12[i] == x12[j]) or dec != (x22[i] == x22[j]):
            res.fail("kmn decision disagrees with exact functions", bip[i], bip[j])
    five = all_graphs(5)
    h = augmented_star(3)
    xs = [hcsf(g, h) for g in five]
    for i, j in combinations_with_replacement(range(len(five)), 2):
        res.checked += 1
        if augstar_equivalent(five[i], five[j], 2) != (xs[i] == xs[j]):
            res.fail("augmented-star decision disagrees", five[i], five[j])
    four = all_graphs(4)
    s4 = [hcsf(star(4), h) for h in four]
    s5 = [hcsf(star(5), h) for h in four]
    for i, j in combinations_with_replacement(range(len(four)), 2):
        res.checked += 1
        dec = star_domain_equal_by_degseq(four[i], four[j], 4)
        if dec != (s4[i] == s4[j]) or dec != (s5[i] == s5[j]):
            res.fail("degree-sequence decision disagrees", four[i], four[j])
    return res


# ---------------------------------------------------------------------------

def partial_star_rank(k: int, n: int) -> int:
    return rank([cf.partial_star(j, k + 1 - j, n) for j in range(1, k + 1)])


def star_sweep_rank(g: Graph) -> tuple[int, int]:
    """(rank of X_g^{S_{n+1}} for 1 <= n <= max S(g), max S(g))."""
    top = max(bipartite_profile(g).s_multiset)
    return rank([hcsf(g, star(n + 1)) for n in range(1, top + 1)]), top


def star_family_rank(k: int, include_edgeless: bool = True) -> int:
    """Rank of {X_g^{S_{n+1}} : |V(g)| = k, 1 <= n <= k}.  Non-bipartite g
    contribute zero; larger n only rescale (star scaling), so n <= k suffices."""
    fs = []
    for g in all_graphs(k):
        if not is_bipartite(g) or (g.m == 0 and not include_edgeless):
            continue
        fs.extend(hcsf(g, star(n + 1)) for n in range(1, k + 1))
    return rank(fs)


def star_family_bound(k: int) -> int:
    return (math.ceil(k / 2) + k - 1) * (k // 2) // 2


SAMPLE_BIPARTITE = [
    path(2), path(3), path(4), path(5), star(4), star(5), cycle(4),
    disjoint_union(path(2), path(3)), disjoint_union(path(3), path(2), complete(1)), complete_bipartite(2, 3),
]


def suite_ranks(budget: float | None = None) -> SuiteResult:
    res = SuiteResult("ranks")
    for k in (4, 5):
        for n in (2, 3):
            r = partial_star_rank(k, n)
            res.checked += 1
            res.notes.append(f"partial-star rank k={k} n={n}: {r}")
            if r != k:
                res.fail(f"partial-star family k={k} n={n} has rank {r}, expected {k}")
    for g in SAMPLE_BIPARTITE:
        r, top = star_sweep_rank(g)
        res.checked += 1
        if r != top:
            res.fail(f"star sweep rank {r} != max S(g) = {top}", g)
    for k in (4, 5):
        r, bound = star_family_rank(k), star_family_bound(k)
        res.checked += 1
        res.notes.append(f"star family rank k={k}: {r} (bound {bound})")
        res.notes.append(f"star family rank k={k} without the edgeless graph: {star_family_rank(k, False)}")
        if r > bound or (k == 4 and r != bound):
            res.fail(f"star family rank {r} vs bound {bound} at k={k}")
    return res


# ---------------------------------------------------------------------------

def small_plans(max_total: int = 10, max_part: int = 4) -> list[DistinguisherPlan]:
    """Every plan over connected parts on <= max_part vertices with at most
    max_total vertices in all."""
    pool = [g for k in range(1, max_part + 1) for g in connected_graphs(k)]
    plans = []

    def rec(i: int, left: int, chosen: list):
        if i == len(pool):
            if chosen:
                plans.append(DistinguisherPlan(tuple(chosen)))
            return
        rec(i + 1, left, chosen)
        h = pool[i]
        for m in range(1, left // h.n + 1):
            rec(i + 1, left - m * h.n, chosen + [(h, m)])

    rec(0, max_total, [])
    return plans


def suite_distinguish(budget: float | None = None) -> SuiteResult:
    res, clock = SuiteResult("distinguish"), _Clock(budget)
    gs = graphs_up_to(4)
    for plan in small_plans():
        if clock.out():
            res.truncated = True
            return res
        big = materialize(plan)
        for g in gs:
            res.checked += 1
            if a1k_count(g, plan) != coloring_census(g, big)[(1,) * g.n]:
                res.fail("a1k_count disagrees with the materialized census", g, big)
    conn = [g for k in range(1, 6) for g in connected_graphs(k)]
    for a, b in combinations(conn, 2):
        if clock.out():
            res.truncated = True
            return res
        plan = uniform_distinguisher_connected([a, b])
        res.checked += 1
        if plan_hcsf(a, plan) == plan_hcsf(b, plan):
            res.fail("connected plan does not separate", a, b)
    for a, b in general_pairs():
        if clock.out():
            res.truncated = True
            return res
        res.checked += 1
        ok, why = general_plan_separates(a, b)
        if not ok:
            res.fail(why, a, b)
    return res


def general_pairs(max_comp: int = 4, max_parts: int = 2):
    pool = [g for k in range(1, max_comp + 1) for g in connected_graphs(k)]
    family = list(pool)
    if max_parts >= 2:
        family += [disjoint_union(a, b) for a, b in combinations_with_replacement(pool, 2)]
    for a, b in combinations(family, 2):
        if a.n == b.n:
            yield a, b


def general_plan_separates(a: Graph, b: Graph) -> tuple[bool, str]:
    plan = general_distinguisher([a, b])
    ca, cb = a1k_count(a, plan), a1k_count(b, plan)
    if ca == cb:
        return False, "general plan gives equal all-distinct counts"
    s, t = usage_vector(a, plan), usage_vector(b, plan)
    if reverse_dominated(t, s):
        s, t = t, s
        ca, cb = cb, ca
    if not domination_margin_holds(s, t, plan):
        return False, "domination margin fails"
    if not ca < cb:
        return False, "count order does not follow the usage order"
    return True, ""


# ---------------------------------------------------------------------------

def omega_p_report(g: Graph, h: Graph) -> str:
    return monotone_in(omega(hcsf(g, h)), "p")


def suite_monotone(budget: float | None = None, max_g: int = 5, max_n: int = 3) -> SuiteResult:
    res, clock = SuiteResult("monotone"), _Clock(budget)
    fixture = omega_p_report(path(4), cycle(7))
    res.checked += 1
    if fixture != "mixed":
        res.fail(f"omega(X_P4^C7) reported {fixture}, expected mixed")
    for g in graphs_up_to(max_g):
        for n in range(1, max_n + 1):
            if clock.out():
                res.truncated = True
                return res
            x = hcsf(g, star(n + 1))
            res.checked += 1
            if monotone_in(x, "m") not in ("nonneg", "zero"):
                res.fail("negative monomial coefficient", g)
            kind = monotone_in(omega(x), "p")
            if kind == "mixed":
                res.findings.append(f"omega(X^S_{n + 1}) is not p-monotone for {to_edge_list(g).strip()!r}")
    return res


# ---------------------------------------------------------------------------

def tree_census(max_n: int, jobs: int = 1) -> tuple[dict[int, int], list[tuple[Graph, Graph]]]:
    """Tree counts per order and every pair of non-isomorphic trees with equal
    self-functions."""
    counts, collisions = {}, []
    for n in range(1, max_n + 1):
        trees = free_trees(n)
        counts[n] = len(trees)
        if jobs > 1 and len(trees) > 1:
            from multiprocessing import Pool

            with Pool(jobs) as pool:
                fs = pool.map(_self_hcsf, trees)
        else:
            fs = [_self_hcsf(t) for t in trees]
        seen: dict = {}
        for t, f in zip(trees, fs):
            if f.terms in seen:
                collisions.append((seen[f.terms], t))
            else:
                seen[f.terms] = t
    return counts, collisions


def _self_hcsf(t: Graph) -> SymFunc:
    return hcsf(t, t)


SUITES = {
    "lemma31": suite_lemma31,
    "prop35": suite_prop35,
    "closedforms": suite_closedforms,
    "equiv": suite_equiv,
    "ranks": suite_ranks,
    "distinguish": suite_distinguish,
    "monotone": suite_monotone,
}
