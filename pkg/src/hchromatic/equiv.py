"""Deciders for H-chromatic equivalence that avoid computing the functions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, UnsupportedInputError
from .graphs import Graph, augmented_star, bipartite_profile, degree_and_star_sequences, independent_set_census


def _bucket_sort(values, upper: int) -> list[int]:
    buckets = [0] * (upper + 1)
    for v in values:
        buckets[v] += 1
    out = []
    for v, c in enumerate(buckets):
        out.extend([v] * c)
    return out


@dataclass(frozen=True)
class KmnReport:
    equivalent: bool
    reason: str
    diff1: tuple[int, ...] | None = None
    diff2: tuple[int, ...] | None = None


def kmn_report(g1: Graph, g2: Graph) -> KmnReport:
    """Decide X_{g1}^{K_{m,n}} == X_{g2}^{K_{m,n}} (the answer does not depend on m, n)."""
    if g1.loops or g2.loops:
        raise UnsupportedInputError("kmn equivalence needs simple graphs")
    p1, p2 = bipartite_profile(g1), bipartite_profile(g2)
    if p1 is None and p2 is None:
        return KmnReport(True, "both-uncolorable")
    if p1 is None or p2 is None:
        return KmnReport(False, "one-uncolorable")
    if g1.n != g2.n:
        return KmnReport(False, "vertex-count", p1.diff, p2.diff)
    if len(p1.diff) != len(p2.diff):
        return KmnReport(False, "component-count", p1.diff, p2.diff)
    top = g1.n
    d1, d2 = _bucket_sort(p1.diff, top), _bucket_sort(p2.diff, top)
    same = d1 == d2
    return KmnReport(same, "diff-equal" if same else "diff-differs", tuple(d1), tuple(d2))


def kmn_equivalent(g1: Graph, g2: Graph) -> bool:
    return kmn_report(g1, g2).equivalent


@dataclass(frozen=True)
class AugstarReport:
    equivalent: bool
    census1: dict
    census2: dict
    delta: dict  # size -> count difference (g1 minus g2)


def augstar_report(g1: Graph, g2: Graph, n: int) -> AugstarReport:
    """Decide X_{g1}^{S_{n+1}^1} == X_{g2}^{S_{n+1}^1}.

    For n >= 2 this compares independent-set censuses; for n = 1 the census
    is not decisive and both functions are computed outright.
    """
    if g1.loops or g2.loops:
        raise UnsupportedInputError("augmented-star equivalence needs simple graphs")
    if g1.n != g2.n:
        raise PreconditionError("augmented-star equivalence needs equal vertex counts")
    if n < 1:
        raise PreconditionError("n must be at least 1")
    c1, c2 = independent_set_census(g1), independent_set_census(g2)
    delta = {s: c1[s] - c2[s] for s in sorted(set(c1) | set(c2)) if c1[s] != c2[s]}
    if n >= 2:
        eq = not delta
    else:
        from .hcolor import hcsf

        h = augmented_star(2)
        eq = hcsf(g1, h) == hcsf(g2, h)
    return AugstarReport(eq, dict(sorted(c1.items())), dict(sorted(c2.items())), delta)


def augstar_equivalent(g1: Graph, g2: Graph, n: int) -> bool:
    return augstar_report(g1, g2, n).equivalent


@dataclass(frozen=True)
class StarDegseqReport:
    equal: bool
    first_degree_index: int | None    # N: smallest i with d_i differing
    star_index: int | None            # l with z_l guaranteed to differ
    guaranteed_distinct: bool         # star_size large enough to see z_l


def star_degseq_report(h1: Graph, h2: Graph, star_size: int) -> StarDegseqReport:
    """Compare X_{S_k}^{h1} and X_{S_k}^{h2} through degree sequences.

    Equal degree sequences give equal functions.  If they differ, let j be
    the largest degree whose count differs; then z_{j+1} differs, and the
    functions differ as soon as the star has at least j+1 vertices.
    """
    if h1.n != h2.n:
        raise PreconditionError("star degree-sequence comparison needs equal vertex counts")
    s1, s2 = degree_and_star_sequences(h1), degree_and_star_sequences(h2)
    if s1.degree_seq == s2.degree_seq:
        return StarDegseqReport(True, None, None, False)
    idx = [i + 1 for i, (a, b) in enumerate(zip(s1.degree_seq, s2.degree_seq)) if a != b]
    l = idx[-1] + 1
    return StarDegseqReport(False, idx[0], l, star_size >= l)


def star_domain_equal_by_degseq(h1: Graph, h2: Graph, star_size: int) -> bool:
    return star_degseq_report(h1, h2, star_size).equal
