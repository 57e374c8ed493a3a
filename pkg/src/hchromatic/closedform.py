"""Closed-form H-chromatic symmetric functions for special families of H (or G).

Each generator is independent of the census engine, which serves as the
oracle in the test suite.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import PreconditionError, UnsupportedInputError
from .graphs import (
    Graph,
    bipartite_profile,
    complete,
    complete_bipartite,
    complete_multipartite,
    contains_subgraph,
    degree_and_star_sequences,
    edgeless,
    embedding_count,
    independent_set_census,
    k_minus,
    star,
)
from .symfunc import (
    Partition,
    SymFunc,
    augmented_scale,
    change_basis,
    multinomial,
    partitions_of,
    rank,
    sf_multiply,
)


def _require_simple(g: Graph, what: str):
    if g.loops:
        raise UnsupportedInputError(f"{what} needs a simple graph")


def _mult_counts(lam: Partition) -> list[int]:
    return list(Counter(lam).values())


def _add(acc: dict, lam: Partition, c):
    if c:
        acc[lam] = acc.get(lam, 0) + c


# ---------------------------------------------------------------------------
# complete bipartite H

@lru_cache(maxsize=None)
def _kmn_side_term(k1: int, k2: int, h1: int, h2: int) -> tuple:
    """Contribution of one side assignment: k1 vertices coloured from the
    h1-side of K_{h1,h2} and k2 from the h2-side, as m-coefficients."""
    acc: dict[Partition, int] = {}
    for lam in partitions_of(k1, h1):
        left = multinomial(h1, _mult_counts(lam)) * multinomial(k1, lam)
        for mu in partitions_of(k2, h2):
            right = multinomial(h2, _mult_counts(mu)) * multinomial(k2, mu)
            nu = tuple(sorted(lam + mu, reverse=True))
            _add(acc, nu, left * right * augmented_scale(nu, h1 + h2))
    return tuple(acc.items())


def kmn_pair_term(k1: int, k2: int, h1: int, h2: int) -> SymFunc:
    """Both orientations of a (k1, k2) split; equals X_{K_{k1,k2}}^{K_{h1,h2}}
    when k1, k2 >= 1."""
    acc: dict[Partition, int] = {}
    for a, b in ((k1, k2), (k2, k1)):
        for lam, c in _kmn_side_term(a, b, h1, h2):
            _add(acc, lam, c)
    return SymFunc.from_dict("m", k1 + k2, acc)


def _side_sums(parts: tuple[tuple[int, int], ...]):
    for p in product((0, 1), repeat=len(parts)):
        yield sum(pair[side] for pair, side in zip(parts, p))


def hcsf_complete_bipartite_H(g: Graph, h1: int, h2: int, check: bool = True) -> SymFunc:
    """X_g^{K_{h1,h2}} by summing over all side choices of g's components.

    Isolated vertices count as components with parts (1, 0).  With ``check``
    the result is compared against the half-sum of pair terms.
    """
    _require_simple(g, "complete bipartite closed form")
    if h1 < 1 or h2 < 1:
        raise PreconditionError("K_{h1,h2} needs h1, h2 >= 1")
    prof = bipartite_profile(g)
    if prof is None:
        return SymFunc.zero(g.n)
    acc: dict[Partition, int] = {}
    for k1 in _side_sums(prof.per_component):
        for lam, c in _kmn_side_term(k1, g.n - k1, h1, h2):
            _add(acc, lam, c)
    out = SymFunc.from_dict("m", g.n, acc)
    if check:
        alt = kmn_half_pair_sum(g, h1, h2)
        if alt != out:
            raise AssertionError(f"side-sum and pair-sum forms disagree for {g!r}")
    return out


def kmn_half_pair_sum(g: Graph, h1: int, h2: int) -> SymFunc:
    prof = bipartite_profile(g)
    if prof is None:
        return SymFunc.zero(g.n)
    total = SymFunc.zero(g.n)
    for k1 in _side_sums(prof.per_component):
        total = total + kmn_pair_term(k1, g.n - k1, h1, h2)
    return total / 2


# ---------------------------------------------------------------------------
# stars and augmented stars

def _partial_star_dict(k1: int, k2: int, n: int) -> dict[Partition, int]:
    acc: dict[Partition, int] = {}
    if k1 == 0:
        # centre colour unused: all k2 vertices on the n leaves
        for lam in partitions_of(k2, n):
            _add(acc, lam, multinomial(n, _mult_counts(lam)) * multinomial(k2, lam) * augmented_scale(lam, n + 1))
        return acc
    for lam in partitions_of(k1 + k2, n + 1):
        if k1 not in lam:
            continue
        rest = list(lam)
        rest.remove(k1)
        _add(acc, lam, multinomial(n, _mult_counts(tuple(rest))) * multinomial(k2, rest) * augmented_scale(lam, n + 1))
    return acc


def partial_star(k1: int, k2: int, n: int) -> SymFunc:
    """Colorings onto S_{n+1} with exactly k1 vertices on the centre colour
    and k2 vertices on the n leaf colours (m basis)."""
    if k1 < 1 or k2 < 0 or n < 1:
        raise PreconditionError("partial_star needs k1 >= 1, k2 >= 0, n >= 1")
    return SymFunc.from_dict("m", k1 + k2, _partial_star_dict(k1, k2, n))


def hcsf_star_H(g: Graph, n: int) -> SymFunc:
    """X_g^{S_{n+1}} for bipartite g: for each side choice, the chosen side
    sits on the centre colour."""
    _require_simple(g, "star closed form")
    if n < 1:
        raise PreconditionError("S_{n+1} needs n >= 1")
    prof = bipartite_profile(g)
    if prof is None:
        return SymFunc.zero(g.n)
    acc: dict[Partition, int] = {}
    for s in _side_sums(prof.per_component):
        for lam, c in _partial_star_dict(s, g.n - s, n).items():
            _add(acc, lam, c)
    return SymFunc.from_dict("m", g.n, acc)


def hcsf_augmented_star(g: Graph, n: int) -> SymFunc:
    """X_g^{S_{n+1}^1}: the all-centre colouring plus one partial-star term per
    non-empty independent set (which goes to the leaves)."""
    _require_simple(g, "augmented star closed form")
    if n < 1:
        raise PreconditionError("S_{n+1}^1 needs n >= 1")
    if g.m == 0:
        raise PreconditionError("augmented star closed form needs a graph with at least one edge")
    k = g.n
    acc: dict[Partition, int] = {(k,): math.factorial(n)}
    for size, count in independent_set_census(g).items():
        for lam, c in _partial_star_dict(k - size, size, n).items():
            _add(acc, lam, count * c)
    return SymFunc.from_dict("m", k, acc)


def star_beta(star_size: int, l: int) -> dict[Partition, int]:
    """Type counts of S_{star_size} coloured onto S_l using all l colours."""
    k = star_size
    both = Counter(_partial_star_dict(1, k - 1, l - 1))
    both.update(_partial_star_dict(k - 1, 1, l - 1))
    return {lam: c // augmented_scale(lam, l) for lam, c in both.items() if len(lam) == l and c}


def hcsf_star_G(star_size: int, h: Graph) -> SymFunc:
    """X_{S_k}^h from h's star sequence: a colouring of a star spans a star of h."""
    _require_simple(h, "star-sequence closed form")
    if star_size < 2:
        raise PreconditionError("star_size must be at least 2")
    z = degree_and_star_sequences(h).star_seq  # z_2..z_{|V(h)|}
    acc: dict[Partition, int] = {}
    for l in range(2, min(star_size, h.n) + 1):
        zl = z[l - 2]
        if not zl:
            continue
        for lam, beta in star_beta(star_size, l).items():
            _add(acc, lam, zl * beta * augmented_scale(lam, h.n))
    return SymFunc.from_dict("m", star_size, acc)


# ---------------------------------------------------------------------------
# complete multipartite G, edgeless G

def hcsf_multipartite(lam, h: Graph) -> SymFunc:
    """X_{K_lam}^h when h has no K_{l+1}^- subgraph (l = number of parts):
    every colouring is constant on parts, one per clique of size l."""
    lam = tuple(sorted(lam, reverse=True))
    _require_simple(h, "multipartite closed form")
    if not lam:
        raise PreconditionError("partition must be non-empty")
    l = len(lam)
    forbidden = k_minus(l + 1)
    if contains_subgraph(h, forbidden):
        name = "two vertices (K_2 minus an edge)" if l == 1 else f"K_{l + 1} minus an edge"
        raise PreconditionError(f"H contains {name}; the closed form does not apply")
    emb = embedding_count(complete(l), h)
    cliques, rem = divmod(emb, math.factorial(l))
    assert rem == 0
    if not cliques:
        return SymFunc.zero(sum(lam))
    return SymFunc.single("m", lam, cliques * math.factorial(l) * augmented_scale(lam, h.n))


def hcsf_edgeless(n: int, i: int) -> SymFunc:
    """X of n isolated vertices onto any i-vertex H."""
    if n < 1 or i < 1:
        raise PreconditionError("hcsf_edgeless needs n, i >= 1")
    fi = math.factorial(i)
    return SymFunc.from_dict("m", n, {lam: fi * multinomial(n, lam) for lam in partitions_of(n, i)})


# ---------------------------------------------------------------------------
# classical bases realized by H-chromatic functions

def e_scalar(lam) -> Fraction:
    """Normaliser turning prod_i X_{K_{lam_i}}^{K_{lam_i}} into e_lam."""
    return Fraction(1, math.prod(math.factorial(x) ** 2 for x in lam))


def e_scalar_squares(lam) -> Fraction:
    """The same normaliser written with lam_i^2; agrees with e_scalar only when
    every part is at most 2."""
    return Fraction(1, math.prod(x * x for x in lam))


def classical_realizations(lam, which: str, hcsf_fn=None):
    """e_lam or p_lam as products of H-chromatic functions, or the basis of
    Lambda^n (n = |lam|) made of complete multipartite functions.

    ``hcsf_fn(g, h)`` computes the constituents; it defaults to the census.
    """
    if hcsf_fn is None:
        from .hcolor import hcsf as hcsf_fn
    lam = tuple(sorted(lam, reverse=True))
    if not lam:
        raise PreconditionError("partition must be non-empty")
    if which == "e":
        out = SymFunc.single("m", (), 1)
        for x in lam:
            out = sf_multiply(out, hcsf_fn(complete(x), complete(x)))
        return out * e_scalar(lam)
    if which == "p":
        out = SymFunc.single("m", (), 1)
        for x in lam:
            out = sf_multiply(out, hcsf_fn(edgeless(x), complete(1)))
        return out
    if which == "beta_basis":
        n = sum(lam)
        fs = [hcsf_fn(complete_multipartite(mu), complete(len(mu))) for mu in partitions_of(n) if mu != (n,)]
        fs.append(hcsf_fn(edgeless(n), complete(1)))
        r = rank(fs)
        if r != len(partitions_of(n)):
            raise AssertionError(f"basis functions span only rank {r}")
        return fs
    raise PreconditionError(f"unknown realization {which!r}")


# ---------------------------------------------------------------------------
# power-sum expansion for complete bipartite G onto a large star

def star_p_expansion(k1: int, k2: int, n: int, check: bool = False) -> SymFunc:
    """X_{K_{k1,k2}}^{S_{n+1}} in the p basis, valid for n >= max(k1, k2)."""
    if k1 < 1 or k2 < 1:
        raise PreconditionError("star_p_expansion needs k1, k2 >= 1")
    if n < max(k1, k2):
        raise PreconditionError(f"star_p_expansion needs n >= max(k1, k2) = {max(k1, k2)}")
    k = k1 + k2
    fn = math.factorial(n)
    acc: dict[Partition, int] = {}
    for a, b in ((k1, k2), (k2, k1)):
        for j in range(a, k + 1):
            lam = (j,) + (1,) * (k - j)
            _add(acc, tuple(sorted(lam, reverse=True)), (-1) ** (j - a) * fn * math.comb(b, j - a))
    out = SymFunc.from_dict("p", k, acc)
    if check:
        from .hcolor import hcsf

        ref = change_basis(hcsf(complete_bipartite(k1, k2), star(n + 1)), "p")
        if ref != out:
            raise AssertionError(f"p-expansion disagrees with the census for ({k1},{k2},{n})")
    return out
