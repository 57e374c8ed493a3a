"""Exact homogeneous symmetric functions over the m, m_aug(n), p, e and s bases.

Partitions are tuples of positive ints in weakly decreasing order.  Within a
degree they are kept in graded reverse-lexicographic order, i.e. descending
lexicographic order on tuples, which refines dominance.  Every transition
matrix to or from m is triangular in that order, so basis changes are exact
back-substitutions over ``Fraction``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import HChromaticError, PreconditionError

Partition = tuple[int, ...]

BASES = ("m", "m_aug", "p", "e", "s")


class BasisError(HChromaticError):
    """Basis mismatch or a term that cannot live in the requested basis."""


# ---------------------------------------------------------------------------
# partitions

def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of n with at most ``max_len`` parts, largest first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_len is None:
        max_len = n
    if max_part is None:
        max_part = n
    return list(_partitions(n, max_len, max_part))


@lru_cache(maxsize=None)
def _partitions(n: int, max_len: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_len - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (n_1! ... n_k! (n - sum)!), zero when the parts overflow n."""
    parts = list(parts)
    rest = n - sum(parts)
    if rest < 0 or any(p < 0 for p in parts):
        return 0
    out = math.factorial(n) // math.factorial(rest)
    for p in parts:
        out //= math.factorial(p)
    return out


def augmented_scale(lam: Partition, n: int) -> int:
    """Multiplier c with m_lam^n = c * m_lam, i.e. prod_j r_j(lam)! * (n - l(lam))!."""
    if len(lam) > n:
        raise BasisError(f"partition {lam} has more than {n} parts")
    out = math.factorial(n - len(lam))
    for r in Counter(lam).values():
        out *= math.factorial(r)
    return out


def _canon(lam: Iterable[int]) -> Partition:
    lam = tuple(sorted((int(x) for x in lam if x), reverse=True))
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in {lam}")
    return lam


# ---------------------------------------------------------------------------
# the value type

@dataclass(frozen=True)
class SymFunc:
    basis: str
    degree: int
    terms: tuple[tuple[Partition, Fraction], ...] = ()
    aug_n: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise BasisError(f"unknown basis {self.basis!r}")
        if (self.basis == "m_aug") != (self.aug_n is not None):
            raise BasisError("aug_n is required for, and only for, the m_aug basis")
        acc: dict[Partition, Fraction] = {}
        for lam, c in self.terms:
            lam = _canon(lam)
            if sum(lam) != self.degree:
                raise BasisError(f"term {lam} does not have degree {self.degree}")
            if self.basis == "m_aug" and len(lam) > self.aug_n:
                raise BasisError(f"term {lam} too long for m_aug({self.aug_n})")
            acc[lam] = acc.get(lam, Fraction(0)) + Fraction(c)
        terms = tuple(sorted(((k, v) for k, v in acc.items() if v), reverse=True))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, basis: str, degree: int, coeffs: Mapping[Partition, object], aug_n: int | None = None) -> SymFunc:
        return cls(basis, degree, tuple(coeffs.items()), aug_n)

    @classmethod
    def zero(cls, degree: int, basis: str = "m", aug_n: int | None = None) -> SymFunc:
        return cls(basis, degree, (), aug_n)

    @classmethod
    def single(cls, basis: str, lam: Iterable[int], coeff=1, aug_n: int | None = None) -> SymFunc:
        lam = _canon(lam)
        return cls(basis, sum(lam), ((lam, Fraction(coeff)),), aug_n)

    @property
    def label(self) -> str:
        return f"m_aug({self.aug_n})" if self.basis == "m_aug" else self.basis

    def coeffs(self) -> dict[Partition, Fraction]:
        return dict(self.terms)

    def coeff(self, lam: Iterable[int]) -> Fraction:
        return self.coeffs().get(_canon(lam), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: SymFunc):
        if (self.basis, self.aug_n) != (other.basis, other.aug_n):
            raise BasisError(f"basis mismatch: {self.label} vs {other.label}")
        if self.degree != other.degree:
            raise BasisError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: SymFunc) -> SymFunc:
        self._check_compatible(other)
        return SymFunc(self.basis, self.degree, self.terms + other.terms, self.aug_n)

    def __neg__(self) -> SymFunc:
        return SymFunc(self.basis, self.degree, tuple((k, -v) for k, v in self.terms), self.aug_n)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def __mul__(self, scalar) -> SymFunc:
        if isinstance(scalar, SymFunc):
            return sf_multiply(self, scalar)
        c = Fraction(scalar)
        return SymFunc(self.basis, self.degree, tuple((k, v * c) for k, v in self.terms), self.aug_n)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> SymFunc:
        return self * (1 / Fraction(scalar))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, c in self.terms:
            name = f"{self.basis}{_fmt_partition(lam)}"
            if self.basis == "m_aug":
                name = f"m^{self.aug_n}{_fmt_partition(lam)}"
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}" if mag.denominator == 1 else f"({mag}){name}"
            out.append(f"{sign} {body}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _fmt_partition(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


# ---------------------------------------------------------------------------
# multiplication in the monomial basis

def _monomials(lam: Partition, nvars: int) -> list[tuple[int, ...]]:
    """Distinct exponent vectors in ``nvars`` variables that sort to ``lam``."""
    if len(lam) > nvars:
        return []
    counts = Counter(lam + (0,) * (nvars - len(lam)))
    values = sorted(counts)
    out: list[tuple[int, ...]] = []
    cur: list[int] = []

    def rec():
        if len(cur) == nvars:
            out.append(tuple(cur))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                cur.append(v)
                rec()
                cur.pop()
                counts[v] += 1

    rec()
    return out


@lru_cache(maxsize=4096)
def _monomials_cached(lam: Partition, nvars: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_monomials(lam, nvars))


def _mul_dicts(f: Mapping[Partition, Fraction], df: int, g: Mapping[Partition, Fraction], dg: int,
               nvars: int | None = None) -> dict[Partition, Fraction]:
    d = df + dg if nvars is None else nvars
    out: dict[Partition, Fraction] = {}
    if not f or not g:
        return out
    # coefficient of x^mu (mu a partition padded to d) in f*g
    for mu in _partitions(df + dg, d, df + dg):
        mu_p = mu + (0,) * (d - len(mu))
        total = Fraction(0)
        for lam, a in f.items():
            if len(lam) > d:
                continue
            for alpha in _monomials_cached(lam, d):
                rest = tuple(m - x for m, x in zip(mu_p, alpha))
                if any(r < 0 for r in rest):
                    continue
                b = g.get(_canon(rest))
                if b:
                    total += a * b
        if total:
            out[mu] = total
    return out


def sf_multiply(f: SymFunc, g: SymFunc, nvars: int | None = None) -> SymFunc:
    """Product of two m-basis functions, by expansion in ``nvars`` variables
    (default deg f + deg g, which is always enough)."""
    if f.basis != "m" or g.basis != "m":
        raise BasisError(f"sf_multiply needs m-basis inputs, got {f.label} and {g.label}")
    return SymFunc.from_dict("m", f.degree + g.degree, _mul_dicts(f.coeffs(), f.degree, g.coeffs(), g.degree, nvars))


# ---------------------------------------------------------------------------
# expansions of basis elements in m

def _product_of_m(factors: Iterable[Partition]) -> dict[Partition, Fraction]:
    acc: dict[Partition, Fraction] = {(): Fraction(1)}
    deg = 0
    for lam in factors:
        acc = _mul_dicts(acc, deg, {lam: Fraction(1)}, sum(lam))
        deg += sum(lam)
    return acc


@lru_cache(maxsize=None)
def p_in_m(lam: Partition) -> dict[Partition, Fraction]:
    return _product_of_m(((part,) for part in lam))


@lru_cache(maxsize=None)
def e_in_m(lam: Partition) -> dict[Partition, Fraction]:
    return _product_of_m(((1,) * part for part in lam))


@lru_cache(maxsize=None)
def s_in_e(lam: Partition) -> dict[Partition, int]:
    """Dual Jacobi-Trudi: s_lam = det(e_{lam'_i - i + j}), as a signed sum of e-products."""
    conj = conjugate(lam)
    size = len(conj)
    out: Counter = Counter()

    def expand(row: int, used: int, sign: int, parts: tuple[int, ...]):
        if row == size:
            key = _canon(parts)
            out[key] += sign
            return
        # columns are tried in order; the sign tracks inversions
        for col in range(size):
            if used >> col & 1:
                continue
            idx = conj[row] - row + col
            if idx < 0:
                continue
            inv = bin(used >> col).count("1")  # earlier-used columns to the right of col
            expand(row + 1, used | 1 << col, -sign if inv % 2 else sign, parts + (idx,))

    expand(0, 0, 1, ())
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def s_in_m(lam: Partition) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for mu, c in s_in_e(lam).items():
        for nu, d in e_in_m(mu).items():
            out[nu] = out.get(nu, Fraction(0)) + c * d
    return {k: v for k, v in out.items() if v}


_IN_M = {"p": p_in_m, "e": e_in_m, "s": s_in_m}


# ---------------------------------------------------------------------------
# basis changes

def _to_m(f: SymFunc) -> dict[Partition, Fraction]:
    if f.basis == "m":
        return f.coeffs()
    if f.basis == "m_aug":
        return {lam: c * augmented_scale(lam, f.aug_n) for lam, c in f.terms}
    expand = _IN_M[f.basis]
    out: dict[Partition, Fraction] = {}
    for lam, c in f.terms:
        for mu, d in expand(lam).items():
            out[mu] = out.get(mu, Fraction(0)) + c * d
    return out


def _peel(coeffs: dict[Partition, Fraction], target: str) -> dict[Partition, Fraction]:
    """Triangular back-substitution from m into p, e or s."""
    rest = {k: v for k, v in coeffs.items() if v}
    out: dict[Partition, Fraction] = {}
    while rest:
        if target == "p":
            # p_lam = prod r_i(lam)! m_lam + (terms coarser than lam)
            lam = min(rest)
            pivot, lead = lam, math.prod(math.factorial(r) for r in Counter(lam).values())
        elif target == "e":
            # e_{lam'} = m_lam + (terms dominated by lam)
            lam = max(rest)
            pivot, lead = conjugate(lam), 1
        else:
            # s_lam = m_lam + (terms dominated by lam)
            lam = max(rest)
            pivot, lead = lam, 1
        c = rest[lam] / lead
        out[pivot] = out.get(pivot, Fraction(0)) + c
        for mu, d in _IN_M[target](pivot).items():
            v = rest.get(mu, Fraction(0)) - c * d
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return out


def change_basis(f: SymFunc, to: str, aug_n: int | None = None) -> SymFunc:
    """Re-express ``f`` in basis ``to`` (``"m_aug"`` needs ``aug_n``;
    ``"m_aug(4)"`` style labels are accepted too)."""
    to, aug_n = _parse_basis(to, aug_n)
    if (f.basis, f.aug_n) == (to, aug_n):
        return f
    m = _to_m(f)
    if to == "m":
        coeffs = m
    elif to == "m_aug":
        coeffs = {}
        for lam, c in m.items():
            if len(lam) > aug_n:
                raise BasisError(f"term {lam} has more than {aug_n} parts; not expressible in m_aug({aug_n})")
            coeffs[lam] = c / augmented_scale(lam, aug_n)
    else:
        coeffs = _peel(m, to)
    return SymFunc.from_dict(to, f.degree, coeffs, aug_n)


def _parse_basis(name: str, aug_n: int | None = None) -> tuple[str, int | None]:
    if name.startswith("m_aug(") and name.endswith(")"):
        return "m_aug", int(name[6:-1])
    if name in ("maug", "m_aug"):
        if aug_n is None:
            raise BasisError("m_aug basis needs its parameter n")
        return "m_aug", aug_n
    if name not in BASES:
        raise BasisError(f"unknown basis {name!r}")
    return name, None


def omega(f: SymFunc) -> SymFunc:
    """The involution p_lam -> (-1)^{|lam|-l(lam)} p_lam.

    The result is in the input basis, except that m_aug input comes back in m.
    """
    p = change_basis(f, "p")
    flipped = SymFunc("p", f.degree, tuple((lam, -c if (f.degree - len(lam)) % 2 else c) for lam, c in p.terms))
    back = "m" if f.basis == "m_aug" else f.basis
    return change_basis(flipped, back)


def equal(f: SymFunc, g: SymFunc) -> bool:
    """Equality as symmetric functions, whatever the bases."""
    if f.degree != g.degree:
        return f.is_zero() and g.is_zero()
    return _clean(_to_m(f)) == _clean(_to_m(g))


def _clean(d: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
    return {k: v for k, v in d.items() if v}


# ---------------------------------------------------------------------------
# linear algebra and sign reports

def fraction_rank(rows: list[list[Fraction]]) -> int:
    mat = [list(r) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                factor = mat[i][col] / pr[col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], pr)]
        rank += 1
    return rank


def rank(fs: list[SymFunc]) -> int:
    """Dimension over Q of the span of ``fs`` (all of one degree)."""
    if not fs:
        return 0
    degs = {f.degree for f in fs if not f.is_zero()}
    if len(degs) > 1:
        raise PreconditionError(f"rank needs functions of one degree, got {sorted(degs)}")
    ms = [_to_m(f) for f in fs]
    keys = sorted({k for m in ms for k in m}, reverse=True)
    return fraction_rank([[m.get(k, Fraction(0)) for k in keys] for m in ms])


def monotone_in(f: SymFunc, basis: str = "m", aug_n: int | None = None) -> str:
    """'nonneg', 'nonpos', 'mixed' or 'zero' for the coefficients in ``basis``."""
    coeffs = [c for _, c in change_basis(f, basis, aug_n).terms]
    if not coeffs:
        return "zero"
    if all(c > 0 for c in coeffs):
        return "nonneg"
    if all(c < 0 for c in coeffs):
        return "nonpos"
    return "mixed"


# ---------------------------------------------------------------------------
# serialization

def to_record(f: SymFunc) -> dict:
    return {
        "basis": f.label,
        "degree": f.degree,
        "terms": [
            {"partition": list(lam), "num": str(c.numerator), "den": str(c.denominator)}
            for lam, c in f.terms
        ],
    }


def from_record(rec: Mapping) -> SymFunc:
    basis, aug_n = _parse_basis(rec["basis"])
    terms = tuple(
        (tuple(t["partition"]), Fraction(int(t["num"]), int(t["den"])))
        for t in rec["terms"]
    )
    return SymFunc(basis, int(rec["degree"]), terms, aug_n)
