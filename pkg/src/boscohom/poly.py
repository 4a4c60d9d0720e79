"""Sparse polynomials over GF(2).

Multivariate polynomials store each monomial as one packed Python integer:
variable ``i`` occupies the bit field ``[FIELD*i, FIELD*(i+1))``.  With
non-negative exponents, multiplying monomials is integer addition and
comparing packed integers is a lexicographic monomial order, which is all
the division algorithm needs.  Since every coefficient is 1, a polynomial is
just the set of its monomials and addition is symmetric difference.

Univariate polynomials in ``t`` are plain integers read as bit vectors
(bit ``k`` is the coefficient of ``t**k``).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

FIELD = 32
_MASK = (1 << FIELD) - 1
_HALF = 1 << (FIELD - 1)


class ExactDivisionError(ArithmeticError):
    """A division that had to be exact left a nonzero remainder."""


def pack(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> int:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    m = 0
    for var, e in items:
        if e < 0 or e >= _HALF:
            raise ValueError(f"exponent {e} out of packable range")
        m += e << (FIELD * var)
    return m


def unpack(m: int) -> dict[int, int]:
    out = {}
    var = 0
    while m:
        e = m & _MASK
        if e:
            out[var] = e
        m >>= FIELD
        var += 1
    return out


def mono_degree(m: int) -> int:
    d = 0
    while m:
        d += m & _MASK
        m >>= FIELD
    return d


def _guard(m: int) -> int:
    # a guard bit on top of every field that m occupies
    g = 0
    var = 0
    while m >> (FIELD * var):
        g |= _HALF << (FIELD * var)
        var += 1
    return g


def mono_divides(d: int, m: int) -> bool:
    """True when monomial ``d`` divides monomial ``m``."""
    if d > m:
        return False
    g = _guard(m)
    return ((m | g) - d) & g == g


def mono_gcd(a: int, b: int) -> int:
    out = 0
    shift = 0
    while a and b:
        out |= min(a & _MASK, b & _MASK) << shift
        a >>= FIELD
        b >>= FIELD
        shift += FIELD
    return out


def grlex_key(m: int) -> tuple:
    """Sort key for the graded-lexicographic order (lowest variable first)."""
    exps = []
    while m:
        exps.append(m & _MASK)
        m >>= FIELD
    return (sum(exps), tuple(reversed(exps)) if exps else ())


# ---------------------------------------------------------------------------
# multivariate


@dataclass(frozen=True)
class Polynomial2:
    """A polynomial over GF(2) with non-negative exponents."""

    terms: frozenset = frozenset()

    @classmethod
    def one(cls) -> "Polynomial2":
        return cls(frozenset((0,)))

    @classmethod
    def monomial(cls, exponents) -> "Polynomial2":
        return cls(frozenset((pack(exponents),)))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "Polynomial2") -> "Polynomial2":
        return Polynomial2(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Polynomial2") -> "Polynomial2":
        return Polynomial2(poly_mul(self.terms, other.terms))

    def divexact(self, other: "Polynomial2") -> "Polynomial2":
        return Polynomial2(poly_divexact(self.terms, other.terms))

    def is_one(self) -> bool:
        return self.terms == frozenset((0,))

    def sorted_terms(self) -> list[int]:
        return sorted(self.terms, key=grlex_key, reverse=True)


def poly_mul(a: frozenset, b: frozenset) -> frozenset:
    if not a or not b:
        return frozenset()
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        (s,) = a
        return frozenset(s + t for t in b) if s else b
    acc: set = set()
    for s in a:
        acc.symmetric_difference_update([s + t for t in b])
    return frozenset(acc)


def poly_shift(a: frozenset, m: int) -> frozenset:
    if not m:
        return a
    return frozenset(s + m for s in a)


def poly_pow(a: frozenset, k: int) -> frozenset:
    out = frozenset((0,))
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_content(a: frozenset) -> int:
    """Largest monomial dividing every term."""
    it = iter(a)
    g = next(it)
    for m in it:
        if not g:
            break
        g = mono_gcd(g, m)
    return g


def strip_content(a: frozenset) -> tuple[int, frozenset]:
    g = poly_content(a)
    if not g:
        return 0, a
    return g, frozenset(m - g for m in a)


_FILTER_WEIGHTS = tuple(random.Random(0x9E3779B9).randint(1, 61) for _ in range(512))


def _may_divide(a: frozenset, d: frozenset) -> bool:
    """False only if ``d`` certainly does not divide ``a``.

    Substituting ``x_i -> t**w_i`` is a ring map, so a divisor stays a
    divisor of the univariate images unless the image of ``d`` vanishes.
    """
    sd = poly_substitute(d, _FILTER_WEIGHTS)
    if not sd:
        return True
    return u_divmod(poly_substitute(a, _FILTER_WEIGHTS), sd)[1] == 0


def poly_divide(a: frozenset, d: frozenset, exact: bool = True):
    """Divide ``a`` by ``d``.

    Returns the quotient when ``d`` divides ``a``.  Otherwise raises
    :class:`ExactDivisionError` when ``exact`` is set and returns ``None``
    when it is not.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return frozenset()
    if len(d) == 1:
        (lm,) = d
        if not lm:
            return a
        if all(mono_divides(lm, m) for m in a):
            return frozenset(m - lm for m in a)
        if exact:
            raise ExactDivisionError("monomial does not divide polynomial")
        return None
    if not exact:
        if len(a) < 2 or not _may_divide(a, d):
            return None
    lead = max(d)
    rest = [m - lead for m in d if m != lead]
    rem = set(a)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quot = []
    while rem:
        top = -heapq.heappop(heap)
        if top not in rem:
            continue
        if not mono_divides(lead, top):
            if exact:
                raise ExactDivisionError("nonzero remainder in exact division")
            return None
        q = top - lead
        quot.append(q)
        rem.discard(top)
        for r in rest:
            t = q + lead + r
            if t in rem:
                rem.discard(t)
            else:
                rem.add(t)
                heapq.heappush(heap, -t)
    return frozenset(quot)


def poly_divexact(a: frozenset, d: frozenset) -> frozenset:
    return poly_divide(a, d, exact=True)


def poly_substitute(a: frozenset, powers: Mapping[int, int]) -> int:
    """Evaluate at ``x_i = t**powers[i]``; returns a univariate bit vector."""
    out = 0
    for m in a:
        k = 0
        var = 0
        while m:
            e = m & _MASK
            if e:
                k += e * powers[var]
            m >>= FIELD
            var += 1
        out ^= 1 << k
    return out


def poly_str(a: frozenset, names) -> str:
    if not a:
        return "0"
    parts = []
    for m in sorted(a, key=grlex_key, reverse=True):
        exps = unpack(m)
        if not exps:
            parts.append("1")
            continue
        parts.append("*".join(names[v] if e == 1 else f"{names[v]}^{e}" for v, e in sorted(exps.items())))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# univariate, GF(2)[t] as int bit vectors


def u_deg(a: int) -> int:
    return a.bit_length() - 1


def u_mul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def u_divmod(a: int, b: int) -> tuple[int, int]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial in GF(2)[t]")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        a ^= b << s
        q |= 1 << s
    return q, a


def u_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, u_divmod(a, b)[1]
    return a


def u_str(a: int, var: str = "t") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(a.bit_length() - 1, -1, -1):
        if a >> k & 1:
            parts.append("1" if k == 0 else var if k == 1 else f"{var}^{k}")
    return " + ".join(parts)
