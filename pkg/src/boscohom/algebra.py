"""Exact arithmetic in GF(2)(u_f, z_v).

A :class:`RationalFunction` is kept as

    monomial * prod(numerator factors) / prod(denominator factors)

where the monomial may carry negative exponents and every factor is a
polynomial with no monomial content.  Products and inverses only shuffle
factor multisets; sums expand into a single new numerator factor and then
try to divide out the denominator factors.  There is no multivariate GCD, so
two equal values need not share a representation: compare with ``==``,
which tests ``a + b == 0``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, SpecializationSingular, UnitCircuit
from .poly import (
    pack,
    poly_divide,
    poly_mul,
    poly_pow,
    poly_shift,
    poly_str,
    poly_substitute,
    strip_content,
    u_divmod,
    u_gcd,
    u_mul,
    u_str,
    unpack,
)

# ---------------------------------------------------------------------------
# variables and Laurent monomials


@dataclass(frozen=True)
class VariableTable:
    """Face variables ``u_f`` and vertex variables ``z_v`` of a black graph.

    One face and one vertex are omitted; their variables are the inverse
    product of the others.  Index order is faces first, then vertices,
    each by id.
    """

    faces: tuple[int, ...]
    vertices: tuple[int, ...]
    omitted_face: int
    omitted_vertex: int

    @property
    def face_vars(self) -> tuple[int, ...]:
        return tuple(f for f in self.faces if f != self.omitted_face)

    @property
    def vertex_vars(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v != self.omitted_vertex)

    def __len__(self) -> int:
        return len(self.face_vars) + len(self.vertex_vars)

    def face_index(self, f: int) -> int:
        return self.face_vars.index(f)

    def vertex_index(self, v: int) -> int:
        return len(self.face_vars) + self.vertex_vars.index(v)

    def names(self) -> list[str]:
        return [f"u{f}" for f in self.face_vars] + [f"z{v}" for v in self.vertex_vars]

    def face_product(self, faces: Iterable[int]) -> "LaurentMonomial":
        """prod(u_f) over ``faces``, eliminating the omitted face."""
        return self._product(faces, self.faces, self.omitted_face, self.face_index)

    def vertex_product(self, vertices: Iterable[int]) -> "LaurentMonomial":
        """prod(z_v) over ``vertices``, eliminating the omitted vertex."""
        return self._product(vertices, self.vertices, self.omitted_vertex, self.vertex_index)

    @staticmethod
    def _product(items, universe, omitted, index) -> "LaurentMonomial":
        items = set(items)
        if omitted in items:
            # prod over a set containing the omitted one == inverse of the complement
            return LaurentMonomial({index(x): -1 for x in universe if x not in items})
        return LaurentMonomial({index(x): 1 for x in items})


class LaurentMonomial:
    """A monomial with signed integer exponents, keyed by variable index."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Mapping[int, int] | None = None):
        self.exponents = {v: e for v, e in (exponents or {}).items() if e}

    def is_one(self) -> bool:
        return not self.exponents

    def __mul__(self, other: "LaurentMonomial") -> "LaurentMonomial":
        out = dict(self.exponents)
        for v, e in other.exponents.items():
            out[v] = out.get(v, 0) + e
        return LaurentMonomial(out)

    def inverse(self) -> "LaurentMonomial":
        return LaurentMonomial({v: -e for v, e in self.exponents.items()})

    def split(self) -> tuple[int, int]:
        """Packed (positive part, negative part) with disjoint supports."""
        pos = pack((v, e) for v, e in self.exponents.items() if e > 0)
        neg = pack((v, -e) for v, e in self.exponents.items() if e < 0)
        return pos, neg

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentMonomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(frozenset(self.exponents.items()))

    def __repr__(self) -> str:
        return f"LaurentMonomial({dict(sorted(self.exponents.items()))})"

    def render(self, names: Sequence[str]) -> str:
        if not self.exponents:
            return "1"
        return "*".join(
            names[v] if e == 1 else f"{names[v]}^{e}" for v, e in sorted(self.exponents.items())
        )


def _mono_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for v, e in b.items():
        s = out.get(v, 0) + sign * e
        if s:
            out[v] = s
        else:
            out.pop(v, None)
    return out


# ---------------------------------------------------------------------------
# rational functions

ONE_TERMS = frozenset((0,))


def _clean(c: Counter) -> Counter:
    return Counter({k: m for k, m in c.items() if m > 0})


def _expand(factors: Mapping[frozenset, int]) -> frozenset:
    out = ONE_TERMS
    for f, k in sorted(factors.items(), key=lambda kv: len(kv[0])):
        out = poly_mul(out, poly_pow(f, k))
    return out


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """monomial * prod(num) / prod(den); ``num is None`` encodes zero."""

    mono: Mapping[int, int] = field(default_factory=dict)
    num: Counter | None = field(default_factory=Counter)
    den: Counter = field(default_factory=Counter)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls({}, None, Counter())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls({}, Counter(), Counter())

    @classmethod
    def from_monomial(cls, m: LaurentMonomial) -> "RationalFunction":
        return cls(dict(m.exponents), Counter(), Counter())

    @classmethod
    def from_terms(cls, terms: Iterable[int]) -> "RationalFunction":
        """A polynomial given by packed monomials."""
        terms = frozenset(terms)
        if not terms:
            return cls.zero()
        c, p = strip_content(terms)
        num = Counter() if p == ONE_TERMS else Counter({p: 1})
        return cls(unpack(c), num, Counter())

    @classmethod
    def one_over_one_plus(cls, m: LaurentMonomial) -> "RationalFunction":
        """1 / (1 + m) with m != 1."""
        if m.is_one():
            raise UnitCircuit("1/(1+m) with m == 1")
        pos, neg = m.split()
        # 1 + m = (neg + pos) / neg
        return cls(unpack(neg), Counter(), Counter({frozenset((pos, neg)): 1}))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num is None

    def __bool__(self) -> bool:
        return self.num is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self + other).is_zero()

    __hash__ = None

    def size(self) -> int:
        """Pivot cost: numerator terms times denominator factor count."""
        if self.num is None:
            return 0
        nterms = 1
        for f, k in self.num.items():
            nterms *= len(f) ** k
        return nterms * max(1, sum(self.den.values()))

    # arithmetic ---------------------------------------------------------
    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num is None or other.num is None:
            return RationalFunction.zero()
        num = self.num + other.num
        den = self.den + other.den
        common = num & den
        return RationalFunction(_mono_add(self.mono, other.mono), num - common, den - common)

    def inverse(self) -> "RationalFunction":
        if self.num is None:
            raise DivisionByZero("inverse of zero")
        return RationalFunction({v: -e for v, e in self.mono.items()}, Counter(self.den), Counter(self.num))

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inverse()

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.num is None:
            return other
        if other.num is None:
            return self
        common_num = self.num & other.num
        den = self.den | other.den
        base = {v: min(self.mono.get(v, 0), other.mono.get(v, 0)) for v in set(self.mono) | set(other.mono)}
        base = {v: e for v, e in base.items() if e}
        pa = self._cofactor(common_num, den, base)
        pb = other._cofactor(common_num, den, base)
        total = pa ^ pb
        if not total:
            return RationalFunction.zero()
        c, p = strip_content(total)
        mono = _mono_add(base, unpack(c))
        den = Counter(den)
        for f in sorted(den, key=len):
            while den[f] and len(p) > 1:
                q = poly_divide(p, f, exact=False)
                if q is None:
                    break
                p = q
                den[f] -= 1
        num = Counter(common_num)
        if p != ONE_TERMS:
            num[p] += 1
        return RationalFunction(mono, num, _clean(den))

    __sub__ = __add__

    def _cofactor(self, common_num, den, base) -> frozenset:
        shift = pack((v, e - base.get(v, 0)) for v, e in self.mono.items() if e - base.get(v, 0))
        shift += pack((v, -e) for v, e in base.items() if v not in self.mono)
        out = _expand(self.num - common_num)
        out = poly_mul(out, _expand(den - self.den))
        return poly_shift(out, shift)

    def __neg__(self) -> "RationalFunction":
        return self

    # views ----------------------------------------------------------------
    def numerator_terms(self) -> frozenset:
        """Expanded numerator after moving negative exponents to the denominator."""
        if self.num is None:
            return frozenset()
        pos = pack((v, e) for v, e in self.mono.items() if e > 0)
        return poly_shift(_expand(self.num), pos)

    def denominator_terms(self) -> frozenset:
        neg = pack((v, -e) for v, e in self.mono.items() if e < 0)
        return poly_shift(_expand(self.den), neg)

    def render(self, names: Sequence[str]) -> str:
        """Stable ``num / den`` text with the denominator left factored."""
        if self.num is None:
            return "0"
        pos = {v: e for v, e in self.mono.items() if e > 0}
        neg = {v: -e for v, e in self.mono.items() if e < 0}
        num_parts = [LaurentMonomial(pos).render(names)] if pos else []
        num_parts += _render_factors(self.num, names)
        den_parts = [LaurentMonomial(neg).render(names)] if neg else []
        den_parts += _render_factors(self.den, names)
        num_s = "*".join(num_parts) or "1"
        if not den_parts:
            return num_s
        return f"{num_s} / {'*'.join(den_parts)}"

    def __repr__(self) -> str:
        names = [f"x{i}" for i in range(self.max_var() + 1)]
        return f"RationalFunction({self.render(names)})"

    def max_var(self) -> int:
        vs = list(self.mono)
        for c in (self.num or {}, self.den):
            for f in c:
                for m in f:
                    vs.extend(unpack(m))
        return max(vs, default=-1)


def _render_factors(factors: Mapping[frozenset, int], names) -> list[str]:
    parts = []
    for f, k in sorted(factors.items(), key=lambda kv: (len(kv[0]), poly_str(kv[0], names))):
        s = f"({poly_str(f, names)})"
        parts.append(s if k == 1 else f"{s}^{k}")
    return parts


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_inv(a: RationalFunction) -> RationalFunction:
    return a.inverse()


def rf_is_zero(a: RationalFunction) -> bool:
    return a.is_zero()


def psi_coeff(alpha: LaurentMonomial, beta: LaurentMonomial) -> RationalFunction:
    """1/(1 + alpha) + 1/(1 + beta)."""
    if alpha.is_one() or beta.is_one():
        raise UnitCircuit(f"trivial circuit monomial: alpha={alpha}, beta={beta}")
    return RationalFunction.one_over_one_plus(alpha) + RationalFunction.one_over_one_plus(beta)


# ---------------------------------------------------------------------------
# specialization to GF(2)(t)


@dataclass(frozen=True)
class UnivariateRationalFunction:
    """num/den in GF(2)(t), reduced, as bit-vector polynomials."""

    num: int
    den: int = 1

    def __post_init__(self):
        if not self.den:
            raise DivisionByZero("zero denominator")

    @classmethod
    def make(cls, num: int, den: int) -> "UnivariateRationalFunction":
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return cls(0, 1)
        g = u_gcd(num, den)
        if g != 1:
            num = u_divmod(num, g)[0]
            den = u_divmod(den, g)[0]
        return cls(num, den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        if self.den == other.den:
            return UnivariateRationalFunction.make(self.num ^ other.num, self.den)
        return UnivariateRationalFunction.make(
            u_mul(self.num, other.den) ^ u_mul(other.num, self.den), u_mul(self.den, other.den)
        )

    __sub__ = __add__

    def __mul__(self, other):
        if not self.num or not other.num:
            return UnivariateRationalFunction(0, 1)
        return UnivariateRationalFunction.make(u_mul(self.num, other.num), u_mul(self.den, other.den))

    def inverse(self):
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return UnivariateRationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * other.inverse()

    def size(self) -> int:
        return self.num.bit_length() + self.den.bit_length()

    def render(self) -> str:
        if self.den == 1:
            return u_str(self.num)
        return f"({u_str(self.num)}) / ({u_str(self.den)})"

    def __repr__(self) -> str:
        return f"URF({self.render()})"


def specialize(a: RationalFunction, spec: Mapping[int, int]) -> UnivariateRationalFunction:
    """Substitute each variable ``i`` by ``t**spec[i]``.

    Raises :class:`SpecializationSingular` when a denominator factor
    vanishes.
    """
    if a.num is None:
        return UnivariateRationalFunction(0, 1)
    num, den = 1, 1
    for f, k in a.den.items():
        s = poly_substitute(f, spec)
        if not s:
            raise SpecializationSingular("denominator factor vanishes under specialization")
        for _ in range(k):
            den = u_mul(den, s)
    for f, k in a.num.items():
        s = poly_substitute(f, spec)
        if not s:
            return UnivariateRationalFunction(0, 1)
        for _ in range(k):
            num = u_mul(num, s)
    shift = sum(e * spec[v] for v, e in a.mono.items())
    if shift >= 0:
        num <<= shift
    else:
        den <<= -shift
    return UnivariateRationalFunction.make(num, den)


def draw_specialization(nvars: int, rng: random.Random) -> dict[int, int]:
    """Exponents for each variable, uniform in [1, 10 * nvars]."""
    hi = max(1, 10 * nvars)
    return {i: rng.randint(1, hi) for i in range(nvars)}
