"""Exact arithmetic over GF(2^k) and rational function fields GF(2^k)(x_1, ..., x_m).

Finite field elements are ints whose bits are the coefficients of a
polynomial over GF(2), reduced modulo an irreducible polynomial.

Polynomials are sparse maps from exponent tuples to nonzero coefficients.
The term order is right-to-left lexicographic (the last variable is the
most significant), which is also the order used on the value group of
monomial valuations, so the leading term of a polynomial is the term of
least value.
"""

from __future__ import annotations

import random
import re
from functools import cached_property
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Exps = Tuple[int, ...]


class ZeroDenominator(ZeroDivisionError):
    pass


class ValuationOfZero(ValueError):
    pass


class PoleAtPoint(ZeroDivisionError):
    """The denominator vanishes at the requested point; resample."""


# Irreducible moduli, keyed by extension degree.
DEFAULT_MODULI: Dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    16: 0x1002D,
    32: 0x10000008D,
}


def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _polymod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


def is_irreducible_gf2(m: int) -> bool:
    """Rabin's test for a polynomial over GF(2) given as a bitmask."""
    k = m.bit_length() - 1
    if k < 1:
        return False
    if k == 1:
        return True

    def xpow2j(j: int) -> int:
        # x^(2^j) mod m
        r = 0b10
        for _ in range(j):
            r = _polymod(_clmul(r, r), m)
        return r

    if xpow2j(k) != _polymod(0b10, m):
        return False
    primes = {p for p in range(2, k + 1) if k % p == 0 and all(p % d for d in range(2, p))}
    for p in primes:
        if _polygcd(m, xpow2j(k // p) ^ 0b10) != 1:
            return False
    return True


class FiniteField:
    """GF(2^k) with elements encoded as ints in ``range(2**k)``."""

    def __init__(self, k: int, modulus: int | None = None) -> None:
        if k < 1:
            raise ValueError("extension degree must be positive")
        if modulus is None:
            if k not in DEFAULT_MODULI:
                raise ValueError(f"no default modulus for k={k}")
            modulus = DEFAULT_MODULI[k]
        if modulus.bit_length() - 1 != k or not is_irreducible_gf2(modulus):
            raise ValueError(f"modulus {modulus:#x} is not irreducible of degree {k}")
        self.k = k
        self.modulus = modulus
        self.q = 1 << k
        self._table = None
        if k <= 6:
            q = self.q
            self._table = [[_polymod(_clmul(a, b), modulus) for b in range(q)] for a in range(q)]

    def __repr__(self) -> str:
        return f"GF(2^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.k, self.modulus))

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return _polymod(_clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self.pow(a, self.q - 2)

    def sqrt(self, a: int) -> int:
        return self.pow(a, self.q >> 1)

    def trace(self, a: int) -> int:
        t, x = 0, a
        for _ in range(self.k):
            t ^= x
            x = self.mul(x, x)
        return t

    def elements(self) -> range:
        return range(self.q)

    def random(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.q)

    def in_artin_schreier_image(self, c: int) -> bool:
        """True iff u^2 + u = c has a solution (trace criterion)."""
        return self.trace(c) == 0

    def artin_schreier_rep(self, c: int) -> int:
        """Canonical representative of c modulo u^2 + u: 0 or the least element of the class."""
        if self.trace(c) == 0:
            return 0
        for d in range(1, self.q):
            if self.trace(d) == 1:
                return d
        raise AssertionError("unreachable")


GF2 = FiniteField(1)


def in_artin_schreier_image(c: int, field: FiniteField, exhaustive: bool = False) -> bool:
    if exhaustive:
        return any(field.mul(u, u) ^ u == c for u in field.elements())
    return field.in_artin_schreier_image(c)


def rtl_key(e: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(e))


class Poly:
    """Sparse polynomial over ``ring.field`` in the variables ``ring.names``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "RationalFunctionField", terms: Mapping[Exps, int] | None = None) -> None:
        self.ring = ring
        self.terms: Dict[Exps, int] = {e: c for e, c in (terms or {}).items() if c}

    # construction helpers
    def _new(self, terms: Dict[Exps, int]) -> "Poly":
        p = Poly.__new__(Poly)
        p.ring = self.ring
        p.terms = terms
        return p

    def _check(self, other: "Poly") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms and self.ring == other.ring

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, 0) ^ c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return self._new(t)

    __sub__ = __add__

    def __neg__(self) -> "Poly":
        return self

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        mul = self.ring.field.mul
        t: Dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) ^ mul(c1, c2)
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return self._new(t)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return self._new({})
        mul = self.ring.field.mul
        return self._new({e: mul(v, c) for e, v in self.terms.items()})

    def shift(self, d: Sequence[int]) -> "Poly":
        """Multiply by the monomial x^d (d may be negative if the result stays polynomial)."""
        return self._new({tuple(a + b for a, b in zip(e, d)): c for e, c in self.terms.items()})

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r, b = self.ring.poly_one(), self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def lead_exp(self) -> Exps:
        return max(self.terms, key=rtl_key)

    def lead_coeff(self) -> int:
        return self.terms[self.lead_exp()]

    def min_exps(self) -> Exps:
        return tuple(min(col) for col in zip(*self.terms))

    def degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def coeffs_in(self, i: int) -> Dict[int, "Poly"]:
        out: Dict[int, Dict[Exps, int]] = {}
        for e, c in self.terms.items():
            out.setdefault(e[i], {})[e[:i] + (0,) + e[i + 1:]] = c
        return {d: self._new(t) for d, t in out.items()}

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        """Division by a single polynomial: self = q*other + r, no term of r divisible by lead(other)."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        lb = other.lead_exp()
        lcinv = field.inv(other.terms[lb])
        q: Dict[Exps, int] = {}
        rem: Dict[Exps, int] = {}
        r = dict(self.terms)
        while r:
            lt = max(r, key=rtl_key)
            c = r[lt]
            if all(a >= b for a, b in zip(lt, lb)):
                d = tuple(a - b for a, b in zip(lt, lb))
                f = field.mul(c, lcinv)
                q[d] = q.get(d, 0) ^ f
                for e, v in other.terms.items():
                    ee = tuple(a + b for a, b in zip(e, d))
                    nv = r.get(ee, 0) ^ field.mul(v, f)
                    if nv:
                        r[ee] = nv
                    else:
                        r.pop(ee, None)
            else:
                rem[lt] = c
                del r[lt]
        return self._new({e: c for e, c in q.items() if c}), self._new(rem)

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def gcd(self, other: "Poly") -> "Poly":
        self._check(other)
        return poly_gcd(self, other)

    def evaluate(self, values: Sequence[int], field: FiniteField) -> int:
        if self.ring.field != field and self.ring.field != GF2:
            raise ValueError(f"cannot evaluate {self.ring.field} coefficients in {field}")
        mul = field.mul
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v = mul(v, field.pow(x, k))
            total ^= v
        return total

    def __repr__(self) -> str:
        return self.ring.format_poly(self)


def _content_in(p: Poly, i: int) -> Poly:
    g = None
    for c in p.coeffs_in(i).values():
        g = c if g is None else poly_gcd(g, c)
        if g.is_constant():
            break
    return g


def _prem(a: Poly, b: Poly, i: int) -> Poly:
    db = b.degree(i)
    lb = b.coeffs_in(i)[db]
    r = a
    while not r.is_zero() and r.degree(i) >= db:
        dr = r.degree(i)
        lr = r.coeffs_in(i)[dr]
        sh = [0] * r.ring.nvars
        sh[i] = dr - db
        r = lb * r + lr * b.shift(sh)
    return r


def _primitive(p: Poly, i: int) -> Poly:
    return p.exact_div(_content_in(p, i))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two polynomials (recursive primitive remainder sequences)."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    ma, mb = a.min_exps(), b.min_exps()
    mono = tuple(min(x, y) for x, y in zip(ma, mb))
    a = a.shift([-x for x in ma])
    b = b.shift([-x for x in mb])
    return _gcd_no_monomial(a, b).shift(mono).monic()


def _gcd_no_monomial(a: Poly, b: Poly) -> Poly:
    one = a.ring.poly_one()
    if a.is_constant() or b.is_constant():
        return one
    n = a.ring.nvars
    i = max(j for j in range(n) if a.degree(j) > 0 or b.degree(j) > 0)
    if b.degree(i) <= 0:
        return poly_gcd(_content_in(a, i), b)
    if a.degree(i) <= 0:
        return poly_gcd(a, _content_in(b, i))
    ca, cb = _content_in(a, i), _content_in(b, i)
    gc = poly_gcd(ca, cb)
    pa, pb = a.exact_div(ca), b.exact_div(cb)
    if pa.degree(i) < pb.degree(i):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb, i)
        if r.is_zero():
            break
        if r.degree(i) <= 0:
            pb = one
            break
        pa, pb = pb, _primitive(r, i)
    return gc * _primitive(pb, i) if not pb.is_constant() else gc


class FieldElement:
    """Element num/den of a rational function field, kept in canonical form.

    The numerator and denominator are coprime and the denominator's leading
    term (least value under the monomial valuation) has coefficient 1.
    """

    __slots__ = ("num", "den", "__weakref__")

    def __init__(self, num: Poly, den: Poly | None = None, *, _normalized: bool = False) -> None:
        if den is None:
            den = num.ring.poly_one()
        if _normalized:
            self.num, self.den = num, den
            return
        self.num, self.den = fe_normalize_parts(num, den)

    @property
    def ring(self) -> "RationalFunctionField":
        return self.num.ring

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_constant() and self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_laurent(self) -> bool:
        """Denominator is a monomial."""
        return self.den.is_monomial()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        return isinstance(other, FieldElement) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ring != self.ring:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return FieldElement(self.num + other.num, self.den)
        return FieldElement(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "FieldElement":
        return self

    def __mul__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _cross_mul(self.num, self.den, other.num, other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDenominator("inverse of zero")
        return FieldElement(self.den, self.num)

    def __truediv__(self, other) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDenominator("division by zero")
        return _cross_mul(self.num, self.den, other.den, other.num)

    def __rtruediv__(self, other) -> "FieldElement":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(self.num ** n, self.den ** n, _normalized=True)

    def is_square(self) -> bool:
        """Exact test for being a square (every coefficient of GF(2^k) is a square)."""
        return all(all(x % 2 == 0 for x in e) for p in (self.num, self.den) for e in p.terms)

    def sqrt(self) -> "FieldElement":
        if not self.is_square():
            raise ValueError(f"{self} is not a square")
        f = self.ring.field

        def half(p: Poly) -> Poly:
            return p._new({tuple(x // 2 for x in e): f.sqrt(c) for e, c in p.terms.items()})

        return FieldElement(half(self.num), half(self.den), _normalized=True)

    def laurent_terms(self) -> Dict[Exps, int]:
        """Terms of a Laurent polynomial (monomial denominator) as exponent -> coefficient."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        (de, dc), = self.den.terms.items()
        inv = self.ring.field.inv(dc)
        mul = self.ring.field.mul
        return {tuple(a - b for a, b in zip(e, de)): mul(c, inv) for e, c in self.num.terms.items()}

    def specialize(self, point: Mapping[str, int] | Sequence[int], field: FiniteField) -> int:
        return specialize(self, point, field)

    def __repr__(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return self.ring.format_poly(self.num)
        n = self.ring.format_poly(self.num)
        d = self.ring.format_poly(self.den)
        if len(self.num.terms) > 1:
            n = f"({n})"
        if len(self.den.terms) > 1 or not self.den.is_monomial() or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"


def _cross_mul(a: Poly, b: Poly, c: Poly, d: Poly) -> FieldElement:
    """(a/b)*(c/d) for coprime pairs, cancelling across instead of on the product."""
    if a.is_zero() or c.is_zero():
        return FieldElement(a.ring.poly_zero(), a.ring.poly_one(), _normalized=True)
    g1 = a.ring.poly_one() if d.is_constant() else poly_gcd(a, d)
    g2 = a.ring.poly_one() if b.is_constant() else poly_gcd(c, b)
    if not g1.is_constant():
        a, d = a.exact_div(g1), d.exact_div(g1)
    if not g2.is_constant():
        c, b = c.exact_div(g2), b.exact_div(g2)
    num, den = a * c, b * d
    k = den.lead_coeff()
    if k != 1:
        inv = den.ring.field.inv(k)
        num, den = num.scale(inv), den.scale(inv)
    return FieldElement(num, den, _normalized=True)


def fe_normalize_parts(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return num, den.ring.poly_one()
    if den.is_constant():
        g = None
    elif den.is_monomial():
        e = den.lead_exp()
        m = tuple(min(a, b) for a, b in zip(num.min_exps(), e))
        if any(m):
            neg = [-x for x in m]
            num, den = num.shift(neg), den.shift(neg)
        g = None
    else:
        g = poly_gcd(num, den)
    if g is not None and not g.is_constant():
        num, den = num.exact_div(g), den.exact_div(g)
    c = den.lead_coeff()
    if c != 1:
        inv = den.ring.field.inv(c)
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def fe_normalize(num: Poly, den: Poly) -> FieldElement:
    return FieldElement(num, den)


def specialize(f: FieldElement, point: Mapping[str, int] | Sequence[int], field: FiniteField) -> int:
    """Evaluate f at a point of field^m; raises PoleAtPoint if the denominator vanishes."""
    if isinstance(point, Mapping):
        point = [point[name] for name in f.ring.names]
    d = f.den.evaluate(point, field)
    if d == 0:
        raise PoleAtPoint(f"denominator of {f} vanishes at {list(point)}")
    return field.mul(f.num.evaluate(point, field), field.inv(d))


class RationalFunctionField:
    """The field ``field(names...)`` of rational functions."""

    def __init__(self, names: Iterable[str], field: FiniteField = GF2) -> None:
        self.names: Tuple[str, ...] = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.nvars = len(self.names)

    def __repr__(self) -> str:
        return f"{self.field}({', '.join(self.names)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunctionField) and (self.names, self.field) == (other.names, other.field)

    def __hash__(self) -> int:
        return hash((self.names, self.field))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def poly(self, terms: Mapping[Exps, int]) -> Poly:
        return Poly(self, terms)

    def poly_one(self) -> Poly:
        return Poly(self, {(0,) * self.nvars: 1})

    def poly_zero(self) -> Poly:
        return Poly(self, {})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> FieldElement:
        """x^exps with possibly negative exponents."""
        pos = tuple(max(e, 0) for e in exps)
        neg = tuple(max(-e, 0) for e in exps)
        return FieldElement(Poly(self, {pos: coeff}), Poly(self, {neg: 1}))

    def constant(self, c: int) -> FieldElement:
        if not 0 <= c < self.field.q:
            raise ValueError(f"{c} is not an element of {self.field}")
        return FieldElement(Poly(self, {(0,) * self.nvars: c}), self.poly_one(), _normalized=True)

    @cached_property
    def zero(self) -> FieldElement:
        return self.constant(0)

    @cached_property
    def one(self) -> FieldElement:
        return self.constant(1)

    def gen(self, name: str) -> FieldElement:
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return self.monomial(e)

    @property
    def gens(self) -> Tuple[FieldElement, ...]:
        return tuple(self.gen(n) for n in self.names)

    def parse(self, text: str) -> FieldElement:
        return ExpressionParser(self, text).parse()

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, int):
            return self.constant(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot convert {x!r}")

    def format_poly(self, p: Poly) -> str:
        if p.is_zero():
            return "0"
        parts = []
        for e in sorted(p.terms, key=rtl_key, reverse=True):
            c = p.terms[e]
            factors = []
            for name, k in zip(self.names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            if c != 1 or not factors:
                factors.insert(0, str(c) if c < 2 else hex(c))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def random_poly(self, rng: random.Random, max_degree: int = 2, max_terms: int = 3, nonzero: bool = True) -> Poly:
        while True:
            terms: Dict[Exps, int] = {}
            for _ in range(rng.randint(1, max_terms)):
                e = tuple(rng.randint(0, max_degree) for _ in range(self.nvars))
                terms[e] = terms.get(e, 0) ^ self.field.random(rng, nonzero=True)
            p = Poly(self, terms)
            if not (nonzero and p.is_zero()):
                return p

    def random_element(self, rng: random.Random, max_degree: int = 2, max_terms: int = 3) -> FieldElement:
        """Random nonzero element; the denominator is constant a third of the time."""
        num = self.random_poly(rng, max_degree, max_terms)
        if rng.random() < 1 / 3:
            return FieldElement(num)
        return FieldElement(num, self.random_poly(rng, max_degree, max_terms))

    def random_point(self, rng: random.Random, field: FiniteField) -> Tuple[int, ...]:
        return tuple(field.random(rng) for _ in self.names)


class MonomialValuation:
    """The (x_1^-1, ..., x_m^-1)-adic valuation with values in Z^m.

    ``nu(x_1^e_1 ... x_m^e_m) = (-e_1, ..., -e_m)`` and Z^m is ordered
    right to left lexicographically.  The valuation variables may be a
    subset of the ring's variables, in which case the elements must not
    involve the others.
    """

    def __init__(self, variables: Sequence[str]) -> None:
        self.variables = tuple(variables)

    def __repr__(self) -> str:
        return f"MonomialValuation({', '.join(self.variables)})"

    def _indices(self, ring: RationalFunctionField) -> Tuple[int, ...]:
        return tuple(ring.index(v) for v in self.variables)

    def _lead(self, p: Poly, idx: Tuple[int, ...]) -> Tuple[int, ...]:
        others = [i for i in range(p.ring.nvars) if i not in idx]
        best = None
        for e in p.terms:
            if any(e[i] for i in others):
                names = [p.ring.names[i] for i in others if e[i]]
                raise ValueError(f"element involves {names}, outside the valuation's variables")
            proj = tuple(e[i] for i in idx)
            if best is None or rtl_key(proj) > rtl_key(best):
                best = proj
        return best

    def __call__(self, f: FieldElement) -> Tuple[int, ...]:
        return valuation(f, self)

    def less(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return rtl_key(a) < rtl_key(b)

    def is_negative(self, g: Sequence[int]) -> bool:
        return self.less(g, (0,) * len(g))

    def min(self, values: Iterable[Sequence[int]]) -> Tuple[int, ...]:
        return tuple(min(values, key=rtl_key))


def valuation(f: FieldElement, v: MonomialValuation) -> Tuple[int, ...]:
    if f.is_zero():
        raise ValuationOfZero("valuation of 0")
    idx = v._indices(f.ring)
    ln = v._lead(f.num, idx)
    ld = v._lead(f.den, idx)
    return tuple(d - n for n, d in zip(ln, ld))


def valuation_mod2(f: FieldElement, v: MonomialValuation) -> Tuple[int, ...]:
    return tuple(x % 2 for x in valuation(f, v))


def gamma_bits(g: Sequence[int]) -> int:
    """Pack a (Z/2)^m class into an int bitmask (component i -> bit i)."""
    return sum(1 << i for i, x in enumerate(g) if x % 2)


_TOKEN = re.compile(r"\s*(?:(0x[0-9a-fA-F]+)|(\d+)|([^\W\d]\w*)|(.))", re.UNICODE)


class ExpressionParser:
    """Recursive-descent parser for ``+ - * / ^ ( )``, variables and hex/decimal coefficients."""

    def __init__(self, ring: RationalFunctionField, text: str) -> None:
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list:
        out = []
        for m in _TOKEN.finditer(text):
            hexnum, dec, ident, op = m.groups()
            if hexnum:
                out.append(("num", int(hexnum, 16)))
            elif dec:
                out.append(("num", int(dec)))
            elif ident:
                out.append(("var", ident))
            elif op and not op.isspace():
                out.append(("op", op))
        return out

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def _take(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _expect(self, op: str) -> None:
        if self._take() != ("op", op):
            raise SyntaxError(f"expected {op!r}")

    def parse(self) -> FieldElement:
        if not self.tokens:
            raise SyntaxError("empty expression")
        v = self._expr()
        if self.pos != len(self.tokens):
            raise SyntaxError(f"unexpected token {self._peek()[1]!r}")
        return v

    def _expr(self) -> FieldElement:
        v = self._term()
        while self._peek() in (("op", "+"), ("op", "-")):
            self._take()
            v = v + self._term()
        return v

    def _term(self) -> FieldElement:
        v = self._factor()
        while self._peek() in (("op", "*"), ("op", "/")):
            _, op = self._take()
            w = self._factor()
            v = v * w if op == "*" else v / w
        return v

    def _factor(self) -> FieldElement:
        base = self._base()
        if self._peek() == ("op", "^"):
            self._take()
            sign = 1
            if self._peek() == ("op", "-"):
                self._take()
                sign = -1
            kind, val = self._take()
            if kind != "num":
                raise SyntaxError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def _base(self) -> FieldElement:
        kind, val = self._take()
        if kind == "num":
            return self.ring.constant(val)
        if kind == "var":
            if val not in self.ring.names:
                raise SyntaxError(f"unknown variable {val!r}")
            return self.ring.gen(val)
        if (kind, val) == ("op", "("):
            v = self._expr()
            self._expect(")")
            return v
        raise SyntaxError(f"unexpected token {val!r}")


def iter_points(ring: RationalFunctionField, field: FiniteField) -> Iterator[Tuple[int, ...]]:
    """All points of field^m (small fields only)."""
    import itertools

    return itertools.product(field.elements(), repeat=ring.nvars)
