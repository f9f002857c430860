"""Quadratic forms in characteristic 2 as orthogonal sums of blocks.

A form is a sum of unary blocks <a> (value a*u^2) and binary blocks
[a, b] (value a*u1^2 + u1*u2 + b*u2^2).  Forms over a rational function
field carry FieldElement coefficients; ``specialize`` maps them to
:class:`FiniteForm` over GF(2^k), where Witt indices are computed exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Mapping, Sequence, Tuple

from .field2 import FieldElement, FiniteField, RationalFunctionField, specialize


class SingularFormError(ValueError):
    """A Witt-class operation was asked of a form with unary blocks."""


@dataclass(frozen=True)
class Unary:
    a: FieldElement

    @property
    def dim(self) -> int:
        return 1


@dataclass(frozen=True)
class Binary:
    a: FieldElement
    b: FieldElement

    @property
    def dim(self) -> int:
        return 2


Block = Unary | Binary


class QuadraticForm:
    """An ordered orthogonal sum of :class:`Unary` and :class:`Binary` blocks."""

    def __init__(self, blocks: Sequence[Block] = (), ring: RationalFunctionField | None = None) -> None:
        self.blocks: Tuple[Block, ...] = tuple(blocks)
        if ring is None and self.blocks:
            ring = self.blocks[0].a.ring
        self.ring = ring

    @classmethod
    def binary(cls, a: FieldElement, b: FieldElement) -> "QuadraticForm":
        return cls([Binary(a, b)])

    @classmethod
    def unary(cls, a: FieldElement) -> "QuadraticForm":
        return cls([Unary(a)])

    @classmethod
    def hyperbolic(cls, ring: RationalFunctionField, planes: int = 1) -> "QuadraticForm":
        return cls([Binary(ring.zero, ring.zero)] * planes, ring)

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def is_nonsingular(self) -> bool:
        return all(isinstance(b, Binary) for b in self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticForm) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        return orth_sum(self, other)

    def __repr__(self) -> str:
        if not self.blocks:
            return "0"
        return " _|_ ".join(
            f"<{b.a}>" if isinstance(b, Unary) else f"[{b.a}, {b.b}]" for b in self.blocks
        )

    def evaluate(self, w: Sequence[FieldElement]) -> FieldElement:
        return evaluate(self, w)

    def specialize(self, point: Mapping[str, int] | Sequence[int], field: FiniteField) -> "FiniteForm":
        out = []
        for b in self.blocks:
            if isinstance(b, Unary):
                out.append((specialize(b.a, point, field),))
            else:
                out.append((specialize(b.a, point, field), specialize(b.b, point, field)))
        return FiniteForm(field, out)

    def coefficients(self) -> List[FieldElement]:
        return [c for b in self.blocks for c in ((b.a,) if isinstance(b, Unary) else (b.a, b.b))]


def orth_sum(phi: QuadraticForm, psi: QuadraticForm) -> QuadraticForm:
    if phi.ring is not None and psi.ring is not None and phi.ring != psi.ring:
        raise ValueError("forms over different fields")
    return QuadraticForm(phi.blocks + psi.blocks, phi.ring or psi.ring)


def scale(c: FieldElement, phi: QuadraticForm) -> QuadraticForm:
    """c*phi, with c*[a, b] written as [c*a, b/c] via (u1, u2) -> (u1, c*u2)."""
    if c.is_zero():
        raise ValueError("scaling by zero")
    out: List[Block] = []
    for b in phi.blocks:
        if isinstance(b, Unary):
            out.append(Unary(c * b.a))
        else:
            out.append(Binary(c * b.a, b.b / c))
    return QuadraticForm(out, phi.ring)


class BilinearDiag:
    """Diagonal bilinear form <e_1, ..., e_n> with nonzero entries."""

    def __init__(self, entries: Sequence[FieldElement]) -> None:
        self.entries = tuple(entries)
        if any(e.is_zero() for e in self.entries):
            raise ValueError("diagonal bilinear forms need nonzero entries")

    @classmethod
    def pfister(cls, gens: Sequence[FieldElement], ring: RationalFunctionField | None = None) -> "BilinearDiag":
        """<<g_1, ..., g_r>>: entries are the products over subsets, the empty product first."""
        if ring is None:
            if not gens:
                raise ValueError("ring needed for the 0-fold Pfister form")
            ring = gens[0].ring
        entries = [ring.one]
        for g in gens:
            entries = entries + [e * g for e in entries]
        return cls(entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def pure_part(self) -> "BilinearDiag":
        if not self.entries or not self.entries[0].is_one():
            raise ValueError("not of Pfister shape (first entry must be 1)")
        return BilinearDiag(self.entries[1:])

    def __repr__(self) -> str:
        return "<" + ", ".join(map(str, self.entries)) + ">"


def tensor_bilinear(b: BilinearDiag, phi: QuadraticForm) -> QuadraticForm:
    out = QuadraticForm((), phi.ring)
    for e in b.entries:
        out = orth_sum(out, scale(e, phi))
    return out


def evaluate(phi: QuadraticForm, w: Sequence[FieldElement]) -> FieldElement:
    if len(w) != phi.dim:
        raise ValueError(f"vector of length {len(w)} for a form of dimension {phi.dim}")
    total = phi.ring.zero
    i = 0
    for b in phi.blocks:
        if isinstance(b, Unary):
            total = total + b.a * w[i] * w[i]
            i += 1
        else:
            u1, u2 = w[i], w[i + 1]
            total = total + b.a * u1 * u1 + u1 * u2 + b.b * u2 * u2
            i += 2
    return total


def arf(phi: QuadraticForm) -> FieldElement:
    """Arf invariant sum(a*b) over the binary blocks; meaningful modulo u^2 + u."""
    if not phi.is_nonsingular():
        raise SingularFormError("the Arf invariant needs a nonsingular form")
    total = phi.ring.zero
    for b in phi.blocks:
        total = total + b.a * b.b
    return total


def pure_subform(gens: Sequence[FieldElement], beta: FieldElement, alpha: FieldElement) -> QuadraticForm:
    """Pure subform of phi = <<gens>> (x) [[beta, alpha]].

    Returns b' (x) [1, alpha]  _|_  b (x) <beta> (x) [1, alpha]  _|_  <1>,
    which has dimension 2^n - 1 for the n-fold form phi (n = len(gens) + 2).
    """
    ring = alpha.ring
    b = BilinearDiag.pfister(gens, ring)
    base = QuadraticForm.binary(ring.one, alpha)
    out = tensor_bilinear(b.pure_part(), base) if len(b.entries) > 1 else QuadraticForm((), ring)
    out = orth_sum(out, tensor_bilinear(BilinearDiag([e * beta for e in b.entries]), base))
    return orth_sum(out, QuadraticForm.unary(ring.one))


def witt_reduce(phi: QuadraticForm) -> Tuple[int, QuadraticForm]:
    """Split off hyperbolic planes using isometries that hold over any field.

    Rules, applied to a fixed point:

    * [a, b] with a = 0 or b = 0 is H;
    * [a, b] _|_ [a, b'] = H _|_ [a, b + b'] for a != 0 (also matching [b, a] = [a, b]);
    * <c> _|_ [c, b] = H _|_ <c>;
    * <c> _|_ <c> = <c> _|_ <0>.

    Returns the number of planes split off and the residual form.  The count
    is a lower bound for the Witt index, not the index itself.
    """
    blocks: List[Block] = list(phi.blocks)
    count = 0
    changed = True
    while changed:
        changed = False
        for i, b in enumerate(blocks):
            if isinstance(b, Binary) and (b.a.is_zero() or b.b.is_zero()):
                del blocks[i]
                count += 1
                changed = True
                break
        if changed:
            continue
        for i, j in itertools.combinations(range(len(blocks)), 2):
            x, y = blocks[i], blocks[j]
            if isinstance(x, Binary) and isinstance(y, Binary):
                merged = _merge_same_scale(x, y)
                if merged is not None:
                    blocks[i] = merged
                    del blocks[j]
                    count += 1
                    changed = True
                    break
            elif isinstance(x, Unary) and isinstance(y, Unary):
                if x.a == y.a and not x.a.is_zero():
                    blocks[j] = Unary(x.a.ring.zero)
                    changed = True
                    break
            else:
                u, bb = (x, y) if isinstance(x, Unary) else (y, x)
                if not u.a.is_zero() and (bb.a == u.a or bb.b == u.a):
                    del blocks[blocks.index(bb)]
                    count += 1
                    changed = True
                    break
    return count, QuadraticForm(blocks, phi.ring)


def _merge_same_scale(x: Binary, y: Binary) -> Binary | None:
    for xa, xb in ((x.a, x.b), (x.b, x.a)):
        for ya, yb in ((y.a, y.b), (y.b, y.a)):
            if xa == ya and not xa.is_zero():
                return Binary(xa, xb + yb)
    return None


def witt_index_lower_bound(phi: QuadraticForm) -> int:
    return witt_reduce(phi)[0]


# --- finite fields -------------------------------------------------------


@dataclass(frozen=True)
class WittClassFinite:
    witt_index: int
    dim_anisotropic: int
    arf: int


class FiniteForm:
    """A quadratic form over GF(2^k); blocks are (a,) or (a, b) tuples of ints."""

    def __init__(self, field: FiniteField, blocks: Sequence[Tuple[int, ...]]) -> None:
        self.field = field
        self.blocks = tuple(tuple(b) for b in blocks)

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.blocks)

    def is_nonsingular(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)

    def __repr__(self) -> str:
        return f"FiniteForm({self.field}, {list(self.blocks)})"

    def __add__(self, other: "FiniteForm") -> "FiniteForm":
        if other.field != self.field:
            raise ValueError("different base fields")
        return FiniteForm(self.field, self.blocks + other.blocks)

    def value(self, w: Sequence[int]) -> int:
        mul = self.field.mul
        total, i = 0, 0
        for b in self.blocks:
            if len(b) == 1:
                total ^= mul(b[0], mul(w[i], w[i]))
                i += 1
            else:
                u1, u2 = w[i], w[i + 1]
                total ^= mul(b[0], mul(u1, u1)) ^ mul(u1, u2) ^ mul(b[1], mul(u2, u2))
                i += 2
        return total

    def polar(self, x: Sequence[int], y: Sequence[int]) -> int:
        s = [a ^ b for a, b in zip(x, y)]
        return self.value(s) ^ self.value(x) ^ self.value(y)

    def arf(self) -> int:
        if not self.is_nonsingular():
            raise SingularFormError("the Arf invariant needs a nonsingular form")
        t = 0
        for a, b in self.blocks:
            t ^= self.field.mul(a, b)
        return t

    def witt_decompose(self) -> WittClassFinite:
        return witt_decompose_finite(self)

    def witt_index_exhaustive(self) -> int:
        return witt_index_exhaustive(self)

    def is_isotropic_exhaustive(self) -> bool:
        n = self.dim
        return any(self.value(w) == 0 for w in itertools.product(self.field.elements(), repeat=n) if any(w))


def witt_decompose_finite(phi: FiniteForm) -> WittClassFinite:
    """Classify a nonsingular form over GF(2^k) by dimension and Arf invariant."""
    if not phi.is_nonsingular():
        raise SingularFormError("Witt decomposition needs a nonsingular form")
    c = phi.arf()
    half = phi.dim // 2
    if phi.field.in_artin_schreier_image(c):
        return WittClassFinite(half, 0, 0)
    return WittClassFinite(half - 1, 2, phi.field.artin_schreier_rep(c))


def _nullspace(rows: List[List[int]], k: int, field: FiniteField) -> List[List[int]]:
    """Basis of {x in field^k : rows . x = 0}."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][col])
        m[r] = [field.mul(v, inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a ^ field.mul(f, b) for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fcol in free:
        x = [0] * k
        x[fcol] = 1
        for i, pc in enumerate(pivots):
            x[pc] = m[i][fcol]
        basis.append(x)
    return basis


def witt_index_exhaustive(phi: FiniteForm) -> int:
    """Count hyperbolic planes by repeated search for a non-radical isotropic vector.

    Works for singular forms too; this is the brute-force check on
    :func:`witt_decompose_finite`.
    """
    field = phi.field
    n = phi.dim
    basis = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    count = 0

    def combine(coeffs, vecs):
        out = [0] * n
        for c, v in zip(coeffs, vecs):
            if c:
                for i, x in enumerate(v):
                    if x:
                        out[i] ^= field.mul(c, x)
        return tuple(out)

    while len(basis) >= 2:
        found = None
        for coeffs in itertools.product(field.elements(), repeat=len(basis)):
            if not any(coeffs):
                continue
            v = combine(coeffs, basis)
            if phi.value(v):
                continue
            for u in basis:
                p = phi.polar(v, u)
                if p:
                    inv = field.inv(p)
                    found = (v, tuple(field.mul(inv, x) for x in u))
                    break
            if found:
                break
        if found is None:
            break
        v, w = found
        rows = [[phi.polar(u, v) for u in basis], [phi.polar(u, w) for u in basis]]
        basis = [combine(x, basis) for x in _nullspace(rows, len(basis), field)]
        count += 1
    return count
