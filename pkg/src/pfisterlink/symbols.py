"""Additive symbols for quadratic Pfister forms and their formal sums.

``((e_1, ..., e_n))`` denotes the n-fold form
``<<e_1, ..., e_{n-1}>> (x) [1, e_1 ... e_n]``.  The symbol is symmetric,
additive in every entry and alternating, and vanishes when an entry is 0.
:class:`SymbolSum` collects formal F2-combinations of symbols and
normalizes them with these rules.  A sum that normalizes to zero is zero in
the Witt group; a nonzero normal form only means "not proved zero".
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from operator import add, mul
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from .field2 import FieldElement, Poly, RationalFunctionField
from .quadform import BilinearDiag, QuadraticForm, tensor_bilinear


class ConstructionInapplicable(ValueError):
    """The requested symbol construction does not apply to the given family."""


def _product(xs: Iterable[FieldElement], ring: RationalFunctionField) -> FieldElement:
    return reduce(mul, xs, ring.one)


def wp_reduce(a: FieldElement) -> FieldElement:
    """Representative of a modulo u^2 + u, simplified on Laurent polynomials.

    Even monomials c*t^2 are replaced by sqrt(c)*t until none remain, and the
    constant term is reduced by its trace.  Non-Laurent input is returned as is.
    """
    if a.is_zero() or not a.is_laurent():
        return a
    ring = a.ring
    field = ring.field
    terms = dict(a.laurent_terms())
    zero = (0,) * ring.nvars
    while True:
        even = [e for e in terms if e != zero and all(x % 2 == 0 for x in e)]
        if not even:
            break
        for e in even:
            # halving an earlier monomial may already have cancelled this one
            c = terms.pop(e, 0)
            if not c:
                continue
            h = tuple(x // 2 for x in e)
            terms[h] = terms.get(h, 0) ^ field.sqrt(c)
            if not terms[h]:
                del terms[h]
    if zero in terms:
        c = field.artin_schreier_rep(terms.pop(zero))
        if c:
            terms[zero] = c
    out = ring.zero
    for e, c in terms.items():
        out = out + ring.monomial(e, c)
    return out


def norm_values_with_witness(a: FieldElement) -> List[Tuple[FieldElement, Tuple[FieldElement, FieldElement]]]:
    """Nonzero values x^2 + xy + a y^2 of [1, a] at x, y in {0, 1, a}, with the vectors."""
    ring = a.ring
    pts = [ring.zero, ring.one, a]
    out: List[Tuple[FieldElement, Tuple[FieldElement, FieldElement]]] = []
    seen: List[FieldElement] = []
    for x in pts:
        for y in pts:
            v = x * x + x * y + a * y * y
            if not v.is_zero() and v not in seen:
                seen.append(v)
                out.append((v, (x, y)))
    return out


def _norm_values(a: FieldElement) -> List[FieldElement]:
    """Values of [1, a] and of the isometric [1, wp_reduce(a)]."""
    out: List[FieldElement] = []
    for b in (a, wp_reduce(a)):
        if b.is_zero():
            continue
        for v, _ in norm_values_with_witness(b):
            if v not in out:
                out.append(v)
    return out


@dataclass(frozen=True)
class PfisterForm:
    """``<<c_1, ..., c_k>> (x) [1, a]``, a (k+1)-fold quadratic Pfister form."""

    bilinear: Tuple[FieldElement, ...]
    quad: FieldElement

    def __post_init__(self) -> None:
        object.__setattr__(self, "bilinear", tuple(self.bilinear))

    @property
    def fold(self) -> int:
        return len(self.bilinear) + 1

    @property
    def ring(self) -> RationalFunctionField:
        return self.quad.ring

    def expand(self) -> QuadraticForm:
        ring = self.ring
        if any(c.is_zero() for c in self.bilinear):
            return QuadraticForm.hyperbolic(ring, 2 ** (self.fold - 1))
        b = BilinearDiag.pfister(self.bilinear, ring)
        return tensor_bilinear(b, QuadraticForm.binary(ring.one, self.quad))

    def to_symbol(self) -> "QPfisterSymbol":
        ring = self.ring
        if any(c.is_zero() for c in self.bilinear):
            return QPfisterSymbol((ring.zero,) * self.fold)
        return QPfisterSymbol(self.bilinear + (self.quad / _product(self.bilinear, ring),))

    @classmethod
    def from_symbol(cls, s: "QPfisterSymbol") -> "PfisterForm":
        ring = s.ring
        return cls(s.entries[:-1], _product(s.entries, ring))

    def times(self, c: FieldElement) -> "PfisterForm":
        """``<<c>> (x) self``."""
        return PfisterForm((c,) + self.bilinear, self.quad)

    def is_formally_hyperbolic(self) -> bool:
        """Sound sufficient test for hyperbolicity.

        True if a slot is zero, if a is in the Artin-Schreier image after
        reduction, or if some nonempty product of bilinear slots lies in the
        square class of a value of [1, a] found by a small search.  Then
        <<c_S>> (x) [1, a] is a hyperbolic factor.
        """
        if any(c.is_zero() for c in self.bilinear) or self.quad.is_zero():
            return True
        if wp_reduce(self.quad).is_zero():
            return True
        values = _norm_values(self.quad)
        k = len(self.bilinear)
        for mask in range(1, 1 << k):
            c = _product((self.bilinear[i] for i in range(k) if mask >> i & 1), self.ring)
            if any((c * v).is_square() for v in values):
                return True
        return False

    def __repr__(self) -> str:
        return "[[" + ", ".join(map(str, self.bilinear + (self.quad,))) + "]]"


class QPfisterSymbol:
    """The symbol ((e_1, ..., e_n)); equality ignores the order of entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[FieldElement]) -> None:
        if not entries:
            raise ValueError("a symbol needs at least one entry")
        self.entries: Tuple[FieldElement, ...] = tuple(entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def ring(self) -> RationalFunctionField:
        return self.entries[0].ring

    def _key(self) -> Tuple[str, ...]:
        return tuple(sorted(map(repr, self.entries)))

    def __eq__(self, other) -> bool:
        return isinstance(other, QPfisterSymbol) and Counter(self.entries) == Counter(other.entries)

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return "((" + ", ".join(map(str, self.entries)) + "))"

    def __add__(self, other) -> "SymbolSum":
        return SymbolSum([self]) + other

    def has_zero_entry(self) -> bool:
        return any(e.is_zero() for e in self.entries)

    def to_pfister(self) -> PfisterForm:
        return PfisterForm.from_symbol(self)

    def expand(self) -> QuadraticForm:
        if self.has_zero_entry():
            return QuadraticForm.hyperbolic(self.ring, 2 ** (self.n - 1))
        return self.to_pfister().expand()

    def is_formally_hyperbolic(self) -> bool:
        return SymbolSum([self]).is_formally_hyperbolic()


# --- normal forms --------------------------------------------------------

AtomKey = Tuple


def _split_entry(e: FieldElement) -> Dict[AtomKey, FieldElement]:
    """Write e as a sum of atoms, each a coefficient-basis element times a monomial over a fixed denominator."""
    ring = e.ring
    atoms: Dict[AtomKey, FieldElement] = {}
    if e.is_laurent():
        for exps, c in e.laurent_terms().items():
            for j in range(c.bit_length()):
                if c >> j & 1:
                    atoms[(0, j, exps)] = ring.monomial(exps, 1 << j)
        return atoms
    den = FieldElement(e.den)
    for exps, c in e.num.terms.items():
        for j in range(c.bit_length()):
            if c >> j & 1:
                v = FieldElement(Poly(ring, {exps: 1 << j})) / den
                key = (1, repr(v))
                if key in atoms:
                    del atoms[key]
                else:
                    atoms[key] = v
    return atoms


@lru_cache(maxsize=1 << 16)
def _pure_symbol_vanishes(entries: Tuple[FieldElement, ...]) -> bool:
    """Kill rules for a symbol whose entries are single atoms."""
    if len(set(entries)) < len(entries):
        return True
    # a square bilinear slot; with one entry the slot is quadratic
    if len(entries) > 1 and any(e.is_square() for e in entries):
        return True
    ring = entries[0].ring
    quad = _product(entries, ring)
    for j in range(len(entries)):
        bil = entries[:j] + entries[j + 1:]
        if PfisterForm(bil, quad).is_formally_hyperbolic():
            return True
    return False


class SymbolSum:
    """A formal F2-combination of n-fold symbols."""

    def __init__(self, terms: Iterable[QPfisterSymbol] = (), fold: int | None = None, *, _atoms=None) -> None:
        self.terms: Tuple[QPfisterSymbol, ...] = tuple(terms)
        folds = {t.n for t in self.terms}
        if fold is not None:
            folds.add(fold)
        if len(folds) > 1:
            raise ValueError(f"symbols of different folds {sorted(folds)}")
        self.fold = folds.pop() if folds else None
        self._atoms = _atoms

    def __add__(self, other) -> "SymbolSum":
        if isinstance(other, QPfisterSymbol):
            other = SymbolSum([other])
        if not isinstance(other, SymbolSum):
            return NotImplemented
        return SymbolSum(self.terms + other.terms)

    __radd__ = __add__

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return " + ".join(map(repr, self.terms)) if self.terms else "0"

    def normalize(self) -> "SymbolSum":
        """Expand entries into atoms, apply the kill rules and cancel pairs."""
        if self._atoms is not None:
            return self
        if self.fold == 1:
            return self._normalize_fold1()
        counts: Counter = Counter()
        values: Dict[AtomKey, FieldElement] = {}
        for s in self.terms:
            if s.has_zero_entry():
                continue
            splits = [_split_entry(e) for e in s.entries]
            for sp in splits:
                values.update(sp)
            for combo in itertools.product(*(sorted(sp) for sp in splits)):
                counts[tuple(sorted(combo))] += 1
        kept = []
        for key in sorted(counts):
            if counts[key] % 2 == 0:
                continue
            if _pure_symbol_vanishes(tuple(values[k] for k in key)):
                continue
            kept.append(key)
        atoms = tuple(kept)
        terms = [QPfisterSymbol([values[k] for k in key]) for key in atoms]
        return SymbolSum(terms, self.fold, _atoms=atoms)

    def _normalize_fold1(self) -> "SymbolSum":
        # ((e)) = [1, e] is additive in e and vanishes on the Artin-Schreier image
        ring = self.terms[0].ring
        total = reduce(add, (t.entries[0] for t in self.terms), ring.zero)
        r = wp_reduce(total)
        if r.is_zero():
            return SymbolSum([], 1, _atoms=())
        split = _split_entry(r)
        atoms = tuple((k,) for k in sorted(split))
        return SymbolSum([QPfisterSymbol([split[k[0]]]) for k in atoms], 1, _atoms=atoms)

    def normal_form(self) -> Tuple[Tuple[AtomKey, ...], ...]:
        return self.normalize()._atoms

    def to_json(self) -> List[List[str]]:
        """Normal form as a sorted list of sorted entry tuples."""
        return sorted(sorted(map(repr, t.entries)) for t in self.normalize().terms)

    def is_formally_hyperbolic(self) -> bool:
        return not self.normal_form()

    def equivalent(self, other: "SymbolSum | QPfisterSymbol") -> bool:
        """Formally equal in the Witt group (sound, incomplete)."""
        return (self + other).is_formally_hyperbolic()

    def expand(self, ring: RationalFunctionField | None = None) -> QuadraticForm:
        out = QuadraticForm((), ring)
        for t in self.terms:
            out = out + t.expand()
        return out


def normalize(x: SymbolSum | QPfisterSymbol) -> SymbolSum:
    if isinstance(x, QPfisterSymbol):
        x = SymbolSum([x])
    return x.normalize()


def is_formally_hyperbolic(x: SymbolSum | QPfisterSymbol) -> bool:
    return not normalize(x).normal_form()


def symbol(*entries: FieldElement) -> QPfisterSymbol:
    return QPfisterSymbol(entries)


# --- constructions on families ------------------------------------------


def subset_sum_symbol(psis: Sequence[QPfisterSymbol], subset: Iterable[int], i0: int | None = None) -> QPfisterSymbol:
    """A single symbol equal to the sum of psis[i] for i in ``subset``.

    Applies to families drawn from a pool of n+1 entries where each member
    omits exactly one pool element.  With m_i the element omitted by
    psis[i], the result has the pool elements not omitted by the chosen
    members, followed by m_{i0} + m_i for the other chosen members.  The
    identity is checked by normalization before returning.
    """
    idx = sorted(set(subset))
    if not idx:
        raise ConstructionInapplicable("empty index set")
    if i0 is None:
        i0 = idx[0]
    if i0 not in idx:
        raise ConstructionInapplicable(f"i0 = {i0} is not in the index set")
    pool: List[FieldElement] = []
    for p in psis:
        for e in p.entries:
            if e not in pool:
                pool.append(e)
    n = psis[idx[0]].n
    if len(pool) != n + 1 or any(p.n != n for p in psis):
        raise ConstructionInapplicable("the family is not drawn from a pool of n + 1 entries")
    missing: Dict[int, FieldElement] = {}
    for i in idx:
        entries = psis[i].entries
        if len(set(entries)) != n:
            raise ConstructionInapplicable(f"member {i} repeats an entry")
        (m,) = [x for x in pool if x not in entries]
        missing[i] = m
    if len(set(missing.values())) != len(idx):
        raise ConstructionInapplicable("two members omit the same entry")
    entries = [x for x in pool if x not in missing.values()]
    entries += [missing[i0] + missing[i] for i in idx if i != i0]
    result = QPfisterSymbol(entries)
    target = SymbolSum([psis[i] for i in idx])
    if not target.equivalent(result):
        raise ConstructionInapplicable("normalization does not confirm the identity")
    return result


def right_linked_representatives(
    betas: Sequence[FieldElement], phi: PfisterForm
) -> Dict[FrozenSet[int], PfisterForm | None]:
    """Subset T of indices -> <<prod beta_T>> (x) phi; the empty set maps to None (zero)."""
    if any(b.is_zero() for b in betas):
        raise ValueError("right-linked family with a zero scalar")
    ring = phi.ring
    out: Dict[FrozenSet[int], PfisterForm | None] = {}
    for r in range(len(betas) + 1):
        for T in itertools.combinations(range(len(betas)), r):
            out[frozenset(T)] = phi.times(_product((betas[i] for i in T), ring)) if T else None
    return out


def left_linked_representatives(
    alphas: Sequence[FieldElement], b_gens: Sequence[FieldElement], ring: RationalFunctionField | None = None
) -> Dict[FrozenSet[int], PfisterForm | None]:
    """Subset T -> <<b_gens>> (x) [1, sum alpha_T]; the empty set maps to None."""
    ring = ring or (alphas[0].ring if alphas else b_gens[0].ring)
    out: Dict[FrozenSet[int], PfisterForm | None] = {}
    for r in range(len(alphas) + 1):
        for T in itertools.combinations(range(len(alphas)), r):
            s = sum((alphas[i] for i in T), ring.zero)
            out[frozenset(T)] = PfisterForm(tuple(b_gens), s) if T else None
    return out


# --- bilinear square-class group ring -------------------------------------


class SquareClassRing:
    """The group ring F2[G] over square classes of free generators.

    An element is a set of parity vectors (int bitmasks); <a> is {a}.  In
    characteristic 2, <a> + <a> = 0 and <a t^2> = <a> in the bilinear Witt
    ring, which is a quotient of this ring, so identities proved here hold
    there.
    """

    @staticmethod
    def unit(mask: int = 0) -> FrozenSet[int]:
        return frozenset([mask])

    @staticmethod
    def add(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        return x ^ y

    @staticmethod
    def mul(x: FrozenSet[int], y: FrozenSet[int]) -> FrozenSet[int]:
        out: set = set()
        for a in x:
            for b in y:
                out ^= {a ^ b}
        return frozenset(out)

    @classmethod
    def pfister(cls, *masks: int) -> FrozenSet[int]:
        """<<g_1, ..., g_r>> = prod (<1> + <g_i>)."""
        out = cls.unit(0)
        for m in masks:
            out = cls.mul(out, cls.add(cls.unit(0), cls.unit(m)))
        return out


def induction_identity_holds(t: int, with_alpha: bool = True) -> bool:
    """sum_{S in [t]} <<alpha beta_S>> == <<beta_1..beta_t>> + <<alpha, beta_1..beta_t>>.

    Generators are free: alpha is bit 0 and beta_i is bit i.  With
    ``with_alpha=False`` alpha is 1 and the right side is <<beta_1..beta_t>>.
    """
    R = SquareClassRing
    alpha = 1 if with_alpha else 0
    betas = [1 << i for i in range(1, t + 1)]
    lhs: FrozenSet[int] = frozenset()
    for r in range(t + 1):
        for S in itertools.combinations(betas, r):
            m = alpha
            for b in S:
                m ^= b
            lhs = R.add(lhs, R.pfister(m))
    rhs = R.add(R.pfister(*betas), R.pfister(alpha, *betas))
    return lhs == rhs
