"""Three-valued isotropy decisions.

Anisotropy is certified from valuation arguments on monomial values,
isotropy by an explicit vector, and everything else is ``UNKNOWN``.
Finite-field specializations give evidence for Witt-class identities.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, FrozenSet, List, Sequence, Tuple

from .field2 import (
    FieldElement,
    FiniteField,
    MonomialValuation,
    PoleAtPoint,
    Poly,
    RationalFunctionField,
    valuation,
    valuation_mod2,
)
from .quadform import Binary, QuadraticForm, Unary, evaluate, witt_decompose_finite
from .symbols import PfisterForm, QPfisterSymbol, SymbolSum, wp_reduce


class Verdict(str, enum.Enum):
    CERTIFIED_ANISOTROPIC = "CertifiedAnisotropic"
    ISOTROPIC_WITNESS = "IsotropicWitness"
    UNKNOWN = "Unknown"


class InvalidWitness(ValueError):
    pass


class RefutedBySpecialization(AssertionError):
    """A claimed Witt-class identity fails at a finite-field point."""

    def __init__(self, message: str, point: Tuple[int, ...], field: FiniteField) -> None:
        super().__init__(message)
        self.point = point
        self.field = field


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    lemma: str | None = None
    hypotheses: Dict[str, Any] = dc_field(default_factory=dict)
    matrix_rank: int | None = None
    trials: int | None = None
    seed: int | None = None
    witness: Tuple[FieldElement, ...] | None = None
    form: QuadraticForm | None = None
    parts: Tuple["Decision", ...] = ()

    def __post_init__(self) -> None:
        if self.verdict is Verdict.ISOTROPIC_WITNESS:
            if self.witness is None or self.form is None:
                raise InvalidWitness("a witness decision needs the form and the vector")
            if all(x.is_zero() for x in self.witness):
                raise InvalidWitness("zero vector")
            if not evaluate(self.form, self.witness).is_zero():
                raise InvalidWitness(f"{list(self.witness)} is not isotropic for {self.form}")

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_ANISOTROPIC

    @property
    def isotropic(self) -> bool:
        return self.verdict is Verdict.ISOTROPIC_WITNESS

    @classmethod
    def isotropic_witness(cls, form: QuadraticForm, w: Sequence[FieldElement], **kw) -> "Decision":
        return cls(Verdict.ISOTROPIC_WITNESS, witness=tuple(w), form=form, **kw)

    @classmethod
    def unknown(cls, **kw) -> "Decision":
        return cls(Verdict.UNKNOWN, **kw)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"verdict": self.verdict.value}
        if self.lemma is not None:
            out["lemma"] = self.lemma
        out["hypotheses"] = {k: _jsonable(v) for k, v in sorted(self.hypotheses.items())}
        if self.matrix_rank is not None:
            out["matrix_rank"] = self.matrix_rank
        if self.trials is not None:
            out["trials"] = self.trials
        if self.seed is not None:
            out["seed"] = self.seed
        if self.witness is not None:
            out["witness"] = [repr(x) for x in self.witness]
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out


def _jsonable(v: Any) -> Any:
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in v]
        return sorted(items, key=repr) if isinstance(v, (set, frozenset)) else items
    return repr(v)


# --- F2 linear algebra on parity vectors ---------------------------------


def f2_rank(vectors: Sequence[Sequence[int]]) -> int:
    basis: List[int] = []
    for v in vectors:
        x = sum(1 << i for i, b in enumerate(v) if b % 2)
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    return len(basis)


def row_span(vectors: Sequence[Sequence[int]], m: int) -> FrozenSet[Tuple[int, ...]]:
    """All F2-combinations of the given parity vectors of length m."""
    span = {(0,) * m}
    for v in vectors:
        v = tuple(x % 2 for x in v)
        span |= {tuple(a ^ b for a, b in zip(s, v)) for s in span}
    return frozenset(span)


# --- valuation certificates ----------------------------------------------


@dataclass(frozen=True)
class MoniceCertificate:
    valuation: MonomialValuation
    betas: Tuple[FieldElement, ...]
    values: Tuple[Tuple[int, ...], ...]
    parities: Tuple[Tuple[int, ...], ...]
    first_negative: bool
    rank: int

    @property
    def holds(self) -> bool:
        return self.first_negative and self.rank == len(self.betas)


def _monice_data(betas: Sequence[FieldElement], v: MonomialValuation) -> MoniceCertificate:
    if not betas:
        raise ValueError("empty slot list")
    if any(b.is_zero() for b in betas):
        raise ValueError("Pfister slots must be nonzero")
    values = tuple(valuation(b, v) for b in betas)
    parities = tuple(tuple(x % 2 for x in g) for g in values)
    return MoniceCertificate(v, tuple(betas), values, parities, v.is_negative(values[0]), f2_rank(parities))


def monice_certificate(betas: Sequence[FieldElement], v: MonomialValuation) -> Decision:
    """Anisotropy of [[beta_k, ..., beta_2, beta_1]] (beta_1 the quadratic slot).

    Certified when nu(beta_1) < 0 and the classes of nu(beta_1), ...,
    nu(beta_k) modulo 2 are linearly independent.
    """
    c = _monice_data(betas, v)
    hyp = {
        "valuation": repr(v),
        "betas": [repr(b) for b in c.betas],
        "values": [list(x) for x in c.values],
        "parities": [list(x) for x in c.parities],
        "first_value_negative": c.first_negative,
        "parities_independent": c.rank == len(c.betas),
    }
    if c.holds:
        return Decision(Verdict.CERTIFIED_ANISOTROPIC, "monomial-value lemma", hyp, c.rank)
    return Decision.unknown(lemma="monomial-value lemma", hypotheses=hyp, matrix_rank=c.rank)


def value_set_mod2(betas: Sequence[FieldElement], v: MonomialValuation) -> FrozenSet[Tuple[int, ...]]:
    """Values of the form modulo 2: the span of the slot parities (needs the certificate hypotheses)."""
    if not betas:
        return frozenset([(0,) * len(v.variables)])
    c = _monice_data(betas, v)
    if not c.holds:
        raise ValueError("value set is only determined under the certificate hypotheses")
    return row_span(c.parities, len(v.variables))


def _pfister_presentations(p: PfisterForm | QPfisterSymbol) -> List[List[FieldElement]]:
    """Slot lists [quad, bilinear...] of isometric presentations of one Pfister form."""
    s = p.to_symbol() if isinstance(p, PfisterForm) else p
    out = []
    if isinstance(p, PfisterForm):
        out.append([p.quad, *p.bilinear])
    ring = s.ring
    prod = ring.one
    for e in s.entries:
        prod = prod * e
    for j in range(s.n):
        bil = list(s.entries[:j] + s.entries[j + 1:])
        for q in (prod, wp_reduce(prod)):
            cand = [q, *bil]
            if cand not in out:
                out.append(cand)
    return out


def pfister_certificate(p: PfisterForm | QPfisterSymbol, v: MonomialValuation) -> Tuple[Decision, List[FieldElement] | None]:
    """Try the monomial-value lemma on isometric presentations of ``p``.

    Presentations permute the symbol entries (symmetry) and replace the
    quadratic slot by its reduction modulo u^2 + u.  Returns the first
    certified decision and its slot list, or the last attempt and None.
    """
    if isinstance(p, QPfisterSymbol) and p.has_zero_entry():
        return Decision.unknown(lemma="monomial-value lemma", hypotheses={"zero_entry": True}), None
    last = Decision.unknown(lemma="monomial-value lemma")
    for betas in _pfister_presentations(p):
        if any(b.is_zero() for b in betas):
            continue
        try:
            d = monice_certificate(betas, v)
        except ValueError:
            continue
        if d.certified:
            return d, betas
        last = d
    return last, None


@dataclass(frozen=True)
class ObstructionReport:
    established: bool
    intersection: FrozenSet[Tuple[int, ...]]
    value_sets: Tuple[FrozenSet[Tuple[int, ...]], ...]
    certificates: Tuple[Decision, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "established": self.established,
            "verdict": "no common 2-dimensional subform" if self.established else Verdict.UNKNOWN.value,
            "intersection": sorted(list(x) for x in self.intersection),
            "value_set_sizes": [len(s) for s in self.value_sets],
            "certificates": [c.to_dict() for c in self.certificates],
        }


def common_subform_obstruction(psis: Sequence[QPfisterSymbol | PfisterForm], v: MonomialValuation) -> ObstructionReport:
    """Intersect the mod-2 value sets of certified forms.

    A 2-dimensional common subform would have a value outside 2*Gamma in
    every form, so a zero intersection rules it out.
    """
    sets, certs = [], []
    for p in psis:
        d, betas = pfister_certificate(p, v)
        if betas is None:
            raise ValueError(f"{p} is not certified by the monomial-value lemma")
        certs.append(d)
        sets.append(value_set_mod2(betas, v))
    inter = frozenset.intersection(*sets)
    zero = (0,) * len(v.variables)
    return ObstructionReport(inter == frozenset([zero]), inter, tuple(sets), tuple(certs))


def monice2_certificate(alpha: FieldElement, beta: FieldElement, gamma: FieldElement, v: MonomialValuation) -> Decision:
    """Anisotropy of alpha*[1, beta] _|_ [1, gamma].

    Certified when nu(beta) = nu(gamma) < 0 and nu(alpha), nu(beta) are
    independent modulo 2.
    """
    if any(x.is_zero() for x in (alpha, beta, gamma)):
        raise ValueError("entries must be nonzero")
    va, vb, vg = valuation(alpha, v), valuation(beta, v), valuation(gamma, v)
    pa, pb = valuation_mod2(alpha, v), valuation_mod2(beta, v)
    rank = f2_rank([pa, pb])
    hyp = {
        "valuation": repr(v),
        "alpha": repr(alpha),
        "beta": repr(beta),
        "gamma": repr(gamma),
        "values": [list(va), list(vb), list(vg)],
        "beta_gamma_equal_values": vb == vg,
        "beta_value_negative": v.is_negative(vb),
        "alpha_beta_independent": rank == 2,
    }
    ok = vb == vg and v.is_negative(vb) and rank == 2
    verdict = Verdict.CERTIFIED_ANISOTROPIC if ok else Verdict.UNKNOWN
    return Decision(verdict, "two-block monomial-value lemma", hyp, rank)


def residue_split_certificate(
    t: str, unit_part: QuadraticForm, scaled_part: QuadraticForm, d_unit: Decision, d_scaled: Decision
) -> Decision:
    """Anisotropy of ``unit_part _|_ t * scaled_part`` over K(t) from anisotropy over K.

    Both parts must have coefficients free of the variable t.  This is the
    residue-form step for the t-adic valuation (cited, not recomputed).
    """
    ring = unit_part.ring or scaled_part.ring
    i = ring.index(t)

    def free_of_t(phi: QuadraticForm) -> bool:
        return all(all(e[i] == 0 for e in c.num.terms) and all(e[i] == 0 for e in c.den.terms) for c in phi.coefficients())

    hyp = {
        "variable": t,
        "unit_part": repr(unit_part),
        "scaled_part": repr(scaled_part),
        "parts_free_of_variable": free_of_t(unit_part) and free_of_t(scaled_part),
        "unit_part_anisotropic": d_unit.certified,
        "scaled_part_anisotropic": d_scaled.certified,
        "unit_part_nonsingular": unit_part.is_nonsingular(),
        "scaled_part_nonsingular": scaled_part.is_nonsingular(),
    }
    ok = all(v for k, v in hyp.items() if isinstance(v, bool))
    verdict = Verdict.CERTIFIED_ANISOTROPIC if ok else Verdict.UNKNOWN
    return Decision(verdict, "residue forms of a discrete valuation (cited)", hyp, parts=(d_unit, d_scaled))


# --- bounded witness search ----------------------------------------------

_HASH_FIELD = FiniteField(32)


def _monomials(nvars: int, var_idx: Sequence[int], degree: int) -> List[Tuple[int, ...]]:
    out = []
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(var_idx, d):
            e = [0] * nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def _trivial_witness(phi: QuadraticForm) -> Tuple[FieldElement, ...] | None:
    ring = phi.ring
    w: List[FieldElement] = [ring.zero] * phi.dim
    i = 0
    for b in phi.blocks:
        if isinstance(b, Unary):
            if b.a.is_zero():
                w[i] = ring.one
                return tuple(w)
            i += 1
        else:
            if b.a.is_zero():
                w[i] = ring.one
                return tuple(w)
            if b.b.is_zero():
                w[i + 1] = ring.one
                return tuple(w)
            i += 2
    return None


def isotropy_search(
    phi: QuadraticForm,
    degree_bound: int = 2,
    seed: int = 0,
    *,
    variables: Sequence[str] | None = None,
    exhaustive_limit: int = 1 << 16,
    samples: int = 1 << 13,
) -> Decision:
    """Look for an isotropic vector with polynomial coordinates over F2.

    Coordinates range over polynomials with F2 coefficients and total degree
    at most ``degree_bound`` in ``variables``.  The blocks are split into two
    halves and matched on hashed values at random points of GF(2^32); hits
    are verified exactly.  The search is exhaustive when each half has at
    most ``exhaustive_limit`` candidates and sampled otherwise.
    """
    ring = phi.ring
    w = _trivial_witness(phi)
    if w is not None:
        return Decision.isotropic_witness(phi, w, lemma="zero coefficient", seed=seed)
    if phi.dim == 0:
        return Decision.unknown(lemma="bounded search", hypotheses={"dimension": 0})
    var_idx = [ring.index(x) for x in (variables or ring.names)]
    monos = _monomials(ring.nvars, var_idx, degree_bound)
    M = len(monos)
    rng = random.Random(seed)
    points = _hash_points(phi, rng)
    # coordinate value tables per point, indexed by monomial subset mask
    coord_vals = []
    for pt in points:
        mv = [_eval_monomial(e, pt) for e in monos]
        coord_vals.append(mv)

    tables = None
    if M <= 16:
        tables = []
        for mv in coord_vals:
            t = [0] * (1 << M)
            for mask in range(1, 1 << M):
                low = mask & -mask
                t[mask] = t[mask ^ low] ^ mv[low.bit_length() - 1]
            tables.append(t)

    def coord_value(mask: int, p: int) -> int:
        if tables is not None:
            return tables[p][mask]
        mv = coord_vals[p]
        v = 0
        j = 0
        while mask:
            if mask & 1:
                v ^= mv[j]
            mask >>= 1
            j += 1
        return v

    coeffs = [[_block_coeffs(b, pt) for b in phi.blocks] for pt in points]
    dims = [b.dim for b in phi.blocks]
    # split blocks so the halves have similar coordinate counts
    best, cut = None, 0
    total = sum(dims)
    acc = 0
    for k in range(len(dims) + 1):
        if k:
            acc += dims[k - 1]
        score = max(acc, total - acc)
        if best is None or score < best:
            best, cut = score, k
    halves = (list(range(cut)), list(range(cut, len(dims))))
    half_dims = [sum(dims[i] for i in h) for h in halves]
    exhaustive = all(M * d <= exhaustive_limit.bit_length() - 1 for d in half_dims)
    F = _HASH_FIELD

    def key_of(blocks_idx: List[int], vec: Tuple[int, ...]) -> Tuple[int, ...]:
        key = []
        for p in range(len(points)):
            s = 0
            j = 0
            for bi in blocks_idx:
                cs = coeffs[p][bi]
                if len(cs) == 1:
                    u = coord_value(vec[j], p)
                    s ^= F.mul(cs[0], F.mul(u, u))
                    j += 1
                else:
                    u1, u2 = coord_value(vec[j], p), coord_value(vec[j + 1], p)
                    s ^= F.mul(cs[0], F.mul(u1, u1)) ^ F.mul(u1, u2) ^ F.mul(cs[1], F.mul(u2, u2))
                    j += 2
            key.append(s)
        return tuple(key)

    def candidates(d: int):
        if exhaustive:
            return itertools.product(range(1 << M), repeat=d)
        return (tuple(rng.getrandbits(M) for _ in range(d)) for _ in range(samples))

    table: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for vec in candidates(half_dims[0]):
        table.setdefault(key_of(halves[0], vec), []).append(vec)
    if not exhaustive:
        zero = (0,) * half_dims[0]
        table.setdefault(key_of(halves[0], zero), []).append(zero)
    trials = 0
    right_iter = candidates(half_dims[1])
    if not exhaustive:
        right_iter = itertools.chain([(0,) * half_dims[1]], right_iter)
    for rvec in right_iter:
        trials += 1
        for lvec in table.get(key_of(halves[1], rvec), ()):
            vec = lvec + rvec
            if not any(vec):
                continue
            w = tuple(_mask_to_element(ring, monos, m) for m in vec)
            if evaluate(phi, w).is_zero():
                return Decision.isotropic_witness(
                    phi, w, lemma="bounded search", seed=seed,
                    hypotheses={"degree_bound": degree_bound, "exhaustive": exhaustive},
                )
    hyp = {
        "degree_bound": degree_bound,
        "exhaustive": exhaustive,
        "monomials_per_coordinate": M,
        "left_candidates": sum(len(v) for v in table.values()),
        "right_candidates": trials,
        "variables": list(variables or ring.names),
    }
    return Decision.unknown(lemma="bounded search", hypotheses=hyp, trials=trials, seed=seed)


def _hash_points(phi: QuadraticForm, rng: random.Random, count: int = 2) -> List[Tuple[int, ...]]:
    points = []
    while len(points) < count:
        pt = tuple(_HASH_FIELD.random(rng) for _ in phi.ring.names)
        try:
            for c in phi.coefficients():
                c.specialize(pt, _HASH_FIELD)
        except PoleAtPoint:
            continue
        points.append(pt)
    return points


def _eval_monomial(e: Tuple[int, ...], pt: Tuple[int, ...]) -> int:
    v = 1
    for x, k in zip(pt, e):
        if k:
            v = _HASH_FIELD.mul(v, _HASH_FIELD.pow(x, k))
    return v


def _block_coeffs(b, pt) -> Tuple[int, ...]:
    if isinstance(b, Unary):
        return (b.a.specialize(pt, _HASH_FIELD),)
    return (b.a.specialize(pt, _HASH_FIELD), b.b.specialize(pt, _HASH_FIELD))


def _mask_to_element(ring: RationalFunctionField, monos, mask: int) -> FieldElement:
    terms = {monos[j]: 1 for j in range(len(monos)) if mask >> j & 1}
    return FieldElement(Poly(ring, terms))


# --- finite-field evidence -----------------------------------------------


@dataclass(frozen=True)
class EvidenceReport:
    claim: str
    trials: int
    passes: int
    poles_rejected: int
    seed: int
    field: str
    discriminating: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "trials": self.trials,
            "passes": self.passes,
            "poles_rejected": self.poles_rejected,
            "seed": self.seed,
            "field": self.field,
            "discriminating": self.discriminating,
        }


def specialization_witt_evidence(
    claim: SymbolSum | QuadraticForm,
    trials: int = 200,
    seed: int = 0,
    field: FiniteField | None = None,
    ring: RationalFunctionField | None = None,
    *,
    fold: int | None = None,
) -> EvidenceReport:
    """Check at random finite-field points that a form claimed Witt-zero is hyperbolic.

    A single failing point raises :class:`RefutedBySpecialization`.  Over a
    finite field every form built from 2-fold or higher Pfister forms is
    Witt-zero, so the report marks such claims as non-discriminating; pass
    ``fold`` for a plain form built from Pfister forms of that fold.
    """
    field = field or FiniteField(16)
    if isinstance(claim, SymbolSum):
        form = claim.expand(ring)
        discriminating = claim.fold == 1
    else:
        form = claim
        discriminating = fold is None or fold == 1
    if form.ring is None:
        return EvidenceReport(repr(claim), trials, trials, 0, seed, repr(field), False)
    rng = random.Random(seed)
    passes = poles = 0
    while passes < trials:
        pt = form.ring.random_point(rng, field)
        try:
            ff = form.specialize(pt, field)
        except PoleAtPoint:
            poles += 1
            if poles > 50 * trials:
                raise RuntimeError("too many poles; cannot sample this claim")
            continue
        wc = witt_decompose_finite(ff)
        if 2 * wc.witt_index != ff.dim:
            raise RefutedBySpecialization(
                f"claim {claim!r} fails at {pt} over {field}: Witt index {wc.witt_index} of dimension {ff.dim}",
                pt, field,
            )
        passes += 1
    return EvidenceReport(repr(claim), trials, passes, poles, seed, repr(field), discriminating)
