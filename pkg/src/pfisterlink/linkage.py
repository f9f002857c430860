"""Linkage, tightness and the subset-sum invariant for sets of Pfister forms.

Sets come in three shapes: right-linked (``<<beta_i>> (x) phi``),
left-linked (``b (x) [1, alpha_i]``) and general sets whose subset
representatives are supplied by the caller.  Verdicts are three-valued;
``UNKNOWN`` is returned whenever neither a construction nor a certificate
settles the question.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, FrozenSet, List, Mapping, Sequence, Tuple

from .field2 import FieldElement, MonomialValuation, RationalFunctionField, valuation, valuation_mod2
from .oracle import Decision, Verdict, isotropy_search, pfister_certificate
from .quadform import QuadraticForm, evaluate, orth_sum, pure_subform, scale, witt_index_lower_bound, witt_reduce
from .symbols import (
    PfisterForm,
    QPfisterSymbol,
    SquareClassRing,
    SymbolSum,
    induction_identity_holds,
    left_linked_representatives,
    norm_values_with_witness,
    right_linked_representatives,
    wp_reduce,
)

OPEN_SET_QUESTION = (
    "Open: a right-linked set whose members are pairwise left-linked is strongly tight, "
    "but whether such a set is left-linked as a whole is not known and is not decided here."
)


class Tri(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class HypothesisNotEstablished(ValueError):
    pass


@dataclass(frozen=True)
class Finding:
    """A three-valued answer with the route that produced it."""

    value: Tri
    method: str
    details: Dict[str, Any] = dc_field(default_factory=dict)
    decisions: Tuple[Decision, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        out = {"value": self.value.value, "method": self.method}
        if self.details:
            out["details"] = {k: self.details[k] for k in sorted(self.details)}
        if self.decisions:
            out["decisions"] = [d.to_dict() for d in self.decisions]
        return out


def same_square_class(x: FieldElement, y: FieldElement) -> bool:
    return not x.is_zero() and not y.is_zero() and (x * y).is_square()


def _subsets(s: int, min_size: int = 0):
    for r in range(min_size, s + 1):
        for T in itertools.combinations(range(s), r):
            yield frozenset(T)


# --- sets and the invariant ---------------------------------------------


class PfisterSet:
    """A finite set of n-fold Pfister forms with the structure needed for subset representatives."""

    def __init__(
        self,
        forms: Sequence[QPfisterSymbol],
        structure: str,
        representatives: Mapping[FrozenSet[int], QPfisterSymbol | None] | None = None,
        *,
        betas: Sequence[FieldElement] = (),
        phi: PfisterForm | None = None,
        alphas: Sequence[FieldElement] = (),
        b_gens: Sequence[FieldElement] = (),
    ) -> None:
        self.forms = tuple(forms)
        if len({f.n for f in self.forms}) > 1:
            raise ValueError("forms of different folds")
        self.structure = structure
        self.betas = tuple(betas)
        self.phi = phi
        self.alphas = tuple(alphas)
        self.b_gens = tuple(b_gens)
        self._reps = dict(representatives) if representatives is not None else None

    @classmethod
    def right_linked(cls, betas: Sequence[FieldElement], phi: PfisterForm) -> "PfisterSet":
        reps = right_linked_representatives(betas, phi)
        sym = {T: (p.to_symbol() if p is not None else None) for T, p in reps.items()}
        forms = [sym[frozenset([i])] for i in range(len(betas))]
        return cls(forms, "RightLinked", sym, betas=betas, phi=phi)

    @classmethod
    def left_linked(cls, alphas: Sequence[FieldElement], b_gens: Sequence[FieldElement]) -> "PfisterSet":
        reps = left_linked_representatives(alphas, b_gens)
        sym = {T: (p.to_symbol() if p is not None else None) for T, p in reps.items()}
        forms = [sym[frozenset([i])] for i in range(len(alphas))]
        return cls(forms, "LeftLinked", sym, alphas=alphas, b_gens=b_gens)

    @classmethod
    def general(
        cls, forms: Sequence[QPfisterSymbol], representatives: Mapping[FrozenSet[int], QPfisterSymbol | None] | None = None
    ) -> "PfisterSet":
        return cls(forms, "General", representatives)

    @property
    def s(self) -> int:
        return len(self.forms)

    @property
    def n(self) -> int:
        return self.forms[0].n

    def representative(self, T: FrozenSet[int]) -> QPfisterSymbol | None:
        if self._reps is None or T not in self._reps:
            raise HypothesisNotEstablished(f"no representative supplied for subset {sorted(T)}")
        return self._reps[T]

    def check_representatives(self) -> Dict[str, Any]:
        """For left-linked and general sets the representatives must equal the subset sums exactly."""
        out = {}
        for T in _subsets(self.s, 1):
            rep = self.representative(T)
            target = SymbolSum([self.forms[i] for i in sorted(T)])
            exact = target.equivalent(rep) if rep is not None else target.is_formally_hyperbolic()
            out[",".join(map(str, sorted(T)))] = exact
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {"structure": self.structure, "forms": [repr(f) for f in self.forms]}


@dataclass(frozen=True)
class SigmaInvariant:
    symbolic: SymbolSum
    closed_form: PfisterForm | None = None
    closed_form_identity: bool | None = None

    def formally_zero(self) -> bool:
        """Zero by normalization, or by a certified closed form that is formally hyperbolic."""
        if self.symbolic.is_formally_hyperbolic():
            return True
        return bool(self.closed_form_identity) and self.closed_form is not None and self.closed_form.is_formally_hyperbolic()

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "terms": len(self.symbolic),
            "normal_form": self.symbolic.to_json(),
            "formally_zero": self.formally_zero(),
        }
        if self.closed_form is not None:
            out["closed_form"] = repr(self.closed_form)
            out["closed_form_identity"] = self.closed_form_identity
        return out


def sigma(pset: PfisterSet, subset: FrozenSet[int] | None = None) -> SigmaInvariant:
    """Sum of the representatives over all nonempty subsets of ``subset`` (default: all)."""
    idx = sorted(subset) if subset is not None else list(range(pset.s))
    terms = []
    for r in range(1, len(idx) + 1):
        for T in itertools.combinations(idx, r):
            rep = pset.representative(frozenset(T))
            if rep is not None:
                terms.append(rep)
    symbolic = SymbolSum(terms, pset.n)
    if pset.structure == "RightLinked":
        closed = pset.phi
        for i in idx:
            closed = closed.times(pset.betas[i])
        return SigmaInvariant(symbolic, closed, induction_identity_holds(len(idx), with_alpha=False))
    return SigmaInvariant(symbolic)


# --- pairs ----------------------------------------------------------------


def pair_left_linkage_rightlinked(
    beta: FieldElement,
    gamma: FieldElement,
    alphas: Sequence[FieldElement],
    v: MonomialValuation | None = None,
) -> Finding:
    """Left-linkage of [[beta, alpha_1..alpha_{n-1}]] and [[gamma, alpha_1..alpha_{n-1}]].

    They are left-linked exactly when [[gamma, beta, alpha_1..alpha_{n-1}]]
    is hyperbolic.  That form is tested for formal hyperbolicity, then for
    anisotropy with the monomial-value lemma.
    """
    if not alphas:
        raise ValueError("need at least the quadratic slot")
    pi = PfisterForm((gamma, beta) + tuple(alphas[:-1]), alphas[-1])
    details = {"pi": repr(pi)}
    if pi.is_formally_hyperbolic() or pi.to_symbol().is_formally_hyperbolic():
        return Finding(Tri.TRUE, "pi formally hyperbolic", details)
    v = v or MonomialValuation(beta.ring.names)
    d, betas = pfister_certificate(pi, v)
    if d.certified:
        return Finding(Tri.FALSE, "pi certified anisotropic", details, (d,))
    return Finding(Tri.UNKNOWN, "undecided", details, (d,))


def _faivre_presentations(p: PfisterForm):
    for j in range(len(p.bilinear)):
        yield p.bilinear[:j] + p.bilinear[j + 1:], p.bilinear[j]


def faivre_pair_criterion(phi: PfisterForm, psi: PfisterForm) -> Finding:
    """Left-linked if the pure subforms give i_W(phi' _|_ psi') >= 2^(n-1) - 1.

    Pure subforms are built from every presentation phi = b (x) [[beta, alpha]]
    and the best sound lower bound is kept; a slack bound gives ``UNKNOWN``.
    """
    if phi.fold != psi.fold or phi.fold < 2:
        raise ValueError("need two n-fold forms with n >= 2")
    n = phi.fold
    bound = 2 ** (n - 1) - 1
    best, best_form = -1, None
    for gp, bp in _faivre_presentations(phi):
        fp = pure_subform(gp, bp, phi.quad)
        for gq, bq in _faivre_presentations(psi):
            form = orth_sum(fp, pure_subform(gq, bq, psi.quad))
            lb = witt_index_lower_bound(form)
            if lb > best:
                best, best_form = lb, form
        if best >= bound:
            break
    details = {"bound": bound, "lower_bound": best, "form": repr(best_form)}
    if best >= bound:
        return Finding(Tri.TRUE, "pure-subform Witt index", details)
    return Finding(Tri.UNKNOWN, "pure-subform bound not reached", details)


def left_linked_2fold(p1: PfisterForm, p2: PfisterForm) -> Finding:
    """Constructive left-linkage of 2-fold forms [[c1, a1]] and [[c2, a2]].

    <<c>> (x) [1, a] = <<c theta>> (x) [1, a] whenever theta is a value of
    [1, a], so a common slot is searched among c1, c2 rescaled by such values.
    """
    if p1.fold != 2 or p2.fold != 2:
        raise ValueError("2-fold forms expected")
    (c1,), (c2,) = p1.bilinear, p2.bilinear
    if same_square_class(c1, c2):
        return Finding(Tri.TRUE, "common slot", {"slot": repr(c1)})
    for (p, q), label in (((p1, p2), "first"), ((p2, p1), "second")):
        (c,), (d,) = p.bilinear, q.bilinear
        form = QuadraticForm.binary(p.ring.one, p.quad)
        for theta, w in norm_values_with_witness(p.quad):
            if evaluate(form, w) != theta:
                raise AssertionError(f"{w} does not represent {theta}")
            if same_square_class(c * theta, d):
                return Finding(
                    Tri.TRUE,
                    "common slot after rescaling",
                    {"rescaled": label, "theta": repr(theta), "witness": [repr(x) for x in w], "slot": repr(c * theta)},
                )
    return Finding(Tri.UNKNOWN, "no common slot found")


def right_linked_2fold(p1: PfisterForm, p2: PfisterForm) -> Finding:
    """Common quadratic slot [1, a] up to the Artin-Schreier image."""
    if wp_reduce(p1.quad + p2.quad).is_zero():
        return Finding(Tri.TRUE, "common quadratic slot", {"slot": repr(p1.quad)})
    return Finding(Tri.UNKNOWN, "no common quadratic slot found")


# --- quaternion algebras ----------------------------------------------------


@dataclass(frozen=True)
class QuaternionAlgebra:
    """[alpha, beta): x^2 + x = alpha, y^2 = beta, y x y^-1 = x + 1."""

    alpha: FieldElement
    beta: FieldElement

    def __post_init__(self) -> None:
        if self.beta.is_zero():
            raise ValueError("beta must be nonzero")

    def norm_pfister(self) -> PfisterForm:
        return PfisterForm((self.beta,), self.alpha)

    def __repr__(self) -> str:
        return f"[{self.alpha}, {self.beta})"


def norm_form(Q: QuaternionAlgebra) -> QPfisterSymbol:
    return Q.norm_pfister().to_symbol()


def albert_form(Q1: QuaternionAlgebra, Q2: QuaternionAlgebra) -> QuadraticForm:
    ring = Q1.alpha.ring
    one = ring.one
    return (
        scale(Q1.beta, QuadraticForm.binary(one, Q1.alpha))
        + scale(Q2.beta, QuadraticForm.binary(one, Q2.alpha))
        + QuadraticForm.binary(one, Q1.alpha + Q2.alpha)
    )


def albert_prime(Q1: QuaternionAlgebra, Q2: QuaternionAlgebra) -> QuadraticForm:
    ring = Q1.alpha.ring
    one = ring.one
    return (
        scale(Q1.beta, QuadraticForm.binary(one, Q1.alpha))
        + scale(Q2.beta, QuadraticForm.binary(one, Q2.alpha))
        + QuadraticForm.unary(one)
    )


def value_class_certificate(parts: Sequence[Tuple[FieldElement, FieldElement | None]], v: MonomialValuation) -> Decision:
    """Anisotropy of an orthogonal sum of pieces c*[1, a] (a given) or <c> (a None).

    With nu(a) < 0 and nu(a) odd somewhere, the values of c*[1, a] have
    classes in {nu(c), nu(c) + nu(a)} modulo 2.  If these class sets are
    pairwise disjoint, no two pieces can cancel in a sum, so the form is
    anisotropic.  This is the argument behind the two-block lemma, applied
    to any number of pieces.
    """
    classes: List[frozenset] = []
    hyp: Dict[str, Any] = {"valuation": repr(v), "pieces": []}
    ok = True
    for c, a in parts:
        pc = valuation_mod2(c, v)
        if a is None:
            cls = frozenset([pc])
            hyp["pieces"].append({"unary": repr(c), "classes": sorted(map(list, cls))})
        else:
            va = valuation(a, v)
            pa = valuation_mod2(a, v)
            good = v.is_negative(va) and any(pa)
            ok = ok and good
            cls = frozenset([pc, tuple(x ^ y for x, y in zip(pc, pa))])
            hyp["pieces"].append(
                {"scale": repr(c), "slot": repr(a), "slot_value": list(va), "slot_ok": good, "classes": sorted(map(list, cls))}
            )
        classes.append(cls)
    disjoint = all(not (x & y) for x, y in itertools.combinations(classes, 2))
    hyp["classes_disjoint"] = disjoint
    verdict = Verdict.CERTIFIED_ANISOTROPIC if ok and disjoint else Verdict.UNKNOWN
    return Decision(verdict, "disjoint value classes", hyp, len(parts))


def insep_pair_test(
    Q1: QuaternionAlgebra, Q2: QuaternionAlgebra, v: MonomialValuation | None = None, degree_bound: int = 1
) -> Finding:
    """Common inseparable maximal subfield, decided through isotropy of Alb'."""
    ap = albert_prime(Q1, Q2)
    k, _ = witt_reduce(ap)
    details = {"form": repr(ap)}
    if k >= 1:
        return Finding(Tri.TRUE, "hyperbolic plane split off", details)
    d = isotropy_search(ap, degree_bound)
    if d.isotropic:
        return Finding(Tri.TRUE, "isotropic vector", details, (d,))
    v = v or MonomialValuation(Q1.alpha.ring.names)
    one = Q1.alpha.ring.one
    try:
        c = value_class_certificate([(Q1.beta, Q1.alpha), (Q2.beta, Q2.alpha), (one, None)], v)
    except ValueError:
        c = Decision.unknown(lemma="disjoint value classes")
    if c.certified:
        return Finding(Tri.FALSE, "Alb' certified anisotropic", details, (d, c))
    return Finding(Tri.UNKNOWN, "undecided", details, (d, c))


# --- ladder and reports ---------------------------------------------------


@dataclass
class LinkageReport:
    set: Dict[str, Any]
    n: int
    s: int
    tight: Tri = Tri.UNKNOWN
    strongly_tight: Tri = Tri.UNKNOWN
    left_linked: Tri = Tri.UNKNOWN
    right_linked: Tri = Tri.UNKNOWN
    pairwise: List[Dict[str, Any]] = dc_field(default_factory=list)
    sigma: Dict[str, Any] = dc_field(default_factory=dict)
    subsets: List[Dict[str, Any]] = dc_field(default_factory=list)
    certificates: List[Dict[str, Any]] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)

    def __post_init__(self) -> None:
        self.enforce()

    def enforce(self) -> None:
        if self.left_linked is Tri.TRUE:
            if self.right_linked is Tri.FALSE:
                raise AssertionError("left-linked but certified not right-linked")
            self.right_linked = Tri.TRUE
        if self.strongly_tight is Tri.TRUE:
            if self.tight is Tri.FALSE:
                raise AssertionError("strongly tight but not tight")
            self.tight = Tri.TRUE

    def to_dict(self) -> Dict[str, Any]:
        self.enforce()
        return {
            "set": self.set,
            "n": self.n,
            "s": self.s,
            "tight": self.tight.value,
            "strongly_tight": self.strongly_tight.value,
            "left_linked": self.left_linked.value,
            "right_linked": self.right_linked.value,
            "pairwise": self.pairwise,
            "sigma": self.sigma,
            "subsets": self.subsets,
            "certificates": self.certificates,
            "notes": self.notes,
        }


def strong_tightness_ladder(pset: PfisterSet, v: MonomialValuation | None = None) -> LinkageReport:
    """Strongly tight iff the invariant vanishes on every subset of size > 1.

    Each subset invariant is tested by normalization (and, for right-linked
    sets, through its closed form).  A right-linked subset whose closed form
    is certified anisotropic makes the set certifiably not strongly tight.
    """
    report = LinkageReport(pset.to_dict(), pset.n, pset.s)
    if pset.structure == "RightLinked":
        report.tight = Tri.TRUE
        report.right_linked = Tri.TRUE
    if pset.structure == "LeftLinked":
        report.left_linked = Tri.TRUE
        report.tight = Tri.TRUE
    if pset.structure == "General":
        checks = pset.check_representatives()
        if all(checks.values()):
            report.tight = Tri.TRUE
        report.certificates.append({"representatives_are_exact_sums": checks})
    all_zero = True
    refuted = False
    for T in _subsets(pset.s, 2):
        sig = sigma(pset, T)
        entry = {"subset": sorted(T), **sig.to_dict()}
        if not sig.formally_zero():
            all_zero = False
            if sig.closed_form is not None and sig.closed_form_identity:
                d, _ = pfister_certificate(sig.closed_form, v or MonomialValuation(sig.closed_form.ring.names))
                entry["closed_form_certificate"] = d.to_dict()
                if d.certified:
                    refuted = True
        report.subsets.append(entry)
    full = sigma(pset)
    report.sigma = full.to_dict()
    if all_zero and report.tight is Tri.TRUE:
        report.strongly_tight = Tri.TRUE
    elif refuted:
        report.strongly_tight = Tri.FALSE
    report.notes.append(OPEN_SET_QUESTION)
    report.enforce()
    return report


# --- invariant of 2-fold families ----------------------------------------


@dataclass(frozen=True)
class DimBoundReport:
    s: int
    summands: int
    constructed_dim: int
    bound: int
    cancelled: Tuple[Tuple[int, ...], ...]
    form: QuadraticForm

    @property
    def holds(self) -> bool:
        return self.constructed_dim <= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "summands": self.summands,
            "constructed_dim": self.constructed_dim,
            "bound": self.bound,
            "holds": self.holds,
            "cancelled": [list(c) for c in self.cancelled],
        }


def three_term_cancels(p1: PfisterForm, p2: PfisterForm, p12: PfisterForm) -> bool:
    """p1 + p2 = p12 in the Witt group, proved formally.

    Either the symbols cancel under normalization, or the three forms are
    <<c1>> phi, <<c2>> phi, <<c1 c2>> phi with <<c1, c2>> phi formally hyperbolic
    (the three-term sum equals <<c1, c2>> phi by the square-class identity).
    """
    if SymbolSum([p1.to_symbol(), p2.to_symbol(), p12.to_symbol()]).is_formally_hyperbolic():
        return True
    if not (p1.quad == p2.quad == p12.quad and p1.bilinear[1:] == p2.bilinear[1:] == p12.bilinear[1:]):
        return False
    c1, c2, c12 = p1.bilinear[0], p2.bilinear[0], p12.bilinear[0]
    if not same_square_class(c1 * c2, c12):
        return False
    if not induction_identity_holds(2, with_alpha=False):
        return False
    return PfisterForm((c1, c2) + p1.bilinear[1:], p1.quad).is_formally_hyperbolic()


def dim_bound_check(
    reps: Mapping[FrozenSet[int], PfisterForm | None],
    s: int,
    left_linked_pair: Tuple[FrozenSet[int], FrozenSet[int]] | None = None,
) -> DimBoundReport:
    """Build a small representative of the invariant of a tight set of 2-fold forms.

    Each summand <<c>> (x) [1, a] contributes c[1, a]; the [1, a] parts
    combine into one [1, sum a].  With a left-linked pair (S', S'') the three
    summands for S', S'' and their symmetric difference cancel first.
    """
    live = list(_subsets(s, 1))
    cancelled: List[Tuple[int, ...]] = []
    bound = 2 ** (s + 1)
    if left_linked_pair is not None:
        A, B = left_linked_pair
        C = A ^ B
        pa, pb, pc = reps[A], reps[B], reps[C]
        if left_linked_2fold(pa, pb).value is not Tri.TRUE:
            raise HypothesisNotEstablished("the injected pair is not shown left-linked")
        if not three_term_cancels(pa, pb, pc):
            raise HypothesisNotEstablished("the three summands are not shown to cancel")
        live = [T for T in live if T not in (A, B, C)]
        cancelled = [tuple(sorted(A)), tuple(sorted(B)), tuple(sorted(C))]
        bound = 2 ** (s + 1) - 6
    ring = next(p for p in reps.values() if p is not None).ring
    form = QuadraticForm((), ring)
    total = ring.zero
    for T in live:
        p = reps[T]
        if p is None:
            continue
        if p.fold != 2:
            raise ValueError("2-fold representatives expected")
        (c,) = p.bilinear
        form = form + scale(c, QuadraticForm.binary(ring.one, p.quad))
        total = total + p.quad
    form = form + QuadraticForm.binary(ring.one, total)
    return DimBoundReport(s, len(live), form.dim, bound, tuple(cancelled), form)


def triple_sigma(reps: Mapping[FrozenSet[int], PfisterForm]) -> SigmaInvariant:
    """The seven-term invariant of a tight triple from its subset representatives."""
    terms = []
    for T in _subsets(3, 1):
        if T not in reps:
            raise HypothesisNotEstablished(f"missing representative for {sorted(T)}")
        if reps[T] is not None:
            terms.append(reps[T].to_symbol())
    return SigmaInvariant(SymbolSum(terms))


def triple_reduction(reps: Mapping[FrozenSet[int], PfisterForm]) -> Dict[str, Any]:
    """With (1,2) and (1,3) left-linked, drop the six cancelling terms of the triple invariant.

    What remains is p_1 + p_23 + p_123, the invariant of the pair (p_1, p_23).
    """
    f = frozenset
    c12 = three_term_cancels(reps[f([0])], reps[f([1])], reps[f([0, 1])])
    c13 = three_term_cancels(reps[f([0])], reps[f([2])], reps[f([0, 2])])
    remaining = [reps[f([0])], reps[f([1, 2])], reps[f([0, 1, 2])]]
    return {"pair_12_cancels": c12, "pair_13_cancels": c13, "remaining": [repr(p) for p in remaining]}


def annihilator_identity_check(alphas: Sequence[FieldElement], psi: PfisterForm) -> Dict[str, Any]:
    """Check that <<a_1>> + ... + <<a_s>> + <<a_1...a_s>> kills psi.

    Pairwise left-linkage of the <<a_i>> psi means every <<a_i, a_j>> psi is
    hyperbolic.  The sum lies in the ideal generated by the
    (<1> + <a_i>)(<1> + <a_j>), which is checked by linear algebra in the
    square-class group ring; each generator times psi is hyperbolic.
    """
    s = len(alphas)
    pairs = {}
    for i, j in itertools.combinations(range(s), 2):
        p = PfisterForm((alphas[i], alphas[j]) + psi.bilinear, psi.quad)
        pairs[f"{i},{j}"] = p.is_formally_hyperbolic()
    if not all(pairs.values()):
        raise HypothesisNotEstablished(f"pairwise left-linkage not established: {pairs}")
    R = SquareClassRing
    masks = [1 << i for i in range(s)]
    target = frozenset()
    for m in masks:
        target = R.add(target, R.pfister(m))
    allm = 0
    for m in masks:
        allm ^= m
    target = R.add(target, R.pfister(allm))
    gens = []
    for i, j in itertools.combinations(range(s), 2):
        g = R.pfister(masks[i], masks[j])
        for h in range(1 << s):
            gens.append(R.mul(R.unit(h), g))
    in_ideal = _in_f2_span(target, gens)
    return {"pairwise_hyperbolic": pairs, "in_ideal": in_ideal, "holds": in_ideal}


def _in_f2_span(target: FrozenSet[int], gens: Sequence[FrozenSet[int]]) -> bool:
    def to_int(x):
        return sum(1 << m for m in x)

    basis: Dict[int, int] = {}
    for g in gens:
        x = to_int(g)
        while x:
            top = x.bit_length() - 1
            if top in basis:
                x ^= basis[top]
            else:
                basis[top] = x
                break
    x = to_int(target)
    while x:
        top = x.bit_length() - 1
        if top not in basis:
            return False
        x ^= basis[top]
    return True
