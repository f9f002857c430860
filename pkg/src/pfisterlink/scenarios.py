"""Scenario runners: each builds a report of tagged claims.

Tags: ``computed`` (exact computation), ``certified`` (a valuation lemma
whose hypotheses were checked), ``evidence`` (finite-field sampling; a
failure is a refutation) and ``theorem-cited`` (a cited result applied to
premises computed in the same report).  A report passes iff every claim
that is not theorem-cited passed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Dict, List, Sequence

from . import abstract_tight as at
from .field2 import FiniteField, MonomialValuation, RationalFunctionField
from .linkage import (
    PfisterSet,
    QuaternionAlgebra,
    Tri,
    albert_form,
    albert_prime,
    dim_bound_check,
    faivre_pair_criterion,
    insep_pair_test,
    left_linked_2fold,
    right_linked_2fold,
    same_square_class,
    sigma,
    strong_tightness_ladder,
    three_term_cancels,
    value_class_certificate,
)
from .literals import parse_form, parse_pfister, parse_symbol_sum
from .oracle import (
    RefutedBySpecialization,
    common_subform_obstruction,
    isotropy_search,
    monice2_certificate,
    monice_certificate,
    pfister_certificate,
    residue_split_certificate,
    specialization_witt_evidence,
)
from .quadform import QuadraticForm, scale
from .symbols import (
    ConstructionInapplicable,
    PfisterForm,
    SymbolSum,
    induction_identity_holds,
    left_linked_representatives,
    right_linked_representatives,
    subset_sum_symbol,
    symbol,
)

TAGS = ("computed", "certified", "evidence", "theorem-cited")


class UnknownScenario(KeyError):
    pass


@dataclass
class Claim:
    name: str
    tag: str
    passed: bool
    detail: Dict[str, Any] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "tag": self.tag, "passed": self.passed, "detail": self.detail}

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Claim":
        return cls(d["name"], d["tag"], d["passed"], d.get("detail", {}))


@dataclass
class Report:
    scenario: str
    params: Dict[str, Any] = dc_field(default_factory=dict)
    claims: List[Claim] = dc_field(default_factory=list)
    notes: List[str] = dc_field(default_factory=list)

    def add(self, name: str, tag: str, passed: bool, **detail: Any) -> Claim:
        c = Claim(name, tag, bool(passed), _plain(detail))
        self.claims.append(c)
        return c

    def cite(self, name: str, premises: Sequence[Claim], conclusion: str) -> Claim:
        """A theorem-cited claim holds as stated only when all its premises passed."""
        ok = all(p.passed for p in premises)
        return self.add(name, "theorem-cited", ok, conclusion=conclusion, premises=[p.name for p in premises])

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.claims if c.tag != "theorem-cited")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "params": self.params,
            "ok": self.ok,
            "claims": [c.to_dict() for c in self.claims],
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Report":
        return cls(d["scenario"], d.get("params", {}), [Claim.from_dict(c) for c in d.get("claims", [])], d.get("notes", []))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"scenario {self.scenario} {json.dumps(self.params, sort_keys=True, ensure_ascii=False)}"]
        for c in self.claims:
            status = "PASS" if c.passed else ("PREMISE FAILED" if c.tag == "theorem-cited" else "FAIL")
            lines.append(f"  [{c.tag}] {c.name}: {status}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append("OK" if self.ok else "FAILED")
        return "\n".join(lines)


def _plain(x: Any) -> Any:
    """JSON-ready copy with deterministic ordering."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((_plain(v) for v in x), key=repr)
    if isinstance(x, Tri):
        return x.value
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if hasattr(x, "to_dict"):
        return _plain(x.to_dict())
    return repr(x)


@dataclass(frozen=True)
class Config:
    n: int = 2
    s: int = 2
    field_k: int = 4
    seed: int = 0
    trials: int = 200
    degree_bound: int = 2

    @property
    def field(self) -> FiniteField:
        return FiniteField(self.field_k)

    def params(self, *keys: str) -> Dict[str, Any]:
        d = {"field": f"2^{self.field_k}", "seed": self.seed, "trials": self.trials, "degree_bound": self.degree_bound,
             "n": self.n, "s": self.s}
        return {k: d[k] for k in keys}


def _evidence(report: Report, name: str, claim, cfg: Config, ring=None, fold: int | None = None) -> Claim:
    try:
        ev = specialization_witt_evidence(claim, cfg.trials, cfg.seed, cfg.field, ring, fold=fold)
    except RefutedBySpecialization as e:
        return report.add(name, "evidence", False, error=str(e), point=list(e.point), field=repr(e.field))
    return report.add(name, "evidence", ev.passes == cfg.trials, **ev.to_dict())


def _formal_and_evidence(report: Report, name: str, claim: SymbolSum, cfg: Config) -> None:
    report.add(f"{name}: normalizes to 0", "computed", claim.is_formally_hyperbolic(), claim=repr(claim))
    _evidence(report, f"{name}: Witt-zero at random points", claim, cfg)


# --- scenarios --------------------------------------------------------------


def run_rels(cfg: Config) -> Report:
    """The three relations of the 2-fold symbol, plus their 1-fold analogues."""
    r = Report("rels", cfg.params("field", "seed", "trials"))
    R = RationalFunctionField(("α", "β", "β'"), FiniteField(1))
    a, b, b2 = R.gens
    _formal_and_evidence(r, "((α, α)) = 0", SymbolSum([symbol(a, a)]), cfg)
    _formal_and_evidence(r, "((α, β)) + ((α, β')) = ((α, β + β'))", symbol(a, b) + symbol(a, b2) + symbol(a, b + b2), cfg)
    _formal_and_evidence(r, "((α, β)) + ((β, α)) = 0", symbol(a, b) + symbol(b, a), cfg)
    _formal_and_evidence(r, "((β)) + ((β')) = ((β + β'))", symbol(b) + symbol(b2) + symbol(b + b2), cfg)
    r.add("((α, β)) is not proved zero", "computed", not symbol(a, b).is_formally_hyperbolic())
    d, _ = pfister_certificate(symbol(a, b), MonomialValuation(("α", "β")))
    r.add("((α, β)) anisotropic", "certified", d.certified, decision=d)
    r.notes.append("2-fold forms are hyperbolic over every finite field; sampling is discriminating only for the 1-fold identity")
    return r


def run_multiadd(cfg: Config) -> Report:
    r = Report("multiadd", cfg.params("field", "seed", "trials", "n"))
    n = max(cfg.n, 2)
    names = tuple(f"x{i}" for i in range(n)) + ("y",)
    R = RationalFunctionField(names, FiniteField(1))
    xs, y = R.gens[:n], R.gens[n]
    for i in range(n):
        e1 = list(xs)
        e2 = list(xs)
        e2[i] = y
        e3 = list(xs)
        e3[i] = xs[i] + y
        _formal_and_evidence(r, f"additive in entry {i}", symbol(*e1) + symbol(*e2) + symbol(*e3), cfg)
    for i, j in itertools.combinations(range(n), 2):
        e = list(xs)
        e[j] = e[i]
        _formal_and_evidence(r, f"alternating in entries {i}, {j}", SymbolSum([symbol(*e)]), cfg)
        p = list(xs)
        p[i], p[j] = p[j], p[i]
        _formal_and_evidence(r, f"symmetric in entries {i}, {j}", symbol(*xs) + symbol(*p), cfg)
    sq = list(xs)
    sq[0] = xs[0] * xs[0]
    _formal_and_evidence(r, "square entry", SymbolSum([symbol(*sq)]), cfg)
    return r


def main8_family(n: int):
    R = RationalFunctionField(tuple(f"α{i}" for i in range(n + 1)), FiniteField(1))
    al = R.gens
    psis = [symbol(*(al[j] for j in range(n + 1) if j != i)) for i in range(n + 1)]
    return R, psis


def run_main8(cfg: Config) -> Report:
    n = cfg.n
    r = Report("main8", cfg.params("n"))
    R, psis = main8_family(n)
    v = MonomialValuation(R.names)
    built = {}
    for k in range(1, n + 2):
        for I in itertools.combinations(range(n + 1), k):
            try:
                built[I] = subset_sum_symbol(psis, I)
            except ConstructionInapplicable as e:
                built[I] = e
    ok = all(not isinstance(x, Exception) for x in built.values())
    r.add(
        f"all {2 ** (n + 1) - 1} subset sums are single symbols",
        "computed",
        ok and len(built) == 2 ** (n + 1) - 1,
        examples={",".join(map(str, I)): repr(x) for I, x in list(built.items())[:: max(1, len(built) // 6)]},
    )
    reps = {frozenset(I): s for I, s in built.items() if not isinstance(s, Exception)}
    pset = PfisterSet.general(psis, reps)
    sig = sigma(pset)
    strong = r.add("invariant of the whole set normalizes to 0", "computed", sig.formally_zero(), sigma=sig)
    ladder = strong_tightness_ladder(pset, v)
    st = r.add("strongly tight by the ladder", "computed", ladder.strongly_tight is Tri.TRUE, strongly_tight=ladder.strongly_tight)
    ob = common_subform_obstruction(psis, v)
    obc = r.add("mod-2 value sets intersect in 0", "certified", ob.established, report=ob)
    r.cite("no common binary or bilinear 1-fold Pfister subform", [obc],
           "a common 2-dimensional subform would give a common nonzero class in every value set")
    r.cite("strongly tight set of n+1 forms without common slot", [strong, st, obc],
           "the family is strongly tight and not linked in either sense")
    return r


def counter36_family(n: int, s: int):
    names = tuple(f"β{i + 1}" for i in range(s)) + tuple(f"α{i + 1}" for i in range(n - 1))
    R = RationalFunctionField(names, FiniteField(1))
    betas, alphas = R.gens[:s], R.gens[s:]
    phi = PfisterForm(tuple(alphas[:-1]), alphas[-1])
    return R, list(betas), phi


def run_counter36(cfg: Config) -> Report:
    n, s = cfg.n, cfg.s
    r = Report("counter36", cfg.params("n", "s", "field", "seed", "trials"))
    R, betas, phi = counter36_family(n, s)
    v = MonomialValuation(R.names)
    pset = PfisterSet.right_linked(betas, phi)
    sig = sigma(pset)
    ident = r.add("closed form of the invariant (square-class identity)", "computed", bool(sig.closed_form_identity),
                  closed_form=repr(sig.closed_form), fold=sig.closed_form.fold)
    diff = sig.symbolic.expand(R) + sig.closed_form.expand()
    _evidence(r, "invariant equals the closed form at random points", diff, cfg, fold=n)
    d, _ = pfister_certificate(sig.closed_form, v)
    an = r.add(f"closed {n + s - 1}-fold form anisotropic over F", "certified", d.certified, decision=d)
    r.cite("not strongly tight over F", [ident, an], "the invariant is a nonzero Witt class")
    r.cite("strongly tight over the function field of the closed form", [ident],
           "the closed form becomes hyperbolic there, so the invariant vanishes")
    r.notes.append(
        f"the invariant is the {n + s - 1}-fold form <<β1..β{s}>> (x) phi; an entry count of n + s for it would need "
        f"an extra slot α{n} that the family does not have"
    )
    return r


def run_pairs(cfg: Config) -> Report:
    r = Report("pairs", cfg.params("degree_bound"))
    R = RationalFunctionField(("α1", "α2", "β1", "β2", "c"), FiniteField(1))
    a1, a2, b1, b2, c = R.gens
    v = MonomialValuation(R.names)
    # left-linked pair: tight with invariant 0
    reps = left_linked_representatives([a1, a2], [c])
    r.add("left-linked pair: three-term sum cancels", "computed",
          three_term_cancels(reps[frozenset([0])], reps[frozenset([1])], reps[frozenset([0, 1])]))
    # right-linked pair: invariant is <<β1, β2>> (x) phi
    pset = PfisterSet.right_linked([b1, b2], PfisterForm((), a1))
    sig = sigma(pset)
    r.add("right-linked pair: closed form identity", "computed", bool(sig.closed_form_identity), closed_form=repr(sig.closed_form))
    d, _ = pfister_certificate(sig.closed_form, v)
    r.add("right-linked generic pair: invariant anisotropic", "certified", d.certified, decision=d)
    # inseparable linkage through Alb'
    Q1, Q2 = QuaternionAlgebra(a1, b1), QuaternionAlgebra(a2, b1)
    f = insep_pair_test(Q1, Q2, degree_bound=1)
    r.add("common slot β: Alb' isotropic", "computed", f.value is Tri.TRUE, finding=f)
    ll = left_linked_2fold(Q1.norm_pfister(), Q2.norm_pfister())
    r.add("common slot β: left-linked", "computed", ll.value is Tri.TRUE, finding=ll)
    Q1, Q2 = QuaternionAlgebra(a1, b1), QuaternionAlgebra(a2, b2)
    ap = albert_prime(Q1, Q2)
    one = R.one
    dc = value_class_certificate([(b1, a1), (b2, a2), (one, None)], v)
    r.add("generic pair: Alb' anisotropic", "certified", dc.certified, form=repr(ap), decision=dc)
    fv = faivre_pair_criterion(Q1.norm_pfister(), Q2.norm_pfister())
    r.add("generic pair: pure-subform criterion does not claim linkage", "computed", fv.value is not Tri.TRUE, finding=fv)
    # separable linkage through Alb
    Q1, Q2 = QuaternionAlgebra(a1, b1), QuaternionAlgebra(a1, b2)
    alb = albert_form(Q1, Q2)
    w = isotropy_search(alb, 1)
    r.add("common α: Alb isotropic", "computed", w.isotropic, decision=w)
    r.add("common α: right-linked", "computed", right_linked_2fold(Q1.norm_pfister(), Q2.norm_pfister()).value is Tri.TRUE)
    Q1, Q2 = QuaternionAlgebra(a1, b1), QuaternionAlgebra(a2, b2)
    alb = albert_form(Q1, Q2)
    dc = value_class_certificate([(b1, a1), (b2, a2), (one, a1 + a2)], v)
    r.add("generic pair: Alb anisotropic", "certified", dc.certified, form=repr(alb), decision=dc)
    return r


def run_ladder_fuzz(cfg: Config) -> Report:
    r = Report("ladder-fuzz", cfg.params("seed", "trials"))
    prep, ladder = at.exhaustive_verification(3, 2)
    r.add("prep, every context with dim V <= 3 and codim U <= 2", "computed", prep.ok, report=prep.to_dict())
    r.add("ladder, every context with dim V <= 3 and codim U <= 2", "computed", ladder.ok, report=ladder.to_dict())
    prep, ladder = at.random_verification(5 * cfg.trials, cfg.seed)
    r.add("prep, seeded contexts with dim V in {4, 5}", "computed", prep.ok, report=prep.to_dict())
    r.add("ladder, seeded contexts with dim V in {4, 5}", "computed", ladder.ok, report=ladder.to_dict())
    r.notes.append("with codim U <= 2 a spanning coset-unique P has at most 4 elements, so dim V <= 3 there")
    return r


def run_updim(cfg: Config) -> Report:
    s = cfg.s
    r = Report("updim", cfg.params("s"))
    names = tuple(f"β{i + 1}" for i in range(s)) + ("α",)
    R = RationalFunctionField(names + tuple(f"a{i + 1}" for i in range(s)) + ("c",), FiniteField(1))
    g = R.gens
    betas, alpha = g[:s], g[s]
    alphas, c = g[s + 1: 2 * s + 1], g[2 * s + 1]
    reps = right_linked_representatives(betas, PfisterForm((), alpha))
    rep = dim_bound_check(reps, s)
    r.add(f"right-linked, s = {s}: dim <= 2^(s+1)", "computed", rep.holds, **rep.to_dict())
    if s >= 2:
        lreps = left_linked_representatives(alphas, [c])
        rep = dim_bound_check(lreps, s, (frozenset([0]), frozenset([1])))
        r.add(f"left-linked pair injected, s = {s}: dim <= 2^(s+1) - 6", "computed", rep.holds, **rep.to_dict())
        # right-linked with a left-linked pair: beta_2 = beta_1 * alpha
        cb = list(betas)
        cb[1] = betas[0] * alpha
        pset = PfisterSet.right_linked(cb, PfisterForm((), alpha))
        sig = sigma(pset)
        ll = left_linked_2fold(pset.forms[0].to_pfister(), pset.forms[1].to_pfister())
        r.add("right-linked with a left-linked pair: pair left-linked", "computed", ll.value is Tri.TRUE, finding=ll)
        r.add("right-linked with a left-linked pair: invariant is 0", "computed", sig.formally_zero(), sigma=sig)
    return r


def triple_setup():
    R = RationalFunctionField(("α", "β", "γ"), FiniteField(1))
    a, b, g = R.gens
    p1, p2, p3 = PfisterForm((g,), a), PfisterForm((g,), b), PfisterForm((a * g,), b)
    p23 = PfisterForm((a,), b)
    return R, (a, b, g), (p1, p2, p3, p23)


def run_triple(cfg: Config) -> Report:
    r = Report("triple", cfg.params("degree_bound", "seed"))
    R, (a, b, g), (p1, p2, p3, p23) = triple_setup()
    one = R.one
    f12 = left_linked_2fold(p1, p2)
    c12 = r.add("φ1, φ2 left-linked", "computed", f12.value is Tri.TRUE, finding=f12)
    f13 = left_linked_2fold(p1, p3)
    c13 = r.add("φ1, φ3 left-linked", "computed", f13.value is Tri.TRUE, finding=f13)
    f23 = right_linked_2fold(p2, p3)
    c23 = r.add("φ2, φ3 right-linked", "computed", f23.value is Tri.TRUE, finding=f23)
    rep23 = PfisterSet.right_linked([g, a * g], PfisterForm((), b)).representative(frozenset([0, 1])).to_pfister()
    s23 = r.add("φ23 = [[α, β]] represents φ2 + φ3", "computed",
                same_square_class(rep23.bilinear[0], p23.bilinear[0]) and rep23.quad == p23.quad, representative=repr(rep23))
    # Alb of the quaternion algebras with norm forms φ1 and φ23
    alb = albert_form(QuaternionAlgebra(a, g), QuaternionAlgebra(b, a))
    unit = scale(a, QuadraticForm.binary(one, b)) + QuadraticForm.binary(one, a + b)
    part = QuadraticForm.binary(one, a)
    vab = MonomialValuation(("α", "β"))
    d_unit = monice2_certificate(a, b, a + b, vab)
    d_part = monice_certificate([a], MonomialValuation(("α",)))
    r.add("α[1, β] _|_ [1, α + β] anisotropic", "certified", d_unit.certified and d_unit.matrix_rank == 2, decision=d_unit)
    r.add("[1, α] anisotropic", "certified", d_part.certified, decision=d_part)
    d = residue_split_certificate("γ", unit, part, d_unit, d_part)
    c_alb = r.add("Alb = γ[1, α] _|_ α[1, β] _|_ [1, α + β] anisotropic", "certified", d.certified, form=repr(alb), decision=d)
    searches = [
        ("α[1, β] _|_ [1, α + β]", unit, cfg.degree_bound),
        ("Alb", alb, 1),
        ("Alb", alb, cfg.degree_bound),
    ]
    for name, form, deg in searches:
        w = isotropy_search(form, deg, cfg.seed)
        r.add(f"no isotropic vector of degree <= {deg}: {name}", "computed", not w.isotropic, decision=w)
    r.cite("φ1 and φ23 are not right-linked", [c_alb], "Alb of their quaternion algebras is anisotropic")
    r.cite("Σ_S is not in I_q^4 over E = F(Alb)", [c12, c13, c23, s23, c_alb],
           "the set {φ1, φ2, φ3} is tight over E and its invariant does not lie in I_q^4 E")
    return r


SCENARIOS: Dict[str, Callable[[Config], Report]] = {
    "rels": run_rels,
    "multiadd": run_multiadd,
    "main8": run_main8,
    "counter36": run_counter36,
    "pairs": run_pairs,
    "ladder-fuzz": run_ladder_fuzz,
    "updim": run_updim,
    "triple": run_triple,
}


def run(name: str, cfg: Config | None = None) -> Report:
    if name not in SCENARIOS:
        raise UnknownScenario(f"unknown scenario {name!r}; choose from {sorted(SCENARIOS)}")
    return SCENARIOS[name](cfg or Config())


def run_file(doc: Dict[str, Any], cfg: Config) -> Report:
    """A scenario described in JSON: variables and a list of claims.

    Claim kinds: ``witt_zero`` (symbol sum; formal check plus sampling),
    ``formally_zero`` (symbol sum), ``anisotropic`` (form; valuation lemma on a
    Pfister literal) and ``no_witness`` (form; bounded search).
    """
    R = RationalFunctionField(tuple(doc["variables"]), FiniteField(int(doc.get("field_k", 1))))
    r = Report(doc.get("name", "file"), {"variables": list(R.names)} | cfg.params("field", "seed", "trials", "degree_bound"))
    for c in doc.get("claims", []):
        kind, text = c["kind"], c["value"]
        name = c.get("name", f"{kind}: {text}")
        if kind == "witt_zero":
            x = parse_symbol_sum(R, text)
            _evidence(r, name, x, cfg)
        elif kind == "formally_zero":
            x = parse_symbol_sum(R, text)
            r.add(name, "computed", x.is_formally_hyperbolic(), normal_form=x.to_json())
        elif kind == "anisotropic":
            d, _ = pfister_certificate(parse_pfister(R, text), MonomialValuation(R.names))
            r.add(name, "certified", d.certified, decision=d)
        elif kind == "no_witness":
            w = isotropy_search(parse_form(R, text), cfg.degree_bound, cfg.seed)
            r.add(name, "computed", not w.isotropic, decision=w)
        else:
            raise ValueError(f"unknown claim kind {kind!r}")
    return r
