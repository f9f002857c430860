import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import ring
from pfisterlink.field2 import MonomialValuation
from pfisterlink.linkage import (
    HypothesisNotEstablished,
    LinkageReport,
    PfisterSet,
    QuaternionAlgebra,
    Tri,
    albert_form,
    albert_prime,
    annihilator_identity_check,
    dim_bound_check,
    faivre_pair_criterion,
    insep_pair_test,
    left_linked_2fold,
    pair_left_linkage_rightlinked,
    right_linked_2fold,
    same_square_class,
    sigma,
    strong_tightness_ladder,
    three_term_cancels,
    triple_sigma,
    value_class_certificate,
)
from pfisterlink.oracle import isotropy_search
from pfisterlink.quadform import QuadraticForm, scale
from pfisterlink.scenarios import main8_family
from pfisterlink.symbols import PfisterForm, left_linked_representatives, right_linked_representatives, subset_sum_symbol, symbol

R = ring(("α", "β", "γ", "c"))
a, b, g, c = R.gens
V = MonomialValuation(R.names)
f = frozenset


def test_same_square_class():
    assert same_square_class(a, a * b * b)
    assert not same_square_class(a, b)


def test_pair_criterion_generic_and_equal():
    assert pair_left_linkage_rightlinked(b, g, [a], V).value is Tri.FALSE
    assert pair_left_linkage_rightlinked(b, b, [a], V).value is Tri.TRUE
    assert pair_left_linkage_rightlinked(b, b * a, [a], V).value is Tri.TRUE
    with pytest.raises(ValueError):
        pair_left_linkage_rightlinked(b, g, [], V)


def test_faivre_on_identical_forms():
    p = PfisterForm((b,), a)
    assert faivre_pair_criterion(p, p).value is Tri.TRUE
    with pytest.raises(ValueError):
        faivre_pair_criterion(PfisterForm((), a), PfisterForm((), a))


def test_faivre_never_contradicts_pair_criterion():
    mons = [a, b, g, c, a * b, b * g, a * g * c]
    for x, y in itertools.product(mons, repeat=2):
        exact = pair_left_linkage_rightlinked(x, y, [a], V).value
        fv = faivre_pair_criterion(PfisterForm((x,), a), PfisterForm((y,), a)).value
        assert not (exact is Tri.FALSE and fv is Tri.TRUE)


def test_left_linked_2fold():
    assert left_linked_2fold(PfisterForm((c,), a), PfisterForm((c * b * b,), g)).value is Tri.TRUE
    r = left_linked_2fold(PfisterForm((c,), a), PfisterForm((c * a,), g))
    assert r.value is Tri.TRUE and r.method == "common slot after rescaling"
    assert left_linked_2fold(PfisterForm((b,), a), PfisterForm((c,), g)).value is Tri.UNKNOWN
    with pytest.raises(ValueError):
        left_linked_2fold(PfisterForm((b, c), a), PfisterForm((c,), g))


def test_right_linked_2fold():
    assert right_linked_2fold(PfisterForm((b,), a), PfisterForm((c,), a + b * b + b)).value is Tri.TRUE
    assert right_linked_2fold(PfisterForm((b,), a), PfisterForm((c,), g)).value is Tri.UNKNOWN


def test_albert_forms():
    Q1, Q2 = QuaternionAlgebra(a, b), QuaternionAlgebra(g, c)
    assert albert_form(Q1, Q2).dim == 6 and albert_prime(Q1, Q2).dim == 5
    with pytest.raises(ValueError):
        QuaternionAlgebra(a, R.zero)


def test_insep_pair_test():
    assert insep_pair_test(QuaternionAlgebra(a, b), QuaternionAlgebra(g, b)).value is Tri.TRUE
    assert insep_pair_test(QuaternionAlgebra(a, b), QuaternionAlgebra(g, c)).value is Tri.FALSE


def test_value_class_certificate_hypotheses():
    assert value_class_certificate([(b, a), (R.one, None)], V).certified
    # same class twice
    assert not value_class_certificate([(b, a), (b, g)], V).certified
    # slot of even valuation
    assert not value_class_certificate([(b, a * a)], V).certified


@given(st.lists(st.tuples(st.integers(-1, 1), st.integers(-1, 1), st.integers(-2, 0)), min_size=1, max_size=2))
def test_value_class_certificate_sound(data):
    S = ring(("x", "y", "z"))
    v = MonomialValuation(S.names)
    parts = [(S.monomial((i, j, 0)), S.monomial((0, 0, k)) if k else None) for i, j, k in data]
    d = value_class_certificate(parts, v)
    if d.certified:
        phi = QuadraticForm((), S)
        for cc, aa in parts:
            phi = phi + (scale(cc, QuadraticForm.binary(S.one, aa)) if aa is not None else QuadraticForm.unary(cc))
        assert not isotropy_search(phi, 1).isotropic


def test_report_consistency_rule():
    r = LinkageReport({}, 2, 2, left_linked=Tri.TRUE, strongly_tight=Tri.TRUE)
    assert r.right_linked is Tri.TRUE and r.tight is Tri.TRUE
    with pytest.raises(AssertionError):
        LinkageReport({}, 2, 2, left_linked=Tri.TRUE, right_linked=Tri.FALSE)
    with pytest.raises(AssertionError):
        LinkageReport({}, 2, 2, strongly_tight=Tri.TRUE, tight=Tri.FALSE)


def test_ladder_right_linked_generic_not_strongly_tight():
    rep = strong_tightness_ladder(PfisterSet.right_linked([b, g], PfisterForm((), a)), V)
    assert rep.tight is Tri.TRUE and rep.right_linked is Tri.TRUE
    assert rep.strongly_tight is Tri.FALSE


def test_ladder_right_linked_with_left_linked_pair():
    pset = PfisterSet.right_linked([b, b * a], PfisterForm((), a))
    assert sigma(pset).formally_zero()
    assert strong_tightness_ladder(pset, V).strongly_tight is Tri.TRUE


def test_ladder_left_linked():
    rep = strong_tightness_ladder(PfisterSet.left_linked([a, b, g], [c]), V)
    assert rep.left_linked is Tri.TRUE and rep.right_linked is Tri.TRUE
    assert rep.strongly_tight is Tri.TRUE


@pytest.mark.parametrize("n", [2, 3])
def test_ladder_main8_family(n):
    S, psis = main8_family(n)
    reps = {}
    for k in range(1, n + 2):
        for T in itertools.combinations(range(n + 1), k):
            reps[f(T)] = subset_sum_symbol(psis, T)
    rep = strong_tightness_ladder(PfisterSet.general(psis, reps))
    assert rep.tight is Tri.TRUE and rep.strongly_tight is Tri.TRUE


def test_general_set_with_wrong_representatives():
    psis = [symbol(a, b), symbol(g, b)]
    reps = {f([0]): psis[0], f([1]): psis[1], f([0, 1]): symbol(c, b)}
    rep = strong_tightness_ladder(PfisterSet.general(psis, reps), V)
    assert rep.tight is Tri.UNKNOWN and rep.strongly_tight is Tri.UNKNOWN
    with pytest.raises(HypothesisNotEstablished):
        sigma(PfisterSet.general(psis))


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_dim_bound_right_linked(s):
    S = ring(tuple(f"b{i}" for i in range(s)) + ("a",))
    gs = S.gens
    rep = dim_bound_check(right_linked_representatives(gs[:s], PfisterForm((), gs[s])), s)
    assert rep.holds and rep.bound == 2 ** (s + 1)


def test_dim_bound_with_left_linked_pair():
    reps = left_linked_representatives([a, b, g], [c])
    rep = dim_bound_check(reps, 3, (f([0]), f([1])))
    assert rep.holds and rep.bound == 10 and len(rep.cancelled) == 3
    rreps = right_linked_representatives([b, g], PfisterForm((), a))
    with pytest.raises(HypothesisNotEstablished):
        dim_bound_check(rreps, 2, (f([0]), f([1])))


def test_three_term_cancels():
    reps = right_linked_representatives([b, b * a], PfisterForm((), a))
    assert three_term_cancels(reps[f([0])], reps[f([1])], reps[f([0, 1])])
    reps = right_linked_representatives([b, g], PfisterForm((), a))
    assert not three_term_cancels(reps[f([0])], reps[f([1])], reps[f([0, 1])])


def test_triple_sigma_needs_all_subsets():
    with pytest.raises(HypothesisNotEstablished):
        triple_sigma({f([0]): PfisterForm((b,), a)})


def test_annihilator_identity():
    out = annihilator_identity_check([a, a * b * b, a * g * g], PfisterForm((), a))
    assert out["holds"]
    with pytest.raises(HypothesisNotEstablished):
        annihilator_identity_check([b, g], PfisterForm((), a))
