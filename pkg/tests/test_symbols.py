import random

import pytest
from hypothesis import given, strategies as st

from conftest import monomials, ring
from pfisterlink.field2 import FiniteField, MonomialValuation
from pfisterlink.oracle import RefutedBySpecialization, pfister_certificate, specialization_witt_evidence
from pfisterlink.quadform import QuadraticForm, evaluate, witt_decompose_finite
from pfisterlink.symbols import (
    ConstructionInapplicable,
    PfisterForm,
    SquareClassRing,
    SymbolSum,
    induction_identity_holds,
    left_linked_representatives,
    norm_values_with_witness,
    normalize,
    right_linked_representatives,
    subset_sum_symbol,
    symbol,
    wp_reduce,
)

R = ring(("α", "β", "γ", "δ"))
a, b, g, d = R.gens
F16 = FiniteField(4)


def test_expand_conventions():
    assert symbol(a, b).to_pfister() == PfisterForm((a,), a * b)
    assert symbol(a, b).expand().dim == 4
    assert symbol(R.zero, b).expand() == QuadraticForm.hyperbolic(R, 2)
    assert symbol(R.one, b).is_formally_hyperbolic()


def test_relations():
    assert normalize(symbol(a, a)).is_formally_hyperbolic()
    assert (symbol(a, b) + symbol(a, g) + symbol(a, b + g)).is_formally_hyperbolic()
    assert (symbol(a, b) + symbol(b, a)).is_formally_hyperbolic()
    assert (symbol(a + b, g) + symbol(a, g) + symbol(b, g)).is_formally_hyperbolic()


def test_not_proved_zero():
    assert not symbol(a, b).is_formally_hyperbolic()
    assert not symbol(a, b, g).is_formally_hyperbolic()


def test_hyperbolic_rules():
    assert symbol(a, b * b).is_formally_hyperbolic()
    assert symbol(a, b, a * b).is_formally_hyperbolic()
    assert PfisterForm((a,), a).is_formally_hyperbolic()
    assert PfisterForm((b,), a * a + a).is_formally_hyperbolic()
    assert PfisterForm((b,), a * a + a + b).is_formally_hyperbolic()
    assert not PfisterForm((R.one + a,), a).is_formally_hyperbolic()


def test_wp_reduce():
    assert wp_reduce(a * a + a).is_zero()
    assert wp_reduce(a ** 4 + b) == a + b
    assert wp_reduce(R.one) == R.one  # 1 is not u^2 + u over F2
    R4 = ring(("x",), FiniteField(2))
    assert wp_reduce(R4.one).is_zero()


@given(st.sampled_from([a, b, g, a * b, a + b, a / b, R.one + a * g]))
def test_norm_values_are_values(x):
    form = QuadraticForm.binary(R.one, x)
    for v, w in norm_values_with_witness(x):
        assert evaluate(form, list(w)) == v and not v.is_zero()


@given(monomials(R), monomials(R), monomials(R), monomials(R))
def test_multi_additivity(x, y, u, w):
    lhs = symbol(x + y, u, w) + symbol(x, u, w) + symbol(y, u, w)
    if not (x + y).is_zero():
        assert lhs.is_formally_hyperbolic()


@given(monomials(R), monomials(R), monomials(R))
def test_alternating_and_symmetric(x, y, u):
    assert symbol(x, x, u).is_formally_hyperbolic()
    assert (symbol(x, y, u) + symbol(u, x, y)).is_formally_hyperbolic()
    assert normalize(symbol(x, y, u)).to_json() == normalize(symbol(y, u, x)).to_json()


@given(monomials(R, -1, 2), monomials(R, -1, 2), st.integers(0, 1000))
def test_square_entry_kill_is_sound(x, y, seed):
    s = symbol(x, y * y)
    assert s.is_formally_hyperbolic()
    specialization_witt_evidence(SymbolSum([s]), trials=10, seed=seed, field=F16)


def test_one_fold_identities_are_discriminating():
    ok = symbol(a) + symbol(b) + symbol(a + b)
    rep = specialization_witt_evidence(ok, trials=200, seed=1, field=F16)
    assert rep.discriminating and rep.passes == 200
    with pytest.raises(RefutedBySpecialization) as e:
        specialization_witt_evidence(SymbolSum([symbol(a)]), trials=200, seed=0, field=FiniteField(2))
    assert len(e.value.point) == R.nvars


@given(st.lists(st.sampled_from([a, b, g, d, a * b, a + g, b * d, R.one / a]), min_size=2, max_size=2), st.integers(0, 99))
def test_formal_zero_implies_split_under_specialization(entries, seed):
    # 1-fold images are where sampling can tell; check ((x)) + ((y)) + ((x + y))
    x, y = entries
    if (x + y).is_zero():
        return
    s = symbol(x) + symbol(y) + symbol(x + y)
    assert s.is_formally_hyperbolic()
    specialization_witt_evidence(s, trials=20, seed=seed, field=F16)


def test_subset_sum_examples():
    S = ring(tuple(f"α{i}" for i in range(6)))
    al = S.gens
    psis = [symbol(*(al[j] for j in range(6) if j != i)) for i in range(6)]
    out = subset_sum_symbol(psis, [0, 1, 3], 0)
    assert out == symbol(al[2], al[4], al[5], al[0] + al[1], al[0] + al[3])
    assert subset_sum_symbol(psis, [2]) == psis[2]
    T = ring(("α0", "α1", "α2"))
    t0, t1, t2 = T.gens
    assert subset_sum_symbol([symbol(t1, t2), symbol(t0, t2)], [0, 1]) == symbol(t2, t0 + t1)


def test_subset_sum_inapplicable():
    with pytest.raises(ConstructionInapplicable):
        subset_sum_symbol([symbol(a, b), symbol(g, d)], [0, 1])
    with pytest.raises(ConstructionInapplicable):
        subset_sum_symbol([symbol(a, b)], [])


def test_representatives():
    phi = PfisterForm((), a)
    reps = right_linked_representatives([b, g], phi)
    assert reps[frozenset()] is None
    assert reps[frozenset([0, 1])] == PfisterForm((b * g,), a)
    with pytest.raises(ValueError):
        right_linked_representatives([R.zero], phi)
    lreps = left_linked_representatives([a, b], [g])
    assert lreps[frozenset([0, 1])] == PfisterForm((g,), a + b)
    s = SymbolSum([lreps[frozenset([0])].to_symbol(), lreps[frozenset([1])].to_symbol(), lreps[frozenset([0, 1])].to_symbol()])
    assert s.is_formally_hyperbolic()


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_induction_identity(t):
    assert induction_identity_holds(t, True)
    assert induction_identity_holds(t, False)


def test_square_class_ring():
    Q = SquareClassRing
    x = Q.pfister(1)
    assert Q.mul(x, x) == Q.add(x, x) or Q.mul(x, x) == frozenset()
    assert Q.pfister(1, 1) == frozenset()
    assert Q.pfister(1, 2) == Q.mul(Q.pfister(1), Q.pfister(2))


def test_generic_symbol_certified_nonzero():
    dcs, _ = pfister_certificate(symbol(a, b), MonomialValuation(("α", "β")))
    assert dcs.certified


def test_json_normal_form_sorted():
    s = symbol(b, a) + symbol(g, a)
    js = s.to_json()
    assert js == sorted(js) and all(t == sorted(t) for t in js)


def test_one_fold_normalization():
    # ((e)) = [1, e]: additive in e, zero exactly on the Artin-Schreier image
    assert not symbol(a * a).is_formally_hyperbolic()
    assert (symbol(a * a) + symbol(a)).is_formally_hyperbolic()
    assert symbol(a * a + a).is_formally_hyperbolic()
    assert (symbol(a + b) + symbol(a) + symbol(b)).is_formally_hyperbolic()
    assert not symbol(R.one).is_formally_hyperbolic()


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(0, 2)), min_size=1, max_size=4), st.integers(0, 99))
def test_one_fold_formal_zero_is_sound(terms, seed):
    # entries m, m^2 and m^2 + m, so that formal zeros actually occur
    syms = []
    for i, j, kind in terms:
        m = R.monomial((i, j, 0, 0))
        syms.append(symbol([m, m * m, m * m + m][kind]))
    s = SymbolSum(syms)
    if s.is_formally_hyperbolic():
        assert specialization_witt_evidence(s, trials=20, seed=seed, field=F16).discriminating


def test_wp_reduce_cancelling_halves():
    assert wp_reduce(b ** 4 + b ** 2).is_zero()
    assert wp_reduce(b ** 4 + b).is_zero()
    assert wp_reduce(b ** 8 + b ** 4 + b ** 2) == b
