import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from pfisterlink.field2 import GF2, FieldElement, FiniteField, Poly, RationalFunctionField

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F16 = FiniteField(4)


@pytest.fixture
def R3():
    return RationalFunctionField(("α", "β", "γ"), GF2)


def ring(names=("x", "y", "z"), field=GF2):
    return RationalFunctionField(names, field)


@st.composite
def polys(draw, R, max_degree=2, max_terms=3, nonzero=True):
    n = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_degree)) for _ in range(R.nvars))
        terms[e] = terms.get(e, 0) ^ draw(st.integers(1, R.field.q - 1))
    p = Poly(R, terms)
    if nonzero and p.is_zero():
        p = R.poly_one()
    return p


@st.composite
def elements(draw, R, nonzero=True, laurent=False):
    num = draw(polys(R, nonzero=nonzero))
    if laurent:
        e = tuple(draw(st.integers(0, 2)) for _ in range(R.nvars))
        den = Poly(R, {e: 1})
    else:
        den = draw(polys(R, max_degree=1, max_terms=2))
    return FieldElement(num, den)


@st.composite
def monomials(draw, R, lo=-2, hi=2):
    e = tuple(draw(st.integers(lo, hi)) for _ in range(R.nvars))
    return R.monomial(e)


def rng(seed=0):
    return random.Random(seed)
