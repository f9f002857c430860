"""Quadratic Pfister forms over characteristic-2 rational function fields.

Modules: ``field2`` (finite fields, rational functions, valuations),
``quadform`` (forms and finite-field Witt classification), ``symbols``
(additive symbols and their normal forms), ``oracle`` (anisotropy
certificates, witness search, specialization evidence), ``linkage``
(sets of Pfister forms), ``abstract_tight`` (the F2 vector space model)
and ``cli``.
"""

from .field2 import GF2, FiniteField, MonomialValuation, RationalFunctionField
from .quadform import QuadraticForm
from .symbols import PfisterForm, QPfisterSymbol, SymbolSum, symbol

__all__ = [
    "GF2",
    "FiniteField",
    "MonomialValuation",
    "PfisterForm",
    "QPfisterSymbol",
    "QuadraticForm",
    "RationalFunctionField",
    "SymbolSum",
    "symbol",
]
