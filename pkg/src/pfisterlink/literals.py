"""Text literals for forms and symbols.

Forms: ``<a>`` unary, ``[a, b]`` binary, ``_|_`` orthogonal sum and a
``<<b1, ..., br>>*`` prefix tensoring the next piece with a bilinear
Pfister form.  ``[[c1, ..., ck, a]]`` is the Pfister form
``<<c1, ..., ck>> (x) [1, a]``.  Symbols: ``((e1, ..., en))``, and sums of
symbols joined by ``+``.
"""

from __future__ import annotations

from typing import List

from .field2 import FieldElement, RationalFunctionField
from .quadform import BilinearDiag, QuadraticForm, orth_sum, tensor_bilinear
from .symbols import PfisterForm, QPfisterSymbol, SymbolSum

_OPEN = "([<"
_CLOSE = ")]>"


def split_top(text: str, sep: str) -> List[str]:
    """Split on ``sep`` outside any bracket."""
    out, depth, start, i = [], 0, 0, 0
    while i < len(text):
        ch = text[i]
        if depth == 0 and text.startswith(sep, i):
            out.append(text[start:i])
            i += len(sep)
            start = i
            continue
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                raise SyntaxError(f"unbalanced {ch!r} in {text!r}")
        i += 1
    if depth:
        raise SyntaxError(f"unbalanced brackets in {text!r}")
    out.append(text[start:])
    return out


def _entries(ring: RationalFunctionField, inner: str) -> List[FieldElement]:
    parts = [p.strip() for p in split_top(inner, ",")]
    if any(not p for p in parts):
        raise SyntaxError(f"empty entry in {inner!r}")
    return [ring.parse(p) for p in parts]


def _strip(text: str, left: str, right: str) -> str | None:
    t = text.strip()
    if t.startswith(left) and t.endswith(right):
        if _balanced_once(t, len(left), len(t) - len(right)):
            return t[len(left): -len(right)]
    return None


def _balanced_once(t: str, lo: int, hi: int) -> bool:
    depth = 0
    for ch in t[lo:hi]:
        if ch in _OPEN:
            depth += 1
        elif ch in _CLOSE:
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def parse_pfister(ring: RationalFunctionField, text: str) -> PfisterForm:
    inner = _strip(text, "[[", "]]")
    if inner is None:
        raise SyntaxError(f"not a Pfister literal: {text!r}")
    es = _entries(ring, inner)
    return PfisterForm(tuple(es[:-1]), es[-1])


def parse_symbol(ring: RationalFunctionField, text: str) -> QPfisterSymbol:
    inner = _strip(text, "((", "))")
    if inner is None:
        raise SyntaxError(f"not a symbol literal: {text!r}")
    return QPfisterSymbol(_entries(ring, inner))


def parse_symbol_sum(ring: RationalFunctionField, text: str) -> SymbolSum:
    if text.strip() == "0":
        return SymbolSum()
    return SymbolSum([parse_symbol(ring, t) for t in split_top(text, "+")])


def _parse_piece(ring: RationalFunctionField, text: str) -> QuadraticForm:
    t = text.strip()
    if t.startswith("<<"):
        end = t.index(">>")
        gens = _entries(ring, t[2:end])
        rest = t[end + 2:].lstrip()
        if not rest.startswith("*"):
            raise SyntaxError(f"expected '*' after the bilinear Pfister prefix in {t!r}")
        return tensor_bilinear(BilinearDiag.pfister(gens, ring), _parse_piece(ring, rest[1:]))
    inner = _strip(t, "[[", "]]")
    if inner is not None:
        return parse_pfister(ring, t).expand()
    inner = _strip(t, "[", "]")
    if inner is not None:
        es = _entries(ring, inner)
        if len(es) != 2:
            raise SyntaxError(f"binary block needs two entries: {t!r}")
        return QuadraticForm.binary(*es)
    inner = _strip(t, "<", ">")
    if inner is not None:
        es = _entries(ring, inner)
        if len(es) != 1:
            raise SyntaxError(f"unary block needs one entry: {t!r}")
        return QuadraticForm.unary(es[0])
    raise SyntaxError(f"cannot parse form piece {t!r}")


def parse_form(ring: RationalFunctionField, text: str) -> QuadraticForm:
    out = QuadraticForm((), ring)
    for piece in split_top(text, "_|_"):
        out = orth_sum(out, _parse_piece(ring, piece))
    return out
