"""Tightness in the abstract setting of an F2 vector space V, a subspace U and a set P.

Vectors are int bitmasks of length ``dim_V``.  P contains 0, spans V and
meets every coset of U at most once, so each v in P + U has a unique
representative p(v) in P.  For a tight S (span(S) inside P + U) the
invariant is the sum of p(sum T) over all subsets T of S.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Tuple

MAX_DIM = 12
MAX_S = 4


class InvalidContext(ValueError):
    pass


class NotTight(ValueError):
    pass


def span(vectors: Iterable[int]) -> FrozenSet[int]:
    out = {0}
    for v in vectors:
        if v not in out:
            out |= {x ^ v for x in out}
    return frozenset(out)


def rank(vectors: Iterable[int]) -> int:
    return len(span(vectors)).bit_length() - 1


def _xor(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out ^= v
    return out


def subspaces(dim: int, sub_dim: int) -> List[Tuple[int, ...]]:
    """Reduced row echelon bases of all sub_dim-dimensional subspaces of F2^dim."""
    out = []
    for pivots in itertools.combinations(range(dim), sub_dim):
        free = [[j for j in range(p) if j not in pivots] for p in pivots]
        slots = [(i, j) for i, f in enumerate(free) for j in f]
        for fill in itertools.product((0, 1), repeat=len(slots)):
            rows = [1 << p for p in pivots]
            for (i, j), b in zip(slots, fill):
                if b:
                    rows[i] |= 1 << j
            out.append(tuple(rows))
    return out


@dataclass(frozen=True)
class TightContext:
    dim_V: int
    U_basis: Tuple[int, ...]
    P: FrozenSet[int]
    U: FrozenSet[int] = dc_field(init=False, repr=False, compare=False)
    _rep: Tuple[int, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        d = self.dim_V
        if not 1 <= d <= MAX_DIM:
            raise InvalidContext(f"dim_V must be in 1..{MAX_DIM}")
        object.__setattr__(self, "U_basis", tuple(self.U_basis))
        object.__setattr__(self, "P", frozenset(self.P))
        top = 1 << d
        if any(not 0 <= v < top for v in self.P | set(self.U_basis)):
            raise InvalidContext("vector outside V")
        if 0 not in self.P:
            raise InvalidContext("0 must lie in P")
        if len(span(self.P)) != top:
            raise InvalidContext("P does not span V")
        U = span(self.U_basis)
        rep = [-1] * top
        for p in self.P:
            for u in U:
                if rep[p ^ u] != -1:
                    raise InvalidContext(f"{rep[p ^ u]} and {p} lie in the same coset of U")
                rep[p ^ u] = p
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "_rep", tuple(rep))

    @property
    def codim_U(self) -> int:
        return self.dim_V - rank(self.U_basis)

    def in_P_plus_U(self, v: int) -> bool:
        return self._rep[v] != -1

    def rep(self, v: int) -> int:
        """The unique element of P in v + U."""
        p = self._rep[v]
        if p == -1:
            raise NotTight(f"{v} is not in P + U")
        return p

    def to_dict(self) -> Dict[str, Any]:
        return {"dim_V": self.dim_V, "U_basis": list(self.U_basis), "P_list": sorted(self.P)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "TightContext":
        return cls(int(d["dim_V"]), tuple(d["U_basis"]), frozenset(d["P_list"]))

    @classmethod
    def from_json(cls, s: str) -> "TightContext":
        return cls.from_dict(json.loads(s))


def _check_subset(ctx: TightContext, S: Sequence[int]) -> None:
    bad = [x for x in S if x not in ctx.P]
    if bad:
        raise ValueError(f"{bad} not in P")


def is_tight(ctx: TightContext, S: Sequence[int]) -> bool:
    _check_subset(ctx, S)
    return all(ctx.in_P_plus_U(v) for v in span(S))


def is_strongly_tight(ctx: TightContext, S: Sequence[int]) -> bool:
    _check_subset(ctx, S)
    return span(S) <= ctx.P


def representatives(ctx: TightContext, S: Sequence[int]) -> Dict[FrozenSet[int], int]:
    """Subset of positions in S -> p of its sum; the empty subset maps to 0."""
    out = {}
    for r in range(len(S) + 1):
        for T in itertools.combinations(range(len(S)), r):
            out[frozenset(T)] = ctx.rep(_xor(S[i] for i in T))
    return out


def sigma_abstract(ctx: TightContext, S: Sequence[int]) -> int:
    if not is_tight(ctx, S):
        raise NotTight(f"{list(S)} is not tight")
    return _sigma(ctx, S)


def _sigma(ctx: TightContext, S: Sequence[int]) -> int:
    out = 0
    rep = ctx._rep
    for r in range(len(S) + 1):
        for T in itertools.combinations(S, r):
            out ^= rep[_xor(T)]
    return out


def _ladder_sigmas_zero(ctx: TightContext, S: Sequence[int]) -> bool:
    return all(_sigma(ctx, T) == 0 for r in range(2, len(S) + 1) for T in itertools.combinations(S, r))


# --- verification by enumeration ------------------------------------------


@dataclass
class VerificationReport:
    name: str
    contexts: int = 0
    checked: int = 0
    skipped_dependent: int = 0
    violations: List[Dict[str, Any]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> None:
        self.contexts += other.contexts
        self.checked += other.checked
        self.skipped_dependent += other.skipped_dependent
        self.violations.extend(other.violations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "contexts": self.contexts,
            "checked": self.checked,
            "skipped_dependent": self.skipped_dependent,
            "violations": self.violations,
        }


def tight_sets(ctx: TightContext, max_size: int = MAX_S) -> Iterable[Tuple[Tuple[int, ...], bool]]:
    """Tight subsets S of P minus 0 with 2 <= |S| <= max_size, with an independence flag.

    Enumerated by extension in increasing order; tightness is inherited by
    subsets, so a non-tight prefix is not extended.
    """
    elems = sorted(ctx.P - {0})

    def grow(start: int, S: Tuple[int, ...], sp: FrozenSet[int], indep: bool):
        if len(S) >= 2:
            yield S, indep
        if len(S) == max_size:
            return
        for i in range(start, len(elems)):
            x = elems[i]
            if x in sp:
                new_sp, new_indep = sp, False
            else:
                new_sp = sp | {y ^ x for y in sp}
                if not all(ctx.in_P_plus_U(v) for v in new_sp):
                    continue
                new_indep = indep
            yield from grow(i + 1, S + (x,), frozenset(new_sp), new_indep)

    yield from grow(0, (), frozenset([0]), True)


def verify_prep(ctx: TightContext, max_size: int = MAX_S) -> VerificationReport:
    """Tight S with every proper subset strongly tight: strongly tight iff the invariant is 0."""
    rep = VerificationReport("prep", contexts=1)
    for S, indep in tight_sets(ctx, max_size):
        proper_ok = all(span(T) <= ctx.P for r in range(1, len(S)) for T in itertools.combinations(S, r))
        if not proper_ok:
            continue
        if not indep:
            rep.skipped_dependent += 1
            continue
        rep.checked += 1
        strong = span(S) <= ctx.P
        zero = _sigma(ctx, S) == 0
        if strong != zero:
            rep.violations.append({"context": ctx.to_dict(), "S": list(S), "strongly_tight": strong, "sigma": _sigma(ctx, S)})
    return rep


def verify_ladder(ctx: TightContext, max_size: int = MAX_S) -> VerificationReport:
    """Tight S: strongly tight iff the invariant vanishes on every subset of size > 1."""
    rep = VerificationReport("ladder", contexts=1)
    for S, indep in tight_sets(ctx, max_size):
        if not indep:
            rep.skipped_dependent += 1
            continue
        rep.checked += 1
        strong = span(S) <= ctx.P
        zero = _ladder_sigmas_zero(ctx, S)
        if strong != zero:
            rep.violations.append({"context": ctx.to_dict(), "S": list(S), "strongly_tight": strong})
    return rep


def all_contexts(dim_V: int, max_codim: int = 2) -> Iterable[TightContext]:
    """Every valid context on F2^dim_V with codim U <= max_codim."""
    top = 1 << dim_V
    for k in range(max(0, dim_V - max_codim), dim_V + 1):
        for basis in subspaces(dim_V, k):
            U = span(basis)
            cosets: List[List[int]] = []
            seen = set()
            for v in range(top):
                if v not in seen:
                    c = sorted(v ^ u for u in U)
                    seen.update(c)
                    cosets.append(c)
            nonzero = [c for c in cosets if 0 not in c]
            for choice in itertools.product(*([None] + c for c in nonzero)):
                P = frozenset([0] + [p for p in choice if p is not None])
                if len(span(P)) == top:
                    yield TightContext(dim_V, basis, P)


def random_context(rng: random.Random, dim_V: int, dim_U: int, density: float = 0.6) -> TightContext:
    """A context with a random U and a random coset-unique spanning P."""
    if dim_U > dim_V:
        raise InvalidContext("dim_U > dim_V")
    top = 1 << dim_V
    for _ in range(1000):
        basis = []
        while rank(basis) < dim_U:
            v = rng.randrange(1, top)
            if v not in span(basis):
                basis.append(v)
        U = span(basis)
        seen = set(U)
        P = {0}
        for v in range(top):
            if v in seen:
                continue
            coset = sorted(v ^ u for u in U)
            seen.update(coset)
            if rng.random() < density:
                P.add(rng.choice(coset))
        if len(span(P)) == top:
            return TightContext(dim_V, tuple(basis), frozenset(P))
    raise InvalidContext("no spanning P found; raise the density or the codimension")


def exhaustive_verification(max_dim: int = 3, max_codim: int = 2) -> Tuple[VerificationReport, VerificationReport]:
    prep, ladder = VerificationReport("prep"), VerificationReport("ladder")
    for d in range(1, max_dim + 1):
        for ctx in all_contexts(d, max_codim):
            prep.merge(verify_prep(ctx))
            ladder.merge(verify_ladder(ctx))
    return prep, ladder


def random_verification(
    samples: int = 1000, seed: int = 0, dims: Sequence[int] = (4, 5), max_dim_U: int = 2
) -> Tuple[VerificationReport, VerificationReport]:
    """Seeded random contexts; each sample draws dim_V, dim_U and P from its own seed."""
    prep, ladder = VerificationReport("prep"), VerificationReport("ladder")
    for i in range(samples):
        rng = random.Random(seed * 1_000_003 + i)
        d = rng.choice(list(dims))
        k = rng.randint(0, min(max_dim_U, d - 3))
        ctx = random_context(rng, d, k, density=rng.uniform(0.3, 0.7))
        prep.merge(verify_prep(ctx))
        ladder.merge(verify_ladder(ctx))
    return prep, ladder
