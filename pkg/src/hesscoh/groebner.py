"""Reduced Groebner bases, normal forms, standard monomials, Hilbert series.

This is the oracle the verification layer leans on, so it follows the
textbook algorithms with no shortcuts that lack a classical soundness
proof: Buchberger's algorithm with normal pair selection plus the
product and chain criteria, full inter-reduction to the unique reduced
monic basis, and a pivot recursion on the leading-term ideal for the
Hilbert series.

Monomial orders act on the dense exponent tuples of polyring.  The
default is degrevlex with x_1 > ... > x_n > t; an explicit variable
priority (a permutation of 0..n, highest first, with n meaning t) can
be supplied.

For quotient invariants the ambient ring is Q[x_1..x_n] when no basis
element mentions t (ordinary mode) and Q[x_1..x_n, t] otherwise; the
t slot of the exponent tuples is inert in the first case.
"""

from __future__ import annotations

import heapq
import json
import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, NotZeroDimensionalError, ResourceLimitError
from .polyring import Monomial, Polynomial, poly_from_dict, poly_to_dict

DEFAULT_PAIR_BUDGET = 200_000

ORDER_KINDS = ("degrevlex", "deglex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent tuples.

    priority lists variable indices from most to least significant
    (0..n-1 are x_1..x_n, n is t); None means the natural order
    x_1 > ... > x_n > t.
    """

    kind: str = "degrevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"order kind must be one of {ORDER_KINDS}, got {self.kind!r}")
        if self.priority is not None:
            pr = tuple(self.priority)
            if sorted(pr) != list(range(len(pr))):
                raise ValueError(f"priority must be a permutation of 0..{len(pr) - 1}, got {pr}")
            object.__setattr__(self, "priority", pr)

    def key(self, exponents: Monomial) -> tuple:
        """Sort key; larger key = larger monomial."""
        e = exponents
        if self.priority is not None:
            if len(self.priority) != len(e):
                raise ValueError(
                    f"priority covers {len(self.priority)} variables, monomial has {len(e)}"
                )
            e = tuple(exponents[i] for i in self.priority)
        if self.kind == "degrevlex":
            return (sum(e), tuple(-v for v in reversed(e)))
        if self.kind == "deglex":
            return (sum(e), e)
        return e  # lex

    def to_dict(self) -> dict:
        return {"kind": self.kind, "priority": list(self.priority) if self.priority else None}

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialOrder":
        pr = data.get("priority")
        return cls(kind=data["kind"], priority=tuple(pr) if pr else None)


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    reductions_to_zero: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, inter-reduced, sorted by leading
    monomial (ascending in the order)."""

    n: int
    order: MonomialOrder
    basis: tuple[Polynomial, ...]
    stats: GroebnerStats = field(compare=False)

    @property
    def uses_t(self) -> bool:
        return any(exps[self.n] for g in self.basis for exps in g.terms)

    def leading_monomials(self) -> list[Monomial]:
        return [leading_term(g, self.order)[0] for g in self.basis]


def leading_term(p: Polynomial, order: MonomialOrder) -> tuple[Monomial, Fraction]:
    if p.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    exps = max(p.terms, key=order.key)
    return exps, p.terms[exps]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, zip(a, b)))


def _quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _common_n(polys: Sequence[Polynomial]) -> int:
    ns = {p.n for p in polys}
    if len(ns) != 1:
        raise DimensionMismatchError(f"polynomials live in different rings: n in {sorted(ns)}")
    return ns.pop()


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of f under multivariate division by basis.

    No term of the result is divisible by any leading monomial of the
    basis.  Reducers are tried in list order, so the result is
    deterministic; for a Groebner basis it is the unique normal form.
    """
    order = order or MonomialOrder()
    reducers = [b for b in basis if not b.is_zero()]
    if not reducers:
        raise ValueError("normal_form needs a nonempty basis")
    _common_n([f, *reducers])
    table = [(lt, c, b.terms) for b in reducers for (lt, c) in [leading_term(b, order)]]
    key = order.key
    work = dict(f.terms)
    remainder: dict[Monomial, Fraction] = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lt, lc, terms in table:
            if _divides(lt, m):
                shift = _quotient(m, lt)
                scale = c / lc
                for e, ce in terms.items():
                    if e == lt:
                        continue
                    target = tuple(a + b for a, b in zip(shift, e))
                    value = work.get(target, 0) - scale * ce
                    if value:
                        work[target] = value
                    else:
                        work.pop(target, None)
                break
        else:
            remainder[m] = c
    return Polynomial._raw(f.n, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    order = order or MonomialOrder()
    lf, cf = leading_term(f, order)
    lg, cg = leading_term(g, order)
    lcm = _lcm(lf, lg)
    return _shift(f, _quotient(lcm, lf), 1 / cf) - _shift(g, _quotient(lcm, lg), 1 / cg)


def _shift(p: Polynomial, exps: Monomial, scale: Fraction) -> Polynomial:
    return Polynomial._raw(
        p.n,
        {tuple(a + b for a, b in zip(e, exps)): c * scale for e, c in p.terms.items()},
    )


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, c = leading_term(p, order)
    return p if c == 1 else p * (1 / c)


def buchberger(
    generators: Iterable[Polynomial],
    order: MonomialOrder | None = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    cache_dir: str | Path | None = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by `generators`.

    Pairs are handled in normal-selection order (lcm degree, then the
    lcm itself, then indices); the product criterion drops coprime
    pairs and the chain criterion drops (i, j) when some g_k divides
    the pair lcm and both companion pairs are no longer pending.  More
    than pair_budget processed pairs raises ResourceLimitError.

    With cache_dir set, the result is stored under a content hash of
    (generators, order) and reloaded on repeat calls.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    n = _common_n(gens)
    order = order or MonomialOrder()

    cache_path = None
    if cache_dir is not None:
        cache_path = Path(cache_dir) / f"gb-{_cache_key(n, order, gens)}.json"
        cached = _cache_load(cache_path, n, order)
        if cached is not None:
            return cached

    basis: list[Polynomial] = []
    lts: list[tuple[Monomial, Fraction]] = []
    for g in gens:
        if not g.is_zero():
            g = _monic(g, order)
            if g not in basis:
                basis.append(g)
                lts.append(leading_term(g, order))

    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int) -> None:
        for i in range(j):
            lcm = _lcm(lts[i][0], lts[j][0])
            heapq.heappush(heap, (sum(lcm), order.key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    stats = GroebnerStats()
    while heap:
        _, _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        stats.pairs_processed += 1
        if stats.pairs_processed > pair_budget:
            raise ResourceLimitError(
                f"S-pair budget of {pair_budget} exhausted; the computation is out of scale"
            )
        li, lj = lts[i][0], lts[j][0]
        lcm = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # product criterion: coprime leading monomials
        if _chain_criterion(i, j, lcm, lts, pending):
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder.is_zero():
            stats.reductions_to_zero += 1
            continue
        basis.append(_monic(remainder, order))
        lts.append(leading_term(basis[-1], order))
        push_pairs(len(basis) - 1)

    reduced = _reduce_basis(basis, order)
    result = GroebnerBasis(n=n, order=order, basis=tuple(reduced), stats=stats)
    if cache_path is not None:
        _cache_store(cache_path, result)
    return result


def _chain_criterion(i, j, lcm, lts, pending) -> bool:
    for k in range(len(lts)):
        if k == i or k == j:
            continue
        if _divides(lts[k][0], lcm):
            pik = (min(i, k), max(i, k))
            pjk = (min(j, k), max(j, k))
            if pik not in pending and pjk not in pending:
                return True
    return False


def _reduce_basis(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Minimalize and inter-reduce; the reduced basis is unique."""
    key = order.key
    by_lt = sorted(basis, key=lambda g: key(leading_term(g, order)[0]))
    minimal: list[Polynomial] = []
    minimal_lts: list[Monomial] = []
    for g in by_lt:
        lt = leading_term(g, order)[0]
        if not any(_divides(m, lt) for m in minimal_lts):
            minimal.append(g)
            minimal_lts.append(lt)
    reduced = list(minimal)
    for idx in range(len(reduced)):
        others = reduced[:idx] + reduced[idx + 1:]
        if others:
            reduced[idx] = _monic(normal_form(reduced[idx], others, order), order)
    reduced.sort(key=lambda g: key(leading_term(g, order)[0]))
    return reduced


def ideal_membership(f: Polynomial, gb: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    if not gb.basis:
        return False
    return normal_form(f, gb.basis, gb.order).is_zero()


def ideal_equality(
    gens_a: Sequence[Polynomial],
    gens_b: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    cache_dir: str | Path | None = None,
) -> bool:
    """Whether the two generating sets span the same ideal."""
    order = order or MonomialOrder()
    gb_a = buchberger(gens_a, order, pair_budget, cache_dir)
    gb_b = buchberger(gens_b, order, pair_budget, cache_dir)
    return all(ideal_membership(g, gb_a) for g in gens_b) and all(
        ideal_membership(g, gb_b) for g in gens_a
    )


# -- quotient invariants ---------------------------------------------------


def _active_vars(gb: GroebnerBasis) -> list[int]:
    active = list(range(gb.n))
    if gb.uses_t:
        active.append(gb.n)
    return active


def standard_monomials(gb: GroebnerBasis) -> list[Monomial]:
    """Monomials outside the leading-term ideal, when finitely many.

    Raises NotZeroDimensionalError unless every ambient variable has a
    pure power among the leading monomials (always the case for t in
    equivariant ideals, hence the error there).
    """
    lts = gb.leading_monomials()
    if any(sum(m) == 0 for m in lts):
        return []  # unit ideal, zero ring
    active = _active_vars(gb)
    if not lts:
        raise NotZeroDimensionalError("not-zero-dimensional: the zero ideal")
    for v in active:
        if not any(m[v] and sum(m) == m[v] for m in lts):
            name = "t" if v == gb.n else f"x{v + 1}"
            raise NotZeroDimensionalError(
                f"not-zero-dimensional: no pure power of {name} among the leading terms"
            )
    width = gb.n + 1
    start = (0,) * width
    seen = {start}
    queue = [start]
    out: list[Monomial] = []
    while queue:
        m = queue.pop()
        out.append(m)
        for v in active:
            up = list(m)
            up[v] += 1
            cand = tuple(up)
            if cand in seen:
                continue
            seen.add(cand)
            if not any(_divides(lt, cand) for lt in lts):
                queue.append(cand)
    out.sort(key=gb.order.key)
    return out


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series of the quotient, in the internal weight grading.

    Finite quotient: series lists the graded dimensions and
    denominator_power is 0.  Infinite quotient: the series is
    numerator/(1-q)^denominator_power with the numerator coefficients in
    `series`, and quotient_dimension is None.
    """

    series: tuple[int, ...]
    denominator_power: int
    quotient_dimension: int | None

    @property
    def is_finite(self) -> bool:
        return self.denominator_power == 0

    def to_dict(self) -> dict:
        return {
            "series": list(self.series),
            "denominatorPower": self.denominator_power,
            "quotientDimension": (
                "infinite" if self.quotient_dimension is None else self.quotient_dimension
            ),
        }


def hilbert_series(gb: GroebnerBasis) -> HilbertData:
    """Hilbert series of ring/ideal from the leading-term ideal.

    Requires a homogeneous basis (true for every ideal built here).
    """
    for g in gb.basis:
        if not g.is_homogeneous():
            raise ValueError("Hilbert series needs homogeneous generators")
    lts = gb.leading_monomials()
    if any(sum(m) == 0 for m in lts):
        return HilbertData(series=(), denominator_power=0, quotient_dimension=0)
    active = _active_vars(gb)
    m = len(active)
    projected = [tuple(e[v] for v in active) for e in lts]
    numerator = _hilbert_numerator(_minimalize(projected), m)
    cancels = 0
    while cancels < m:
        quotient, ok = _divide_one_minus_q(numerator)
        if not ok:
            break
        numerator = quotient
        cancels += 1
    remaining = m - cancels
    coeffs = _trim(numerator)
    if remaining == 0:
        if any(c < 0 for c in coeffs):
            raise AssertionError(f"negative Hilbert coefficients {coeffs}; engine bug")
        return HilbertData(series=tuple(coeffs), denominator_power=0, quotient_dimension=sum(coeffs))
    return HilbertData(series=tuple(coeffs), denominator_power=remaining, quotient_dimension=None)


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out: list[tuple] = []
    for g in gens:
        if not any(_divides(kept, g) for kept in out):
            out.append(g)
    return out


def _hilbert_numerator(gens: list[tuple], m: int) -> list[int]:
    """Numerator K with Hilb(R/M) = K(q)/(1-q)^m for the monomial ideal M.

    Splits on a pivot variable occurring in the most mixed generators:
    K(M) = K(M + (x)) + q * K(M : x); pure-power ideals are the base
    case with K = prod (1 - q^a).
    """
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        out = [1]
        for g in gens:
            out = _mul_one_minus_power(out, sum(g))
        return out
    counts = [0] * m
    for g in mixed:
        for v in range(m):
            if g[v]:
                counts[v] += 1
    pivot = max(range(m), key=lambda v: (counts[v], -v))
    unit = tuple(1 if v == pivot else 0 for v in range(m))
    plus = _minimalize(gens + [unit])
    colon = _minimalize(
        [tuple(e - 1 if v == pivot and e else e for v, e in enumerate(g)) for g in gens]
    )
    left = _hilbert_numerator(plus, m)
    right = _hilbert_numerator(colon, m)
    return _poly_add(left, [0] + right)


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _mul_one_minus_power(coeffs: list[int], d: int) -> list[int]:
    out = coeffs + [0] * d
    for i, v in enumerate(coeffs):
        out[i + d] -= v
    return out


def _divide_one_minus_q(coeffs: list[int]) -> tuple[list[int], bool]:
    """(quotient, divisible) for division by (1 - q)."""
    if sum(coeffs) != 0:
        return coeffs, False
    partial = 0
    quotient = []
    for c in coeffs[:-1]:
        partial += c
        quotient.append(partial)
    return _trim(quotient), True


def _trim(coeffs: list[int]) -> list[int]:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return coeffs[:end]


# -- on-disk cache ----------------------------------------------------------


def _cache_key(n: int, order: MonomialOrder, gens: list[Polynomial]) -> str:
    payload = json.dumps(
        {
            "schemaVersion": 1,
            "n": n,
            "order": order.to_dict(),
            "generators": [poly_to_dict(g) for g in gens],
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:32]


def _cache_load(path: Path, n: int, order: MonomialOrder) -> GroebnerBasis | None:
    try:
        data = json.loads(path.read_text())
        basis = tuple(poly_from_dict(d) for d in data["basis"])
        stats = GroebnerStats(**data["stats"])
    except (OSError, ValueError, KeyError, TypeError):
        return None  # missing or unreadable entry: recompute
    return GroebnerBasis(n=n, order=order, basis=basis, stats=stats)


def _cache_store(path: Path, gb: GroebnerBasis) -> None:
    payload = {
        "schemaVersion": 1,
        "basis": [poly_to_dict(g) for g in gb.basis],
        "stats": {
            "pairs_processed": gb.stats.pairs_processed,
            "reductions_to_zero": gb.stats.reductions_to_zero,
        },
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, separators=(",", ":")))
