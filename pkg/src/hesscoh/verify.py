"""Desk-checkable identities, each verified by an independent route.

Every check returns a CheckResult whose witness pinpoints the first
failure (indices, permutation, residue polynomial) so a red result is
actionable.  run_suite sweeps the checks over all Hessenberg functions
up to per-check caps: purely symbolic comparisons default to n <= 6
(exactness to n <= 5, its exhaustive S_n scan being the expensive one)
and Groebner-backed comparisons to n <= 4.

negative_controls() re-runs each comparison on deliberately corrupted
input and passes only when the corruption is caught with a concrete
witness; a suite in which those mutations slip through silently is
broken even if everything else is green.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import wraps
from itertools import combinations, permutations
from math import factorial, prod

from .generators import (
    f_closed,
    f_inductive,
    f_ordinary,
    ideal_generators,
    linear_factor,
    p_sum,
    peterson_rewrite_factor,
    q_flag,
)
from .groebner import (
    DEFAULT_PAIR_BUDGET,
    buchberger,
    hilbert_series,
    ideal_equality,
    normal_form,
    standard_monomials,
)
from .hessenberg import (
    HessenbergFunction,
    enumerate_all,
    fixed_points,
    flag_function,
    peterson_function,
)
from .polyring import Polynomial, elementary_symmetric, poly_to_dict, power_sum, t_var

CHECK_NAMES = (
    "example-n4",
    "closed-form",
    "t-zero",
    "localization",
    "fixed-point-exactness",
    "peterson",
    "flag-borel",
    "hilbert",
    "negative-controls",
)

SYMBOLIC_CAP = 6
EXACTNESS_CAP = 5
GROEBNER_CAP = 4
EQUIVARIANT_FLAG_CAP = 3


@dataclass
class CheckResult:
    name: str
    scope: dict
    passed: bool
    witness: dict | None = None
    elapsed: float = 0.0

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed check {self.name} must carry a witness")

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {"name": self.name, "scope": self.scope, "passed": self.passed,
               "witness": self.witness}
        if include_timing:
            out["elapsedSeconds"] = round(self.elapsed, 6)
        return out


@dataclass
class VerificationReport:
    results: list[CheckResult]
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def counts(self) -> tuple[int, int]:
        good = sum(1 for r in self.results if r.passed)
        return good, len(self.results) - good

    def to_dict(self, include_timing: bool = True) -> dict:
        good, bad = self.counts()
        out = {
            "schemaVersion": 1,
            "results": [r.to_dict(include_timing) for r in self.results],
            "summary": {"total": len(self.results), "passed": good, "failed": bad},
        }
        if include_timing:
            out["elapsedSeconds"] = round(self.elapsed, 6)
        return out

    def render_text(self, include_timing: bool = True) -> str:
        lines = []
        for r in self.results:
            scope = " ".join(f"{k}={_scope_text(v)}" for k, v in r.scope.items())
            mark = "PASS" if r.passed else "FAIL"
            timing = f" [{r.elapsed:.3f}s]" if include_timing else ""
            lines.append(f"{mark} {r.name}{' ' + scope if scope else ''}{timing}")
            if r.witness is not None:
                lines.append(f"     witness: {r.witness}")
        good, bad = self.counts()
        lines.append(f"{good} passed, {bad} failed out of {len(self.results)} checks")
        return "\n".join(lines)


def _scope_text(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(map(str, value)) + ")"
    return str(value)


def _timed(fn):
    @wraps(fn)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.elapsed = time.perf_counter() - start
        return result

    return wrapper


# -- the n = 4 worked example -------------------------------------------


def _example_table_n4() -> dict[tuple[int, int], Polynomial]:
    """The ten f_{i,j} for n = 4 in their factored display form."""
    n = 4
    p = {i: p_sum(i, n) for i in range(5)}

    def L(a: int, b: int) -> Polynomial:
        return linear_factor(a, b, n)  # x_a - x_b - t

    return {
        (1, 1): p[1],
        (2, 2): p[2],
        (3, 3): p[3],
        (4, 4): p[4],
        (2, 1): L(1, 2) * p[1],
        (3, 2): L(1, 2) * p[1] + L(2, 3) * p[2],
        (4, 3): L(1, 2) * p[1] + L(2, 3) * p[2] + L(3, 4) * p[3],
        (3, 1): L(1, 3) * L(1, 2) * p[1],
        (4, 2): L(1, 3) * L(1, 2) * p[1] + L(2, 4) * (L(1, 2) * p[1] + L(2, 3) * p[2]),
        (4, 1): L(1, 4) * L(1, 3) * L(1, 2) * p[1],
    }


def _compare_table(expected: dict[tuple[int, int], Polynomial]) -> dict | None:
    for (i, j), want in sorted(expected.items()):
        got = f_inductive(i, j, 4)
        if got != want:
            return {
                "i": i,
                "j": j,
                "difference": poly_to_dict(got - want),
            }
    return None


@_timed
def check_example_n4() -> CheckResult:
    """All ten n = 4 recursion values against their factored displays."""
    witness = _compare_table(_example_table_n4())
    return CheckResult(
        name="example-n4", scope={"n": 4, "entries": 10}, passed=witness is None,
        witness=witness,
    )


# -- symbolic sweeps -----------------------------------------------------


@_timed
def check_closed_form_at(n: int) -> CheckResult:
    """f_inductive == f_closed for every 1 <= j <= i <= n."""
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            a = f_inductive(i, j, n)
            b = f_closed(i, j, n)
            if a != b:
                return CheckResult(
                    name="closed-form", scope={"n": n}, passed=False,
                    witness={"i": i, "j": j, "difference": poly_to_dict(a - b)},
                )
    return CheckResult(name="closed-form", scope={"n": n}, passed=True)


def check_closed_form(n_max: int) -> list[CheckResult]:
    return [check_closed_form_at(n) for n in range(1, n_max + 1)]


@_timed
def check_t_zero_at(n: int) -> CheckResult:
    """substitute(f_inductive, t -> 0) == f_ordinary for every (i, j)."""
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            a = f_inductive(i, j, n).substitute(t=0)
            b = f_ordinary(i, j, n)
            if a != b:
                return CheckResult(
                    name="t-zero", scope={"n": n}, passed=False,
                    witness={"i": i, "j": j, "difference": poly_to_dict(a - b)},
                )
    return CheckResult(name="t-zero", scope={"n": n}, passed=True)


def check_t_zero(n_max: int) -> list[CheckResult]:
    return [check_t_zero_at(n) for n in range(1, n_max + 1)]


def _vanishing_witness(h: HessenbergFunction, w, generators) -> dict | None:
    """First generator not killed by x_k -> w(k) t, or None if all vanish."""
    n = h.n
    t = t_var(n)
    assignment = {k: w[k - 1] * t for k in range(1, n + 1)}
    for j, g in enumerate(generators, start=1):
        image = g.substitute(x=assignment)
        if not image.is_zero():
            return {"w": list(w), "j": j, "residue": poly_to_dict(image)}
    return None


@_timed
def check_localization_vanishing(h: HessenbergFunction) -> CheckResult:
    """Every generator of I(h) dies at every S^1-fixed point of Hess(h)."""
    gens = ideal_generators(h, "equivariant").generators
    points = fixed_points(h)
    for w in points:
        witness = _vanishing_witness(h, w, gens)
        if witness is not None:
            return CheckResult(
                name="localization",
                scope={"h": list(h.values), "n": h.n}, passed=False, witness=witness,
            )
    return CheckResult(
        name="localization",
        scope={"h": list(h.values), "n": h.n, "fixedPoints": len(points)}, passed=True,
    )


@_timed
def check_fixed_point_exactness(h: HessenbergFunction) -> CheckResult:
    """w kills all generators of I(h)  <=>  w is a fixed point of Hess(h)."""
    gens = ideal_generators(h, "equivariant").generators
    fixed = set(fixed_points(h))
    n = h.n
    for w in permutations(range(1, n + 1)):
        witness = _vanishing_witness(h, w, gens)
        vanishes = witness is None
        member = w in fixed
        if vanishes and not member:
            return CheckResult(
                name="fixed-point-exactness", scope={"h": list(h.values), "n": n},
                passed=False,
                witness={"w": list(w), "problem": "vanishes but not a fixed point"},
            )
        if member and not vanishes:
            witness["problem"] = "fixed point with a surviving generator"
            return CheckResult(
                name="fixed-point-exactness", scope={"h": list(h.values), "n": n},
                passed=False, witness=witness,
            )
    return CheckResult(
        name="fixed-point-exactness",
        scope={"h": list(h.values), "n": n, "fixedPoints": len(fixed)}, passed=True,
    )


# -- Groebner-backed checks ----------------------------------------------


def _peterson_presentation(n: int) -> list[Polynomial]:
    gens = [peterson_rewrite_factor(j, n) * p_sum(j, n) for j in range(1, n)]
    gens.append(p_sum(n, n))
    return gens


def _equality_witness(gens_a, gens_b, pair_budget, cache_dir) -> dict | None:
    """None if the ideals agree, else which generator escapes which side."""
    gb_a = buchberger(gens_a, pair_budget=pair_budget, cache_dir=cache_dir)
    gb_b = buchberger(gens_b, pair_budget=pair_budget, cache_dir=cache_dir)
    for label, gens, gb in (("right-in-left", gens_b, gb_a), ("left-in-right", gens_a, gb_b)):
        for idx, g in enumerate(gens, start=1):
            r = normal_form(g, gb.basis, gb.order)
            if not r.is_zero():
                return {"direction": label, "generator": idx, "normalForm": poly_to_dict(r)}
    return None


@_timed
def check_peterson(n: int, pair_budget: int = DEFAULT_PAIR_BUDGET,
                   cache_dir=None) -> CheckResult:
    """Peterson case h = (2,3,...,n,n): the p-coefficient rewriting.

    Termwise: x_j - x_{j+1} - t = -p_{j-1} + 2p_j - p_{j+1} - 2t and the
    induced step f_{j+1,j} = f_{j,j-1} + (that factor) p_j; then ideal
    equality of I(h) with ((-p_{j-1}+2p_j-p_{j+1}-2t) p_j, ..., p_n).
    """
    if n < 2:
        raise ValueError("the Peterson case needs n >= 2")
    scope = {"n": n, "h": list(peterson_function(n).values)}
    for j in range(1, n):
        factor = peterson_rewrite_factor(j, n)
        direct = linear_factor(j, j + 1, n)
        if factor != direct:
            return CheckResult(
                name="peterson", scope=scope, passed=False,
                witness={"part": "factor-identity", "j": j,
                         "difference": poly_to_dict(factor - direct)},
            )
        step = f_inductive(j, j - 1, n) + factor * p_sum(j, n)
        if f_inductive(j + 1, j, n) != step:
            return CheckResult(
                name="peterson", scope=scope, passed=False,
                witness={"part": "recursion-step", "j": j,
                         "difference": poly_to_dict(f_inductive(j + 1, j, n) - step)},
            )
    gens = ideal_generators(peterson_function(n), "equivariant").generators
    witness = _equality_witness(list(gens), _peterson_presentation(n), pair_budget, cache_dir)
    if witness is not None:
        witness["part"] = "ideal-equality"
        return CheckResult(name="peterson", scope=scope, passed=False, witness=witness)
    return CheckResult(name="peterson", scope=scope, passed=True)


def _scaled_borel_generators(n: int) -> list[Polynomial]:
    """e_i(x) - e_i(t, 2t, ..., nt) for i = 1..n."""
    t = t_var(n)
    out = []
    for i in range(1, n + 1):
        value = sum(prod(combo) for combo in combinations(range(1, n + 1), i))
        out.append(elementary_symmetric(i, range(1, n + 1), n) - value * t ** i)
    return out


@_timed
def check_flag_borel(
    n: int,
    groebner_cap: int = GROEBNER_CAP,
    equivariant_cap: int = EQUIVARIANT_FLAG_CAP,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    cache_dir=None,
) -> CheckResult:
    """Flag case h = (n,...,n): q_r identities, Borel presentation, dim n!.

    The termwise parts always run; the Groebner-backed parts run when n
    is within their caps (anything larger is out of desk scale).
    """
    scope: dict = {"n": n}
    for r in range(1, n + 1):
        q = q_flag(r, n)
        direct = f_ordinary(n, n + 1 - r, n)
        if q != direct:
            return CheckResult(
                name="flag-borel", scope=scope, passed=False,
                witness={"part": "q-equals-f", "r": r,
                         "difference": poly_to_dict(q - direct)},
            )
        tail = range(n + 2 - r, n + 1)
        newton = sum(
            ((-1) ** i) * elementary_symmetric(i, tail, n) * power_sum(r - i, n)
            for i in range(r)
        )
        if q != newton:
            return CheckResult(
                name="flag-borel", scope=scope, passed=False,
                witness={"part": "newton-expansion", "r": r,
                         "difference": poly_to_dict(q - newton)},
            )
    parts = ["q-equals-f", "newton-expansion"]
    if n <= groebner_cap:
        flag = flag_function(n)
        ordinary = list(ideal_generators(flag, "ordinary").generators)
        borel = [elementary_symmetric(i, range(1, n + 1), n) for i in range(1, n + 1)]
        witness = _equality_witness(ordinary, borel, pair_budget, cache_dir)
        if witness is not None:
            witness["part"] = "borel-equality"
            return CheckResult(name="flag-borel", scope=scope, passed=False, witness=witness)
        gb = buchberger(ordinary, pair_budget=pair_budget, cache_dir=cache_dir)
        dim = hilbert_series(gb).quotient_dimension
        std = len(standard_monomials(gb))
        if dim != factorial(n) or std != factorial(n):
            return CheckResult(
                name="flag-borel", scope=scope, passed=False,
                witness={"part": "dimension", "expected": factorial(n),
                         "dimension": dim, "standardMonomials": std},
            )
        parts += ["borel-equality", "dimension"]
        scope["dimension"] = dim
    if n <= equivariant_cap:
        equivariant = list(ideal_generators(flag_function(n), "equivariant").generators)
        witness = _equality_witness(equivariant, _scaled_borel_generators(n), pair_budget, cache_dir)
        if witness is not None:
            witness["part"] = "equivariant-borel-equality"
            return CheckResult(name="flag-borel", scope=scope, passed=False, witness=witness)
        parts.append("equivariant-borel-equality")
    scope["parts"] = parts
    return CheckResult(name="flag-borel", scope=scope, passed=True)


def poincare_product(h: HessenbergFunction) -> list[int]:
    """prod_j (1 + q + ... + q^(h(j)-j)), the predicted graded dimensions."""
    out = [1]
    for j in range(1, h.n + 1):
        width = h(j) - j + 1
        nxt = [0] * (len(out) + width - 1)
        for a, c in enumerate(out):
            for b in range(width):
                nxt[a + b] += c
        out = nxt
    return out


@_timed
def check_hilbert(h: HessenbergFunction, pair_budget: int = DEFAULT_PAIR_BUDGET,
                  cache_dir=None) -> CheckResult:
    """Hilbert series of both presentations of Hess(h) against the product
    formula; the fixed-point count is reported but never asserted."""
    n = h.n
    scope: dict = {"h": list(h.values), "n": n}
    expected = poincare_product(h)
    expected_dim = prod(h(j) - j + 1 for j in range(1, n + 1))

    ordinary = ideal_generators(h, "ordinary").generators
    gb = buchberger(ordinary, pair_budget=pair_budget, cache_dir=cache_dir)
    data = hilbert_series(gb)
    if list(data.series) != expected or data.quotient_dimension != expected_dim:
        return CheckResult(
            name="hilbert", scope=scope, passed=False,
            witness={"part": "ordinary-series", "expected": expected,
                     "series": list(data.series), "expectedDimension": expected_dim,
                     "dimension": data.quotient_dimension},
        )
    std = len(standard_monomials(gb))
    if std != expected_dim:
        return CheckResult(
            name="hilbert", scope=scope, passed=False,
            witness={"part": "standard-monomials", "expected": expected_dim, "count": std},
        )

    equivariant = ideal_generators(h, "equivariant").generators
    gb_eq = buchberger(equivariant, pair_budget=pair_budget, cache_dir=cache_dir)
    data_eq = hilbert_series(gb_eq)
    if data_eq.denominator_power != 1 or list(data_eq.series) != expected:
        return CheckResult(
            name="hilbert", scope=scope, passed=False,
            witness={"part": "equivariant-series", "expected": expected,
                     "series": list(data_eq.series),
                     "denominatorPower": data_eq.denominator_power},
        )
    scope.update({
        "dimension": expected_dim,
        "fixedPointCount": len(fixed_points(h)),  # reported, not asserted
    })
    return CheckResult(name="hilbert", scope=scope, passed=True)


# -- negative controls ----------------------------------------------------


def _control_example_n4():
    table = _example_table_n4()
    table[(2, 1)] = -table[(2, 1)]  # flipped sign must be caught
    return _compare_table(table)


def _control_closed_form():
    n = 4
    truncated = _ladder_missing_first_column(3, 2, n)
    if f_inductive(3, 2, n) == truncated:
        return None
    return {"i": 3, "j": 2, "difference": poly_to_dict(f_inductive(3, 2, n) - truncated)}


def _ladder_missing_first_column(i, j, n):
    from .generators import delta

    acc = Polynomial(n)
    for k in range(2, j + 1):
        acc = acc + delta(i - j + k, k, n)
    return acc


def _control_t_zero():
    n = 2
    wrong = f_inductive(2, 1, n).substitute(t=1)  # t -> 1 is not the t -> 0 map
    if wrong == f_ordinary(2, 1, n):
        return None
    return {"i": 2, "j": 1, "difference": poly_to_dict(wrong - f_ordinary(2, 1, n))}


def _control_localization():
    h = HessenbergFunction((2, 3, 3))
    gens = ideal_generators(h, "equivariant").generators
    return _vanishing_witness(h, (2, 3, 1), gens)  # 231 is not a fixed point


def _control_exactness():
    h = HessenbergFunction((2, 3, 3))
    gens = ideal_generators(h, "equivariant").generators
    tampered = set(fixed_points(h)) | {(2, 3, 1)}
    for w in sorted(tampered):
        witness = _vanishing_witness(h, w, gens)
        if witness is not None:
            witness["problem"] = "claimed fixed point with surviving generator"
            return witness
    return None


def _control_peterson():
    n = 3
    t = t_var(n)
    wrong = [
        (peterson_rewrite_factor(j, n) - t) * p_sum(j, n)  # -2t becomes -3t
        for j in range(1, n)
    ]
    wrong.append(p_sum(n, n))
    gens = list(ideal_generators(peterson_function(n), "equivariant").generators)
    return _equality_witness(gens, wrong, DEFAULT_PAIR_BUDGET, None)


def _control_flag_borel():
    n = 3
    ordinary = list(ideal_generators(flag_function(n), "ordinary").generators)
    missing = [elementary_symmetric(i, range(1, n + 1), n) for i in range(1, n)]
    return _equality_witness(ordinary, missing, DEFAULT_PAIR_BUDGET, None)


def _control_hilbert():
    h = HessenbergFunction((2, 3, 3))
    gb = buchberger(list(ideal_generators(h, "ordinary").generators))
    series = list(hilbert_series(gb).series)
    wrong = [1, 2, 2]  # true series is 1 + 2q + q^2
    if series == wrong:
        return None
    return {"expected": wrong, "series": series}


_CONTROLS = (
    ("example-n4", _control_example_n4),
    ("closed-form", _control_closed_form),
    ("t-zero", _control_t_zero),
    ("localization", _control_localization),
    ("fixed-point-exactness", _control_exactness),
    ("peterson", _control_peterson),
    ("flag-borel", _control_flag_borel),
    ("hilbert", _control_hilbert),
)


def negative_controls() -> list[CheckResult]:
    """Corrupt each comparison and demand a failure with a witness."""
    out = []
    for target, control in _CONTROLS:
        start = time.perf_counter()
        caught = control()
        result = CheckResult(
            name=f"negative:{target}",
            scope={"mutation": "caught" if caught else "NOT caught", "witness": caught},
            passed=caught is not None,
            witness=None if caught is not None else {"problem": "mutation slipped through"},
        )
        result.elapsed = time.perf_counter() - start
        out.append(result)
    return out


# -- suite driver ----------------------------------------------------------


def _expand_tasks(names, n_max, groebner_n_max, pair_budget, cache_dir) -> list[tuple]:
    sym = lambda default: n_max if n_max is not None else default
    gcap = groebner_n_max if groebner_n_max is not None else GROEBNER_CAP
    cache = str(cache_dir) if cache_dir is not None else None
    tasks: list[tuple] = []
    for name in names:
        if name == "example-n4":
            tasks.append(("example-n4", ()))
        elif name == "closed-form":
            tasks += [("closed-form", (n,)) for n in range(1, sym(SYMBOLIC_CAP) + 1)]
        elif name == "t-zero":
            tasks += [("t-zero", (n,)) for n in range(1, sym(SYMBOLIC_CAP) + 1)]
        elif name == "localization":
            for n in range(1, sym(SYMBOLIC_CAP) + 1):
                tasks += [("localization", (h.values,)) for h in enumerate_all(n)]
        elif name == "fixed-point-exactness":
            for n in range(1, sym(EXACTNESS_CAP) + 1):
                tasks += [("fixed-point-exactness", (h.values,)) for h in enumerate_all(n)]
        elif name == "peterson":
            tasks += [("peterson", (n, pair_budget, cache)) for n in range(2, gcap + 1)]
        elif name == "flag-borel":
            for n in range(1, sym(SYMBOLIC_CAP) + 1):
                tasks.append(
                    ("flag-borel", (n, gcap, min(EQUIVARIANT_FLAG_CAP, gcap), pair_budget, cache))
                )
        elif name == "hilbert":
            for n in range(1, gcap + 1):
                tasks += [("hilbert", (h.values, pair_budget, cache)) for h in enumerate_all(n)]
        elif name == "negative-controls":
            tasks.append(("negative-controls", ()))
        else:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    return tasks


def _execute_task(task: tuple) -> list[CheckResult]:
    kind, payload = task
    if kind == "example-n4":
        return [check_example_n4()]
    if kind == "closed-form":
        return [check_closed_form_at(payload[0])]
    if kind == "t-zero":
        return [check_t_zero_at(payload[0])]
    if kind == "localization":
        return [check_localization_vanishing(HessenbergFunction(payload[0]))]
    if kind == "fixed-point-exactness":
        return [check_fixed_point_exactness(HessenbergFunction(payload[0]))]
    if kind == "peterson":
        n, budget, cache = payload
        return [check_peterson(n, pair_budget=budget, cache_dir=cache)]
    if kind == "flag-borel":
        n, gcap, ecap, budget, cache = payload
        return [check_flag_borel(n, groebner_cap=gcap, equivariant_cap=ecap,
                                 pair_budget=budget, cache_dir=cache)]
    if kind == "hilbert":
        values, budget, cache = payload
        return [check_hilbert(HessenbergFunction(values), pair_budget=budget, cache_dir=cache)]
    if kind == "negative-controls":
        return negative_controls()
    raise ValueError(f"unknown task kind {kind!r}")


def run_suite(
    names="all",
    n_max: int | None = None,
    groebner_n_max: int | None = None,
    jobs: int = 1,
    cache_dir=None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> VerificationReport:
    """Run the named checks (or all of them) and collect a report.

    Results come back in a deterministic order regardless of jobs; only
    the elapsed fields vary between runs.
    """
    if names == "all":
        selected = list(CHECK_NAMES)
    else:
        selected = list(names)
        for name in selected:
            if name not in CHECK_NAMES:
                raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    tasks = _expand_tasks(selected, n_max, groebner_n_max, pair_budget, cache_dir)
    start = time.perf_counter()
    results: list[CheckResult] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_execute_task, tasks):
                results.extend(batch)
    else:
        for task in tasks:
            results.extend(_execute_task(task))
    return VerificationReport(results=results, elapsed=time.perf_counter() - start)
