"""
Self-check suites: ``bounds`` (degree sandwich and witnesses), ``genfunc``
(generating function laws and cross-checks) and ``agreement`` (growth
verdict against the case matchers and against counted data).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .classifier import classify, match_basis, small_basis_sweep
from .degree import BetaShape, degree_of, witness_irreducible
from .enumerator import (
    DEFAULT_MAX_NODES,
    EventualPolynomial,
    avoider_lower_bounds,
    count_avoiders,
    fibonacci_dominated,
    fit_while_counting,
)
from .errors import BudgetExceeded, Discrepancy
from .genfunc import check_g_laws, eventual_poly_of_f, expected_leading, f_series, mv_consistency
from .perms import increasing, perm

PASS, FAIL, BUDGET = "pass", "fail", "budget"


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    actual: str
    status: str

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "status": self.status}


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, name: str, expected, actual, ok: Optional[bool] = None) -> Check:
        """Record a check; ``ok`` defaults to expected == actual, None marks a budget overrun."""
        if ok is None and actual is not BUDGET:
            ok = expected == actual
        status = BUDGET if actual is BUDGET else (PASS if ok else FAIL)
        check = Check(name, str(expected), str(actual), status)
        self.checks.append(check)
        return check

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def budget_hit(self) -> bool:
        return any(c.status == BUDGET for c in self.checks)

    def exit_code(self) -> int:
        if self.failed:
            return 1
        return 3 if self.budget_hit else 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": sum(c.status == PASS for c in self.checks),
            "failed": len(self.failed),
            "budget": sum(c.status == BUDGET for c in self.checks),
            "checks": [c.to_json() for c in self.checks],
        }


# ---------------------------------------------------------------------------
# genfunc
# ---------------------------------------------------------------------------

def run_genfunc(r_max: int = 8, cross_r: tuple = (3, 4, 5), order: int = 12,
                fit_r: tuple = (3, 4), max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> SuiteReport:
    report = SuiteReport("genfunc")
    for row in check_g_laws(r_max).rows:
        r = row["r"]
        report.add(f"G_{r} degree", row["expected_degree"], row["degree"])
        report.add(f"G_{r} leading coefficient", row["expected_leading"], row["leading"])
    for r in cross_r:
        series = [int(c) for c in f_series(r, order).coeffs]
        try:
            counts = list(count_avoiders([increasing(r), perm((2, 3, 1))], order, max_nodes))
        except BudgetExceeded:
            counts = BUDGET
        report.add(f"F_{r} coefficients vs counts to n={order}", series, counts)
        report.add(f"F_{r} satisfies the recursive identity to order {order}", True, mv_consistency(r, order))
    for r in fit_r:
        try:
            fit = eventual_poly_of_f(r)
            got = (fit.degree, str(fit.poly.leading))
        except Discrepancy as exc:
            got = str(exc)
        report.add(f"eventual polynomial of F_{r}", (2 * r - 4, str(expected_leading(r))), got)
    return report


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

DEFAULT_BOUNDS_GRID = tuple(
    (r, p, q) for r in (3, 4) for p in range(4) for q in range(4) if 1 <= p + q <= 3
)


def run_bounds(grid=DEFAULT_BOUNDS_GRID, max_nodes: Optional[int] = DEFAULT_MAX_NODES) -> SuiteReport:
    """
    For each (r, p, q): the witness irreducible has the promised length and
    expansible set, and the exact degree (when it fits the budget) lies
    between the lower and upper bounds.
    """
    report = SuiteReport("bounds")
    for r, p, q in grid:
        shape = BetaShape(p, q)
        tag = f"r={r} p={p} q={q}"
        length = (r - 1) * (2 * shape.s - 5)
        size = (r - 1) * (shape.s - 2)
        try:
            w = witness_irreducible(r, shape, max_nodes)
            report.add(f"{tag} witness length/expansible size", (length, size),
                       (len(w.permutation), w.expansible.size))
        except BudgetExceeded:
            report.add(f"{tag} witness length/expansible size", (length, size), BUDGET)
        except Discrepancy as exc:
            report.add(f"{tag} witness length/expansible size", (length, size), str(exc), ok=False)
        rep = degree_of(r, shape, max_nodes)
        expected = f"{rep.lower_bound} <= degree <= {rep.upper_bound}"
        if rep.exact_degree is None:
            report.add(f"{tag} degree sandwich", expected, BUDGET)
        else:
            report.add(f"{tag} degree sandwich", expected, rep.exact_degree, ok=rep.within_bounds())
    return report


# ---------------------------------------------------------------------------
# agreement
# ---------------------------------------------------------------------------

def probe_basis(basis, polynomial: bool, max_nodes: Optional[int] = DEFAULT_MAX_NODES,
                fit_n: int = 14, max_threshold: int = 10, fib_n: int = 12, keep: int = 300):
    """
    Counted evidence for one basis. Polynomial: an eventual polynomial is
    found by n = fit_n with threshold <= max_threshold. Otherwise: c_n is at
    least Fib(n-1) for 5 <= n <= fib_n, checked first on cheap lower bounds.
    Returns (expected, actual, ok) with actual BUDGET on overrun.
    """
    try:
        if polynomial:
            fit, counts = fit_while_counting(basis, fit_n, max_nodes)
            if isinstance(fit, EventualPolynomial):
                actual = f"degree {fit.degree}, threshold {fit.threshold} at N={counts.max_n}"
                return "fit with threshold <= %d" % max_threshold, actual, fit.threshold <= max_threshold
            return "fit with threshold <= %d" % max_threshold, fit.reason, False
        bounds = avoider_lower_bounds(basis, fib_n, keep=keep, max_nodes=max_nodes)
        if not fibonacci_dominated(bounds):
            bounds = count_avoiders(basis, fib_n, max_nodes)
        return "c_n >= Fib(n-1) for 5 <= n <= %d" % fib_n, list(bounds[5:]), fibonacci_dominated(bounds)
    except BudgetExceeded:
        return "counted within budget", BUDGET, None


def run_agreement(max_nodes: Optional[int] = DEFAULT_MAX_NODES, probe: bool = True,
                  progress: Optional[Callable[[str], None]] = None) -> SuiteReport:
    report = SuiteReport("agreement")
    bases = small_basis_sweep()
    disagree = []
    verdicts = {}
    for b in bases:
        poly = classify(b).polynomial
        verdicts[b] = poly
        if poly != (match_basis(b) is not None):
            disagree.append(str(b))
    report.add(f"verdict vs case matchers over {len(bases)} canonical bases", [], disagree)
    if probe:
        for b in bases:
            expected, actual, ok = probe_basis(b, verdicts[b], max_nodes)
            report.add(f"counts for Av({b})", expected, actual, ok=ok)
            if progress is not None:
                progress(str(b))
    return report


SUITES = {"bounds": run_bounds, "genfunc": run_genfunc, "agreement": run_agreement}
