"""Exact rational feasibility of the one-query weight system.

A reduced function with support S is decidable by a single exact quantum
query iff there are non-negative rationals z_1..z_n with

    sum(z_i for i with bit i of x set) == 1/2   for every x in S,
    z_1 + ... + z_n <= 1.

This module decides that system exactly, returning either a weight-vector
witness or a Farkas-style certificate (row multipliers whose combination
has non-negative coefficients on every variable and a strictly negative
constant). Both answers re-verify by plain arithmetic in `verify_result`,
which shares no code with the solver.

All arithmetic is `fractions.Fraction`; no float ever enters a decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .core import PartialBooleanFn, bit_of, diff_set, sign_vector
from .errors import InternalError, SchemaError
from .reduction import ReducedFn

Rational = Fraction

_HALF = Fraction(1, 2)
_ONE = Fraction(1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class WeightVector:
    """Non-negative weights z_1..z_n with z_0 = 1 - sum(z) as derived slack."""

    z: tuple[Fraction, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.z):
            raise SchemaError("weight vector entries must be non-negative")
        if sum(self.z, _ZERO) > 1:
            raise SchemaError("weight vector entries must sum to at most 1")

    @property
    def z0(self) -> Fraction:
        return _ONE - sum(self.z, _ZERO)


@dataclass(frozen=True)
class FarkasWitness:
    """One multiplier per row of the standardized system, in row order.

    For a reduced system the rows are the support equations in sorted mask
    order followed by the sum row; for the unreduced system they are the
    normalization row followed by the difference-set rows.
    """

    multipliers: tuple[Fraction, ...]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: WeightVector | None = None
    certificate: FarkasWitness | None = None


# ---------------------------------------------------------------------------
# Solver core: phase-1 simplex with an exact Gaussian presolve.
# ---------------------------------------------------------------------------

def _presolve(eq_rows, nvars):
    """Row-reduce the equality rows, tracking each surviving row as a
    combination of the originals.

    Returns ('infeasible', multipliers) when the equalities alone are
    contradictory, else ('reduced', rows) where each row is
    (coeffs, rhs, comb) and comb maps original row index -> Fraction.
    """
    work = []
    for idx, (coeffs, rhs) in enumerate(eq_rows):
        comb = [_ZERO] * len(eq_rows)
        comb[idx] = _ONE
        work.append([[Fraction(v) for v in coeffs], Fraction(rhs), comb])

    pivot_rows = []
    pivoted = [False] * len(work)
    for col in range(nvars):
        pr = None
        for r, row in enumerate(work):
            if not pivoted[r] and row[0][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        pivoted[pr] = True
        pivot_rows.append(pr)
        prow = work[pr]
        pc = prow[0][col]
        if pc != 1:
            prow[0] = [v / pc for v in prow[0]]
            prow[1] = prow[1] / pc
            prow[2] = [v / pc for v in prow[2]]
        for r, row in enumerate(work):
            if r == pr:
                continue
            factor = row[0][col]
            if factor == 0:
                continue
            pcoef, prhs, pcomb = prow
            row[0] = [a - factor * b for a, b in zip(row[0], pcoef)]
            row[1] = row[1] - factor * prhs
            row[2] = [a - factor * b for a, b in zip(row[2], pcomb)]

    for r, row in enumerate(work):
        if pivoted[r]:
            continue
        if row[1] != 0:
            # 0 == rhs with rhs != 0: the combination itself certifies.
            scale = -1 / row[1]
            return "infeasible", [v * scale for v in row[2]]
    return "reduced", [work[r] for r in pivot_rows]


def _solve_nonneg(eq_rows, le_rows, nvars):
    """Feasibility of {A_eq x = b_eq, A_le x <= b_le, x >= 0} over Fractions.

    Returns (True, x, None) or (False, None, multipliers) where the
    multipliers are per input row, ordered eq rows then le rows, oriented
    so that the combined row has coefficients >= 0 and constant < 0.
    """
    for coeffs, rhs in le_rows:
        if rhs < 0:
            raise InternalError("le rows with negative rhs are not used here")

    status, reduced = _presolve(eq_rows, nvars)
    if status == "infeasible":
        return False, None, list(reduced) + [_ZERO] * len(le_rows)

    # Normalize reduced equality rows to rhs >= 0, folding the sign into
    # the tracked combination.
    red = []
    for coeffs, rhs, comb in reduced:
        if rhs < 0:
            red.append(([-v for v in coeffs], -rhs, [-v for v in comb]))
        else:
            red.append((list(coeffs), rhs, list(comb)))

    n_eq = len(red)
    n_le = len(le_rows)
    n_cols = nvars + n_le + n_eq  # x, slacks, artificials
    rows = []
    basis = []
    for k, (coeffs, rhs) in enumerate(le_rows):
        row = [Fraction(v) for v in coeffs] + [_ZERO] * (n_le + n_eq) + [rhs]
        row[nvars + k] = _ONE
        rows.append(row)
        basis.append(nvars + k)
    for j, (coeffs, rhs, _) in enumerate(red):
        row = list(coeffs) + [_ZERO] * (n_le + n_eq) + [rhs]
        row[nvars + n_le + j] = _ONE
        rows.append(row)
        basis.append(nvars + n_le + j)

    # Phase-1 cost row (minimize the artificial sum), with basic columns
    # already priced out; cost[-1] is -objective.
    cost = [_ZERO] * (n_cols + 1)
    for j in range(n_le, n_le + n_eq):
        row = rows[j]
        for c in range(n_cols + 1):
            cost[c] -= row[c]
    for j in range(nvars + n_le, n_cols):
        cost[j] += _ONE

    # Bland's rule on a fixed column order guarantees termination and a
    # reproducible basic solution.
    while True:
        enter = -1
        for j in range(n_cols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for r, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[r] < basis[leave]
                ):
                    best = ratio
                    leave = r
        if leave < 0:
            raise InternalError("phase-1 objective is bounded; no ratio row is a bug")
        prow = rows[leave]
        pc = prow[enter]
        if pc != 1:
            rows[leave] = prow = [v / pc for v in prow]
        for r, row in enumerate(rows):
            if r != leave and row[enter] != 0:
                f = row[enter]
                rows[r] = [a - f * b for a, b in zip(row, prow)]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * b for a, b in zip(cost, prow)]
        basis[leave] = enter

    objective = -cost[-1]
    if objective == 0:
        x = [_ZERO] * nvars
        for r, b in enumerate(basis):
            if b < nvars:
                x[b] = rows[r][-1]
        return True, x, None

    # Infeasible: recover row multipliers from the reduced costs of the
    # initial basis columns, then push them back through the presolve.
    mu_le = []
    for k in range(n_le):
        y = -cost[nvars + k]
        mu_le.append(-y)
    mu_red = []
    for j in range(n_eq):
        y = _ONE - cost[nvars + n_le + j]
        mu_red.append(-y)
    mu_eq = [_ZERO] * len(eq_rows)
    for j, (_, _, comb) in enumerate(red):
        mj = mu_red[j]
        if mj == 0:
            continue
        for k, c in enumerate(comb):
            if c != 0:
                mu_eq[k] += mj * c
    return False, None, mu_eq + mu_le


def _dedup_rows(rows):
    """Merge identical rows; returns (unique_rows, keep_index_per_original)."""
    seen = {}
    unique = []
    keep = []
    for coeffs, rhs in rows:
        key = (tuple(coeffs), rhs)
        if key not in seen:
            seen[key] = len(unique)
            unique.append((coeffs, rhs))
        keep.append(seen[key])
    return unique, keep


def _expand_multipliers(mult_unique, keep, n_unique):
    out = [_ZERO] * len(keep)
    used = [False] * n_unique
    for orig, uniq in enumerate(keep):
        if not used[uniq]:
            out[orig] = mult_unique[uniq]
            used[uniq] = True
    return out


def _mask_coeffs(mask: int, n: int, free: Sequence[int]) -> list[int]:
    return [bit_of(mask, i, n) for i in free]


def _solve_reduced_system(n, support, fixed):
    free = [i for i in range(1, n + 1) if i not in fixed]
    nvars = len(free)
    rows = [(_mask_coeffs(m, n, free), _HALF) for m in support]
    unique, keep = _dedup_rows(rows)
    le_rows = [([1] * nvars, _ONE)]
    feasible, x, mult = _solve_nonneg(unique, le_rows, nvars)
    if feasible:
        z = [_ZERO] * n
        for pos, i in enumerate(free):
            z[i - 1] = x[pos]
        return FeasibilityResult(True, witness=WeightVector(tuple(z)))
    mult_eq = _expand_multipliers(mult[: len(unique)], keep, len(unique))
    multipliers = tuple(mult_eq) + (mult[len(unique)],)
    return FeasibilityResult(False, certificate=FarkasWitness(multipliers))


@lru_cache(maxsize=1 << 17)
def _decide_cached(n: int, support: tuple[int, ...], fixed: frozenset[int]):
    result = _solve_reduced_system(n, support, fixed)
    if not _verify_reduced(n, support, result, fixed):
        raise InternalError(f"solver self-check failed for support {support}")
    return result


def decide_reduced(g: ReducedFn) -> FeasibilityResult:
    """Decide the weight system of a reduced function.

    Deterministic: a fixed row/column order plus Bland's pivot rule means
    the same input always returns the same witness or certificate.
    """
    return _decide_cached(g.n, g.support, frozenset())


def decide_with_fixed_zeros(g: ReducedFn, fixed: Iterable[int]) -> FeasibilityResult:
    """Decide the weight system with z_i pinned to 0 for every i in `fixed`.

    A feasible answer means the function is computable by an algorithm
    that never gives query weight to those bits.
    """
    fixed_set = frozenset(fixed)
    if not fixed_set <= set(range(1, g.n + 1)):
        raise SchemaError(f"fixed bits {sorted(fixed_set)} outside 1..{g.n}")
    return _decide_cached(g.n, g.support, fixed_set)


def decide(f: PartialBooleanFn) -> FeasibilityResult:
    """Decide an arbitrary non-constant promise function.

    Works on the unreduced system over z_0..z_n (normalization row plus
    one sign-vector orthogonality row per XOR difference), so it is an
    independent route from `decide_reduced` of the reduced form; the two
    must agree by the reduction law.
    """
    diffs = diff_set(f)  # raises ConstantFunctionError when needed
    n = f.n
    rows = [([1] * (n + 1), _ONE)]
    for d in diffs:
        rows.append((list(sign_vector(d, n)), _ZERO))
    unique, keep = _dedup_rows(rows)
    feasible, x, mult = _solve_nonneg(unique, [], n + 1)
    if feasible:
        witness = WeightVector(tuple(x[1:]))
        if witness.z0 != x[0]:
            raise InternalError("normalization row violated in returned solution")
        result = FeasibilityResult(True, witness=witness)
    else:
        multipliers = tuple(_expand_multipliers(mult, keep, len(unique)))
        result = FeasibilityResult(False, certificate=FarkasWitness(multipliers))
    if not verify_decision(f, result):
        raise InternalError("solver self-check failed for unreduced system")
    return result


def precheck_bound(f: PartialBooleanFn) -> bool:
    """Cheap necessary condition: a difference set larger than 2**(n-1)
    already rules out a single-query algorithm, no solve needed."""
    return len(diff_set(f)) <= 1 << (f.n - 1)


# ---------------------------------------------------------------------------
# Independent verification (no solver code shared).
# ---------------------------------------------------------------------------

def _verify_reduced(n, support, result, fixed):
    if result.feasible:
        w = result.witness
        if w is None or result.certificate is not None or len(w.z) != n:
            return False
        if any(v < 0 for v in w.z):
            return False
        if any(w.z[i - 1] != 0 for i in fixed):
            return False
        if sum(w.z, _ZERO) > 1:
            return False
        for mask in support:
            total = sum(w.z[i - 1] for i in range(1, n + 1) if bit_of(mask, i, n))
            if total != _HALF:
                return False
        return True

    cert = result.certificate
    if cert is None or result.witness is not None:
        return False
    mult = cert.multipliers
    if len(mult) != len(support) + 1:
        return False
    mu_le = mult[-1]
    if mu_le < 0:
        return False
    combined_rhs = mu_le * _ONE
    for mu, mask in zip(mult, support):
        combined_rhs += mu * _HALF
    if combined_rhs >= 0:
        return False
    for i in range(1, n + 1):
        if i in fixed:
            continue
        coef = mu_le
        for mu, mask in zip(mult, support):
            if bit_of(mask, i, n):
                coef += mu
        if coef < 0:
            return False
    return True


def verify_result(g: ReducedFn, result: FeasibilityResult, fixed: Iterable[int] = ()) -> bool:
    """Re-check a reduced-system answer with plain exact arithmetic.

    Feasible answers are checked against every support equation, the sign
    constraints and the sum bound; infeasible answers are checked by
    multiplying out the certificate. Returns False on any violation.
    """
    return _verify_reduced(g.n, g.support, result, frozenset(fixed))


def verify_decision(f: PartialBooleanFn, result: FeasibilityResult) -> bool:
    """Re-check an unreduced-system answer from `decide`."""
    n = f.n
    diffs = diff_set(f)
    if result.feasible:
        w = result.witness
        if w is None or len(w.z) != n:
            return False
        full = (w.z0,) + w.z
        if any(v < 0 for v in full):
            return False
        if sum(full, _ZERO) != 1:
            return False
        for d in diffs:
            if sum(s * v for s, v in zip(sign_vector(d, n), full)) != 0:
                return False
        return True

    cert = result.certificate
    if cert is None:
        return False
    mult = cert.multipliers
    if len(mult) != len(diffs) + 1:
        return False
    combined_rhs = mult[0] * _ONE
    if combined_rhs >= 0:
        return False
    for col in range(n + 1):
        coef = mult[0]
        for mu, d in zip(mult[1:], diffs):
            coef += mu * sign_vector(d, n)[col]
        if coef < 0:
            return False
    return True
