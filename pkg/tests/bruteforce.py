"""Independent brute-force oracles for the test suite.

Everything here is deliberately dumb and shares no code with the solver:
feasibility by enumerating basic solutions of the equality system over
every column subset, difference sets by looping over input pairs, and
group-weight supports by scanning all masks.
"""

from fractions import Fraction

HALF = Fraction(1, 2)


def bit(mask: int, i: int, n: int) -> int:
    return (mask >> (n - i)) & 1


def _solve_exact(rows, cols):
    """Solve the given rows restricted to `cols` for a unique solution.

    rows: list of (coeff_list_over_cols, rhs). Returns the solution list
    or None when the system is inconsistent or underdetermined.
    """
    m = len(rows)
    k = len(cols)
    a = [[Fraction(c) for c in coeffs] + [Fraction(rhs)] for coeffs, rhs in rows]
    rank = 0
    where = [-1] * k
    for col in range(k):
        piv = None
        for r in range(rank, m):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[col]
        a[rank] = pr = [v / pv for v in pr]
        for r in range(m):
            if r != rank and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], pr)]
        where[col] = rank
        rank += 1
    for r in range(rank, m):
        if a[r][k] != 0:
            return None  # inconsistent
    if rank < k:
        return None  # underdetermined
    return [a[where[c]][k] for c in range(k)]


def bf_feasible(n: int, support) -> bool:
    """Oracle for the reduced weight system: try every vertex pattern.

    A vertex of {A z = 1/2, z >= 0, sum z <= 1} pins each coordinate either
    to 0 or by the active rows (optionally including the tight sum row), so
    scanning all column subsets with and without the sum row is exhaustive.
    """
    eq = [([bit(m, i, n) for i in range(1, n + 1)], HALF) for m in support]
    for subset in range(1 << n):
        cols = [i for i in range(n) if subset >> i & 1]
        restricted = [([coeffs[c] for c in cols], rhs) for coeffs, rhs in eq]
        for with_sum in (False, True):
            rows = restricted + ([([1] * len(cols), Fraction(1))] if with_sum else [])
            sol = _solve_exact(rows, cols)
            if sol is None:
                continue
            if any(v < 0 for v in sol):
                continue
            if sum(sol, Fraction(0)) > 1:
                continue
            # re-check every original equation with zeros filled in
            full = [Fraction(0)] * n
            for c, v in zip(cols, sol):
                full[c] = v
            if all(
                sum((full[i - 1] for i in range(1, n + 1) if bit(m, i, n)), Fraction(0)) == HALF
                for m in support
            ):
                return True
    return False


def bf_unique_solution(n: int, support):
    """The unique solution of the full equality system, if there is one.

    Returns the length-n solution when the support equations pin every
    coordinate (regardless of signs), else None.
    """
    eq = [([bit(m, i, n) for i in range(1, n + 1)], HALF) for m in support]
    return _solve_exact(eq, list(range(n)))


def bf_diff_set(ones, zeros):
    return tuple(sorted({a ^ b for a in zeros for b in ones}))


def bf_symmetric(n: int, ones, zeros) -> bool:
    """Direct definition check over all mask pairs of equal weight."""
    value = {}
    for m in ones:
        value[m] = 1
    for m in zeros:
        value[m] = 0
    for x in range(1 << n):
        for y in range(1 << n):
            if bin(x).count("1") != bin(y).count("1"):
                continue
            if x in value and y in value and value[x] != value[y]:
                return False
            if (x in value) != (y in value):
                return False
    return True


def bf_group_ones(boundaries, values, n):
    """All masks whose groupwise weight combination hits 1/2, by direct scan."""
    ones = []
    for mask in range(1, 1 << n):
        total = Fraction(0)
        for g in range(len(values)):
            lo, hi = boundaries[g], boundaries[g + 1]
            w = sum(bit(mask, i, n) for i in range(lo + 1, hi + 1))
            total += values[g] * w
        if total == HALF:
            ones.append(mask)
    return tuple(ones)
