"""Exhaustive classification of reduced functions at small arity.

Full-subset mode walks every nonempty support over the nonzero masks
(gated to n <= 4; that is 32767 supports at n=4) and decides each one.
At n=5 only witness-first mode is available: the maximal feasible
supports are recovered from the vertices of the weight-constraint
arrangement instead of walking all 2**31 subsets.

A record is non-trivial when it is feasible, needs every bit (no
single query weight can be pinned to zero), is not symmetric, and does
not sit inside one reachable Hamming level. `reproduce_tables` re-derives
the bundled catalog rows and itemizes every disagreement.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from . import catalog
from .core import (
    PartialBooleanFn,
    bit_of,
    hamming_weight,
    is_symmetric,
    mask_to_string,
    permute_mask,
    string_to_mask,
)
from .errors import ArityTooLargeError, InternalError
from .feasibility import (
    FeasibilityResult,
    WeightVector,
    decide_reduced,
    decide_with_fixed_zeros,
    verify_result,
)
from .reduction import ReducedFn

_HALF = Fraction(1, 2)

FULL_MODE_MAX = 4
VERTEX_MODE_MAX = 5


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    support: tuple[int, ...]
    feasible: bool
    witness: WeightVector | None
    symmetric: bool
    dj_computable: bool
    removable_bits: tuple[int, ...]
    maximal: bool = False
    included_by: tuple[int, ...] | None = None

    @property
    def fewer_bits(self) -> bool:
        return bool(self.removable_bits)

    @property
    def non_trivial(self) -> bool:
        return (
            self.feasible
            and not self.fewer_bits
            and not self.symmetric
            and not self.dj_computable
        )

    def support_strings(self) -> tuple[str, ...]:
        return tuple(mask_to_string(m, self.n) for m in self.support)


def _support_key(support: Sequence[int]) -> int:
    """Characteristic bitset of a support: bit m-1 set iff mask m is in it."""
    key = 0
    for m in support:
        key |= 1 << (m - 1)
    return key


def _key_support(key: int, n: int) -> tuple[int, ...]:
    return tuple(m for m in range(1, 1 << n) if key >> (m - 1) & 1)


def is_dj_computable(n: int, support: Sequence[int]) -> bool:
    """Support confined to one Hamming level c with ceil(n/2) <= c <= n."""
    weights = {hamming_weight(m) for m in support}
    if len(weights) != 1:
        return False
    c = weights.pop()
    return (n + 1) // 2 <= c <= n


def removable_bits(g: ReducedFn) -> tuple[int, ...]:
    """Bits whose query weight can be zero in some feasible assignment."""
    out = []
    for i in range(1, g.n + 1):
        if decide_with_fixed_zeros(g, {i}).feasible:
            out.append(i)
    return tuple(out)


def _classify_support(n: int, support: tuple[int, ...]) -> ClassificationRecord:
    g = ReducedFn(n, support)
    res = decide_reduced(g)
    fn = PartialBooleanFn(n, ones=support, zeros=(0,))
    return ClassificationRecord(
        n=n,
        support=support,
        feasible=res.feasible,
        witness=res.witness,
        symmetric=is_symmetric(fn),
        dj_computable=is_dj_computable(n, support),
        # an infeasible system stays infeasible with extra pins, so probes
        # are only run on feasible supports
        removable_bits=removable_bits(g) if res.feasible else (),
    )


def _scan_chunk(args: tuple[int, int, int]) -> list[ClassificationRecord]:
    n, start, stop = args
    return [_classify_support(n, _key_support(key, n)) for key in range(start, stop)]


def _attach_inclusion(records: list[ClassificationRecord]) -> list[ClassificationRecord]:
    """Fill in maximal/included_by by one size-descending sweep over the
    feasible supports (subset tests are bitset tests on support keys)."""
    feasible = [(r, _support_key(r.support)) for r in records if r.feasible]
    feasible.sort(key=lambda t: (-len(t[0].support), t[1]))
    maximal: list[tuple[int, tuple[int, ...]]] = []
    verdict: dict[int, tuple[int, ...] | None] = {}
    for rec, key in feasible:
        parent = None
        for mkey, msupport in maximal:
            if key != mkey and key & mkey == key:
                parent = msupport
                break
        if parent is None:
            maximal.append((key, rec.support))
        verdict[key] = parent

    out = []
    for rec in records:
        if not rec.feasible:
            out.append(rec)
            continue
        parent = verdict[_support_key(rec.support)]
        out.append(
            ClassificationRecord(
                n=rec.n,
                support=rec.support,
                feasible=rec.feasible,
                witness=rec.witness,
                symmetric=rec.symmetric,
                dj_computable=rec.dj_computable,
                removable_bits=rec.removable_bits,
                maximal=parent is None,
                included_by=parent,
            )
        )
    return out


def classify_all(n: int, workers: int = 1) -> list[ClassificationRecord]:
    """All 2**(2**n - 1) - 1 records at arity n (full mode, n <= 4)."""
    if n > FULL_MODE_MAX:
        raise ArityTooLargeError(
            f"full-subset classification is gated to n <= {FULL_MODE_MAX}; "
            f"n = 5 offers witness-first maximal_feasible only"
        )
    total = 1 << ((1 << n) - 1)
    if workers <= 1:
        records = [_classify_support(n, _key_support(k, n)) for k in range(1, total)]
    else:
        bounds = list(range(1, total, max(1, (total - 1) // workers + 1))) + [total]
        chunks = [(n, a, b) for a, b in zip(bounds, bounds[1:])]
        with Pool(workers) as pool:
            parts = pool.map(_scan_chunk, chunks)
        records = [r for part in parts for r in part]
    return _attach_inclusion(records)


def enumerate_reduced(n: int, workers: int = 1) -> Iterator[ClassificationRecord]:
    """Stream classification records in deterministic support-key order.

    n <= 4 streams every support; n = 5 streams only the maximal feasible
    supports (witness-first mode).
    """
    if n > VERTEX_MODE_MAX:
        raise ArityTooLargeError(f"classification is supported for n <= {VERTEX_MODE_MAX}")
    if n <= FULL_MODE_MAX:
        yield from classify_all(n, workers=workers)
    else:
        yield from _vertex_mode_records(n)


def maximal_feasible(n: int) -> list[ClassificationRecord]:
    """Feasible supports with no feasible strict superset."""
    if n > VERTEX_MODE_MAX:
        raise ArityTooLargeError(f"classification is supported for n <= {VERTEX_MODE_MAX}")
    if n <= FULL_MODE_MAX:
        return [r for r in classify_all(n) if r.maximal]
    return _vertex_mode_records(n)


def nontrivial_catalog(n: int) -> list[ClassificationRecord]:
    """Non-trivial records, restricted to those with no non-trivial strict
    superset (the bookkeeping level at which the catalog counts)."""
    if n > FULL_MODE_MAX:
        raise ArityTooLargeError(f"the non-trivial catalog is gated to n <= {FULL_MODE_MAX}")
    records = classify_all(n)
    nontrivial = [r for r in records if r.non_trivial]
    keys = {_support_key(r.support): r for r in nontrivial}
    out = []
    for key, rec in keys.items():
        if any(key != other and key & other == key for other in keys):
            continue
        out.append(rec)
    out.sort(key=lambda r: _support_key(r.support))
    return out


# ---------------------------------------------------------------------------
# Witness-first mode: maximal supports from arrangement vertices.
# ---------------------------------------------------------------------------

def _solve_square_int(rows: list[list[int]], n: int):
    """Unique solution of an n x n integer system, or None.

    Fraction-free forward elimination keeps everything in small ints; the
    single back-substitution at the end is the only rational arithmetic.
    """
    a = [row[:] for row in rows]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        pv = prow[col]
        for r in range(col + 1, n):
            v = a[r][col]
            if v:
                a[r] = [x * pv - y * v for x, y in zip(a[r], prow)]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = Fraction(a[r][n])
        for c in range(r + 1, n):
            if a[r][c]:
                acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def _vertex_witnesses(n: int) -> list[tuple[Fraction, ...]]:
    """Candidate weight vectors: vertices of the arrangement cut out by the
    level hyperplanes, the sign walls and the sum wall.

    Solved for w = 2z so every row is integral."""
    rows: list[list[int]] = []
    for mask in range(1, 1 << n):
        rows.append([bit_of(mask, i, n) for i in range(1, n + 1)] + [1])
    for i in range(n):
        coeffs = [0] * (n + 1)
        coeffs[i] = 1
        rows.append(coeffs)
    rows.append([1] * n + [2])

    seen: set[tuple[Fraction, ...]] = set()
    out: list[tuple[Fraction, ...]] = []
    two = Fraction(2)
    for combo in itertools.combinations(rows, n):
        w = _solve_square_int(list(combo), n)
        if w is None:
            continue
        zt = tuple(v / two for v in w)
        if zt in seen:
            continue
        seen.add(zt)
        if all(v >= 0 for v in zt) and sum(zt) <= 1:
            out.append(zt)
    return out


def _one_class(z: Sequence[Fraction], n: int) -> tuple[int, ...]:
    out = []
    for mask in range(1, 1 << n):
        total = sum((z[i - 1] for i in range(1, n + 1) if bit_of(mask, i, n)), Fraction(0))
        if total == _HALF:
            out.append(mask)
    return tuple(out)


def _vertex_mode_records(n: int) -> list[ClassificationRecord]:
    classes: set[tuple[int, ...]] = set()
    for z in _vertex_witnesses(n):
        cls = _one_class(z, n)
        if cls:
            classes.add(cls)
    keyed = sorted(_support_key(c) for c in classes)
    maximal = [
        key
        for key in keyed
        if not any(other != key and key & other == key for other in keyed)
    ]
    records = []
    for key in maximal:
        support = _key_support(key, n)
        rec = _classify_support(n, support)
        if not rec.feasible:
            raise InternalError("vertex-mode support must be feasible")
        records.append(
            ClassificationRecord(
                n=n,
                support=rec.support,
                feasible=True,
                witness=rec.witness,
                symmetric=rec.symmetric,
                dj_computable=rec.dj_computable,
                removable_bits=rec.removable_bits,
                maximal=True,
                included_by=None,
            )
        )
    return records


# ---------------------------------------------------------------------------
# Bit-permutation orbits.
# ---------------------------------------------------------------------------

def permute_support(support: Sequence[int], perm: Sequence[int], n: int) -> tuple[int, ...]:
    return tuple(sorted(permute_mask(m, perm, n) for m in support))


def orbit_canonical(support: Sequence[int], n: int) -> tuple[int, ...]:
    """Lexicographically smallest bit-relabelling of a support."""
    base = tuple(sorted(support))
    best = base
    for perm in itertools.permutations(range(1, n + 1)):
        cand = permute_support(base, perm, n)
        if cand < best:
            best = cand
    return best


def group_orbits(supports: Iterable[Sequence[int]], n: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    orbits: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for s in supports:
        orbits.setdefault(orbit_canonical(s, n), []).append(tuple(sorted(s)))
    return orbits


# ---------------------------------------------------------------------------
# Catalog reproduction.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowCheck:
    support: tuple[str, ...]
    expected_kind: str
    claimed_weights: tuple[Fraction, ...] | None
    family: bool
    included_in: tuple[str, ...] | None
    weights_valid: bool | None
    feasible: bool
    witness: tuple[Fraction, ...] | None
    symmetric: bool
    removable_bits: tuple[int, ...]
    dj_computable: bool
    derived_kind: str
    agree: bool
    notes: tuple[str, ...]


@dataclass(frozen=True)
class TableReport:
    n: int
    rows: tuple[RowCheck, ...]
    total_records: int
    feasible_records: int
    maximal_supports: tuple[tuple[str, ...], ...]
    unlisted_maximal_orbits: tuple[tuple[str, ...], ...]
    nontrivial_supports: tuple[tuple[str, ...], ...]
    nontrivial_orbit_count: int
    claimed_nontrivial_supports: tuple[tuple[str, ...], ...]
    claimed_nontrivial_count: int
    derived_nontrivial_count: int
    count_matches_claim: bool
    discrepancies: tuple[str, ...]

    def to_json_dict(self) -> dict:
        def row_dict(row: RowCheck) -> dict:
            return {
                "support": list(row.support),
                "expected_kind": row.expected_kind,
                "claimed_weights": [str(w) for w in row.claimed_weights]
                if row.claimed_weights
                else None,
                "family_representative": row.family,
                "included_in": list(row.included_in) if row.included_in else None,
                "weights_valid": row.weights_valid,
                "feasible": row.feasible,
                "witness": [str(w) for w in row.witness] if row.witness else None,
                "symmetric": row.symmetric,
                "removable_bits": list(row.removable_bits),
                "dj_computable": row.dj_computable,
                "derived_kind": row.derived_kind,
                "agree": row.agree,
                "notes": list(row.notes),
            }

        return {
            "n": self.n,
            "rows": [row_dict(r) for r in self.rows],
            "total_records": self.total_records,
            "feasible_records": self.feasible_records,
            "maximal_supports": [list(s) for s in self.maximal_supports],
            "unlisted_maximal_orbits": [list(s) for s in self.unlisted_maximal_orbits],
            "nontrivial_supports": [list(s) for s in self.nontrivial_supports],
            "nontrivial_orbit_count": self.nontrivial_orbit_count,
            "claimed_nontrivial_supports": [
                list(s) for s in self.claimed_nontrivial_supports
            ],
            "claimed_nontrivial_count": self.claimed_nontrivial_count,
            "derived_nontrivial_count": self.derived_nontrivial_count,
            "count_matches_claim": self.count_matches_claim,
            "discrepancies": list(self.discrepancies),
        }


def _derived_kind(rec: ClassificationRecord) -> str:
    if not rec.feasible:
        return "infeasible"
    if rec.non_trivial:
        return "nontrivial"
    if rec.symmetric:
        return "symmetric"
    if rec.fewer_bits:
        return "fewer_bits"
    return "dj_computable"


def reproduce_tables(n: int, workers: int = 1) -> TableReport:
    """Re-derive the bundled catalog at arity 3 or 4 against a full run.

    Every row's claimed weights are re-verified exactly; every row's
    classification is re-derived from scratch; maximal supports the
    catalog does not mention are surfaced by orbit; and the claimed
    non-trivial count is compared with the derived one, with all
    disagreements itemized in `discrepancies`.
    """
    if n not in (3, 4):
        raise ArityTooLargeError("catalog reproduction is defined for n in {3, 4}")
    rows = catalog.rows_for(n)
    records = classify_all(n, workers=workers)
    by_support = {r.support: r for r in records}

    checks: list[RowCheck] = []
    discrepancies: list[str] = []
    for row in rows:
        support = tuple(sorted(string_to_mask(s, n) for s in row.support))
        support_label = ",".join(mask_to_string(m, n) for m in support)
        rec = by_support[support]
        g = ReducedFn(n, support)
        claimed = row.weight_fractions()
        weights_valid: bool | None = None
        notes: list[str] = []
        if claimed is not None:
            weights_valid = verify_result(
                g, FeasibilityResult(True, witness=WeightVector(claimed))
            )
            if not weights_valid:
                notes.append(
                    "claimed weights do not solve the support equations; "
                    "engine witness: "
                    + "/".join(str(v) for v in (rec.witness.z if rec.witness else ()))
                )
                discrepancies.append(
                    f"row {support_label}: claimed weights "
                    f"({', '.join(map(str, claimed))}) are not a valid assignment"
                )
        derived = _derived_kind(rec)
        agree = rec.feasible and (weights_valid is not False)
        if row.kind == "symmetric":
            agree = agree and rec.symmetric
        elif row.kind == "fewer_bits":
            agree = agree and rec.fewer_bits
        elif row.kind == "included":
            parent = tuple(sorted(string_to_mask(s, n) for s in row.included_in))
            inside = set(support) < set(parent)
            parent_ok = by_support[parent].feasible
            agree = agree and inside and parent_ok
            if not inside:
                notes.append("claimed inclusion does not hold")
        elif row.kind == "nontrivial":
            agree = agree and rec.non_trivial
            if rec.feasible and rec.fewer_bits:
                zero_bit = rec.removable_bits[0]
                probe = decide_with_fixed_zeros(g, {zero_bit})
                notes.append(
                    f"claimed non-trivial, but query weight of bit(s) "
                    f"{','.join(map(str, rec.removable_bits))} can be zero, e.g. "
                    f"z = ({', '.join(str(v) for v in probe.witness.z)})"
                )
                discrepancies.append(
                    f"row {support_label}: claimed non-trivial but bit(s) "
                    f"{','.join(map(str, rec.removable_bits))} are removable"
                )
        checks.append(
            RowCheck(
                support=tuple(mask_to_string(m, n) for m in support),
                expected_kind=row.kind,
                claimed_weights=claimed,
                family=row.family,
                included_in=row.included_in,
                weights_valid=weights_valid,
                feasible=rec.feasible,
                witness=rec.witness.z if rec.witness else None,
                symmetric=rec.symmetric,
                removable_bits=rec.removable_bits,
                dj_computable=rec.dj_computable,
                derived_kind=derived,
                agree=agree,
                notes=tuple(notes),
            )
        )

    feasible_records = sum(1 for r in records if r.feasible)
    maximal = [r.support for r in records if r.maximal]
    listed = {tuple(sorted(string_to_mask(s, n) for s in row.support)) for row in rows}
    unlisted_orbits = []
    for canon, members in sorted(group_orbits(maximal, n).items()):
        if not any(m in listed for m in members):
            unlisted_orbits.append(canon)
            discrepancies.append(
                "maximal support orbit not in catalog: "
                + ",".join(mask_to_string(m, n) for m in canon)
                + " (trivial: "
                + _derived_kind(by_support[canon])
                + ")"
            )

    derived_nontrivial = nontrivial_catalog(n)
    nt_supports = [r.support for r in derived_nontrivial]
    nt_orbits = group_orbits(nt_supports, n)
    claimed_nt = [
        tuple(sorted(string_to_mask(s, n) for s in row.support))
        for row in rows
        if row.kind == "nontrivial"
    ]
    count_matches = len(nt_supports) == len(claimed_nt)
    if not count_matches:
        discrepancies.append(
            f"derived {len(nt_supports)} non-trivial maximal supports "
            f"({len(nt_orbits)} orbit(s)) vs {len(claimed_nt)} claimed"
        )

    return TableReport(
        n=n,
        rows=tuple(checks),
        total_records=len(records),
        feasible_records=feasible_records,
        maximal_supports=tuple(
            tuple(mask_to_string(m, n) for m in s) for s in sorted(maximal)
        ),
        unlisted_maximal_orbits=tuple(
            tuple(mask_to_string(m, n) for m in s) for s in unlisted_orbits
        ),
        nontrivial_supports=tuple(
            tuple(mask_to_string(m, n) for m in s) for s in nt_supports
        ),
        nontrivial_orbit_count=len(nt_orbits),
        claimed_nontrivial_supports=tuple(
            tuple(mask_to_string(m, n) for m in s) for s in sorted(claimed_nt)
        ),
        claimed_nontrivial_count=len(claimed_nt),
        derived_nontrivial_count=len(nt_supports),
        count_matches_claim=count_matches,
        discrepancies=tuple(discrepancies),
    )
