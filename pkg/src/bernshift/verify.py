"""Exhaustive property sweeps over index rectangles, reported pass/fail.

Each property is swept over an explicit range and every failing instance is
recorded with its witness key, so a report either certifies the range or
names a counterexample.  Sweeps are pure; the parallel path partitions rows
across worker processes and merges, with results independent of the split.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, NamedTuple, Optional, Sequence

from .bernoulli import (
    BernoulliCache,
    bernoulli_denominator,
    bernoulli_number,
    bernoulli_polynomial,
    hermite_stern_check,
    von_staudt_clausen_witness,
)
from .denom import (
    denom_exact,
    denom_formula,
    denom_via_psi,
    denominator_property_sweep,
    integrality_witness,
    psi,
    psi_matrix,
)
from .errors import InvariantViolation
from .exact_arith import primes_up_to
from .umbral import (
    antidiagonal_sum,
    bs_direct,
    bs_polynomial,
    bs_table_recursive,
    bs_via_difference,
)

SweepResult = tuple[int, list[str], list[str]]  # instances, failures, notes
Rows = Optional[Sequence[int]]


@dataclass(frozen=True)
class VerifyReport:
    property_name: str
    max_r: int
    max_s: int
    instances: int
    failures: tuple[str, ...]
    notes: tuple[str, ...]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _rows(rows: Rows, max_r: int, start: int = 0) -> Sequence[int]:
    if rows is None:
        return range(start, max_r + 1)
    return [r for r in rows if r >= start]


def _sweep_reciprocity(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures = 0, []
    for r in _rows(rows, max_r):
        for s in range(max_s + 1):
            instances += 1
            a = bs_direct(cache, r, s)
            b = bs_direct(cache, s, r)
            if (a if r % 2 == 0 else -a) != (b if s % 2 == 0 else -b):
                failures.append(f"(r={r}, s={s}): {a} vs {b}")
    return instances, failures, []


def _sweep_antidiagonal(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures = 0, []
    for n in range(max_r + max_s + 1):
        instances += 1
        total = antidiagonal_sum(cache, n)
        expected = 1 if n == 0 else 0
        if total != expected:
            failures.append(f"n={n}: sum is {total}, expected {expected}")
    return instances, failures, []


def _sweep_paths(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    bound = max(max_r, max_s)
    cache = BernoulliCache(max_r + max_s + 2)
    table = bs_table_recursive(cache, max_r, max_s)
    instances, failures = 0, []
    for r in _rows(rows, max_r):
        for s in range(min(max_s, bound - r) + 1):
            instances += 1
            direct = bs_direct(cache, r, s)
            try:
                diff = bs_via_difference(cache, r, s)
            except InvariantViolation as exc:
                failures.append(str(exc))
                continue
            if not (direct == table[r, s] == diff):
                failures.append(
                    f"(r={r}, s={s}): direct={direct}, table={table[r, s]}, difference={diff}"
                )
    return instances, failures, []


def _sweep_poly_reciprocity(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures = 0, []
    for r in _rows(rows, max_r):
        sign_r = 1 if r % 2 == 0 else -1
        for s in range(max_s + 1):
            instances += 1
            sign_s = 1 if s % 2 == 0 else -1
            lhs = sign_r * bs_polynomial(cache, r, s)
            rhs = sign_s * bs_polynomial(cache, s, r).compose_neg()
            if lhs != rhs:
                failures.append(f"(r={r}, s={s}): {lhs!r} != {rhs!r}")
    return instances, failures, []


def _sweep_nonvanishing(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures, notes = 0, [], []
    for r in _rows(rows, max_r):
        for s in range(max_s + 1):
            instances += 1
            value = bs_direct(cache, r, s)
            expected_zero = (s == 0 and r >= 3 and r % 2 == 1) or (
                r == 0 and s >= 3 and s % 2 == 1
            )
            if expected_zero:
                if value != 0:
                    failures.append(f"(r={r}, s={s}): expected 0, got {value}")
                else:
                    notes.append(f"zero at (r={r}, s={s})")
            elif value == 0:
                failures.append(f"(r={r}, s={s}): unexpected zero")
    return instances, failures, notes


def _sweep_denominators(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures = 0, []
    for r in _rows(rows, max_r):
        for s in range(max_s + 1):
            instances += 1
            exact = denom_exact(cache, r, s)
            formula = denom_formula(r, s)
            if formula.value != exact:
                failures.append(f"(r={r}, s={s}): formula {formula.value} != exact {exact}")
            if denom_formula(s, r).value != formula.value:
                failures.append(f"(r={r}, s={s}): formula not symmetric")
            if r >= 2 and s >= 2:
                via_psi = denom_via_psi(r, s)
                if via_psi != exact:
                    failures.append(f"(r={r}, s={s}): psi product {via_psi} != exact {exact}")
    return instances, failures, []


def _sweep_integrality(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    instances, failures = 0, []
    for r in _rows(rows, max_r, start=2):
        for s in range(2, max_s + 1):
            instances += 1
            try:
                integrality_witness(cache, r, s)
            except InvariantViolation as exc:
                failures.append(str(exc))
            psi2 = psi(r, s, 2).value
            psi3 = psi(r, s, 3).value
            if not (psi2 == psi3 == 2 ** (r - 1) and psi2 % 2 == 0 and psi3 % 3 != 0):
                failures.append(f"(r={r}, s={s}): psi(2)={psi2}, psi(3)={psi3}")
            for p in primes_up_to(r + s + 1):
                if p >= 5 and (r % (p - 1) == 0 or s % (p - 1) == 0):
                    if psi(r, s, p).value % p == 0:
                        failures.append(f"(r={r}, s={s}): p={p} divides psi")
    return instances, failures, []


def _sweep_psi_matrix(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    instances, failures = 0, []
    for p in primes_up_to(max(max_r, max_s)):
        if p < 5:
            continue
        instances += (p - 2) ** 2
        try:
            psi_matrix(p)
        except InvariantViolation as exc:
            failures.append(str(exc))
    return instances, failures, []


def _sweep_psi_congruences(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    bound = max(max_r, max_s)
    instances, failures = 0, []
    for p in primes_up_to(min(37, bound + 1)):
        if p < 3:
            continue
        vals = {
            (r, s): psi(r, s, p).value
            for r in range(1, bound + 1)
            for s in range(bound + 1)
        }
        for r in range(1, bound + 1):
            for s in range(1, bound + 1):
                # shift periodicity: exact equality within a residue class of s
                if s - (p - 1) >= 1:
                    instances += 1
                    if vals[(r, s)] != vals[(r, s - (p - 1))]:
                        failures.append(
                            f"p={p}: psi({r},{s}) = {vals[(r, s)]} != psi({r},{s - (p - 1)})"
                        )
                # reciprocity mod p, extended down to r, s >= 1
                if r <= s:
                    instances += 1
                    lhs = vals[(r, s)] if r % 2 == 0 else -vals[(r, s)]
                    rhs = vals[(s, r)] if s % 2 == 0 else -vals[(s, r)]
                    if (lhs - rhs) % p != 0:
                        failures.append(f"p={p}: reciprocity fails at (r={r}, s={s})")
        for s in range(bound + 1):
            # rank periodicity: congruence mod p within a residue class of r
            for r in range(p, bound + 1):
                instances += 1
                if (vals[(r, s)] - vals[(r - (p - 1), s)]) % p != 0:
                    failures.append(
                        f"p={p}: psi({r},{s}) !== psi({r - (p - 1)},{s}) mod {p}"
                    )
    return instances, failures, []


def _sweep_hermite_stern(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    instances, failures = 0, []
    for m in _rows(rows, max_r, start=1):
        for p in primes_up_to(max_s):
            instances += 1
            residue = hermite_stern_check(m, p)
            if residue != 0:
                failures.append(f"(m={m}, p={p}): residue {residue}")
    return instances, failures, []


def _sweep_staudt_clausen(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    bound = max(max_r, max_s)
    cache = BernoulliCache(bound + 2)
    instances, failures = 0, []
    for n in range(2, bound + 1, 2):
        instances += 1
        try:
            von_staudt_clausen_witness(cache, n)
        except InvariantViolation as exc:
            failures.append(str(exc))
    for n in range(bound + 1):
        instances += 1
        closed = bernoulli_denominator(n)
        exact = bernoulli_number(cache, n).denominator
        if closed != exact:
            failures.append(f"n={n}: closed form {closed} != exact {exact}")
    return instances, failures, []


def _sweep_denom_divisibility(max_r: int, max_s: int, rows: Rows) -> SweepResult:
    cache = BernoulliCache(max_r + max_s + 2)
    report = denominator_property_sweep(cache, max_r, max_s)
    notes = [f"{part}: {count} checks" for part, count in sorted(report.part_counts.items())]
    return report.instances, list(report.failures), notes


class PropertySpec(NamedTuple):
    runner: Callable[[int, int, Rows], SweepResult]
    parallel: bool
    default_r: int
    default_s: int
    description: str


PROPERTIES: dict[str, PropertySpec] = {
    "reciprocity": PropertySpec(
        _sweep_reciprocity, True, 80, 80, "sign-flipped symmetry of B[r,s] under swapping rank and shift"
    ),
    "antidiagonal": PropertySpec(
        _sweep_antidiagonal, False, 50, 50, "sum of B[r,s] over r+s = n vanishes for n >= 1"
    ),
    "paths": PropertySpec(
        _sweep_paths, True, 80, 80, "defining sum, recurrence table, and both difference forms agree"
    ),
    "poly-reciprocity": PropertySpec(
        _sweep_poly_reciprocity, True, 25, 25, "(-1)^r B[r,s](x) equals (-1)^s B[s,r](-x) coefficientwise"
    ),
    "nonvanishing": PropertySpec(
        _sweep_nonvanishing, True, 60, 60, "B[r,s] = 0 only at rank-0/shift-0 odd-index keys"
    ),
    "denominators": PropertySpec(
        _sweep_denominators, True, 80, 80, "exact, psi-product, and closed-formula denominators agree"
    ),
    "integrality": PropertySpec(
        _sweep_integrality, True, 80, 80, "B[r,s] + sum(psi/p) is an integer; psi divisibility holds"
    ),
    "psi-matrix": PropertySpec(
        _sweep_psi_matrix, False, 19, 19, "zero / one / binomial trichotomy of the psi grid per prime"
    ),
    "psi-congruences": PropertySpec(
        _sweep_psi_congruences, False, 60, 60, "psi periodicity in shift and rank, and its reciprocity mod p"
    ),
    "hermite-stern": PropertySpec(
        _sweep_hermite_stern, True, 200, 31, "binomial sums over multiples of p-1 vanish mod p"
    ),
    "staudt-clausen": PropertySpec(
        _sweep_staudt_clausen, False, 200, 200, "classical witness integrality and closed Bernoulli denominators"
    ),
    "denom-divisibility": PropertySpec(
        _sweep_denom_divisibility, False, 40, 40, "structural divisibility properties of denom(B[r,s])"
    ),
}


def _chunk_worker(name: str, max_r: int, max_s: int, rows: list[int]) -> SweepResult:
    return PROPERTIES[name].runner(max_r, max_s, rows)


def run_verify(name: str, max_r: int, max_s: int, jobs: int = 1) -> VerifyReport:
    """Run one property sweep, optionally splitting rows across processes."""
    spec = PROPERTIES[name]
    start = perf_counter()
    if jobs <= 1 or not spec.parallel:
        instances, failures, notes = spec.runner(max_r, max_s, None)
    else:
        chunks = [list(range(k, max_r + 1, jobs)) for k in range(jobs)]
        chunks = [c for c in chunks if c]
        instances, failures, notes = 0, [], []
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [pool.submit(_chunk_worker, name, max_r, max_s, c) for c in chunks]
            for future in futures:
                got_instances, got_failures, got_notes = future.result()
                instances += got_instances
                failures.extend(got_failures)
                notes.extend(got_notes)
    return VerifyReport(
        property_name=name,
        max_r=max_r,
        max_s=max_s,
        instances=instances,
        failures=tuple(sorted(failures)),
        notes=tuple(sorted(notes)),
        seconds=perf_counter() - start,
    )


def report_text(report: VerifyReport) -> str:
    status = "PASS" if report.ok else "FAIL"
    lines = [
        f"{report.property_name}: r <= {report.max_r}, s <= {report.max_s}: "
        f"{report.instances} instances, {len(report.failures)} failures, "
        f"{report.seconds:.2f}s: {status}"
    ]
    for note in report.notes:
        lines.append(f"  note: {note}")
    for failure in report.failures:
        lines.append(f"  FAIL {failure}")
    return "\n".join(lines) + "\n"


def report_payload(report: VerifyReport) -> dict:
    return {
        "property": report.property_name,
        "max_r": report.max_r,
        "max_s": report.max_s,
        "instances": report.instances,
        "failures": list(report.failures),
        "notes": list(report.notes),
        "wall_ms": int(report.seconds * 1000),
        "pass": report.ok,
    }
