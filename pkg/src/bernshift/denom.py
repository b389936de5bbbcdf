"""Denominator structure of the rank/shift Bernoulli numbers.

For each prime p, the binomial sum psi(r, s, p) collects C(r, v) over the
indices where B_{s+v} picks up a 1/p from von Staudt-Clausen, i.e. where
s + v is a positive even multiple of p - 1.  These sums control denom(B[r,s])
completely: adding sum(psi/p) restores integrality, p divides the denominator
exactly when p does not divide psi, and reducing the residues of r and s
mod p - 1 turns that test into a closed product formula.  All three routes to
the denominator are implemented and cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .bernoulli import BernoulliCache, bernoulli_denominator
from .errors import InvariantViolation
from .exact_arith import binomial, is_prime, least_positive_residue, primes_up_to
from .umbral import bs_direct


@dataclass(frozen=True)
class PsiValue:
    """psi(r, s, p) together with the index set that produced it.

    index_set holds the v with 0 <= v <= r for which s + v is a positive even
    multiple of p - 1; value = sum(C(r, v)) over that set.
    """

    r: int
    s: int
    p: int
    value: int
    index_set: tuple[int, ...]


def psi(r: int, s: int, p: int) -> PsiValue:
    """Sum of C(r, v) over 0 <= v <= r with s + v a positive even multiple of p-1.

    Empty index set gives 0; in particular psi(r, s, p) = 0 for p > r + s + 1,
    since the smallest admissible s + v already exceeds s + r then.
    """
    if r < 0 or s < 0:
        raise ValueError("rank and shift must be non-negative")
    if not is_prime(p):
        raise ValueError(f"psi: {p} is not prime")
    # admissible totals t = s + v are the positive multiples of lcm(2, p - 1)
    step = p - 1 if (p - 1) % 2 == 0 else 2 * (p - 1)
    first = max(s, 1)
    t = ((first + step - 1) // step) * step
    indices = []
    value = 0
    while t <= s + r:
        v = t - s
        indices.append(v)
        value += binomial(r, v)
        t += step
    return PsiValue(r=r, s=s, p=p, value=value, index_set=tuple(indices))


def integrality_witness(cache: BernoulliCache, r: int, s: int) -> int:
    """The integer B[r,s] + sum(psi(r, s, p) / p over primes p <= r + s + 1).

    The sum over all primes is finite because psi vanishes for p > r + s + 1;
    the p = 2 term is itself an integer for r >= 2 and is included.  A
    non-integral total raises InvariantViolation and must never happen.
    """
    if r < 2 or s < 2:
        raise ValueError("integrality_witness: requires r >= 2 and s >= 2")
    total = bs_direct(cache, r, s)
    for p in primes_up_to(r + s + 1):
        total += Fraction(psi(r, s, p).value, p)
    if total.denominator != 1:
        raise InvariantViolation(
            f"B[{r},{s}] + sum(psi/p) = {total} is not an integer"
        )
    return int(total)


def denom_exact(cache: BernoulliCache, r: int, s: int) -> int:
    """denom(B[r,s]) read off the exact value."""
    return bs_direct(cache, r, s).denominator


def denom_via_psi(r: int, s: int) -> int:
    """denom(B[r,s]) as the product of primes 3 <= p <= r+s+1 with p not dividing psi.

    Stated (and implemented) for r, s >= 2 only; the r or s <= 1 borders are
    covered by denom_formula.
    """
    if r < 2 or s < 2:
        raise ValueError("denom_via_psi: requires r >= 2 and s >= 2")
    value = 1
    for p in primes_up_to(r + s + 1):
        if p >= 3 and psi(r, s, p).value % p != 0:
            value *= p
    return value


@dataclass(frozen=True)
class DenomFactorization:
    """Squarefree factorization 2^eps2 * product(primes) of denom(B[r,s])."""

    eps2: int
    primes: tuple[int, ...]
    value: int = field(default=0)

    def __post_init__(self) -> None:
        if self.eps2 not in (0, 1):
            raise ValueError("eps2 must be 0 or 1")
        if any(p < 3 or not is_prime(p) for p in self.primes):
            raise ValueError("primes must all be odd primes")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")
        expected = 2**self.eps2 * prod(self.primes)
        if self.value == 0:
            object.__setattr__(self, "value", expected)
        elif self.value != expected:
            raise ValueError(f"value {self.value} != 2^{self.eps2} * product = {expected}")


def _bernoulli_denominator_factorization(n: int) -> DenomFactorization:
    if n == 0 or (n % 2 and n >= 3):
        return DenomFactorization(eps2=0, primes=())
    if n == 1:
        return DenomFactorization(eps2=1, primes=())
    odd = tuple(p for p in primes_up_to(n + 1) if p >= 3 and n % (p - 1) == 0)
    return DenomFactorization(eps2=1, primes=odd)


def denom_formula(r: int, s: int) -> DenomFactorization:
    """Closed product formula for denom(B[r,s]).

    For r, s >= 1: 2^eps2 * 3 * product of primes 5 <= p <= r+s+1 whose
    least positive residues satisfy <r>_{p-1} + <s>_{p-1} >= p - 1, where
    eps2 = 1 exactly when r = 1 or s = 1 with r != s.  For r = 0 or s = 0
    this is the classical Bernoulli denominator of B_{max(r,s)}.
    """
    if r < 0 or s < 0:
        raise ValueError("rank and shift must be non-negative")
    if r == 0 or s == 0:
        return _bernoulli_denominator_factorization(max(r, s))
    eps2 = 1 if (r == 1 or s == 1) and r != s else 0
    odd = [3]
    for p in primes_up_to(r + s + 1):
        if p >= 5 and least_positive_residue(r, p - 1) + least_positive_residue(s, p - 1) >= p - 1:
            odd.append(p)
    return DenomFactorization(eps2=eps2, primes=tuple(odd))


def psi_reciprocity_check(r: int, s: int, p: int) -> bool:
    """Whether (-1)^r psi(r,s,p) == (-1)^s psi(s,r,p) mod p.

    Contract: true for r, s >= 2 with any prime p, and for r, s >= 1 with
    odd p.  At p = 2 the extension down to rank or shift 1 genuinely fails
    (e.g. r = 1, s = 2 gives 1 vs 2 mod 2), matching the odd-p hypothesis
    under which the extension is stated.
    """
    if r < 1 or s < 1:
        raise ValueError("psi_reciprocity_check: requires r >= 1 and s >= 1")
    lhs = psi(r, s, p).value if r % 2 == 0 else -psi(r, s, p).value
    rhs = psi(s, r, p).value if s % 2 == 0 else -psi(s, r, p).value
    return (lhs - rhs) % p == 0


def psi_periodicity_check(r: int, r2: int, s: int, s2: int, p: int) -> bool:
    """Periodicity of psi in both indices mod p - 1.

    Requires r == r2 and s == s2 mod p - 1 (with r, r2 >= 1, s, s2 >= 0,
    p >= 3 prime).  Checks that shifting s to s2 preserves the value exactly
    (at both ranks) and that shifting the rank preserves it mod p.
    """
    if r < 1 or r2 < 1:
        raise ValueError("psi_periodicity_check: ranks must be >= 1")
    if s < 0 or s2 < 0:
        raise ValueError("psi_periodicity_check: shifts must be >= 0")
    if p < 3 or not is_prime(p):
        raise ValueError(f"psi_periodicity_check: {p} is not an odd prime")
    if (r - r2) % (p - 1) or (s - s2) % (p - 1):
        raise ValueError("psi_periodicity_check: indices must be congruent mod p - 1")
    v_rs, v_rs2 = psi(r, s, p).value, psi(r, s2, p).value
    v_r2s, v_r2s2 = psi(r2, s, p).value, psi(r2, s2, p).value
    return v_rs == v_rs2 and v_r2s == v_r2s2 and (v_rs - v_r2s) % p == 0


def psi_matrix(p: int) -> tuple[tuple[int, ...], ...]:
    """The grid psi(r, s, p) for 1 <= r, s <= p - 2, with its structure verified.

    Entries are 0 strictly above the anti-diagonal (r + s < p - 1), exactly 1
    on it, and equal to C(r, p-1-s), nonzero mod p, below it.  Any violation
    raises InvariantViolation; the grid is returned row-major, grid[r-1][s-1].
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"psi_matrix: requires a prime p >= 5, got {p}")
    rows = []
    for r in range(1, p - 1):
        row = []
        for s in range(1, p - 1):
            value = psi(r, s, p).value
            if r + s < p - 1:
                if value != 0:
                    raise InvariantViolation(
                        f"psi matrix p={p}: entry ({r},{s}) above anti-diagonal is {value}, not 0"
                    )
            elif r + s == p - 1:
                if value != 1:
                    raise InvariantViolation(
                        f"psi matrix p={p}: entry ({r},{s}) on anti-diagonal is {value}, not 1"
                    )
            else:
                expected = binomial(r, p - 1 - s)
                if value != expected or value % p == 0:
                    raise InvariantViolation(
                        f"psi matrix p={p}: entry ({r},{s}) is {value}, "
                        f"expected C({r},{p - 1 - s}) = {expected} nonzero mod {p}"
                    )
            row.append(value)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class DivisibilityReport:
    """Per-part pass counts and failure witnesses for the denominator sweep."""

    max_r: int
    max_s: int
    part_counts: dict[str, int]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def instances(self) -> int:
        return sum(self.part_counts.values())


def denominator_property_sweep(cache: BernoulliCache, max_r: int, max_s: int) -> DivisibilityReport:
    """Check the structural properties of denom(B[r,s]) over a rectangle.

    Covers: symmetry in (r, s); the r = 0 row equal to the classical
    denominators; the closed form of the r = 1 row; oddness for r, s >= 2;
    divisibility by 3 for r, s >= 1; the forced prime divisors p - 1 | r for
    even ranks; squarefreeness with all prime factors <= r + s + 1; and the
    exact list of keys where the denominator is 1.
    """
    if max_r + max_s > cache.capacity:
        raise ValueError("sweep exceeds cache capacity")
    denoms = {
        (r, s): denom_exact(cache, r, s)
        for r in range(max_r + 1)
        for s in range(max_s + 1)
    }
    counts = {
        "symmetry": 0,
        "row0-classical": 0,
        "row1-closed-form": 0,
        "odd-for-rank2+": 0,
        "three-divides": 0,
        "even-rank-forced-primes": 0,
        "squarefree-bounded": 0,
        "unit-exceptions": 0,
    }
    failures: list[str] = []

    def check(part: str, ok: bool, witness: str) -> None:
        counts[part] += 1
        if not ok:
            failures.append(f"{part} at {witness}")

    bound = min(max_r, max_s)
    for (r, s), d in sorted(denoms.items()):
        if r <= bound and s <= bound:
            check("symmetry", d == denoms[(s, r)], f"(r={r}, s={s}): {d} != {denoms[(s, r)]}")
        if r == 0:
            check("row0-classical", d == bernoulli_denominator(s), f"(0, s={s}): {d}")
        if r == 1:
            if s == 0:
                expected = 2
            elif s == 1:
                expected = 3
            elif s % 2 == 0:
                expected = bernoulli_denominator(s)
            else:
                expected = bernoulli_denominator(s + 1)
            check("row1-closed-form", d == expected, f"(1, s={s}): {d} != {expected}")
        if r >= 2 and s >= 2:
            check("odd-for-rank2+", d % 2 == 1, f"(r={r}, s={s}): {d} is even")
        if r >= 1 and s >= 1:
            check("three-divides", d % 3 == 0, f"(r={r}, s={s}): 3 does not divide {d}")
        if r >= 2 and r % 2 == 0:
            forced = [p for p in primes_up_to(r + 1) if p >= 3 and r % (p - 1) == 0]
            ok = all(d % p == 0 for p in forced)
            check("even-rank-forced-primes", ok, f"(r={r}, s={s}): {d} misses one of {forced}")
        rest = d
        square_ok = True
        for p in primes_up_to(r + s + 1):
            if rest % p == 0:
                rest //= p
                if rest % p == 0:
                    square_ok = False
        check(
            "squarefree-bounded",
            square_ok and rest == 1,
            f"(r={r}, s={s}): {d} has a square factor or a prime factor > {r + s + 1}",
        )
        unit_expected = (r, s) == (0, 0) or (s == 0 and r % 2 and r >= 3) or (r == 0 and s % 2 and s >= 3)
        check(
            "unit-exceptions",
            (d == 1) == unit_expected,
            f"(r={r}, s={s}): denominator {d} vs expected-unit={unit_expected}",
        )
    return DivisibilityReport(
        max_r=max_r, max_s=max_s, part_counts=counts, failures=tuple(failures)
    )
