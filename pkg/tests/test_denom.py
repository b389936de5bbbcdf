from fractions import Fraction

import pytest

from bernshift.bernoulli import bernoulli_denominator
from bernshift.denom import (
    DenomFactorization,
    denom_exact,
    denom_formula,
    denom_via_psi,
    denominator_property_sweep,
    integrality_witness,
    psi,
    psi_matrix,
    psi_periodicity_check,
    psi_reciprocity_check,
)
from bernshift.errors import InvariantViolation
from bernshift.exact_arith import binomial, least_positive_residue, primes_up_to


class TestPsi:
    def test_examples(self):
        assert psi(2, 2, 7).value == 0
        assert psi(2, 2, 2).value == 2
        assert psi(2, 2, 5).value == 1
        assert psi(3, 3, 5).value == 3

    def test_index_sets(self):
        assert psi(2, 2, 5).index_set == (2,)
        assert psi(3, 3, 5).index_set == (1,)
        assert psi(2, 2, 7).index_set == ()

    def test_index_set_characterization(self):
        for r in range(13):
            for s in range(13):
                for p in primes_up_to(r + s + 4):
                    result = psi(r, s, p)
                    members = set(result.index_set)
                    expected_value = 0
                    for v in range(r + 1):
                        t = s + v
                        admissible = t > 0 and t % 2 == 0 and t % (p - 1) == 0
                        assert (v in members) == admissible
                        if admissible:
                            expected_value += binomial(r, v)
                    assert result.value == expected_value

    def test_vanishes_beyond_support(self):
        big_primes = primes_up_to(250)
        for r in range(31):
            for s in range(31):
                checked = 0
                for p in big_primes:
                    if p > r + s + 1:
                        assert psi(r, s, p).value == 0
                        checked += 1
                        if checked == 10:
                            break

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            psi(2, 2, 4)
        with pytest.raises(ValueError):
            psi(-1, 0, 5)

    def test_two_and_three_collapse_to_power(self):
        for r in range(2, 21):
            for s in range(2, 21):
                two, three = psi(r, s, 2).value, psi(r, s, 3).value
                assert two == three == 2 ** (r - 1)
                assert two % 2 == 0
                assert three % 3 != 0

    def test_divisibility_for_aligned_residues(self):
        for r in range(2, 31):
            for s in range(2, 31):
                for p in primes_up_to(r + s + 1):
                    if p >= 5 and (r % (p - 1) == 0 or s % (p - 1) == 0):
                        assert psi(r, s, p).value % p != 0

    def test_residue_criterion(self):
        # p divides psi(r,s,p) exactly when <r>_{p-1} + <s>_{p-1} < p - 1
        for p in primes_up_to(37):
            if p < 5:
                continue
            for r in range(1, 81):
                for s in range(1, 81):
                    doesnt_divide = psi(r, s, p).value % p != 0
                    residues = least_positive_residue(r, p - 1) + least_positive_residue(s, p - 1)
                    assert doesnt_divide == (residues >= p - 1)


class TestIntegralityWitness:
    def test_examples(self, cache):
        assert integrality_witness(cache, 2, 2) == 2
        assert integrality_witness(cache, 2, 3) == 2
        assert isinstance(integrality_witness(cache, 8, 8), int)

    def test_matches_hand_sum(self, cache):
        # 2/15 + psi(2)/2 + psi(3)/3 + psi(5)/5 = 2/15 + 1 + 2/3 + 1/5 = 2
        total = Fraction(2, 15) + 1 + Fraction(2, 3) + Fraction(1, 5)
        assert integrality_witness(cache, 2, 2) == total == 2

    def test_rejects_small_indices(self, cache):
        with pytest.raises(ValueError):
            integrality_witness(cache, 1, 5)
        with pytest.raises(ValueError):
            integrality_witness(cache, 5, 1)


class TestDenominators:
    def test_exact_examples(self, cache):
        assert denom_exact(cache, 2, 2) == 15
        assert denom_exact(cache, 3, 0) == 1
        assert denom_exact(cache, 8, 8) == 36465

    def test_via_psi_examples(self):
        assert denom_via_psi(2, 2) == 15
        assert denom_via_psi(3, 3) == 105
        assert denom_via_psi(2, 5) == 21

    def test_via_psi_rejects_borders(self):
        with pytest.raises(ValueError):
            denom_via_psi(1, 5)
        with pytest.raises(ValueError):
            denom_via_psi(5, 0)

    def test_formula_examples(self):
        assert denom_formula(1, 1).value == 3
        assert denom_formula(1, 1).eps2 == 0
        assert denom_formula(1, 2).value == 6
        assert denom_formula(1, 2).eps2 == 1
        assert denom_formula(8, 8).value == 36465
        assert denom_formula(8, 8).primes == (3, 5, 11, 13, 17)
        assert denom_formula(0, 7).value == 1
        assert denom_formula(1, 3).value == 30 == bernoulli_denominator(4)
        assert denom_formula(0, 12).value == 2730

    def test_formula_symmetric(self):
        for r in range(21):
            for s in range(21):
                assert denom_formula(r, s).value == denom_formula(s, r).value

    def test_three_routes_agree(self, cache):
        for r in range(25):
            for s in range(25):
                exact = denom_exact(cache, r, s)
                assert denom_formula(r, s).value == exact
                if r >= 2 and s >= 2:
                    assert denom_via_psi(r, s) == exact

    def test_factorization_validation(self):
        fact = DenomFactorization(eps2=1, primes=(3, 5))
        assert fact.value == 30
        assert DenomFactorization(eps2=0, primes=(), value=1).value == 1
        with pytest.raises(ValueError):
            DenomFactorization(eps2=2, primes=())
        with pytest.raises(ValueError):
            DenomFactorization(eps2=0, primes=(4,))
        with pytest.raises(ValueError):
            DenomFactorization(eps2=0, primes=(5, 3))
        with pytest.raises(ValueError):
            DenomFactorization(eps2=0, primes=(3,), value=6)

    def test_formula_structure(self):
        for r in range(1, 31):
            for s in range(1, 31):
                fact = denom_formula(r, s)
                assert 3 in fact.primes
                assert all(p <= r + s + 1 for p in fact.primes)
                assert fact.eps2 == (1 if (r == 1 or s == 1) and r != s else 0)


class TestPsiCongruences:
    def test_reciprocity_examples(self):
        assert psi_reciprocity_check(2, 2, 5)
        assert psi_reciprocity_check(3, 4, 5)
        assert psi_reciprocity_check(1, 6, 7)

    def test_reciprocity_sweep(self):
        # extension to rank/shift 1 holds for odd p; p = 2 needs r, s >= 2
        for p in primes_up_to(19):
            start = 2 if p == 2 else 1
            for r in range(start, 31):
                for s in range(start, 31):
                    assert psi_reciprocity_check(r, s, p)

    def test_reciprocity_boundary_at_two(self):
        assert not psi_reciprocity_check(1, 2, 2)
        assert psi_reciprocity_check(1, 1, 2)

    def test_reciprocity_rejects_zero_index(self):
        with pytest.raises(ValueError):
            psi_reciprocity_check(0, 3, 5)

    def test_periodicity_examples(self):
        assert psi_periodicity_check(2, 2, 1, 5, 5)
        assert psi_periodicity_check(2, 6, 3, 3, 5)
        assert psi_periodicity_check(1, 5, 2, 2, 5)

    def test_periodicity_sweep(self):
        for p in (3, 5, 7, 11):
            for r in range(1, 16):
                for s in range(1, 16):
                    assert psi_periodicity_check(r, r + (p - 1), s, s + 2 * (p - 1), p)

    def test_periodicity_rejects_bad_preconditions(self):
        with pytest.raises(ValueError):
            psi_periodicity_check(2, 3, 1, 1, 5)  # ranks not congruent mod 4
        with pytest.raises(ValueError):
            psi_periodicity_check(2, 2, 1, 2, 5)  # shifts not congruent mod 4
        with pytest.raises(ValueError):
            psi_periodicity_check(0, 4, 1, 1, 5)  # rank must be >= 1
        with pytest.raises(ValueError):
            psi_periodicity_check(2, 2, 1, 1, 2)  # p must be an odd prime


class TestPsiMatrix:
    def test_p5_grid(self):
        assert psi_matrix(5) == ((0, 0, 1), (0, 1, 2), (1, 3, 3))

    def test_entry_examples(self):
        assert psi_matrix(5)[2][2] == 3 == binomial(3, 1)
        assert psi_matrix(7)[1][3] == 1  # (r,s) = (2,4), on the anti-diagonal

    def test_structure_holds_through_19(self):
        for p in (5, 7, 11, 13, 17, 19):
            grid = psi_matrix(p)
            assert len(grid) == p - 2
            for r in range(1, p - 1):
                for s in range(1, p - 1):
                    value = grid[r - 1][s - 1]
                    if r + s < p - 1:
                        assert value == 0
                    elif r + s == p - 1:
                        assert value == 1
                    else:
                        assert value == binomial(r, p - 1 - s)
                        assert value % p != 0

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            psi_matrix(4)
        with pytest.raises(ValueError):
            psi_matrix(3)


class TestDivisibilitySweep:
    def test_clean_at_desk_scale(self, cache):
        report = denominator_property_sweep(cache, 16, 16)
        assert report.ok
        assert report.failures == ()
        assert report.instances == sum(report.part_counts.values())
        assert set(report.part_counts) == {
            "symmetry",
            "row0-classical",
            "row1-closed-form",
            "odd-for-rank2+",
            "three-divides",
            "even-rank-forced-primes",
            "squarefree-bounded",
            "unit-exceptions",
        }
        assert all(count > 0 for count in report.part_counts.values())

    def test_rejects_overflow(self):
        from bernshift.bernoulli import BernoulliCache

        with pytest.raises(ValueError):
            denominator_property_sweep(BernoulliCache(3), 2, 2)


def test_integrality_violation_reports_witness(cache, monkeypatch):
    import bernshift.denom as denom

    monkeypatch.setattr(denom, "bs_direct", lambda c, r, s: Fraction(1, 7919))
    with pytest.raises(InvariantViolation):
        integrality_witness(cache, 2, 2)
