import json
from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordkit import K2_RECURRENCE, K3_RECURRENCE, DomainError, RecurrenceSpec, check_recurrence, count_dp
from chordkit.recurrence import (
    fit_recurrence,
    min_terms,
    nullspace,
    read_sequence_csv,
    search_recurrence,
    write_sequence_csv,
)
from chordkit.counting import row_sequence

ROW2 = [count_dp(n, 2) for n in range(1, 21)]
ROW3 = [count_dp(n, 3) for n in range(1, 21)]
DOUBLE_FACT = [prod(range(1, 2 * n, 2)) for n in range(1, 13)]


class TestCheck:
    def test_k2_from_n1(self):
        assert ROW2[:6] == [0, 1, 5, 36, 329, 3655]
        rep = check_recurrence(K2_RECURRENCE, ROW2, 1)
        assert rep.passed
        assert dict(rep.residuals)[4] == 0  # 36 = 7*5 + 1

    def test_k3_from_n1(self):
        assert ROW3[:7] == [0, 0, 1, 10, 99, 1146, 15422]
        rep = check_recurrence(K3_RECURRENCE, ROW3, 1)
        assert rep.passed
        assert 1146 == 14 * 99 - 26 * 10 + 20 * 1 - 4 * 0 - 0

    def test_constant(self):
        spec = RecurrenceSpec.from_polys([[1]])
        assert check_recurrence(spec, [1, 1, 1, 1], 0).passed

    def test_failure_reports_residual(self):
        seq = list(ROW2)
        seq[10] += 1
        rep = check_recurrence(K2_RECURRENCE, seq, 1)
        assert not rep.passed
        assert [n for n, _ in rep.failures()] == [11, 12, 13]

    def test_too_short(self):
        with pytest.raises(DomainError):
            check_recurrence(K3_RECURRENCE, [1, 2, 3], 1)

    @given(
        st.fractions(min_value=-50, max_value=50, max_denominator=20).filter(lambda f: f != 0),
        st.integers(0, 14),
    )
    def test_scaling_does_not_change_verdict(self, factor, bump):
        seq = list(ROW3)
        for spec in (K2_RECURRENCE, K3_RECURRENCE):
            base = check_recurrence(spec, seq, 1).passed
            assert check_recurrence(spec.scaled(factor), seq, 1).passed == base
        seq[5 + bump] += 1
        assert not check_recurrence(K3_RECURRENCE.scaled(factor), seq, 1).passed


class TestFit:
    def test_recovers_k2(self):
        res = fit_recurrence(row_sequence(2, 20), 2, 2, 1)
        assert res.found
        assert res.spec == K2_RECURRENCE

    def test_recovers_k3(self):
        res = fit_recurrence(row_sequence(3, 25), 3, 5, 1)
        assert res.found
        assert res.spec == K3_RECURRENCE

    def test_double_factorial(self):
        res = fit_recurrence(DOUBLE_FACT, 1, 1, 1)
        assert res.spec == RecurrenceSpec.from_polys([[-1, 2]])

    @pytest.mark.parametrize("length", range(6, 13))
    def test_double_factorial_windows(self, length):
        for start in range(0, 12 - length + 1):
            window = DOUBLE_FACT[start:start + length]
            res = fit_recurrence(window, start + 1, 1, 1)
            assert res.found, (start, length)
            assert check_recurrence(res.spec, window, start + 1).passed

    def test_double_factorial_five_terms(self):
        res = fit_recurrence(DOUBLE_FACT[3:8], 4, 1, 1, validation=2)
        assert res.found

    def test_free_leading(self):
        # n a(n) = a(n-1) + a(n-2) needs a leading coefficient depending on n
        seq = [Fraction(1), Fraction(1)]
        for n in range(3, 20):
            seq.append((seq[-1] + seq[-2]) / n)
        seq = [int(x * factorial(19)) for x in seq]
        assert fit_recurrence(seq, 1, 2, 1).status == "none"
        res = fit_recurrence(seq, 1, 2, 1, monic=False)
        assert res.found
        assert res.spec == RecurrenceSpec.from_polys([[1], [1]], leading=[0, 1])

    def test_free_leading_recovers_k3(self):
        res = fit_recurrence(row_sequence(3, 25), 3, 5, 1, monic=False)
        assert res.spec == K3_RECURRENCE

    def test_fitted_spec_checks_on_whole_range(self):
        seq = row_sequence(3, 30)
        res = fit_recurrence(seq, 3, 5, 1)
        assert check_recurrence(res.spec, seq, 3).passed

    def test_underdetermined(self):
        # a constant sequence satisfies many order-2, degree-1 recurrences
        res = fit_recurrence([7] * 12, 1, 2, 1)
        assert res.status == "underdetermined"
        assert res.nullity > 1

    def test_none(self):
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        assert fit_recurrence(primes, 1, 1, 1).status == "none"

    def test_too_short(self):
        with pytest.raises(DomainError):
            fit_recurrence(DOUBLE_FACT[:4], 1, 1, 1)
        assert min_terms(1, 1) == 6
        assert min_terms(1, 1, monic=False) == 7

    def test_normalization(self):
        spec = K3_RECURRENCE.scaled(Fraction(-3, 7)).normalized()
        assert spec == K3_RECURRENCE

    def test_search_prefers_small(self):
        res = search_recurrence(row_sequence(2, 20), 2, 4, 2)
        assert (res.order, res.degree) == (2, 1)
        assert res.spec == K2_RECURRENCE

    @settings(deadline=None, max_examples=5)
    @given(st.integers(-3, 3), st.integers(1, 4))
    def test_synthetic_recovery(self, c, start):
        # a(n) = (n + c) a(n-1) + a(n-2), generated independently of the fitter
        seq = [1, 1]
        for n in range(start + 2, start + 16):
            seq.append((n + c) * seq[-1] + seq[-2])
        res = fit_recurrence(seq, start, 2, 1)
        assert res.found
        assert res.spec == RecurrenceSpec.from_polys([[c, 1], [1]])


def test_row_k4_exploration():
    # no recurrence is asserted to exist; whatever is returned must validate
    seq = row_sequence(4, 30)
    res = search_recurrence(seq, 4, 8, 2)
    if res is not None:
        assert check_recurrence(res.spec, seq, 4).passed


def test_nullspace_small():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_json_round_trip():
    data = json.loads(K3_RECURRENCE.to_json())
    assert data["order"] == 5 and data["degree"] == 1
    assert data["coeffs"][1] == ["10/1", "-6/1"]
    assert RecurrenceSpec.from_json(K3_RECURRENCE.to_json()) == K3_RECURRENCE


def test_json_without_leading():
    spec = RecurrenceSpec.from_json('{"order": 2, "degree": 1, "coeffs": [["-1/1", "2/1"], ["1/1", "0/1"]]}')
    assert spec == K2_RECURRENCE


def test_bad_json():
    with pytest.raises(DomainError):
        RecurrenceSpec.from_json('{"order": 2}')


def test_sequence_csv_round_trip():
    text = write_sequence_csv(ROW2, 1)
    assert read_sequence_csv(text) == (1, ROW2)
