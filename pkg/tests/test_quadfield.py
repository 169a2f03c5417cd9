import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from mpmath import iv, mpf

from beatty_games.quadfield import (
    BeattyPair,
    QuadraticNumber,
    Trichotomy,
    beatty_floor,
    beatty_membership,
    conjugate_beatty,
    delta2,
    fractional_part,
    rayleigh_verify,
    solve_unit_combination,
    trichotomy_class,
)

iv.prec = 400  # ~120 decimal digits; the interval floor below must be unambiguous

PHI = QuadraticNumber(1, 1, 2, 5)
A55 = QuadraticNumber(5, 1, 5, 5)  # (5+sqrt5)/5
A19 = QuadraticNumber(-3, 1, 1, 19)  # sqrt19 - 3


def interval_floor(x: QuadraticNumber, n: int) -> int:
    """Independent oracle: floor(n*x) via 120-digit interval arithmetic."""
    v = iv.mpf(n) * (iv.mpf(x.p) + iv.mpf(x.q) * iv.sqrt(iv.mpf(x.D))) / iv.mpf(x.r)
    import mpmath

    lo, hi = mpmath.floor(mpf(v.a)), mpmath.floor(mpf(v.b))
    assert lo == hi, "oracle interval too wide"
    return int(lo)


nonsquare = st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13, 17, 19, 21, 23, 29, 31, 47])
quads = st.builds(
    QuadraticNumber,
    st.integers(-40, 40),
    st.integers(-15, 15),
    st.integers(1, 20),
    nonsquare,
)


class TestArithmetic:
    def test_golden_reciprocal(self):
        x = QuadraticNumber(-1, 1, 2, 5)  # 1/phi
        assert x.inv() == PHI

    def test_symbolic_rationalization(self):
        # ((5+sqrt5)/5) / (sqrt5/5) == 1 + sqrt5, cross-checked by decimal oracle
        got = A55 / QuadraticNumber(0, 1, 5, 5)
        assert got == QuadraticNumber(1, 1, 1, 5)
        assert got.decimal(8) == "3.23606797"

    def test_cmp_equal_values(self):
        assert QuadraticNumber(2 - 1, 1, 2, 5) == PHI
        assert not PHI < PHI

    def test_normalization(self):
        assert QuadraticNumber(0, 1, 2, 8) == QuadraticNumber(0, 1, 1, 2)
        assert QuadraticNumber(2, 4, 6, 5) == QuadraticNumber(1, 2, 3, 5)
        x = QuadraticNumber(1, 1, -2, 5)
        assert (x.p, x.q, x.r) == (-1, -1, 2)

    def test_perfect_square_radicand_folds(self):
        assert QuadraticNumber(1, 2, 1, 9) == 7
        assert QuadraticNumber(1, 2, 1, 9).is_integer

    def test_mixed_radicand_rejected(self):
        with pytest.raises(ValueError, match="mismatched"):
            QuadraticNumber.sqrt(2) + QuadraticNumber.sqrt(3)

    def test_rational_lifts_across_fields(self):
        half = QuadraticNumber.rational(1, 2, D=3)
        assert PHI - half == QuadraticNumber(0, 1, 2, 5)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            PHI / QuadraticNumber.rational(0, 1, D=5)

    def test_int_operands(self):
        assert PHI + 1 == QuadraticNumber(3, 1, 2, 5)
        assert 1 < PHI < 2

    @given(quads, quads.filter(lambda x: x.D in (2, 5)))
    def test_add_sub_roundtrip(self, x, y):
        if x.D != y.D and x.q and y.q:
            return
        assert (x + y) - y == x

    @given(quads.filter(lambda x: x != 0))
    def test_mul_inv(self, x):
        assert x * x.inv() == 1

    @settings(deadline=None)
    @given(quads, st.integers(0, 500))
    def test_floor_matches_interval_oracle(self, x, n):
        assert beatty_floor(x, n) == interval_floor(x, n)

    @settings(deadline=None)
    @given(quads)
    def test_sign_matches_oracle(self, x):
        v = iv.mpf(x.p) + iv.mpf(x.q) * iv.sqrt(iv.mpf(x.D))
        if x.q and x.p:
            assert (x.sign() > 0) == (mpf(v.a) > 0) == (mpf(v.b) > 0)

    @given(quads, quads)
    def test_mul_div_roundtrip(self, x, y):
        if x.D != y.D and x.q and y.q:
            return
        if y == 0:
            return
        assert (x * y) / y == x

    def test_zero_is_falsy(self):
        assert not QuadraticNumber.rational(0, 1, D=5)
        assert PHI


class TestStringFormat:
    def test_round_trip(self):
        for text in ["(5+1*sqrt(5))/5", "(-3+1*sqrt(19))/1", "(1-2*sqrt(3))/7"]:
            x = QuadraticNumber.from_string(text)
            assert QuadraticNumber.from_string(str(x)) == x

    def test_canonical_output(self):
        assert str(QuadraticNumber(2, 2, 4, 5)) == "(1+1*sqrt(5))/2"

    def test_rejects_garbage(self):
        for text in ["phi", "(1+sqrt(5))/2", "1.618", "(1+1*sqrt(5)/2"]:
            with pytest.raises(ValueError):
                QuadraticNumber.from_string(text)


class TestBeattyFloor:
    def test_table_row_value(self):
        assert beatty_floor(A55, 9) == 13

    def test_matches_interval_oracle_to_ten_thousand(self):
        import mpmath

        for alpha in (A55, A19, PHI, QuadraticNumber.sqrt(2)):
            unit = iv.mpf(alpha.p) + iv.mpf(alpha.q) * iv.sqrt(iv.mpf(alpha.D))
            unit /= iv.mpf(alpha.r)
            for n in range(10_001):
                v = iv.mpf(n) * unit
                lo, hi = mpmath.floor(mpf(v.a)), mpmath.floor(mpf(v.b))
                assert lo == hi, "oracle interval too wide"
                assert beatty_floor(alpha, n) == int(lo)

    def test_zero_index(self):
        for alpha in (PHI, A55, A19):
            assert beatty_floor(alpha, 0) == 0

    def test_phi_times_four(self):
        # 4*phi = 6.472...
        assert beatty_floor(PHI, 4) == 6

    def test_negative_coefficient(self):
        x = QuadraticNumber(10, -2, 3, 5)  # (10 - 2 sqrt5)/3 = 1.8426...
        for n in range(50):
            assert beatty_floor(x, n) == interval_floor(x, n)


class TestConjugate:
    def test_a55(self):
        pair = conjugate_beatty(A55)
        assert pair.beta == QuadraticNumber(1, 1, 1, 5)
        assert pair.beta.decimal(4) == "3.2360"

    def test_sqrt19(self):
        assert conjugate_beatty(A19).beta == QuadraticNumber(7, 1, 3, 19)

    def test_phi(self):
        assert conjugate_beatty(PHI).beta == QuadraticNumber(3, 1, 2, 5)

    def test_rejects_rational(self):
        with pytest.raises(ValueError):
            conjugate_beatty(QuadraticNumber.rational(3, 2, D=5))

    def test_rejects_out_of_window(self):
        with pytest.raises(ValueError):
            conjugate_beatty(QuadraticNumber(1, 1, 1, 5))

    def test_pair_identity_enforced(self):
        with pytest.raises(ValueError):
            BeattyPair(PHI, QuadraticNumber(7, 1, 3, 19))


class TestFractionalPart:
    def test_beta19(self):
        assert fractional_part(QuadraticNumber(7, 1, 3, 19)) == QuadraticNumber(-2, 1, 3, 19)

    def test_integer_input(self):
        assert fractional_part(QuadraticNumber.rational(6, 3, D=5)) == 0

    def test_phi(self):
        assert fractional_part(PHI) == QuadraticNumber(-1, 1, 2, 5)

    @given(quads.filter(lambda x: x >= 0))
    def test_range(self, x):
        f = fractional_part(x)
        assert 0 <= f and f < 1


class TestMembership:
    def test_phi_plus_one(self):
        gamma = PHI + 1
        assert beatty_membership(gamma, 2)
        assert not beatty_membership(gamma, 1)

    def test_zero_always_member(self):
        assert beatty_membership(PHI + 1, 0)

    @given(st.integers(0, 300))
    def test_matches_direct_scan(self, n):
        gamma = fractional_part(A19).inv()  # 1/{alpha} = (sqrt19+4)/3
        seq = set()
        m = 0
        while True:
            v = beatty_floor(gamma, m)
            if v > n:
                break
            seq.add(v)
            m += 1
        assert beatty_membership(gamma, n) == (n in seq)


class TestDelta2:
    def test_sqrt19_values(self):
        assert delta2(A19, 2) == 3
        assert delta2(A19, 1) == 2

    def test_phi_constant(self):
        assert all(delta2(PHI, n) == 1 for n in range(1, 50))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            delta2(PHI, 0)

    def test_range_and_sign(self):
        for alpha in (PHI, A55, A19):
            bf = conjugate_beatty(alpha).beta.floor()
            for n in range(1, 400):
                d = delta2(alpha, n)
                assert d in (bf - 2, bf - 1, bf) and d >= 0


class TestTrichotomy:
    def test_sqrt19_plus(self):
        assert trichotomy_class(A19, 1) is Trichotomy.PLUS

    def test_zero_index(self):
        for alpha in (PHI, A55, A19):
            assert trichotomy_class(alpha, 0) is Trichotomy.ZERO

    def test_phi_always_zero(self):
        assert all(trichotomy_class(PHI, n) is Trichotomy.ZERO for n in range(60))

    def test_consistent_with_delta2(self):
        for alpha in (A55, A19, PHI):
            bf = conjugate_beatty(alpha).beta.floor()
            for n in range(200):
                d = trichotomy_class(alpha, n).value
                assert delta2(alpha, n + 1) == bf - 1 + d


class TestRayleigh:
    def test_a55_small(self):
        assert rayleigh_verify(conjugate_beatty(A55), 29)

    def test_zero_limit(self):
        assert rayleigh_verify(conjugate_beatty(PHI), 0)

    def test_broken_pair_rejected_at_type_level(self):
        with pytest.raises(ValueError):
            BeattyPair(A55, A55 + Fraction(1, 2))

    def test_all_pairs_to_2000(self):
        for alpha in (PHI, A55, A19, QuadraticNumber.sqrt(2)):
            assert rayleigh_verify(conjugate_beatty(alpha), 2000)


class TestUnitCombination:
    def test_sqrt19_solution(self):
        pair = conjugate_beatty(A19)
        u = 1 - fractional_part(pair.beta)
        v = fractional_part(pair.alpha)
        assert solve_unit_combination(u, v) == (3, 1)

    def test_a55_none(self):
        pair = conjugate_beatty(A55)
        u = 1 - fractional_part(pair.beta)
        v = fractional_part(pair.alpha)
        assert solve_unit_combination(u, v) is None

    def test_phi_solution(self):
        pair = conjugate_beatty(PHI)
        u = 1 - fractional_part(pair.beta)
        v = fractional_part(pair.alpha)
        assert solve_unit_combination(u, v) == (1, 1)

    def test_solution_actually_solves(self):
        pair = conjugate_beatty(A19)
        u = 1 - fractional_part(pair.beta)
        v = fractional_part(pair.alpha)
        p, q = solve_unit_combination(u, v)
        assert p * u + q * v == 1

    def test_rational_inputs_rejected(self):
        with pytest.raises(ValueError):
            solve_unit_combination(QuadraticNumber.rational(1, 2, D=5), PHI)

    def test_singular_system_has_no_solution(self):
        x = fractional_part(PHI)
        assert solve_unit_combination(x, 2 * x) is None
