import random
from fractions import Fraction

import pytest

from ellsurf.exactmath import (
    INF,
    NEG_INF,
    ParseError,
    Place,
    Poly,
    PolyError,
    T,
    eval_mod,
    format_poly,
    gcd_free_basis,
    invert_mod,
    parse_poly,
    poly_gcd,
    squarefree_part,
    valuation,
)


def P(*coeffs):
    return Poly(coeffs)


class TestParse:
    def test_quadratic(self):
        assert parse_poly("t^2 - 2") == P(-2, 0, 1)

    def test_product(self):
        assert parse_poly("(t-1)*(t+1)") == P(-1, 0, 1)

    def test_rational_monomial(self):
        assert parse_poly("3/2*t^5") == P(0, 0, 0, 0, 0, Fraction(3, 2))

    def test_signed_literal(self):
        assert parse_poly("-3*t + 1") == P(1, -3)

    def test_nested(self):
        assert parse_poly("(t^2+1)*(t-2)^3") == (P(1, 0, 1) * P(-2, 1) ** 3)

    def test_syntax_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_poly("t^2 + @")
        assert err.value.position == 6

    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_poly("t^-2")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_poly("t t")

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_poly("1/0")

    def test_print_parse_roundtrip(self):
        rng = random.Random(7)
        for _ in range(200):
            f = Poly(
                Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                for _ in range(rng.randint(0, 8))
            )
            assert parse_poly(format_poly(f)) == f


class TestArithmetic:
    def test_divrem(self):
        q, r = divmod(P(-1, 0, 1), P(-1, 1))
        assert q == P(1, 1) and r.is_zero()

    def test_divrem_random(self):
        rng = random.Random(11)
        for _ in range(100):
            f = Poly(rng.randint(-5, 5) for _ in range(rng.randint(0, 9)))
            g = Poly(rng.randint(-5, 5) for _ in range(rng.randint(1, 6)))
            if g.is_zero():
                continue
            q, r = divmod(f, g)
            assert q * g + r == f
            assert r.is_zero() or r.degree < g.degree

    def test_division_by_zero(self):
        with pytest.raises(PolyError):
            divmod(T, Poly.zero())

    def test_gcd(self):
        assert poly_gcd(P(-1, 0, 1), P(1, -2, 1)) == P(-1, 1)

    def test_derivative(self):
        assert P(0, 0, 0, 0, 0, 1).derivative() == P(0, 0, 0, 0, 5)

    def test_squarefree_part(self):
        assert squarefree_part(T * T * P(-1, 1)) == T * P(-1, 1)

    def test_pow(self):
        assert P(1, 1) ** 3 == P(1, 3, 3, 1)

    def test_degree_of_zero(self):
        assert Poly.zero().degree is NEG_INF
        assert NEG_INF < -5


class TestValuation:
    def test_finite_simple(self):
        f = T ** 3 + T ** 4
        assert valuation(f, Place.finite(T)) == 3

    def test_infinity(self):
        assert valuation(Poly.const(1), Place.infinity(), level=4) == 4

    def test_repeated_division(self):
        f = P(-2, 0, 1) ** 3 * P(1, 1)
        assert valuation(f, Place.finite(P(-2, 0, 1))) == 3

    def test_zero_poly(self):
        assert valuation(Poly.zero(), Place.finite(T)) is INF
        assert INF > 10 ** 9

    def test_degree_exceeds_bound(self):
        with pytest.raises(PolyError):
            valuation(T ** 5, Place.infinity(), level=4)

    def test_additivity(self):
        rng = random.Random(3)
        p = Place.finite(P(1, 1))
        for _ in range(60):
            f = Poly(rng.randint(-4, 4) for _ in range(rng.randint(1, 6)))
            g = Poly(rng.randint(-4, 4) for _ in range(rng.randint(1, 6)))
            if f.is_zero() or g.is_zero():
                continue
            vf, vg = valuation(f, p), valuation(g, p)
            assert valuation(f * g, p) == vf + vg
            s = f + g
            if not s.is_zero():
                assert valuation(s, p) >= min(vf, vg)


class TestGcdFreeBasis:
    def test_coprime_split(self):
        basis = gcd_free_basis([T * T, T * P(-1, 1)])
        assert set(basis) == {T, P(-1, 1)}

    def test_shared_factor(self):
        basis = gcd_free_basis([P(1, 0, 1) * T, P(1, 0, 1)])
        assert set(basis) == {T, P(1, 0, 1)}

    def test_multiplicity_split_single_input(self):
        # one input whose factors occur with different multiplicities must
        # be separated by the refinement pass
        f = T ** 2 * P(-1, 1) ** 3
        basis = gcd_free_basis([f])
        assert set(basis) == {T, P(-1, 1)}

    def test_discriminant_separation(self):
        # delta = t^5 * u with u coprime to t, and t does not divide a, b
        u = P(3, 0, 1)
        delta = T ** 5 * u
        a = P(1, 1)
        b = P(2, 0, 0, 1)
        basis = gcd_free_basis([delta, a, b])
        assert T in basis
        for g in basis:
            for h in basis:
                if g is not h:
                    assert poly_gcd(g, h).degree == 0

    def test_reconstruction(self):
        rng = random.Random(19)
        small = [T, P(-1, 1), P(1, 1), P(1, 0, 1), P(-2, 0, 1)]
        for _ in range(40):
            fs = []
            for _ in range(rng.randint(1, 3)):
                f = Poly.const(rng.choice([1, 2, -3]))
                for q in small:
                    f = f * q ** rng.randint(0, 3)
                if f.degree >= 0 and not f.is_zero():
                    fs.append(f)
            if not fs:
                continue
            basis = gcd_free_basis(fs)
            for f in fs:
                rebuilt = Poly.const(1)
                for g in basis:
                    rebuilt = rebuilt * g ** valuation(f, Place.finite(g))
                quotient, rem = divmod(f, rebuilt)
                assert rem.is_zero() and quotient.degree == 0

    def test_zero_input_rejected(self):
        with pytest.raises(PolyError):
            gcd_free_basis([Poly.zero()])

    def test_single_multiplicity_per_element(self):
        f1 = T ** 2 * P(-1, 1) ** 2 * P(1, 1)
        f2 = T ** 3 * P(-1, 1)
        basis = gcd_free_basis([f1, f2])
        # t and t-1 have different multiplicity vectors, so they separate;
        # within each basis element every input has one multiplicity
        for g in basis:
            for f in (f1, f2):
                e = valuation(f, Place.finite(g))
                q = f
                for _ in range(e):
                    q = q // g
                assert poly_gcd(q, g).degree == 0


class TestEvalMod:
    def test_point_evaluation(self):
        assert eval_mod(T ** 3, P(-2, 1)) == Poly.const(8)

    def test_quadratic_place(self):
        assert eval_mod(T ** 2, P(1, 0, 1)) == Poly.const(-1)

    def test_exact_multiple_plus_constant(self):
        f = P(1, 0, 1) * T + Poly.const(7)
        assert eval_mod(f, P(1, 0, 1)) == Poly.const(7)

    def test_invert_mod(self):
        p = P(1, 0, 1)
        f = P(3, 1)
        g = invert_mod(f, p)
        assert eval_mod(f * g, p) == Poly.const(1)

    def test_invert_mod_noninvertible(self):
        with pytest.raises(PolyError):
            invert_mod(T, T * P(-1, 1))
