import random

import pytest

from bianchicert.circles import (CocompactCertificate, circle_action,
                                 circle_at_origin, cocompact_certificate,
                                 discriminant, hermitian_action,
                                 is_quadratic_nonresidue, primitive_triple,
                                 smallest_nonresidue, stab_form)
from bianchicert.psl2 import PslElement, parse_psl
from bianchicert.quadint import QuadInt, parse_quadint

from test_psl2 import random_psl


def q(text, d=3):
    return parse_quadint(text, d)


def random_circle(rng, d):
    while True:
        B = QuadInt(d, rng.randint(-8, 8), rng.randint(-8, 8))
        a = rng.randint(-6, 6)
        c = rng.randint(-6, 6)
        if B.norm() - a * c > 0:
            return primitive_triple(a, B, c)


class TestPrimitiveTriple:
    def test_content_divided(self):
        t = primitive_triple(2, QuadInt.integer(3, 0), -10)
        assert (t.a, t.B, t.c) == (1, QuadInt.integer(3, 0), -5)

    def test_already_primitive(self):
        for D in (1, 5, 216733332353):
            t = primitive_triple(1, QuadInt.integer(3, 0), -D)
            assert (t.a, t.c) == (1, -D)

    def test_omega_content(self):
        # oracle: (3, 3*omega, -6) has odd half-coordinates b1=-3, b2=3,
        # so the content is gcd(3, 3, 3, 6) = 3
        omega = q("1*omega")
        t = primitive_triple(3, 3 * omega, -6)
        assert (t.a, t.B, t.c) == (1, omega, -2)

    def test_idempotent_and_sign(self):
        rng = random.Random(21)
        for _ in range(200):
            d = rng.choice((1, 2, 3, 7))
            t = random_circle(rng, d)
            again = primitive_triple(t.a, t.B, t.c)
            assert again == t
            assert t.a > 0 or (t.a == 0)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            primitive_triple(1, QuadInt.integer(3, 0), 1)


class TestDiscriminant:
    def test_origin_circles(self):
        for D in (1, 2, 5, 216733332353):
            assert discriminant(circle_at_origin(3, D)) == D

    def test_unit_circle(self):
        assert discriminant(circle_at_origin(7, 1)) == 1

    def test_omega_triple(self):
        # oracle: |omega|^2 + 2 = 1 + 2
        assert discriminant(primitive_triple(1, q("1*omega"), -2)) == 3


class TestActions:
    def test_identity_fixes(self):
        rng = random.Random(22)
        c = random_circle(rng, 3)
        assert hermitian_action(PslElement.identity(3), c) == c
        assert circle_action(PslElement.identity(3), c) == c

    def test_translation_of_unit_circle(self):
        # oracle: substituting z -> z - 1 into |z|^2 = 1 gives
        # |z|^2 - z - conj(z) = 0, i.e. the triple (1, -1, 0)
        t = parse_psl("[[1,1],[0,1]]", 3)
        image = circle_action(t, circle_at_origin(3, 1))
        assert (image.a, image.B, image.c) == (1, QuadInt.integer(3, -1), 0)

    def test_discriminant_invariance(self):
        rng = random.Random(23)
        for _ in range(1000):
            d = rng.choice((1, 2, 3, 7))
            t = random_psl(rng, d)
            c = random_circle(rng, d)
            assert discriminant(circle_action(t, c)) == discriminant(c)
            assert discriminant(hermitian_action(t, c)) == discriminant(c)

    def test_group_action(self):
        rng = random.Random(24)
        for _ in range(100):
            d = rng.choice((2, 3, 7))
            t, u = random_psl(rng, d), random_psl(rng, d)
            c = random_circle(rng, d)
            assert hermitian_action(t * u, c) == hermitian_action(t, hermitian_action(u, c))
            assert circle_action(t * u, c) == circle_action(t, circle_action(u, c))


class TestStabForm:
    def test_identity(self):
        alpha, beta = stab_form(PslElement.identity(3), 5)
        assert alpha == QuadInt.integer(3, 1) and beta.is_zero()

    def test_golden_g1(self):
        g1 = parse_psl(
            "[[86746012705-5928*sqrt(-3),-25695903883771680-17987132718640176*sqrt(-3)],"
            "[-118560+82992*sqrt(-3),86746012705+5928*sqrt(-3)]]", 3)
        result = stab_form(g1, 216733332353)
        assert result is not None
        alpha, beta = result
        assert alpha == q("86746012705-5928*sqrt(-3)")
        assert beta == q("-118560-82992*sqrt(-3)")

    def test_parabolic_absent(self):
        assert stab_form(parse_psl("[[1,1],[0,1]]", 3), 5) is None

    def test_both_signs_tried(self):
        g1 = parse_psl(
            "[[86746012705-5928*sqrt(-3),-25695903883771680-17987132718640176*sqrt(-3)],"
            "[-118560+82992*sqrt(-3),86746012705+5928*sqrt(-3)]]", 3)
        assert stab_form(g1.negate(), 216733332353) is not None

    def test_member_fixes_circle(self):
        g1 = parse_psl(
            "[[86746012705-5928*sqrt(-3),-25695903883771680-17987132718640176*sqrt(-3)],"
            "[-118560+82992*sqrt(-3),86746012705+5928*sqrt(-3)]]", 3)
        D = 216733332353
        assert circle_action(g1, circle_at_origin(3, D)) == circle_at_origin(3, D)

    def test_closed_under_product_and_inverse(self):
        g1 = parse_psl(
            "[[86746012705-5928*sqrt(-3),-25695903883771680-17987132718640176*sqrt(-3)],"
            "[-118560+82992*sqrt(-3),86746012705+5928*sqrt(-3)]]", 3)
        D = 216733332353
        assert stab_form(g1 * g1, D) is not None
        assert stab_form(g1.inv(), D) is not None
        assert stab_form(g1 * g1.inv(), D) is not None


class TestResidues:
    def test_two_mod_three(self):
        assert is_quadratic_nonresidue(2, 3)

    def test_perfect_square(self):
        for d in (3, 5, 7, 11, 19):
            assert not is_quadratic_nonresidue(4, d)

    def test_smallest_mod_seven(self):
        # oracle: squares mod 7 are {1, 2, 4}
        assert {x * x % 7 for x in range(1, 7)} == {1, 2, 4}
        assert smallest_nonresidue(7) == 3

    def test_invalid_modulus(self):
        with pytest.raises(ValueError):
            is_quadratic_nonresidue(2, 4)
        with pytest.raises(ValueError):
            smallest_nonresidue(2)


class TestCocompactCertificate:
    def test_certified(self):
        cert = cocompact_certificate(3, 2)
        assert cert.certified

    def test_square_not_applicable(self):
        cert = cocompact_certificate(3, 4)
        assert not cert.certified and cert.d_is_odd_prime

    def test_composite_d_not_applicable(self):
        cert = cocompact_certificate(4, 3)
        assert not cert.certified and not cert.d_is_odd_prime

    def test_d7_construction_value(self):
        # D_1 = 3 (mod 7) by construction when x = 3
        cert = cocompact_certificate(7, 5759153956)
        assert cert.certified
