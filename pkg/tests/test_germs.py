import random
from fractions import Fraction as F

import pytest

from orbeuler import (
    CurveGerm,
    NotIsolatedError,
    euler_reduced_germ,
    euler_top_complement,
    germ_from_dict,
    germ_invariants,
    germ_to_dict,
    lct_obstruction,
    log_chern_c2,
    milnor_number,
    tjurina_number,
)

# Frozen from the truncated-ideal oracle; the perturbation x^2 y^3 sits above
# the Newton diagram of x^4 + y^5, so mu stays 12 while tau drops.
PERTURBED_GERM = "x^4+y^5+x^2y^3"
PERTURBED_TAU = 11

ADE_NORMAL_FORMS = (
    [f"x^2+y^{k + 1}" for k in range(1, 9)]          # A_k, k <= 8
    + [f"x^2y+y^{k - 1}" for k in range(4, 7)]       # D_k, k <= 6
    + ["x^3+y^4", "x^3+xy^3", "x^3+y^5"]             # E6, E7, E8
)


class TestParsing:
    def test_basic_forms(self):
        assert CurveGerm.parse("x^2+y^3").coefficients() == {(2, 0): F(1), (0, 3): F(1)}
        assert CurveGerm.parse("xy").coefficients() == {(1, 1): F(1)}
        assert CurveGerm.parse("x*y").coefficients() == {(1, 1): F(1)}
        assert CurveGerm.parse("-x^2 + 2y^3").coefficients() == {(2, 0): F(-1), (0, 3): F(2)}
        assert CurveGerm.parse("1/2x^2y^3").coefficients() == {(2, 3): F(1, 2)}
        assert CurveGerm.parse("x^2−y^3").coefficients() == {(2, 0): F(1), (0, 3): F(-1)}

    def test_like_terms_combine(self):
        assert CurveGerm.parse("x^2+x^2") == CurveGerm.parse("2x^2")

    @pytest.mark.parametrize("bad", ["", "5", "x+", "z^2", "x^2+3", "1/0x", "x^2++y"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            CurveGerm.parse(bad)

    def test_cancellation_to_zero_rejected(self):
        with pytest.raises(ValueError):
            CurveGerm.parse("x^2-x^2")

    def test_float_coefficients_refused(self):
        with pytest.raises(TypeError):
            CurveGerm(((2, 0, 0.5),))

    def test_document_round_trip(self):
        germ = CurveGerm.parse("x^4+y^5+x^2y^3")
        assert germ_from_dict(germ_to_dict(germ)) == germ


class TestMilnor:
    def test_examples(self):
        assert milnor_number("x^2+y^3") == 2
        assert milnor_number("xy") == 1
        assert milnor_number("x^3+y^3") == 4

    def test_product_formula(self):
        for p in range(2, 7):
            for q in range(p, 7):
                assert milnor_number(f"x^{p}+y^{q}") == (p - 1) * (q - 1)

    def test_smooth_short_circuit(self):
        assert milnor_number("x+y^5") == 0
        assert tjurina_number("y") == 0

    def test_non_isolated(self):
        with pytest.raises(NotIsolatedError):
            milnor_number("x^2", cap=12)
        with pytest.raises(NotIsolatedError):
            milnor_number("x^2y^2", cap=12)

    def test_cap_validation(self):
        with pytest.raises(ValueError):
            milnor_number("x^2+y^3", cap=0)


class TestTjurina:
    def test_examples(self):
        assert tjurina_number("x^2+y^3") == 2
        assert tjurina_number("x^4+y^5") == 12

    def test_perturbed_germ_regression(self):
        invariants = germ_invariants(PERTURBED_GERM)
        assert invariants.mu == 12
        assert invariants.tau == PERTURBED_TAU

    def test_ade_forms_are_weighted_homogeneous(self):
        for form in ("x^2+y^3", "x^3+xy^3"):
            invariants = germ_invariants(form)
            assert invariants.mu == invariants.tau

    def test_stable_under_larger_cap(self):
        base = germ_invariants(PERTURBED_GERM)
        again = germ_invariants(PERTURBED_GERM, cap=base.truncation_used + 5)
        assert (again.mu, again.tau) == (base.mu, base.tau)


class TestEulerReducedGerm:
    def test_examples(self):
        assert euler_reduced_germ("x^2+y^3") == 0
        assert euler_reduced_germ("xy") == 0
        assert euler_reduced_germ(PERTURBED_GERM) == 1

    def test_random_perturbations_nonnegative(self):
        rng = random.Random(20240229)
        for _ in range(20):
            p = rng.randint(3, 5)
            q = rng.randint(p, 5)
            i = rng.randint(1, p - 1)
            # exponent above the Newton diagram keeps the singularity and mu
            j = q - (q * i) // p + rng.randint(1, 2)
            coeff = F(rng.randint(1, 5), rng.randint(1, 5))
            germ = CurveGerm(((p, 0, F(1)), (0, q, F(1)), (i, j, coeff)))
            invariants = germ_invariants(germ)
            assert invariants.mu >= invariants.tau >= 1


class TestChernAndComplement:
    def test_log_chern_examples(self):
        assert log_chern_c2(3, 18, []) == 21
        assert log_chern_c2(3, 18, [2] * 9) == 3
        assert log_chern_c2(3, 0, []) == 3

    def test_complement_examples(self):
        assert euler_top_complement(3, 0, [1]) == 2
        assert euler_top_complement(3, 18, []) == 21
        assert euler_top_complement(3, 0, [2]) == 1

    def test_difference_is_obstruction(self):
        rng = random.Random(7)
        for _ in range(25):
            pairs = [
                (rng.randint(0, 9) + t, t)
                for t in (rng.randint(0, 9) for _ in range(rng.randint(0, 5)))
            ]
            c2, kd = rng.randint(-5, 10), rng.randint(-20, 20)
            mus = [mu for mu, _ in pairs]
            taus = [tau for _, tau in pairs]
            difference = log_chern_c2(c2, kd, taus) - euler_top_complement(c2, kd, mus)
            assert difference == lct_obstruction(pairs)[0]


class TestLctObstruction:
    def test_examples(self):
        assert lct_obstruction([(2, 2)]) == (0, "no-obstruction")
        assert lct_obstruction([(12, 11)]) == (1, "LCT-fails")
        assert lct_obstruction([]) == (0, "no-obstruction")

    def test_rejects_mu_below_tau(self):
        with pytest.raises(ValueError):
            lct_obstruction([(1, 2)])


def test_full_ade_suite():
    for form in ADE_NORMAL_FORMS:
        invariants = germ_invariants(form)
        assert invariants.mu == invariants.tau, form
