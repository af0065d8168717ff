from fractions import Fraction

import pytest

from torusbv.densityrep import (
    DensityRepSpec,
    FiniteSl2Module,
    check_irreducible,
    classification_sweep,
    extract_finite_sl2_submodule,
    has_finite_submodule,
    rho_apply,
    shift_isomorphism_check,
    verify_lie_action,
    weight_of,
)
from torusbv.laurent import LaurentPoly


def zpow(n, coeff=1):
    return LaurentPoly(1, {(n,): coeff})


def test_reference_action_is_bracket_action():
    spec = DensityRepSpec(0, 0)
    for i in range(-3, 4):
        for j in range(-3, 4):
            assert rho_apply(spec, i, zpow(j)) == zpow(i + j, j)


def test_rho_kills_tuned_monomials():
    spec = DensityRepSpec(-1, -1)
    assert rho_apply(spec, 1, zpow(2)).is_zero()
    assert rho_apply(spec, -1, zpow(0)).is_zero()


def test_rho_requires_rank1():
    with pytest.raises(ValueError):
        rho_apply(DensityRepSpec(0, 0), 1, LaurentPoly(2, {(1, 0): 1}))


def test_weight_values():
    assert weight_of(DensityRepSpec(0, -1), 2) == 1
    assert weight_of(DensityRepSpec(0, 0), 0) == 0
    assert weight_of(DensityRepSpec(Fraction(1, 2), Fraction(3, 2)), 1) == Fraction(5, 2)


def test_lie_action_holds_for_sampled_specs():
    for alpha, beta in [(0, 0), (Fraction(1, 2), 0), (-1, -1), (Fraction(-3, 2), Fraction(5, 2))]:
        assert verify_lie_action(DensityRepSpec(alpha, beta), -8, 8)


def test_existence_criterion():
    assert has_finite_submodule(DensityRepSpec(-1, -1))
    assert has_finite_submodule(DensityRepSpec(0, 0))
    assert has_finite_submodule(DensityRepSpec(Fraction(-1, 2), Fraction(1, 2)))
    assert not has_finite_submodule(DensityRepSpec(Fraction(1, 2), Fraction(1, 2)))
    assert not has_finite_submodule(DensityRepSpec(Fraction(-1, 2), 0))
    assert not has_finite_submodule(DensityRepSpec(Fraction(-1, 3), Fraction(1, 3)))


def test_extract_dim3_module():
    module = extract_finite_sl2_submodule(DensityRepSpec(-1, -1))
    assert module.dim == 3
    assert module.basis_exponents == [0, 1, 2]
    assert module.h_spectrum() == [-2, 0, 2]


def test_extract_trivial_module():
    module = extract_finite_sl2_submodule(DensityRepSpec(0, 0))
    assert module.dim == 1
    assert module.basis_exponents == [0]
    assert module.h_spectrum() == [0]
    assert check_irreducible(module)


def test_extract_refuses_bad_parameters():
    assert extract_finite_sl2_submodule(DensityRepSpec(Fraction(1, 2), Fraction(1, 2))) is None
    assert extract_finite_sl2_submodule(DensityRepSpec(Fraction(-1, 2), 0)) is None


def test_extract_dim4_irreducible():
    module = extract_finite_sl2_submodule(DensityRepSpec(Fraction(-3, 2), Fraction(-3, 2)))
    assert module.dim == 4
    assert module.h_spectrum() == [-3, -1, 1, 3]
    assert check_irreducible(module)


def test_reducible_fixture_detected():
    # Direct sum of two trivial modules: span{first vector} is invariant.
    zero2 = [[0, 0], [0, 0]]
    fixture = FiniteSl2Module.unchecked([0, 5], zero2, zero2, zero2)
    assert not check_irreducible(fixture)


def test_casimir_scalar_on_extracted_modules():
    for two_alpha in range(-6, 1):
        n = -two_alpha
        spec = DensityRepSpec(Fraction(two_alpha, 2), Fraction(two_alpha, 2))
        module = extract_finite_sl2_submodule(spec)
        expected = Fraction(n * (n + 2), 2)
        cas = module.casimir()
        for i in range(module.dim):
            for j in range(module.dim):
                assert cas[i][j] == (expected if i == j else 0)


def test_classification_sweep_matches_criterion():
    rows = classification_sweep(grid=8)
    assert len(rows) == 11 * 17
    for row in rows:
        alpha = Fraction(row["alpha"])
        beta = Fraction(row["beta"])
        should_exist = alpha <= 0 and (2 * alpha).denominator == 1 and (alpha + beta).denominator == 1
        assert row["exists"] == should_exist
        if should_exist:
            assert row["dim"] == -2 * alpha + 1


def test_shift_isomorphism():
    assert shift_isomorphism_check(-1, -1, 5, -8, 8)
    assert shift_isomorphism_check(Fraction(1, 2), Fraction(-3, 2), -2, -8, 8)
    assert shift_isomorphism_check(0, 0, 0, -8, 8)


def test_fractional_shift_rejected():
    with pytest.raises(TypeError):
        shift_isomorphism_check(-1, -1, Fraction(1, 2), -8, 8)


def test_weight_spaces_one_dimensional():
    # rho(xi_0) acts diagonally with distinct eigenvalues j + beta.
    spec = DensityRepSpec(Fraction(-1, 2), Fraction(3, 2))
    seen = set()
    for j in range(-8, 9):
        image = rho_apply(spec, 0, zpow(j))
        assert set(image.terms) <= {(j,)}
        weight = weight_of(spec, j)
        assert weight not in seen
        seen.add(weight)
