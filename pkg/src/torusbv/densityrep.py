"""Witt-algebra representations on densities P(z) z^beta (dz/z)^alpha,
realized on rank-1 Laurent polynomials by

    rho_{alpha,beta}(xi_i) z^j = (j + alpha*i + beta) z^{i+j}

together with extraction and irreducibility testing of the finite
dimensional sl2 submodules.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .laurent import LaurentPoly, _as_fraction


class DensityRepSpec:
    """The pair (alpha, beta) defining rho_{alpha,beta} at rank 1."""

    def __init__(self, alpha, beta):
        self.alpha = _as_fraction(alpha)
        self.beta = _as_fraction(beta)

    def __repr__(self):
        return f"DensityRepSpec(alpha={self.alpha}, beta={self.beta})"


def rho_apply(spec: DensityRepSpec, i: int, p: LaurentPoly) -> LaurentPoly:
    """Linear extension of rho(xi_i) z^j = (j + alpha*i + beta) z^{i+j}."""
    if p.rank != 1:
        raise ValueError("density representations are defined at rank 1")
    terms = {}
    for (j,), coeff in p.terms.items():
        factor = j + spec.alpha * i + spec.beta
        if factor:
            key = (i + j,)
            terms[key] = terms.get(key, Fraction(0)) + factor * coeff
    return LaurentPoly(1, terms)


def weight_of(spec: DensityRepSpec, j: int) -> Fraction:
    """xi_0 eigenvalue of z^j, namely j + beta."""
    return j + spec.beta


def verify_lie_action(spec: DensityRepSpec, lo: int, hi: int, bracket_window: int = 3) -> bool:
    """Check rho([xi_n, xi_m]) = rho(xi_n) rho(xi_m) - rho(xi_m) rho(xi_n)
    on monomials z^j, lo <= j <= hi, for |n|, |m| <= bracket_window.

    Images are evaluated exactly on each monomial, so there are no
    truncation edge effects.
    """
    for n in range(-bracket_window, bracket_window + 1):
        for m in range(-bracket_window, bracket_window + 1):
            for j in range(lo, hi + 1):
                zj = LaurentPoly.monomial(1, (j,))
                # [xi_n, xi_m] = (m - n) xi_{n+m}
                lhs = rho_apply(spec, n + m, zj).scale(m - n)
                rhs = rho_apply(spec, n, rho_apply(spec, m, zj)) - rho_apply(
                    spec, m, rho_apply(spec, n, zj)
                )
                if lhs != rhs:
                    return False
    return True


class FiniteSl2Module:
    """A finite dimensional sl2 module with one-dimensional weight spaces,
    given by matrices for e, h, f in a monomial basis z^{j} (labels stored)."""

    def __init__(self, basis_exponents, e, h, f):
        self.dim = len(basis_exponents)
        self.basis_exponents = list(basis_exponents)
        self.e = [[_as_fraction(v) for v in row] for row in e]
        self.h = [[_as_fraction(v) for v in row] for row in h]
        self.f = [[_as_fraction(v) for v in row] for row in f]
        self._check_invariants()

    def _check_invariants(self):
        if _mat_sub(_mat_commutator(self.h, self.e), _mat_scale(self.e, 2)) != _mat_zero(self.dim):
            raise ValueError("[h, e] != 2e")
        if _mat_sub(_mat_commutator(self.h, self.f), _mat_scale(self.f, -2)) != _mat_zero(self.dim):
            raise ValueError("[h, f] != -2f")
        if _mat_sub(_mat_commutator(self.e, self.f), self.h) != _mat_zero(self.dim):
            raise ValueError("[e, f] != h")
        spectrum = self.h_spectrum()
        if any(v.denominator != 1 for v in spectrum):
            raise ValueError("h eigenvalues must be integers")
        n = self.dim - 1
        if spectrum != [Fraction(-n + 2 * t) for t in range(self.dim)]:
            raise ValueError("h spectrum must be {-n, -n+2, ..., n}")

    @classmethod
    def unchecked(cls, basis_exponents, e, h, f) -> "FiniteSl2Module":
        """Construct without invariant checks (test fixtures for reducible
        or malformed modules)."""
        module = object.__new__(cls)
        module.dim = len(basis_exponents)
        module.basis_exponents = list(basis_exponents)
        module.e = [[_as_fraction(v) for v in row] for row in e]
        module.h = [[_as_fraction(v) for v in row] for row in h]
        module.f = [[_as_fraction(v) for v in row] for row in f]
        return module

    def h_spectrum(self):
        if any(self.h[i][j] for i in range(self.dim) for j in range(self.dim) if i != j):
            raise ValueError("h must act diagonally")
        return sorted(self.h[i][i] for i in range(self.dim))

    def casimir(self):
        """ef + fe + h^2/2 as a matrix."""
        ef = _mat_mul(self.e, self.f)
        fe = _mat_mul(self.f, self.e)
        hh = _mat_scale(_mat_mul(self.h, self.h), Fraction(1, 2))
        return _mat_add(_mat_add(ef, fe), hh)


def _mat_zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mat_scale(a, c):
    c = _as_fraction(c)
    return [[c * x for x in row] for row in a]


def _mat_commutator(a, b):
    return _mat_sub(_mat_mul(a, b), _mat_mul(b, a))


def has_finite_submodule(spec: DensityRepSpec) -> bool:
    """Existence criterion: alpha a non-positive half-integer and
    alpha + beta an integer."""
    two_alpha = 2 * spec.alpha
    return (
        two_alpha.denominator == 1
        and two_alpha <= 0
        and (spec.alpha + spec.beta).denominator == 1
    )


def extract_finite_sl2_submodule(spec: DensityRepSpec) -> FiniteSl2Module | None:
    """The unique finite dimensional sl2 submodule of rho_{alpha,beta}, or
    None when the existence criterion fails.

    The submodule has dimension -2*alpha + 1, with basis z^{j0}, ...,
    z^{j0 + n} where j0 = alpha - beta locates the kernel of the lowering
    operator; the sl2 operators are e = rho(xi_1), h = 2 rho(xi_0),
    f = -rho(xi_{-1}).
    """
    if not has_finite_submodule(spec):
        return None
    n = int(-2 * spec.alpha)
    j0 = spec.alpha - spec.beta
    assert j0.denominator == 1
    j0 = int(j0)
    exponents = [j0 + t for t in range(n + 1)]
    dim = n + 1
    e = _mat_zero(dim)
    h = _mat_zero(dim)
    f = _mat_zero(dim)
    for t, j in enumerate(exponents):
        h[t][t] = 2 * weight_of(spec, j)
        ecoeff = j + spec.alpha + spec.beta
        if ecoeff:
            if t + 1 >= dim:
                raise AssertionError("raising operator escapes the submodule")
            e[t + 1][t] = ecoeff
        fcoeff = -(j - spec.alpha + spec.beta)
        if fcoeff:
            if t - 1 < 0:
                raise AssertionError("lowering operator escapes the submodule")
            f[t - 1][t] = fcoeff
    return FiniteSl2Module(exponents, e, h, f)


def check_irreducible(module: FiniteSl2Module) -> bool:
    """True iff the module has no proper nonzero invariant subspace.

    Uses the raising-chain criterion (valid because the weight spaces are
    one dimensional): e must map each non-top weight space injectively to
    the next.  Cross-checked for dim <= 5 by brute-force enumeration of
    invariant coordinate subspaces (subspaces spanned by eigenvectors of
    the diagonal operator h, which has distinct eigenvalues).
    """
    dim = module.dim
    spectrum = module.h_spectrum()
    if len(set(spectrum)) != dim:
        # repeated weights: by complete reducibility the module splits
        return False
    chain_ok = all(module.e[t + 1][t] != 0 for t in range(dim - 1))
    if dim <= 5:
        assert chain_ok == _irreducible_brute_force(module)
    return chain_ok


def _irreducible_brute_force(module: FiniteSl2Module) -> bool:
    """Enumerate all proper nonzero spans of h-eigenvectors and test
    invariance under e and f.  Since h is diagonal with distinct entries,
    every invariant subspace is of this form."""
    dim = module.dim
    indices = range(dim)
    for size in range(1, dim):
        for subset in combinations(indices, size):
            inside = set(subset)
            invariant = True
            for op in (module.e, module.f):
                for col in subset:
                    for row in indices:
                        if row not in inside and op[row][col]:
                            invariant = False
                            break
                    if not invariant:
                        break
                if not invariant:
                    break
            if invariant:
                return False
    return True


def shift_isomorphism_check(alpha, beta, m: int, lo: int, hi: int, bracket_window: int = 3) -> bool:
    """Verify that z^j -> z^{j+m} intertwines rho_{alpha, beta+m} with
    rho_{alpha, beta}: rho_{alpha,beta}(xi_i) o shift = shift o
    rho_{alpha,beta+m}(xi_i) on all window monomials, |i| <= bracket_window.
    """
    if not isinstance(m, int):
        raise TypeError("shift must be an integer")
    base = DensityRepSpec(alpha, beta)
    shifted = DensityRepSpec(alpha, _as_fraction(beta) + m)

    def shift(p: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(1, {(j + m,): c for (j,), c in p.terms.items()})

    for i in range(-bracket_window, bracket_window + 1):
        for j in range(lo, hi + 1):
            zj = LaurentPoly.monomial(1, (j,))
            if rho_apply(base, i, shift(zj)) != shift(rho_apply(shifted, i, zj)):
                return False
    return True


def classification_sweep(grid: int = 8):
    """Sweep 2*alpha in {-grid, ..., 2} and 2*beta in {-grid, ..., grid};
    report existence and dimension of the finite submodule at each point."""
    rows = []
    for two_alpha in range(-grid, 3):
        for two_beta in range(-grid, grid + 1):
            spec = DensityRepSpec(Fraction(two_alpha, 2), Fraction(two_beta, 2))
            module = extract_finite_sl2_submodule(spec)
            rows.append(
                {
                    "alpha": str(spec.alpha),
                    "beta": str(spec.beta),
                    "exists": module is not None,
                    "dim": module.dim if module is not None else 0,
                }
            )
    return rows
