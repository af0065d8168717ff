"""Batalin-Vilkovisky algebra of polyvector fields on the torus.

Elements live in Laurent (x) Lambda*(theta_1, ..., theta_r), where theta_i
stands for the vector field z_i d/dz_i.  The BV operator is implemented
twice: a definitional contraction form (`bv_delta`) and an independent
divergence computation through logarithmic differential forms
(`bv_delta_divergence`); the two must agree everywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, RankMismatchError, _as_fraction


def normalize_wedge(indices):
    """Sort wedge indices, returning (sorted tuple, Koszul sign).

    Returns sign 0 when an index repeats (theta_i ^ theta_i = 0).
    """
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


def merge_wedges(left, right):
    """Concatenate two strictly increasing wedges; (merged, Koszul sign)."""
    return normalize_wedge(tuple(left) + tuple(right))


class PolyVector:
    """Sparse element of Laurent (x) Lambda*(theta), stored as
    {(exponent tuple, wedge tuple): Fraction} with no zero coefficients.

    Wedge tuples are strictly increasing subsets of {1, ..., rank}.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        clean = {}
        for (exp, wedge), coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {rank}")
            wedge, sign = normalize_wedge(wedge)
            if sign == 0:
                continue
            if wedge and not (1 <= wedge[0] and wedge[-1] <= rank):
                raise ValueError(f"wedge indices {wedge} out of range for rank {rank}")
            coeff = sign * _as_fraction(coeff)
            if coeff:
                key = (exp, wedge)
                clean[key] = clean.get(key, Fraction(0)) + coeff
        self.rank = rank
        self.terms = {k: c for k, c in clean.items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "PolyVector":
        """Internal fast path: keys already canonical, coefficients already
        Fractions; only zero filtering is performed."""
        pv = object.__new__(cls)
        pv.rank = rank
        pv.terms = {k: c for k, c in terms.items() if c}
        return pv

    @classmethod
    def zero(cls, rank: int) -> "PolyVector":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "PolyVector":
        return cls.monomial(rank, (0,) * rank, ())

    @classmethod
    def monomial(cls, rank: int, exp, wedge=(), coeff=1) -> "PolyVector":
        return cls(rank, {(tuple(exp), tuple(wedge)): _as_fraction(coeff)})

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "PolyVector":
        return cls(p.rank, {(e, ()): c for e, c in p.terms.items()})

    @classmethod
    def theta(cls, rank: int, i: int) -> "PolyVector":
        """The Cartan generator theta_i = z_i d/dz_i."""
        if not 1 <= i <= rank:
            raise ValueError(f"theta index {i} out of range for rank {rank}")
        return cls.monomial(rank, (0,) * rank, (i,))

    @classmethod
    def xi(cls, rank: int, exp, i: int) -> "PolyVector":
        """The vector field xi_{n,i} = z^n theta_i."""
        if not 1 <= i <= rank:
            raise ValueError(f"theta index {i} out of range for rank {rank}")
        return cls.monomial(rank, tuple(exp), (i,))

    # -- structure --------------------------------------------------------

    def _check_rank(self, other: "PolyVector") -> None:
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other: "PolyVector") -> "PolyVector":
        self._check_rank(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return PolyVector._raw(self.rank, terms)

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        return self + (-other)

    def __neg__(self) -> "PolyVector":
        return PolyVector._raw(self.rank, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "PolyVector":
        c = _as_fraction(c)
        return PolyVector._raw(self.rank, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return wedge(self, other)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyVector)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    # -- grading ----------------------------------------------------------

    def degrees(self):
        return sorted({len(w) for (_, w) in self.terms})

    def degree(self):
        """Cohomological degree of a homogeneous element, None if mixed,
        and 0 for the zero element."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) == 1:
            return degs[0]
        return None

    def degree_part(self, k: int) -> "PolyVector":
        return PolyVector._raw(
            self.rank, {key: c for key, c in self.terms.items() if len(key[1]) == k}
        )

    def homogeneous_class(self):
        """The common H1-grading (exponent vector) of all terms, or None."""
        classes = {e for (e, _) in self.terms}
        if len(classes) == 1:
            return next(iter(classes))
        return None

    def h1_part(self, exp) -> "PolyVector":
        exp = tuple(exp)
        return PolyVector._raw(
            self.rank, {key: c for key, c in self.terms.items() if key[0] == exp}
        )

    def degree0_to_laurent(self) -> LaurentPoly:
        """Extract the function part as a LaurentPoly; the element must be
        concentrated in cohomological degree 0."""
        if any(w for (_, w) in self.terms):
            raise ValueError("element has nonzero cohomological degree")
        return LaurentPoly(self.rank, {e: c for (e, _), c in self.terms.items()})

    def support(self):
        return sorted(self.terms)

    def __str__(self) -> str:
        from .parsing import format_polyvector

        return format_polyvector(self)

    def __repr__(self) -> str:
        return f"PolyVector(rank={self.rank}, {self.__str__()!r})"

    def to_json(self):
        return [
            {"coeff": str(self.terms[key]), "exp": list(key[0]), "wedge": list(key[1])}
            for key in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, rank: int, data) -> "PolyVector":
        return cls(
            rank,
            {(tuple(d["exp"]), tuple(d["wedge"])): Fraction(d["coeff"]) for d in data},
        )


def wedge(a: PolyVector, b: PolyVector) -> PolyVector:
    """Graded-commutative product: (z^n, S)(z^m, T) = sign * (z^{n+m}, S u T)."""
    a._check_rank(b)
    terms = {}
    for (e1, w1), c1 in a.terms.items():
        for (e2, w2), c2 in b.terms.items():
            w, sign = merge_wedges(w1, w2)
            if sign == 0:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            key = (e, w)
            terms[key] = terms.get(key, Fraction(0)) + sign * c1 * c2
    return PolyVector._raw(a.rank, terms)


def bv_delta(a: PolyVector) -> PolyVector:
    """BV operator in contraction form: Delta(z^n eta) = z^n (iota_n eta),
    where iota_n contracts the wedge against the exponent vector n."""
    terms = {}
    for (exp, w), coeff in a.terms.items():
        for j, i in enumerate(w):
            n_i = exp[i - 1]
            if n_i == 0:
                continue
            sign = -1 if j % 2 else 1
            key = (exp, w[:j] + w[j + 1:])
            terms[key] = terms.get(key, Fraction(0)) + sign * n_i * coeff
    return PolyVector._raw(a.rank, terms)


# ---------------------------------------------------------------------------
# Divergence model of the BV operator, via logarithmic differential forms.
#
# A logarithmic form is stored as {(exp, sorted dlog-index tuple): Fraction},
# a combination of z^n dlog z_{t1} ^ ... ^ dlog z_{tm}.  With the volume form
# Omega = dlog z_1 ^ ... ^ dlog z_r we contract, apply d, contract back, and
# multiply the degree-k input by (-1)^(k+1).
# ---------------------------------------------------------------------------


def _perm_sign_partition(first, rank):
    """Sign of the permutation (first..., complement...) of (1..rank),
    where `first` is strictly increasing."""
    sign = 1
    for pos, i in enumerate(first):
        # moving i left past the smaller complement elements
        smaller_compl = (i - 1) - pos
        if smaller_compl % 2:
            sign = -sign
    return sign


def _contract_against_volume(wedge_idx, rank):
    """iota_{theta_S} Omega = sign * dlog_{S^c}; returns (complement, sign)."""
    compl = tuple(i for i in range(1, rank + 1) if i not in wedge_idx)
    return compl, _perm_sign_partition(wedge_idx, rank)


def _dlog_differential(form_terms, rank):
    """Exterior differential of a logarithmic form: d(z^n dlog_T) =
    sum_i n_i z^n dlog_i ^ dlog_T."""
    out = {}
    for (exp, tlist), coeff in form_terms.items():
        for i in range(1, rank + 1):
            n_i = exp[i - 1]
            if n_i == 0 or i in tlist:
                continue
            merged, sign = merge_wedges((i,), tlist)
            key = (exp, merged)
            out[key] = out.get(key, Fraction(0)) + sign * n_i * coeff
    return out


def bv_delta_divergence(a: PolyVector) -> PolyVector:
    """BV operator as the signed divergence for Omega = prod dlog z_i.

    Independent of `bv_delta`; computes iota_Omega, then d, then inverts the
    contraction, then applies the degree sign (-1)^(k+1) per homogeneous
    cohomological degree k.
    """
    result = PolyVector.zero(a.rank)
    for k in a.degrees():
        part = a.degree_part(k)
        form = {}
        for (exp, w), coeff in part.terms.items():
            compl, sign = _contract_against_volume(w, a.rank)
            key = (exp, compl)
            form[key] = form.get(key, Fraction(0)) + sign * coeff
        dform = _dlog_differential(form, a.rank)
        terms = {}
        for (exp, tlist), coeff in dform.items():
            w = tuple(i for i in range(1, a.rank + 1) if i not in tlist)
            # iota_{theta_w} Omega = sign * dlog_tlist, so invert by dividing
            sign = _perm_sign_partition(w, a.rank)
            key = (exp, w)
            terms[key] = terms.get(key, Fraction(0)) + coeff / sign
        degree_sign = 1 if (k + 1) % 2 == 0 else -1
        result = result + PolyVector._raw(a.rank, terms).scale(degree_sign)
    return result


def gerstenhaber_bracket(a: PolyVector, b: PolyVector) -> PolyVector:
    """[a, b] = Delta(a b) - Delta(a) b - (-1)^|a| a Delta(b), extended
    bilinearly over homogeneous cohomological parts."""
    a._check_rank(b)
    degs_a = a.degrees()
    degs_b = b.degrees()
    result = PolyVector.zero(a.rank)
    for ka in degs_a:
        pa = a if len(degs_a) == 1 else a.degree_part(ka)
        sign_a = -1 if ka % 2 else 1
        for kb in degs_b:
            pb = b if len(degs_b) == 1 else b.degree_part(kb)
            prod = wedge(pa, pb)
            term = bv_delta(prod) - wedge(bv_delta(pa), pb) - wedge(pa, bv_delta(pb)).scale(sign_a)
            result = result + term
    return result
