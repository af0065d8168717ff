"""Exact multivariate Laurent polynomials over the rationals.

A polynomial of rank r is a finitely supported map from exponent vectors
in Z^r to nonzero Fractions.  All arithmetic is exact; no zero coefficient
is ever stored, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction


class RankMismatchError(ValueError):
    """Raised when combining elements of different ambient rank."""


class NotInvertibleError(ValueError):
    """Raised when inverting anything other than a single nonzero monomial."""


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPoly:
    """Sparse Laurent polynomial K[z1^±1, ..., zr^±1] with K = Q.

    Terms are stored as {exponent tuple: Fraction}, keys sorted
    lexicographically for deterministic iteration and printing.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != rank:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {rank}")
            coeff = _as_fraction(coeff)
            if coeff:
                clean[exp] = clean.get(exp, Fraction(0)) + coeff
        self.rank = rank
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.monomial(rank, (0,) * rank)

    @classmethod
    def monomial(cls, rank: int, exp, coeff=1) -> "LaurentPoly":
        return cls(rank, {tuple(exp): _as_fraction(coeff)})

    @classmethod
    def variable(cls, rank: int, i: int) -> "LaurentPoly":
        """The coordinate z_i, with 1 <= i <= rank."""
        if not 1 <= i <= rank:
            raise ValueError(f"variable index {i} out of range for rank {rank}")
        exp = [0] * rank
        exp[i - 1] = 1
        return cls.monomial(rank, exp)

    # -- ring structure --------------------------------------------------

    def _check_rank(self, other: "LaurentPoly") -> None:
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_rank(other)
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coeff
        return LaurentPoly(self.rank, terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_rank(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.rank, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        return LaurentPoly(self.rank, {e: c * v for e, v in self.terms.items()})

    def invert_monomial(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial c*z^n, namely (1/c)*z^-n."""
        if len(self.terms) != 1:
            raise NotInvertibleError(
                f"only monomials are invertible in the Laurent ring; got {len(self.terms)} terms"
            )
        (exp, coeff), = self.terms.items()
        return LaurentPoly.monomial(self.rank, tuple(-e for e in exp), Fraction(1) / coeff)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def support(self):
        return sorted(self.terms)

    def homogeneous_class(self):
        """The common H1-grading of all terms, or None if mixed or zero."""
        classes = set(self.terms)
        if len(classes) == 1:
            return next(iter(classes))
        return None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly(rank={self.rank}, {format_laurent(self)!r})"

    def to_json(self):
        return [
            {"coeff": str(self.terms[e]), "exp": list(e)}
            for e in sorted(self.terms)
        ]

    @classmethod
    def from_json(cls, rank: int, data) -> "LaurentPoly":
        return cls(rank, {tuple(d["exp"]): Fraction(d["coeff"]) for d in data})


def _format_coeff(c: Fraction, factors: list) -> str:
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return "*".join([str(c)] + factors)


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text form: lexicographically ordered `+`-joined terms
    like `3/2*z1^-2*z2^3`; the zero polynomial prints as `0`."""
    if p.is_zero():
        return "0"
    parts = []
    for exp in sorted(p.terms):
        factors = [f"z{i + 1}^{e}" for i, e in enumerate(exp) if e != 0]
        parts.append(_format_coeff(p.terms[exp], factors))
    out = parts[0]
    for part in parts[1:]:
        out += part if part.startswith("-") else "+" + part
    return out
