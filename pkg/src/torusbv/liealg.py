"""Lie theory on degree-1 polyvector fields: the Witt algebra of the torus,
its Cartan subalgebra, the embedding of sl_{r+1} by restriction of vector
fields from projective space, and the type-A root grading.
"""

from __future__ import annotations

from fractions import Fraction

from .bvalgebra import PolyVector, gerstenhaber_bracket
from .laurent import _as_fraction


def _require_vector_field(pv: PolyVector, what: str = "argument") -> None:
    if pv.degree() not in (0, 1) or (pv.terms and pv.degree() != 1):
        raise ValueError(f"{what} must be a pure degree-1 polyvector field")


def witt_bracket(x: PolyVector, y: PolyVector) -> PolyVector:
    """Lie bracket of vector fields, via the Gerstenhaber bracket."""
    _require_vector_field(x, "left argument")
    _require_vector_field(y, "right argument")
    return gerstenhaber_bracket(x, y)


class Sl2Triple:
    """An (e, h, f) triple; the defining relations are checked on construction."""

    def __init__(self, e: PolyVector, h: PolyVector, f: PolyVector):
        if witt_bracket(h, e) != e.scale(2):
            raise ValueError("[h, e] != 2e")
        if witt_bracket(h, f) != f.scale(-2):
            raise ValueError("[h, f] != -2f")
        if witt_bracket(e, f) != h:
            raise ValueError("[e, f] != h")
        self.e = e
        self.h = h
        self.f = f


def standard_sl2() -> Sl2Triple:
    """The rank-1 triple e = xi_1, h = 2 xi_0, f = -xi_{-1}."""
    return Sl2Triple(
        PolyVector.xi(1, (1,), 1),
        PolyVector.xi(1, (0,), 1).scale(2),
        PolyVector.xi(1, (-1,), 1).scale(-1),
    )


def cartan_subalgebra(rank: int):
    """The abelian subalgebra [theta_1, ..., theta_r]."""
    return [PolyVector.theta(rank, i) for i in range(1, rank + 1)]


class GlMatrixElement:
    """A rational (r+1) x (r+1) matrix acting as the linear vector field
    sum_ij m[i][j] Z_i D_j on the ambient affine space of P^r."""

    def __init__(self, entries):
        entries = [[_as_fraction(v) for v in row] for row in entries]
        size = len(entries)
        if any(len(row) != size for row in entries):
            raise ValueError("matrix must be square")
        if size < 2:
            raise ValueError("matrix must be at least 2x2 (rank r >= 1)")
        self.size = size
        self.entries = entries

    @classmethod
    def elementary(cls, size: int, i: int, j: int) -> "GlMatrixElement":
        """E_ij = Z_i D_j with 0-based indices i, j in {0, ..., size-1}."""
        entries = [[Fraction(0)] * size for _ in range(size)]
        entries[i][j] = Fraction(1)
        return cls(entries)

    def commutator(self, other: "GlMatrixElement") -> "GlMatrixElement":
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        a, b = self.entries, other.entries
        ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        ba = [[sum(b[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return GlMatrixElement([[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)])

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(self.size))


def _restrict_entry(rank: int, i: int, j: int) -> PolyVector:
    """Image of Z_i D_j on the torus chart, with d_j encoded as z_j^{-1} theta_j."""
    zero = (0,) * rank
    if i != 0 and j != 0:
        # z_i d_j = z_i z_j^{-1} theta_j
        exp = list(zero)
        exp[i - 1] += 1
        exp[j - 1] -= 1
        return PolyVector.xi(rank, exp, j)
    if i == 0 and j != 0:
        # d_j = z_j^{-1} theta_j
        exp = list(zero)
        exp[j - 1] -= 1
        return PolyVector.xi(rank, exp, j)
    if i != 0 and j == 0:
        # -z_i sum_k z_k d_k = -z_i sum_k theta_k
        exp = list(zero)
        exp[i - 1] += 1
        out = PolyVector.zero(rank)
        for k in range(1, rank + 1):
            out = out - PolyVector.xi(rank, exp, k)
        return out
    # Z_0 D_0 -> -sum_k theta_k
    out = PolyVector.zero(rank)
    for k in range(1, rank + 1):
        out = out - PolyVector.theta(rank, k)
    return out


def restrict_from_projective(m: GlMatrixElement) -> PolyVector:
    """Restriction of the linear vector field sum m_ij Z_i D_j from P^r to the
    open torus, written in the theta presentation.  Kernel = scalar matrices."""
    rank = m.size - 1
    out = PolyVector.zero(rank)
    for i in range(m.size):
        for j in range(m.size):
            c = m.entries[i][j]
            if c:
                out = out + _restrict_entry(rank, i, j).scale(c)
    return out


class RootVector:
    """A root in both coordinate systems: Z^{r+1} (sum-zero, e_a - e_b form)
    and the H1 = Z^r coordinates, related by z_i <-> e_i - e_0."""

    def __init__(self, h1_coords):
        self.h1_coords = tuple(int(v) for v in h1_coords)
        self.ambient = (-sum(self.h1_coords),) + self.h1_coords

    @classmethod
    def from_ambient(cls, coords) -> "RootVector":
        coords = tuple(int(v) for v in coords)
        if sum(coords) != 0:
            raise ValueError("ambient coordinates must sum to zero")
        return cls(coords[1:])

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.h1_coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, RootVector) and self.h1_coords == other.h1_coords

    def __hash__(self):
        return hash(self.h1_coords)

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.h1_coords, other.h1_coords)))

    def __repr__(self):
        return f"RootVector(h1={self.h1_coords}, ambient={self.ambient})"


def root_grading(x: PolyVector) -> RootVector:
    """H1-class of a homogeneous vector field, in root coordinates.
    Cartan elements (class 0) map to the zero vector."""
    if x.is_zero():
        return RootVector((0,) * x.rank)
    cls = x.homogeneous_class()
    if cls is None:
        raise ValueError("input is not homogeneous in the H1 grading")
    return RootVector(cls)


def ar_root_system(rank: int):
    """All e_a - e_b with a != b, 0 <= a, b <= rank, in ambient coordinates."""
    roots = set()
    for a in range(rank + 1):
        for b in range(rank + 1):
            if a == b:
                continue
            coords = [0] * (rank + 1)
            coords[a] += 1
            coords[b] -= 1
            roots.add(RootVector.from_ambient(coords))
    return roots


def _matrix_rank(rows) -> int:
    """Rank of a list of Fraction row vectors by Gaussian elimination."""
    rows = [list(row) for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / pv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _polyvector_coordinates(vectors):
    """Coordinate rows of PolyVectors in their joint term basis."""
    keys = sorted({k for v in vectors for k in v.terms})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in v.terms.items():
            row[index[k]] = c
        rows.append(row)
    return rows


def verify_lie_embedding(rank: int) -> dict:
    """Check that restriction from P^r is a Lie homomorphism on all gl_{r+1}
    basis pairs, that scalars die, and that the image has dimension
    (r+1)^2 - 1.  Returns a report dict; rank capped at 3."""
    if rank not in (1, 2, 3):
        raise ValueError("verify_lie_embedding supports rank 1, 2, 3 only")
    size = rank + 1
    basis = [
        (i, j, GlMatrixElement.elementary(size, i, j))
        for i in range(size)
        for j in range(size)
    ]
    images = {(i, j): restrict_from_projective(m) for i, j, m in basis}
    pairs = []
    all_ok = True
    for i1, j1, m1 in basis:
        for i2, j2, m2 in basis:
            lhs = restrict_from_projective(m1.commutator(m2))
            rhs = witt_bracket(images[(i1, j1)], images[(i2, j2)])
            ok = lhs == rhs
            all_ok = all_ok and ok
            pairs.append({"pair": [[i1, j1], [i2, j2]], "ok": ok})
    image_rank = _matrix_rank(_polyvector_coordinates(list(images.values())))
    identity = GlMatrixElement([[Fraction(1 if i == j else 0) for j in range(size)] for i in range(size)])
    scalar_killed = restrict_from_projective(identity).is_zero()
    expected_dim = size * size - 1
    return {
        "rank": rank,
        "homomorphism_ok": all_ok,
        "pairs": pairs,
        "image_dimension": image_rank,
        "expected_dimension": expected_dim,
        "scalars_killed": scalar_killed,
        "injective_on_sl": image_rank == expected_dim,
    }


def root_system_report(rank: int) -> dict:
    """Sweep the sl_{r+1} basis image through root_grading and compare with
    the abstract type-A root set."""
    if rank not in (1, 2, 3):
        raise ValueError("root report supports rank 1, 2, 3 only")
    size = rank + 1
    found = {}
    cartan = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            image = restrict_from_projective(GlMatrixElement.elementary(size, i, j))
            found[(i, j)] = root_grading(image)
    for theta in cartan_subalgebra(rank):
        cartan.append(root_grading(theta))
    expected = ar_root_system(rank)
    roots = set(found.values())
    return {
        "rank": rank,
        "roots": sorted(r.ambient for r in roots),
        "root_count": len(roots),
        "matches_type_a": roots == expected,
        "cartan_dim": rank,
        "cartan_at_zero": all(r.is_zero() for r in cartan),
        "origins": {f"E{i}{j}": list(v.ambient) for (i, j), v in sorted(found.items())},
    }
