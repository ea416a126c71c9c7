from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from app.arithmetic.exceptions import (
    DimensionMismatchError,
    NonSymmetricMatrixError,
    NotPositiveDefiniteError,
    SingularSystemError,
)
from app.arithmetic.linalg import (
    Matrix,
    Vector,
    dot,
    leading_minors,
    mat_vec,
    solve,
    subtract,
    to_matrix,
    transpose,
)
from app.arithmetic.rationals import format_rational

IntVector = tuple[int, ...]


def is_symmetric(matrix: Sequence[Sequence]) -> bool:
    n = len(matrix)
    return all(
        matrix[i][j] == matrix[j][i] for i in range(n) for j in range(i + 1, n)
    )


def is_positive_definite(matrix: Sequence[Sequence]) -> bool:
    """
    Sylvester's criterion: every leading principal minor is positive
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise DimensionMismatchError("Expected a non-empty square matrix.")
    if not is_symmetric(matrix):
        raise NonSymmetricMatrixError("Matrix is not symmetric.")

    minors = leading_minors(matrix)
    return len(minors) == n and all(minor > 0 for minor in minors)


@dataclass(frozen=True)
class GramForm:
    """
    A positive definite quadratic form, i.e. the Gram matrix of a lattice
    basis. Entries are exact rationals.
    """

    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", to_matrix(self.entries))
        if not is_positive_definite(self.entries):
            raise NotPositiveDefiniteError(
                "Gram matrix is not positive definite."
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Fraction | int]]) -> "GramForm":
        return cls(entries=to_matrix(rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def scaled(self, factor: Fraction | int) -> "GramForm":
        return GramForm(
            entries=tuple(
                tuple(x * factor for x in row) for row in self.entries
            )
        )

    def text_rows(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.entries]

    def __str__(self):
        return str(self.text_rows())


def _check_dimension(form: GramForm, *vectors: Sequence):
    for vector in vectors:
        if len(vector) != form.n:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} used with a form of dimension {form.n}."
            )


def eval_form(form: GramForm, z: Sequence) -> Fraction:
    """
    zᵀQz
    """
    _check_dimension(form, z)
    return dot(z, mat_vec(form.entries, z))


def inner_q(form: GramForm, u: Sequence, v: Sequence) -> Fraction:
    """
    uᵀQv, the scalar product the form induces
    """
    _check_dimension(form, u, v)
    return dot(u, mat_vec(form.entries, v))


def basis_coordinates(vectors: Sequence[Sequence], u: Sequence) -> Vector:
    """
    Coefficients z with u = Σ zᵢvᵢ
    """
    if len(vectors) != len(u):
        raise DimensionMismatchError(
            f"Need {len(u)} basis vectors, got {len(vectors)}."
        )
    try:
        return solve(transpose(vectors), u)
    except SingularSystemError:
        raise SingularSystemError(
            "Basis vectors are linearly dependent."
        ) from None


def circumcenter(
    form: GramForm, vectors: Sequence[Sequence]
) -> tuple[Vector, Fraction]:
    """
    Center c and squared radius r² of the sphere through 0 and the endpoints
    of n independent vectors: c solves 2·vᵢᵀQc = vᵢᵀQvᵢ, and r² = cᵀQc.
    """
    if len(vectors) != form.n:
        raise DimensionMismatchError(
            f"Need {form.n} vectors for a circumsphere, got {len(vectors)}."
        )
    _check_dimension(form, *vectors)

    rows = [tuple(2 * x for x in mat_vec(form.entries, v)) for v in vectors]
    try:
        center = solve(rows, [eval_form(form, v) for v in vectors])
    except SingularSystemError:
        raise SingularSystemError(
            "Circumcenter undefined: vectors are linearly dependent."
        ) from None
    return center, eval_form(form, center)


def empty_margin(
    form: GramForm, vectors: Sequence[Sequence], u: Sequence
) -> Fraction:
    """
    u² − Σ zᵢvᵢ² where u = Σ zᵢvᵢ. Positive when u ends strictly outside the
    sphere through 0 and the vᵢ, zero on it, negative strictly inside.
    """
    _check_dimension(form, u, *vectors)
    z = basis_coordinates(vectors, u)
    return eval_form(form, u) - sum(
        (zi * eval_form(form, v) for zi, v in zip(z, vectors)), Fraction(0)
    )


def sphere_excess(
    form: GramForm, center: Sequence, radius_sq: Fraction, u: Sequence
) -> Fraction:
    """
    Q(u − c) − r², the direct distance comparison against a sphere
    """
    return eval_form(form, subtract(u, center)) - radius_sq
