from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from app.arithmetic.exceptions import DimensionMismatchError, PreconditionError
from app.arithmetic.forms import GramForm, IntVector
from app.arithmetic.linalg import Matrix, dot, outer, solve
from app.arithmetic.rationals import format_rational, is_primitive


def check_functional(k: Sequence[int], n: int | None = None) -> IntVector:
    """
    Validates a lamina functional: nonzero, integral and primitive, with n
    coordinates when n is given
    """
    k = tuple(k)
    if n is not None and len(k) != n:
        raise DimensionMismatchError(
            f"Functional {k} has {len(k)} coordinates, expected {n}."
        )
    if not all(isinstance(x, int) for x in k):
        raise PreconditionError(f"Functional {k} must have integer coordinates.")
    if not is_primitive(k):
        raise PreconditionError(f"Functional {k} is not primitive.")
    return k


def alpha_squared(form: GramForm, k: Sequence[int]) -> Fraction:
    """
    α² = 1 / (kᵀQ⁻¹k). With e = α·Q⁻¹k the unit normal of the hyperplane
    k·x = 0, every lattice vector v satisfies (e, v) = α·(k·v).
    """
    if not any(k):
        raise PreconditionError("Functional must be nonzero.")
    return 1 / dot(k, solve(form.entries, k))


@dataclass(frozen=True)
class Rank1Form:
    k: IntVector
    alpha_sq: Fraction

    @cached_property
    def matrix(self) -> Matrix:
        return tuple(
            tuple(self.alpha_sq * x for x in row) for row in outer(self.k, self.k)
        )

    def evaluate(self, x: Sequence) -> Fraction:
        return self.alpha_sq * dot(self.k, x) ** 2

    def as_dict(self) -> dict:
        return {
            "k": list(self.k),
            "alphaSq": format_rational(self.alpha_sq),
            "matrix": [[format_rational(x) for x in row] for row in self.matrix],
        }


def rank1_form(form: GramForm, k: Sequence[int]) -> Rank1Form:
    k = check_functional(k, form.n)
    return Rank1Form(k=k, alpha_sq=alpha_squared(form, k))


@dataclass(frozen=True)
class ExtensionParams:
    """
    Stretch of the lattice along the unit normal e: v ↦ v + ε(e, v)e, which
    changes every norm by λ(e, v)² with λ = ε(2 + ε). Built from λ alone
    when ε is not rational.
    """

    lam: Fraction
    epsilon: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.epsilon is not None:
            object.__setattr__(self, "epsilon", Fraction(self.epsilon))
            if self.epsilon <= -1:
                raise PreconditionError(
                    f"ε = {format_rational(self.epsilon)} must exceed −1."
                )
            if self.lam != self.epsilon * (2 + self.epsilon):
                raise PreconditionError("λ must equal ε(2 + ε).")
        if self.lam <= -1:
            raise PreconditionError(
                f"λ = {format_rational(self.lam)} collapses the lattice."
            )

    @classmethod
    def from_epsilon(cls, epsilon: Fraction | int) -> "ExtensionParams":
        epsilon = Fraction(epsilon)
        return cls(lam=epsilon * (2 + epsilon), epsilon=epsilon)


def extend_form(
    form: GramForm, k: Sequence[int], lam: Fraction | int
) -> GramForm:
    """
    Q + λ·α²kkᵀ, the Gram matrix of the lattice extended along the normal of
    k·x = 0. Raises NotPositiveDefiniteError when λ ≤ −1.
    """
    lam = Fraction(lam)
    if lam == 0:
        return form
    update = rank1_form(form, k).matrix
    return GramForm(
        entries=tuple(
            tuple(a + lam * b for a, b in zip(row, update_row))
            for row, update_row in zip(form.entries, update)
        )
    )
