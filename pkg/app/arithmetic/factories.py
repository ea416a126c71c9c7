from fractions import Fraction

import factory
from factory.random import randgen

from app.arithmetic.forms import GramForm

A2_ENTRIES = ((2, 1), (1, 2))


def perturb_entries(entries, amplitude: Fraction, steps: int):
    """
    Adds a random symmetric rational perturbation of size at most
    `amplitude` to every entry, on a grid of `steps` levels per unit
    amplitude
    """
    n = len(entries)
    result = [[Fraction(x) for x in row] for row in entries]
    for i in range(n):
        for j in range(i, n):
            delta = amplitude * Fraction(randgen.randint(-steps, steps), steps)
            result[i][j] += delta
            if i != j:
                result[j][i] += delta
    return tuple(tuple(row) for row in result)


class GramFormFactory(factory.Factory):
    class Meta:
        model = GramForm

    entries = A2_ENTRIES


class PerturbedGramFormFactory(GramFormFactory):
    class Params:
        base = A2_ENTRIES
        amplitude = Fraction(1, 8)
        steps = 8

    entries = factory.LazyAttribute(
        lambda o: perturb_entries(o.base, o.amplitude, o.steps)
    )
