"""Shared fixtures: small alphabets and the bracket structures used throughout."""

import pytest
from fractions import Fraction

from gebra.words import Alphabet
from gebra.binfty import BInftyStructure


def saturating_mult(alphabet, cap):
    """xi * xj = x_min(i+j, cap) on letters x1..x_cap."""
    table = {}
    for i in range(1, cap + 1):
        for j in range(1, cap + 1):
            table[(f"x{i}", f"x{j}")] = f"x{min(i + j, cap)}"
    return table


@pytest.fixture(scope="session")
def alph3():
    return Alphabet("x1:1, x2:2, x3:3")


@pytest.fixture(scope="session")
def qs3(alph3):
    """Quasi-shuffle over the saturating 3-letter commutative semigroup."""
    return BInftyStructure.quasi_shuffle(alph3, saturating_mult(alph3, 3))


@pytest.fixture(scope="session")
def sh3(alph3):
    return BInftyStructure.shuffle(alph3)


@pytest.fixture(scope="session")
def alph8():
    return Alphabet(",".join(f"x{i}:{i}" for i in range(1, 9)))


@pytest.fixture(scope="session")
def qs8(alph8):
    return BInftyStructure.quasi_shuffle(alph8, saturating_mult(alph8, 8))


@pytest.fixture(scope="session")
def flalg():
    """Two letters a (degree 1) and b (degree 2), bracket <a,a> = 2b.

    The bound is generous so products of words of total length 5 stay legal.
    """
    alphabet = Alphabet("a:1, b:2")
    a = alphabet.word("a")
    b = alphabet.letter(1)
    from gebra.exactlin import LinComb

    table = {(a, a): LinComb.single(b, Fraction(2))}
    return BInftyStructure.explicit(alphabet, table, bound=6)
