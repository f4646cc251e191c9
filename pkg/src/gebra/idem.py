"""Canonical idempotents and the isomorphisms onto the shuffle algebra.

For a commutative B-infinity structure the canonical idempotent e acts on a
word by the alternating sum over its block decompositions of the induced
products of the blocks; composing with the projection onto V gives the
canonical tangent-to-identity map varpi.  Lifting varpi through the cofree
coalgebra yields a Hopf isomorphism omega onto the shuffle algebra, whose
inverse zeta admits both a direct recursion and the generic inverse of the
coalgebra endomorphism.  For quasi-shuffle structures both specialize to
Hoffman's logarithm and exponential in closed form.
"""

from __future__ import annotations

from .exactlin import Fraction, InputError, LinComb
from .words import (
    alphabet_of,
    as_tensor,
    block_decompositions,
    cofree_lift,
    concat_expand,
    structure_endo,
)
from .binfty import QUASI_SHUFFLE, BInftyStructure, induced_product


def _letter_part(x):
    return LinComb({u: c for u, c in x.terms.items() if len(u) == 1})


def eulerian_idempotent(B, x):
    """The canonical idempotent e of the induced Hopf product.

    On a word of length n it is the sum over k = 1..n and over all
    decompositions into k nonempty blocks of (-1)^(k-1)/k times the induced
    product of the blocks.  It kills the unit word and fixes letters.
    """
    x = as_tensor(x)
    out = LinComb.zero()
    for w, c in x.terms.items():
        n = len(w)
        for k in range(1, n + 1):
            coeff = c * Fraction((-1) ** (k - 1), k)
            for blocks in block_decompositions(w, k):
                prod = LinComb.single(blocks[0])
                for b in blocks[1:]:
                    prod = induced_product(B, prod, b)
                out = out + coeff * prod
    return out


def varpi(B, x):
    """The canonical B-infinity idempotent: the projection of e onto V.

    Evaluates as the alternating sum of brackets <w1, w2 * ... * wk> over
    block decompositions; the one-block term is the projection onto V.
    """
    x = as_tensor(x)
    out = LinComb.zero()
    for w, c in x.terms.items():
        n = len(w)
        if n == 1:
            out = out + LinComb.single(w, c)
            continue
        for k in range(2, n + 1):
            coeff = c * Fraction((-1) ** (k - 1), k)
            for blocks in block_decompositions(w, k):
                tail = LinComb.single(blocks[1])
                for b in blocks[2:]:
                    tail = induced_product(B, tail, b)
                out = out + coeff * B.bracket_elem(blocks[0], tail)
    return out


class TangentEndo:
    """Extensional presentation of a tangent-to-identity endomorphism.

    A finite table on nonempty words up to a length bound; evaluation kills
    the unit word, and a word past the table is an error.  verify() checks
    the defining properties against a structure's product: letters are
    fixed and every product of two nonempty words is sent to zero.
    """

    __slots__ = ("alphabet", "table", "bound")

    def __init__(self, alphabet, table, bound):
        self.alphabet = alphabet
        self.bound = int(bound)
        clean = {}
        for w, val in table.items():
            clean[w] = as_tensor(val) if val else LinComb.zero()
        self.table = clean

    @classmethod
    def from_function(cls, alphabet, fn, bound):
        table = {w: fn(w) for w in alphabet.words(bound, minlen=1)}
        return cls(alphabet, table, bound)

    def __call__(self, w):
        if w.is_empty():
            return LinComb.zero()
        try:
            return self.table[w]
        except KeyError:
            raise InputError(f"partial map: no value for {w}") from None

    def verify(self, B):
        """Bounded check of the tangent-to-identity properties."""
        alphabet = self.alphabet
        for i in range(len(alphabet)):
            v = alphabet.letter(i)
            if self(v) != LinComb.single(v):
                return False
        for w in alphabet.words(self.bound - 1, minlen=1):
            for w2 in alphabet.words(self.bound - len(w), minlen=1):
                img = induced_product(B, w, w2).apply(self)
                if img:
                    return False
        return True


def eulerian_tangent(B, bound):
    """The canonical idempotent packaged as a verified table up to bound."""
    return TangentEndo.from_function(
        B.alphabet, lambda w: eulerian_idempotent(B, w), bound
    )


def omega_tilde(B, x, endo=None):
    """Hopf isomorphism from the induced product onto the shuffle product.

    Built as the coalgebra endomorphism of the projection pi_V composed with
    a tangent-to-identity endomorphism; the default endomorphism is the
    canonical idempotent, whose projection is varpi.  A supplied
    endomorphism is verified first.
    """
    x = as_tensor(x)
    if not x:
        return x
    if endo is None:
        pi = lambda w: varpi(B, w)
    else:
        if not endo.verify(B):
            raise InputError("not tangent to identity")
        pi = lambda w: _letter_part(endo(w))
    return structure_endo(pi, x)


def zeta_tilde(B, x):
    """Inverse of the canonical omega_tilde, via the zeta recursion.

    zeta fixes letters and, on longer words, is minus the sum over proper
    block decompositions of varpi applied to the word of zeta images; its
    lift through the cofree coalgebra inverts omega_tilde.
    """
    x = as_tensor(x)
    if not x:
        return x
    alph = alphabet_of(x)
    memo = {}

    def zeta(w):
        hit = memo.get(w)
        if hit is not None:
            return hit
        n = len(w)
        if n == 0:
            raise InputError("partial map: no value for the unit word")
        if n == 1:
            val = LinComb.single(w)
        else:
            total = LinComb.zero()
            for k in range(2, n + 1):
                for blocks in block_decompositions(w, k):
                    img = concat_expand([zeta(b) for b in blocks], alph)
                    total = total + varpi(B, img)
            val = -total
        memo[w] = val
        return val

    return cofree_lift(zeta, x)


def _fold_mult(B_or_mult, w):
    if isinstance(B_or_mult, BInftyStructure):
        if B_or_mult.mode != QUASI_SHUFFLE:
            raise InputError("Hoffman closed forms need a quasi_shuffle structure")
        mult = B_or_mult.mult
    else:
        mult = B_or_mult
    names = w.names
    acc = names[0]
    for name in names[1:]:
        try:
            acc = mult[(acc, name)]
        except KeyError:
            raise InputError(f"multiplication table is missing {acc} * {name}") from None
    return LinComb.single(w.alphabet.letter(w.alphabet.index(acc)))


def hoffman_log(mult, w):
    """Closed form of varpi for a quasi-shuffle: (-1)^(n-1)/n v1...vn."""
    n = len(w)
    if n == 0:
        return LinComb.zero()
    return Fraction((-1) ** (n - 1), n) * _fold_mult(mult, w)


def hoffman_exp(mult, w):
    """Closed form of zeta for a quasi-shuffle: 1/n! v1...vn."""
    n = len(w)
    if n == 0:
        return LinComb.zero()
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return Fraction(1, fact) * _fold_mult(mult, w)
