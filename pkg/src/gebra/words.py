"""Words over a degree-carrying alphabet and the tensor coalgebra on them.

A word v1...vn is a basis tensor of T(V) and the coproduct is
deconcatenation.  This module provides the iterated reduced coproducts, the
coradical filtration degree, the cofree universal lift, and the coalgebra
endomorphism attached to a projection table together with its inverse.

Text grammar: letters are identifiers joined by ".", the empty word is "1",
an alphabet is declared as "a:1,b:2" (name:degree), and a linear combination
reads like "3/2*a.b + -1*c".
"""

from __future__ import annotations

import re
from itertools import combinations, product

from .exactlin import Fraction, InputError, LinComb

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class Alphabet:
    """Ordered list of distinct letters, each carrying a degree >= 1."""

    __slots__ = ("letters", "degrees", "_index")

    def __init__(self, spec):
        if isinstance(spec, str):
            entries = []
            for chunk in spec.split(","):
                chunk = chunk.strip()
                if not chunk:
                    continue
                if ":" in chunk:
                    name, _, deg = chunk.partition(":")
                    entries.append((name.strip(), deg.strip()))
                else:
                    entries.append((chunk, 1))
        else:
            entries = []
            for item in spec:
                if isinstance(item, str):
                    entries.append((item, 1))
                else:
                    name, deg = item
                    entries.append((name, deg))
        letters = []
        degrees = []
        for name, deg in entries:
            if not _IDENT.match(name):
                raise InputError(f"bad letter name {name!r}")
            try:
                deg = int(deg)
            except (TypeError, ValueError):
                raise InputError(f"bad degree {deg!r} for letter {name!r}") from None
            if deg < 1:
                raise InputError(f"degree of letter {name!r} must be >= 1")
            letters.append(name)
            degrees.append(deg)
        if len(set(letters)) != len(letters):
            raise InputError("duplicate letter names")
        if not letters:
            raise InputError("empty alphabet")
        self.letters = tuple(letters)
        self.degrees = tuple(degrees)
        self._index = {name: i for i, name in enumerate(letters)}

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown letter {name!r}") from None

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.letters == other.letters and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.letters, self.degrees))

    def empty_word(self):
        return Word(self, ())

    def letter(self, i):
        """The length-1 word on the i-th letter."""
        return Word(self, (i,))

    def word(self, text):
        return parse_word(text, self)

    def words(self, maxlen, minlen=0):
        """All words of length minlen..maxlen in length-lexicographic order."""
        for n in range(minlen, maxlen + 1):
            for idx in product(range(len(self.letters)), repeat=n):
                yield Word(self, idx)

    def __str__(self):
        return ",".join(f"{l}:{d}" for l, d in zip(self.letters, self.degrees))

    def __repr__(self):
        return f"Alphabet({str(self)!r})"


class Word:
    """A finite sequence of alphabet letters; the empty word is the unit."""

    __slots__ = ("alphabet", "idx")

    def __init__(self, alphabet, idx):
        idx = tuple(idx)
        for i in idx:
            if not 0 <= i < len(alphabet.letters):
                raise InputError(f"letter index {i} out of range")
        self.alphabet = alphabet
        self.idx = idx

    def __len__(self):
        return len(self.idx)

    @property
    def degree(self):
        return sum(self.alphabet.degrees[i] for i in self.idx)

    @property
    def names(self):
        return tuple(self.alphabet.letters[i] for i in self.idx)

    def is_empty(self):
        return not self.idx

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.idx == other.idx and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.idx)

    def __lt__(self, other):
        # Length-lexicographic by letter index: deterministic term order.
        return (len(self.idx), self.idx) < (len(other.idx), other.idx)

    def __le__(self, other):
        return self == other or self < other

    def __mul__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise InputError("cannot concatenate words over different alphabets")
        return Word(self.alphabet, self.idx + other.idx)

    def __getitem__(self, sl):
        if not isinstance(sl, slice):
            raise TypeError("words only support slicing")
        return Word(self.alphabet, self.idx[sl])

    def __str__(self):
        if not self.idx:
            return "1"
        return ".".join(self.alphabet.letters[i] for i in self.idx)

    def __repr__(self):
        return f"Word({str(self)!r})"


def concat(w, w2):
    """Concatenation; the product of the free associative algebra."""
    return w * w2


def parse_word(text, alphabet):
    text = text.strip()
    if text == "1":
        return alphabet.empty_word()
    if not text:
        raise InputError("empty word text (write the unit word as \"1\")")
    idx = tuple(alphabet.index(part.strip()) for part in text.split("."))
    return Word(alphabet, idx)


def parse_tensor(text, alphabet):
    """Parse "3/2*a.b + -1*c" into a linear combination of words."""
    from .exactlin import parse_scalar

    out = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise InputError(f"empty term in {text!r}")
        if "*" in chunk:
            coeff_text, _, word_text = chunk.partition("*")
            coeff = parse_scalar(coeff_text)
            w = parse_word(word_text, alphabet)
        else:
            # A bare word, or a bare scalar standing on the unit word.
            try:
                w = parse_word(chunk, alphabet)
                coeff = Fraction(1)
            except InputError:
                coeff = parse_scalar(chunk)
                w = alphabet.empty_word()
        out[w] = out.get(w, Fraction(0)) + coeff
    return LinComb(out)


def format_tensor(x):
    from .exactlin import format_terms

    return format_terms(x)


def as_tensor(x):
    if isinstance(x, Word):
        return LinComb.single(x)
    if isinstance(x, LinComb):
        return x
    raise InputError(f"expected a word or a combination of words, got {x!r}")


def alphabet_of(x):
    for w in x.terms:
        return w.alphabet
    raise InputError("cannot infer the alphabet of the zero element")


def _cuts(n, k):
    """Cut position tuples splitting [1..n] into k nonempty contiguous blocks."""
    return combinations(range(1, n), k - 1)


def _blocks(w, cuts):
    bounds = (0,) + cuts + (len(w),)
    return tuple(w[bounds[i]:bounds[i + 1]] for i in range(len(bounds) - 1))


def block_decompositions(w, k):
    """All ways to write w as a concatenation of k nonempty blocks."""
    n = len(w)
    if k < 1 or k > n:
        return
    for cuts in _cuts(n, k):
        yield _blocks(w, cuts)


def deconcat(w):
    """Deconcatenation coproduct of a single word, empty blocks included."""
    out = {}
    for i in range(len(w) + 1):
        key = (w[:i], w[i:])
        out[key] = out.get(key, 0) + 1
    return LinComb(out)


def _check_reduced(x):
    for w in x.terms:
        if w.is_empty():
            raise InputError("not augmentation-reduced: unit word present")


def reduced_coproduct_iter(x, k):
    """Iterated reduced coproduct: split each word into k nonempty blocks.

    Returns a combination keyed by k-tuples of words; it vanishes on words of
    length < k.  k = 1 is allowed and is the identity (keys are 1-tuples).
    """
    x = as_tensor(x)
    if k < 1:
        raise InputError("the iterated coproduct needs k >= 1")
    _check_reduced(x)
    out = {}
    for w, c in x.terms.items():
        if len(w) < k:
            continue
        for blocks in block_decompositions(w, k):
            out[blocks] = out.get(blocks, 0) + c
    return LinComb(out)


def coradical_degree(x):
    """Least n with the (n+1)-fold reduced coproduct vanishing.

    On the tensor coalgebra this is the maximal word length in the support.
    """
    x = as_tensor(x)
    if not x:
        raise InputError("the zero element has no coradical degree")
    _check_reduced(x)
    return max(len(w) for w in x.terms)


class LetterMap:
    """Finite presentation of a linear map from words to letters.

    The table sends words to combinations of single letters; a word missing
    from the table is an error ("partial map").  With identity_on_letters
    set, absent single letters fall back to themselves, the usual convention
    for projections restricting to the identity on V.
    """

    __slots__ = ("alphabet", "table", "identity_on_letters")

    def __init__(self, alphabet, table=None, identity_on_letters=False):
        self.alphabet = alphabet
        self.identity_on_letters = identity_on_letters
        clean = {}
        if table:
            for w, val in table.items():
                if isinstance(val, Word):
                    val = LinComb.single(val)
                elif not isinstance(val, LinComb):
                    val = LinComb(val) if val else LinComb.zero()
                for u in val.terms:
                    if len(u) != 1:
                        raise InputError(
                            f"letter map value for {w} contains the non-letter {u}"
                        )
                clean[w] = val
        self.table = clean

    def __call__(self, w):
        try:
            return self.table[w]
        except KeyError:
            pass
        if self.identity_on_letters and len(w) == 1:
            return LinComb.single(w)
        raise InputError(f"partial map: no value for {w}")


def _as_callable(phi):
    if isinstance(phi, LetterMap):
        return phi
    if isinstance(phi, dict):
        for w in phi:
            return LetterMap(w.alphabet, phi)
        raise InputError("cannot infer the alphabet of an empty map table")
    if callable(phi):
        return phi
    raise InputError(f"expected a letter map, got {phi!r}")


def concat_expand(factors, alphabet):
    """Distribute a list of letter combinations into one combination of words."""
    acc = LinComb.single(alphabet.empty_word())
    for f in factors:
        if not f:
            return LinComb.zero()
        out = {}
        for u, c in acc.terms.items():
            for v, d in f.terms.items():
                w = u * v
                cd = c * d
                prev = out.get(w)
                out[w] = cd if prev is None else prev + cd
        acc = LinComb(out)
    return acc


def cofree_lift(phi, d):
    """Universal lift of phi through the cofree tensor coalgebra.

    Sends d to eps(d)*1 + sum over n >= 1 of phi tensored n times applied to
    the n-fold reduced coproduct of the augmentation-reduced part of d.
    """
    phi = _as_callable(phi)
    d = as_tensor(d)
    if not d:
        return d
    alph = alphabet_of(d)
    empty = alph.empty_word()
    eps = d.coeff(empty)
    out = LinComb.single(empty, eps) if eps else LinComb.zero()
    reduced = d - LinComb.single(empty, eps) if eps else d
    if not reduced:
        return out
    top = max(len(w) for w in reduced.terms)
    for n in range(1, top + 1):
        for blocks, c in reduced_coproduct_iter(reduced, n).terms.items():
            out = out + c * concat_expand([phi(b) for b in blocks], alph)
    return out


def _check_fixes_letters(phi, alphabet):
    for i in range(len(alphabet)):
        v = alphabet.letter(i)
        if phi(v) != LinComb.single(v):
            raise InputError(f"the projection must fix the letter {v}")


def structure_endo(pi, x):
    """Coalgebra endomorphism induced by a projection fixing the letters.

    A word v1...vn is sent to the sum over all decompositions into k
    nonempty blocks of pi(block 1)...pi(block k); the k = n term makes it
    the identity plus lower-length corrections.
    """
    pi = _as_callable(pi)
    x = as_tensor(x)
    if not x:
        return x
    _check_fixes_letters(pi, alphabet_of(x))
    return cofree_lift(pi, x)


def inverse_structure_endo(pi, x):
    """Inverse of structure_endo(pi, -), computed by length recursion.

    The companion projection mu is defined by mu(v) = v on letters and, for
    longer words, by subtracting the images of all shorter block patterns;
    the inverse endomorphism is then the lift of mu.
    """
    pi = _as_callable(pi)
    x = as_tensor(x)
    if not x:
        return x
    alph = alphabet_of(x)
    _check_fixes_letters(pi, alph)
    memo = {}

    def mu(w):
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
            for k in range(1, n):
                for blocks in block_decompositions(w, k):
                    img = concat_expand([pi(b) for b in blocks], alph)
                    total = total + img.apply(mu)
            val = -total
        memo[w] = val
        return val

    return cofree_lift(mu, x)
