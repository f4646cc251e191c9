"""B-infinity structures on the span of an alphabet and the induced product.

A structure is presented by its bracket <w, w'>, a linear map from pairs of
nonempty words to letters.  The unit rules are never stored: <1, v> and
<v, 1> are v on single letters and 0 on longer words, and <1, 1> = 0.  The
induced product on T(V) is the double sum over all pairs of block
decompositions, reading each bracket of blocks as one output letter; it is
unital and coassociative by construction, and associativity, commutativity
and triviality are bounded checks.

Three modes exist: "shuffle" (zero bracket), "quasi_shuffle" (a semigroup
product on the letters, applied to letter pairs only), and "explicit" (a
finite table with a declared word-length bound; evaluation outside the bound
is an error rather than a silent zero).

Bracket table file format::

    mode: explicit            # or: shuffle | qshuffle
    alphabet: a:1,b:2         # optional; inferred letters of degree 1 otherwise
    bound: 6                  # optional for explicit mode
    a , a -> 2*b              # explicit bracket lines
    a * b = c                 # qshuffle multiplication lines
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .exactlin import Fraction, InputError, LinComb
from .words import (
    Alphabet,
    Word,
    alphabet_of,
    as_tensor,
    concat_expand,
    parse_tensor,
    parse_word,
)

SHUFFLE = "shuffle"
QUASI_SHUFFLE = "quasi_shuffle"
EXPLICIT = "explicit"


class BInftyStructure:
    """A bracket <-,->: T(V) x T(V) -> V presented by mode and table."""

    __slots__ = ("alphabet", "mode", "mult", "table", "bound", "_prod_memo")

    def __init__(self, alphabet, mode, mult=None, table=None, bound=None):
        if mode not in (SHUFFLE, QUASI_SHUFFLE, EXPLICIT):
            raise InputError(f"unknown mode {mode!r}")
        self.alphabet = alphabet
        self.mode = mode
        self.mult = None
        self.table = None
        self.bound = None
        self._prod_memo = {}
        if mode == QUASI_SHUFFLE:
            if mult is None:
                raise InputError("quasi_shuffle mode needs a multiplication table")
            self.mult = dict(mult)
            for a in alphabet.letters:
                for b in alphabet.letters:
                    if (a, b) not in self.mult:
                        raise InputError(
                            f"multiplication table is not total: missing {a} * {b}"
                        )
            for (a, b), c in self.mult.items():
                alphabet.index(a), alphabet.index(b), alphabet.index(c)
        elif mode == EXPLICIT:
            clean = {}
            top = 1
            for (w, w2), val in (table or {}).items():
                if w.is_empty() or w2.is_empty():
                    raise InputError("bracket tables never store unit-word pairs")
                if isinstance(val, Word):
                    val = LinComb.single(val)
                elif not isinstance(val, LinComb):
                    val = LinComb(val) if val else LinComb.zero()
                for u in val.terms:
                    if len(u) != 1:
                        raise InputError(f"bracket value for ({w}, {w2}) is not a letter")
                top = max(top, len(w), len(w2))
                if val:
                    clean[(w, w2)] = val
            self.table = clean
            self.bound = top if bound is None else int(bound)
            if self.bound < top:
                raise InputError("declared bound is smaller than the stored table")

    @classmethod
    def shuffle(cls, alphabet):
        return cls(alphabet, SHUFFLE)

    @classmethod
    def quasi_shuffle(cls, alphabet, mult):
        return cls(alphabet, QUASI_SHUFFLE, mult=mult)

    @classmethod
    def explicit(cls, alphabet, table, bound=None):
        return cls(alphabet, EXPLICIT, table=table, bound=bound)

    def letter_product(self, i, j):
        """The semigroup product of two letters, as a letter index."""
        a = self.alphabet.letters[i]
        b = self.alphabet.letters[j]
        return self.alphabet.index(self.mult[(a, b)])

    def bracket(self, w, w2):
        """Evaluate the bracket on a pair of words, unit rules first."""
        e1, e2 = w.is_empty(), w2.is_empty()
        if e1 and e2:
            return LinComb.zero()
        if e1 or e2:
            u = w2 if e1 else w
            return LinComb.single(u) if len(u) == 1 else LinComb.zero()
        if self.mode == SHUFFLE:
            return LinComb.zero()
        if self.mode == QUASI_SHUFFLE:
            if len(w) == 1 and len(w2) == 1:
                k = self.letter_product(w.idx[0], w2.idx[0])
                return LinComb.single(self.alphabet.letter(k))
            return LinComb.zero()
        if max(len(w), len(w2)) > self.bound:
            raise InputError(
                f"bracket evaluated outside the table bound {self.bound}: ({w}, {w2})"
            )
        return self.table.get((w, w2), LinComb.zero())

    def bracket_elem(self, x, y):
        """Bilinear extension of the bracket to combinations of words."""
        x = as_tensor(x)
        y = as_tensor(y)
        out = LinComb.zero()
        for w, c in x.terms.items():
            for w2, c2 in y.terms.items():
                out = out + (c * c2) * self.bracket(w, w2)
        return out

    def is_degree_graded(self):
        """True when every stored bracket value preserves total degree."""
        if self.mode == SHUFFLE:
            return True
        if self.mode == QUASI_SHUFFLE:
            deg = dict(zip(self.alphabet.letters, self.alphabet.degrees))
            return all(
                deg[c] == deg[a] + deg[b] for (a, b), c in self.mult.items()
            )
        return all(
            all(u.degree == w.degree + w2.degree for u in val.terms)
            for (w, w2), val in self.table.items()
        )


def bracket_eval(B, w, w2):
    return B.bracket(w, w2)


def _prefix_pairs(w, w2):
    for i in range(len(w) + 1):
        for j in range(len(w2) + 1):
            if i == 0 and j == 0:
                continue
            yield w[:i], w[i:], w2[:j], w2[j:]


def _product_words(B, w, w2):
    memo = B._prod_memo
    hit = memo.get((w, w2))
    if hit is not None:
        return hit
    if w.is_empty() and w2.is_empty():
        out = LinComb.single(w)
    else:
        out = LinComb.zero()
        for a, rest_a, b, rest_b in _prefix_pairs(w, w2):
            head = B.bracket(a, b)
            if not head:
                continue
            tail = _product_words(B, rest_a, rest_b)
            if not tail:
                continue
            out = out + head.apply(lambda u: tail.map_keys(lambda v: u * v))
    memo[(w, w2)] = out
    return out


def induced_product(B, x, y):
    """The product induced by the bracket, extended bilinearly.

    For words it is the sum over pairs of decompositions of both arguments
    into the same number of possibly-empty blocks, each index contributing
    one bracketed letter.  The empty-against-empty index vanishes, so the
    sum is finite; 1 * 1 = 1.
    """
    x = as_tensor(x)
    y = as_tensor(y)
    out = LinComb.zero()
    for w, c in x.terms.items():
        for w2, c2 in y.terms.items():
            out = out + (c * c2) * _product_words(B, w, w2)
    return out


def surjection_product_oracle(B, w, w2):
    """Independent recomputation of the induced product of two words.

    Shuffle and quasi-shuffle modes enumerate interleave-or-merge patterns
    (the monotone surjection picture); explicit mode re-enumerates the block
    decomposition sum directly, with no recursion and no memo.
    """
    if B.mode in (SHUFFLE, QUASI_SHUFFLE):
        return _surjection_words(B, w, w2)
    return _decomposition_sum(B, w, w2)


def _surjection_words(B, w, w2):
    alphabet = w.alphabet
    merge = B.mode == QUASI_SHUFFLE
    out = {}

    def walk(i, j, acc):
        if i == len(w) and j == len(w2):
            word = Word(alphabet, tuple(acc))
            out[word] = out.get(word, 0) + 1
            return
        if i < len(w):
            acc.append(w.idx[i])
            walk(i + 1, j, acc)
            acc.pop()
        if j < len(w2):
            acc.append(w2.idx[j])
            walk(i, j + 1, acc)
            acc.pop()
        if merge and i < len(w) and j < len(w2):
            acc.append(B.letter_product(w.idx[i], w2.idx[j]))
            walk(i + 1, j + 1, acc)
            acc.pop()

    walk(0, 0, [])
    return LinComb(out)


def _split_with_empty(w, k):
    """All ways to cut w into k blocks, empty blocks allowed."""
    n = len(w)
    for cuts in combinations_with_replacement(range(n + 1), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(w[bounds[i]:bounds[i + 1]] for i in range(k))


def _decomposition_sum(B, w, w2):
    if w.is_empty() and w2.is_empty():
        return LinComb.single(w)
    alphabet = w.alphabet
    out = LinComb.zero()
    for k in range(1, len(w) + len(w2) + 1):
        for blocks in _split_with_empty(w, k):
            for blocks2 in _split_with_empty(w2, k):
                factors = [B.bracket(a, b) for a, b in zip(blocks, blocks2)]
                out = out + concat_expand(factors, alphabet)
    return out


def quasi_shuffle_recursive(B, w, w2):
    """Classical three-term recursion for the (quasi-)shuffle product."""
    if B.mode not in (SHUFFLE, QUASI_SHUFFLE):
        raise InputError("the three-term recursion needs shuffle or quasi_shuffle mode")
    alphabet = w.alphabet
    memo = {}

    def rec(u, v):
        hit = memo.get((u, v))
        if hit is not None:
            return hit
        if u.is_empty():
            out = LinComb.single(v)
        elif v.is_empty():
            out = LinComb.single(u)
        else:
            a, u_rest = u[:1], u[1:]
            b, v_rest = v[:1], v[1:]
            out = rec(u_rest, v).map_keys(lambda t: a * t)
            out = out + rec(u, v_rest).map_keys(lambda t: b * t)
            if B.mode == QUASI_SHUFFLE:
                ab = alphabet.letter(B.letter_product(u.idx[0], v.idx[0]))
                out = out + rec(u_rest, v_rest).map_keys(lambda t: ab * t)
        memo[(u, v)] = out
        return out

    return rec(w, w2)


def check_axioms(B, length_budget):
    """Bounded validity report for the B-infinity axioms.

    unit: the bracket against the unit word acts as the projection onto V;
    assoc: <w, w' * w''> = <w * w', w''> on all nonempty triples of total
    length within the budget; comm: the bracket is symmetric; trivial: the
    bracket vanishes on all pairs of nonempty words.
    """
    if length_budget < 1:
        raise InputError("length budget must be >= 1")
    alphabet = B.alphabet
    unit = True
    for w in alphabet.words(length_budget, minlen=1):
        pi_v = LinComb.single(w) if len(w) == 1 else LinComb.zero()
        if B.bracket(alphabet.empty_word(), w) != pi_v:
            unit = False
            break
        if B.bracket(w, alphabet.empty_word()) != pi_v:
            unit = False
            break
    comm = True
    trivial = True
    for w in alphabet.words(length_budget - 1, minlen=1):
        for w2 in alphabet.words(length_budget - len(w), minlen=1):
            val = B.bracket(w, w2)
            if val:
                trivial = False
            if val != B.bracket(w2, w):
                comm = False
    assoc = True
    for w in alphabet.words(length_budget - 2, minlen=1):
        for w2 in alphabet.words(length_budget - len(w) - 1, minlen=1):
            rest = length_budget - len(w) - len(w2)
            for w3 in alphabet.words(rest, minlen=1):
                left = B.bracket_elem(induced_product(B, w, w2), w3)
                right = B.bracket_elem(w, induced_product(B, w2, w3))
                if left != right:
                    assoc = False
    return {"unit": unit, "assoc": assoc, "comm": comm, "trivial": trivial}


_MODE_NAMES = {
    "shuffle": SHUFFLE,
    "qshuffle": QUASI_SHUFFLE,
    "quasi_shuffle": QUASI_SHUFFLE,
    "explicit": EXPLICIT,
}


def parse_bracket_file(text, alphabet=None):
    """Parse the bracket table file format into a structure.

    Without an "alphabet:" header (or an alphabet argument, which wins), the
    letters mentioned in the body are collected with degree 1.
    """
    mode = None
    bound = None
    mult_lines = []
    bracket_lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("mode:"):
            tag = line.split(":", 1)[1].strip()
            mode = _MODE_NAMES.get(tag)
            if mode is None:
                raise InputError(f"unknown mode {tag!r}")
        elif low.startswith("alphabet:"):
            if alphabet is None:
                alphabet = Alphabet(line.split(":", 1)[1])
        elif low.startswith("bound:"):
            try:
                bound = int(line.split(":", 1)[1])
            except ValueError:
                raise InputError(f"bad bound in {line!r}") from None
        elif "=" in line and "->" not in line:
            mult_lines.append(line)
        elif "->" in line:
            bracket_lines.append(line)
        else:
            raise InputError(f"unparseable table line {line!r}")
    if mode is None:
        raise InputError("missing \"mode:\" header")
    if alphabet is None:
        names = set()
        for line in mult_lines:
            lhs, _, rhs = line.partition("=")
            a, _, b = lhs.partition("*")
            names.update({a.strip(), b.strip(), rhs.strip()})
        for line in bracket_lines:
            lhs, _, rhs = line.partition("->")
            for word_text in lhs.split(","):
                names.update(
                    p.strip() for p in word_text.strip().split(".") if p.strip() != "1"
                )
            for chunk in rhs.split("+"):
                chunk = chunk.strip()
                word_text = chunk.rpartition("*")[2].strip()
                if word_text not in ("", "0", "1"):
                    names.update(p.strip() for p in word_text.split("."))
        if not names:
            raise InputError("cannot infer an alphabet from an empty table")
        alphabet = Alphabet(sorted(names))
    if mode == QUASI_SHUFFLE:
        mult = {}
        for line in mult_lines:
            lhs, _, rhs = line.partition("=")
            a, star, b = lhs.partition("*")
            if not star:
                raise InputError(f"bad multiplication line {line!r}")
            mult[(a.strip(), b.strip())] = rhs.strip()
        return BInftyStructure.quasi_shuffle(alphabet, mult)
    if mode == EXPLICIT:
        table = {}
        for line in bracket_lines:
            lhs, _, rhs = line.partition("->")
            parts = lhs.split(",")
            if len(parts) != 2:
                raise InputError(f"bad bracket line {line!r}")
            w = parse_word(parts[0], alphabet)
            w2 = parse_word(parts[1], alphabet)
            val = rhs.strip()
            table[(w, w2)] = (
                LinComb.zero() if val == "0" else parse_tensor(val, alphabet)
            )
        return BInftyStructure.explicit(alphabet, table, bound=bound)
    return BInftyStructure.shuffle(alphabet)
