"""The symmetric-group layer: descents, Dynkin and Solomon elements.

Permutations act on words by place permutation, sigma(y1...yn) being the
word y_sigma(1)...y_sigma(n), so a group algebra element acting on the
multilinear word x1...xn is read off directly from one-line notation.  The
convolution product of two elements splits the positions into a shuffle,
acts on each part, and concatenates; the span of the descent sums De is
closed under it.  Solomon's idempotent is stored on the equal-descent-set
basis, where the alternating binomial coefficients make it idempotent.

Everything is degree-bounded (n <= 7) because the carriers grow like n!.
"""

from __future__ import annotations

from itertools import combinations, permutations as _permutations
from math import comb

from .exactlin import Fraction, InputError, LinComb, SizeBoundError, format_terms, parse_scalar
from .words import Word

DEGREE_BOUND = 7


def _check_degree(n):
    if n > DEGREE_BOUND:
        raise SizeBoundError(f"size bound: descent computations stop at n = {DEGREE_BOUND}")
    if n < 0:
        raise InputError("negative degree")


class Permutation:
    """A bijection of {1..n} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def then(self, other):
        """The composite "self, then other": i -> other(self(i))."""
        if other.n != self.n:
            raise InputError("degree mismatch")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def descent_set(self):
        return frozenset(
            i for i in range(1, self.n) if self.images[i - 1] > self.images[i]
        )

    def act(self, w):
        """Place permutation on a word of the same length."""
        if len(w) != self.n:
            raise InputError(f"length mismatch: word of length {len(w)}, degree {self.n}")
        return Word(w.alphabet, tuple(w.idx[v - 1] for v in self.images))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return (self.n, self.images) < (other.n, other.images)

    def __le__(self, other):
        return self == other or self < other

    def __str__(self):
        return " ".join(str(i) for i in self.images)

    def __repr__(self):
        return f"Permutation({self.images!r})"


def descent_set(p):
    return p.descent_set()


def parse_permutation(text):
    parts = text.replace(",", " ").split()
    if not parts:
        raise InputError("empty permutation text")
    try:
        images = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"bad permutation {text!r}") from None
    return Permutation(images)


def permutations_of(n):
    _check_degree(n)
    for images in _permutations(range(1, n + 1)):
        yield Permutation(images)


class GroupAlgElem:
    """An element of the group algebra of one symmetric group."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        _check_degree(n)
        self.n = n
        if terms is None:
            terms = LinComb.zero()
        elif not isinstance(terms, LinComb):
            terms = LinComb(terms)
        for p in terms.terms:
            if p.n != n:
                raise InputError(f"permutation {p} does not live in degree {n}")
        self.terms = terms

    @classmethod
    def single(cls, p, coeff=1):
        return cls(p.n, LinComb.single(p, coeff))

    @classmethod
    def unit(cls):
        """The degree-0 unit of the convolution algebra."""
        return cls(0, LinComb.single(Permutation(())))

    def coeff(self, p):
        return self.terms.coeff(p)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _same_degree(self, other):
        if self.n != other.n:
            raise InputError("degree mismatch")

    def __add__(self, other):
        self._same_degree(other)
        return GroupAlgElem(self.n, self.terms + other.terms)

    def __sub__(self, other):
        self._same_degree(other)
        return GroupAlgElem(self.n, self.terms - other.terms)

    def __neg__(self):
        return GroupAlgElem(self.n, -self.terms)

    def scale(self, c):
        return GroupAlgElem(self.n, self.terms.scale(c))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return format_terms(self.terms)

    def __repr__(self):
        return f"GroupAlgElem({self.n}, {self.terms.terms!r})"


def parse_group_alg(text):
    terms = {}
    n = None
    for chunk in text.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise InputError(f"empty term in {text!r}")
        if "*" in chunk:
            coeff_text, _, perm_text = chunk.partition("*")
            coeff = parse_scalar(coeff_text)
        else:
            coeff = Fraction(1)
            perm_text = chunk
        p = parse_permutation(perm_text)
        if n is None:
            n = p.n
        elif n != p.n:
            raise InputError("mixed degrees in one group algebra element")
        terms[p] = terms.get(p, Fraction(0)) + coeff
    return GroupAlgElem(n, terms)


def subset_from_composition(comp):
    """Partial sums: the composition (i1,...,ik) of n gives {i1, i1+i2, ..., n}."""
    out = []
    total = 0
    for part in comp:
        if part < 1:
            raise InputError(f"bad composition {tuple(comp)}")
        total += part
        out.append(total)
    return frozenset(out)


def composition_from_subset(n, S):
    S = sorted(S)
    if not S or S[-1] != n or S[0] < 1:
        raise InputError(f"the set {S} must contain its degree {n}")
    comp = []
    prev = 0
    for s in S:
        comp.append(s - prev)
        prev = s
    return tuple(comp)


def compositions(n):
    """All compositions of n, by length then lexicographically."""
    if n == 0:
        yield ()
        return
    subsets = sorted(
        (frozenset(c) | {n} for k in range(n) for c in combinations(range(1, n), k)),
        key=lambda S: (len(S), composition_from_subset(n, S)),
    )
    for S in subsets:
        yield composition_from_subset(n, S)


def _check_index_set(n, S):
    S = frozenset(S)
    if n not in S or not S <= set(range(1, n + 1)):
        raise InputError(
            f"descent index set must contain n and sit inside 1..n, got {sorted(S)}"
        )
    return S - {n}


def de_equal(n, S):
    """Sum of the permutations whose descent set is exactly S minus {n}."""
    _check_degree(n)
    target = _check_index_set(n, S)
    terms = {p: Fraction(1) for p in permutations_of(n) if p.descent_set() == target}
    return GroupAlgElem(n, terms)


def de_subset(n, S):
    """Sum of the permutations whose descent set is contained in S minus {n}."""
    _check_degree(n)
    target = _check_index_set(n, S)
    terms = {p: Fraction(1) for p in permutations_of(n) if p.descent_set() <= target}
    return GroupAlgElem(n, terms)


def dynkin(n):
    """Alternating sum of the initial-segment descent classes.

    In degree n this is sum over i of (-1)^i De_{={1..i}}, the left-to-right
    iterated bracketing [..[[1,2],3]..,n] written in the group algebra.
    """
    _check_degree(n)
    if n < 1:
        raise InputError("dynkin needs n >= 1")
    out = GroupAlgElem(n)
    for i in range(n):
        out = out + de_equal(n, frozenset(range(1, i + 1)) | {n}).scale((-1) ** i)
    return out


def solomon(n):
    """The canonical idempotent projecting onto the free Lie part.

    On the equal-descent-set basis the coefficient of De_{=S'} depends only
    on |S'|: it is (-1)^|S'| / (n * binom(n-1, |S'|)).
    """
    _check_degree(n)
    if n < 1:
        raise InputError("solomon needs n >= 1")
    out = GroupAlgElem(n)
    for k in range(n):
        coeff = Fraction((-1) ** k, n * comb(n - 1, k))
        for S in combinations(range(1, n), k):
            out = out + de_equal(n, frozenset(S) | {n}).scale(coeff)
    return out


def solomon_log_oracle(n):
    """Logarithm of the identity in the convolution algebra, summed directly.

    Expanding log(unit + (Id - unit)) term by term gives, for each
    composition c of n, the coefficient (-1)^(len(c)-1)/len(c) on the
    subset-basis element De_c; this is an independent route to solomon(n).
    """
    _check_degree(n)
    if n < 1:
        raise InputError("needs n >= 1")
    out = GroupAlgElem(n)
    for c in compositions(n):
        k = len(c)
        out = out + de_subset(n, subset_from_composition(c)).scale(Fraction((-1) ** (k - 1), k))
    return out


def act_on_tensor(g, x):
    """Apply a group algebra element to words, all of length n, linearly."""
    if isinstance(x, Word):
        x = LinComb.single(x)
    out = LinComb.zero()
    for p, c in g.terms.items():
        out = out + x.scale(c).map_keys(p.act)
    return out


def convolution(g, h):
    """Convolution product: unshuffle the positions, act on each part, concatenate.

    For sigma of degree p and tau of degree q, each p-subset I of 1..p+q
    (with complement J, both kept increasing) contributes the permutation
    whose one-line form is I[sigma(1)]..I[sigma(p)] J[tau(1)]..J[tau(q)].
    """
    p, q = g.n, h.n
    n = p + q
    _check_degree(n)
    terms = {}
    all_pos = range(1, n + 1)
    for sigma, c in g.terms.items():
        for tau, d in h.terms.items():
            cd = c * d
            for I in combinations(all_pos, p):
                J = tuple(sorted(set(all_pos) - set(I)))
                images = tuple(I[sigma(i) - 1] for i in range(1, p + 1)) + tuple(
                    J[tau(j) - 1] for j in range(1, q + 1)
                )
                rho = Permutation(images)
                terms[rho] = terms.get(rho, Fraction(0)) + cd
    return GroupAlgElem(n, terms)


def internal_product(g, h):
    """Bilinear extension of composition, (sigma . tau)(i) = tau(sigma(i)).

    With this order, acting on a word by sigma . tau is the same as acting
    by tau first in the formula sense and composing place permutations:
    act(g . h) = act(g) o act(h).
    """
    g._same_degree(h)
    terms = {}
    for sigma, c in g.terms.items():
        for tau, d in h.terms.items():
            rho = sigma.then(tau)
            terms[rho] = terms.get(rho, Fraction(0)) + c * d
    return GroupAlgElem(g.n, terms)


class DescElem:
    """An element of the descent span of one symmetric group.

    Stored on one of two bases indexed by compositions of n: "equal"
    (permutations with exactly those descents) or "subset" (descents
    contained in those positions).  The two are related by inclusion and
    exclusion over coarsenings.
    """

    __slots__ = ("n", "basis", "coeffs")

    def __init__(self, n, basis, coeffs=None):
        _check_degree(n)
        if basis not in ("equal", "subset"):
            raise InputError(f"unknown basis {basis!r}")
        self.n = n
        self.basis = basis
        clean = {}
        for comp, c in (coeffs or {}).items():
            comp = tuple(int(i) for i in comp)
            if sum(comp) != n or any(i < 1 for i in comp):
                raise InputError(f"{comp} is not a composition of {n}")
            c = Fraction(c)
            if c:
                clean[comp] = clean.get(comp, Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis_elem(cls, n, comp, basis="equal"):
        return cls(n, basis, {tuple(comp): Fraction(1)})

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def _same(self, other):
        if self.n != other.n:
            raise InputError("degree mismatch")

    def _binop(self, other, sign):
        self._same(other)
        a = self.to_basis(self.basis)
        b = other.to_basis(self.basis)
        coeffs = dict(a.coeffs)
        for comp, c in b.coeffs.items():
            coeffs[comp] = coeffs.get(comp, Fraction(0)) + sign * c
        return DescElem(self.n, self.basis, coeffs)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def scale(self, c):
        c = Fraction(c)
        return DescElem(self.n, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __neg__(self):
        return self.scale(-1)

    def to_basis(self, basis):
        if basis == self.basis:
            return self
        if basis == "equal":
            return self.to_equal()
        if basis == "subset":
            return self.to_subset()
        raise InputError(f"unknown basis {basis!r}")

    def to_subset(self):
        """Equal basis to subset basis: alternating sum over coarsenings."""
        if self.basis == "subset":
            return self
        coeffs = {}
        for comp, c in self.coeffs.items():
            for coarse in _coarsenings(comp):
                sign = (-1) ** (len(comp) - len(coarse))
                coeffs[coarse] = coeffs.get(coarse, Fraction(0)) + sign * c
        return DescElem(self.n, "subset", coeffs)

    def to_equal(self):
        """Subset basis to equal basis: plain sum over coarsenings."""
        if self.basis == "equal":
            return self
        coeffs = {}
        for comp, c in self.coeffs.items():
            for coarse in _coarsenings(comp):
                coeffs[coarse] = coeffs.get(coarse, Fraction(0)) + c
        return DescElem(self.n, "equal", coeffs)

    def expand(self):
        """The underlying group algebra element."""
        eq = self.to_equal()
        out = GroupAlgElem(self.n)
        for comp, c in eq.coeffs.items():
            out = out + de_equal(self.n, subset_from_composition(comp)).scale(c)
        return out

    @classmethod
    def from_group_alg(cls, g):
        """Recognise an element of the descent span, or raise.

        The coefficient must be constant on each equal-descent class.
        """
        classes = {}
        for p in permutations_of(g.n):
            classes.setdefault(p.descent_set(), []).append(p)
        coeffs = {}
        for desc, perms in classes.items():
            vals = {g.coeff(p) for p in perms}
            if len(vals) != 1:
                raise InputError("not in the descent span")
            val = vals.pop()
            if val:
                coeffs[composition_from_subset(g.n, desc | {g.n})] = val
        return cls(g.n, "equal", coeffs)

    def __eq__(self, other):
        if not isinstance(other, DescElem):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.to_equal().coeffs == other.to_equal().coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        tag = "De=" if self.basis == "equal" else "De"
        lc = LinComb({format_composition(comp): c for comp, c in self.coeffs.items()})
        return format_terms(lc, render=lambda comp: f"{tag}{comp}")

    def __repr__(self):
        return f"DescElem({self.n}, {self.basis!r}, {self.coeffs!r})"


def format_composition(comp):
    return "(" + ",".join(str(i) for i in comp) + ")"


def parse_composition(text):
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        comp = tuple(int(p) for p in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"bad composition {text!r}") from None
    if any(i < 1 for i in comp):
        raise InputError(f"bad composition {text!r}")
    return comp


def _coarsenings(comp):
    """All compositions obtained by merging adjacent blocks of comp."""
    k = len(comp)
    if k == 0:
        yield ()
        return
    for keep in range(k):
        for cuts in combinations(range(1, k), keep):
            bounds = (0,) + cuts + (k,)
            yield tuple(sum(comp[a:b]) for a, b in zip(bounds, bounds[1:]))


def desc_coproduct(d):
    """Deconcatenation-style coproduct on the subset basis.

    De_(i1,...,ik) splits multiplicatively: each part ij splits as a + b
    with a + b = ij, zero parts being dropped.  Returns a linear
    combination keyed by pairs (left composition, right composition).
    """
    d = d.to_subset()
    out = LinComb.zero()
    for comp, c in d.coeffs.items():
        pieces = LinComb.single(((), ()), c)
        for part in comp:
            step = LinComb.zero()
            for (left, right), cc in pieces.items():
                for a in range(part + 1):
                    b = part - a
                    new_left = left + (a,) if a else left
                    new_right = right + (b,) if b else right
                    step = step + LinComb.single((new_left, new_right), cc)
            pieces = step
        out = out + pieces
    return out


def _lie_pivots(n):
    """Row-reduced spanning set for the multilinear Lie words of degree n."""
    rows = []
    for tau in _permutations(range(1, n + 1)):
        elt = {(tau[0],): Fraction(1)}
        for a in tau[1:]:
            new = {}
            for word, c in elt.items():
                for w2, s in ((word + (a,), c), ((a,) + word, -c)):
                    new[w2] = new.get(w2, Fraction(0)) + s
            elt = {k: v for k, v in new.items() if v}
        rows.append(elt)
    pivots = {}
    for row in rows:
        row, lead = _row_reduce(row, pivots)
        if lead is not None:
            c = row[lead]
            pivots[lead] = {k: v / c for k, v in row.items()}
    return pivots


def _row_reduce(row, pivots):
    row = dict(row)
    while row:
        lead = min(row)
        if lead not in pivots:
            return row, lead
        c = row[lead]
        for k, v in pivots[lead].items():
            new = row.get(k, Fraction(0)) - c * v
            if new:
                row[k] = new
            else:
                row.pop(k, None)
    return row, None


LIE_CHECK_BOUND = 6


def lie_projection_check(g):
    """Does g send the multilinear word x1...xn into the free Lie algebra?

    The image is the sum of c_sigma x_sigma(1)..x_sigma(n); membership is
    tested against a row reduction of the left-bracketed spanning words.
    """
    n = g.n
    if n > LIE_CHECK_BOUND:
        raise SizeBoundError(f"size bound: the Lie membership test stops at n = {LIE_CHECK_BOUND}")
    if n == 0:
        return not g
    pivots = _lie_pivots(n)
    vec = {p.images: c for p, c in g.terms.items() if c}
    _, lead = _row_reduce(vec, pivots)
    return lead is None
