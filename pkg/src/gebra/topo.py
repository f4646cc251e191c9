"""Finite topologies on labeled points, up to homeomorphism.

A finite topology is stored as its specialization quasi-order: rows of
bitmasks, bit j of rows[i] meaning i <= j.  Open sets are the up-closed
subsets.  Isomorphism classes are taken by exhaustive relabeling (small n
only) and form the basis of a double bialgebra:

  * m        disjoint union (commutative, unit the empty topology),
  * Delta    splitting along open sets,
  * down     the stacking product putting one order entirely below another,
  * delta    contraction-restriction over the admissible partitions E_c,

with the projector pi onto the primitives of (m, Delta), the bracket
pi((x1 down ... ) (y1 down ...)) on them, the polynomial invariant Upsilon,
its integral lambda over [-1, 0], and the Eulerian idempotent
e = (lambda (x) Id) o delta.

Memo tables (canonical forms, Upsilon, pi, antipode) are plain dicts:
reads are concurrency-safe and insertions idempotent, so racing threads can
only repeat work, never corrupt a result.
"""

from __future__ import annotations

from itertools import combinations, permutations as _permutations, product as _product
from math import comb

from .exactlin import (
    Fraction,
    InputError,
    LinComb,
    Poly,
    SizeBoundError,
    ZERO,
    format_terms,
)

CANON_BOUND = 8
OPENS_BOUND = 15
DELTA_BOUND = 7
EULER_BOUND = 6
ISO_BOUND = 5


class QuasiOrder:
    """A reflexive transitive relation on {0..n-1}, bit j of rows[i] = (i <= j).

    The constructor closes the given relation reflexively and transitively,
    so any generating set of pairs is acceptable input.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n, rows=None):
        n = int(n)
        if n < 0:
            raise InputError("negative vertex count")
        self.n = n
        base = [1 << i for i in range(n)]
        if rows is not None:
            rows = list(rows)
            if len(rows) != n:
                raise InputError(f"expected {n} rows, got {len(rows)}")
            full = (1 << n) - 1
            for i, r in enumerate(rows):
                r = int(r)
                if r & ~full:
                    raise InputError("relation bits out of vertex range")
                base[i] |= r
        self.rows = base
        for k in range(n):
            bit = 1 << k
            rk = base[k]
            for i in range(n):
                if base[i] & bit:
                    base[i] |= rk

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def leq(self, i, j):
        return bool((self.rows[i] >> j) & 1)

    def classes(self):
        """Equivalence classes (mutually comparable vertices), sorted by minimum."""
        seen = 0
        out = []
        for i in range(self.n):
            if (seen >> i) & 1:
                continue
            members = tuple(
                j for j in range(self.n) if self.leq(i, j) and self.leq(j, i)
            )
            for j in members:
                seen |= 1 << j
            out.append(members)
        return out

    def is_equivalence(self):
        """True when the relation is symmetric, i.e. the topology is discrete."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if ((self.rows[i] >> j) & 1) != ((self.rows[j] >> i) & 1):
                    return False
        return True

    def open_mask_list(self):
        """All up-closed subsets as bitmasks, ascending."""
        if self.n > OPENS_BOUND:
            raise SizeBoundError(f"size bound: open-set enumeration stops at n = {OPENS_BOUND}")
        out = []
        for O in range(1 << self.n):
            up = 0
            m = O
            while m:
                i = (m & -m).bit_length() - 1
                up |= self.rows[i]
                m &= m - 1
            if up == O:
                out.append(O)
        return out

    def restrict_mask(self, mask):
        """The induced quasi-order on the vertices of mask, reindexed in order."""
        pos = [i for i in range(self.n) if (mask >> i) & 1]
        rows = []
        for i in pos:
            r = 0
            for t, j in enumerate(pos):
                if (self.rows[i] >> j) & 1:
                    r |= 1 << t
            rows.append(r)
        return QuasiOrder(len(pos), rows)

    def restrict_blocks(self, p):
        """Keep only relations inside the blocks of p; vertex set unchanged."""
        if p.n != self.n:
            raise InputError("partition size mismatch")
        masks = p.masks()
        rows = [0] * self.n
        for b in masks:
            m = b
            while m:
                i = (m & -m).bit_length() - 1
                rows[i] = self.rows[i] & b
                m &= m - 1
        return QuasiOrder(self.n, rows)

    def quotient(self, p):
        """Close the relation together with the equivalence of p; vertex set unchanged."""
        if p.n != self.n:
            raise InputError("partition size mismatch")
        rows = list(self.rows)
        for b in p.masks():
            m = b
            while m:
                i = (m & -m).bit_length() - 1
                rows[i] |= b
                m &= m - 1
        return QuasiOrder(self.n, rows)

    def disjoint_union(self, other):
        rows = list(self.rows) + [r << self.n for r in other.rows]
        return QuasiOrder(self.n + other.n, rows)

    def down(self, other):
        """Everything of self below everything of other."""
        high = ((1 << other.n) - 1) << self.n
        rows = [r | high for r in self.rows] + [r << self.n for r in other.rows]
        return QuasiOrder(self.n + other.n, rows)

    def connected_components(self):
        """Components of the comparability graph, as masks sorted by lowest vertex."""
        und = list(self.rows)
        for i in range(self.n):
            for j in range(self.n):
                if (self.rows[i] >> j) & 1:
                    und[j] |= 1 << i
        seen = 0
        comps = []
        for i in range(self.n):
            if (seen >> i) & 1:
                continue
            comp = 1 << i
            while True:
                grown = comp
                m = comp
                while m:
                    v = (m & -m).bit_length() - 1
                    grown |= und[v]
                    m &= m - 1
                if grown == comp:
                    break
                comp = grown
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self):
        return self.n > 0 and len(self.connected_components()) == 1

    def to_text(self):
        """The input grammar form: vertex count, then generating pairs."""
        rel = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                ij = (self.rows[i] >> j) & 1
                ji = (self.rows[j] >> i) & 1
                if ij and ji:
                    rel.append(f"{i + 1}~{j + 1}")
                elif ij:
                    rel.append(f"{i + 1}<{j + 1}")
                elif ji:
                    rel.append(f"{j + 1}<{i + 1}")
        if not rel:
            return str(self.n)
        return f"{self.n}; " + ", ".join(rel)

    def __eq__(self, other):
        if not isinstance(other, QuasiOrder):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, tuple(self.rows)))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"QuasiOrder({self.n}, {self.rows!r})"


def parse_topology(text):
    """Parse "n; 1<2, 2~3" (reflexive-transitive closure of the generators)."""
    text = text.strip()
    if not text:
        raise InputError("empty topology text")
    head, sep, tail = text.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise InputError(f"bad vertex count {head.strip()!r}") from None
    if n < 0:
        raise InputError("negative vertex count")
    rows = [1 << i for i in range(n)]
    if sep:
        for part in tail.split(","):
            part = part.strip()
            if not part:
                continue
            if "<" in part:
                a, _, b = part.partition("<")
                both = False
            elif "~" in part:
                a, _, b = part.partition("~")
                both = True
            else:
                raise InputError(f"bad relation {part!r}: expected i<j or i~j")
            try:
                i, j = int(a.strip()) - 1, int(b.strip()) - 1
            except ValueError:
                raise InputError(f"bad relation {part!r}") from None
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"relation {part!r} mentions a vertex outside 1..{n}")
            if i == j:
                raise InputError(f"relation {part!r} relates a vertex to itself")
            rows[i] |= 1 << j
            if both:
                rows[j] |= 1 << i
    return QuasiOrder(n, rows)


_CANON_MEMO = {}


class QuasiOrderClass:
    """A topology up to homeomorphism: the lex-least relation matrix.

    The matrix over each of the n! relabelings is flattened row-major and
    the smallest is kept; two quasi-orders canonicalize equal iff they are
    isomorphic.  Exhaustive, hence the size bound.
    """

    __slots__ = ("q", "key")

    def __init__(self, q):
        if q.n > CANON_BOUND:
            raise SizeBoundError(f"size bound: canonical forms stop at n = {CANON_BOUND}")
        memo_key = (q.n, tuple(q.rows))
        hit = _CANON_MEMO.get(memo_key)
        if hit is not None:
            self.q, self.key = hit
            return
        n = q.n
        best = None
        for perm in _permutations(range(n)):
            cand = tuple(_row_key(q.rows[perm[i]], perm, n) for i in range(n))
            if best is None or cand < best:
                best = cand
        if best is None:
            best = ()
        rows = []
        for val in best:
            r = 0
            for j in range(n):
                if (val >> (n - 1 - j)) & 1:
                    r |= 1 << j
            rows.append(r)
        self.q = QuasiOrder(n, rows)
        self.key = (n, best)
        _CANON_MEMO[memo_key] = (self.q, self.key)
        _CANON_MEMO[(n, tuple(self.q.rows))] = (self.q, self.key)

    @property
    def n(self):
        return self.q.n

    def __eq__(self, other):
        if not isinstance(other, QuasiOrderClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def __str__(self):
        return self.q.to_text()

    def __repr__(self):
        return f"QuasiOrderClass({self.q.to_text()!r})"


def _row_key(row, perm, n):
    """The permuted row as an integer whose bits read left to right."""
    val = 0
    for j in range(n):
        if (row >> perm[j]) & 1:
            val |= 1 << (n - 1 - j)
    return val


def canonicalize(q):
    if isinstance(q, QuasiOrderClass):
        return q
    return QuasiOrderClass(q)


def as_class(x):
    if isinstance(x, QuasiOrderClass):
        return x
    if isinstance(x, QuasiOrder):
        return QuasiOrderClass(x)
    if isinstance(x, str):
        return QuasiOrderClass(parse_topology(x))
    raise InputError(f"cannot interpret {x!r} as a topology")


def as_topo_elem(x):
    """Normalize to a linear combination of isoclasses."""
    if isinstance(x, LinComb):
        return x
    return LinComb.single(as_class(x))


def unit_class():
    return QuasiOrderClass(QuasiOrder(0))


def discrete(n):
    return QuasiOrderClass(QuasiOrder(n))


def ladder(n):
    """The chain on n vertices."""
    if n < 1:
        raise InputError("a ladder has at least one vertex")
    rows = [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)]
    return QuasiOrderClass(QuasiOrder(n, rows))


def corolla(n):
    """One minimal vertex below n-1 pairwise incomparable ones."""
    if n < 2:
        raise InputError("a corolla has at least two vertices")
    rows = [(1 << n) - 1] + [1 << i for i in range(1, n)]
    return QuasiOrderClass(QuasiOrder(n, rows))


def _corolla_or_point(n):
    return discrete(1) if n == 1 else corolla(n)


def topo_name(tc):
    """Short name (l3, c4, disc2, unit 1) when the isoclass has one, else None."""
    n = tc.n
    if n == 0:
        return "1"
    q = tc.q
    singleton_classes = all(len(c) == 1 for c in q.classes())
    if q.is_equivalence():
        return f"disc{n}" if singleton_classes else None
    if not singleton_classes:
        return None
    pops = sorted(r.bit_count() for r in q.rows)
    if pops == list(range(1, n + 1)):
        return f"l{n}"
    if n >= 3 and pops == [1] * (n - 1) + [n]:
        return f"c{n}"
    return None


def render_topo(tc):
    """Short name when there is one, else the grammar text in brackets
    (the text contains commas, so it is fenced off inside term lists)."""
    name = topo_name(tc)
    return name if name is not None else f"[{tc.q.to_text()}]"


def render_basis(key):
    """Render a basis key: an isoclass or a tuple of them (tensor factors)."""
    if isinstance(key, tuple):
        return " (x) ".join(render_topo(t) for t in key)
    return render_topo(key)


def format_topo_elem(x):
    return format_terms(as_topo_elem(x), render=render_basis)


def open_sets(q):
    """The open sets as sorted vertex tuples (spec-facing form of the masks)."""
    out = []
    for m in q.open_mask_list():
        out.append(tuple(i for i in range(q.n) if (m >> i) & 1))
    return out


class Partition:
    """A set partition of {0..n-1}: nonempty disjoint covering blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        n = int(n)
        norm = []
        seen = 0
        for b in blocks:
            b = tuple(sorted(set(int(v) for v in b)))
            if not b:
                raise InputError("empty block")
            m = 0
            for v in b:
                if not 0 <= v < n:
                    raise InputError(f"vertex {v} outside 0..{n - 1}")
                m |= 1 << v
            if m & seen:
                raise InputError("blocks overlap")
            seen |= m
            norm.append(b)
        if seen != (1 << n) - 1:
            raise InputError("blocks do not cover the vertex set")
        self.n = n
        self.blocks = tuple(sorted(norm))

    def masks(self):
        return [sum(1 << v for v in b) for b in self.blocks]

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __str__(self):
        return " | ".join(",".join(str(v + 1) for v in b) for b in self.blocks)

    def __repr__(self):
        return f"Partition({self.n}, {self.blocks!r})"


def set_partitions(n):
    """All set partitions of {0..n-1}."""
    if n == 0:
        yield Partition(0, [])
        return

    def rec(i, blocks):
        if i == n:
            yield Partition(n, blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def _in_ec(q, p):
    """The two admissibility conditions for the contraction coproduct.

    Each block must be connected in the restriction, and merging the blocks
    must not create any further identifications.
    """
    r = q.restrict_blocks(p)
    for m in p.masks():
        if not r.restrict_mask(m).is_connected():
            return False
    quot = q.quotient(p)
    return tuple(quot.classes()) == p.blocks


def ec_partitions(q):
    if isinstance(q, QuasiOrderClass):
        q = q.q
    if q.n > DELTA_BOUND:
        raise SizeBoundError(f"size bound: contraction partitions stop at n = {DELTA_BOUND}")
    return [p for p in set_partitions(q.n) if _in_ec(q, p)]


# -- the two coproducts ------------------------------------------------------


def coproduct_Delta(t):
    """Split along open sets: sum of (complement part, open part)."""
    tc = as_class(t)
    q = tc.q
    full = q.full_mask
    out = LinComb.zero()
    for O in q.open_mask_list():
        pair = (canonicalize(q.restrict_mask(full & ~O)), canonicalize(q.restrict_mask(O)))
        out = out + LinComb.single(pair)
    return out


def _reduced_splits(q):
    """Proper nonempty open splittings (complement part, open part)."""
    full = q.full_mask
    for O in q.open_mask_list():
        if O == 0 or O == full:
            continue
        yield q.restrict_mask(full & ~O), q.restrict_mask(O)


def delta_bar_tuples(q, k):
    """All k-factor terms of the iterated reduced open-set coproduct."""
    if k == 1:
        if q.n:
            yield (q,)
        return
    for left, right in _reduced_splits(q):
        for tup in delta_bar_tuples(left, k - 1):
            yield tup + (right,)


def coproduct_delta(t):
    """Contraction-restriction: sum of (quotient, block restriction) over E_c."""
    tc = as_class(t)
    q = tc.q
    if q.n > DELTA_BOUND:
        raise SizeBoundError(f"size bound: contraction partitions stop at n = {DELTA_BOUND}")
    out = LinComb.zero()
    for p in set_partitions(q.n):
        if _in_ec(q, p):
            pair = (canonicalize(q.quotient(p)), canonicalize(q.restrict_blocks(p)))
            out = out + LinComb.single(pair)
    return out


def eps_delta(t):
    """Counit of the contraction coproduct: 1 on discrete topologies."""
    tc = as_class(t)
    return Fraction(1) if tc.q.is_equivalence() else ZERO


# -- products ----------------------------------------------------------------


def product_m(x, y):
    """Disjoint union, extended bilinearly."""
    x, y = as_topo_elem(x), as_topo_elem(y)
    out = LinComb.zero()
    for a, ca in x.items():
        for b, cb in y.items():
            out = out + LinComb.single(canonicalize(a.q.disjoint_union(b.q)), ca * cb)
    return out


def down_product(x, y):
    """Stacking product, extended bilinearly."""
    x, y = as_topo_elem(x), as_topo_elem(y)
    out = LinComb.zero()
    for a, ca in x.items():
        for b, cb in y.items():
            out = out + LinComb.single(canonicalize(a.q.down(b.q)), ca * cb)
    return out


# -- the infinitesimal projector and the bracket -----------------------------

_PI_MEMO = {}


def inf_pi(x):
    """Projector onto the primitives of the open-set coproduct.

    Alternating sum over k of the (k-1)-fold stacking of the (k-1)-fold
    reduced coproduct; kills stacked products, fixes primitives.
    """
    x = as_topo_elem(x)
    out = LinComb.zero()
    for tc, c in x.items():
        if tc.n == 0:
            raise InputError("not augmentation-reduced")
        out = out + _pi_class(tc).scale(c)
    return out


def _pi_class(tc):
    hit = _PI_MEMO.get(tc.key)
    if hit is not None:
        return hit
    q = tc.q
    total = LinComb.zero()
    for k in range(1, q.n + 1):
        sign = Fraction((-1) ** (k + 1))
        for tup in delta_bar_tuples(q, k):
            acc = tup[0]
            for f in tup[1:]:
                acc = acc.down(f)
            total = total + LinComb.single(canonicalize(acc), sign)
    _PI_MEMO[tc.key] = total
    return total


def _down_fold(elems):
    acc = LinComb.single(unit_class())
    for e in elems:
        acc = down_product(acc, e)
    return acc


def binf_bracket(xs, ys):
    """pi((x1 down ... down xk)(y1 down ... down yl)) on lists of primitives."""
    return inf_pi(product_m(_down_fold(xs), _down_fold(ys)))


# -- Upsilon and lambda ------------------------------------------------------

_UPSILON_MEMO = {}


def upsilon(t, method="recursive"):
    """The polynomial invariant; both methods agree.

    recursive: strip nonempty unions of minimal classes, X per step; a step
    that empties the topology contributes 1 (absorbing the 1/X convention
    for the empty topology, which is never returned).
    surjection_oracle: coefficient of X^(k-1) counts the strictly
    order-preserving surjections from the class poset onto a k-chain.
    """
    tc = as_class(t)
    if tc.n == 0:
        raise InputError("unit topology")
    if method == "recursive":
        return _upsilon_rec(tc)
    if method == "surjection_oracle":
        return _upsilon_oracle(tc)
    raise InputError(f"unknown method {method!r}")


def _upsilon_rec(tc):
    hit = _UPSILON_MEMO.get(tc.key)
    if hit is not None:
        return hit
    q = tc.q
    cls_masks = [sum(1 << v for v in c) for c in q.classes()]
    minimal = []
    for m in cls_masks:
        i = (m & -m).bit_length() - 1
        if all(
            m2 == m or not q.leq((m2 & -m2).bit_length() - 1, i) for m2 in cls_masks
        ):
            minimal.append(m)
    out = Poly()
    full = q.full_mask
    x = Poly.x_power(1)
    for r in range(1, len(minimal) + 1):
        for sel in combinations(minimal, r):
            rest = full
            for m in sel:
                rest &= ~m
            if rest == 0:
                out = out + Poly.const(1)
            else:
                out = out + x * _upsilon_rec(canonicalize(q.restrict_mask(rest)))
    _UPSILON_MEMO[tc.key] = out
    return out


def _upsilon_oracle(tc):
    q = tc.q
    cls = q.classes()
    k = len(cls)
    reps = [c[0] for c in cls]
    strict = [
        (a, b)
        for a in range(k)
        for b in range(k)
        if a != b and q.leq(reps[a], reps[b]) and not q.leq(reps[b], reps[a])
    ]
    out = Poly()
    for m in range(1, k + 1):
        count = 0
        for f in _product(range(m), repeat=k):
            if len(set(f)) != m:
                continue
            if all(f[a] < f[b] for a, b in strict):
                count += 1
        if count:
            out = out + Poly.x_power(m - 1, count)
    return out


def lambda_char(x, method="upsilon_integral"):
    """The linear form driving the Eulerian idempotent; 0 on the unit.

    upsilon_integral: integrate Upsilon over [-1, 0].
    delta_series: log-of-counit series, alternating sums of discrete counts
    over the iterated reduced open-set coproduct.
    """
    x = as_topo_elem(x)
    total = ZERO
    for tc, c in x.items():
        total += c * _lambda_class(tc, method)
    return total


def _lambda_class(tc, method):
    if tc.n == 0:
        return ZERO
    if method == "upsilon_integral":
        return _upsilon_rec(tc).integrate_unit_interval()
    if method == "delta_series":
        q = tc.q
        total = ZERO
        for k in range(1, q.n + 1):
            count = 0
            for tup in delta_bar_tuples(q, k):
                if all(f.is_equivalence() for f in tup):
                    count += 1
            if count:
                total += Fraction((-1) ** (k - 1), k) * count
        return total
    raise InputError(f"unknown method {method!r}")


# -- Eulerian idempotent -----------------------------------------------------

_E_MEMO = {}


def eulerian_e(t, method="via_delta"):
    """The canonical idempotent: kills products and the unit, fixes a
    complement of them.

    via_delta: (lambda (x) Id) applied to the contraction coproduct.
    direct: the log-of-identity series for the open-set coproduct.
    """
    x = as_topo_elem(t)
    out = LinComb.zero()
    for tc, c in x.items():
        out = out + _e_class(tc, method).scale(c)
    return out


def _e_class(tc, method):
    if tc.n > EULER_BOUND:
        raise SizeBoundError(f"size bound: the Eulerian idempotent stops at n = {EULER_BOUND}")
    hit = _E_MEMO.get((tc.key, method))
    if hit is not None:
        return hit
    q = tc.q
    if method == "via_delta":
        out = LinComb.zero()
        for p in set_partitions(q.n):
            if not _in_ec(q, p):
                continue
            lam = _lambda_class(canonicalize(q.quotient(p)), "upsilon_integral")
            if lam:
                out = out + LinComb.single(canonicalize(q.restrict_blocks(p)), lam)
    elif method == "direct":
        out = LinComb.zero()
        for k in range(1, q.n + 1):
            coeff = Fraction((-1) ** (k - 1), k)
            for tup in delta_bar_tuples(q, k):
                acc = tup[0]
                for f in tup[1:]:
                    acc = acc.disjoint_union(f)
                out = out + LinComb.single(canonicalize(acc), coeff)
    else:
        raise InputError(f"unknown method {method!r}")
    _E_MEMO[(tc.key, method)] = out
    return out


def canonical_pi_idem(t):
    """pi composed with the Eulerian idempotent; lands in the primitives."""
    e = eulerian_e(t)
    if not e:
        return e
    return inf_pi(e)


# -- antipode of (down, Delta) -----------------------------------------------

_ANTIPODE_MEMO = {}


def antipode(t):
    """Convolution inverse of the identity for the stacking product.

    S(1) = 1 and S(x) = -x - sum S(x') down x'' over the reduced coproduct.
    On the augmentation ideal -S agrees with pi (not at the unit).
    """
    x = as_topo_elem(t)
    out = LinComb.zero()
    for tc, c in x.items():
        out = out + _antipode_class(tc).scale(c)
    return out


def _antipode_class(tc):
    if tc.n == 0:
        return LinComb.single(tc)
    hit = _ANTIPODE_MEMO.get(tc.key)
    if hit is not None:
        return hit
    q = tc.q
    out = LinComb.single(tc, Fraction(-1))
    for left, right in _reduced_splits(q):
        s_left = _antipode_class(canonicalize(left))
        for a, ca in s_left.items():
            out = out + LinComb.single(canonicalize(a.q.down(right)), -ca)
    _ANTIPODE_MEMO[tc.key] = out
    return out


# -- named families and closed forms -----------------------------------------


def surjection_count(n, k):
    """Surjections from an n-set onto a (k+1)-set, by inclusion-exclusion."""
    if n < 1 or k < 0:
        raise InputError("need n >= 1 and k >= 0")
    return sum((-1) ** j * comb(k + 1, j) * (k + 1 - j) ** n for j in range(k + 2))


def _compositions(n):
    for cuts in range(n):
        for pos in combinations(range(1, n), cuts):
            bounds = (0,) + pos + (n,)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def closed_form_e(kind, n):
    """Closed forms for the Eulerian idempotent on the two named families."""
    if n < 2:
        raise InputError("closed forms start at n = 2")
    if n > EULER_BOUND:
        raise SizeBoundError(f"size bound: the Eulerian idempotent stops at n = {EULER_BOUND}")
    if kind == "ladder":
        out = LinComb.zero()
        for c in _compositions(n):
            k = len(c)
            acc = QuasiOrder(0)
            for part in c:
                acc = acc.disjoint_union(ladder(part).q)
            out = out + LinComb.single(canonicalize(acc), Fraction((-1) ** (k + 1), k))
        return out
    if kind == "corolla":
        out = LinComb.zero()
        for i in range(n):
            lam = _lambda_class(_corolla_or_point(i + 1), "upsilon_integral")
            coeff = comb(n - 1, i) * lam
            if coeff:
                acc = QuasiOrder(i).disjoint_union(_corolla_or_point(n - i).q)
                out = out + LinComb.single(canonicalize(acc), coeff)
        return out
    raise InputError(f"unknown kind {kind!r}")


# -- isoclass enumeration ----------------------------------------------------

_POSET_MEMO = {}
_ISO_MEMO = {}


def _labeled_posets(k):
    """All partial orders on {0..k-1}: orientation choices filtered by transitivity."""
    hit = _POSET_MEMO.get(k)
    if hit is not None:
        return hit
    pairs = list(combinations(range(k), 2))
    out = []
    for choice in _product((0, 1, 2), repeat=len(pairs)):
        rows = [1 << i for i in range(k)]
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rows[i] |= 1 << j
            elif c == 2:
                rows[j] |= 1 << i
        q = QuasiOrder(k, rows)
        if q.rows == rows:
            out.append(q)
    _POSET_MEMO[k] = out
    return out


def all_isoclasses(n):
    """Every topology isoclass on n points: partitions into classes times
    partial orders on the classes."""
    if n > ISO_BOUND:
        raise SizeBoundError(f"size bound: isoclass enumeration stops at n = {ISO_BOUND}")
    if n < 0:
        raise InputError("negative vertex count")
    hit = _ISO_MEMO.get(n)
    if hit is not None:
        return hit
    seen = {}
    for p in set_partitions(n):
        masks = p.masks()
        k = len(masks)
        for P in _labeled_posets(k):
            rows = [0] * n
            for b in range(k):
                below = 0
                for b2 in range(k):
                    if (P.rows[b] >> b2) & 1:
                        below |= masks[b2]
                m = masks[b]
                while m:
                    v = (m & -m).bit_length() - 1
                    rows[v] = below
                    m &= m - 1
            tc = canonicalize(QuasiOrder(n, rows))
            seen[tc.key] = tc
    out = sorted(seen.values())
    _ISO_MEMO[n] = out
    return out


# -- spec-facing aliases for the partition operations ------------------------


def restrict(t, p):
    """Within-block restriction (spec-facing wrapper)."""
    if isinstance(t, QuasiOrderClass):
        t = t.q
    return t.restrict_blocks(p)


def quotient(t, p):
    """Block contraction on the original vertex set (spec-facing wrapper)."""
    if isinstance(t, QuasiOrderClass):
        t = t.q
    return t.quotient(p)
