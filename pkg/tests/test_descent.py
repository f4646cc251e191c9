"""Descent classes, Solomon and Dynkin elements, and the two products."""

import itertools

import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from gebra.exactlin import InputError, LinComb, SizeBoundError
from gebra.words import Alphabet, parse_word
from gebra.descent import (
    DescElem,
    GroupAlgElem,
    Permutation,
    act_on_tensor,
    composition_from_subset,
    compositions,
    convolution,
    de_equal,
    de_subset,
    desc_coproduct,
    dynkin,
    internal_product,
    lie_projection_check,
    parse_composition,
    parse_group_alg,
    parse_permutation,
    permutations_of,
    solomon,
    solomon_log_oracle,
    subset_from_composition,
)


def S(n, *positions):
    """Descent index set: the given positions plus the mandatory n."""
    return frozenset(positions) | {n}


def ga(text):
    return parse_group_alg(text)


def test_permutation_basics():
    p = parse_permutation("3 1 2")
    assert p.n == 3
    assert p(1) == 3
    assert p.inverse() == parse_permutation("2 3 1")
    assert p.descent_set() == {1}
    assert str(p) == "3 1 2"
    assert len(list(permutations_of(4))) == 24
    with pytest.raises(InputError):
        parse_permutation("1 3")
    with pytest.raises(InputError):
        parse_permutation("0 1")


def test_then_convention():
    # (p then q)(i) = q(p(i))
    p = parse_permutation("2 1 3")
    q = parse_permutation("1 3 2")
    assert p.then(q) == parse_permutation("3 1 2")
    assert q.then(p) == parse_permutation("2 3 1")


def test_act_places_letters():
    ab = Alphabet("u:1, v:1, w:1")
    word = parse_word("u.v.w", ab)
    p = parse_permutation("3 1 2")
    assert str(p.act(word)) == "w.u.v"


def test_act_is_compatible_with_internal_product():
    ab = Alphabet("u:1, v:1, w:1")
    word = LinComb.single(parse_word("u.v.w", ab))
    for p in permutations_of(3):
        for q in permutations_of(3):
            g = GroupAlgElem.single(p)
            h = GroupAlgElem.single(q)
            lhs = act_on_tensor(internal_product(g, h), word)
            rhs = act_on_tensor(g, act_on_tensor(h, word))
            assert lhs == rhs


def test_convolution_deshuffles_then_concatenates():
    # act(g * h) on a word: pick the positions handed to g in every way,
    # act on the two subwords, concatenate
    from itertools import combinations

    ab = Alphabet("u:1, v:1, w:1")
    word = parse_word("u.v.w", ab)
    for p in permutations_of(2):
        for q in permutations_of(1):
            g, h = GroupAlgElem.single(p), GroupAlgElem.single(q)
            lhs = act_on_tensor(convolution(g, h), LinComb.single(word))
            rhs = LinComb.zero()
            for I in combinations(range(3), 2):
                J = tuple(sorted(set(range(3)) - set(I)))
                sub = ab.word(".".join(word.names[i] for i in I))
                rest = ab.word(".".join(word.names[j] for j in J))
                for u, cu in act_on_tensor(g, LinComb.single(sub)).items():
                    for v, cv in act_on_tensor(h, LinComb.single(rest)).items():
                        rhs = rhs + LinComb.single(u * v, cu * cv)
            assert lhs == rhs


def test_convolution_golden_values():
    id2 = GroupAlgElem.single(Permutation.identity(2))
    id1 = GroupAlgElem.single(Permutation.identity(1))
    assert convolution(id2, id1) == ga("1 2 3 + 1 3 2 + 2 3 1")
    assert convolution(id2, id1) == de_subset(3, S(3, 2))
    got = convolution(de_equal(2, S(2, 1)), de_equal(2, S(2)))
    want = (DescElem.basis_elem(4, (1, 1, 2)) + DescElem.basis_elem(4, (1, 3))).expand()
    assert got == want


def test_de_bases_and_moebius():
    assert de_subset(3, S(3)) == ga("1 2 3")
    assert de_equal(3, S(3, 1)) == ga("2 1 3 + 3 1 2")
    assert de_subset(3, S(3, 1, 2)).coeff(parse_permutation("3 2 1")) == 1
    assert len(de_subset(3, S(3, 1, 2)).terms) == 6
    d = DescElem.basis_elem(4, (2, 2)) - DescElem.basis_elem(4, (1, 3), "equal")
    assert d.to_equal().to_subset().to_equal() == d.to_equal()
    assert d.to_subset().to_equal() == d.to_equal()


def test_de_index_set_validation():
    with pytest.raises(InputError, match="must contain n"):
        de_equal(3, frozenset({1}))
    with pytest.raises(InputError):
        de_subset(3, frozenset({0, 3}))


def test_compositions_order_and_subset_conversion():
    assert list(compositions(3)) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    for n in range(1, 6):
        for c in compositions(n):
            assert composition_from_subset(n, subset_from_composition(c)) == c


def test_solomon_golden_degree_three():
    sol = solomon(3)
    assert sol.coeff(parse_permutation("1 2 3")) == Fraction(1, 3)
    assert sol.coeff(parse_permutation("2 1 3")) == Fraction(-1, 6)
    assert sol.coeff(parse_permutation("3 1 2")) == Fraction(-1, 6)
    assert sol.coeff(parse_permutation("1 3 2")) == Fraction(-1, 6)
    assert sol.coeff(parse_permutation("2 3 1")) == Fraction(-1, 6)
    assert sol.coeff(parse_permutation("3 2 1")) == Fraction(1, 3)


def test_dynkin_golden_degree_three():
    assert dynkin(3) == ga("1 2 3 + -1*2 1 3 + -1*3 1 2 + 3 2 1")
    assert dynkin(1) == ga("1")


def test_solomon_matches_log_oracle():
    for n in range(1, 6):
        assert solomon(n) == solomon_log_oracle(n)


def test_solomon_is_idempotent():
    for n in range(1, 5):
        sol = solomon(n)
        assert internal_product(sol, sol) == sol


def test_dynkin_is_quasi_idempotent():
    for n in range(1, 5):
        dyn = dynkin(n)
        assert internal_product(dyn, dyn) == dyn * n


def is_primitive(d):
    for (left, right), c in desc_coproduct(d).items():
        if left and right and c:
            return False
    return True


def test_solomon_and_dynkin_are_primitive():
    for n in range(1, 5):
        assert is_primitive(DescElem.from_group_alg(solomon(n)))
        assert is_primitive(DescElem.from_group_alg(dynkin(n)))
    assert not is_primitive(DescElem.basis_elem(3, (1, 2)))


def test_descent_span_is_closed_under_internal_product():
    got = internal_product(de_subset(3, S(3, 1)), de_subset(3, S(3, 2)))
    d = DescElem.from_group_alg(got).to_equal()
    want = (
        DescElem.basis_elem(3, (1, 1, 1), "equal")
        + DescElem.basis_elem(3, (1, 2), "equal").scale(2)
        + DescElem.basis_elem(3, (2, 1), "equal")
        + DescElem.basis_elem(3, (3,), "equal").scale(2)
    )
    assert d == want
    for a in compositions(3):
        for b in compositions(3):
            prod = internal_product(
                DescElem.basis_elem(3, a).expand(), DescElem.basis_elem(3, b).expand()
            )
            DescElem.from_group_alg(prod)  # must not raise


def test_from_group_alg_rejects_non_descent_elements():
    with pytest.raises(InputError, match="not in the descent span"):
        DescElem.from_group_alg(ga("2 1 3"))


def test_convolution_closure_in_the_descent_span():
    for p in range(1, 5):
        for q in range(1, 6 - p):
            for c in compositions(p):
                for d in compositions(q):
                    g = DescElem.basis_elem(p, c, "equal").expand()
                    h = DescElem.basis_elem(q, d, "equal").expand()
                    DescElem.from_group_alg(convolution(g, h))  # must not raise


def test_de_subset_is_convolution_of_identity_blocks():
    for n in range(1, 6):
        for c in compositions(n):
            acc = GroupAlgElem.single(Permutation.identity(c[0]))
            for part in c[1:]:
                acc = convolution(acc, GroupAlgElem.single(Permutation.identity(part)))
            assert acc == de_subset(n, subset_from_composition(c))


def test_identity_coefficient_normalization():
    # in the subset basis the coefficient of the full one-part composition
    # is 1 for solomon and n for dynkin
    for n in range(1, 6):
        sol = DescElem.from_group_alg(solomon(n)).to_subset()
        assert sol.coeffs.get((n,)) == 1
        dyn = DescElem.from_group_alg(dynkin(n)).to_subset()
        assert dyn.coeffs.get((n,)) == n


def test_convolution_concatenates_subset_basis():
    for c in ((1, 1), (2,)):
        for d in ((1,), (2, 1)):
            lhs = convolution(
                DescElem.basis_elem(sum(c), c, "subset").expand(),
                DescElem.basis_elem(sum(d), d, "subset").expand(),
            )
            rhs = DescElem.basis_elem(sum(c) + sum(d), c + d, "subset").expand()
            assert lhs == rhs


def test_desc_coproduct_splits_parts():
    got = desc_coproduct(DescElem.basis_elem(2, (2,)))
    assert got.coeff(((), (2,))) == 1
    assert got.coeff(((1,), (1,))) == 1
    assert got.coeff(((2,), ())) == 1
    assert len(got) == 3


def test_desc_coproduct_is_coassociative():
    def subset_elem(comp):
        return DescElem(sum(comp), "subset", {comp: Fraction(1)})

    for n in range(1, 6):
        for c in compositions(n):
            left = LinComb.zero()
            right = LinComb.zero()
            for (a, b), co in desc_coproduct(subset_elem(c)).items():
                for (a1, a2), ci in desc_coproduct(subset_elem(a)).items():
                    left = left + LinComb.single((a1, a2, b), co * ci)
                for (b1, b2), ci in desc_coproduct(subset_elem(b)).items():
                    right = right + LinComb.single((a, b1, b2), co * ci)
            assert left == right


def test_dynkin_image_is_lie():
    for n in range(1, 5):
        assert lie_projection_check(dynkin(n)) is True
        assert lie_projection_check(solomon(n)) is True
    assert lie_projection_check(ga("1 2")) is False


def test_lie_check_bound():
    with pytest.raises(SizeBoundError, match="size bound"):
        lie_projection_check(GroupAlgElem.single(Permutation.identity(7)))


def test_degree_bound():
    with pytest.raises(SizeBoundError, match="size bound"):
        de_equal(8, frozenset(range(1, 9)))
    with pytest.raises(SizeBoundError, match="size bound"):
        dynkin(8)


def test_parse_group_alg_roundtrip():
    g = ga("1/2*1 2 + -1/2*2 1")
    assert g == solomon(2)
    assert parse_group_alg(str(g)) == g
    with pytest.raises(InputError):
        parse_group_alg("1 2 + 1 2 3")


def test_parse_composition():
    assert parse_composition("(1,2)") == (1, 2)
    assert parse_composition("1, 2") == (1, 2)
    with pytest.raises(InputError):
        parse_composition("(1, 0)")


@given(st.integers(min_value=1, max_value=5), st.data())
def test_moebius_roundtrip_random(n, data):
    comps = list(compositions(n))
    coeffs = {
        c: Fraction(data.draw(st.integers(-3, 3), label=str(c)))
        for c in data.draw(st.sets(st.sampled_from(comps), max_size=3), label="support")
    }
    d = DescElem(n, "subset", coeffs)
    assert d.to_equal().to_subset() == d.to_subset()
    assert d.to_equal().expand() == d.expand()
