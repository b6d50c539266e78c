import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formlab import config
from formlab.errors import CapacityError, ParseError
from formlab.permcore import (
    Module,
    Permutation,
    are_isomorphic,
    conjugacy_classes,
    contains_element,
    coset_action,
    derived_subgroup,
    format_group_text,
    normal_closure,
    parse_cycles,
    parse_group,
    semidirect,
    subgroup_generated,
    sylow_subgroup,
)
from formlab.permcore.named import (
    alternating,
    cyclic,
    dihedral,
    quaternion,
    special_linear_2,
    symmetric,
)

from .oracles import all_perms, brute_closure, brute_subgroups, perms_of

S3_TEXT = "degree 3\n(1 2 3)\n(1 2)"


def cyc(text, n):
    return parse_cycles(text, n)


# -- parsing ------------------------------------------------------------------


def test_parse_s3_matches_closure():
    G = parse_group(S3_TEXT)
    assert G.order() == 6
    assert set(G.elements()) == brute_closure(G.generators, 3)


def test_parse_trivial_group():
    G = parse_group("degree 1\n")
    assert G.order() == 1
    assert G.is_trivial()


def test_parse_klein_group():
    G = parse_group("degree 4\n(1 2)(3 4)\n(1 3)(2 4)")
    assert G.order() == 4 == len(brute_closure(G.generators, 4))


@pytest.mark.parametrize("text, line", [
    ("degree 3\n(1 2 3\n", 2),
    ("degree 3\n(1 4)\n", 2),
    ("degree 3\n(1 2)\n(1 2 1)\n", 3),
    ("degree 3\n(1 x)\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_group(text)
    assert exc.value.line == line


def test_format_round_trip():
    G = alternating(5)
    H = parse_group(format_group_text(G.degree, G.generators))
    assert H.order() == 60
    assert set(H.elements()) == set(G.elements())


def test_composition_is_left_to_right():
    a, b = cyc("(1 2)", 3), cyc("(2 3)", 3)
    # apply a then b: 1 -> 2 -> 3
    assert (a * b)[0] == 2


# -- order and membership ------------------------------------------------------


@pytest.mark.parametrize("group, order", [
    (symmetric(3), 6),
    (alternating(5), 60),
    (parse_group("degree 2\n"), 1),
])
def test_order(group, order):
    assert group.order() == order == len(brute_closure(group.generators, group.degree))


def test_contains():
    S3, A4 = symmetric(3), alternating(4)
    assert contains_element(S3, cyc("(1 2 3)", 3))
    assert not contains_element(A4, cyc("(1 2)", 4))
    assert contains_element(A4, Permutation.identity(4))
    # parity oracle
    for x in all_perms(4):
        even = sum(len(c) - 1 for c in x.cycles()) % 2 == 0
        assert contains_element(A4, x) == even


def test_subgroup_generated():
    S3, S4 = symmetric(3), symmetric(4)
    assert subgroup_generated(S3, [cyc("(1 2 3)", 3)]).order() == 3
    assert subgroup_generated(S3, []).order() == 1
    V = subgroup_generated(S4, [cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)])
    assert perms_of(S4, V.mask) == brute_closure([cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)], 4)


def _conjugate_closure(G, elems):
    conj = {g.inverse() * x * g for x in elems for g in G.elements()}
    return brute_closure(list(conj), G.degree)


def test_normal_closure():
    S3, S4 = symmetric(3), symmetric(4)
    assert normal_closure(S3, [cyc("(1 2)", 3)]).order() == 6
    N = normal_closure(S4, [cyc("(1 2 3)", 4)])
    assert N.order() == 12
    assert perms_of(S4, N.mask) == _conjugate_closure(S4, [cyc("(1 2 3)", 4)])
    assert normal_closure(S4, [Permutation.identity(4)]).order() == 1


def _brute_derived(G):
    els = G.elements()
    comms = {a.inverse() * b.inverse() * a * b for a in els for b in els}
    return brute_closure(list(comms), G.degree)


@pytest.mark.parametrize("group, order", [
    (symmetric(3), 3), (cyclic(6), 1), (alternating(5), 60), (symmetric(4), 12),
])
def test_derived_subgroup(group, order):
    D = derived_subgroup(group)
    assert D.order() == order
    assert perms_of(group, D.mask) == _brute_derived(group)


def test_sylow():
    S4 = symmetric(4)
    P = sylow_subgroup(S4, 2)
    assert P.order() == 8
    assert are_isomorphic(P, dihedral(4))
    assert sylow_subgroup(symmetric(3), 5).order() == 1
    Q = quaternion()
    assert sylow_subgroup(Q, 2).order() == 8


def test_coset_action():
    S3 = symmetric(3)
    A3 = subgroup_generated(S3, [cyc("(1 2 3)", 3)])
    assert coset_action(S3, A3).target.order() == 2
    assert coset_action(S3, S3.as_subgroup()).target.order() == 1
    SL = special_linear_2(3)
    from formlab.permcore import center

    Z = center(SL)
    assert Z.order() == 2
    image = coset_action(SL, Z).target
    assert image.order() == 12
    assert are_isomorphic(image, alternating(4))


def test_coset_action_is_a_homomorphism():
    S4 = symmetric(4)
    V = subgroup_generated(S4, [cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)])
    epi = coset_action(S4, V)
    t, q = S4.table, epi.target.table
    em = epi.element_map
    for a in range(t.n):
        for b in range(t.n):
            assert em[t.mul[a, b]] == q.mul[em[a], em[b]]
    assert int((em == 0).sum()) == 4


# -- semidirect products -----------------------------------------------------


def test_semidirect_inversion_is_s3():
    C2 = cyclic(2)
    M = Module(3, 1, (((2,),),))
    E = semidirect(M, C2)
    assert E.order() == 6
    assert are_isomorphic(E, symmetric(3))


def test_semidirect_trivial_q():
    M = Module(2, 2, ())
    E = semidirect(M, parse_group("degree 1\n"))
    assert E.order() == 4
    assert E.is_abelian()


def test_semidirect_v4_by_c3_is_a4():
    M = Module(2, 2, (((0, 1), (1, 1)),))
    E = semidirect(M, cyclic(3))
    assert E.order() == 12
    assert are_isomorphic(E, alternating(4))


# -- isomorphism and classes ---------------------------------------------------


def test_isomorphism_examples():
    assert not are_isomorphic(quaternion(), dihedral(4))
    E = semidirect(Module(3, 1, (((2,),),)), cyclic(2))
    assert are_isomorphic(symmetric(3), E)
    A5 = alternating(5)
    assert are_isomorphic(A5, A5)


def test_isomorphism_capacity():
    with config.capacity(order=10):
        with pytest.raises(CapacityError):
            are_isomorphic(symmetric(4), symmetric(4))


def test_isomorphism_is_an_equivalence():
    groups = [cyclic(4), dihedral(2), parse_group("degree 4\n(1 2 3 4)"), quaternion(), dihedral(4)]
    rel = {(i, j): are_isomorphic(a, b) for i, a in enumerate(groups) for j, b in enumerate(groups)}
    for i, j, k in itertools.product(range(len(groups)), repeat=3):
        assert rel[i, i]
        assert rel[i, j] == rel[j, i]
        if rel[i, j] and rel[j, k]:
            assert rel[i, k]


def _class_sizes(G):
    els = G.elements()
    seen, sizes = set(), []
    for x in els:
        if x in seen:
            continue
        cls = {g.inverse() * x * g for g in els}
        seen |= cls
        sizes.append(len(cls))
    return sorted(sizes)


@pytest.mark.parametrize("group, sizes", [
    (symmetric(3), [1, 2, 3]),
    (cyclic(5), [1] * 5),
    (quaternion(), [1, 1, 2, 2, 2]),
])
def test_conjugacy_classes(group, sizes):
    got = sorted(len(c) for c in conjugacy_classes(group))
    assert got == sizes == _class_sizes(group)


def test_subgroup_oracle_agrees_on_s3():
    # six subgroups: 1, three of order 2, A3, S3
    assert sorted(len(H) for H in brute_subgroups(symmetric(3))) == [1, 2, 2, 2, 3, 6]


# -- properties ----------------------------------------------------------------

perm5 = st.permutations(range(5)).map(Permutation)


@settings(max_examples=60, deadline=None)
@given(perm5, perm5, perm5)
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(5)


@settings(max_examples=40, deadline=None)
@given(st.lists(perm5, min_size=0, max_size=3))
def test_chain_order_matches_closure(gens):
    text = format_group_text(5, [g for g in gens if not g.is_identity()])
    G = parse_group(text)
    closure = brute_closure(G.generators, 5)
    assert G.order() == len(closure)
    assert set(G.elements()) == closure


@settings(max_examples=40, deadline=None)
@given(st.lists(perm5, min_size=1, max_size=2), perm5)
def test_membership_matches_closure(gens, x):
    G = parse_group(format_group_text(5, [g for g in gens if not g.is_identity()]))
    assert (x in G) == (x in brute_closure(G.generators, 5))
