import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from formlab.errors import DomainError
from formlab.permcore import direct_product, parse_group, subgroup_generated
from formlab.permcore.named import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion,
    special_linear_2,
    symmetric,
)
from formlab.permcore.ops import is_soluble
from formlab.structure import (
    chief_series,
    com,
    cyclic_type,
    e_radical,
    frattini,
    n0_radical,
    nonabelian_type,
    normal_subgroups,
    omega_d_radical,
    p_layer,
    pi_core,
    socle,
)

from .oracles import brute_subgroups, perms_of

SMALL = {
    "S3": symmetric(3), "S4": symmetric(4), "A4": alternating(4), "Q8": quaternion(),
    "D8": dihedral(4), "D12": dihedral(6), "C6": cyclic(6), "SL23": special_linear_2(3),
    "C2^3": elementary_abelian(2, 3), "S3xC2": direct_product(symmetric(3), cyclic(2)),
}


def brute_normal(G):
    els = G.elements()
    return {H for H in brute_subgroups(G) if all(g.inverse() * h * g in H for h in H for g in els)}


def lattice_sets(G):
    return {frozenset(perms_of(G, m)) for m in normal_subgroups(G).masks}


# -- lattice -----------------------------------------------------------------


@pytest.mark.parametrize("group, orders", [
    (symmetric(3), [1, 3, 6]),
    (symmetric(4), [1, 4, 12, 24]),
    (alternating(5), [1, 60]),
])
def test_normal_subgroup_examples(group, orders):
    assert sorted(m.bit_count() for m in normal_subgroups(group).masks) == orders


@pytest.mark.parametrize("name", sorted(SMALL))
def test_lattice_matches_brute_force(name):
    G = SMALL[name]
    assert lattice_sets(G) == brute_normal(G)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_lattice_closed_under_join_and_meet(name):
    G = SMALL[name]
    t = G.table
    masks = set(normal_subgroups(G).masks)
    for a in masks:
        for b in masks:
            assert a & b in masks
            assert t.join(a, b) in masks


# -- socle and Frattini ------------------------------------------------------


def test_socle_examples():
    assert socle(symmetric(4)).order() == 4
    assert socle(cyclic(6)).order() == 6
    assert socle(alternating(5)).order() == 60
    with pytest.raises(DomainError):
        socle(parse_group("degree 1\n"))


def brute_frattini(G):
    subs = brute_subgroups(G)
    whole = frozenset(G.elements())
    proper = [H for H in subs if H != whole]
    maximal = [H for H in proper if not any(H < K for K in proper)]
    out = set(whole)
    for H in maximal:
        out &= H
    return out


def test_frattini_examples():
    assert frattini(quaternion()).order() == 2
    assert frattini(symmetric(4)).order() == 1
    assert frattini(cyclic(5)).order() == 1
    assert frattini(parse_group("degree 1\n")).order() == 1


@pytest.mark.parametrize("name", sorted(SMALL))
def test_frattini_matches_maximal_subgroups(name):
    G = SMALL[name]
    assert perms_of(G, frattini(G).mask) == brute_frattini(G)


def test_frattini_on_larger_groups(corpus):
    from formlab.structure import frattini_by_maximal_subgroups

    for name in ("C2xC4", "SL(2,3)", "C3xQ8", "C4xD8", "C9", "F20", "C2xQ8"):
        if name in corpus.names():
            G = corpus.get(name)
            assert frattini(G).mask == frattini_by_maximal_subgroups(G).mask


# -- chief series ------------------------------------------------------------


def factor_summary(G, reverse=False):
    return [(str(f.simple_type), f.copies) for f in chief_series(G, reverse=reverse)]


def test_chief_series_examples():
    assert factor_summary(symmetric(4)) == [("C2", 2), ("C3", 1), ("C2", 1)]
    SL = special_linear_2(3)
    series = chief_series(SL)
    assert [(str(f.simple_type), f.copies) for f in series] == [("C2", 1), ("C2", 2), ("C3", 1)]
    assert series[1].upper.order() == 8
    assert factor_summary(cyclic(7)) == [("C7", 1)]
    assert chief_series(parse_group("degree 1\n")) == []


@pytest.mark.parametrize("name", sorted(SMALL))
def test_chief_factors_are_minimal(name):
    G = SMALL[name]
    normal = brute_normal(G)
    for f in chief_series(G):
        lo, hi = perms_of(G, f.lower.mask), perms_of(G, f.upper.mask)
        assert lo < hi
        assert not any(lo < N < hi for N in normal)


def test_jordan_holder_with_reversed_tiebreak(corpus):
    for name in corpus.names():
        G = corpus.get(name)
        a = sorted(factor_summary(G))
        b = sorted(factor_summary(G, reverse=True))
        assert a == b, name


def test_com_examples():
    assert com(symmetric(4)) == {cyclic_type(2), cyclic_type(3)}
    assert com(alternating(5)) == {nonabelian_type("A5")}
    assert com(cyclic(5)) == {cyclic_type(5)}


# -- cores and radicals -------------------------------------------------------


def test_pi_core_examples():
    assert pi_core(symmetric(4), [2]).order() == 4
    assert pi_core(symmetric(3), [2]).order() == 1
    assert pi_core(symmetric(4), []).order() == 1


def test_p_layer_examples():
    assert p_layer(symmetric(3), 2).order() == 6
    assert p_layer(symmetric(3), 3).order() == 3
    assert p_layer(symmetric(4), 2).order() == 4


def test_n0_radical_examples():
    soluble = lambda H: is_soluble(H)
    assert n0_radical(symmetric(4), soluble).order() == 24
    assert n0_radical(alternating(5), soluble).order() == 1
    two = lambda H: H.order() & (H.order() - 1) == 0
    assert n0_radical(symmetric(4), two).order() == 4
    assert e_radical(symmetric(4), lambda s: s == cyclic_type(2)).order() == 4


def test_omega_d_examples():
    assert omega_d_radical(symmetric(4), {2}).order() == 4
    assert omega_d_radical(symmetric(3), {2}).order() == 1
    assert omega_d_radical(alternating(5), {2, 3, 5}).order() == 60


@pytest.mark.parametrize("name", sorted(SMALL))
def test_core_inclusions(name):
    G = SMALL[name]
    for p in G.prime_divisors():
        core = pi_core(G, [p]).mask
        assert core & p_layer(G, p).mask == core
        assert core & omega_d_radical(G, {p}).mask == core


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(sorted(SMALL)), st.sets(st.sampled_from([2, 3, 5]), max_size=3))
def test_pi_core_is_largest_normal_pi_subgroup(name, primes):
    G = SMALL[name]
    best = max(
        (N for N in brute_normal(G) if all(q in primes for q in _primes(len(N)))),
        key=len,
    )
    assert perms_of(G, pi_core(G, primes).mask) == best


def _primes(n):
    return [q for q in (2, 3, 5, 7) if n % q == 0]
