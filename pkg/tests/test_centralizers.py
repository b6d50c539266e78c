import pytest

from formlab.centralizers import (
    cp,
    cS,
    chief_centralizer,
    centralizer_of_section_mask,
    small_centralizer,
)
from formlab.errors import DomainError
from formlab.permcore.named import alternating, dihedral, quaternion, symmetric
from formlab.structure import all_chief_factors, chief_series, cyclic_type, nonabelian_type

from .oracles import perms_of


def brute_section_centralizer(G, f):
    """Elements g with h^g in hK for all h in H."""
    H, K = perms_of(G, f.upper.mask), perms_of(G, f.lower.mask)
    out = set()
    for g in G.elements():
        if all(h.inverse() * (g.inverse() * h * g) in K for h in H):
            out.add(g)
    return out


def test_chief_centralizer_examples():
    S3 = symmetric(3)
    bottom, top = chief_series(S3)
    assert chief_centralizer(S3, bottom).order() == 3
    assert chief_centralizer(S3, top).order() == 6
    D8 = dihedral(4)
    for f in chief_series(D8):
        assert chief_centralizer(D8, f).order() == 8


def test_chief_centralizer_matches_brute_force(corpus):
    for name in ("S4", "SL(2,3)", "D12", "Q8", "A4", "C3xS3"):
        G = corpus.get(name)
        for f in all_chief_factors(G):
            assert perms_of(G, chief_centralizer(G, f).mask) == brute_section_centralizer(G, f)


def test_small_centralizer_examples():
    A4 = alternating(4)
    v4, top = chief_series(A4)
    assert small_centralizer(A4, v4).order() == 1
    assert small_centralizer(A4, top).order() == 4
    A5 = alternating(5)
    (only,) = chief_series(A5)
    assert small_centralizer(A5, only).order() == 1


def test_small_centralizer_inside_centralizer(corpus):
    for name in corpus.names():
        G = corpus.get(name)
        for f in all_chief_factors(G):
            small = small_centralizer(G, f).mask
            assert small & chief_centralizer(G, f).mask == small


def test_cs_examples():
    S4 = symmetric(4)
    assert cp(S4, 2).order() == 4
    assert cp(S4, 3).order() == 12
    assert cS(S4, cyclic_type(5)).order() == 24
    assert cS(S4, nonabelian_type("A5")).order() == 24


def test_foreign_factor_rejected():
    S3, S4 = symmetric(3), symmetric(4)
    with pytest.raises(DomainError):
        chief_centralizer(S3, chief_series(S4)[0])


def test_central_factors_of_p_groups(corpus):
    Q = quaternion()
    for f in all_chief_factors(Q):
        assert centralizer_of_section_mask(Q, f.upper.mask, f.lower.mask) == Q.whole
