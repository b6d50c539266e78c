"""Normal structure: lattice, chief series, socle, Frattini subgroup, radicals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import config
from .errors import CapacityError, DomainError, IntegrityError
from .permcore.groups import PermGroup, prime_factors
from .permcore.ops import commutator_subgroup_mask, conjugacy_class_masks, p_part
from .permcore.quotient import coset_action, section

# Nonabelian simple groups of order < 20160; order determines the group here.
SIMPLE_CATALOG = {
    60: "A5",
    168: "PSL(2,7)",
    360: "A6",
    504: "PSL(2,8)",
    660: "PSL(2,11)",
    1092: "PSL(2,13)",
    2448: "PSL(2,17)",
    2520: "A7",
    3420: "PSL(2,19)",
    4080: "PSL(2,16)",
    5616: "PSL(3,3)",
    6048: "PSU(3,3)",
    6072: "PSL(2,23)",
    7800: "PSL(2,25)",
    7920: "M11",
    9828: "PSL(2,27)",
    12180: "PSL(2,29)",
    14880: "PSL(2,31)",
}
CATALOG_LIMIT = 20160
LABEL_ORDER = {label: order for order, label in SIMPLE_CATALOG.items()}


@dataclass(frozen=True, order=True)
class SimpleType:
    """Isomorphism type of a simple group: C_p or a catalogued nonabelian group."""

    order: int
    label: str

    @property
    def abelian(self):
        return self.label.startswith("C")

    @property
    def prime(self):
        return self.order if self.abelian else None

    def primes(self):
        return prime_factors(self.order)

    def __str__(self):
        return self.label


def cyclic_type(p):
    return SimpleType(p, f"C{p}")


def nonabelian_type(order_or_label):
    if isinstance(order_or_label, str):
        if order_or_label not in LABEL_ORDER:
            raise DomainError(f"unknown simple group label {order_or_label!r}")
        return SimpleType(LABEL_ORDER[order_or_label], order_or_label)
    order = int(order_or_label)
    if order >= CATALOG_LIMIT:
        raise CapacityError(f"nonabelian simple order {order} is outside the catalog (< {CATALOG_LIMIT})")
    if order not in SIMPLE_CATALOG:
        raise DomainError(f"no nonabelian simple group of order {order}")
    return SimpleType(order, SIMPLE_CATALOG[order])


def simple_type_of_order(order):
    """(SimpleType, copies) for a characteristically simple group of this order."""
    ps = prime_factors(order)
    if len(ps) == 1:
        p = ps[0]
        k = 0
        while order > 1:
            order //= p
            k += 1
        return cyclic_type(p), k
    for s in sorted(SIMPLE_CATALOG):
        k, n = 0, order
        while n % s == 0:
            n //= s
            k += 1
        if n == 1 and k:
            return nonabelian_type(s), k
    if order >= CATALOG_LIMIT:
        raise CapacityError(f"cannot identify a chief factor of order {order} (catalog ends below {CATALOG_LIMIT})")
    raise DomainError(f"order {order} is not a power of a simple group order")


# -- lattice -----------------------------------------------------------------


class NormalLattice:
    """All normal subgroups of ``parent`` as bitmasks, sorted by order."""

    def __init__(self, parent, masks):
        self.parent = parent
        t = parent.table
        self.masks = sorted(masks, key=lambda m: (m.bit_count(), tuple(t.members(m))))
        self.position = {m: i for i, m in enumerate(self.masks)}

    def __len__(self):
        return len(self.masks)

    def __iter__(self):
        return iter(self.members)

    @cached_property
    def members(self):
        return [self.parent.sub(m) for m in self.masks]

    @cached_property
    def containment(self):
        k = len(self.masks)
        out = np.zeros((k, k), dtype=bool)
        for i, a in enumerate(self.masks):
            for j, b in enumerate(self.masks):
                out[i, j] = a & b == a
        return out

    def above(self, k_mask, within=None):
        """Members strictly containing ``k_mask`` (and inside ``within``)."""
        out = []
        for m in self.masks:
            if m != k_mask and m & k_mask == k_mask and (within is None or m & within == m):
                out.append(m)
        return out

    def minimal_over(self, k_mask, within=None):
        cands = self.above(k_mask, within)
        out = []
        for m in cands:
            if not any(c != m and c & m == c for c in cands):
                out.append(m)
        return out

    def minimal_normal(self):
        return self.minimal_over(1)

    def largest(self, predicate):
        """Largest member satisfying ``predicate`` (ties impossible for N0-closed ones)."""
        best = 1
        for m in self.masks:
            if predicate(m) and m.bit_count() >= best.bit_count():
                best = m
        return best


def normal_subgroups(G):
    lat = G.cache.get("lattice")
    if lat is not None:
        return lat
    t = G.table
    config.check("order", t.n)
    closures = []
    for cls in conjugacy_class_masks(G):
        if cls == 1:
            continue
        closure = t.closure(t.members(cls))
        if closure not in closures:
            closures.append(closure)
    members = {1}
    for c in closures:
        new = {t.join(m, c) for m in members}
        members |= new
    lat = NormalLattice(G, members)
    G.cache["lattice"] = lat
    return lat


# -- chief series ------------------------------------------------------------


class ChiefFactor:
    """One factor H/K of a chief series of ``parent``."""

    def __init__(self, parent, index, lower, upper):
        self.parent = parent
        self.index = index
        self.lower = lower
        self.upper = upper
        self.simple_type, self.copies = simple_type_of_order(upper.order() // lower.order())

    def __repr__(self):
        return f"<ChiefFactor {self.index}: {self.simple_type}^{self.copies} ({self.upper.order()}/{self.lower.order()})>"

    @property
    def order(self):
        return self.upper.order() // self.lower.order()

    @property
    def abelian(self):
        return self.simple_type.abelian

    def primes(self):
        return self.simple_type.primes()

    @cached_property
    def epimorphism(self):
        """H -> H/K with the factor realised as a permutation group."""
        return section(self.parent, self.upper.mask, self.lower.mask)

    @property
    def factor(self):
        return self.epimorphism.target

    @cached_property
    def action(self):
        """G -> its image acting on the cosets of K in H by conjugation."""
        from .permcore.quotient import Epimorphism
        from .permcore.perm import Permutation

        G = self.parent
        t = G.table
        h_idx = t.members(self.upper.mask)
        k_idx = t.members(self.lower.mask)
        label = np.full(t.n, -1, dtype=np.int64)
        reps = []
        for i in h_idx:
            if label[i] < 0:
                label[t.mul[i, k_idx]] = len(reps)
                reps.append(int(i))
        reps = np.array(reps)
        # rows[g, c] = coset of g^-1 rep_c g
        rows = label[t.conj(reps[None, :], t.arange[:, None])]
        gens = [Permutation._trusted(rows[g].tolist()) for g in G.gen_indices]
        target = PermGroup(len(reps), gens)
        tt = target.table
        element_map = np.array([tt.index(tuple(r)) for r in rows.tolist()], dtype=np.int64)
        kernel = G.sub(t.mask_from_bool(element_map == 0))
        return Epimorphism(G, target, element_map, kernel)


def _pick(lattice, cands, reverse):
    t = lattice.parent.table
    key = lambda m: (m.bit_count(), tuple(t.members(m)))
    return max(cands, key=key) if reverse else min(cands, key=key)


def chief_chain(G, lower=1, upper=None, reverse=False):
    """Masks lower = M_0 < M_1 < ... < M_r = upper of a G-chief series segment."""
    lat = normal_subgroups(G)
    upper = G.whole if upper is None else upper
    key = ("chain", lower, upper, reverse)
    got = G.cache.get(key)
    if got is not None:
        return got
    chain = [lower]
    while chain[-1] != upper:
        chain.append(_pick(lat, lat.minimal_over(chain[-1], within=upper), reverse))
    G.cache[key] = chain
    return chain


def chief_series(G, reverse=False):
    key = ("chief_series", reverse)
    got = G.cache.get(key)
    if got is not None:
        return got
    chain = chief_chain(G, reverse=reverse)
    series = [
        ChiefFactor(G, i, G.sub(a), G.sub(b)) for i, (a, b) in enumerate(zip(chain, chain[1:]))
    ]
    G.cache[key] = series
    return series


def all_chief_factors(G):
    """Every chief factor H/K of G (all covering pairs of the normal lattice)."""
    got = G.cache.get("all_chief_factors")
    if got is not None:
        return got
    lat = normal_subgroups(G)
    out = []
    for k in lat.masks:
        for h in lat.minimal_over(k):
            out.append(ChiefFactor(G, len(out), G.sub(k), G.sub(h)))
    G.cache["all_chief_factors"] = out
    return out


def chief_types_between(G, lower, upper):
    """Simple types (with copies) of the G-chief factors between two normal subgroups."""
    chain = chief_chain(G, lower, upper)
    return [simple_type_of_order(b.bit_count() // a.bit_count()) for a, b in zip(chain, chain[1:])]


def com(G):
    return {f.simple_type for f in chief_series(G)}


def com_split(G):
    types = com(G)
    return {s for s in types if s.abelian}, {s for s in types if not s.abelian}


def is_monolithic(G):
    return len(normal_subgroups(G).minimal_normal()) == 1


# -- characteristic subgroups ------------------------------------------------


def socle(G):
    if G.order() == 1:
        raise DomainError("the socle of the trivial group is undefined")
    t = G.table
    mask = 1
    for m in normal_subgroups(G).minimal_normal():
        mask = t.join(mask, m)
    return G.sub(mask)


def pi_core_mask(G, primes):
    primes = set(primes)
    return normal_subgroups(G).largest(lambda m: set(prime_factors(m.bit_count())) <= primes)


def pi_core(G, primes):
    return G.sub(pi_core_mask(G, primes))


def p_layer_mask(G, p):
    """O_{p',p}(G)."""
    others = [q for q in prime_factors(G.order()) if q != p]
    base = pi_core_mask(G, others)
    lat = normal_subgroups(G)
    size = base.bit_count()

    def ok(m):
        if m & base != base:
            return False
        idx = m.bit_count() // size
        return p_part(idx, p) == idx

    return lat.largest(ok)


def p_layer(G, p):
    return G.sub(p_layer_mask(G, p))


def n0_radical(G, class_pred):
    """Product of all normal subgroups N with ``class_pred(N)`` true.

    The result is re-checked against the predicate; failure means the
    predicate is not closed under normal products on this group.
    """
    if G.order() > 1 and not class_pred(G.trivial_subgroup()):
        raise DomainError("class predicate must hold for the trivial group")
    t = G.table
    mask = 1
    for m in normal_subgroups(G).masks:
        if m != 1 and class_pred(G.sub(m)):
            mask = t.join(mask, m)
    result = G.sub(mask)
    if not class_pred(result):
        raise IntegrityError(
            f"predicate fails on the product of qualifying normal subgroups (order {result.order()})"
        )
    return result


def e_radical_mask(G, contains_type):
    """Largest normal subgroup all of whose composition factors satisfy ``contains_type``."""
    lat = normal_subgroups(G)
    return lat.largest(lambda m: all(contains_type(s) for s, _ in chief_types_between(G, 1, m)))


def e_radical(G, contains_type):
    return G.sub(e_radical_mask(G, contains_type))


def soluble_radical_mask(G):
    return e_radical_mask(G, lambda s: s.abelian)


def omega_d_radical_mask(G, omega):
    """``omega`` may be any container of primes (a set or a cofinite CoSet)."""
    lat = normal_subgroups(G)

    def ok(m):
        return all(
            any(p in omega for p in s.primes()) for s, _ in chief_types_between(G, 1, m)
        )

    return lat.largest(ok)


def omega_d_radical(G, omega):
    return G.sub(omega_d_radical_mask(G, omega))


def fitting_mask(G):
    t = G.table
    mask = 1
    for p in prime_factors(t.n):
        mask = t.join(mask, pi_core_mask(G, [p]))
    return mask


# -- Frattini subgroup -------------------------------------------------------


def _p_frattini_mask(G, mask, p):
    """Phi(P) = P' P^p for a p-subgroup P of G (normal in G)."""
    t = G.table
    idx = t.members(mask)
    comm = commutator_subgroup_mask(G, mask, mask) if mask != 1 else 1
    powers = idx.copy()
    for _ in range(p - 1):
        powers = t.mul[powers, idx]
    return t.closure(np.concatenate([t.members(comm), powers]))


def _modulo_generators(G, n_mask):
    """Elements whose images generate G/N, chosen greedily by element order."""
    t = G.table
    order = np.lexsort((t.arange, -t.orders))
    gens = []
    cur = n_mask
    for x in order:
        if cur == G.whole:
            break
        if not (cur >> int(x)) & 1:
            gens.append(int(x))
            cur = t.closure(t.generators(n_mask) + gens)
    return gens


def has_proper_supplement(G, n_mask):
    """True iff some proper subgroup H satisfies HN = G."""
    t = G.table
    xs = _modulo_generators(G, n_mask)
    if not xs:
        return G.order() > 1  # N = G, and the trivial subgroup supplements it
    n_idx = [int(i) for i in t.members(n_mask)]
    choice = [0] * len(xs)

    def rec(level):
        if level == len(xs):
            lifted = [int(t.mul[x, n]) for x, n in zip(xs, choice)]
            return t.closure(lifted) != G.whole
        for n in n_idx:
            choice[level] = n
            if rec(level + 1):
                return True
        return False

    return rec(0)


def frattini_mask(G):
    got = G.cache.get("frattini")
    if got is not None:
        return got
    config.check("frattini", G.order())
    t = G.table
    primes = prime_factors(t.n)
    if t.n == 1:
        result = 1
    elif len(primes) == 1:
        result = _p_frattini_mask(G, G.whole, primes[0])
    else:
        from .permcore.ops import is_nilpotent_by_sylow, sylow_mask

        if is_nilpotent_by_sylow(G):
            result = 1
            for p in primes:
                result = t.join(result, _p_frattini_mask(G, sylow_mask(G, p), p))
        else:
            result = 1
            for n in normal_subgroups(G).minimal_normal():
                if len(prime_factors(n.bit_count())) != 1:
                    continue  # nonabelian minimal normal subgroups are never in Phi
                if not has_proper_supplement(G, n):
                    epi = coset_action(G, G.sub(n))
                    result = epi.preimage_mask(frattini_mask(epi.target))
                    break
    G.cache["frattini"] = result
    return result


def frattini(G):
    return G.sub(frattini_mask(G))


def all_subgroup_masks(G):
    """Every subgroup, by cyclic extension (test oracle; small groups only)."""
    t = G.table
    cyclic = sorted({t.closure([x]) for x in range(t.n)}, key=lambda m: m.bit_count())
    found = set(cyclic) | {1}
    layer = list(found)
    while layer:
        nxt = []
        for u in layer:
            for c in cyclic:
                if c & u != c:
                    j = t.join(u, c)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
        layer = nxt
    return found


def frattini_by_maximal_subgroups(G):
    subs = all_subgroup_masks(G)
    proper = [m for m in subs if m != G.whole]
    maximal = [m for m in proper if not any(o != m and o & m == m for o in proper)]
    mask = G.whole
    for m in maximal:
        mask &= m
    return G.sub(mask)
