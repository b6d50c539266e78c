"""Quotients realised as faithful permutation groups."""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from .groups import PermGroup
from .perm import Permutation
from .table import GroupTable


class Epimorphism:
    """A surjection ``source -> target`` known on every element of the source.

    ``element_map[i]`` is the target table index of source element ``i``;
    entries are -1 outside ``domain`` (used for sections H/K of a larger
    group, where the map is only defined on H).
    """

    def __init__(self, source, target, element_map, kernel, domain=None):
        self.source = source
        self.target = target
        self.element_map = element_map
        self.kernel = kernel
        self.domain = source.whole if domain is None else domain

    def __call__(self, x):
        i = self.source.index(x)
        j = self.element_map[i]
        if j < 0:
            raise DomainError(f"{x} is outside the domain of the map")
        return self.target.table.perm(int(j))

    @property
    def generator_images(self):
        return {g: self(g) for g in self.source.generators}

    def image_mask(self, mask):
        idx = self.source.table.members(mask & self.domain)
        return self.target.table.mask(np.unique(self.element_map[idx]))

    def image(self, sub):
        return self.target.sub(self.image_mask(sub.mask))

    def preimage_mask(self, tmask):
        tb = self.target.table.bools(tmask)
        em = self.element_map
        hit = np.zeros(self.source.table.n, dtype=bool)
        ok = em >= 0
        hit[ok] = tb[em[ok]]
        return self.source.table.mask_from_bool(hit)

    def preimage(self, tsub):
        return self.source.sub(self.preimage_mask(tsub.mask))


def _coset_labels(table, h_idx, k_idx):
    label = np.full(table.n, -1, dtype=np.int64)
    reps = []
    for i in h_idx:
        if label[i] < 0:
            label[table.mul[i, k_idx]] = len(reps)
            reps.append(int(i))
    return label, np.array(reps, dtype=np.int64)


def _block_images(table, h_idx, k_idx, reps):
    """Action of the coset reps on the K-orbits; None if not faithful on H/K."""
    rows = table.rows
    orbit_min = rows[k_idx].min(axis=0)  # smallest point of each point's K-orbit
    reps_pts = np.unique(orbit_min)
    if len(reps_pts) >= len(reps):
        return None
    relabel = np.full(rows.shape[1], -1, dtype=np.int64)
    relabel[reps_pts] = np.arange(len(reps_pts))
    images = relabel[orbit_min[rows[reps][:, reps_pts]]]
    moved = (images != np.arange(len(reps_pts))[None, :]).any(axis=0)
    images = images[:, moved]
    if moved.sum() == 0:
        return None
    keep = np.flatnonzero(moved)
    compress = np.full(len(reps_pts), -1, dtype=np.int64)
    compress[keep] = np.arange(len(keep))
    # blocks that are moved are permuted among themselves
    images = compress[images]
    if len(np.unique(images, axis=0)) != len(reps):
        return None
    return images


def section(group, h_mask, k_mask, name=None):
    """Realise H/K (K normal in H, both subgroups of ``group``).

    Returns an Epimorphism from ``group`` whose domain is H, kernel K.
    The target acts on the K-orbits of points when that action is faithful
    and smaller than |H:K|, and regularly on the cosets otherwise.
    """
    table = group.table
    h_idx = table.members(h_mask)
    k_idx = table.members(k_mask)
    label, reps = _coset_labels(table, h_idx, k_idx)
    m = len(reps)
    coset_mul = label[table.mul[np.ix_(reps, reps)]]  # coset a * coset b
    images = None
    if m > 1:
        images = _block_images(table, h_idx, k_idx, reps)
    if images is None:
        # regular action: coset c acts by right multiplication
        images = coset_mul.T.copy() if m > 1 else np.zeros((1, 1), dtype=np.int64)
    new_table, pos = GroupTable.from_unsorted(images.astype(np.int32), coset_mul)
    element_map = np.full(table.n, -1, dtype=np.int64)
    element_map[h_idx] = pos[label[h_idx]]
    hgens = table.generators(h_mask) if h_mask != group.whole else list(group.gen_indices)
    tgens = []
    for gi in hgens:
        j = int(element_map[gi])
        if j != 0:
            tgens.append(Permutation._trusted(new_table.rows[j].tolist()))
    target = PermGroup(images.shape[1], tgens, name=name)
    target._set_table(new_table)
    kernel = group.sub(k_mask)
    return Epimorphism(group, target, element_map, kernel, domain=h_mask)


def coset_action(group, normal):
    """The natural map G -> G/N with the quotient realised faithfully."""
    if normal is group:
        normal = group.as_subgroup()
    if getattr(normal, "parent", None) is not group:
        raise DomainError("subgroup does not belong to this group")
    mask = normal.mask
    quotients = group.cache.setdefault("quotients", {})
    got = quotients.get(mask)
    if got is not None:
        return got
    if not group.table.is_normal(mask, group.gen_indices):
        raise DomainError("subgroup is not normal")
    if mask == 1:
        epi = Epimorphism(group, group, np.arange(group.table.n), normal)
    else:
        epi = section(group, group.whole, mask)
    quotients[mask] = epi
    return epi


def quotient(group, normal):
    return coset_action(group, normal).target
