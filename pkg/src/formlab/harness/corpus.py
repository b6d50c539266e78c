"""Test corpora: named permutation groups within order and degree bounds."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..errors import CapacityError, DomainError, IntegrityError
from ..permcore.groups import read_group
from ..permcore.isomorphism import find_isomorphism, invariants
from ..permcore.named import (
    alternating,
    cyclic,
    dihedral,
    elementary_abelian,
    frobenius_20,
    projective_special_linear_2,
    quaternion,
    special_linear_2,
    symmetric,
    trivial,
)
from ..permcore.ops import direct_product
from ..permcore.perm import format_group_text

MAX_ORDER = 2000
MAX_DEGREE = 24
DEFAULT_ORDER = 360
MANIFEST = "manifest.json"


@dataclass
class CorpusEntry:
    name: str
    group: object
    source: str = "builtin"

    def text(self):
        return format_group_text(self.group.degree, self.group.generators)

    def checksum(self):
        return hashlib.sha256(self.text().encode("utf-8")).hexdigest()


@dataclass
class Corpus:
    entries: list
    max_order: int = DEFAULT_ORDER
    max_degree: int = MAX_DEGREE
    label: str = "builtin"
    notes: list = field(default_factory=list)

    def __post_init__(self):
        names = [e.name for e in self.entries]
        if len(set(names)) != len(names):
            raise IntegrityError("corpus names are not unique")
        for e in self.entries:
            if e.group.order() > self.max_order or e.group.degree > self.max_degree:
                raise CapacityError(f"{e.name} is outside the corpus bounds")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self):
        return [e.name for e in self.entries]

    def get(self, name):
        for e in self.entries:
            if e.name == name:
                return e.group
        raise KeyError(name)

    def manifest(self):
        return {
            "max_order": self.max_order,
            "max_degree": self.max_degree,
            "entries": [
                {"name": e.name, "order": e.group.order(), "degree": e.group.degree,
                 "sha256": e.checksum()}
                for e in self.entries
            ],
        }


def _check_bounds(max_order, max_degree):
    if max_order < 1 or max_order > MAX_ORDER:
        raise CapacityError(f"max_order must be in 1..{MAX_ORDER}, got {max_order}")
    if max_degree < 1 or max_degree > MAX_DEGREE:
        raise CapacityError(f"max_degree must be in 1..{MAX_DEGREE}, got {max_degree}")


def _base_groups():
    out = [trivial()]
    out += [cyclic(n) for n in (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)]
    out += [elementary_abelian(2, 2), elementary_abelian(2, 3), elementary_abelian(3, 2)]
    out += [dihedral(n) for n in (4, 5, 6)]
    out += [symmetric(n) for n in (3, 4, 5, 6)]
    out += [alternating(n) for n in (4, 5, 6)]
    out += [quaternion(), special_linear_2(3), special_linear_2(5),
            projective_special_linear_2(7), frobenius_20()]
    return out


# factors of the pairwise direct products
_FACTORS = ("C2", "C3", "C4", "C5", "C2^2", "S3", "D8", "Q8", "A4", "S4", "A5")


def _product_groups(base):
    by_name = {G.name: G for G in base}
    factors = [by_name[n] for n in _FACTORS]
    out = []
    for i, A in enumerate(factors):
        for B in factors[i:]:
            out.append((A, B))
    return out


def builtin_corpus(max_order=DEFAULT_ORDER, max_degree=MAX_DEGREE):
    """Deterministic corpus of small groups and pairwise direct products, up to isomorphism."""
    _check_bounds(max_order, max_degree)
    base = _base_groups()
    candidates = list(base)
    for A, B in _product_groups(base):
        if A.order() * B.order() <= max_order and A.degree + B.degree <= max_degree:
            candidates.append(direct_product(A, B, name=f"{A.name}x{B.name}"))
    entries, buckets = [], {}
    for G in candidates:
        if G.order() > max_order or G.degree > max_degree:
            continue
        bucket = buckets.setdefault(invariants(G), [])
        if any(find_isomorphism(G, H) is not None for H in bucket):
            continue
        bucket.append(G)
        entries.append(CorpusEntry(G.name, G))
    return Corpus(entries, max_order, max_degree, label="builtin")


def pinned_manifest():
    """The manifest of the default builtin corpus shipped with the package."""
    path = resources.files("formlab") / "data" / "corpus_manifest.json"
    return json.loads(path.read_text(encoding="utf-8"))


def check_manifest(corpus, manifest):
    """Raise IntegrityError unless ``corpus`` matches ``manifest`` exactly."""
    got = corpus.manifest()["entries"]
    want = manifest["entries"]
    if got != want:
        names = {e["name"] for e in got} ^ {e["name"] for e in want}
        raise IntegrityError(
            f"corpus does not match its manifest ({len(got)} vs {len(want)} entries"
            + (f"; differing names {sorted(names)}" if names else "") + ")"
        )


def default_corpus():
    corpus = builtin_corpus()
    check_manifest(corpus, pinned_manifest())
    return corpus


def write_corpus(corpus, out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for e in corpus.entries:
        (out / f"{e.name}.grp").write_text(e.text(), encoding="utf-8")
    (out / MANIFEST).write_text(json.dumps(corpus.manifest(), indent=2) + "\n", encoding="utf-8")


def load_corpus(path):
    """Read a corpus directory; with a manifest, entries follow it and checksums must match."""
    path = Path(path)
    if not path.is_dir():
        raise DomainError(f"{path} is not a corpus directory")
    manifest_path = path / MANIFEST
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
        names = [e["name"] for e in manifest["entries"]]
        max_order = manifest.get("max_order", MAX_ORDER)
        max_degree = manifest.get("max_degree", MAX_DEGREE)
    else:
        manifest = None
        names = sorted(p.stem for p in path.glob("*.grp"))
        max_order, max_degree = MAX_ORDER, MAX_DEGREE
    entries = []
    for name in names:
        file = path / f"{name}.grp"
        entries.append(CorpusEntry(name, read_group(file), source=str(file)))
    corpus = Corpus(entries, max_order, max_degree, label=str(path))
    if manifest is not None:
        for e, m in zip(entries, manifest["entries"]):
            if e.checksum() != m["sha256"]:
                raise IntegrityError(f"checksum mismatch for {e.name}")
    return corpus


def resolve_corpus(spec):
    """``builtin`` (pinned default), ``builtin:N`` (max order N) or a directory."""
    if spec == "builtin":
        return default_corpus()
    if spec.startswith("builtin:"):
        return builtin_corpus(int(spec.split(":", 1)[1]))
    return load_corpus(spec)
