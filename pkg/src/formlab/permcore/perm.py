"""Permutations on {0, ..., n-1} and the group-file format.

Products are read left to right: ``(x * y)[i] == y[x[i]]``, i.e. ``x`` is
applied first.  Points are 0-based here and 1-based in every text format.
"""

from __future__ import annotations

import math
import re

from ..errors import ParseError


class Permutation(tuple):
    __slots__ = ()

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, degree):
        return cls._trusted(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 0-based cycles; cycles must be disjoint."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt + 1} out of range 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt + 1} repeated")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls._trusted(images)

    @property
    def degree(self):
        return len(self)

    def __mul__(self, other):
        if len(other) != len(self):
            raise ValueError("degree mismatch")
        return Permutation._trusted(other[i] for i in self)

    __rmul__ = None

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation._trusted(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self))

    def cycles(self):
        seen = set()
        out = []
        for i in range(len(self)):
            if i in seen or self[i] == i:
                continue
            cycle = [i]
            seen.add(i)
            j = self[i]
            while j != i:
                cycle.append(j)
                seen.add(j)
                j = self[j]
            out.append(tuple(cycle))
        return out

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def moved_points(self):
        return [i for i, j in enumerate(self) if i != j]

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({str(self)!r}, degree={len(self)})"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree, line=None):
    """Parse ``(1 2 3)(4 5)`` (1-based) into a Permutation of ``degree``."""
    body = text.strip()
    if body in ("", "()"):
        return Permutation.identity(degree)
    pos = 0
    cycles = []
    for m in _CYCLE.finditer(body):
        if body[pos:m.start()].strip():
            raise ParseError(f"malformed cycle text {body[pos:m.start()]!r}", line)
        pos = m.end()
        inner = m.group(1).replace(",", " ").split()
        if not inner:
            continue
        try:
            pts = [int(tok) - 1 for tok in inner]
        except ValueError:
            raise ParseError(f"malformed cycle ({m.group(1)})", line) from None
        cycles.append(pts)
    if body[pos:].strip():
        raise ParseError(f"malformed cycle text {body[pos:]!r}", line)
    seen = set()
    for cyc in cycles:
        for pt in cyc:
            if not 0 <= pt < degree:
                raise ParseError(f"point {pt + 1} out of range 1..{degree}", line)
        if len(set(cyc)) != len(cyc):
            raise ParseError(f"duplicate point in cycle {format_cycle(cyc)}", line)
        if seen & set(cyc):
            raise ParseError(f"cycles are not disjoint at {format_cycle(cyc)}", line)
        seen.update(cyc)
    return Permutation.from_cycles(degree, cycles)


def format_cycle(cyc):
    return "(" + " ".join(str(p + 1) for p in cyc) + ")"


def parse_group_text(text):
    """Return ``(degree, generators)`` from group-file contents."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ParseError("expected 'degree N' as the first line", lineno)
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        gens.append(parse_cycles(line, degree, lineno))
    if degree is None:
        raise ParseError("missing 'degree N' line", 1)
    return degree, gens


def format_group_text(degree, generators, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree {degree}")
    lines.extend(str(g) for g in generators)
    return "\n".join(lines) + "\n"
