"""Audit reports and replayable witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


def subgroup_generators(G, mask):
    """1-based cycle strings generating the subgroup ``mask`` of G."""
    t = G.table
    return [str(t.perm(i)) for i in t.generators(mask)]


def subgroup_from_generators(G, gens):
    """Inverse of :func:`subgroup_generators`."""
    from .permcore.perm import parse_cycles

    t = G.table
    idx = [G.index(parse_cycles(g, G.degree)) for g in gens]
    return t.closure(idx)


@dataclass
class Violation:
    group: str
    instance: dict
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {"group": self.group, "instance": self.instance, "detail": self.detail}


@dataclass
class AuditReport:
    suite: str
    corpus: str = ""
    checked: int = 0
    verdicts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    timing: float = 0.0
    parts: list = field(default_factory=list)

    @property
    def clean(self):
        return not self.violations

    def add(self, group, ok, instance, detail=None):
        self.checked += 1
        if not ok:
            self.violations.append(Violation(group, instance, detail or {}))
            self.verdicts[group] = "violation"
        else:
            self.verdicts.setdefault(group, "clean")

    def merge(self, other):
        self.checked += other.checked
        for g, v in other.verdicts.items():
            if v == "violation" or g not in self.verdicts:
                self.verdicts[g] = v
        self.violations.extend(other.violations)
        for n in other.notes:
            if n not in self.notes:
                self.notes.append(n)

    def witness_groups(self):
        return sorted({v.group for v in self.violations})

    def to_json(self):
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "corpus": self.corpus,
            "checked": self.checked,
            "clean": self.clean,
            "verdicts": dict(sorted(self.verdicts.items())),
            "violations": [v.to_json() for v in self.violations],
            "notes": list(self.notes),
            "timing": {"seconds": round(self.timing, 3)},
        } | ({"parts": [p.to_json() for p in self.parts]} if self.parts else {})

    def to_text(self):
        lines = [f"suite {self.suite} on {self.corpus or '-'}"]
        for note in self.notes:
            lines.append(f"# {note}")
        width = max((len(g) for g in self.verdicts), default=0)
        counts = {}
        for v in self.violations:
            counts[v.group] = counts.get(v.group, 0) + 1
        for group, verdict in sorted(self.verdicts.items()):
            extra = f" ({counts[group]} violations)" if group in counts else ""
            lines.append(f"{group:<{width}}  {verdict}{extra}")
        for part in self.parts:
            status = "clean" if part.clean else f"{len(part.violations)} violations"
            lines.append(f"[{part.suite}] checked {part.checked}: {status}")
        status = "clean" if self.clean else f"{len(self.violations)} violations"
        lines.append(f"summary: {self.suite}: checked {self.checked}, {status}, {self.timing:.1f}s")
        return "\n".join(lines) + "\n"


def dumps(data):
    return json.dumps(data, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
