"""Satellite specifications and their file format.

A satellite file is line oriented (``#`` starts a comment)::

    kind omegalocal
    omega 2
    p 2 => trivial
    default_prime => empty
    complement => all

Other keys: ``class primes=2,3 nonabelian=A5 [complement]`` (for
``lcomposition`` and ``xlocal``), ``simple <label|order>[,...] => expr``,
``default_simple => expr`` and ``name <text>``.  Prime and label lists may
be written ``all`` or ``all-2,3``.  ``formsimple S`` as a simple value means
the direct powers of the simple group the value is applied to.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path

from ..errors import DomainError, ParseError
from ..formations.classes import EVERYTHING, CoSet, SimpleClassSpec, parse_coset, split_items
from ..formations.dsl import parse_eclass_body, parse_formation
from ..formations.expr import Empty, FormationExpr, substitute_simple
from ..permcore.groups import is_prime
from ..structure import LABEL_ORDER, SimpleType, nonabelian_type

KINDS = ("local", "omegalocal", "composition", "lcomposition", "xlocal")


@dataclass(frozen=True, eq=False)
class SatelliteSpec:
    """A local definition f together with the kind of f-rule it uses.

    ``prime_values``/``simple_values`` are tuples of (prime, expr) and
    (label, expr) pairs; unlisted primes get ``default_prime`` and unlisted
    nonabelian types get ``default_simple``.  ``complement_value`` is the
    common value on omega'-groups (omegalocal) or on E(L')-groups
    (lcomposition).  For xlocal, an abelian C_q outside the class takes a
    listed prime value if present and ``default_simple`` otherwise.
    """

    kind: str
    omega: CoSet | None = None
    cls: SimpleClassSpec | None = None
    prime_values: tuple = ()
    simple_values: tuple = ()
    default_prime: FormationExpr = field(default_factory=Empty)
    default_simple: FormationExpr = field(default_factory=Empty)
    complement_value: FormationExpr | None = None
    name: str = "f"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown satellite kind {self.kind!r}")
        if self.kind == "omegalocal":
            if self.omega is None:
                raise DomainError("omegalocal satellite needs an omega line")
            if not self.omega.is_everything() and self.complement_value is None:
                raise DomainError("omegalocal satellite needs a complement value")
        if self.kind in ("lcomposition", "xlocal") and self.cls is None:
            raise DomainError(f"{self.kind} satellite needs a class line")
        if self.kind == "lcomposition" and not self.cls.is_everything():
            if self.complement_value is None:
                raise DomainError("lcomposition satellite needs a complement value")
        if self.kind == "xlocal" and not self.cls.char_equals_support():
            raise DomainError(
                f"class {self.cls.text()} has Char = {self.cls.characteristic().text()} "
                f"but prime support {self.cls.prime_support().text()}"
            )

    # -- values ---------------------------------------------------------------

    @property
    def prime_map(self):
        return dict(self.prime_values)

    @property
    def simple_map(self):
        return dict(self.simple_values)

    def f_prime(self, p):
        return self.prime_map.get(p, self.default_prime)

    def f_simple(self, stype: SimpleType):
        """Value on a nonabelian simple type (placeholder resolved)."""
        value = self.simple_map.get(stype.label, self.default_simple)
        return substitute_simple(value, stype)

    def f_type(self, stype: SimpleType):
        if stype.abelian:
            return self.f_prime(stype.prime)
        return self.f_simple(stype)

    def f_outside(self, stype: SimpleType):
        """xlocal value on a simple type outside the class."""
        if stype.abelian:
            if stype.prime in self.prime_map:
                return self.prime_map[stype.prime]
            return substitute_simple(self.default_simple, stype)
        return self.f_simple(stype)

    def with_values(self, **changes):
        return replace(self, **changes)

    def text(self):
        return format_satellite(self)


# -- parsing -----------------------------------------------------------------

_ASSIGN = re.compile(r"^(p|simple)\s+(.+?)\s*=>\s*(.+)$")
_DEFAULT = re.compile(r"^(default_prime|default_simple|complement)\s*=>\s*(.+)$")


def parse_satellite(text, base=None, name=None):
    fields = {"prime_values": {}, "simple_values": {}}
    kind = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        offset = len(raw) - len(raw.lstrip()) + 1
        try:
            kind = _parse_line(line, lineno, offset, fields, kind, base)
        except DomainError as exc:
            raise ParseError(str(exc), line=lineno, position=offset) from exc
    if kind is None:
        raise ParseError("missing 'kind' line", line=1, position=1)
    try:
        return SatelliteSpec(
            kind=kind,
            omega=fields.get("omega"),
            cls=fields.get("cls"),
            prime_values=tuple(sorted(fields["prime_values"].items())),
            simple_values=tuple(
                sorted(fields["simple_values"].items(), key=lambda kv: LABEL_ORDER[kv[0]])
            ),
            default_prime=fields.get("default_prime", Empty()),
            default_simple=fields.get("default_simple", Empty()),
            complement_value=fields.get("complement"),
            name=fields.get("name", name or "f"),
        )
    except DomainError as exc:
        raise ParseError(str(exc), line=len(text.splitlines()) or 1, position=1) from exc


def _parse_line(line, lineno, offset, fields, kind, base):
    key, _, rest = line.partition(" ")
    rest = rest.strip()
    if key == "kind":
        if rest not in KINDS:
            raise DomainError(f"unknown kind {rest!r} (expected one of {', '.join(KINDS)})")
        return rest
    if key == "name":
        fields["name"] = rest
        return kind
    if key == "omega":
        fields["omega"] = parse_coset(rest, "prime")
        for p in fields["omega"].items:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
        return kind
    if key == "class":
        fields["cls"] = parse_class_line(rest)
        return kind
    m = _ASSIGN.match(line)
    if m:
        which, targets, expr_text = m.groups()
        expr = _expr(expr_text, line, lineno, offset, base)
        for target in split_items(targets):
            if which == "p":
                if not target.isdigit() or not is_prime(int(target)):
                    raise DomainError(f"{target!r} is not a prime")
                fields["prime_values"][int(target)] = expr
            else:
                label = nonabelian_type(int(target) if target.isdigit() else target).label
                fields["simple_values"][label] = expr
        return kind
    m = _DEFAULT.match(line)
    if m:
        which, expr_text = m.groups()
        fields[which] = _expr(expr_text, line, lineno, offset, base)
        return kind
    raise DomainError(f"cannot read line {line!r}")


def _expr(expr_text, line, lineno, offset, base):
    start = line.index("=>") + 2
    start += len(line[start:]) - len(line[start:].lstrip())
    try:
        return parse_formation(expr_text, line=lineno, base=base)
    except ParseError as exc:
        raise ParseError(exc.message, line=lineno, position=offset + start + (exc.position or 1) - 1) from exc


def parse_class_line(text):
    """``primes=2,3 nonabelian=A5 [complement]`` or an eclass-style item list."""
    words = text.split()
    complement = bool(words) and words[-1] == "complement"
    if complement:
        text = " ".join(words[:-1])
    cls = parse_eclass_body(text) if "=" in text else parse_eclass_body(text.replace(" ", ","))
    return cls.complement() if complement else cls


def read_satellite(path):
    p = Path(path)
    return parse_satellite(p.read_text(encoding="utf-8"), base=p.parent, name=p.stem)


def format_satellite(spec):
    lines = [f"name {spec.name}", f"kind {spec.kind}"]
    if spec.omega is not None:
        lines.append(f"omega {spec.omega.text()}")
    if spec.cls is not None:
        lines.append(f"class {spec.cls.text()}")
    for p, expr in spec.prime_values:
        lines.append(f"p {p} => {expr.text()}")
    for label, expr in spec.simple_values:
        lines.append(f"simple {label} => {expr.text()}")
    lines.append(f"default_prime => {spec.default_prime.text()}")
    lines.append(f"default_simple => {spec.default_simple.text()}")
    if spec.complement_value is not None:
        lines.append(f"complement => {spec.complement_value.text()}")
    return "\n".join(lines) + "\n"


__all__ = [
    "KINDS",
    "EVERYTHING",
    "SatelliteSpec",
    "parse_satellite",
    "read_satellite",
    "format_satellite",
    "parse_class_line",
]
