"""Text syntax for formation expressions.

    empty | trivial | all | abelian | nilpotent | soluble | supersoluble
    | quasinilpotent | pgroups P | pigroups{P,...} | eclass{item,...}
    | formsimple (pP | ORDER | LABEL | S) | nilab P | sylow-abelian P
    | isoset(FILE,...) | and(E,...) | gprod(E,E,...)

``eclass`` items are ``pP``, catalog labels or orders of nonabelian simple
groups, and ``complement``; the long form ``eclass{primes=... nonabelian=...}``
takes the same lists as satellite ``class`` lines.  ``gprod`` with more than
two arguments nests to the right.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..errors import DomainError, ParseError
from ..permcore.groups import is_prime, read_group
from ..structure import cyclic_type, nonabelian_type
from .classes import CoSet, SimpleClassSpec, label_of, parse_coset, split_items
from .expr import (
    BUILTINS,
    And,
    EClass,
    FormSimple,
    GProduct,
    IsoSet,
    NilpotentAbelianSylow,
    PGroups,
    PiGroups,
)

_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")
_INT = re.compile(r"\d+")


class _Reader:
    def __init__(self, text, line, base):
        self.text = text
        self.pos = 0
        self.line = line
        self.base = base

    def error(self, message, pos=None):
        return ParseError(message, line=self.line, position=(self.pos if pos is None else pos) + 1)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def word(self):
        self.skip()
        m = _WORD.match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group(0)

    def integer(self):
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise self.error("expected a number")
        self.pos = m.end()
        return int(m.group(0))

    def prime(self):
        self.skip()
        start = self.pos
        p = self.integer()
        if not is_prime(p):
            raise self.error(f"{p} is not prime", start)
        return p

    def until_close(self, close):
        """Raw text up to the matching closing bracket (consumed)."""
        self.skip()
        depth, start = 0, self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in "({":
                depth += 1
            elif ch in ")}":
                if depth == 0:
                    if ch != close:
                        raise self.error(f"expected {close!r}")
                    body = self.text[start:self.pos]
                    self.pos += 1
                    return body, start
                depth -= 1
            self.pos += 1
        raise self.error(f"missing {close!r}")


def parse_formation(text, line=1, base=None):
    r = _Reader(text, line, Path(base) if base else None)
    expr = _expr(r)
    if r.peek():
        raise r.error(f"unexpected {r.peek()!r} after expression")
    return expr


def _expr(r):
    start = r.pos
    name = r.word().lower()
    if name in BUILTINS:
        return BUILTINS[name]
    if name == "pgroups":
        return PGroups(r.prime())
    if name in ("nilab", "sylow-abelian"):
        return NilpotentAbelianSylow(r.prime())
    if name == "pigroups":
        r.expect("{")
        body, at = r.until_close("}")
        primes = set()
        for item in split_items(body):
            if not item.isdigit() or not is_prime(int(item)):
                raise r.error(f"{item!r} is not a prime", at)
            primes.add(int(item))
        return PiGroups(frozenset(primes))
    if name == "eclass":
        r.expect("{")
        body, at = r.until_close("}")
        try:
            return EClass(parse_eclass_body(body))
        except DomainError as exc:
            raise r.error(str(exc), at) from exc
    if name == "formsimple":
        return _formsimple(r)
    if name == "isoset":
        r.expect("(")
        body, at = r.until_close(")")
        return _isoset(r, split_items(body), at)
    if name == "and":
        return And(tuple(_arguments(r)))
    if name == "gprod":
        args = _arguments(r)
        if len(args) < 2:
            raise r.error("gprod needs at least two arguments", start)
        out = args[-1]
        for left in reversed(args[:-1]):
            out = GProduct(left, out)
        return out
    raise r.error(f"unknown formation {name!r}", start)


def _arguments(r):
    r.expect("(")
    args = []
    if r.peek() == ")":
        r.pos += 1
        return args
    while True:
        args.append(_expr(r))
        if r.peek() == ",":
            r.pos += 1
            continue
        r.expect(")")
        return args


def _formsimple(r):
    r.skip()
    start = r.pos
    m = re.compile(r"[A-Za-z0-9]+(\(\s*\d+\s*,\s*\d+\s*\))?").match(r.text, r.pos)
    if not m:
        raise r.error("expected a simple group after formsimple")
    token = re.sub(r"\s+", "", m.group(0))
    r.pos = m.end()
    if token == "S":
        return FormSimple(None)
    if re.fullmatch(r"p\d+", token):
        p = int(token[1:])
        if not is_prime(p):
            raise r.error(f"{p} is not prime", start)
        return FormSimple(cyclic_type(p))
    try:
        if token.isdigit() and is_prime(int(token)):
            return FormSimple(cyclic_type(int(token)))
        return FormSimple(nonabelian_type(int(token) if token.isdigit() else token))
    except DomainError as exc:
        raise r.error(str(exc), start) from exc


def _isoset(r, names, at):
    groups, labels = [], []
    for name in names:
        path = Path(name)
        if r.base is not None and not path.is_absolute():
            path = r.base / path
        if not path.exists():
            raise r.error(f"group file {name!r} not found", at)
        groups.append(read_group(path))
        labels.append(name)
    return IsoSet(tuple(groups), tuple(labels))


def parse_eclass_body(body):
    if "=" in body:
        parts = dict(_keyvals(body))
        return SimpleClassSpec(
            parse_coset(parts.get("primes", "none"), "prime"),
            parse_coset(parts.get("nonabelian", "none"), "label"),
        )
    primes, labels, complement = set(), set(), False
    for item in split_items(body):
        if item == "complement":
            complement = True
        elif re.fullmatch(r"p\d+", item):
            p = int(item[1:])
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            primes.add(p)
        else:
            labels.add(label_of(item))
    return SimpleClassSpec.of(primes, labels, complement)


def _keyvals(text):
    for chunk in re.split(r"[\s;]+(?=[a-z]+=)", text.strip()):
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        key = key.strip()
        if key not in ("primes", "nonabelian"):
            raise DomainError(f"unknown class key {key!r}")
        yield key, value.strip()


def format_formation(expr):
    return expr.text()


__all__ = ["parse_formation", "format_formation", "parse_eclass_body", "CoSet"]
