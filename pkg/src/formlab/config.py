"""Capacity bounds.

The defaults can be overridden with the ``FORMLAB_CAPACITY`` environment
variable, a comma separated list of ``key=value`` pairs, e.g.
``FORMLAB_CAPACITY=order=4000,frattini=1024``.  Within a process the
:func:`capacity` context manager does the same thing temporarily.
"""

import contextlib
import os
from dataclasses import dataclass, replace

from .errors import CapacityError


@dataclass(frozen=True)
class Capacity:
    order: int = 2000  # element tables, lattices, conjugacy classes
    frattini: int = 512
    isomorphism: int = 2000
    recursion: int = 8  # nesting depth of satellite classes used as values


def _from_env():
    cap = Capacity()
    raw = os.environ.get("FORMLAB_CAPACITY", "").strip()
    if not raw:
        return cap
    fields = {}
    for item in raw.split(","):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in Capacity.__dataclass_fields__:
            raise CapacityError(f"unknown FORMLAB_CAPACITY key {key!r}")
        fields[key] = int(value)
    return replace(cap, **fields)


_current = _from_env()


def current():
    return _current


@contextlib.contextmanager
def capacity(**bounds):
    global _current
    saved = _current
    _current = replace(_current, **bounds)
    try:
        yield _current
    finally:
        _current = saved


def check(kind, size):
    bound = getattr(_current, kind)
    if size > bound:
        raise CapacityError(f"{kind} bound exceeded: {size} > {bound}")
