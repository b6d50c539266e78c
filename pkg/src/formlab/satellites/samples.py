"""The satellite files shipped with the package."""

from __future__ import annotations

from importlib import resources

from .spec import parse_satellite

_CACHE = {}


def shipped_names():
    root = resources.files("formlab") / "data" / "satellites"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".sat"))


def shipped_spec(name):
    if name not in _CACHE:
        path = resources.files("formlab") / "data" / "satellites" / f"{name}.sat"
        _CACHE[name] = parse_satellite(path.read_text(encoding="utf-8"), name=name)
    return _CACHE[name]


def shipped_specs(kinds=None):
    out = {}
    for name in shipped_names():
        spec = shipped_spec(name)
        if kinds is None or spec.kind in kinds:
            out[name] = spec
    return out
