"""Textual syntax for roots, weights, Levis and current weights.

Roots use epsilon syntax: ``eK``, ``2eK``, ``eK-eL``, ``eK+eL`` with K < L.
Weights use comma-separated fundamental coordinates (``0,1,0``).
Current weights use ``label:coords`` items separated by semicolons.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .rootsystem import RootSystem, Weight

_ROOT_RE = re.compile(r"^\s*(?:(2)e(\d+)|e(\d+)(?:([+-])e(\d+))?)\s*$")


def parse_root(rs: RootSystem, text: str) -> Weight:
    m = _ROOT_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse root {text!r}; expected eK, 2eK or eK+-eL")
    eps = [0] * rs.ambient_dim

    def idx(s: str) -> int:
        k = int(s)
        if not 1 <= k <= rs.ambient_dim:
            raise ParseError(f"index e{k} out of range for {rs.name}")
        return k - 1

    if m.group(1):
        eps[idx(m.group(2))] = 2
    else:
        k = idx(m.group(3))
        eps[k] = 1
        if m.group(4):
            l = idx(m.group(5))
            if l <= k:
                raise ParseError(f"root {text!r} must have K < L")
            eps[l] = 1 if m.group(4) == "+" else -1
    w = rs.weight(eps)
    if not rs.is_root(w):
        raise ParseError(f"{text!r} is not a root of {rs.name}")
    return w


def format_root(w: Weight) -> str:
    """Inverse of :func:`parse_root` for positive roots; signed terms otherwise."""
    terms = [(k + 1, c) for k, c in enumerate(w.zero_sum_eps()) if c]
    if len(terms) == 1:
        k, c = terms[0]
        coef = {1: "", -1: "-", 2: "2", -2: "-2"}.get(c, f"{c}")
        return f"{coef}e{k}"
    parts = []
    for n, (k, c) in enumerate(terms):
        sign = "-" if c < 0 else ("+" if n else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}e{k}")
    return "".join(parts)


def parse_roots(rs: RootSystem, text: str) -> list[Weight]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise ParseError("empty root list")
    return [parse_root(rs, t) for t in items]


def parse_labels(text: str, rank: int | None = None) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"cannot parse weight {text!r}; expected comma-separated integers") from None
    if rank is not None and len(vals) != rank:
        raise ParseError(f"weight {text!r} needs {rank} coordinates")
    return vals


def format_labels(labels: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in labels)


def parse_current(text: str, rank: int | None = None) -> dict[str, tuple[int, ...]]:
    out: dict[str, tuple[int, ...]] = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        if ":" not in item:
            raise ParseError(f"current-weight item {item!r} lacks 'label:'")
        label, coords = item.split(":", 1)
        label = label.strip()
        if not label or label in out:
            raise ParseError(f"empty or repeated point label {label!r}")
        out[label] = parse_labels(coords, rank)
    return out


def format_current(entries: dict[str, Sequence[int]]) -> str:
    return ";".join(f"{p}:{format_labels(v)}" for p, v in sorted(entries.items()))


def format_eps(w: Weight) -> str:
    def f(c: Fraction) -> str:
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return "(" + ",".join(f(c) for c in w.zero_sum_eps()) + ")"
