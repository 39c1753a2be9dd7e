"""Relation file formats.

JSON: ``{"carriers": {"A": 3, "B": 2}, "sig": ["A", "B"], "pairs": [[0, 0], [1, 0]]}``
with pairs sorted on output.  Matrix text: one line per row of ``0``/``1``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .rel import Carrier, Rel, TypeSig


class FormatError(ValueError):
    pass


def rel_to_dict(R: Rel) -> dict:
    carriers = {R.sig.src.name: R.sig.src.size}
    carriers[R.sig.tgt.name] = R.sig.tgt.size
    return {
        "carriers": carriers,
        "sig": [R.sig.src.name, R.sig.tgt.name],
        "pairs": [list(p) for p in sorted(R.pairs())],
    }


def rel_from_dict(data: dict) -> Rel:
    try:
        carriers = {name: Carrier(name, int(n)) for name, n in data["carriers"].items()}
        src, tgt = data["sig"]
        s = TypeSig(carriers[src], carriers[tgt])
        pairs = [(int(a), int(b)) for a, b in data.get("pairs", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed relation: {exc}") from exc
    try:
        return Rel.from_pairs(s, pairs)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dumps_rel(R: Rel) -> str:
    return json.dumps(rel_to_dict(R), sort_keys=True)


def loads_rel(text: str) -> Rel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("relation file must hold a JSON object")
    return rel_from_dict(data)


def load_rel(path) -> Rel:
    return loads_rel(Path(path).read_text())


def to_matrix_text(R: Rel) -> str:
    return "\n".join("".join("1" if v else "0" for v in row) for row in R.matrix())


def from_matrix_text(text: str, s: TypeSig) -> Rel:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if s.src.size == 0:
        lines = []
    if any(set(ln) - {"0", "1"} for ln in lines):
        raise FormatError("matrix text may only contain '0' and '1'")
    try:
        return Rel.from_matrix(s, [[c == "1" for c in ln] for ln in lines])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
