"""The thins order on the pers of one carrier as a Hasse diagram, plus summary counts."""
from __future__ import annotations

from dataclasses import dataclass

from .enumeration import EnumerationCapError, enumerate_coreflexives, enumerate_pers
from .pers import is_maximal_per, is_minimal_per, thins_per
from .rel import Rel, is_equivalence

POSET_SIZE_CAP = 4
COUNTS_SIZE_CAP = 5


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"{what}: carrier size must be non-negative, got {n}")
    if n > cap:
        raise EnumerationCapError(f"{what}: size {n} exceeds the cap of {cap}")


def pair_label(R: Rel) -> str:
    return "[" + ",".join(f"({a},{b})" for a, b in R.pairs()) + "]"


@dataclass(frozen=True)
class HasseDiagram:
    nodes: tuple[Rel, ...]
    covers: tuple[tuple[int, int], ...]
    minimal: frozenset[int]
    maximal: frozenset[int]

    def rank(self) -> list[int]:
        """Length of the longest cover chain ending at each node."""
        preds: dict[int, list[int]] = {i: [] for i in range(len(self.nodes))}
        for lo, hi in self.covers:
            preds[hi].append(lo)
        memo: dict[int, int] = {}

        def r(i: int) -> int:
            if i not in memo:
                memo[i] = 1 + max((r(j) for j in preds[i]), default=-1)
            return memo[i]
        return [r(i) for i in range(len(self.nodes))]


def thins_hasse(n: int) -> HasseDiagram:
    _check_cap(n, POSET_SIZE_CAP, "poset export")
    U = enumerate_pers(n)
    nodes = U.pers
    idx = range(len(nodes))
    below = [[i != j and thins_per(nodes[i], nodes[j]) for j in idx] for i in idx]
    covers = tuple(
        (i, j) for i in idx for j in idx
        if below[i][j] and not any(below[i][k] and below[k][j] for k in idx)
    )
    return HasseDiagram(
        nodes=nodes,
        covers=covers,
        minimal=frozenset(i for i in idx if is_minimal_per(nodes[i], U)),
        maximal=frozenset(i for i in idx if is_maximal_per(nodes[i], U)),
    )


def to_dot(h: HasseDiagram, name: str = "thins") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for i, P in enumerate(h.nodes):
        tags = [t for t, s in (("min", h.minimal), ("max", h.maximal)) if i in s]
        label = pair_label(P) + (f"\\n{','.join(tags)}" if tags else "")
        lines.append(f'  n{i} [label="{label}"];')
    for lo, hi in h.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_thins_poset(n: int, format: str = "dot") -> str:
    if format != "dot":
        raise ValueError(f"unsupported poset format {format!r}")
    return to_dot(thins_hasse(n), name=f"thins{n}")


def counts(n: int) -> dict[str, int]:
    _check_cap(n, COUNTS_SIZE_CAP, "counts")
    U = enumerate_pers(n)
    return {
        "pers": len(U),
        "coreflexives": len(enumerate_coreflexives(U.carrier)),
        "minimal": sum(is_minimal_per(P, U) for P in U),
        "maximal": sum(is_maximal_per(P, U) for P in U),
        "equivalences": sum(is_equivalence(P) for P in U),
    }
