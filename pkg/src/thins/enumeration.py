"""Finite quantification domains: all pers, coreflexives and relations of a type."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .rel import Carrier, Coreflexive, Per, Rel, TypeSig

PER_SIZE_CAP = 6
RELATION_CELL_CAP = 16


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class PerUniverse:
    carrier: Carrier
    pers: tuple[Per, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.pers))

    def __iter__(self):
        return iter(self.pers)

    def __len__(self):
        return len(self.pers)

    def __contains__(self, P):
        return P in self._members


def _set_partitions(elems: list[int]):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _pers_on(c: Carrier):
    s = TypeSig(c, c)
    for mask in range(1 << c.size):
        domain = [a for a in range(c.size) if mask >> a & 1]
        for blocks in _set_partitions(domain):
            rows = [0] * c.size
            for block in blocks:
                bits = sum(1 << a for a in block)
                for a in block:
                    rows[a] = bits
            yield Per(s, rows)


def enumerate_pers(n, cap: int = PER_SIZE_CAP) -> PerUniverse:
    """Every per on a carrier, duplicate-free, in bit-matrix lexicographic order."""
    c = n if isinstance(n, Carrier) else Carrier("A", n)
    if c.size > cap:
        raise EnumerationCapError(
            f"refusing to enumerate pers on {c.size} elements (cap {cap}); "
            f"pass a larger cap explicitly")
    return _universe(c)


@lru_cache(maxsize=None)
def _universe(c: Carrier) -> PerUniverse:
    pers = sorted(_pers_on(c), key=Rel.bitstring)
    return PerUniverse(c, tuple(pers))


@lru_cache(maxsize=None)
def enumerate_coreflexives(c: Carrier) -> tuple[Coreflexive, ...]:
    out = [Coreflexive.from_points(c, [a for a in range(c.size) if m >> a & 1])
           for m in range(1 << c.size)]
    return tuple(sorted(out, key=Rel.bitstring))


def enumerate_relations(s: TypeSig, cap: int = RELATION_CELL_CAP) -> tuple[Rel, ...]:
    if s.cells > cap:
        raise EnumerationCapError(
            f"{s!r} has {s.cells} cells, over the cap of {cap}")
    return _relations(s)


@lru_cache(maxsize=None)
def _relations(s: TypeSig) -> tuple[Rel, ...]:
    width = 1 << s.tgt.size
    rels = [Rel(s, rows) for rows in product(range(width), repeat=s.src.size)]
    return tuple(sorted(rels, key=Rel.bitstring))
