"""Typed finite relations as bit-packed boolean matrices.

A relation of type ``A~B`` stores one integer per element of ``A``; bit ``b``
of ``rows[a]`` is set iff ``a`` relates to ``b``.  Values are immutable and all
operators return fresh relations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class TypeMismatchError(ValueError):
    """Operands of a relational operator have incompatible types."""


class NotAPerError(ValueError):
    pass


class NotCoreflexiveError(ValueError):
    pass


@dataclass(frozen=True)
class Carrier:
    name: str
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"carrier {self.name!r} has negative size")

    def __repr__(self):
        return f"{self.name}{self.size}"


@dataclass(frozen=True)
class TypeSig:
    src: Carrier
    tgt: Carrier

    @property
    def homogeneous(self) -> bool:
        return self.src == self.tgt

    @property
    def flipped(self) -> "TypeSig":
        return TypeSig(self.tgt, self.src)

    @property
    def cells(self) -> int:
        return self.src.size * self.tgt.size

    def __repr__(self):
        return f"{self.src!r}~{self.tgt!r}"


def carrier(size: int, name: str = "A") -> Carrier:
    return Carrier(name, size)


def sig(src, tgt=None) -> TypeSig:
    """Build a type signature; integers become carriers named A (and B).

    ``sig(3)`` is the homogeneous type ``A3~A3``; ``sig(2, 3)`` is ``A2~B3``.
    """
    if tgt is None:
        tgt = src
        if isinstance(src, int):
            src = tgt = Carrier("A", src)
    if isinstance(src, int):
        src = Carrier("A", src)
    if isinstance(tgt, int):
        tgt = Carrier("B", tgt)
    return TypeSig(src, tgt)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Rel:
    """A finite relation of type ``sig``.

    Equality and hashing depend only on the type and the matrix, so a
    :class:`Per` and a plain :class:`Rel` with the same entries are equal.
    """

    __slots__ = ("sig", "rows", "_hash")

    def __init__(self, sig: TypeSig, rows: Iterable[int]):
        rows = tuple(rows)
        if len(rows) != sig.src.size:
            raise ValueError(f"expected {sig.src.size} rows for {sig!r}, got {len(rows)}")
        limit = 1 << sig.tgt.size
        for r in rows:
            if not 0 <= r < limit:
                raise ValueError(f"row {r:#b} out of range for {sig!r}")
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((sig, rows)))

    def __setattr__(self, name, value):
        raise AttributeError("relations are immutable")

    @classmethod
    def from_pairs(cls, sig: TypeSig, pairs: Iterable[tuple[int, int]]) -> "Rel":
        rows = [0] * sig.src.size
        for a, b in pairs:
            if not (0 <= a < sig.src.size and 0 <= b < sig.tgt.size):
                raise ValueError(f"pair {(a, b)} outside {sig!r}")
            rows[a] |= 1 << b
        return cls(sig, rows)

    @classmethod
    def from_matrix(cls, sig: TypeSig, matrix) -> "Rel":
        if len(matrix) != sig.src.size:
            raise ValueError("matrix row count does not match signature")
        rows = []
        for line in matrix:
            if len(line) != sig.tgt.size:
                raise ValueError("matrix column count does not match signature")
            rows.append(sum(1 << b for b, v in enumerate(line) if v))
        return cls(sig, rows)

    def __eq__(self, other):
        if not isinstance(other, Rel):
            return NotImplemented
        return self.sig == other.sig and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Rel({self.sig!r}, {sorted(self.pairs())})"

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.rows[a] >> b & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for a, r in enumerate(self.rows):
            for b in _bits(r):
                yield a, b

    def matrix(self) -> list[list[bool]]:
        n = self.sig.tgt.size
        return [[bool(r >> b & 1) for b in range(n)] for r in self.rows]

    def bitstring(self) -> str:
        """Row-major 0/1 string; the enumeration order key."""
        n = self.sig.tgt.size
        return "".join("1" if r >> b & 1 else "0" for r in self.rows for b in range(n))

    def columns(self) -> tuple[int, ...]:
        return converse(self).rows

    def is_empty(self) -> bool:
        return not any(self.rows)

    def __len__(self):
        return sum(bin(r).count("1") for r in self.rows)

    # operator shorthands used throughout the lemma code
    def __matmul__(self, other):
        return compose(self, other)

    def __or__(self, other):
        return join(self, other)

    def __and__(self, other):
        return meet(self, other)

    def __le__(self, other):
        return is_subset(self, other)

    def __ge__(self, other):
        return is_subset(other, self)

    @property
    def conv(self) -> "Rel":
        return converse(self)

    def as_rel(self) -> "Rel":
        return self if type(self) is Rel else Rel(self.sig, self.rows)


class Coreflexive(Rel):
    """A relation contained in the identity of its (homogeneous) type."""

    __slots__ = ()

    def __init__(self, sig: TypeSig, rows: Iterable[int]):
        super().__init__(sig, rows)
        if not is_coreflexive(self):
            raise NotCoreflexiveError(f"{self!r} is not coreflexive")

    @classmethod
    def of(cls, rel: Rel) -> "Coreflexive":
        return rel if isinstance(rel, Coreflexive) else cls(rel.sig, rel.rows)

    @classmethod
    def from_points(cls, carrier: Carrier, points: Iterable[int]) -> "Coreflexive":
        rows = [0] * carrier.size
        for a in points:
            rows[a] = 1 << a
        return cls(TypeSig(carrier, carrier), rows)

    def points(self) -> list[int]:
        return [a for a, r in enumerate(self.rows) if r]


class Per(Rel):
    """A symmetric and transitive homogeneous relation, validated on construction."""

    __slots__ = ()

    def __init__(self, sig: TypeSig, rows: Iterable[int]):
        super().__init__(sig, rows)
        if not is_per(self):
            raise NotAPerError(f"{self!r} is not a per")

    @classmethod
    def of(cls, rel: Rel) -> "Per":
        return rel if isinstance(rel, Per) else cls(rel.sig, rel.rows)

    @property
    def carrier(self) -> Carrier:
        return self.sig.src

    def classes(self) -> list[list[int]]:
        """Equivalence classes, ordered by least member."""
        seen = 0
        out = []
        for a, r in enumerate(self.rows):
            if r and not seen >> a & 1:
                out.append(list(_bits(r)))
                seen |= r
        return out


def _check_same(R: Rel, S: Rel, op: str):
    if R.sig != S.sig:
        raise TypeMismatchError(f"{op}: {R.sig!r} vs {S.sig!r}")


def _check_homogeneous(R: Rel, op: str):
    if not R.sig.homogeneous:
        raise TypeMismatchError(f"{op} needs a homogeneous relation, got {R.sig!r}")


# -- constants ---------------------------------------------------------------

def bottom(s: TypeSig) -> Rel:
    return Rel(s, [0] * s.src.size)


def top(s: TypeSig) -> Rel:
    full = (1 << s.tgt.size) - 1
    return Rel(s, [full] * s.src.size)


def identity(c: Carrier) -> Coreflexive:
    return Coreflexive(TypeSig(c, c), [1 << a for a in range(c.size)])


# -- monoid and converse -----------------------------------------------------

def compose(R: Rel, S: Rel) -> Rel:
    if R.sig.tgt != S.sig.src:
        raise TypeMismatchError(f"compose: {R.sig!r} then {S.sig!r}")
    srows = S.rows
    out = []
    for r in R.rows:
        acc = 0
        for b in _bits(r):
            acc |= srows[b]
        out.append(acc)
    return Rel(TypeSig(R.sig.src, S.sig.tgt), out)


@lru_cache(maxsize=None)
def converse(R: Rel) -> Rel:
    out = [0] * R.sig.tgt.size
    for a, r in enumerate(R.rows):
        for b in _bits(r):
            out[b] |= 1 << a
    return Rel(R.sig.flipped, out)


# -- lattice -----------------------------------------------------------------

def meet(R: Rel, S: Rel) -> Rel:
    _check_same(R, S, "meet")
    return Rel(R.sig, [a & b for a, b in zip(R.rows, S.rows)])


def join(R: Rel, S: Rel) -> Rel:
    _check_same(R, S, "join")
    return Rel(R.sig, [a | b for a, b in zip(R.rows, S.rows)])


def is_subset(R: Rel, S: Rel) -> bool:
    _check_same(R, S, "is_subset")
    return all(a & ~b == 0 for a, b in zip(R.rows, S.rows))


# -- factors -----------------------------------------------------------------

def left_factor(X: Rel, Z: Rel) -> Rel:
    """``X\\Z``: the greatest ``Y`` with ``X∘Y ⊆ Z``."""
    if X.sig.src != Z.sig.src:
        raise TypeMismatchError(f"left_factor: {X.sig!r} vs {Z.sig!r}")
    full = (1 << Z.sig.tgt.size) - 1
    out = []
    for col in converse(X).rows:
        acc = full
        for a in _bits(col):
            acc &= Z.rows[a]
        out.append(acc)
    return Rel(TypeSig(X.sig.tgt, Z.sig.tgt), out)


def right_factor(Z: Rel, Y: Rel) -> Rel:
    """``Z/Y``: the greatest ``X`` with ``X∘Y ⊆ Z``."""
    if Y.sig.tgt != Z.sig.tgt:
        raise TypeMismatchError(f"right_factor: {Z.sig!r} vs {Y.sig!r}")
    out = []
    for zr in Z.rows:
        acc = 0
        for b, yr in enumerate(Y.rows):
            if yr & ~zr == 0:
                acc |= 1 << b
        out.append(acc)
    return Rel(TypeSig(Z.sig.src, Y.sig.src), out)


# -- domains -----------------------------------------------------------------

@lru_cache(maxsize=None)
def left_domain(R: Rel) -> Coreflexive:
    return Coreflexive(TypeSig(R.sig.src, R.sig.src),
                       [1 << a if r else 0 for a, r in enumerate(R.rows)])


@lru_cache(maxsize=None)
def right_domain(R: Rel) -> Coreflexive:
    return left_domain(converse(R))


def _same_row_per(rows: tuple[int, ...], c: Carrier) -> Per:
    out = []
    for r in rows:
        acc = 0
        if r:
            for b, s in enumerate(rows):
                if s == r:
                    acc |= 1 << b
        out.append(acc)
    return Per(TypeSig(c, c), out)


@lru_cache(maxsize=None)
def per_left_domain(R: Rel) -> Per:
    """Relates ``a`` and ``a'`` iff they have the same nonempty image under ``R``."""
    return _same_row_per(R.rows, R.sig.src)


@lru_cache(maxsize=None)
def per_right_domain(R: Rel) -> Per:
    return _same_row_per(converse(R).rows, R.sig.tgt)


def per_left_domain_by_factors(R: Rel) -> Rel:
    """``R< ∘ (R/R ∩ (R/R)°) ∘ R<``, the factor-based per-domain."""
    F = right_factor(R, R)
    d = left_domain(R)
    return d @ meet(F, converse(F)) @ d


def per_right_domain_by_factors(R: Rel) -> Rel:
    F = left_factor(R, R)
    d = right_domain(R)
    return d @ meet(F, converse(F)) @ d


# -- closure -----------------------------------------------------------------

def transitive_closure(R: Rel) -> Rel:
    _check_homogeneous(R, "transitive_closure")
    U = R.as_rel()
    while True:
        V = join(U, U @ U)
        if V == U:
            return U
        U = V


# -- predicates --------------------------------------------------------------

@lru_cache(maxsize=None)
def is_coreflexive(R: Rel) -> bool:
    if not R.sig.homogeneous:
        return False
    return all(r & ~(1 << a) == 0 for a, r in enumerate(R.rows))


@lru_cache(maxsize=None)
def is_per(R: Rel) -> bool:
    if not R.sig.homogeneous:
        return False
    R = R.as_rel()
    return R == converse(R) and is_subset(R @ R, R)


def is_equivalence(R: Rel) -> bool:
    return is_per(R) and is_subset(identity(R.sig.src), R)
