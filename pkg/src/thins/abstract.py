"""Finite untyped point-free relation algebras given by operation tables.

Elements are indices ``0..n-1``; the order is derived from the join table
(``x ⊑ y`` iff ``join[x][y] == y``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from pathlib import Path

from .enumeration import enumerate_relations
from .rel import Carrier, TypeSig, bottom, identity, top


class ModelError(ValueError):
    """A model's tables are malformed."""


@dataclass(frozen=True)
class AbstractModel:
    names: tuple[str, ...]
    compose: tuple[tuple[int, ...], ...]
    converse: tuple[int, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bot: int
    id: int
    top: int

    def __post_init__(self):
        n = len(self.names)
        if n == 0:
            raise ModelError("a model needs at least one element")
        for label, table in (("compose", self.compose), ("join", self.join), ("meet", self.meet)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ModelError(f"{label} table must be {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise ModelError(f"{label} table has entries outside 0..{n - 1}")
        if len(self.converse) != n or any(not 0 <= v < n for v in self.converse):
            raise ModelError(f"converse table must list {n} elements")
        for label in ("bot", "id", "top"):
            if not 0 <= getattr(self, label) < n:
                raise ModelError(f"{label} is not an element")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(self.n)

    def le(self, x: int, y: int) -> bool:
        return self.join[x][y] == y

    def c(self, x: int, y: int) -> int:
        return self.compose[x][y]

    def conv(self, x: int) -> int:
        return self.converse[x]

    def name(self, x: int) -> str:
        return self.names[x]

    @classmethod
    def from_dict(cls, data: dict) -> "AbstractModel":
        try:
            return cls(
                names=tuple(str(x) for x in data["names"]),
                compose=tuple(tuple(int(v) for v in row) for row in data["compose"]),
                converse=tuple(int(v) for v in data["converse"]),
                join=tuple(tuple(int(v) for v in row) for row in data["join"]),
                meet=tuple(tuple(int(v) for v in row) for row in data["meet"]),
                bot=int(data["bot"]), id=int(data["id"]), top=int(data["top"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ModelError):
                raise
            raise ModelError(f"malformed model: {exc}") from exc

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "compose": [list(r) for r in self.compose],
            "converse": list(self.converse),
            "join": [list(r) for r in self.join],
            "meet": [list(r) for r in self.meet],
            "bot": self.bot, "id": self.id, "top": self.top,
        }

    def with_converse(self, x: int, value: int) -> "AbstractModel":
        conv = list(self.converse)
        conv[x] = value
        return AbstractModel(self.names, self.compose, tuple(conv), self.join,
                             self.meet, self.bot, self.id, self.top)


def load_model(path) -> AbstractModel:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ModelError(f"invalid JSON: {exc}") from exc
    return AbstractModel.from_dict(data)


def _tables(names, compose, converse, join, meet, bot, ident, tp):
    t = lambda rows: tuple(tuple(r) for r in rows)
    return AbstractModel(tuple(names), t(compose), tuple(converse), t(join), t(meet),
                         bot, ident, tp)


def _builtin_one():
    return _tables(["⊥"], [[0]], [0], [[0]], [[0]], 0, 0, 0)


def _builtin_two():
    # ⊥=0, ⊤=I=1; composition is forced to be meet
    return _tables(["⊥", "⊤"], [[0, 0], [0, 1]], [0, 1],
                   [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1, 1)


def _builtin_three():
    # chain ⊥=0 < I=1 < ⊤=2; ⊤∘⊤ ⊇ I∘⊤ = ⊤
    compose = [[0, 0, 0],
               [0, 1, 2],
               [0, 2, 2]]
    join = [[max(a, b) for b in range(3)] for a in range(3)]
    meet = [[min(a, b) for b in range(3)] for a in range(3)]
    return _tables(["⊥", "I", "⊤"], compose, [0, 1, 2], join, meet, 0, 1, 2)


def _builtin_four():
    # subsets of {I, ¬I} as bitmasks: ⊥=0, I=1, ¬I=2, ⊤=3; ¬I∘¬I = I
    def comp(x, y):
        out = 0
        for i in range(2):
            for j in range(2):
                if x >> i & 1 and y >> j & 1:
                    out |= 1 << (i ^ j)
        return out
    compose = [[comp(x, y) for y in range(4)] for x in range(4)]
    join = [[x | y for y in range(4)] for x in range(4)]
    meet = [[x & y for y in range(4)] for x in range(4)]
    return _tables(["⊥", "I", "¬I", "⊤"], compose, [0, 1, 2, 3], join, meet, 0, 1, 3)


BUILTINS = {
    "one": _builtin_one,
    "two": _builtin_two,
    "three": _builtin_three,
    "four": _builtin_four,
}


def builtin_model(name: str) -> AbstractModel:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ModelError(f"unknown builtin model {name!r}; choose from {sorted(BUILTINS)}") from None


def concrete_model(n: int) -> AbstractModel:
    """The homogeneous concrete relations on an ``n``-element set, tabulated."""
    c = Carrier("A", n)
    s = TypeSig(c, c)
    rels = list(enumerate_relations(s))
    index = {R: i for i, R in enumerate(rels)}
    return _tables(
        [R.bitstring() or "ε" for R in rels],
        [[index[R @ S] for S in rels] for R in rels],
        [index[R.conv] for R in rels],
        [[index[R | S] for S in rels] for R in rels],
        [[index[R & S] for S in rels] for R in rels],
        index[bottom(s)], index[identity(c)], index[top(s)],
    )


def is_isomorphic(M: AbstractModel, N: AbstractModel) -> bool:
    if M.n != N.n:
        return False
    for perm in permutations(range(N.n)):
        f = perm.__getitem__
        if (f(M.bot), f(M.id), f(M.top)) != (N.bot, N.id, N.top):
            continue
        if any(f(M.converse[x]) != N.converse[f(x)] for x in M.elements):
            continue
        if all(f(tab_m[x][y]) == tab_n[f(x)][f(y)]
               for tab_m, tab_n in ((M.compose, N.compose), (M.join, N.join), (M.meet, N.meet))
               for x in M.elements for y in M.elements):
            return True
    return False


# -- axioms ------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomResult:
    holds: bool
    witness: tuple[str, ...] | None = None


@dataclass
class AxiomReport:
    results: dict[str, AxiomResult] = field(default_factory=dict)

    CORE = ("distributive_lattice", "monoid", "converse_involution",
            "converse_contravariance", "converse_gc", "factors", "modularity")

    def __getitem__(self, axiom: str) -> AxiomResult:
        return self.results[axiom]

    @property
    def core_ok(self) -> bool:
        return all(self.results[a].holds for a in self.CORE)

    @property
    def unary(self) -> bool:
        return self.results["cone_rule"].holds

    def to_dict(self) -> dict:
        return {k: {"holds": v.holds, "witness": list(v.witness) if v.witness else None}
                for k, v in self.results.items()}


def _first(M: AbstractModel, arity: int, bad):
    for xs in product(M.elements, repeat=arity):
        if bad(*xs):
            return AxiomResult(False, tuple(M.name(x) for x in xs))
    return AxiomResult(True)


def _lattice(M: AbstractModel) -> AxiomResult:
    E = M.elements
    j, m, le = M.join, M.meet, M.le
    checks = [
        (1, lambda x: j[x][x] != x or m[x][x] != x),
        (2, lambda x, y: j[x][y] != j[y][x] or m[x][y] != m[y][x]),
        (2, lambda x, y: j[x][m[x][y]] != x or m[x][j[x][y]] != x),
        (3, lambda x, y, z: j[j[x][y]][z] != j[x][j[y][z]] or m[m[x][y]][z] != m[x][m[y][z]]),
        (3, lambda x, y, z: m[x][j[y][z]] != j[m[x][y]][m[x][z]]),
        (1, lambda x: not le(M.bot, x) or not le(x, M.top)),
    ]
    for arity, bad in checks:
        r = _first(M, arity, bad)
        if not r.holds:
            return r
    return AxiomResult(True)


def _monoid(M: AbstractModel) -> AxiomResult:
    c = M.compose
    r = _first(M, 1, lambda x: c[M.id][x] != x or c[x][M.id] != x)
    if not r.holds:
        return r
    return _first(M, 3, lambda x, y, z: c[c[x][y]][z] != c[x][c[y][z]])


def _factors(M: AbstractModel) -> AxiomResult:
    le, c, j = M.le, M.compose, M.join

    def sup(xs):
        acc = M.bot
        for x in xs:
            acc = j[acc][x]
        return acc

    def bad(x, z):
        under = sup(y for y in M.elements if le(c[x][y], z))
        over = sup(w for w in M.elements if le(c[w][x], z))
        return any(le(y, under) != le(c[x][y], z) or le(y, over) != le(c[y][x], z)
                   for y in M.elements)
    return _first(M, 2, bad)


def check_axioms(M: AbstractModel) -> AxiomReport:
    le, c, cv, mt = M.le, M.compose, M.converse, M.meet
    rep = AxiomReport()
    rep.results["distributive_lattice"] = _lattice(M)
    rep.results["monoid"] = _monoid(M)
    rep.results["converse_involution"] = _first(M, 1, lambda x: cv[cv[x]] != x)
    contra = _first(M, 2, lambda x, y: cv[c[x][y]] != c[cv[y]][cv[x]])
    if contra.holds and cv[M.id] != M.id:
        contra = AxiomResult(False, (M.name(M.id),))
    rep.results["converse_contravariance"] = contra
    # the two directions are scanned separately so the witness names the failing one
    gc = _first(M, 2, lambda x, y: le(cv[x], y) and not le(x, cv[y]))
    if gc.holds:
        gc = _first(M, 2, lambda x, y: le(x, cv[y]) and not le(cv[x], y))
    rep.results["converse_gc"] = gc
    rep.results["factors"] = _factors(M)
    rep.results["modularity"] = _first(
        M, 3, lambda x, y, z: not le(mt[c[x][y]][z], c[x][mt[y][c[cv[x]][z]]]))
    T = M.top
    rep.results["cone_rule"] = _first(M, 1, lambda x: (c[c[T][x]][T] == T) != (x != M.bot))
    ok, witness = check_choice(M)
    rep.results["choice"] = AxiomResult(ok, None if ok else (M.name(witness),))
    return rep


# -- pers, indexes and thins inside a model ----------------------------------

def model_pers(M: AbstractModel) -> list[int]:
    return [p for p in M.elements if M.conv(p) == p and M.le(M.c(p, p), p)]


def model_domain(M: AbstractModel, p: int) -> int:
    return M.meet[M.id][p]


def model_is_index(M: AbstractModel, j: int, p: int) -> bool:
    c = M.c
    return (M.le(j, model_domain(M, p))
            and c(c(j, p), j) == j
            and c(c(p, j), p) == p)


def check_choice(M: AbstractModel) -> tuple[bool, int | None]:
    """Whether every per has an index; otherwise the first per lacking one."""
    for p in model_pers(M):
        if not any(model_is_index(M, j, p) for j in M.elements):
            return False, p
    return True, None


def model_thins(M: AbstractModel, p: int, q: int) -> bool:
    c = M.c
    d = model_domain(M, p)
    return p == c(c(d, q), d) and q == c(c(q, d), q)


def thins_in_model(M: AbstractModel) -> tuple[list[int], set[tuple[int, int]], bool]:
    pers = model_pers(M)
    rel = {(p, q) for p in pers for q in pers if model_thins(M, p, q)}
    discrete = all(p == q for p, q in rel)
    return pers, rel, discrete


def model_minimal_pers(M: AbstractModel) -> list[int]:
    pers, rel, _ = thins_in_model(M)
    return [p for p in pers if all(x == p for x, y in rel if y == p)]


def check_minimality_gap(M: AbstractModel) -> bool:
    """True iff some thins-minimal per is not below the identity."""
    return any(not M.le(p, M.id) for p in model_minimal_pers(M))


def minimality_property(M: AbstractModel) -> bool:
    """Minimal pers are exactly those below ``I``, and every per is thinned by a minimal one."""
    pers, rel, _ = thins_in_model(M)
    minimal = set(model_minimal_pers(M))
    exact = all((p in minimal) == M.le(p, M.id) for p in pers)
    covered = all(any((p, q) in rel for p in minimal) for q in pers)
    return exact and covered
