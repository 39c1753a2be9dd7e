"""Pers, their indexes, and the thins ordering between them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .enumeration import PerUniverse
from .rel import (Coreflexive, NotAPerError, Per, Rel, TypeSig, compose,
                  identity, is_coreflexive, is_equivalence, is_per, is_subset,
                  join, left_domain, meet, top, transitive_closure)

__all__ = [
    "CompletionTrace", "enumerate_per_indexes", "find_per_index", "is_coreflexive",
    "is_equivalence", "is_maximal_per", "is_minimal_per", "is_per", "is_per_index",
    "maximal_completion", "maximality_condition", "thins_per",
]


def _require_per(P: Rel, what: str = "argument") -> None:
    if not is_per(P):
        raise NotAPerError(f"{what} is not a per: {P!r}")


@lru_cache(maxsize=None)
def thins_per(P: Rel, Q: Rel) -> bool:
    """``P = P∂∘Q∘P∂  ∧  Q = Q∘P∂∘Q``."""
    _require_per(P, "P")
    _require_per(Q, "Q")
    if P.sig != Q.sig:
        return False
    d = left_domain(P)
    return P == d @ Q @ d and Q == Q @ d @ Q


def is_per_index(J: Rel, P: Rel) -> bool:
    if J.sig != P.sig:
        return False
    return (is_subset(J, left_domain(P))
            and J @ P @ J == J
            and P @ J @ P == P)


def find_per_index(P: Rel) -> Coreflexive:
    """The index choosing the least element of every equivalence class."""
    P = Per.of(P)
    return Coreflexive.from_points(P.carrier, [cls[0] for cls in P.classes()])


def enumerate_per_indexes(P: Rel) -> list[Coreflexive]:
    P = Per.of(P)
    return [Coreflexive.from_points(P.carrier, choice)
            for choice in product(*P.classes())]


def is_minimal_per(P: Rel, U: PerUniverse) -> bool:
    return all(X == P for X in U if thins_per(X, P))


def is_maximal_per(P: Rel, U: PerUniverse) -> bool:
    return all(Y == P for Y in U if thins_per(P, Y))


def maximality_condition(P: Rel) -> bool:
    """``I ∩ ⊤∘P∘⊤ ⊆ P``."""
    _require_per(P)
    c = P.sig.src
    T = top(P.sig)
    return is_subset(meet(identity(c), T @ P @ T), P)


@dataclass(frozen=True)
class CompletionTrace:
    """Intermediate values of the completion of ``P`` to a maximal per ``Q``."""

    P: Per
    q: Coreflexive
    J: Coreflexive
    R: Per
    Q: Per

    def guarantees(self) -> dict[str, bool]:
        return {
            "Q is a per": is_per(self.Q),
            "P thins Q": thins_per(self.P, self.Q),
            "Q is maximal": maximality_condition(self.Q),
            "Q = (P ∪ R)+": self.Q == transitive_closure(join(self.P, self.R)),
        }


def completion_base(P: Rel) -> tuple[Coreflexive, Per]:
    """``q = I ∩ ⊤∘P∘⊤`` and the per ``P∘⊤∘P ∪ q`` that ``J`` must index."""
    P = Per.of(P)
    T = top(P.sig)
    q = Coreflexive.of(meet(identity(P.carrier), T @ P @ T))
    return q, Per.of(join(P @ T @ P, q))


def maximal_completion(P: Rel, J: Rel | None = None) -> CompletionTrace:
    """Extend ``P`` to a maximal per it thins.

    ``J`` defaults to :func:`find_per_index` of ``P∘⊤∘P ∪ q``; pass another
    index of that per to explore alternative completions.
    """
    P = Per.of(P)
    q, base = completion_base(P)
    if J is None:
        J = find_per_index(base)
    elif not is_per_index(J, base):
        raise ValueError(f"{J!r} is not an index of P∘⊤∘P ∪ q")
    J = Coreflexive.of(J)
    T = top(P.sig)
    R = Per.of(J @ T @ J)
    Q = join(join(P, R), join(compose(P, R), compose(R, P)))
    return CompletionTrace(P, q, J, R, Per.of(Q))
