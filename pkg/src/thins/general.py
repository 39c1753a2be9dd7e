"""Thins on arbitrary relations, core relations and general indexes."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .rel import (Coreflexive, Rel, TypeMismatchError, is_subset, left_domain,
                  per_left_domain, per_right_domain, right_domain)
from .pers import thins_per


@lru_cache(maxsize=None)
def thins_rel(R: Rel, S: Rel) -> bool:
    if R.sig != S.sig:
        raise TypeMismatchError(f"thins_rel: {R.sig!r} vs {S.sig!r}")
    return (thins_per(per_left_domain(R), per_left_domain(S))
            and thins_per(per_right_domain(R), per_right_domain(S))
            and R == left_domain(R) @ S @ right_domain(R))


def is_core(R: Rel) -> bool:
    return left_domain(R) == per_left_domain(R) and right_domain(R) == per_right_domain(R)


def has_distinct_lines(R: Rel) -> bool:
    """No two nonempty rows coincide and no two nonempty columns coincide."""
    def distinct(lines):
        nonempty = [x for x in lines if x]
        return len(nonempty) == len(set(nonempty))
    return distinct(R.rows) and distinct(R.columns())


def is_rel_index(J: Rel, R: Rel) -> bool:
    if J.sig != R.sig or not is_subset(J, R):
        return False
    pl, pr = per_left_domain(R), per_right_domain(R)
    jl, jr = left_domain(J), right_domain(J)
    return (pl @ J @ pr == R
            and jl @ pl @ jl == jl
            and jr @ pr @ jr == jr)


def _line_classes(lines) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i, line in enumerate(lines):
        if line:
            groups.setdefault(line, []).append(i)
    return sorted(groups.values())


def find_rel_index(R: Rel) -> Rel:
    """Restrict ``R`` to the least row of each row class and least column of each column class."""
    jl = Coreflexive.from_points(R.sig.src, [c[0] for c in _line_classes(R.rows)])
    jr = Coreflexive.from_points(R.sig.tgt, [c[0] for c in _line_classes(R.columns())])
    return (jl @ R @ jr).as_rel()


def enumerate_rel_indexes(R: Rel) -> list[Rel]:
    rows = _line_classes(R.rows)
    cols = _line_classes(R.columns())
    seen = []
    for rc in product(*rows):
        jl = Coreflexive.from_points(R.sig.src, rc)
        for cc in product(*cols):
            J = (jl @ R @ Coreflexive.from_points(R.sig.tgt, cc)).as_rel()
            if J not in seen and is_rel_index(J, R):
                seen.append(J)
    return seen


def is_minimal_rel(S: Rel, all_relations) -> bool:
    return all(X == S for X in all_relations if thins_rel(X, S))
