"""Registry of every checked lemma and theorem.

Each entry pairs an instance generator with a check on one instance.  Checks
take their instance as keyword arguments holding relations (or builtin model
names) and recompute everything else, so a recorded counterexample can be
replayed on its own.

Universally quantified implications over large spaces (thins on 3~3
relations) only generate the instances whose antecedent holds; the rest are
vacuous.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .abstract import (BUILTINS, builtin_model, check_axioms, check_choice,
                       check_minimality_gap, concrete_model, is_isomorphic,
                       minimality_property, thins_in_model)
from .enumeration import enumerate_coreflexives, enumerate_pers, enumerate_relations
from .general import (enumerate_rel_indexes, find_rel_index, has_distinct_lines,
                      is_core, is_minimal_rel, is_rel_index, thins_rel)
from .pers import (completion_base, enumerate_per_indexes, find_per_index,
                   is_maximal_per, is_minimal_per, is_per_index, maximal_completion,
                   maximality_condition, thins_per)
from .rel import (Carrier, Per, Rel, TypeSig, bottom, identity, is_coreflexive,
                  is_equivalence, is_per, is_subset, left_domain, left_factor,
                  per_left_domain, per_left_domain_by_factors, per_right_domain,
                  per_right_domain_by_factors, right_domain, right_factor, top,
                  transitive_closure)

Instance = dict


@dataclass(frozen=True)
class Lemma:
    id: str
    group: str
    statement: str
    instances: Callable[..., Iterable[Instance]]
    check: Callable[..., bool]


REGISTRY: dict[str, Lemma] = {}


def lemma(id: str, group: str, statement: str, instances):
    def register(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate lemma id {id!r}")
        REGISTRY[id] = Lemma(id, group, statement, instances, fn)
        return fn
    return register


# -- helpers -----------------------------------------------------------------

def _T(R: Rel) -> Rel:
    """Homogeneous top on the source of ``R``."""
    return top(TypeSig(R.sig.src, R.sig.src))


def _Tr(R: Rel) -> Rel:
    return top(TypeSig(R.sig.tgt, R.sig.tgt))


def _pers_of(c: Carrier):
    return enumerate_pers(c, cap=c.size)


def _relations_of(s: TypeSig):
    return enumerate_relations(s, cap=s.cells)


def _minimal_rel(S: Rel) -> bool:
    return is_minimal_rel(S, _relations_of(S.sig))


_NAMES = "ABCD"


def _typed(shape, sizes):
    cs = [Carrier(_NAMES[i], n) for i, n in enumerate(sizes)]
    return {v: TypeSig(cs[i], cs[j]) for v, (i, j) in shape.items()}


def _random_rel(rng, s: TypeSig) -> Rel:
    return Rel(s, [rng.getrandbits(s.tgt.size) for _ in range(s.src.size)])


def small_relations(shape: dict, where=None):
    """Typed tuples of relations: exhaustive on carriers of size ≤ 2, sampled at size 3.

    ``shape`` maps variable names to pairs of carrier indices, e.g.
    ``{"X": (0, 1), "Y": (1, 2)}`` for ``X: A~B`` and ``Y: B~C``.
    """
    ncar = 1 + max(max(p) for p in shape.values())

    def gen(ctx, rng):
        for sizes in product(ctx.small_sizes, repeat=ncar):
            sigs = _typed(shape, sizes)
            names = list(sigs)
            for combo in product(*(enumerate_relations(sigs[v]) for v in names)):
                inst = dict(zip(names, combo))
                if where is None or where(**inst):
                    yield inst
        if ctx.sampled_rel_size:
            sigs = _typed(shape, [ctx.sampled_rel_size] * ncar)
            drawn = 0
            while drawn < ctx.cfg.sample_budget:
                inst = {v: _random_rel(rng, s) for v, s in sigs.items()}
                if where is None or where(**inst):
                    drawn += 1
                    yield inst
    return gen


def domain_relations(ctx, rng):
    """Every relation on carriers of size ≤ 3."""
    for a, b in product(range(1, 4), repeat=2):
        yield from ({"R": R} for R in enumerate_relations(TypeSig(Carrier("A", a), Carrier("B", b))))


def all_pers(ctx, rng):
    for U in ctx.per_universes():
        for P in U:
            yield {"P": P}


def per_pairs(ctx, rng):
    for U in ctx.per_universes():
        for P, Q in product(U, repeat=2):
            yield {"P": P, "Q": Q}


def per_triples(ctx, rng):
    for U in ctx.per_universes():
        pers = U.pers
        if U.carrier.size <= ctx.cfg.exhaustive_limit:
            for P, Q, R in product(pers, repeat=3):
                yield {"P": P, "Q": Q, "R": R}
        else:
            for _ in range(ctx.cfg.sample_budget):
                yield {"P": rng.choice(pers), "Q": rng.choice(pers), "R": rng.choice(pers)}


def small_per_pairs(ctx, rng):
    for U in ctx.per_universes(limit=3):
        for P, Q in product(U, repeat=2):
            yield {"P": P, "Q": Q}


def per_index_pairs(ctx, rng):
    for U in ctx.per_universes():
        for P in U:
            for J in enumerate_per_indexes(P):
                yield {"P": P, "J": J}


def per_index_other(ctx, rng):
    for U in ctx.per_universes():
        for P in U:
            for J in enumerate_per_indexes(P):
                for Q in U:
                    yield {"P": P, "Q": Q, "J": J}


def corefl_per_pairs(ctx, rng):
    for U in ctx.per_universes():
        cor = enumerate_coreflexives(U.carrier)
        for J in cor:
            for P, Q in product(U, repeat=2):
                yield {"J": J, "P": P, "Q": Q}


def per_corefl_index(ctx, rng):
    for U in ctx.per_universes():
        for P in U:
            for q in enumerate_coreflexives(U.carrier):
                for J in enumerate_per_indexes(P | q):
                    yield {"P": P, "q": q, "J": J}


def completions(ctx, rng):
    """Every per together with every index ``J`` of ``P∘⊤∘P ∪ q``."""
    for U in ctx.per_universes():
        for P in U:
            _, base = completion_base(P)
            for J in enumerate_per_indexes(base):
                yield {"P": P, "J": J}


def gen_relations(ctx, rng):
    for s in ctx.rel_sigs():
        for R in ctx.relations(s):
            yield {"R": R}


def gen_relation_indexes(ctx, rng):
    for s in ctx.rel_sigs():
        for R in ctx.relations(s):
            for J in enumerate_rel_indexes(R):
                yield {"R": R, "J": J}


def gen_thins_chains(ctx, rng):
    for s in ctx.rel_sigs():
        up = ctx.thins_table(s)
        for R in ctx.relations(s):
            yield {"R": R, "S": R, "T": R}
            for S in up[R]:
                for T in up[S]:
                    if not R == S == T:
                        yield {"R": R, "S": S, "T": T}


def models(ctx, rng):
    for name in BUILTINS:
        yield {"model": name}


# -- relation algebra --------------------------------------------------------

@lemma("rel.monoid", "relations",
       "composition is associative, has identities as units and bottom as zero",
       small_relations({"X": (0, 1), "Y": (1, 2), "Z": (2, 3)}))
def _monoid(X, Y, Z):
    return ((X @ Y) @ Z == X @ (Y @ Z)
            and identity(X.sig.src) @ X == X == X @ identity(X.sig.tgt)
            and bottom(TypeSig(Z.sig.src, Z.sig.src)) @ Z == bottom(Z.sig)
            and X @ bottom(TypeSig(X.sig.tgt, X.sig.tgt)) == bottom(X.sig))


@lemma("rel.distributivity", "relations",
       "composition distributes over union on both sides",
       small_relations({"R": (0, 1), "S": (1, 2), "T": (1, 2)}))
def _distributivity(R, S, T):
    return (R @ (S | T) == (R @ S) | (R @ T)
            and (S.conv | T.conv) @ R.conv == (S.conv @ R.conv) | (T.conv @ R.conv))


@lemma("rel.factor.gc", "relations",
       "(Y ⊆ X\\Z) = (X∘Y ⊆ Z) = (X ⊆ Z/Y)",
       small_relations({"X": (0, 1), "Y": (1, 2), "Z": (0, 2)}))
def _factor_gc(X, Y, Z):
    lhs = is_subset(Y, left_factor(X, Z))
    mid = is_subset(X @ Y, Z)
    rhs = is_subset(X, right_factor(Z, Y))
    return lhs == mid == rhs


@lemma("rel.converse.gc", "relations",
       "X° ⊆ Y ≡ X ⊆ Y°; converse is an involution; I° = I",
       small_relations({"X": (0, 1), "Y": (1, 0)}))
def _converse_gc(X, Y):
    return (is_subset(X.conv, Y) == is_subset(X, Y.conv)
            and X.conv.conv == X
            and identity(X.sig.src).conv == identity(X.sig.src))


@lemma("rel.converse.contra", "relations", "(X∘Y)° = Y°∘X°",
       small_relations({"X": (0, 1), "Y": (1, 2)}))
def _converse_contra(X, Y):
    return (X @ Y).conv == Y.conv @ X.conv


@lemma("rel.modularity", "relations", "X∘Y ∩ Z ⊆ X∘(Y ∩ X°∘Z)",
       small_relations({"X": (0, 1), "Y": (1, 2), "Z": (0, 2)}))
def _modularity(X, Y, Z):
    return is_subset((X @ Y) & Z, X @ (Y & (X.conv @ Z)))


@lemma("rel.cone", "relations", "⊤∘X∘⊤ = ⊤ ≡ X ≠ ⊥ on nonempty carriers",
       small_relations({"X": (0, 1)}))
def _cone(X):
    return ((_T(X) @ X @ _Tr(X) == top(X.sig)) == (not X.is_empty()))


@lemma("rel.monotonicity", "relations",
       "composition, converse, union, intersection and domains are monotonic",
       small_relations({"X": (0, 1), "X2": (0, 1), "Y": (1, 2)},
                       where=lambda X, X2, Y: is_subset(X, X2)))
def _monotonic(X, X2, Y):
    W = X @ Y @ Y.conv
    return (is_subset(X @ Y, X2 @ Y)
            and is_subset(Y.conv @ X.conv, Y.conv @ X2.conv)
            and is_subset(X.conv, X2.conv)
            and is_subset(X | W, X2 | W)
            and is_subset(X & W, X2 & W)
            and is_subset(left_domain(X), left_domain(X2))
            and is_subset(right_domain(X), right_domain(X2)))


@lemma("rel.domains", "relations",
       "R< = I ∩ R∘R°, R> = I ∩ R°∘R and (R∘S)< ⊆ R<",
       small_relations({"R": (0, 1), "S": (1, 2)}))
def _domains(R, S):
    return (left_domain(R) == identity(R.sig.src) & (R @ R.conv)
            and right_domain(R) == identity(R.sig.tgt) & (R.conv @ R)
            and is_subset(left_domain(R @ S), left_domain(R)))


@lemma("rel.per.domains", "relations",
       "for pers: left and right domains coincide, P∂∘P = P = P∘P∂, ⊤∘P = ⊤∘P∂, P∘⊤ = P∂∘⊤",
       all_pers)
def _per_domains(P):
    d = left_domain(P)
    T = _T(P)
    return (d == right_domain(P)
            and d @ P == P == P @ d
            and T @ P == T @ d
            and P @ T == d @ T)


@lemma("rel.coreflexives", "relations", "coreflexives commute and are idempotent",
       lambda ctx, rng: ({"p": p, "q": q}
                         for U in ctx.per_universes()
                         for p, q in product(enumerate_coreflexives(U.carrier), repeat=2)))
def _coreflexives(p, q):
    return p @ q == q @ p and p @ p == p


@lemma("rel.perdomain", "relations",
       "per-domains: the same-image and factor-based definitions agree, "
       "(R∂<)< = R<, R∂<∘R = R = R∘R∂>, and R∂< is the greatest per Q with "
       "Q∘R = R and Q ⊆ R<∘⊤∘R<",
       domain_relations)
def _perdomain(R):
    pl, pr = per_left_domain(R), per_right_domain(R)
    if pl != per_left_domain_by_factors(R) or pr != per_right_domain_by_factors(R):
        return False
    if left_domain(pl) != left_domain(R) or left_domain(pr) != right_domain(R):
        return False
    if pl @ R != R or R @ pr != R:
        return False
    d = left_domain(R)
    bound = d @ _T(R) @ d
    for Q in _pers_of(R.sig.src):
        if Q @ R == R and is_subset(Q, bound) and not is_subset(Q, pl):
            return False
    return is_subset(pl, bound)


@lemma("rel.perdomain.per", "relations", "a per is its own per-domain", all_pers)
def _perdomain_per(P):
    return per_left_domain(P) == P == per_right_domain(P)


@lemma("rel.closure", "relations",
       "transitive closure agrees with a Warshall oracle", domain_relations)
def _closure(R):
    if not R.sig.src.size == R.sig.tgt.size:
        return True
    H = Rel(TypeSig(R.sig.src, R.sig.src), R.rows)
    n = H.sig.src.size
    m = [[(H.rows[a] >> b) & 1 == 1 for b in range(n)] for a in range(n)]
    for k in range(n):
        for a in range(n):
            if m[a][k]:
                for b in range(n):
                    if m[k][b]:
                        m[a][b] = True
    return transitive_closure(H) == Rel.from_matrix(H.sig, m)


@lemma("not.maximal.lemma0", "pers", "P∂ = (P∘⊤∘P)∂, and P∘⊤∘P is a per", all_pers)
def _lemma0(P):
    PTP = P @ _T(P) @ P
    return is_per(PTP) and left_domain(P) == left_domain(PTP)


# -- pers: basic properties --------------------------------------------------

@lemma("axiom.choice", "pers",
       "every per has an index: find_per_index is one, and the enumerated indexes "
       "are exactly the coreflexive indexes, one per choice of class representatives",
       all_pers)
def _choice(P):
    J = find_per_index(P)
    listed = set(enumerate_per_indexes(P))
    brute = {c for c in enumerate_coreflexives(P.sig.src) if is_per_index(c, P)}
    expected = 1
    for cls in Per.of(P).classes():
        expected *= len(cls)
    return is_per_index(J, P) and listed == brute and len(listed) == expected


@lemma("itt.order", "pers", "thins is reflexive, antisymmetric and transitive on pers",
       per_triples)
def _order(P, Q, R):
    if not thins_per(P, P):
        return False
    if thins_per(P, Q) and thins_per(Q, P) and P != Q:
        return False
    return not (thins_per(P, Q) and thins_per(Q, R)) or thins_per(P, R)


@lemma("itt.imp.atmost", "pers", "P thins Q ⇒ P ⊆ Q", per_pairs)
def _atmost(P, Q):
    return not thins_per(P, Q) or is_subset(P, Q)


@lemma("itt.ABA", "pers", "P thins Q ⇒ P = P∘Q∘P ∧ Q = Q∘P∘Q", per_pairs)
def _aba(P, Q):
    return not thins_per(P, Q) or (P == P @ Q @ P and Q == Q @ P @ Q)


@lemma("corefl.and.thins", "pers",
       "P ⊆ I ∧ P thins Q ≡ P is an index of Q", per_pairs)
def _corefl_and_thins(P, Q):
    return (is_coreflexive(P) and thins_per(P, Q)) == is_per_index(P, Q)


@lemma("index.itt", "pers", "J an index of P ⇒ J thins P", per_index_pairs)
def _index_itt(P, J):
    return not is_per_index(J, P) or thins_per(J, P)


@lemma("TopPJTop", "pers", "J an index of P ⇒ ⊤∘P∘⊤ = ⊤∘J∘⊤", per_index_pairs)
def _top_p_j_top(P, J):
    T = _T(P)
    return not is_per_index(J, P) or T @ P @ T == T @ J @ T


@lemma("PqIndex", "pers",
       "J an index of P ∪ q ⇒ J∘P∂ is an index of P and q ⊆ P∂ ∪ J",
       per_corefl_index)
def _pq_index(P, q, J):
    if not is_per(P | q) or not is_per_index(J, P | q):
        return False
    d = left_domain(P)
    return is_per_index(J @ d, P) and is_subset(q, d | J)


@lemma("index.invariant", "pers",
       "J an index of P ∧ P thins Q ⇒ J an index of Q", corefl_per_pairs)
def _index_invariant(J, P, Q):
    return not (is_per_index(J, P) and thins_per(P, Q)) or is_per_index(J, Q)


@lemma("common.char", "pers",
       "J an index of P ∧ P thins Q ⇒ J∘P = J∘Q∘P∂", per_index_other)
def _common_char(P, Q, J):
    return not thins_per(P, Q) or J @ P == J @ Q @ left_domain(P)


@lemma("common.index", "pers",
       "P and Q share an index ∧ P ⊆ Q ⇒ P thins Q", corefl_per_pairs)
def _common_index(J, P, Q):
    if is_per_index(J, P) and is_per_index(J, Q) and is_subset(P, Q):
        return thins_per(P, Q)
    return True


@lemma("corefl.is.minimal", "pers", "coreflexive pers are minimal", all_pers)
def _corefl_minimal(P):
    return not is_coreflexive(P) or is_minimal_per(P, _pers_of(P.sig.src))


@lemma("choice.defs.minimal", "pers",
       "minimal ≡ coreflexive for all pers, and every per is thinned by a minimal per",
       all_pers)
def _choice_minimal(P):
    U = _pers_of(P.sig.src)
    if is_minimal_per(P, U) != is_coreflexive(P):
        return False
    J = find_per_index(P)
    return thins_per(J, P) and is_minimal_per(J, U)


# -- pers: maximality --------------------------------------------------------

@lemma("Jules.if", "maximality", "I ∩ ⊤∘P∘⊤ ⊆ P ⇒ P is maximal", all_pers)
def _jules_if(P):
    return not maximality_condition(P) or is_maximal_per(P, _pers_of(P.sig.src))


@lemma("not.maximal", "maximality",
       "every per thins some per Q with I ∩ ⊤∘Q∘⊤ ⊆ Q", all_pers)
def _not_maximal(P):
    tr = maximal_completion(P)
    return is_per(tr.Q) and thins_per(P, tr.Q) and maximality_condition(tr.Q)


@lemma("maximal.char", "maximality",
       "maximal ≡ I ∩ ⊤∘P∘⊤ ⊆ P ≡ (P = ⊥ ∨ P an equivalence)", all_pers)
def _maximal_char(P):
    maximal = is_maximal_per(P, _pers_of(P.sig.src))
    cond = maximality_condition(P)
    concrete = P.is_empty() or is_equivalence(P)
    return maximal == cond == concrete


def _trace(P, J):
    return maximal_completion(P, J)


@lemma("q.domain", "maximality", "(P∘⊤∘P ∪ q)∂ = q", completions)
def _q_domain(P, J):
    q, base = completion_base(P)
    return left_domain(base) == q


@lemma("J.atmost.q", "maximality", "J ⊆ q", completions)
def _j_atmost_q(P, J):
    return is_subset(J, completion_base(P)[0])


@lemma("JP.index", "maximality",
       "J∘P∂ is an index of P∘⊤∘P, J∘P∂ = J∘P∂∘⊤∘P∂∘J, P∘⊤∘P = P∘⊤∘J∘P∂∘⊤∘P, "
       "⊤∘P∂∘⊤ = ⊤∘J∘P∂∘⊤ and q ⊆ P∂ ∪ J", completions)
def _jp_index(P, J):
    q, _ = completion_base(P)
    T, d = _T(P), left_domain(P)
    Jd = J @ d
    return (is_per_index(Jd, P @ T @ P)
            and Jd == Jd @ T @ d @ J
            and P @ T @ P == P @ T @ Jd @ T @ P
            and T @ d @ T == T @ Jd @ T
            and is_subset(q, d | J))


@lemma("JtoJ", "maximality", "J∘⊤∘J = J∘⊤∘P∘⊤∘J", completions)
def _j_to_j(P, J):
    T = _T(P)
    return J @ T @ J == J @ T @ P @ T @ J


@lemma("edRTR", "maximality", "R∘P∘R = R = R∘P∂∘R", completions)
def _ed_rtr(P, J):
    R = _trace(P, J).R
    return R @ P @ R == R == R @ left_domain(P) @ R


@lemma("TopRTop.is.TopPTop", "maximality", "⊤∘P∘⊤ = ⊤∘Q∘⊤", completions)
def _top_q_top(P, J):
    Q = _trace(P, J).Q
    T = _T(P)
    return T @ P @ T == T @ Q @ T


@lemma("PRP", "maximality", "P∘R∘P ⊆ P", completions)
def _prp(P, J):
    R = _trace(P, J).R
    return is_subset(P @ R @ P, P)


@lemma("Pcupa", "maximality",
       "Q = (P∪R)∘(P∪R) = (P∪R)∘P∂∘(P∪R) and Q∘(P∪R) = Q", completions)
def _pcupa(P, J):
    tr = _trace(P, J)
    U = P | tr.R
    return (tr.Q == U @ U == U @ left_domain(P) @ U
            and tr.Q @ U == tr.Q)


@lemma("Qtransitive", "maximality",
       "Q is the transitive closure of P ∪ R, and a per", completions)
def _q_transitive(P, J):
    tr = _trace(P, J)
    return tr.Q == transitive_closure(P | tr.R) and is_per(tr.Q)


@lemma("Jules5", "maximality", "P thins Q", completions)
def _jules5(P, J):
    return thins_per(P, _trace(P, J).Q)


@lemma("Jules6", "maximality", "I ∩ ⊤∘Q∘⊤ ⊆ Q", completions)
def _jules6(P, J):
    return maximality_condition(_trace(P, J).Q)


# -- arbitrary relations -----------------------------------------------------

@lemma("itt.gen.ord", "general",
       "thins on relations is reflexive, antisymmetric and transitive "
       "(instances are the chains R thins S thins T)", gen_thins_chains)
def _gen_ord(R, S, T):
    if not thins_rel(R, R):
        return False
    if thins_rel(R, S) and thins_rel(S, R) and R != S:
        return False
    return not (thins_rel(R, S) and thins_rel(S, T)) or thins_rel(R, T)


@lemma("thins.overload", "general",
       "thins on relations restricted to pers agrees with thins on pers", small_per_pairs)
def _overload(P, Q):
    return thins_rel(P, Q) == thins_per(P, Q)


@lemma("core.char", "general",
       "R is core ≡ its nonempty rows are distinct and its nonempty columns are distinct",
       gen_relations)
def _core_char(R):
    return is_core(R) == has_distinct_lines(R)


@lemma("core.minimal", "general", "core relations are minimal", gen_relations)
def _core_minimal(R):
    return not is_core(R) or _minimal_rel(R)


@lemma("minimal.is.core", "general", "minimal ≡ core", gen_relations)
def _minimal_is_core(R):
    return _minimal_rel(R) == is_core(R)


@lemma("gen.index.choice", "general",
       "find_rel_index(R) is an index of R and a core relation", gen_relations)
def _gen_choice(R):
    J = find_rel_index(R)
    return is_rel_index(J, R) and is_core(J) and J in enumerate_rel_indexes(R)


@lemma("index.per.is.pid", "general",
       "J an index of R ⇒ J∂< ⊆ R∂<, J∂> ⊆ R∂>, J< = J∂< and J> = J∂>",
       gen_relation_indexes)
def _index_pid(R, J):
    if not is_rel_index(J, R):
        return False
    return (is_subset(per_left_domain(J), per_left_domain(R))
            and is_subset(per_right_domain(J), per_right_domain(R))
            and left_domain(J) == per_left_domain(J)
            and right_domain(J) == per_right_domain(J))


@lemma("R-perleft", "general",
       "J an index of R ⇒ R∂<∘J<∘R∂< = R∂< and R∂>∘J>∘R∂> = R∂>", gen_relation_indexes)
def _r_perleft(R, J):
    pl, pr = per_left_domain(R), per_right_domain(R)
    return (is_rel_index(J, R)
            and pl @ left_domain(J) @ pl == pl
            and pr @ right_domain(J) @ pr == pr)


@lemma("index-perdoms", "general",
       "J an index of R ⇒ J< is an index of R∂< and J> of R∂>", gen_relation_indexes)
def _index_perdoms(R, J):
    return (is_rel_index(J, R)
            and is_per_index(left_domain(J), per_left_domain(R))
            and is_per_index(right_domain(J), per_right_domain(R)))


@lemma("index.thins.gen", "general", "J an index of R ⇒ J thins R", gen_relation_indexes)
def _index_thins(R, J):
    return is_rel_index(J, R) and thins_rel(J, R)


@lemma("thins.min.index", "general",
       "S minimal ∧ J an index of S ⇒ J = S", gen_relations)
def _min_index(R):
    return not _minimal_rel(R) or all(J == R for J in enumerate_rel_indexes(R))


@lemma("thins.minmax.gen", "general",
       "S minimal ⇒ S∂< and S∂> are minimal pers", gen_relations)
def _minmax_gen(R):
    if not _minimal_rel(R):
        return True
    pl, pr = per_left_domain(R), per_right_domain(R)
    return (is_minimal_per(pl, _pers_of(R.sig.src))
            and is_minimal_per(pr, _pers_of(R.sig.tgt)))


# -- abstract models ---------------------------------------------------------

_UNARY = {"one": False, "two": True, "three": True, "four": True}
_CHOICE = {"one": True, "two": True, "three": False, "four": False}


@lemma("models.axioms", "models",
       "the four small algebras satisfy the core axioms; all but the one-element "
       "algebra are unary", models)
def _models_axioms(model):
    rep = check_axioms(builtin_model(model))
    return rep.core_ok and rep.unary == _UNARY[model]


@lemma("models.concrete", "models",
       "concrete relations on a one-element set form the two-element algebra",
       lambda ctx, rng: [{"model": "two"}])
def _models_concrete(model):
    return is_isomorphic(concrete_model(1), builtin_model(model))


@lemma("models.choice", "models",
       "choice holds in the one- and two-element algebras; ⊤ has no index otherwise",
       models)
def _models_choice(model):
    M = builtin_model(model)
    ok, witness = check_choice(M)
    if ok != _CHOICE[model]:
        return False
    return ok or witness == M.top


@lemma("models.discrete", "models",
       "the pers of the three- and four-element algebras are ⊥, I, ⊤ and thins is "
       "discrete in all four", models)
def _models_discrete(model):
    M = builtin_model(model)
    pers, _, discrete = thins_in_model(M)
    if M.n >= 3 and sorted(pers) != sorted({M.bot, M.id, M.top}):
        return False
    return discrete


@lemma("models.minimality.gap", "models",
       "some minimal per is not coreflexive exactly when choice fails", models)
def _models_gap(model):
    return check_minimality_gap(builtin_model(model)) == (not _CHOICE[model])


@lemma("choice.defs.minimal.models", "models",
       "per model: choice ≡ (minimal ≡ coreflexive ∧ every per thinned by a minimal one)",
       models)
def _choice_minimal_models(model):
    M = builtin_model(model)
    return check_choice(M)[0] == minimality_property(M)
