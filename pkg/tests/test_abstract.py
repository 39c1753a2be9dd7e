import json

import pytest

from thins.abstract import (AbstractModel, BUILTINS, ModelError, builtin_model, check_axioms,
                            check_choice, check_minimality_gap, concrete_model, is_isomorphic,
                            load_model, minimality_property, model_pers, thins_in_model)
from thins.enumeration import enumerate_pers, enumerate_relations
from thins.pers import thins_per
from thins.rel import sig

NAMES = ["one", "two", "three", "four"]


def el(M, name):
    return M.names.index(name)


class TestBuiltinTables:
    def test_one(self):
        M = builtin_model("one")
        assert M.n == 1 and M.bot == M.id == M.top

    def test_four_negation(self):
        M = builtin_model("four")
        nI, I, T = el(M, "¬I"), el(M, "I"), el(M, "⊤")
        assert M.c(nI, nI) == I
        assert M.conv(nI) == nI
        assert M.c(nI, T) == T == M.c(T, nI)

    def test_three_top(self):
        M = builtin_model("three")
        assert M.c(M.top, M.top) == M.top

    def test_unknown(self):
        with pytest.raises(ModelError):
            builtin_model("five")


@pytest.mark.parametrize("name", NAMES)
def test_core_axioms_hold(name):
    rep = check_axioms(builtin_model(name))
    assert rep.core_ok, rep.to_dict()
    for res in rep.results.values():
        assert res.holds == (res.witness is None)


def test_flags_across_builtins():
    models = [builtin_model(n) for n in NAMES]
    assert [check_axioms(M).unary for M in models] == [False, True, True, True]
    assert [check_choice(M)[0] for M in models] == [True, True, False, False]
    assert [M.name(check_choice(M)[1]) for M in models[2:]] == ["⊤", "⊤"]
    assert all(thins_in_model(M)[2] for M in models)
    assert [check_minimality_gap(M) for M in models] == [False, False, True, True]


def test_pers_of_three():
    M = builtin_model("three")
    pers, rel, discrete = thins_in_model(M)
    assert [M.name(p) for p in pers] == ["⊥", "I", "⊤"] and discrete
    assert len(thins_in_model(builtin_model("one"))[0]) == 1


@pytest.mark.parametrize("name", NAMES)
def test_choice_equivalent_to_minimality(name):
    M = builtin_model(name)
    assert check_choice(M)[0] == minimality_property(M)


def test_mutated_converse_breaks_gc():
    M = builtin_model("four")
    bad = M.with_converse(el(M, "¬I"), el(M, "I"))
    res = check_axioms(bad)["converse_gc"]
    assert not res.holds and res.witness == ("¬I", "I")


def test_non_distributive_lattice_detected():
    # the diamond M3 with composition = meet
    names = ["0", "a", "b", "c", "1"]

    def join(x, y):
        return x if x == y or y == 0 else y if x == 0 else 4

    def meet(x, y):
        return x if x == y or y == 4 else y if x == 4 else 0
    meet = [[meet(x, y) for y in range(5)] for x in range(5)]
    join = [[join(x, y) for y in range(5)] for x in range(5)]
    M = AbstractModel(tuple(names), tuple(map(tuple, meet)), tuple(range(5)),
                      tuple(map(tuple, join)), tuple(map(tuple, meet)), 0, 4, 4)
    res = check_axioms(M)["distributive_lattice"]
    assert not res.holds and res.witness is not None


def test_broken_monoid_detected():
    M = builtin_model("three")
    comp = [list(r) for r in M.compose]
    comp[M.id][M.top] = M.id
    d = M.to_dict() | {"compose": comp}
    assert not check_axioms(AbstractModel.from_dict(d))["monoid"].holds


class TestConcrete:
    def test_one_element_carrier_is_two(self):
        assert is_isomorphic(concrete_model(1), builtin_model("two"))
        assert not is_isomorphic(concrete_model(1), builtin_model("one"))

    def test_two_element_carrier_is_a_unary_algebra_with_choice(self):
        M = concrete_model(2)
        rep = check_axioms(M)
        assert rep.core_ok and rep.unary and rep["choice"].holds
        assert minimality_property(M) and not check_minimality_gap(M)

    def test_model_thins_agrees_with_relations(self):
        M = concrete_model(2)
        rels = list(enumerate_relations(sig(2)))
        pers, rel, _ = thins_in_model(M)
        assert {rels[p] for p in pers} == set(enumerate_pers(2))
        assert {(rels[p], rels[q]) for p, q in rel} == {
            (P, Q) for P in enumerate_pers(2) for Q in enumerate_pers(2) if thins_per(P, Q)}


class TestFiles:
    def test_round_trip(self, tmp_path):
        f = tmp_path / "m.json"
        M = builtin_model("four")
        f.write_text(json.dumps(M.to_dict(), ensure_ascii=False))
        assert load_model(f) == M

    @pytest.mark.parametrize("patch", [
        {"compose": [[0]]},
        {"converse": [0, 1]},
        {"top": 9},
        {"names": []},
    ])
    def test_malformed(self, tmp_path, patch):
        d = builtin_model("three").to_dict() | patch
        with pytest.raises(ModelError):
            AbstractModel.from_dict(d)

    def test_missing_key(self):
        d = builtin_model("two").to_dict()
        del d["meet"]
        with pytest.raises(ModelError):
            AbstractModel.from_dict(d)

    def test_bad_json(self, tmp_path):
        f = tmp_path / "m.json"
        f.write_text("{")
        with pytest.raises(ModelError):
            load_model(f)


def test_model_pers_are_self_converse_and_transitive():
    for name in BUILTINS:
        M = builtin_model(name)
        for p in model_pers(M):
            assert M.conv(p) == p and M.le(M.c(p, p), p)
