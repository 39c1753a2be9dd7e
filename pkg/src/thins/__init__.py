"""Finite-model verification kernel for the thins ordering on relations."""
from .abstract import (AbstractModel, AxiomReport, BUILTINS, builtin_model, check_axioms,
                       check_choice, check_minimality_gap, concrete_model, load_model,
                       thins_in_model)
from .enumeration import EnumerationCapError, enumerate_coreflexives, enumerate_pers, \
    enumerate_relations
from .formats import FormatError, dumps_rel, load_rel, loads_rel, rel_from_dict, rel_to_dict
from .general import enumerate_rel_indexes, find_rel_index, is_core, is_minimal_rel, \
    is_rel_index, thins_rel
from .pers import (CompletionTrace, enumerate_per_indexes, find_per_index, is_maximal_per,
                   is_minimal_per, is_per_index, maximal_completion, maximality_condition,
                   thins_per)
from .poset import counts, export_thins_poset
from .rel import (Carrier, Coreflexive, NotAPerError, NotCoreflexiveError, Per, Rel,
                  TypeMismatchError, TypeSig, bottom, carrier, compose, converse, identity,
                  is_coreflexive, is_equivalence, is_per, join, left_domain, left_factor, meet,
                  per_left_domain, per_right_domain, right_domain, right_factor, sig, top,
                  transitive_closure)
from .suite import LemmaReport, SuiteConfig, run_lemma_suite

__version__ = "0.1.0"
