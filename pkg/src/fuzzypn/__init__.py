"""Fuzzy Petri nets for computing with words.

Max-min firing semantics, reachability, fuzzy language acceptance,
Mamdani rule-base extension of a net to new words, and language-preserving
conversions to and from fuzzy automata.
"""

from .automaton import FACW, accept_facw, delta_ext, facw_to_fpncw, fpncw_to_facw
from .cw import FPNCW, Word, accept, accept_oracle, label_of_seq, language_table
from .errors import (
    BudgetExceeded,
    DegreeError,
    DisabledTransition,
    FuzzyPNError,
    ModelError,
    UniverseMismatch,
    UnknownReference,
)
from .extend import FPNCMW, check_theorem1, extend, restrict
from .fuzzyset import (
    FuzzySet,
    Universe,
    equals,
    height,
    intersect,
    is_subset,
    scale_product,
    support,
    union,
)
from .net import (
    FPN,
    WeightedFPN,
    fire,
    fire_seq,
    fire_weighted,
    is_enabled,
    mu,
    normalize_w,
    reachable,
    validate,
)
from .reasoner import GeneralRule, Rule, RuleBase, build_rule_base, gmp, infer, matching_rules

__version__ = "0.1.0"
