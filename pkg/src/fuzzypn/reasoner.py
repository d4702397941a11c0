"""Mamdani rule base of a labeled net and max-min generalized modus ponens.

Each transition ``t`` becomes a rule

    IF p_1 is 1/p_1 AND ... AND label of transition is l(t),
    THEN next state distribution is D_t = sum beta(t, p)/p

and rules with the same input places form a group. For such a group the
generalized modus ponens with singleton place facts collapses to

    D(p) = max_s [height(l(t_s) ∩ W) ^ D_{t_s}(p)]

which :func:`infer` evaluates. :func:`gmp` is the general p-rule,
q-antecedent form and is kept independent so the two can cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cw import FPNCW, Word
from .errors import UniverseMismatch
from .fuzzyset import FuzzySet, Universe, format_degree, height, intersect

__all__ = [
    "Rule",
    "RuleBase",
    "build_rule_base",
    "matching_rules",
    "infer",
    "GeneralRule",
    "gmp",
    "as_general_rules",
    "place_facts",
    "format_rule",
]


@dataclass(frozen=True)
class Rule:
    transition: str
    antecedents: tuple[str, ...]
    label: Word
    consequent: FuzzySet

    def overlap(self, w: Word | FuzzySet) -> float:
        """``height(l(t) ∩ W)``."""
        meaning = w.meaning if isinstance(w, Word) else w
        return height(intersect(self.label.meaning, meaning))


@dataclass(frozen=True)
class RuleBase:
    places: Universe
    rules: tuple[Rule, ...]
    groups: tuple[tuple[Rule, ...], ...]

    def __len__(self):
        return len(self.rules)

    def rule(self, transition: str) -> Rule:
        for r in self.rules:
            if r.transition == transition:
                return r
        raise KeyError(transition)


def build_rule_base(n: FPNCW) -> RuleBase:
    """One rule per transition, grouped by identical input place sets.

    Groups are ordered by the first transition that opens them, rules inside
    a group by transition declaration order.
    """
    net = n.fpn
    places = Universe(net.places)
    rules = []
    groups: dict[frozenset, list[Rule]] = {}
    for t in net.transitions:
        dist = FuzzySet.from_mapping(places, {p: net.beta[(t, p)] for p in net.output_places(t)})
        rule = Rule(t, net.input_places(t), n.word(n.labels[t]), dist)
        rules.append(rule)
        groups.setdefault(frozenset(rule.antecedents), []).append(rule)
    return RuleBase(places, tuple(rules), tuple(tuple(g) for g in groups.values()))


def matching_rules(group: Sequence[Rule], w: Word) -> list[Rule]:
    """Rules of ``group`` whose label overlaps ``w`` with positive height."""
    return [r for r in group if r.overlap(w) > 0]


def infer(rules: Sequence[Rule], w: Word) -> FuzzySet:
    """Next state distribution for the fact 'label of transition is ``w``'."""
    if not rules:
        raise ValueError("infer needs at least one rule")
    universe = rules[0].consequent.universe
    out = [0.0] * len(universe)
    for r in rules:
        h = r.overlap(w)
        for k, d in enumerate(r.consequent.values):
            out[k] = max(out[k], min(h, d))
    return FuzzySet(universe, tuple(out))


@dataclass(frozen=True)
class GeneralRule:
    """``IF x_1 is A_1 AND ... AND x_q is A_q THEN y is B``."""

    antecedents: tuple[FuzzySet, ...]
    consequent: FuzzySet


def gmp(rules: Sequence[GeneralRule], facts: Sequence[FuzzySet]) -> FuzzySet:
    """Mamdani max-min generalized modus ponens.

    ``B'(y) = max_i min_j sup_x [A_ij(x) ^ A'_j(x) ^ B_i(y)]``
    """
    if not rules:
        raise ValueError("gmp needs at least one rule")
    out_universe = rules[0].consequent.universe
    out = [0.0] * len(out_universe)
    for i, rule in enumerate(rules):
        if len(rule.antecedents) != len(facts):
            raise ValueError(f"rule {i} has {len(rule.antecedents)} antecedents, {len(facts)} facts given")
        if rule.consequent.universe != out_universe:
            raise UniverseMismatch(f"rule {i} concludes over a different universe")
        for j, (a, fact) in enumerate(zip(rule.antecedents, facts)):
            if a.universe != fact.universe:
                raise UniverseMismatch(f"rule {i}, antecedent {j}: fact over a different universe")
        for k, b in enumerate(rule.consequent.values):
            firing = min(
                (
                    max((min(ax, fx, b) for ax, fx in zip(a.values, fact.values)), default=0.0)
                    for a, fact in zip(rule.antecedents, facts)
                ),
                default=b,
            )
            out[k] = max(out[k], firing)
    return FuzzySet(out_universe, tuple(out))


def as_general_rules(rules: Sequence[Rule]) -> list[GeneralRule]:
    """Spell a group's rules out with singleton place antecedents plus the label."""
    out = []
    for r in rules:
        places = r.consequent.universe
        ants = tuple(FuzzySet.singleton(places, p) for p in r.antecedents)
        out.append(GeneralRule(ants + (r.label.meaning,), r.consequent))
    return out


def place_facts(rules: Sequence[Rule], w: Word) -> list[FuzzySet]:
    """The fact 'p_1 is 1/p_1 AND ... AND label of transition is w'."""
    places = rules[0].consequent.universe
    return [FuzzySet.singleton(places, p) for p in rules[0].antecedents] + [w.meaning]


def format_rule(r: Rule) -> str:
    ants = [f"{p} is 1/{p}" for p in r.antecedents]
    ants.append(f"label of transition is {r.label.name}")
    dist = " + ".join(
        f"{format_degree(v)}/{p}" for p, v in zip(r.consequent.universe.symbols, r.consequent.values) if v > 0
    )
    return f"R_{r.transition}: IF {' AND '.join(ants)}, THEN next state distribution is {dist or '0'}"
