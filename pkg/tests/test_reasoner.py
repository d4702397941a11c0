import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzypn import fixtures as fx
from fuzzypn.cw import FPNCW, Word
from fuzzypn.errors import UniverseMismatch
from fuzzypn.fuzzyset import FuzzySet, Universe
from fuzzypn.net import FPN
from fuzzypn.reasoner import (
    GeneralRule,
    as_general_rules,
    build_rule_base,
    format_rule,
    gmp,
    infer,
    matching_rules,
    place_facts,
)

import generators as gen
import oracles

P5 = Universe(("p1", "p2", "p3", "p4", "p5"))


def dist(**kw):
    return FuzzySet.from_mapping(P5, kw)


@pytest.fixture
def rb(valve_cw):
    return build_rule_base(valve_cw)


def test_rule_base_shape(rb):
    assert len(rb) == 3
    assert rb.rule("t2").consequent == dist(p3=0.1, p4=0.9, p5=0.1)
    assert len(rb.groups) == 1
    assert rb.rule("t1").antecedents == ("p1", "p2")


def test_disjoint_inputs_give_one_group_each():
    net = FPN(("a", "b", "c"), ("t", "u"), {("a", "t"), ("b", "u")}, {("t", "c"), ("u", "c")},
              {"t": 0.5, "u": 0.5}, {("t", "c"): 1.0, ("u", "c"): 0.5}, (1, 1, 0))
    n = FPNCW(net, (0, 0, 1), fx.flux_words(), {"t": "L", "u": "S"})
    groups = build_rule_base(n).groups
    assert [[r.transition for r in g] for g in groups] == [["t"], ["u"]]


def test_matching_rules(rb, words):
    (group,) = rb.groups
    assert matching_rules(group, words["L'"]) == list(group)
    far = Word("far", FuzzySet.empty(fx.FLUX))
    assert matching_rules(group, far) == []
    five = fx.word("five", {"5": 1.0})
    assert [r.transition for r in matching_rules(group, five)] == ["t1"]


def test_infer_almost_words(rb, words):
    (group,) = rb.groups
    assert infer(group, words["L'"]) == dist(p3=0.9, p4=0.32, p5=0.1)
    assert infer(group, words["M'"]) == dist(p3=0.45, p4=0.9, p5=0.45)
    assert infer(group, words["S'"]) == dist(p3=0.1, p4=0.32, p5=0.9)


def test_infer_own_label_returns_consequent(rb):
    for r in rb.rules:
        assert infer([r], r.label) == r.consequent


def test_infer_needs_rules(words):
    with pytest.raises(ValueError):
        infer([], words["L"])


def test_gmp_specializes_to_infer(rb, words):
    (group,) = rb.groups
    for w in words.values():
        assert gmp(as_general_rules(group), place_facts(group, w)) == infer(group, w)


def test_gmp_empty_fact_gives_empty_conclusion(rb, words):
    (group,) = rb.groups
    facts = place_facts(group, words["L"])
    facts[0] = FuzzySet.empty(P5)
    assert gmp(as_general_rules(group), facts) == FuzzySet.empty(P5)


def test_gmp_shape_errors(rb, words):
    rules = as_general_rules(rb.groups[0])
    with pytest.raises(ValueError):
        gmp(rules, [words["L"].meaning])
    with pytest.raises(UniverseMismatch):
        gmp(rules, [words["L"].meaning] * 3)


def test_format_rule(rb):
    assert format_rule(rb.rule("t2")) == (
        "R_t2: IF p1 is 1/p1 AND p2 is 1/p2 AND label of transition is M, "
        "THEN next state distribution is 0.1/p3 + 0.9/p4 + 0.1/p5"
    )


# -- properties ------------------------------------------------------------------

X2 = Universe(("x", "y"))
Y2 = Universe(("u", "v"))
deg = st.sampled_from((0.0, 0.3, 0.6, 1.0))


def sets(u):
    return st.tuples(*[deg] * len(u)).map(lambda v: FuzzySet(u, v))


def normal_sets(u):
    return sets(u).filter(lambda a: max(a.values) == 1.0)


@settings(max_examples=60)
@given(st.lists(st.tuples(sets(X2), sets(X2), sets(Y2)), min_size=1, max_size=3), sets(X2), sets(X2))
def test_gmp_matches_exhaustive_definition(rules, f1, f2):
    general = [GeneralRule((a1, a2), b) for a1, a2, b in rules]
    got = gmp(general, [f1, f2])
    for y in Y2:
        want = max(
            min(
                max(min(a1(x), f1(x), b(y)) for x in X2),
                max(min(a2(x), f2(x), b(y)) for x in X2),
            )
            for a1, a2, b in rules
        )
        assert got(y) == want


@given(normal_sets(X2), normal_sets(X2), sets(Y2))
def test_gmp_recovers_consequent(a1, a2, b):
    assert gmp([GeneralRule((a1, a2), b)], [a1, a2]) == b


@settings(max_examples=60)
@given(gen.randoms)
def test_infer_matches_sup_formula(rng):
    n = gen.random_fpncw(rng)
    w = gen.random_word(rng, "N", n.symbols)
    for group in build_rule_base(n).groups:
        got = infer(group, w)
        assert got.as_dict(nonzero=False) == oracles.infer_by_sup(group, w)
        assert gmp(as_general_rules(group), place_facts(group, w)) == got


@given(gen.fpncws)
def test_rule_base_partition(n):
    rb = build_rule_base(n)
    assert len(rb.rules) == len(n.fpn.transitions)
    assert sum(len(g) for g in rb.groups) == len(rb.rules)
    for g1, g2 in itertools.combinations(rb.groups, 2):
        assert set(g1[0].antecedents) != set(g2[0].antecedents)
    for g in rb.groups:
        assert len({frozenset(r.antecedents) for r in g}) == 1
    for r in rb.rules:
        support = {p for p, v in r.consequent.as_dict().items()}
        assert support == set(n.fpn.output_places(r.transition))
