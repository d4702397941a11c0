"""Fuzzy automata over words and the two language-preserving conversions.

``facw_to_fpncw`` turns every state into a place and every positive triple
``delta(q, W)(q') > 0`` into a one-in, one-out transition. ``fpncw_to_facw``
runs the reachability graph of a net and reads it as a crisp automaton
whose final degrees are ``height(M ∩ M1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .cw import FPNCW, Word, marking_height
from .errors import ModelError, UnknownReference
from .fuzzyset import FuzzySet, Universe, height, intersect, scale_product, union
from .net import DEFAULT_BUDGET, FPN, Marking, reachability_graph

__all__ = [
    "FACW",
    "validate",
    "delta_ext",
    "accept_facw",
    "facw_to_fpncw",
    "fpncw_to_facw",
    "triple_transition_name",
]


@dataclass(frozen=True)
class FACW:
    """``(Q, alphabet, delta, q0, F)``; missing ``delta`` entries are empty sets."""

    states: tuple[str, ...]
    alphabet: tuple[Word, ...]
    delta: Mapping[tuple[str, str], FuzzySet]
    initial: str
    finals: FuzzySet
    markings: Optional[Mapping[str, Marking]] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        # empty entries carry no information; dropping them keeps equality canonical
        delta = {k: v for k, v in self.delta.items() if any(v.values)}
        object.__setattr__(self, "delta", delta)

    @cached_property
    def universe(self) -> Universe:
        return Universe(self.states)

    @cached_property
    def words(self) -> dict[str, Word]:
        return {w.name: w for w in self.alphabet}

    def step(self, q: str, word: str) -> FuzzySet:
        if word not in self.words:
            raise UnknownReference(f"unknown word {word!r}")
        got = self.delta.get((q, word))
        return got if got is not None else FuzzySet.empty(self.universe)

    def triples(self):
        """Positive ``(q, W, q', degree)`` entries in state/word/state order."""
        for q in self.states:
            for w in self.alphabet:
                d = self.delta.get((q, w.name))
                if d is None:
                    continue
                for q2, v in zip(self.states, d.values):
                    if v > 0:
                        yield q, w.name, q2, v


def validate(m: FACW) -> list[str]:
    problems = []
    if len(set(m.states)) != len(m.states):
        problems.append("duplicate state names")
    if m.initial not in m.states:
        problems.append(f"initial state {m.initial!r} is not a state")
    if m.finals.universe.symbols != m.states:
        problems.append("final-state fuzzy set is not over the state set")
    names = [w.name for w in m.alphabet]
    if len(set(names)) != len(names):
        problems.append("duplicate word names in alphabet")
    for (q, w), d in m.delta.items():
        if q not in m.states:
            problems.append(f"delta entry for unknown state {q!r}")
        if w not in m.words:
            problems.append(f"delta entry for unknown word {w!r}")
        if d.universe.symbols != m.states:
            problems.append(f"delta({q}, {w}) is not over the state set")
    return problems


def delta_ext(m: FACW, p: str, s: Sequence[str]) -> FuzzySet:
    """Extended transition function: max-min composition along ``s``."""
    if p not in m.states:
        raise UnknownReference(f"unknown state {p!r}")
    for word in s:
        if word not in m.words:
            raise UnknownReference(f"unknown word {word!r}")
    cur = FuzzySet.singleton(m.universe, p)
    for word in s:
        nxt = FuzzySet.empty(m.universe)
        for q, degree in zip(m.states, cur.values):
            if degree > 0:
                nxt = union(nxt, scale_product(degree, m.step(q, word)))
        cur = nxt
    return cur


def accept_facw(m: FACW, s: Sequence[str]) -> float:
    return height(intersect(delta_ext(m, m.initial, s), m.finals))


def triple_transition_name(q: str, word: str, q2: str) -> str:
    return f"t({q},{word},{q2})"


def facw_to_fpncw(m: FACW) -> FPNCW:
    triples = list(m.triples())
    if not triples:
        raise ModelError("automaton has no positive transition degree; threshold is undefined")
    threshold = min(v for *_, v in triples)
    transitions, inputs, outputs, alpha, beta, labels = [], set(), set(), {}, {}, {}
    for q, w, q2, v in triples:
        t = triple_transition_name(q, w, q2)
        transitions.append(t)
        inputs.add((q, t))
        outputs.add((t, q2))
        alpha[t] = threshold
        beta[(t, q2)] = v
        labels[t] = w
    m0 = tuple(1.0 if q == m.initial else 0.0 for q in m.states)
    fpn = FPN(m.states, transitions, inputs, outputs, alpha, beta, m0)
    return FPNCW(fpn, m.finals.values, m.alphabet, labels)


def fpncw_to_facw(n: FPNCW, budget: int = DEFAULT_BUDGET) -> FACW:
    graph = reachability_graph(n.fpn, budget)
    names = tuple(f"q{i}" for i in range(len(graph.states)))
    universe = Universe(names)
    targets: dict[tuple[str, str], set[int]] = {}
    for src, t, dst in graph.edges:
        targets.setdefault((names[src], n.labels[t]), set()).add(dst)
    delta = {
        key: FuzzySet(universe, tuple(1.0 if i in dsts else 0.0 for i in range(len(names))))
        for key, dsts in targets.items()
    }
    finals = FuzzySet(universe, tuple(marking_height(s, n.m1) for s in graph.states))
    return FACW(names, n.alphabet, delta, names[0], finals, dict(zip(names, graph.states)))
