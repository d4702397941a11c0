"""Extending a labeled net to new words by fuzzy reasoning.

For every rule group and every new word ``W'_j`` the rules whose labels
overlap ``W'_j`` are collected. A nonempty collection yields one new
transition ``t'{i}_{j}`` with the group's input places, the union of the
contributing outputs, the largest contributing threshold, and output truth
values given by the inferred next state distribution. The original net is
left untouched, so it survives as a full subnet of the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .cw import FPNCW, Word
from .errors import DisabledTransition, ModelError, UnknownReference
from .fuzzyset import height, intersect
from .net import FPN, Marking, fire, is_enabled
from .reasoner import build_rule_base, infer, matching_rules

__all__ = ["Provenance", "FPNCMW", "extend", "restrict", "check_theorem1", "theorem1_rhs"]


@dataclass(frozen=True)
class Provenance:
    """Where a synthesized transition came from."""

    group: int  # 1-based rule group index
    word_index: int  # 1-based index among the new words
    word: str
    rules: tuple[str, ...]  # contributing original transitions
    overlaps: tuple[float, ...]  # height(l(t_s) ∩ W') per contributing transition


@dataclass(frozen=True)
class FPNCMW(FPNCW):
    """An extended net; ``provenance`` covers exactly the synthesized transitions."""

    new_words: tuple[str, ...] = ()
    provenance: Mapping[str, Provenance] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "new_words", tuple(self.new_words))
        object.__setattr__(self, "provenance", dict(self.provenance))


def new_transition_name(i: int, j: int) -> str:
    return f"t'{i}_{j}"


def extend(n: FPNCW, new_words: Sequence[Word]) -> FPNCMW:
    names = [w.name for w in new_words]
    if len(set(names)) != len(names):
        raise ModelError("duplicate names among new words")
    for w in new_words:
        if w.name in n.words:
            raise ModelError(f"new word {w.name!r} collides with an existing alphabet word")
        if w.universe != n.symbols:
            raise ModelError(f"new word {w.name!r} is not defined over the net's symbol set")

    net = n.fpn
    rb = build_rule_base(n)
    transitions = list(net.transitions)
    inputs, outputs = set(net.inputs), set(net.outputs)
    alpha, beta = dict(net.alpha), dict(net.beta)
    labels = dict(n.labels)
    provenance = {}

    for i, group in enumerate(rb.groups, 1):
        for j, w in enumerate(new_words, 1):
            contributing = matching_rules(group, w)
            if not contributing:
                continue
            t = new_transition_name(i, j)
            if t in net.place_index or t in labels:
                raise ModelError(f"generated transition name {t!r} already used in the net")
            dist = infer(contributing, w)
            transitions.append(t)
            inputs.update((p, t) for p in group[0].antecedents)
            for p, v in zip(net.places, dist.values):
                if any(r.consequent(p) > 0 for r in contributing):
                    outputs.add((t, p))
                    beta[(t, p)] = v
            alpha[t] = max(net.alpha[r.transition] for r in contributing)
            labels[t] = w.name
            provenance[t] = Provenance(
                i, j, w.name,
                tuple(r.transition for r in contributing),
                tuple(r.overlap(w) for r in contributing),
            )

    fpn = FPN(net.places, transitions, inputs, outputs, alpha, beta, net.m0)
    return FPNCMW(fpn, n.m1, n.alphabet + tuple(new_words), labels, tuple(names), provenance)


def restrict(ext: FPNCMW) -> FPNCW:
    """Drop the synthesized transitions and new words, recovering the original net."""
    net = ext.fpn
    keep = [t for t in net.transitions if t not in ext.provenance]
    kept = set(keep)
    fpn = FPN(
        net.places,
        keep,
        {(p, t) for p, t in net.inputs if t in kept},
        {(t, p) for t, p in net.outputs if t in kept},
        {t: a for t, a in net.alpha.items() if t in kept},
        {(t, p): b for (t, p), b in net.beta.items() if t in kept},
        net.m0,
    )
    new = set(ext.new_words)
    return FPNCW(
        fpn,
        ext.m1,
        tuple(w for w in ext.alphabet if w.name not in new),
        {t: lab for t, lab in ext.labels.items() if t in kept},
    )


def theorem1_rhs(ext: FPNCMW, m: Marking, t: str, base: FPNCW | None = None) -> Marking | None:
    """Successor of ``m`` under ``t`` predicted from the original net alone.

    Returns ``None`` when some transition it depends on is not enabled.
    """
    base = restrict(ext) if base is None else base
    if t not in ext.provenance:
        if t not in base.fpn.transitions:
            raise UnknownReference(f"unknown transition {t!r}")
        return fire(base.fpn, m, t) if is_enabled(base.fpn, m, t) else None
    prov = ext.provenance[t]
    w = ext.word(ext.labels[t])
    succs = []
    for ts in prov.rules:
        if not is_enabled(base.fpn, m, ts):
            return None
        h = height(intersect(base.word(base.labels[ts]).meaning, w.meaning))
        succs.append((h, fire(base.fpn, m, ts)))
    ins = set(ext.fpn.input_places(t))
    out = []
    for k, p in enumerate(ext.fpn.places):
        v = max(min(h, s[k]) for h, s in succs)
        out.append(v if p in ins else max(m[k], v))
    return tuple(out)


def check_theorem1(ext: FPNCMW, m: Marking, t: str, base: FPNCW | None = None) -> bool:
    """Fire ``t`` on the extended net and compare with the prediction from the original."""
    if not is_enabled(ext.fpn, m, t):
        raise DisabledTransition(f"transition {t!r} is not enabled on the extended net")
    return fire(ext.fpn, m, t) == theorem1_rhs(ext, m, t, base)
