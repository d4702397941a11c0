"""Word-labeled fuzzy Petri nets and the fuzzy languages they accept."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from .errors import ModelError, UnknownReference
from .fuzzyset import FuzzySet, Universe
from .net import FPN, Marking, _successor, fire_seq, mu, validate as validate_fpn

__all__ = [
    "Word",
    "FPNCW",
    "validate",
    "label_of_seq",
    "accept",
    "accept_oracle",
    "language_table",
    "all_strings",
    "marking_height",
]


@dataclass(frozen=True)
class Word:
    """A named fuzzy subset of the symbol universe."""

    name: str
    meaning: FuzzySet

    @property
    def universe(self) -> Universe:
        return self.meaning.universe

    def __str__(self) -> str:
        return f"{self.name} = {self.meaning}"


@dataclass(frozen=True)
class FPNCW:
    """An FPN with a final marking and a word label on every transition."""

    fpn: FPN
    m1: Marking
    alphabet: tuple[Word, ...]
    labels: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "m1", tuple(float(x) for x in self.m1))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "labels", dict(self.labels))

    @cached_property
    def words(self) -> dict[str, Word]:
        return {w.name: w for w in self.alphabet}

    @cached_property
    def by_label(self) -> dict[str, tuple[str, ...]]:
        """Transitions carrying each word, in declaration order."""
        out: dict[str, list[str]] = {w.name: [] for w in self.alphabet}
        for t in self.fpn.transitions:
            out.setdefault(self.labels.get(t), []).append(t)
        return {k: tuple(v) for k, v in out.items()}

    @property
    def symbols(self) -> Universe:
        return self.alphabet[0].universe

    def word(self, name: str) -> Word:
        try:
            return self.words[name]
        except KeyError:
            raise UnknownReference(f"unknown word {name!r}") from None


def validate(n: FPNCW) -> list[str]:
    problems = validate_fpn(n.fpn)
    if len(n.m1) != len(n.fpn.places):
        problems.append(f"final marking has {len(n.m1)} entries for {len(n.fpn.places)} places")
    for i, v in enumerate(n.m1):
        if not 0.0 <= v <= 1.0:
            problems.append(f"final marking entry {i} out of [0,1]: {v}")
    names = [w.name for w in n.alphabet]
    if len(set(names)) != len(names):
        problems.append("duplicate word names in alphabet")
    if not n.alphabet:
        problems.append("empty alphabet")
    elif any(w.universe != n.alphabet[0].universe for w in n.alphabet):
        problems.append("alphabet words are defined over different symbol sets")
    for t in n.fpn.transitions:
        lab = n.labels.get(t)
        if lab is None:
            problems.append(f"transition {t!r} has no label")
        elif lab not in n.words:
            problems.append(f"transition {t!r} labeled with unknown word {lab!r}")
    for t in sorted(set(n.labels) - set(n.fpn.transitions)):
        problems.append(f"label given for unknown transition {t!r}")
    return problems


def check(n: FPNCW) -> FPNCW:
    problems = validate(n)
    if problems:
        raise ModelError("; ".join(problems))
    return n


def marking_height(m: Marking, m1: Marking) -> float:
    """``height(m ∩ M1)`` for two marking vectors."""
    return max(map(min, m, m1), default=0.0)


def label_of_seq(n: FPNCW, seq: Sequence[str]) -> tuple[str, ...]:
    out = []
    for t in seq:
        if t not in n.labels:
            raise UnknownReference(f"unknown transition {t!r}")
        out.append(n.labels[t])
    return tuple(out)


def _check_string(n: FPNCW, s: Sequence[str]) -> tuple[str, ...]:
    s = tuple(s)
    for name in s:
        n.word(name)
    return s


def accept(n: FPNCW, s: Sequence[str]) -> float:
    """Degree to which the word string ``s`` is accepted.

    Runs a frontier over exact marking vectors: each step fires every
    enabled transition carrying the next word from every frontier marking.
    """
    s = _check_string(n, s)
    net = n.fpn
    frontier = {net.m0}
    for name in s:
        nxt = set()
        for m in frontier:
            for t in n.by_label[name]:
                strength = mu(net, m, t)
                if strength >= net.alpha[t]:
                    nxt.add(_successor(net, m, t, strength))
        frontier = nxt
        if not frontier:
            return 0.0
    return max((marking_height(m, n.m1) for m in frontier), default=0.0)


def accept_oracle(n: FPNCW, s: Sequence[str], max_depth: int = 6) -> float:
    """Brute-force acceptance degree: fire every transition sequence labeled ``s``.

    Sequences are enumerated depth first over the per-position label classes
    and each one is replayed transition by transition, with no merging of
    equal markings, so this stays independent of :func:`accept`. A sequence
    whose prefix is undefined is undefined itself, so its extensions are
    skipped; the result is the same as filtering all ``|T|**len(s)``
    sequences.
    """
    s = _check_string(n, s)
    if len(s) > max_depth:
        raise ValueError(f"string length {len(s)} exceeds oracle depth bound {max_depth}")
    net = n.fpn
    candidates = [[t for t in net.transitions if n.labels.get(t) == name] for name in s]

    def walk(m: Marking, k: int) -> float:
        if k == len(s):
            return marking_height(m, n.m1)
        best = 0.0
        for t in candidates[k]:
            nxt = fire_seq(net, m, (t,))
            if nxt is not None:
                best = max(best, walk(nxt, k + 1))
        return best

    return walk(net.m0, 0)


def all_strings(names: Sequence[str], max_len: int):
    """Every string over ``names`` of length 0..max_len, shortest first."""
    for k in range(max_len + 1):
        yield from itertools.product(names, repeat=k)


def language_table(n: FPNCW, max_len: int, *, include_zero: bool = True) -> dict[tuple[str, ...], float]:
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    table = {}
    for s in all_strings([w.name for w in n.alphabet], max_len):
        d = accept(n, s)
        if d > 0 or include_zero:
            table[s] = d
    return table
