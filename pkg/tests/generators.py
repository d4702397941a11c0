"""Random small models for property tests.

Degrees are drawn from the grid 0.1, 0.2, ..., 1.0 (plus 0 where a zero
membership or marking entry makes sense).
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from fuzzypn.automaton import FACW
from fuzzypn.cw import FPNCW, Word
from fuzzypn.fuzzyset import FuzzySet, Universe
from fuzzypn.net import FPN

GRID = tuple(round(0.1 * k, 1) for k in range(1, 11))
GRID0 = (0.0,) + GRID


def random_word(rng: random.Random, name: str, universe: Universe) -> Word:
    vals = [rng.choice(GRID0) for _ in universe]
    if not any(vals):
        vals[rng.randrange(len(vals))] = rng.choice(GRID)
    return Word(name, FuzzySet(universe, tuple(vals)))


def random_fpn(rng: random.Random, max_places: int = 5, max_transitions: int = 4, *, safe: bool = False) -> FPN:
    n = rng.randint(1, max_places)
    m = rng.randint(1, max_transitions)
    places = [f"p{i + 1}" for i in range(n)]
    transitions = [f"t{j + 1}" for j in range(m)]
    inputs, outputs = set(), set()
    for t in transitions:
        # occasionally a source transition with no input places
        k_in = 0 if rng.random() < 0.1 else rng.randint(1, min(n, 3))
        for p in rng.sample(places, k_in):
            inputs.add((p, t))
        k_out = rng.randint(0 if k_in else 1, min(n, 3))
        for p in rng.sample(places, k_out):
            outputs.add((t, p))
    touched = {p for p, _ in inputs} | {p for _, p in outputs}
    for p in places:
        if p not in touched:
            t = rng.choice(transitions)
            if rng.random() < 0.5:
                inputs.add((p, t))
            else:
                outputs.add((t, p))
    if safe:
        alpha = {t: 1.0 for t in transitions}
        beta = {arc: 1.0 for arc in outputs}
        m0 = tuple(float(rng.random() < 0.5) for _ in places)
    else:
        # low thresholds and high initial degrees keep most nets live
        alpha = {t: min(rng.choice(GRID), rng.choice(GRID)) for t in transitions}
        beta = {arc: rng.choice(GRID) for arc in outputs}
        m0 = tuple(max(rng.choice(GRID0), rng.choice(GRID0)) if rng.random() < 0.7 else rng.choice((0.0, 1.0)) for _ in places)
    return FPN(places, transitions, inputs, outputs, alpha, beta, m0)


def random_symbols(rng: random.Random) -> Universe:
    return Universe(tuple(str(i + 1) for i in range(rng.randint(2, 5))))


def random_fpncw(rng: random.Random, max_places: int = 5, max_transitions: int = 4, max_words: int = 3) -> FPNCW:
    net = random_fpn(rng, max_places, max_transitions)
    symbols = random_symbols(rng)
    alphabet = tuple(random_word(rng, f"W{k + 1}", symbols) for k in range(rng.randint(1, max_words)))
    labels = {t: rng.choice(alphabet).name for t in net.transitions}
    m1 = tuple(rng.choice(GRID0) for _ in net.places)
    return FPNCW(net, m1, alphabet, labels)


def random_new_words(rng: random.Random, n: FPNCW, max_new: int = 2) -> tuple[Word, ...]:
    return tuple(random_word(rng, f"N{k + 1}", n.symbols) for k in range(rng.randint(1, max_new)))


def random_facw(rng: random.Random, max_states: int = 4, max_words: int = 3, max_out: int = 2) -> FACW:
    states = Universe(tuple(f"q{i}" for i in range(rng.randint(1, max_states))))
    symbols = random_symbols(rng)
    alphabet = tuple(random_word(rng, f"W{k + 1}", symbols) for k in range(rng.randint(1, max_words)))
    delta = {}
    for q in states:
        for w in alphabet:
            k = rng.randint(0, min(max_out, len(states)))
            if k:
                delta[(q, w.name)] = FuzzySet.from_mapping(
                    states, {q2: rng.choice(GRID) for q2 in rng.sample(states.symbols, k)}
                )
    if not delta:
        q = rng.choice(states.symbols)
        delta[(q, alphabet[0].name)] = FuzzySet.singleton(states, rng.choice(states.symbols), rng.choice(GRID))
    finals = FuzzySet(states, tuple(rng.choice(GRID0) for _ in states))
    return FACW(states.symbols, alphabet, delta, rng.choice(states.symbols), finals)


def seeded(fn, count: int, start: int = 0, **kw):
    """``count`` models from consecutive seeds; deterministic corpus for acceptance runs."""
    return [fn(random.Random(seed), **kw) for seed in range(start, start + count)]


randoms = st.randoms(use_true_random=False)
fpns = randoms.map(random_fpn)
safe_fpns = randoms.map(lambda r: random_fpn(r, safe=True))
fpncws = randoms.map(random_fpncw)
facws = randoms.map(random_facw)


@st.composite
def extended_pairs(draw):
    rng = draw(randoms)
    n = random_fpncw(rng)
    return n, random_new_words(rng, n)
