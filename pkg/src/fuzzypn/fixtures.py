"""Small reference models used by the tests, demos and data files.

The water valve net has hot/cold inflow places ``p1``, ``p2``, outflow
temperature places ``p3`` (high), ``p4`` (medium), ``p5`` (low) and one
transition per valve position. Its labeled variant tags the transitions
with hot-water flux words over the discretized flux ``{1..5}``.
"""

from __future__ import annotations

from .automaton import FACW
from .cw import FPNCW, Word
from .fuzzyset import FuzzySet, Universe
from .net import FPN, WeightedFPN

FLUX = Universe(("1", "2", "3", "4", "5"))

_PLACES = ("p1", "p2", "p3", "p4", "p5")
_TRANSITIONS = ("t1", "t2", "t3")
_INPUTS = {(p, t) for p in ("p1", "p2") for t in _TRANSITIONS}
_ALPHA = {"t1": 0.8, "t2": 0.5, "t3": 0.2}
_M0 = (0.9, 1.0, 0.0, 0.0, 0.0)


def water_valve() -> FPN:
    beta = {
        ("t1", "p3"): 0.9, ("t1", "p4"): 0.2,
        ("t2", "p3"): 0.1, ("t2", "p4"): 0.9, ("t2", "p5"): 0.1,
        ("t3", "p4"): 0.2, ("t3", "p5"): 0.9,
    }
    return FPN(_PLACES, _TRANSITIONS, _INPUTS, set(beta), _ALPHA, beta, _M0)


def water_valve_weighted() -> WeightedFPN:
    """Same net with input-arc weights; folding them in yields :func:`water_valve`."""
    beta = {
        ("t1", "p3"): 0.95, ("t1", "p4"): 0.2,
        ("t2", "p3"): 0.1, ("t2", "p4"): 0.92, ("t2", "p5"): 0.1,
        ("t3", "p4"): 0.2, ("t3", "p5"): 0.94,
    }
    w = {
        ("p1", "t1"): 0.98, ("p1", "t2"): 0.9, ("p1", "t3"): 0.9,
        ("p2", "t1"): 0.9, ("p2", "t2"): 0.9, ("p2", "t3"): 0.97,
    }
    return WeightedFPN(_PLACES, _TRANSITIONS, _INPUTS, set(beta), _ALPHA, beta, _M0, w)


def word(name: str, memberships: dict, universe: Universe = FLUX) -> Word:
    return Word(name, FuzzySet.from_mapping(universe, memberships))


def flux_words() -> tuple[Word, ...]:
    """large, medium, small."""
    return (
        word("L", {"3": 0.1, "4": 0.6, "5": 1.0}),
        word("M", {"2": 0.2, "3": 1.0, "4": 0.2}),
        word("S", {"1": 1.0, "2": 0.6, "3": 0.1}),
    )


def water_valve_cw() -> FPNCW:
    return FPNCW(
        water_valve(),
        (0.0, 0.0, 0.0, 1.0, 0.4),
        flux_words(),
        {"t1": "L", "t2": "M", "t3": "S"},
    )


def hedge_almost(w: Word, name: str | None = None) -> Word:
    """Square-root dilation, rounded to two decimals."""
    vals = tuple(round(v ** 0.5, 2) for v in w.meaning.values)
    return Word(name or w.name + "'", FuzzySet(w.meaning.universe, vals))


def almost_words() -> tuple[Word, ...]:
    """almost large, almost medium, almost small."""
    return tuple(hedge_almost(w) for w in flux_words())


# The arc topology and F of this automaton are fixed; the individual degrees
# are our own choice (minimum 0.1, and "W1 W2" accepted with degree 0.7).
TWO_WORD_DELTA = (
    ("q0", "W1", "q0", 0.1), ("q0", "W1", "q1", 0.8),
    ("q0", "W2", "q1", 0.5), ("q0", "W2", "q2", 0.3),
    ("q1", "W1", "q0", 0.2), ("q1", "W1", "q2", 0.6),
    ("q1", "W2", "q1", 0.9), ("q1", "W2", "q2", 0.7),
    ("q2", "W1", "q0", 0.4), ("q2", "W1", "q1", 0.5),
    ("q2", "W2", "q1", 0.6), ("q2", "W2", "q2", 1.0),
)


def two_word_automaton() -> FACW:
    states = Universe(("q0", "q1", "q2"))
    alphabet = (
        word("W1", {"1": 1.0, "2": 0.5, "3": 0.1}),
        word("W2", {"3": 0.1, "4": 0.5, "5": 1.0}),
    )
    entries: dict = {}
    for q, w, q2, v in TWO_WORD_DELTA:
        entries.setdefault((q, w), {})[q2] = v
    delta = {k: FuzzySet.from_mapping(states, v) for k, v in entries.items()}
    finals = FuzzySet.from_mapping(states, {"q0": 0.1, "q1": 0.7, "q2": 1.0})
    return FACW(states.symbols, alphabet, delta, "q0", finals)
