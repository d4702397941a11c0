"""Fuzzy Petri nets: structure, the max-min firing rule and reachability.

A marking is a plain tuple of floats indexed by place declaration order,
so markings hash and compare exactly. Firing only takes minima and maxima
of values already present in the net, which keeps the reachable marking
space finite and makes exact set membership sound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import BudgetExceeded, DisabledTransition, ModelError, UnknownReference
from .fuzzyset import check_degree

__all__ = [
    "Marking",
    "FPN",
    "WeightedFPN",
    "ReachabilityGraph",
    "as_marking",
    "validate",
    "check",
    "mu",
    "is_enabled",
    "enabled_transitions",
    "fire",
    "fire_seq",
    "reachability_graph",
    "reachable",
    "normalize_w",
    "fire_weighted",
    "DEFAULT_BUDGET",
]

Marking = tuple  # tuple[float, ...], one entry per place

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class FPN:
    """A fuzzy Petri net ``(P, T, I, O, alpha, beta, M0)``.

    ``inputs`` holds ``(place, transition)`` arcs and ``outputs`` holds
    ``(transition, place)`` arcs. ``beta`` is keyed by output arc.
    Construction only normalizes containers; use :func:`validate` to
    check the structural constraints.
    """

    places: tuple[str, ...]
    transitions: tuple[str, ...]
    inputs: frozenset
    outputs: frozenset
    alpha: Mapping[str, float]
    beta: Mapping[tuple[str, str], float]
    m0: Marking

    def __post_init__(self):
        object.__setattr__(self, "places", tuple(self.places))
        object.__setattr__(self, "transitions", tuple(self.transitions))
        object.__setattr__(self, "inputs", frozenset((p, t) for p, t in self.inputs))
        object.__setattr__(self, "outputs", frozenset((t, p) for t, p in self.outputs))
        object.__setattr__(self, "alpha", {t: float(a) for t, a in self.alpha.items()})
        object.__setattr__(self, "beta", {(t, p): float(b) for (t, p), b in self.beta.items()})
        object.__setattr__(self, "m0", tuple(float(x) for x in self.m0))

    @cached_property
    def place_index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.places)}

    @cached_property
    def _transition_set(self) -> frozenset:
        return frozenset(self.transitions)

    @cached_property
    def _table(self) -> dict[str, tuple[tuple[int, ...], dict[int, float]]]:
        # per transition: sorted input place indices, {output place index: beta}
        idx = self.place_index
        table: dict = {t: ([], {}) for t in self.transitions}
        for p, t in self.inputs:
            if t in table and p in idx:
                table[t][0].append(idx[p])
        for t, p in self.outputs:
            if t in table and p in idx:
                table[t][1][idx[p]] = self.beta.get((t, p), 0.0)
        return {t: (tuple(sorted(ins)), outs) for t, (ins, outs) in table.items()}

    def _row(self, t: str):
        try:
            return self._table[t]
        except KeyError:
            raise UnknownReference(f"unknown transition {t!r}") from None

    def input_places(self, t: str) -> tuple[str, ...]:
        """``I(t)`` in place declaration order."""
        return tuple(self.places[i] for i in self._row(t)[0])

    def output_places(self, t: str) -> tuple[str, ...]:
        """``O(t)`` in place declaration order."""
        return tuple(self.places[i] for i in sorted(self._row(t)[1]))

    def place_inputs(self, p: str) -> tuple[str, ...]:
        """``I(p)``: transitions that put tokens into ``p``."""
        return tuple(t for t in self.transitions if (t, p) in self.outputs)

    def place_outputs(self, p: str) -> tuple[str, ...]:
        """``O(p)``: transitions that consume from ``p``."""
        return tuple(t for t in self.transitions if (p, t) in self.inputs)

    def input_arcs(self) -> list[tuple[str, str]]:
        """Input arcs in canonical (transition, place) declaration order."""
        return [(self.places[i], t) for t in self.transitions for i in self._row(t)[0]]

    def output_arcs(self) -> list[tuple[str, str]]:
        return [(t, self.places[i]) for t in self.transitions for i in sorted(self._row(t)[1])]


@dataclass(frozen=True)
class WeightedFPN(FPN):
    """An FPN with an extra truth value ``w`` on every input arc."""

    w: Mapping[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "w", {(p, t): float(v) for (p, t), v in self.w.items()})


def as_marking(values: Iterable, net: FPN) -> Marking:
    """Validate a marking vector against ``net`` and return it as a tuple."""
    m = tuple(check_degree(v, f"marking[{i}]") for i, v in enumerate(values))
    if len(m) != len(net.places):
        raise ModelError(f"marking has {len(m)} entries, net has {len(net.places)} places")
    return m


def validate(net: FPN) -> list[str]:
    """Return every structural violation found in ``net`` (empty list when valid)."""
    problems: list[str] = []
    places, transitions = set(net.places), set(net.transitions)
    if len(places) != len(net.places):
        problems.append("duplicate place names")
    if len(transitions) != len(net.transitions):
        problems.append("duplicate transition names")
    if places & transitions:
        problems.append(f"names used for both places and transitions: {sorted(places & transitions)}")

    for p, t in sorted(net.inputs):
        if p not in places:
            problems.append(f"input arc ({p}, {t}): unknown place {p!r}")
        if t not in transitions:
            problems.append(f"input arc ({p}, {t}): unknown transition {t!r}")
    for t, p in sorted(net.outputs):
        if t not in transitions:
            problems.append(f"output arc ({t}, {p}): unknown transition {t!r}")
        if p not in places:
            problems.append(f"output arc ({t}, {p}): unknown place {p!r}")

    touched = {p for p, _ in net.inputs} | {p for _, p in net.outputs}
    for p in net.places:
        if p not in touched:
            problems.append(f"isolated place {p!r}")
    touched = {t for _, t in net.inputs} | {t for t, _ in net.outputs}
    for t in net.transitions:
        if t not in touched:
            problems.append(f"isolated transition {t!r}")

    for t in net.transitions:
        a = net.alpha.get(t)
        if a is None:
            problems.append(f"alpha missing for transition {t!r}")
        elif not 0.0 < a <= 1.0:
            problems.append(f"alpha out of (0,1] for transition {t!r}: {a}")
    for t in sorted(set(net.alpha) - transitions):
        problems.append(f"alpha given for unknown transition {t!r}")
    for arc in sorted(net.outputs):
        b = net.beta.get(arc)
        if b is None:
            problems.append(f"beta missing for output arc {arc}")
        elif not 0.0 < b <= 1.0:
            problems.append(f"beta out of (0,1] for output arc {arc}: {b}")
    for arc in sorted(set(net.beta) - set(net.outputs)):
        problems.append(f"beta given for non-arc {arc}")

    if len(net.m0) != len(net.places):
        problems.append(f"initial marking has {len(net.m0)} entries for {len(net.places)} places")
    for i, v in enumerate(net.m0):
        if not 0.0 <= v <= 1.0:
            problems.append(f"initial marking entry {i} out of [0,1]: {v}")

    if isinstance(net, WeightedFPN):
        for arc in sorted(net.inputs):
            v = net.w.get(arc)
            if v is None:
                problems.append(f"w missing for input arc {arc}")
            elif not 0.0 < v <= 1.0:
                problems.append(f"w out of (0,1] for input arc {arc}: {v}")
        for arc in sorted(set(net.w) - set(net.inputs)):
            problems.append(f"w given for non-arc {arc}")
    return problems


def check(net: FPN) -> FPN:
    """Raise :class:`ModelError` listing all violations, else return ``net``."""
    problems = validate(net)
    if problems:
        raise ModelError("; ".join(problems))
    return net


def mu(net: FPN, m: Marking, t: str) -> float:
    """Minimum degree over the input places of ``t`` (1 when ``t`` has none)."""
    ins = net._row(t)[0]
    return min((m[i] for i in ins), default=1.0)


def is_enabled(net: FPN, m: Marking, t: str) -> bool:
    return mu(net, m, t) >= net.alpha[t]


def enabled_transitions(net: FPN, m: Marking) -> list[str]:
    return [t for t in net.transitions if is_enabled(net, m, t)]


def _successor(net: FPN, m: Marking, t: str, strength: float) -> Marking:
    ins, outs = net._row(t)
    ins = set(ins)
    nxt = []
    for k, mk in enumerate(m):
        if k not in ins:
            b = outs.get(k)
            nxt.append(mk if b is None else max(mk, min(strength, b)))
        elif k in outs:
            nxt.append(min(strength, outs[k]))
        else:
            nxt.append(0.0)
    return tuple(nxt)


def fire(net: FPN, m: Marking, t: str) -> Marking:
    """Fire the enabled transition ``t`` at marking ``m``.

    Places outside ``I(t)`` keep ``max(M(p), mu ^ beta(t, p))``; input places
    that are also outputs get ``mu ^ beta(t, p)``; pure input places drop to 0.
    """
    strength = mu(net, m, t)
    if strength < net.alpha[t]:
        raise DisabledTransition(
            f"transition {t!r} is not enabled (input degree {strength} < threshold {net.alpha[t]})"
        )
    return _successor(net, m, t, strength)


def fire_seq(net: FPN, m: Marking, seq: Sequence[str]) -> Optional[Marking]:
    """Fire ``seq`` left to right; ``None`` as soon as a step is not enabled."""
    for t in seq:
        strength = mu(net, m, t)
        if strength < net.alpha[t]:
            return None
        m = _successor(net, m, t, strength)
    return m


@dataclass(frozen=True)
class ReachabilityGraph:
    """Reachable markings in BFS discovery order plus labeled firing edges."""

    states: tuple[Marking, ...]
    edges: tuple[tuple[int, str, int], ...]

    @cached_property
    def index(self) -> dict[Marking, int]:
        return {m: i for i, m in enumerate(self.states)}


def reachability_graph(net: FPN, budget: int = DEFAULT_BUDGET) -> ReachabilityGraph:
    """Breadth-first closure of ``{M0}`` under every enabled firing."""
    index = {net.m0: 0}
    states = [net.m0]
    edges = []
    queue = deque([net.m0])
    while queue:
        m = queue.popleft()
        src = index[m]
        for t in net.transitions:
            strength = mu(net, m, t)
            if strength < net.alpha[t]:
                continue
            nxt = _successor(net, m, t, strength)
            if nxt not in index:
                if len(states) >= budget:
                    raise BudgetExceeded(f"reachability budget exceeded ({budget} markings)")
                index[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            edges.append((src, t, index[nxt]))
    return ReachabilityGraph(tuple(states), tuple(edges))


def reachable(net: FPN, budget: int = DEFAULT_BUDGET) -> list[Marking]:
    """All markings reachable from ``M0``, in BFS discovery order."""
    return list(reachability_graph(net, budget).states)


def _min_w(netw: WeightedFPN, t: str) -> float:
    return min((netw.w[(p, t)] for p in netw.input_places(t)), default=1.0)


def normalize_w(netw: WeightedFPN) -> FPN:
    """Fold input-arc weights into ``beta``: ``beta_w(t,p) = min_k w(p_k,t) ^ beta(t,p)``."""
    beta = {(t, p): min(_min_w(netw, t), b) for (t, p), b in netw.beta.items()}
    return FPN(netw.places, netw.transitions, netw.inputs, netw.outputs, netw.alpha, beta, netw.m0)


def fire_weighted(netw: WeightedFPN, m: Marking, t: str) -> Marking:
    """Firing rule of a weighted net, evaluated directly on ``w`` and ``beta``."""
    ins = set(netw.input_places(t))
    outs = set(netw.output_places(t))
    strength = min((m[netw.place_index[p]] for p in ins), default=1.0)
    if strength < netw.alpha[t]:
        raise DisabledTransition(f"transition {t!r} is not enabled")
    wmin = _min_w(netw, t)
    nxt = []
    for p, mp in zip(netw.places, m):
        b = netw.beta.get((t, p), 0.0)
        if p not in ins:
            nxt.append(max(mp, min(strength, wmin, b)))
        elif p in outs:
            nxt.append(min(strength, wmin, b))
        else:
            nxt.append(0.0)
    return tuple(nxt)
