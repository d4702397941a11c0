"""Reference computations written without the library's algorithms.

Each function works from the raw model fields (arc sets, degree dicts) so a
bug in the library's cached tables or frontier code cannot leak in.
"""

from __future__ import annotations

import itertools
from collections import deque


# -- classical safe Petri nets -------------------------------------------------

def safe_step(inputs, outputs, marked: frozenset, t: str):
    """One firing of a crisp net; ``None`` when ``t`` lacks a token on some input."""
    pre = {p for p, tt in inputs if tt == t}
    post = {p for tt, p in outputs if tt == t}
    if not pre <= marked:
        return None
    return frozenset((marked - pre) | post)


def safe_reachable(net) -> set[frozenset]:
    start = frozenset(p for p, v in zip(net.places, net.m0) if v == 1.0)
    seen, todo = {start}, deque([start])
    while todo:
        m = todo.popleft()
        for t in net.transitions:
            nxt = safe_step(net.inputs, net.outputs, m, t)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def as_place_set(net, marking) -> frozenset:
    assert set(marking) <= {0.0, 1.0}
    return frozenset(p for p, v in zip(net.places, marking) if v == 1.0)


# -- weighted firing equation ------------------------------------------------

def weighted_successor(netw, m, t):
    """Successor under input weights, straight from the arc dictionaries."""
    idx = {p: k for k, p in enumerate(netw.places)}
    pre = [p for p, tt in netw.inputs if tt == t]
    strength = min((m[idx[p]] for p in pre), default=1.0)
    assert strength >= netw.alpha[t]
    w = min((netw.w[(p, t)] for p in pre), default=1.0)
    out = []
    for p in netw.places:
        b = min(w, netw.beta[(t, p)]) if (t, p) in netw.outputs else 0.0
        if p not in pre:
            out.append(max(m[idx[p]], min(strength, b)))
        elif (t, p) in netw.outputs:
            out.append(min(strength, b))
        else:
            out.append(0.0)
    return tuple(out)


# -- fuzzy automata --------------------------------------------------------------

def facw_paths_degree(m, s) -> float:
    """Max over every state path ``q0 -W0-> q1 ... -> qk`` of the min degree and F(qk)."""
    f = dict(zip(m.states, m.finals.values))

    def d(q, w, q2):
        got = m.delta.get((q, w))
        return got(q2) if got is not None else 0.0

    best = 0.0
    for path in itertools.product(m.states, repeat=len(s)):
        states = (m.initial,) + path
        v = f[states[-1]]
        for k, w in enumerate(s):
            v = min(v, d(states[k], w, states[k + 1]))
            if v == 0:
                break
        best = max(best, v)
    return best


# -- max-min inference -----------------------------------------------------------

def infer_by_sup(rules, w):
    """Conclusion degree per place via sup over symbols of (label ∧ W ∧ D)."""
    places = rules[0].consequent.universe.symbols
    out = {}
    for p in places:
        out[p] = max(
            min(r.label.meaning(x), w.meaning(x), r.consequent(p))
            for r in rules
            for x in w.universe.symbols
        )
    return out
