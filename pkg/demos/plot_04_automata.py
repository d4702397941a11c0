"""
Nets and fuzzy automata
=======================

Any labeled net becomes a fuzzy automaton over its reachable markings, and
any fuzzy automaton becomes a net with one place per state. Both directions
keep the accepted language.
"""

from fuzzypn import fixtures
from fuzzypn.automaton import accept_facw, facw_to_fpncw, fpncw_to_facw
from fuzzypn.cw import accept, all_strings
from fuzzypn.dot import to_dot

n = fixtures.water_valve_cw()
m = fpncw_to_facw(n)
for q in m.states:
    print(q, m.markings[q], "F =", m.finals(q))

# %%
for s in all_strings(["L", "M", "S"], 2):
    assert accept(n, s) == accept_facw(m, s)
print("languages agree up to length 2")

# %%
# The other direction: a three-state automaton over two words.
a = fixtures.two_word_automaton()
back = facw_to_fpncw(a)
print(len(back.fpn.transitions), "transitions, alpha", set(back.fpn.alpha.values()))
print("W1 W2:", accept_facw(a, ["W1", "W2"]), accept(back, ["W1", "W2"]))

# %%
# Graphviz source; pipe it through `dot -Tsvg` to draw.
print(to_dot(a))
