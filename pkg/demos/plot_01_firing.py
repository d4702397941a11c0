"""
Firing a fuzzy Petri net
========================

A mixing valve: two inflow places feed three valve positions, each pushing
the outflow toward a high, medium or low temperature.
"""

from fuzzypn import fixtures
from fuzzypn.net import enabled_transitions, fire, fire_seq, mu, reachability_graph

net = fixtures.water_valve()
print("places:", net.places)
print("M0:", net.m0)

# %%
# Every transition reads min(p1, p2) = 0.9, which clears all three thresholds.
for t in net.transitions:
    print(t, "mu =", mu(net, net.m0, t), "alpha =", net.alpha[t])
print("enabled:", enabled_transitions(net, net.m0))

# %%
# Firing drains the inputs and writes min(mu, beta) into each output.
print("after t2:", fire(net, net.m0, "t2"))

# %%
# Nothing is enabled afterwards, so a second step is undefined.
print("t2 then t3:", fire_seq(net, net.m0, ["t2", "t3"]))

# %%
# Breadth-first exploration finds four markings.
graph = reachability_graph(net)
for i, m in enumerate(graph.states):
    print(i, m)
for src, t, dst in graph.edges:
    print(f"  {src} --{t}--> {dst}")
