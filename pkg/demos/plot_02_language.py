"""
Words as transition labels
==========================

Label the valve positions with hot-water flux words and ask how strongly a
string of words drives the net into its final marking.
"""

from fuzzypn import fixtures
from fuzzypn.cw import accept, accept_oracle, language_table

n = fixtures.water_valve_cw()
for w in n.alphabet:
    print(w)
print("M1:", n.m1)

# %%
# "M" fires t2, whose medium outflow overlaps the final marking at p4.
print("accept(M)   =", accept(n, ["M"]))
print("accept(M S) =", accept(n, ["M", "S"]))

# %%
# The brute-force enumeration agrees.
print("oracle(M)   =", accept_oracle(n, ["M"]))

# %%
# Every string up to length two, zeros omitted.
for s, d in language_table(n, 2, include_zero=False).items():
    print(" ".join(s), d)
