"""
Computing with more words
=========================

Each transition doubles as a max-min IF-THEN rule. New words that were never
modeled ("almost large" and friends) get transitions synthesized by
inference, and the original words keep their acceptance degrees.
"""

from fuzzypn import fixtures
from fuzzypn.cw import accept
from fuzzypn.extend import check_theorem1, extend
from fuzzypn.reasoner import build_rule_base, format_rule, infer

n = fixtures.water_valve_cw()
rb = build_rule_base(n)
for r in rb.rules:
    print(format_rule(r))

# %%
# Square-root dilation, rounded to two decimals.
new = fixtures.almost_words()
for w in new:
    print(w)

# %%
# Inferred next-state distributions for the new words.
(group,) = rb.groups
for w in new:
    print(w.name, "->", infer(group, w))

# %%
ext = extend(n, new)
for t, pr in ext.provenance.items():
    outs = {p: ext.fpn.beta[(t, p)] for p in ext.fpn.output_places(t)}
    print(t, pr.word, "alpha", ext.fpn.alpha[t], outs)

# %%
# Old strings are unaffected; new words now have degrees of their own.
for s in (["M"], ["S"], ["M'"], ["L'"]):
    print(" ".join(s), accept(n, s) if set(s) <= {"L", "M", "S"} else "-", accept(ext, s))

# %%
# Firing a synthesized transition equals the overlap-weighted union of the
# original firings it came from.
print(all(check_theorem1(ext, ext.fpn.m0, t) for t in ext.fpn.transitions))
