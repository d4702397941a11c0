"""Graphviz DOT text for nets and automata.

Places are circles (double circles when the final marking is positive),
transitions are thin boxes annotated with their threshold and word, output
arcs carry ``beta``. Automaton states are record boxes ``q|F(q)`` and arcs
are labeled ``W|x``.
"""

from __future__ import annotations

from .automaton import FACW
from .cw import FPNCW
from .fuzzyset import format_degree as fmt
from .net import FPN

__all__ = ["to_dot", "net_to_dot", "facw_to_dot"]


def _q(s: str) -> str:
    return '"{}"'.format(str(s).replace("\\", "\\\\").replace('"', r"\"").replace("\n", r"\n"))


def net_to_dot(model: FPN | FPNCW, name: str = "net") -> str:
    cw = model if isinstance(model, FPNCW) else None
    net = cw.fpn if cw else model
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    for k, p in enumerate(net.places):
        label = p
        if net.m0[k] > 0:
            label += f"\n\u25cf {fmt(net.m0[k])}"
        attrs = [f"label={_q(label)}"]
        if cw and cw.m1[k] > 0:
            attrs += ["shape=doublecircle", f"xlabel={_q(fmt(cw.m1[k]))}"]
        else:
            attrs.append("shape=circle")
        lines.append(f"  {_q(p)} [{', '.join(attrs)}];")
    for t in net.transitions:
        label = f"{t}\n{fmt(net.alpha[t])}"
        if cw and t in cw.labels:
            label = f"{cw.labels[t]}\n" + label
        lines.append(
            f"  {_q(t)} [shape=box, style=filled, fillcolor=black, fontcolor=white, "
            f"width=0.15, label={_q(label)}];"
        )
    for p, t in net.input_arcs():
        lines.append(f"  {_q(p)} -> {_q(t)};")
    for t, p in net.output_arcs():
        lines.append(f"  {_q(t)} -> {_q(p)} [label={_q(fmt(net.beta[(t, p)]))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def facw_to_dot(m: FACW, name: str = "facw") -> str:
    lines = [f"digraph {_q(name)} {{", "  rankdir=LR;", "  __start [shape=point];"]
    for q, f in zip(m.states, m.finals.values):
        lines.append(f"  {_q(q)} [shape=record, label={_q(f'{q}|{fmt(f)}')}];")
    lines.append(f"  __start -> {_q(m.initial)};")
    for q, w, q2, v in m.triples():
        lines.append(f"  {_q(q)} -> {_q(q2)} [label={_q(f'{w}|{fmt(v)}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(model, name: str | None = None) -> str:
    if isinstance(model, FACW):
        return facw_to_dot(model, name or "facw")
    return net_to_dot(model, name or "net")
