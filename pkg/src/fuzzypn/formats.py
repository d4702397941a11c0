"""JSON model documents with a canonical, diff-friendly layout.

Every document is an object with ``kind`` and ``schema_version`` followed
by kind-specific sections. The serializer writes top-level keys in a fixed
order and puts each arc, transition, word or delta entry on its own line,
so ``serialize(parse(text)) == text`` for any canonical file.

Example (kind ``fpncw``)::

    {
      "kind": "fpncw",
      "schema_version": 1,
      "places": ["p1", "p2", "p3"],
      "transitions": [
        {"name": "t1", "alpha": 0.8, "label": "L"}
      ],
      "arcs_in": [
        ["p1", "t1"]
      ],
      "arcs_out": [
        ["t1", "p3", 0.9]
      ],
      "m0": [0.9, 1.0, 0.0],
      "m1": [0.0, 0.0, 1.0],
      "symbols": ["1", "2"],
      "alphabet": {
        "L": {"2": 1.0}
      }
    }

Weighted nets (``weighted-fpn``) carry ``["p1", "t1", w]`` input arcs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .automaton import FACW
from .cw import FPNCW, Word
from .errors import ModelError
from .extend import FPNCMW, Provenance
from .fuzzyset import FuzzySet, Universe, check_degree
from .net import FPN, WeightedFPN

__all__ = [
    "SCHEMA_VERSION",
    "KINDS",
    "ModelDocument",
    "WordList",
    "parse",
    "serialize",
    "loads",
    "dumps",
    "load",
    "dump",
]

SCHEMA_VERSION = 1
KINDS = ("fpn", "weighted-fpn", "fpncw", "fpncmw", "facw", "words")

_KEY_ORDER = (
    "kind", "schema_version", "places", "states", "transitions", "arcs_in", "arcs_out",
    "m0", "m1", "initial", "finals", "symbols", "alphabet", "words", "delta",
    "new_words", "provenance", "markings",
)


@dataclass(frozen=True)
class WordList:
    """A standalone word dictionary, e.g. the new words fed to ``extend``."""

    symbols: Universe
    words: tuple[Word, ...]


@dataclass(frozen=True)
class ModelDocument:
    kind: str
    schema_version: int
    body: Any


# -- reading -----------------------------------------------------------------


class _Reader:
    def __init__(self, data: dict):
        self.data = data

    def get(self, key: str, typ=None, *, where: str | None = None, required: bool = True):
        where = where or key
        if key not in self.data:
            if required:
                raise ModelError("missing field", where)
            return None
        return _typed(self.data[key], typ, where)


def _typed(value, typ, where):
    if typ is None:
        return value
    if not isinstance(value, typ) or (isinstance(value, bool) and typ is not bool):
        name = typ.__name__ if isinstance(typ, type) else "/".join(t.__name__ for t in typ)
        raise ModelError(f"expected {name}, got {type(value).__name__}", where)
    return value


def _degree(value, where, *, positive=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ModelError(f"expected a number, got {json.dumps(value)}", where)
    try:
        return check_degree(value, positive=positive)
    except ValueError as exc:
        raise ModelError(
            f"degree out of range {'(0,1]' if positive else '[0,1]'}: {value!r}", where
        ) from exc


def _names(value, where) -> tuple[str, ...]:
    _typed(value, list, where)
    for i, v in enumerate(value):
        _typed(v, str, f"{where}[{i}]")
    if len(set(value)) != len(value):
        raise ModelError("duplicate names", where)
    if not value:
        raise ModelError("must be nonempty", where)
    return tuple(value)


def _ref(name, known, what, where):
    if name not in known:
        raise ModelError(f"unknown {what} {name!r}", where)
    return name


def _vector(value, n, where) -> tuple[float, ...]:
    _typed(value, list, where)
    if len(value) != n:
        raise ModelError(f"expected {n} entries, got {len(value)}", where)
    return tuple(_degree(v, f"{where}[{i}]") for i, v in enumerate(value))


def _fuzzy(value, universe: Universe, where) -> FuzzySet:
    _typed(value, dict, where)
    vals = {}
    for sym, deg in value.items():
        _ref(sym, universe, "symbol", f"{where}.{sym}")
        vals[sym] = _degree(deg, f"{where}.{sym}")
    return FuzzySet.from_mapping(universe, vals)


def _words(value, universe: Universe, where) -> tuple[Word, ...]:
    _typed(value, dict, where)
    return tuple(Word(name, _fuzzy(m, universe, f"{where}.{name}")) for name, m in value.items())


def _read_fpn(r: _Reader, kind: str):
    places = _names(r.get("places"), "places")
    tr = r.get("transitions", list)
    transitions, alpha, labels = [], {}, {}
    for i, item in enumerate(tr):
        where = f"transitions[{i}]"
        _typed(item, dict, where)
        ri = _Reader(item)
        name = ri.get("name", str, where=f"{where}.name")
        transitions.append(name)
        alpha[name] = _degree(ri.get("alpha", where=f"{where}.alpha"), f"{where}.alpha", positive=True)
        if kind in ("fpncw", "fpncmw"):
            labels[name] = ri.get("label", str, where=f"{where}.label", required=False)
    if len(set(transitions)) != len(transitions):
        raise ModelError("duplicate transition names", "transitions")
    known_t, known_p = set(transitions), set(places)

    inputs, w = set(), {}
    for i, arc in enumerate(r.get("arcs_in", list)):
        where = f"arcs_in[{i}]"
        _typed(arc, list, where)
        want = 3 if kind == "weighted-fpn" else 2
        if len(arc) != want:
            raise ModelError(f"expected [place, transition{', w' if want == 3 else ''}]", where)
        p = _ref(_typed(arc[0], str, where), known_p, "place", where)
        t = _ref(_typed(arc[1], str, where), known_t, "transition", where)
        inputs.add((p, t))
        if want == 3:
            w[(p, t)] = _degree(arc[2], f"{where}[2]", positive=True)

    outputs, beta = set(), {}
    for i, arc in enumerate(r.get("arcs_out", list)):
        where = f"arcs_out[{i}]"
        _typed(arc, list, where)
        if len(arc) != 3:
            raise ModelError("expected [transition, place, beta]", where)
        t = _ref(_typed(arc[0], str, where), known_t, "transition", where)
        p = _ref(_typed(arc[1], str, where), known_p, "place", where)
        outputs.add((t, p))
        beta[(t, p)] = _degree(arc[2], f"{where}[2]", positive=True)

    m0 = _vector(r.get("m0"), len(places), "m0")
    if kind == "weighted-fpn":
        return WeightedFPN(places, transitions, inputs, outputs, alpha, beta, m0, w)
    fpn = FPN(places, transitions, inputs, outputs, alpha, beta, m0)
    if kind == "fpn":
        return fpn

    m1 = _vector(r.get("m1"), len(places), "m1")
    symbols = Universe(_names(r.get("symbols"), "symbols"))
    alphabet = _words(r.get("alphabet"), symbols, "alphabet")
    known_w = {x.name for x in alphabet}
    for i, t in enumerate(transitions):
        if labels[t] is not None:
            _ref(labels[t], known_w, "word", f"transitions[{i}].label")
    labels = {t: lab for t, lab in labels.items() if lab is not None}
    if kind == "fpncw":
        return FPNCW(fpn, m1, alphabet, labels)

    new_words = r.get("new_words", list)
    for i, name in enumerate(new_words):
        _ref(name, known_w, "word", f"new_words[{i}]")
    provenance = {}
    for t, item in r.get("provenance", dict).items():
        where = f"provenance.{t}"
        _ref(t, known_t, "transition", where)
        ri = _Reader(_typed(item, dict, where))
        rules = tuple(
            _ref(x, known_t, "transition", f"{where}.rules") for x in ri.get("rules", list, where=f"{where}.rules")
        )
        overlaps = tuple(
            _degree(x, f"{where}.overlaps") for x in ri.get("overlaps", list, where=f"{where}.overlaps")
        )
        provenance[t] = Provenance(
            ri.get("group", int, where=f"{where}.group"),
            ri.get("word_index", int, where=f"{where}.word_index"),
            _ref(ri.get("word", str, where=f"{where}.word"), known_w, "word", f"{where}.word"),
            rules,
            overlaps,
        )
    return FPNCMW(fpn, m1, alphabet, labels, tuple(new_words), provenance)


def _read_facw(r: _Reader) -> FACW:
    states = _names(r.get("states"), "states")
    q = Universe(states)
    symbols = Universe(_names(r.get("symbols"), "symbols"))
    alphabet = _words(r.get("alphabet"), symbols, "alphabet")
    known_w = {x.name for x in alphabet}
    initial = _ref(r.get("initial", str), q, "state", "initial")
    finals = _fuzzy(r.get("finals"), q, "finals")
    entries: dict[tuple[str, str], dict[str, float]] = {}
    for i, item in enumerate(r.get("delta", list)):
        where = f"delta[{i}]"
        _typed(item, list, where)
        if len(item) != 4:
            raise ModelError("expected [state, word, state, degree]", where)
        src = _ref(_typed(item[0], str, where), q, "state", where)
        word = _ref(_typed(item[1], str, where), known_w, "word", where)
        dst = _ref(_typed(item[2], str, where), q, "state", where)
        entries.setdefault((src, word), {})[dst] = _degree(item[3], f"{where}[3]")
    delta = {k: FuzzySet.from_mapping(q, v) for k, v in entries.items()}
    markings = None
    raw = r.get("markings", dict, required=False)
    if raw is not None:
        markings = {}
        for name, vec in raw.items():
            _ref(name, q, "state", f"markings.{name}")
            _typed(vec, list, f"markings.{name}")
            markings[name] = tuple(_degree(v, f"markings.{name}[{i}]") for i, v in enumerate(vec))
    return FACW(states, alphabet, delta, initial, finals, markings)


def parse(text: str) -> ModelDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"syntax error: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    _typed(data, dict, "document")
    r = _Reader(data)
    kind = r.get("kind", str)
    if kind not in KINDS:
        raise ModelError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "kind")
    version = r.get("schema_version", int)
    if version != SCHEMA_VERSION:
        raise ModelError(f"unsupported schema version {version}", "schema_version")
    if kind == "facw":
        body = _read_facw(r)
    elif kind == "words":
        symbols = Universe(_names(r.get("symbols"), "symbols"))
        body = WordList(symbols, _words(r.get("words"), symbols, "words"))
    else:
        body = _read_fpn(r, kind)
    return ModelDocument(kind, version, body)


# -- writing -----------------------------------------------------------------


def kind_of(model) -> str:
    # subclass checks first
    for cls, kind in (
        (FPNCMW, "fpncmw"), (FPNCW, "fpncw"), (WeightedFPN, "weighted-fpn"),
        (FPN, "fpn"), (FACW, "facw"), (WordList, "words"),
    ):
        if isinstance(model, cls):
            return kind
    raise TypeError(f"cannot serialize {type(model).__name__}")


def _word_map(words) -> dict:
    return {w.name: w.meaning.as_dict() for w in words}


def _to_data(kind: str, model) -> dict:
    data: dict[str, Any] = {"kind": kind, "schema_version": SCHEMA_VERSION}
    if kind == "words":
        data["symbols"] = list(model.symbols.symbols)
        data["words"] = _word_map(model.words)
        return data
    if kind == "facw":
        data["states"] = list(model.states)
        data["initial"] = model.initial
        data["finals"] = model.finals.as_dict()
        data["symbols"] = list(model.alphabet[0].universe.symbols) if model.alphabet else []
        data["alphabet"] = _word_map(model.alphabet)
        data["delta"] = [[q, w, q2, v] for q, w, q2, v in model.triples()]
        if model.markings is not None:
            data["markings"] = {q: list(model.markings[q]) for q in model.states}
        return data

    cw = model if isinstance(model, FPNCW) else None
    net = cw.fpn if cw else model
    data["places"] = list(net.places)
    items = []
    for t in net.transitions:
        item = {"name": t, "alpha": net.alpha[t]}
        if cw and t in cw.labels:
            item["label"] = cw.labels[t]
        items.append(item)
    data["transitions"] = items
    if isinstance(net, WeightedFPN):
        data["arcs_in"] = [[p, t, net.w[(p, t)]] for p, t in net.input_arcs()]
    else:
        data["arcs_in"] = [[p, t] for p, t in net.input_arcs()]
    data["arcs_out"] = [[t, p, net.beta[(t, p)]] for t, p in net.output_arcs()]
    data["m0"] = list(net.m0)
    if cw:
        data["m1"] = list(cw.m1)
        data["symbols"] = list(cw.symbols.symbols)
        data["alphabet"] = _word_map(cw.alphabet)
    if isinstance(model, FPNCMW):
        data["new_words"] = list(model.new_words)
        data["provenance"] = {
            t: {
                "group": pr.group,
                "word_index": pr.word_index,
                "word": pr.word,
                "rules": list(pr.rules),
                "overlaps": list(pr.overlaps),
            }
            for t, pr in model.provenance.items()
        }
    return data


def _compact(value) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(", ", ": "))


def _render(data: dict) -> str:
    keys = sorted(data, key=_KEY_ORDER.index)
    lines = ["{"]
    for n, key in enumerate(keys):
        value = data[key]
        comma = "," if n < len(keys) - 1 else ""
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            body = ",\n".join(f"    {_compact(v)}" for v in value)
            lines.append(f"{head}[\n{body}\n  ]{comma}")
        elif isinstance(value, dict) and value and any(isinstance(v, (list, dict)) for v in value.values()):
            body = ",\n".join(f"    {json.dumps(k, ensure_ascii=False)}: {_compact(v)}" for k, v in value.items())
            lines.append(f"{head}{{\n{body}\n  }}{comma}")
        else:
            lines.append(f"{head}{_compact(value)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(doc: ModelDocument) -> str:
    return _render(_to_data(doc.kind, doc.body))


def dumps(model) -> str:
    return serialize(ModelDocument(kind_of(model), SCHEMA_VERSION, model))


def loads(text: str):
    return parse(text).body


def load(path) -> ModelDocument:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(model, path) -> None:
    Path(path).write_text(dumps(model), encoding="utf-8")
