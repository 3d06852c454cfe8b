"""JSON instance files.

Schema::

    {
      "text": "abcb..." | ["tok", ...],
      "pattern": "aca..." | ["tok", ...],
      "alphabet": ["a", "b", ...],            # optional, defaults to sorted tokens
      "constraints": [
        {"i": 2, "j": 3, "type": "semilinear",
         "payload": [{"offset": 5, "periods": [1]}]},
        {"i": 1, "j": 5, "type": "regular",
         "payload": {"states": 3, "start": 0, "accepting": [2],
                     "transitions": [[0, "c", 1], ...]}}
      ],
      "metadata": {...}                       # optional
    }

Positions are 1-based.  ``serialize_instance`` emits a canonical form, so
parse and serialize are mutually inverse on canonical files.
"""

from __future__ import annotations

import json

from .automata import Dfa
from .core import Alphabet, GapConstraint, Instance
from .errors import GapMatchError, InvalidArgument, ValidationError
from .semilinear import LinearSet, SemilinearSet

TOP_KEYS = {"text", "pattern", "alphabet", "constraints", "metadata"}


def _schema(msg):
    return ValidationError("schema", msg)


def _tokens(value, field):
    if isinstance(value, str):
        return list(value)
    if isinstance(value, list) and all(isinstance(t, str) and t for t in value):
        return list(value)
    raise _schema(f"'{field}' must be a string or a list of non-empty strings")


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise _schema(f"{where} must be an integer")
    return value


def _semilinear(payload, where):
    if not isinstance(payload, list) or not payload:
        raise _schema(f"{where}: semilinear payload must be a non-empty list")
    parts = []
    for part in payload:
        if not isinstance(part, dict) or set(part) - {"offset", "periods"} or "offset" not in part:
            raise _schema(f"{where}: each linear part needs 'offset' and optional 'periods'")
        periods = part.get("periods", [])
        if not isinstance(periods, list):
            raise _schema(f"{where}: 'periods' must be a list")
        try:
            parts.append(LinearSet(_int(part["offset"], f"{where} offset"),
                                   tuple(_int(x, f"{where} period") for x in periods)))
        except InvalidArgument as exc:
            raise _schema(f"{where}: {exc}") from None
    return SemilinearSet(tuple(parts))


def _regular(payload, alphabet, where):
    if not isinstance(payload, dict) or not {"states", "start", "accepting", "transitions"} <= set(payload):
        raise _schema(f"{where}: regular payload needs states, start, accepting and transitions")
    states = _int(payload["states"], f"{where} states")
    start = _int(payload["start"], f"{where} start")
    accepting = payload["accepting"]
    if not isinstance(accepting, list):
        raise _schema(f"{where}: 'accepting' must be a list")
    triples = []
    for tr in payload["transitions"]:
        if not (isinstance(tr, list) and len(tr) == 3 and isinstance(tr[1], str)):
            raise _schema(f"{where}: transitions are [state, symbol, state] triples")
        q, r = _int(tr[0], f"{where} state"), _int(tr[2], f"{where} state")
        if tr[1] not in alphabet.tokens:
            raise ValidationError("unknown-symbol", f"{where}: DFA symbol {tr[1]!r} is not in the alphabet")
        triples.append((q, tr[1], r))
    for q in [start] + [_int(a, f"{where} accepting state") for a in accepting]:
        if not 0 <= q < max(states, 0):
            raise ValidationError("dfa-state", f"{where}: state {q} does not exist")
    try:
        return alphabet.dfa(states, start, accepting, triples)
    except InvalidArgument as exc:
        raise ValidationError("dfa-state", f"{where}: {exc}") from None


def load_instance(data) -> Instance:
    """Build an instance from already-decoded JSON data."""
    if not isinstance(data, dict):
        raise _schema("top level must be an object")
    unknown = set(data) - TOP_KEYS
    if unknown:
        raise _schema(f"unknown keys {sorted(unknown)}")
    for key in ("text", "pattern"):
        if key not in data:
            raise _schema(f"missing '{key}'")
    text, pattern = _tokens(data["text"], "text"), _tokens(data["pattern"], "pattern")
    if "alphabet" in data:
        tokens = _tokens(data["alphabet"], "alphabet")
        try:
            alphabet = Alphabet(tuple(tokens))
        except InvalidArgument as exc:
            raise _schema(str(exc)) from None
    else:
        alphabet = Alphabet.for_strings(text, pattern)
    raw = data.get("constraints", [])
    if not isinstance(raw, list):
        raise _schema("'constraints' must be a list")
    cs = []
    m = len(pattern)
    for n, entry in enumerate(raw, start=1):
        where = f"constraint {n}"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "type", "payload"}:
            raise _schema(f"{where}: needs exactly i, j, type and payload")
        i, j = _int(entry["i"], f"{where} i"), _int(entry["j"], f"{where} j")
        if i >= j:
            raise ValidationError("constraint-order", f"{where}: need i < j, got ({i}, {j})")
        if i < 1 or j > m:
            raise ValidationError("position-range", f"{where}: ({i}, {j}) outside pattern positions 1..{m}")
        if entry["type"] == "semilinear":
            lang = _semilinear(entry["payload"], where)
        elif entry["type"] == "regular":
            lang = _regular(entry["payload"], alphabet, where)
        else:
            raise _schema(f"{where}: type must be 'semilinear' or 'regular'")
        cs.append(GapConstraint(i, j, lang))
    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise _schema("'metadata' must be an object")
    return Instance.from_strings(text, pattern, cs, alphabet, metadata)


def parse_instance(raw) -> Instance:
    if isinstance(raw, (bytes, bytearray)):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise _schema(f"not UTF-8: {exc}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _schema(f"invalid JSON: {exc}") from None
    return load_instance(data)


def _seq(tokens):
    return "".join(tokens) if all(len(t) == 1 for t in tokens) else list(tokens)


def language_payload(lang, alphabet: Alphabet):
    if isinstance(lang, Dfa):
        return "regular", {
            "states": lang.state_count,
            "start": lang.start,
            "accepting": sorted(lang.accepting),
            "transitions": [[q, alphabet.tokens[a], r] for q, a, r in lang.transitions()],
        }
    return "semilinear", [{"offset": p.offset, "periods": list(p.periods)} for p in lang.parts]


def dump_instance(inst: Instance) -> dict:
    text, pattern = inst.alphabet.decode(inst.text), inst.alphabet.decode(inst.pattern)
    out = {"text": _seq(text), "pattern": _seq(pattern)}
    if inst.alphabet != Alphabet.for_strings(text, pattern):
        out["alphabet"] = list(inst.alphabet.tokens)
    entries = []
    for c in inst.constraints:
        kind, payload = language_payload(c.language, inst.alphabet)
        entries.append({"i": c.i, "j": c.j, "type": kind, "payload": payload})
    out["constraints"] = entries
    if inst.metadata:
        out["metadata"] = dict(inst.metadata)
    return out


def serialize_instance(inst: Instance) -> str:
    return json.dumps(dump_instance(inst), indent=2, ensure_ascii=False) + "\n"


def read_instance(path) -> Instance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())


__all__ = ["GapMatchError", "dump_instance", "load_instance", "parse_instance", "read_instance",
           "serialize_instance"]
