import json

import pytest

from gapmatch.core import oracle_match
from gapmatch.errors import ValidationError
from gapmatch.generators import gen_clique, gen_ov3, gen_sat, random_cnf, random_graph, random_ov
from gapmatch.io import dump_instance, load_instance, parse_instance, serialize_instance
from gapmatch.samples import worked_example

BASE = {"text": "abab", "pattern": "ab"}


def code_of(data):
    with pytest.raises(ValidationError) as exc:
        load_instance(data)
    return exc.value.code


def test_worked_example_round_trip():
    text = serialize_instance(worked_example())
    inst = parse_instance(text.encode())
    assert inst.constraints.K == 4
    assert oracle_match(inst).witness == (1, 3, 9, 10, 11)
    assert serialize_instance(inst) == text


@pytest.mark.parametrize("make", [
    lambda: worked_example(),
    lambda: gen_clique(random_graph(4, seed=1), 3),
    lambda: gen_sat(random_cnf(4, 3, seed=1)),
    lambda: gen_ov3(random_ov(2, 2, seed=1)),
])
def test_generated_round_trip(make):
    inst = make()
    text = serialize_instance(inst)
    again = parse_instance(text)
    assert again == inst
    assert serialize_instance(again) == text


def test_multichar_tokens():
    data = {"text": ["go", "stop", "go"], "pattern": ["go", "go"],
            "constraints": [{"i": 1, "j": 2, "type": "semilinear", "payload": [{"offset": 1}]}]}
    inst = load_instance(data)
    assert inst.n == 3 and oracle_match(inst).witness == (1, 3)
    assert dump_instance(inst)["text"] == ["go", "stop", "go"]


def test_explicit_alphabet_kept():
    inst = load_instance({**BASE, "alphabet": ["a", "b", "z"]})
    assert dump_instance(inst)["alphabet"] == ["a", "b", "z"]
    assert "alphabet" not in dump_instance(load_instance(BASE))


def semi(i, j, offset=0):
    return {"i": i, "j": j, "type": "semilinear", "payload": [{"offset": offset, "periods": [1]}]}


def test_error_codes():
    assert code_of([]) == "schema"
    assert code_of({"text": "ab"}) == "schema"
    assert code_of({**BASE, "extra": 1}) == "schema"
    assert code_of({**BASE, "constraints": [semi(2, 1)]}) == "constraint-order"
    assert code_of({**BASE, "constraints": [semi(1, 3)]}) == "position-range"
    assert code_of({**BASE, "constraints": [semi(1, 2), semi(1, 2)]}) == "duplicate-constraint"
    assert code_of({**BASE, "alphabet": ["a"]}) == "unknown-symbol"
    bad_symbol = {"i": 1, "j": 2, "type": "regular",
                  "payload": {"states": 1, "start": 0, "accepting": [0], "transitions": [[0, "q", 0]]}}
    assert code_of({**BASE, "constraints": [bad_symbol]}) == "unknown-symbol"
    bad_state = {"i": 1, "j": 2, "type": "regular",
                 "payload": {"states": 1, "start": 0, "accepting": [0], "transitions": [[0, "a", 3]]}}
    assert code_of({**BASE, "constraints": [bad_state]}) == "dfa-state"
    bad_start = dict(bad_state, payload={"states": 1, "start": 2, "accepting": [], "transitions": []})
    assert code_of({**BASE, "constraints": [bad_start]}) == "dfa-state"
    assert code_of({**BASE, "constraints": [{"i": 1, "j": 2, "type": "cfg", "payload": []}]}) == "schema"
    assert code_of({**BASE, "constraints": [{"i": 1, "j": 2, "type": "semilinear",
                                              "payload": [{"offset": -1}]}]}) == "schema"


def test_bad_bytes():
    with pytest.raises(ValidationError):
        parse_instance(b"\xff\xfe")
    with pytest.raises(ValidationError):
        parse_instance("{not json")


def test_canonical_format():
    text = serialize_instance(worked_example())
    assert text.endswith("\n") and json.loads(text)["pattern"] == "acaba"
