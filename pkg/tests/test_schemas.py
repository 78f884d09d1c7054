import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import binary_delta_matroids, set_systems, sym_matrices
from deltachroma.fourterm import four_tuple
from deltachroma.graphs import FramedGraph
from deltachroma.hopf import primitive_projection
from deltachroma.ribbon import all_ribbon_graphs
from deltachroma.schemas import (
    SchemaError,
    detect_schema,
    dump_four_tuple,
    dump_hopf_element,
    dump_input,
    dump_report,
    dump_set_system,
    dump_symfunc,
    parse_hopf_element,
    parse_input,
    parse_set_system,
    parse_symfunc,
    to_set_system,
)
from deltachroma.setsystem import SetSystem
from deltachroma.symfunc import chromatic


def wire(obj):
    return json.loads(json.dumps(obj))


def test_set_system_keeps_names():
    S = parse_set_system({"ground": ["a", "b"], "feasible": [["b"], []]})
    assert S.sets() == [(), (1,)] and S.names() == ("a", "b")
    assert dump_set_system(S) == {"schema": "set-system/v1", "ground": ["a", "b"], "feasible": [[], ["b"]]}


@pytest.mark.parametrize(
    "obj",
    [
        {"ground": ["a", "a"], "feasible": []},
        {"ground": ["a"], "feasible": [["z"]]},
        {"ground": ["a"]},
        {"size": 2, "rows": ["01", "00"]},
        {"size": 2, "rows": ["0"]},
        {"vertices": ["u"], "edges": [["u", "u"]]},
        {"vertices": ["u"], "edges": [], "framing": {"u": 2}},
        {"vertices": [["h1"]], "edges": [{"ends": ["h1", "h2"]}]},
        {"schema": "nope/v1"},
        [],
        {"something": 1},
    ],
)
def test_schema_violations(obj):
    with pytest.raises(SchemaError):
        parse_input(obj)


def test_detection_without_tags():
    assert detect_schema({"ground": [], "feasible": [[]]}) == "set-system/v1"
    assert detect_schema({"size": 0, "rows": []}) == "f2-matrix/v1"
    assert detect_schema({"vertices": ["u"], "edges": []}) == "framed-graph/v1"
    assert detect_schema({"vertices": [["h"]], "edges": []}) == "ribbon/v1"


def test_matrix_rows_as_lists_or_strings():
    _, A = parse_input({"size": 2, "rows": [[0, 1], [1, 0]]})
    _, B = parse_input({"rows": ["01", "10"]})
    assert A == B
    assert to_set_system("f2-matrix/v1", A).sets() == [(), (0, 1)]


def test_framing_defaults_to_zero():
    _, G = parse_input({"vertices": ["u", "v"], "edges": [["u", "v"]], "framing": {"v": 1}})
    assert G.framing == (0, 1)


def round_trip(tag, value):
    again_tag, again = parse_input(wire(dump_input(tag, value)))
    assert again_tag == tag and again == value
    assert dump_input(tag, again) == dump_input(tag, value)


@given(set_systems(max_n=4, proper=False))
def test_round_trip_set_systems(S):
    round_trip("set-system/v1", S)


@given(sym_matrices(max_n=5))
def test_round_trip_matrices(A):
    round_trip("f2-matrix/v1", A)


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1 if n > 1 else 0), st.integers(0, (1 << n) - 1))))
def test_round_trip_framed_graphs(args):
    n, ecode, fcode = args
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    G = FramedGraph.from_edges(
        n, [p for k, p in enumerate(pairs) if ecode >> k & 1], [fcode >> i & 1 for i in range(n)], [f"v{i}" for i in range(n)]
    )
    round_trip("framed-graph/v1", G)


def test_round_trip_ribbon_graphs():
    for G in list(all_ribbon_graphs(2)):
        round_trip("ribbon/v1", G)


@given(binary_delta_matroids(min_n=1, max_n=3))
def test_round_trip_hopf_and_symfunc(D):
    h = primitive_projection(D)
    assert parse_hopf_element(wire(dump_hopf_element(h))) == h
    s = chromatic(D)
    assert parse_symfunc(wire(dump_symfunc(s))) == s


def test_symfunc_wire_form():
    s = chromatic(SetSystem(2, (1, 2)))
    assert dump_symfunc(s) == [{"partition": [1, 1], "coeff": "x^2"}, {"partition": [2], "coeff": "-x^2"}]


def test_report_expands_four_tuples():
    D = SetSystem(2, (0, 3))
    t = four_tuple(D, 0, 1)
    out = wire(dump_report({"failures": 1, "witnesses": [{"tuple": t}]}, meta={"tool": "x"}))
    assert out["schema"] == "4t-report/v1" and out["meta"] == {"tool": "x"}
    assert out["witnesses"][0]["tuple"] == wire(dump_four_tuple(t))
    assert set(out["witnesses"][0]["tuple"]) == {"a", "b", "D", "first", "second", "both"}
