"""JSON wire formats.

Element names travel on the wire; bit masks never do.  Every ``dump_*``
emits a ``"schema"`` tag, and the matching ``parse_*`` accepts the object
with or without it.
"""

from __future__ import annotations

from typing import Any

from .binary import F2SymMatrix, delta_matroid_of_matrix
from .fourterm import FourTuple
from .graphs import FramedGraph, GraphError, delta_matroid_of_framed_graph
from .hopf import HopfElement
from .ribbon import RibbonEdge, RibbonError, RibbonGraph, delta_matroid_of_ribbon_graph
from .setsystem import SetSystem, SetSystemError, elements_of, mask_of
from .symfunc import SymFunc
from .xpoly import parse_poly

SET_SYSTEM = "set-system/v1"
F2_MATRIX = "f2-matrix/v1"
FRAMED_GRAPH = "framed-graph/v1"
RIBBON = "ribbon/v1"
HOPF_ELT = "hopf-elt/v1"
SYMFUNC = "symfunc/v1"
FOUR_TERM_REPORT = "4t-report/v1"

INPUT_SCHEMAS = (SET_SYSTEM, F2_MATRIX, FRAMED_GRAPH, RIBBON)


class SchemaError(ValueError):
    pass


def _require(obj: Any, key: str, kind: type, schema: str):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{schema}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{schema}: field {key!r} must be {kind.__name__}")
    return value


def _names(values: list, what: str) -> list[str]:
    if not all(isinstance(v, str) for v in values):
        raise SchemaError(f"{what} must be strings")
    if len(set(values)) != len(values):
        raise SchemaError(f"{what} must be pairwise distinct")
    return list(values)


def dump_set_system(S: SetSystem) -> dict:
    names = S.names()
    return {
        "schema": SET_SYSTEM,
        "ground": list(names),
        "feasible": [[names[i] for i in elements_of(F)] for F in S.feasible],
    }


def parse_set_system(obj: Any) -> SetSystem:
    ground = _names(_require(obj, "ground", list, SET_SYSTEM), "ground elements")
    index = {name: i for i, name in enumerate(ground)}
    fam = []
    for entry in _require(obj, "feasible", list, SET_SYSTEM):
        if not isinstance(entry, list):
            raise SchemaError(f"{SET_SYSTEM}: each feasible set must be a list")
        unknown = [e for e in entry if e not in index]
        if unknown:
            raise SchemaError(f"{SET_SYSTEM}: unknown elements {unknown}")
        fam.append(mask_of(index[e] for e in entry))
    try:
        return SetSystem(len(ground), tuple(fam), tuple(ground))
    except SetSystemError as exc:
        raise SchemaError(f"{SET_SYSTEM}: {exc}") from None


def dump_f2_matrix(A: F2SymMatrix) -> dict:
    return {
        "schema": F2_MATRIX,
        "size": A.n,
        "rows": ["".join(str(A[i, j]) for j in range(A.n)) for i in range(A.n)],
    }


def parse_f2_matrix(obj: Any) -> F2SymMatrix:
    """Rows are ``"010"`` strings; lists of 0/1 integers are accepted too."""
    rows = _require(obj, "rows", list, F2_MATRIX)
    n = obj.get("size", len(rows))
    bits = []
    for r in rows:
        if isinstance(r, str) and not set(r) - {"0", "1"}:
            bits.append([int(c) for c in r])
        elif isinstance(r, list) and all(v in (0, 1) and not isinstance(v, bool) for v in r):
            bits.append(list(r))
        else:
            raise SchemaError(f"{F2_MATRIX}: bad row {r!r}")
    if not isinstance(n, int) or len(bits) != n or any(len(r) != n for r in bits):
        raise SchemaError(f"{F2_MATRIX}: expected {n} rows of length {n}")
    try:
        return F2SymMatrix.from_lists(bits)
    except ValueError as exc:
        raise SchemaError(f"{F2_MATRIX}: {exc}") from None


def dump_framed_graph(G: FramedGraph) -> dict:
    names = list(G.labels) if G.labels is not None else [str(i + 1) for i in range(G.n)]
    return {
        "schema": FRAMED_GRAPH,
        "vertices": names,
        "edges": [[names[u], names[v]] for u, v in sorted(G.edges)],
        "framing": {names[v]: G.framing[v] for v in range(G.n)},
    }


def parse_framed_graph(obj: Any) -> FramedGraph:
    vertices = _names(_require(obj, "vertices", list, FRAMED_GRAPH), "vertices")
    index = {name: i for i, name in enumerate(vertices)}
    edges = []
    for e in _require(obj, "edges", list, FRAMED_GRAPH):
        if not isinstance(e, list) or len(e) != 2 or any(v not in index for v in e):
            raise SchemaError(f"{FRAMED_GRAPH}: bad edge {e!r}")
        edges.append((index[e[0]], index[e[1]]))
    framing = [0] * len(vertices)
    raw = obj.get("framing", {})
    if not isinstance(raw, dict):
        raise SchemaError(f"{FRAMED_GRAPH}: framing must be an object")
    for name, f in raw.items():
        if name not in index or f not in (0, 1) or isinstance(f, bool):
            raise SchemaError(f"{FRAMED_GRAPH}: bad framing entry {name!r}: {f!r}")
        framing[index[name]] = f
    try:
        return FramedGraph.from_edges(len(vertices), edges, framing, vertices)
    except GraphError as exc:
        raise SchemaError(f"{FRAMED_GRAPH}: {exc}") from None


def dump_ribbon(G: RibbonGraph) -> dict:
    return {
        "schema": RIBBON,
        "vertices": [[str(h) for h in cyc] for cyc in G.vertices],
        "edges": [{"ends": [str(e.h1), str(e.h2)], "twisted": e.twisted} for e in G.edges],
    }


def parse_ribbon(obj: Any) -> RibbonGraph:
    vertices = _require(obj, "vertices", list, RIBBON)
    if not all(isinstance(c, list) and all(isinstance(h, str) for h in c) for c in vertices):
        raise SchemaError(f"{RIBBON}: vertices must be lists of half-edge names")
    edges = []
    for e in _require(obj, "edges", list, RIBBON):
        ends = _require(e, "ends", list, RIBBON)
        twisted = e.get("twisted", False)
        if len(ends) != 2 or not isinstance(twisted, bool):
            raise SchemaError(f"{RIBBON}: bad edge {e!r}")
        edges.append(RibbonEdge(ends[0], ends[1], twisted))
    try:
        return RibbonGraph(tuple(tuple(c) for c in vertices), tuple(edges))
    except RibbonError as exc:
        raise SchemaError(f"{RIBBON}: {exc}") from None


_PARSERS = {
    SET_SYSTEM: parse_set_system,
    F2_MATRIX: parse_f2_matrix,
    FRAMED_GRAPH: parse_framed_graph,
    RIBBON: parse_ribbon,
}

_DUMPERS = {
    SET_SYSTEM: dump_set_system,
    F2_MATRIX: dump_f2_matrix,
    FRAMED_GRAPH: dump_framed_graph,
    RIBBON: dump_ribbon,
}


def detect_schema(obj: Any) -> str:
    if not isinstance(obj, dict):
        raise SchemaError("input must be a JSON object")
    tag = obj.get("schema")
    if tag is not None:
        if tag not in _PARSERS:
            raise SchemaError(f"unsupported schema {tag!r}")
        return tag
    if "feasible" in obj:
        return SET_SYSTEM
    if "rows" in obj:
        return F2_MATRIX
    if "vertices" in obj and "edges" in obj:
        vs = obj["vertices"]
        if isinstance(vs, list) and vs and all(isinstance(v, list) for v in vs):
            return RIBBON
        return FRAMED_GRAPH
    raise SchemaError("cannot tell which schema the input follows")


def parse_input(obj: Any) -> tuple[str, Any]:
    """Parse any input schema; returns ``(schema tag, parsed value)``."""
    tag = detect_schema(obj)
    return tag, _PARSERS[tag](obj)


def dump_input(tag: str, value: Any) -> dict:
    return _DUMPERS[tag](value)


def to_set_system(tag: str, value: Any) -> SetSystem:
    """The (delta-matroid) set system an input object stands for."""
    if tag == SET_SYSTEM:
        return value
    if tag == F2_MATRIX:
        return delta_matroid_of_matrix(value)
    if tag == FRAMED_GRAPH:
        return delta_matroid_of_framed_graph(value)
    if tag == RIBBON:
        return delta_matroid_of_ribbon_graph(value)
    raise SchemaError(f"unsupported schema {tag!r}")


def dump_hopf_element(h: HopfElement) -> list:
    return [{"coeff": str(c), "term": dump_set_system(D)} for D, c in h.terms.items()]


def parse_hopf_element(obj: Any) -> HopfElement:
    if not isinstance(obj, list):
        raise SchemaError(f"{HOPF_ELT}: expected a list of terms")
    terms = []
    for t in obj:
        coeff = _require(t, "coeff", str, HOPF_ELT)
        try:
            c = parse_poly(coeff)
        except ValueError as exc:
            raise SchemaError(f"{HOPF_ELT}: {exc}") from None
        terms.append((parse_set_system(_require(t, "term", dict, HOPF_ELT)), c))
    return HopfElement(terms)


def dump_symfunc(s: SymFunc) -> list:
    return [{"partition": list(lam), "coeff": str(c)} for lam, c in s.terms.items()]


def parse_symfunc(obj: Any) -> SymFunc:
    if not isinstance(obj, list):
        raise SchemaError(f"{SYMFUNC}: expected a list of terms")
    terms = []
    for t in obj:
        lam = _require(t, "partition", list, SYMFUNC)
        if not all(isinstance(p, int) and p > 0 for p in lam):
            raise SchemaError(f"{SYMFUNC}: partition parts must be positive integers")
        try:
            terms.append((lam, parse_poly(_require(t, "coeff", str, SYMFUNC))))
        except ValueError as exc:
            raise SchemaError(f"{SYMFUNC}: {exc}") from None
    return SymFunc(terms)


def dump_four_tuple(t: FourTuple) -> dict:
    return {
        "a": t.a,
        "b": t.b,
        "D": dump_set_system(t.D),
        "first": dump_set_system(t.first),
        "second": dump_set_system(t.second),
        "both": dump_set_system(t.both),
    }


def _jsonable(value: Any) -> Any:
    if isinstance(value, FourTuple):
        return dump_four_tuple(value)
    if isinstance(value, SetSystem):
        return dump_set_system(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def dump_report(report: dict, schema: str = FOUR_TERM_REPORT, meta: dict | None = None) -> dict:
    """JSON-ready copy of a sweep report; four-tuples and set systems are expanded."""
    out: dict[str, Any] = {"schema": schema}
    if meta is not None:
        out["meta"] = meta
    out.update(_jsonable(report))
    return out
