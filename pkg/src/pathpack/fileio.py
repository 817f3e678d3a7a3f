"""JSON document formats for networks, certificates and packings.

Rationals travel as exact strings like "5/2", never as decimals.  Network
serialization normalizes node and edge order, so parse-serialize round-trips
are stable; edge ids are positional ("e000", "e001", ...) in document order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .dual import Certificate
from .errors import ParseError, StructuralError
from .multiflow import Multiflow, TPath
from .network import Expansion, Network


def format_rational(value: Fraction | int) -> str:
    return str(Fraction(value))


def parse_rational(text: Any) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def network_to_document(net: Network) -> dict:
    edges = sorted(tuple(sorted((e.u, e.v))) for e in net.graph.edges)
    return {
        "nodes": sorted(net.graph.nodes),
        "terminals": sorted(net.terminals),
        "edges": [list(p) for p in edges],
        "clutter": [sorted(m) for m in net.clutter.sorted_members()],
    }


def network_from_document(doc: dict) -> Network:
    for field in ("nodes", "terminals", "edges", "clutter"):
        if field not in doc:
            raise ParseError(f"missing field {field!r}")
    nodes = doc["nodes"]
    if not isinstance(nodes, list) or not all(isinstance(n, str) for n in nodes):
        raise ParseError("field 'nodes' must be a list of strings")
    seen: set[str] = set()
    for n in nodes:
        if n in seen:
            raise ParseError(f"duplicate node id {n!r}")
        seen.add(n)
    for t in doc["terminals"]:
        if t not in seen:
            raise ParseError(f"terminal {t!r} is not a declared node")
    pairs = []
    for i, raw in enumerate(doc["edges"]):
        if (not isinstance(raw, list) or len(raw) != 2
                or not all(isinstance(x, str) for x in raw)):
            raise ParseError(f"edge #{i} must be a two-element node list")
        pairs.append((raw[0], raw[1]))
    for i, member in enumerate(doc["clutter"]):
        if not isinstance(member, list) or not member:
            raise ParseError(f"clutter member #{i} must be a non-empty list")
    try:
        return Network.build(nodes, doc["terminals"], pairs, doc["clutter"])
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def dump_network(net: Network) -> str:
    return json.dumps(network_to_document(net), indent=2, sort_keys=True) + "\n"


def load_network(text: str) -> Network:
    return network_from_document(_load_json(text))


def certificate_to_document(cert: Certificate) -> dict:
    return {
        "extension": [list(p) for p in cert.extension],
        "expansion": {t: sorted(b) for t, b in cert.expansion.blocks},
        "lambdaValues": {t: v for t, v in cert.cut_sizes},
        "betaValues": [[list(pair), format_rational(v)]
                       for pair, v in cert.surpluses],
        "matching": [[[list(a), list(b)], count]
                     for (a, b), count in cert.matching],
        "value": format_rational(cert.value),
    }


def certificate_from_document(doc: dict) -> Certificate:
    for field in ("extension", "expansion", "lambdaValues", "betaValues",
                  "matching", "value"):
        if field not in doc:
            raise ParseError(f"missing field {field!r}")
    try:
        extension = tuple(sorted(tuple(p) for p in doc["extension"]))
        expansion = Expansion.of(
            {t: set(block) for t, block in doc["expansion"].items()})
        cuts = tuple(sorted((t, int(v)) for t, v in doc["lambdaValues"].items()))
        surpluses = tuple(
            (tuple(pair), parse_rational(v)) for pair, v in doc["betaValues"])
        matching = tuple(
            ((tuple(a), tuple(b)), int(count))
            for (a, b), count in doc["matching"])
        value = parse_rational(doc["value"])
    except (TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from exc
    return Certificate(extension, expansion, cuts, surpluses, matching, value)


def dump_certificate(cert: Certificate) -> str:
    return json.dumps(certificate_to_document(cert), indent=2,
                      sort_keys=True) + "\n"


def load_certificate(text: str) -> Certificate:
    return certificate_from_document(_load_json(text))


def packing_to_document(flow: Multiflow) -> dict:
    return {
        "paths": [
            {"start": p.nodes[0], "edges": list(p.edges),
             "weight": format_rational(w)}
            for p, w in flow.items()
        ],
    }


def packing_from_document(doc: dict, net: Network) -> Multiflow:
    if "paths" not in doc or not isinstance(doc["paths"], list):
        raise ParseError("missing field 'paths'")
    weights = {}
    for i, raw in enumerate(doc["paths"]):
        try:
            path = TPath.trace(net.graph, raw["start"], raw["edges"])
            weight = parse_rational(raw.get("weight", 1))
        except (KeyError, TypeError, StructuralError) as exc:
            raise ParseError(f"bad path #{i}: {exc}") from exc
        weights[path] = weights.get(path, Fraction(0)) + weight
    flow = Multiflow(weights)
    try:
        flow.validate(net)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return flow


def dump_packing(flow: Multiflow) -> str:
    return json.dumps(packing_to_document(flow), indent=2, sort_keys=True) + "\n"


def load_packing(text: str, net: Network) -> Multiflow:
    return packing_from_document(_load_json(text), net)


def _load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: line {exc.lineno}, {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    return doc
