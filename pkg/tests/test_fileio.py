from fractions import Fraction

import pytest

from pathpack import Multiflow, ParseError, walk
from pathpack.fileio import (
    dump_certificate,
    dump_network,
    dump_packing,
    format_rational,
    load_certificate,
    load_network,
    load_packing,
    parse_rational,
)

from conftest import path_join, star4, triangle


def test_rational_round_trip():
    assert format_rational(Fraction(5, 2)) == "5/2"
    assert format_rational(3) == "3"
    assert parse_rational("5/2") == Fraction(5, 2)
    assert parse_rational("-7") == -7
    assert parse_rational(4) == 4
    with pytest.raises(ParseError, match="bad rational"):
        parse_rational("x/y")
    with pytest.raises(ParseError):
        parse_rational(2.5)


def test_network_round_trip():
    for build in (triangle, star4, path_join):
        n = build()
        text = dump_network(n)
        again = load_network(text)
        assert dump_network(again) == text
        assert again.terminals == n.terminals
        assert again.clutter == n.clutter
        assert sorted(e.ends() for e in again.graph.edges) == \
            sorted(e.ends() for e in n.graph.edges)


def test_network_parse_errors_name_the_field():
    with pytest.raises(ParseError, match="'clutter'"):
        load_network('{"nodes": [], "terminals": [], "edges": []}')
    with pytest.raises(ParseError, match="duplicate node id 'a'"):
        load_network('{"nodes": ["a", "a"], "terminals": [], "edges": [], '
                     '"clutter": []}')
    with pytest.raises(ParseError, match="terminal 'z'"):
        load_network('{"nodes": ["a"], "terminals": ["z"], "edges": [], '
                     '"clutter": []}')
    with pytest.raises(ParseError, match="edge #0"):
        load_network('{"nodes": ["a"], "terminals": [], "edges": [["a"]], '
                     '"clutter": []}')
    with pytest.raises(ParseError, match="self-loop"):
        load_network('{"nodes": ["a"], "terminals": [], '
                     '"edges": [["a", "a"]], "clutter": []}')
    with pytest.raises(ParseError, match="JSON"):
        load_network("{nope")


def test_certificate_round_trip():
    from pathpack import search_certificate

    n = path_join()
    cert, _ = search_certificate(n)
    text = dump_certificate(cert)
    again = load_certificate(text)
    assert again == cert
    assert '"value"' in text and "5/2" not in text


def test_certificate_missing_field():
    with pytest.raises(ParseError, match="'matching'"):
        load_certificate('{"extension": [], "expansion": {}, '
                         '"lambdaValues": {}, "betaValues": [], "value": "1"}')


def test_packing_round_trip():
    n = star4()
    flow = Multiflow.integer([walk(n.graph, ["s", "x", "u"]),
                              walk(n.graph, ["t", "x", "v"])])
    text = dump_packing(flow)
    again = load_packing(text, n)
    assert again == flow


def test_packing_rejects_overload():
    n = star4()
    doc = ('{"paths": [{"start": "s", "edges": ["e000", "e002"]}, '
           '{"start": "u", "edges": ["e002", "e001"]}]}')
    with pytest.raises(ParseError, match="overloaded"):
        load_packing(doc, n)
