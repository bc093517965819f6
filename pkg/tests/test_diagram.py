import json

import pytest

from periodica.diagram import (
    AnnularDiagram,
    BadGluing,
    DanglingPort,
    NotOddPrime,
    OrientationMismatch,
    PDParseError,
    PeriodicTangleCode,
    braid_tangle,
    crossing_counts,
    lk_with_axis,
    load_diagram,
    parse_pd,
    parse_ptc,
    quotient,
)
from periodica.states import jones_kauffman


def _ptc(**over):
    base = {
        "p": 3,
        "n": 1,
        "tangle": {
            "crossings": [{"id": 0, "sign": 1, "ports": ["ui", "oo", "uo", "oi"]}],
            "arcs": [[["w", 0], ["c", 0, 3]], [["w", 1], ["c", 0, 0]], [["c", 0, 2], ["e", 0]], [["c", 0, 1], ["e", 1]]],
            "west": [0, 1],
            "east": [0, 1],
            "orient": [1, 1],
            "loops": 0,
        },
    }
    base["tangle"].update(over.pop("tangle", {}))
    base.update(over)
    return json.dumps(base)


def test_trefoil_ptc_round_trip(data):
    code = load_diagram(data("trefoil.ptc"))
    assert parse_ptc(code.dumps()) == code
    assert parse_ptc(_ptc()) == code
    assert code.order == 3 and lk_with_axis(code) == 2


def test_ptc_errors():
    with pytest.raises(NotOddPrime):
        parse_ptc(_ptc(p=2))
    with pytest.raises(NotOddPrime):
        parse_ptc(_ptc(p=9))
    with pytest.raises(DanglingPort):
        parse_ptc(_ptc(tangle={"arcs": [[["w", 0], ["c", 0, 3]], [["w", 1], ["c", 0, 0]], [["c", 0, 2], ["e", 0]]]}))
    with pytest.raises(OrientationMismatch):
        parse_ptc(_ptc(tangle={"orient": [1, -1]}))
    with pytest.raises(BadGluing):
        parse_ptc(_ptc(tangle={"west": [0, 0]}))


def test_quotient_levels():
    code = PeriodicTangleCode(3, 2, braid_tangle(2, [1]))
    assert [quotient(code, v).copies for v in range(3)] == [9, 3, 1]
    assert crossing_counts(code) == (9, 0)


def test_pd_parser_and_mirror(data):
    d = load_diagram(data("trefoil.pd"))
    assert crossing_counts(d) == (3, 0)
    assert crossing_counts(d.mirror()) == (0, 3)
    assert jones_kauffman(d.mirror()) == jones_kauffman(d).mirror()
    assert parse_pd(d.to_pd()).n_crossings == 3


def test_pd_errors():
    with pytest.raises(PDParseError):
        parse_pd("X[1,2,3]")
    with pytest.raises(PDParseError):
        parse_pd("X[1,2,3,4]\nX[1,2,3,5]")
    with pytest.raises(PDParseError):
        parse_pd("Y[1,2,3,4]")


def test_reverse_header_flips_one_component(data):
    hopf = load_diagram(data("hopf.pd"))
    flipped = parse_pd("# reverse: 1\n" + open(data("hopf.pd")).read())
    assert crossing_counts(hopf) == (2, 0)
    assert crossing_counts(flipped) == (0, 2)


def test_components_and_union(data):
    hopf = load_diagram(data("hopf.pd"))
    tref = load_diagram(data("trefoil.pd"))
    assert hopf.components() == 2
    u = hopf.disjoint_union(tref)
    assert u.components() == 3
    assert jones_kauffman(u) == jones_kauffman(hopf) * jones_kauffman(tref)


def test_annular_flatten_matches_braid_closure():
    flat = AnnularDiagram(braid_tangle(2, [1, 1, 1]), 1).flatten()
    code = PeriodicTangleCode(3, 1, braid_tangle(2, [1]))
    assert jones_kauffman(flat) == jones_kauffman(code)


def test_resolve_and_with_sign():
    t = braid_tangle(2, [1])
    assert t.with_sign(0, -1).counts() == (0, 1)
    r = t.resolve(0)
    assert r.crossings == () and r.width == 2
