import pytest
from hypothesis import given, settings, strategies as st

from periodica import _core
from periodica.budget import Budget, BudgetExceeded
from periodica.diagram import PeriodicTangleCode, braid_tangle, parse_pd, quotient
from periodica.laurent import LaurentPoly
from periodica.states import enumerate_level, jones_kauffman, level_histogram, resolve_and_trace, state_histogram

from oracles import KNOWN_PD, bracket_jones, knot_writhe


def _pd(rows):
    return parse_pd(" ".join("X[%d,%d,%d,%d]" % tuple(r) for r in rows))


@pytest.mark.parametrize("name", sorted(KNOWN_PD))
def test_jones_matches_bracket_oracle(name):
    rows = KNOWN_PD[name]
    assert jones_kauffman(_pd(rows)) == LaurentPoly(bracket_jones(rows, knot_writhe(rows)))


def test_trefoil_level_counts():
    code = PeriodicTangleCode(3, 1, braid_tangle(2, [1]))
    assert sum(1 for _ in enumerate_level(code, 0)) == 6
    assert sum(1 for _ in enumerate_level(code, 1)) == 2
    stats = [s for _, s in enumerate_level(code, 1)]
    assert sorted(s.r for s in stats) == [0, 3]


def test_level_histogram_matches_enumeration():
    code = PeriodicTangleCode(3, 2, braid_tangle(3, [1, -2]))
    for v in range(3):
        hist = {}
        for _, s in enumerate_level(code, v):
            hist[(s.r, s.k, s.f)] = hist.get((s.r, s.k, s.f), 0) + 1
        assert hist == level_histogram(code, v)


def test_zero_crossing_code_has_only_top_level():
    code = PeriodicTangleCode(3, 2, braid_tangle(2, []))
    assert level_histogram(code, 0) == {} and level_histogram(code, 1) == {}
    assert level_histogram(code, 2) == {(0, 0, 2): 1}


def test_circle_windings():
    flat = quotient(PeriodicTangleCode(3, 1, braid_tangle(2, [1])), 0).flatten()
    circles = resolve_and_trace(flat, 0)
    assert sorted(abs(c.winding) for c in circles) == [1, 1]


words = st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=4)


@settings(max_examples=25, deadline=None)
@given(words, st.sampled_from([1, 2, 3]))
def test_compiled_kernel_matches_fallback(word, copies):
    if _core.compiled_histogram is None:
        pytest.skip("compiled kernel not built")
    from periodica.diagram import AnnularDiagram

    flat = AnnularDiagram(braid_tangle(3, word), copies).flatten()
    ends = flat.ends()
    n = flat.n_crossings
    args = (ends[0], ends[1], list(flat.seam), n, 0, 1 << n)
    assert _core.compiled_histogram(*args) == _core.pure_histogram(*args)
    shift = n // copies if copies > 1 else 0
    assert _core.compiled_histogram(*args, shift) == _core.pure_histogram(*args, shift)


def test_threads_do_not_change_the_result():
    flat = _pd(KNOWN_PD["10_61"])
    assert state_histogram(flat, threads=4) == state_histogram(flat, threads=1)


def test_budget():
    flat = _pd(KNOWN_PD["10_61"])
    with pytest.raises(BudgetExceeded):
        jones_kauffman(flat, budget=Budget(max_crossings=8))
    with pytest.raises(BudgetExceeded):
        jones_kauffman(flat, budget=Budget(max_states=100))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("PERIODICA_BUDGET", "max_crossings=5,kh_crossings=3")
    b = Budget.from_env()
    assert (b.max_crossings, b.kh_crossings) == (5, 3)
    monkeypatch.setenv("PERIODICA_BUDGET", "7")
    assert Budget.from_env().max_crossings == 7
    monkeypatch.setenv("PERIODICA_BUDGET", "bogus=1")
    with pytest.raises(ValueError):
        Budget.from_env()


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, PERIODICA_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from periodica import _core; from periodica.cli import main; print(_core.BACKEND); main(['jones', '" + os.path.join(os.path.dirname(_core.__file__), "..", "data", "trefoil.pd") + "'])"],
        env=env, capture_output=True, text=True, check=True,
    )
    backend, poly = out.stdout.split("\n")[:2]
    assert backend == "python" and poly == "-1*q^9 + 1*q^5 + 1*q^3 + 1*q^1"
