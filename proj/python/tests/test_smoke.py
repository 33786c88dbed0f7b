from fractions import Fraction
from math import comb

import pytest

import oplab


def fibonacci(n):
    out = [0, 1]
    while len(out) <= n:
        out.append(out[-1] + out[-2])
    return out[: n + 1]


FIB_TEXT = "generator a 2\nrelation a(a(*,*),a(*,*))\nrelation a(a(a(*,*),*),*)\n"


def test_fibonacci_operad_dims():
    p = oplab.Presentation.from_text(FIB_TEXT, "fib")
    assert p.name == "fib"
    assert p.generators == [("a", 2)]
    assert p.dims(30) == fibonacci(30)
    assert p.dims(12, engine="brute") == p.dims(12)
    assert p.dims_by_weight(6) == [1, 1, 2, 3, 5, 8, 13]


def test_constructor_and_text_round_trip():
    p = oplab.Presentation([("a", 2)], ["a(a(*,*),a(*,*))", "a(a(a(*,*),*),*)"])
    q = oplab.Presentation.from_text(p.to_text())
    assert q.fingerprint == p.fingerprint
    assert p.is_normal_form("a(a(*,a(*,*)),*)")
    assert not p.is_normal_form("a(a(a(*,*),*),*)")
    assert len(p.normal_forms(4)) == 1 + 1 + 2 + 3 + 5


def test_big_values_are_python_ints():
    free = oplab.Presentation([("a", 2)], [])
    dims = free.dims(40)
    assert dims[40] == comb(78, 39) // 40
    assert isinstance(dims[40], int)


def test_algebra_hilbert_and_operadize():
    a = oplab.Algebra.from_text("var x1\nvar x2\nforbid x1 x1\n")
    assert a.hilbert(8) == fibonacci(10)[2:11]
    p = a.operadize()
    assert p.dims(20) == fibonacci(20)


def test_presets():
    names = [n for n, _ in oplab.preset_list()]
    assert "ex53-2" in names
    assert oplab.preset_dims("ex53-2", 10) == fibonacci(10)
    assert oplab.preset_presentation("ex53-1").dims(6) == [0, 1, 1, 2, 4, 8, 16]
    with pytest.raises(oplab.OplabError):
        oplab.preset_dims("no-such-preset", 5)


def test_series_tools():
    fit = oplab.fit_rational(fibonacci(60))
    assert fit is not None and fit["holdout_verified"]
    assert fit["denominator"] == [1, -1, -1]
    assert all(isinstance(c, Fraction) for c in fit["numerator"])
    rec = oplab.guess(fibonacci(80), 4, 4)
    assert rec["order"] == 2 and rec["degree"] == 0
    g = oplab.gk([n * n for n in range(2000)])
    assert abs(g["slope"] - 3) < 0.1
    with pytest.raises(oplab.WindowTooShortError):
        oplab.guess(fibonacci(30), 4, 4)


def test_envelopes_and_gapcheck():
    free = [2**n for n in range(10)]
    assert oplab.min_envelope(free)["dims"] == [0] + free
    assert oplab.symmetric_envelope(free)["dims"][3] == 3 * 4
    r = oplab.preset_presentation("ex53-3").gapcheck(20)
    assert r["criterion_d"] == 5
    assert r["growth_class"] == "linear"


def test_words_and_periods():
    gens = [("a", 2), ("b", 2)]
    assert oplab.minimal_period(gens, "a:1 a:1 b:1 a:1 a:1 b:1 a:1 a") == 3
    assert oplab.minimal_period(gens, "a:1 b") is None
    assert oplab.divides(gens, "a(*,*)", "a(b(*,*),*)")
    assert oplab.one_turn_counts(10)[1:] == list(range(1, 11))


def test_sweep_and_errors():
    rows = oplab.sweep(2, 16)
    assert len(rows) == 4
    assert rows[-1]["growth_class"] == "bounded"
    with pytest.raises(oplab.ParseError):
        oplab.Presentation.from_text("generator a 2\nrelation b(*,*)\n")
    with pytest.raises(oplab.InvalidArgumentError):
        oplab.sweep(4, 10)
