"""Upper bound arithmetic and domination."""
from hypothesis import given

from circulant import CirculantParams, bounds_report, diameter_exact

from _strategies import valid_params


def test_tight_cell():
    rep = bounds_report(CirculantParams(16, 5))
    assert (rep.du, rep.gobel_neutel, rep.new_bound, rep.combined) == (4, 4, 4, 4)


def test_slack_cell():
    rep = bounds_report(CirculantParams(10, 4))
    assert (rep.du, rep.gobel_neutel, rep.new_bound, rep.combined) == (3, 3, 3, 3)
    assert diameter_exact(CirculantParams(10, 4)).value == 2


@given(valid_params())
def test_combined_is_min(p):
    rep = bounds_report(p)
    assert rep.combined == min(rep.du, rep.gobel_neutel, rep.new_bound)
    assert rep.du >= p.n // p.s + 1 >= 3


@given(valid_params(max_n=400))
def test_bounds_dominate_diameter(p):
    rep = bounds_report(p)
    diam = diameter_exact(p).value
    assert diam <= rep.du
    assert diam <= rep.gobel_neutel
    assert diam <= rep.new_bound


def test_chord_two_bounds_nearly_agree():
    # for s = 2 the new bound and the quarter bound differ by at most 1
    for n in range(5, 200):
        rep = bounds_report(CirculantParams(n, 2))
        assert abs(rep.new_bound - rep.gobel_neutel) <= 1
