import pytest

from maxarcs.arcs import (
    SearchConfig,
    denniston_arc,
    dual_arc,
    maximal_size,
    objective,
    tabu_search,
    validate_arc,
)
from maxarcs.errors import NotMaximal
from maxarcs.geometry import Gf2mField, dual_plane
from oracles import hyperovals_by_brute_force


@pytest.mark.parametrize("m", [2, 3, 4])
def test_denniston_every_degree(planes, m):
    f = Gf2mField(m)
    for s in range(1, m + 1):
        a = denniston_arc(f, s, plane=planes[m])
        assert a.size == maximal_size(f.q, 2 ** s)
        assert set(a.intersection_sizes()) <= {0, 2 ** s}


def test_denniston_rejects_non_subgroup(planes):
    with pytest.raises(ValueError):
        denniston_arc(Gf2mField(4), 2, (0, 1, 2, 4), plane=planes[4])


def test_validate_reports_first_bad_line(planes, arc_m3):
    pts = list(arc_m3.points)
    with pytest.raises(NotMaximal) as err:
        validate_arc(planes[3], pts[:-1], 4)
    assert err.value.line_id is not None
    with pytest.raises(NotMaximal) as err:
        validate_arc(planes[3], [], 4)
    assert err.value.line_id is None


def test_dual_arc(planes, arc_m3, arc_pg16_1):
    d = dual_arc(arc_m3)
    assert (d.size, d.degree) == (10, 2)
    d16 = dual_arc(arc_pg16_1)
    assert (d16.size, d16.degree) == (52, 4)
    # the dual of the dual is the arc again, back in the original plane numbering
    back = dual_arc(d16, dual_plane(d16.plane))
    assert back.points == arc_pg16_1.points


def test_objective_zero_on_arcs(planes, arc_m3):
    assert objective(planes[3], arc_m3.points, 4) == 0
    assert objective(planes[3], arc_m3.points[1:], 4) > 0


def test_search_finds_all_pg24_hyperovals(planes):
    truth = set(hyperovals_by_brute_force(planes[2]))
    assert len(truth) == 168
    found = tabu_search(planes[2], SearchConfig(k=2, max_experiments=1500, moves_per_experiment=200))
    got = {a.points for a in found}
    assert got <= truth
    assert len(got) > 150


def test_search_deterministic(planes):
    cfg = SearchConfig(k=2, max_experiments=20, moves_per_experiment=200, rng_seed=7)
    a = [x.points for x in tabu_search(planes[2], cfg)]
    b = [x.points for x in tabu_search(planes[2], cfg)]
    assert a == b and a == sorted(a)


def test_search_pg16(planes):
    cfg = SearchConfig(k=4, max_experiments=5, moves_per_experiment=3000, stop_after=1)
    found = tabu_search(planes[4], cfg)
    assert len(found) == 1 and found[0].size == 52


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(k=0)
    with pytest.raises(ValueError):
        SearchConfig(k=2, random_move_probability=2)
