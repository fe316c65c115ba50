import pytest

import metric_trees as mt

SQUARE = "p0\np1 1\np2 1.4142135623730951 1\np3 1 1.4142135623730951 1\n"


def test_star_profiles():
    star = mt.Tree.gallery("star", size=4)
    assert star.point_names == ["t1", "t2", "t3", "t4"]
    assert star.profile("beta") == [1.0, 1.0, 1.0, 0.0]
    assert star.profile("alpha") == [2.0, 2.0, 2.0, 0.0]
    assert star.profile("beta_star", n_max=2) == [2.0, 2.0]


def test_geodesics():
    simple = mt.Tree.gallery("simple")
    assert simple.distance("A", "C") == pytest.approx(3.0, abs=1e-9)
    assert simple.is_between("A", "B", "C")
    assert simple.median("A", "C", "D") == {"node": "B"}
    assert simple.midpoint("A", "C") == {"edge": {"u": "A", "v": "B"}, "offset": 1.5}
    assert simple.leaves() == ["A", "C", "D"]


def test_measure_and_cover():
    star = mt.Tree.gallery("star", size=3)
    report = star.measure()
    assert report["relations_hold"]
    assert [row["value"] for row in report["beta"]] == [1.0, 1.0, 0.0]
    assert star.cover(1.0)["count"] == 1
    assert star.partition(1.8)["count"] == 3


def test_matrices_round_trip():
    star = mt.Tree.gallery("star", size=4)
    names = star.point_names
    rows = [",".join([""] + names)]
    for a in names:
        rows.append(",".join([a] + [repr(star.distance(a, b)) for b in names]))
    text = "\n".join(rows) + "\n"
    assert mt.check_four_point(text)["tree_metric"]
    rebuilt = mt.tree_from_distances(text)
    assert rebuilt.distance("t1", "t3") == pytest.approx(2.0, abs=1e-9)
    assert not mt.check_four_point(SQUARE)["tree_metric"]


def test_kappa_and_counterexample():
    path = mt.Tree.parse("edge a b 10\n")
    report = path.kappa(trials=20, seed=3)
    assert report["consistent"]
    assert report == path.kappa(trials=20, seed=3)
    ce = mt.lifschitz_counterexample(1.0, 1.5)
    assert ce["verified"]
    assert not ce["clamped"]


def test_errors_carry_codes():
    with pytest.raises(mt.MtreeError) as info:
        mt.Tree.parse("edge a b -1\n")
    assert info.value.code == "NonpositiveEdgeLength"
    with pytest.raises(mt.MtreeError) as info:
        mt.Tree.gallery("spiral")
    assert info.value.code == "UnknownGallery"
    with pytest.raises(ValueError):
        mt.Tree.gallery("star").distance("t1", "nowhere")
