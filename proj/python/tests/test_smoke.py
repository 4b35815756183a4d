import json

import pytest

quadtile = pytest.importorskip("quadtile")


def test_field_arithmetic():
    F = quadtile.Field("2")
    x = F("1", "1")
    assert str(x * x.conj()) == str(F("-1"))
    assert x.norm() == "-1"
    assert x.inv() * x == F("1")
    assert F("3", "1") > F("4")
    assert abs(float(x) - 2.41421356) < 1e-8


def test_bad_radicand():
    with pytest.raises(quadtile.QuadtileError) as err:
        quadtile.Field("9/4")
    assert err.value.kind == "RationalSquareRoot"


def test_decide():
    assert quadtile.decide(quadtile.problem(2, [(1, 1)], (1, 0)))["verdict"] == "NO"
    yes = quadtile.decide(quadtile.problem(2, [(3, 1)], (1, 0)))
    assert yes["verdict"] == "YES"
    assert "AllPositiveConj" in yes["case"]


def test_tile_and_verify():
    prob = quadtile.problem(2, [(3, 1)], (1, 0))
    tiling = quadtile.tile(prob)
    assert len(json.loads(tiling)["tiles"]) == 48
    report = quadtile.verify(prob, tiling)
    assert report["ok"] and report["guillotine"]
    assert quadtile.area_additivity(tiling, "1", "-2", "3/5")
    assert quadtile.render_svg(tiling).count("<rect") == 48

    damaged = json.loads(tiling)
    del damaged["tiles"][3]
    assert not quadtile.verify(prob, json.dumps(damaged))["covered"]


def test_certify():
    prob = quadtile.problem(2, [(3, 1)], (1, 1))
    bundle = quadtile.certify(prob)
    assert json.loads(bundle)["core"]["quarter_discriminant"] == "-56"
    assert quadtile.check_certificate(prob, bundle)
    with pytest.raises(quadtile.QuadtileError):
        quadtile.tile(prob)


def test_search_and_plan():
    prob = quadtile.problem(2, [(1, 1)], (0, 1))
    assert quadtile.plan(prob).startswith(("stack", "scale", "transpose", "unit"))
    assert quadtile.search(prob) is not None
    assert quadtile.search(quadtile.problem(2, [(1, 1)], (1, 0)), depth=2) is None
