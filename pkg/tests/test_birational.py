"""Charts, blow-ups, strict transforms, the lemma square, and the tower."""

import json
import random

import pytest

from conetower.blowup import (
    SurfaceCenter,
    center_pullback_divisible,
    center_strict_transform,
    codim2_blowup_charts,
    exceptional_divisor,
    overlap_cocycle_ok,
    point_blowup_charts,
    straighten_center,
    strict_transform,
)
from conetower.certificates import FAIL, PASS
from conetower.charts import (
    Chart,
    Hypersurface,
    SubstitutionMap,
    compose_maps,
    first_mismatch,
    maps_equal,
)
from conetower.errors import (
    ChartMismatchError,
    NotTriangularError,
    ValidationError,
)
from conetower.gaussian import GaussianRational
from conetower.lemma_square import perturbed_square_certificate, verify_lemma_square
from conetower.multipoly import MultiPoly
from conetower.tower import (
    build_tower,
    cone_equation,
    tower_center,
    tower_to_dict,
    tower_to_json,
)

AMBIENT = Chart("M", ("z1", "z2", "z3", "z4"), "local-model")


# ---------------------------------------------------------------- point blow-ups


def test_point_blowup_distinguished_chart_matches_eq5():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    bc = step.chart(3)
    u = bc.chart
    assert bc.exceptional == "u4"
    assert bc.to_base.assignment["z1"] == u.poly("u1*u4")
    assert bc.to_base.assignment["z2"] == u.poly("u2*u4")
    assert bc.to_base.assignment["z3"] == u.poly("u3*u4")
    assert bc.to_base.assignment["z4"] == u.poly("u4")


def test_point_blowup_first_chart_by_symmetry():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    bc = step.chart(0)
    u = bc.chart
    assert bc.exceptional == "u1"
    assert bc.to_base.assignment["z1"] == u.poly("u1")
    assert bc.to_base.assignment["z2"] == u.poly("u2*u1")
    assert bc.to_base.assignment["z3"] == u.poly("u3*u1")
    assert bc.to_base.assignment["z4"] == u.poly("u4*u1")


def test_exceptional_divisor_is_coordinate_zero_locus():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    div = exceptional_divisor(step, 3)
    assert div.equation == div.chart.poly("u4")


def test_exceptional_locus_maps_into_center():
    # setting the exceptional coordinate to zero lands the image in the center
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    for index in range(4):
        bc = step.chart(index)
        for v in AMBIENT.variables:
            assert bc.to_base.assignment[v].set_variables({bc.exceptional: 0}).is_zero()
    v = Chart("V", ("v1", "v2", "a", "b"), "local-model")
    codim2 = codim2_blowup_charts(v, "v1", "v2", "t", "s", "N")
    for bc in codim2.charts:
        for name in ("v1", "v2"):
            image = bc.to_base.assignment[name].set_variables({bc.exceptional: 0})
            assert image.is_zero()


# ---------------------------------------------------------------- straightening


def test_straighten_s2_roundtrip():
    center = SurfaceCenter(
        AMBIENT,
        (AMBIENT.poly("z1 - i*z2"), AMBIENT.poly("z3 - z4^2")),
        ("z1", "z3"),
    )
    forward, inverse = straighten_center(center, ("p", "a", "q", "b"), "V")
    straight = forward.source
    assert forward.assignment["z1"] == straight.poly("p + i*a")
    assert forward.assignment["z2"] == straight.poly("a")
    assert forward.assignment["z3"] == straight.poly("q + b^2")
    assert forward.assignment["z4"] == straight.poly("b")
    assert maps_equal(compose_maps(inverse, forward), SubstitutionMap.identity(straight))
    assert maps_equal(compose_maps(forward, inverse), SubstitutionMap.identity(AMBIENT))
    assert forward.pullback(center.generators[0]) == straight.poly("p")
    assert forward.pullback(center.generators[1]) == straight.poly("q")


def test_straighten_plane_is_renaming():
    center = SurfaceCenter(AMBIENT, (AMBIENT.poly("z3"), AMBIENT.poly("z4")), ("z3", "z4"))
    forward, _ = straighten_center(center, ("p", "a", "q", "b"), "V")
    straight = forward.source
    assert forward.assignment["z3"] == straight.poly("p")
    assert forward.assignment["z4"] == straight.poly("q")
    assert forward.assignment["z1"] == straight.poly("a")
    assert forward.assignment["z2"] == straight.poly("b")


def test_straighten_level_j_form():
    u = Chart("U2", ("u1", "u2", "u3", "u4"), 2)
    center = tower_center(u, 2)
    forward, _ = straighten_center(center, ("p", "a", "q", "b"), "V")
    assert forward.assignment["u1"] == forward.source.poly("p + i*a")
    assert forward.assignment["u3"] == forward.source.poly("q + b^2")


def test_straighten_rejects_non_triangular():
    with pytest.raises(NotTriangularError):
        SurfaceCenter(
            AMBIENT,
            (AMBIENT.poly("z1*z2 - 1"), AMBIENT.poly("z3")),
            ("z1", "z3"),
        )
    with pytest.raises(NotTriangularError):
        # remainder involves an earlier variable
        SurfaceCenter(
            AMBIENT,
            (AMBIENT.poly("z3 - z1"), AMBIENT.poly("z4")),
            ("z3", "z4"),
        )


# ---------------------------------------------------------------- codim-2 charts


def test_codim2_chart_maps():
    v = Chart("V", ("v1", "v2", "a", "b"), "local-model")
    step = codim2_blowup_charts(v, "v1", "v2", "t", "s", "N")
    chart_t, chart_s = step.charts
    assert chart_t.chart.variables == ("t", "v2", "a", "b")
    assert chart_t.to_base.assignment["v1"] == chart_t.chart.poly("t*v2")
    assert chart_t.to_base.assignment["v2"] == chart_t.chart.poly("v2")
    assert chart_t.to_base.assignment["a"] == chart_t.chart.poly("a")
    assert chart_t.exceptional == "v2"
    assert chart_s.to_base.assignment["v2"] == chart_s.chart.poly("s*v1")
    assert chart_s.exceptional == "v1"
    assert overlap_cocycle_ok(step)


def test_codim2_strict_transform_in_s_chart():
    # p(p+2i a)+q(q+2b^k) under q = s*p divides out p once, k = 2
    v = Chart("V", ("p", "a", "q", "b"), "local-model")
    step = codim2_blowup_charts(v, "p", "q", "t", "s", "N")
    f = v.poly("p") * v.poly("p + 2*i*a") + v.poly("q") * v.poly("q + 2*b^2")
    h = Hypersurface(v, f)
    strict, mult = strict_transform(h, step, 1)
    assert mult == 1
    expected = strict.chart.poly("p + s^2*p + 2*i*a + 2*s*b^2")
    assert strict.equation == expected


def test_codim2_strict_transform_in_t_chart():
    v = Chart("V", ("p", "a", "q", "b"), "local-model")
    step = codim2_blowup_charts(v, "p", "q", "t", "s", "N")
    for k in (1, 2, 3):
        f = v.poly("p") * v.poly("p + 2*i*a") + v.poly("q") * v.poly(f"q + 2*b^{k}")
        strict, mult = strict_transform(Hypersurface(v, f), step, 0)
        assert mult == 1
        assert strict.equation == strict.chart.poly(f"q + t^2*q + 2*i*a*t + 2*b^{k}")


# ---------------------------------------------------------------- strict transforms


def test_strict_transform_of_y2_distinguished():
    chart = Chart("M2", ("z1", "z2", "z3", "z4"), 2)
    y2 = Hypersurface(chart, cone_equation(chart, 2))
    step = point_blowup_charts(chart, ("u1", "u2", "u3", "u4"), "M1")
    strict, mult = strict_transform(y2, step, 3)
    assert mult == 2
    assert strict.equation == strict.chart.poly("u1^2 + u2^2 + u3^2 - u4^2")


def test_strict_transform_second_step_reaches_unit_sphere():
    chart = Chart("M1", ("u1", "u2", "u3", "u4"), 1)
    y1 = Hypersurface(chart, cone_equation(chart, 1))
    step = point_blowup_charts(chart, ("v1", "v2", "v3", "v4"), "M0")
    strict, mult = strict_transform(y1, step, 3)
    assert mult == 2
    assert strict.equation == strict.chart.poly("v1^2 + v2^2 + v3^2 - 1")


def test_strict_transform_roundtrip_property():
    rng = random.Random(19)
    chart = Chart("M", ("z1", "z2", "z3", "z4"), "local-model")
    step = point_blowup_charts(chart, ("u1", "u2", "u3", "u4"), "Mp")
    for _ in range(20):
        terms = {}
        for _ in range(rng.randint(1, 6)):
            exps = tuple(rng.randint(0, 3) for _ in range(4))
            terms[exps] = GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5))
        f = MultiPoly(chart.variables, terms)
        if f.is_zero():
            continue
        h = Hypersurface(chart, f)
        index = rng.randrange(4)
        bc = step.chart(index)
        strict, mult = strict_transform(h, step, index)
        total = bc.to_base.pullback(f)
        assert bc.chart.var(bc.exceptional) ** mult * strict.equation == total


def test_center_pullback_divisibility_property():
    chart = Chart("M3", ("z1", "z2", "z3", "z4"), 3)
    center = tower_center(chart, 3)
    step = point_blowup_charts(chart, ("u1", "u2", "u3", "u4"), "M2")
    assert center_pullback_divisible(center.generators, step, 3)


def test_center_strict_transform_drops_exponent():
    chart = Chart("M3", ("z1", "z2", "z3", "z4"), 3)
    center = tower_center(chart, 3)
    step = point_blowup_charts(chart, ("u1", "u2", "u3", "u4"), "M2")
    lower = center_strict_transform(center, step, 3)
    expected = tower_center(step.chart(3).chart, 2)
    assert lower.generators == expected.generators


# ---------------------------------------------------------------- map algebra


def test_compose_with_identity():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    g = step.chart(3).to_base
    assert maps_equal(compose_maps(g, SubstitutionMap.identity(g.source)), g)


def test_distinct_charts_of_one_blowup_differ():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    a = step.chart(0).to_base
    b = step.chart(1).to_base
    rebased = SubstitutionMap(a.source, a.target, b.assignment, "rebased")
    assert not maps_equal(a, rebased)
    assert first_mismatch(a, rebased) == "z1"


def test_compose_chart_mismatch():
    step = point_blowup_charts(AMBIENT, ("u1", "u2", "u3", "u4"), "Mp")
    g = step.chart(3).to_base
    with pytest.raises(ChartMismatchError):
        compose_maps(g, g)


# ---------------------------------------------------------------- lemma square


def test_lemma_square_passes():
    cert = verify_lemma_square()
    assert cert.status == PASS
    names = {c.name for c in cert.checks}
    assert sum(1 for n in names if n.startswith("square:")) == 6
    # one frozen composite: through the z4-direction chart the top route is
    # exactly the point blow-up equations
    assert cert.values["U4->N.T:z1"] == "u1*u4"
    assert cert.values["U4->N.T:z3"] == "u3*u4"
    assert cert.values["U4->N.T:z4"] == "u4"


def test_lemma_square_bookkeeping_multiplicity():
    cert = verify_lemma_square()
    row = next(c for c in cert.checks if c.name.startswith("bookkeeping"))
    assert row.status == PASS
    assert "1" in row.witness


def test_perturbed_center_fails_with_mismatch_variable():
    cert = perturbed_square_certificate()
    assert cert.status == FAIL
    failing = [c for c in cert.checks if c.status == FAIL and c.name.startswith("square:")]
    assert failing
    assert any("first mismatching variable: z3" in c.witness for c in failing)


# ---------------------------------------------------------------- tower


def test_tower_k1():
    tower = build_tower(1)
    assert tower.passed
    final = tower.level(0)
    assert final.hypersurface.equation == final.chart.poly("u1_0^2 + u2_0^2 + u3_0^2 - 1")
    assert final.point is None
    assert tower.level(1).transform_multiplicity == 2


def test_tower_k3_exponent_chain():
    tower = build_tower(3)
    for j, exponent in ((2, 4), (1, 2), (0, 0)):
        level = tower.level(j)
        expected = cone_equation(level.chart, j)
        assert level.hypersurface.equation == expected
        assert exponent == 2 * j
    # center shapes at every level, j = 3, 2, 1, 0
    for j in range(3, -1, -1):
        level = tower.level(j)
        expected = tower_center(level.chart, j)
        assert level.center.generators == expected.generators


def test_tower_rejects_k0():
    with pytest.raises(ValidationError):
        build_tower(0)


def test_tower_squares_commute_k4():
    tower = build_tower(4)
    assert len(tower.squares) == 4
    for square in tower.squares:
        for pair in square.pairs:
            assert pair.equal, pair.name


def test_tower_multiplicities_all_two():
    for k in (1, 2, 3):
        tower = build_tower(k)
        for j in range(k, 0, -1):
            assert tower.level(j).transform_multiplicity == 2


def test_tower_serialization_roundtrip():
    tower = build_tower(2)
    doc = tower_to_dict(tower)
    assert doc["schema"] == "tower/1"
    assert doc["k"] == 2
    assert len(doc["levels"]) == 3
    text = tower_to_json(tower)
    assert json.loads(text) == doc
    # byte-identical across rebuilds
    assert tower_to_json(build_tower(2)) == text


def test_tower_off_chart_transforms_shape():
    tower = build_tower(2)
    offs = tower.level(2).off_chart_transforms
    assert len(offs) == 3
    h, mult = offs[0]
    assert mult == 2
    assert h.equation == h.chart.poly("1 + u2_1^2 + u3_1^2 - u1_1^2*u4_1^4")
