"""Blow-up charts, center straightening, and strict transforms.

Two kinds of centers occur in the construction: points (the origin of an
ambient chart) and triangular codimension-2 complete intersections, each
generator isolating one variable.  Both blow-ups are presented by explicit
polynomial chart maps; the strict transform of a hypersurface strips the
maximal power of the exceptional coordinate from its pullback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charts import Chart, Hypersurface, SubstitutionMap, compose_maps, maps_equal
from .errors import NotTriangularError, ValidationError, ZeroInputError
from .gaussian import ONE
from .multipoly import MultiPoly, extract_variable_power


@dataclass(frozen=True)
class SurfaceCenter:
    """Codimension-2 center cut out by two triangular generators.

    Each generator has the form ``var - r`` where ``r`` only involves
    variables strictly later than ``var`` in the chart order; the two
    isolated variables are distinct.
    """

    chart: Chart
    generators: tuple
    isolated: tuple

    def __post_init__(self):
        if len(self.generators) != 2 or len(self.isolated) != 2:
            raise ValidationError("surface centers carry exactly two generators")
        if self.isolated[0] == self.isolated[1]:
            raise NotTriangularError("the two generators must isolate distinct variables")
        for gen, var in zip(self.generators, self.isolated):
            _triangular_rest(gen, var, self.chart)

    def rests(self) -> tuple:
        """The polynomials r with generator = var - r."""
        return tuple(
            _triangular_rest(gen, var, self.chart)
            for gen, var in zip(self.generators, self.isolated)
        )

    def contains_point(self, point) -> bool:
        values = dict(zip(self.chart.variables, point))
        return all(not g.evaluate(values) for g in self.generators)


def _triangular_rest(gen: MultiPoly, var: str, chart: Chart) -> MultiPoly:
    """Check ``gen = var - r`` with r over strictly later variables; return r."""
    if gen.variables != chart.variables:
        raise NotTriangularError(f"generator {gen} is not over chart {chart.id}")
    var_idx = chart.variables.index(var)
    lead = tuple(1 if i == var_idx else 0 for i in range(len(chart.variables)))
    if gen.terms.get(lead) != ONE:
        raise NotTriangularError(f"generator {gen} does not isolate {var} with coefficient 1")
    rest = MultiPoly(chart.variables, {lead: ONE}) - gen
    for exps in rest.terms:
        for i, e in enumerate(exps):
            if e and i <= var_idx:
                raise NotTriangularError(
                    f"generator {gen}: remainder involves {chart.variables[i]}, "
                    f"which is not later than {var}"
                )
    return rest


@dataclass(frozen=True)
class BlowupChart:
    chart: Chart
    to_base: SubstitutionMap
    exceptional: str


@dataclass(frozen=True)
class BlowupStep:
    """One blow-up presented as a list of charts mapping to the base chart."""

    kind: str  # "point" or "codim2"
    base: Chart
    charts: tuple
    distinguished: int | None = None
    overlap: tuple | None = None  # (t_var, s_var) for codim2 charts

    def chart(self, index: int) -> BlowupChart:
        return self.charts[index]


def point_blowup_charts(base: Chart, new_variables, id_prefix: str, level=None) -> BlowupStep:
    """Blow up the origin of ``base``: one chart per direction.

    Chart ``i`` keeps ``new_variables[i]`` as the exceptional coordinate and
    maps ``base_j = u_j * u_i`` for ``j != i``, ``base_i = u_i``.
    """
    n = len(base.variables)
    if n < 2:
        raise ValidationError("point blow-ups need an ambient dimension of at least 2")
    new_variables = tuple(new_variables)
    if len(new_variables) != n:
        raise ValidationError(f"need {n} new variable names, got {len(new_variables)}")
    level = base.level if level is None else level
    charts = []
    for i in range(n):
        chart = Chart(f"{id_prefix}.c{i + 1}", new_variables, level)
        exc = chart.var(new_variables[i])
        assignment = {}
        for j, base_var in enumerate(base.variables):
            assignment[base_var] = exc if j == i else chart.var(new_variables[j]) * exc
        to_base = SubstitutionMap(chart, base, assignment, f"{id_prefix}.g{i + 1}")
        charts.append(BlowupChart(chart, to_base, new_variables[i]))
    return BlowupStep(kind="point", base=base, charts=tuple(charts), distinguished=n - 1)


def straighten_center(center: SurfaceCenter, new_names, chart_id: str):
    """Coordinate change putting the center at {v1 = v2 = 0}.

    ``new_names`` are the four straightened names ``(p, a, q, b)``; ``p`` and
    ``q`` take the values of the two generators, ``a`` and ``b`` rename the
    free variables in ambient order.  Returns ``(forward, inverse)`` with the
    forward map going straightened -> ambient; both directions are polynomial
    and the round trips are verified symbolically.
    """
    ambient = center.chart
    if len(ambient.variables) != 4:
        raise ValidationError("straightening expects a 4-variable ambient chart")
    p_name, a_name, q_name, b_name = new_names
    iso1, iso2 = center.isolated
    free = [v for v in ambient.variables if v not in center.isolated]
    straight = Chart(chart_id, (p_name, a_name, q_name, b_name), ambient.level)

    # inverse: ambient -> straight; p and q read off the generators
    inverse_assign = {
        p_name: center.generators[0],
        q_name: center.generators[1],
        a_name: MultiPoly.variable(ambient.variables, free[0]),
        b_name: MultiPoly.variable(ambient.variables, free[1]),
    }
    inverse = SubstitutionMap(ambient, straight, inverse_assign, f"{chart_id}.straighten")

    # forward: straight -> ambient by back-substitution, later isolated first
    rests = center.rests()
    images = {
        free[0]: straight.var(a_name),
        free[1]: straight.var(b_name),
    }
    order = sorted(
        zip(center.isolated, (p_name, q_name), rests),
        key=lambda item: ambient.variables.index(item[0]),
        reverse=True,
    )
    from .multipoly import substitute as _substitute

    for iso_var, new_var, rest in order:
        partial = {v: images[v] for v in images}
        for missing in ambient.variables:
            partial.setdefault(missing, straight.zero_poly())
        images[iso_var] = straight.var(new_var) + _substitute(rest, partial)
    forward = SubstitutionMap(
        straight, ambient, {v: images[v] for v in ambient.variables}, f"{chart_id}.unstraighten"
    )

    # round trips must be the identity, exactly
    if not maps_equal(compose_maps(inverse, forward), SubstitutionMap.identity(straight)):
        raise NotTriangularError("straightening round trip (straight side) failed")
    if not maps_equal(compose_maps(forward, inverse), SubstitutionMap.identity(ambient)):
        raise NotTriangularError("straightening round trip (ambient side) failed")
    # the center must pull back to {p = q = 0}
    for gen, expected in zip(center.generators, (p_name, q_name)):
        if forward.pullback(gen) != straight.var(expected):
            raise NotTriangularError("center does not straighten to {v1 = v2 = 0}")
    return forward, inverse


def codim2_blowup_charts(
    base: Chart, v1: str, v2: str, t_name: str, s_name: str, id_prefix: str
) -> BlowupStep:
    """Blow up {v1 = v2 = 0} in a chart where the center is already straight.

    Chart T substitutes ``v1 = t*v2`` (exceptional ``v2``); chart S
    substitutes ``v2 = s*v1`` (exceptional ``v1``); on the overlap t = 1/s.
    """
    if v1 not in base.variables or v2 not in base.variables:
        raise ValidationError(f"center variables {v1}, {v2} must belong to chart {base.id}")

    def build(replaced, kept, new_var, tag):
        variables = tuple(new_var if v == replaced else v for v in base.variables)
        chart = Chart(f"{id_prefix}.{tag}", variables, base.level)
        assignment = {}
        for v in base.variables:
            if v == replaced:
                assignment[v] = chart.var(new_var) * chart.var(kept)
            else:
                assignment[v] = chart.var(v)
        to_base = SubstitutionMap(chart, base, assignment, f"{id_prefix}.{tag}map")
        return BlowupChart(chart, to_base, kept)

    chart_t = build(v1, v2, t_name, "T")
    chart_s = build(v2, v1, s_name, "S")
    return BlowupStep(
        kind="codim2",
        base=base,
        charts=(chart_t, chart_s),
        distinguished=0,
        overlap=(t_name, s_name),
    )


def surface_blowup(
    center: SurfaceCenter,
    straight_names,
    t_name: str,
    s_name: str,
    straight_id: str,
    id_prefix: str,
):
    """Blow up a triangular codim-2 center, charts composed to the ambient.

    Convenience pipeline: straighten the center, blow up {p = q = 0}, and
    compose each chart map with the unstraightening so the returned step maps
    directly into the center's ambient chart.  Returns (step, forward,
    inverse) with the straightening pair.
    """
    forward, inverse = straighten_center(center, straight_names, straight_id)
    straight = forward.source
    p_name, _, q_name, _ = straight_names
    raw = codim2_blowup_charts(straight, p_name, q_name, t_name, s_name, id_prefix)
    charts = tuple(
        BlowupChart(bc.chart, compose_maps(forward, bc.to_base), bc.exceptional)
        for bc in raw.charts
    )
    step = BlowupStep(
        kind="codim2",
        base=center.chart,
        charts=charts,
        distinguished=0,
        overlap=raw.overlap,
    )
    return step, forward, inverse


def strict_transform(h: Hypersurface, step: BlowupStep, chart_index: int):
    """Strict transform of ``h`` in one blow-up chart, with its multiplicity.

    The total transform is recoverable as exceptional^mult * strict.
    """
    if h.chart.id != step.base.id:
        raise ValidationError(f"hypersurface lives on {h.chart.id}, not on {step.base.id}")
    bc = step.chart(chart_index)
    pullback = bc.to_base.pullback(h.equation)
    if pullback.is_zero():
        raise ZeroInputError("pullback of the hypersurface is identically zero")
    mult, quotient = extract_variable_power(pullback, bc.exceptional)
    return Hypersurface(bc.chart, quotient), mult


def center_strict_transform(center: SurfaceCenter, step: BlowupStep, chart_index: int) -> SurfaceCenter:
    """Generator-wise strict transform of a codim-2 center.

    Each generator is pulled back and stripped of its exceptional power; the
    result is validated to be triangular again (isolating the corresponding
    new variables), which is exactly the shape the tower construction needs.
    """
    bc = step.chart(chart_index)
    new_gens = []
    for gen in center.generators:
        pullback = bc.to_base.pullback(gen)
        if pullback.is_zero():
            raise ZeroInputError("pullback of a center generator is identically zero")
        _, quotient = extract_variable_power(pullback, bc.exceptional)
        new_gens.append(quotient)
    ambient_idx = [center.chart.variables.index(v) for v in center.isolated]
    new_isolated = tuple(bc.chart.variables[i] for i in ambient_idx)
    return SurfaceCenter(bc.chart, tuple(new_gens), new_isolated)


def exceptional_divisor(step: BlowupStep, chart_index: int) -> Hypersurface:
    """The exceptional divisor in one chart: the zero locus of the exceptional coordinate."""
    bc = step.chart(chart_index)
    return Hypersurface(bc.chart, bc.chart.var(bc.exceptional))


def center_pullback_divisible(center_polys, step: BlowupStep, chart_index: int) -> bool:
    """Every center generator pulls back divisibly by the exceptional coordinate."""
    bc = step.chart(chart_index)
    for gen in center_polys:
        pullback = bc.to_base.pullback(gen)
        if pullback.is_zero():
            continue
        mult, _ = extract_variable_power(pullback, bc.exceptional)
        if mult < 1:
            return False
    return True


def overlap_cocycle_ok(step: BlowupStep) -> bool:
    """Verify the t = 1/s overlap of a codim-2 blow-up.

    Substituting t -> 1/s and v2 -> s*v1 into the T-chart map must reproduce
    the S-chart map; the identity is checked after clearing the minimal power
    of s, i.e. s^d * T_map(1/s, s*v1) == s^d * S_map for d = deg_t.
    """
    if step.kind != "codim2" or step.overlap is None:
        raise ValidationError("overlap check only applies to codim-2 blow-ups")
    t_name, s_name = step.overlap
    chart_t, chart_s = step.charts
    v2 = chart_t.exceptional  # kept coordinate in the T chart
    v1 = chart_s.exceptional
    s_vars = chart_s.chart.variables
    # images of the T-chart variables inside the S-chart (v2 -> s*v1, others fixed)
    images = {}
    for v in chart_t.chart.variables:
        if v == v2:
            images[v] = chart_s.chart.var(s_name) * chart_s.chart.var(v1)
        elif v == t_name:
            images[v] = None  # handled via the cleared denominator below
        else:
            images[v] = MultiPoly.variable(s_vars, v)
    from .multipoly import substitute as _substitute

    s_poly = MultiPoly.variable(s_vars, s_name)
    for base_var in step.base.variables:
        a = chart_t.to_base.assignment[base_var]
        d = max(a.degree_in(t_name), 0)
        # s^d * a(t -> 1/s): replace t^e by s^(d-e) after substituting v2
        cleared = MultiPoly.zero(s_vars)
        for e in range(d + 1):
            coeff = a.coefficient_in(t_name, e)
            assignment = {v: (images[v] if images[v] is not None else s_poly) for v in a.variables}
            assignment[t_name] = MultiPoly.constant(s_vars, ONE)
            image = _substitute(coeff, assignment)
            cleared = cleared + image * s_poly ** (d - e)
        expected = chart_s.to_base.assignment[base_var] * s_poly ** d
        if cleared != expected:
            return False
    return True
