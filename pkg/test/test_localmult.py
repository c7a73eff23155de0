
import pytest

from pysing.errors import (CommonComponentError, DegreeError, HilbertUnstableError, NonIsolatedError,
                           exit_code_for)
from pysing.helper import default_config
from pysing.ideal import (CHART_AFFINE, CHART_INFINITY, CHART_POINT, INFINITE, LocalPoint,
                          affine_multiplicity, count_distinct_points, groebner_basis, hilbert_multiplicity,
                          local_colength, projective_total_multiplicity, reduction_multiplicity)
from pysing.poly import ProjPoint, parse_poly


def polys(*texts, variables=("s", "t")):
    return [parse_poly(text, variables) for text in texts]


def maximal_power(k):
    return polys(*(f"s^{i}*t^{k - i}" for i in range(k + 1)))


ORIGIN = (0, 0)


def test_local_colength():
    assert local_colength(polys("s", "t^3"), ORIGIN) == 3
    assert local_colength(polys("s + t", "s*t"), ORIGIN) == 2
    assert local_colength(polys("s*t"), ORIGIN) == INFINITE
    assert local_colength(polys("s - 1", "t"), ORIGIN) == 0


def test_local_colength_ignores_other_points():
    # (s^2 - 1, t) has two simple zeros; only one sits at (1, 0)
    assert local_colength(polys("s^2 - 1", "t"), (1, 0)) == 1
    assert local_colength(polys("(s - 1)^2*(s + 1)", "t"), (1, 0)) == 2


@pytest.mark.parametrize("k", [1, 2, 3])
def test_multiplicity_of_maximal_powers(k):
    assert reduction_multiplicity(maximal_power(k), ORIGIN) == k * k


@pytest.mark.parametrize("k", [1, 2])
def test_hilbert_multiplicity_of_maximal_powers(k):
    assert hilbert_multiplicity(maximal_power(k), ORIGIN) == k * k


@pytest.mark.parametrize("gens, expected", [
    (("s", "t^3"), 3),
    (("s^2 + t^2", "s*t"), 4),
    (("s + t", "s*t"), 2),
])
def test_reduction_and_hilbert_agree(gens, expected):
    assert reduction_multiplicity(polys(*gens), ORIGIN) == expected
    assert hilbert_multiplicity(polys(*gens), ORIGIN) == expected


def test_multiplicity_below_colength():
    # e(<s^2, s*t, t^2>) = 4 while the colength is 3
    gens = polys("s^2", "s*t", "t^2")
    assert local_colength(gens, ORIGIN) == 3
    assert reduction_multiplicity(gens, ORIGIN) == 4


def test_multiplicity_at_translated_point():
    gens = polys("(s - 1)^2", "t + 2")
    assert reduction_multiplicity(gens, (1, -2)) == 2
    assert reduction_multiplicity(gens, ORIGIN) == 0


def test_non_isolated():
    with pytest.raises(NonIsolatedError):
        reduction_multiplicity(polys("s*t", "s^2"), ORIGIN)
    with pytest.raises(NonIsolatedError):
        hilbert_multiplicity(polys("s*t", "s^2"), ORIGIN)


def test_hilbert_multiplicity_needs_a_stable_difference():
    config = default_config()
    config["hilbert"]["max_level"] = config["hilbert"]["start_level"]
    with pytest.raises(HilbertUnstableError) as info:
        hilbert_multiplicity(maximal_power(2), ORIGIN, config)
    assert info.value.code == "HILBERT_UNSTABLE"
    assert info.value.details == {"last_value": 4, "max_level": 1}
    assert exit_code_for(info.value) == 4


def random_m_primary(rng, degree):
    """Two generic combinations of the monomials of one degree."""
    monoms = [f"s^{i}*t^{degree - i}" for i in range(degree + 1)]
    gens = []
    for _ in range(2):
        coeffs = rng.integers(-5, 6, size=len(monoms))
        coeffs[0] = coeffs[0] or 1
        coeffs[-1] = coeffs[-1] or 1
        gens.append(" + ".join(f"({int(c)})*{m}" for c, m in zip(coeffs, monoms)))
    return polys(*gens)


def test_complete_intersection_multiplicity_is_colength(rng):
    for degree in (1, 2):
        for _ in range(5):
            gens = random_m_primary(rng, degree)
            value = local_colength(gens, ORIGIN)
            if value == INFINITE:
                continue
            assert reduction_multiplicity(gens, ORIGIN) == value


def test_multiplicity_is_monotone():
    small = polys("s^2", "t^2")
    for extra in ("s*t", "s", "t", "s + t"):
        larger = small + polys(extra)
        assert reduction_multiplicity(small, ORIGIN) >= reduction_multiplicity(larger, ORIGIN)


def test_multiplicity_is_monotone_on_random_pairs(rng):
    pairs = 0
    while pairs < 10:
        small = random_m_primary(rng, 2)
        if local_colength(small, ORIGIN) == INFINITE:
            continue
        a, b = (int(c) for c in rng.integers(-4, 5, size=2))
        if not a and not b:
            continue
        larger = small + polys(f"({a})*s + ({b})*t")
        assert reduction_multiplicity(small, ORIGIN) >= reduction_multiplicity(larger, ORIGIN)
        pairs += 1


def test_local_point_chart():
    point = LocalPoint(ProjPoint((2, 0, 4)), chart=2)
    assert point.chart_variables == ("s", "t")
    assert point.affine_coordinates() == (0.5, 0)
    curves = point.localize(polys("s*u - t^2", variables=("s", "t", "u")))
    assert curves == polys("s - t^2")


def projective(*texts):
    return polys(*texts, variables=("s", "t", "u"))


@pytest.mark.parametrize("curves, total", [
    (("s*u", "t*u", "s*t"), 3),
    (("s", "t", "u"), 0),
    (("s^2 + t^2", "u"), 2),
    (("s", "t"), 1),
    (("s*u - t^2", "t*u"), 4),
])
def test_projective_total(curves, total):
    report = projective_total_multiplicity(projective(*curves))
    assert report.total == total
    assert report.agreement
    assert sum(report.per_chart.values()) == total


def test_projective_total_charts():
    report = projective_total_multiplicity(projective("s*u", "t*u", "s*t"))
    assert report.per_chart == {CHART_AFFINE: 1, CHART_INFINITY: 1, CHART_POINT: 1}
    assert report.to_dict()["total"] == 3


def test_projective_total_on_a_locus():
    curves = projective("s*u", "t*u", "s*t")
    report = projective_total_multiplicity(curves, locus=projective("u"))
    assert report.total == 2


def test_projective_total_errors():
    with pytest.raises(CommonComponentError):
        projective_total_multiplicity(projective("s*t", "s*u"))
    with pytest.raises(CommonComponentError):
        projective_total_multiplicity(projective("0"))
    with pytest.raises(DegreeError):
        projective_total_multiplicity(projective("s + 1", "t"))


def test_projective_total_is_seed_independent():
    curves = projective("s^2 - t*u", "t^2 - s*u")
    totals = {projective_total_multiplicity(curves, seed=seed).total for seed in range(3)}
    assert totals == {4}


def test_truncation_cap_from_config():
    config = default_config()
    config["truncation"]["factor"] = 1
    config["truncation"]["offset"] = 0
    assert local_colength(polys("s", "t^3"), ORIGIN, config) == 3


def test_count_distinct_points():
    assert count_distinct_points(groebner_basis(polys("s^2 - 1", "t"))) == 2
    assert count_distinct_points(groebner_basis(polys("s^2", "t"))) == 1
    assert count_distinct_points(groebner_basis(polys("s^2 + 1", "t^2 - t"))) == 4
    assert count_distinct_points(groebner_basis(polys("s", "s + 1"))) == 0


def test_affine_multiplicity():
    # s*u, t*u, s*t meet once in each chart
    curves = projective("s*u", "t*u", "s*t")
    assert affine_multiplicity(curves) == 1
    assert affine_multiplicity(projective("u*s", "u*t")) == 1
    assert affine_multiplicity(projective("u", "u")) == 0
    assert affine_multiplicity(projective("s^2 - 1", "t*u"), locus=projective("s - u")) == 1
    with pytest.raises(CommonComponentError):
        affine_multiplicity(projective("s*t", "s*u"))
