"""Superelliptic curve models and the differential eigenspace count."""

from fractions import Fraction

import pytest

from primejac import (
    BranchProfile,
    InvalidInputError,
    a_from_b,
    build_curve,
    differential_multiplicities,
    fixed_points,
    validate_instance,
)


def branch(p, g, values):
    return BranchProfile.from_values(validate_instance(p, g), values)


def test_build_curve_p3_g2():
    curve = build_curve(branch(3, 2, (2, 2)))
    assert len(curve.branch_points) == 4
    assert [pt.exponent for pt in curve.branch_points] == [1, 1, 2, 2]
    assert [pt.alpha for pt in curve.branch_points] == [1, 2, 3, 4]
    assert curve.f_degree == 6
    assert curve.genus == 2
    assert curve.fixed_point_count == 4
    assert curve.class_counts() == {1: 2, 2: 2}


def test_build_curve_p5():
    curve = build_curve(branch(5, 4, (1, 1, 1, 1)))
    assert [pt.exponent for pt in curve.branch_points] == [1, 3, 2, 4]
    assert curve.f_degree == 10
    assert curve.f_degree % 5 == 0
    assert curve.genus == 4


def test_build_curve_p3_g1():
    curve = build_curve(branch(3, 1, (0, 3)))
    assert len(curve.branch_points) == 3
    assert all(pt.exponent == 2 for pt in curve.branch_points)
    assert curve.f_degree == 6
    assert curve.genus == 1


def test_build_curve_custom_alphas():
    bp = branch(3, 2, (2, 2))
    curve = build_curve(bp, alphas=[0, Fraction(1, 2), -3, 7])
    assert [pt.alpha for pt in curve.branch_points] == [0, Fraction(1, 2), -3, 7]
    assert curve.equation_string() == "y^3 = x * (x - 1/2) * (x + 3)^2 * (x - 7)^2"


def test_build_curve_rejects_bad_alphas():
    bp = branch(3, 2, (2, 2))
    with pytest.raises(InvalidInputError):
        build_curve(bp, alphas=[1, 1, 2, 3])
    with pytest.raises(InvalidInputError):
        build_curve(bp, alphas=[1, 2, 3])


def test_fixed_points_records():
    curve = build_curve(branch(3, 2, (2, 2)))
    records = fixed_points(curve)
    assert len(records) == curve.fixed_point_count
    assert [r.epsilon_exponent for r in records] == [1, 1, 2, 2]

    curve5 = build_curve(branch(5, 4, (1, 1, 1, 1)))
    records5 = fixed_points(curve5)
    assert [r.epsilon_exponent for r in records5] == [1, 2, 3, 4]
    assert [r.ord_y for r in records5] == [1, 3, 2, 4]
    for r in records5:
        assert (r.epsilon_exponent * r.ord_y) % 5 == 1


def test_differential_multiplicities_known_values():
    assert differential_multiplicities(build_curve(branch(3, 2, (2, 2)))).value_tuple() == (1, 1)
    assert differential_multiplicities(build_curve(branch(5, 4, (1, 1, 1, 1)))).value_tuple() == (1, 1, 1, 1)
    assert differential_multiplicities(build_curve(branch(3, 1, (0, 3)))).value_tuple() == (0, 1)


def test_differential_count_agrees_with_convolution_route_small():
    from primejac import _kernels

    for p, s in ((3, 7), (5, 6), (7, 5)):
        g = (s - 2) * (p - 1) // 2
        inst = validate_instance(p, g)
        for b_tuple, a_tuple in _kernels.scan_valid(p, s):
            bp = BranchProfile.from_values(inst, b_tuple)
            curve = build_curve(bp)
            assert differential_multiplicities(curve) == a_from_b(bp)
            assert differential_multiplicities(curve).value_tuple() == a_tuple


def test_riemann_hurwitz_and_counts():
    for p, g, values in ((3, 4, (3, 3)), (5, 6, (0, 1, 2, 2)), (7, 3, (1, 1, 0, 1, 0, 0))):
        curve = build_curve(branch(p, g, values))
        s = curve.fixed_point_count
        assert 2 * g - 2 == -2 * p + (p - 1) * s
        assert curve.genus == g
        assert curve.f_degree % p == 0
        counts = curve.class_counts()
        assert tuple(counts[h] for h in range(1, p)) == values


def test_curve_serialization():
    curve = build_curve(branch(3, 2, (2, 2)))
    data = curve.to_json_dict()
    assert data["p"] == 3 and data["g"] == 2
    assert data["branch"][0] == {"alpha": "1/1", "h": 1, "e": 1}
    assert data["f_degree"] == 6
    assert data["genus"] == 2
    assert data["fixed_points"] == 4
    assert curve.equation_string() == "y^3 = (x - 1) * (x - 2) * (x - 3)^2 * (x - 4)^2"
