"""The fixed-point identity in Q(zeta_p) and the route cross-checks."""

from primejac import (
    BranchProfile,
    CyclotomicNumber,
    MultiplicityProfile,
    build_curve,
    fixed_points,
    identity_suite,
    lefschetz_check,
    trace_tau,
    validate_instance,
    zeta_pow,
)


def branch(p, g, values):
    return BranchProfile.from_values(validate_instance(p, g), values)


def test_trace_values():
    tau = trace_tau(MultiplicityProfile.from_values(validate_instance(3, 2), (1, 1)))
    assert tau.coords == (1, 1)
    assert tau == -1

    tau = trace_tau(MultiplicityProfile.from_values(validate_instance(3, 1), (0, 1)))
    assert tau == zeta_pow(3, 2)

    tau = trace_tau(MultiplicityProfile.from_values(validate_instance(5, 4), (1, 1, 1, 1)))
    assert tau == -1


def test_identity_p3_symmetric_case():
    report = lefschetz_check(build_curve(branch(3, 2, (2, 2))))
    assert report.holds
    assert report.tau == -1
    assert report.lhs == 2
    assert report.rhs == 2


def test_identity_p3_asymmetric_case():
    report = lefschetz_check(build_curve(branch(3, 1, (0, 3))))
    assert report.holds
    assert report.tau == zeta_pow(3, 2)
    assert report.lhs == CyclotomicNumber.one(3) - zeta_pow(3, 1)
    assert report.lhs.coords == (-2, -1)


def test_identity_p5_uniform_case():
    report = lefschetz_check(build_curve(branch(5, 4, (1, 1, 1, 1))))
    assert report.holds
    assert report.lhs == 2
    assert report.rhs == 2


def test_both_profile_routes_agree():
    for p, g, values in ((3, 2, (2, 2)), (5, 6, (1, 0, 1, 3)), (7, 6, (0, 1, 0, 1, 1, 1))):
        curve = build_curve(branch(p, g, values))
        assert lefschetz_check(curve).holds
        assert lefschetz_check(curve, use_convolution_profile=True).holds


def test_rhs_via_product_form_guard():
    # Multiply the identity by prod_P (1 - eps_P): the right side becomes
    # sum_P prod_{Q != P} (1 - eps_Q), with no division anywhere.  This
    # guards the closed-form inverse used by lefschetz_check.
    for p, g, values in ((3, 2, (2, 2)), (3, 1, (0, 3)), (5, 4, (1, 1, 1, 1)), (7, 3, (1, 1, 0, 1, 0, 0))):
        curve = build_curve(branch(p, g, values))
        report = lefschetz_check(curve)
        records = fixed_points(curve)
        one = CyclotomicNumber.one(p)
        factors = [one - zeta_pow(p, r.epsilon_exponent) for r in records]
        full_product = one
        for f in factors:
            full_product = full_product * f
        rhs_cleared = CyclotomicNumber.zero(p)
        for i in range(len(factors)):
            term = one
            for q, f in enumerate(factors):
                if q != i:
                    term = term * f
            rhs_cleared = rhs_cleared + term
        assert report.lhs * full_product == rhs_cleared
        assert report.rhs * full_product == rhs_cleared


def test_identity_suite_known_cases():
    assert identity_suite(branch(3, 2, (2, 2)))
    assert identity_suite(branch(5, 2, (2, 1, 0, 0)))


def test_identity_suite_p7_small_sweep():
    from primejac import _kernels

    inst = validate_instance(7, 3)
    tuples = _kernels.valid_branch_tuples(7, 3)
    assert len(tuples) == 8
    for b_tuple in tuples:
        assert identity_suite(BranchProfile.from_values(inst, b_tuple))


def test_report_serialization():
    report = lefschetz_check(build_curve(branch(3, 2, (2, 2))))
    data = report.to_json_dict()
    assert data["holds"] is True
    assert data["lhs"] == data["rhs"] == ["-2/1", "-2/1"]
    assert data["tau"] == ["1/1", "1/1"]
