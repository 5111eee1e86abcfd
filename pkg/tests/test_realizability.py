"""Branch profiles, the two witness solvers, and the divisibility corollary."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primejac import (
    BranchProfile,
    GFun,
    InvalidInputError,
    MultiplicityProfile,
    RealizabilityVerdict,
    a_from_b,
    brute_force_b,
    classify,
    divisibility_propagates,
    odd_part,
    odd_uniqueness_check,
    solve_b,
    validate_instance,
)


def branch(p, g, values):
    return BranchProfile.from_values(validate_instance(p, g), values)


def profile(p, g, values):
    return MultiplicityProfile.from_values(validate_instance(p, g), values)


def witness_tuples(witnesses):
    return [w.value_tuple() for w in witnesses]


# -- BranchProfile invariants ----------------------------------------------------


def test_branch_profile_accepts_valid():
    bp = branch(3, 2, (2, 2))
    assert bp.value_tuple() == (2, 2)
    assert bp.to_json_dict() == {"p": 3, "g": 2, "b": [2, 2]}


def test_branch_profile_rejects_wrong_sum():
    with pytest.raises(InvalidInputError):
        branch(3, 2, (2, 1))


def test_branch_profile_rejects_divisibility_failure():
    # sum is right (4) but 1*1 + 3*2 = 7 is not divisible by 3
    with pytest.raises(InvalidInputError) as err:
        branch(3, 2, (1, 3))
    assert "divisible" in str(err.value)


def test_branch_profile_rejects_negative_or_fractional():
    with pytest.raises(InvalidInputError):
        branch(3, 2, (5, -1))
    with pytest.raises(InvalidInputError):
        BranchProfile(validate_instance(3, 2), GFun(3, ("3/2", "5/2")))


# -- the induced multiplicity profile ---------------------------------------------


def test_a_from_b_values():
    assert a_from_b(branch(3, 2, (2, 2))).value_tuple() == (1, 1)
    assert a_from_b(branch(3, 3, (1, 4))).value_tuple() == (1, 2)
    assert a_from_b(branch(5, 4, (1, 1, 1, 1))).value_tuple() == (1, 1, 1, 1)


def test_a_from_b_is_admissible_and_symmetric():
    for vals in ((0, 3), (3, 0), (2, 2)):
        g = sum(vals) - 2
        bp = branch(3, g, vals)
        prof = a_from_b(bp)
        half = prof.instance.half_sum
        assert prof.a.value_at(1) + prof.a.value_at(-1) == half


# -- brute force oracle ------------------------------------------------------------


def test_brute_force_known_cases():
    assert witness_tuples(brute_force_b(profile(3, 2, (1, 1)))) == [(2, 2)]
    assert brute_force_b(profile(3, 2, (2, 0))) == []
    assert brute_force_b(profile(3, 2, (0, 2))) == []
    assert witness_tuples(brute_force_b(profile(3, 1, (0, 1)))) == [(0, 3)]


def test_brute_force_p5():
    assert witness_tuples(brute_force_b(profile(5, 2, (1, 1, 0, 0)))) == [(2, 1, 0, 0)]
    assert witness_tuples(brute_force_b(profile(5, 4, (1, 1, 1, 1)))) == [
        (0, 2, 2, 0), (1, 1, 1, 1), (2, 0, 0, 2),
    ]


# -- linear-algebra solver -----------------------------------------------------------


def test_solve_b_matches_brute_force_on_known_cases():
    for p, g, a in (
        (3, 2, (1, 1)),
        (3, 2, (2, 0)),
        (3, 1, (0, 1)),
        (5, 2, (1, 1, 0, 0)),
        (5, 4, (1, 1, 1, 1)),
        (5, 4, (2, 0, 2, 0)),
    ):
        prof = profile(p, g, a)
        assert witness_tuples(solve_b(prof)) == witness_tuples(brute_force_b(prof))


def test_solve_b_exhaustive_small():
    from primejac import enumerate_admissible

    for p, g in ((3, 5), (5, 6), (7, 3)):
        for prof in enumerate_admissible(validate_instance(p, g)):
            assert witness_tuples(solve_b(prof)) == witness_tuples(brute_force_b(prof))


def test_p3_witness_unique_when_it_exists():
    from primejac import enumerate_admissible

    for g in range(1, 13):
        for prof in enumerate_admissible(validate_instance(3, g)):
            assert len(solve_b(prof)) <= 1


def test_round_trip_small():
    from primejac import _kernels

    for p, s in ((3, 6), (5, 5), (7, 4)):
        g = (s - 2) * (p - 1) // 2
        inst = validate_instance(p, g)
        for b_tuple, _ in _kernels.scan_valid(p, s):
            bp = BranchProfile.from_values(inst, b_tuple)
            assert b_tuple in witness_tuples(solve_b(a_from_b(bp)))


# -- classification -------------------------------------------------------------------


def test_classify_p3_g2():
    verdicts = classify(validate_instance(3, 2))
    assert [(v.profile.value_tuple(), v.is_jacobian_compatible) for v in verdicts] == [
        ((0, 2), False), ((1, 1), True), ((2, 0), False),
    ]
    assert witness_tuples(verdicts[1].witnesses) == [(2, 2)]


def test_classify_p3_g1_all_realizable():
    verdicts = classify(validate_instance(3, 1))
    assert all(v.is_jacobian_compatible for v in verdicts)
    assert len(verdicts) == 2


def test_classify_p3_g7_counts():
    verdicts = classify(validate_instance(3, 7))
    assert len(verdicts) == 8
    assert sum(v.is_jacobian_compatible for v in verdicts) == 4


def test_verdict_validation():
    prof = profile(3, 2, (1, 1))
    with pytest.raises(InvalidInputError):
        RealizabilityVerdict(profile=prof, witnesses=(), is_jacobian_compatible=True)


def test_verdict_serialization():
    verdict = classify(validate_instance(3, 2))[1]
    assert verdict.to_json_dict() == {
        "a": [1, 1],
        "jacobian_compatible": True,
        "witnesses": [[2, 2]],
    }


# -- odd part uniqueness ----------------------------------------------------------------


def test_odd_uniqueness_trivial_cases():
    assert odd_uniqueness_check(profile(3, 2, (1, 1)))
    assert odd_uniqueness_check(profile(3, 2, (2, 0)))  # vacuous: no witnesses


def test_odd_uniqueness_with_multiple_witnesses():
    prof = profile(5, 6, (1, 1, 2, 2))
    witnesses = solve_b(prof)
    assert witness_tuples(witnesses) == [(0, 1, 2, 2), (1, 0, 1, 3)]
    parts = {odd_part(w.b) for w in witnesses}
    assert len(parts) == 1
    assert odd_uniqueness_check(prof)
    assert odd_uniqueness_check(profile(5, 4, (1, 1, 1, 1)))


# -- the divisibility corollary -----------------------------------------------------------


def test_divisibility_propagates_known_values():
    assert divisibility_propagates(GFun(5, (1, 1, 1, 1)))
    assert not divisibility_propagates(GFun(5, (1, 0, 0, 0)))
    assert divisibility_propagates(GFun(3, (2, 2)))


def test_divisibility_requires_integer_values():
    with pytest.raises(InvalidInputError):
        divisibility_propagates(GFun(3, ("1/2", "1/2")))


@settings(deadline=None)
@given(st.data())
def test_divisibility_point_tests_always_agree(data):
    # the one-point test and the all-points test coincide for every integer c
    p = data.draw(st.sampled_from((3, 5, 7, 11, 13)))
    values = data.draw(st.tuples(*([st.integers(-20, 20)] * (p - 1))))
    divisibility_propagates(GFun(p, values))  # must never raise
