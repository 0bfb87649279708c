import pytest
from hypothesis import given, settings, strategies as st

from nordcodes.errors import (
    ClosureViolation,
    NotCoprime,
    ProfileBijectionViolation,
    ZeroExcludedViolation,
)
from nordcodes.semigroup import (
    GoodBasisProfile,
    NumericalSemigroup,
    TwoPointSemigroup,
    hyperelliptic_profile,
    ns_from_generators,
    tps_from_gapset,
)

HERMITIAN_Q2_GAPSET = {(0, 1), (1, 0)}


def brute_gaps(gens, bound):
    """Reachability oracle: which n in [1, bound] are not sums of generators."""
    reach = {0}
    for n in range(1, bound + 1):
        if any(n - g in reach for g in gens):
            reach.add(n)
    return {n for n in range(1, bound + 1) if n not in reach}


def test_from_generators_examples():
    assert ns_from_generators([2, 3]).gaps == {1}
    assert ns_from_generators([3, 4]).gaps == brute_gaps([3, 4], 12) == {1, 2, 5}
    assert ns_from_generators([1]).gaps == frozenset()
    with pytest.raises(NotCoprime):
        ns_from_generators([4, 6])


def test_queries():
    S = ns_from_generators([2, 3])
    assert 1 not in S
    assert S.largest_gap == 1
    assert S.genus == 1
    assert S.nth_nongap(0) == 0
    assert S.nth_nongap(2) == 3  # nongaps 0, 2, 3, ...


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 15), min_size=2, max_size=4))
def test_generators_match_oracle(gens):
    from math import gcd
    from functools import reduce

    if reduce(gcd, gens) != 1:
        with pytest.raises(NotCoprime):
            ns_from_generators(gens)
        return
    S = ns_from_generators(gens)
    bound = max(S.largest_gap + max(gens), max(gens) * 2)
    assert S.gaps == brute_gaps(gens, bound)
    # closure on the oracle side too
    for x in range(1, bound):
        for y in range(1, bound - x):
            if x in S and y in S:
                assert x + y in S


def test_closure_violation_detected():
    with pytest.raises(ClosureViolation):
        NumericalSemigroup(frozenset({4}))  # 2 + 2 = 4 with 2 a nongap
    with pytest.raises(ZeroExcludedViolation):
        NumericalSemigroup(frozenset({0, 1}))


# -- two-point semigroups ---------------------------------------------------


def closure_oracle(gapset, box):
    for xa in range(box + 1):
        for xb in range(box + 1):
            if (xa, xb) in gapset or (xa, xb) == (0, 0):
                continue
            for ya in range(box + 1 - xa):
                for yb in range(box + 1 - xb):
                    if (ya, yb) in gapset:
                        continue
                    if (xa + ya, xb + yb) in gapset:
                        return (xa, xb), (ya, yb)
    return None


def test_tps_examples():
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    assert T.genus2 == 2
    assert closure_oracle(T.gapset, 4) is None
    assert tps_from_gapset(set()).genus2 == 0
    with pytest.raises(ClosureViolation):
        tps_from_gapset({(2, 0)})  # (1,0) + (1,0)
    with pytest.raises(ZeroExcludedViolation):
        tps_from_gapset({(0, 0)})


def test_tps_contains():
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    assert (0, 0) in T
    assert (1, 0) not in T
    assert (1, 1) in T  # realized by x^2/y on the curve


def test_projections():
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    assert T.project_rho().gaps == {1}
    assert T.project_sigma().gaps == {1}
    empty = tps_from_gapset(set())
    assert empty.project_rho().gaps == frozenset()
    assert T.project_rho().genus <= T.genus2
    assert T.project_sigma().genus <= T.genus2


def column_min_oracle(gapset, i, box):
    return next(t for t in range(box + 2) if (i, t) not in gapset)


def test_profile_hermitian_q2():
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    prof = T.profile()
    assert dict(prof.entries) == {1: 1}
    assert prof.genus == 1 and prof.lambda_sigma == 1 and prof.s_index == 1


def test_profile_hermitian_q3():
    from nordcodes.hermitian import HermitianCurve

    T = HermitianCurve(3).two_point_semigroup()
    prof = T.profile()
    # column-minimum oracle over the [0,12]^2 box
    expected = {
        i: column_min_oracle(T.gapset, i, 12)
        for i in {a for a, b in T.gapset if b == 0}
    }
    assert dict(prof.entries) == expected == {1: 5, 2: 2, 5: 1}
    assert prof.lambda_sigma == 5 and prof.s_index == 1


def test_profile_empty():
    prof = tps_from_gapset(set()).profile()
    assert prof.genus == 0 and prof.entries == ()
    assert prof.lambda_sigma == 0 and prof.lambda_rho == 0 and prof.s_index == 0


def test_rows_and_columns_meet_semigroup():
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    box = T.box
    for i in range(box[0] + 2):
        assert any((i, t) in T for t in range(box[1] + 2))
        assert any((t, i) in T for t in range(box[0] + 2))


# -- profiles ---------------------------------------------------------------


def test_hyperelliptic_profile():
    p1 = hyperelliptic_profile(1)
    assert dict(p1.entries) == {1: 1}
    p2 = hyperelliptic_profile(2)
    assert dict(p2.entries) == {1: 1, 2: 2}
    assert p2.lambda_sigma == 2 and p2.s_index == 2
    p5 = hyperelliptic_profile(5)
    assert len(p5.entries) == 5 and p5.lambda_rho == 5


def test_gap_bijection_report():
    ok = hyperelliptic_profile(2).check_gap_bijection()
    assert ok["ok"]
    bad = GoodBasisProfile(genus=2, entries=((1, 1), (2, 1)))
    rep = bad.check_gap_bijection()
    assert not rep["ok"] and any("repeated" in v for v in rep["violations"])
    with pytest.raises(ProfileBijectionViolation):
        GoodBasisProfile.from_entries({1: 1, 2: 1})


def test_profile_json_roundtrip():
    prof = hyperelliptic_profile(3)
    again = GoodBasisProfile.from_json(prof.to_json())
    assert again == prof


def test_semigroup_json_roundtrip():
    S = ns_from_generators([3, 5])
    assert NumericalSemigroup.from_json(S.to_json()) == S
    T = tps_from_gapset(HERMITIAN_Q2_GAPSET)
    assert TwoPointSemigroup.from_json(T.to_json()) == T
