import pytest

import tautchi

P2 = {"type": "p2"}
QUADRIC = {"type": "p1xp1"}
F1 = {"type": "fe", "e": 1}


def constant(series, n):
    """The constant (u = v = 0) part of the Q^n coefficient, as a string."""
    for k, poly in series["coefficients"]:
        if k == n:
            for term in poly:
                if term["u"] == 0 and term["v"] == 0:
                    return term["value"]
            return "0"
    raise AssertionError(f"no Q^{n} coefficient")


def test_chi_matches_the_plane_formula():
    # chi(P^2, O(d)) = (d+1)(d+2)/2
    for d, expected in [(0, 1), (1, 3), (2, 6), (5, 21), (-1, 0), (-2, 0), (-3, 1), (-4, 3)]:
        assert tautchi.chi(P2, [d, 0, 0]) == expected


def test_chi_matches_the_quadric_formula():
    for a in range(-2, 4):
        for b in range(-2, 4):
            assert tautchi.chi(QUADRIC, [a, b, 0, 0]) == (a + 1) * (b + 1)


def test_combine_routes_agree():
    out = tautchi.combine([1, 2], [3, 4], [5, 6], 2)
    assert out["agree"] is True
    assert out["log"] == out["direct"] == out["strata"]
    # c_1 = a_1 + b_1 - d_1 = -1
    assert out["direct"][0] == [{"u": 0, "v": 0, "value": "-1"}]


def test_localization_agrees_with_the_prediction():
    assert tautchi.hilb_series(P2, [1, 0, 0], [2, 0, 0], 2) == tautchi.predicted_series(
        P2, [1, 0, 0], [2, 0, 0], 2
    )
    report = tautchi.check_conjecture(P2, [1, 0, 0], [2, 0, 0], 2)
    assert report["pass"] is True


def test_closed_form_equals_the_exponential_form():
    assert tautchi.predicted_series(F1, [1, 0, -1, 2], [0, 1, 1, 0], 5) == (
        tautchi.predicted_closed_form(F1, [1, 0, -1, 2], [0, 1, 1, 0], 5)
    )


def test_trivial_bundles_give_the_structure_sheaf_series():
    series = tautchi.hilb_series(QUADRIC, [0, 0, 0, 0], [0, 0, 0, 0], 3)
    # chi(O) = 1 on the quadric, so the u = v = 0 part is 1/(1 - Q).
    for n in range(4):
        assert constant(series, n) == "1"


def test_degeneration_report_passes():
    out = tautchi.check_degeneration(P2, 0, [1, 0, 0], [2, 0, 0], 1, 1, 1)
    assert out["report"]["pass"] is True
    assert out["scenario"]["provenance"]


def test_generator_rows():
    rows = tautchi.generators(2)
    assert len(rows) == 10
    assert all("predicted" in row for row in rows)


def test_explicit_specialization():
    a = tautchi.hilb_series(P2, [1, 0, 0], [2, 0, 0], 2)
    b = tautchi.hilb_series(P2, [1, 0, 0], [2, 0, 0], 2, spec=(1, 3))
    assert a == b


def test_exceptions_are_mapped():
    with pytest.raises(tautchi.UsageError):
        tautchi.combine("not json", [1], [1], 1)
    with pytest.raises(tautchi.InvalidFanError):
        tautchi.chi({"type": "fan", "rays": [[1, 0], [0, 1]]}, [0, 0])
    with pytest.raises(tautchi.InadmissibleSpecializationError):
        tautchi.hilb_series(P2, [0, 0, 0], [0, 0, 0], 2, spec=(1, 1))
