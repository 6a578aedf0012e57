import numpy as np
import pytest

from matguard.representations import GuardianMapKind, guardian_evaluate
from matguard.sweep import ParamFamily, refine_crossing, sweep

ROT = ParamFamily(np.array([[0.0, 1.0], [-1.0, 0.0]]), np.eye(2))
SHIFTED = ParamFamily(np.array([[-0.3, 1.0], [-1.0, -0.3]]), np.eye(2))


def located_events(result):
    return sorted(
        list(result.crossings) + list(result.touches), key=lambda c: c.theta
    )


# ------------------------------------------------------------ ParamFamily


def test_family_evaluation_linear_and_quadratic():
    fam = ParamFamily(np.eye(2), 2.0 * np.eye(2), -np.eye(2))
    assert np.array_equal(fam.at(3.0), (1 + 6 - 9) * np.eye(2))
    assert fam.n == 2


def test_family_validates_shapes():
    with pytest.raises(ValueError):
        ParamFamily(np.eye(2), np.eye(3))
    with pytest.raises(ValueError):
        ParamFamily(np.eye(2), np.eye(2), np.eye(4))
    with pytest.raises(ValueError):
        ParamFamily(np.zeros((2, 3)), np.zeros((2, 3)))


def test_family_json_round_trip():
    fam = ParamFamily(np.eye(2), np.array([[0.0, 1.0], [2.0, 0.0]]))
    back = ParamFamily.from_obj(fam.to_obj())
    assert np.array_equal(back.base, fam.base)
    assert np.array_equal(back.dir1, fam.dir1)
    assert back.dir2 is None

    quad = ParamFamily(np.eye(2), np.eye(2), 3.0 * np.eye(2))
    back = ParamFamily.from_obj(quad.to_obj())
    assert np.array_equal(back.dir2, 3.0 * np.eye(2))


def test_family_from_obj_rejects_bad_documents():
    from matguard.io import MatrixIOError

    good = ParamFamily(np.eye(2), np.eye(2)).to_obj()
    with pytest.raises(MatrixIOError):
        ParamFamily.from_obj("nope")
    missing = dict(good)
    del missing["dir1"]
    with pytest.raises(MatrixIOError):
        ParamFamily.from_obj(missing)
    wrong_n = dict(good)
    wrong_n["n"] = 5
    with pytest.raises(MatrixIOError):
        ParamFamily.from_obj(wrong_n)


# ------------------------------------------------------------------ sweep


def test_rotation_family_single_event_all_kinds():
    for kind in GuardianMapKind:
        res = sweep(ROT, kind, -1.0, 1.0, 21, refine=True)
        events = located_events(res)
        assert len(events) == 1
        assert abs(events[0].theta) <= 1e-8


def test_rotation_family_kron_sees_double_root_as_touch():
    # f_kron(theta) = 16 theta^2 (theta^2+1)^2 touches zero without a
    # sign change, so the grid zero is flagged, not bisected.
    res = sweep(ROT, "kron", -1.0, 1.0, 21)
    assert len(res.touches) == 1
    assert res.touches[0].detection == "grazing"
    assert not res.touches[0].refined
    assert res.crossings == ()


def test_rotation_family_add2_grid_zero_is_crossing():
    res = sweep(ROT, "add2", -1.0, 1.0, 21)
    assert len(res.crossings) == 1
    assert res.crossings[0].detection == "grid_zero"
    assert res.crossings[0].theta == 0.0
    assert res.touches == ()


@pytest.mark.parametrize("kind", ["add2", "schlaflian", "bialt"])
def test_shifted_family_bisection(kind):
    # 20 samples put no grid point near 0.3, forcing a genuine bracket.
    res = sweep(SHIFTED, kind, -1.0, 1.0, 20, refine=True)
    assert len(res.crossings) == 1
    c = res.crossings[0]
    assert c.detection == "sign_change"
    assert c.refined
    assert abs(c.theta - 0.3) <= 1e-8
    assert c.lo <= c.theta <= c.hi


def test_unrefined_sweep_reports_bracket_midpoint():
    res = sweep(SHIFTED, "add2", -1.0, 1.0, 20, refine=False)
    (c,) = res.crossings
    assert not c.refined
    assert c.width == c.hi - c.lo
    assert c.lo < 0.3 < c.hi


def test_zero_eigenvalue_crossing_needs_det_factor():
    # A(theta) = diag(theta, -1): g = theta - 1 stays nonzero at the
    # boundary crossing theta = 0; only f = det * g catches it.
    fam = ParamFamily(np.diag([0.0, -1.0]), np.diag([1.0, 0.0]))
    at_zero = guardian_evaluate("add2", fam.at(0.0))
    assert at_zero.g_value.sign != 0
    assert at_zero.f_value.sign == 0
    res = sweep(fam, "add2", -1.0, 1.0, 21, refine=True)
    assert any(abs(c.theta) <= 1e-8 for c in res.crossings)


def test_constant_stable_family_has_no_events():
    fam = ParamFamily(-np.eye(2), np.zeros((2, 2)))
    res = sweep(fam, "kron", -1.0, 1.0, 11)
    assert res.crossings == () and res.touches == ()
    assert all(s.report.f_value.sign != 0 for s in res.samples)
    assert all(s.max_re_lambda < 0 for s in res.samples)


def test_sweep_sample_table_fields():
    res = sweep(ROT, "add2", -1.0, 1.0, 5)
    obj = res.to_obj()
    assert len(obj["samples"]) == 5
    assert list(obj["samples"][0]) == ["theta", "f_sign", "f_logmag", "max_re_lambda"]
    assert obj["kind"] == "add2"


def test_sweep_validates_grid():
    with pytest.raises(ValueError):
        sweep(ROT, "add2", -1.0, 1.0, 1)
    with pytest.raises(ValueError):
        sweep(ROT, "add2", 1.0, -1.0, 10)
    with pytest.raises(ValueError):
        sweep(ROT, "add2", 0.0, 0.0, 10)


# ------------------------------------------------------- refine_crossing


def test_refine_crossing_shifted_family():
    for kind in ["add2", "schlaflian", "bialt"]:
        star = refine_crossing(SHIFTED, kind, 0.1, 0.45, tol=1e-8)
        assert abs(star - 0.3) <= 1e-8


def test_refine_crossing_rotation_family():
    star = refine_crossing(ROT, "add2", -0.7, 0.9, tol=1e-8)
    assert abs(star) <= 1e-8


def test_refine_crossing_same_sign_bracket_errors():
    with pytest.raises(ValueError):
        refine_crossing(SHIFTED, "add2", -0.9, -0.5)


def test_refine_crossing_zero_endpoint_returned():
    assert refine_crossing(ROT, "add2", 0.0, 0.5) == 0.0
    assert refine_crossing(ROT, "add2", -0.5, 0.0) == 0.0


def test_refine_crossing_validates_bracket():
    with pytest.raises(ValueError):
        refine_crossing(ROT, "add2", 0.5, 0.5)
    with pytest.raises(ValueError):
        refine_crossing(ROT, "add2", 0.5, -0.5)
    with pytest.raises(ValueError):
        refine_crossing(ROT, "add2", -0.5, 0.5, tol=0.0)
