import math

import pytest

import tomoqkd


def test_coefficients_reference_point():
    c = tomoqkd.coefficients(ratio=1.1, g=0.1, v=0.9)
    assert c["alpha"] == pytest.approx(0.083019, abs=1e-6)
    assert c["beta1"] == pytest.approx(0.043396, abs=1e-6)
    assert c["beta2"] == pytest.approx(0.790566, abs=1e-6)
    assert c["gamma"] == pytest.approx(0.039623, abs=1e-6)


def test_coefficients_normalization():
    c = tomoqkd.coefficients(ratio=1.3, g=0.05, v=0.7, noise=0.1)
    assert 2 * c["alpha"] + c["beta1"] + c["beta2"] == pytest.approx(1.0, abs=1e-12)


def test_analyze_reference_row():
    r = tomoqkd.analyze(ratio=1.1, g=0.1, v=0.9)
    assert r["bases"]["z"]["i_ab"] == pytest.approx(0.3478, abs=5e-4)
    assert r["bases"]["x"]["i_ab"] == pytest.approx(0.4525, abs=5e-4)
    assert r["overall_yield"] == pytest.approx(0.1014, abs=2e-3)
    assert r["entangled"] is True
    assert r["bases"]["x"] == r["bases"]["y"] or (
        r["bases"]["x"]["yield"] == r["bases"]["y"]["yield"]
    )


def test_analyze_rejects_bad_params():
    with pytest.raises(ValueError):
        tomoqkd.analyze(ratio=1.1, g=0.1, v=1.5)


def test_sweep_monotone_in_v():
    rows = tomoqkd.sweep(1.0, 0.0, 0.0, 0.0, "v", 0.0, 1.0, 6)
    assert len(rows) == 6
    overall = [r["overall_yield"] for r in rows]
    assert overall[0] < 1e-9
    assert all(b > a for a, b in zip(overall, overall[1:]))


def test_find_threshold():
    v = tomoqkd.find_threshold("v", ratio=1.1, g=0.02)
    assert abs(v - 0.39) < 0.01


def test_info_kernels():
    assert tomoqkd.entropy([0.5, 0.5]) == pytest.approx(1.0, abs=1e-12)
    assert tomoqkd.mutual_information([[0.5, 0.0], [0.0, 0.5]]) == pytest.approx(
        1.0, abs=1e-12
    )
    assert tomoqkd.srm_success(-0.9) == pytest.approx(0.717945, abs=1e-5)
    assert math.isclose(tomoqkd.srm_success(0.0), 1.0)


def test_is_entangled():
    entangled, min_eig = tomoqkd.is_entangled(1.0, 0.0, 0.5)
    assert entangled and min_eig < 0
    separable, _ = tomoqkd.is_entangled(1.0, 0.3, 0.1)
    assert not separable
