import json
import os
import subprocess

import numpy as np
import pytest

import spshrink


def test_spaces_and_sampling():
    assert "gln_ss" in spshrink.spaces()
    u = spshrink.sample("un", 3, seed=4)
    assert np.allclose(u @ u.conj().T, np.eye(3), atol=1e-10)
    assert spshrink.membership("un", u)
    assert not spshrink.membership("hn", u)
    assert np.array_equal(spshrink.sample("gl", 3, seed=4), spshrink.sample("gl", 3, seed=4))


def test_shrinker_power_law():
    x = spshrink.sample("mn", 3, seed=1)
    y = spshrink.canonical_shrinker(x, 1, 1)
    assert y.shape == (6, 6)
    assert spshrink.spectrum_inclusion_defect(y, x) < 1e-8
    report = spshrink.check_shrinking("gl", 3, samples=20, seed=2)
    assert report["powerlaw_defect"] < 1e-7


def test_selectors():
    assert abs(spshrink.su_select(np.diag([1j, 1j, -1])) + 1) < 1e-12
    assert spshrink.hn_select(np.diag([3.0, -1.0])) == pytest.approx(3.0)
    m = spshrink.monodromy(3, 1.0, 512)
    assert m["single_cycle"]


def test_config_space():
    turns = np.array([0.0, 2.0, 1.0]) / 3.0
    assert spshrink.classify_component(list(np.exp(2j * np.pi * turns))) == [1, 3, 2]
    assert spshrink.isotropy_order(list(np.exp(2j * np.pi * np.array([0.0, 0.2, 0.5, 0.7])))) == 4
    assert spshrink.verify_cycle_decomposition(5)


def test_calculus_and_theta():
    t = np.array([[1.0, 2.0], [0.0, 3.0]], dtype=complex)
    sq = spshrink.apply_function(t, lambda z: z * z)
    assert np.allclose(sq, t @ t)
    assert len(spshrink.spectral_idempotents(np.diag([1.0, 1.0, 2.0]))) == 2
    x = np.array([[0, -2], [0.5, 0]], dtype=complex)
    assert np.allclose(spshrink.theta(x), [[0, -0.5], [2, 0]])
    with pytest.raises(spshrink.Error) as info:
        spshrink.theta(np.array([[1, 1], [0, 1]], dtype=complex))
    assert info.value.code == "NotSemisimple"


def test_reconstruct_python_oracle():
    rng = np.random.default_rng(0)
    t0 = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) + 3 * np.eye(3)
    t0inv = np.linalg.inv(t0)
    c = spshrink.reconstruct(lambda u: t0 @ u.T @ t0inv, 3, samples=10)
    assert c["mode"] == "transpose_conjugation"
    t = spshrink.matrix_from_json(c["T"])
    scale = np.vdot(t0, t) / np.vdot(t0, t0)
    assert np.linalg.norm(t - scale * t0) / np.linalg.norm(scale * t0) < 1e-6
    with pytest.raises(spshrink.Error) as info:
        spshrink.classify_preserver("theta", "gln_ss", 3)
    assert info.value.code == "ResidualTooLarge"


def test_criterion():
    r = spshrink.run_criterion(2, seed=0)
    assert r["pass"]


CLI = os.environ.get("SPSHRINK_CLI")


@pytest.mark.skipif(not CLI, reason="SPSHRINK_CLI not set")
@pytest.mark.parametrize(
    "args, code",
    [
        (["verify", "--space", "gl", "--n", "3", "--m", "6", "--pq", "1,1", "--samples", "10"], 0),
        (["monodromy", "--n", "3"], 0),
        (["reconstruct", "--oracle", "theta", "--space", "gln_ss", "--n", "3"], 1),
        (["verify", "--bogus"], 2),
    ],
)
def test_cli_exit_codes(args, code):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == code
    if code != 2:
        report = json.loads(proc.stdout)
        assert "results" in report
