"""Smoke tests for the python bindings: key published values and a few
channel-algebra sanity checks, all through the extension module."""

import math

import pytest

import octabound as ob


def test_version():
    assert ob.__version__


def test_phase_state_geometry():
    b = ob.phase_state(math.pi / 4)
    assert b.x == pytest.approx(1 / math.sqrt(2))
    assert b.y == pytest.approx(1 / math.sqrt(2))
    assert ob.octahedron_norm(b) == pytest.approx(math.sqrt(2))
    assert not ob.in_octahedron(b)
    assert ob.in_octahedron(ob.phase_state(0.0))


def test_channel_algebra():
    nz = ob.mix_with(ob.pauli_channel(ob.Pauli.Z), 0.25)
    out = ob.apply(nz, ob.BlochVector(1.0, 0.0, 0.0))
    assert out.x == pytest.approx(0.5)
    assert ob.choi_psd_check(nz)

    y = ob.compose(ob.pauli_channel(ob.Pauli.X), ob.pauli_channel(ob.Pauli.Z))
    out = ob.apply(y, ob.BlochVector(0.0, 1.0, 0.0))
    assert out.y == pytest.approx(1.0)


def test_closed_form_bounds():
    bound = ob.two_hit_dephasing_threshold()
    assert bound.p == pytest.approx(0.079552, abs=1e-5)
    assert bound.p_tilde == pytest.approx(0.15910, abs=1e-4)
    assert ob.epg_phase_threshold_general() == pytest.approx(0.1041008383, abs=1e-9)
    assert ob.depolarizing_two_hit_threshold() == pytest.approx(0.26046, abs=2e-4)
    assert ob.decoding_polynomial_root() == pytest.approx(0.092888, abs=1e-5)


def test_injection_thresholds():
    res = ob.ResourceSpec.phase_state(math.pi / 4)
    result = ob.injection_threshold(
        ob.NoiseModel.Knill, ob.InjectionVariant.StateResource, res
    )
    assert result.strength == pytest.approx(0.136861, abs=1e-5)
    assert abs(result.residual) < 1e-10

    gate = ob.ResourceSpec.phase_gate(math.pi / 4)
    result = ob.injection_threshold(
        ob.NoiseModel.Epg, ob.InjectionVariant.GateResource, gate
    )
    assert result.strength == pytest.approx(0.0300339, abs=1e-6)


def test_effective_map_matches_formula():
    res = ob.ResourceSpec.phase_state(math.pi / 4)
    eff = ob.injection_effective_map(
        ob.NoiseModel.Knill, 0.1, ob.InjectionVariant.StateResource, res
    )
    factors = ob.knill_effective_formula(0.1, 1)
    assert eff.diagonal_factors is not None
    for a, b in zip(eff.diagonal_factors, factors):
        assert a == pytest.approx(b, abs=1e-12)


def test_shift_rules():
    outcome = ob.shift_rule(ob.Location.BeforeZMeas, ob.Pauli.Y)
    assert not outcome.absorbed
    assert outcome.at_resource == ob.Pauli.X
    assert ob.shift_rule(ob.Location.BeforeZMeas, ob.Pauli.Z).absorbed


def test_oracle_agreement():
    res = ob.ResourceSpec.phase_state(0.9)
    eff = ob.injection_effective_map(
        ob.NoiseModel.Epg, 0.04, ob.InjectionVariant.StateResource, res
    )
    oracle = ob.oracle_effective_channel(
        ob.NoiseModel.Epg, 0.04, ob.InjectionVariant.StateResource, res
    )
    assert abs(eff.channel.M - oracle.M).max() < 1e-10
    assert abs(eff.channel.c - oracle.c).max() < 1e-10


def test_scan_quick():
    result = ob.scan_phase_resources(
        ob.NoiseModel.Knill, ob.InjectionVariant.StateResource, 64
    )
    assert result.best_threshold == pytest.approx(0.1371, abs=2e-4)
    assert len(result.profile) == 65
