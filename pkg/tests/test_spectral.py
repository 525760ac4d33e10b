import pytest

from fluctus.correlator import Separation, correlator
from fluctus.errors import SoundConeSingularityError
from fluctus.medium import builtin_material
from fluctus.spectral import (
    RegulatorSchedule,
    damped_closed_form,
    default_schedule,
    extrapolated_correlator,
    regulated_integrand_reduction,
)

WATER = builtin_material("water")

EQ_TIME_WATER_1NM = -3.598983558786755


# --- schedule validation -----------------------------------------------------

def test_schedule_needs_three_epsilons():
    with pytest.raises(ValueError):
        RegulatorSchedule(epsilons=(1e-10, 5e-11))


def test_schedule_must_decrease_strictly():
    with pytest.raises(ValueError):
        RegulatorSchedule(epsilons=(1e-10, 1e-10, 5e-11))


def test_schedule_tolerance_and_order_bounds():
    with pytest.raises(ValueError):
        RegulatorSchedule(epsilons=(4e-11, 2e-11, 1e-11), quad_tol=1e-3)
    with pytest.raises(ValueError):
        RegulatorSchedule(epsilons=(4e-11, 2e-11, 1e-11), extrap_order=3)
    with pytest.raises(ValueError):
        RegulatorSchedule(epsilons=(4e-11, 2e-11, 1e-11), extrap_order=0)


def test_schedule_epsilons_must_clear_the_distance():
    sched = RegulatorSchedule(epsilons=(2e-10, 1e-10, 5e-11), extrap_order=2)
    with pytest.raises(ValueError):
        extrapolated_correlator(WATER, 1e-9, 0.0, sched)  # eps0 = r/5 too coarse


def test_default_schedule_is_a_sixteenth_halving_ladder():
    sched = default_schedule(WATER, 1e-9, 0.0)
    assert sched.epsilons == (1e-9 / 16, 1e-9 / 32, 1e-9 / 64, 1e-9 / 128)
    assert sched.extrap_order == 3
    # near the cone the ladder contracts with the cone distance
    dt = 0.9e-9 / WATER.cs
    near = default_schedule(WATER, 1e-9, dt)
    assert near.epsilons[0] == pytest.approx(abs(1e-9 - WATER.cs * dt) / 16, rel=1e-12)


# --- fixed-regulator quadrature ----------------------------------------------

def test_quadrature_matches_damped_closed_form():
    # the damped integral has a closed form; the quadrature must hit it
    for r, dt, eps in [
        (1e-9, 0.0, 1e-10),
        (1e-9, 0.0, 1e-8),       # eps = 10 r: heavily damped regime
        (2e-9, 0.5e-12, 1e-10),
        (5e-10, 2e-12, 5e-11),   # timelike
    ]:
        num = regulated_integrand_reduction(WATER, r, dt, eps)
        ref = damped_closed_form(WATER, r, dt, eps)
        assert num == pytest.approx(ref, rel=1e-9)


def test_weak_damping_approaches_the_regulator_free_value():
    # the regulator bias at equal times is 6 eps^2/r^2, so eps = r/100
    # sits 6e-4 from the eps -> 0 limit
    num = regulated_integrand_reduction(WATER, 1e-9, 0.0, 0.01e-9)
    assert num == pytest.approx(EQ_TIME_WATER_1NM, rel=1e-3)
    assert abs(num / EQ_TIME_WATER_1NM - 1.0) == pytest.approx(6e-4, rel=0.02)
    assert num == pytest.approx(damped_closed_form(WATER, 1e-9, 0.0, 0.01e-9), rel=1e-9)


def test_quadrature_scale_invariance():
    # doubling r at fixed eps/r scales the damped value by 1/16
    v1 = regulated_integrand_reduction(WATER, 1e-9, 0.0, 1e-9 / 64)
    v2 = regulated_integrand_reduction(WATER, 2e-9, 0.0, 2e-9 / 64)
    assert v2 == pytest.approx(v1 / 16.0, rel=1e-9)


def test_quadrature_rejects_bad_arguments():
    with pytest.raises(ValueError):
        regulated_integrand_reduction(WATER, 0.0, 0.0, 1e-10)
    with pytest.raises(ValueError):
        regulated_integrand_reduction(WATER, 1e-9, 0.0, 0.0)


def test_unreachable_tolerance_raises_with_achieved_estimate():
    from fluctus.errors import ConvergenceError
    with pytest.raises(ConvergenceError) as exc:
        regulated_integrand_reduction(WATER, 1e-9, 0.0, 1e-10, quad_tol=1e-17)
    assert exc.value.achieved > 0.0
    assert "relative error estimate" in str(exc.value)


# --- regulator removal ---------------------------------------------------------

def test_extrapolation_agrees_with_closed_form_spacelike_and_timelike():
    for r, u in [(1e-9, 0.0), (1e-9, 0.5), (2e-9, 2.0), (5e-10, 1.5), (1e-9, 2.9)]:
        dt = u * r / WATER.cs
        est = extrapolated_correlator(WATER, r, dt)
        ref = correlator(WATER, Separation(r, dt)).value
        assert est.value == pytest.approx(ref, rel=1e-6)
        assert est.error_estimate < 1e-6 * abs(est.value)


def test_timelike_extrapolation_is_positive():
    r = 1e-9
    est = extrapolated_correlator(WATER, r, 2 * r / WATER.cs)
    assert est.value > 0


def test_on_cone_rejected():
    r = 1e-9
    with pytest.raises(SoundConeSingularityError):
        extrapolated_correlator(WATER, r, r / WATER.cs)


def test_error_estimate_shrinks_as_epsilons_are_appended():
    r = 1e-9
    base = [r / 16, r / 32, r / 64]
    estimates = []
    for extra in range(3):
        eps = tuple(base + [base[-1] / 2**(k + 1) for k in range(extra)])
        # coarse ladders carry honestly larger estimates, so give the
        # non-convergence gate (100x quad_tol) room to admit them
        sched = RegulatorSchedule(epsilons=eps, extrap_order=2, quad_tol=1e-6)
        estimates.append(extrapolated_correlator(WATER, r, 0.0, sched).error_estimate)
    assert estimates[0] > estimates[1] > estimates[2]


def test_result_is_schedule_independent():
    r, dt = 1e-9, 0.4e-9 / WATER.cs
    a = RegulatorSchedule(epsilons=(r / 16, r / 32, r / 64, r / 128))
    b = RegulatorSchedule(epsilons=(r / 20, r / 44, r / 92, r / 190))
    ea = extrapolated_correlator(WATER, r, dt, a)
    eb = extrapolated_correlator(WATER, r, dt, b)
    assert abs(ea.value - eb.value) <= ea.error_estimate + eb.error_estimate


def test_extrapolation_is_deterministic():
    one = extrapolated_correlator(WATER, 1e-9, 0.0)
    two = extrapolated_correlator(WATER, 1e-9, 0.0)
    assert one.value == two.value
    assert one.error_estimate == two.error_estimate
