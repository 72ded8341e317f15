"""Collar geometry against high-precision oracles.

Reference values are recomputed inline with mpmath at 50 digits, so the
tests stay honest if the float implementations drift.
"""

import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from hypspec.collars import (
    Collar,
    FermiPoint,
    collar_distance,
    collar_volume,
    fermi_to_polar,
    gudermannian,
    injectivity_radius_on_core_normal,
    max_half_width,
    modified_half_width,
    polar_to_fermi,
    same_rho_geodesic_length,
    shell_detour_length,
    shell_volume,
    uhp_distance,
)

mpmath.mp.dps = 50


def mp_half_width(ell):
    return mpmath.asinh(1 / mpmath.sinh(mpmath.mpf(ell) / 2))


def test_max_half_width_matches_mpmath():
    for ell in (1e-4, 1e-2, 0.09, 0.1, 0.5, 1.0, 1.7):
        expect = float(mp_half_width(ell))
        assert max_half_width(ell) == pytest.approx(expect, rel=1e-14)
    with pytest.raises(ValueError):
        max_half_width(0.0)
    with pytest.raises(ValueError):
        max_half_width(math.inf)


def test_modified_half_width_offsets_by_two():
    assert modified_half_width(0.09) == pytest.approx(1.7944086998410058, rel=1e-13)
    # once the full width drops under 2 the modified width clamps at zero
    assert modified_half_width(1.7) == 0.0
    w = max_half_width(0.3)
    assert modified_half_width(0.3) == pytest.approx(w - 2.0, rel=1e-12)


def test_collar_volume_matches_mpmath():
    for ell, w in ((0.09, 1.0), (0.1, 2.0), (0.5, 0.7)):
        expect = float(2 * mpmath.mpf(ell) * mpmath.sinh(w))
        assert collar_volume(ell, w) == pytest.approx(expect, rel=1e-14)


def test_shell_volume_matches_mpmath():
    for ell, w in ((0.09, 1.5), (0.1, 2.0)):
        expect = float(2 * mpmath.mpf(ell) * (mpmath.sinh(w + 1) - mpmath.sinh(w)))
        assert shell_volume(ell, w) == pytest.approx(expect, rel=1e-14)


def test_tube_identity_sinh_form():
    # 2 l sinh(w_max(l)) == 2 l / sinh(l/2), exactly, by construction
    for ell in (1e-4, 1e-2, 0.1, 0.5, 1.0):
        lhs = collar_volume(ell, max_half_width(ell))
        rhs = 2.0 * ell / math.sinh(ell / 2.0)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_half_width_small_length_asymptotics():
    # w_max(l) ~ log(4/l), so exp(w) * l / 4 -> 1
    ell = 1e-4
    assert abs(math.exp(max_half_width(ell)) * ell / 4.0 - 1.0) < 1e-3


def test_gudermannian_oracle():
    for w in (0.3, 1.0, 1.7944086998410058, 5.0):
        expect = float(2 * mpmath.atan(mpmath.tanh(mpmath.mpf(w) / 2)))
        assert gudermannian(w) == pytest.approx(expect, rel=1e-14)
    assert gudermannian(0.0) == 0.0
    # saturates at pi/2
    assert gudermannian(60.0) == pytest.approx(math.pi / 2, rel=1e-14)


def test_uhp_distance_oracle():
    # vertical ray: d(i, e*i) = 1
    assert uhp_distance(1j, math.e * 1j) == pytest.approx(1.0, rel=1e-12)
    z1, z2 = complex(-0.3, 0.8), complex(0.5, 1.9)
    expect = float(
        mpmath.acosh(
            1
            + (mpmath.mpf("0.8") ** 2 + mpmath.mpf("1.1") ** 2)
            / (2 * mpmath.mpf("0.8") * mpmath.mpf("1.9"))
        )
    )
    assert uhp_distance(z1, z2) == pytest.approx(expect, rel=1e-12)
    with pytest.raises(ValueError):
        uhp_distance(1j, complex(0.0, -1.0))


def test_fermi_polar_round_trip():
    ell = 0.3
    for rho, t in ((0.0, 0.0), (0.7, 0.25), (-1.1, 0.9), (1.2, 0.5)):
        r, theta = fermi_to_polar(FermiPoint(rho, t), ell)
        back = polar_to_fermi(r, theta, ell)
        assert back.rho == pytest.approx(rho, abs=1e-12)
        assert back.t == pytest.approx(t, abs=1e-12)
    # the core maps to the unit circle
    r, theta = fermi_to_polar(FermiPoint(0.0, 0.0), ell)
    assert (r, theta) == pytest.approx((1.0, math.pi / 2), rel=1e-14)
    with pytest.raises(ValueError):
        polar_to_fermi(1.0, math.pi, ell)
    with pytest.raises(ValueError):
        polar_to_fermi(0.0, 1.0, ell)


def test_collar_distance_same_point_and_symmetry():
    ell = 0.09
    assert collar_distance(FermiPoint(0.4, 0.1), FermiPoint(0.4, 0.1), ell) == 0.0
    a, b = FermiPoint(0.3, 0.12), FermiPoint(-0.2, 0.77)
    assert collar_distance(a, b, ell) == pytest.approx(
        collar_distance(b, a, ell), rel=1e-10
    )


def test_collar_distance_uses_the_short_way_around():
    # going forward 0.9 of a turn equals going back 0.1
    ell = 0.09
    d_fwd = collar_distance(FermiPoint(0.0, 0.0), FermiPoint(0.0, 0.9), ell)
    d_bwd = collar_distance(FermiPoint(0.0, 0.0), FermiPoint(0.0, 0.1), ell)
    assert d_fwd == pytest.approx(d_bwd, rel=1e-10)
    assert d_fwd == pytest.approx(0.1 * ell, rel=1e-10)


def test_same_rho_geodesic_matches_collar_distance():
    ell = 0.09
    # on the core the arc is the core segment itself
    assert same_rho_geodesic_length(0.0, 0.3, ell) == pytest.approx(
        0.3 * ell, rel=1e-12
    )
    # off the core: agrees with the 2-point distance for t <= 1/2,
    # and never exceeds the equidistant-circle arc
    for rho, t in ((0.8, 0.2), (1.4, 0.5), (2.0, 0.37)):
        chord = collar_distance(FermiPoint(rho, 0.0), FermiPoint(rho, t), ell)
        val = same_rho_geodesic_length(rho, t, ell)
        assert val == pytest.approx(chord, rel=1e-10)
        assert val <= t * ell * math.cosh(rho) * (1 + 1e-12)
    with pytest.raises(ValueError):
        same_rho_geodesic_length(0.5, 1.2, ell)


def test_injectivity_radius_is_half_the_full_loop():
    ell = 0.09
    for rho in (0.0, 0.7, 1.3, 2.5):
        r = injectivity_radius_on_core_normal(rho, ell)
        loop = same_rho_geodesic_length(rho, 1.0, ell)
        assert r == pytest.approx(loop / 2.0, rel=1e-13)
    assert injectivity_radius_on_core_normal(0.0, ell) == pytest.approx(
        ell / 2.0, rel=1e-12
    )


def test_shell_detour_vs_direct():
    ell = 0.05
    w = max_half_width(ell)
    direct, detour = shell_detour_length(w - 0.3, w - 0.3 + 0.01, 0.0, 0.001, ell)
    assert direct > 0
    assert detour >= direct
    assert detour <= 5.0 * direct
    with pytest.raises(ValueError):
        shell_detour_length(-0.1, 0.5, 0.0, 0.0, ell)


def test_collar_rejects_width_beyond_embedding_bound():
    with pytest.raises(ValueError):
        Collar(core_length=0.5, half_width=max_half_width(0.5) + 0.1)
    # exactly at the bound is fine
    Collar(core_length=0.5, half_width=max_half_width(0.5))
    # zero width is allowed (degenerate annulus used by the contraction rules)
    Collar(core_length=0.5, half_width=0.0)
    with pytest.raises(ValueError):
        Collar(core_length=-0.1, half_width=0.5)
    with pytest.raises(ValueError):
        Collar(core_length=0.5, half_width=-0.01)


@given(
    ell=st.floats(min_value=1e-3, max_value=1.5),
    rho1=st.floats(min_value=-1.0, max_value=1.0),
    rho2=st.floats(min_value=-1.0, max_value=1.0),
    t1=st.floats(min_value=0.0, max_value=1.0),
    t2=st.floats(min_value=0.0, max_value=1.0),
)
def test_collar_distance_symmetric_and_nonnegative(ell, rho1, rho2, t1, t2):
    w = max_half_width(ell)
    scale = min(1.0, w)
    a = FermiPoint(rho1 * scale, t1)
    b = FermiPoint(rho2 * scale, t2)
    d = collar_distance(a, b, ell)
    assert d >= 0.0
    assert collar_distance(b, a, ell) == pytest.approx(d, rel=1e-9, abs=1e-9)


@given(
    ell=st.floats(min_value=0.01, max_value=0.1),
    drho=st.floats(min_value=0.0, max_value=0.5),
    dt=st.floats(min_value=-0.01, max_value=0.01),
)
def test_detour_never_beats_direct(ell, drho, dt):
    w = max_half_width(ell)
    rho1 = w - 1.0
    rho2 = min(w, rho1 + drho)
    direct, detour = shell_detour_length(rho1, rho2, 0.0, dt % 1.0, ell)
    if direct > 0:
        # the computed direct distance d = acosh(1 + d^2/2) overshoots
        # the true value by up to ~eps/d absolute, so a tiny pure-radial
        # pair can make "direct" exceed the exact detour; budget for it
        slack = 1e-8 * direct + 1e-15 / direct
        assert detour >= direct - slack
