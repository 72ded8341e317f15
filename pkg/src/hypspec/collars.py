"""Collar geometry around short closed geodesics.

A geodesic of length l on a hyperbolic surface carries an embedded
cylinder ("collar") with Fermi coordinates (rho, t): rho is the signed
distance to the core, t in [0, 1) runs along it, and the metric is
drho^2 + l^2 cosh^2(rho) dt^2.  The maximal embedded half-width is
w(l) = arcsinh(1/sinh(l/2)), so e^w ~ 4/l as l -> 0.  The "modified"
half-width w - 2 leaves a unit-width shell inside the thick part just
outside the collar.  All closed forms below are exercised against an
independent high-precision oracle in the tests.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


def max_half_width(length: float) -> float:
    """Maximal embedded collar half-width arcsinh(1/sinh(l/2))."""
    if not (math.isfinite(length) and length > 0.0):
        raise ValueError(f"length must be positive and finite, got {length}")
    return math.asinh(1.0 / math.sinh(0.5 * length))


def modified_half_width(length: float) -> float:
    """Half-width shrunk by 2, floored at zero: max(0, w(l) - 2)."""
    return max(0.0, max_half_width(length) - 2.0)


def collar_volume(length: float, half_width: float) -> float:
    """Area 2 l sinh(w) of the collar of half-width w."""
    if half_width < 0.0:
        raise ValueError(f"half_width must be >= 0, got {half_width}")
    return 2.0 * length * math.sinh(half_width)


def shell_volume(length: float, half_width: float) -> float:
    """Area 2 l (sinh(w+1) - sinh(w)) of the unit shell outside half-width w."""
    if half_width < 0.0:
        raise ValueError(f"half_width must be >= 0, got {half_width}")
    return 2.0 * length * (math.sinh(half_width + 1.0) - math.sinh(half_width))


def gudermannian(w: float) -> float:
    """gd(w) = 2 arctan(tanh(w/2)) = integral of sech over [0, w]."""
    return 2.0 * math.atan(math.tanh(0.5 * w))


@dataclass(frozen=True)
class FermiPoint:
    """Collar point in Fermi coordinates (rho, t), t taken mod 1."""

    rho: float
    t: float


@dataclass(frozen=True)
class Collar:
    """A collar of half-width ``half_width`` around a core of length ``core_length``."""

    core_length: float
    half_width: float
    has_shell: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.core_length) and self.core_length > 0.0):
            raise ValueError(f"core_length must be positive, got {self.core_length}")
        if self.half_width < 0.0:
            raise ValueError(f"half_width must be >= 0, got {self.half_width}")
        limit = max_half_width(self.core_length)
        if self.half_width > limit * (1.0 + 1e-12) + 1e-15:
            raise ValueError(
                f"half_width {self.half_width} exceeds the embedding bound "
                f"{limit} for core length {self.core_length}"
            )

    def volume(self) -> float:
        return collar_volume(self.core_length, self.half_width)

    def shell_volume(self) -> float:
        return shell_volume(self.core_length, self.half_width)


# -------------------------------------------------------------------
# model maps and distances
# -------------------------------------------------------------------

def fermi_to_polar(point: FermiPoint, length: float) -> tuple[float, float]:
    """Polar coordinates (r, theta) of a collar point in the upper half-plane.

    The collar lifts to the wedge {r e^{i theta}} with the core on the
    unit circle; rho = -log tan(theta/2) and t = log(r)/l invert this.
    """
    theta = 2.0 * math.atan(math.exp(-point.rho))
    r = math.exp(length * point.t)
    return r, theta


def polar_to_fermi(r: float, theta: float, length: float) -> FermiPoint:
    """Inverse of :func:`fermi_to_polar`."""
    if not (0.0 < theta < math.pi):
        raise ValueError(f"theta must lie in (0, pi), got {theta}")
    if r <= 0.0:
        raise ValueError(f"r must be positive, got {r}")
    rho = -math.log(math.tan(0.5 * theta))
    t = math.log(r) / length
    return FermiPoint(rho=rho, t=t)


def uhp_distance(z1: complex, z2: complex) -> float:
    """Hyperbolic distance in the upper half-plane.

    cosh d = 1 + |z1 - z2|^2 / (2 Im z1 Im z2).
    """
    y1, y2 = z1.imag, z2.imag
    if y1 <= 0.0 or y2 <= 0.0:
        raise ValueError("points must have positive imaginary part")
    return math.acosh(1.0 + abs(z1 - z2) ** 2 / (2.0 * y1 * y2))


def _fermi_to_uhp(point: FermiPoint, length: float) -> complex:
    r, theta = fermi_to_polar(point, length)
    return r * cmath.exp(1j * theta)


def collar_distance(p: FermiPoint, q: FermiPoint, length: float) -> float:
    """Geodesic distance between two collar points.

    Computed in the half-plane model, minimizing over the deck
    translations z -> e^{kl} z nearest to the t-difference.
    """
    z1 = _fermi_to_uhp(FermiPoint(p.rho, 0.0), length)
    base = q.t - p.t
    best = math.inf
    for k in (math.floor(base), math.ceil(base), round(base)):
        z2 = _fermi_to_uhp(FermiPoint(q.rho, base - k), length)
        best = min(best, uhp_distance(z1, z2))
    return best


def same_rho_geodesic_length(rho: float, t: float, length: float) -> float:
    """Length of the geodesic arc between (rho, 0) and (rho, t), 0 <= t <= 1.

    sinh(L/2) = sinh(t l / 2) cosh(rho); at t = 1 this is twice the
    injectivity radius on the equidistant circle.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    return 2.0 * math.asinh(math.sinh(0.5 * t * length) * math.cosh(rho))


def injectivity_radius_on_core_normal(rho: float, length: float) -> float:
    """Injectivity radius at distance rho from the core: arcsinh(sinh(l/2) cosh rho)."""
    return math.asinh(math.sinh(0.5 * length) * math.cosh(rho))


def shell_detour_length(
    rho1: float, rho2: float, t1: float, t2: float, length: float
) -> tuple[float, float]:
    """(direct, detour) distances between two same-side shell points.

    The detour follows the equidistant circle at rho1 (arc length
    |dt| l cosh rho1, with dt the circular t-difference) and then the
    radial segment |rho2 - rho1|.  For admissible shells and pairs at
    direct distance <= epsilon the detour is at most 5x direct.
    """
    if rho1 < 0.0 or rho2 < 0.0:
        raise ValueError("shell points must lie on one side of the core (rho >= 0)")
    direct = collar_distance(
        FermiPoint(rho1, t1), FermiPoint(rho2, t2), length
    )
    dt = abs(t1 - t2) % 1.0
    dt = min(dt, 1.0 - dt)
    detour = dt * length * math.cosh(rho1) + abs(rho2 - rho1)
    return direct, detour
