"""Closed-form curve families.

The proper-biharmonic families and their degenerate/horizontal relatives all
have tangents of hyperbolic-helix form, so the generators attach a
:class:`~hhcurves.curves.HelixSpec` and the evaluation layers dispatch to the
double-double kernel. The biharmonicity slope is the root of a quadratic in
the slope ``a``::

    a² − 2·a·tilt − 4·amp² = 0        (tangent form (amp·cosh, amp·sinh, tilt))

solved here in double-double arithmetic so generated curves sit on the root
to ~31 digits. ``as_printed=True`` substitutes the historically published
slope constants instead (``√(5·sinh²α₀ + 1)``-style discriminants, slope ±1
for the horizontal case); those curves are generated faithfully and fail the
biharmonicity test — the verifier reports them as refuted.

Families:

* spacelike proper-biharmonic helices, shape parameter α₀ (tilt sinh α₀);
* timelike proper-biharmonic helices, shape parameter ν₀ ≠ 0 (tilt cosh ν₀);
* the horizontal spacelike family (α₀ = 0, corrected slope ±2);
* flat timelike helices ``T = (sinh ms, cosh ms, 0)`` (never biharmonic);
* torsion-only curves with vanishing binormal third component (``b3zero``),
  driven by a profile α(s), with ``β' = 2·sinh α`` (spacelike) or
  ``2·cosh α`` (timelike);
* straight-line geodesics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from hhcurves._kernels import pure as _ddmath
from hhcurves.curves import CoordinateCurve, FrameCurve, HelixSpec
from hhcurves.errors import DegenerateGeodesicError, InvalidInputError

__all__ = [
    "FamilyKind",
    "FamilyParams",
    "solve_slope",
    "make_spacelike_biharmonic",
    "make_timelike_biharmonic",
    "make_spacelike_horizontal",
    "make_b3zero_curve",
    "make_b3zero_linear",
    "make_timelike_horizontal_helix",
    "make_helix",
    "make_geodesic",
    "linear_profile",
    "sine_profile",
]


class FamilyKind(Enum):
    SPACELIKE_BIHARMONIC = "spacelike"
    TIMELIKE_BIHARMONIC = "timelike"
    SPACELIKE_HORIZONTAL = "spacelike-horizontal"
    B3ZERO_SPACELIKE = "b3zero-spacelike"
    B3ZERO_TIMELIKE = "b3zero-timelike"
    TIMELIKE_HORIZONTAL_HELIX = "timelike-horizontal-helix"
    GEODESIC = "geodesic"


@dataclass(frozen=True)
class FamilyParams:
    """Bag of generator parameters (the CLI's argument funnel)."""

    kind: FamilyKind
    shape: float = 0.0          # α₀ / ν₀ / helix frequency m
    branch: int = 1             # which quadratic root: +1 or -1
    phase: float = 0.0
    offsets: tuple = (0.0, 0.0, 0.0)
    as_printed: bool = False


_KIND_ALIASES = {"horizontal": FamilyKind.SPACELIKE_HORIZONTAL}


def _coerce_kind(kind):
    if isinstance(kind, FamilyKind):
        return kind
    name = str(kind)
    if name in _KIND_ALIASES:
        return _KIND_ALIASES[name]
    try:
        return FamilyKind(name)
    except ValueError as exc:
        raise InvalidInputError("unknown family kind %r" % (kind,)) from exc


def _coerce_branch(branch):
    if branch in (1, -1):
        return int(branch)
    if branch in ("+", "plus"):
        return 1
    if branch in ("-", "minus"):
        return -1
    raise InvalidInputError("branch must be +1 or -1, got %r" % (branch,))


# ---------------------------------------------------------------------------
# Slope quadratic
# ---------------------------------------------------------------------------


def _slope_roots_dd(amp, tilt):
    """Double-double roots of a² − 2·a·tilt − 4·amp² = 0: tilt ± √(tilt²+4·amp²)."""
    DD = _ddmath.DD
    disc = DD(*_ddmath._two_prod(tilt, tilt)) + DD(
        *_ddmath._two_prod(2.0 * amp, 2.0 * amp)
    )
    root = _ddmath.dd_sqrt(disc)
    plus = DD(tilt) + root
    minus = DD(tilt) - root
    return (plus.hi, plus.lo), (minus.hi, minus.lo)


def solve_slope(kind, shape):
    """Both slope roots of the biharmonicity quadratic for a family.

    Returns ``(root_plus, root_minus)`` as floats. For the spacelike family
    (and the horizontal case, shape = 0) the quadratic is
    ``a² − 2·a·sinh(shape) − 4·cosh²(shape)``; for the timelike family it is
    ``a² − 2·a·cosh(shape) − 4·sinh²(shape)`` (shape ≠ 0; at shape = 0 the
    roots collapse to 2 and 0 and the family degenerates). Raises
    :class:`InvalidInputError` for kinds without a biharmonicity slope.
    """
    kind = _coerce_kind(kind)
    if kind in (FamilyKind.SPACELIKE_BIHARMONIC, FamilyKind.SPACELIKE_HORIZONTAL):
        amp, tilt = math.cosh(shape), math.sinh(shape)
    elif kind == FamilyKind.TIMELIKE_BIHARMONIC:
        amp, tilt = math.sinh(shape), math.cosh(shape)
    elif kind == FamilyKind.TIMELIKE_HORIZONTAL_HELIX:
        raise InvalidInputError(
            "flat timelike helices admit no biharmonic slope "
            "(the closure identity is infeasible)"
        )
    else:
        raise InvalidInputError("no slope quadratic for family %r" % (kind.value,))
    plus, minus = _slope_roots_dd(amp, tilt)
    return plus[0], minus[0]


def _printed_slope(kind, shape, branch):
    """Historically published slope constants (known-bad discriminants)."""
    if kind in (FamilyKind.SPACELIKE_BIHARMONIC, FamilyKind.SPACELIKE_HORIZONTAL):
        k = math.sinh(shape)
        if kind == FamilyKind.SPACELIKE_HORIZONTAL:
            return branch * 1.0
        return k + branch * math.sqrt(5.0 * k * k + 1.0)
    c = math.cosh(shape)
    return c + branch * math.sqrt(5.0 * c * c - 1.0)


# ---------------------------------------------------------------------------
# Helix-form builders
# ---------------------------------------------------------------------------


def _dm_cosh(u, a, m):
    return a ** m * (math.cosh(u) if m % 2 == 0 else math.sinh(u))


def _dm_sinh(u, a, m):
    return a ** m * (math.sinh(u) if m % 2 == 0 else math.cosh(u))


def _helix_frame_curve(form, amp, tilt, slope_dd, phase):
    spec = HelixSpec(form, amp, tilt, slope_dd[0], slope_dd[1], phase)
    a = slope_dd[0]

    def derivative(s, order):
        u = a * s + phase
        f = amp * a ** order
        c, sh = math.cosh(u), math.sinh(u)
        if (order % 2 == 1) == (form == 0):
            return (f * sh, f * c, 0.0)
        return (f * c, f * sh, 0.0)

    return FrameCurve(spec.tangent, derivative=derivative, helix=spec)


def _helix_coordinate_curve(form, amp, tilt, slope_dd, phase, offsets):
    spec = HelixSpec(form, amp, tilt, slope_dd[0], slope_dd[1], phase)
    a = slope_dd[0]
    if a == 0.0:
        raise DegenerateGeodesicError(
            "slope 0 does not integrate to the closed coordinate form"
        )
    c1, c2, c3 = (float(offsets[0]), float(offsets[1]), float(offsets[2]))
    ra = amp / a
    p_coef = 2.0 * c1 * amp / a
    q_coef = 2.0 * c2 * amp / a
    if form == 0:
        lin = 2.0 * (tilt - amp * amp / a)
    else:
        lin = 2.0 * (tilt + amp * amp / a)

    def position(s):
        u = a * s + phase
        ch, sh = math.cosh(u), math.sinh(u)
        if form == 0:
            return (
                ra * sh + c1,
                ra * ch + c2,
                lin * s + p_coef * ch - q_coef * sh + c3,
            )
        return (
            ra * ch + c1,
            ra * sh + c2,
            lin * s + p_coef * sh - q_coef * ch + c3,
        )

    def derivative(s, order):
        u = a * s + phase
        if form == 0:
            x = ra * _dm_sinh(u, a, order)
            y = ra * _dm_cosh(u, a, order)
            z = p_coef * _dm_cosh(u, a, order) - q_coef * _dm_sinh(u, a, order)
        else:
            x = ra * _dm_cosh(u, a, order)
            y = ra * _dm_sinh(u, a, order)
            z = p_coef * _dm_sinh(u, a, order) - q_coef * _dm_cosh(u, a, order)
        if order == 1:
            z += lin
        return (x, y, z)

    return CoordinateCurve.from_functions(position, derivative=derivative,
                                          helix=spec)


def make_spacelike_biharmonic(alpha0, branch=1, phase=0.0,
                              offsets=(0.0, 0.0, 0.0), as_printed=False):
    """Spacelike proper-biharmonic helix with shape parameter α₀.

    Tangent ``(cosh α₀ · cosh u, cosh α₀ · sinh u, sinh α₀)`` with
    ``u = a·s + phase`` and ``a`` the chosen root of the slope quadratic.
    Returns an analytic :class:`CoordinateCurve` (the closed coordinate
    integral of the tangent, shifted by ``offsets``).
    """
    branch = _coerce_branch(branch)
    alpha0 = float(alpha0)
    amp, tilt = math.cosh(alpha0), math.sinh(alpha0)
    if as_printed:
        slope = (_printed_slope(FamilyKind.SPACELIKE_BIHARMONIC, alpha0, branch), 0.0)
    else:
        plus, minus = _slope_roots_dd(amp, tilt)
        slope = plus if branch == 1 else minus
    return _helix_coordinate_curve(0, amp, tilt, slope, float(phase), offsets)


def make_timelike_biharmonic(nu0, branch=1, phase=0.0,
                             offsets=(0.0, 0.0, 0.0), as_printed=False):
    """Timelike proper-biharmonic helix with shape parameter ν₀ ≠ 0.

    Tangent ``(sinh ν₀ · cosh u, sinh ν₀ · sinh u, cosh ν₀)``. At ν₀ = 0 the
    family collapses to a geodesic (zero curvature) and
    :class:`DegenerateGeodesicError` is raised.
    """
    branch = _coerce_branch(branch)
    nu0 = float(nu0)
    amp, tilt = math.sinh(nu0), math.cosh(nu0)
    if amp == 0.0:
        raise DegenerateGeodesicError(
            "the timelike biharmonic family degenerates to a geodesic at shape 0"
        )
    if as_printed:
        slope = (_printed_slope(FamilyKind.TIMELIKE_BIHARMONIC, nu0, branch), 0.0)
    else:
        plus, minus = _slope_roots_dd(amp, tilt)
        slope = plus if branch == 1 else minus
    return _helix_coordinate_curve(0, amp, tilt, slope, float(phase), offsets)


def make_spacelike_horizontal(branch=1, phase=0.0, offsets=(0.0, 0.0, 0.0),
                              as_printed=False):
    """Horizontal spacelike proper-biharmonic curve (the α₀ = 0 member).

    Corrected slope ±2; ``as_printed=True`` uses the published slope ±1,
    whose bitension residual is exactly 3 at s = 0 (zero phase).
    With zero phase and offsets the curve is
    ``(sinh(2s)/2, cosh(2s)/2, −s)``.
    """
    branch = _coerce_branch(branch)
    if as_printed:
        slope = (branch * 1.0, 0.0)
    else:
        plus, minus = _slope_roots_dd(1.0, 0.0)
        slope = plus if branch == 1 else minus
    return _helix_coordinate_curve(0, 1.0, 0.0, slope, float(phase), offsets)


def make_timelike_horizontal_helix(m, offsets=(0.0, 0.0, 0.0)):
    """Flat timelike helix ``T = (sinh(m·s), cosh(m·s), 0)``.

    Coordinate-backed: the position is ``(cosh(m·s)/m + c1, sinh(m·s)/m +
    c2, …)``. Unit-speed timelike for every m; degenerates to a geodesic
    at m = 0 (raises). No member is biharmonic — the closure identity
    defect is m² + 4.
    """
    m = float(m)
    if m == 0.0:
        raise DegenerateGeodesicError(
            "the flat timelike helix is a geodesic at frequency 0"
        )
    return _helix_coordinate_curve(1, 1.0, 0.0, (m, 0.0), 0.0, offsets)


def make_helix(kind, tilt, slope, phase=0.0):
    """General constant-frame-angle helix as a :class:`FrameCurve`.

    ``kind``: ``"spacelike"`` gives tangent
    ``(cosh(tilt)·cosh u, cosh(tilt)·sinh u, sinh(tilt))``; ``"timelike"``
    gives ``(sinh(tilt)·cosh u, sinh(tilt)·sinh u, cosh(tilt))`` (tilt ≠ 0);
    ``"timelike-flat"`` gives ``(cos(tilt)·sinh u, cos(tilt)·cosh u,
    sin(tilt))`` — the flat-helix family that stays timelike with |T3| < 1.
    ``slope`` may be a float or an ``(hi, lo)`` pair.
    """
    tilt = float(tilt)
    if isinstance(slope, (tuple, list)):
        slope_dd = (float(slope[0]), float(slope[1]))
    else:
        slope_dd = (float(slope), 0.0)
    if kind == "spacelike":
        amp, t3 = math.cosh(tilt), math.sinh(tilt)
        form = 0
    elif kind == "timelike":
        amp, t3 = math.sinh(tilt), math.cosh(tilt)
        form = 0
        if amp == 0.0:
            raise DegenerateGeodesicError(
                "timelike helix with tilt 0 is a geodesic"
            )
    elif kind == "timelike-flat":
        amp, t3 = math.cos(tilt), math.sin(tilt)
        form = 1
    else:
        raise InvalidInputError("unknown helix kind %r" % (kind,))
    return _helix_frame_curve(form, amp, t3, slope_dd, float(phase))


# ---------------------------------------------------------------------------
# b3zero curves (vanishing binormal third component)
# ---------------------------------------------------------------------------


def linear_profile(p, q):
    """Profile α(s) = p + q·s as a jet callable (value and 3 derivatives)."""
    p = float(p)
    q = float(q)

    def jets(s):
        return (p + q * s, q, 0.0, 0.0)

    return jets


def sine_profile(p, q, w):
    """Profile α(s) = p + q·sin(w·s) as a jet callable."""
    p = float(p)
    q = float(q)
    w = float(w)

    def jets(s):
        ws = w * s
        return (
            p + q * math.sin(ws),
            q * w * math.cos(ws),
            -q * w * w * math.sin(ws),
            -q * w * w * w * math.cos(ws),
        )

    return jets


def _jets_hyperbolic(g):
    """cosh∘g and sinh∘g jets to order 3 from the jets of g."""
    c0, s0 = math.cosh(g[0]), math.sinh(g[0])
    g1, g2, g3 = g[1], g[2], g[3]
    ch = (
        c0,
        s0 * g1,
        c0 * g1 * g1 + s0 * g2,
        s0 * g1 * g1 * g1 + 3.0 * c0 * g1 * g2 + s0 * g3,
    )
    sh = (
        s0,
        c0 * g1,
        s0 * g1 * g1 + c0 * g2,
        c0 * g1 * g1 * g1 + 3.0 * s0 * g1 * g2 + c0 * g3,
    )
    return ch, sh


def _jets_mul(a, b):
    """Leibniz product jets to order 3."""
    return (
        a[0] * b[0],
        a[1] * b[0] + a[0] * b[1],
        a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
        a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3],
    )


def _fd_jet_wrapper(alpha, h=1e-4):
    """Jet callable from a plain value callable via central differences."""

    def jets(s):
        f = alpha
        v = f(s)
        d1 = (f(s + h) - f(s - h)) / (2.0 * h)
        d2 = (f(s + h) - 2.0 * v + f(s - h)) / (h * h)
        d3 = (f(s + 2 * h) / 2.0 - f(s + h) + f(s - h) - f(s - 2 * h) / 2.0) / (
            h * h * h
        )
        return (v, d1, d2, d3)

    return jets


def make_b3zero_curve(kind, alpha, s_range, beta=None):
    """Unit-speed curve with identically vanishing binormal third component.

    ``kind`` is ``"b3zero-spacelike"`` (tangent
    ``(cosh α cosh β, cosh α sinh β, sinh α)`` with ``β' = 2 sinh α``) or
    ``"b3zero-timelike"`` (``(sinh α cosh β, sinh α sinh β, cosh α)`` with
    ``β' = 2 cosh α``); plain ``"spacelike"``/``"timelike"`` are accepted.

    ``alpha`` is a profile callable: either ``alpha(s) → (α, α', α'', α''')``
    (see :func:`linear_profile` / :func:`sine_profile`) or a plain value
    callable, in which case its derivatives are finite-differenced. ``beta``
    optionally supplies a closed-form antiderivative ``β(s)`` with
    ``β(s_range[0]) = 0``; by default β is obtained by adaptive quadrature.

    A profile with α' ≡ 0 on the range gives a curve of vanishing curvature;
    that degenerate request raises :class:`DegenerateGeodesicError`.

    Conditioning: β is anchored to 0 at ``s_range[0]`` and the tangent
    components grow like cosh β, so the unit-speed identity holds in double
    precision only to about ``cosh²β · 2e-16``. In the timelike case β drifts
    at rate |β'| = 2·cosh α ≥ 2; evaluate within a few units of the anchor
    (|β| ≲ 8) for 1e-9-grade results.
    """
    kd = str(getattr(kind, "value", kind))
    if kd in ("b3zero-spacelike", "spacelike"):
        spacelike = True
    elif kd in ("b3zero-timelike", "timelike"):
        spacelike = False
    else:
        raise InvalidInputError("unknown b3zero kind %r" % (kind,))
    try:
        s0, s1 = float(s_range[0]), float(s_range[1])
    except (TypeError, IndexError, ValueError) as exc:
        raise InvalidInputError("s_range must be a pair of reals") from exc
    if not (math.isfinite(s0) and math.isfinite(s1) and s1 > s0):
        raise InvalidInputError("invalid s_range %r" % (s_range,))

    probe = alpha(s0)
    if isinstance(probe, (int, float)):
        alpha_jets = _fd_jet_wrapper(alpha)
        analytic = False
    else:
        alpha_jets = alpha
        analytic = True

    # reject profiles that degenerate to a geodesic (zero curvature)
    n_chk = 33
    max_a1 = max(
        abs(alpha_jets(s0 + (s1 - s0) * i / (n_chk - 1))[1]) for i in range(n_chk)
    )
    if max_a1 <= 1e-12:
        raise DegenerateGeodesicError(
            "profile has vanishing derivative on the range: "
            "the curve would be a geodesic"
        )

    if beta is None:
        from scipy.integrate import quad

        if spacelike:
            integrand = lambda sig: 2.0 * math.sinh(alpha_jets(sig)[0])
        else:
            integrand = lambda sig: 2.0 * math.cosh(alpha_jets(sig)[0])
        cache = {}

        def beta0(s):
            v = cache.get(s)
            if v is None:
                v = quad(integrand, s0, s, epsabs=1e-13, epsrel=1e-13,
                         limit=500)[0]
                cache[s] = v
            return v

    else:
        beta0 = beta

    def full_jets(s):
        aj = alpha_jets(float(s))
        ach, ash = _jets_hyperbolic(aj)
        if spacelike:
            radial, axial = ach, ash
        else:
            radial, axial = ash, ach
        # β' = 2·(axial component of T3's generator): jets shift by one order
        bj = (beta0(float(s)), 2.0 * axial[0], 2.0 * axial[1], 2.0 * axial[2])
        bch, bsh = _jets_hyperbolic(bj)
        tx = _jets_mul(radial, bch)
        ty = _jets_mul(radial, bsh)
        tz = axial
        return tuple((tx[r], ty[r], tz[r]) for r in range(4))

    def tangent(s):
        return full_jets(s)[0]

    def derivative(s, order):
        return full_jets(s)[order]

    curve = FrameCurve(tangent, derivative=derivative if analytic else None)
    curve.b3zero_kind = "spacelike" if spacelike else "timelike"
    curve.s_range = (s0, s1)
    return curve


def make_b3zero_linear(kind, p, q, s_range):
    """b3zero curve with profile α = p + q·s and the closed-form β.

    For the linear profile the β antiderivative is elementary:
    ``β = (2/q)·(cosh(p+q·s) − cosh(p+q·s₀))`` in the spacelike case and the
    same with ``sinh`` in the timelike case, avoiding quadrature entirely.
    ``q = 0`` would give a curve of vanishing curvature and raises
    :class:`DegenerateGeodesicError`.
    """
    p = float(p)
    q = float(q)
    if q == 0.0:
        raise DegenerateGeodesicError(
            "a constant profile gives a curve of vanishing curvature"
        )
    try:
        s0 = float(s_range[0])
    except (TypeError, IndexError, ValueError) as exc:
        raise InvalidInputError("s_range must be a pair of reals") from exc
    kd = str(getattr(kind, "value", kind))
    if kd in ("b3zero-spacelike", "spacelike"):
        beta = lambda s: (2.0 / q) * (math.cosh(p + q * s) - math.cosh(p + q * s0))
    elif kd in ("b3zero-timelike", "timelike"):
        beta = lambda s: (2.0 / q) * (math.sinh(p + q * s) - math.sinh(p + q * s0))
    else:
        raise InvalidInputError("unknown b3zero kind %r" % (kind,))
    return make_b3zero_curve(kd, linear_profile(p, q), s_range, beta=beta)


# ---------------------------------------------------------------------------
# Geodesics
# ---------------------------------------------------------------------------


def make_geodesic(direction=(0.0, 0.0, 1.0)):
    """Straight-line geodesic through the origin with constant frame tangent.

    ``direction`` must be unit (|inner(d, d)| = 1) with vanishing
    self-acceleration Γ(d, d) = 0 — i.e. either purely vertical or purely
    planar. Coordinates: ``(d1·s, d2·s, 2·d3·s)``.
    """
    d = tuple(float(c) for c in direction)
    if len(d) != 3 or not all(math.isfinite(c) for c in d):
        raise InvalidInputError("direction must be a finite 3-vector")
    g = d[0] * d[0] - d[1] * d[1] - d[2] * d[2]
    if abs(abs(g) - 1.0) > 1e-12:
        raise InvalidInputError(
            "direction must be unit under the frame metric, |inner| = %r"
            % (abs(g),)
        )
    gamma_sq = (-2.0 * d[1] * d[2], -2.0 * d[0] * d[2], 0.0)
    if max(abs(c) for c in gamma_sq) > 1e-12:
        raise InvalidInputError(
            "direction %r does not generate a geodesic (Γ(d, d) ≠ 0)" % (d,)
        )

    def position(s):
        return (d[0] * s, d[1] * s, 2.0 * d[2] * s)

    def derivative(s, order):
        if order == 1:
            return (d[0], d[1], 2.0 * d[2])
        return (0.0, 0.0, 0.0)

    return CoordinateCurve.from_functions(position, derivative=derivative)
