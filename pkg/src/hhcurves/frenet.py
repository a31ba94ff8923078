"""Frenet apparatus of non-degenerate unit-speed curves.

``compute_frenet`` returns the frame (T, N, B), the curvatures (k1 ≥ 0, k2)
and the causal signs (eps1, eps2, eps3) at a point:

* ``k1 = sqrt(|inner(A, A)|)`` with ``A = ∇_T T``, ``eps2 = sign(inner(A, A))``;
* ``N = A / (k1·eps2)``, ``B = cross(T, N)``, ``k2 = inner(∇_T N, B)``;
* ``eps1 = sign(inner(T, T))``, ``eps3 = sign(inner(B, B))``; the product
  eps1·eps2·eps3 is +1 for every non-degenerate frame.

Degeneracies raise: :class:`GeodesicDegenerateError` when ``‖∇_T T‖ <= tol``
and :class:`NullNormalDegenerateError` when the acceleration is non-zero but
null. Unit speed is checked, never silently enforced — see
``project_unit_jets`` in the kernel backends for what the check tolerates.

The Frenet frame obeys the closure identities ``∇_T N = −k1·eps1·T +
k2·eps3·B`` and ``∇_T B = −k2·eps2·N``; tests pin both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from hhcurves import _kernels
from hhcurves.errors import InvalidInputError
from hhcurves.frame import FrameVector, cross, inner

__all__ = [
    "FrenetData",
    "ExtendedFrenetData",
    "FrenetGridSummary",
    "point_data",
    "compute_frenet",
    "extended_frenet",
    "frenet_over_grid",
    "DEFAULT_GEO_TOL_ANALYTIC",
    "DEFAULT_GEO_TOL_FD",
]

DEFAULT_GEO_TOL_ANALYTIC = 1e-9
DEFAULT_GEO_TOL_FD = 1e-5
_UNIT_TOL_ANALYTIC = 1e-9
_UNIT_TOL_FD = 1e-6


@dataclass(frozen=True)
class FrenetData:
    """Frenet frame, curvatures, and causal signs at one point."""

    t: FrameVector
    n: FrameVector
    b: FrameVector
    k1: float
    k2: float
    eps1: float
    eps2: float
    eps3: float

    def validate(self, tol=1e-6):
        """Check the defining invariants; raises on violation.

        Verifies |inner(T,T)| = |inner(N,N)| = |inner(B,B)| = 1 with the
        recorded signs, mutual orthogonality, B = cross(T, N), k1 >= 0, and
        eps1·eps2·eps3 = +1.
        """
        defects = [
            abs(inner(self.t, self.t) - self.eps1),
            abs(inner(self.n, self.n) - self.eps2),
            abs(inner(self.b, self.b) - self.eps3),
            abs(inner(self.t, self.n)),
            abs(inner(self.t, self.b)),
            abs(inner(self.n, self.b)),
        ]
        bb = cross(self.t, self.n)
        defects.extend(abs(bb[i] - self.b[i]) for i in range(3))
        worst = max(defects)
        if worst > tol:
            raise InvalidInputError(
                "Frenet data violates frame invariants (defect %r > %r)"
                % (worst, tol)
            )
        if self.k1 < 0:
            raise InvalidInputError("k1 must be non-negative, got %r" % (self.k1,))
        if self.eps1 * self.eps2 * self.eps3 != 1.0:
            raise InvalidInputError(
                "sign product eps1*eps2*eps3 must be +1, got %r"
                % ((self.eps1, self.eps2, self.eps3),)
            )
        return worst


@dataclass(frozen=True)
class ExtendedFrenetData:
    """Frenet data plus the derivative information the bitension field needs."""

    data: FrenetData
    k1_prime: float
    k1_second: float
    k2_prime: float
    nabla_t_n: FrameVector
    nabla_t_b: FrameVector


@dataclass(frozen=True)
class FrenetGridSummary:
    """Per-point Frenet data over a grid plus constancy statistics."""

    grid: tuple
    data: tuple
    k1_mean: float
    k2_mean: float
    n3_mean: float
    b3_mean: float
    k1_max_dev: float
    k2_max_dev: float
    n3_max_dev: float
    b3_max_dev: float


def _tolerances(curve, geo_tol, unit_tol):
    analytic = bool(getattr(curve, "analytic", True))
    if geo_tol is None:
        geo_tol = DEFAULT_GEO_TOL_ANALYTIC if analytic else DEFAULT_GEO_TOL_FD
    if unit_tol is None:
        unit_tol = _UNIT_TOL_ANALYTIC if analytic else _UNIT_TOL_FD
    return geo_tol, unit_tol


def point_data(curve, s, geo_tol=None, unit_tol=None):
    """Raw kernel evaluation at one point.

    Returns ``(fr, tau_direct, tau_frenet)`` where ``fr`` is the kernel's flat
    Frenet tuple. Helix-form curves go through the double-double kernel; all
    others go through jet projection plus the compensated double pipeline.
    Raises the degeneracy errors and :class:`UnitSpeedError` as appropriate.
    """
    geo_tol, unit_tol = _tolerances(curve, geo_tol, unit_tol)
    hx = getattr(curve, "helix", None)
    if hx is not None:
        return _kernels.helix_eval(
            hx.form, hx.amp, hx.tilt, hx.slope_hi, hx.slope_lo, hx.phase,
            float(s), geo_tol,
        )
    jets = curve.tangent_jets(s)
    jets = _kernels.project_unit_jets(jets, unit_tol)
    return _kernels.point_eval(jets, geo_tol)


def _frenet_from_flat(fr):
    return FrenetData(
        t=FrameVector(*fr[8:11]),
        n=FrameVector(*fr[11:14]),
        b=FrameVector(*fr[14:17]),
        k1=fr[0],
        k2=fr[3],
        eps1=fr[5],
        eps2=fr[6],
        eps3=fr[7],
    )


def compute_frenet(curve, s, geo_tol=None, unit_tol=None):
    """Frenet data of the curve at parameter value ``s``."""
    geo_tol, unit_tol = _tolerances(curve, geo_tol, unit_tol)
    hx = getattr(curve, "helix", None)
    if hx is not None:
        fr = _kernels.helix_eval(
            hx.form, hx.amp, hx.tilt, hx.slope_hi, hx.slope_lo, hx.phase,
            float(s), geo_tol,
        )[0]
    else:
        jets = curve.tangent_jets(s)
        jets = _kernels.project_unit_jets(jets, unit_tol)
        fr = _kernels.frenet_jets(jets, geo_tol)
    return _frenet_from_flat(fr)


def extended_frenet(curve, s, geo_tol=None, unit_tol=None):
    """Frenet data plus curvature derivatives and ∇_T N, ∇_T B."""
    fr = point_data(curve, s, geo_tol=geo_tol, unit_tol=unit_tol)[0]
    return ExtendedFrenetData(
        data=_frenet_from_flat(fr),
        k1_prime=fr[1],
        k1_second=fr[2],
        k2_prime=fr[4],
        nabla_t_n=FrameVector(*fr[17:20]),
        nabla_t_b=FrameVector(*fr[20:23]),
    )


def frenet_over_grid(curve, grid, geo_tol=None, unit_tol=None):
    """Frenet data at every grid point plus deviation-from-mean statistics."""
    grid = tuple(float(s) for s in grid)
    if not grid:
        raise InvalidInputError("grid must be non-empty")
    data = tuple(
        compute_frenet(curve, s, geo_tol=geo_tol, unit_tol=unit_tol)
        for s in grid
    )
    cols = {
        "k1": [d.k1 for d in data],
        "k2": [d.k2 for d in data],
        "n3": [d.n[2] for d in data],
        "b3": [d.b[2] for d in data],
    }
    stats = {}
    for name, vals in cols.items():
        mean = math.fsum(vals) / len(vals)
        stats[name + "_mean"] = mean
        stats[name + "_max_dev"] = max(abs(v - mean) for v in vals)
    return FrenetGridSummary(grid=grid, data=data, **stats)
