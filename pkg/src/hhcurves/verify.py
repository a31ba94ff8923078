"""Claim verification suite.

A fixed registry of 13 claims covers the geometric content this package
implements: the frame algebra tables, the cross-product theorem, the
biharmonicity conditions, the curve families, and the nonexistence result.
Each claim row carries:

* ``claim_id`` — stable identifier;
* ``anchor`` — where the claim lives in the source theorem inventory
  (section number plus a short descriptor);
* ``status`` — ``Confirmed``, ``ConfirmedWithErratum``, or
  ``Refuted-as-printed``. ``Refuted-as-printed`` is reserved for published
  constants that fail the direct bitension oracle; the corrected statement is
  then confirmed in its own row (see ``horizontal-family`` /
  ``horizontal-slope-printed``).
* ``max_residual`` — the largest numeric defect observed for the confirmed
  content (for a refutation row, the witness residual itself);
* ``details`` — key=value summary of the evidence.

Every check recomputes its subject from an independent oracle: tables are
re-derived from the brackets and metric, curvature is brute-forced from the
connection, closed-form family constants are compared against the direct
covariant jet chain, and the Frenet-form bitension is cross-validated against
it. Randomized sweeps draw from a per-check generator seeded as
``[seed, registry_index]``, so two runs with the same seed produce
byte-identical reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from hhcurves import biharmonic as _biharmonic
from hhcurves import connection as _connection
from hhcurves import curves as _curves
from hhcurves import families as _families
from hhcurves import frame as _frame
from hhcurves import frenet as _frenet
from hhcurves.errors import InvalidInputError

__all__ = [
    "STATUS_CONFIRMED",
    "STATUS_CONFIRMED_WITH_ERRATUM",
    "STATUS_REFUTED_AS_PRINTED",
    "EXPECTED_STATUS",
    "VerifyConfig",
    "CheckResult",
    "VerificationReport",
    "registry_ids",
    "run_all",
    "verify_claim",
]

STATUS_CONFIRMED = "Confirmed"
STATUS_CONFIRMED_WITH_ERRATUM = "ConfirmedWithErratum"
STATUS_REFUTED_AS_PRINTED = "Refuted-as-printed"


@dataclass(frozen=True)
class VerifyConfig:
    """Verification options: RNG seed and an optional tolerance override."""

    seed: int = 7
    tol: float = None

    def __post_init__(self):
        if not isinstance(self.seed, int):
            raise InvalidInputError("seed must be an integer, got %r" % (self.seed,))
        if self.tol is not None and not (
            isinstance(self.tol, (int, float)) and math.isfinite(self.tol)
            and self.tol > 0
        ):
            raise InvalidInputError(
                "tol must be a finite positive real, got %r" % (self.tol,)
            )


@dataclass(frozen=True)
class CheckResult:
    claim_id: str
    anchor: str
    status: str
    max_residual: float
    details: str

    def to_dict(self):
        return {
            "claim_id": self.claim_id,
            "anchor": self.anchor,
            "status": self.status,
            "max_residual": self.max_residual,
            "details": self.details,
        }


@dataclass(frozen=True)
class VerificationReport:
    schema_version: int
    seed: int
    checks: tuple

    def to_dict(self):
        return {
            "schema_version": self.schema_version,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def passed(self):
        """True when every status matches the pinned expected manifest."""
        return all(c.status == EXPECTED_STATUS[c.claim_id] for c in self.checks)


def _tol(cfg, default):
    return default if cfg.tol is None else cfg.tol


def _fmt(v):
    return "%.6e" % (v + 0.0)


def _det3(x, y, z):
    return (
        x[0] * (y[1] * z[2] - y[2] * z[1])
        - x[1] * (y[0] * z[2] - y[2] * z[0])
        + x[2] * (y[0] * z[1] - y[1] * z[0])
    )


def _vdiff(u, v):
    return max(abs(u[i] - v[i]) for i in range(3))


def _vmax(u):
    return max(abs(u[i]) for i in range(3))


# ---------------------------------------------------------------------------
# Individual checks. Each returns (status, max_residual, details).
# ---------------------------------------------------------------------------


def _check_metric_signature(cfg, rng):
    table = _connection.CONNECTION
    good = _connection.metric_compatibility_defect(table, metric=(1, -1, -1))
    tors = _connection.torsion_defect(table)
    flipped = _connection.metric_compatibility_defect(table, metric=(1, 1, -1))
    ok = good == 0 and tors == 0
    erratum_shown = flipped != 0
    if not ok:
        status = STATUS_REFUTED_AS_PRINTED
    elif erratum_shown:
        status = STATUS_CONFIRMED_WITH_ERRATUM
    else:
        status = STATUS_CONFIRMED
    details = (
        "signature (+,-,-): compatibility_defect=%s, torsion_defect=%s (exact); "
        "flipped plane signature (+,+,-) as in the displayed metric line: "
        "compatibility_defect=%s -- the displayed sign is inconsistent with "
        "the connection table and is corrected to (+,-,-)"
        % (good, tors, flipped)
    )
    return status, float(good), details


def _check_connection_table(cfg, rng):
    table = _connection.CONNECTION
    derived = _connection.connection_from_brackets()
    exact = derived.coeffs == table.coeffs
    kernel_ok = True
    basis = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    for i in range(3):
        for j in range(3):
            got = _connection.covariant_derivative_along(
                basis[i], basis[j], (0.0, 0.0, 0.0)
            )
            want = table.coeffs[i][j]
            if tuple(got) != tuple(float(c) for c in want):
                kernel_ok = False
    compat = _connection.metric_compatibility_defect(table)
    tors = _connection.torsion_defect(table)
    ok = exact and kernel_ok and compat == 0 and tors == 0
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "table equals the torsion-free metric-compatible solve from the "
        "brackets: %s; kernel bilinear matches on all 9 basis pairs: %s; "
        "compatibility_defect=%s, torsion_defect=%s (exact integer arithmetic)"
        % (exact, kernel_ok, compat, tors)
    )
    return status, 0.0 if ok else 1.0, details


def _check_curvature_table(cfg, rng):
    table = _connection.CURVATURE
    brute = _connection.curvature_from_connection()
    exact = brute.coeffs == table.coeffs
    basis = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    kernel_ok = True
    n_entries = 0
    for i in range(3):
        for j in range(3):
            for k in range(3):
                got = _connection.curvature(basis[i], basis[j], basis[k])
                want = table.coeffs[i][j][k]
                n_entries += 1
                if tuple(got) != tuple(float(c) for c in want):
                    kernel_ok = False
    ex1 = _connection.riemann_christoffel(basis[0], basis[1], basis[0], basis[1])
    ex2 = _connection.riemann_christoffel(basis[0], basis[2], basis[0], basis[2])
    examples_ok = ex1 == -3.0 and ex2 == 1.0
    ok = exact and kernel_ok and examples_ok
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "brute-force curvature from the connection equals the table on all "
        "%d basis entries exactly: %s; type-(0,4) samples: "
        "(e1,e2,e1,e2)=%s, (e1,e3,e1,e3)=%s"
        % (n_entries, exact and kernel_ok, repr(ex1), repr(ex2))
    )
    return status, 0.0 if ok else 1.0, details


def _check_cross_properties(cfg, rng):
    tol = _tol(cfg, 1e-12)
    inner, cross, mixed = _frame.inner, _frame.cross, _frame.mixed
    worst = 0.0
    n_real = 1000
    for _ in range(n_real):
        x, y, z = (tuple(rng.uniform(-1.0, 1.0, 3)) for _ in range(3))
        a, b = float(rng.uniform(-1.0, 1.0)), float(rng.uniform(-1.0, 1.0))
        cxy = tuple(cross(x, y))
        # (i) bilinearity and antisymmetry
        left = tuple(cross(tuple(a * x[i] + b * y[i] for i in range(3)), z))
        cxz, cyz = tuple(cross(x, z)), tuple(cross(y, z))
        ref = tuple(a * cxz[i] + b * cyz[i] for i in range(3))
        worst = max(worst, _vdiff(left, ref))
        worst = max(worst, _vdiff(cxy, tuple(-c for c in cross(y, x))))
        # (ii) orthogonality to both factors
        worst = max(worst, abs(inner(cxy, x)), abs(inner(cxy, y)))
        # (iv) double-cross expansion
        dbl = tuple(cross(cxy, z))
        gxz, gyz = inner(x, z), inner(y, z)
        ref4 = tuple(gxz * y[i] - gyz * x[i] for i in range(3))
        worst = max(worst, _vdiff(dbl, ref4))
        # (v) mixed product vs -det and cyclic symmetry
        m = mixed(x, y, z)
        worst = max(worst, abs(m + _det3(x, y, z)))
        worst = max(worst, abs(m - mixed(y, z, x)), abs(m - mixed(z, x, y)))
        # (vi) cyclic double-cross sum
        j1 = tuple(cross(cxy, z))
        j2 = tuple(cross(cross(y, z), x))
        j3 = tuple(cross(cross(z, x), y))
        worst = max(
            worst, _vmax(tuple(j1[i] + j2[i] + j3[i] for i in range(3)))
        )
    # basis identities and integer triples: exact
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    basis_ok = (
        tuple(cross(e1, e2)) == (0.0, 0.0, 1.0)
        and tuple(cross(e2, e3)) == (-1.0, 0.0, 0.0)
        and tuple(cross(e3, e1)) == (0.0, 1.0, 0.0)
    )
    int_ok = True
    for _ in range(50):
        x, y, z = (tuple(int(c) for c in rng.integers(-3, 4, 3)) for _ in range(3))
        cxy = tuple(cross(x, y))
        if tuple(cross(y, x)) != tuple(-c for c in cxy):
            int_ok = False
        if inner(cxy, x) != 0.0 or inner(cxy, y) != 0.0:
            int_ok = False
        if mixed(x, y, z) != -float(_det3(x, y, z)):
            int_ok = False
        gxz, gyz = inner(x, z), inner(y, z)
        if tuple(cross(cxy, z)) != tuple(
            float(gxz * y[i] - gyz * x[i]) for i in range(3)
        ):
            int_ok = False
    ok = worst <= tol and basis_ok and int_ok
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "%d seeded real triples, properties (i)-(vi): max_residual=%s "
        "(tol %s); basis identities exact: %s; 50 integer triples exact: %s"
        % (n_real, _fmt(worst), _fmt(tol), basis_ok, int_ok)
    )
    return status, worst, details


def _generic_frame_curve():
    """Analytic unit spacelike curve with N3·B3 != 0 (erratum witness).

    Tangent (cosh α cosh β, cosh α sinh β, sinh α) with α = 0.3 + 0.2·s and
    β = 1.7·s; β' is unrelated to 2·sinh α, so neither N3 nor B3 vanishes.
    """

    def full(s):
        aj = (0.3 + 0.2 * s, 0.2, 0.0, 0.0)
        bj = (1.7 * s, 1.7, 0.0, 0.0)
        ach, ash = _families._jets_hyperbolic(aj)
        bch, bsh = _families._jets_hyperbolic(bj)
        tx = _families._jets_mul(ach, bch)
        ty = _families._jets_mul(ach, bsh)
        tz = ash
        return tuple((tx[r], ty[r], tz[r]) for r in range(4))

    return _curves.FrameCurve(
        lambda s: full(s)[0], derivative=lambda s, order: full(s)[order]
    )


def _closure_residuals(curve, s):
    """Residuals of the three frame evolution equations at one point."""
    ext = _frenet.extended_frenet(curve, s)
    d = ext.data
    jets = curve.tangent_jets(s)
    from hhcurves import _kernels

    a10 = _kernels.covd(jets[0], jets[0], jets[1])
    rt = _vdiff(tuple(a10), tuple(d.k1 * d.eps2 * d.n))
    rn = _vdiff(
        tuple(ext.nabla_t_n),
        tuple(-d.k1 * d.eps1 * d.t + d.k2 * d.eps3 * d.b),
    )
    rb = _vdiff(tuple(ext.nabla_t_b), tuple(-d.k2 * d.eps2 * d.n))
    return max(rt, rn, rb)


def _check_bitension_conditions(cfg, rng):
    tol = _tol(cfg, 1e-9)
    samples = [
        (_families.make_spacelike_horizontal(branch=1), (-0.8, 0.0, 0.6)),
        (_families.make_spacelike_biharmonic(0.5, branch=-1, phase=0.3),
         (-0.5, 0.2, 1.0)),
        (_families.make_timelike_biharmonic(0.7, branch=1, phase=-0.2),
         (-0.5, 0.2, 1.0)),
        (_families.make_timelike_horizontal_helix(1.5), (-0.4, 0.0, 0.8)),
        (_families.make_b3zero_linear("spacelike", 0.4, 0.6, (0.0, 1.0)),
         (0.2, 0.5, 0.8)),
    ]
    closure_max = 0.0
    route_max = 0.0
    for curve, pts in samples:
        for s in pts:
            closure_max = max(closure_max, _closure_residuals(curve, s))
            td = _biharmonic.bitension_direct(curve, s)
            tf = _biharmonic.bitension_frenet_at(curve, s)
            route_max = max(route_max, _vdiff(tuple(td), tuple(tf)))
    for _ in range(40):
        tilt = float(rng.uniform(-1.0, 1.0))
        phase = float(rng.uniform(-1.0, 1.0))
        slope = float(rng.uniform(-3.0, 3.0))
        kind = "spacelike" if rng.uniform() < 0.5 else "timelike"
        if kind == "timelike":
            tilt = math.copysign(max(abs(tilt), 0.3), tilt if tilt else 1.0)
        amp = math.cosh(tilt) if kind == "spacelike" else math.sinh(tilt)
        if abs(amp * (slope - 2.0 * (math.sinh(tilt) if kind == "spacelike"
                                     else math.cosh(tilt)))) < 0.2:
            slope += 1.5
        hel = _families.make_helix(kind, tilt, slope, phase)
        for s in (-0.7, 0.4):
            td = _biharmonic.bitension_direct(hel, s)
            tf = _biharmonic.bitension_frenet_at(hel, s)
            route_max = max(route_max, _vdiff(tuple(td), tuple(tf)))
    # third-condition factor: direct oracle on a curve with N3·B3 != 0
    gen = _generic_frame_curve()
    ext = _frenet.extended_frenet(gen, 0.0)
    d = ext.data
    tau_d = _biharmonic.bitension_direct(gen, 0.0)
    cb_direct = d.eps3 * _frame.inner(tau_d, d.b)
    base = 2.0 * ext.k1_prime * d.k2 + d.k1 * ext.k2_prime
    cb_factor4 = (base - 4.0 * d.k1 * d.n[2] * d.b[2]) * d.eps2 * d.eps3
    cb_factor1 = (base - 1.0 * d.k1 * d.n[2] * d.b[2]) * d.eps2 * d.eps3
    n3b3 = d.n[2] * d.b[2]
    factor4_dev = abs(cb_direct - cb_factor4)
    factor1_dev = abs(cb_direct - cb_factor1)
    # torsion-zero reduction of the closure identity: pure sign algebra
    corollary_ok = True
    for _ in range(100):
        e1s = 1.0 if rng.uniform() < 0.5 else -1.0
        e3s = 1.0 if rng.uniform() < 0.5 else -1.0
        b3 = float(rng.uniform(-2.0, 2.0))
        k1sq = e1s * (e3s + 4.0 * b3 * b3)
        if k1sq <= 0.0:
            continue
        k1 = math.sqrt(k1sq)
        if abs(_biharmonic.identity_defect(k1, 0.0, e1s, e3s, b3)) > 1e-12:
            corollary_ok = False
    confirmed = max(closure_max, route_max, factor4_dev)
    ok = confirmed <= tol and corollary_ok
    erratum_shown = factor1_dev > 0.05
    if not ok:
        status = STATUS_REFUTED_AS_PRINTED
    elif erratum_shown:
        status = STATUS_CONFIRMED_WITH_ERRATUM
    else:
        status = STATUS_CONFIRMED
    details = (
        "frame evolution closure on 5 sample curves: max=%s; Frenet-form vs "
        "direct bitension on samples plus 40 seeded helices: max=%s; "
        "third-condition factor on a curve with N3*B3=%s: B-coefficient "
        "direct=%s, with factor 4 dev=%s, with the printed unit factor "
        "dev=%s -- the printed third condition understates the factor by 4 "
        "(downstream results carry N3*B3=0 and are unaffected); "
        "torsion-zero reduction consistent on 100 seeded sign tuples: %s"
        % (_fmt(closure_max), _fmt(route_max), _fmt(n3b3), _fmt(cb_direct),
           _fmt(factor4_dev), _fmt(factor1_dev), corollary_ok)
    )
    return status, confirmed, details


def _family_sweep(cfg, rng, shapes, maker, eps_want, timelike):
    tol = _tol(cfg, 1e-9)
    grid = [-2.0 + 0.05 * i for i in range(81)]
    worst = 0.0
    const_dev = 0.0
    printed_min = math.inf
    rows = []
    for shape in shapes:
        for branch in (1, -1):
            phase = float(rng.uniform(-1.0, 1.0))
            offsets = tuple(float(v) for v in rng.uniform(-1.0, 1.0, 3))
            curve = maker(shape, branch=branch, phase=phase, offsets=offsets)
            direct, fren = _biharmonic.residual_norms(curve, grid)
            res = max(max(direct), max(fren))
            worst = max(worst, res)
            summ = _frenet.frenet_over_grid(curve, grid)
            amp = math.sinh(shape) if timelike else math.cosh(shape)
            tilt = math.cosh(shape) if timelike else math.sinh(shape)
            slope = curve.helix.slope
            k1_want = abs(amp * (slope - 2.0 * tilt))
            k2_want = tilt * (slope - tilt) - amp * amp
            dev = max(
                abs(summ.k1_mean - k1_want), summ.k1_max_dev,
                abs(summ.k2_mean - k2_want), summ.k2_max_dev,
                abs(abs(summ.b3_mean) - abs(amp)), summ.b3_max_dev,
                abs(summ.n3_mean), summ.n3_max_dev,
            )
            const_dev = max(const_dev, dev)
            eps_ok = all(
                (d.eps1, d.eps2, d.eps3) == eps_want for d in summ.data
            )
            if not eps_ok:
                const_dev = math.inf
            printed = maker(shape, branch=branch, phase=phase,
                            offsets=offsets, as_printed=True)
            pres = _biharmonic.residual_norms(printed, [0.0])[0][0]
            printed_min = min(printed_min, pres)
            rows.append(
                "shape=%s branch=%+d: residual=%s, const_dev=%s, "
                "printed_slope_residual_s0=%s"
                % (repr(shape), branch, _fmt(res), _fmt(dev), _fmt(pres))
            )
    confirmed = max(worst, const_dev)
    ok = confirmed <= tol
    erratum_shown = printed_min > 100.0 * tol
    if not ok:
        status = STATUS_REFUTED_AS_PRINTED
    elif erratum_shown:
        status = STATUS_CONFIRMED_WITH_ERRATUM
    else:
        status = STATUS_CONFIRMED
    return status, confirmed, rows, printed_min


def _check_spacelike_family(cfg, rng):
    status, confirmed, rows, printed_min = _family_sweep(
        cfg, rng, (0.0, 0.5, -0.5, 1.0, -1.0),
        _families.make_spacelike_biharmonic, (1.0, -1.0, -1.0), False,
    )
    details = (
        "quadratic slope roots (discriminant tilt^2+4*amp^2): all residuals "
        "and closed-form constant deviations above; printed discriminant "
        "(5*sinh^2+1) refuted: min over cases of the s=0 residual = %s; %s"
        % (_fmt(printed_min), "; ".join(rows))
    )
    return status, confirmed, details


def _check_timelike_family(cfg, rng):
    status, confirmed, rows, printed_min = _family_sweep(
        cfg, rng, (0.5, -0.5, 1.0, -1.0),
        _families.make_timelike_biharmonic, (-1.0, -1.0, 1.0), True,
    )
    details = (
        "quadratic slope roots (discriminant tilt^2+4*amp^2): all residuals "
        "and closed-form constant deviations above; printed discriminant "
        "(5*cosh^2-1) refuted: min over cases of the s=0 residual = %s; "
        "note: one displayed derivative line in the integration uses the "
        "even hyperbolic function where the displayed solution and unit "
        "speed force the odd one; %s"
        % (_fmt(printed_min), "; ".join(rows))
    )
    return status, confirmed, details


def _seeded_b3zero_curves(rng, count):
    curves = []
    for i in range(count):
        p = float(rng.uniform(0.3, 1.0))
        q = float(rng.uniform(0.3, 0.9))
        w = float(rng.uniform(0.5, 1.4))
        kind = "b3zero-spacelike" if i % 2 == 0 else "b3zero-timelike"
        if i % 4 < 2:
            curves.append(_families.make_b3zero_linear(kind, p, q, (0.0, 1.0)))
        else:
            curves.append(
                _families.make_b3zero_curve(
                    kind, _families.sine_profile(p, q, w), (0.0, 1.0)
                )
            )
    return curves


_B3ZERO_POINTS = (0.15, 0.35, 0.55, 0.75, 0.9)


def _check_b3zero_signs(cfg, rng):
    tol = _tol(cfg, 1e-9)
    worst = 0.0
    signs_ok = True
    n = 0
    for curve in _seeded_b3zero_curves(rng, 12):
        for s in _B3ZERO_POINTS:
            d = _frenet.compute_frenet(curve, s)
            worst = max(worst, abs(d.b[2]))
            if d.eps1 != -d.eps2 or d.eps3 != -1.0:
                signs_ok = False
            n += 1
    ok = worst <= tol and signs_ok
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "12 seeded profile curves (linear and sine, both causal kinds), "
        "%d frame evaluations: max |B3|=%s (tol %s); eps1=-eps2 and "
        "eps3=-1 (binormal timelike) at every point: %s"
        % (n, _fmt(worst), _fmt(tol), signs_ok)
    )
    return status, worst, details


def _check_b3zero_k2(cfg, rng):
    tol = _tol(cfg, 1e-6)
    worst = 0.0
    verdicts_ok = True
    min_res = math.inf
    for curve in _seeded_b3zero_curves(rng, 12):
        for s in _B3ZERO_POINTS:
            d = _frenet.compute_frenet(curve, s)
            worst = max(worst, abs(d.k2 * d.k2 - 1.0))
        report = _biharmonic.check_biharmonic_conditions(
            curve, _B3ZERO_POINTS
        )
        if report.verdict != "NotBiharmonic":
            verdicts_ok = False
        min_res = min(min_res, min(report.residual_direct))
    ok = worst <= tol and verdicts_ok
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "12 seeded profile curves: max |k2^2-1|=%s (tol %s, measured torsion "
        "is -1 in this frame orientation); every curve NotBiharmonic: %s; "
        "smallest direct bitension norm observed=%s (bounded away from 0)"
        % (_fmt(worst), _fmt(tol), verdicts_ok, _fmt(min_res))
    )
    return status, worst, details


def _check_helix_lemma(cfg, rng):
    tol = _tol(cfg, 1e-9)
    worst = 0.0
    signs_ok = True
    flat_outside = True
    n0 = n1 = 0
    for _ in range(35):
        kind = "spacelike" if rng.uniform() < 0.5 else "timelike"
        tilt = float(rng.uniform(-1.0, 1.0))
        if kind == "timelike":
            tilt = math.copysign(max(abs(tilt), 0.3), tilt if tilt else 1.0)
        slope = float(rng.uniform(-3.0, 3.0))
        phase = float(rng.uniform(-1.0, 1.0))
        amp = math.cosh(tilt) if kind == "spacelike" else math.sinh(tilt)
        t3 = math.sinh(tilt) if kind == "spacelike" else math.cosh(tilt)
        if abs(amp * (slope - 2.0 * t3)) < 0.2:
            slope += 1.5
        hel = _families.make_helix(kind, tilt, slope, phase)
        k1_want = abs(amp * (slope - 2.0 * t3))
        k2_want = t3 * (slope - t3) - amp * amp
        for s in (-0.6, 0.3):
            d = _frenet.compute_frenet(hel, s)
            worst = max(
                worst, abs(d.n[2]), abs(d.k1 - k1_want),
                abs(d.k2 - k2_want), abs(abs(d.b[2]) - abs(amp)),
            )
            if d.eps1 != -d.eps3 or d.eps2 != -1.0:
                signs_ok = False
            n0 += 1
    for _ in range(10):
        theta = float(rng.uniform(-0.6, 0.6))
        slope = math.copysign(float(rng.uniform(0.5, 2.5)),
                              rng.uniform(-1.0, 1.0))
        hel = _families.make_helix("timelike-flat", theta, slope)
        amp = math.cos(theta)
        t3 = math.sin(theta)
        if abs(amp * (slope - 2.0 * t3)) < 0.2:
            continue
        k2_want = -t3 * (slope - t3) - amp * amp
        for s in (-0.4, 0.5):
            d = _frenet.compute_frenet(hel, s)
            worst = max(worst, abs(d.n[2]), abs(d.k2 - k2_want))
            # these tangents have |T3| < 1: outside the two displayed forms,
            # and the sign conclusion does not extend to them
            if d.eps1 != -1.0 or d.eps2 != 1.0 or d.eps3 != -1.0:
                flat_outside = False
            n1 += 1
    defect_max = 0.0
    for curve in (
        _families.make_spacelike_biharmonic(0.5, branch=1),
        _families.make_timelike_biharmonic(0.5, branch=-1),
    ):
        for s in (-0.5, 0.0, 0.8):
            d = _frenet.compute_frenet(curve, s)
            defect_max = max(
                defect_max,
                abs(_biharmonic.identity_defect(d.k1, d.k2, d.eps1, d.eps3,
                                                d.b[2])),
            )
            if abs(d.b[2]) <= tol:
                signs_ok = False
    worst = max(worst, defect_max)
    ok = worst <= tol and signs_ok and flat_outside
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "%d evaluations on seeded constant-T3 tangents of the two displayed "
        "forms: N3=0, closed-form k1, k2, |B3| within %s; sign corollary "
        "eps1=-eps3 with timelike normal holds on all of them: %s; "
        "biharmonic members satisfy the closure identity (max defect %s) "
        "with constant nonzero B3; %d evaluations on flat timelike helices "
        "(|T3|<1): N3=0 with eps1=eps3=-1 -- a constant-T3 case outside the "
        "two displayed forms, recorded as a case-analysis gap: %s"
        % (n0, _fmt(worst), signs_ok, _fmt(defect_max), n1, flat_outside)
    )
    return status, worst, details


def _check_horizontal_family(cfg, rng):
    tol = _tol(cfg, 1e-9)
    grid = [-2.0 + 0.05 * i for i in range(81)]
    worst = 0.0
    const_dev = 0.0
    horiz_max = 0.0
    for branch in (1, -1):
        phase = float(rng.uniform(-1.0, 1.0))
        offsets = tuple(float(v) for v in rng.uniform(-1.0, 1.0, 3))
        curve = _families.make_spacelike_horizontal(
            branch=branch, phase=phase, offsets=offsets
        )
        direct, fren = _biharmonic.residual_norms(curve, grid)
        worst = max(worst, max(direct), max(fren))
        summ = _frenet.frenet_over_grid(curve, grid)
        const_dev = max(
            const_dev,
            abs(summ.k1_mean - 2.0), summ.k1_max_dev,
            abs(summ.k2_mean + 1.0), summ.k2_max_dev,
            abs(abs(summ.b3_mean) - 1.0), summ.b3_max_dev,
            abs(summ.n3_mean), summ.n3_max_dev,
        )
        if not all((d.eps1, d.eps2, d.eps3) == (1.0, -1.0, -1.0)
                   for d in summ.data):
            const_dev = math.inf
        horiz_max = max(
            horiz_max,
            max(abs(_curves.vertical_momentum(curve, s)) for s in grid),
        )
    confirmed = max(worst, const_dev, horiz_max)
    ok = confirmed <= tol
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "corrected slope roots +/-2, both branches with seeded phase and "
        "offsets: max bitension residual=%s; k1=2, k2=-1, |B3|=1, N3=0 "
        "deviations <= %s; contact form annihilates the velocity: "
        "max |2*T3|=%s; signs (+,-,-)"
        % (_fmt(worst), _fmt(const_dev), _fmt(horiz_max))
    )
    return status, confirmed, details


def _check_horizontal_slope_printed(cfg, rng):
    tol = _tol(cfg, 1e-9)
    grid = [-2.0 + 0.05 * i for i in range(81)]
    dev3 = 0.0
    res_s0 = 0.0
    sweep_max = 0.0
    for branch in (1, -1):
        curve = _families.make_spacelike_horizontal(branch=branch,
                                                    as_printed=True)
        res = _biharmonic.residual_norms(curve, [0.0])[0][0]
        dev3 = max(dev3, abs(res - 3.0))
        res_s0 = max(res_s0, res)
        sweep = _biharmonic.residual_norms(curve, grid)[0]
        sweep_max = max(sweep_max, max(sweep))
    refuted = res_s0 > 100.0 * tol
    status = STATUS_REFUTED_AS_PRINTED if refuted else STATUS_CONFIRMED
    details = (
        "printed unit slope, both signs, zero phase and offsets: direct "
        "bitension residual at s=0 equals 3 exactly (deviation %s); sweep "
        "max over [-2,2]: %s; the corrected slope +/-2 is confirmed in the "
        "horizontal-family row"
        % (_fmt(dev3), _fmt(sweep_max))
    )
    return status, res_s0, details


def _check_timelike_horizontal_nonexistence(cfg, rng):
    tol = _tol(cfg, 1e-9)
    m_grid = [float(m) for m in np.linspace(0.1, 3.0, 30)]
    s_pts = (-0.5, 0.0, 0.7)
    formula_dev = 0.0
    defect_dev = 0.0
    min_res = math.inf
    for m in m_grid:
        curve = _families.make_timelike_horizontal_helix(m)
        direct, _ = _biharmonic.residual_norms(curve, s_pts)
        for s, res in zip(s_pts, direct):
            want = abs(m ** 3 + 4.0 * m) * math.sqrt(
                math.cosh(m * s) ** 2 + math.sinh(m * s) ** 2
            )
            formula_dev = max(formula_dev, abs(res - want))
            min_res = min(min_res, res)
        d = _frenet.compute_frenet(curve, 0.0)
        defect = _biharmonic.identity_defect(d.k1, d.k2, d.eps1, d.eps3,
                                             d.b[2])
        defect_dev = max(defect_dev, abs(defect - (m * m + 4.0)))
    ok = formula_dev <= tol and defect_dev <= tol and min_res >= 0.401
    status = STATUS_CONFIRMED if ok else STATUS_REFUTED_AS_PRINTED
    details = (
        "30-point frequency grid on [0.1,3], 3 arclength points each: "
        "residual matches |m^3+4m|*sqrt(cosh^2+sinh^2) within %s; closure "
        "identity defect equals m^2+4 within %s; min residual over the "
        "sweep=%s (>= 0.401): nonexistence confirmed"
        % (_fmt(formula_dev), _fmt(defect_dev), _fmt(min_res))
    )
    return status, formula_dev, details


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_REGISTRY = (
    ("metric-signature",
     "sec 2.2: left-invariant metric signature vs connection compatibility",
     _check_metric_signature),
    ("connection-table",
     "sec 2.2: covariant-derivative table of the connection",
     _check_connection_table),
    ("curvature-table",
     "sec 2.2: nonzero curvature tensor components",
     _check_curvature_table),
    ("cross-properties",
     "sec 2.2: cross-product properties (i)-(vi)",
     _check_cross_properties),
    ("bitension-conditions",
     "sec 3: biharmonicity conditions and bitension coefficients",
     _check_bitension_conditions),
    ("spacelike-family",
     "sec 4: spacelike family parametric equations and slope",
     _check_spacelike_family),
    ("timelike-family",
     "sec 4: timelike family parametric equations and slope",
     _check_timelike_family),
    ("b3zero-signs",
     "sec 4: vanishing-B3 sign proposition",
     _check_b3zero_signs),
    ("b3zero-k2",
     "sec 4: vanishing-B3 torsion-square and non-biharmonicity",
     _check_b3zero_k2),
    ("helix-lemma",
     "sec 4: constant-T3 tangent lemma and vanishing-N3 sign corollary",
     _check_helix_lemma),
    ("horizontal-family",
     "sec 5: horizontal family parametric equations (corrected slope)",
     _check_horizontal_family),
    ("horizontal-slope-printed",
     "sec 5: horizontal family slope constant as printed",
     _check_horizontal_slope_printed),
    ("timelike-horizontal-nonexistence",
     "sec 5: timelike horizontal nonexistence",
     _check_timelike_horizontal_nonexistence),
)

EXPECTED_STATUS = {
    "metric-signature": STATUS_CONFIRMED_WITH_ERRATUM,
    "connection-table": STATUS_CONFIRMED,
    "curvature-table": STATUS_CONFIRMED,
    "cross-properties": STATUS_CONFIRMED,
    "bitension-conditions": STATUS_CONFIRMED_WITH_ERRATUM,
    "spacelike-family": STATUS_CONFIRMED_WITH_ERRATUM,
    "timelike-family": STATUS_CONFIRMED_WITH_ERRATUM,
    "b3zero-signs": STATUS_CONFIRMED,
    "b3zero-k2": STATUS_CONFIRMED,
    "helix-lemma": STATUS_CONFIRMED,
    "horizontal-family": STATUS_CONFIRMED,
    "horizontal-slope-printed": STATUS_REFUTED_AS_PRINTED,
    "timelike-horizontal-nonexistence": STATUS_CONFIRMED,
}

_CLAIM_INDEX = {cid: i for i, (cid, _, _) in enumerate(_REGISTRY)}


def registry_ids():
    """Claim identifiers in registry order."""
    return tuple(cid for cid, _, _ in _REGISTRY)


def _run_one(index, cfg):
    claim_id, anchor, fn = _REGISTRY[index]
    rng = np.random.default_rng([cfg.seed, index])
    try:
        status, residual, details = fn(cfg, rng)
    except Exception as exc:  # failures become report rows, not exceptions
        status = STATUS_REFUTED_AS_PRINTED
        residual = math.inf
        details = "check aborted: %s: %s" % (type(exc).__name__, exc)
    return CheckResult(
        claim_id=claim_id,
        anchor=anchor,
        status=status,
        max_residual=float(residual),
        details=details,
    )


def run_all(config=None):
    """Run every registry check in order and assemble the report."""
    cfg = config if config is not None else VerifyConfig()
    checks = tuple(_run_one(i, cfg) for i in range(len(_REGISTRY)))
    return VerificationReport(schema_version=1, seed=cfg.seed, checks=checks)


def verify_claim(claim_id, config=None):
    """Run a single registry check; unknown ids are rejected."""
    cfg = config if config is not None else VerifyConfig()
    if claim_id not in _CLAIM_INDEX:
        raise InvalidInputError(
            "unknown claim id %r; known ids: %s"
            % (claim_id, ", ".join(registry_ids()))
        )
    return _run_one(_CLAIM_INDEX[claim_id], cfg)
