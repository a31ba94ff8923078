"""Command-line interface: curve generation, Frenet sweeps, verification.

Subcommands
-----------
``generate``
    Sample a closed-form curve family on an s-grid and write CSV with header
    ``s,x,y,z,T1,T2,T3`` (positions and frame tangent components).
``frenet`` / ``residual``
    Sweep the Frenet apparatus and both bitension-residual norms over an
    s-grid (or over the interior nodes of an input CSV) and write CSV with
    header ``s,k1,k2,eps1,eps2,eps3,N3,B3,res_direct,res_frenet,degenerate``.
    Points where the Frenet frame degenerates (vanishing curvature or a null
    normal direction) become sentinel rows: zero data columns and
    ``degenerate=1``; the command still exits 0.
``verify``
    Run the claim registry (or one claim) and write the JSON report. Exit
    status 0 when every check status matches the pinned expected-status
    manifest, 1 otherwise.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 output I/O failure. Every error path prints a single ``error: ...`` line
to stderr. All configuration is by flags; no environment variables or config
files are consulted. File output is atomic (temp file + rename) and uses
fixed 17-significant-digit, locale-independent float formatting, so repeated
runs produce identical bytes.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile

from . import families as _families
from . import frenet as _frenet
from . import verify as _verify
from .curves import integrate_frame_curve, read_curve_csv
from .errors import (
    GeodesicDegenerateError,
    HHCurvesError,
    InvalidInputError,
    NullNormalDegenerateError,
)

__all__ = ["build_parser", "main"]

_GENERATE_HEADER = "s,x,y,z,T1,T2,T3"
_FRENET_HEADER = "s,k1,k2,eps1,eps2,eps3,N3,B3,res_direct,res_frenet,degenerate"

_FAMILY_CHOICES = (
    "spacelike",
    "timelike",
    "spacelike-horizontal",
    "horizontal",
    "timelike-horizontal-helix",
    "b3zero-spacelike",
    "b3zero-timelike",
    "geodesic",
)

_BRANCH_MAP = {"+": 1, "plus": 1, "+1": 1, "1": 1, "-": -1, "minus": -1, "-1": -1}

# Maximum RK4 step used when `generate` has to integrate a tangent-only
# curve (b3zero families) to obtain coordinates.
_MAX_INTEGRATION_STEP = 1e-3


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def _fmt(value):
    """Deterministic float formatting; +0.0 normalizes negative zero."""
    return "%.17g" % (float(value) + 0.0)


def _enorm3(v):
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def _write_text(path, text):
    """Write text to `path` atomically, or to stdout when path is '-'."""
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = os.path.abspath(path)
    directory = os.path.dirname(target) or "."
    fd, tmp = tempfile.mkstemp(prefix=".hhcurves-", suffix=".part", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _parse_range(text):
    """Parse 'start:stop:step' into (start, stop, step, node_count-1)."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise InvalidInputError(
            "range must have the form start:stop:step, got %r" % (text,)
        )
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise InvalidInputError(
            "range fields must be real numbers, got %r" % (text,)
        ) from exc
    if not (math.isfinite(start) and math.isfinite(stop) and math.isfinite(step)):
        raise InvalidInputError("range fields must be finite, got %r" % (text,))
    if step <= 0.0:
        raise InvalidInputError("range step must be positive, got %r" % (step,))
    if stop <= start:
        raise InvalidInputError(
            "range stop must exceed start, got %r" % (text,)
        )
    n = round((stop - start) / step)
    if n < 1 or abs(n * step - (stop - start)) > 1e-9 * max(1.0, abs(stop - start)):
        raise InvalidInputError(
            "range step %r does not divide [%r, %r]" % (step, start, stop)
        )
    return start, stop, step, n


def _grid_nodes(start, step, n):
    return [start + i * step for i in range(n + 1)]


def _parse_direction(text):
    parts = str(text).split(",")
    if len(parts) != 3:
        raise InvalidInputError(
            "--direction must be three comma-separated reals, got %r" % (text,)
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise InvalidInputError(
            "--direction components must be real numbers, got %r" % (text,)
        ) from exc


def _reject_params(ns, family, allowed):
    """Reject family parameters that don't belong to the chosen family."""
    supplied = {
        "--alpha0": ns.alpha0,
        "--nu0": ns.nu0,
        "--m": ns.m,
        "--p": ns.p,
        "--q": ns.q,
        "--direction": ns.direction,
    }
    for flag, value in supplied.items():
        if value is not None and flag.lstrip("-") not in allowed:
            raise InvalidInputError(
                "%s is not a parameter of the %s family" % (flag, family)
            )
    if ns.as_printed and "as_printed" not in allowed:
        raise InvalidInputError(
            "--as-printed has no printed-constant variant for the %s family"
            % (family,)
        )


def _require(value, flag, family):
    if value is None:
        raise InvalidInputError(
            "%s is required for the %s family" % (flag, family)
        )
    return value


def _build_curve(ns, s_range):
    """Construct the requested family member from parsed options."""
    family = ns.family
    branch = _BRANCH_MAP[ns.branch]
    offsets = (ns.c1, ns.c2, ns.c3)
    if family == "spacelike":
        _reject_params(ns, family, ("alpha0", "as_printed"))
        alpha0 = _require(ns.alpha0, "--alpha0", family)
        return _families.make_spacelike_biharmonic(
            alpha0,
            branch=branch,
            phase=ns.phase,
            offsets=offsets,
            as_printed=ns.as_printed,
        )
    if family == "timelike":
        _reject_params(ns, family, ("nu0", "as_printed"))
        nu0 = _require(ns.nu0, "--nu0", family)
        return _families.make_timelike_biharmonic(
            nu0,
            branch=branch,
            phase=ns.phase,
            offsets=offsets,
            as_printed=ns.as_printed,
        )
    if family in ("spacelike-horizontal", "horizontal"):
        _reject_params(ns, family, ("as_printed",))
        return _families.make_spacelike_horizontal(
            branch=branch,
            phase=ns.phase,
            offsets=offsets,
            as_printed=ns.as_printed,
        )
    if family == "timelike-horizontal-helix":
        _reject_params(ns, family, ("m",))
        m = _require(ns.m, "--m", family)
        return _families.make_timelike_horizontal_helix(m, offsets=offsets)
    if family in ("b3zero-spacelike", "b3zero-timelike"):
        _reject_params(ns, family, ("p", "q"))
        p = _require(ns.p, "--p", family)
        q = _require(ns.q, "--q", family)
        return _families.make_b3zero_linear(family, p, q, s_range)
    if family == "geodesic":
        _reject_params(ns, family, ("direction",))
        direction = (0.0, 0.0, 1.0)
        if ns.direction is not None:
            direction = _parse_direction(ns.direction)
        return _families.make_geodesic(direction)
    raise InvalidInputError("unknown family %r" % (family,))


# ---------------------------------------------------------------------------
# Subcommand implementations
# ---------------------------------------------------------------------------


def cmd_generate(ns):
    start, stop, step, n = _parse_range(ns.range)
    grid = _grid_nodes(start, step, n)
    curve = _build_curve(ns, (start, stop))
    if hasattr(curve, "point"):
        positions = [curve.point(s) for s in grid]
    else:
        # Tangent-only curve: integrate the coordinates from the origin at a
        # refined step that divides the output grid step exactly.
        refine = max(1, math.ceil(step / _MAX_INTEGRATION_STEP))
        integrated = integrate_frame_curve(
            curve, (0.0, 0.0, 0.0), (start, stop), step / refine
        )
        positions = [integrated.point(s) for s in grid]
    lines = [_GENERATE_HEADER]
    for s, pos in zip(grid, positions):
        t = curve.tangent(s)
        lines.append(
            ",".join(
                _fmt(v) for v in (s, pos[0], pos[1], pos[2], t[0], t[1], t[2])
            )
        )
    _write_text(ns.output, "\n".join(lines) + "\n")
    return 0


def _frenet_grid_and_curve(ns):
    if ns.input is not None and ns.family is not None:
        raise InvalidInputError("--input and --family are mutually exclusive")
    if ns.input is not None:
        curve = read_curve_csv(ns.input)
        table = curve.samples
        lo, hi = table.interior_range()
        if lo > hi:
            raise InvalidInputError(
                "input has too few rows for interior stencil derivatives "
                "(need at least %d)" % (2 * lo + 1)
            )
        return curve, list(table.s_values[lo : hi + 1])
    if ns.family is None:
        raise InvalidInputError("one of --family or --input is required")
    start, stop, step, n = _parse_range(ns.range)
    curve = _build_curve(ns, (start, stop))
    return curve, _grid_nodes(start, step, n)


def cmd_frenet(ns):
    curve, grid = _frenet_grid_and_curve(ns)
    lines = [_FRENET_HEADER]
    for s in grid:
        try:
            fr, tau_d, tau_f = _frenet.point_data(curve, s)
        except (GeodesicDegenerateError, NullNormalDegenerateError):
            lines.append(",".join([_fmt(s)] + [_fmt(0.0)] * 9 + ["1"]))
            continue
        values = (
            s,
            fr[0],  # k1
            fr[3],  # k2
            fr[5],  # eps1
            fr[6],  # eps2
            fr[7],  # eps3
            fr[13],  # N3
            fr[16],  # B3
            _enorm3(tau_d),
            _enorm3(tau_f),
        )
        lines.append(",".join([_fmt(v) for v in values] + ["0"]))
    _write_text(ns.output, "\n".join(lines) + "\n")
    return 0


def cmd_verify(ns):
    config = _verify.VerifyConfig(seed=ns.seed, tol=ns.tol)
    if ns.claim is not None:
        check = _verify.verify_claim(ns.claim, config)
        report = _verify.VerificationReport(
            schema_version=1, seed=config.seed, checks=(check,)
        )
    else:
        report = _verify.run_all(config)
    _write_text(ns.output, report.to_json() + "\n")
    return 0 if report.passed() else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports errors as one line and exits 2."""

    def error(self, message):
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(2)


def _add_family_options(parser):
    group = parser.add_argument_group("curve family")
    group.add_argument(
        "--family",
        choices=_FAMILY_CHOICES,
        default=None,
        help="closed-form family to instantiate",
    )
    group.add_argument(
        "--alpha0", type=float, default=None,
        help="shape parameter of the spacelike family",
    )
    group.add_argument(
        "--nu0", type=float, default=None,
        help="shape parameter of the timelike family (nonzero)",
    )
    group.add_argument(
        "--m", type=float, default=None,
        help="frequency of the flat timelike helix (nonzero)",
    )
    group.add_argument(
        "--p", type=float, default=None,
        help="linear-profile intercept for the b3zero families",
    )
    group.add_argument(
        "--q", type=float, default=None,
        help="linear-profile slope for the b3zero families (nonzero)",
    )
    group.add_argument(
        "--branch", choices=sorted(_BRANCH_MAP), default="+",
        help="slope-quadratic root to use (default '+')",
    )
    group.add_argument(
        "--phase", type=float, default=0.0,
        help="phase offset b in u = a*s + b (default 0)",
    )
    group.add_argument(
        "--c1", type=float, default=0.0, help="x translation (default 0)"
    )
    group.add_argument(
        "--c2", type=float, default=0.0, help="y translation (default 0)"
    )
    group.add_argument(
        "--c3", type=float, default=0.0, help="z translation (default 0)"
    )
    group.add_argument(
        "--direction", default=None,
        help="geodesic direction as 'dx,dy,dz' (default 0,0,1)",
    )
    group.add_argument(
        "--as-printed", action="store_true", dest="as_printed",
        help="use the printed (uncorrected) slope constant",
    )


def _add_output_options(parser, fmt):
    parser.add_argument(
        "-o", "--output", default="-",
        help="output path; '-' writes to stdout (default)",
    )
    parser.add_argument(
        "--format", choices=(fmt,), default=fmt,
        help="output format (this command always writes %s)" % fmt,
    )


def _add_range_option(parser):
    parser.add_argument(
        "--range", default="-2:2:0.01",
        help="s-grid as start:stop:step (default -2:2:0.01)",
    )


def build_parser():
    parser = _Parser(
        prog="hhcurves",
        description=(
            "Curve geometry in the 3-dimensional hyperbolic Heisenberg "
            "group: closed-form curve families, Frenet/bitension sweeps, "
            "and the numerical claim verifier."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p_gen = sub.add_parser(
        "generate",
        help="sample a curve family to CSV (s,x,y,z,T1,T2,T3)",
    )
    _add_family_options(p_gen)
    _add_range_option(p_gen)
    _add_output_options(p_gen, "csv")
    p_gen.set_defaults(func=cmd_generate, input=None)

    for name, help_text in (
        ("frenet", "sweep curvature/torsion/frame data and residuals to CSV"),
        ("residual", "alias of frenet: same sweep, same CSV schema"),
    ):
        p_fr = sub.add_parser(name, help=help_text)
        _add_family_options(p_fr)
        _add_range_option(p_fr)
        p_fr.add_argument(
            "--input", default=None,
            help="read a sampled curve from CSV (header s,x,y,z, extra "
            "columns ignored) instead of --family; rows cover the interior "
            "stencil nodes",
        )
        _add_output_options(p_fr, "csv")
        p_fr.set_defaults(func=cmd_frenet)

    p_ver = sub.add_parser(
        "verify",
        help="run the claim registry and write the JSON report",
    )
    p_ver.add_argument(
        "--claim", default=None,
        help="run a single claim by id (default: all claims)",
    )
    p_ver.add_argument(
        "--seed", type=int, default=7,
        help="base seed for the per-check generators (default 7)",
    )
    p_ver.add_argument(
        "--tol", type=float, default=None,
        help="override the default residual tolerance",
    )
    _add_output_options(p_ver, "json")
    p_ver.set_defaults(func=cmd_verify)

    return parser


def _merge_value_flags(argv):
    """Join '--range -2:2:0.01' into '--range=-2:2:0.01'.

    Values of these flags can start with '-' (negative grid bounds, negative
    direction components), which argparse would otherwise read as an option.
    """
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in ("--range", "--direction") and i + 1 < len(argv):
            merged.append(token + "=" + argv[i + 1])
            i += 2
            continue
        merged.append(token)
        i += 1
    return merged


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    ns = parser.parse_args(_merge_value_flags(list(argv)))
    try:
        return ns.func(ns)
    except HHCurvesError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except OSError as exc:
        sys.stderr.write("error: io failure: %s\n" % exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
