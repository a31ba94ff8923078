"""Kernel backend selection.

The compiled extension (``hhcurves._kernels._speed``) and the pure-Python
reference (``hhcurves._kernels.pure``) expose the same surface; whichever is
available is re-exported here. Setting the environment variable
``HHCURVES_PURE=1`` before import forces the pure backend — a development and
testing knob, not part of the CLI contract.
"""

import os

if os.environ.get("HHCURVES_PURE") == "1":
    from hhcurves._kernels import pure as _impl
else:
    try:
        from hhcurves._kernels import _speed as _impl  # type: ignore[attr-defined]
    except ImportError:
        from hhcurves._kernels import pure as _impl

BACKEND = _impl.BACKEND
inner = _impl.inner
cross = _impl.cross
gamma = _impl.gamma
covd = _impl.covd
curvature_op = _impl.curvature_op
project_unit_jets = _impl.project_unit_jets
bitension_direct_jets = _impl.bitension_direct_jets
frenet_jets = _impl.frenet_jets
bitension_frenet_jets = _impl.bitension_frenet_jets
point_eval = _impl.point_eval
helix_eval = _impl.helix_eval

__all__ = [
    "BACKEND",
    "inner",
    "cross",
    "gamma",
    "covd",
    "curvature_op",
    "project_unit_jets",
    "bitension_direct_jets",
    "frenet_jets",
    "bitension_frenet_jets",
    "point_eval",
    "helix_eval",
]
