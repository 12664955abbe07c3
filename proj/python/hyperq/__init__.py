"""Python bindings for the hyperq library."""

import json

from ._hyperq import (
    UsageError,
    conical_p0,
    conical_pn,
    eigen_residual,
    energy,
    gamma,
)
from . import _hyperq

__all__ = [
    "UsageError",
    "conical_p0",
    "conical_pn",
    "derive",
    "eigen_residual",
    "energy",
    "gamma",
    "simulate",
    "verify",
]


def _config(config):
    return json.dumps(config) if config else ""


def derive(config=None):
    """Constraint chain, bracket matrix and bracket table as a dict."""
    return json.loads(_hyperq.derive_json(_config(config)))


def verify(config=None):
    """Run the check suite; returns the report dict (``report["pass"]``)."""
    return json.loads(_hyperq.verify_json(_config(config)))


def simulate(config=None):
    """Integrate the embedded geodesic; returns columns t, x, p, J, energy."""
    return _hyperq.simulate(_config(config))
