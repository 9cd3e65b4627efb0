"""Non-Schur criteria and first Hochschild cohomology of group algebras.

Groups are given as catalog specifications: inline strings such as
``"sym:4"`` or ``"GL(2,3)"``, or JSON-style dicts such as
``{"cyclic": 6}``. Criterion results are certificate dicts with keys
``criterion``, ``verdict``, ``inputs``, ``witness`` and ``trace``; any of
them can be re-checked with :func:`replay`.
"""

import json

from . import _core
from ._core import BoundExceeded, Bounds, Group, InternalError, InvalidArgument

__all__ = [
    "BoundExceeded",
    "Bounds",
    "Group",
    "InternalError",
    "InvalidArgument",
    "an_witness",
    "blocks",
    "catalog",
    "check",
    "check_sc",
    "cor32",
    "find_non_schur",
    "group",
    "hh1_dim",
    "is_non_schur",
    "prop36_profile",
    "replay",
    "run_suite",
    "sn_witness",
    "subgroup",
    "sylow_subgroup",
    "theorem_a",
]


def _bounds(bounds):
    return bounds if bounds is not None else Bounds()


def group(spec, bounds=None):
    """Build a group from an inline string or a spec dict."""
    text = _core._inline_spec(spec) if isinstance(spec, str) else json.dumps(spec)
    return _core._group(text, _bounds(bounds))


def catalog():
    """The standard catalog as a list of ``{"name", "spec"}`` dicts."""
    return json.loads(_core._catalog())


def subgroup(G, generators):
    """Subgroup of G generated by cycle strings such as ``"(1 2 3)"``."""
    return _core._subgroup(G, list(generators))


def sylow_subgroup(G, p, bounds=None):
    return _core._sylow(G, p, _bounds(bounds))


def is_non_schur(G, x, bounds=None):
    """x (a cycle string) is not in [C_G(x), C_G(x)]."""
    return _core._is_non_schur(G, x, _bounds(bounds))


def find_non_schur(G, p, strong=True, bounds=None):
    return json.loads(_core._find_non_schur(G, p, strong, _bounds(bounds)))


def check_sc(G, p, bounds=None):
    return json.loads(_core._check_sc(G, p, _bounds(bounds)))


def prop36_profile(G, p, bounds=None):
    return json.loads(_core._prop36_profile(G, p, _bounds(bounds)))


def cor32(G, P, p, bounds=None):
    return json.loads(_core._cor32(G, P, p, _bounds(bounds)))


def theorem_a(G, P, p, bounds=None):
    return json.loads(_core._theorem_a(G, P, p, _bounds(bounds)))


def sn_witness(n, p, g, bounds=None):
    return json.loads(_core._sn_witness(n, p, g, _bounds(bounds)))


def an_witness(n, p, g, bounds=None):
    return json.loads(_core._an_witness(n, p, g, _bounds(bounds)))


def replay(certificate, bounds=None):
    """Re-check a certificate dict; returns ``{"ok", "message", "facts"}``."""
    return json.loads(_core._replay(json.dumps(certificate), _bounds(bounds)))


def hh1_dim(G, p, degree=1, bounds=None):
    """dim HH^1 of F_q G with q = p**degree."""
    return _core._hh1_dim(G, p, degree, _bounds(bounds))


def blocks(G, p, degree=0, bounds=None):
    """Blocks of F_q G; degree 0 picks a splitting field."""
    return json.loads(_core._blocks(G, p, degree, _bounds(bounds)))


def check(name, G, p=0, bounds=None):
    """Run one verification check by name and return its report dict."""
    return json.loads(_core._check(name, G, p, _bounds(bounds)))


def run_suite(manifest=None, max_order=48, bounds=None):
    """Run a manifest dict, or the catalog grid up to max_order."""
    text = "" if manifest is None else json.dumps(manifest)
    return json.loads(_core._run_suite(text, max_order, _bounds(bounds)))
