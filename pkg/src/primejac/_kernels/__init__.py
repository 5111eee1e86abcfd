"""Sweep kernels with a compiled core and a pure-Python fallback.

The compiled extension ``_speedups`` (Cython) is preferred; if it is absent,
or the environment variable PRIMEJAC_KERNEL_BACKEND is set to "python", the
pure-Python twin ``pyref`` is used.  Both implement the same functions with
bit-identical results; ``BACKEND`` names the active one.

Results of the (p, s) scans are memoized here because several consumers
(brute-force search, classification, verification sweeps) share them.
"""

import os
from functools import lru_cache

from . import pyref as _pyref

_forced = os.environ.get("PRIMEJAC_KERNEL_BACKEND", "").strip().lower()
if _forced in ("python", "pyref", "pure"):
    _impl = _pyref
elif _forced in ("cython", "compiled", "speedups"):
    from . import _speedups as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _pyref

BACKEND = _impl.BACKEND


def available_backends() -> dict:
    """Importable backend modules keyed by name (for tests and benchmarks)."""
    backends = {"python": _pyref}
    try:
        from . import _speedups

        backends["cython"] = _speedups
    except ImportError:
        pass
    return backends


@lru_cache(maxsize=128)
def _scan_cached(p: int, s: int) -> tuple:
    return tuple(_impl.scan_valid(p, s))


def scan_valid(p: int, s: int) -> tuple:
    """Memoized (b, a) pairs for all valid branch tuples at (p, s)."""
    return _scan_cached(p, s)


def valid_branch_tuples(p: int, s: int) -> list:
    """All nonnegative tuples b of length p-1 with sum s and
    sum_u b(u) j(u^{-1}) divisible by p, in lexicographic order."""
    return [b for b, _ in _scan_cached(p, s)]


def matching_branch_tuples(p: int, s: int, a) -> list:
    """The brute-force witness search: valid branch tuples whose induced
    multiplicity tuple equals a, in lexicographic order."""
    target = tuple(a)
    return [b for b, av in _scan_cached(p, s) if av == target]


def verify_sweep(p: int, s: int) -> dict:
    """Scaled-integer bulk verification of the identities at (p, s)."""
    return _impl.verify_sweep(p, s, list(_scan_cached(p, s)))
