"""Integer linear-algebra kernels with a compiled fast path.

Two interchangeable backends implement the same flat-sequence API:

* ``_fast`` -- Cython, checked int64 arithmetic. Raises OverflowError when an
  entry or result leaves its guaranteed-exact range.
* ``_pure`` -- plain Python, arbitrary precision. Always exact.

The dispatchers below try the compiled backend first and rerun the call on
the pure backend whenever the fast path bails out (big entries, or non-int
entries such as Fractions). Set MUKAITWIST_PURE_KERNELS=1 to skip the
compiled backend entirely.
"""
import importlib
import os

from . import _pure

_fast = None
if os.environ.get("MUKAITWIST_PURE_KERNELS") != "1":
    try:
        _fast = importlib.import_module("._fast", __name__)
    except ImportError:
        _fast = None

BACKEND = "cython" if _fast is not None else "pure"

_FALLBACK = (OverflowError, TypeError)


def matmul(a, b, n, k, m):
    if _fast is not None:
        try:
            return _fast.matmul(a, b, n, k, m)
        except _FALLBACK:
            pass
    return _pure.matmul(a, b, n, k, m)


def matvec(a, v, n, m):
    if _fast is not None:
        try:
            return _fast.matvec(a, v, n, m)
        except _FALLBACK:
            pass
    return _pure.matvec(a, v, n, m)


def bilinear(g, u, v, n):
    if _fast is not None:
        try:
            return _fast.bilinear(g, u, v, n)
        except _FALLBACK:
            pass
    return _pure.bilinear(g, u, v, n)


def quadform(g, v, n):
    if _fast is not None:
        try:
            return _fast.quadform(g, v, n)
        except _FALLBACK:
            pass
    return _pure.quadform(g, v, n)


def norm_scan(g, n, target, bound):
    if _fast is not None:
        try:
            return _fast.norm_scan(g, n, target, bound)
        except _FALLBACK:
            pass
    return _pure.norm_scan(g, n, target, bound)
