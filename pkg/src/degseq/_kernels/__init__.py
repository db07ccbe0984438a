"""Kernel backend selection.

The compiled extension ``degseq._kernels._core`` implements the two hot
kernels in C over int64 with overflow detection.  If it is missing (no
compiler at install time) or the environment variable ``DEGSEQ_BACKEND=pure``
is set, the pure-Python kernels are used instead.  Results are identical;
whenever the compiled kernel reports a potential overflow the call is
transparently redone in pure Python, so exactness never depends on the
backend.
"""

from __future__ import annotations

import importlib
import os
from array import array
from typing import Sequence

from . import pure

_core = None
_forced = os.environ.get("DEGSEQ_BACKEND")
if _forced not in (None, "c", "pure"):
    raise ImportError(f"DEGSEQ_BACKEND must be 'c' or 'pure', not {_forced!r}")
if _forced != "pure":
    try:
        _core = importlib.import_module("degseq._kernels._core")
    except ImportError:
        _core = None
        if _forced == "c":
            raise ImportError(
                "DEGSEQ_BACKEND=c but the compiled kernel is not available; "
                "build it with 'python setup.py build_ext --inplace'"
            )

#: Cells below this operand volume are cheaper in pure Python than through
#: buffer conversion.
_SMALL_MATMUL = 4096

NEG_INF_SENTINEL = -(2**62)
_VALUE_LIMIT = 2**61


def backend_name() -> str:
    return "c" if _core is not None else "pure"


def imatmul(a_rows: Sequence[Sequence[int]], b_rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Exact integer A @ B^T; uses the compiled kernel when safe."""
    if _core is None or not a_rows or not b_rows:
        return pure.imatmul(a_rows, b_rows)
    k = len(a_rows)
    r = len(a_rows[0])
    g = len(b_rows)
    if k * g * max(r, 1) < _SMALL_MATMUL:
        return pure.imatmul(a_rows, b_rows)
    try:
        a_flat = array("q", (x for row in a_rows for x in row))
        b_flat = array("q", (x for row in b_rows for x in row))
        out = array("q", bytes(8 * k * g))
        _core.imatmul_i64(a_flat, b_flat, out, k, r, g)
    except OverflowError:
        return pure.imatmul(a_rows, b_rows)
    return [list(out[i * g : (i + 1) * g]) for i in range(k)]


def maxplus_convolve(
    a_vals: Sequence[int | None],
    a_shape: Sequence[int],
    b_vals: Sequence[int | None],
    b_shape: Sequence[int],
    caps: Sequence[int],
):
    """Max-plus convolution; same contract as :func:`pure.maxplus_convolve`."""
    if _core is None or not 1 <= len(a_shape) <= 16:  # compiled kernel's axis limit
        return pure.maxplus_convolve(a_vals, a_shape, b_vals, b_shape, caps)
    for v in a_vals:
        if v is not None and not -_VALUE_LIMIT < v < _VALUE_LIMIT:
            return pure.maxplus_convolve(a_vals, a_shape, b_vals, b_shape, caps)
    for v in b_vals:
        if v is not None and not -_VALUE_LIMIT < v < _VALUE_LIMIT:
            return pure.maxplus_convolve(a_vals, a_shape, b_vals, b_shape, caps)
    out_shape = tuple(min(sa + sb - 1, c) for sa, sb, c in zip(a_shape, b_shape, caps))
    size = 1
    for s in out_shape:
        size *= s
    a_arr = array("q", (NEG_INF_SENTINEL if v is None else v for v in a_vals))
    b_arr = array("q", (NEG_INF_SENTINEL if v is None else v for v in b_vals))
    out = array("q", bytes(8 * size))
    back_a = array("q", bytes(8 * size))
    back_b = array("q", bytes(8 * size))
    _core.maxplus_i64(
        a_arr,
        array("q", a_shape),
        b_arr,
        array("q", b_shape),
        array("q", out_shape),
        out,
        back_a,
        back_b,
    )
    values = [None if v == NEG_INF_SENTINEL else v for v in out]
    return values, list(back_a), list(back_b), out_shape
