"""Pure-Python integer kernels.

These are the reference implementations of the two hot kernels (batched
integer dot products and max-plus table convolution).  They operate on plain
Python integers, so they are exact at any magnitude; the compiled backend in
``_core`` mirrors them in int64 with overflow detection and falls back here.
"""

from __future__ import annotations

from typing import Sequence


def imatmul(a_rows: Sequence[Sequence[int]], b_rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """out[i][j] = <a_rows[i], b_rows[j]> (that is, A @ B^T)."""
    return [[sum(x * y for x, y in zip(ra, rb)) for rb in b_rows] for ra in a_rows]


def _strides(shape: Sequence[int]) -> list[int]:
    strides = [1] * len(shape)
    for d in range(len(shape) - 2, -1, -1):
        strides[d] = strides[d + 1] * shape[d + 1]
    return strides


def maxplus_convolve(
    a_vals: Sequence[int | None],
    a_shape: Sequence[int],
    b_vals: Sequence[int | None],
    b_shape: Sequence[int],
    caps: Sequence[int],
):
    """Max-plus convolution of two dense multi-dimensional tables.

    Tables are flattened row-major; ``None`` marks an empty cell.  Axis d of
    the output ranges over 0..min(a_shape[d]+b_shape[d]-2, caps[d]-1); index
    sums beyond the cap are dropped.  Returns (values, back_a, back_b,
    out_shape) where the back arrays hold the flat indices of the winning
    operand cells (-1 for empty output cells).  Value ties prefer the
    lexicographically smallest (back_a, back_b) pair, matching the sparse
    merge and the compiled kernel, so witnesses are backend-independent.
    """
    ndim = len(a_shape)
    out_shape = tuple(min(sa + sb - 1, c) for sa, sb, c in zip(a_shape, b_shape, caps))
    a_str = _strides(a_shape)
    b_str = _strides(b_shape)
    o_str = _strides(out_shape)
    size = 1
    for s in out_shape:
        size *= s
    out: list[int | None] = [None] * size
    back_a = [-1] * size
    back_b = [-1] * size

    a_cells = []
    for flat, v in enumerate(a_vals):
        if v is None:
            continue
        rem = flat
        idx = []
        for d in range(ndim):
            idx.append(rem // a_str[d])
            rem %= a_str[d]
        a_cells.append((flat, idx, v))

    for fb, vb in enumerate(b_vals):
        if vb is None:
            continue
        rem = fb
        bidx = []
        for d in range(ndim):
            bidx.append(rem // b_str[d])
            rem %= b_str[d]
        for fa, aidx, va in a_cells:
            fo = 0
            for d in range(ndim):
                s = aidx[d] + bidx[d]
                if s >= out_shape[d]:
                    fo = -1
                    break
                fo += s * o_str[d]
            if fo < 0:
                continue
            val = va + vb
            cur = out[fo]
            if cur is None or val > cur or (
                val == cur and (fa, fb) < (back_a[fo], back_b[fo])
            ):
                out[fo] = val
                back_a[fo] = fa
                back_b[fo] = fb
    return out, back_a, back_b, out_shape
