"""Backend selection for the hot kernels.

The compiled extension (capkit._kernels, Cython) is used when it imported
cleanly and the data is in a form it accepts (dense bitset membership);
otherwise the pure-Python twin takes over.  Set CAPKIT_FORCE_PYTHON_KERNELS
to any value to skip the extension, e.g. for benchmarking the fallback.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from . import _kernels_py as python_kernels

cython_kernels = None
if not os.environ.get("CAPKIT_FORCE_PYTHON_KERNELS"):
    try:
        from . import _kernels as cython_kernels  # type: ignore[no-redef]
    except ImportError:
        cython_kernels = None

BACKEND = "cython" if cython_kernels is not None else "python"


def scan_pairs(
    members: Sequence[int],
    m: int,
    n: int,
    k: int,
    membership,
    start: int = 0,
    stop: int | None = None,
    force_python: bool = False,
) -> tuple[int, int, int]:
    """Dispatch the ordered-pair progression scan; see _kernels_py.scan_pairs."""
    dense = isinstance(membership, (bytes, bytearray))
    if (
        cython_kernels is not None
        and dense
        and not force_python
        and n <= 64
        and 3 <= k <= 64
    ):
        arr = members if isinstance(members, array) else array("q", members)
        return cython_kernels.scan_pairs(
            arr, m, n, k, membership, start, len(members) if stop is None else stop
        )
    return python_kernels.scan_pairs(members, m, n, k, membership, start, stop)


def _pack_masks(masks: Sequence[int], words: int) -> array:
    out = array("Q", bytearray(8 * words * len(masks)))
    mask_all = (1 << 64) - 1
    for i, msk in enumerate(masks):
        w = 0
        while msk:
            out[i * words + w] = msk & mask_all
            msk >>= 64
            w += 1
    return out


def bb_run(
    comp: Sequence[Sequence[int]],
    n_points: int,
    init_chosen: Sequence[int],
    init_cand: int,
    budget_s: float,
    best_init: int,
    force_python: bool = False,
) -> tuple[list[int] | None, int, bool]:
    """Dispatch branch and bound; see _kernels_py.bb_run.

    comp is given as Python int masks; the compiled path packs it into
    uint64 words once per call.
    """
    if cython_kernels is None or force_python:
        return python_kernels.bb_run(
            comp, n_points, init_chosen, init_cand, budget_s, best_init
        )
    words = (n_points + 63) >> 6
    flat: list[int] = []
    for row in comp:
        flat.extend(row)
    packed = _pack_masks(flat, words)
    cand_packed = _pack_masks([init_cand], words)
    return cython_kernels.bb_run(
        packed, n_points, words, list(init_chosen), cand_packed, budget_s, best_init
    )
