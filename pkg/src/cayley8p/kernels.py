"""Hot kernels for the exhaustive orbit sweep over connection-set bitmasks.

A permutation of n class indices becomes a permutation of n-bit masks;
the sweep visits every mask and keeps those that are minimal (as
integers) within their orbit, which counts orbits exactly once each.
Mask images are computed from two half-tables per permutation
(low/high bit halves), so one image costs two lookups and an OR.

Two interchangeable backends do the scan:

  * "numba": @njit compiled loops (fast path; optional dependency)
  * "numpy": chunked vectorized minimum-accumulation

selected by the CAYLEY8P_BACKEND environment variable ("auto", "numba",
"numpy"; auto prefers numba when importable).  Results are identical
either way, and identical for any worker count: the mask space splits
into contiguous ranges whose counts add and whose hits concatenate in
range order.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


ENV_FLAG = "CAYLEY8P_BACKEND"
_CHUNK = 1 << 15


def active_backend() -> str:
    """Resolve the backend name from the environment, validating the choice."""
    choice = os.environ.get(ENV_FLAG, "auto").lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{ENV_FLAG} must be auto, numba or numpy, got {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    if choice == "auto":
        return "numba" if HAS_NUMBA else "numpy"
    return choice


def bit_tables(perms) -> tuple[np.ndarray, np.ndarray, int, int]:
    """Half-tables for mask images under each permutation.

    Returns (tlo, thi, lo_bits, lo_mask) with tlo/thi of shape
    (n_perms, 2^half): image(m) = tlo[a, m & lo_mask] | thi[a, m >> lo_bits].
    """
    perms = np.asarray(perms, dtype=np.int64)
    n_perms, n_bits = perms.shape
    lo_bits = n_bits // 2
    hi_bits = n_bits - lo_bits
    tlo = np.zeros((n_perms, 1 << lo_bits), dtype=np.int64)
    thi = np.zeros((n_perms, 1 << hi_bits), dtype=np.int64)
    for a in range(n_perms):
        bit_image = np.int64(1) << perms[a]
        for b in range(lo_bits):
            step = 1 << b
            tlo[a, step : 2 * step] = tlo[a, :step] | bit_image[b]
        for b in range(hi_bits):
            step = 1 << b
            thi[a, step : 2 * step] = thi[a, :step] | bit_image[lo_bits + b]
    return tlo, thi, lo_bits, (1 << lo_bits) - 1


def apply_perm_to_mask(mask: int, perm) -> int:
    """Reference image of one mask (used by tests and small-scale callers)."""
    img = 0
    for i, target in enumerate(perm):
        if mask >> i & 1:
            img |= 1 << target
    return img


@njit(cache=True, nogil=True)
def _count_numba(start, stop, tlo, thi, lo_bits, lo_mask):  # pragma: no cover - jit
    n_perms = tlo.shape[0]
    count = 0
    for m in range(start, stop):
        minimal = True
        for a in range(n_perms):
            img = tlo[a, m & lo_mask] | thi[a, m >> lo_bits]
            if img < m:
                minimal = False
                break
        if minimal:
            count += 1
    return count


@njit(cache=True, nogil=True)
def _fill_numba(start, stop, tlo, thi, lo_bits, lo_mask, out):  # pragma: no cover
    n_perms = tlo.shape[0]
    written = 0
    for m in range(start, stop):
        minimal = True
        for a in range(n_perms):
            img = tlo[a, m & lo_mask] | thi[a, m >> lo_bits]
            if img < m:
                minimal = False
                break
        if minimal:
            out[written] = m
            written += 1
    return written


def _minima_chunk_numpy(masks, tlo, thi, lo_bits, lo_mask):
    lo = masks & lo_mask
    hi = masks >> lo_bits
    smallest = masks.copy()
    for a in range(tlo.shape[0]):
        np.minimum(smallest, tlo[a][lo] | thi[a][hi], out=smallest)
    return smallest == masks


def _count_numpy(start, stop, tlo, thi, lo_bits, lo_mask):
    count = 0
    for lo_edge in range(start, stop, _CHUNK):
        masks = np.arange(lo_edge, min(lo_edge + _CHUNK, stop), dtype=np.int64)
        count += int(np.count_nonzero(_minima_chunk_numpy(masks, tlo, thi, lo_bits, lo_mask)))
    return count


def _fill_numpy(start, stop, tlo, thi, lo_bits, lo_mask):
    hits = []
    for lo_edge in range(start, stop, _CHUNK):
        masks = np.arange(lo_edge, min(lo_edge + _CHUNK, stop), dtype=np.int64)
        hits.append(masks[_minima_chunk_numpy(masks, tlo, thi, lo_bits, lo_mask)])
    return np.concatenate(hits) if hits else np.empty(0, dtype=np.int64)


def _ranges(total: int, workers: int) -> list[tuple[int, int]]:
    width = (total + workers - 1) // workers
    return [(lo, min(lo + width, total)) for lo in range(0, total, width)]


def sweep_minimal_count(perms, workers: int = 1) -> int:
    """Number of orbit-minimal masks under the given permutations.

    The identity permutation must be among perms so that minimality is
    simply "no image is smaller".
    """
    perms = np.asarray(perms, dtype=np.int64)
    tlo, thi, lo_bits, lo_mask = bit_tables(perms)
    total = 1 << perms.shape[1]
    kernel = _count_numba if active_backend() == "numba" else _count_numpy
    spans = _ranges(total, max(1, workers))
    if len(spans) == 1:
        return int(kernel(spans[0][0], spans[0][1], tlo, thi, lo_bits, lo_mask))
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        futures = [
            pool.submit(kernel, lo, hi, tlo, thi, lo_bits, lo_mask)
            for lo, hi in spans
        ]
        return sum(int(f.result()) for f in futures)


def sweep_minimal_masks(perms, workers: int = 1) -> np.ndarray:
    """The orbit-minimal masks themselves, ascending (one per orbit)."""
    perms = np.asarray(perms, dtype=np.int64)
    tlo, thi, lo_bits, lo_mask = bit_tables(perms)
    total = 1 << perms.shape[1]
    spans = _ranges(total, max(1, workers))
    if active_backend() == "numba":
        def run(lo, hi):
            counted = _count_numba(lo, hi, tlo, thi, lo_bits, lo_mask)
            out = np.empty(counted, dtype=np.int64)
            _fill_numba(lo, hi, tlo, thi, lo_bits, lo_mask, out)
            return out
    else:
        def run(lo, hi):
            return _fill_numpy(lo, hi, tlo, thi, lo_bits, lo_mask)

    if len(spans) == 1:
        return run(*spans[0])
    with ThreadPoolExecutor(max_workers=len(spans)) as pool:
        futures = [pool.submit(run, lo, hi) for lo, hi in spans]
        return np.concatenate([f.result() for f in futures])


def warmup() -> None:
    """Trigger JIT compilation on a toy input so timed runs measure the sweep only."""
    toy = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    sweep_minimal_count(toy)
    sweep_minimal_masks(toy)
