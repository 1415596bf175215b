"""Occurrence-histogram kernels for the brute-force oracle.

Words of [k]^n are addressed by their lexicographic index (first letter most
significant, letters 0-based). A kernel scans an index range ``[lo, hi)`` and
returns ``hist`` with ``hist[r]`` = number of words having exactly r
occurrences.

Two interchangeable paths exist: a numba ``@njit`` loop and a vectorised
numpy fallback. Set ``PATWORDS_DISABLE_NUMBA=1`` (or run without numba
installed) to force the numpy path.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional accelerator
    numba = None

_FLAG = os.environ.get("PATWORDS_DISABLE_NUMBA", "").strip().lower()
NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and _FLAG not in ("1", "true", "yes", "on")

NUMPY_CHUNK = 1 << 16


def pattern_arrays(letters, placements):
    """Pack a pattern into (tuples, pairs, signs) int64 arrays for the kernels."""
    m = len(letters)
    pairs = [(p, q) for p in range(m) for q in range(p + 1, m)]
    signs = [(letters[p] > letters[q]) - (letters[p] < letters[q]) for p, q in pairs]
    tuples = np.asarray(placements, dtype=np.int64).reshape(len(placements), m)
    return (
        tuples,
        np.asarray(pairs, dtype=np.int64).reshape(len(pairs), 2),
        np.asarray(signs, dtype=np.int64),
    )


def histogram_numpy(n, k, lo, hi, tuples, pairs, signs):
    hist = np.zeros(tuples.shape[0] + 1, dtype=np.int64)
    if hi <= lo:
        return hist
    powers = np.asarray([k ** (n - 1 - p) for p in range(n)], dtype=np.int64)
    for start in range(lo, hi, NUMPY_CHUNK):
        idx = np.arange(start, min(hi, start + NUMPY_CHUNK), dtype=np.int64)
        if n:
            words = (idx[:, None] // powers[None, :]) % k
        else:
            words = np.zeros((idx.size, 0), dtype=np.int64)
        counts = np.zeros(idx.size, dtype=np.int64)
        for t in tuples:
            ok = np.ones(idx.size, dtype=bool)
            for (p, q), s in zip(pairs, signs):
                ok &= np.sign(words[:, t[p]] - words[:, t[q]]) == s
            counts += ok
        hist += np.bincount(counts, minlength=hist.size)
    return hist


def _histogram_loop(n, k, lo, hi, tuples, pairs, signs):
    hist = np.zeros(tuples.shape[0] + 1, dtype=np.int64)
    word = np.zeros(max(n, 1), dtype=np.int64)
    for idx in range(lo, hi):
        x = idx
        for pos in range(n - 1, -1, -1):
            word[pos] = x % k
            x //= k
        c = 0
        for t in range(tuples.shape[0]):
            ok = True
            for r in range(pairs.shape[0]):
                a = word[tuples[t, pairs[r, 0]]]
                b = word[tuples[t, pairs[r, 1]]]
                s = 0
                if a > b:
                    s = 1
                elif a < b:
                    s = -1
                if s != signs[r]:
                    ok = False
                    break
            if ok:
                c += 1
        hist[c] += 1
    return hist


if NUMBA_AVAILABLE:
    histogram_numba = numba.njit(cache=True, nogil=True)(_histogram_loop)
else:  # pragma: no cover
    histogram_numba = None


def histogram(n, k, lo, hi, tuples, pairs, signs):
    """Dispatch to the selected backend."""
    if USE_NUMBA:
        return histogram_numba(n, k, lo, hi, tuples, pairs, signs)
    return histogram_numpy(n, k, lo, hi, tuples, pairs, signs)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
