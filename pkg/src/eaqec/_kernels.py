"""Bulk operations on Pauli words packed into uint64 word arrays.

A batch of ``N`` words on ``n`` qubits is a pair ``(X, Z)`` of arrays of
shape ``(N, W)`` with ``W = ceil(n / 64)``; qubit ``i`` lives in word
``(i - 1) // 64`` at bit ``(i - 1) % 64``.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, Sequence

import numpy as np

from .symplectic import PauliWord

_MASK64 = (1 << 64) - 1
CHUNK = 1 << 20  # target element count per vectorised step


def n_words(n: int) -> int:
    return max(1, -(-n // 64))


def pack_ints(values: Sequence[int], n: int) -> np.ndarray:
    W = n_words(n)
    out = np.zeros((len(values), W), dtype=np.uint64)
    for i, v in enumerate(values):
        for w in range(W):
            out[i, w] = (v >> (64 * w)) & _MASK64
    return out


def pack_words(words: Sequence[PauliWord], n: int) -> tuple[np.ndarray, np.ndarray]:
    return pack_ints([p.x for p in words], n), pack_ints([p.z for p in words], n)


def unpack_int(row: np.ndarray) -> int:
    return sum(int(v) << (64 * w) for w, v in enumerate(row))


def unpack_word(x_row: np.ndarray, z_row: np.ndarray, n: int) -> PauliWord:
    return PauliWord(n, unpack_int(x_row), unpack_int(z_row))


def qubit_mask(n: int, positions: Sequence[int]) -> np.ndarray:
    """Word mask with the given 0-based qubit positions set."""
    return pack_ints([sum(1 << q for q in positions)], n)[0]


def popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).sum(axis=-1, dtype=np.int64)


def weights(X: np.ndarray, Z: np.ndarray, mask: np.ndarray | None = None) -> np.ndarray:
    support = X | Z
    if mask is not None:
        support = support & mask
    return popcount(support)


def sp_parity(X: np.ndarray, Z: np.ndarray, gx: np.ndarray, gz: np.ndarray) -> np.ndarray:
    """Symplectic product of every row with one word, as 0/1 int64."""
    return (popcount(X & gz) + popcount(Z & gx)) & 1


def syndromes(X: np.ndarray, Z: np.ndarray, GX: np.ndarray, GZ: np.ndarray) -> np.ndarray:
    """Syndrome integers; generator ``j`` of ``r`` sets bit ``r - 1 - j``."""
    r = GX.shape[0]
    out = np.zeros(X.shape[0], dtype=np.int64)
    for j in range(r):
        out |= sp_parity(X, Z, GX[j], GZ[j]) << (r - 1 - j)
    return out


def span(GX: np.ndarray, GZ: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All subset products in index order (bit ``j`` <-> generator ``j``)."""
    m, W = GX.shape
    X = np.zeros((1 << m, W), dtype=np.uint64)
    Z = np.zeros((1 << m, W), dtype=np.uint64)
    for j in range(m):
        half = 1 << j
        X[half : 2 * half] = X[:half] ^ GX[j]
        Z[half : 2 * half] = Z[:half] ^ GZ[j]
    return X, Z


def canonical_order(X: np.ndarray, Z: np.ndarray) -> np.ndarray:
    """Indices sorting rows by the integer ``(z << n) | x``."""
    W = X.shape[1]
    keys = [X[:, w] for w in range(W)] + [Z[:, w] for w in range(W)]
    return np.lexsort(keys)


def scatter_bits(positions: np.ndarray, bits: np.ndarray, W: int) -> np.ndarray:
    """Rows with ``bits[:, j]`` placed at qubit ``positions[:, j]``."""
    out = np.zeros((positions.shape[0], W), dtype=np.uint64)
    word = positions >> 6
    shifted = bits.astype(np.uint64) << (positions & 63).astype(np.uint64)
    for w in range(W):
        out[:, w] = np.bitwise_or.reduce(np.where(word == w, shifted, 0), axis=1)
    return out


def weight_class(
    n: int, groups: Sequence[tuple[Sequence[int], int]], chunk: int = CHUNK
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Every Pauli with exactly ``w`` non-identity sites in each position group.

    ``groups`` is a list of ``(positions, w)``; output arrives in chunks
    of roughly ``chunk`` rows.
    """
    W = n_words(n)
    total = sum(w for _, w in groups)
    if total == 0:
        zero = np.zeros((1, W), dtype=np.uint64)
        yield zero, zero.copy()
        return
    letters = np.array(list(itertools.product((1, 2, 3), repeat=total)), dtype=np.uint8)
    blocks = np.array_split(letters, -(-len(letters) // chunk))
    per_batch = max(1, chunk // len(blocks[0]))
    for block in blocks:
        combos = itertools.product(*(itertools.combinations(p, w) for p, w in groups))
        while batch := list(itertools.islice(combos, per_batch)):
            pos = np.array([sum(c, ()) for c in batch], dtype=np.int64)
            pos = np.repeat(pos, len(block), axis=0)
            let = np.tile(block, (len(batch), 1))
            yield scatter_bits(pos, let & 1, W), scatter_bits(pos, let >> 1, W)


def class_size(groups: Sequence[tuple[Sequence[int], int]]) -> int:
    return math.prod(math.comb(len(p), w) * 3**w for p, w in groups)


def first_by_key(
    synd: np.ndarray, X: np.ndarray, Z: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """For each distinct syndrome keep the row with the smallest key."""
    order = canonical_order(X, Z)
    s_sorted = synd[order]
    uniq, first = np.unique(s_sorted, return_index=True)
    pick = order[first]
    return uniq, X[pick], Z[pick]


def workers_default() -> int:
    return min(8, os.cpu_count() or 1)


def map_chunks(
    fn: Callable[[int, int], np.ndarray], total: int, step: int, workers: int | None
) -> np.ndarray:
    """Sum ``fn(start, stop)`` over ``[0, total)`` split into ``step`` ranges."""
    ranges = [(a, min(a + step, total)) for a in range(0, total, step)]
    workers = workers_default() if workers is None else max(1, workers)
    if workers == 1 or len(ranges) == 1:
        parts = [fn(a, b) for a, b in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda ab: fn(*ab), ranges))
    return np.sum(parts, axis=0)


def pack_bool_rows(bits: np.ndarray, W: int) -> np.ndarray:
    """(N, n) boolean matrix -> (N, W) uint64, qubit 1 in the lowest bit."""
    N, n = bits.shape
    packed = np.packbits(bits, axis=1, bitorder="little")
    buf = np.zeros((N, 8 * W), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view("<u8").astype(np.uint64)
