"""Phaseless Pauli words and GF(2) linear algebra over symplectic vectors.

A word on ``n`` qubits is a pair of Python integers: bit ``i - 1`` of ``x``
(``z``) is the X (Z) component on qubit ``i``.  Qubit 1 is the least
significant bit and a Y sets both bits.  Global phases are never tracked.

Internally a word is also handled as a single ``2n``-bit integer
``x | z << n`` (the "vector" form) for row reduction.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionError, ParseError, RankError, StructureError

_SYMBOLS = "IXZY"  # indexed by x | z << 1


@dataclass(frozen=True)
class PauliWord:
    """An n-qubit Pauli operator without phase."""

    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError(f"negative qubit count {self.n}")
        bound = 1 << self.n
        if not (0 <= self.x < bound and 0 <= self.z < bound):
            raise DimensionError(f"bits do not fit in {self.n} qubits")

    @classmethod
    def from_string(cls, label: str) -> PauliWord:
        """Parse ``"XZZXI"``; the leftmost symbol is qubit 1."""
        x = z = 0
        for i, ch in enumerate(label.strip().upper()):
            try:
                code = _SYMBOLS.index(ch)
            except ValueError:
                raise ParseError(f"bad Pauli symbol {ch!r} in {label!r}") from None
            x |= (code & 1) << i
            z |= (code >> 1) << i
        return cls(len(label.strip()), x, z)

    @classmethod
    def identity(cls, n: int) -> PauliWord:
        return cls(n)

    @classmethod
    def single(cls, n: int, qubit: int, symbol: str) -> PauliWord:
        """``symbol`` on 1-based ``qubit``, identity elsewhere."""
        if not 1 <= qubit <= n:
            raise DimensionError(f"qubit {qubit} outside 1..{n}")
        code = _SYMBOLS.index(symbol.upper())
        bit = 1 << (qubit - 1)
        return cls(n, bit if code & 1 else 0, bit if code & 2 else 0)

    @classmethod
    def from_vector(cls, vec: int, n: int) -> PauliWord:
        mask = (1 << n) - 1
        return cls(n, vec & mask, vec >> n)

    @property
    def vector(self) -> int:
        return self.x | (self.z << self.n)

    @property
    def key(self) -> int:
        """Canonical tie-break value: the integer ``z_bits ++ x_bits``."""
        return (self.z << self.n) | self.x

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def __str__(self) -> str:
        return "".join(
            _SYMBOLS[((self.x >> i) & 1) | (((self.z >> i) & 1) << 1)] for i in range(self.n)
        )

    def __mul__(self, other: PauliWord) -> PauliWord:
        return multiply(self, other)

    def commutes_with(self, other: PauliWord) -> bool:
        return symplectic_product(self, other) == 0

    def tensor(self, other: PauliWord) -> PauliWord:
        """``self ⊗ other``; ``other`` occupies the trailing qubits."""
        return PauliWord(self.n + other.n, self.x | (other.x << self.n), self.z | (other.z << self.n))

    def slice(self, start: int, stop: int) -> PauliWord:
        """Restriction to 0-based qubit positions ``start..stop-1``."""
        mask = (1 << (stop - start)) - 1
        return PauliWord(stop - start, (self.x >> start) & mask, (self.z >> start) & mask)

    def permuted(self, perm: Sequence[int]) -> PauliWord:
        """New qubit ``j`` carries old qubit ``perm[j]`` (both 0-based)."""
        if len(perm) != self.n:
            raise DimensionError("permutation length differs from qubit count")
        x = z = 0
        for j, old in enumerate(perm):
            x |= ((self.x >> old) & 1) << j
            z |= ((self.z >> old) & 1) << j
        return PauliWord(self.n, x, z)


def _check_same_n(p: PauliWord, q: PauliWord) -> None:
    if p.n != q.n:
        raise DimensionError(f"qubit counts differ: {p.n} vs {q.n}")


def symplectic_product(p: PauliWord, q: PauliWord) -> int:
    """0 if ``p`` and ``q`` commute, 1 otherwise."""
    _check_same_n(p, q)
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def multiply(p: PauliWord, q: PauliWord) -> PauliWord:
    _check_same_n(p, q)
    return PauliWord(p.n, p.x ^ q.x, p.z ^ q.z)


def weight(p: PauliWord) -> int:
    return p.weight


class Echelon:
    """Incremental GF(2) row space keyed by leading bit.

    ``reduce`` returns the canonical coset representative: the unique
    vector in ``v + span`` with no pivot bit set.
    """

    def __init__(self, vectors: Iterable[int] = ()) -> None:
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> int:
        for pivot in sorted(self.rows, reverse=True):
            if (v >> pivot) & 1:
                v ^= self.rows[pivot]
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.rows[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank(words: Sequence[PauliWord]) -> int:
    return len(Echelon(w.vector for w in words))


def _require_independent(words: Sequence[PauliWord]) -> None:
    if rank(words) != len(words):
        raise RankError(f"{len(words)} generators are linearly dependent")


def group_elements(generators: Sequence[PauliWord], n: int | None = None) -> Iterator[PauliWord]:
    """All ``2**m`` products of ``m`` independent generators.

    Element ``i`` is the product of the generators whose bit is set in
    ``i`` (generator ``j`` <-> bit ``j``), so the order is the integer
    subset counter and the stream can be split by index range.
    """
    generators = list(generators)
    if not generators:
        yield PauliWord.identity(n or 0)
        return
    n = generators[0].n
    for g in generators:
        _check_same_n(g, generators[0])
    _require_independent(generators)
    for index in range(1 << len(generators)):
        x = z = 0
        j = 0
        while index:
            if index & 1:
                x ^= generators[j].x
                z ^= generators[j].z
            index >>= 1
            j += 1
        yield PauliWord(n, x, z)


def in_group(p: PauliWord, generators: Sequence[PauliWord]) -> bool:
    """Whether ``p`` is a GF(2) combination of ``generators``."""
    for g in generators:
        _check_same_n(p, g)
    return Echelon(g.vector for g in generators).contains(p.vector)


@dataclass(frozen=True)
class CheckMatrix:
    """Generator rows, equivalently the binary matrix ``[H_X | H_Z]``."""

    n: int
    rows: tuple[PauliWord, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if row.n != self.n:
                raise DimensionError(f"row {row} does not have {self.n} qubits")

    @classmethod
    def from_words(cls, rows: Sequence[PauliWord], n: int | None = None) -> CheckMatrix:
        rows = tuple(rows)
        if n is None:
            if not rows:
                raise DimensionError("cannot infer n from an empty row list")
            n = rows[0].n
        return cls(n, rows)

    @classmethod
    def from_strings(cls, labels: Iterable[str]) -> CheckMatrix:
        return cls.from_words([PauliWord.from_string(s) for s in labels])

    @classmethod
    def from_array(cls, array: np.ndarray) -> CheckMatrix:
        array = np.asarray(array, dtype=np.uint8) & 1
        n = array.shape[1] // 2
        rows = []
        for line in array:
            x = sum(int(b) << i for i, b in enumerate(line[:n]))
            z = sum(int(b) << i for i, b in enumerate(line[n:]))
            rows.append(PauliWord(n, x, z))
        return cls(n, tuple(rows))

    def to_array(self) -> np.ndarray:
        out = np.zeros((len(self.rows), 2 * self.n), dtype=np.uint8)
        for r, row in enumerate(self.rows):
            for i in range(self.n):
                out[r, i] = (row.x >> i) & 1
                out[r, self.n + i] = (row.z >> i) & 1
        return out

    @property
    def independent(self) -> bool:
        return rank(self.rows) == len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class StandardForm:
    """Check matrix reduced so that its rows come in symplectic pairs.

    The last ``s`` columns of ``reduced`` are the pivot qubits.  Row ``2i``
    has X and row ``2i + 1`` has Z on pivot column ``n - s + i`` and both
    are clear on every other pivot column; rows from ``2s`` on are clear on
    all pivot columns.  Dropping the pivot columns leaves each row pair
    anticommuting and commuting with everything else.
    ``qubit_permutation[j]`` is the original 0-based
    qubit placed at column ``j``; ``row_transform`` (GF(2), rows x rows)
    maps the original rows to the reduced rows before permutation.
    """

    s: int
    qubit_permutation: tuple[int, ...]
    row_transform: np.ndarray
    reduced: CheckMatrix

    @property
    def n(self) -> int:
        return self.reduced.n

    def pair(self, i: int) -> tuple[PauliWord, PauliWord]:
        """(X-pivot row, Z-pivot row) for pair ``i`` (0-based)."""
        return self.reduced.rows[2 * i], self.reduced.rows[2 * i + 1]

    def simplified(self, c: int | None = None) -> list[PauliWord]:
        """Rows with the last ``c`` (default ``s``) columns removed."""
        c = self.s if c is None else c
        return [row.slice(0, self.n - c) for row in self.reduced.rows]


def _projection_rank(vectors: Sequence[int], qubits: Sequence[int], n: int) -> int:
    width = len(qubits)
    ech = Echelon()
    for v in vectors:
        proj = 0
        for i, q in enumerate(qubits):
            proj |= ((v >> q) & 1) << i
            proj |= ((v >> (n + q)) & 1) << (width + i)
        ech.add(proj)
        if len(ech) == 2 * width:
            break
    return len(ech)


def _pivotable(vectors: Sequence[int], qubits: Sequence[int], n: int) -> bool:
    return _projection_rank(vectors, qubits, n) == 2 * len(qubits)


def select_pivot_qubits(
    rows: Sequence[PauliWord], n: int, *, search_budget: int = 100_000
) -> list[int]:
    """Largest qubit set whose X and Z columns are jointly independent.

    Greedy scan from the last qubit down, then an exhaustive check for a
    strictly larger set when the number of candidate subsets fits in
    ``search_budget``.  Returned qubits are 0-based and ascending.
    """
    vectors = [r.vector for r in rows]
    upper = min(len(vectors) // 2, n)
    chosen: list[int] = []
    for q in reversed(range(n)):
        if len(chosen) == upper:
            break
        if _pivotable(vectors, chosen + [q], n):
            chosen.append(q)
    if len(chosen) < upper:
        sizes = range(upper, len(chosen), -1)
        if sum(math.comb(n, size) for size in sizes) <= search_budget:
            order = list(reversed(range(n)))
            for size in sizes:
                found = next(
                    (c for c in itertools.combinations(order, size) if _pivotable(vectors, c, n)),
                    None,
                )
                if found is not None:
                    chosen = list(found)
                    break
    return sorted(chosen)


def reduce_on_qubits(
    rows: Sequence[PauliWord], n: int, qubits: Sequence[int]
) -> tuple[list[PauliWord], np.ndarray]:
    """Row-reduce on the X and Z columns of ``qubits``, one pivot row each.

    Pivot rows come out in the order ``x_q1, z_q1, x_q2, z_q2, ...``.

    Returns the reduced rows (original column order) and the GF(2) row
    transform.  Raises StructureError if the columns are not independent.
    """
    vecs = [r.vector for r in rows]
    r = len(vecs)
    transform = [1 << i for i in range(r)]
    targets = [col for q in qubits for col in (q, n + q)]
    for t, col in enumerate(targets):
        piv = next((i for i in range(t, r) if (vecs[i] >> col) & 1), None)
        if piv is None:
            raise StructureError(f"qubits {list(qubits)} cannot be paired")
        vecs[t], vecs[piv] = vecs[piv], vecs[t]
        transform[t], transform[piv] = transform[piv], transform[t]
        for i in range(r):
            if i != t and (vecs[i] >> col) & 1:
                vecs[i] ^= vecs[t]
                transform[i] ^= transform[t]
    matrix = np.array([[(m >> j) & 1 for j in range(r)] for m in transform], dtype=np.uint8)
    return [PauliWord.from_vector(v, n) for v in vecs], matrix.reshape(r, r)


def standard_form(H: CheckMatrix, *, search_budget: int = 100_000) -> StandardForm:
    """Pair the rows of an independent check matrix.

    Pivot qubits are chosen by :func:`select_pivot_qubits`; they are moved
    to the end of the column order (ascending), all other qubits keep
    their relative order.
    """
    if not H.independent:
        raise RankError("check matrix rows are linearly dependent")
    n = H.n
    qubits = select_pivot_qubits(H.rows, n, search_budget=search_budget)
    reduced, transform = reduce_on_qubits(H.rows, n, qubits)
    rest = [q for q in range(n) if q not in set(qubits)]
    perm = tuple(rest + qubits)
    permuted = tuple(row.permuted(perm) for row in reduced)
    return StandardForm(len(qubits), perm, transform, CheckMatrix(n, permuted))


def _rref(rows: list[int], nbits: int) -> tuple[list[int], list[int]]:
    rows = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(nbits):
        piv = next((i for i in range(r, len(rows)) if (rows[i] >> col) & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and (rows[i] >> col) & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def _nullspace(rows: list[int], nbits: int) -> list[int]:
    reduced, pivots = _rref(rows, nbits)
    pivot_set = set(pivots)
    basis = []
    for f in range(nbits):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def normalizer_basis(generators: Sequence[PauliWord], n: int) -> list[PauliWord]:
    """Basis of all words commuting with every generator."""
    mask = (1 << n) - 1
    # sp(v, g) is the dot product of v with g's halves swapped
    constraints = [(g.vector >> n) | ((g.vector & mask) << n) for g in generators]
    return [PauliWord.from_vector(v, n) for v in _nullspace(constraints, 2 * n)]


def _sp(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((u & (v >> n)).bit_count() + ((u >> n) & v & mask).bit_count()) & 1


def _gram_schmidt(pool: list[int], n: int) -> tuple[list[tuple[int, int]], list[int]]:
    pool = list(pool)
    pairs: list[tuple[int, int]] = []
    isotropic: list[int] = []
    while pool:
        v = pool.pop(0)
        j = next((i for i, w in enumerate(pool) if _sp(v, w, n)), None)
        if j is None:
            isotropic.append(v)
            continue
        w = pool.pop(j)
        pool = [u ^ (v if _sp(u, w, n) else 0) ^ (w if _sp(u, v, n) else 0) for u in pool]
        pairs.append((v, w))
    return pairs, isotropic


def symplectic_pairing(
    words: Sequence[PauliWord],
) -> tuple[list[tuple[PauliWord, PauliWord]], list[PauliWord]]:
    """Split the span of ``words`` into anticommuting pairs plus a commuting rest.

    Pairs anticommute internally and commute with every other output
    word; together the outputs span the same space as ``words``.
    """
    if not words:
        return [], []
    n = words[0].n
    for w in words:
        _check_same_n(w, words[0])
    pairs, iso = _gram_schmidt([w.vector for w in words], n)
    pw = [(PauliWord.from_vector(a, n), PauliWord.from_vector(b, n)) for a, b in pairs]
    return pw, [PauliWord.from_vector(v, n) for v in iso if v]


def logical_operators(
    generators: Sequence[PauliWord], n: int, k: int
) -> list[tuple[PauliWord, PauliWord]]:
    """``k`` symplectic pairs ``(L_X, L_Z)`` completing the stabilizer.

    Built by symplectic Gram-Schmidt over the normalizer; each operator
    is returned as its canonical representative modulo the stabilizer.
    Within a pair, a pure-Z word is labelled ``L_Z`` and a pure-X word
    ``L_X`` when the choice exists.
    """
    generators = list(generators)
    for g in generators:
        if g.n != n:
            raise DimensionError(f"generator {g} is not on {n} qubits")
    if rank(generators) != len(generators):
        raise StructureError("stabilizer generators are dependent")
    if any(symplectic_product(a, b) for a, b in itertools.combinations(generators, 2)):
        raise StructureError("stabilizer generators do not commute")
    if len(generators) + k != n:
        raise StructureError(f"{len(generators)} generators cannot encode k={k} in n={n}")

    pairs, _ = _gram_schmidt([p.vector for p in normalizer_basis(generators, n)], n)
    if len(pairs) != k:
        raise StructureError(f"found {len(pairs)} logical pairs, expected {k}")

    stab = Echelon(g.vector for g in generators)
    out = []
    mask = (1 << n) - 1
    for v, w in pairs:
        v, w = stab.reduce(v), stab.reduce(w)
        v_is_z, w_is_z = (v & mask) == 0, (w & mask) == 0
        v_is_x, w_is_x = (v >> n) == 0, (w >> n) == 0
        if (v_is_z and not w_is_z) or (w_is_x and not v_is_x):
            v, w = w, v
        out.append((PauliWord.from_vector(v, n), PauliWord.from_vector(w, n)))
    return out
