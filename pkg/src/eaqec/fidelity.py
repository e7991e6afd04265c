"""Channel fidelity: exact enumerators, polynomials, bounds and Monte Carlo.

For a Pauli channel the channel fidelity of a code with a representative
decoder is the total probability of the correctable set ``T x S``, so
everything here reduces to counting that set by weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels as K
from .codes import CombinationCode, Code, EaqecCode, as_stabilizer
from .decoder import (
    LogicalErrorDistribution,
    NoiseModel,
    SyndromeTable,
    build_table,
    decode_batch,
    logical_error_distribution,
    tally_products,
)
from .errors import CapabilityError, StructureError

MAX_EXACT_GENERATORS = 14
MC_BLOCK = 1 << 14


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts ``a_w`` of a set of n-qubit Paulis by weight."""

    n: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))
        if len(self.coefficients) != self.n + 1:
            raise StructureError(f"need {self.n + 1} coefficients")

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def __getitem__(self, w: int) -> int:
        return self.coefficients[w]


@dataclass(frozen=True)
class BivariateWeightEnumerator:
    """Counts ``a[w, w']`` by Alice weight ``w`` and Bob weight ``w'``."""

    n: int
    c: int
    coefficients: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(a) for a in row) for row in self.coefficients)
        object.__setattr__(self, "coefficients", rows)
        if len(rows) != self.n + 1 or any(len(r) != self.c + 1 for r in rows):
            raise StructureError(f"need a {self.n + 1} x {self.c + 1} coefficient array")

    @property
    def total(self) -> int:
        return sum(map(sum, self.coefficients))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coefficients[key[0]][key[1]]

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {
            (w, v): a
            for w, row in enumerate(self.coefficients)
            for v, a in enumerate(row)
            if a
        }

    def alice_only(self) -> WeightEnumerator:
        """Coefficients with no Bob error, i.e. the ``p_b = 0`` enumerator."""
        return WeightEnumerator(self.n, [row[0] for row in self.coefficients])

    def collapsed(self) -> WeightEnumerator:
        """Univariate enumerator by total weight (``p_a = p_b``)."""
        out = [0] * (self.n + self.c + 1)
        for w, row in enumerate(self.coefficients):
            for v, a in enumerate(row):
                out[w + v] += a
        return WeightEnumerator(self.n + self.c, out)


@dataclass(frozen=True)
class FidelityPolynomial:
    """Exact rational coefficients of F(p) in increasing degree."""

    coefficients: tuple[Fraction, ...]

    def __call__(self, p: float | Fraction) -> float | Fraction:
        acc = 0 * p
        for a in reversed(self.coefficients):
            acc = acc * p + a
        return acc

    def __str__(self) -> str:
        return ", ".join(_fmt_fraction(a) for a in self.coefficients)

    def terms(self) -> list[str]:
        return [_fmt_fraction(a) for a in self.coefficients]


def _fmt_fraction(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


# -- exact enumeration ---------------------------------------------------------


def require_exact(code: Code) -> None:
    """Raise CapabilityError when exact enumeration would be too large."""
    if as_stabilizer(code).r > MAX_EXACT_GENERATORS:
        raise CapabilityError(
            f"exact enumeration limited to {MAX_EXACT_GENERATORS} generators (4**{MAX_EXACT_GENERATORS} products)"
        )


def enumerate_correctable(
    code: Code,
    table: SyndromeTable | None = None,
    *,
    bivariate: bool | None = None,
    workers: int | None = None,
) -> WeightEnumerator | BivariateWeightEnumerator:
    """Tally ``T x S`` by weight, or by (Alice, Bob) weight for split codes.

    ``bivariate`` defaults to True when the decoder view has Bob qubits.
    Work is split over ranges of syndrome indices and summed.
    """
    stab = as_stabilizer(code)
    require_exact(code)
    table = build_table(code) if table is None else table
    if table.code.generators != stab.generators:
        raise StructureError("table was built for a different code")
    if bivariate is None:
        bivariate = stab.bob > 0
    n = stab.n
    if not bivariate:
        counts = tally_products(table, lambda X, Z: K.weights(X, Z), n + 1, workers=workers)
        return WeightEnumerator(n, counts.tolist())
    na, nb = stab.alice, stab.bob
    alice = K.qubit_mask(n, range(na))
    bob = K.qubit_mask(n, range(na, n))

    def binner(X: np.ndarray, Z: np.ndarray) -> np.ndarray:
        return K.weights(X, Z, alice) * (nb + 1) + K.weights(X, Z, bob)

    counts = tally_products(table, binner, (na + 1) * (nb + 1), workers=workers)
    return BivariateWeightEnumerator(na, nb, counts.reshape(na + 1, nb + 1).tolist())


def fidelity_poly(enumerator: WeightEnumerator) -> FidelityPolynomial:
    """Expand ``sum_w a_w (1 - 3p/4)^(n-w) (p/4)^w`` in powers of p."""
    n = enumerator.n
    coeffs = [Fraction(0)] * (n + 1)
    for w, a in enumerate(enumerator.coefficients):
        if not a:
            continue
        # (1 - 3p/4)^(n-w) = sum_j C(n-w, j) (-3/4)^j p^j
        scale = Fraction(a, 4**w)
        for j in range(n - w + 1):
            coeffs[w + j] += scale * math.comb(n - w, j) * Fraction(-3, 4) ** j
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return FidelityPolynomial(tuple(coeffs))


def fidelity_value(
    enumerator: WeightEnumerator | BivariateWeightEnumerator, noise: NoiseModel
) -> float:
    """Evaluate the enumerator against ``q_w`` (and ``r_w'``)."""
    if isinstance(enumerator, WeightEnumerator):
        q = noise.q_vector(enumerator.n)
        return float(np.dot(np.array(enumerator.coefficients, dtype=float), q))
    q = noise.q_vector(enumerator.n)
    r = noise.r_vector(enumerator.c)
    a = np.array(enumerator.coefficients, dtype=float)
    return float(q @ a @ r)


def exact_fidelity(code: Code, noise: NoiseModel, table: SyndromeTable | None = None) -> float:
    return fidelity_value(enumerate_correctable(code, table), noise)


# -- bounds ------------------------------------------------------------------


def fidelity_lower_bounds(
    code: Code, table: SyndromeTable | None, noise: NoiseModel
) -> dict[str, float | None]:
    """Two cheap lower bounds on the exact fidelity.

    ``rep_bound`` is the probability of the representatives themselves.
    ``distance_bound`` is the probability of the errors on at most
    ``(d - 1) // 2`` qubits (Alice and Bob together) that the table
    corrects; None without a declared d.
    """
    stab = as_stabilizer(code)
    table = build_table(code) if table is None else table
    wa, wb = table.weights()
    na, nb = stab.alice, stab.bob
    q, r = noise.q_vector(na), noise.r_vector(nb)
    rep = float(np.sum(q[wa] * r[wb]))
    d = code.d
    dist = None
    if d is not None:
        alice = K.qubit_mask(stab.n, range(na))
        bob = K.qubit_mask(stab.n, range(na, stab.n))
        dist = 0.0
        for w in range((d - 1) // 2 + 1):
            for X, Z in K.weight_class(stab.n, [(range(stab.n), w)]):
                ok, _ = decode_batch(X, Z, table)
                a, b = K.weights(X[ok], Z[ok], alice), K.weights(X[ok], Z[ok], bob)
                dist += float(np.sum(q[a] * r[b]))
    return {"rep_bound": rep, "distance_bound": None if dist is None else float(dist)}


# -- Monte Carlo ---------------------------------------------------------------


@dataclass(frozen=True)
class MonteCarloResult:
    estimate: float
    std_error: float
    successes: int
    samples: int


def sample_errors(
    n_alice: int, n_bob: int, noise: NoiseModel, count: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Independent depolarizing draws, packed.

    Per qubit a uniform u picks I below ``1 - 3p/4`` and X, Y, Z in
    successive ``p/4`` bins above it.
    """
    n = n_alice + n_bob
    u = rng.random((count, n))
    p = np.concatenate([np.full(n_alice, noise.p_a), np.full(n_bob, noise.p_b)])
    cut0 = 1 - 3 * p / 4
    letter = np.zeros((count, n), dtype=np.uint8)  # 0 I, 1 X, 2 Y, 3 Z
    letter[u >= cut0] = 1
    letter[u >= cut0 + p / 4] = 2
    letter[u >= cut0 + p / 2] = 3
    W = K.n_words(n)
    X = K.pack_bool_rows((letter == 1) | (letter == 2), W)
    Z = K.pack_bool_rows((letter == 2) | (letter == 3), W)
    return X, Z


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed, counter=block << 128))


def monte_carlo_fidelity(
    code: Code,
    table: SyndromeTable | None,
    noise: NoiseModel,
    N: int,
    seed: int = 0,
    workers: int | None = None,
) -> MonteCarloResult:
    """Fraction of sampled errors the decoder corrects.

    Samples come in fixed blocks; block ``b`` draws from a Philox stream
    keyed by ``seed`` at counter ``b``, so the estimate does not depend
    on how blocks are spread over workers.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    stab = as_stabilizer(code)
    table = build_table(code) if table is None else table
    na, nb = stab.alice, stab.bob
    blocks = -(-N // MC_BLOCK)

    def run(a: int, b: int) -> np.ndarray:
        total = 0
        for block in range(a, b):
            size = min(MC_BLOCK, N - block * MC_BLOCK)
            X, Z = sample_errors(na, nb, noise, size, _block_rng(seed, block))
            ok, _ = decode_batch(X, Z, table)
            total += int(ok.sum())
        return np.array([total], dtype=np.int64)

    successes = int(K.map_chunks(run, blocks, 1, workers)[0])
    est = successes / N
    return MonteCarloResult(est, math.sqrt(max(est * (1 - est), 0.0) / N), successes, N)


# -- sequential decoding ---------------------------------------------------------


def bob_pattern_counts(
    code: EaqecCode, table: SyndromeTable | None = None, workers: int | None = None
) -> np.ndarray:
    """``counts[w_A, j]`` over ``T x S`` of the extended code.

    ``j = x | z << c`` encodes the Pauli on Bob's ebit qubits.
    """
    table = build_table(code) if table is None else table
    n, c = code.n, code.c
    total = n + c
    alice = K.qubit_mask(total, range(n))
    width = 4**c

    def binner(X: np.ndarray, Z: np.ndarray) -> np.ndarray:
        # Bob qubits start at position n; gather them into the low bits
        bx = _extract(X, n, c)
        bz = _extract(Z, n, c)
        return K.weights(X, Z, alice) * width + (bx | (bz << c))

    counts = tally_products(table, binner, (n + 1) * width, workers=workers)
    return counts.reshape(n + 1, width)


def _extract(A: np.ndarray, start: int, length: int) -> np.ndarray:
    out = np.zeros(A.shape[0], dtype=np.int64)
    for i in range(length):
        q = start + i
        out |= ((A[:, q >> 6] >> np.uint64(q & 63)) & np.uint64(1)).astype(np.int64) << i
    return out


def eaqec_fidelity_with_bob_law(
    outer: EaqecCode,
    bob_law: LogicalErrorDistribution,
    p_a: float,
    outer_table: SyndromeTable | None = None,
    workers: int | None = None,
) -> float:
    """Outer decode success when Bob's ebits suffer errors drawn from ``bob_law``."""
    if bob_law.c != outer.c:
        raise StructureError(f"Bob law covers {bob_law.c} qubits, code uses {outer.c} ebits")
    counts = bob_pattern_counts(outer, outer_table, workers)
    q = np.array([NoiseModel.site(p_a, w, outer.n) for w in range(outer.n + 1)])
    return float(q @ counts @ bob_law.probs)


def sequential_fidelity(
    comb: CombinationCode,
    noise: NoiseModel,
    outer_table: SyndromeTable | None = None,
    inner_table: SyndromeTable | None = None,
    workers: int | None = None,
) -> float:
    """Fidelity when Bob decodes the inner code before the outer one."""
    law = logical_error_distribution(comb.inner, inner_table, noise.p_b, workers)
    return eaqec_fidelity_with_bob_law(comb.outer, law, noise.p_a, outer_table, workers)


def combination_single_fidelity(
    comb: CombinationCode, noise: NoiseModel, table: SyndromeTable | None = None, workers: int | None = None
) -> float:
    """Fidelity of the joint code under one decoder over all n + m qubits."""
    return fidelity_value(enumerate_correctable(comb.joint, table, workers=workers), noise)


# -- MacWilliams ---------------------------------------------------------------


def krawtchouk(w: int, wp: int, n: int) -> int:
    """Quaternary Krawtchouk polynomial ``P_w(w', n)``."""
    if not (0 <= w <= n and 0 <= wp <= n):
        raise ValueError("need 0 <= w, w' <= n")
    return sum(
        (-1) ** u * 3 ** (w - u) * math.comb(wp, u) * math.comb(n - wp, w - u) for u in range(w + 1)
    )


def macwilliams_transform(A: WeightEnumerator | Sequence[int], group_size: int) -> WeightEnumerator:
    """Weight enumerator of the symplectic dual from that of a group."""
    coeffs = list(A.coefficients if isinstance(A, WeightEnumerator) else A)
    n = len(coeffs) - 1
    if sum(coeffs) != group_size:
        raise StructureError(f"enumerator sums to {sum(coeffs)}, not {group_size}")
    out = []
    for w in range(n + 1):
        b = Fraction(sum(krawtchouk(w, wp, n) * a for wp, a in enumerate(coeffs)), group_size)
        if b.denominator != 1 or b < 0:
            raise StructureError(f"B_{w} = {b} is not a count; input is not a group enumerator")
        out.append(int(b))
    return WeightEnumerator(n, out)
