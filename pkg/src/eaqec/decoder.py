"""Syndrome tables, Pauli-frame decoding and logical error distributions.

Tables are built on the decoder's view of a code: the code itself for a
stabilizer code, the extended code for an EAQEC code.  Representatives are
chosen class by class; within a class the word with the smallest
``(z << n) | x`` wins, which makes every table reproducible.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import _kernels as K
from .codes import CombinationCode, Code, EaqecCode, StabilizerCode, as_stabilizer
from .errors import CapabilityError, DimensionError, InvariantError, StructureError
from .symplectic import PauliWord

MAX_TABLE_GENERATORS = 26
MAX_EXACT_QUBITS = 13  # 4**13 Paulis for exact logical distributions

STRATEGIES = ("minweight", "minprob", "perfect_ebits", "listed", "auto")


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing rates on Alice's and Bob's qubits."""

    p_a: float
    p_b: float = 0.0

    def __post_init__(self) -> None:
        for name in ("p_a", "p_b"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name}={p} outside [0, 1]")

    @staticmethod
    def site(p: float | Fraction, w: int, n: int) -> float | Fraction:
        """Probability of one specific word of weight ``w`` on ``n`` sites."""
        return (1 - 3 * p / 4) ** (n - w) * (p / 4) ** w

    def q(self, w: int, n: int) -> float:
        return self.site(self.p_a, w, n)

    def r(self, w: int, c: int) -> float:
        return self.site(self.p_b, w, c)

    def q_exact(self, w: int, n: int) -> Fraction:
        return self.site(Fraction(self.p_a), w, n)

    def r_exact(self, w: int, c: int) -> Fraction:
        return self.site(Fraction(self.p_b), w, c)

    def q_vector(self, n: int) -> np.ndarray:
        return np.array([self.q(w, n) for w in range(n + 1)])

    def r_vector(self, c: int) -> np.ndarray:
        return np.array([self.r(w, c) for w in range(c + 1)])

    def probability(self, w_a: int, w_b: int, n: int, c: int) -> float:
        return self.q(w_a, n) * self.r(w_b, c)

    def total(self, n: int, c: int) -> Fraction:
        """Exact total mass over all Paulis; always 1."""
        qa = sum(math.comb(n, w) * 3**w * self.q_exact(w, n) for w in range(n + 1))
        rb = sum(math.comb(c, w) * 3**w * self.r_exact(w, c) for w in range(c + 1))
        return qa * rb


@dataclass(frozen=True, eq=False)
class SyndromeTable:
    """One representative per syndrome, stored as packed word arrays.

    ``code`` is the stabilizer view the table decodes; row ``s`` holds
    the representative whose syndrome is ``s``.
    """

    code: StabilizerCode
    rep_x: np.ndarray
    rep_z: np.ndarray
    strategy: str
    noise: NoiseModel | None = None

    def __post_init__(self) -> None:
        size = 1 << self.code.r
        if self.rep_x.shape[0] != size or self.rep_z.shape[0] != size:
            raise InvariantError(f"table has {self.rep_x.shape[0]} rows, expected {size}")
        GX, GZ = K.pack_words(self.code.generators, self.code.n)
        synd = K.syndromes(self.rep_x, self.rep_z, GX, GZ) if self.code.r else np.zeros(1, dtype=np.int64)
        if not np.array_equal(synd, np.arange(size)):
            raise InvariantError("representative syndromes do not match their indices")
        if self.rep_x[0].any() or self.rep_z[0].any():
            raise InvariantError("syndrome 0 must be represented by the identity")
        self.rep_x.setflags(write=False)
        self.rep_z.setflags(write=False)

    def __len__(self) -> int:
        return self.rep_x.shape[0]

    def representative(self, s: int) -> PauliWord:
        return K.unpack_word(self.rep_x[s], self.rep_z[s], self.code.n)

    def representatives(self) -> list[PauliWord]:
        return [self.representative(s) for s in range(len(self))]

    def weights(self) -> tuple[np.ndarray, np.ndarray]:
        """Alice and Bob weights of every representative."""
        n, bob = self.code.n, self.code.bob
        alice = K.qubit_mask(n, range(n - bob))
        bobm = K.qubit_mask(n, range(n - bob, n))
        return K.weights(self.rep_x, self.rep_z, alice), K.weights(self.rep_x, self.rep_z, bobm)

    def write_csv(self, out: TextIO, noise: NoiseModel | None = None) -> None:
        """Columns: syndrome, representative, weight_A, weight_B, probability."""
        noise = noise or self.noise or NoiseModel(0.0, 0.0)
        wa, wb = self.weights()
        na, nb = self.code.alice, self.code.bob
        r = self.code.r
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["syndrome", "representative", "weight_A", "weight_B", "probability"])
        for s in range(len(self)):
            prob = noise.probability(int(wa[s]), int(wb[s]), na, nb)
            bits = format(s, f"0{r}b") if r else ""
            writer.writerow([bits, str(self.representative(s)), int(wa[s]), int(wb[s]), f"{prob:.17g}"])

    def to_csv(self, noise: NoiseModel | None = None) -> str:
        buf = io.StringIO()
        self.write_csv(buf, noise)
        return buf.getvalue()


def _check_size(stab: StabilizerCode) -> None:
    if stab.r > MAX_TABLE_GENERATORS:
        raise CapabilityError(
            f"{stab.r} generators exceed the explicit-table limit of {MAX_TABLE_GENERATORS}; use Monte Carlo"
        )


Spec = list[tuple[Sequence[int], int]]


def _fill(stab: StabilizerCode, groups: Iterable[list[Spec]], strategy: str, noise=None) -> SyndromeTable:
    """First-seen assignment over groups of weight classes.

    Groups are visited in order; inside a group every class is scanned and
    each still-empty syndrome takes the smallest-key word that hits it.
    """
    _check_size(stab)
    n, size = stab.n, 1 << stab.r
    W = K.n_words(n)
    rep_x = np.zeros((size, W), dtype=np.uint64)
    rep_z = np.zeros((size, W), dtype=np.uint64)
    filled = np.zeros(size, dtype=bool)
    filled[0] = True
    remaining = size - 1
    GX, GZ = K.pack_words(stab.generators, n)
    for group in groups:
        if remaining == 0:
            break
        best = None
        for spec in group:
            for X, Z in K.weight_class(n, spec):
                s = K.syndromes(X, Z, GX, GZ)
                keep = ~filled[s]
                if not keep.any():
                    continue
                s, X, Z = s[keep], X[keep], Z[keep]
                if best is not None:
                    s = np.concatenate([best[0], s])
                    X = np.concatenate([best[1], X])
                    Z = np.concatenate([best[2], Z])
                best = K.first_by_key(s, X, Z)
        if best is not None:
            s, X, Z = best
            rep_x[s], rep_z[s] = X, Z
            filled[s] = True
            remaining -= len(s)
    if remaining:
        raise InvariantError(f"{remaining} syndromes left without a representative")
    return SyndromeTable(stab, rep_x, rep_z, strategy, noise)


def build_table_minweight(code: Code) -> SyndromeTable:
    """Lowest total weight per syndrome, ties broken by the canonical key."""
    stab = as_stabilizer(code)
    everything = list(range(stab.n))
    return _fill(stab, ([[(everything, w)]] for w in range(1, stab.n + 1)), "minweight")


def _split_classes(stab: StabilizerCode) -> tuple[list[int], list[int], list[tuple[int, int]]]:
    alice = list(range(stab.alice))
    bob = list(range(stab.alice, stab.n))
    classes = [(a, b) for a in range(len(alice) + 1) for b in range(len(bob) + 1) if a + b]
    return alice, bob, classes


def build_table_minprob(code: Code, noise: NoiseModel) -> SyndromeTable:
    """Most probable word per syndrome under ``noise``.

    Weight classes ``(w_A, w_B)`` are ordered by exact rational
    probability, then by total weight; classes tied on both are scanned
    together so the canonical key decides across them.
    """
    stab = as_stabilizer(code)
    alice, bob, classes = _split_classes(stab)
    na, nb = len(alice), len(bob)

    def rank_key(cls: tuple[int, int]) -> tuple[Fraction, int]:
        return (-noise.q_exact(cls[0], na) * noise.r_exact(cls[1], nb), cls[0] + cls[1])

    ordered = sorted(classes, key=rank_key)
    groups: list[list[Spec]] = []
    last = None
    for cls in ordered:
        key = rank_key(cls)
        spec = [(alice, cls[0]), (bob, cls[1])]
        if key == last:
            groups[-1].append(spec)
        else:
            groups.append([spec])
            last = key
    return _fill(stab, groups, "minprob", noise)


def build_table_perfect_ebits(code: Code) -> SyndromeTable:
    """Prefer words without Bob errors, then low Alice weight."""
    stab = as_stabilizer(code)
    alice, bob, classes = _split_classes(stab)
    ordered = sorted(classes, key=lambda cls: (cls[1], cls[0]))
    return _fill(stab, ([[(alice, a), (bob, b)]] for a, b in ordered), "perfect_ebits")


def table_from_representatives(code: Code, reps: Sequence[PauliWord], strategy: str = "listed") -> SyndromeTable:
    """Table from an explicit list; every syndrome must appear exactly once."""
    stab = as_stabilizer(code)
    _check_size(stab)
    if len(reps) != 1 << stab.r:
        raise StructureError(f"{len(reps)} representatives for {1 << stab.r} syndromes")
    for p in reps:
        if p.n != stab.n:
            raise DimensionError(f"representative {p} is not on {stab.n} qubits")
    X, Z = K.pack_words(reps, stab.n)
    GX, GZ = K.pack_words(stab.generators, stab.n)
    s = K.syndromes(X, Z, GX, GZ) if stab.r else np.zeros(1, dtype=np.int64)
    if len(np.unique(s)) != len(s):
        raise StructureError("two representatives share a syndrome")
    order = np.argsort(s)
    X, Z = X[order], Z[order]
    if X[0].any() or Z[0].any():
        raise StructureError("the identity must represent syndrome 0")
    return SyndromeTable(stab, X, Z, strategy)


def build_table(code: Code, strategy: str = "auto", noise: NoiseModel | None = None) -> SyndromeTable:
    """Dispatch on a strategy name.

    ``auto`` uses a code's listed table when it carries one and the
    minimum-weight table otherwise.
    """
    if strategy == "auto":
        listed = isinstance(code, EaqecCode) and code.representatives is not None
        strategy = "listed" if listed else "minweight"
    if strategy == "minweight":
        return build_table_minweight(code)
    if strategy == "minprob":
        if noise is None:
            raise ValueError("minprob needs a noise model")
        return build_table_minprob(code, noise)
    if strategy == "perfect_ebits":
        return build_table_perfect_ebits(code)
    if strategy == "listed":
        reps = getattr(code, "representatives", None)
        if reps is None:
            raise ValueError(f"code {getattr(code, 'name', '?')} carries no listed table")
        return table_from_representatives(code, reps)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")


# -- decoding ------------------------------------------------------------------


@dataclass(frozen=True)
class DecodeResult:
    success: bool
    logical_class: int


def _logical_arrays(stab: StabilizerCode) -> tuple[np.ndarray, ...]:
    lx = [p[0] for p in stab.logicals]
    lz = [p[1] for p in stab.logicals]
    return K.pack_words(lx, stab.n) + K.pack_words(lz, stab.n)


def logical_classes(X: np.ndarray, Z: np.ndarray, stab: StabilizerCode) -> np.ndarray:
    """Class index ``x | z << k`` of residuals with trivial syndrome.

    Bit ``i`` of ``x`` is set when the residual anticommutes with the
    logical Z of qubit ``i``, i.e. carries a logical X there.
    """
    k = stab.k
    out = np.zeros(X.shape[0], dtype=np.int64)
    if k == 0:
        return out
    LXx, LXz, LZx, LZz = _logical_arrays(stab)
    for i in range(k):
        out |= K.sp_parity(X, Z, LZx[i], LZz[i]) << i
        out |= K.sp_parity(X, Z, LXx[i], LXz[i]) << (k + i)
    return out


def decode_batch(X: np.ndarray, Z: np.ndarray, table: SyndromeTable) -> tuple[np.ndarray, np.ndarray]:
    """Success flags and logical classes for a packed batch of errors."""
    stab = table.code
    GX, GZ = K.pack_words(stab.generators, stab.n)
    s = K.syndromes(X, Z, GX, GZ) if stab.r else np.zeros(X.shape[0], dtype=np.int64)
    RX = X ^ table.rep_x[s]
    RZ = Z ^ table.rep_z[s]
    cls = logical_classes(RX, RZ, stab)
    return cls == 0, cls


def decode(E: PauliWord, code: Code, table: SyndromeTable) -> DecodeResult:
    """Apply the representative for ``E``'s syndrome and classify the residual."""
    stab = as_stabilizer(code)
    if stab is not table.code and stab.generators != table.code.generators:
        raise StructureError("table was built for a different code")
    if E.n != stab.n:
        raise DimensionError(f"error on {E.n} qubits, code on {stab.n}")
    ok, cls = decode_batch(*K.pack_words([E], stab.n), table)
    return DecodeResult(bool(ok[0]), int(cls[0]))


def correctable_count(code: Code, table: SyndromeTable | None = None) -> int:
    """Size of T x S: one coset of the stabilizer per syndrome."""
    r = as_stabilizer(code).r
    return 2**r * 2**r


# -- enumeration over T x S ----------------------------------------------------


def _stabilizer_span(stab: StabilizerCode) -> tuple[np.ndarray, np.ndarray]:
    return K.span(*K.pack_words(stab.generators, stab.n)) if stab.r else (
        np.zeros((1, K.n_words(stab.n)), dtype=np.uint64),
        np.zeros((1, K.n_words(stab.n)), dtype=np.uint64),
    )


def _all_class_words(stab: StabilizerCode) -> tuple[np.ndarray, np.ndarray]:
    """One representative per logical class, in class-index order."""
    k = stab.k
    W = K.n_words(stab.n)
    if k == 0:
        z = np.zeros((1, W), dtype=np.uint64)
        return z, z.copy()
    LXx, LXz, LZx, LZz = _logical_arrays(stab)
    # class bit i (x part) <-> logical X_i, bit k + i (z part) <-> logical Z_i
    gx = np.concatenate([LXx, LZx])
    gz = np.concatenate([LXz, LZz])
    return K.span(gx, gz)


def tally_products(
    table: SyndromeTable,
    binner,
    nbins: int,
    shift: tuple[np.ndarray, np.ndarray] | None = None,
    workers: int | None = None,
) -> np.ndarray:
    """Histogram of ``binner(X, Z)`` over every ``t * g * shift``, t in T, g in S."""
    SX, SZ = _stabilizer_span(table.code)
    if shift is not None:
        SX, SZ = SX ^ shift[0], SZ ^ shift[1]
    TX, TZ = table.rep_x, table.rep_z
    W = TX.shape[1]
    step = max(1, K.CHUNK // len(SX))

    def part(a: int, b: int) -> np.ndarray:
        X = (TX[a:b, None, :] ^ SX[None, :, :]).reshape(-1, W)
        Z = (TZ[a:b, None, :] ^ SZ[None, :, :]).reshape(-1, W)
        return np.bincount(binner(X, Z), minlength=nbins)

    return K.map_chunks(part, len(TX), step, workers)


def class_weight_counts(table: SyndromeTable, workers: int | None = None) -> np.ndarray:
    """``counts[l, w]``: Paulis of weight ``w`` left in logical class ``l`` after decoding.

    Every Pauli is ``t * g * L`` for exactly one t, g and class word L,
    and decoding it leaves class ``L``; rows sum to ``4**r``.
    """
    stab = table.code
    n = stab.n
    CX, CZ = _all_class_words(stab)
    out = np.zeros((len(CX), n + 1), dtype=np.int64)
    for l in range(len(CX)):
        out[l] = tally_products(
            table, lambda X, Z: K.weights(X, Z), n + 1, (CX[l], CZ[l]), workers
        )
    return out


@dataclass(frozen=True, eq=False)
class LogicalErrorDistribution:
    """Probability of each logical Pauli class after decoding.

    Index ``x | z << c``: bit ``i`` of ``x`` (``z``) means a logical X (Z)
    on logical qubit ``i``; index 0 is the identity.
    """

    c: int
    probs: np.ndarray

    def __post_init__(self) -> None:
        if self.probs.shape != (4**self.c,):
            raise StructureError(f"need {4**self.c} class probabilities")
        if (self.probs < -1e-15).any() or abs(self.probs.sum() - 1.0) > 1e-12:
            raise InvariantError("class probabilities do not form a distribution")

    @property
    def identity(self) -> float:
        return float(self.probs[0])

    def weight_marginal(self) -> np.ndarray:
        """Probability that the logical error has weight ``w'`` on the c qubits."""
        mask = (1 << self.c) - 1
        idx = np.arange(4**self.c)
        w = np.bitwise_count((idx & mask) | (idx >> self.c))
        return np.bincount(w, weights=self.probs, minlength=self.c + 1)


def logical_error_distribution(
    inner: StabilizerCode, table: SyndromeTable | None = None, p: float = 0.0, workers: int | None = None
) -> LogicalErrorDistribution:
    """Exact post-decoding logical error law of ``inner`` under rate ``p``."""
    if inner.n > MAX_EXACT_QUBITS:
        raise CapabilityError(
            f"exact distribution limited to {MAX_EXACT_QUBITS} qubits; use Monte Carlo estimation"
        )
    table = build_table_minweight(inner) if table is None else table
    counts = class_weight_counts(table, workers)
    q = np.array([NoiseModel.site(p, w, inner.n) for w in range(inner.n + 1)])
    return LogicalErrorDistribution(inner.k, counts @ q)


# -- profiles and sequential tables ---------------------------------------------


def table_weight_profile(table: SyndromeTable, split: tuple[int, int] | None = None) -> dict[tuple[int, int], int]:
    """Number of representatives per (Alice weight, Bob weight)."""
    n = table.code.n
    na, nb = split if split is not None else (table.code.alice, table.code.bob)
    if na + nb != n:
        raise DimensionError(f"split {na}+{nb} does not cover {n} qubits")
    wa = K.weights(table.rep_x, table.rep_z, K.qubit_mask(n, range(na)))
    wb = K.weights(table.rep_x, table.rep_z, K.qubit_mask(n, range(na, n)))
    out: dict[tuple[int, int], int] = {}
    for a, b in zip(wa.tolist(), wb.tolist()):
        out[(a, b)] = out.get((a, b), 0) + 1
    return dict(sorted(out.items()))


def _lift(bob_part: PauliWord, inner: StabilizerCode) -> PauliWord:
    """Replace X_i / Z_i on Bob's ebit qubits by the inner logical operators."""
    out = PauliWord.identity(inner.n)
    for i, (lx, lz) in enumerate(inner.logicals):
        if (bob_part.x >> i) & 1:
            out = out * lx
        if (bob_part.z >> i) & 1:
            out = out * lz
    return out


def sequential_table(
    comb: CombinationCode,
    outer_table: SyndromeTable | None = None,
    inner_table: SyndromeTable | None = None,
) -> SyndromeTable:
    """Joint-code table equivalent to decoding the inner code, then the outer.

    Entries are ``A(t_A) ⊗ lift(B(t_A)) * t_B`` over both tables, where
    lift maps Bob's ebit Paulis onto the inner logical operators.
    """
    outer, inner, joint = comb.outer, comb.inner, comb.joint
    _check_size(joint)
    outer_table = build_table(outer) if outer_table is None else outer_table
    inner_table = build_table_minweight(inner) if inner_table is None else inner_table
    n = outer.n
    reps = []
    for ta in outer_table.representatives():
        alice = ta.slice(0, n)
        lifted = _lift(ta.slice(n, n + outer.c), inner)
        for tb in inner_table.representatives():
            reps.append(alice.tensor(lifted * tb))
    return table_from_representatives(joint, reps, strategy="sequential")
