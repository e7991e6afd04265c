"""Slow, independent reference implementations used only by the tests.

Paulis are ``(x, z)`` integer pairs with the leftmost symbol of a string
at bit 0.  Nothing here imports the package.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

_LETTERS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


def word(s: str) -> tuple[int, int]:
    x = z = 0
    for i, ch in enumerate(s):
        bx, bz = _LETTERS[ch]
        x |= bx << i
        z |= bz << i
    return x, z


def text(p: tuple[int, int], n: int) -> str:
    inv = {v: k for k, v in _LETTERS.items()}
    return "".join(inv[((p[0] >> i) & 1, (p[1] >> i) & 1)] for i in range(n))


def mul(a, b):
    return a[0] ^ b[0], a[1] ^ b[1]


def wt(p, mask=None) -> int:
    s = p[0] | p[1]
    if mask is not None:
        s &= mask
    return bin(s).count("1")


def anticommute(a, b) -> int:
    return (bin(a[0] & b[1]).count("1") + bin(a[1] & b[0]).count("1")) % 2


def all_paulis(n: int):
    for x in range(1 << n):
        for z in range(1 << n):
            yield x, z


def closure(gens) -> set:
    """Group generated by ``gens`` by repeated multiplication."""
    group = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = mul(g, h)
                if p not in group:
                    group.add(p)
                    nxt.append(p)
        frontier = nxt
    return group


def syndrome(e, gens) -> tuple[int, ...]:
    return tuple(anticommute(e, g) for g in gens)


def minweight_table(gens, n: int) -> dict:
    """Scan all Paulis by (weight, (z << n) | x); first word per syndrome wins."""
    order = sorted(all_paulis(n), key=lambda p: (wt(p), (p[1] << n) | p[0]))
    table: dict = {}
    for p in order:
        table.setdefault(syndrome(p, gens), p)
    return table


def listed_table(reps, gens) -> dict:
    return {syndrome(p, gens): p for p in reps}


def success(e, table, gens, group) -> bool:
    return mul(table[syndrome(e, gens)], e) in group


def probability(e, n_alice: int, n: int, p_a, p_b) -> object:
    alice = (1 << n_alice) - 1
    bob = ((1 << n) - 1) ^ alice
    wa, wb = wt(e, alice), wt(e, bob)
    nb = n - n_alice
    return (1 - 3 * p_a / 4) ** (n_alice - wa) * (p_a / 4) ** wa * (1 - 3 * p_b / 4) ** (nb - wb) * (p_b / 4) ** wb


def brute_fidelity(gens, n: int, table, n_alice: int, p_a, p_b=0.0):
    group = closure(gens)
    return sum(
        probability(e, n_alice, n, p_a, p_b)
        for e in all_paulis(n)
        if success(e, table, gens, group)
    )


def correctable_set(gens, table) -> set:
    group = closure(gens)
    return {mul(t, g) for t in table.values() for g in group}


def enumerator(elements, n: int) -> list[int]:
    out = [0] * (n + 1)
    for e in elements:
        out[wt(e)] += 1
    return out


def bivariate(elements, n_alice: int, n: int) -> dict:
    alice = (1 << n_alice) - 1
    bob = ((1 << n) - 1) ^ alice
    out: dict = {}
    for e in elements:
        key = (wt(e, alice), wt(e, bob))
        out[key] = out.get(key, 0) + 1
    return out


def poly_from_enumerator(a: list[int]) -> list[Fraction]:
    """Coefficients of sum_w a_w (1 - 3p/4)^(n-w) (p/4)^w by direct convolution."""
    n = len(a) - 1
    total = [Fraction(0)] * (n + 1)
    for w, aw in enumerate(a):
        poly = [Fraction(aw)]
        for _ in range(n - w):
            poly = _polymul(poly, [Fraction(1), Fraction(-3, 4)])
        for _ in range(w):
            poly = _polymul(poly, [Fraction(0), Fraction(1, 4)])
        for i, c in enumerate(poly):
            total[i] += c
    return total


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def normalizer(gens, n: int) -> list:
    return [p for p in all_paulis(n) if not any(anticommute(p, g) for g in gens)]


def min_distance(gens, n: int, removed) -> int:
    group = closure(removed)
    return min(wt(p) for p in normalizer(gens, n) if p not in group)


def span_index_order(gens) -> list:
    out = []
    for i in range(1 << len(gens)):
        acc = (0, 0)
        for j, g in enumerate(gens):
            if (i >> j) & 1:
                acc = mul(acc, g)
        out.append(acc)
    return out


def subsets(seq):
    for r in range(len(seq) + 1):
        yield from itertools.combinations(seq, r)
