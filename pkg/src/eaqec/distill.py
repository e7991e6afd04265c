"""Entanglement distillation and scheme comparison.

One-way distillation with an ``[[m, c]]`` stabilizer code leaves the
``c`` output ebits with the code's post-decoding logical error, so its
fidelity is the code's channel fidelity and its residual error law is
the code's logical error distribution.  Composing that law with an EAQEC
code gives the distill-then-transmit scheme.

Schemes are written as short strings::

    NAME                 stabilizer code, or EAQEC code with noisy ebits
    perfect:NAME         EAQEC code with error-free ebits
    single:OUTER+INNER   combination code, one decoder
    seq:OUTER+INNER      combination code, inner decoder first
    distill:INNER>OUTER  distill ebits with INNER, then transmit with OUTER

Any of them may end in ``@strategy`` to pick the table strategy of the
code Alice encodes with.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from .codes import Code, EaqecCode, StabilizerCode, combine, get_code, parse_code
from .decoder import (
    STRATEGIES,
    LogicalErrorDistribution,
    NoiseModel,
    SyndromeTable,
    build_table,
    build_table_minweight,
    class_weight_counts,
    logical_error_distribution,
)
from .errors import CapabilityError, EaqecError, ParseError, StructureError
from .fidelity import (
    bob_pattern_counts,
    eaqec_fidelity_with_bob_law,
    enumerate_correctable,
    fidelity_value,
)

KINDS = (
    "standard",
    "eaqec_perfect_ebits",
    "eaqec_imperfect_ebits",
    "combination_single",
    "combination_sequential",
    "distill_then_eaqec",
)


def distillation_fidelity(code: StabilizerCode, p_c: float, table: SyndromeTable | None = None) -> float:
    """Fidelity of the distilled ebits: the code's channel fidelity at ``p_c``."""
    return fidelity_value(enumerate_correctable(code, table, bivariate=False), NoiseModel(p_c))


def residual_distribution(
    code: StabilizerCode, table: SyndromeTable | None = None, p_c: float = 0.0
) -> LogicalErrorDistribution:
    """Logical error law on the ``c`` distilled ebits."""
    return logical_error_distribution(code, table, p_c)


def distill_then_eaqec_fidelity(
    inner: StabilizerCode,
    outer: EaqecCode,
    p_a: float,
    p_c: float | None = None,
    *,
    inner_table: SyndromeTable | None = None,
    outer_table: SyndromeTable | None = None,
) -> float:
    """Transmit with ``outer`` using ebits distilled by ``inner``.

    ``p_c`` is the rate on the raw ebits fed to distillation and defaults
    to ``p_a``; Bob's distilled halves are otherwise noiseless.
    """
    if inner.k != outer.c:
        raise CapabilityError(f"inner code yields {inner.k} ebits, outer needs {outer.c}")
    p_c = p_a if p_c is None else p_c
    law = residual_distribution(inner, inner_table, p_c)
    return eaqec_fidelity_with_bob_law(outer, law, p_a, outer_table)


# -- schemes -------------------------------------------------------------------


def resolve_code(name: str) -> Code:
    """Catalog key, or path to a code file."""
    try:
        return get_code(name)
    except ParseError:
        path = Path(name)
        if not path.is_file():
            raise
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {name}: {exc}") from None
    return parse_code(text, name=path.stem)


@dataclass(frozen=True)
class SchemeSpec:
    """A coding scheme and which rates each component sees.

    ``codes`` holds the components: ``(code,)`` for single-code kinds,
    ``(outer, inner)`` for combinations and distillation.  ``p_c`` fixes
    the distillation input rate; None binds it to ``p_a``.
    """

    kind: str
    codes: tuple[Code, ...]
    strategy: str = "auto"
    name: str = ""
    p_c: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ParseError(f"unknown scheme kind {self.kind!r}")
        if self.strategy not in STRATEGIES:
            raise ParseError(f"unknown strategy {self.strategy!r}")
        first = self.codes[0]
        if self.kind == "standard" and not isinstance(first, StabilizerCode):
            raise StructureError("standard schemes need a stabilizer code")
        if self.kind != "standard" and not isinstance(first, EaqecCode):
            raise StructureError(f"{self.kind} needs an EAQEC code")
        if len(self.codes) == 2:
            inner = self.codes[1]
            if not isinstance(inner, StabilizerCode) or inner.k != first.c:
                raise CapabilityError(f"inner code must be a stabilizer code encoding {first.c} qubits")
        if not self.name:
            object.__setattr__(self, "name", self.kind)

    @property
    def k(self) -> int:
        return self.codes[0].k


def _code_name(code: Code) -> str:
    return code.name or code.label()


def parse_scheme(text: str, resolver: Callable[[str], Code] = resolve_code) -> SchemeSpec:
    """Parse the scheme grammar in the module docstring."""
    body, _, strategy = text.strip().partition("@")
    strategy = strategy or "auto"
    prefix, sep, rest = body.partition(":")
    if not sep:
        code = resolver(body)
        kind = "eaqec_imperfect_ebits" if isinstance(code, EaqecCode) else "standard"
        return SchemeSpec(kind, (code,), strategy, _code_name(code))
    if prefix == "perfect":
        code = resolver(rest)
        return SchemeSpec("eaqec_perfect_ebits", (code,), strategy, f"perfect:{_code_name(code)}")
    if prefix in ("single", "seq"):
        outer_name, plus, inner_name = rest.partition("+")
        if not plus:
            raise ParseError(f"expected OUTER+INNER in {text!r}")
        outer, inner = resolver(outer_name), resolver(inner_name)
        kind = "combination_single" if prefix == "single" else "combination_sequential"
        return SchemeSpec(kind, (outer, inner), strategy, f"{prefix}:{_code_name(outer)}+{_code_name(inner)}")
    if prefix == "distill":
        inner_name, gt, outer_name = rest.partition(">")
        if not gt:
            raise ParseError(f"expected INNER>OUTER in {text!r}")
        inner, outer = resolver(inner_name), resolver(outer_name)
        return SchemeSpec(
            "distill_then_eaqec", (outer, inner), strategy, f"distill:{_code_name(inner)}>{_code_name(outer)}"
        )
    raise ParseError(f"unknown scheme prefix {prefix!r} in {text!r}")


Evaluator = Callable[[float, float], float]


def compile_scheme(spec: SchemeSpec, noise_for_table: NoiseModel | None = None) -> Evaluator:
    """Precompute enumerators once and return ``F(p_a, p_b)``.

    ``minprob`` tables depend on the rates; they are built for
    ``noise_for_table`` when given, otherwise rebuilt at every point.
    """
    code = spec.codes[0]
    strategy = spec.strategy

    if strategy == "minprob" and noise_for_table is None:

        def per_point(p_a: float, p_b: float) -> float:
            return compile_scheme(spec, NoiseModel(p_a, p_b))(p_a, p_b)

        return per_point

    def table_for(c: Code) -> SyndromeTable:
        return build_table(c, strategy, noise_for_table)

    if spec.kind == "standard":
        enum = enumerate_correctable(code, table_for(code), bivariate=False)
        return lambda p_a, p_b: fidelity_value(enum, NoiseModel(p_a))
    if spec.kind == "eaqec_imperfect_ebits":
        enum = enumerate_correctable(code, table_for(code), bivariate=True)
        return lambda p_a, p_b: fidelity_value(enum, NoiseModel(p_a, p_b))
    if spec.kind == "eaqec_perfect_ebits":
        enum = enumerate_correctable(code, table_for(code), bivariate=True).alice_only()
        return lambda p_a, p_b: fidelity_value(enum, NoiseModel(p_a))

    inner = spec.codes[1]
    if spec.kind == "combination_single":
        comb = combine(code, inner)
        enum = enumerate_correctable(comb.joint, table_for(comb.joint), bivariate=True)
        return lambda p_a, p_b: fidelity_value(enum, NoiseModel(p_a, p_b))

    outer_counts = bob_pattern_counts(code, table_for(code))
    inner_counts = class_weight_counts(build_table_minweight(inner))
    n, m = code.n, inner.n

    def via_law(p_a: float, p_inner: float) -> float:
        q = np.array([NoiseModel.site(p_a, w, n) for w in range(n + 1)])
        law = inner_counts @ np.array([NoiseModel.site(p_inner, w, m) for w in range(m + 1)])
        return float(q @ outer_counts @ law)

    if spec.kind == "combination_sequential":
        return via_law
    fixed = spec.p_c
    return lambda p_a, p_b: via_law(p_a, p_a if fixed is None else fixed)


def scheme_fidelity(spec: SchemeSpec, p_a: float, p_b: float) -> float:
    return compile_scheme(spec)(p_a, p_b)


@dataclass(frozen=True)
class ComparisonResult:
    """Fidelities of several schemes over a list of (p_a, p_b) points."""

    names: tuple[str, ...]
    points: tuple[tuple[float, float], ...]
    values: np.ndarray  # (points, schemes)

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.names.index(name)]

    def best(self) -> list[str]:
        """Best scheme per point; exact ties go to the alphabetically first name."""
        out = []
        for row in self.values:
            top = max(row)
            out.append(min(nm for nm, v in zip(self.names, row) if v == top))
        return out

    def ranking(self) -> list[tuple[str, ...]]:
        return [
            tuple(nm for _, nm in sorted(zip(-row, self.names)))
            for row in self.values
        ]

    def differences(self) -> dict[str, np.ndarray]:
        """``"A-B"`` columns for every pair, A before B alphabetically."""
        out = {}
        for a, b in itertools.combinations(sorted(self.names), 2):
            out[f"{a}-{b}"] = self.column(a) - self.column(b)
        return out


def unique_names(names: Sequence[str]) -> list[str]:
    """Suffix repeated names with ``#2``, ``#3``, ... in order of appearance."""
    seen: dict[str, int] = {}
    out = []
    for nm in names:
        seen[nm] = seen.get(nm, 0) + 1
        out.append(nm if seen[nm] == 1 else f"{nm}#{seen[nm]}")
    return out


def compare_schemes(schemes: Sequence[SchemeSpec], grid: Sequence[tuple[float, float]]) -> ComparisonResult:
    """Evaluate every scheme at every point; all schemes must encode the same k."""
    if not schemes:
        raise ParseError("no schemes to compare")
    ks = {s.k for s in schemes}
    if len(ks) != 1:
        raise StructureError(f"schemes encode different numbers of qubits: {sorted(ks)}")
    names = unique_names([s.name for s in schemes])
    values = np.zeros((len(grid), len(schemes)))
    for j, (spec, name) in enumerate(zip(schemes, names)):
        try:
            fn = compile_scheme(spec)
            for i, (p_a, p_b) in enumerate(grid):
                values[i, j] = fn(p_a, p_b)
        except EaqecError as exc:
            raise type(exc)(f"scheme {name}: {exc}") from exc
    return ComparisonResult(tuple(names), tuple(tuple(map(float, p)) for p in grid), values)
