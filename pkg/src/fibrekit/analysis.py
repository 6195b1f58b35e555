"""Hilbert coefficient extraction and the length identities built on it.

Conventions, fixed once for the whole package (d = ring dimension):

* e-coefficients: for n >> 0, H(n) = len(R/I_n) equals
  sum_i (-1)^i e_i C(n + d - 1 - i, d - i);
* g-coefficients: same alternating degree-d binomial basis for
  H_K(n) = len(R/K I_n);
* f-coefficients: for n >> 0, H_F(n) = len(I_n/K I_n) equals
  sum_i (-1)^i f_i C(n + d - 2 - i, d - 1 - i), a degree d-1 basis.

Linking identities, asserted whenever all three fits are computed:
g_0 = e_0 and g_i = e_i - f_{i-1} for 1 <= i <= d.

All arithmetic is exact. Fits solve on the last d+1 (or d) table points;
the evaluation matrix at consecutive integers is unimodular, so integer
solutions are guaranteed whenever the data is polynomial there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    InternalInconsistencyError,
    NotYetPolynomialError,
    TheoremViolationError,
    UndeterminedSumError,
)
from .filtration import FiltrationSpec, HilbertTable
from .ideals import quotient_length


def binomial(m: int, k: int) -> int:
    """C(m, k) as a polynomial in m, valid for negative m as well."""
    num = 1
    for j in range(k):
        num *= m - j
    return num // math.factorial(k)


class Basis(Enum):
    """Which alternating binomial basis a coefficient set lives in."""

    STANDARD = "degree-d"        # C(n+d-1-i, d-i), i = 0..d
    FIBER = "degree-d-minus-1"   # C(n+d-2-i, d-1-i), i = 0..d-1


def basis_row(dim: int, basis: Basis, n: int) -> list:
    if basis is Basis.STANDARD:
        return [
            (-1) ** i * binomial(n + dim - 1 - i, dim - i) for i in range(dim + 1)
        ]
    return [
        (-1) ** i * binomial(n + dim - 2 - i, dim - 1 - i) for i in range(dim)
    ]


@dataclass(frozen=True)
class CoefficientSet:
    """One fitted coefficient vector with its validation metadata.

    coefficients[i] is the i-th coefficient in `basis`; the fitted
    polynomial agrees with the source sequence exactly for n >= postulation,
    and that agreement was checked on a run of at least `window` + fit-size
    points ending at n_max.
    """

    label: str                      # "E", "G" or "F"
    dim: int
    basis: Basis
    coefficients: tuple
    postulation: int
    n_max: int
    window: int

    def value(self, n: int) -> int:
        row = basis_row(self.dim, self.basis, n)
        return sum(c * r for c, r in zip(self.coefficients, row))

    def __str__(self):
        return f"{self.label} = {self.coefficients} (exact from n = {self.postulation})"


def _solve_exact(rows: list, rhs: list) -> list:
    """Gaussian elimination over Fraction; raises on a singular system."""
    k = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(rows, rhs)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            raise InternalInconsistencyError("singular fit system (basis misuse)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][k] for r in range(k)]


def fit_coefficients(
    values: Sequence[int],
    dim: int,
    basis: Basis = Basis.STANDARD,
    *,
    window: int | None = None,
    label: str = "",
) -> CoefficientSet:
    """Fit the alternating binomial polynomial to values[0..n_max] exactly.

    Solves on the last d+1 (STANDARD) or d (FIBER) points, then locates the
    postulation index n0 = least n from which the polynomial reproduces the
    sequence through n_max. Requires the matching run to be at least
    fit-size + window points (window defaults to d+2); anything shorter is
    NOT_YET_POLYNOMIAL, with the remedy (raise n_max) in the message.
    """
    if window is None:
        window = dim + 2
    ncoef = dim + 1 if basis is Basis.STANDARD else dim
    n_max = len(values) - 1
    if n_max + 1 < ncoef + window:
        raise NotYetPolynomialError(
            f"need at least {ncoef + window} table values for a validated "
            f"{'E/G' if basis is Basis.STANDARD else 'F'} fit, got {n_max + 1}; "
            "raise n_max"
        )
    points = range(n_max - ncoef + 1, n_max + 1)
    rows = [basis_row(dim, basis, n) for n in points]
    sol = _solve_exact(rows, [values[n] for n in points])
    for c in sol:
        if c.denominator != 1:
            raise InternalInconsistencyError(
                "non-integer coefficient from a unimodular fit system"
            )
    coeffs = tuple(int(c) for c in sol)
    fitted = CoefficientSet(
        label=label,
        dim=dim,
        basis=basis,
        coefficients=coeffs,
        postulation=0,
        n_max=n_max,
        window=window,
    )
    n0 = n_max + 1
    for n in range(n_max, -1, -1):
        if fitted.value(n) != values[n]:
            break
        n0 = n
    if n_max - n0 + 1 < ncoef + window:
        raise NotYetPolynomialError(
            f"Hilbert data stabilizes only at n = {n0} with n_max = {n_max}: "
            f"not enough validated points ({n_max - n0 + 1} < {ncoef + window}); "
            "raise n_max"
        )
    return CoefficientSet(
        label=label,
        dim=dim,
        basis=basis,
        coefficients=coeffs,
        postulation=n0,
        n_max=n_max,
        window=window,
    )


@dataclass(frozen=True)
class CoefficientReport:
    """The three fitted coefficient sets with linking identities verified."""

    e: CoefficientSet
    g: CoefficientSet
    f: CoefficientSet

    @property
    def e0(self) -> int:
        return self.e.coefficients[0]

    @property
    def e1(self) -> int:
        return self.e.coefficients[1]

    @property
    def g1(self) -> int:
        return self.g.coefficients[1]

    @property
    def f0(self) -> int:
        return self.f.coefficients[0]


def coefficient_report(table: HilbertTable, dim: int) -> CoefficientReport:
    """Fit all three Hilbert functions and assert the linking identities."""
    e = fit_coefficients(table.h, dim, Basis.STANDARD, label="E")
    g = fit_coefficients(table.hk, dim, Basis.STANDARD, label="G")
    f = fit_coefficients(table.hf, dim, Basis.FIBER, label="F")
    if g.coefficients[0] != e.coefficients[0]:
        raise InternalInconsistencyError(
            f"g_0 = {g.coefficients[0]} differs from e_0 = {e.coefficients[0]}"
        )
    for i in range(1, dim + 1):
        if g.coefficients[i] != e.coefficients[i] - f.coefficients[i - 1]:
            raise InternalInconsistencyError(
                f"g_{i} != e_{i} - f_{i - 1}: "
                f"{g.coefficients[i]} vs {e.coefficients[i]} - {f.coefficients[i - 1]}"
            )
    return CoefficientReport(e=e, g=g, f=f)


def bounded_sum(term: Callable[[int], int], reduction_number: int, dim: int) -> int:
    """Sum term(n) for n >= 1, certified finite.

    Every summand with reduction_number < n <= reduction_number + dim + 2
    must vanish identically; a nonzero tail raises UNDETERMINED rather than
    truncating silently.
    """
    stop = reduction_number + dim + 2
    total = 0
    for n in range(1, stop + 1):
        v = term(n)
        if n > reduction_number and v != 0:
            raise UndeterminedSumError(
                f"length sum does not terminate: summand at n = {n} is {v} "
                f"although the reduction number is {reduction_number}"
            )
        total += v
    return total


@dataclass(frozen=True)
class VSequence:
    """The d = 2 length decomposition of g_1 and g_2.

    values[0] = e_0, values[1] = e_0 - H_K(1) + H_K(0), and for n >= 2
    values[n] = len(K I_n / K J I_{n-1}) - len((K I_{n-1} : J) / K I_{n-2}).
    Then g_1 = sum_{n>=1} values[n] and
    g_2 = sum_{n>=1} (n-1) values[n] + H_K(0), both cross-checked against
    the fitted coefficients.
    """

    values: tuple
    g1: int
    g2: int

    def last_nonzero(self) -> int:
        idx = 0
        for n, v in enumerate(self.values):
            if v:
                idx = n
        return idx


def v_sequence(
    spec: FiltrationSpec, table: HilbertTable, coefficients: CoefficientReport
) -> VSequence:
    """Compute the v-sequence (dimension 2 only) and cross-check the fit."""
    if spec.dim != 2:
        raise InternalInconsistencyError("the v-sequence is a dimension-2 construction")
    spec.require_j()
    e0 = coefficients.e0
    values = [e0, e0 - table.hk[1] + table.hk[0]]
    for n in range(2, table.n_max + 1):
        first = quotient_length(spec.kterm(n), spec.kjterm(n - 1))
        second = quotient_length(spec.kterm(n - 1).colon(spec.J), spec.kterm(n - 2))
        values.append(first - second)
    g1 = sum(values[1:])
    g2 = sum((n - 1) * values[n] for n in range(1, len(values))) + table.hk[0]
    if g1 != coefficients.g.coefficients[1] or g2 != coefficients.g.coefficients[2]:
        raise TheoremViolationError(
            f"v-sequence sums (g1, g2) = ({g1}, {g2}) disagree with the fitted "
            f"({coefficients.g.coefficients[1]}, {coefficients.g.coefficients[2]})"
        )
    return VSequence(values=tuple(values), g1=g1, g2=g2)


@dataclass(frozen=True)
class LemmaRow:
    """One verified row of the second-difference length identity."""

    n: int
    lhs: int
    rhs: int
    equal: bool


def fundamental_lemma_rows(
    spec: FiltrationSpec,
    table: HilbertTable,
    e0: int,
    n_start: int = 2,
    n_stop: int | None = None,
) -> tuple:
    """Check, for each n in range, the dimension-2 identity

        e_0 - D2[H_K](n) = len(K I_n / K J I_{n-1})
                           - len((K I_{n-1} : J) / K I_{n-2}).

    Any inequality is a theorem violation (bug signal).
    """
    if spec.dim != 2:
        raise InternalInconsistencyError("the identity is a dimension-2 statement")
    spec.require_j()
    if n_stop is None:
        n_stop = table.n_max
    if n_start < 2:
        raise InternalInconsistencyError("the identity starts at n = 2")
    rows = []
    for n in range(n_start, n_stop + 1):
        lhs = e0 - table.delta2_hk(n)
        rhs = quotient_length(spec.kterm(n), spec.kjterm(n - 1)) - quotient_length(
            spec.kterm(n - 1).colon(spec.J), spec.kterm(n - 2)
        )
        if lhs != rhs:
            raise TheoremViolationError(
                f"second-difference identity fails at n = {n}: {lhs} != {rhs}"
            )
        rows.append(LemmaRow(n=n, lhs=lhs, rhs=rhs, equal=True))
    return tuple(rows)


@dataclass(frozen=True)
class HilbertSeries:
    """Fiber-cone Hilbert series as numerator / (1-t)^pole_order."""

    numerator: tuple
    pole_order: int
    has_negative: bool

    def __str__(self):
        if not self.numerator:
            return "0"
        parts = []
        for j, c in enumerate(self.numerator):
            if c == 0:
                continue
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                t = "t" if j == 1 else f"t^{j}"
                body = t if mag == 1 else f"{mag}*{t}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        num = " ".join(parts) if parts else "0"
        return f"({num}) / (1-t)^{self.pole_order}"


def fiber_hilbert_series(table: HilbertTable, dim: int, fit: CoefficientSet) -> HilbertSeries:
    """Numerator of sum_n H_F(n) t^n times (1-t)^dim, with termination and
    regeneration verified against the table and the validated fit."""

    def hf(n: int) -> int:
        return table.hf[n] if n <= table.n_max else fit.value(n)

    top = fit.postulation + dim
    coeffs = []
    for j in range(top + dim + 3):
        c = sum((-1) ** i * math.comb(dim, i) * hf(j - i) for i in range(min(j, dim) + 1))
        coeffs.append(c)
    for j in range(top + 1, len(coeffs)):
        if coeffs[j] != 0:
            raise InternalInconsistencyError(
                f"fiber series numerator does not terminate: h_{j} = {coeffs[j]}"
            )
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    # regenerate H_F from the numerator as an independent check
    for n in range(table.n_max + 1):
        regen = sum(
            coeffs[j] * binomial(n - j + dim - 1, dim - 1)
            for j in range(min(n, len(coeffs) - 1) + 1)
        )
        if regen != table.hf[n]:
            raise InternalInconsistencyError(
                f"fiber series regeneration fails at n = {n}: {regen} != {table.hf[n]}"
            )
    return HilbertSeries(
        numerator=tuple(coeffs),
        pole_order=dim,
        has_negative=any(c < 0 for c in coeffs),
    )


def g1_from_lengths_dim1(
    spec: FiltrationSpec,
    table: HilbertTable,
    coefficients: CoefficientReport,
    reduction_number: int,
) -> int:
    """Dimension-1 identity g_1 = sum_n len(K I_n / x K I_{n-1}) - len(R/K)
    for J = (x); the sum is certified to terminate and the result is
    cross-checked against the fitted g_1."""
    if spec.dim != 1:
        raise InternalInconsistencyError("this identity is a dimension-1 statement")
    j = spec.require_j()
    if len(j.minimal_generators()) != 1:
        raise InternalInconsistencyError("dimension-1 reductions are principal")
    total = bounded_sum(
        lambda n: quotient_length(spec.kterm(n), spec.kjterm(n - 1)),
        reduction_number,
        spec.dim,
    )
    value = total - table.hk[0]
    if value != coefficients.g1:
        raise TheoremViolationError(
            f"dimension-1 length formula gives g_1 = {value}, "
            f"the fit gives {coefficients.g1}"
        )
    return value
