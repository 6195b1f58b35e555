"""Theorem-level checks on a filtration and the full analysis orchestrator.

Every check returns a CriterionResult carrying both compared integers,
never a bare boolean, so reports can be audited line by line. Checks whose
statement is an unconditional theorem raise TheoremViolationError on
failure (exit code 2: a bug signal, not a computed answer); checks that
decide a property of the input return PASS or FAIL as data.

Gating: the fiber-cone Cohen-Macaulay and depth tests are two-sided only
when the associated graded ring has certified depth >= dim - 1. Without
that certificate the equality of the two lengths is still reported, but no
verdict is issued (PRECONDITION_NOT_ESTABLISHED): the equality can hold
for a non-Cohen-Macaulay fiber cone when the depth hypothesis fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .analysis import (
    CoefficientReport,
    HilbertSeries,
    VSequence,
    bounded_sum,
    coefficient_report,
    fiber_hilbert_series,
    fundamental_lemma_rows,
    g1_from_lengths_dim1,
    v_sequence,
)
from .errors import (
    InputError,
    NotYetPolynomialError,
    TheoremViolationError,
)
from .filtration import FiltrationSpec, HilbertTable, build_table
from .ideals import quotient_length
from .reductions import (
    DepthClass,
    GradedDepth,
    ReductionData,
    classify_graded_depth,
    reduction_number,
    valabrega_valla,
)


class CriterionStatus(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    PRECONDITION_NOT_ESTABLISHED = "PRECONDITION_NOT_ESTABLISHED"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class CriterionResult:
    """One named check with the two integers it compared."""

    name: str
    status: CriterionStatus
    lhs: int | None
    rhs: int | None
    note: str = ""
    bound: int | None = None

    def __str__(self):
        w = f"{self.lhs} vs {self.rhs}" if self.lhs is not None else ""
        tail = f" ({self.note})" if self.note else ""
        return f"{self.name}: {self.status.value} {w}{tail}"


@dataclass(frozen=True)
class MinimalMultiplicityFlags:
    """The four equivalent-or-implied forms of minimal multiplicity.

    relative:    K I_1 = K J                      (relative to K)
    g1_relative: g_1 = -len(R/K)
    classic:     mu(I_1) = e_0 + dim - len(R/I_1) (the K = m form)
    g1_classic:  g_1 = -1
    """

    relative: bool
    g1_relative: bool
    classic: bool
    g1_classic: bool


@dataclass(frozen=True)
class EquivalenceConditions:
    """Truth values of the three equivalent statements tested for ideals of
    minimal multiplicity: graded ring CM / fiber CM with r <= 1 / r <= 1."""

    graded_cm: bool
    fiber_cm_and_r_le_1: bool
    r_le_1: bool

    def all_equal(self) -> bool:
        return self.graded_cm == self.fiber_cm_and_r_le_1 == self.r_le_1


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the orchestrator computed, immutable."""

    spec: FiltrationSpec
    reduction: ReductionData
    table: HilbertTable
    coefficients: CoefficientReport
    graded_depth: GradedDepth
    series: HilbertSeries
    minimal_multiplicity: MinimalMultiplicityFlags
    criteria: tuple = ()
    v: VSequence | None = None
    lemma_rows: tuple = ()
    equivalences: EquivalenceConditions | None = None
    g1_onedim_value: int | None = None
    n_check: int = 0

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def e0(self) -> int:
        return self.coefficients.e0

    @property
    def e1(self) -> int:
        return self.coefficients.e1

    @property
    def g1(self) -> int:
        return self.coefficients.g1

    @property
    def g2(self) -> int:
        if self.dim < 2:
            raise InputError("g_2 needs dimension >= 2")
        return self.coefficients.g.coefficients[2]

    @property
    def f0(self) -> int:
        return self.coefficients.f0

    def criterion(self, name: str) -> CriterionResult:
        for c in self.criteria:
            if c.name == name:
                return c
        raise KeyError(name)


def _k_is_maximal(spec: FiltrationSpec) -> bool:
    return spec.K == spec.ring.maximal_ideal()


def check_g1_lower_bound(
    spec: FiltrationSpec, coefficients: CoefficientReport, reduction: ReductionData
) -> CriterionResult:
    """g_1 >= sum_n len((K I_n + J)/J) - len(R/K); a violation is a bug."""
    j = spec.require_j()
    s_low = bounded_sum(
        lambda n: quotient_length(spec.kterm(n) + j, j), reduction.r, spec.dim
    ) - quotient_length(spec.ring.unit_ideal(), spec.K)
    g1 = coefficients.g1
    if g1 < s_low:
        raise TheoremViolationError(
            f"g_1 = {g1} undercuts its certified lower bound {s_low}"
        )
    return CriterionResult(
        name="g1-lower-bound",
        status=CriterionStatus.PASS,
        lhs=g1,
        rhs=s_low,
        note="g_1 >= lower length sum",
        bound=reduction.r + spec.dim + 2,
    )


def check_g1_upper_bound(
    spec: FiltrationSpec, coefficients: CoefficientReport, reduction: ReductionData
) -> CriterionResult:
    """g_1 <= sum_n len(K I_n / K J I_{n-1}) - len(R/K), reported as data."""
    spec.require_j()
    s_up = bounded_sum(
        lambda n: quotient_length(spec.kterm(n), spec.kjterm(n - 1)),
        reduction.r,
        spec.dim,
    ) - quotient_length(spec.ring.unit_ideal(), spec.K)
    g1 = coefficients.g1
    ok = g1 <= s_up
    return CriterionResult(
        name="g1-upper-bound",
        status=CriterionStatus.PASS if ok else CriterionStatus.FAIL,
        lhs=g1,
        rhs=s_up,
        note="g_1 <= upper length sum" if ok else "upper length sum exceeded",
        bound=reduction.r + spec.dim + 2,
    )


def check_fiber_cm(
    spec: FiltrationSpec,
    coefficients: CoefficientReport,
    reduction: ReductionData,
    graded_depth: GradedDepth,
) -> CriterionResult:
    """Fiber cone Cohen-Macaulay test:

        g_1 = sum_n len((K I_n + J I_{n-1}) / J I_{n-1}) - len(R/K),

    decisive exactly when the graded ring has certified depth >= dim - 1.
    """
    spec.require_j()
    rhs = bounded_sum(
        lambda n: quotient_length(spec.kterm(n) + spec.jterm(n - 1), spec.jterm(n - 1)),
        reduction.r,
        spec.dim,
    ) - quotient_length(spec.ring.unit_ideal(), spec.K)
    g1 = coefficients.g1
    equal = g1 == rhs
    if graded_depth.classification is DepthClass.LOW:
        return CriterionResult(
            name="fiber-cohen-macaulay",
            status=CriterionStatus.PRECONDITION_NOT_ESTABLISHED,
            lhs=g1,
            rhs=rhs,
            note=(
                "graded depth below dim - 1: equality "
                f"{'holds' if equal else 'fails'} but carries no verdict"
            ),
            bound=reduction.r + spec.dim + 2,
        )
    return CriterionResult(
        name="fiber-cohen-macaulay",
        status=CriterionStatus.PASS if equal else CriterionStatus.FAIL,
        lhs=g1,
        rhs=rhs,
        note="fiber cone is Cohen-Macaulay" if equal else "fiber cone is not Cohen-Macaulay",
        bound=reduction.r + spec.dim + 2,
    )


def check_fiber_depth(
    spec: FiltrationSpec,
    coefficients: CoefficientReport,
    reduction: ReductionData,
    graded_depth: GradedDepth,
) -> CriterionResult:
    """Fiber cone depth >= dim - 1 test:

        g_1 = sum_n len(K I_n / J K I_{n-1}) - len(R/K),

    under the same graded-depth gate as the Cohen-Macaulay test.
    """
    spec.require_j()
    rhs = bounded_sum(
        lambda n: quotient_length(spec.kterm(n), spec.kjterm(n - 1)),
        reduction.r,
        spec.dim,
    ) - quotient_length(spec.ring.unit_ideal(), spec.K)
    g1 = coefficients.g1
    equal = g1 == rhs
    if graded_depth.classification is DepthClass.LOW:
        return CriterionResult(
            name="fiber-depth",
            status=CriterionStatus.PRECONDITION_NOT_ESTABLISHED,
            lhs=g1,
            rhs=rhs,
            note=(
                "graded depth below dim - 1: equality "
                f"{'holds' if equal else 'fails'} but carries no verdict"
            ),
            bound=reduction.r + spec.dim + 2,
        )
    return CriterionResult(
        name="fiber-depth",
        status=CriterionStatus.PASS if equal else CriterionStatus.FAIL,
        lhs=g1,
        rhs=rhs,
        note=(
            "fiber depth >= dim - 1" if equal else "fiber depth < dim - 1"
        ),
        bound=reduction.r + spec.dim + 2,
    )


def check_minimal_multiplicity(
    spec: FiltrationSpec,
    coefficients: CoefficientReport,
    table: HilbertTable,
    reduction: ReductionData,
) -> tuple:
    """Evaluate the four minimal-multiplicity forms and their implications.

    Returns (CriterionResult, MinimalMultiplicityFlags). The implications
    asserted (violations are bugs, never data):
      relative => g1_relative;
      classic <=> g1_classic when K is the maximal ideal;
      K I_1 cap J = K J together with g1_relative => relative.
    """
    j = spec.require_j()
    ki = spec.kterm(1)
    kj = spec.K * j
    lrk = quotient_length(spec.ring.unit_ideal(), spec.K)
    g1 = coefficients.g1
    mu_i = len(spec.I.minimal_generators())
    flags = MinimalMultiplicityFlags(
        relative=(ki == kj),
        g1_relative=(g1 == -lrk),
        classic=(mu_i == coefficients.e0 + spec.dim - table.h[1]),
        g1_classic=(g1 == -1),
    )
    if flags.relative and not flags.g1_relative:
        raise TheoremViolationError(
            f"K I = K J but g_1 = {g1} differs from -len(R/K) = {-lrk}"
        )
    if ki.intersect(j) == kj and flags.g1_relative and not flags.relative:
        raise TheoremViolationError(
            "K I cap J = K J and g_1 = -len(R/K), yet K I differs from K J"
        )
    if _k_is_maximal(spec) and flags.classic != flags.g1_classic:
        raise TheoremViolationError(
            f"minimal-multiplicity forms disagree for K = m: "
            f"mu(I) = {mu_i} vs e_0 + d - len(R/I) = "
            f"{coefficients.e0 + spec.dim - table.h[1]}, g_1 = {g1}"
        )
    note_bits = [
        f"K I = K J: {flags.relative}",
        f"g_1 = -len(R/K): {flags.g1_relative}",
        f"mu(I) = e_0 + d - len(R/I): {flags.classic}",
        f"g_1 = -1: {flags.g1_classic}",
    ]
    result = CriterionResult(
        name="minimal-multiplicity",
        status=CriterionStatus.PASS if flags.relative else CriterionStatus.FAIL,
        lhs=g1,
        rhs=-lrk,
        note="; ".join(note_bits),
    )
    return result, flags


def check_fiber_multiplicity_bound(
    spec: FiltrationSpec, coefficients: CoefficientReport, table: HilbertTable
) -> CriterionResult:
    """For K = m only: f_0 <= e_1 - e_0 + len(R/I) + mu(I) - dim + 1.

    The inequality is a theorem, so exceeding it is a bug signal.
    """
    if not _k_is_maximal(spec):
        raise InputError("the fiber multiplicity bound is a K = m statement")
    mu_i = len(spec.I.minimal_generators())
    rhs = (
        coefficients.e1
        - coefficients.e0
        + table.h[1]
        + mu_i
        - spec.dim
        + 1
    )
    f0 = coefficients.f0
    if f0 > rhs:
        raise TheoremViolationError(
            f"fiber multiplicity f_0 = {f0} exceeds its certified bound {rhs}"
        )
    return CriterionResult(
        name="fiber-multiplicity-bound",
        status=CriterionStatus.PASS,
        lhs=f0,
        rhs=rhs,
        note="f_0 <= e_1 - e_0 + len(R/I) + mu(I) - dim + 1",
    )


def check_minimal_multiplicity_equivalences(
    spec: FiltrationSpec,
    reduction: ReductionData,
    graded_depth: GradedDepth,
    fiber_cm: CriterionResult,
    *,
    n_check: int,
) -> tuple:
    """For K = m and an ideal of (classic) minimal multiplicity, the three
    statements

        1. the associated graded ring is Cohen-Macaulay,
        2. the fiber cone is Cohen-Macaulay and r <= 1,
        3. r <= 1,

    are equivalent. Each is evaluated independently; disagreement is a bug.
    Returns (CriterionResult, EquivalenceConditions or None).
    """
    vv = valabrega_valla(spec, n_check=max(n_check, reduction.r + 2))
    graded_cm = graded_depth.classification is DepthClass.CM
    if vv.ok != graded_cm:
        raise TheoremViolationError(
            "the intersection certificate and the length-sum classification "
            f"disagree on graded Cohen-Macaulayness: {vv.ok} vs {graded_cm}"
        )
    if fiber_cm.status is CriterionStatus.PRECONDITION_NOT_ESTABLISHED:
        return (
            CriterionResult(
                name="minimal-multiplicity-equivalences",
                status=CriterionStatus.UNDETERMINED,
                lhs=None,
                rhs=None,
                note="no fiber Cohen-Macaulay verdict available",
            ),
            None,
        )
    fiber_is_cm = fiber_cm.status is CriterionStatus.PASS
    conds = EquivalenceConditions(
        graded_cm=graded_cm,
        fiber_cm_and_r_le_1=(fiber_is_cm and reduction.r <= 1),
        r_le_1=(reduction.r <= 1),
    )
    if not conds.all_equal():
        raise TheoremViolationError(
            "equivalent minimal-multiplicity conditions disagree: "
            f"graded CM = {conds.graded_cm}, "
            f"fiber CM and r <= 1 = {conds.fiber_cm_and_r_le_1}, "
            f"r <= 1 = {conds.r_le_1}"
        )
    result = CriterionResult(
        name="minimal-multiplicity-equivalences",
        status=CriterionStatus.PASS,
        lhs=int(conds.graded_cm),
        rhs=int(conds.r_le_1),
        note=(
            f"all three conditions {'hold' if conds.r_le_1 else 'fail'} "
            f"(r = {reduction.r})"
        ),
    )
    return result, conds


def fit_tables(
    spec: FiltrationSpec,
    n_max: int | None,
    *,
    start: int | None = None,
    retries: int = 3,
):
    """Build the length table and fit all three coefficient sets.

    When n_max is not pinned by the caller, a too-short table is retried
    with a longer one (starting from `start` when given); a pinned n_max
    fails fast with the advisory error.
    """
    auto = n_max is None
    dim = spec.dim
    if auto:
        nm = start if start is not None else 2 * dim + 5
    else:
        nm = n_max
    attempt = 0
    while True:
        table = build_table(spec, nm)
        try:
            return table, coefficient_report(table, dim)
        except NotYetPolynomialError:
            if not auto or attempt >= retries:
                raise
            attempt += 1
            nm += 2 * dim + 3


def analyze(
    spec: FiltrationSpec,
    *,
    n_max: int | None = None,
    n_check: int | None = None,
    search_bound: int = 50,
) -> AnalysisReport:
    """Run the complete pipeline and return an immutable report.

    Order: certify the reduction, build the length table, fit coefficients,
    verify the dimension-specific identities, compute the fiber series,
    classify graded depth, then evaluate every applicable criterion.
    """
    j = spec.require_j()
    reduction = reduction_number(spec, bound=search_bound)
    if not reduction.is_minimal:
        raise InputError(
            f"the checks need a minimal reduction: J has {reduction.mu} "
            f"minimal generators, the ring dimension is {spec.dim}"
        )
    if n_max is None:
        n_max = spec.n_max
    table, coefficients = fit_tables(
        spec, n_max, start=reduction.r + 2 * spec.dim + 5
    )
    if n_check is None:
        n_check = spec.n_check if spec.n_check is not None else max(reduction.r + 2, 6)

    v = None
    lemma = ()
    if spec.dim == 2:
        lemma = fundamental_lemma_rows(spec, table, coefficients.e0)
        v = v_sequence(spec, table, coefficients)
    series = fiber_hilbert_series(table, spec.dim, coefficients.f)
    graded_depth = classify_graded_depth(spec, coefficients.e1, reduction.r)

    criteria = []
    criteria.append(check_g1_lower_bound(spec, coefficients, reduction))
    criteria.append(check_g1_upper_bound(spec, coefficients, reduction))
    fiber_cm = check_fiber_cm(spec, coefficients, reduction, graded_depth)
    criteria.append(fiber_cm)
    criteria.append(check_fiber_depth(spec, coefficients, reduction, graded_depth))
    mm_result, mm_flags = check_minimal_multiplicity(
        spec, coefficients, table, reduction
    )
    criteria.append(mm_result)

    g1_onedim_value = None
    if spec.dim == 1:
        g1_onedim_value = g1_from_lengths_dim1(spec, table, coefficients, reduction.r)
        criteria.append(
            CriterionResult(
                name="g1-length-formula",
                status=CriterionStatus.PASS,
                lhs=g1_onedim_value,
                rhs=coefficients.g1,
                note="dimension-1 length formula agrees with the fit",
                bound=reduction.r + spec.dim + 2,
            )
        )

    equivalences = None
    if _k_is_maximal(spec):
        criteria.append(
            check_fiber_multiplicity_bound(spec, coefficients, table)
        )
        if mm_flags.classic and spec.mode == "adic":
            eq_result, equivalences = check_minimal_multiplicity_equivalences(
                spec, reduction, graded_depth, fiber_cm, n_check=n_check
            )
            criteria.append(eq_result)

    return AnalysisReport(
        spec=spec,
        reduction=reduction,
        table=table,
        coefficients=coefficients,
        graded_depth=graded_depth,
        series=series,
        minimal_multiplicity=mm_flags,
        criteria=tuple(criteria),
        v=v,
        lemma_rows=lemma,
        equivalences=equivalences,
        g1_onedim_value=g1_onedim_value,
        n_check=n_check,
    )
