"""Reduction numbers, element probes, and depth classification.

Everything here is a finite, certified check:

* the reduction number search proves its answer (the recursive definition
  of the filtration propagates the stabilization step forward);
* element probes test degree-one elements of the fiber cone for
  regularity / superficiality over an explicit window of degrees;
* the depth classifier compares e_1 against the two partial-length sums
  whose agreement characterizes depth of the associated graded ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .analysis import bounded_sum
from .errors import InputError, NotAReductionError, TheoremViolationError
from .filtration import FiltrationSpec
from .ideals import quotient_length


@dataclass(frozen=True)
class ReductionData:
    """Certified reduction number of J for the filtration."""

    r: int
    mu: int              # number of minimal generators of J
    is_minimal: bool     # mu equals the ring dimension
    checked_through: int  # J I_n = I_{n+1} verified for r <= n <= this

    def __str__(self):
        kind = "minimal " if self.is_minimal else ""
        return f"{kind}reduction with r = {self.r} (mu = {self.mu})"


def reduction_number(spec: FiltrationSpec, *, bound: int = 50) -> ReductionData:
    """Least r with J I_n = I_{n+1} for all n >= r, or NOT_A_REDUCTION.

    Only finitely many degrees need inspection: past the last explicitly
    given filtration term the recursion I_{n+1} = I_1 I_n holds, and there
    a single verified step J I_m = I_{m+1} pushes forward to every higher
    degree (J I_{m+1} = J I_1 I_m = I_1 (J I_m) = I_{m+2}).
    """
    j = spec.require_j()
    explicit = len(spec.explicit)
    good = {}

    def step_ok(n: int) -> bool:
        if n not in good:
            good[n] = spec.jterm(n) == spec.term(n + 1)
        return good[n]

    for r in range(bound + 1):
        if all(step_ok(n) for n in range(r, max(r, explicit) + 1)):
            mu = len(j.minimal_generators())
            return ReductionData(
                r=r,
                mu=mu,
                is_minimal=(mu == spec.dim),
                checked_through=max(r, explicit),
            )
    raise NotAReductionError(
        f"J I_n = I_(n+1) fails for every starting degree up to {bound}; "
        "J is not a reduction of the filtration (or raise the search bound)"
    )


@dataclass(frozen=True)
class ElementProbe:
    """Outcome of testing one degree-one fiber element."""

    element: str
    kind: str            # "regular" or "superficial"
    ok: bool
    failed_at: int | None
    c: int | None        # superficiality offset, when kind == "superficial"
    n_checked: int


def _degree_one_element(spec: FiltrationSpec, element):
    """Validate x in I_1 \\ K I_1 and return (canonical element, principal ideal)."""
    ring = spec.ring
    x = ring.validate_monomial(element)
    xi = ring.ideal([x])
    if not spec.term(1).contains_element(x):
        raise InputError(
            f"element {ring.format_monomial(x)} is not in I_1: "
            "it has no degree-one image in the fiber cone"
        )
    if spec.kterm(1).contains_element(x):
        raise InputError(
            f"element {ring.format_monomial(x)} lies in K I_1: "
            "its degree-one image in the fiber cone is zero"
        )
    return x, xi


def probe_fiber_regular(spec: FiltrationSpec, element, *, n_check: int = 8) -> ElementProbe:
    """Does x act as a nonzerodivisor on the fiber cone in degrees <= n_check?

    Degree-n test: (K I_n : x) meets I_{n-1} exactly in K I_{n-1}.
    """
    x, xi = _degree_one_element(spec, element)
    failed_at = None
    for n in range(1, n_check + 1):
        lhs = spec.kterm(n).colon(xi).intersect(spec.term(n - 1))
        if lhs != spec.kterm(n - 1):
            failed_at = n
            break
    return ElementProbe(
        element=spec.ring.format_monomial(x),
        kind="regular",
        ok=failed_at is None,
        failed_at=failed_at,
        c=None,
        n_checked=n_check,
    )


def probe_fiber_superficial(
    spec: FiltrationSpec, element, *, n_check: int = 8, c_max: int = 6
) -> ElementProbe:
    """Find the least offset c with (K I_n : x) cap I_c = K I_{n-1} for
    c < n <= n_check; existence of such a c is the superficiality test."""
    x, xi = _degree_one_element(spec, element)
    last_fail = None
    for c in range(c_max + 1):
        failed_at = None
        for n in range(c + 1, n_check + 1):
            lhs = spec.kterm(n).colon(xi).intersect(spec.term(c))
            if lhs != spec.kterm(n - 1):
                failed_at = n
                break
        if failed_at is None:
            return ElementProbe(
                element=spec.ring.format_monomial(x),
                kind="superficial",
                ok=True,
                failed_at=None,
                c=c,
                n_checked=n_check,
            )
        last_fail = failed_at
    return ElementProbe(
        element=spec.ring.format_monomial(x),
        kind="superficial",
        ok=False,
        failed_at=last_fail,
        c=None,
        n_checked=n_check,
    )


@dataclass(frozen=True)
class SequenceCheck:
    """Degree-by-degree ideal-equality certificate, e.g. J cap I_n = J I_{n-1}."""

    name: str
    ok: bool
    failed_at: int | None
    n_checked: int


def valabrega_valla(spec: FiltrationSpec, *, n_check: int = 8) -> SequenceCheck:
    """Check J cap I_n = J I_{n-1} for 1 <= n <= n_check.

    Passing certifies that the initial forms of J are a regular sequence in
    the associated graded ring up to the checked degree.
    """
    j = spec.require_j()
    failed_at = None
    for n in range(1, n_check + 1):
        if j.intersect(spec.term(n)) != spec.jterm(n - 1):
            failed_at = n
            break
    return SequenceCheck(
        name="valabrega-valla",
        ok=failed_at is None,
        failed_at=failed_at,
        n_checked=n_check,
    )


def fiber_regular_sequence_check(
    spec: FiltrationSpec, elements, *, n_check: int = 8
) -> SequenceCheck:
    """Check (x_1..x_s) cap K I_n = (x_1..x_s) K I_{n-1} for 1 <= n <= n_check.

    Passing certifies the degree-one images of the given elements behave as
    a regular sequence on the fiber cone through the checked degrees.
    """
    ring = spec.ring
    xs = [ring.validate_monomial(e) for e in elements]
    if not xs:
        raise InputError("need at least one element to test")
    for x in xs:
        if not spec.term(1).contains_element(x):
            raise InputError(
                f"element {ring.format_monomial(x)} is not in I_1"
            )
        if spec.kterm(1).contains_element(x):
            raise InputError(
                f"element {ring.format_monomial(x)} lies in K I_1: "
                "its degree-one image in the fiber cone is zero"
            )
    xideal = ring.ideal(xs)
    failed_at = None
    for n in range(1, n_check + 1):
        lhs = xideal.intersect(spec.kterm(n))
        rhs = xideal * spec.kterm(n - 1)
        if lhs != rhs:
            failed_at = n
            break
    return SequenceCheck(
        name="fiber-regular-sequence",
        ok=failed_at is None,
        failed_at=failed_at,
        n_checked=n_check,
    )


class DepthClass(Enum):
    CM = "cohen-macaulay"
    DEPTH_GE_DIM_MINUS_1 = "depth >= dim - 1"
    LOW = "depth < dim - 1"


@dataclass(frozen=True)
class GradedDepth:
    """Depth classification of the associated graded ring via length sums.

    cm_sum     = sum_n len((I_n + J)/J)
    depth_sum  = sum_n len(I_n / J I_{n-1})
    The certified inequalities are cm_sum <= e_1 <= depth_sum; equality at
    the lower end means the graded ring is Cohen-Macaulay, equality at the
    upper end means its depth is at least dim - 1.
    """

    classification: DepthClass
    e1: int
    cm_sum: int
    depth_sum: int


def classify_graded_depth(
    spec: FiltrationSpec, e1: int, reduction_number: int
) -> GradedDepth:
    j = spec.require_j()
    cm_sum = bounded_sum(
        lambda n: quotient_length(spec.term(n) + j, j),
        reduction_number,
        spec.dim,
    )
    depth_sum = bounded_sum(
        lambda n: quotient_length(spec.term(n), spec.jterm(n - 1)),
        reduction_number,
        spec.dim,
    )
    if not (cm_sum <= e1 <= depth_sum):
        raise TheoremViolationError(
            f"e_1 = {e1} escapes the certified range "
            f"[{cm_sum}, {depth_sum}] of the depth length sums"
        )
    if e1 == cm_sum:
        if cm_sum != depth_sum:
            raise TheoremViolationError(
                "Cohen-Macaulay length sum matches e_1 while the depth sum "
                f"does not: {cm_sum} vs {depth_sum}"
            )
        cls = DepthClass.CM
    elif e1 == depth_sum:
        cls = DepthClass.DEPTH_GE_DIM_MINUS_1
    else:
        cls = DepthClass.LOW
    return GradedDepth(
        classification=cls, e1=e1, cm_sum=cm_sum, depth_sum=depth_sum
    )
