"""Exact ideal arithmetic in the two supported local ring models.

Both representations are canonical, so structural equality coincides with
equality of ideals:

* power-series model: a monomial ideal of k[[x_1, ..., x_d]] stored as the
  antichain of minimal monomial generators (sorted exponent tuples, no
  generator dividing another);
* semigroup model: an ideal of k[[t^a : a in S]] for a numerical semigroup S
  stored as (finite part F, conductor c), meaning F union {s in S : s >= c},
  with c minimal and F a sorted tuple below c.

Nothing depends on the coefficient field; every operation is lattice or
semigroup combinatorics over plain integers. Ideals are immutable values.
The per-instance power cache only grows and holds immutable entries, so
instances may be shared between threads.

Colength of a monomial ideal is computed by up to three routes (staircase
walk for d = 2, inclusion-exclusion over generator subsets for <= 20
generators, lattice-point scan otherwise). Setting the module flag
CROSS_CHECK = True forces every call to run all applicable routes and
compare them; the test suite switches this on.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

from .errors import (
    ComputationError,
    ContainmentError,
    InputError,
    InternalInconsistencyError,
    RingMismatchError,
)

INFINITE = math.inf

# When set, colength() computes every applicable route and compares.
CROSS_CHECK = False

# Inclusion-exclusion is used only up to this many generators.
IE_GENERATOR_CAP = 20


def quotient_length(big, small) -> int:
    """Length of big/small for ideals small <= big of the same ring.

    Containment is checked first; a violation is an error, never a negative
    number. Both colengths must be finite.
    """
    if big.ring != small.ring:
        raise RingMismatchError("quotient_length across different rings")
    if not big.contains(small):
        raise ContainmentError(f"quotient_length: {small} is not contained in {big}")
    a = big.colength()
    b = small.colength()
    if a is INFINITE or b is INFINITE:
        raise ComputationError("quotient_length of non-cofinite ideals")
    return b - a


class _PowerCache:
    """Mixin providing A ** n with an iterated-multiply cache."""

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("ideal powers need n >= 0")
        if n == 0:
            return self.ring.unit_ideal()
        if n == 1:
            return self
        cache = self._powers
        got = cache.get(n)
        if got is not None:
            return got
        k = max(i for i in cache) if cache else 1
        acc = cache[k] if cache else self
        while k < n:
            acc = acc * self
            k += 1
            cache[k] = acc
        return acc


# ---------------------------------------------------------------------------
# power-series model


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _antichain(cands: Iterable[tuple]) -> tuple:
    """Minimal elements of cands under componentwise <=, sorted."""
    cands = sorted(set(cands))
    if not cands:
        return ()
    if len(cands[0]) == 2:
        # plane case: after lexicographic sort an element is minimal iff its
        # second coordinate beats everything already kept
        out = []
        best = None
        for a, b in cands:
            if best is None or b < best:
                out.append((a, b))
                best = b
        return tuple(out)
    cands.sort(key=sum)
    out = []
    for g in cands:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _heights(gens: Sequence[tuple]):
    """Step function of a plane antichain: list of (x_start, height).

    Height at x is the least y with (x, y) in the ideal; INFINITE left of the
    first generator. gens must be canonical (sorted, second coordinate
    strictly decreasing).
    """
    return [(a, b) for a, b in gens]


def _height_at(gens: Sequence[tuple], x: int):
    h = INFINITE
    for a, b in gens:
        if a > x:
            break
        h = b
    return h


class MonomialIdeal(_PowerCache):
    """Monomial ideal of a power-series ring, canonical antichain form."""

    __slots__ = ("ring", "gens", "_powers")

    def __init__(self, ring, gens: Iterable, *, _canonical: bool = False):
        self.ring = ring
        if _canonical:
            self.gens = tuple(gens)
        else:
            self.gens = _antichain(ring.validate_monomial(g) for g in gens)
        self._powers: dict[int, "MonomialIdeal"] = {}

    # -- value semantics ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        return f"MonomialIdeal({self.ring!r}, {list(self.gens)})"

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"

    def _check(self, other):
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected a monomial ideal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("monomial ideals from different rings")

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero_ideal()
        d = self.ring.dim
        cands = {
            tuple(a[i] + b[i] for i in range(d))
            for a in self.gens
            for b in other.gens
        }
        return MonomialIdeal(self.ring, _antichain(cands), _canonical=True)

    def __add__(self, other):
        self._check(other)
        return MonomialIdeal(
            self.ring, _antichain(self.gens + other.gens), _canonical=True
        )

    def intersect(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero_ideal()
        if self.ring.dim == 2:
            return MonomialIdeal(
                self.ring, _intersect_plane(self.gens, other.gens), _canonical=True
            )
        d = self.ring.dim
        cands = {
            tuple(max(a[i], b[i]) for i in range(d))
            for a in self.gens
            for b in other.gens
        }
        return MonomialIdeal(self.ring, _antichain(cands), _canonical=True)

    def colon(self, other):
        """(self : other) for a nonzero ideal other."""
        self._check(other)
        if other.is_zero:
            raise InputError("colon by the zero ideal")
        if self.is_zero:
            return self.ring.zero_ideal()
        d = self.ring.dim
        out = None
        for b in other.gens:
            shifted = _antichain(
                tuple(max(g[i] - b[i], 0) for i in range(d)) for g in self.gens
            )
            part = MonomialIdeal(self.ring, shifted, _canonical=True)
            out = part if out is None else out.intersect(part)
        return out

    # -- membership and comparison -------------------------------------

    def contains_element(self, monomial) -> bool:
        m = self.ring.validate_monomial(monomial)
        return any(_divides(g, m) for g in self.gens)

    def contains(self, other) -> bool:
        self._check(other)
        return all(self.contains_element(g) for g in other.gens)

    def minimal_generators(self) -> tuple:
        return self.gens

    # -- colength -----------------------------------------------------------

    def _box(self):
        """Per-axis least pure-power exponent, or None if some axis has no
        pure power (colength infinite)."""
        d = self.ring.dim
        box = []
        for i in range(d):
            best = None
            for g in self.gens:
                if g[i] == 0 and any(g):
                    continue
                if all(g[j] == 0 for j in range(d) if j != i):
                    best = g[i] if best is None else min(best, g[i])
            if best is None:
                return None
            box.append(best)
        return box

    def colength(self):
        """Length of R/self; INFINITE when self is not cofinite."""
        if self.is_zero:
            return INFINITE
        box = self._box()
        if box is None:
            return INFINITE
        if CROSS_CHECK:
            routes = {}
            if self.ring.dim == 2:
                routes["staircase"] = _colength_walk(self.gens)
            if len(self.gens) <= IE_GENERATOR_CAP:
                routes["inclusion-exclusion"] = _colength_ie(self.gens, box)
            routes["scan"] = _colength_scan(self.gens, box)
            if len(set(routes.values())) != 1:
                raise InternalInconsistencyError(
                    f"colength routes disagree on {self}: {routes}"
                )
            return routes["scan"]
        if self.ring.dim == 2:
            return _colength_walk(self.gens)
        if len(self.gens) <= IE_GENERATOR_CAP:
            return _colength_ie(self.gens, box)
        return _colength_scan(self.gens, box)


def _intersect_plane(ga: tuple, gb: tuple) -> tuple:
    """Antichain of the intersection of two nonzero plane monomial ideals,
    by merging staircase height functions."""
    breaks = sorted({g[0] for g in ga} | {g[0] for g in gb})
    out = []
    prev = INFINITE
    ia = ib = -1
    ha = hb = INFINITE
    for x in breaks:
        while ia + 1 < len(ga) and ga[ia + 1][0] <= x:
            ia += 1
            ha = ga[ia][1]
        while ib + 1 < len(gb) and gb[ib + 1][0] <= x:
            ib += 1
            hb = gb[ib][1]
        h = max(ha, hb)
        if h is not INFINITE and h < prev:
            out.append((x, h))
            prev = h
    return tuple(out)


def _colength_walk(gens: tuple):
    """d = 2 colength by walking the staircase. gens canonical, nonempty."""
    if gens[0][0] != 0 or gens[-1][1] != 0:
        return INFINITE
    total = 0
    for i in range(len(gens) - 1):
        total += (gens[i + 1][0] - gens[i][0]) * gens[i][1]
    return total


def _colength_ie(gens: tuple, box: list):
    """Inclusion-exclusion over generator subsets, inside the pure-power box.

    Contribution of a subset T is (-1)^|T| * prod_i max(box_i - lcm(T)_i, 0);
    once a partial product hits zero every superset is zero too, which prunes
    hard on staircase-like inputs.
    """
    d = len(box)
    n = len(gens)
    total = 0

    def rec(start: int, lcm: tuple, sign: int):
        nonlocal total
        vol = 1
        for i in range(d):
            side = box[i] - lcm[i]
            if side <= 0:
                return
            vol *= side
        total += sign * vol
        for j in range(start, n):
            g = gens[j]
            rec(j + 1, tuple(max(lcm[i], g[i]) for i in range(d)), -sign)

    rec(0, (0,) * d, 1)
    return total


def _colength_scan(gens: tuple, box: list):
    """Count lattice points inside the box that miss the ideal."""
    total = 0
    for pt in itertools.product(*(range(b) for b in box)):
        if not any(_divides(g, pt) for g in gens):
            total += 1
    return total


# ---------------------------------------------------------------------------
# semigroup model


class SemigroupIdeal(_PowerCache):
    """Ideal of a numerical-semigroup ring in (finite part, conductor) form.

    The zero ideal is (), None. The unit ideal is (), 0. Otherwise the
    element set is set(fpart) | {s in S : s >= conductor} with conductor
    minimal for that set.
    """

    __slots__ = ("ring", "fpart", "conductor", "_powers")

    def __init__(self, ring, generators: Iterable, *, _parts=None):
        self.ring = ring
        if _parts is not None:
            self.fpart, self.conductor = _parts
        else:
            gens = sorted({ring.validate_monomial(g) for g in generators})
            if not gens:
                self.fpart, self.conductor = (), None
            else:
                bound = gens[0] + ring.conductor
                elems = {
                    g + s for g in gens for s in ring.members_below(bound - g)
                }
                self.fpart, self.conductor = _normal_form(ring, elems, bound)
        self._powers: dict[int, "SemigroupIdeal"] = {}
        self._validate()

    def _validate(self):
        ring = self.ring
        if self.conductor is None:
            if self.fpart:
                raise InternalInconsistencyError("zero ideal with finite part")
            return
        prev = -1
        for f in self.fpart:
            if f <= prev or f >= self.conductor or not ring.member(f):
                raise InternalInconsistencyError(f"bad finite part {self.fpart}")
            prev = f
        # closed under adding semigroup generators
        for f in self.fpart:
            for a in ring.generators:
                if not self.contains_element(f + a):
                    raise InternalInconsistencyError(
                        f"{self} is not closed under t^{a}"
                    )

    # -- value semantics ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.conductor is None

    @property
    def is_unit(self) -> bool:
        return self.conductor == 0

    def __eq__(self, other):
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.fpart == other.fpart
            and self.conductor == other.conductor
        )

    def __hash__(self):
        return hash((self.ring, self.fpart, self.conductor))

    def __repr__(self):
        return f"SemigroupIdeal({self.ring!r}, fpart={self.fpart}, conductor={self.conductor})"

    def __str__(self):
        if self.is_zero:
            return "(0)"
        gens = self.minimal_generators()
        return "(" + ", ".join(self.ring.format_monomial(g) for g in gens) + ")"

    def _check(self, other):
        if not isinstance(other, SemigroupIdeal):
            raise TypeError(f"expected a semigroup ideal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("semigroup ideals from different rings")

    # -- element sets --------------------------------------------------------

    def full_bound(self) -> int:
        """A bound B with [B, oo) entirely inside the ideal (nonzero only)."""
        return max(self.conductor, self.ring.conductor)

    def elements_below(self, bound: int) -> set:
        """All ideal elements < bound."""
        if self.is_zero:
            return set()
        out = {f for f in self.fpart if f < bound}
        out.update(
            s for s in self.ring.members_below(bound) if s >= self.conductor
        )
        return out

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero_ideal()
        bound = self.full_bound() + other.full_bound()
        ea = sorted(self.elements_below(bound))
        eb = sorted(other.elements_below(bound))
        sums = set()
        for a in ea:
            for b in eb:
                s = a + b
                if s >= bound:
                    break
                sums.add(s)
        return _from_elements(self.ring, sums, bound)

    def __add__(self, other):
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        bound = min(self.full_bound(), other.full_bound())
        return _from_elements(
            self.ring, self.elements_below(bound) | other.elements_below(bound), bound
        )

    def intersect(self, other):
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero_ideal()
        bound = max(self.full_bound(), other.full_bound())
        return _from_elements(
            self.ring, self.elements_below(bound) & other.elements_below(bound), bound
        )

    def colon(self, other):
        self._check(other)
        if other.is_zero:
            raise InputError("colon by the zero ideal")
        if self.is_zero:
            return self.ring.zero_ideal()
        ring = self.ring
        parts = []
        for b in other.minimal_generators():
            bound = max(ring.conductor, self.full_bound() - b)
            elems = {
                s
                for s in ring.members_below(bound)
                if self.contains_element(s + b)
            }
            parts.append(_from_elements(ring, elems, bound))
        out = parts[0]
        for p in parts[1:]:
            out = out.intersect(p)
        return out

    # -- membership and comparison --------------------------------------

    def contains_element(self, valuation) -> bool:
        v = self.ring.validate_monomial(valuation)
        if self.is_zero:
            return False
        return v >= self.conductor or v in self.fpart

    def contains(self, other) -> bool:
        self._check(other)
        if other.is_zero:
            return True
        if self.is_zero:
            return False
        bound = max(self.full_bound(), other.full_bound())
        return other.elements_below(bound) <= self.elements_below(bound)

    def minimal_generators(self) -> tuple:
        """Valuations generating the ideal, none redundant."""
        if self.is_zero:
            return ()
        ring = self.ring
        bound = self.full_bound() + ring.generators[0]
        elems = self.elements_below(bound)
        return tuple(
            sorted(
                g
                for g in elems
                if not any(g - a in elems for a in ring.generators if g - a >= 0)
            )
        )

    def colength(self):
        """Length of R/self as a count of missing semigroup members."""
        if self.is_zero:
            return INFINITE
        bound = self.full_bound()
        elems = self.elements_below(bound)
        return sum(1 for s in self.ring.members_below(bound) if s not in elems)


def _normal_form(ring, elems: set, bound: int) -> tuple:
    """Canonical (fpart, conductor) for the set elems | [bound, oo)."""
    c = bound
    s = bound - 1
    while s >= 0:
        if ring.member(s) and s not in elems:
            break
        c = s
        s -= 1
    fpart = tuple(sorted(e for e in elems if e < c))
    return fpart, c


def _from_elements(ring, elems: set, bound: int) -> SemigroupIdeal:
    return SemigroupIdeal(ring, (), _parts=_normal_form(ring, elems, bound))
