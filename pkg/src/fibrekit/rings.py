"""The two exactly-computable local ring models.

PowerSeriesRing(d variables) models k[[x_1, ..., x_d]] restricted to monomial
ideals; SemigroupRing(a_1, ..., a_k) models the complete numerical-semigroup
ring k[[t^a : a in S]], S = <a_1, ..., a_k> with gcd 1. Both are regular/CM
local of the stated dimension, which is what every depth criterion downstream
assumes about the ambient ring.

Rings compare by value, so equal rings built twice interoperate. Instances
are immutable after construction.
"""

from __future__ import annotations

import math

from .errors import InputError
from .ideals import MonomialIdeal, SemigroupIdeal


class PowerSeriesRing:
    """k[[x_1, ..., x_d]], monomials as exponent tuples of length d."""

    __slots__ = ("variables", "_zero", "_unit", "_maximal")

    def __init__(self, *variables: str):
        if not variables:
            raise InputError("a power-series ring needs at least one variable")
        names = tuple(str(v) for v in variables)
        for v in names:
            if not v.isidentifier():
                raise InputError(f"bad variable name {v!r}")
        if len(set(names)) != len(names):
            raise InputError("variable names must be distinct")
        self.variables = names
        self._zero = None
        self._unit = None
        self._maximal = None

    @property
    def dim(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesRing):
            return NotImplemented
        return self.variables == other.variables

    def __hash__(self):
        return hash(("powerseries", self.variables))

    def __repr__(self):
        return f"PowerSeriesRing{self.variables!r}"

    def __str__(self):
        return "k[[" + ", ".join(self.variables) + "]]"

    def validate_monomial(self, exponents) -> tuple:
        try:
            m = tuple(exponents)
        except TypeError:
            raise InputError(f"monomial must be an exponent sequence, got {exponents!r}")
        if len(m) != self.dim:
            raise InputError(
                f"monomial {m} has {len(m)} exponents, ring has {self.dim} variables"
            )
        for e in m:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise InputError(f"exponents must be nonnegative integers, got {m}")
        return m

    def format_monomial(self, exponents) -> str:
        m = self.validate_monomial(exponents)
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def ideal(self, generators) -> MonomialIdeal:
        return MonomialIdeal(self, generators)

    def zero_ideal(self) -> MonomialIdeal:
        if self._zero is None:
            self._zero = MonomialIdeal(self, ())
        return self._zero

    def unit_ideal(self) -> MonomialIdeal:
        if self._unit is None:
            self._unit = MonomialIdeal(self, ((0,) * self.dim,))
        return self._unit

    def maximal_ideal(self) -> MonomialIdeal:
        if self._maximal is None:
            d = self.dim
            gens = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
            self._maximal = MonomialIdeal(self, gens)
        return self._maximal


class SemigroupRing:
    """k[[t^a : a in S]] for S = <generators>, gcd(generators) = 1.

    Membership is tabulated once: the table provably covers every integer up
    to Frobenius + 2*max(a_i) + 1, and anything at or beyond the conductor is
    a member. dim is always 1.
    """

    __slots__ = ("generators", "conductor", "frobenius", "_table", "_zero", "_unit", "_maximal")

    def __init__(self, *generators: int):
        gens = sorted({int(a) for a in generators})
        if not gens:
            raise InputError("a semigroup ring needs at least one generator")
        if gens[0] < 1:
            raise InputError("semigroup generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise InputError(
                f"semigroup generators {tuple(gens)} have gcd {math.gcd(*gens)}; "
                "the semigroup must be numerical (gcd 1)"
            )
        self.generators = tuple(gens)
        a1, amax = gens[0], gens[-1]
        table = bytearray([1])
        run = 0
        # grow until a run of a1 consecutive members certifies the tail
        cap = 2 * amax * amax + 2 * amax + 2
        s = 0
        while run < a1:
            s += 1
            if s > cap:
                raise InputError("semigroup conductor not found within bound")
            ok = 1 if any(s >= a and table[s - a] for a in gens) else 0
            table.append(ok)
            run = run + 1 if ok else 0
        c = s - a1 + 1
        while c > 0 and table[c - 1]:
            c -= 1
        self.conductor = c
        self.frobenius = c - 1
        need = self.frobenius + 2 * amax + 2
        while len(table) < need:
            t = len(table)
            table.append(1 if any(t >= a and table[t - a] for a in gens) else 0)
        self._table = bytes(table)
        self._zero = None
        self._unit = None
        self._maximal = None

    @property
    def dim(self) -> int:
        return 1

    def __eq__(self, other):
        if not isinstance(other, SemigroupRing):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(("semigroup", self.generators))

    def __repr__(self):
        return f"SemigroupRing{self.generators!r}"

    def __str__(self):
        return "k[[" + ", ".join(f"t^{a}" for a in self.generators) + "]]"

    def member(self, s: int) -> bool:
        if s < 0:
            return False
        if s >= self.conductor:
            return True
        return bool(self._table[s])

    def members_below(self, bound: int) -> list:
        """Sorted semigroup members in [0, bound)."""
        n = len(self._table)
        out = [s for s in range(min(bound, n)) if self._table[s]]
        out.extend(range(n, bound))
        return out

    def validate_monomial(self, valuation) -> int:
        if not isinstance(valuation, int) or isinstance(valuation, bool):
            raise InputError(f"monomial must be an integer valuation, got {valuation!r}")
        if valuation < 0 or not self.member(valuation):
            raise InputError(
                f"t^{valuation} is not in the semigroup generated by {self.generators}"
            )
        return valuation

    def format_monomial(self, valuation) -> str:
        v = self.validate_monomial(valuation)
        if v == 0:
            return "1"
        if v == 1:
            return "t"
        return f"t^{v}"

    def ideal(self, generators) -> SemigroupIdeal:
        return SemigroupIdeal(self, generators)

    def zero_ideal(self) -> SemigroupIdeal:
        if self._zero is None:
            self._zero = SemigroupIdeal(self, ())
        return self._zero

    def unit_ideal(self) -> SemigroupIdeal:
        if self._unit is None:
            self._unit = SemigroupIdeal(self, (0,))
        return self._unit

    def maximal_ideal(self) -> SemigroupIdeal:
        if self._maximal is None:
            self._maximal = SemigroupIdeal(self, self.generators)
        return self._maximal
