"""Finite-dimensional algebras and Hopf algebras given by structure constants.

Conventions, fixed once and used everywhere:

* ``mult[i][j][t]``   -- coefficient of basis vector ``t`` in ``b_i * b_j``
* ``comult[i][j][t]`` -- coefficient of ``b_j (x) b_t`` in the comultiplication
  of ``b_i``
* ``antipode``        -- square matrix whose column ``i`` holds the
  coordinates of the antipode applied to ``b_i``

All axiom checks evaluate exact polynomial identities in the structure
constants; a failure is data (reported with the first violating index), not
an exception, unless the object was constructed with checking enabled.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import AxiomError
from .fields import Field
from .matrix import Matrix


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    first_violation: tuple | None = None

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        return f"{self.name}: FAIL at {self.first_violation}"


@dataclass
class AxiomReport:
    subject: str
    checks: list[AxiomCheck] = dc_field(default_factory=list)

    def record(self, name: str, violation: tuple | None):
        self.checks.append(AxiomCheck(name, violation is None, violation))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def describe(self) -> str:
        return "\n".join(c.describe() for c in self.checks)


class AlgebraData:
    """Associative unital algebra on a chosen basis."""

    def __init__(self, field: Field, dim: int, mult, unit, name: str = "", unchecked: bool = False):
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.name = name
        if not unchecked:
            report = self.check_algebra_axioms()
            if not report.ok:
                raise AxiomError(report)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or '?'} dim={self.dim} over {self.field!r}>"

    # structure access -------------------------------------------------------

    def multiply_vectors(self, u, v):
        """Coordinates of (sum u_i b_i)(sum v_j b_j)."""
        field = self.field
        out = [field.zero()] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mult[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = field.mul(a, b)
                for t, c in enumerate(row[j]):
                    if c:
                        out[t] = field.add(out[t], field.mul(ab, c))
        return out

    def left_mult_matrix(self, i: int) -> Matrix:
        """Matrix of x -> b_i * x in the chosen basis."""
        zero = self.field.zero()
        e = [[zero] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for t, c in enumerate(self.mult[i][j]):
                if c:
                    e[t][j] = c
        return Matrix(self.field, self.dim, self.dim, e)

    def regular_action_matrices(self) -> list[Matrix]:
        return [self.left_mult_matrix(i) for i in range(self.dim)]

    # axioms -----------------------------------------------------------------

    def check_algebra_axioms(self) -> AxiomReport:
        report = AxiomReport(self.name or "algebra")
        report.record("associativity", self._associativity_violation())
        report.record("unit", self._unit_violation())
        return report

    def _associativity_violation(self):
        # compare left-multiplication of (b_i b_j) with L_i * L_j
        lmats = self.regular_action_matrices()
        field = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                prod = lmats[i] * lmats[j]
                zero = field.zero()
                comb = [[zero] * self.dim for _ in range(self.dim)]
                for t, c in enumerate(self.mult[i][j]):
                    if not c:
                        continue
                    for r in range(self.dim):
                        for s in range(self.dim):
                            x = lmats[t].entries[r][s]
                            if x:
                                comb[r][s] = field.add(comb[r][s], field.mul(c, x))
                if prod.entries != comb:
                    return (i, j)
        return None

    def _unit_violation(self):
        field = self.field
        for j in range(self.dim):
            for t in range(self.dim):
                want = field.one() if j == t else field.zero()
                left = field.zero()
                right = field.zero()
                for i, u in enumerate(self.unit):
                    if not u:
                        continue
                    left = field.add(left, field.mul(u, self.mult[i][j][t]))
                    right = field.add(right, field.mul(u, self.mult[j][i][t]))
                if left != want:
                    return ("left", j, t)
                if right != want:
                    return ("right", j, t)
        return None


class HopfAlgebraData(AlgebraData):
    """Hopf algebra: algebra + comultiplication, counit and antipode."""

    def __init__(
        self,
        field: Field,
        dim: int,
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix,
        name: str = "",
        unchecked: bool = False,
    ):
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self._dual_algebra = None
        super().__init__(field, dim, mult, unit, name=name, unchecked=True)
        if not unchecked:
            report = self.check_hopf_axioms()
            if not report.ok:
                raise AxiomError(report)

    # axioms -----------------------------------------------------------------

    def check_hopf_axioms(self) -> AxiomReport:
        report = AxiomReport(self.name or "hopf")
        report.record("associativity", self._associativity_violation())
        report.record("unit", self._unit_violation())
        report.record("coassociativity", self._coassociativity_violation())
        report.record("counit", self._counit_violation())
        report.record("comult_multiplicative", self._comult_multiplicative_violation())
        report.record("comult_unit", self._comult_unit_violation())
        report.record("counit_multiplicative", self._counit_multiplicative_violation())
        report.record("counit_unit", self._counit_unit_violation())
        report.record("antipode_left", self._antipode_violation(left=True))
        report.record("antipode_right", self._antipode_violation(left=False))
        return report

    def _coassociativity_violation(self):
        field = self.field
        n = self.dim
        d = self.comult
        for i in range(n):
            # coefficient of b_a (x) b_b (x) b_c on both sides
            lhs = {}
            for s in range(n):
                for c in range(n):
                    x = d[i][s][c]
                    if not x:
                        continue
                    for a in range(n):
                        for b in range(n):
                            y = d[s][a][b]
                            if y:
                                key = (a, b, c)
                                lhs[key] = field.add(lhs.get(key, field.zero()), field.mul(x, y))
            rhs = {}
            for a in range(n):
                for s in range(n):
                    x = d[i][a][s]
                    if not x:
                        continue
                    for b in range(n):
                        for c in range(n):
                            y = d[s][b][c]
                            if y:
                                key = (a, b, c)
                                rhs[key] = field.add(rhs.get(key, field.zero()), field.mul(x, y))
            for key in set(lhs) | set(rhs):
                if lhs.get(key, field.zero()) != rhs.get(key, field.zero()):
                    return (i,) + key
        return None

    def _counit_violation(self):
        field = self.field
        n = self.dim
        for i in range(n):
            for t in range(n):
                want = field.one() if i == t else field.zero()
                left = field.zero()
                right = field.zero()
                for s in range(n):
                    x = self.comult[i][s][t]
                    if x:
                        left = field.add(left, field.mul(x, self.counit[s]))
                    y = self.comult[i][t][s]
                    if y:
                        right = field.add(right, field.mul(y, self.counit[s]))
                if left != want:
                    return ("left", i, t)
                if right != want:
                    return ("right", i, t)
        return None

    def _comult_multiplicative_violation(self):
        field = self.field
        n = self.dim
        d = self.comult
        m = self.mult
        for i in range(n):
            for j in range(n):
                lhs = {}
                for s in range(n):
                    x = m[i][j][s]
                    if not x:
                        continue
                    for a in range(n):
                        for b in range(n):
                            y = d[s][a][b]
                            if y:
                                key = (a, b)
                                lhs[key] = field.add(lhs.get(key, field.zero()), field.mul(x, y))
                rhs = {}
                for a1 in range(n):
                    for b1 in range(n):
                        x = d[i][a1][b1]
                        if not x:
                            continue
                        for a2 in range(n):
                            for b2 in range(n):
                                y = d[j][a2][b2]
                                if not y:
                                    continue
                                xy = field.mul(x, y)
                                for a, c1 in enumerate(m[a1][a2]):
                                    if not c1:
                                        continue
                                    for b, c2 in enumerate(m[b1][b2]):
                                        if c2:
                                            key = (a, b)
                                            rhs[key] = field.add(
                                                rhs.get(key, field.zero()),
                                                field.mul(xy, field.mul(c1, c2)),
                                            )
                for key in set(lhs) | set(rhs):
                    if lhs.get(key, field.zero()) != rhs.get(key, field.zero()):
                        return (i, j) + key
        return None

    def _comult_unit_violation(self):
        field = self.field
        n = self.dim
        for a in range(n):
            for b in range(n):
                got = field.zero()
                for i, u in enumerate(self.unit):
                    if u:
                        got = field.add(got, field.mul(u, self.comult[i][a][b]))
                want = field.mul(self.unit[a], self.unit[b])
                if got != want:
                    return (a, b)
        return None

    def _counit_multiplicative_violation(self):
        field = self.field
        n = self.dim
        for i in range(n):
            for j in range(n):
                got = field.zero()
                for t, c in enumerate(self.mult[i][j]):
                    if c:
                        got = field.add(got, field.mul(c, self.counit[t]))
                if got != field.mul(self.counit[i], self.counit[j]):
                    return (i, j)
        return None

    def _counit_unit_violation(self):
        field = self.field
        got = field.zero()
        for i, u in enumerate(self.unit):
            if u:
                got = field.add(got, field.mul(u, self.counit[i]))
        return None if got == field.one() else (0,)

    def _antipode_violation(self, left: bool):
        # multiply-convolve the antipode against identity and compare with
        # unit*counit, coordinate by coordinate
        field = self.field
        n = self.dim
        s_cols = self.antipode.entries  # s_cols[a][j] = coefficient of b_a in S(b_j)
        for i in range(n):
            got = [field.zero()] * n
            for j in range(n):
                for t in range(n):
                    x = self.comult[i][j][t]
                    if not x:
                        continue
                    if left:
                        # S(b_j) * b_t
                        for a in range(n):
                            y = s_cols[a][j]
                            if not y:
                                continue
                            xy = field.mul(x, y)
                            for u, c in enumerate(self.mult[a][t]):
                                if c:
                                    got[u] = field.add(got[u], field.mul(xy, c))
                    else:
                        # b_j * S(b_t)
                        for a in range(n):
                            y = s_cols[a][t]
                            if not y:
                                continue
                            xy = field.mul(x, y)
                            for u, c in enumerate(self.mult[j][a]):
                                if c:
                                    got[u] = field.add(got[u], field.mul(xy, c))
            for u in range(n):
                want = field.mul(self.counit[i], self.unit[u])
                if got[u] != want:
                    return (i, u)
        return None

    # derived structure -------------------------------------------------------

    def is_involutory(self) -> bool:
        return (self.antipode * self.antipode).is_identity()

    def antipode_of_vector(self, v):
        """Coordinates of the antipode applied to sum v_i b_i."""
        return [row_val for row_val in (self.antipode * Matrix.column(self.field, v)).flatten()]

    def dual_algebra(self) -> AlgebraData:
        """Convolution algebra on the dual basis: mult*[i][j][t] = comult[t][i][j]."""
        if self._dual_algebra is None:
            n = self.dim
            mult = [[[self.comult[t][i][j] for t in range(n)] for j in range(n)] for i in range(n)]
            self._dual_algebra = AlgebraData(
                self.field, n, mult, list(self.counit), name=f"{self.name}^*"
            )
        return self._dual_algebra


def check_hopf_axioms(h: HopfAlgebraData) -> AxiomReport:
    return h.check_hopf_axioms()


def is_involutory(h: HopfAlgebraData) -> bool:
    return h.is_involutory()


def dual_algebra(h: HopfAlgebraData) -> AlgebraData:
    return h.dual_algebra()
