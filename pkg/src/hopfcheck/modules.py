"""Left modules over a structure-constant algebra, as one matrix per basis
element of the algebra.

Tensor products use the diagonal coproduct action; the basis of a tensor
product is ordered with the second factor fastest, so iterated products
agree entry-for-entry without reindexing.
"""

from __future__ import annotations

from .errors import HopfMismatchError
from .hopf import AlgebraData, AxiomReport, HopfAlgebraData
from .matrix import Matrix, kernel_basis


def same_algebra(a: AlgebraData, b: AlgebraData) -> bool:
    if a is b:
        return True
    if a.field != b.field or a.dim != b.dim or a.mult != b.mult or a.unit != b.unit:
        return False
    if isinstance(a, HopfAlgebraData) != isinstance(b, HopfAlgebraData):
        return False
    if isinstance(a, HopfAlgebraData):
        return a.comult == b.comult and a.counit == b.counit and a.antipode == b.antipode
    return True


def require_same_hopf(a: AlgebraData, b: AlgebraData):
    if not same_algebra(a, b):
        raise HopfMismatchError(
            f"objects live over different algebras: {a.name!r} vs {b.name!r}"
        )


def require_hopf(algebra: AlgebraData) -> HopfAlgebraData:
    if not isinstance(algebra, HopfAlgebraData):
        raise TypeError(f"{algebra.name!r} carries no comultiplication")
    return algebra


class ModuleRep:
    """A left module: ``action[i]`` is the matrix of the i-th basis element."""

    def __init__(self, algebra: AlgebraData, dim: int, action: list[Matrix], name: str = ""):
        if len(action) != algebra.dim:
            raise ValueError("one action matrix per algebra basis element required")
        for m in action:
            if m.rows != dim or m.cols != dim:
                raise ValueError(f"action matrix is not {dim}x{dim}")
        self.algebra = algebra
        self.dim = dim
        self.action = action
        self.name = name

    @property
    def field(self):
        return self.algebra.field

    def __repr__(self):
        return f"<ModuleRep {self.name or '?'} dim={self.dim} over {self.algebra.name or '?'}>"

    def action_of_vector(self, v) -> Matrix:
        """Matrix of the algebra element with coordinates ``v``."""
        field = self.field
        out = Matrix.zeros(field, self.dim, self.dim)
        for i, coeff in enumerate(v):
            if coeff:
                out = out + self.action[i].scale(coeff)
        return out


def check_module_axioms(m: ModuleRep) -> AxiomReport:
    report = AxiomReport(m.name or "module")
    alg = m.algebra
    field = alg.field

    unit_matrix = m.action_of_vector(alg.unit)
    report.record("unit_acts_as_identity", None if unit_matrix.is_identity() else (0,))

    violation = None
    for i in range(alg.dim):
        for j in range(alg.dim):
            prod = m.action[i] * m.action[j]
            comb = Matrix.zeros(field, m.dim, m.dim)
            for t, c in enumerate(alg.mult[i][j]):
                if c:
                    comb = comb + m.action[t].scale(c)
            if prod != comb:
                violation = (i, j)
                break
        if violation:
            break
    report.record("action_multiplicative", violation)
    return report


def trivial_module(h: HopfAlgebraData) -> ModuleRep:
    """The base field with the counit action."""
    action = [Matrix(h.field, 1, 1, [[h.counit[i]]]) for i in range(h.dim)]
    return ModuleRep(h, 1, action, name="trivial")


def regular_module(algebra: AlgebraData) -> ModuleRep:
    """The algebra acting on itself by left multiplication."""
    return ModuleRep(algebra, algebra.dim, algebra.regular_action_matrices(), name="regular")


def tensor_modules(m: ModuleRep, n: ModuleRep, name: str = "") -> ModuleRep:
    """Diagonal action through the coproduct on the Kronecker-ordered basis."""
    require_same_hopf(m.algebra, n.algebra)
    h = require_hopf(m.algebra)
    field = h.field
    dim = m.dim * n.dim
    action = []
    for i in range(h.dim):
        acc = Matrix.zeros(field, dim, dim)
        for j in range(h.dim):
            row = h.comult[i][j]
            for t, c in enumerate(row):
                if c:
                    acc = acc + m.action[j].kron(n.action[t]).scale(c)
        action.append(acc)
    return ModuleRep(h, dim, action, name=name or f"({m.name})(x)({n.name})")


def dual_module(n: ModuleRep, name: str = "") -> ModuleRep:
    """Dual space action: transpose of the antipode-twisted action."""
    h = require_hopf(n.algebra)
    field = h.field
    action = []
    for i in range(h.dim):
        twisted = Matrix.zeros(field, n.dim, n.dim)
        for t in range(h.dim):
            c = h.antipode.entries[t][i]
            if c:
                twisted = twisted + n.action[t].scale(c)
        action.append(twisted.transpose())
    return ModuleRep(h, n.dim, action, name=name or f"({n.name})*")


def hom_space(m: ModuleRep, n: ModuleRep) -> list[Matrix]:
    """Canonical basis of the intertwiners g with g.A_i^M = A_i^N.g."""
    require_same_hopf(m.algebra, n.algebra)
    field = m.field
    zero = field.zero()
    nd, md = n.dim, m.dim
    rows = []
    for i in range(m.algebra.dim):
        am = m.action[i]
        an = n.action[i]
        for r in range(nd):
            for c in range(md):
                coeff = [zero] * (nd * md)
                for s in range(md):
                    x = am.entries[s][c]
                    if x:
                        coeff[r * md + s] = field.add(coeff[r * md + s], x)
                for s in range(nd):
                    x = an.entries[r][s]
                    if x:
                        coeff[s * md + c] = field.sub(coeff[s * md + c], x)
                rows.append(coeff)
    if nd * md == 0:
        return []
    system = Matrix(field, len(rows), nd * md, rows)
    return [Matrix.from_flat(field, nd, md, v.flatten()) for v in kernel_basis(system)]


def direct_sum_modules(m: ModuleRep, n: ModuleRep, name: str = "") -> ModuleRep:
    """Block-diagonal sum, used mainly by tests and fixtures."""
    require_same_hopf(m.algebra, n.algebra)
    field = m.field
    dim = m.dim + n.dim
    action = []
    for i in range(m.algebra.dim):
        block = Matrix.zeros(field, dim, dim).entries
        for r in range(m.dim):
            for c in range(m.dim):
                block[r][c] = m.action[i].entries[r][c]
        for r in range(n.dim):
            for c in range(n.dim):
                block[m.dim + r][m.dim + c] = n.action[i].entries[r][c]
        action.append(Matrix(field, dim, dim, block))
    return ModuleRep(m.algebra, dim, action, name=name or f"({m.name})+({n.name})")
