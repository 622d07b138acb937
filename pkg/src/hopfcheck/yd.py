"""Yetter-Drinfel'd modules: a module and a comodule on the same space, tied
together by the left-right compatibility law

    h_(1) m_<0>  (x)  h_(2) m_<1>   =   (h_(2) m)_<0>  (x)  (h_(2) m)_<1> h_(1)

evaluated as an exact tensor identity for every pair (algebra basis element,
space basis vector).  The convention is hard-coded; there are no switches.
"""

from __future__ import annotations

from .comodules import (
    ComoduleRep,
    check_comodule_axioms,
    dual_comodule,
    tensor_comodules,
    trivial_comodule,
)
from .hopf import AxiomReport, HopfAlgebraData
from .matrix import Matrix, kernel_basis
from .modules import (
    ModuleRep,
    check_module_axioms,
    dual_module,
    require_same_hopf,
    tensor_modules,
    trivial_module,
)


class YDModuleRep:
    def __init__(self, module: ModuleRep, comodule: ComoduleRep, name: str = ""):
        require_same_hopf(module.algebra, comodule.hopf)
        if module.dim != comodule.dim:
            raise ValueError("module and comodule parts must share a basis")
        self.module = module
        self.comodule = comodule
        self.name = name

    @property
    def hopf(self) -> HopfAlgebraData:
        return self.comodule.hopf

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def field(self):
        return self.module.field

    def __repr__(self):
        return f"<YDModuleRep {self.name or '?'} dim={self.dim} over {self.hopf.name or '?'}>"


def check_yd_compat(y: YDModuleRep) -> AxiomReport:
    """Module and comodule axioms plus the compatibility identity."""
    report = AxiomReport(y.name or "yd")
    for check in check_module_axioms(y.module).checks:
        report.checks.append(check)
    for check in check_comodule_axioms(y.comodule).checks:
        report.checks.append(check)

    h = y.hopf
    field = h.field
    n = h.dim
    dim = y.dim
    coact = y.comodule.coaction
    act = y.module.action
    mult = h.mult
    violation = None
    for i in range(n):
        comult_terms = [
            (j, t, h.comult[i][j][t])
            for j in range(n)
            for t in range(n)
            if h.comult[i][j][t]
        ]
        for a in range(dim):
            zero = field.zero()
            lhs = [[zero] * n for _ in range(dim)]
            rhs = [[zero] * n for _ in range(dim)]
            for j, t, d in comult_terms:
                # left side: act by the first leg on the e-leg of the
                # coaction, multiply the second leg onto the H-leg
                for b in range(dim):
                    for s in range(n):
                        x = coact[a][b][s]
                        if not x:
                            continue
                        dx = field.mul(d, x)
                        for r in range(dim):
                            aa = act[j].entries[r][b]
                            if not aa:
                                continue
                            dxa = field.mul(dx, aa)
                            for u, c in enumerate(mult[t][s]):
                                if c:
                                    lhs[r][u] = field.add(lhs[r][u], field.mul(dxa, c))
                # right side: act by the second leg first, coact, then
                # multiply the first leg from the right
                for b in range(dim):
                    ab = act[t].entries[b][a]
                    if not ab:
                        continue
                    dab = field.mul(d, ab)
                    for r in range(dim):
                        for s in range(n):
                            x = coact[b][r][s]
                            if not x:
                                continue
                            dabx = field.mul(dab, x)
                            for u, c in enumerate(mult[s][j]):
                                if c:
                                    rhs[r][u] = field.add(rhs[r][u], field.mul(dabx, c))
            if lhs != rhs:
                violation = (i, a)
                break
        if violation:
            break
    report.record("yd_compatibility", violation)
    return report


def trivial_yd(h: HopfAlgebraData) -> YDModuleRep:
    return YDModuleRep(trivial_module(h), trivial_comodule(h), name="ydtrivial")


def tensor_yd(y1: YDModuleRep, y2: YDModuleRep, name: str = "") -> YDModuleRep:
    label = name or f"({y1.name})(x)({y2.name})"
    return YDModuleRep(
        tensor_modules(y1.module, y2.module, name=label),
        tensor_comodules(y1.comodule, y2.comodule, name=label),
        name=label,
    )


def dual_yd(y: YDModuleRep, name: str = "") -> YDModuleRep:
    label = name or f"({y.name})*"
    return YDModuleRep(
        dual_module(y.module, name=label),
        dual_comodule(y.comodule, name=label),
        name=label,
    )


def yd_hom_space(y1: YDModuleRep, y2: YDModuleRep) -> list[Matrix]:
    """Maps that intertwine the actions and the coactions, as one stacked system."""
    require_same_hopf(y1.hopf, y2.hopf)
    field = y1.field
    zero = field.zero()
    nd, md = y2.dim, y1.dim
    if nd * md == 0:
        return []
    rows = []
    for i in range(y1.hopf.dim):
        am = y1.module.action[i]
        an = y2.module.action[i]
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
    for a in range(md):
        for c in range(nd):
            for t in range(y1.hopf.dim):
                coeff = [zero] * (nd * md)
                for b in range(nd):
                    x = y2.comodule.coaction[b][c][t]
                    if x:
                        coeff[b * md + a] = field.add(coeff[b * md + a], x)
                for b2 in range(md):
                    x = y1.comodule.coaction[a][b2][t]
                    if x:
                        coeff[c * md + b2] = field.sub(coeff[c * md + b2], x)
                rows.append(coeff)
    system = Matrix(field, len(rows), nd * md, rows)
    return [Matrix.from_flat(field, nd, md, v.flatten()) for v in kernel_basis(system)]
