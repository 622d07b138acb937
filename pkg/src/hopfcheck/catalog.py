"""Built-in structure-constant data: Hopf algebras, modules, comodules and
Yetter-Drinfel'd modules, plus the negative fixtures the test campaign needs.

All structure constants are stored as integer literals and specialized to
each base field at load time, so one table serves every characteristic.
Every entry is run through its axiom checker when the catalog is built;
entries tagged with ``expected_failure`` must fail exactly that check.

Identifiers follow <hopf>/<field>[/<object>], e.g. "kS3/F3/regular".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .comodules import ComoduleRep, check_comodule_axioms
from .fields import GF, QQ, Field
from .hopf import HopfAlgebraData
from .matrix import Matrix
from .modules import ModuleRep, check_module_axioms, regular_module, trivial_module
from .yd import YDModuleRep, check_yd_compat, trivial_yd

HOPF_FIELDS = ("Q", "F2", "F3", "F5", "F7")
SWEEDLER_FIELDS = ("Q", "F5")  # needs -1 != 1

_FIELDS: dict[str, Field] = {
    "Q": QQ,
    "F2": GF(2),
    "F3": GF(3),
    "F5": GF(5),
    "F7": GF(7),
}


@dataclass
class CatalogEntry:
    id: str
    kind: str  # "hopf" | "module" | "comodule" | "yd"
    payload: object
    provenance_note: str
    expected_failure: str | None = None


# group data -------------------------------------------------------------------


def _cyclic_group(n: int):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    inverses = [(-i) % n for i in range(n)]
    return table, inverses


def _symmetric_group_3():
    """S3 as permutations of {0,1,2}; identity first, composition (p*q)(x) = p(q(x))."""
    elements = sorted(permutations(range(3)), key=lambda p: (sum(p[i] != i for i in range(3)), p))
    index = {p: i for i, p in enumerate(elements)}
    table = []
    for p in elements:
        row = []
        for q in elements:
            composed = tuple(p[q[x]] for x in range(3))
            row.append(index[composed])
        table.append(row)
    inverses = []
    for p in elements:
        inv = tuple(sorted(range(3), key=lambda x: p[x]))
        inverses.append(index[inv])
    return elements, table, inverses


_S3_ELEMENTS, _S3_TABLE, _S3_INVERSES = _symmetric_group_3()
_S3_TRANSPOSITIONS = [i for i, p in enumerate(_S3_ELEMENTS) if sum(p[x] != x for x in range(3)) == 2]
_S3_SIGNS = [-1 if sum(p[x] != x for x in range(3)) == 2 else 1 for p in _S3_ELEMENTS]
# a 3-cycle moves all three points
_S3_THREE_CYCLE = next(i for i, p in enumerate(_S3_ELEMENTS) if sum(p[x] != x for x in range(3)) == 3)

_GROUPS = {
    "C2": _cyclic_group(2),
    "C3": _cyclic_group(3),
    "C4": _cyclic_group(4),
    "S3": (_S3_TABLE, _S3_INVERSES),
}
_GROUP_ORDER = ("C2", "C3", "C4", "S3")


# Hopf algebra builders ----------------------------------------------------------


def _specialize_tensor(field: Field, tensor):
    return [[[field.from_int(x) for x in row] for row in slab] for slab in tensor]


def _specialize_matrix(field: Field, rows):
    return Matrix(field, len(rows), len(rows[0]) if rows else 0, [[field.from_int(x) for x in r] for r in rows])


def group_algebra(field: Field, group: str, name: str) -> HopfAlgebraData:
    table, inverses = _GROUPS[group]
    n = len(table)
    mult = [[[1 if table[i][j] == t else 0 for t in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[1 if (j == i and t == i) else 0 for t in range(n)] for j in range(n)] for i in range(n)]
    unit = [1 if i == 0 else 0 for i in range(n)]
    counit = [1] * n
    antipode = [[1 if r == inverses[c] else 0 for c in range(n)] for r in range(n)]
    return HopfAlgebraData(
        field,
        n,
        _specialize_tensor(field, mult),
        [field.from_int(x) for x in unit],
        _specialize_tensor(field, comult),
        [field.from_int(x) for x in counit],
        _specialize_matrix(field, antipode),
        name=name,
    )


def dual_group_algebra(field: Field, group: str, name: str) -> HopfAlgebraData:
    """Functions on the group: pointwise product, coproduct dual to multiplication."""
    table, inverses = _GROUPS[group]
    n = len(table)
    mult = [[[1 if (i == j and t == i) else 0 for t in range(n)] for j in range(n)] for i in range(n)]
    unit = [1] * n
    comult = [[[1 if table[j][t] == i else 0 for t in range(n)] for j in range(n)] for i in range(n)]
    counit = [1 if i == 0 else 0 for i in range(n)]
    antipode = [[1 if inverses[c] == r else 0 for c in range(n)] for r in range(n)]
    return HopfAlgebraData(
        field,
        n,
        _specialize_tensor(field, mult),
        [field.from_int(x) for x in unit],
        _specialize_tensor(field, comult),
        [field.from_int(x) for x in counit],
        _specialize_matrix(field, antipode),
        name=name,
    )


def sweedler_algebra(field: Field, name: str) -> HopfAlgebraData:
    """The four-dimensional algebra on 1, g, x, gx with g^2 = 1, x^2 = 0,
    xg = -gx; the antipode has order four."""
    # basis indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    n = 4
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]

    def set_product(i, j, coeffs):
        for t, c in coeffs:
            mult[i][j][t] = c

    set_product(0, 0, [(0, 1)])
    set_product(0, 1, [(1, 1)])
    set_product(0, 2, [(2, 1)])
    set_product(0, 3, [(3, 1)])
    set_product(1, 0, [(1, 1)])
    set_product(1, 1, [(0, 1)])
    set_product(1, 2, [(3, 1)])  # g*x = gx
    set_product(1, 3, [(2, 1)])  # g*gx = x
    set_product(2, 0, [(2, 1)])
    set_product(2, 1, [(3, -1)])  # x*g = -gx
    set_product(2, 2, [])
    set_product(2, 3, [])  # x*gx = -gx*x = 0
    set_product(3, 0, [(3, 1)])
    set_product(3, 1, [(2, -1)])  # gx*g = -x
    set_product(3, 2, [])
    set_product(3, 3, [])

    comult = [[[0] * n for _ in range(n)] for _ in range(n)]
    comult[0][0][0] = 1  # 1 -> 1 (x) 1
    comult[1][1][1] = 1  # g -> g (x) g
    comult[2][2][0] = 1  # x -> x (x) 1 + g (x) x
    comult[2][1][2] = 1
    comult[3][3][1] = 1  # gx -> gx (x) g + 1 (x) gx
    comult[3][0][3] = 1

    unit = [1, 0, 0, 0]
    counit = [1, 1, 0, 0]
    antipode = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],  # S(x) = -gx, S(gx) = x
        [0, 0, -1, 0],
    ]
    return HopfAlgebraData(
        field,
        n,
        _specialize_tensor(field, mult),
        [field.from_int(x) for x in unit],
        _specialize_tensor(field, comult),
        [field.from_int(x) for x in counit],
        _specialize_matrix(field, antipode),
        name=name,
    )


# module builders ---------------------------------------------------------------


def _module_from_int_matrices(h: HopfAlgebraData, mats, name: str) -> ModuleRep:
    dim = len(mats[0]) if mats and mats[0] else 0
    action = [_specialize_matrix(h.field, m) for m in mats]
    return ModuleRep(h, dim, action, name=name)


def s3_permutation_module(h: HopfAlgebraData) -> ModuleRep:
    mats = []
    for p in _S3_ELEMENTS:
        m = [[0] * 3 for _ in range(3)]
        for c in range(3):
            m[p[c]][c] = 1
        mats.append(m)
    return _module_from_int_matrices(h, mats, "perm")


def s3_sign_module(h: HopfAlgebraData) -> ModuleRep:
    return _module_from_int_matrices(h, [[[s]] for s in _S3_SIGNS], "sign")


def s3_standard_module(h: HopfAlgebraData) -> ModuleRep:
    """Two-dimensional simple factor of the permutation module, on the basis
    e0-e1, e1-e2; entries are 0, +/-1 so the same table works over every field."""
    mats = []
    for p in _S3_ELEMENTS:
        cols = []
        for (i, j) in ((0, 1), (1, 2)):
            a, b = p[i], p[j]
            # express e_a - e_b in the basis v1 = e0-e1, v2 = e1-e2
            diff = {(0, 1): (1, 0), (1, 2): (0, 1), (0, 2): (1, 1)}
            if (a, b) in diff:
                cols.append(diff[(a, b)])
            else:
                x, y = diff[(b, a)]
                cols.append((-x, -y))
        mats.append([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
    return _module_from_int_matrices(h, mats, "std2")


ROT2_MATRICES = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, -1)),
    ((-1, 1), (-1, 0)),
)


def cyclic_rotation_module(h: HopfAlgebraData) -> ModuleRep:
    """Order-three rotation plane: the generator acts by the companion matrix
    of the quadratic x^2 + x + 1.  Simple over Q, F2 and F5, a split pair of
    lines over F7, and a non-semisimple Jordan block in characteristic 3."""
    return _module_from_int_matrices(h, [list(map(list, m)) for m in ROT2_MATRICES], "rot2")


def cyclic_unipotent_module(h: HopfAlgebraData, order: int) -> ModuleRep:
    """Indecomposable 2-dimensional module for a cyclic group in its own
    characteristic: the generator acts by a unipotent Jordan block."""
    mats = []
    block = [[1, 1], [0, 1]]
    power = [[1, 0], [0, 1]]
    for _ in range(order):
        mats.append([row[:] for row in power])
        power = [
            [
                sum(power[r][k] * block[k][c] for k in range(2))
                for c in range(2)
            ]
            for r in range(2)
        ]
    return _module_from_int_matrices(h, mats, "unipotent2")


def sweedler_two_dim_module(h: HopfAlgebraData) -> ModuleRep:
    """Non-semisimple 2-dimensional module: g acts by diag(1,-1), x lowers."""
    mats = [
        [[1, 0], [0, 1]],  # 1
        [[1, 0], [0, -1]],  # g
        [[0, 0], [1, 0]],  # x
        [[0, 0], [-1, 0]],  # gx = g*x
    ]
    return _module_from_int_matrices(h, mats, "h4mod2")


# comodule builders ---------------------------------------------------------------


def group_line_comodule(h: HopfAlgebraData, degree: int, name: str) -> ComoduleRep:
    """One-dimensional comodule over a group algebra: a line of fixed degree."""
    coaction = [[[h.field.from_int(1 if t == degree else 0) for t in range(h.dim)]]]
    return ComoduleRep(h, 1, coaction, name=name)


def comodule_from_group_action(h: HopfAlgebraData, mats, name: str) -> ComoduleRep:
    """Comodule over a dual group algebra from matrices indexed by the group:
    the H-leg over the t-th basis function carries the action of g_t."""
    dim = len(mats[0])
    field = h.field
    coaction = [
        [[field.from_int(mats[t][b][a]) for t in range(h.dim)] for b in range(dim)]
        for a in range(dim)
    ]
    return ComoduleRep(h, dim, coaction, name=name)


# YD builders ---------------------------------------------------------------------


def yd_group_line(h: HopfAlgebraData, degree: int, character, name: str) -> YDModuleRep:
    """A line of fixed degree with the group acting by a +/-1 character."""
    action = [Matrix(h.field, 1, 1, [[h.field.from_int(character[i])]]) for i in range(h.dim)]
    module = ModuleRep(h, 1, action, name=name)
    comodule = ComoduleRep(
        h, 1, [[[h.field.from_int(1 if t == degree else 0) for t in range(h.dim)]]], name=name
    )
    return YDModuleRep(module, comodule, name=name)


def yd_s3_conjugation(h: HopfAlgebraData) -> YDModuleRep:
    """Span of the transpositions, graded by themselves, with the group acting
    by conjugation; the grading is conjugation-equivariant by construction."""
    field = h.field
    trans = _S3_TRANSPOSITIONS
    pos = {t: a for a, t in enumerate(trans)}
    dim = len(trans)
    mats = []
    for i in range(h.dim):
        m = [[0] * dim for _ in range(dim)]
        for a, t in enumerate(trans):
            conj = _S3_TABLE[_S3_TABLE[i][t]][_S3_INVERSES[i]]
            m[pos[conj]][a] = 1
        mats.append(_specialize_matrix(field, m))
    module = ModuleRep(h, dim, mats, name="ydconj3")
    coaction = [
        [[field.from_int(1 if (b == a and t == trans[a]) else 0) for t in range(h.dim)] for b in range(dim)]
        for a in range(dim)
    ]
    comodule = ComoduleRep(h, dim, coaction, name="ydconj3")
    return YDModuleRep(module, comodule, name="ydconj3")


def yd_unipotent_nonsplit(h: HopfAlgebraData) -> YDModuleRep:
    """Unipotent module with the trivial grading: a valid YD object whose
    only proper subobject has no stable complement in characteristic 2."""
    module = cyclic_unipotent_module(h, 2)
    module.name = "ydnonsplit2"
    field = h.field
    coaction = [
        [[field.mul(field.one() if a == b else field.zero(), h.unit[t]) for t in range(h.dim)] for b in range(2)]
        for a in range(2)
    ]
    comodule = ComoduleRep(h, 2, coaction, name="ydnonsplit2")
    return YDModuleRep(module, comodule, name="ydnonsplit2")


def yd_incompatible_line(h: HopfAlgebraData) -> YDModuleRep:
    """Deliberately broken: a line graded by a transposition with the trivial
    action; the grading is not conjugation-equivariant."""
    degree = _S3_TRANSPOSITIONS[0]
    return yd_group_line(h, degree, [1] * h.dim, "ydbadline")


# catalog assembly -----------------------------------------------------------------


def _register(entries, entry: CatalogEntry):
    entries[entry.id] = entry


def _check_entry(entry: CatalogEntry):
    if entry.kind == "hopf":
        report = entry.payload.check_hopf_axioms()
    elif entry.kind == "module":
        report = check_module_axioms(entry.payload)
    elif entry.kind == "comodule":
        report = check_comodule_axioms(entry.payload)
    elif entry.kind == "yd":
        report = check_yd_compat(entry.payload)
    else:
        raise ValueError(f"unknown catalog kind {entry.kind!r}")
    if entry.expected_failure is None:
        if not report.ok:
            raise AssertionError(f"catalog entry {entry.id} failed its axiom check:\n{report.describe()}")
    else:
        failed = {c.name for c in report.failures()}
        if entry.expected_failure not in failed:
            raise AssertionError(
                f"negative fixture {entry.id} was expected to fail {entry.expected_failure!r}, "
                f"but failed {sorted(failed)!r}"
            )


@lru_cache(maxsize=1)
def _catalog() -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}

    for group in _GROUP_ORDER:
        for field_name in HOPF_FIELDS:
            field = _FIELDS[field_name]
            hid = f"k{group}/{field_name}"
            h = group_algebra(field, group, hid)
            _register(entries, CatalogEntry(hid, "hopf", h, f"group algebra of {group}: basis the group, diagonal coproduct, inverse antipode"))
            _register(entries, CatalogEntry(f"{hid}/trivial", "module", trivial_module(h), "counit action on one dimension"))
            _register(entries, CatalogEntry(f"{hid}/regular", "module", regular_module(h), f"left multiplication table of {group}"))
            _register(entries, CatalogEntry(f"{hid}/cotrivial", "comodule", _cotrivial(h), "coaction by the unit on one dimension"))
            _register(entries, CatalogEntry(f"{hid}/coregular", "comodule", _coregular(h), "the coproduct read as a coaction"))
            _register(entries, CatalogEntry(f"{hid}/ydtrivial", "yd", trivial_yd(h), "trivial action and trivial grading"))
            if group != "S3":
                _register(entries, CatalogEntry(
                    f"{hid}/coline_g", "comodule", group_line_comodule(h, 1, "coline_g"),
                    "line graded by the generator"))
            if group == "C2":
                _register(entries, CatalogEntry(f"{hid}/ydline_g_triv", "yd", yd_group_line(h, 1, [1, 1], "ydline_g_triv"), "degree g, trivial action; abelian so compatible"))
                _register(entries, CatalogEntry(f"{hid}/ydline_g_sign", "yd", yd_group_line(h, 1, [1, -1], "ydline_g_sign"), "degree g, sign action"))
                _register(entries, CatalogEntry(f"{hid}/ydline_e_sign", "yd", yd_group_line(h, 0, [1, -1], "ydline_e_sign"), "degree e, sign action"))
            if group == "C3":
                _register(entries, CatalogEntry(f"{hid}/rot2", "module", cyclic_rotation_module(h), "generator acts by the companion matrix of x^2+x+1"))
                _register(entries, CatalogEntry(f"{hid}/ydline_g_triv", "yd", yd_group_line(h, 1, [1, 1, 1], "ydline_g_triv"), "degree g, trivial action"))
            if group == "C4":
                _register(entries, CatalogEntry(f"{hid}/ydline_g_triv", "yd", yd_group_line(h, 1, [1, 1, 1, 1], "ydline_g_triv"), "degree g, trivial action"))
                _register(entries, CatalogEntry(f"{hid}/ydline_g_chi2", "yd", yd_group_line(h, 1, [1, -1, 1, -1], "ydline_g_chi2"), "degree g, order-two character"))
            if group == "S3":
                _register(entries, CatalogEntry(f"{hid}/perm", "module", s3_permutation_module(h), "permutation matrices on three points"))
                _register(entries, CatalogEntry(f"{hid}/sign", "module", s3_sign_module(h), "sign character"))
                _register(entries, CatalogEntry(f"{hid}/std2", "module", s3_standard_module(h), "sum-zero plane of the permutation module, integral basis"))
                _register(entries, CatalogEntry(
                    f"{hid}/coline_t", "comodule",
                    group_line_comodule(h, _S3_TRANSPOSITIONS[0], "coline_t"),
                    "line graded by a transposition"))
                _register(entries, CatalogEntry(
                    f"{hid}/coline_c", "comodule",
                    group_line_comodule(h, _S3_THREE_CYCLE, "coline_c"),
                    "line graded by a three-cycle"))
                _register(entries, CatalogEntry(f"{hid}/ydline_e_sign", "yd", yd_group_line(h, 0, _S3_SIGNS, "ydline_e_sign"), "degree e, sign action; central degree"))
                _register(entries, CatalogEntry(f"{hid}/ydconj3", "yd", yd_s3_conjugation(h), "transposition class graded by itself with conjugation action"))
            if group == "C2" and field_name == "F2":
                _register(entries, CatalogEntry(f"{hid}/unipotent2", "module", cyclic_unipotent_module(h, 2), "Jordan block for the generator, char 2"))
                _register(entries, CatalogEntry(f"{hid}/ydnonsplit2", "yd", yd_unipotent_nonsplit(h), "unipotent module, trivial grading; no stable complement"))
            if group == "C3" and field_name == "F3":
                _register(entries, CatalogEntry(f"{hid}/unipotent2", "module", cyclic_unipotent_module(h, 3), "Jordan block for the generator, char 3"))
            if group == "S3" and field_name == "Q":
                _register(entries, CatalogEntry(
                    f"{hid}/ydbadline", "yd", yd_incompatible_line(h),
                    "line graded by a transposition with trivial action; grading not conjugation-equivariant",
                    expected_failure="yd_compatibility"))

    for group in ("C2", "C3", "S3"):
        for field_name in HOPF_FIELDS:
            field = _FIELDS[field_name]
            hid = f"kd{group}/{field_name}"
            h = dual_group_algebra(field, group, hid)
            _register(entries, CatalogEntry(hid, "hopf", h, f"functions on {group}: pointwise product, coproduct dual to the group law"))
            _register(entries, CatalogEntry(f"{hid}/trivial", "module", trivial_module(h), "counit action: evaluation at the identity"))
            _register(entries, CatalogEntry(f"{hid}/regular", "module", regular_module(h), "pointwise multiplication on itself"))
            _register(entries, CatalogEntry(f"{hid}/cotrivial", "comodule", _cotrivial(h), "coaction by the constant function 1"))
            _register(entries, CatalogEntry(f"{hid}/coregular", "comodule", _coregular(h), "the coproduct read as a coaction"))
            _register(entries, CatalogEntry(f"{hid}/ydtrivial", "yd", trivial_yd(h), "trivial action and trivial coaction"))
            if group == "C2" and field_name == "F2":
                mats = [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]
                _register(entries, CatalogEntry(
                    f"{hid}/cononsplit2", "comodule",
                    comodule_from_group_action(h, mats, "cononsplit2"),
                    "unipotent two-dimensional representation of C2 in char 2, written as a coaction"))
            if group == "C3":
                _register(entries, CatalogEntry(
                    f"{hid}/corot2", "comodule",
                    comodule_from_group_action(h, [list(map(list, m)) for m in ROT2_MATRICES], "corot2"),
                    "order-three rotation plane written as a coaction; loses cosemisimplicity in char 3"))

    for field_name in SWEEDLER_FIELDS:
        field = _FIELDS[field_name]
        hid = f"H4/{field_name}"
        h = sweedler_algebra(field, hid)
        _register(entries, CatalogEntry(hid, "hopf", h, "four-dimensional algebra on 1, g, x, gx with antipode of order four"))
        _register(entries, CatalogEntry(f"{hid}/trivial", "module", trivial_module(h), "counit action"))
        _register(entries, CatalogEntry(f"{hid}/regular", "module", regular_module(h), "left multiplication table"))
        _register(entries, CatalogEntry(f"{hid}/h4mod2", "module", sweedler_two_dim_module(h), "g diagonal, x a lowering operator; contains a line without complement"))
        _register(entries, CatalogEntry(f"{hid}/cotrivial", "comodule", _cotrivial(h), "coaction by the unit"))
        _register(entries, CatalogEntry(f"{hid}/coregular", "comodule", _coregular(h), "the coproduct read as a coaction"))
        _register(entries, CatalogEntry(f"{hid}/ydtrivial", "yd", trivial_yd(h), "trivial action and coaction"))

    for entry in entries.values():
        _check_entry(entry)
    return entries


def _cotrivial(h: HopfAlgebraData) -> ComoduleRep:
    from .comodules import trivial_comodule

    return trivial_comodule(h)


def _coregular(h: HopfAlgebraData) -> ComoduleRep:
    from .comodules import regular_comodule

    return regular_comodule(h)


def catalog_entries() -> list[CatalogEntry]:
    """Every entry, ordered by id."""
    cat = _catalog()
    return [cat[eid] for eid in sorted(cat)]


def lookup(entry_id: str) -> CatalogEntry:
    cat = _catalog()
    if entry_id not in cat:
        raise KeyError(f"no catalog entry {entry_id!r}")
    return cat[entry_id]


def hopf_entries(fields: tuple[str, ...] | None = None) -> list[CatalogEntry]:
    selected = []
    for entry in catalog_entries():
        if entry.kind != "hopf":
            continue
        if fields is not None and entry.id.split("/")[1] not in fields:
            continue
        selected.append(entry)
    return selected


def objects_over(hopf_id: str, kind: str) -> list[CatalogEntry]:
    """Catalog objects of one kind over a given Hopf entry, ordered by id."""
    prefix = hopf_id + "/"
    return [
        e
        for e in catalog_entries()
        if e.kind == kind and e.id.startswith(prefix)
    ]
