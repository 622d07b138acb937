from fractions import Fraction

import pytest

from hopfcheck.catalog import lookup
from hopfcheck.errors import HopfMismatchError
from hopfcheck.fields import QQ
from hopfcheck.matrix import Matrix
from hopfcheck.modules import (
    ModuleRep,
    check_module_axioms,
    dual_module,
    hom_space,
    tensor_modules,
    trivial_module,
)

SWAP = [[0, 1], [1, 0]]


def test_trivial_module_values_group_algebra():
    triv = lookup("kC2/Q/trivial").payload
    assert all(a.entries == [[Fraction(1)]] for a in triv.action)


def test_trivial_module_values_sweedler():
    triv = lookup("H4/Q/trivial").payload
    # basis order 1, g, x, gx
    assert [a.entries[0][0] for a in triv.action] == [1, 1, 0, 0]


def test_trivial_module_axioms_over_every_hopf():
    for hid in ("kC3/F3", "kdS3/F5", "H4/F5"):
        assert check_module_axioms(trivial_module(lookup(hid).payload)).ok


def test_regular_module_axioms():
    assert check_module_axioms(lookup("kC2/Q/regular").payload).ok


def test_corrupted_action_reports_violating_pair():
    reg = lookup("kC2/Q/regular").payload
    bad_action = [Matrix(QQ, 2, 2, [row[:] for row in a.entries]) for a in reg.action]
    bad_action[1].entries[0][0] = Fraction(5)
    bad = ModuleRep(reg.algebra, 2, bad_action, name="bad")
    report = check_module_axioms(bad)
    assert not report.ok
    failing = [c for c in report.checks if not c.passed]
    assert failing and failing[0].first_violation is not None


def test_tensor_with_trivial_is_identity_on_actions():
    for mid in ("kC2/Q/regular", "kS3/F2/perm", "H4/Q/h4mod2"):
        m = lookup(mid).payload
        triv = trivial_module(m.algebra)
        left = tensor_modules(triv, m)
        for got, want in zip(left.action, m.action):
            assert got == want, mid


def test_tensor_regular_regular_c2_group_like_acts_by_swap_kron_swap():
    reg = lookup("kC2/Q/regular").payload
    square = tensor_modules(reg, reg)
    p = Matrix.from_rows(QQ, [[Fraction(x) for x in row] for row in SWAP])
    assert square.action[1] == p.kron(p)
    assert square.dim == 4


def test_tensor_axioms_for_catalog_pairs():
    pairs = [
        ("kC2/F2/regular", "kC2/F2/unipotent2"),
        ("kS3/Q/perm", "kS3/Q/sign"),
        ("kS3/F3/std2", "kS3/F3/regular"),
        ("H4/F5/regular", "H4/F5/h4mod2"),
    ]
    for a, b in pairs:
        t = tensor_modules(lookup(a).payload, lookup(b).payload)
        assert check_module_axioms(t).ok, (a, b)


def test_tensor_respects_dimensions():
    perm = lookup("kS3/Q/perm").payload
    std = lookup("kS3/Q/std2").payload
    assert tensor_modules(perm, std).dim == 6


def test_tensor_rejects_mismatched_hopfs():
    with pytest.raises(HopfMismatchError):
        tensor_modules(lookup("kC2/Q/regular").payload, lookup("kC3/Q/trivial").payload)


def test_tensor_associativity_is_exact_equality():
    triples = [
        ("kC2/Q/regular", "kC2/Q/regular", "kC2/Q/trivial"),
        ("kS3/F2/perm", "kS3/F2/sign", "kS3/F2/std2"),
    ]
    for a, b, c in triples:
        ma, mb, mc = (lookup(x).payload for x in (a, b, c))
        left = tensor_modules(tensor_modules(ma, mb), mc)
        right = tensor_modules(ma, tensor_modules(mb, mc))
        assert left.action == right.action, (a, b, c)


def test_dual_of_trivial_is_trivial():
    for hid in ("kC2/Q", "kS3/F3", "H4/Q"):
        triv = trivial_module(lookup(hid).payload)
        assert dual_module(triv).action == triv.action, hid


def test_dual_of_regular_c2():
    reg = lookup("kC2/Q/regular").payload
    dual = dual_module(reg)
    # S(g) = g and the swap matrix is symmetric, so the action is unchanged
    assert dual.action[1] == reg.action[1]
    assert check_module_axioms(dual).ok


def test_dual_module_satisfies_axioms_even_for_sweedler():
    for mid in ("H4/Q/regular", "H4/Q/h4mod2", "H4/F5/regular", "kS3/F2/perm"):
        assert check_module_axioms(dual_module(lookup(mid).payload)).ok, mid


def test_double_dual_is_identity_for_involutory():
    for mid in ("kC2/Q/regular", "kS3/F3/perm", "kS3/F5/std2", "kdC3/F2/regular"):
        m = lookup(mid).payload
        assert dual_module(dual_module(m)).action == m.action, mid


def test_hom_trivial_to_trivial_is_one_dimensional():
    triv = lookup("kC2/Q/trivial").payload
    assert len(hom_space(triv, triv)) == 1


def test_hom_regular_to_trivial_is_augmentation():
    reg = lookup("kC2/Q/regular").payload
    triv = lookup("kC2/Q/trivial").payload
    basis = hom_space(reg, triv)
    assert len(basis) == 1
    assert basis[0].entries == [[Fraction(1), Fraction(1)]]


def test_hom_sign_to_trivial_is_zero():
    sign = lookup("kS3/Q/sign").payload
    triv = lookup("kS3/Q/trivial").payload
    assert hom_space(sign, triv) == []


def test_hom_intertwines():
    perm = lookup("kS3/Q/perm").payload
    std = lookup("kS3/Q/std2").payload
    for g in hom_space(perm, std):
        for i in range(perm.algebra.dim):
            assert g * perm.action[i] == std.action[i] * g


def test_zero_dimensional_module_through_the_operations():
    h = lookup("kC2/Q").payload
    zero_mod = ModuleRep(h, 0, [Matrix.zeros(QQ, 0, 0) for _ in range(h.dim)], name="zero")
    assert check_module_axioms(zero_mod).ok
    reg = lookup("kC2/Q/regular").payload
    t = tensor_modules(zero_mod, reg)
    assert t.dim == 0 and check_module_axioms(t).ok
    assert dual_module(zero_mod).dim == 0
    assert hom_space(reg, zero_mod) == []
