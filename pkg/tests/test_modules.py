"""Finitely presented modules over a PID: ranks, orders, submodule calculus.

Finite Z-module claims are cross-checked against the exhaustive oracle
tables; that is the contract the fancier rings inherit through SNF.
"""

import random

import pytest

from stabkit.linalg import Mat
from stabkit.modules import (
    ModuleMap,
    PresentedModule,
    Submodule,
    direct_sum,
    map_cokernel,
    map_image,
    map_kernel,
    modules_isomorphic,
    quotient_of_submodules,
    submodule_intersection,
    submodule_presentation,
)
from stabkit.oracles import FiniteModuleTable, brute_submodule_ops
from stabkit.rings import INTEGERS, LAURENT


def z_module(*factors):
    n = len(factors)
    return PresentedModule(
        INTEGERS.tag,
        n,
        Mat([[factors[i] if i == j else 0 for j in range(n)] for i in range(n)], n),
    )


def test_generating_rank_counts_nonunit_factors():
    assert z_module().generating_rank == 0
    assert z_module(1, 1).generating_rank == 0
    assert z_module(1, 6).generating_rank == 1
    assert z_module(2, 3).generating_rank == 1  # coprime: Z/2 + Z/3 is cyclic
    assert z_module(3, 3).generating_rank == 2


def test_gr_of_crt_pair_is_one_after_snf():
    # relations diag(2,3) on crossed generators: cyclic of order 6
    m = PresentedModule(INTEGERS.tag, 2, Mat([[2, 1], [0, 3]], 2))
    assert m.generating_rank == 1
    assert m.order() == 6


def test_free_rank_and_order_zero():
    m = PresentedModule(INTEGERS.tag, 2, Mat([[2, 0], [0, 0]], 2))
    assert m.free_rank == 1
    assert m.order() == 0


def test_order_of_finite_module():
    assert z_module(9).order() == 9
    assert z_module(3, 3).order() == 9
    assert z_module().order() == 1


def test_iso_invariants_and_isomorphism():
    assert modules_isomorphic(z_module(2, 12), z_module(12, 2))
    assert not modules_isomorphic(z_module(4), z_module(2, 2))
    assert z_module(2, 12).iso_invariants() == (0, (2, 12))


def test_direct_sum_block_structure():
    s = direct_sum(z_module(2), z_module(3))
    assert s.ngens == 2
    assert s.order() == 6


def test_submodule_membership_and_span_equality():
    m = z_module(9)
    three = m.submodule_from_int_columns([(3,)])
    six = m.submodule_from_int_columns([(6,)])
    assert three.spans_equal(six)
    assert three.contains(m.submodule_from_int_columns([(6,)]))
    assert not three.contains(m.full_submodule())
    assert m.zero_submodule().is_zero()
    assert not three.is_zero()


def test_submodule_presentation_and_order():
    m = z_module(9)
    three = m.submodule_from_int_columns([(3,)])
    pres = submodule_presentation(three)
    assert pres.torsion_invariants == (3,)
    assert three.order() == 3


def test_intersection_and_sum_against_oracle():
    rng = random.Random(7)
    for _ in range(40):
        factors = tuple(sorted(rng.choice((2, 3, 4, 9)) for _ in range(rng.randint(1, 2))))
        table = FiniteModuleTable(factors)
        module = z_module(*factors)
        g1 = [tuple(rng.randrange(d) for d in factors) for _ in range(rng.randint(0, 2))]
        g2 = [tuple(rng.randrange(d) for d in factors) for _ in range(rng.randint(0, 2))]
        s1 = module.submodule_from_int_columns(g1)
        s2 = module.submodule_from_int_columns(g2)
        want = brute_submodule_ops(table, g1, g2)
        inter = submodule_intersection(s1, s2)
        got_inter = {
            tuple(table.reduce([x for x in col]))
            for col in _int_columns(inter.generators)
        }
        assert table.span(got_inter or [table.zero()]) == want["intersection"]
        assert table.span(
            _int_columns(s1.sum(s2).generators) or [table.zero()]
        ) == want["sum"]


def _int_columns(mat: Mat):
    return [tuple(mat.entry(i, j) for i in range(mat.nrows)) for j in range(mat.ncols)]


def test_quotient_of_submodules():
    m = z_module(9)
    top = m.full_submodule()
    bottom = m.submodule_from_int_columns([(3,)])
    q = quotient_of_submodules(top, bottom)
    assert q.torsion_invariants == (3,)
    same = quotient_of_submodules(bottom, bottom)
    assert same.is_zero_module()


def test_quotient_requires_matching_ambient():
    a, b = z_module(9), z_module(3)
    with pytest.raises(ValueError):
        quotient_of_submodules(a.full_submodule(), b.full_submodule())


def test_module_map_validation():
    src = z_module(4)
    dst = z_module(2)
    f = ModuleMap(src, dst, Mat([[1]]))
    assert map_kernel(f).contains_columns(Mat([[2]]))
    with pytest.raises(ValueError):
        ModuleMap(dst, src, Mat([[1]]))  # 1 mod 2 -> 1 mod 4 is not well defined


def test_map_kernel_image_cokernel():
    src = z_module(6)
    dst = z_module(3)
    f = ModuleMap(src, dst, Mat([[1]]))
    assert map_cokernel(f).is_zero_module()
    img = map_image(f)
    assert img.spans_equal(dst.full_submodule())
    ker = map_kernel(f)
    assert ker.spans_equal(src.submodule_from_int_columns([(3,)]))


def test_laurent_module_example():
    tm2 = LAURENT.parse("-2 + t")
    two_tm1 = LAURENT.parse("-1 + 2*t")
    m = PresentedModule(
        LAURENT.tag,
        2,
        Mat([[tm2, LAURENT.zero], [LAURENT.zero, two_tm1]], 2),
    )
    assert m.generating_rank == 1  # coprime orders merge into one cyclic factor
    assert LAURENT.fmt(m.order()) == "1 - 5/2*t + t^2"


def test_relations_contain_columns():
    m = z_module(9)
    assert m.relations_contain_columns(Mat([[9], [0]][:1], 1))
    assert not m.relations_contain_columns(Mat([[3]], 1))
