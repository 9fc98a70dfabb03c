import random
from fractions import Fraction as Q
from itertools import product as iproduct

import pytest

from adw.algebra import ADAlgebra, BilinearOp, direct_sum, multiplication_operators
from adw.bialgebra import (BilinearForm, CoproductPair, adybe_residual,
                           algebra_from_coproducts, build_double_construction,
                           check_coalgebra, check_coboundary_conditions,
                           check_connes_cocycle, check_d_bialgebra,
                           check_o_operator, check_o_operator_assoc,
                           coboundary_coproducts, derive_compatible_ad,
                           dualize_algebra, is_skew, is_ybe_solution,
                           o_operator_to_ybe, search_skew_solutions,
                           skew_tensor_from_uppers, t_r, tr_ybe_identity)
from adw.bialgebra import _cop_leg1, _cop_leg2
from adw.linalg import identity, unit
from adw.reporting import PreconditionFailure
from adw.reps import ADRep, dual_representation, regular_representation
from adw.tensors import (contract_12_13, contract_13_23, contract_23_12,
                         sigma123, sigma132, t2_add, t2_apply, t2_sub, t3_add,
                         t3_is_zero, t3_neg, t3_sub, t3_zero, twist)
from .conftest import nilpotent2, rand_matrix

SKEW2 = ((Q(0), Q(1)), (Q(-1), Q(0)))


def hyperbolic_form(n):
    return BilinearForm(2 * n, tuple(tuple(Q(1) if abs(r - c) == n else Q(0)
                                           for c in range(2 * n)) for r in range(2 * n)))


# ---------------------------------------------------------------------------
# invariant forms

def test_connes_zero_form_and_zero_product():
    nil = nilpotent2()
    assert check_connes_cocycle(nil.assoc, BilinearForm(2, ((Q(0),) * 2,) * 2)).passed
    anyform = BilinearForm(2, ((Q(1), Q(2)), (Q(2), Q(-1))))
    assert check_connes_cocycle(BilinearOp.zero(2), anyform).passed


def test_connes_cyclic_failure():
    # cyclic sum at the first basis triple equals 3 w(e2, e1) = 3
    nil = nilpotent2()
    form = BilinearForm(2, ((Q(0), Q(1)), (Q(1), Q(0))))
    out = check_connes_cocycle(nil.assoc, form)
    assert not out.passed
    v = out.violations[0]
    assert v.equation == "cyc" and v.witness == (0, 0, 0) and v.lhs == Q(3)


def test_connes_requires_associativity():
    bad = BilinearOp.from_entries(2, [(0, 0, 0, Q(1)), (0, 0, 1, Q(1)), (1, 0, 0, Q(1))])
    with pytest.raises(PreconditionFailure):
        check_connes_cocycle(bad, BilinearForm(2, identity(2, Q(1))))


def test_derive_zero_product():
    alg = derive_compatible_ad(BilinearOp.zero(2), BilinearForm(2, identity(2, Q(1))))
    assert alg.succ.is_zero() and alg.prec.is_zero()


def test_derive_refuses_degenerate():
    with pytest.raises(PreconditionFailure):
        derive_compatible_ad(BilinearOp.zero(2), BilinearForm(2, ((Q(0),) * 2,) * 2))


def test_double_construction_zero_algebras():
    z = ADAlgebra.zero(2)
    dc = build_double_construction(z, z)
    assert dc.passed
    assert dc.form.gram == hyperbolic_form(2).gram
    assert dc.assembled.is_zero()


def test_double_construction_restriction_equality():
    """The split structure of the assembled double reproduces the inputs on
    both halves."""
    nil = nilpotent2()
    for astar in (ADAlgebra.zero(2), ADAlgebra(2, nil.basis, nil.prec, nil.succ)):
        dc = build_double_construction(nil, astar)
        if not dc.passed:
            continue
        derived = derive_compatible_ad(dc.assembled, dc.form)
        n = 2
        for i in range(n):
            for j in range(n):
                assert tuple(derived.succ.table[i][j][:n]) == nil.succ.table[i][j]
                assert not any(derived.succ.table[i][j][n:])
                assert tuple(derived.prec.table[i][j][:n]) == nil.prec.table[i][j]
                assert tuple(derived.succ.table[n + i][n + j][n:]) == astar.succ.table[i][j]
                assert not any(derived.succ.table[n + i][n + j][:n])
                assert tuple(derived.prec.table[n + i][n + j][n:]) == astar.prec.table[i][j]
    # at least the zero dual passes
    assert build_double_construction(nil, ADAlgebra.zero(2)).passed


# ---------------------------------------------------------------------------
# coalgebras

def test_coalgebra_zero_passes():
    assert check_coalgebra(CoproductPair.zero(3)).passed


def test_coalgebra_dual_of_algebra(algebra_zoo):
    for alg in algebra_zoo:
        assert check_coalgebra(dualize_algebra(alg)).passed
    # and transposing back recovers the algebra
    nil = nilpotent2()
    back = algebra_from_coproducts(dualize_algebra(nil))
    assert back.succ.table == nil.succ.table


def test_coalgebra_ca2_failure():
    cp = CoproductPair.from_entries(2, [(0, 0, 0, Q(1))], [])
    out = check_coalgebra(cp)
    assert not out.passed
    assert out.violations[0].equation == "Ca2"


# ---------------------------------------------------------------------------
# D-bialgebras and coboundary pairs

def test_d_bialgebra_zero():
    z = ADAlgebra.zero(2)
    assert check_d_bialgebra(z, CoproductPair.zero(2)).passed


def test_coboundary_coproducts_frozen_example():
    nil = nilpotent2()
    cp = coboundary_coproducts(nil, SKEW2, SKEW2)
    assert cp.dsucc[0] == ((Q(0), Q(0)), (Q(0), Q(1)))   # Ds(e1) = e2 (x) e2
    assert cp.dsucc[1] == ((0, 0), (0, 0))
    assert cp.dprec[0] == ((Q(0), Q(0)), (Q(0), Q(0)))
    assert cp.dprec[1] == ((0, 0), (0, 0))
    assert check_coalgebra(cp).passed
    assert check_d_bialgebra(nil, cp).passed


def test_coboundary_zero_tensors():
    nil = nilpotent2()
    cp = coboundary_coproducts(nil, ((Q(0),) * 2,) * 2, ((Q(0),) * 2,) * 2)
    assert all(not any(x for row in t for x in row) for t in cp.dsucc + cp.dprec)
    z = ADAlgebra.zero(2)
    cp2 = coboundary_coproducts(z, SKEW2, SKEW2)
    assert all(not any(x for row in t for x in row) for t in cp2.dsucc + cp2.dprec)


def test_d_bialgebra_failure_labelled():
    nil = nilpotent2()
    cp = CoproductPair.from_entries(2, [(0, 0, 0, Q(1))], [])
    out = check_d_bialgebra(nil, cp)
    assert not out.passed
    assert out.violations[0].equation.startswith("D")


def test_coboundary_conditions_zero_and_skew_auto():
    nil = nilpotent2()
    zero = ((Q(0),) * 2,) * 2
    assert check_coboundary_conditions(nil, zero, zero).passed
    # with equal skew tensors the four pair-indexed conditions hold automatically
    rng = random.Random(12)
    algs = [nil, direct_sum(nil, ADAlgebra.zero(1))]
    for alg in algs:
        n = alg.dim
        for _ in range(6):
            r = rand_matrix(rng, n, n)
            r = t2_sub(r, twist(r))  # skew part
            rep = check_coboundary_conditions(alg, r, r, exhaustive=True)
            for v in rep.violations:
                assert v.equation not in ("CD3", "CD4", "CD5", "CD6")


def test_cd_equals_d_bialgebra_verdict():
    rng = random.Random(21)
    nil = nilpotent2()
    algs = [nil, ADAlgebra.zero(2), direct_sum(nil, ADAlgebra.zero(1))]
    seen = {True: 0, False: 0}
    for alg in algs:
        n = alg.dim
        for _ in range(8):
            rs, rp = rand_matrix(rng, n, n, 1), rand_matrix(rng, n, n, 1)
            cp = coboundary_coproducts(alg, rs, rp)
            lhs = check_coboundary_conditions(alg, rs, rp).passed
            rhs = check_coalgebra(cp).passed and check_d_bialgebra(alg, cp).passed
            assert lhs == rhs
            seen[lhs] += 1
    assert seen[True] >= 2 and seen[False] >= 2


def test_defect_identities_for_cd7_and_cd10():
    """The third-order conditions are exact rewrites of the coalgebra defects;
    this pins the leg conventions against independent expansions."""
    rng = random.Random(77)
    nil = nilpotent2()
    for alg in (nil, ADAlgebra.zero(2)):
        n = alg.dim
        ops = multiplication_operators(alg)
        for _ in range(5):
            rs, rp = rand_matrix(rng, n, n, 1), rand_matrix(rng, n, n, 1)
            cp = coboundary_coproducts(alg, rs, rp)
            k7 = t3_add(contract_12_13(rs, rp, alg.prec),
                        contract_23_12(rp, rs, alg.assoc),
                        contract_13_23(rs, rp, alg.succ))
            for i in range(n):
                ca1_defect = t3_sub(_cop_leg1(cp.dsucc, cp.dprec[i]),
                                    _cop_leg2(cp.dprec, cp.dsucc[i]))
                cd7 = t3_sub(t2_to_t3_apply(ops.rprec.mats[i], k7, 1),
                             t2_to_t3_apply(ops.lsucc.mats[i], k7, 3))
                assert ca1_defect == cd7


def t2_to_t3_apply(mat, t, leg):
    from adw.tensors import t3_apply
    return t3_apply(mat, t, leg)


# ---------------------------------------------------------------------------
# the Yang-Baxter residual

def test_residual_zero_for_skew_solution():
    nil = nilpotent2()
    assert adybe_residual(nil, SKEW2) == t3_zero(2)
    zero = ((Q(0),) * 2,) * 2
    assert adybe_residual(nil, zero) == t3_zero(2)


def test_residual_frozen_nonzero_example():
    nil = nilpotent2()
    r = ((Q(1), Q(0)), (Q(0), Q(0)))  # e1 (x) e1
    res = adybe_residual(nil, r)
    expected = [[[Q(0)] * 2 for _ in range(2)] for _ in range(2)]
    expected[1][0][0] = Q(1)   # e2 (x) e1 (x) e1
    expected[0][1][0] = Q(1)   # e1 (x) e2 (x) e1
    assert res == tuple(tuple(tuple(row) for row in plane) for plane in expected)


def test_sigma_identities_for_skew_tensors():
    rng = random.Random(31)
    nil3 = direct_sum(nilpotent2(), ADAlgebra.zero(1))
    for _ in range(8):
        r = rand_matrix(rng, 3, 3)
        r = t2_sub(r, twist(r))
        ye = adybe_residual(nil3, r)
        first = t3_add(contract_12_13(r, r, nil3.prec),
                       contract_23_12(r, r, nil3.assoc),
                       contract_13_23(r, r, nil3.succ))
        second = t3_add(contract_23_12(r, r, nil3.prec),
                        contract_13_23(r, r, nil3.assoc),
                        t3_neg(contract_12_13(r, r, nil3.succ)))
        assert sigma123(ye) == t3_neg(first)
        assert sigma132(ye) == second


def test_t_r_matrix():
    r = ((Q(0), Q(1)), (Q(0), Q(0)))   # e1 (x) e2
    assert t_r(r) == ((Q(0), Q(0)), (Q(1), Q(0)))
    assert t_r(((Q(0),) * 2,) * 2) == ((Q(0), Q(0)), (Q(0), Q(0)))
    m = t_r(SKEW2)
    assert m == ((Q(0), Q(-1)), (Q(1), Q(0)))
    assert all(m[i][j] == -m[j][i] for i in range(2) for j in range(2))
    assert is_skew(SKEW2) and not is_skew(r)


def test_tr_identity_agrees_with_residual_on_grids():
    nil = nilpotent2()
    nil3 = direct_sum(nil, ADAlgebra.zero(1))
    for alg in (nil, ADAlgebra.zero(2)):
        for t in (Q(-2), Q(-1), Q(0), Q(1), Q(2)):
            r = tuple(tuple(t * x for x in row) for row in SKEW2)
            if alg.dim != 2:
                continue
            assert is_ybe_solution(alg, r) == tr_ybe_identity(alg, r).passed
    for combo in iproduct((Q(-1), Q(0), Q(1)), repeat=3):
        r = skew_tensor_from_uppers(3, combo)
        assert is_ybe_solution(nil3, r) == tr_ybe_identity(nil3, r).passed


def test_coboundary_equivalence_on_skew_grid():
    """For equal skew tensors over the two reference algebras, the residual
    vanishes exactly when the coboundary pair is a D-bialgebra."""
    nil = nilpotent2()
    grids = [(nil, [(t,) for t in (Q(-2), Q(-1), Q(0), Q(1), Q(2))]),
             (ADAlgebra.zero(2), [(t,) for t in (Q(-1), Q(0), Q(1))])]
    for alg, grid in grids:
        for combo in grid:
            r = skew_tensor_from_uppers(alg.dim, combo)
            cp = coboundary_coproducts(alg, r, r)
            lhs = is_ybe_solution(alg, r)
            rhs = check_coalgebra(cp).passed and check_d_bialgebra(alg, cp).passed
            assert lhs == rhs


def test_coboundary_solutions_always_give_d_bialgebras():
    """One direction holds on any algebra: a skew solution yields a coboundary
    D-bialgebra.  The converse can fail when the multiplication operators
    annihilate too much (e.g. with one product identically zero), so only the
    implication is asserted on the 3-dimensional grid."""
    nil3 = direct_sum(nilpotent2(), ADAlgebra.zero(1))
    solutions = d_bialgebras = points = 0
    for combo in iproduct((Q(-1), Q(0), Q(1)), repeat=3):
        r = skew_tensor_from_uppers(3, combo)
        cp = coboundary_coproducts(nil3, r, r)
        lhs = is_ybe_solution(nil3, r)
        rhs = check_coalgebra(cp).passed and check_d_bialgebra(nil3, cp).passed
        assert rhs == check_coboundary_conditions(nil3, r, r).passed
        if lhs:
            assert rhs
            solutions += 1
        d_bialgebras += rhs
        points += 1
    assert points == 27 and solutions >= 3 and d_bialgebras >= solutions


def test_search_skew_solutions_deterministic():
    nil = nilpotent2()
    vals = [Q(-1), Q(0), Q(1)]
    sols = search_skew_solutions(nil, vals)
    assert sols == search_skew_solutions(nil, vals)
    assert len(sols) == 3  # every skew tensor on this algebra solves the equation
    from adw.fields import InputError
    with pytest.raises(InputError):
        search_skew_solutions(direct_sum(nil, direct_sum(nil, nil)), vals)


# ---------------------------------------------------------------------------
# operators

def test_zero_operator_passes_both_modes():
    nil = nilpotent2()
    rr = regular_representation(nil)
    z = ((Q(0), Q(0)), (Q(0), Q(0)))
    assert check_o_operator(z, rr).passed
    ops = multiplication_operators(nil)
    assert check_o_operator_assoc(z, nil.assoc, ops.lsucc.add(ops.lprec),
                                  ops.rsucc.add(ops.rprec)).passed


def test_identity_operator_fails_on_nilpotent_regular():
    nil = nilpotent2()
    rr = regular_representation(nil)
    assert not check_o_operator(identity(2, Q(1)), rr).passed


def test_operator_classification_on_nilpotent_regular():
    """Direct solving of the quadratic identities: solutions are exactly the
    matrices with b = 0 and a^2 = 2ad."""
    nil = nilpotent2()
    rr = regular_representation(nil)
    vals = (Q(-2), Q(-1), Q(0), Q(1), Q(2))
    for a, b, c, d in iproduct(vals, repeat=4):
        tmat = ((a, b), (c, d))
        expected = (b == 0) and (a * a == 2 * a * d)
        assert check_o_operator(tmat, rr).passed == expected


def test_tr_of_skew_solution_is_assoc_operator():
    nil = nilpotent2()
    assert tr_ybe_identity(nil, SKEW2).passed
    bad = ((Q(0), Q(1)), (Q(1), Q(0)))  # symmetric, not a solution certificate
    assert tr_ybe_identity(nil, bad).passed == is_ybe_solution(nil, bad)


def test_operator_lift_round_trip():
    nil = nilpotent2()
    rr = regular_representation(nil)
    good = ((Q(2), Q(0)), (Q(0), Q(1)))   # a = 2d, b = 0
    res = o_operator_to_ybe(good, rr)
    assert res.operator_report.passed
    assert res.is_solution and res.consistent
    assert res.ambient.dim == 4 and res.ambient.is_verified
    assert is_skew(res.r)
    bad = ((Q(1), Q(1)), (Q(0), Q(1)))
    res2 = o_operator_to_ybe(bad, rr)
    assert not res2.operator_report.passed
    assert not res2.is_solution and res2.consistent


def test_lift_zero_operator():
    nil = nilpotent2()
    rr = regular_representation(nil)
    res = o_operator_to_ybe(((Q(0), Q(0)), (Q(0), Q(0))), rr)
    assert res.is_solution
    assert all(not x for row in res.r for x in row)
