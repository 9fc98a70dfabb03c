"""Shared builders: small verified algebras, random exact data, oracles."""

from __future__ import annotations

import random
from fractions import Fraction as Q

import pytest

from adw.actions import ActionFamily
from adw.algebra import ADAlgebra, direct_sum
from adw.linalg import inverse
from adw.reps import ADRep, regular_representation, semidirect_product


def q(a, b=1):
    return Q(a, b)


def nilpotent2() -> ADAlgebra:
    """The 2-dimensional algebra with e1 > e1 = e2 and every other product zero."""
    return ADAlgebra.make(2, succ_entries=[(0, 0, 1, Q(1))])


def rand_scalar(rng, span=2):
    return Q(rng.randint(-span, span), rng.choice([1, 1, 2]))


def rand_vec(rng, n, span=2):
    return tuple(rand_scalar(rng, span) for _ in range(n))


def rand_matrix(rng, rows, cols, span=2):
    return tuple(tuple(rand_scalar(rng, span) for _ in range(cols)) for _ in range(rows))


def rand_invertible(rng, n, span=2):
    while True:
        m = rand_matrix(rng, n, n, span)
        if inverse(m) is not None:
            return m


def rand_family(rng, alg_dim, mod_dim, span=1):
    return ActionFamily(alg_dim, mod_dim,
                        tuple(rand_matrix(rng, mod_dim, mod_dim, span)
                              for _ in range(alg_dim)))


def conjugate_rep(rep: ADRep, pmat) -> ADRep:
    """Transport a representation along an invertible module map."""
    pinv = inverse(pmat)
    from adw.linalg import matmul

    def conj(fam):
        return ActionFamily(fam.alg_dim, fam.mod_dim,
                            tuple(matmul(pmat, matmul(m, pinv)) for m in fam.mats))

    return ADRep(rep.algebra, rep.mod_dim, conj(rep.lsucc), conj(rep.rsucc),
                 conj(rep.lprec), conj(rep.rprec))


@pytest.fixture(scope="session")
def algebra_zoo():
    """Verified algebras of dimensions 1..4 with varied structure."""
    nil = nilpotent2()
    zoo = [
        ADAlgebra.zero(1),
        ADAlgebra.zero(2),
        ADAlgebra.zero(3),
        nil,
        ADAlgebra(2, nil.basis, nil.prec, nil.succ, nil.field),  # transposed variant
        direct_sum(nil, ADAlgebra.zero(1)),
        direct_sum(nil, nil),
        semidirect_product(regular_representation(nil)),
    ]
    for alg in zoo:
        assert alg.is_verified
    return zoo


@pytest.fixture(scope="session")
def valid_reps_pool():
    """A pool of representations known to satisfy the axioms, over nilpotent2."""
    from adw.reps import dual_representation

    nil = nilpotent2()
    rng = random.Random(20240817)
    pool = [ADRep.zero(nil, 1), ADRep.zero(nil, 2),
            regular_representation(nil),
            dual_representation(regular_representation(nil))]
    base = list(pool[2:])
    for _ in range(60):
        src = rng.choice(base)
        pool.append(conjugate_rep(src, rand_invertible(rng, src.mod_dim)))
    return pool


# ---------------------------------------------------------------------------
# independent oracles (deliberately different machinery from the library:
# dict-of-dicts products and direct identity expansion)

def oracle_product(entries, n):
    """entries: {(i,j): {k: coeff}} -> function on dense coordinate tuples."""

    def mult(u, v):
        out = [Q(0)] * n
        for (i, j), ks in entries.items():
            f = u[i] * v[j]
            if f:
                for k, c in ks.items():
                    out[k] += f * c
        return tuple(out)

    return mult


def oracle_is_anti_dendriform(succ_entries, prec_entries, n):
    """Brute-force expansion of both defining identities on all basis triples."""
    succ = oracle_product(succ_entries, n)
    prec = oracle_product(prec_entries, n)

    def dot(u, v):
        return tuple(a + b for a, b in zip(succ(u, v), prec(u, v)))

    def e(i):
        return tuple(Q(1) if t == i else Q(0) for t in range(n))

    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = e(i), e(j), e(k)
                t1 = succ(x, succ(y, z))
                t2 = tuple(-a for a in succ(dot(x, y), z))
                t3 = tuple(-a for a in prec(x, dot(y, z)))
                t4 = prec(prec(x, y), z)
                if not (t1 == t2 == t3 == t4):
                    return False
                if prec(succ(x, y), z) != succ(x, prec(y, z)):
                    return False
    return True


def op_to_oracle_entries(op):
    out = {}
    for (i, j, k, c) in op.entries():
        out.setdefault((i, j), {})[k] = c
    return out
