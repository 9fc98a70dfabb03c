"""Anti-dendriform algebras given by exact structure constants.

An algebra is a pair of bilinear products (succ, prec) on a finite basis.
The defining identities, checked by full basis-triple enumeration (sufficient
by multilinearity):

    A1:  x>(y>z) = -(x.y)>z = -x<(y.z) = (x<y)<z
    A2:  (x>y)<z = x>(y<z)

where x.y = x>y + x<y is the associated associative product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .actions import ActionFamily
from .fields import RATIONALS, InputError
from .linalg import inverse, matvec, unit, vadd, vneg, vscale, vzero
from .reporting import Report

A1_TERMS = ("x>(y>z)", "-(x.y)>z", "-x<(y.z)", "(x<y)<z")


@dataclass(frozen=True)
class BilinearOp:
    """A bilinear product: table[i][j] is the coordinate vector of e_i o e_j."""

    dim: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != self.dim or any(
                len(row) != self.dim or any(len(v) != self.dim for v in row)
                for row in self.table):
            raise InputError("bilinear table shape does not match dimension %d" % self.dim)

    @staticmethod
    def zero(dim):
        return BilinearOp(dim, tuple(tuple(vzero(dim) for _ in range(dim))
                                     for _ in range(dim)))

    @staticmethod
    def from_entries(dim, entries):
        """entries: iterable of (i, j, k, coefficient)."""
        acc = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InputError("structure-constant index (%d,%d,%d) out of range" % (i, j, k))
            acc[i][j][k] = acc[i][j][k] + c
        return BilinearOp(dim, tuple(tuple(tuple(v) for v in row) for row in acc))

    def apply(self, u, v):
        """Product of two coordinate vectors."""
        out = vzero(self.dim)
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                out = vadd(out, vscale(ui * vj, self.table[i][j]))
        return out

    def entry(self, i, j, k):
        return self.table[i][j][k]

    def add(self, other):
        if other.dim != self.dim:
            raise InputError("cannot add products of dimensions %d and %d" % (self.dim, other.dim))
        return BilinearOp(self.dim, tuple(
            tuple(vadd(self.table[i][j], other.table[i][j]) for j in range(self.dim))
            for i in range(self.dim)))

    def neg(self):
        return BilinearOp(self.dim, tuple(tuple(vneg(v) for v in row) for row in self.table))

    def is_zero(self):
        return all(not c for row in self.table for v in row for c in v)

    def entries(self):
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                for k, c in enumerate(v):
                    if c:
                        yield (i, j, k, c)


def check_associative(op: BilinearOp, exhaustive: bool = False) -> Report:
    """(x.y).z = x.(y.z) over all basis triples."""
    rep = Report("associativity", exhaustive=exhaustive)
    n = op.dim
    for i in range(n):
        for j in range(n):
            left = op.table[i][j]
            for k in range(n):
                lhs = op.apply(left, unit(n, k))
                rhs = op.apply(unit(n, i), op.table[j][k])
                rep.require_equal("assoc", (i, j, k), lhs, rhs, "(x.y).z != x.(y.z)")
    return rep


@dataclass(frozen=True)
class ADAlgebra:
    dim: int
    basis: tuple
    succ: BilinearOp
    prec: BilinearOp
    field: object = RATIONALS

    def __post_init__(self):
        if len(self.basis) != self.dim:
            raise InputError("basis has %d labels for dimension %d" % (len(self.basis), self.dim))
        if self.succ.dim != self.dim or self.prec.dim != self.dim:
            raise InputError("product tables do not match dimension %d" % self.dim)

    @staticmethod
    def make(dim, succ_entries=(), prec_entries=(), basis=None, field=RATIONALS):
        basis = tuple(basis) if basis else tuple("e%d" % (i + 1) for i in range(dim))
        return ADAlgebra(dim, basis,
                         BilinearOp.from_entries(dim, succ_entries),
                         BilinearOp.from_entries(dim, prec_entries),
                         field)

    @staticmethod
    def zero(dim, field=RATIONALS):
        return ADAlgebra.make(dim, field=field)

    @cached_property
    def assoc(self) -> BilinearOp:
        return self.succ.add(self.prec)

    @cached_property
    def is_verified(self) -> bool:
        return check_anti_dendriform(self).passed

    def check(self, exhaustive: bool = False) -> Report:
        return check_anti_dendriform(self, exhaustive=exhaustive)

    def equal_tables(self, other: "ADAlgebra") -> bool:
        return (self.dim == other.dim and self.succ.table == other.succ.table
                and self.prec.table == other.prec.table)


def check_anti_dendriform(alg: ADAlgebra, exhaustive: bool = False) -> Report:
    """Both defining identities over every basis triple, with witnesses."""
    rep = Report("anti-dendriform axioms", exhaustive=exhaustive)
    n, succ, prec, dot = alg.dim, alg.succ, alg.prec, alg.assoc
    for i in range(n):
        ei = unit(n, i)
        for j in range(n):
            sij, pij, dij = succ.table[i][j], prec.table[i][j], dot.table[i][j]
            for k in range(n):
                ek = unit(n, k)
                chain = (
                    succ.apply(ei, succ.table[j][k]),
                    vneg(succ.apply(dij, ek)),
                    vneg(prec.apply(ei, dot.table[j][k])),
                    prec.apply(prec.table[i][j], ek),
                )
                rep.require_chain("A1", (i, j, k), A1_TERMS, chain)
                rep.require_equal("A2", (i, j, k),
                                  prec.apply(sij, ek), succ.apply(ei, prec.table[j][k]),
                                  "(x>y)<z != x>(y<z)")
    return rep


def associated_associative(alg: ADAlgebra) -> BilinearOp:
    """The sum product x.y = x>y + x<y."""
    return alg.assoc


def is_anti_zinbiel(alg: ADAlgebra) -> bool:
    """True iff x>y = y<x for all basis pairs."""
    return all(alg.succ.table[i][j] == alg.prec.table[j][i]
               for i in range(alg.dim) for j in range(alg.dim))


@dataclass(frozen=True)
class MulOperators:
    lsucc: ActionFamily
    rsucc: ActionFamily
    lprec: ActionFamily
    rprec: ActionFamily


def multiplication_operators(alg: ADAlgebra) -> MulOperators:
    """Left/right multiplication operators of both products, as action families."""
    n = alg.dim

    def left(op):
        return ActionFamily(n, n, tuple(
            tuple(tuple(op.table[i][c][r] for c in range(n)) for r in range(n))
            for i in range(n)))

    def right(op):
        return ActionFamily(n, n, tuple(
            tuple(tuple(op.table[c][i][r] for c in range(n)) for r in range(n))
            for i in range(n)))

    return MulOperators(left(alg.succ), right(alg.succ), left(alg.prec), right(alg.prec))


def op_from_left_family(fam: ActionFamily) -> BilinearOp:
    """Rebuild a product table from its left-multiplication family."""
    n = fam.alg_dim
    return BilinearOp(n, tuple(
        tuple(tuple(fam.mats[i][k][j] for k in range(n)) for j in range(n))
        for i in range(n)))


def change_basis(alg: ADAlgebra, pmat) -> ADAlgebra:
    """Conjugate both product tables by an invertible matrix.

    Column i of pmat holds the old coordinates of the new basis vector f_i.
    """
    pinv = inverse(pmat)
    if pinv is None:
        raise InputError("change of basis matrix is singular")
    n = alg.dim

    def conj(op):
        table = []
        for i in range(n):
            fi = tuple(pmat[r][i] for r in range(n))
            row = []
            for j in range(n):
                fj = tuple(pmat[r][j] for r in range(n))
                row.append(matvec(pinv, op.apply(fi, fj)))
            table.append(tuple(row))
        return BilinearOp(n, tuple(table))

    return ADAlgebra(n, alg.basis, conj(alg.succ), conj(alg.prec), alg.field)


def direct_sum(a: ADAlgebra, b: ADAlgebra) -> ADAlgebra:
    """Block-diagonal direct product of two algebras."""
    n, m = a.dim, b.dim

    def block(opa, opb):
        entries = list(opa.entries())
        entries += [(i + n, j + n, k + n, c) for (i, j, k, c) in opb.entries()]
        return BilinearOp.from_entries(n + m, entries)

    return ADAlgebra(n + m, a.basis + b.basis, block(a.succ, b.succ),
                     block(a.prec, b.prec), a.field)


def is_homomorphism(phi, src: ADAlgebra, dst: ADAlgebra) -> bool:
    """phi: dst.dim x src.dim matrix; checks phi(x o y) = phi(x) o phi(y) for both products."""
    for op_s, op_d in ((src.succ, dst.succ), (src.prec, dst.prec)):
        for i in range(src.dim):
            ci = tuple(phi[r][i] for r in range(dst.dim))
            for j in range(src.dim):
                cj = tuple(phi[r][j] for r in range(dst.dim))
                if matvec(phi, op_s.table[i][j]) != op_d.apply(ci, cj):
                    return False
    return True


def is_isomorphism(phi, src: ADAlgebra, dst: ADAlgebra) -> bool:
    return inverse(phi) is not None and is_homomorphism(phi, src, dst)


def is_automorphism(alg: ADAlgebra, m) -> bool:
    return is_isomorphism(m, alg, alg)
