"""Matched pairs and bicrossed products.

A matched pair consists of two algebras acting on each other through four
families each, such that the glued products on the direct sum

    (x,a) > (y,b) = (x >_1 y + l>_2(a)y + r>_2(b)x,  a >_2 b + l>_1(x)b + r>_1(y)a)
    (x,a) < (y,b) = (x <_1 y + l<_2(a)y + r<_2(b)x,  a <_2 b + l<_1(x)b + r<_1(y)a)

are anti-dendriform.  The conditions are: both action quadruples are
representations, plus the twelve mixed conditions M1-M12 (the remaining
components of the defining identities on mixed basis triples).

Summing paired families gives a matched pair of associative algebras; the
conditions AM1-AM6 are the mixed associativity components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionFamily
from .algebra import ADAlgebra, BilinearOp, check_associative
from .fields import InputError
from .linalg import unit, vadd, vzero
from .reporting import PreconditionFailure, Report
from .reps import ADRep, check_representation
from .unified import check_split_axioms


@dataclass(frozen=True)
class MatchedPairDatum:
    alg1: ADAlgebra
    alg2: ADAlgebra
    # actions of alg1 on alg2
    l1s: ActionFamily
    r1s: ActionFamily
    l1p: ActionFamily
    r1p: ActionFamily
    # actions of alg2 on alg1
    l2s: ActionFamily
    r2s: ActionFamily
    l2p: ActionFamily
    r2p: ActionFamily

    def __post_init__(self):
        n, m = self.alg1.dim, self.alg2.dim
        for fam in (self.l1s, self.r1s, self.l1p, self.r1p):
            if (fam.alg_dim, fam.mod_dim) != (n, m):
                raise InputError("alg1-on-alg2 family shape mismatch")
        for fam in (self.l2s, self.r2s, self.l2p, self.r2p):
            if (fam.alg_dim, fam.mod_dim) != (m, n):
                raise InputError("alg2-on-alg1 family shape mismatch")

    @staticmethod
    def trivial(alg1: ADAlgebra, alg2: ADAlgebra) -> "MatchedPairDatum":
        n, m = alg1.dim, alg2.dim
        z12, z21 = ActionFamily.zero(n, m), ActionFamily.zero(m, n)
        return MatchedPairDatum(alg1, alg2, z12, z12, z12, z12, z21, z21, z21, z21)

    def rep_on_alg2(self) -> ADRep:
        return ADRep(self.alg1, self.alg2.dim, self.l1s, self.r1s, self.l1p, self.r1p)

    def rep_on_alg1(self) -> ADRep:
        return ADRep(self.alg2, self.alg1.dim, self.l2s, self.r2s, self.l2p, self.r2p)

    def pair_succ(self, u, v):
        x, a = u
        y, b = v
        apart = vadd(self.alg1.succ.apply(x, y), self.l2s.act(a, y), self.r2s.act(b, x))
        vpart = vadd(self.alg2.succ.apply(a, b), self.l1s.act(x, b), self.r1s.act(y, a))
        return (apart, vpart)

    def pair_prec(self, u, v):
        x, a = u
        y, b = v
        apart = vadd(self.alg1.prec.apply(x, y), self.l2p.act(a, y), self.r2p.act(b, x))
        vpart = vadd(self.alg2.prec.apply(a, b), self.l1p.act(x, b), self.r1p.act(y, a))
        return (apart, vpart)


# Slots delegated to the two representation checks carry None; pure triples
# are the factor algebras' own axioms (preconditions).
_A1_MATCHED = {
    ("A", "A", "V"): ("M1", None),
    ("A", "V", "A"): ("M2", None),
    ("V", "A", "A"): ("M3", None),
    ("A", "V", "V"): (None, "M4"),
    ("V", "A", "V"): (None, "M5"),
    ("V", "V", "A"): (None, "M6"),
}
_A2_MATCHED = {
    ("A", "A", "V"): ("M7", None),
    ("A", "V", "A"): ("M8", None),
    ("V", "A", "A"): ("M9", None),
    ("A", "V", "V"): (None, "M10"),
    ("V", "A", "V"): (None, "M11"),
    ("V", "V", "A"): (None, "M12"),
}


def check_matched_pair(d: MatchedPairDatum, exhaustive: bool = False) -> Report:
    """Both representation conditions plus M1-M12 over mixed basis triples."""
    for alg, tag in ((d.alg1, "first"), (d.alg2, "second")):
        if not alg.is_verified:
            raise PreconditionFailure("%s factor is not anti-dendriform" % tag, alg.check())
    out = Report("matched pair", exhaustive=exhaustive)
    r1 = check_representation(d.rep_on_alg2(), exhaustive=exhaustive,
                              require_verified_algebra=False)
    r2 = check_representation(d.rep_on_alg1(), exhaustive=exhaustive,
                              require_verified_algebra=False)
    for rep, tag in ((r1, "rep1"), (r2, "rep2")):
        out.checked += rep.checked
        out.violation_count += rep.violation_count
        for v in rep.violations:
            if out.exhaustive or not out.violations:
                out.violations.append(type(v)(("%s:" % tag) + v.equation, v.witness,
                                              v.lhs, v.rhs, v.detail))
    check_split_axioms(d.alg1.dim, d.alg2.dim, d.pair_succ, d.pair_prec,
                       _A1_MATCHED, _A2_MATCHED, out.name,
                       exhaustive=exhaustive, report=out)
    return out


def bicrossed_product(d: MatchedPairDatum, precheck: bool = True) -> ADAlgebra:
    """The glued algebra on alg1 (+) alg2; refuses failing data."""
    if precheck:
        rep = check_matched_pair(d)
        if not rep.passed:
            raise PreconditionFailure("not a matched pair", rep)
    n, m = d.alg1.dim, d.alg2.dim
    total = n + m

    def emb(idx):
        if idx < n:
            return (unit(n, idx), vzero(m))
        return (vzero(n), unit(m, idx - n))

    def build(fn):
        table = []
        for i in range(total):
            row = []
            for j in range(total):
                apart, vpart = fn(emb(i), emb(j))
                row.append(tuple(apart) + tuple(vpart))
            table.append(tuple(row))
        return BilinearOp(total, tuple(table))

    return ADAlgebra(total, d.alg1.basis + d.alg2.basis,
                     build(d.pair_succ), build(d.pair_prec), d.alg1.field)


# ---------------------------------------------------------------------------
# associative matched pairs

@dataclass(frozen=True)
class AssocMatchedPair:
    op1: BilinearOp
    op2: BilinearOp
    l1: ActionFamily
    r1: ActionFamily
    l2: ActionFamily
    r2: ActionFamily

    def pair_mul(self, u, v):
        x, a = u
        y, b = v
        apart = vadd(self.op1.apply(x, y), self.l2.act(a, y), self.r2.act(b, x))
        vpart = vadd(self.op2.apply(a, b), self.l1.act(x, b), self.r1.act(y, a))
        return (apart, vpart)


def check_assoc_matched_pair(p: AssocMatchedPair, exhaustive: bool = False) -> Report:
    """Bimodule conditions for both actions plus the mixed conditions AM1-AM6.

    Everything is read off the associativity of the glued product on mixed
    basis triples; slot labels:

        AM1 (x,b,c)    AM2 (a,b,z)    AM3 (a,y,z)
        AM4 (x,y,c)    AM5 (a,y,c)    AM6 (x,b,z)
    """
    out = Report("associative matched pair", exhaustive=exhaustive)
    pre1 = check_associative(p.op1)
    pre2 = check_associative(p.op2)
    if not (pre1.passed and pre2.passed):
        raise PreconditionFailure("a factor product is not associative",
                                  pre1 if not pre1.passed else pre2)
    n, m = p.op1.dim, p.op2.dim
    labels = {
        ("A", "A", "V"): ("AM4", "bimod1-l"),
        ("A", "V", "A"): ("AM6", "bimod1-c"),
        ("V", "A", "A"): ("AM3", "bimod1-r"),
        ("A", "V", "V"): ("bimod2-r", "AM1"),
        ("V", "A", "V"): ("bimod2-c", "AM5"),
        ("V", "V", "A"): ("bimod2-l", "AM2"),
    }
    basis = {
        "A": [(unit(n, i), vzero(m)) for i in range(n)],
        "V": [(vzero(n), unit(m, j)) for j in range(m)],
    }
    for ttype, (la, lv) in labels.items():
        tname = "".join(ttype)
        for iu, u in enumerate(basis[ttype[0]]):
            for iv, v in enumerate(basis[ttype[1]]):
                for iw, w in enumerate(basis[ttype[2]]):
                    uv = p.pair_mul(u, v)
                    vw = p.pair_mul(v, w)
                    lhs = p.pair_mul(uv, w)
                    rhs = p.pair_mul(u, vw)
                    wit = (tname, iu, iv, iw)
                    out.require_equal(la, wit, lhs[0], rhs[0],
                                      "(uv)w != u(vw) [first component]")
                    out.require_equal(lv, wit, lhs[1], rhs[1],
                                      "(uv)w != u(vw) [second component]")
    return out


def induced_associative_matched_pair(d: MatchedPairDatum,
                                     precheck: bool = True):
    """Sum paired families and products; returns (AssocMatchedPair, Report)."""
    if precheck:
        rep = check_matched_pair(d)
        if not rep.passed:
            raise PreconditionFailure("not a matched pair", rep)
    amp = AssocMatchedPair(d.alg1.assoc, d.alg2.assoc,
                           d.l1s.add(d.l1p), d.r1s.add(d.r1p),
                           d.l2s.add(d.l2p), d.r2s.add(d.r2p))
    return amp, check_assoc_matched_pair(amp)


def assoc_bicrossed_product(p: AssocMatchedPair) -> BilinearOp:
    """Dense product table of the glued associative algebra."""
    n, m = p.op1.dim, p.op2.dim
    total = n + m

    def emb(idx):
        if idx < n:
            return (unit(n, idx), vzero(m))
        return (vzero(n), unit(m, idx - n))

    table = []
    for i in range(total):
        row = []
        for j in range(total):
            apart, vpart = p.pair_mul(emb(i), emb(j))
            row.append(tuple(apart) + tuple(vpart))
        table.append(tuple(row))
    return BilinearOp(total, tuple(table))


# ---------------------------------------------------------------------------
# factorization

def factorize(calg: ADAlgebra, basis_a, basis_b):
    """Split an algebra through two complementary sub-basis index sets.

    Checks that both spans are subalgebras, reads off the eight action
    families from the mixed products, runs the matched-pair check, and
    verifies that the bicrossed product reproduces the original tables.
    Returns (MatchedPairDatum or None, Report).
    """
    out = Report("factorization")
    basis_a, basis_b = tuple(basis_a), tuple(basis_b)
    idx = sorted(basis_a + basis_b)
    if idx != list(range(calg.dim)) or set(basis_a) & set(basis_b):
        raise InputError("basis index sets must partition 0..%d" % (calg.dim - 1))
    pos_a = {g: i for i, g in enumerate(basis_a)}
    pos_b = {g: i for i, g in enumerate(basis_b)}
    n, m = len(basis_a), len(basis_b)

    def split(vec, witness, tag):
        va = [0] * n
        vb = [0] * m
        for g, c in enumerate(vec):
            if not c:
                continue
            if g in pos_a:
                va[pos_a[g]] = c
            else:
                vb[pos_b[g]] = c
        return tuple(va), tuple(vb)

    def sub_table(op, ids, pos, dim, tag):
        table = []
        for gi in ids:
            row = []
            for gj in ids:
                vec = op.table[gi][gj]
                inside = [0] * dim
                for g, c in enumerate(vec):
                    if not c:
                        continue
                    if g in pos:
                        inside[pos[g]] = c
                    else:
                        out.record("closure", (gi, gj), tuple(vec), (),
                                   "%s-span is not a subalgebra" % tag)
                        return None
                row.append(tuple(inside))
            table.append(tuple(row))
        return BilinearOp(dim, tuple(table))

    ops = {}
    for name, op in (("as", calg.succ), ("ap", calg.prec)):
        ta = sub_table(op, basis_a, pos_a, n, "A")
        tb = sub_table(op, basis_b, pos_b, m, "B")
        if ta is None or tb is None:
            return None, out
        ops[name] = (ta, tb)
    alg_a = ADAlgebra(n, tuple(calg.basis[g] for g in basis_a),
                      ops["as"][0], ops["ap"][0], calg.field)
    alg_b = ADAlgebra(m, tuple(calg.basis[g] for g in basis_b),
                      ops["as"][1], ops["ap"][1], calg.field)

    fams = {}
    for lname, rname, l2name, r2name, op in (("l1s", "r1s", "l2s", "r2s", calg.succ),
                                             ("l1p", "r1p", "l2p", "r2p", calg.prec)):
        m1 = [[[0] * m for _ in range(m)] for _ in range(n)]
        m2 = [[[0] * m for _ in range(m)] for _ in range(n)]
        m3 = [[[0] * n for _ in range(n)] for _ in range(m)]
        m4 = [[[0] * n for _ in range(n)] for _ in range(m)]
        for i, gx in enumerate(basis_a):
            for j, gb in enumerate(basis_b):
                va, vb = split(op.table[gx][gb], (gx, gb), "x o b")
                for r in range(m):
                    m1[i][r][j] = vb[r]        # l1(x)b: fibre part of x o b
                for r in range(n):
                    m4[j][r][i] = va[r]        # r2(b)x: base part of x o b
                va2, vb2 = split(op.table[gb][gx], (gb, gx), "b o x")
                for r in range(m):
                    m2[i][r][j] = vb2[r]       # r1(x)b: fibre part of b o x
                for r in range(n):
                    m3[j][r][i] = va2[r]       # l2(b)x: base part of b o x
        fams[lname] = ActionFamily(n, m, tuple(tuple(tuple(r) for r in mm) for mm in m1))
        fams[rname] = ActionFamily(n, m, tuple(tuple(tuple(r) for r in mm) for mm in m2))
        fams[l2name] = ActionFamily(m, n, tuple(tuple(tuple(r) for r in mm) for mm in m3))
        fams[r2name] = ActionFamily(m, n, tuple(tuple(tuple(r) for r in mm) for mm in m4))

    datum = MatchedPairDatum(alg_a, alg_b, fams["l1s"], fams["r1s"], fams["l1p"],
                             fams["r1p"], fams["l2s"], fams["r2s"], fams["l2p"],
                             fams["r2p"])
    mp = check_matched_pair(datum)
    out.absorb(mp)
    if not mp.passed:
        return None, out
    rebuilt = bicrossed_product(datum, precheck=False)
    perm = tuple(basis_a) + tuple(basis_b)
    for op_r, op_c, tag in ((rebuilt.succ, calg.succ, ">"), (rebuilt.prec, calg.prec, "<")):
        for i in range(calg.dim):
            for j in range(calg.dim):
                got = op_r.table[i][j]
                want = op_c.table[perm[i]][perm[j]]
                want_p = [0] * calg.dim
                for g, c in enumerate(want):
                    want_p[perm.index(g)] = c
                out.require_equal("reconstruction", (i, j), tuple(got), tuple(want_p),
                                  "bicrossed product does not reproduce %s" % tag)
    if not out.passed:
        return None, out
    return datum, out
