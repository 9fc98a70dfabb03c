"""Families of linear actions: a linear map from an algebra into End(V).

Stored as one module-dimension square matrix per algebra basis element, so
``family.mat(x)`` for a coordinate vector x is the matrix of the action of x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import InputError
from .linalg import mat_add, mat_scale, matvec, shape, transpose, vzero, zeros_mat


@dataclass(frozen=True)
class ActionFamily:
    alg_dim: int
    mod_dim: int
    mats: tuple  # one mod_dim x mod_dim matrix per algebra basis element

    def __post_init__(self):
        if len(self.mats) != self.alg_dim:
            raise InputError("action family: %d matrices for algebra dimension %d"
                             % (len(self.mats), self.alg_dim))
        for m in self.mats:
            if shape(m) != (self.mod_dim, self.mod_dim):
                raise InputError("action family: matrix shape %r, expected %dx%d"
                                 % (shape(m), self.mod_dim, self.mod_dim))

    @staticmethod
    def zero(alg_dim, mod_dim):
        return ActionFamily(alg_dim, mod_dim, tuple(zeros_mat(mod_dim, mod_dim)
                                                    for _ in range(alg_dim)))

    @staticmethod
    def from_entries(alg_dim, mod_dim, entries):
        """entries: iterable of (x, row, col, value)."""
        acc = [[[0] * mod_dim for _ in range(mod_dim)] for _ in range(alg_dim)]
        for x, r, c, v in entries:
            if not (0 <= x < alg_dim and 0 <= r < mod_dim and 0 <= c < mod_dim):
                raise InputError("action entry (%d,%d,%d) out of range" % (x, r, c))
            acc[x][r][c] = acc[x][r][c] + v
        return ActionFamily(alg_dim, mod_dim,
                            tuple(tuple(tuple(row) for row in m) for m in acc))

    def mat(self, x):
        """Matrix of the action of the coordinate vector x."""
        out = zeros_mat(self.mod_dim, self.mod_dim)
        for i, xi in enumerate(x):
            if xi:
                out = mat_add(out, mat_scale(xi, self.mats[i]))
        return out

    def act(self, x, w):
        """Apply the action of algebra vector x to module vector w."""
        out = vzero(self.mod_dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            mw = matvec(self.mats[i], w)
            out = tuple(o + xi * y for o, y in zip(out, mw))
        return out

    def add(self, other):
        self._same_shape(other)
        return ActionFamily(self.alg_dim, self.mod_dim,
                            tuple(mat_add(a, b) for a, b in zip(self.mats, other.mats)))

    def neg(self):
        return ActionFamily(self.alg_dim, self.mod_dim,
                            tuple(mat_scale(-1, m) for m in self.mats))

    def transpose(self):
        return ActionFamily(self.alg_dim, self.mod_dim,
                            tuple(transpose(m) for m in self.mats))

    def is_zero(self):
        return all(not x for m in self.mats for row in m for x in row)

    def entries(self):
        for x, m in enumerate(self.mats):
            for r, row in enumerate(m):
                for c, v in enumerate(row):
                    if v:
                        yield (x, r, c, v)

    def _same_shape(self, other):
        if (self.alg_dim, self.mod_dim) != (other.alg_dim, other.mod_dim):
            raise InputError("action family shape mismatch")
