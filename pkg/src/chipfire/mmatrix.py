"""Chip-firing on a single M-matrix.

An M-matrix has positive diagonal, nonpositive off-diagonal entries and
an entrywise nonnegative inverse; these are exactly the firing matrices
whose dynamics terminate.  This module decides z-superstability, fires
and stabilizes configurations, enumerates the superstable and critical
configurations (one of each per equivalence class mod M Z^n), and maps
arbitrary integer vectors to the class representatives sstab_of_class
and crit_of_class.

The z-superstability decision is a finite box search: if z >= 0 and
s - Mz >= 0 then z = M^-1 s - M^-1 (s - Mz) <= M^-1 s entrywise because
M^-1 >= 0, so candidates z with 0 <= z <= floor(M^-1 s) are exhaustive.

Criticals come from the classical duality c -> c_max - c, which is a
bijection from superstables onto criticals.
"""

from __future__ import annotations

import itertools
import math

from . import lattices
from .linalg import (
    mat,
    mat_det,
    mat_inverse,
    mat_is_integral,
    mat_vec,
    mat_shape,
    vec,
    vec_sub,
)


def is_m_matrix(grid):
    """True iff the sign pattern holds, the matrix is invertible and the
    inverse is entrywise nonnegative.  Singular input returns False."""
    n, m = mat_shape(grid)
    if n != m or n == 0 or not mat_is_integral(grid):
        return False
    for i in range(n):
        if grid[i][i] <= 0:
            return False
        for j in range(n):
            if i != j and grid[i][j] > 0:
                return False
    if mat_det(grid) == 0:
        return False
    inv = mat_inverse(grid)
    return all(x >= 0 for row in inv for x in row)


class MMatrix:
    """An M-matrix with cached inverse, Smith data and class tables."""

    def __init__(self, grid):
        m = mat(grid)
        if not is_m_matrix(m):
            raise ValueError("not an M-matrix (sign pattern, invertibility and "
                             "nonnegative inverse are all required)")
        self.m = m
        self.n = len(m)
        self.inverse = mat_inverse(m)
        self.det = mat_det(m)
        self.snf = lattices.snf(m)
        self.group = lattices.quotient_group(m, self.snf)
        self.c_max = tuple(m[i][i] - 1 for i in range(self.n))
        self._superstables = None
        self._criticals = None
        self._sstab_by_class = None
        self._crit_by_class = None

    # -- basic dynamics ----------------------------------------------------

    def fire(self, c, i):
        """Fire site i: subtract column i."""
        if not 0 <= i < self.n:
            raise IndexError("site index out of range")
        return tuple(c[r] - self.m[r][i] for r in range(self.n))

    def ready_sites(self, c):
        # site i can fire legally iff c_i >= M_ii (off-diagonal entries
        # are <= 0, so only coordinate i can drop below zero)
        return [i for i in range(self.n) if c[i] >= self.m[i][i]]

    def is_stable(self, c):
        return all(c[i] < self.m[i][i] for i in range(self.n))

    def stabilize(self, c):
        """Stabilize by repeatedly firing the lowest-index ready site.

        The result is independent of the firing order; determinism of the
        trace is the only reason for the fixed schedule.
        """
        c = vec(c)
        if any(x < 0 for x in c):
            raise ValueError("stabilize needs an effective configuration")
        while True:
            ready = self.ready_sites(c)
            if not ready:
                return c
            c = self.fire(c, ready[0])

    # -- superstability ----------------------------------------------------

    def is_z_superstable(self, s):
        """True iff no nonzero z >= 0 keeps s - Mz effective."""
        if any(x < 0 for x in s):
            raise ValueError("z-superstability is defined for effective "
                             "configurations")
        bound = [math.floor(q) for q in mat_vec(self.inverse, s)]
        assert all(b >= 0 for b in bound)
        for z in itertools.product(*(range(b + 1) for b in bound)):
            if not any(z):
                continue
            if all(x >= 0 for x in vec_sub(s, mat_vec(self.m, z))):
                return False
        return True

    def superstables(self):
        """All z-superstable configurations in lexicographic order.

        Superstable implies stable (take z = e_i), so the stable box
        prod [0, M_ii - 1] is an exhaustive search space.
        """
        if self._superstables is None:
            box = itertools.product(*(range(self.m[i][i]) for i in range(self.n)))
            found = tuple(s for s in box if self.is_z_superstable(s))
            assert len(found) == abs(self.det)
            self._superstables = found
        return self._superstables

    def classical_dual(self, v):
        return vec_sub(self.c_max, v)

    def criticals(self):
        """Images of the superstables under the classical duality."""
        if self._criticals is None:
            self._criticals = tuple(self.classical_dual(s) for s in self.superstables())
        return self._criticals

    # -- class lookups -----------------------------------------------------

    def class_id(self, v):
        return lattices.class_id(self.m, v, self.snf)

    def _tables(self):
        if self._sstab_by_class is None:
            sstab = {}
            crit = {}
            for s in self.superstables():
                sstab[self.class_id(s)] = s
            for c in self.criticals():
                crit[self.class_id(c)] = c
            assert len(sstab) == len(crit) == abs(self.det)
            self._sstab_by_class = sstab
            self._crit_by_class = crit
        return self._sstab_by_class, self._crit_by_class

    def sstab_of_class(self, v):
        """The unique superstable equivalent to v mod M Z^n.

        Accepts arbitrary integer vectors, negatives included.
        """
        return self._tables()[0][self.class_id(v)]

    def crit_of_class(self, v):
        """The unique critical equivalent to v mod M Z^n."""
        return self._tables()[1][self.class_id(v)]
