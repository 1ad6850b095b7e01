"""Integer lattice algorithms.

Smith normal form with unimodular transforms, finite abelian quotient
structure Z^n / A Z^n, canonical equivalence-class coordinates, class
enumeration, intersection of Z^n with a rational lattice B Z^n, and
element orders in quotients.

The Smith decomposition here is A = U * D * V with |det U| = |det V| = 1
and D = diag(d_1, ..., d_n), d_1 | d_2 | ... | d_n, d_i >= 1 for
nonsingular A.  Two integer vectors v, w satisfy v == w (mod A Z^n) iff
U^-1 v and U^-1 w agree modulo diag(D), which gives a canonical class id.
"""

from __future__ import annotations

import itertools
import math
from collections import namedtuple
from dataclasses import dataclass

from .linalg import (
    flcm,
    identity,
    mat,
    mat_det,
    mat_inverse,
    mat_is_integral,
    mat_mul,
    mat_scale,
    mat_vec,
    mat_shape,
    vec,
    xgcd,
)

DEFAULT_ENUMERATION_CAP = 10**6


class EnumerationCapExceeded(ValueError):
    """Raised when a class sweep would exceed the configured cap."""


SnfDecomposition = namedtuple("SnfDecomposition", "U D V Uinv Vinv")


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group in invariant-factor form.

    invariant_factors is ascending with d_i | d_{i+1}; factors equal to 1
    are dropped, so the trivial group has an empty tuple.
    """

    invariant_factors: tuple

    def __post_init__(self):
        fs = self.invariant_factors
        assert all(isinstance(d, int) and d >= 2 for d in fs)
        assert all(fs[i + 1] % fs[i] == 0 for i in range(len(fs) - 1))

    @property
    def order(self):
        return math.prod(self.invariant_factors)

    @property
    def is_cyclic(self):
        return len(self.invariant_factors) <= 1

    @property
    def largest_factor(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z_{d}" for d in self.invariant_factors)

    def to_json(self):
        return list(self.invariant_factors)


def snf(a):
    """Smith normal form of a nonsingular square integer matrix.

    Returns SnfDecomposition(U, D, V, Uinv, Vinv) with a = U*D*V.  All
    five matrices are integral; U and V are unimodular and Uinv, Vinv are
    their exact inverses (accumulated during the reduction, no matrix
    inversion happens here).
    """
    n, m = mat_shape(a)
    if n != m:
        raise ValueError("snf needs a square matrix")
    if not mat_is_integral(a):
        raise ValueError("snf needs integer entries")
    if mat_det(a) == 0:
        raise ValueError("snf of a singular matrix")

    d = [list(row) for row in a]
    u = [list(row) for row in identity(n)]      # A = U D V throughout
    uinv = [list(row) for row in identity(n)]
    v = [list(row) for row in identity(n)]
    vinv = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        uinv[i], uinv[j] = uinv[j], uinv[i]
        for r in range(n):                       # swap columns i,j of U
            u[r][i], u[r][j] = u[r][j], u[r][i]

    def swap_cols(i, j):
        for r in range(n):
            d[r][i], d[r][j] = d[r][j], d[r][i]
            vinv[r][i], vinv[r][j] = vinv[r][j], vinv[r][i]
        v[i], v[j] = v[j], v[i]                  # swap rows i,j of V

    def add_row(dst, src, q):
        # row_dst += q * row_src on D, mirrored on Uinv, undone on U
        for c in range(n):
            d[dst][c] += q * d[src][c]
            uinv[dst][c] += q * uinv[src][c]
        for r in range(n):
            u[r][src] -= q * u[r][dst]

    def add_col(dst, src, q):
        for r in range(n):
            d[r][dst] += q * d[r][src]
            vinv[r][dst] += q * vinv[r][src]
        for c in range(n):
            v[src][c] -= q * v[dst][c]

    def negate_row(i):
        for c in range(n):
            d[i][c] = -d[i][c]
            uinv[i][c] = -uinv[i][c]
        for r in range(n):
            u[r][i] = -u[r][i]

    k = 0
    while k < n:
        # pivot: minimal absolute nonzero entry of the trailing block
        best = None
        for i in range(k, n):
            for j in range(k, n):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        assert best is not None, "unexpected zero block in nonsingular snf"
        if best[0] != k:
            swap_rows(k, best[0])
        if best[1] != k:
            swap_cols(k, best[1])

        dirty = False
        for i in range(k + 1, n):
            q = d[i][k] // d[k][k]
            if q:
                add_row(i, k, -q)
            if d[i][k] != 0:
                dirty = True
        for j in range(k + 1, n):
            q = d[k][j] // d[k][k]
            if q:
                add_col(j, k, -q)
            if d[k][j] != 0:
                dirty = True
        if dirty:
            continue
        # pivot must divide the whole trailing block for the chain to hold
        bad = None
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                if d[i][j] % d[k][k] != 0:
                    bad = j
                    break
            if bad is not None:
                break
        if bad is not None:
            add_col(k, bad, 1)
            continue
        k += 1

    for i in range(n):
        if d[i][i] < 0:
            negate_row(i)

    dec = SnfDecomposition(mat(u), mat(d), mat(v), mat(uinv), mat(vinv))
    assert mat_mul(mat_mul(dec.U, dec.D), dec.V) == mat(a)
    assert mat_mul(dec.U, dec.Uinv) == identity(n)
    assert mat_mul(dec.V, dec.Vinv) == identity(n)
    diag = [dec.D[i][i] for i in range(n)]
    assert all(x >= 1 for x in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(n - 1))
    return dec


def quotient_group(a, dec=None):
    """Invariant factors of Z^n / A Z^n as an AbelianGroup."""
    dec = dec or snf(a)
    n = len(dec.D)
    factors = tuple(dec.D[i][i] for i in range(n) if dec.D[i][i] > 1)
    group = AbelianGroup(factors)
    assert group.order == abs(mat_det(a))
    return group


def class_id(a, v, dec):
    """Canonical coordinates of [v] in Z^n / A Z^n.

    Equal class ids iff the vectors differ by an element of A Z^n.
    """
    w = mat_vec(dec.Uinv, v)
    n = len(w)
    return tuple(w[i] % dec.D[i][i] for i in range(n))


def enumerate_class_reps(a, dec=None, cap=DEFAULT_ENUMERATION_CAP):
    """One representative per class of Z^n / A Z^n.

    Representatives are U*r for r in the residue box 0 <= r_i < d_i,
    generated in lexicographic residue order, so the output is the same
    no matter how the caller partitions the work.
    """
    dec = dec or snf(a)
    n = len(dec.D)
    total = math.prod(dec.D[i][i] for i in range(n))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} classes exceeds cap {cap}")
    reps = [mat_vec(dec.U, r)
            for r in itertools.product(*(range(dec.D[i][i]) for i in range(n)))]
    assert len(reps) == total
    return reps


def lattice_intersect_with_Zn(b):
    """Integer basis of the lattice Z^n intersect B Z^n.

    Algorithm: with k = flcm(B) the matrix C = kB is integral; for y in
    Z^n, Cy lies in k Z^n iff (V y)_i is a multiple of k / gcd(d_i, k)
    where C = U D V.  Hence the intersection is B * V^-1 * diag(k / gcd(d_i, k)) * Z^n.
    """
    n, m = mat_shape(b)
    if n != m:
        raise ValueError("square matrix required")
    if mat_det(b) == 0:
        raise ValueError("singular matrix")
    k = flcm(b)
    c = mat_scale(k, b)
    assert mat_is_integral(c)
    dec = snf(c)
    scale = tuple(
        tuple(k // math.gcd(dec.D[i][i], k) if i == j else 0 for j in range(n))
        for i in range(n)
    )
    w = mat_mul(mat_mul(b, dec.Vinv), scale)
    assert mat_is_integral(w), "intersection basis must be integral"
    assert mat_det(w) != 0
    # every column lies in B Z^n by construction: B^-1 W = Vinv * scale
    return w


def count_order_le2(group):
    """Number of elements of order at most 2: product of gcd(2, d_i)."""
    return math.prod(math.gcd(2, d) for d in group.invariant_factors)


def element_order(lattice_basis, v):
    """Least k >= 1 with k*v in the lattice spanned by the basis columns.

    k*v in W Z^n iff k * (W^-1 v) is integral, so k is the lcm of the
    denominators of W^-1 v.
    """
    w = mat_vec(mat_inverse(lattice_basis), v)
    return flcm(w)


def lattice_basis_from_columns(cols):
    """Basis of the full-rank lattice spanned by the given integer columns.

    Column-style gcd elimination: for each row a single pivot column is
    produced by repeated extended-gcd combinations (each combination is a
    unimodular move on the pair, so the span never changes).  The result
    is lower triangular with positive diagonal.
    """
    cols = [list(c) for c in cols]
    n = len(cols[0])
    assert all(len(c) == n for c in cols)
    basis = []
    work = cols
    for i in range(n):
        pivot = None
        rest = []
        for c in work:
            assert all(c[r] == 0 for r in range(i)), "elimination invariant"
            if c[i] == 0:
                rest.append(c)
            elif pivot is None:
                pivot = c
            else:
                g, x, y = xgcd(pivot[i], c[i])
                pa, ca = pivot[i] // g, c[i] // g
                new_pivot = [x * p + y * q for p, q in zip(pivot, c)]
                new_rest = [ca * p - pa * q for p, q in zip(pivot, c)]
                assert new_pivot[i] == g and new_rest[i] == 0
                pivot = new_pivot
                rest.append(new_rest)
        if pivot is None:
            raise ValueError("columns do not span a full-rank lattice")
        if pivot[i] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        work = rest
    return mat(tuple(basis[j][r] for j in range(n)) for r in range(n))


def subgroup_invariant_factors(generators, a):
    """Invariant factors of the subgroup of Z^n / A Z^n generated by the
    classes of the given integer vectors.

    With B a basis of the lattice spanned by the generators together with
    the columns of A, the subgroup is isomorphic to Z^n / (B^-1 A) Z^n.
    """
    n = len(a)
    cols = [list(g) for g in generators] + [[a[r][j] for r in range(n)] for j in range(n)]
    basis = lattice_basis_from_columns(cols)
    x = mat_mul(mat_inverse(basis), a)
    assert mat_is_integral(x), "A Z^n must sit inside the generated lattice"
    return quotient_group(x)
