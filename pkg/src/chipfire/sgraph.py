"""Signed graphs as a source of (L, M) pairs.

Vertices are 1..n with a designated sink.  Each edge carries a sign; a
negative edge flips the sign of the corresponding off-diagonal entries
in the firing matrix.  Deleting the sink row and column gives

    M = reduced Laplacian of the underlying graph
    L = same, but the off-diagonal entry for vertices u, v is minus the
        SUM of the signs of the u-v edges instead of minus their count

Diagonals of L and M agree (vertex degrees), so signs on sink-incident
edges never show up in (L, M).  Multi-edges accumulate in both matrices.

Families: 'complete' and 'cycle' on n vertices with sink n.  Non-sink
edges are ordered lexicographically by sorted endpoints, and a sign
pattern is an integer whose bit i (least significant first) makes the
i-th non-sink edge negative.  Sink-incident edges stay positive, which
loses nothing by the remark above.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import lattices
from .linalg import mat_vec, vec_add, vec_is_integral, vec_scale
from .mmatrix import MMatrix
from .pairs import ChipFiringPair


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple          # ((u, v, sign), ...) with u < v, sign in {+1, -1}
    sink: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two vertices")
        if not 1 <= self.sink <= self.n:
            raise ValueError("sink out of range")
        for u, v, sign in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u}, {v}): need 1 <= u < v <= n")
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign!r} on edge ({u}, {v})")
        # every vertex must reach the sink for M to be an M-matrix
        seen = {self.sink}
        frontier = [self.sink]
        while frontier:
            w = frontier.pop()
            for u, v, _ in self.edges:
                for a, b in ((u, v), (v, u)):
                    if a == w and b not in seen:
                        seen.add(b)
                        frontier.append(b)
        if len(seen) != self.n:
            raise ValueError("graph is not connected")

    @property
    def non_sink_edges(self):
        return tuple((u, v, s) for u, v, s in self.edges if self.sink not in (u, v))


def parse_edge_list(text):
    """Read "n <count> sink <id>" then one "u v +" or "u v -" line per edge."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "n" or head[2] != "sink":
        raise ValueError(f"bad header {lines[0]!r}: expected 'n <count> sink <id>'")
    n, sink = int(head[1]), int(head[3])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[2] not in "+-":
            raise ValueError(f"bad edge line {ln!r}: expected 'u v +' or 'u v -'")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        edges.append((min(u, v), max(u, v), 1 if parts[2] == "+" else -1))
    return SignedGraph(n=n, edges=tuple(sorted(edges)), sink=sink)


def format_edge_list(g: SignedGraph):
    out = [f"n {g.n} sink {g.sink}"]
    out.extend(f"{u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges)
    return "\n".join(out) + "\n"


def reduced_laplacians(g: SignedGraph, shared_m: MMatrix | None = None):
    """The (L, M) pair of a signed graph with the sink row/column removed."""
    verts = [v for v in range(1, g.n + 1) if v != g.sink]
    idx = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    m_grid = [[0] * k for _ in range(k)]
    l_grid = [[0] * k for _ in range(k)]
    for u, v, sign in g.edges:
        for a, b in ((u, v), (v, u)):
            if a != g.sink:
                i = idx[a]
                m_grid[i][i] += 1
                l_grid[i][i] += 1
                if b != g.sink:
                    m_grid[i][idx[b]] -= 1
                    l_grid[i][idx[b]] -= sign
    if shared_m is not None:
        assert shared_m.m == tuple(tuple(r) for r in m_grid)
        return ChipFiringPair(l_grid, shared_m)
    return ChipFiringPair(l_grid, m_grid)


# -- parametric families -----------------------------------------------------

def _family_edges(kind, n):
    if kind == "complete":
        return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if kind == "cycle":
        pairs = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return sorted(pairs)
    raise ValueError("kind must be 'complete' or 'cycle'")


def family(kind, n, sign_pattern=0):
    """SignedGraph for K_n or C_n, sink n, signs set by sign_pattern.

    Bit i of sign_pattern makes the i-th non-sink edge negative (edges
    in lex order by endpoints, least significant bit first).  Edges at
    the sink keep sign +.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    base = _family_edges(kind, n)
    non_sink = [e for e in base if n not in e]
    if not 0 <= sign_pattern < 1 << len(non_sink):
        raise ValueError(f"sign pattern needs {len(non_sink)} bits")
    signs = {}
    for i, e in enumerate(non_sink):
        signs[e] = -1 if sign_pattern >> i & 1 else 1
    edges = tuple((u, v, signs.get((u, v), 1)) for u, v in base)
    return SignedGraph(n=n, edges=edges, sink=n)


def sweep(kind, n, threads=1):
    """All sign patterns of the family as (pattern, pair), ascending by
    pattern.  Every pair shares one M-matrix instance, since M ignores
    signs; results are identical for any thread count."""
    count = 1 << len(family(kind, n).non_sink_edges)
    shared = reduced_laplacians(family(kind, n)).m

    def build(pattern):
        return pattern, reduced_laplacians(family(kind, n, pattern), shared_m=shared)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(build, range(count)))
    else:
        results = [build(p) for p in range(count)]
    results.sort(key=lambda item: item[0])
    return results


# -- structure theorems for complete graphs ----------------------------------

def verify_half_n_integrality(n):
    """Inverse structure of the reduced Laplacian of K_n.

    M^-1 has 2/n on the diagonal and 1/n off it, so n * M^-1 e_i = 1 + e_i
    (all-ones plus a standard basis vector).  For even n this makes the
    preimages (n/2) e_i transfer integrally under any signing's L M^-1.
    """
    from fractions import Fraction

    pair = reduced_laplacians(family("complete", n))
    m_inv = pair.m.inverse
    k = pair.n
    for i in range(k):
        for j in range(k):
            want = Fraction(2, n) if i == j else Fraction(1, n)
            assert m_inv[i][j] == want
    ones = (1,) * k
    for i in range(k):
        e_i = tuple(1 if j == i else 0 for j in range(k))
        scaled = mat_vec(m_inv, vec_scale(n, e_i))
        assert scaled == vec_add(ones, e_i)
    return {"n": n, "diag": "2/n", "offdiag": "1/n", "n_m_inv_ei": "ones + e_i"}


def _subsets_up_to(items, size):
    from itertools import combinations

    for r in range(size + 1):
        yield from combinations(items, r)


def kn_z2_subgroup(pair: ChipFiringPair, n):
    """Structural checks behind the Z_2^(n-2) subgroup of K(L) for any
    signing of K_n with even n.

    With q = n/2 and s_i = q e_i: each s_i is z-superstable for M and
    transfers to an integer configuration c_i with 2 c_i = L(ones + e_i),
    so [c_i] has order dividing 2 and lies in the zero fracket of K(L).
    Subset sums of the s_i stay z-superstable up to size (n-2)/2, and the
    c_i together generate a subgroup with invariant factors (2,)*(n-2).
    """
    if n % 2:
        raise ValueError("needs even n")
    k = pair.n
    assert k == n - 1
    q = n // 2
    ones = (1,) * k
    configs = []
    for i in range(k):
        e_i = tuple(int(j == i) for j in range(k))
        s_i = vec_scale(q, e_i)
        assert pair.m.is_z_superstable(s_i)
        c_i = mat_vec(pair.lm_inv, s_i)
        assert vec_is_integral(c_i), "q e_i must transfer integrally"
        doubled = vec_scale(2, c_i)
        assert doubled == mat_vec(pair.l, vec_add(ones, e_i))
        assert lattices.class_id(pair.l, doubled, pair.l_snf) == (0,) * k
        frac_key = mat_vec(pair.ml_inv, c_i)
        assert vec_is_integral(frac_key), "c_i must sit in the zero fracket"
        configs.append(c_i)
    for subset in _subsets_up_to(range(k), (n - 2) // 2):
        total = tuple(q if j in subset else 0 for j in range(k))
        assert pair.m.is_z_superstable(total)
    group = lattices.subgroup_invariant_factors(configs, pair.l)
    assert group.invariant_factors == (2,) * (n - 2)
    return {"n": n, "generators": tuple(configs), "subgroup": group}


def count_even_invariant_factors(group: lattices.AbelianGroup):
    return sum(1 for d in group.invariant_factors if d % 2 == 0)


def scan_critical_groups(kind, n, threads=1, expect_even_factors=None):
    """Critical groups K(L) across all sign patterns of the family.

    Returns (histogram, certificates): histogram maps each invariant
    factor tuple to its number of patterns, ascending lex; certificates
    is the per-pattern count of even invariant factors when
    expect_even_factors is set, after asserting every count reaches it.
    """
    rows = sweep(kind, n, threads=threads)
    histogram = {}
    evens = []
    for pattern, pair in rows:
        factors = pair.l_group.invariant_factors
        histogram[factors] = histogram.get(factors, 0) + 1
        if expect_even_factors is not None:
            got = count_even_invariant_factors(pair.l_group)
            assert got >= expect_even_factors, (
                f"pattern {pattern}: only {got} even invariant factors in {factors}"
            )
            evens.append(got)
    ordered = dict(sorted(histogram.items()))
    assert sum(ordered.values()) == len(rows)
    return ordered, tuple(evens)
