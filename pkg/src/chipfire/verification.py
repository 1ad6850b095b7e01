"""Acceptance checks against the frozen reference tables.

Each criterion is a function returning (passed, detail).  run_all times
them and never raises: a check that throws is reported as failed with
the exception text, so a verification run always produces a full
matrix.  Criterion 3 fails by design: two of its claims contradict the
mask that makes the duality map a bijection, and the detail string
spells out exactly where the reference tables go wrong.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from . import lattices, refdata
from .duality import (
    duality,
    duality_inverse,
    duality_table,
    fixed_points,
    involution_mu,
    mu_case,
    nonzero_criteria,
    predicted_fixed_point_count,
)
from .fixtures import C6_NEGATIVE_PATTERN, DIAMOND_M, diamond_pair, negative_c6_pair
from .frackets import (
    cyclic_shortcut,
    fracket_partition,
    verify_largest_invariant_factor,
    zero_fracket,
    zero_fracket_size_formula,
)
from .linalg import (
    frac_part,
    gcd_entries,
    mat_is_integral,
    mat_scale,
    mat_vec,
    vec_sub,
)
from .mmatrix import MMatrix, is_m_matrix
from .pairs import ChipFiringPair
from .sgraph import (
    SignedGraph,
    count_even_invariant_factors,
    kn_z2_subgroup,
    reduced_laplacians,
    sweep,
    verify_half_n_integrality,
)

PROPERTY_SEED = 31415


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


def _bullet(ok, text):
    return f"{'ok  ' if ok else 'FAIL'} {text}"


# -- 1: unsigned baseline ------------------------------------------------------

def check_unsigned_baseline(threads=1):
    m = MMatrix(DIAMOND_M)
    ss, cc = m.superstables(), m.criticals()
    ok = set(ss) == set(refdata.M_SUPERSTABLES) and set(cc) == set(refdata.M_CRITICALS)
    if ok:
        return True, f"{len(ss)} superstables and {len(cc)} criticals match the reference table"
    return False, f"superstables {ss} criticals {cc} differ from the reference table"


# -- 2: pair enumeration -------------------------------------------------------

def check_pair_enumeration(threads=1):
    pair = diamond_pair()
    got_ss = {(r.config, r.preimage, r.floor) for r in pair.enumerate_pair_superstables()}
    got_cc = {(r.config, r.preimage, r.floor) for r in pair.enumerate_pair_criticals()}
    ok_ss = got_ss == set(refdata.PAIR_SUPERSTABLE_ROWS)
    ok_cc = got_cc == set(refdata.PAIR_CRITICAL_ROWS)
    if ok_ss and ok_cc:
        return True, "all 12 superstable and 12 critical (config, preimage, floor) rows match"
    return False, "\n".join(
        [
            _bullet(ok_ss, "superstable rows match the reference table"),
            _bullet(ok_cc, "critical rows match the reference table"),
        ]
    )


# -- 3: duality map (fails by design, see detail) --------------------------------

def check_duality_map(threads=1):
    pair = diamond_pair()
    lines = []

    worked = duality(pair, refdata.WORKED_DUALITY_INPUT)
    cfgs = (
        pair.to_config(refdata.WORKED_DUALITY_INPUT),
        pair.to_config(worked),
    )
    ok_worked = worked == refdata.WORKED_DUALITY_OUTPUT and cfgs == refdata.WORKED_DUALITY_CONFIGS
    lines.append(_bullet(ok_worked, "duality sends (4/3,7/6,0) to (7/3,7/6,1), configs (5,4,0) -> (8,6,1)"))

    table = duality_table(pair)
    mismatches = [
        (row["config"], row["dual_config"], refdata.PRINTED_DUALITY[row["config"]])
        for row in table
        if row["dual_config"] != refdata.PRINTED_DUALITY[row["config"]]
    ]
    ok_rows = not mismatches
    lines.append(_bullet(ok_rows, "row alignment matches the reference table on all 12 rows"))
    if mismatches:
        for cfg, got, printed in mismatches:
            lines.append(f"       {cfg}: computed dual {got}, reference prints {printed}")
        lines.append(
            "       the reference alignment pairs each superstable with the critical of its"
        )
        lines.append(
            "       own class.  The masked map instead exchanges the two classes with floors"
        )
        lines.append(
            "       (0,0,0) and (0,1,0): both floors take the identity branch (c_max - 2s"
        )
        lines.append(
            "       sits in the zero-key lattice) yet c_max - s lands in the other class,"
        )
        lines.append(
            "       because c_max - 2s is not an integer combination of the columns of M."
        )
        lines.append(
            "       Matching the printed alignment needs the unmasked complement"
        )
        lines.append(
            "       s -> sstab(c_max - s), which reproduces crit-of-class row for row but is"
        )
        lines.append(
            "       not the identity when L = M, breaking duality(x) = c_max - x elsewhere."
        )

    ok_inverse = all(duality_inverse(pair, row["dual_preimage"]) == row["preimage"] for row in table)
    lines.append(_bullet(ok_inverse, "duality_inverse recovers every input"))

    diff = vec_sub(refdata.NAIVE_MAP_CRITICAL, refdata.NAIVE_MAP_SUPERSTABLE)
    assert diff == refdata.NAIVE_MAP_DIFFERENCE
    cls = pair.classify(diff)
    ok_naive = not cls.is_critical
    lines.append(_bullet(ok_naive, "(9,7,2) - (1,1,0) = (8,6,2) is classified not-critical"))
    if not ok_naive:
        same_class = pair.class_id(diff) == pair.class_id(refdata.NAIVE_MAP_SUPERSTABLE)
        lines.append(
            "       (8,6,2) IS critical: its preimage (2,1,2) is the critical floor of its"
        )
        lines.append(
            "       class, and it already appears in the critical table as the row of"
        )
        lines.append(
            "       (2,2,0).  The naive complement really fails because (8,6,2) and (1,1,0)"
        )
        lines.append(
            f"       lie in different classes mod the columns of L (same class: {same_class}),"
        )
        lines.append(
            "       so the subtraction leaves the row's class.  The not-critical claim is a"
        )
        lines.append("       documented erratum in the reference text.")

    passed = ok_worked and ok_rows and ok_inverse and ok_naive
    return passed, "\n".join(lines)


# -- 4: involution ----------------------------------------------------------------

def check_involution(threads=1):
    pair = diamond_pair()
    ss = pair.m.superstables()
    ok_table = all(
        (involution_mu(pair, s), mu_case(pair, s)) == refdata.MU_TABLE[s] for s in ss
    )
    ok_invol = all(involution_mu(pair, involution_mu(pair, s)) == s for s in ss)
    ok_example = involution_mu(pair, (1, 1, 0)) == (0, 0, 1)
    mm = ChipFiringPair(DIAMOND_M, DIAMOND_M)
    ok_mm_mu = all(
        involution_mu(mm, s) == s and mu_case(mm, s) == "identity"
        for s in mm.m.superstables()
    )
    cmax = mm.m.c_max
    ok_mm_dual = all(
        duality(mm, r.preimage) == vec_sub(cmax, r.preimage)
        for r in mm.enumerate_pair_superstables()
    )
    lines = [
        _bullet(ok_table, "mu values and identity/dual cases match on all 8 superstables"),
        _bullet(ok_invol, "mu(mu(s)) = s on all 8 superstables"),
        _bullet(ok_example, "mu((1,1,0)) = (0,0,1)"),
        _bullet(ok_mm_mu, "mu = id on the pair (M, M)"),
        _bullet(ok_mm_dual, "duality(x) = c_max - x on the pair (M, M)"),
    ]
    passed = ok_table and ok_invol and ok_example and ok_mm_mu and ok_mm_dual
    return passed, "\n".join(lines) if not passed else "mu table, involution law, and (M, M) degeneration all hold"


# -- 5: frackets -------------------------------------------------------------------

def check_frackets(threads=1):
    pair = diamond_pair()
    part_l = fracket_partition(pair, "L")
    part_m = fracket_partition(pair, "M")
    ok_keys = part_l.keys == refdata.L_FRACKET_KEYS and part_m.keys == refdata.M_FRACKET_KEYS
    ok_sizes = part_l.fracket_size == refdata.FRACKET_SIZE == part_m.fracket_size

    zl = zero_fracket(pair, "L")
    zm = zero_fracket(pair, "M")
    ok_quot = (
        zl.quotient.invariant_factors == refdata.L_QUOTIENT_FACTORS
        and zm.quotient.invariant_factors == refdata.M_QUOTIENT_FACTORS
    )

    tagged = refdata.ZERO_FRACKET_TAGGED_VECTOR
    # the reference names {[(0,0,0)], [(3,3,3)]} as the zero fracket of
    # K(L), but (3,3,3) = L(1,2,2) is the identity there; the statement
    # holds verbatim on the M side, and |F0| = 2 holds on both sides
    ok_size_l = zl.size == refdata.ZERO_FRACKET_SIZE
    tagged_degenerate = pair.class_id(tagged) == (0,) * pair.n
    m_classes = {pair.m.class_id(v) for v in zm.members}
    ok_m_side = m_classes == {pair.m.class_id((0, 0, 0)), pair.m.class_id(tagged)}
    ok_zero = ok_size_l and tagged_degenerate and ok_m_side and zm.size == refdata.ZERO_FRACKET_SIZE

    lif_l = verify_largest_invariant_factor(pair, "L")
    lif_m = verify_largest_invariant_factor(pair, "M")
    ok_flcm = (
        lif_l["ok"]
        and lif_m["ok"]
        and lif_l["flcm"] == refdata.FLCM_ML_INV
        and lif_m["flcm"] == refdata.FLCM_LM_INV
    )

    formula = zero_fracket_size_formula(pair)
    ok_formula = formula["predicted"] == formula["actual"] == refdata.ZERO_FRACKET_SIZE
    ok_shortcut = (
        cyclic_shortcut(pair, "M") == refdata.SCALED_GCD
        and cyclic_shortcut(pair, "L") == refdata.SCALED_GCD
    )

    lines = [
        _bullet(ok_keys, "6 keys on side L and 4 keys on side M, as listed"),
        _bullet(ok_sizes, "every fracket has size 2"),
        _bullet(ok_zero, "zero fracket has size 2 on both sides"),
        "       note: the tagged member (3,3,3) of F0 collapses to the identity in K(L)",
        "       (it equals L(1,2,2)); the two-class statement holds verbatim in K(M),",
        "       and F0 of K(L) is {[(0,0,0)], [(2,2,0)]}",
        _bullet(ok_quot, "K(M)/F0 = Z_4 and K(L)/F0 = Z_6"),
        _bullet(ok_flcm, "flcm(ML^-1) = 6 and flcm(LM^-1) = 4 equal the largest invariant factors"),
        _bullet(ok_formula, "size formula predicts 2 = actual"),
        _bullet(ok_shortcut, "cyclic shortcut gives gcd = 2 on both sides"),
    ]
    passed = all((ok_keys, ok_sizes, ok_zero, ok_quot, ok_flcm, ok_formula, ok_shortcut))
    return passed, "\n".join(lines)


# -- 6: fixed points -----------------------------------------------------------------

def _fixed_point_invariants(pair):
    count = len(fixed_points(pair))
    predicted = predicted_fixed_point_count(pair)
    crit = nonzero_criteria(pair)
    ok = count in (0, predicted)
    if crit["odd_order_guarantee"]:
        ok = ok and count > 0
    if crit["cyclic_even_criterion"] is not None:
        ok = ok and (count > 0) == crit["cyclic_even_criterion"]
    return count, predicted, ok


def check_fixed_points(threads=1):
    pair = diamond_pair()
    fps = fixed_points(pair)
    predicted = predicted_fixed_point_count(pair)
    lam = lattices.lattice_intersect_with_Zn(pair.ml_inv)
    quot = lattices.quotient_group(lam)
    f0 = abs(pair.det_m) // quot.order
    d = lattices.count_order_le2(quot)
    ok_diamond = fps == refdata.FIXED_POINTS and predicted == 4 and (f0, d) == (2, 2)

    ok_triangles = True
    shared = None
    for signs in product((1, -1), repeat=3):
        edges = tuple((u, v, s) for (u, v), s in zip(((1, 2), (1, 3), (2, 3)), signs))
        tri = reduced_laplacians(SignedGraph(n=3, edges=edges, sink=3), shared_m=shared)
        shared = tri.m
        count, _, ok = _fixed_point_invariants(tri)
        ok_triangles = ok_triangles and ok
        ok_triangles = ok_triangles and count == refdata.TRIANGLE_FIXED_POINT_COUNTS[signs[0]]

    ok_cycles = True
    for pattern, cyc in sweep("cycle", 6, threads=threads):
        count, _, ok = _fixed_point_invariants(cyc)
        ok_cycles = ok_cycles and ok
        expected = refdata.C6_FIXED_POINT_COUNTS.get(pattern, refdata.C6_FIXED_POINT_DEFAULT)
        ok_cycles = ok_cycles and count == expected

    lines = [
        _bullet(ok_diamond, "diamond fixture: fixed points = {(0,0,0),(0,0,2),(0,1,0),(2,0,0)}, count 4 = 2*2"),
        _bullet(ok_triangles, "all 8 signed triangles: count in {0, predicted}; order criteria hold"),
        _bullet(ok_cycles, "all 16 signed six-cycles: count in {0, predicted}; order criteria hold"),
    ]
    passed = ok_diamond and ok_triangles and ok_cycles
    return passed, "\n".join(lines) if not passed else (
        "diamond count 4 = 2*2; 8 triangle and 16 six-cycle signings satisfy the count and order criteria"
    )


# -- 7: critical set with no maximum ---------------------------------------------------

def check_no_cmax(threads=1):
    target = set(refdata.C6_CRITICALS)
    matches = []
    for pattern, cyc in sweep("cycle", 6, threads=threads):
        crit = {r.config for r in cyc.enumerate_pair_criticals()}
        if crit == target:
            matches.append(pattern)
    ok_search = matches == [C6_NEGATIVE_PATTERN]

    fixture = negative_c6_pair()
    ok_l = fixture.l == refdata.C6_NEGATIVE_L
    crit = [r.config for r in fixture.enumerate_pair_criticals()]
    ok_set = set(crit) == target
    no_max = not any(all(all(c[i] >= d[i] for i in range(5)) for d in crit) for c in crit)

    lines = [
        _bullet(ok_search, f"16-pattern search finds the fixture uniquely (patterns {matches})"),
        _bullet(ok_l, "fixture firing matrix matches the frozen all-negative six-cycle"),
        _bullet(ok_set, "critical configurations match the 6 reference rows"),
        _bullet(no_max, "no critical configuration dominates all others coordinatewise"),
    ]
    passed = ok_search and ok_l and ok_set and no_max
    return passed, "\n".join(lines) if not passed else (
        "unique signing (all four non-sink edges negative) reproduces the 6 reference criticals, no coordinatewise maximum"
    )


# -- 8: complete graph on six vertices ---------------------------------------------------

def check_k6(threads=1):
    rows = sweep("complete", 6, threads=threads)
    histogram = {}
    ok_transfer = True
    ok_even = True
    for _, p in rows:
        ok_transfer = ok_transfer and mat_is_integral(mat_scale(3, p.lm_inv))
        factors = p.l_group.invariant_factors
        histogram[factors] = histogram.get(factors, 0) + 1
        ok_even = ok_even and count_even_invariant_factors(p.l_group) >= 4
    ok_hist = dict(sorted(histogram.items())) == refdata.K6_CRITICAL_GROUPS

    verify_half_n_integrality(6)
    sampled = 0
    for _, p in rows[::32]:
        kn_z2_subgroup(p, 6)
        sampled += 1

    lines = [
        _bullet(ok_transfer, "3 * LM^-1 is integral for all 1024 sign patterns"),
        _bullet(ok_hist, f"critical groups are exactly the 7 reference groups ({len(histogram)} found)"),
        _bullet(ok_even, ">= 4 even invariant factors for every pattern"),
        _bullet(sampled >= 32, f"structural Z_2^4 subgroup verified on {sampled} sampled patterns"),
    ]
    passed = ok_transfer and ok_hist and ok_even and sampled >= 32
    return passed, "\n".join(lines) if not passed else (
        f"1024 patterns: 3*LM^-1 integral, 7 reference critical groups, >=4 even factors everywhere, Z_2^4 verified structurally on {sampled} samples"
    )


# -- 9: randomized property suites ----------------------------------------------------------

def _random_m_matrix(rng, n):
    while True:
        grid = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j:
                    grid[i][j] = -rng.choice((0, 0, 1, 1, 2))
        for j in range(n):
            col = sum(-grid[i][j] for i in range(n) if i != j)
            grid[j][j] = col + rng.randint(1, 3)
        if is_m_matrix(grid):
            return MMatrix(grid)


def _stabilize_random_order(m, c, rng):
    c = tuple(c)
    while True:
        ready = [i for i in range(m.n) if c[i] >= m.m[i][i]]
        if not ready:
            return c
        c = m.fire(c, rng.choice(ready))


def _widened_z_superstable(m, s):
    """Box verdict recomputed with every bound raised by one."""
    if any(q < 0 for q in s):
        return False
    bound = [int(q) + 1 for q in mat_vec(m.inverse, s)]
    for z in product(*(range(b + 1) for b in bound)):
        if not any(z):
            continue
        fired = vec_sub(s, mat_vec(m.m, z))
        if all(q >= 0 for q in fired):
            return False
    return True


def _random_pair(rng, n, m):
    while True:
        grid = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        try:
            pair = ChipFiringPair(grid, m)
        except ValueError:
            continue
        if 0 < abs(pair.det_l) <= 40:
            return pair


def check_property_suites(threads=1, seed=PROPERTY_SEED):
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(1, 3)
        m = _random_m_matrix(rng, n)
        ss = m.superstables()
        assert len(ss) == abs(m.det)
        assert len({m.class_id(s) for s in ss}) == len(ss), "one superstable per class"
        for _ in range(3):
            c = tuple(rng.randint(0, m.m[i][i] + 2) for i in range(n))
            assert m.stabilize(c) == _stabilize_random_order(m, c, rng), "schedule independence"
        for _ in range(3):
            s = tuple(rng.randint(0, m.m[i][i] - 1) for i in range(n))
            assert m.is_z_superstable(s) == _widened_z_superstable(m, s), "box widening"

    for _ in range(50):
        n = rng.randint(1, 3)
        m = _random_m_matrix(rng, n)
        pair = _random_pair(rng, n, m)
        rows = pair.enumerate_pair_superstables()
        for r in rows:
            assert pair.to_preimage(r.config) == r.preimage
            assert pair.to_config(r.preimage) == r.config
        for _ in range(5):
            v = tuple(rng.randint(-6, 6) for _ in range(n))
            w = tuple(rng.randint(-3, 3) for _ in range(n))
            shifted = vec_sub(v, mat_vec(pair.l, w))
            assert frac_part(mat_vec(pair.ml_inv, v)) == frac_part(mat_vec(pair.ml_inv, shifted))
        crit_pre = {r.preimage for r in pair.enumerate_pair_criticals()}
        images = set()
        for r in rows:
            d = duality(pair, r.preimage)
            assert frac_part(d) == r.frac, "duality preserves fractional parts"
            assert duality_inverse(pair, d) == r.preimage
            images.add(d)
        assert images == crit_pre, "duality is a bijection onto the critical preimages"

    return True, f"100 random M-matrices and 50 random pairs passed every property check (seed {seed})"


# -- 10: documented erratum in the scaled transfer matrix -------------------------------------

def check_scaled_transfer_erratum(threads=1):
    pair = diamond_pair()
    scaled = mat_scale(abs(pair.det_l), pair.ml_inv)
    ok_matrix = scaled == refdata.SCALED_ML_INV
    computed = scaled[2][2]
    printed = refdata.SCALED_ML_INV_PRINTED_33
    ok_flag = computed == 12 and printed == 2 and computed != printed
    ok_gcd = gcd_entries(scaled) == refdata.SCALED_GCD
    lines = [
        _bullet(ok_matrix, "|L| ML^-1 = [[16,-16,-4],[-10,16,-2],[0,0,12]]"),
        _bullet(ok_flag, f"(3,3) entry: computed {computed}, reference prints {printed} -- documented erratum"),
        _bullet(ok_gcd, "gcd of entries = 2 either way, matching the zero-fracket size"),
    ]
    passed = ok_matrix and ok_flag and ok_gcd
    return passed, "\n".join(lines)


CRITERIA = (
    (1, "unsigned-baseline", check_unsigned_baseline),
    (2, "pair-enumeration", check_pair_enumeration),
    (3, "duality-map", check_duality_map),
    (4, "involution", check_involution),
    (5, "frackets", check_frackets),
    (6, "fixed-points", check_fixed_points),
    (7, "no-cmax-cycle", check_no_cmax),
    (8, "k6-theorems", check_k6),
    (9, "property-suites", check_property_suites),
    (10, "scaled-transfer-erratum", check_scaled_transfer_erratum),
)


def run_criterion(number, threads=1):
    for num, name, fn in CRITERIA:
        if num == number:
            start = time.perf_counter()
            try:
                passed, detail = fn(threads=threads)
            except Exception as exc:  # report, never crash the matrix
                passed, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(num, name, passed, detail, time.perf_counter() - start)
    raise ValueError(f"no criterion {number}")


def run_all(threads=1):
    return tuple(run_criterion(num, threads=threads) for num, _, _ in CRITERIA)
