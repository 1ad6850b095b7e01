"""Duality between superstable and critical configurations of a pair.

The map is built from an involution mu on the z-superstables of M:

    mu(s) = s                      if {L M^-1 (2s)} = {L M^-1 c_max}
    mu(s) = sstab_M(c_max - s)     otherwise

where c_max = diag(M) - 1 and sstab_M(v) is the unique z-superstable in
the M-class of v.  The identity case triggers exactly when c_max - 2s
lies in the lattice Z^n intersect M L^-1 Z^n, i.e. when s and c_max - s
share an M-class *and* the correction c_max - 2s transfers integrally.

On preimages the duality and its inverse are

    D(x)      = c_max - mu(floor(x)) + {x}
    D^-1(y)   = mu(c_max - floor(y)) + {y}

D sends superstable preimages to critical preimages bijectively; on
configurations it maps the superstables of (L, M) onto the criticals.
When L = M the transfer L M^-1 is the identity, so {2s} and {c_max} are
both zero: every s is an identity case and D(x) = c_max - x, the
classical complement.

Fixed points of mu are the s with {L M^-1 (2s)} = {L M^-1 c_max}.  Their
count is either 0 or |F0_M| * d where F0_M is the zero fracket of M for
the pair and d counts the elements of order <= 2 in K(M) / F0_M.  If the
class of c_max has odd order in that quotient the count is never zero;
if the quotient is cyclic and the order of c_max's class is even, the
count is nonzero iff |quotient| / ord is even.
"""

from __future__ import annotations

from . import lattices
from .linalg import floor_frac_split, frac_part, mat_vec, vec_add, vec_scale, vec_sub
from .pairs import ChipFiringPair


def _transfer_frac(pair: ChipFiringPair, v):
    return frac_part(mat_vec(pair.lm_inv, v))


def mu_case(pair: ChipFiringPair, s):
    """'identity' or 'dual', deciding which branch of mu applies to s."""
    if not pair.m.is_z_superstable(s):
        raise ValueError("mu is only defined on z-superstable configurations")
    same = _transfer_frac(pair, vec_scale(2, s)) == _transfer_frac(pair, pair.m.c_max)
    return "identity" if same else "dual"


def involution_mu(pair: ChipFiringPair, s):
    if mu_case(pair, s) == "identity":
        return tuple(s)
    return pair.m.sstab_of_class(vec_sub(pair.m.c_max, s))


def duality(pair: ChipFiringPair, x):
    """Send a superstable preimage x to the matching critical preimage."""
    fl, fr = floor_frac_split(x)
    if not pair.rplus_member(x) or pair.m.sstab_of_class(fl) != fl:
        raise ValueError("not a superstable preimage")
    return vec_add(vec_sub(pair.m.c_max, involution_mu(pair, fl)), fr)


def duality_inverse(pair: ChipFiringPair, y):
    """Send a critical preimage y back to its superstable preimage."""
    fl, fr = floor_frac_split(y)
    if not pair.rplus_member(y) or pair.m.crit_of_class(fl) != fl:
        raise ValueError("not a critical preimage")
    return vec_add(involution_mu(pair, vec_sub(pair.m.c_max, fl)), fr)


def duality_table(pair: ChipFiringPair, cap=lattices.DEFAULT_ENUMERATION_CAP):
    """One row per superstable configuration, ascending lex, giving the
    dual critical on both the configuration and preimage sides."""
    rows = []
    for r in pair.enumerate_pair_superstables(cap=cap):
        dual_pre = duality(pair, r.preimage)
        dual_cfg = mat_vec(pair.lm_inv, dual_pre)
        back = duality_inverse(pair, dual_pre)
        assert back == r.preimage
        rows.append(
            {
                "config": r.config,
                "preimage": r.preimage,
                "mu_case": mu_case(pair, r.floor),
                "dual_config": dual_cfg,
                "dual_preimage": dual_pre,
            }
        )
    crit_cfgs = {row.config for row in pair.enumerate_pair_criticals(cap=cap)}
    assert {row["dual_config"] for row in rows} == crit_cfgs
    return rows


def fixed_points(pair: ChipFiringPair):
    """The z-superstables of M fixed by mu, in lex order."""
    return tuple(s for s in pair.m.superstables() if mu_case(pair, s) == "identity")


def predicted_fixed_point_count(pair: ChipFiringPair):
    """|F0_M| * #{order <= 2 in K(M)/F0_M}; the true count is this or 0."""
    lam = lattices.lattice_intersect_with_Zn(pair.ml_inv)
    quotient = lattices.quotient_group(lam)
    f0_size = abs(pair.det_m) // quotient.order
    assert abs(pair.det_m) % quotient.order == 0
    return f0_size * lattices.count_order_le2(quotient)


def nonzero_criteria(pair: ChipFiringPair):
    """Structural tests telling whether the fixed-point set must be
    nonempty.

    odd_order_guarantee: the class of c_max in K(M)/F0_M has odd order,
    forcing at least one fixed point.  cyclic_even_criterion: when that
    quotient is cyclic and the order is even, nonemptiness is equivalent
    to |quotient| / ord being even; None when the test does not apply.
    """
    lam = lattices.lattice_intersect_with_Zn(pair.ml_inv)
    quotient = lattices.quotient_group(lam)
    ord_cmax = lattices.element_order(lam, pair.m.c_max)
    assert quotient.order % ord_cmax == 0
    crit = None
    if quotient.is_cyclic and ord_cmax % 2 == 0:
        crit = (quotient.order // ord_cmax) % 2 == 0
    return {
        "quotient": quotient,
        "cmax_order": ord_cmax,
        "odd_order_guarantee": ord_cmax % 2 == 1,
        "cyclic_even_criterion": crit,
    }
