"""Skew polynomial arithmetic, divisions, gcrd/lclm, bounds."""

import random

import numpy as np
import pytest

from skewlab import linalg
from skewlab.fields import AutMap, FunctionFieldCtx
from skewlab.polyring import Poly
from skewlab.skewpoly import (
    CentralPoly,
    SkewPoly,
    bound,
    bound_oracle,
    central_is_irreducible,
    central_to_literal,
    companion_and_af,
    gcrd,
    gcrd_extended,
    is_irreducible,
    is_two_sided,
    lclm,
    left_divides,
    left_divmod,
    norm_identity_check,
    power_reductions,
    right_divides,
    right_divmod,
    right_mod,
    skew_from_literal,
    skew_to_literal,
)

from helpers import finite_ctx, random_irreducible, random_skew


def test_defining_relation_f4():
    ctx = finite_ctx(2, 2)
    x = SkewPoly.x(ctx)
    w = SkewPoly.constant(ctx, ctx.gen)
    assert skew_to_literal(x * w) == "(w+1)*x"


def test_schoolbook_product_f4():
    ctx = finite_ctx(2, 2)
    x = SkewPoly.x(ctx)
    one = SkewPoly.one(ctx)
    w = SkewPoly.constant(ctx, ctx.gen)
    assert skew_to_literal((x + one) * (x + w)) == "x^2+w*x+w"


def test_mul_identity_and_degree():
    rng = random.Random(2)
    ctx = finite_ctx(3, 2)
    one = SkewPoly.one(ctx)
    for _ in range(20):
        f = random_skew(ctx, 4, rng, nonzero=True)
        g = random_skew(ctx, 4, rng, nonzero=True)
        assert f * one == f
        assert (f * g).degree == f.degree + g.degree


def test_ring_axioms_random():
    rng = random.Random(3)
    for ctx in (finite_ctx(2, 3), FunctionFieldCtx(3)):
        for _ in range(12):
            f = random_skew(ctx, 3, rng)
            g = random_skew(ctx, 3, rng)
            h = random_skew(ctx, 3, rng)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert (f + g) * h == f * h + g * h


def test_right_divmod_examples():
    ctx = finite_ctx(2, 2)
    x = SkewPoly.x(ctx)
    one = SkewPoly.one(ctx)
    q, r = right_divmod(x * x + one, x + one)
    assert skew_to_literal(q) == "x+1" and not r
    # deg f < deg g
    q2, r2 = right_divmod(one, x + one)
    assert not q2 and r2 == one
    with pytest.raises(ZeroDivisionError):
        right_divmod(x, SkewPoly.zero(ctx))


def test_division_remultiplication_random():
    rng = random.Random(4)
    for ctx in (finite_ctx(2, 3), finite_ctx(3, 4), FunctionFieldCtx(3)):
        for _ in range(15):
            f = random_skew(ctx, 4, rng)
            g = random_skew(ctx, 4, rng, nonzero=True)
            q, r = right_divmod(f, g)
            assert q * g + r == f and r.degree < g.degree
            ql, rl = left_divmod(f, g)
            assert g * ql + rl == f and rl.degree < g.degree


def test_norm_divisor_of_central_f8():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    f83 = SkewPoly(ctx, (ctx.one, ctx.zero, ctx.zero, ctx.one))  # x^3 + 1
    fw = x - SkewPoly.constant(ctx, ctx.gen)
    q, r = right_divmod(f83, fw)
    assert not r and q * fw == f83


def test_left_division_of_central_funcfield():
    ff = FunctionFieldCtx(3)
    x = SkewPoly.x(ff)
    g = x * x + SkewPoly.constant(ff, ff.one / ff.t)
    G = bound(g).F.to_skew()
    assert not left_divmod(G, g)[1]
    assert not right_divmod(G, g)[1]


def test_gcrd_examples():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    one = SkewPoly.one(ctx)
    f83 = SkewPoly(ctx, (ctx.one, ctx.zero, ctx.zero, ctx.one))
    assert gcrd(x + one, f83) == x + one
    # (x^2+x+1)(x+1) = x^3+1 in characteristic 2
    assert (x * x + x + one) * (x + one) == f83
    assert gcrd(x, f83) == one
    g = random_skew(ctx, 3, random.Random(0), nonzero=True)
    assert gcrd(g, SkewPoly.zero(ctx)) == g.monic()
    with pytest.raises(ValueError):
        gcrd(SkewPoly.zero(ctx), SkewPoly.zero(ctx))


def test_gcrd_contracts_random():
    rng = random.Random(6)
    for ctx in (finite_ctx(3, 2), FunctionFieldCtx(3)):
        for _ in range(12):
            f = random_skew(ctx, 4, rng, nonzero=True)
            g = random_skew(ctx, 4, rng, nonzero=True)
            d = gcrd(f, g)
            assert right_divides(d, f) and right_divides(d, g)
            assert d == gcrd(g, right_mod(f, g))
            dd, u, v = gcrd_extended(f, g)
            assert dd == d and u * f + v * g == d


def test_lclm_examples_and_contracts():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    one = SkewPoly.one(ctx)
    rng = random.Random(8)
    f = random_skew(ctx, 3, rng, nonzero=True)
    assert lclm(f, f) == f.monic()
    assert lclm(f, one) == f.monic()
    w = ctx.gen
    l = lclm(x - SkewPoly.constant(ctx, w), x - SkewPoly.constant(ctx, w * w))
    assert l.degree == 2 and l.is_monic()
    assert right_divides(x - SkewPoly.constant(ctx, w), l)
    assert right_divides(x - SkewPoly.constant(ctx, w * w), l)
    for _ in range(10):
        f = random_skew(ctx, 3, rng, nonzero=True)
        g = random_skew(ctx, 3, rng, nonzero=True)
        m = lclm(f, g)
        assert right_divides(f, m) and right_divides(g, m)
        assert m.degree == f.degree + g.degree - gcrd(f, g).degree


def test_two_sided():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    one = SkewPoly.one(ctx)
    assert is_two_sided(SkewPoly(ctx, (ctx.one, ctx.zero, ctx.zero, ctx.one)))
    assert not is_two_sided(x + one)
    assert is_two_sided(SkewPoly.zero(ctx))
    assert is_two_sided(x)
    # d * G(x^n) * x^m shape
    w = ctx.gen
    G = SkewPoly(ctx, (ctx.one, ctx.zero, ctx.zero, ctx.one))
    shaped = SkewPoly.constant(ctx, w) * G * x
    assert is_two_sided(shaped)
    ff = FunctionFieldCtx(3)
    f0 = ff.elem((1, 0, 1), (1, 1, 1))
    xf = SkewPoly.x(ff)
    F_skew = bound(xf * xf + SkewPoly.constant(ff, f0)).F.to_skew()
    assert is_two_sided(F_skew)


def test_companion_and_af_examples():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    fw = x - SkewPoly.constant(ctx, ctx.gen)
    sd = companion_and_af(fw)
    assert sd.companion[0][0] == ctx.gen  # -(-w) in characteristic 2
    assert sd.a_matrix[0][0] == ctx.one
    assert sd.char_poly == Poly(ctx, (ctx.minus_one, ctx.one))
    f1 = x - SkewPoly.one(ctx)
    assert companion_and_af(f1).a_matrix[0][0] == ctx.one
    with pytest.raises(ValueError):
        companion_and_af(SkewPoly.constant(ctx, ctx.gen) * x)


def test_companion_funcfield_af_is_power_product():
    # A_f = (C_f C_f^sigma)^r = f0^r I, char = (y + f0^r)^2
    ff = FunctionFieldCtx(3)
    f0 = ff.elem((1, 0, 1), (1, 1, 1))
    x = SkewPoly.x(ff)
    sd = companion_and_af(x * x + SkewPoly.constant(ff, f0))
    v = f0**3
    assert sd.a_matrix[0][0] == v and sd.a_matrix[1][1] == v
    assert not sd.a_matrix[0][1] and not sd.a_matrix[1][0]
    Fy = Poly(ff, (v, ff.one))
    assert sd.char_poly == Fy * Fy
    assert sd.min_poly == Fy


def test_bound_examples():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    rep = bound(x - SkewPoly.constant(ctx, ctx.gen))
    assert central_to_literal(rep.F) == "y+1"
    assert rep.ell == 1 and rep.m == 3

    ff = FunctionFieldCtx(3)
    f0 = ff.elem((1, 0, 1), (1, 1, 1))
    xf = SkewPoly.x(ff)
    rep_f = bound(xf * xf + SkewPoly.constant(ff, f0))
    assert rep_f.F.poly.coeffs == (f0**3, ff.one)
    assert rep_f.ell == 2 and rep_f.m == 3
    rep_g = bound(xf * xf + SkewPoly.constant(ff, ff.one / ff.t))
    g1 = ff.elem((1, 0, 0, 0, 0, 0, 1), (0, 0, 0, 1))
    assert rep_g.F.poly.coeffs == (ff.one, g1, ff.one)
    assert rep_g.ell == 1 and rep_g.m == 6


def test_bound_of_reducible_polynomial():
    # the minimal central multiple exists for any monic f with nonzero
    # constant; for a reducible f the char poly need not be a clean power
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    w = ctx.gen
    f = (x - SkewPoly.constant(ctx, w)) * (x - SkewPoly.constant(ctx, w * w))
    rep = bound(f)
    assert central_to_literal(rep.F) == "y+1"
    assert rep.F == bound_oracle(f)
    assert rep.ell is None and rep.m is None
    assert not is_irreducible(f)


def test_central_poly_requires_K_coefficients():
    ctx = finite_ctx(2, 3)
    from skewlab.fields import FieldError

    with pytest.raises(FieldError):
        CentralPoly.from_coeffs(ctx, [ctx.gen, ctx.one])


def test_bound_preconditions():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    with pytest.raises(ValueError):
        bound(x * x + x)  # zero constant coefficient
    with pytest.raises(ValueError):
        bound(SkewPoly.constant(ctx, ctx.gen) * x + SkewPoly.one(ctx))


def test_bound_against_oracle_random():
    rng = random.Random(10)
    for p, n in ((2, 3), (3, 4)):
        ctx = finite_ctx(p, n)
        for _ in range(15):
            deg = rng.randrange(1, 4)
            f = random_irreducible(ctx, deg, rng)
            rep = bound(f)
            assert rep.F == bound_oracle(f)
            assert rep.F.s == f.degree and rep.ell == 1
            assert central_is_irreducible(rep.F)
            F_skew = rep.F.to_skew()
            assert right_divides(f, F_skew) and left_divides(f, F_skew)
            assert F_skew.degree <= ctx.n * f.degree


def test_min_poly_over_L_equals_over_K():
    # regular-representation oracle over the prime field
    rng = random.Random(12)
    ctx = finite_ctx(3, 4)
    for _ in range(6):
        f = random_irreducible(ctx, rng.randrange(1, 4), rng)
        sd = companion_and_af(f)
        h = f.degree
        big = np.zeros((h * ctx.dim, h * ctx.dim), dtype=np.int64)
        for i in range(h):
            for j in range(h):
                big[
                    i * ctx.dim : (i + 1) * ctx.dim, j * ctx.dim : (j + 1) * ctx.dim
                ] = ctx.mult_matrix(sd.a_matrix[i][j])
        # Krylov over F_p on the regular representation
        power = np.eye(h * ctx.dim, dtype=np.int64)
        seen = [power.reshape(-1) % ctx.p]
        coeffs = None
        while coeffs is None:
            power = (power @ big) % ctx.p
            vec = power.reshape(-1)
            mat = np.array(seen, dtype=np.int64).T
            sol = linalg.np_solve(mat, vec, ctx.p)
            if sol is not None:
                coeffs = [int(c) for c in sol]
            else:
                seen.append(vec)
        oracle = Poly(
            ctx, [-ctx.from_int(c) for c in coeffs] + [ctx.one]
        )
        assert oracle == sd.min_poly


def test_composite_divisor_norm_identity():
    # g = lclm of two degree-1 divisors of x^3 - 1 is a degree-2 monic
    # divisor; its constant coefficient satisfies the h = 2 norm identity
    from skewlab.fields import AutMap, norm_to_fixed

    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    w = ctx.gen
    F_skew = SkewPoly(ctx, (ctx.one, ctx.zero, ctx.zero, ctx.one))
    g = lclm(x - SkewPoly.constant(ctx, w), x - SkewPoly.constant(ctx, w * w))
    assert g.degree == 2 and right_divides(g, F_skew)
    sigma = AutMap.sigma_power(ctx, 1)
    h = 2
    exponent = h * (ctx.n - 1)
    sign = ctx.minus_one if exponent % 2 else ctx.one
    assert norm_to_fixed(g.constant_coeff, sigma) == sign * ctx.one**h


def test_divisor_degrees_are_multiples_of_s():
    # with s = 2 every divisor of F(x^n) has even degree: no monic linear
    # right divisors exist
    ctx = finite_ctx(3, 4)
    from helpers import irreducible_quadratic

    F_skew = irreducible_quadratic(ctx).to_skew()
    x = SkewPoly.x(ctx)
    for i in range(ctx.order):
        cand = x + SkewPoly.constant(ctx, ctx.elem_from_index(i))
        assert not right_divides(cand, F_skew)


def test_norm_identity():
    ctx = finite_ctx(2, 3)
    x = SkewPoly.x(ctx)
    fw = x - SkewPoly.constant(ctx, ctx.gen)
    res = norm_identity_check(fw, bound(fw))
    assert res.holds and res.irreducibility_checked
    f1 = x - SkewPoly.one(ctx)
    assert norm_identity_check(f1, bound(f1)).holds
    ff = FunctionFieldCtx(3)
    f0 = ff.elem((1, 0, 1), (1, 1, 1))
    f_ff = SkewPoly.x(ff) * SkewPoly.x(ff) + SkewPoly.constant(ff, f0)
    res_ff = norm_identity_check(f_ff, bound(f_ff))
    assert res_ff.holds and not res_ff.irreducibility_checked


def test_is_irreducible_against_divisor_search():
    rng = random.Random(14)

    def reducible_by_search(f):
        ctx = f.ctx
        for d in range(1, f.degree):
            for idx in range(ctx.order**d):
                digits = []
                v = idx
                for _ in range(d):
                    digits.append(v % ctx.order)
                    v //= ctx.order
                cand = SkewPoly(
                    ctx, [ctx.elem_from_index(dd) for dd in digits] + [ctx.one]
                )
                if right_divides(cand, f):
                    return True
        return False

    ctx = finite_ctx(2, 3)
    for _ in range(25):
        f = random_skew(ctx, 4, rng, monic=True, nonzero=True)
        if f.degree < 1:
            continue
        assert is_irreducible(f) == (not reducible_by_search(f))
    ctx34 = finite_ctx(3, 4)
    for _ in range(10):
        f = random_skew(ctx34, 2, rng, monic=True, nonzero=True)
        if f.degree < 1:
            continue
        assert is_irreducible(f) == (not reducible_by_search(f))


def test_power_reductions_match_divisions():
    rng = random.Random(15)
    ctx = finite_ctx(3, 2)
    f = random_skew(ctx, 3, rng, monic=True, nonzero=True)
    while f.degree < 1:
        f = random_skew(ctx, 3, rng, monic=True, nonzero=True)
    reds = power_reductions(f, 6)
    for i, red in enumerate(reds):
        assert red == right_mod(SkewPoly.monomial(ctx, ctx.one, i), f)


def test_skew_literals():
    ctx = finite_ctx(2, 3)
    rng = random.Random(16)
    for _ in range(15):
        f = random_skew(ctx, 4, rng)
        assert skew_from_literal(ctx, skew_to_literal(f)) == f
    ff = FunctionFieldCtx(3)
    lit = "x^2+(t^2+1)/(t^2+t+1)"
    f = skew_from_literal(ff, lit)
    assert skew_to_literal(f) == lit
    assert skew_from_literal(ctx, "x^3+(w+1)*x+1") == SkewPoly(
        ctx, (ctx.one, ctx.gen + ctx.one, ctx.zero, ctx.one)
    )
