"""The quotient R_F = R/RF(x^n): canonical reduction, rank, eigenrings,
and (finite case) explicit matrix images under the canonical isomorphism
R_F = M_m(E(f)) for a distinguished irreducible right divisor f of F(x^n).
"""

import numpy as np

from . import linalg
from .fields import AutMap, FieldError, FiniteFieldCtx, norm_to_fixed
from .skewpoly import (
    CentralPoly,
    SkewPoly,
    bound,
    central_is_irreducible,
    gcrd,
    power_reductions,
    right_divides,
    right_mod,
)


class QuotCtx:
    """R_F with its distinguished monic irreducible right divisor f.

    Over finite fields f is found by enumerating monic degree-s polynomials
    in lexicographic coefficient order; over function fields the catalogued
    (paper-certified) f must be supplied with irreducible_certified=True.
    """

    def __init__(self, ctx, F, f=None, irreducible_certified=False):
        if not isinstance(F, CentralPoly):
            raise TypeError("F must be a CentralPoly")
        if not F.is_monic() or F.s < 1:
            raise ValueError("F must be monic of degree >= 1")
        if not F.F0:
            raise ValueError("F must have nonzero constant coefficient (F != y)")
        self.ctx = ctx
        self.F = F
        self.s = F.s
        self.F_skew = F.to_skew()
        if isinstance(ctx, FiniteFieldCtx):
            if not central_is_irreducible(F):
                raise ValueError("F(y) is not irreducible over K")
            if f is None:
                f = self._find_divisor()
        else:
            if f is None:
                raise ValueError("function-field contexts need the catalogued f")
            if not irreducible_certified:
                raise ValueError(
                    "function-field irreducibility is not decided here; pass "
                    "irreducible_certified=True for catalogued polynomials"
                )
        if not f.is_monic() or not right_divides(f, self.F_skew):
            raise ValueError("f must be a monic right divisor of F(x^n)")
        rep = bound(f)
        if rep.F != F:
            raise ValueError("the bound of f is not F")
        if rep.ell is None:
            raise ValueError("f does not behave like an irreducible divisor")
        self.f = f
        self.ell = rep.ell
        self.m = rep.m
        if self.s * self.ell != f.degree or self.ell * self.m != ctx.n:
            raise RuntimeError("inconsistent (s, ell, m) for the divisor f")
        self._eigen = None
        self._coord_inv = None

    def _find_divisor(self):
        """First monic degree-s right divisor of F(x^n), in lexicographic
        coefficient order; the norm identity on the constant coefficient is
        a necessary condition and is used as a cheap filter."""
        ctx = self.ctx
        s = self.s
        sigma = AutMap.sigma_power(ctx, 1)
        exponent = s * (ctx.n - 1)
        sign = ctx.minus_one if exponent % 2 else ctx.one
        target = sign * self.F.F0
        order = ctx.order
        for idx in range(order**s):
            digits = []
            v = idx
            for _ in range(s):
                digits.append(v % order)
                v //= order
            digits.reverse()
            coeffs = [ctx.elem_from_index(d) for d in digits]
            if not coeffs[0]:
                continue
            if norm_to_fixed(coeffs[0], sigma) != target:
                continue
            f = SkewPoly(ctx, coeffs + [ctx.one])
            if right_divides(f, self.F_skew):
                return f
        raise RuntimeError("no monic degree-s right divisor found")

    # ------------------------------------------------------------- basics --

    def reduce(self, a):
        """Canonical coset representative mod_r F(x^n)."""
        if a.ctx is not self.ctx:
            raise FieldError("context mismatch")
        return QuotElem(self, right_mod(a, self.F_skew))

    def elem(self, a):
        return self.reduce(a)

    @property
    def codeword_space_dim(self):
        return self.ctx.n * self.s


class QuotElem:
    """Residue class in R_F, held by its canonical representative."""

    __slots__ = ("qctx", "rep")

    def __init__(self, qctx, rep):
        self.qctx = qctx
        self.rep = rep

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        return (
            isinstance(other, QuotElem)
            and self.qctx is other.qctx
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash(self.rep)

    def __add__(self, other):
        return QuotElem(self.qctx, self.rep + other.rep)

    def __sub__(self, other):
        return QuotElem(self.qctx, self.rep - other.rep)

    def __neg__(self):
        return QuotElem(self.qctx, -self.rep)

    def __mul__(self, other):
        return QuotElem(
            self.qctx, right_mod(self.rep * other.rep, self.qctx.F_skew)
        )

    def __repr__(self):
        from .skewpoly import skew_to_literal

        return f"QuotElem({skew_to_literal(self.rep)!r})"


def rank(a):
    """rk(a) = m - deg(gcrd(a, F(x^n))) / (s*ell); rank(0) = 0 by convention."""
    if not a.rep:
        return 0
    q = a.qctx
    g = gcrd(a.rep, q.F_skew)
    d = g.degree
    if d % (q.s * q.ell):
        raise RuntimeError("gcrd degree is not a multiple of s*ell")
    return q.m - d // (q.s * q.ell)


class EigenringBasis:
    """K-basis of E(f) = {g : deg g < deg f, f*g = 0 mod_r f}."""

    __slots__ = ("qctx", "basis", "dimension")

    def __init__(self, qctx, basis):
        self.qctx = qctx
        self.basis = basis
        self.dimension = len(basis)


def eigenring(qctx):
    """Compute a K-basis of the eigenring of the distinguished f."""
    if isinstance(qctx.ctx, FiniteFieldCtx):
        basis = _eigenring_finite(qctx)
    else:
        basis = _eigenring_funcfield(qctx)
    return EigenringBasis(qctx, basis)


def _eigenring_finite(qctx):
    ctx = qctx.ctx
    f = qctx.f
    df = f.degree
    dim = ctx.dim
    p = ctx.p

    def vec(sp):
        out = []
        for slot in range(df):
            out.extend(sp[slot].coeffs)
        return out

    cols = []
    units = []
    for i in range(df):
        for b in range(dim):
            unit = SkewPoly.monomial(
                ctx, ctx.elem(tuple(1 if k == b else 0 for k in range(dim))), i
            )
            units.append(unit)
            cols.append(vec(right_mod(f * unit, f)))
    kernel = linalg.np_kernel(np.array(cols, dtype=np.int64).T, p, ncols=len(cols))
    members = []
    for row in kernel:
        g = SkewPoly.zero(ctx)
        for c, unit in zip(row, units):
            if c:
                g = g + unit.scale_left(ctx.from_int(int(c)))
        members.append(g)
    # extract a K-basis from the F_p-kernel: K acts by central left scaling
    e = len(ctx.k_basis)
    if e == 1:
        return members
    selected = []
    span = np.zeros((0, df * dim), dtype=np.int64)
    for g in members:
        gv = np.array(vec(g), dtype=np.int64)
        if linalg.np_rank(np.vstack([span, gv]), p) == linalg.np_rank(span, p):
            continue
        selected.append(g)
        scaled = [vec(g.scale_left(b)) for b in ctx.k_basis]
        span = np.vstack([span] + [np.array(v, dtype=np.int64) for v in scaled])
    if len(selected) * e != len(members):
        raise RuntimeError("K-basis extraction failed for the eigenring")
    return selected


def _eigenring_funcfield(qctx):
    ctx = qctx.ctx
    f = qctx.f
    df = f.degree
    nb = ctx.n  # K-dimension of L
    K0 = ctx.K0

    basis_elems = []
    wpow = ctx.one
    for i in range(ctx.r):
        basis_elems.append(wpow)
        basis_elems.append(wpow * ctx.t)
        wpow = wpow * ctx.w

    def vec(sp):
        out = []
        for slot in range(df):
            out.extend(ctx.coords_over_K(sp[slot]))
        return out

    cols = []
    units = []
    for i in range(df):
        for b in basis_elems:
            unit = SkewPoly.monomial(ctx, b, i)
            units.append(unit)
            cols.append(vec(right_mod(f * unit, f)))
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(df * nb)]
    kernel = linalg.kernel_basis(rows, len(cols), K0)
    members = []
    for kv in kernel:
        g = SkewPoly.zero(ctx)
        for c, unit in zip(kv, units):
            if c:
                g = g + unit.scale_left(ctx.embed_K0(c))
        members.append(g)
    return members


# ------------------------------------------------- eigenring as a field ----


class EigenElem:
    """Element of E(f) (finite case), with the mod-f product; a field of
    order q^s, inverses via the q^s - 2 power."""

    __slots__ = ("qctx", "rep")

    def __init__(self, qctx, rep):
        self.qctx = qctx
        self.rep = rep

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        return self.qctx is other.qctx and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __add__(self, other):
        return EigenElem(self.qctx, self.rep + other.rep)

    def __sub__(self, other):
        return EigenElem(self.qctx, self.rep - other.rep)

    def __neg__(self):
        return EigenElem(self.qctx, -self.rep)

    def __mul__(self, other):
        return EigenElem(self.qctx, right_mod(self.rep * other.rep, self.qctx.f))

    def inverse(self):
        if not self.rep:
            raise ZeroDivisionError("zero eigenring element")
        q = self.qctx.ctx.q
        e = q**self.qctx.s - 2
        result = EigenElem(self.qctx, SkewPoly.one(self.qctx.ctx))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        return self * other.inverse()


def _residue_candidates(qctx):
    """Basis candidates for R/Rf over E(f): the x-powers first (preferred,
    and usually enough), then every residue in coefficient enumeration
    order; the x-powers alone can be dependent over E(f)."""
    ctx = qctx.ctx
    f = qctx.f
    df = f.degree
    for xp in power_reductions(f, qctx.m - 1):
        yield xp
    order = ctx.order
    for idx in range(1, order**df):
        digits = []
        v = idx
        for _ in range(df):
            digits.append(v % order)
            v //= order
        digits.reverse()
        yield SkewPoly(ctx, [ctx.elem_from_index(d) for d in digits])


def _coord_data(qctx):
    """A deterministic E(f)-basis of R/Rf together with the inverse of the
    F_p change-of-basis matrix (columns span v * e_j * k_b)."""
    if qctx._coord_inv is not None:
        return qctx._coord_inv
    ctx = qctx.ctx
    if not isinstance(ctx, FiniteFieldCtx):
        raise FieldError("matrix images are only available over finite fields")
    if qctx._eigen is None:
        qctx._eigen = eigenring(qctx)
    ebasis = qctx._eigen.basis
    f = qctx.f
    df = f.degree
    dim = ctx.dim
    full = df * dim

    def vec(sp):
        out = []
        for slot in range(df):
            out.extend(sp[slot].coeffs)
        return out

    per = len(ebasis) * len(ctx.k_basis)
    chosen = []
    cols = []
    rank_so_far = 0
    for cand in _residue_candidates(qctx):
        new_cols = []
        for ej in ebasis:
            base = right_mod(cand * ej, f)
            for kb in ctx.k_basis:
                new_cols.append(vec(base.scale_left(kb)))
        trial = np.array(cols + new_cols, dtype=np.int64)
        r = linalg.np_rank(trial, ctx.p)
        if r == rank_so_far + per:
            chosen.append(cand)
            cols = cols + new_cols
            rank_so_far = r
        if len(chosen) == qctx.m:
            break
    if len(chosen) < qctx.m or rank_so_far != full:
        raise RuntimeError("could not build an E(f)-basis of R/Rf")
    mat = np.array(cols, dtype=np.int64).T
    inv = linalg.np_inv(mat, ctx.p)
    qctx._coord_inv = (inv, chosen)
    return qctx._coord_inv


def matrix_image(a):
    """The m x m matrix over E(f) of left multiplication by a on R/Rf,
    with respect to the deterministic basis of _coord_data (the x-powers
    whenever they are independent).  Finite contexts only."""
    qctx = a.qctx
    ctx = qctx.ctx
    inv, basis = _coord_data(qctx)
    ebasis = qctx._eigen.basis
    ne = len(ebasis)
    e = len(ctx.k_basis)
    f = qctx.f
    df = f.degree

    def vec(sp):
        out = []
        for slot in range(df):
            out.extend(sp[slot].coeffs)
        return out

    m = qctx.m
    entries = [[None] * m for _ in range(m)]
    for col in range(m):
        img = right_mod(a.rep * basis[col], f)
        coords = (inv @ np.array(vec(img), dtype=np.int64)) % ctx.p
        for row in range(m):
            acc = SkewPoly.zero(ctx)
            for j in range(ne):
                for b in range(e):
                    c = int(coords[(row * ne + j) * e + b])
                    if c:
                        scal = ctx.from_int(c) * ctx.k_basis[b]
                        acc = acc + ebasis[j].scale_left(scal)
            entries[row][col] = EigenElem(qctx, acc)
    return entries


def matrix_rank(entries):
    """Row rank of a matrix over E(f) by Gaussian elimination."""
    if not entries:
        return 0
    rows = [list(r) for r in entries]
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [x - fac * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def linearized_rank(a):
    """Rank of the linearised map beta -> sum a_i beta^(q^i) on L, for the
    classical F = y - 1, s = 1 identification; cross-check for rank()."""
    qctx = a.qctx
    ctx = qctx.ctx
    if not isinstance(ctx, FiniteFieldCtx) or qctx.s != 1:
        raise FieldError("linearised rank needs a finite context with s = 1")
    cols = []
    for b in range(ctx.dim):
        basis = ctx.elem(tuple(1 if k == b else 0 for k in range(ctx.dim)))
        img = ctx.zero
        for i, c in enumerate(a.rep.coeffs):
            if c:
                img = img + c * ctx.sigma_pow(basis, i)
        cols.append(img.coeffs)
    mat = np.array(cols, dtype=np.int64).T
    fp_rank = linalg.np_rank(mat, ctx.p)
    if fp_rank % ctx.e:
        raise RuntimeError("linearised map rank is not a K-dimension")
    return fp_rank // ctx.e
