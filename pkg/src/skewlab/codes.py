"""The two code families and their verification machinery.

S-family: words a_0 + a_1 x + ... + a_{skl-1} x^(skl-1) + eta a_0^rho x^skl.
D-family: words a_0' + sum a_i x^i + gamma a_0'' x^skl with a_0', a_0'' in the
index-2 subfield L'.  Validation evaluates the exact norm conditions;
verify_mrd scans ranks through the quotient; idealisers, centralisers and
centres are computed by prime-field linear systems on spanning sets; the
newness report replays the known-family parameter comparison.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linalg
from .fields import (
    AutMap,
    FieldError,
    FiniteFieldCtx,
    elem_from_literal,
    field_from_spec,
    is_square_in_base,
    norm_to_fixed,
)
from .quotient import QuotCtx, QuotElem, rank
from .skewpoly import CentralPoly, SkewPoly, gcrd_extended, right_mod

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- specs ----


class SCodeSpec:
    """S_{n, s*ell, k}(eta, rho, F) inside R_F."""

    family = "S"

    def __init__(self, qctx, k, eta, rho):
        if not 1 <= k < qctx.m:
            raise ValueError("k must satisfy 1 <= k < m")
        self.qctx = qctx
        self.k = k
        self.eta = eta
        self.rho = rho
        self.skl = qctx.s * qctx.ell * k
        ctx = qctx.ctx
        if isinstance(ctx, FiniteFieldCtx):
            self._kprime_exp = math.gcd(rho.exp, ctx.e)
        else:
            self._kprime_exp = None  # K' = K: rho is a sigma power

    def norm_L_to_Kprime(self, a):
        ctx = self.qctx.ctx
        if isinstance(ctx, FiniteFieldCtx):
            return norm_to_fixed(a, AutMap.frobenius_power(ctx, self._kprime_exp))
        return norm_to_fixed(a, AutMap.sigma_power(ctx, 1))

    def norm_K_to_Kprime(self, c):
        ctx = self.qctx.ctx
        if isinstance(ctx, FiniteFieldCtx):
            eprime = self._kprime_exp
            acc = c
            cur = c
            for _ in range(ctx.e // eprime - 1):
                cur = ctx.frobenius(cur, eprime)
                acc = acc * cur
            return acc
        return c

    def kprime_order(self):
        ctx = self.qctx.ctx
        if isinstance(ctx, FiniteFieldCtx):
            return ctx.p**self._kprime_exp
        return None


class DCodeSpec:
    """D_{n, s*ell, k}(gamma, F) inside R_F; needs n = 2t even."""

    family = "D"

    def __init__(self, qctx, k, gamma):
        if qctx.ctx.n % 2:
            raise ValueError("the D-family needs even n")
        if not 1 <= k < qctx.m:
            raise ValueError("k must satisfy 1 <= k < m")
        self.qctx = qctx
        self.k = k
        self.gamma = gamma
        self.t = qctx.ctx.n // 2
        self.skl = qctx.s * qctx.ell * k
        self._lp_basis = (
            self.lprime_basis() if isinstance(qctx.ctx, FiniteFieldCtx) else None
        )

    def in_Lprime(self, a):
        ctx = self.qctx.ctx
        return ctx.sigma_pow(a, self.t) == a

    def lprime_basis(self):
        """F_p-basis of L' = Fix(sigma^t) (finite contexts)."""
        ctx = self.qctx.ctx
        if not isinstance(ctx, FiniteFieldCtx):
            raise FieldError("L' enumeration needs a finite context")
        mat = ctx._aut_matrix((ctx._sig * self.t) % ctx.dim)
        eye = np.eye(ctx.dim, dtype=np.int64)
        ker = linalg.np_kernel((mat - eye) % ctx.p, ctx.p)
        return [ctx.elem(tuple(int(c) for c in row)) for row in ker]


def validate_s(spec):
    """N_{L/K'}(eta) * N_{K/K'}((-1)^(s k l (n-1)) F_0^(k l)) != 1, exactly."""
    qctx = spec.qctx
    ctx = qctx.ctx
    exponent = spec.skl * (ctx.n - 1)
    sign = ctx.minus_one if exponent % 2 else ctx.one
    inner = sign * qctx.F.F0 ** (spec.k * qctx.ell)
    value = spec.norm_L_to_Kprime(spec.eta) * spec.norm_K_to_Kprime(inner)
    return value != ctx.one


def validate_d(spec):
    """gamma in L \\ L' and (-1)^(s k l) F_0^(k l) N_{L/K}(gamma) not a square."""
    qctx = spec.qctx
    ctx = qctx.ctx
    if spec.in_Lprime(spec.gamma):
        return False
    sign = ctx.minus_one if spec.skl % 2 else ctx.one
    ngam = norm_to_fixed(spec.gamma, AutMap.sigma_power(ctx, 1))
    value = sign * qctx.F.F0 ** (spec.k * qctx.ell) * ngam
    if isinstance(ctx, FiniteFieldCtx):
        return not is_square_in_base(value)
    return not is_square_in_base(value, ctx)


def validate(spec):
    return validate_s(spec) if spec.family == "S" else validate_d(spec)


# ---------------------------------------------------------- enumeration ----


def codeword_count(spec):
    ctx = spec.qctx.ctx
    if not isinstance(ctx, FiniteFieldCtx):
        raise FieldError("enumeration requested over an infinite field")
    if spec.family == "S":
        return ctx.order**spec.skl
    lp = ctx.p ** (ctx.dim // 2)
    return lp * lp * ctx.order ** (spec.skl - 1)


def codeword_from_index(spec, idx):
    """Mixed-radix decoding; index 0 is the zero word, tuples are ordered
    lexicographically with the first coefficient most significant."""
    ctx = spec.qctx.ctx
    if spec.family == "S":
        digits = []
        v = idx
        for _ in range(spec.skl):
            digits.append(v % ctx.order)
            v //= ctx.order
        digits.reverse()
        coeffs = [ctx.elem_from_index(d) for d in digits]
        return s_codeword(spec, coeffs)
    lp_basis = spec._lp_basis
    lp = ctx.p ** len(lp_basis)
    mids = []
    v = idx
    for _ in range(spec.skl - 1):
        mids.append(v % ctx.order)
        v //= ctx.order
    a0pp_idx = v % lp
    v //= lp
    a0p_idx = v
    mids.reverse()

    def lp_elem(i):
        acc = ctx.zero
        for b in lp_basis:
            d = i % ctx.p
            if d:
                acc = acc + ctx.from_int(d) * b
            i //= ctx.p
        return acc

    a_mid = [ctx.elem_from_index(d) for d in mids]
    return d_codeword(spec, lp_elem(a0p_idx), lp_elem(a0pp_idx), a_mid)


def s_codeword(spec, coeffs):
    """Word from (a_0, ..., a_{skl-1})."""
    ctx = spec.qctx.ctx
    if len(coeffs) != spec.skl:
        raise ValueError("S codeword needs skl coefficients")
    out = list(coeffs)
    twist = spec.eta * spec.rho.apply(coeffs[0])
    out.append(twist)
    return QuotElem(spec.qctx, SkewPoly(ctx, out))


def d_codeword(spec, a0p, a0pp, mids):
    """Word from a_0', a_0'' in L' and the middle coefficients a_1.."""
    ctx = spec.qctx.ctx
    if len(mids) != spec.skl - 1:
        raise ValueError("D codeword needs skl-1 middle coefficients")
    if not spec.in_Lprime(a0p) or not spec.in_Lprime(a0pp):
        raise ValueError("a_0' and a_0'' must lie in L'")
    out = [a0p] + list(mids) + [spec.gamma * a0pp]
    return QuotElem(spec.qctx, SkewPoly(ctx, out))


def enumerate_codewords(spec):
    """All codewords exactly once, in index order (finite contexts)."""
    for idx in range(codeword_count(spec)):
        yield codeword_from_index(spec, idx)


def random_codeword(spec, rng):
    """One uniformly random codeword (finite); bounded-degree sample over
    function fields."""
    ctx = spec.qctx.ctx
    if isinstance(ctx, FiniteFieldCtx):
        return codeword_from_index(spec, rng.randrange(codeword_count(spec)))
    # low-degree fractions keep the gcrd chains tractable
    if spec.family == "S":
        coeffs = [ctx.random_elem(rng, max_deg=1) for _ in range(spec.skl)]
        return s_codeword(spec, coeffs)
    a0p = ctx.random_lprime_elem(rng, spec.t)
    a0pp = ctx.random_lprime_elem(rng, spec.t)
    mids = [ctx.random_elem(rng, max_deg=1) for _ in range(spec.skl - 1)]
    return d_codeword(spec, a0p, a0pp, mids)


# ------------------------------------------------------------ verify_mrd ---


@dataclass
class MrdReport:
    family: str
    mode: str
    witnessed: bool
    min_rank: int | None
    distance_target: int
    checked: int
    counterexample: object = None
    seed: int | None = None

    def as_dict(self):
        from .skewpoly import skew_to_literal

        return {
            "mode": self.mode,
            "witnessed": self.witnessed,
            "min_rank": self.min_rank,
            "distance_target": self.distance_target,
            "checked": self.checked,
            "counterexample": (
                skew_to_literal(self.counterexample.rep)
                if self.counterexample is not None
                else None
            ),
            "seed": self.seed,
        }


def _scan_indices(spec, start, stop, d_target):
    """Scan codeword indices [start, stop); returns (min_rank, first_bad_idx,
    checked)."""
    min_rank = None
    first_bad = None
    checked = 0
    for idx in range(start, stop):
        if idx == 0:
            continue
        word = codeword_from_index(spec, idx)
        if not word.rep:
            continue
        r = rank(word)
        checked += 1
        if min_rank is None or r < min_rank:
            min_rank = r
        if r < d_target:
            first_bad = idx
            break
    return min_rank, first_bad, checked


def _scan_worker(args):
    spec_dict, start, stop, d_target = args
    spec = code_spec_from_dict(spec_dict)
    return _scan_indices(spec, start, stop, d_target)


def verify_mrd(
    spec,
    mode="exhaustive",
    samples=None,
    seed=None,
    budget=DEFAULT_BUDGET,
    jobs=1,
    spec_dict=None,
):
    """Check rank >= m - k + 1 for nonzero codewords.

    Exhaustive mode scans every codeword (refused above the budget) and
    reports the first violation in enumeration order; sampled mode draws
    seeded random codewords and is probabilistic evidence only.
    """
    qctx = spec.qctx
    d_target = qctx.m - spec.k + 1
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode requires a seed")
        if not samples:
            raise ValueError("sampled mode requires a sample count")
        import random as _random

        rng = _random.Random(seed)
        min_rank = None
        counter = None
        checked = 0
        for _ in range(samples):
            word = random_codeword(spec, rng)
            if not word.rep:
                continue
            r = rank(word)
            checked += 1
            if min_rank is None or r < min_rank:
                min_rank = r
            if r < d_target and counter is None:
                counter = word
                break
        return MrdReport(
            spec.family, "sampled", False, min_rank, d_target, checked, counter, seed
        )
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    total = codeword_count(spec)
    if total > budget:
        raise BudgetExceeded(
            f"{total} codewords exceed the exhaustive budget {budget}; "
            "use sampled mode"
        )
    if jobs > 1 and spec_dict is not None and total > 4 * jobs:
        bounds = [round(i * total / jobs) for i in range(jobs + 1)]
        tasks = [
            (spec_dict, bounds[i], bounds[i + 1], d_target) for i in range(jobs)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_worker, tasks))
        min_rank = min((r for r, _, _ in results if r is not None), default=None)
        checked = sum(c for _, _, c in results)
        bad = [b for _, b, _ in results if b is not None]
        first_bad = min(bad) if bad else None
    else:
        min_rank, first_bad, checked = _scan_indices(spec, 0, total, d_target)
    counter = codeword_from_index(spec, first_bad) if first_bad is not None else None
    return MrdReport(
        spec.family,
        "exhaustive",
        first_bad is None,
        min_rank,
        d_target,
        checked,
        counter,
        None,
    )


# ------------------------------------------------ idealisers and centre ----


@dataclass
class IdealiserPart:
    size: int
    constant_field_order: int | None
    outside_theorem_range: bool


@dataclass
class NuclearParams:
    il: int
    ir: int
    c: int
    z: int
    outside_theorem_range: bool = False

    def as_dict(self):
        return {"Il": self.il, "Ir": self.ir, "C": self.c, "Z": self.z}


def _vec(ctx, sp, length):
    out = []
    for slot in range(length):
        out.extend(sp[slot].coeffs)
    return np.array(out, dtype=np.int64)


def _membership_matrix(spec):
    """Rows M with M @ vec(v) = 0 iff the residue v lies in the code."""
    qctx = spec.qctx
    ctx = qctx.ctx
    if not isinstance(ctx, FiniteFieldCtx):
        raise FieldError("idealiser and membership systems need a finite context")
    ns = ctx.n * qctx.s
    dim = ctx.dim
    width = ns * dim
    rows = []
    for i in range(spec.skl + 1, ns):
        for b in range(dim):
            row = np.zeros(width, dtype=np.int64)
            row[i * dim + b] = 1
            rows.append(row)
    if spec.family == "S":
        if spec.eta:
            # v_skl = eta * rho(v_0)
            m_rho = ctx._aut_matrix(spec.rho.exp)
            m_eta = ctx.mult_matrix(spec.eta)
            comp = (m_eta @ m_rho) % ctx.p
            for b in range(dim):
                row = np.zeros(width, dtype=np.int64)
                row[spec.skl * dim + b] = 1
                row[0:dim] = (-comp[b]) % ctx.p
                rows.append(row)
        else:
            for b in range(dim):
                row = np.zeros(width, dtype=np.int64)
                row[spec.skl * dim + b] = 1
                rows.append(row)
    else:
        m_sig_t = ctx._aut_matrix((ctx._sig * spec.t) % ctx.dim)
        eye = np.eye(dim, dtype=np.int64)
        proj = (m_sig_t - eye) % ctx.p
        for b in range(dim):
            row = np.zeros(width, dtype=np.int64)
            row[0:dim] = proj[b]
            rows.append(row)
        m_gamma_inv = ctx.mult_matrix(spec.gamma.inverse())
        comp = (proj @ m_gamma_inv) % ctx.p
        for b in range(dim):
            row = np.zeros(width, dtype=np.int64)
            row[spec.skl * dim : (spec.skl + 1) * dim] = comp[b]
            rows.append(row)
    return np.array(rows, dtype=np.int64) % ctx.p


def _spanning_words(spec):
    """F_p-spanning set of the code (nsk*dim-ish many words)."""
    qctx = spec.qctx
    ctx = qctx.ctx
    dim = ctx.dim
    words = []
    basis = [
        ctx.elem(tuple(1 if k == b else 0 for k in range(dim))) for b in range(dim)
    ]
    if spec.family == "S":
        for b in basis:
            coeffs = [b] + [ctx.zero] * (spec.skl - 1)
            words.append(s_codeword(spec, coeffs))
        for i in range(1, spec.skl):
            for b in basis:
                coeffs = [ctx.zero] * spec.skl
                coeffs[i] = b
                words.append(s_codeword(spec, coeffs))
    else:
        lp = spec.lprime_basis()
        zero_mid = [ctx.zero] * (spec.skl - 1)
        for b in lp:
            words.append(d_codeword(spec, b, ctx.zero, zero_mid))
        for b in lp:
            words.append(d_codeword(spec, ctx.zero, b, zero_mid))
        for i in range(1, spec.skl):
            for b in basis:
                mids = [ctx.zero] * (spec.skl - 1)
                mids[i - 1] = b
                words.append(d_codeword(spec, ctx.zero, ctx.zero, mids))
    return words


def _right_mult_matrix(qctx, w):
    """F_p-matrix of g -> g*w mod F(x^n) on R_F."""
    ctx = qctx.ctx
    ns = ctx.n * qctx.s
    dim = ctx.dim
    cols = []
    for i in range(ns):
        for b in range(dim):
            unit = SkewPoly.monomial(
                ctx, ctx.elem(tuple(1 if k == b else 0 for k in range(dim))), i
            )
            img = right_mod(unit * w, qctx.F_skew)
            cols.append(_vec(ctx, img, ns))
    return np.array(cols, dtype=np.int64).T


def _left_mult_matrix(qctx, w):
    """F_p-matrix of g -> w*g mod F(x^n) on R_F."""
    ctx = qctx.ctx
    ns = ctx.n * qctx.s
    dim = ctx.dim
    cols = []
    for i in range(ns):
        for b in range(dim):
            unit = SkewPoly.monomial(
                ctx, ctx.elem(tuple(1 if k == b else 0 for k in range(dim))), i
            )
            img = right_mod(w * unit, qctx.F_skew)
            cols.append(_vec(ctx, img, ns))
    return np.array(cols, dtype=np.int64).T


def _theorem_range_flag(spec):
    m = spec.qctx.m
    if spec.family == "S":
        return not (1 <= spec.k <= m // 2 and spec.skl > 2)
    return not (1 <= spec.k <= m // 2 and spec.skl >= 2)


def _kernel_report(spec, rows):
    ctx = spec.qctx.ctx
    width = ctx.n * spec.qctx.s * ctx.dim
    if rows:
        mat = np.vstack(rows)
        kernel = linalg.np_kernel(mat, ctx.p, ncols=width)
    else:
        kernel = np.eye(width, dtype=np.int64)
    size = ctx.p ** kernel.shape[0]
    dim = ctx.dim
    constant = all(not row[dim:].any() for row in kernel)
    return IdealiserPart(
        size=size,
        constant_field_order=size if constant else None,
        outside_theorem_range=_theorem_range_flag(spec),
    )


def left_idealiser(spec, words=None):
    """{g in R_F : g C <= C}, by the linear membership system."""
    qctx = spec.qctx
    M = _membership_matrix(spec)
    rows = []
    for w in words if words is not None else _spanning_words(spec):
        T = _right_mult_matrix(qctx, w.rep)
        rows.append((M @ T) % qctx.ctx.p)
    return _kernel_report(spec, rows)


def right_idealiser(spec, words=None):
    """{g in R_F : C g <= C}."""
    qctx = spec.qctx
    M = _membership_matrix(spec)
    rows = []
    for w in words if words is not None else _spanning_words(spec):
        T = _left_mult_matrix(qctx, w.rep)
        rows.append((M @ T) % qctx.ctx.p)
    return _kernel_report(spec, rows)


def _first_invertible(spec):
    m = spec.qctx.m
    total = codeword_count(spec)
    for idx in range(1, total):
        word = codeword_from_index(spec, idx)
        if word.rep and rank(word) == m:
            return word
    return None


def centraliser_and_centre(spec):
    """Centraliser and centre sizes of the code, after normalising (by a
    left unit-multiple) to contain the identity."""
    qctx = spec.qctx
    ctx = qctx.ctx
    u = _first_invertible(spec)
    if u is None:
        raise ValueError("no invertible codeword found; cannot normalise")
    d, alpha, _ = gcrd_extended(u.rep, qctx.F_skew)
    if d.degree != 0:
        raise RuntimeError("invertible codeword has nontrivial gcrd with F(x^n)")
    u_inv = right_mod(alpha.scale_left(d.constant_coeff.inverse()), qctx.F_skew)
    if right_mod(u_inv * u.rep, qctx.F_skew) != SkewPoly.one(ctx) or right_mod(
        u.rep * u_inv, qctx.F_skew
    ) != SkewPoly.one(ctx):
        raise RuntimeError("normaliser inverse failed")
    span = [
        QuotElem(qctx, right_mod(u_inv * w.rep, qctx.F_skew))
        for w in _spanning_words(spec)
    ]
    cen_rows = []
    for w in span:
        R = _right_mult_matrix(qctx, w.rep)
        L = _left_mult_matrix(qctx, w.rep)
        cen_rows.append((R - L) % ctx.p)
    width = ctx.n * qctx.s * ctx.dim
    cen_kernel = linalg.np_kernel(np.vstack(cen_rows), ctx.p, ncols=width)
    c_size = ctx.p ** cen_kernel.shape[0]
    # centre = left idealiser of the normalised code intersect centraliser
    M = _membership_matrix(spec)
    L_u = _left_mult_matrix(qctx, u.rep)
    M_prime = (M @ L_u) % ctx.p
    id_rows = [(M_prime @ _right_mult_matrix(qctx, w.rep)) % ctx.p for w in span]
    z_kernel = linalg.np_kernel(
        np.vstack(cen_rows + id_rows), ctx.p, ncols=width
    )
    z_size = ctx.p ** z_kernel.shape[0]
    return c_size, z_size


def nuclear_params(spec):
    """Left/right idealiser, centraliser and centre orders of the code."""
    il = left_idealiser(spec)
    ir = right_idealiser(spec)
    c, z = centraliser_and_centre(spec)
    return NuclearParams(
        il=il.size,
        ir=ir.size,
        c=c,
        z=z,
        outside_theorem_range=il.outside_theorem_range,
    )


# ---------------------------------------------------------------- newness --


@dataclass
class NewnessEntry:
    family: str
    verdict: str
    reason: str

    def as_dict(self):
        return {"family": self.family, "verdict": self.verdict, "reason": self.reason}


def _agtg_like_match(n_exp, target, e, k_times_se, z_mod):
    """Frobenius exponents j (mod n_exp) with gcd(n_exp, j) = target and
    gcd(n_exp, k_times_se - j) = target; any_full additionally requires the
    centre constraint gcd(z_mod, j) = e."""
    any_match = False
    any_full = False
    for j in range(n_exp):
        if math.gcd(n_exp, j) != target:
            continue
        if math.gcd(n_exp, (k_times_se - j) % n_exp) != target:
            continue
        any_match = True
        if math.gcd(z_mod, j) == e:
            any_full = True
    return any_match, any_full


def newness_mrd(p, e, n, s, k):
    """Replay of the known-family comparison for D_{n,s,k} parameters
    (q^{nsk}, q^t, q^t, q^s, q), q = p^e, n = 2t."""
    if n % 2:
        raise ValueError("the D-family needs even n")
    t = n // 2
    entries = []
    if s == 1:
        entries.append(
            NewnessEntry(
                "TZ", "known", "s=1: D_{n,1,k} is exactly a Trombetti-Zhou code"
            )
        )
        return entries
    hypotheses = 1 < k <= t and t >= 2 and s >= 3 and (s * k) % n != 0
    entries.append(
        NewnessEntry(
            "Gabidulin-like",
            "new",
            f"left idealiser order q^{t} != q^{n * s} forced by families I/IV/V "
            "(and their adjoints/duals)",
        )
    )
    any_match, any_full = _agtg_like_match(n * s * e, t * e, e, k * s * e, s * e)
    if not any_match:
        entries.append(
            NewnessEntry(
                "AGTG",
                "new",
                f"no twist exponent j has gcd({n*s*e}, j) = gcd({n*s*e}, "
                f"{k*s*e} - j) = {t*e}: both idealisers q^{t} would force "
                f"{n} | {s * k}",
            )
        )
    elif not any_full:
        entries.append(
            NewnessEntry(
                "AGTG",
                "new",
                f"every matching twist exponent j violates the centre "
                f"constraint gcd({e}, j) = {e}",
            )
        )
    else:
        entries.append(
            NewnessEntry(
                "AGTG", "undecided", "an AGTG parameter tuple matches; equivalence "
                "not decided at parameter level"
            )
        )
    entries.append(
        NewnessEntry(
            "TZ",
            "new",
            f"Trombetti-Zhou centre order q^{s} != q requires s = 1 (s = {s})",
        )
    )
    any_match_s, any_full_s = _agtg_like_match(n * e, t * e, e, k * s * e, e)
    if not any_match_s:
        entries.append(
            NewnessEntry(
                "S-family",
                "new",
                f"no rho exponent h has gcd({n*e}, h) = gcd({n*e}, {k*s*e} - h) "
                f"= {t*e}: both idealisers q^{t} would force {n} | {s * k}",
            )
        )
    elif not any_full_s:
        entries.append(
            NewnessEntry(
                "S-family",
                "new",
                f"every matching rho exponent h violates the centre constraint "
                f"gcd({e}, h) = {e}",
            )
        )
    else:
        entries.append(
            NewnessEntry(
                "S-family", "undecided",
                "an S-family parameter tuple matches; equivalence not decided "
                "at parameter level",
            )
        )
    if not hypotheses:
        entries.append(
            NewnessEntry(
                "overall",
                "undecided",
                f"outside theorem hypotheses (need 1 < k <= t, t >= 2, s >= 3, "
                f"n does not divide sk; got n={n}, t={t}, s={s}, k={k})",
            )
        )
    else:
        entries.append(
            NewnessEntry("overall", "new", "new against every listed MRD family")
        )
    return entries


def _v2(x):
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def newness_semifield(p, e, n, s):
    """Replay of the semifield comparison for the order-q^{2ts} D-semifield
    with parameters (q^{2ts}, q^t, q^t, q^s, q)."""
    if n % 2:
        raise ValueError("the D-family needs even n")
    t = n // 2
    entries = []
    if s == 1:
        entries.append(
            NewnessEntry(
                "HK",
                "known",
                "s=1 coincides exactly with the dual Hughes-Kleinfeld semifield",
            )
        )
        return entries
    hypotheses = p != 2 and s >= 2 and s % 2 == 0 and n >= 4 and s % n != 0
    entries.append(
        NewnessEntry(
            "PZ",
            "new",
            f"all nuclei (q^{t}, q^{t}, q^{s}) strictly exceed the centre q; "
            "a Pott-Zhou semifield has a nucleus equal to its centre",
        )
    )
    entries.append(
        NewnessEntry(
            "rank-two",
            "new",
            f"order q^{2*t*s} is never twice a nucleus order "
            f"(q^{t}, q^{t}, q^{s}): would need s = 1 or t = 1",
        )
    )
    any_match_s, any_full_s = _agtg_like_match(n * e, t * e, e, s * e, e)
    if not any_match_s:
        entries.append(
            NewnessEntry(
                "S-family",
                "new",
                f"no rho exponent h has gcd({n*e}, h) = gcd({n*e}, {s*e} - h) = "
                f"{t*e}: both nuclei q^{t} would force {n} | {s}",
            )
        )
    elif not any_full_s:
        entries.append(
            NewnessEntry(
                "S-family",
                "new",
                "every matching rho exponent violates the centre constraint",
            )
        )
    else:
        entries.append(
            NewnessEntry("S-family", "undecided", "parameter tuple matches")
        )
    if s != n:
        entries.append(
            NewnessEntry(
                "biprojective-S",
                "new",
                f"matching the biprojective family forces s = n (got s={s}, n={n})",
            )
        )
    else:
        entries.append(
            NewnessEntry("biprojective-S", "undecided", "parameter tuple matches")
        )
    if s % t:
        entries.append(
            NewnessEntry(
                "GK-unified",
                "new",
                f"matching forces t | s via t | a and s = gcd(2a, st) "
                f"(got t={t}, s={s})",
            )
        )
    elif (s // t) % 2 == 0:
        entries.append(
            NewnessEntry(
                "GK-unified",
                "undecided",
                f"n = {n} divides s = {s}: outside the proposition's hypotheses",
            )
        )
    else:
        entries.append(
            NewnessEntry(
                "GK-unified",
                "new",
                f"2-adic valuation clash: v2(s) = v2(t) = {_v2(s)} but the gcd "
                f"constraints force v2(s) = v2(a) + 1 > v2(t)",
            )
        )
    if not hypotheses:
        entries.append(
            NewnessEntry(
                "overall",
                "undecided",
                f"outside proposition hypotheses (need q odd, s >= 2 even, "
                f"n = 2t >= 4, n does not divide s; got q={p**e}, n={n}, s={s})",
            )
        )
    else:
        entries.append(
            NewnessEntry(
                "overall", "new", "new against every listed semifield family"
            )
        )
    return entries


def newness_report(p, e, n, s, k):
    """Per-family newness verdicts: the MRD comparison for k > 1, the
    semifield comparison for k = 1."""
    if k == 1:
        return newness_semifield(p, e, n, s)
    return newness_mrd(p, e, n, s, k)


# ------------------------------------------------------------- spec files --


def code_spec_from_dict(d):
    """Build an S/D code spec from its file form:
    {family, field, F: [coeffs over K], k, eta|gamma: literal, rho_exp?: h}."""
    if not isinstance(d, dict):
        raise ValueError("code spec must be a mapping")
    family = d.get("family")
    if family not in ("S", "D"):
        raise ValueError("family must be 'S' or 'D'")
    ctx = field_from_spec(d["field"])
    coeffs = []
    for c in d["F"]:
        if isinstance(c, str):
            coeffs.append(elem_from_literal(ctx, c))
        else:
            if not isinstance(ctx, FiniteFieldCtx):
                raise ValueError("integer F-coefficients need a finite field")
            coeffs.append(ctx.from_int(int(c)))
    F = CentralPoly.from_coeffs(ctx, coeffs)
    if isinstance(ctx, FiniteFieldCtx):
        qctx = QuotCtx(ctx, F)
    else:
        f_lit = d.get("f")
        if not f_lit:
            raise ValueError("function-field code specs need the catalogued 'f'")
        from .skewpoly import skew_from_literal

        f = skew_from_literal(ctx, f_lit)
        qctx = QuotCtx(ctx, F, f=f, irreducible_certified=True)
    k = int(d["k"])
    if family == "S":
        eta = elem_from_literal(ctx, str(d["eta"]))
        rho_exp = int(d.get("rho_exp", 0))
        if isinstance(ctx, FiniteFieldCtx):
            rho = AutMap.frobenius_power(ctx, rho_exp)
        else:
            rho = AutMap.sigma_power(ctx, rho_exp)
        return SCodeSpec(qctx, k, eta, rho)
    gamma = elem_from_literal(ctx, str(d["gamma"]))
    return DCodeSpec(qctx, k, gamma)
