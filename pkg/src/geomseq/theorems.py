"""Closed-form predictions for linear complexity, minimal polynomials and
autocorrelation, and a verifier that checks them against measurement.

Each predictor emits :class:`Prediction` records only when its hypotheses
hold; otherwise the record carries status ``hypothesis_not_met``.  Branches
that rest on a numerically conjectured formula are tagged so that a mismatch
is reported as ``conjecture_violated`` rather than as a theorem violation.
"""

from __future__ import annotations

import functools
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from ._validation import ParameterError, check_alphabet, check_shift, is_prime
from .correlate import autocorrelation_profile
from .gf import ExtFieldContext, legendre_symbol, multiplicative_order
from .lincomp import berlekamp_massey, minimal_poly_gcd
from .poly import DensePoly, format_sparse
from .seqgen import (
    NtuParams,
    SymbolSequence,
    generalized_ntu,
    m_sequence,
    ntu_complement,
    ntu_map,
    proposed_sequence,
    short_companion,
    short_complement,
)

STATUSES = (
    "verified",
    "violated",
    "hypothesis_not_met",
    "conjecture_verified",
    "conjecture_violated",
    "pending",
)

SCHEMA_VERSION = 1


class InconsistentPredictionError(RuntimeError):
    """Two applicable predictors disagree on the same quantity."""


@dataclass(frozen=True)
class Prediction:
    quantity: str
    params: dict
    predicted: object = None
    applicability: str = ""
    measured: object = None
    status: str = "pending"
    conjecture: bool = False

    def check(self, measured) -> Prediction:
        if self.status == "hypothesis_not_met":
            return replace(self, measured=measured)
        ok = _values_equal(self.predicted, measured)
        if self.conjecture:
            status = "conjecture_verified" if ok else "conjecture_violated"
        else:
            status = "verified" if ok else "violated"
        return replace(self, measured=measured, status=status)

    def row(self) -> dict:
        prm = self.params
        return {
            "p": prm.get("p"),
            "m": prm.get("m"),
            "ell": prm.get("ell"),
            "A": prm.get("A"),
            "e": prm.get("e"),
            "quantity": self.quantity,
            "applicability": self.applicability,
            "predicted": render_value(self.predicted),
            "measured": render_value(self.measured),
            "status": self.status,
        }


def _values_equal(a, b) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def render_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, DensePoly):
        return format_sparse(v)
    if isinstance(v, np.ndarray):
        vals, counts = np.unique(v, return_counts=True)
        return ";".join(f"{int(x)}x{int(c)}" for x, c in zip(vals, counts))
    return str(v)


def _not_met(quantity: str, params: dict, why: str) -> Prediction:
    return Prediction(quantity, params, None, why, status="hypothesis_not_met")


# arithmetic helpers

def nu(p: int, m: int) -> int:
    return (p**m - 1) // (p - 1)


def nu2(n: int) -> int:
    """Exponent of the largest power of 2 dividing ``n``."""
    if n <= 0:
        raise ParameterError("nu2 needs a positive integer")
    return (n & -n).bit_length() - 1


def mod_underline(a: int, n: int) -> int:
    """Representative of ``a`` modulo ``n`` in ``{1, ..., n}``."""
    if n < 1:
        raise ParameterError("modulus must be positive")
    r = a % n
    return n if r == 0 else r


def odd_part(n: int) -> int:
    return n >> nu2(n)


def G_value(N: int, e: int) -> int:
    n = odd_part(N)
    return math.gcd(mod_underline(-2 * e + 1, n), n)


def H0_value(nu_: int, e: int) -> int:
    return math.gcd(mod_underline(-2 * e + 1, nu_), nu_)


def H1_value(N: int, e: int) -> int:
    half = N // 2
    return math.gcd(mod_underline(-2 * e + 1, half), half)


def _params(p, m, ell, A, e=None) -> dict:
    return {"p": p, "m": m, "ell": ell, "A": A, "e": e}


def _class(ctx: ExtFieldContext, ell: int, A: int) -> int:
    return ctx.cyclotomy(ell).class_of[A % ctx.p] if A % ctx.p else 0


# Chan-Games and the nonresidue formulas

def chan_games_check(p: int, m: int, ell: int, A: int, ctx: ExtFieldContext | None = None) -> list[Prediction]:
    """``L(T) = nu * L(t)`` when ``rho_A(0) = 0`` (A = 0 or A in D_0), measured on both sides.

    Also checks ``L(T_A) = L(T_1)`` for A in D_0 and ``L(T_0) = 2 nu`` for A = 0.
    """
    ctx = ctx or ExtFieldContext(p, m)
    ell = check_alphabet(ell, ctx.p)
    A = A % ctx.p
    prm = _params(ctx.p, ctx.m, ell, A)
    if A and _class(ctx, ell, A) != 0:
        return [_not_met("lc_T", prm, "chan-games: A not in D_0")]
    ntu = NtuParams.from_context(ctx, ell, A)
    R = m_sequence(ctx)
    lc_T = minimal_poly_gcd(generalized_ntu(ntu, ctx, mseq=R)).linear_complexity
    lc_t = minimal_poly_gcd(short_companion(ntu, ctx)).linear_complexity
    out = [Prediction("lc_T", prm, ctx.nu * lc_t, "chan-games: nu*L(t)").check(lc_T)]
    if A == 0:
        out.append(Prediction("lc_T", prm, 2 * ctx.nu, "ntu A=0: 2*nu").check(lc_T))
    elif A != 1:
        one = NtuParams.from_context(ctx, ell, 1)
        lc_T1 = minimal_poly_gcd(generalized_ntu(one, ctx, mseq=R)).linear_complexity
        out.append(Prediction("lc_T", prm, lc_T1, "shift-equivalence: L(T_1)").check(lc_T))
    return out


def lc_predict_nonresidue(p: int, m: int, ell: int, A: int, lc_t: int, k: int | None = None,
                          lc_tbar: int | None = None) -> list[Prediction]:
    """Predicted ``L(T_A)`` for A in ``D_k``, k != 0, from the measured ``L(t_A)``.

    ``k`` defaults to the quadratic character when ell = 2.  Routing:
    ell >= 3 or p = 1 mod 4 gives ``nu L(t)``; ell = 2, p = 3 mod 4, m odd
    gives ``nu (L(t) + 1) - 1`` (p = 3 mod 8) or ``nu (L(t) - 1) + 1`` (p = 7 mod 8);
    m even falls to the conjectured formula.
    """
    prm = _params(p, m, ell, A % p)
    n = nu(p, m)
    if k is None:
        if ell != 2:
            raise ParameterError("the class index k is required when ell > 2")
        k = 0 if A % p == 0 else (0 if legendre_symbol(A, p) == 1 else 1)
    if A % p == 0 or k == 0:
        return [_not_met("lc_T", prm, "nonresidue formulas: A not in D_k, k != 0")]
    out = []
    if ell >= 3 or p % 4 == 1:
        out.append(Prediction("lc_T", prm, n * lc_t, "proposition: nu*L(t)"))
    elif m % 2 == 1:
        if p % 8 == 3:
            out.append(Prediction("lc_T", prm, n * (lc_t + 1) - 1, "theorem p=3 mod 8: nu*(L(t)+1)-1"))
        else:
            out.append(Prediction("lc_T", prm, n * (lc_t - 1) + 1, "theorem p=7 mod 8: nu*(L(t)-1)+1"))
    else:
        if p % 8 == 3:
            out.append(Prediction("lc_T", prm, n * (lc_t + 1), "conjecture m even, p=3 mod 8: nu*(L(t)+1)",
                                  conjecture=True))
        else:
            out.append(Prediction("lc_T", prm, n * (lc_t - 1) + 1,
                                  "conjecture m even, p=7 mod 8: nu*(L(t)-1)+1", conjecture=True))
    if lc_tbar is not None:
        out.append(Prediction("lc_Tbar", prm, n * lc_tbar, "chan-games on complement: nu*L(tbar)"))
    return out


# large linear complexity

def large_lc_conditions(p: int) -> tuple[int, int] | None:
    """``(s, r)`` with ``p = 2^s r + 1``, r an odd prime, 2 primitive mod r, ``r >= sqrt(p) + 1``."""
    if p < 3 or not is_prime(p):
        return None
    s = nu2(p - 1)
    r = (p - 1) >> s
    if r < 3 or not is_prime(r):
        return None
    if multiplicative_order(2, r) != r - 1:
        return None
    # r >= sqrt(p) + 1  <=>  (r - 1)^2 >= p
    if (r - 1) ** 2 < p:
        return None
    return s, r


def x_pow_plus_one(n: int) -> DensePoly:
    return DensePoly.x_n_minus_one(n, 2)


def min_poly_predict(p: int, m: int, A: int, s: int | None, r: int | None) -> list[Prediction]:
    """Corollary minimal polynomials of ``t_A`` and ``T_A`` for ell = 2."""
    A %= p
    prm = _params(p, m, 2, A)
    quantities = ("min_poly_t", "min_poly_T", "lc_t", "lc_T")
    if s is None or r is None or large_lc_conditions(p) != (s, r):
        return [_not_met(q, prm, "corollary: p != 2^s r + 1 with qualifying r") for q in quantities]
    leg = legendre_symbol(A, p) if A else 0
    N = p**m - 1
    n = nu(p, m)
    if (A == 1 and s == 1) or (leg == -1 and s >= 2):
        why = "corollary case 1"
        mt = x_pow_plus_one(p - 1)
        mT = x_pow_plus_one(N)
        return [
            Prediction("min_poly_t", prm, mt, why),
            Prediction("min_poly_T", prm, mT, why),
            Prediction("lc_t", prm, p - 1, why),
            Prediction("lc_T", prm, N, why),
        ]
    if leg == -1 and m % 2 == 1 and p % 8 == 7:
        why = "corollary case 2"
        x1 = x_pow_plus_one(1)
        mt = x_pow_plus_one(p - 1).exact_div(x1)
        mT = (x1 * x_pow_plus_one(N)).exact_div(x_pow_plus_one(2 * n))
        return [
            Prediction("min_poly_t", prm, mt, why),
            Prediction("min_poly_T", prm, mT, why),
            Prediction("lc_t", prm, p - 2, why),
            Prediction("lc_T", prm, (p ** (m + 1) - 3 * p**m + 2) // (p - 1), why),
        ]
    return [_not_met(q, prm, "corollary: neither case applies to A, m, p") for q in quantities]


# autocorrelation

def n1_value(j: int, ctx: ExtFieldContext, ntu: NtuParams) -> int:
    """Off-peak autocorrelation of ``T_A`` at shift ``j * nu``."""
    p, m, g, A = ctx.p, ctx.m, ctx.g, ntu.A
    a = ntu_map(-pow(g, j, p) * A, ntu)
    b = ntu_map(-pow(g, -j, p) * A, ntu)
    return p ** (m - 1) * ((-1) ** a + (-1) ** b + (-1) ** (j + 1)) - 1


def n2_value(p: int, m: int) -> int:
    return p ** (m - 2) - 1


@functools.lru_cache(maxsize=32)
def _acf_constants(ctx: ExtFieldContext, A: int) -> tuple[tuple[int, ...], int]:
    """``(N1 values indexed by j, N2)`` for ``T_A``; index 0 is unused."""
    ntu = NtuParams.from_context(ctx, 2, A)
    n1 = (0,) + tuple(n1_value(j, ctx, ntu) for j in range(1, ctx.p - 1))
    return n1, n2_value(ctx.p, ctx.m)


def predicted_T_profile(ctx: ExtFieldContext, A: int) -> np.ndarray:
    """Three-valued autocorrelation of ``T_A`` (ell = 2, A != 0)."""
    if A % ctx.p == 0:
        raise ParameterError("the three-valued distribution needs A != 0")
    n1, n2 = _acf_constants(ctx, A % ctx.p)
    N, n = ctx.order, ctx.nu
    out = np.full(N, n2, dtype=np.int64)
    out[0] = N
    for j in range(1, ctx.p - 1):
        out[j * n] = n1[j]
    return out


def interleaved_j0(ctx: ExtFieldContext, e: int) -> int | None:
    """The ``j0`` in ``1..p-2`` with ``2e = 1 + j0 nu (mod N)``, if any."""
    N, n = ctx.order, ctx.nu
    target = (2 * e - 1) % N
    if target % n:
        return None
    j0 = target // n
    return j0 if 1 <= j0 <= ctx.p - 2 else None


def predicted_interleaved_profile(ctx: ExtFieldContext, A: int, e: int) -> np.ndarray:
    """Predicted autocorrelation of ``S^e`` at every shift in ``[0, 2N)``."""
    if A % ctx.p == 0:
        raise ParameterError("the interleaved autocorrelation formulas need A != 0")
    p, N, n = ctx.p, ctx.order, ctx.nu
    e = check_shift(e, N)
    n1, n2 = _acf_constants(ctx, A % p)
    even = 2 * predicted_T_profile(ctx, A)

    odd = np.full(N, -2 * n2, dtype=np.int64)
    j0 = interleaved_j0(ctx, e)
    for j in range(1, p - 1):
        if j0 is None:
            v = -n1[j] - n2
        elif j == j0:
            continue
        else:
            v = -n1[j] - n1[(j0 - j) % (p - 1)]
        odd[(-e + j * n) % N] = v
        odd[(e - 1 - j * n) % N] = v
    peak = -N - n2 if j0 is None else -N - n1[j0]
    odd[(-e) % N] = peak
    odd[(e - 1) % N] = peak

    out = np.empty(2 * N, dtype=np.int64)
    out[0::2] = even
    out[1::2] = odd
    return out


def acf_predict_interleaved(p: int, m: int, A: int, e: int, tau: int, ctx: ExtFieldContext | None = None) -> int:
    ctx = ctx or ExtFieldContext(p, m)
    return int(predicted_interleaved_profile(ctx, A, e)[tau % (2 * ctx.order)])


def r_decomposition(T_profile: np.ndarray, e1: int, e2: int, tau: int) -> int:
    """``R_{S^e1, S^e2}(tau)`` expressed through the autocorrelation of ``T``."""
    N = T_profile.size
    tau0, odd = divmod(tau % (2 * N), 2)
    if not odd:
        return int(T_profile[tau0 % N] + T_profile[(e2 - e1 + tau0) % N])
    return int(-T_profile[(e2 + tau0) % N] - T_profile[(e1 - tau0 - 1) % N])


# interleaved linear complexity

def interleaved_case1_poly(N: int, e: int) -> DensePoly:
    return x_pow_plus_one(2 * N).exact_div(x_pow_plus_one(G_value(N, e)))


def interleaved_case2_poly(N: int, nu_: int, e: int) -> DensePoly:
    num = x_pow_plus_one(2 * N) * x_pow_plus_one(2) * x_pow_plus_one(H0_value(nu_, e))
    den = x_pow_plus_one(4 * nu_) * x_pow_plus_one(H1_value(N, e))
    return num.exact_div(den)


def lc_predict_interleaved(p: int, m: int, A: int, e: int, *, lc_T: int | None = None,
                           min_poly_T: DensePoly | None = None) -> list[Prediction]:
    """Predicted ``L(S^e)``, ``m_{S^e}`` and bound checks.

    Case 1 fires under the corollary conditions or when ``L(T_A) = N`` is
    measured; case 2 fires for (A/p) = -1, m odd, p = 7 mod 8 under the
    corollary conditions or when ``m_{T_A}`` has the corollary's case-2 form.
    """
    A %= p
    N = p**m - 1
    n = nu(p, m)
    e = check_shift(e, N)
    prm = _params(p, m, 2, A, e)
    leg = legendre_symbol(A, p) if A else 0
    sr = large_lc_conditions(p)
    s = sr[0] if sr else None

    case1_thm = sr is not None and ((A == 1 and s == 1) or (leg == -1 and s >= 2))
    case1_meas = lc_T == N
    case2_shape = leg == -1 and m % 2 == 1 and p % 8 == 7
    case2_thm = case2_shape and sr is not None
    case2_meas = False
    if case2_shape and min_poly_T is not None:
        expected = (x_pow_plus_one(1) * x_pow_plus_one(N)).exact_div(x_pow_plus_one(2 * n))
        case2_meas = min_poly_T == expected

    if case1_thm or case1_meas:
        why = "theorem case 1 (" + ("corollary conditions" if case1_thm else "measured L(T)=N") + ")"
        G = G_value(N, e)
        lo, hi = 2 * N - odd_part(N), 2 * N - 1
        return [
            Prediction("lc_interleaved", prm, 2 * N - G, why),
            Prediction("min_poly_interleaved", prm, interleaved_case1_poly(N, e), why),
            Prediction("lc_interleaved_bounds", prm,
                       _bounds_tag(lo, hi, G == 1, (-2 * e + 1) % odd_part(N) == 0), why),
        ]
    if case2_thm or case2_meas:
        why = "theorem case 2 (" + ("corollary conditions" if case2_thm else "measured m_T form") + ")"
        H0, H1 = H0_value(n, e), H1_value(N, e)
        return [
            Prediction("lc_interleaved", prm, 2 * N + 2 - 4 * n + H0 - H1, why),
            Prediction("min_poly_interleaved", prm, interleaved_case2_poly(N, n, e), why),
        ]
    why = "interleaved LC: neither case's hypotheses hold"
    return [_not_met(q, prm, why) for q in ("lc_interleaved", "min_poly_interleaved")]


def _bounds_tag(lo: int, hi: int, at_hi: bool, at_lo: bool) -> str:
    return f"[{lo},{hi}] upper={'attained' if at_hi else 'strict'} lower={'attained' if at_lo else 'strict'}"


def measured_bounds_tag(L: int, N: int) -> str:
    lo, hi = 2 * N - odd_part(N), 2 * N - 1
    if not lo <= L <= hi:
        return f"out of [{lo},{hi}]: {L}"
    return _bounds_tag(lo, hi, L == hi, L == lo)


# verification

def _measure_lc(seq: SymbolSequence, bm_limit: int):
    rep = minimal_poly_gcd(seq)
    if seq.period <= bm_limit:
        bm = berlekamp_massey(seq)
        if (bm.linear_complexity, bm.minimal_poly) != (rep.linear_complexity, rep.minimal_poly):
            raise InconsistentPredictionError(
                f"Berlekamp-Massey and gcd disagree on {seq.params}: {bm.linear_complexity} vs {rep.linear_complexity}")
    return rep


def _check_agreement(preds: list[Prediction]) -> None:
    seen: dict[tuple, Prediction] = {}
    for pr in preds:
        if pr.status == "hypothesis_not_met" or pr.conjecture or pr.predicted is None:
            continue
        if pr.quantity == "lc_T" and pr.applicability.startswith("shift-equivalence"):
            continue
        key = (pr.quantity, pr.params.get("e"))
        if key in seen and not _values_equal(seen[key].predicted, pr.predicted):
            raise InconsistentPredictionError(
                f"{pr.quantity}: {seen[key].applicability!r} predicts {render_value(seen[key].predicted)}, "
                f"{pr.applicability!r} predicts {render_value(pr.predicted)}")
        seen.setdefault(key, pr)


def verify_tuple(p: int, m: int, A: int, e=None, ell: int = 2, poly=None, *,
                 bm_limit: int = 4096, ctx: ExtFieldContext | None = None) -> list[Prediction]:
    """Run every applicable predictor for one parameter tuple and check it.

    ``e`` may be None, a single shift or an iterable of shifts.
    """
    ctx = ctx or ExtFieldContext(p, m, poly)
    ell = check_alphabet(ell, ctx.p)
    A %= ctx.p
    p, m = ctx.p, ctx.m
    prm = _params(p, m, ell, A)
    ntu = NtuParams.from_context(ctx, ell, A)
    R = m_sequence(ctx)
    T = generalized_ntu(ntu, ctx, mseq=R)
    t = short_companion(ntu, ctx)
    rep_T = _measure_lc(T, bm_limit)
    rep_t = _measure_lc(t, bm_limit)
    preds: list[Prediction] = []

    if A == 0 or ntu.k == 0:
        preds += chan_games_check(p, m, ell, A, ctx)
    else:
        Tbar = ntu_complement(ntu, ctx, mseq=R)
        tbar = short_complement(ntu, ctx)
        lc_tbar = _measure_lc(tbar, bm_limit).linear_complexity
        lc_Tbar = _measure_lc(Tbar, bm_limit).linear_complexity
        for pr in lc_predict_nonresidue(p, m, ell, A, rep_t.linear_complexity, ntu.k, lc_tbar):
            preds.append(pr.check(lc_Tbar if pr.quantity == "lc_Tbar" else rep_T.linear_complexity))

    if ell == 2:
        sr = large_lc_conditions(p)
        measured = {"min_poly_t": rep_t.minimal_poly, "min_poly_T": rep_T.minimal_poly,
                    "lc_t": rep_t.linear_complexity, "lc_T": rep_T.linear_complexity}
        for pr in min_poly_predict(p, m, A, *(sr or (None, None))):
            preds.append(pr.check(measured[pr.quantity]))
        if A != 0:
            pred_T = predicted_T_profile(ctx, A)
            meas_T = autocorrelation_profile(T).values
            preds.append(Prediction("acf_value", {**prm, "seq": "T"}, pred_T, "three-valued T_A distribution")
                         .check(meas_T))
        else:
            preds.append(_not_met("acf_value", {**prm, "seq": "T"}, "A=0 distribution is not restated"))

    shifts = [] if e is None else ([e] if isinstance(e, (int, np.integer)) else list(e))
    for shift in shifts:
        preds += _verify_interleaved(ctx, ntu, R, int(shift), rep_T, bm_limit)

    _check_agreement(preds)
    return preds


def _verify_interleaved(ctx, ntu, R, e, rep_T, bm_limit) -> list[Prediction]:
    p, m, A = ctx.p, ctx.m, ntu.A
    prm = _params(p, m, ntu.ell, A, e)
    if ntu.ell != 2:
        return [_not_met("lc_interleaved", prm, "interleaving requires ell = 2")]
    S = proposed_sequence(ntu, ctx, e, mseq=R)
    out = []
    j0 = interleaved_j0(ctx, e)
    if m % 2 == 0:
        out.append(Prediction("even_m_routing", prm, "no j0", "remark: m even excludes j0")
                   .check("no j0" if j0 is None else f"j0={j0}"))
    if A != 0:
        why = "odd shifts: " + ("no j0" if j0 is None else f"merged case, j0={j0}")
        out.append(Prediction("acf_value", {**prm, "seq": "Se"}, predicted_interleaved_profile(ctx, A, e), why)
                   .check(autocorrelation_profile(S).values))
    rep_S = _measure_lc(S, bm_limit)
    for pr in lc_predict_interleaved(p, m, A, e, lc_T=rep_T.linear_complexity, min_poly_T=rep_T.minimal_poly):
        if pr.quantity == "lc_interleaved":
            out.append(pr.check(rep_S.linear_complexity))
        elif pr.quantity == "min_poly_interleaved":
            out.append(pr.check(rep_S.minimal_poly))
        else:
            out.append(pr.check(measured_bounds_tag(rep_S.linear_complexity, ctx.order)))
    return out


# reports

REPORT_COLUMNS = ("p", "m", "ell", "A", "e", "quantity", "applicability", "predicted", "measured", "status")


def _sort_key(row: dict):
    e = -1 if row["e"] in (None, "") else int(row["e"])
    return (row["p"], row["m"], row["ell"], row["A"], e, row["quantity"], row["applicability"])


def report_rows(preds: list[Prediction]) -> list[dict]:
    return sorted((pr.row() for pr in preds), key=_sort_key)


def report_csv(rows: list[dict]) -> str:
    import csv

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row[k] is None else row[k]) for k in REPORT_COLUMNS})
    return buf.getvalue()


def report_json(rows: list[dict]) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, "rows": rows}, sort_keys=True, indent=2) + "\n"


def report_table(rows: list[dict], width: int = 48) -> str:
    def clip(s):
        s = "" if s is None else str(s)
        return s if len(s) <= width else s[: width - 3] + "..."

    cells = [[clip(r[c]) for c in REPORT_COLUMNS] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(REPORT_COLUMNS)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(REPORT_COLUMNS, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def any_violated(rows: list[dict]) -> bool:
    return any(r["status"] == "violated" for r in rows)


# sweeps

def _sweep_task(task) -> list[dict]:
    p, m, ell, A, shifts, poly, bm_limit = task
    return report_rows(verify_tuple(p, m, A, shifts, ell, poly, bm_limit=bm_limit))


def run_sweep(tasks: list[tuple], jobs: int = 1) -> list[dict]:
    """Verify every ``(p, m, ell, A, shifts, poly, bm_limit)`` task; rows come back in canonical order."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_sweep_task, tasks))
    else:
        chunks = [_sweep_task(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    return sorted(rows, key=_sort_key)
