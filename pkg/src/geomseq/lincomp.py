"""Linear complexity and minimal polynomials of periodic sequences over F_ell.

Two independent routes are provided: Berlekamp-Massey over two full periods,
and the closed form ``(x^N - 1) / gcd(x^N - 1, S(x))``.  Both report the
minimal polynomial as the monic characteristic polynomial
``x^L - a_{L-1} x^{L-1} - ... - a_0`` of the shortest recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._validation import ParameterError
from .poly import DensePoly, poly_gcd
from .seqgen import SymbolSequence


@dataclass(frozen=True)
class LcReport:
    linear_complexity: int
    minimal_poly: DensePoly
    method: str
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.minimal_poly.degree != self.linear_complexity:
            raise ArithmeticError("minimal polynomial degree disagrees with the linear complexity")


def _bm_gf2(symbols) -> tuple[int, int]:
    """Binary Berlekamp-Massey on bitsets; returns ``(L, C)`` with C the connection polynomial."""
    C = B = 1
    L, gap = 0, 1
    window = 0  # bit i holds s_{n-i}
    for n, s in enumerate(symbols):
        window = (window << 1) | s
        if (C & window).bit_count() & 1:
            if 2 * L <= n:
                C, B = C ^ (B << gap), C
                L, gap = n + 1 - L, 1
            else:
                C ^= B << gap
                gap += 1
        else:
            gap += 1
    return L, C


def _bm_generic(s: np.ndarray, ell: int) -> tuple[int, list[int]]:
    C = [1]
    B = [1]
    L, gap, b = 0, 1, 1
    for n in range(len(s)):
        d = int(s[n])
        taps = C[1 : L + 1]
        if taps:
            d += int(np.dot(np.asarray(taps, dtype=np.int64), s[n - 1 :: -1][: len(taps)]))
        d %= ell
        if d == 0:
            gap += 1
            continue
        coef = d * pow(b, -1, ell) % ell
        new = C + [0] * max(0, len(B) + gap - len(C))
        for i, bc in enumerate(B):
            new[i + gap] = (new[i + gap] - coef * bc) % ell
        if 2 * L <= n:
            B, b = C, d
            L, gap = n + 1 - L, 1
        else:
            gap += 1
        C = new
    return L, C[: L + 1] + [0] * max(0, L + 1 - len(C))


def berlekamp_massey(seq: SymbolSequence) -> LcReport:
    """Shortest LFSR for two full periods of ``seq``."""
    ell = seq.ell
    doubled = np.concatenate([seq.symbols, seq.symbols]).astype(np.int64)
    if ell == 2:
        L, C = _bm_gf2(doubled.tolist())
        conn = DensePoly.from_bits(C)
    else:
        L, Clist = _bm_generic(doubled, ell)
        conn = DensePoly(tuple(Clist), ell)
    minimal = conn.reciprocal(L)
    return LcReport(L, minimal, "berlekamp_massey", dict(seq.params))


def sequence_poly(seq: SymbolSequence) -> DensePoly:
    """``S(x) = S_0 + S_1 x + ... + S_{N-1} x^{N-1}``."""
    if seq.ell == 2:
        return DensePoly.from_bits(seq.packed)
    return DensePoly(tuple(int(s) for s in seq.symbols), seq.ell)


def minimal_poly_gcd(seq: SymbolSequence) -> LcReport:
    """``L = N - deg gcd(x^N - 1, S(x))``.

    The quotient ``(x^N - 1) / gcd`` is the connection polynomial; its
    reciprocal, made monic, is returned as the minimal polynomial.
    """
    N = seq.period
    xn1 = DensePoly.x_n_minus_one(N, seq.ell)
    g = poly_gcd(xn1, sequence_poly(seq))
    if g.is_zero():
        g = xn1.monic()
    conn = xn1.exact_div(g)
    L = N - g.degree
    return LcReport(L, conn.reciprocal(L).monic(), "gcd", dict(seq.params))


def linear_complexity(seq: SymbolSequence, method: str = "gcd") -> int:
    if method == "gcd":
        return minimal_poly_gcd(seq).linear_complexity
    if method in ("bm", "berlekamp_massey"):
        return berlekamp_massey(seq).linear_complexity
    raise ParameterError(f"unknown method {method!r}")


def binom_mod(n: int, k: int, ell: int) -> int:
    """``C(n, k) mod ell`` by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % ell, k % ell
        if ki > ni:
            return 0
        num = den = 1
        for t in range(ki):
            num = num * (ni - t) % ell
            den = den * (t + 1) % ell
        out = out * num * pow(den, -1, ell) % ell
        n //= ell
        k //= ell
    return out


def _binom_column(degree: int, k: int, ell: int) -> np.ndarray:
    """``C(i, k) mod ell`` for i = 0 .. degree, vectorized over the base-ell digits."""
    i = np.arange(degree + 1, dtype=np.int64)
    out = np.ones_like(i)
    kk = k
    ii = i.copy()
    while kk or ii.any():
        ki = kk % ell
        ni = ii % ell
        digit = np.array([binom_mod(int(v), ki, ell) for v in range(ell)], dtype=np.int64)
        out = out * digit[ni] % ell
        ii //= ell
        kk //= ell
    return out


def hasse_derivative(poly: DensePoly, k: int) -> DensePoly:
    """k-th Hasse derivative: coefficient ``i - k`` is ``C(i, k) a_i``."""
    if k < 0:
        raise ParameterError("derivative order must be non-negative")
    if k == 0 or poly.is_zero():
        return poly
    if k > poly.degree:
        return DensePoly((), poly.ell)
    a = np.asarray(poly.coeffs, dtype=np.int64)
    weighted = (a * _binom_column(poly.degree, k, poly.ell)) % poly.ell
    return DensePoly(tuple(weighted[k:].tolist()), poly.ell)


def hasse_at_one(poly: DensePoly, k: int) -> int:
    if poly.is_zero() or k > poly.degree:
        return 0
    a = np.asarray(poly.coeffs, dtype=np.int64)
    return int((a * _binom_column(poly.degree, k, poly.ell)).sum() % poly.ell)


def multiplicity_at_one(poly: DensePoly) -> int:
    """Multiplicity of 1 as a root: the first k whose Hasse derivative is nonzero at 1."""
    if poly.is_zero():
        raise ParameterError("the zero polynomial has unbounded multiplicity")
    for v in range(poly.degree + 1):
        if hasse_at_one(poly, v):
            return v
    raise ArithmeticError("a nonzero polynomial must have a nonvanishing Hasse derivative")  # unreachable


def offset_lc_change(seq: SymbolSequence, a: int = 1) -> int:
    """``L(S + a) - L(S)`` for a constant ``a != 0``: +1, -1 or 0.

    Compares the multiplicity M of 1 in ``x^N - 1`` with that of ``S(x)``.
    At least M gives +1, below M - 1 gives 0.  Exactly M - 1 gives -1 when
    ``a`` cancels the leading Hasse term of ``S`` at 1 and 0 otherwise; over
    F_2 it always cancels, which is the classical three-case rule.
    """
    ell = seq.ell
    a %= ell
    if a == 0:
        raise ParameterError("the offset must be nonzero")
    total = multiplicity_at_one(DensePoly.x_n_minus_one(seq.period, ell))
    S = sequence_poly(seq)
    if S.is_zero():
        return 1
    own = multiplicity_at_one(S)
    if own >= total:
        return 1
    if own < total - 1:
        return 0
    ones = DensePoly((1,) * seq.period, ell)  # (x^N - 1) / (x - 1)
    return -1 if (hasse_at_one(S, own) + a * hasse_at_one(ones, own)) % ell == 0 else 0
