"""Periodic cross- and autocorrelation of binary sequences, in exact integers."""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ._validation import ParameterError, check_binary
from .seqgen import SymbolSequence

try:  # GMP multiplication is several times faster for the slot products
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int


@dataclass(frozen=True, eq=False)
class CorrelationProfile:
    """``values[tau]`` for every shift ``tau`` in ``[0, N)``."""

    values: np.ndarray
    params: dict = field(default_factory=dict)

    @property
    def period(self) -> int:
        return int(self.values.size)

    @property
    def distribution(self) -> dict[int, int]:
        """Multiset of values as ``{value: count}``, sorted by value."""
        return dict(sorted(Counter(int(v) for v in self.values).items()))

    def __getitem__(self, tau: int) -> int:
        return int(self.values[tau % self.period])

    def __eq__(self, other):
        if not isinstance(other, CorrelationProfile):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    __hash__ = None


def _check_pair(a: SymbolSequence, b: SymbolSequence) -> None:
    check_binary(a.ell, "correlation")
    check_binary(b.ell, "correlation")
    if a.period != b.period:
        raise ParameterError(f"periods differ: {a.period} vs {b.period}")


def cross_correlation(a: SymbolSequence, b: SymbolSequence, tau: int) -> int:
    """``sum_i (-1)^(a_i + b_{i+tau})`` with indices and tau taken mod N."""
    _check_pair(a, b)
    N = a.period
    mismatches = int(np.count_nonzero(a.symbols != np.roll(b.symbols, -(tau % N))))
    return N - 2 * mismatches


def _slot_dtype(n: int) -> np.dtype:
    return np.dtype("<u2") if n < (1 << 16) else np.dtype("<u4")


def _pack_slots(arr: np.ndarray, dtype: np.dtype):
    return _bigint(int.from_bytes(arr.astype(dtype).tobytes(), "little"))


def _cyclic_matches(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``c[tau] = sum_i a_i b_{i+tau}`` for 0/1 vectors, via one big-integer product.

    The reversed ``a`` and ``b`` are packed into fixed-width slots (no slot can
    overflow, each coefficient is at most N); the linear product is then folded
    into the cyclic one.
    """
    N = a.size
    dtype = _slot_dtype(N + 1)
    prod = int(_pack_slots(a[::-1], dtype) * _pack_slots(b, dtype))
    coeffs = np.frombuffer(prod.to_bytes(2 * N * dtype.itemsize, "little"), dtype=dtype).astype(np.int64)
    out = coeffs[N - 1 : 2 * N - 1].copy()
    out[1:] += coeffs[: N - 1]
    return out


def cross_correlation_profile(a: SymbolSequence, b: SymbolSequence) -> CorrelationProfile:
    _check_pair(a, b)
    x = a.symbols.astype(np.int64)
    y = b.symbols.astype(np.int64)
    N = a.period
    c = _cyclic_matches(x, y)
    values = N - 2 * (int(x.sum()) + int(y.sum()) - 2 * c)
    return CorrelationProfile(values, {"a": dict(a.params), "b": dict(b.params)})


def autocorrelation_profile(seq: SymbolSequence) -> CorrelationProfile:
    check_binary(seq.ell, "correlation")
    x = seq.symbols.astype(np.int64)
    N = seq.period
    c = _cyclic_matches(x, x)
    values = N - 4 * (int(x.sum()) - c)
    return CorrelationProfile(values, dict(seq.params))


def autocorrelation(seq: SymbolSequence, tau: int) -> int:
    return cross_correlation(seq, seq, tau)


def profile_to_csv(profile: CorrelationProfile) -> str:
    """CSV with header ``tau,value``; one exact integer row per shift."""
    buf = io.StringIO()
    buf.write("tau,value\n")
    for tau, v in enumerate(profile.values.tolist()):
        buf.write(f"{tau},{v}\n")
    return buf.getvalue()


def profile_from_csv(text: str) -> CorrelationProfile:
    lines = text.strip().splitlines()
    if not lines or lines[0].strip() != "tau,value":
        raise ParameterError("expected header 'tau,value'")
    rows = [ln.split(",") for ln in lines[1:]]
    taus = [int(r[0]) for r in rows]
    if taus != list(range(len(taus))):
        raise ParameterError("tau column must enumerate 0 .. N-1")
    return CorrelationProfile(np.array([int(r[1]) for r in rows], dtype=np.int64))
