"""Sequence families: the m-sequence, generalized NTU sequences, their
complements and short companions, cyclic shifts and interleavings.

Every constructor returns a :class:`SymbolSequence` holding exactly one
period and a ``params`` record describing how it was built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._validation import ParameterError, check_alphabet, check_binary, check_shift
from .gf import CyclotomicContext, ExtFieldContext, trace

TAGS = ("T", "t", "Tbar", "tbar", "Se", "custom")


@dataclass(frozen=True, eq=False)
class SymbolSequence:
    """One full period of a sequence over F_ell."""

    symbols: np.ndarray
    ell: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.asarray(self.symbols)
        if arr.ndim != 1 or arr.size == 0:
            raise ParameterError("a sequence needs a non-empty one-dimensional period")
        if arr.dtype.kind not in "iub":
            raise ParameterError(f"symbols must be integers, got dtype {arr.dtype}")
        if arr.min() < 0 or arr.max() >= self.ell:
            raise ParameterError(f"symbols must lie in [0, {self.ell - 1}]")
        dtype = np.uint8 if self.ell <= 256 else np.int64
        arr = arr.astype(dtype, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "symbols", arr)
        object.__setattr__(self, "params", dict(self.params))

    @classmethod
    def from_symbols(cls, symbols, ell: int = 2, tag: str = "custom") -> SymbolSequence:
        return cls(np.asarray(symbols), ell, {"ell": ell, "seq": tag})

    @property
    def period(self) -> int:
        return int(self.symbols.size)

    def __len__(self):
        return self.period

    def __getitem__(self, n: int) -> int:
        return int(self.symbols[n % self.period])

    def __eq__(self, other):
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return self.ell == other.ell and np.array_equal(self.symbols, other.symbols)

    __hash__ = None

    @cached_property
    def packed(self) -> int:
        """The period as an integer with bit ``n`` equal to ``S_n`` (ell = 2 only)."""
        check_binary(self.ell, "bit packing")
        raw = np.packbits(self.symbols, bitorder="little").tobytes()
        return int.from_bytes(raw, "little")

    def tolist(self) -> list[int]:
        return [int(s) for s in self.symbols]

    def with_params(self, **updates) -> SymbolSequence:
        return SymbolSequence(self.symbols, self.ell, {**self.params, **updates})

    def __repr__(self):
        head = "".join(str(int(s)) for s in self.symbols[:24]) if self.ell <= 10 else "..."
        more = "..." if self.period > 24 else ""
        return f"SymbolSequence(period={self.period}, ell={self.ell}, {head}{more}, tag={self.params.get('seq')})"


@dataclass(frozen=True)
class NtuParams:
    """Parameters of the feedforward map: ``A`` in F_p and the class index ``k`` of A."""

    p: int
    m: int
    ell: int
    A: int
    k: int
    cyclotomy: CyclotomicContext = field(repr=False, compare=False)

    @classmethod
    def from_context(cls, ctx: ExtFieldContext, ell: int, A) -> NtuParams:
        ell = check_alphabet(ell, ctx.p)
        A = int(A) % ctx.p
        cyc = ctx.cyclotomy(ell)
        k = cyc.class_of[A] if A else 0
        return cls(ctx.p, ctx.m, ell, A, k, cyc)

    @cached_property
    def rho_table(self) -> np.ndarray:
        """``rho_A(x)`` for every x in F_p."""
        table = np.zeros(self.p, dtype=np.int64)
        for x in range(self.p):
            y = (x + self.A) % self.p
            table[x] = 0 if y == 0 else self.cyclotomy.class_of[y]
        return table


def _base_params(params: NtuParams, ctx: ExtFieldContext, tag: str, **extra) -> dict:
    return {
        "p": ctx.p,
        "m": ctx.m,
        "ell": params.ell,
        "A": params.A,
        "e": None,
        "poly": ctx.primitive_poly,
        "seq": tag,
        **extra,
    }


def m_sequence(ctx: ExtFieldContext) -> np.ndarray:
    """``R_n = Tr(w^n)`` for one period ``n = 0 .. p^m - 2``.

    ``w^n`` is advanced by one multiplication by ``w`` per step; the trace is
    applied through its values on the polynomial basis.
    """
    p, m = ctx.p, ctx.m
    basis_trace = [trace(ctx.omega**i).value for i in range(m)]
    poly = ctx.primitive_poly
    state = [1] + [0] * (m - 1)
    out = np.empty(ctx.order, dtype=np.int64)
    for n in range(ctx.order):
        out[n] = sum(c * t for c, t in zip(state, basis_trace)) % p
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [(s - top * f) % p for s, f in zip(state, poly)]
    return out


def ntu_map(x, params: NtuParams) -> int:
    """``rho_A(x)``: 0 when ``x + A = 0``, otherwise the class index of ``x + A``."""
    return int(params.rho_table[int(x) % params.p])


def _true_long_period(params: NtuParams, ctx: ExtFieldContext) -> int:
    return params.ell * ctx.nu if params.A == 0 else ctx.order


def generalized_ntu(params: NtuParams, ctx: ExtFieldContext, *, mseq: np.ndarray | None = None) -> SymbolSequence:
    """``T_A``: the m-sequence passed through ``rho_A``.

    Period ``p^m - 1`` for nonzero A and ``ell * nu`` for ``A = 0``.
    """
    R = m_sequence(ctx) if mseq is None else mseq
    symbols = params.rho_table[R][: _true_long_period(params, ctx)]
    return SymbolSequence(symbols, params.ell, _base_params(params, ctx, "T"))


def short_companion(params: NtuParams, ctx: ExtFieldContext) -> SymbolSequence:
    """``t_A``: ``rho_A`` applied to the powers of ``g = w^nu``; period ``p - 1``.

    For ``A = 1`` this is the ell-ary Sidel'nikov sequence.
    """
    p, g = ctx.p, ctx.g
    powers = np.empty(p - 1, dtype=np.int64)
    x = 1
    for n in range(p - 1):
        powers[n] = x
        x = x * g % p
    return SymbolSequence(params.rho_table[powers], params.ell, _base_params(params, ctx, "t"))


def complement_sequence(seq: SymbolSequence, k: int) -> SymbolSequence:
    """Subtract ``k`` from every symbol in F_ell."""
    symbols = (seq.symbols.astype(np.int64) - k) % seq.ell
    tag = {"T": "Tbar", "t": "tbar", "Tbar": "T", "tbar": "t"}.get(seq.params.get("seq"), "custom")
    return SymbolSequence(symbols, seq.ell, {**seq.params, "seq": tag})


def _complement_shift(params: NtuParams) -> int:
    # ell = 2 always flips bits, which is the binary complement used for interleaving
    if params.ell == 2:
        return 1
    if params.A == 0 or params.k == 0:
        raise ParameterError("for ell > 2 the complement is defined only for A in D_k with k != 0")
    return params.k


def ntu_complement(params: NtuParams, ctx: ExtFieldContext, *, mseq: np.ndarray | None = None) -> SymbolSequence:
    """``T̄_A``; for ell = 2 this is the bitwise complement ``1 - T_A``."""
    return complement_sequence(generalized_ntu(params, ctx, mseq=mseq), _complement_shift(params))


def short_complement(params: NtuParams, ctx: ExtFieldContext) -> SymbolSequence:
    return complement_sequence(short_companion(params, ctx), _complement_shift(params))


def left_cyclic_shift(seq: SymbolSequence, e: int) -> SymbolSequence:
    """``L^e(S)_n = S_{n+e}``."""
    return SymbolSequence(np.roll(seq.symbols, -int(e)), seq.ell, seq.params)


def interleave(family: list[SymbolSequence]) -> SymbolSequence:
    """``U_{j*T + i} = S^(i)_j`` for a family of T sequences of equal period."""
    if not family:
        raise ParameterError("cannot interleave an empty family")
    ell, period = family[0].ell, family[0].period
    if any(s.ell != ell or s.period != period for s in family):
        raise ParameterError("interleaved sequences must share alphabet and period")
    symbols = np.stack([s.symbols for s in family], axis=1).ravel()
    params = dict(family[0].params) if len(family) == 1 else {**family[0].params, "seq": "custom"}
    return SymbolSequence(symbols, ell, params)


def deinterleave(seq: SymbolSequence, count: int) -> list[SymbolSequence]:
    if count < 1 or seq.period % count:
        raise ParameterError(f"period {seq.period} is not divisible by {count}")
    return [SymbolSequence(seq.symbols[i::count], seq.ell, {**seq.params, "seq": "custom"}) for i in range(count)]


def proposed_sequence(params: NtuParams, ctx: ExtFieldContext, e: int, *, mseq: np.ndarray | None = None) -> SymbolSequence:
    """``S^e``: interleaving of ``T_A`` with ``L^e`` of its complement (ell = 2)."""
    check_binary(params.ell, "the interleaved construction")
    T = generalized_ntu(params, ctx, mseq=mseq)
    e = check_shift(e, T.period)
    Tbar = complement_sequence(T, 1)
    S = interleave([T, left_cyclic_shift(Tbar, e)])
    return S.with_params(**_base_params(params, ctx, "Se", e=e))


def build_sequence(ctx: ExtFieldContext, ell: int, A, kind: str = "T", e: int | None = None) -> SymbolSequence:
    """Construct one of ``T``, ``t``, ``Tbar``, ``tbar`` or ``Se`` by name."""
    params = NtuParams.from_context(ctx, ell, A)
    if kind == "T":
        return generalized_ntu(params, ctx)
    if kind == "t":
        return short_companion(params, ctx)
    if kind == "Tbar":
        return ntu_complement(params, ctx)
    if kind == "tbar":
        return short_complement(params, ctx)
    if kind == "Se":
        if e is None:
            raise ParameterError("the interleaved sequence needs a shift e")
        return proposed_sequence(params, ctx, e)
    raise ParameterError(f"unknown sequence kind {kind!r}; expected one of T, t, Tbar, tbar, Se")


def balance_count(seq: SymbolSequence) -> dict[int, int]:
    counts = np.bincount(seq.symbols.astype(np.int64), minlength=seq.ell)
    return {s: int(c) for s, c in enumerate(counts)}


def minimal_period(seq: SymbolSequence) -> int:
    """Smallest divisor ``d`` of the stored period with ``S_{n+d} = S_n``."""
    n = seq.period
    for d in range(1, n + 1):
        if n % d == 0 and np.array_equal(seq.symbols, np.roll(seq.symbols, -d)):
            return d
    return n


# serialization

def _format_poly_field(poly) -> str:
    return "-" if poly is None else ",".join(str(c) for c in poly)


def to_text(seq: SymbolSequence) -> str:
    """Two-line text form: a ``key=value`` header and the symbols.

    Symbols are written as contiguous digits for ell <= 10 and comma separated
    otherwise.
    """
    prm = seq.params
    fields = [
        f"p={prm.get('p', '-')}",
        f"m={prm.get('m', '-')}",
        f"ell={seq.ell}",
        f"A={prm.get('A', '-')}",
        f"e={'-' if prm.get('e') is None else prm['e']}",
        f"poly={_format_poly_field(prm.get('poly'))}",
        f"seq={prm.get('seq', 'custom')}",
        f"period={seq.period}",
    ]
    sep = "" if seq.ell <= 10 else ","
    body = sep.join(str(int(s)) for s in seq.symbols)
    return " ".join(fields) + "\n" + body + "\n"


def from_text(text: str) -> SymbolSequence:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ParameterError("expected a header line and a symbol line")
    header = {}
    for item in lines[0].split():
        key, _, value = item.partition("=")
        header[key] = value
    try:
        ell = int(header["ell"])
        period = int(header["period"])
    except (KeyError, ValueError) as exc:
        raise ParameterError("header must carry integer ell= and period=") from exc
    body = lines[1].strip()
    symbols = [int(s) for s in body.split(",")] if ell > 10 else [int(ch) for ch in body]
    if len(symbols) != period:
        raise ParameterError(f"header says period {period}, body has {len(symbols)} symbols")

    def opt_int(key):
        v = header.get(key, "-")
        return None if v == "-" else int(v)

    poly = header.get("poly", "-")
    params = {
        "p": opt_int("p"),
        "m": opt_int("m"),
        "ell": ell,
        "A": opt_int("A"),
        "e": opt_int("e"),
        "poly": None if poly == "-" else tuple(int(c) for c in poly.split(",")),
        "seq": header.get("seq", "custom"),
    }
    return SymbolSequence(np.asarray(symbols), ell, params)


def to_bytes(seq: SymbolSequence) -> bytes:
    """Raw bit-packed period (bit n of byte n // 8, LSB first); ell = 2 only."""
    check_binary(seq.ell, "binary serialization")
    return np.packbits(seq.symbols, bitorder="little").tobytes()


def from_bytes(data: bytes, period: int, params: dict | None = None) -> SymbolSequence:
    if len(data) != (period + 7) // 8:
        raise ParameterError(f"{len(data)} bytes cannot hold exactly {period} bits")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    if bits[period:].any():
        raise ParameterError("padding bits must be zero")
    return SymbolSequence(bits[:period], 2, dict(params or {"ell": 2, "seq": "custom"}))
