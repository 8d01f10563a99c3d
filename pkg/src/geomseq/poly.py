"""Dense polynomials over a prime field F_ell.

Over F_2 the heavy operations (multiplication, division, gcd) run on Python
integers used as bitsets, bit ``i`` holding the coefficient of ``x^i``.  That
keeps the gcd of degree ~2*10^5 polynomials well under a second.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._validation import ParameterError, is_prime

ZERO_DEGREE = -1  # degree reported for the zero polynomial; callers test is_zero() instead


def _bits_to_coeffs(bits: int) -> tuple[int, ...]:
    if bits == 0:
        return ()
    raw = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return tuple(arr[: bits.bit_length()].tolist())


def _coeffs_to_bits(coeffs) -> int:
    if not len(coeffs):
        return 0
    arr = np.asarray(coeffs, dtype=np.uint8)
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _gf2_mul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def _gf2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_divmod(a, b)[1]
    return a


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class DensePoly:
    """Ascending coefficients over F_ell, normalized with no trailing zeros."""

    coeffs: tuple[int, ...]
    ell: int

    def __post_init__(self):
        if not is_prime(self.ell):
            raise ParameterError(f"ell must be prime, got {self.ell}")
        object.__setattr__(self, "coeffs", _trim(int(c) % self.ell for c in self.coeffs))

    @classmethod
    def from_bits(cls, bits: int) -> DensePoly:
        poly = cls((), 2)
        object.__setattr__(poly, "coeffs", _bits_to_coeffs(bits))
        poly.__dict__["bits"] = bits
        return poly

    @classmethod
    def monomial(cls, n: int, ell: int, c: int = 1) -> DensePoly:
        return cls((0,) * n + (c,), ell)

    @classmethod
    def x_n_minus_one(cls, n: int, ell: int) -> DensePoly:
        if ell == 2:
            return cls.from_bits((1 << n) | 1)
        return cls((ell - 1,) + (0,) * (n - 1) + (1,), ell)

    @classmethod
    def from_terms(cls, terms: dict[int, int], ell: int) -> DensePoly:
        """Build from a sparse ``{exponent: coefficient}`` map."""
        if not terms:
            return cls((), ell)
        if ell == 2:
            bits = 0
            for k, c in terms.items():
                if c % 2:
                    bits ^= 1 << k
            return cls.from_bits(bits)
        coeffs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            coeffs[k] = (coeffs[k] + c) % ell
        return cls(tuple(coeffs), ell)

    @cached_property
    def bits(self) -> int:
        if self.ell != 2:
            raise ParameterError("bit representation exists only over F_2")
        return _coeffs_to_bits(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if self.is_zero():
            raise ParameterError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: DensePoly) -> None:
        if not isinstance(other, DensePoly) or other.ell != self.ell:
            raise ParameterError("polynomials must share the same field")

    def __add__(self, other: DensePoly) -> DensePoly:
        self._check(other)
        if self.ell == 2:
            return DensePoly.from_bits(self.bits ^ other.bits)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return DensePoly(tuple(x + y for x, y in zip(a, b)), self.ell)

    def __neg__(self) -> DensePoly:
        return DensePoly(tuple(-c for c in self.coeffs), self.ell)

    def __sub__(self, other: DensePoly) -> DensePoly:
        return self + (-other)

    def scale(self, c: int) -> DensePoly:
        return DensePoly(tuple(c * x for x in self.coeffs), self.ell)

    def __mul__(self, other: DensePoly) -> DensePoly:
        self._check(other)
        if self.ell == 2:
            return DensePoly.from_bits(_gf2_mul(self.bits, other.bits))
        if self.is_zero() or other.is_zero():
            return DensePoly((), self.ell)
        prod = np.convolve(np.asarray(self.coeffs, dtype=object), np.asarray(other.coeffs, dtype=object))
        return DensePoly(tuple(int(c) for c in prod), self.ell)

    def __divmod__(self, other: DensePoly) -> tuple[DensePoly, DensePoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.ell == 2:
            q, r = _gf2_divmod(self.bits, other.bits)
            return DensePoly.from_bits(q), DensePoly.from_bits(r)
        ell = self.ell
        rem = list(self.coeffs)
        db = other.degree
        inv = pow(other.leading(), -1, ell)
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv % ell
            if c:
                quot[k - db] = c
                for i, bc in enumerate(other.coeffs):
                    rem[k - db + i] = (rem[k - db + i] - c * bc) % ell
        return DensePoly(tuple(quot), ell), DensePoly(tuple(rem[:db]), ell)

    def __floordiv__(self, other: DensePoly) -> DensePoly:
        return divmod(self, other)[0]

    def __mod__(self, other: DensePoly) -> DensePoly:
        return divmod(self, other)[1]

    def exact_div(self, other: DensePoly) -> DensePoly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division leaves a nonzero remainder")
        return q

    def monic(self) -> DensePoly:
        if self.is_zero():
            return self
        return self.scale(pow(self.leading(), -1, self.ell))

    def reciprocal(self, degree: int | None = None) -> DensePoly:
        """``x^degree * f(1/x)``, with ``degree`` defaulting to ``deg f``."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise ParameterError("reciprocal degree below the polynomial degree")
        padded = self.coeffs + (0,) * (n + 1 - len(self.coeffs))
        return DensePoly(padded[::-1], self.ell)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.ell
        return acc

    def __str__(self) -> str:
        return format_sparse(self)

    def to_hex(self) -> str:
        return to_hex(self)


def poly_gcd(a: DensePoly, b: DensePoly) -> DensePoly:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) = 0)."""
    a._check(b)
    if a.ell == 2:
        return DensePoly.from_bits(_gf2_gcd(a.bits, b.bits))
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# text forms

def format_sparse(poly: DensePoly) -> str:
    """Sparse term list, highest degree first: ``x^24388 + x^871 + 1``."""
    if poly.is_zero():
        return "0"
    if poly.ell == 2:
        exps = []
        bits = poly.bits
        while bits:
            top = bits.bit_length() - 1
            exps.append(top)
            bits ^= 1 << top
        terms = [(k, 1) for k in exps]
    else:
        terms = [(k, c) for k, c in reversed(list(enumerate(poly.coeffs))) if c]
    out = []
    for k, c in terms:
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if c == 1:
            out.append(mono)
        elif k == 0:
            out.append(str(c))
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)


_TERM = re.compile(r"^(?:(\d+)\*)?(?:(x)(?:\^(\d+))?|(\d+))$")


def parse_sparse(text: str, ell: int) -> DensePoly:
    text = text.strip()
    if text == "0":
        return DensePoly((), ell)
    terms: dict[int, int] = {}
    for raw in text.split("+"):
        tok = raw.strip().replace(" ", "")
        match = _TERM.match(tok)
        if not match:
            raise ParameterError(f"cannot parse polynomial term {raw.strip()!r}")
        coef, x, exp, const = match.groups()
        if x:
            k = int(exp) if exp else 1
            c = int(coef) if coef else 1
        else:
            if coef:
                raise ParameterError(f"cannot parse polynomial term {raw.strip()!r}")
            k, c = 0, int(const)
        terms[k] = (terms.get(k, 0) + c) % ell
    return DensePoly.from_terms(terms, ell)


def to_hex(poly: DensePoly) -> str:
    """Hex dump: ``0x..`` of the coefficient bitset over F_2, else ``:``-joined hex coefficients."""
    if poly.ell == 2:
        return hex(poly.bits)
    return ":".join(format(c, "x") for c in poly.coeffs) if poly.coeffs else ""


def from_hex(text: str, ell: int) -> DensePoly:
    text = text.strip()
    if ell == 2:
        return DensePoly.from_bits(int(text, 16))
    if not text:
        return DensePoly((), ell)
    return DensePoly(tuple(int(c, 16) for c in text.split(":")), ell)
