"""Exact arithmetic in F_p and F_{p^m}.

Elements of the extension field are coefficient tuples in the polynomial basis
``1, w, ..., w^(m-1)`` (ascending degree) modulo a monic primitive polynomial,
whose root ``w`` is the primitive element used to build m-sequences.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property

from ._validation import (
    ParameterError,
    check_alphabet,
    check_capacity,
    check_degree,
    check_odd_prime,
    prime_factors,
)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol ``(a/p)`` by Euler's criterion."""
    p = check_odd_prime(p)
    a = int(a) % p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def multiplicative_order(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ParameterError("0 has no multiplicative order")
    order = p - 1
    for q in prime_factors(p - 1):
        while order % q == 0 and pow(x, order // q, p) == 1:
            order //= q
    return order


def is_primitive_root(g: int, p: int) -> bool:
    g %= p
    return g != 0 and all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo the prime ``p``."""
    for g in range(1, p):
        if is_primitive_root(g, p):
            return g
    raise ParameterError(f"no primitive root mod {p}")  # unreachable for primes


@dataclass(frozen=True)
class PrimeFieldElement:
    """A residue ``value`` in F_p."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ParameterError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return PrimeFieldElement(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElement(pow(self.value, n, self.p), self.p)

    def inverse(self) -> PrimeFieldElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


# polynomials over F_p as ascending coefficient tuples

def _poly_mulmod(a: tuple, b: tuple, modulus: tuple, p: int) -> tuple:
    """``a * b mod modulus`` where a, b have length m and modulus is monic of degree m."""
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(2 * m - 2, m - 1, -1):
        c = prod[k] % p
        if c:
            shift = k - m
            for i in range(m):
                prod[shift + i] -= c * modulus[i]
    return tuple(c % p for c in prod[:m])


def _poly_powmod(base: tuple, n: int, modulus: tuple, p: int) -> tuple:
    m = len(modulus) - 1
    result = (1,) + (0,) * (m - 1)
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        n >>= 1
    return result


def _check_poly_shape(poly, p: int) -> tuple:
    poly = tuple(int(c) for c in poly)
    if len(poly) < 3:
        raise ParameterError("primitive polynomial must have degree m > 1")
    if any(not 0 <= c < p for c in poly):
        raise ParameterError(f"polynomial coefficients must lie in [0, {p - 1}]")
    if poly[-1] != 1:
        raise ParameterError("primitive polynomial must be monic (leading coefficient 1)")
    return poly


def is_primitive_polynomial(poly, p: int) -> bool:
    """True iff the monic ``poly`` (ascending coefficients) has a root of order p^m - 1.

    A unit of order p^m - 1 in F_p[x]/(f) forces every nonzero residue to be a
    unit, so this also certifies irreducibility.
    """
    p = check_odd_prime(p)
    poly = _check_poly_shape(poly, p)
    if poly[0] == 0:
        return False
    m = len(poly) - 1
    order = p**m - 1
    x = (0, 1) + (0,) * (m - 2)
    one = (1,) + (0,) * (m - 1)
    if _poly_powmod(x, order, poly, p) != one:
        return False
    return all(_poly_powmod(x, order // q, poly, p) != one for q in prime_factors(order))


def find_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest primitive polynomial of degree ``m`` over F_p.

    Candidates are ordered by their ascending coefficient tuple, constant term
    first; the returned tuple includes the leading 1.
    """
    p = check_odd_prime(p)
    m = check_degree(m)
    check_capacity(p, m)
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        poly = low + (1,)
        if is_primitive_polynomial(poly, p):
            return poly
    raise ParameterError(f"no primitive polynomial of degree {m} over F_{p}")  # unreachable


@dataclass(frozen=True)
class ExtFieldContext:
    """F_{p^m} built from a primitive polynomial; ``omega`` is the class of x.

    If ``primitive_poly`` is omitted the lexicographically smallest primitive
    polynomial is used, so contexts are reproducible.
    """

    p: int
    m: int
    primitive_poly: tuple[int, ...] | None = None

    def __post_init__(self):
        p = check_odd_prime(self.p)
        m = check_degree(self.m)
        check_capacity(p, m)
        poly = self.primitive_poly
        if poly is None:
            poly = find_primitive_polynomial(p, m)
        else:
            poly = _check_poly_shape(poly, p)
            if len(poly) - 1 != m:
                raise ParameterError(f"polynomial has degree {len(poly) - 1}, expected m = {m}")
            if not is_primitive_polynomial(poly, p):
                raise ParameterError(f"polynomial {format_fp_poly(poly)} is not primitive over F_{p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "primitive_poly", poly)
        g = self.omega ** self.nu
        if any(g.coeffs[1:]):
            raise ParameterError("omega^nu does not lie in F_p")  # cannot happen for primitive omega
        if not is_primitive_root(g.coeffs[0], p):
            raise ParameterError("omega^nu is not primitive in F_p")

    @property
    def order(self) -> int:
        """Size of the multiplicative group, p^m - 1."""
        return self.p**self.m - 1

    @property
    def nu(self) -> int:
        return (self.p**self.m - 1) // (self.p - 1)

    @cached_property
    def g(self) -> int:
        """The primitive element omega^nu of F_p, as an integer residue."""
        return (self.omega ** self.nu).coeffs[0]

    def element(self, coeffs) -> ExtFieldElement:
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.m:
            raise ParameterError(f"expected at most {self.m} coefficients")
        return ExtFieldElement(coeffs + (0,) * (self.m - len(coeffs)), self)

    def scalar(self, a) -> ExtFieldElement:
        return self.element((int(a),))

    @property
    def zero(self) -> ExtFieldElement:
        return self.element(())

    @property
    def one(self) -> ExtFieldElement:
        return self.element((1,))

    @property
    def omega(self) -> ExtFieldElement:
        return self.element((0, 1))

    def cyclotomy(self, d: int) -> CyclotomicContext:
        """Cyclotomic classes of order ``d`` generated by ``g = omega^nu``."""
        return _cached_cyclotomy(self.p, d, self.g)

    def describe_poly(self) -> str:
        return format_fp_poly(self.primitive_poly)


@dataclass(frozen=True, eq=False)
class ExtFieldElement:
    coeffs: tuple[int, ...]
    ctx: ExtFieldContext = field(repr=False)

    def _other(self, other) -> tuple:
        if isinstance(other, ExtFieldElement):
            if other.ctx != self.ctx:
                raise ParameterError("elements belong to different field contexts")
            return other.coeffs
        return self.ctx.scalar(int(other)).coeffs

    def __add__(self, other):
        b = self._other(other)
        return ExtFieldElement(tuple((x + y) % self.ctx.p for x, y in zip(self.coeffs, b)), self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return ExtFieldElement(tuple((x - y) % self.ctx.p for x, y in zip(self.coeffs, b)), self.ctx)

    def __neg__(self):
        return ExtFieldElement(tuple(-x % self.ctx.p for x in self.coeffs), self.ctx)

    def __mul__(self, other):
        b = self._other(other)
        return ExtFieldElement(_poly_mulmod(self.coeffs, b, self.ctx.primitive_poly, self.ctx.p), self.ctx)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not any(self.coeffs):
                raise ZeroDivisionError("0 has no inverse")
            n %= self.ctx.order
        return ExtFieldElement(_poly_powmod(self.coeffs, n, self.ctx.primitive_poly, self.ctx.p), self.ctx)

    def frobenius(self) -> ExtFieldElement:
        return self ** self.ctx.p

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExtFieldElement):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.ctx.scalar(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.ctx.p, self.ctx.primitive_poly))


def trace(alpha: ExtFieldElement) -> PrimeFieldElement:
    """Absolute trace ``alpha + alpha^p + ... + alpha^(p^(m-1))``."""
    ctx = alpha.ctx
    total = ctx.zero
    conj = alpha
    for _ in range(ctx.m):
        total = total + conj
        conj = conj.frobenius()
    if any(total.coeffs[1:]):
        raise ArithmeticError("trace left F_p; field context is inconsistent")
    return PrimeFieldElement(total.coeffs[0], ctx.p)


class CyclotomicContext:
    """Cyclotomic classes ``D_j = g^j D_0`` of order ``d`` in F_p^x.

    Discrete logarithms come from a table of size p built once.
    """

    def __init__(self, p: int, d: int, g: int | None = None):
        self.p = check_odd_prime(p)
        self.d = check_alphabet(d, self.p) if d != 1 else 1
        if g is None:
            g = primitive_root(self.p)
        g = int(g) % self.p
        if not is_primitive_root(g, self.p):
            raise ParameterError(f"{g} is not a primitive element of F_{self.p}")
        self.g = g
        log = [-1] * self.p
        x = 1
        for k in range(self.p - 1):
            log[x] = k
            x = x * g % self.p
        self._log = tuple(log)
        self.class_of = tuple(-1 if k < 0 else k % self.d for k in log)

    def dlog(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ParameterError("0 has no discrete logarithm")
        return self._log[x]

    def members(self, j: int) -> frozenset[int]:
        return frozenset(x for x in range(1, self.p) if self.class_of[x] == j % self.d)

    def __repr__(self):
        return f"CyclotomicContext(p={self.p}, d={self.d}, g={self.g})"


@functools.lru_cache(maxsize=64)
def _cached_cyclotomy(p: int, d: int, g: int) -> CyclotomicContext:
    return CyclotomicContext(p, d, g)


def class_index(x, ctx: CyclotomicContext) -> int:
    """Index ``k`` with ``x`` in ``D_k``; 0 lies in no class."""
    x = int(x) % ctx.p
    if x == 0:
        raise ParameterError("0 belongs to no cyclotomic class")
    return ctx.class_of[x]


def difference_parameter(i: int, j: int, a, ctx: CyclotomicContext) -> int:
    """``#(D_i ∩ (D_j - a))`` by direct set intersection."""
    if not (0 <= i < ctx.d and 0 <= j < ctx.d):
        raise ParameterError(f"class indices must lie in [0, {ctx.d - 1}]")
    a = int(a) % ctx.p
    shifted = {(y - a) % ctx.p for y in ctx.members(j)}
    return len(ctx.members(i) & shifted)


# closed forms for d = 2, keyed by (p mod 4, Legendre symbol of a) then (i, j);
# each entry is the offset c in (p + c) / 4
_ORDER2_OFFSETS = {
    (1, 1): {(0, 0): -5, (0, 1): -1, (1, 0): -1, (1, 1): -1},
    (1, -1): {(0, 0): -1, (0, 1): -1, (1, 0): -1, (1, 1): -5},
    (3, 1): {(0, 0): -3, (0, 1): 1, (1, 0): -3, (1, 1): -3},
    (3, -1): {(0, 0): -3, (0, 1): -3, (1, 0): 1, (1, 1): -3},
}


def order2_difference_parameter(i: int, j: int, a: int, p: int) -> int:
    """Closed form of ``d(i, j; a)`` for quadratic classes and ``a != 0``."""
    p = check_odd_prime(p)
    if (i, j) not in _ORDER2_OFFSETS[(1, 1)]:
        raise ParameterError("class indices must be 0 or 1")
    leg = legendre_symbol(a, p)
    if leg == 0:
        raise ParameterError("the closed forms need a != 0 mod p")
    return (p + _ORDER2_OFFSETS[(p % 4, leg)][(i, j)]) // 4


def format_fp_poly(poly) -> str:
    """Render ascending coefficients as e.g. ``x^2 + 2x + 2``."""
    terms = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        coef = "" if (c == 1 and k > 0) else str(c)
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append(f"{coef}x")
        else:
            terms.append(f"{coef}x^{k}")
    return " + ".join(terms) if terms else "0"
