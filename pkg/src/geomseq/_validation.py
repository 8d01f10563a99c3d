"""Input validation helpers shared by the library, the estimators and the CLI."""

from __future__ import annotations

import math
import os

DEFAULT_MAX_FIELD = 1 << 20


class ParameterError(ValueError):
    """A parameter violates a documented precondition."""


class CapacityError(ParameterError):
    """A field is larger than the configured capacity (``GEOMSEQ_MAX_FIELD``)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order (trial division)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def check_odd_prime(p, name: str = "p") -> int:
    if isinstance(p, bool) or int(p) != p:
        raise ParameterError(f"{name} must be an integer, got {p!r}")
    p = int(p)
    if p % 2 == 0 or not is_prime(p):
        raise ParameterError(f"{name} must be an odd prime, got {p}")
    return p


def check_degree(m) -> int:
    if isinstance(m, bool) or int(m) != m or int(m) < 2:
        raise ParameterError(f"m must be an integer > 1, got {m!r}")
    return int(m)


def check_alphabet(ell, p: int) -> int:
    """``ell`` must be a prime divisor of ``p - 1``."""
    if isinstance(ell, bool) or int(ell) != ell:
        raise ParameterError(f"ell must be an integer, got {ell!r}")
    ell = int(ell)
    if not is_prime(ell) or (p - 1) % ell:
        raise ParameterError(f"ell must be a prime divisor of p - 1 = {p - 1}, got {ell}")
    return ell


def max_field_size() -> int:
    raw = os.environ.get("GEOMSEQ_MAX_FIELD")
    if raw is None or raw == "":
        return DEFAULT_MAX_FIELD
    try:
        cap = int(raw, 0)
    except ValueError as exc:
        raise ParameterError(f"GEOMSEQ_MAX_FIELD must be an integer, got {raw!r}") from exc
    if cap < 4:
        raise ParameterError(f"GEOMSEQ_MAX_FIELD must be at least 4, got {cap}")
    return cap


def check_capacity(p: int, m: int) -> None:
    cap = max_field_size()
    if p**m > cap:
        raise CapacityError(f"field size p^m = {p}^{m} = {p**m} exceeds capacity {cap} (GEOMSEQ_MAX_FIELD)")


def check_shift(e, period: int) -> int:
    if isinstance(e, bool) or int(e) != e:
        raise ParameterError(f"e must be an integer, got {e!r}")
    e = int(e)
    if not 0 <= e < period:
        raise ParameterError(f"e must lie in [0, {period - 1}], got {e}")
    return e


def check_binary(ell: int, what: str = "operation") -> None:
    if ell != 2:
        raise ParameterError(f"{what} requires ell = 2, got ell = {ell}")
