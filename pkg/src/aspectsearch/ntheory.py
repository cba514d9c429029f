"""Integer maps used by the evenly-spaced strategy identities.

Every ``mod`` here is the floored modulo ``a - floor(a/b)*b``. Python's
``%`` and ``//`` already floor for integers, but the helpers below are
the single entry point so that the convention is explicit.
"""

from __future__ import annotations

import math

from .errors import FixedPointQuery, IndexOutOfRange, NonPositiveModulus, NotCoprime, ValidationError

__all__ = [
    "floor_mod",
    "gcd",
    "sigma_reflect",
    "sigma_coprime",
    "pair_index",
    "unpair",
    "double_factorial",
    "factorial",
]


def _check_int(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} must be an integer, got {value!r}")


def floor_mod(a: int, b: int) -> int:
    """Floored modulo; the result always lies in ``[0, b)``."""
    _check_int(a, "a")
    _check_int(b, "b")
    if b < 1:
        raise NonPositiveModulus(f"modulus must be >= 1, got {b}")
    return a - (a // b) * b


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def _check_index(j, size, name="j"):
    _check_int(j, name)
    if not 0 <= j < size:
        raise IndexOutOfRange(f"{name}={j} outside [0, {size})")


def sigma_reflect(i: int, j: int, n: int) -> int:
    """Reflection ``(2i - j) mod n`` of index ``j`` about index ``i``.

    Maps ``{0..n-1} \\ {i}`` onto itself and is its own inverse.
    """
    _check_int(n, "n")
    if n < 1:
        raise NonPositiveModulus(f"n must be >= 1, got {n}")
    _check_index(i, n, "i")
    _check_index(j, n, "j")
    if i == j:
        raise FixedPointQuery(f"j == i == {i} is excluded from the domain")
    return floor_mod(2 * i - j, n)


def sigma_coprime(q: int, j: int, r: int) -> int:
    """Multiplication map ``q*j mod r``; a permutation of ``{0..r-1}`` when gcd(q, r) = 1."""
    _check_int(q, "q")
    _check_int(r, "r")
    if r < 1:
        raise NonPositiveModulus(f"r must be >= 1, got {r}")
    if q < 1:
        raise ValidationError(f"q must be >= 1, got {q}")
    if math.gcd(q, r) != 1:
        raise NotCoprime(f"gcd({q}, {r}) = {math.gcd(q, r)}")
    _check_index(j, r)
    return floor_mod(q * j, r)


def pair_index(u: int, v: int, a: int) -> int:
    """Flatten ``(u, v)`` with ``0 <= u < a`` into ``u + a*v``."""
    _check_int(a, "a")
    if a < 1:
        raise NonPositiveModulus(f"a must be >= 1, got {a}")
    _check_index(u, a, "u")
    _check_int(v, "v")
    if v < 0:
        raise IndexOutOfRange(f"v={v} must be non-negative")
    return u + a * v


def unpair(w: int, a: int, b: int | None = None) -> tuple[int, int]:
    """Inverse of :func:`pair_index`: ``(w mod a, floor(w / a))``.

    If ``b`` is given, ``w`` must lie in ``[0, a*b)``.
    """
    _check_int(a, "a")
    if a < 1:
        raise NonPositiveModulus(f"a must be >= 1, got {a}")
    _check_int(w, "w")
    if w < 0 or (b is not None and w >= a * b):
        upper = "inf" if b is None else a * b
        raise IndexOutOfRange(f"w={w} outside [0, {upper})")
    return floor_mod(w, a), w // a


def double_factorial(k: int) -> int:
    """Exact ``k!! = k (k-2) (k-4) ...`` for odd ``k``; ``0!! = (-1)!! = 1``."""
    _check_int(k, "k")
    if k in (0, -1):
        return 1
    if k < 0 or k % 2 == 0:
        raise ValidationError(f"double_factorial expects an odd k >= -1 or 0, got {k}")
    return math.prod(range(1, k + 1, 2))


def factorial(k: int) -> int:
    return math.factorial(k)
