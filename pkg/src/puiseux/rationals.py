"""Exact nonnegative rational arithmetic, prime utilities, and p-adic valuations.

Values are plain ``fractions.Fraction`` instances (always stored in lowest
terms by the stdlib), restricted to be nonnegative by the constructors here.
The valuation of zero is represented by ``math.inf``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

INFINITY = math.inf

# Witness set proving Miller-Rabin deterministic for all n < 2^64
# (Sinclair / Sorenson-Webster).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_PRIME_LIMIT = 1 << 64

_TRIAL_LIMIT = 10 ** 6


def make_rational(num: int, den: int = 1) -> Fraction:
    """Build a nonnegative rational in lowest terms."""
    if den == 0:
        raise DomainError("denominator must be nonzero")
    if den < 0 or num < 0:
        raise DomainError("negative values are not Puiseux monoid elements")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse the textual encoding "a/b" (or "a" for integers).

    Signs, whitespace, and zero denominators are rejected.
    """
    if not text or text != text.strip():
        raise DomainError(f"malformed rational {text!r}")
    num_s, sep, den_s = text.partition("/")
    if not num_s.isdigit() or (sep and not den_s.isdigit()):
        raise DomainError(f"malformed rational {text!r}")
    num = int(num_s)
    den = int(den_s) if sep else 1
    return make_rational(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def sub_checked(a: Fraction, b: Fraction):
    """a - b, or None when a < b (the monoid has no negative elements)."""
    if a < b:
        return None
    return a - b


def mul_nat(a: Fraction, k: int) -> Fraction:
    if k < 0:
        raise DomainError("multiplier must be nonnegative")
    return a * k


def compare(a: Fraction, b: Fraction) -> int:
    return (a > b) - (a < b)


def int_valuation(n: int, p: int) -> int:
    """Exponent of the largest power of p dividing n (n != 0)."""
    if n == 0:
        raise DomainError("int_valuation of 0 is undefined; use v_p")
    n = abs(n)
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def v_p(q: Fraction, p: int):
    """p-adic valuation of q: exponent of p in the numerator minus the
    exponent in the denominator; infinity for q = 0."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if q == 0:
        return INFINITY
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def is_prime(n: int) -> bool:
    if n >= _PRIME_LIMIT:
        raise DomainError("primality testing is restricted to n < 2**64")
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_after(n: int) -> int:
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def _pollard_rho(n: int) -> int:
    # n odd composite, no factors below the trial limit
    if is_prime(n):
        return n
    x = 2
    c = 1
    while True:
        y, d = x, 1
        f = lambda v: (v * v + c) % n
        a, b = x, x
        while d == 1:
            a = f(a)
            b = f(f(b))
            d = math.gcd(abs(a - b), n)
        if d != n:
            return d
        c += 1


def factor_positive(n: int) -> list[tuple[int, int]]:
    """Full prime factorization of n >= 1, sorted ascending by prime."""
    if n < 1:
        raise DomainError("factor_positive requires n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    while d <= _TRIAL_LIMIT and d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return sorted(out.items())


def factor_denominator(q: Fraction) -> list[tuple[int, int]]:
    if q <= 0:
        raise DomainError("factor_denominator requires q > 0")
    return factor_positive(q.denominator)
