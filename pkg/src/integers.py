"""Integer helpers used by the counting formulas: Möbius, Euler phi, factoring."""

from sympy import divisors as _divisors
from sympy import factorint, isprime, totient
from sympy import mobius as _mobius

from .constants import INT_LIMIT
from .errors import NonIntegerResult, Overflow, UsageError


def check_limit(value, what="value", error=Overflow):
    """Raises `error` unless 0 <= |value| < 2^63."""

    if abs(value) >= INT_LIMIT:
        raise error(f"{what} = {value} does not fit in 63 bits")
    return value


def _positive(n, what="n"):
    if n < 1:
        raise UsageError(f"{what} must be >= 1, got {n}")


def mobius(n):
    _positive(n)
    check_limit(n, "n")
    return int(_mobius(n))


def euler_phi(n):
    _positive(n)
    check_limit(n, "n")
    return int(totient(n))


def factor_integer(n):
    """Sorted [(prime, exponent), ...] of n.

    sympy's factorint runs trial division, then Pollard rho with a fixed seed,
    so the output does not depend on the run.
    """

    _positive(n)
    check_limit(n, "n")
    return sorted((int(p), int(e)) for p, e in factorint(n).items())


def divisors(n):
    _positive(n)
    return [int(d) for d in _divisors(n)]


def prime_divisors(n):
    return [p for p, _ in factor_integer(n)]


def is_prime(n):
    return n > 1 and bool(isprime(n))


def prime_power(q):
    """Returns (p, j) with q = p^j, or None when q is not a prime power."""

    if q < 2:
        return None
    factors = factor_integer(q)
    if len(factors) != 1:
        return None
    return factors[0]


def exact_div(num, den, what="quotient"):
    if den == 0 or num % den != 0:
        raise NonIntegerResult(f"{what}: {num}/{den} is not an integer")
    return num // den


def split_two_power(m):
    """m = 2^k * l with l odd; returns (k, l)."""

    _positive(m, "m")
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return k, m
