"""Exact integer arithmetic: p-adic valuations, sieved multiplicative
functions, the coprime phi-ratio sum with its explicit main term, and the
valuation-pattern enumerator that the series and counting loops build on.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

# Witness set proving primality for every n < 3.3e24, so for all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

SIEVE_MAGIC = b"MLSV1"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64; larger inputs are rejected."""
    if n >= 1 << 64:
        raise ValueError(f"primality testing limited to 64-bit integers, got {n}")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSet:
    """Ordered set of distinct primes defining the mixed norm.

    `radical` is the exact product of the elements (1 for the empty set).
    """

    primes: tuple[int, ...]
    radical: int = field(init=False)

    def __post_init__(self):
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")
        rad = 1
        for p in self.primes:
            rad *= p
        object.__setattr__(self, "radical", rad)

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(tuple(sorted(primes)))

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.primes) + "}"


EMPTY_PRIMES = PrimeSet(())


def padic_valuation(n: int, p: int) -> int:
    """Largest v with p**v dividing n.  n = 0 is rejected (valuation infinite)."""
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    v = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return v
        n = q
        v += 1


def padic_norm(n: int, p: int) -> Fraction:
    return Fraction(1, p ** padic_valuation(n, p))


def mixed_norm(n: int, ps: PrimeSet) -> Fraction:
    """|n|_{p_1} ... |n|_{p_k} as an exact rational in lowest terms."""
    den = 1
    for p in ps:
        den *= p ** padic_valuation(n, p)
    return Fraction(1, den)


def valuation_pattern_iter(N: int, ps: PrimeSet) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every (a_1..a_k, m) with m coprime to the radical and
    p_1**a_1 * ... * p_k**a_k * m <= N, exactly once.

    The induced map to n = prod(p_i**a_i) * m is a bijection onto {1..N}.
    Exponents run in odometer order with pruning once the prime-power part
    exceeds N; m runs through a wheel over residues coprime to the radical.
    """
    if N < 1:
        return
    primes = ps.primes
    rad = ps.radical
    residues = [r for r in range(1, rad + 1) if math.gcd(r, rad) == 1]
    k = len(primes)

    def emit(prefix: tuple[int, ...], idx: int, power: int):
        if idx == k:
            limit = N // power
            for base in range(0, limit, rad):
                for r in residues:
                    m = base + r
                    if m > limit:
                        break
                    yield prefix, m
            return
        p = primes[idx]
        a = 0
        pw = power
        while pw <= N:
            yield from emit(prefix + (a,), idx + 1, pw)
            a += 1
            pw *= p

    yield from emit((), 0, 1)


class SieveTable:
    """Euler phi, Moebius mu and smallest prime factor for all n <= limit.

    Queries above the limit raise rather than falling back to on-demand
    factorization: memory is predictable and the inner loops stay fast.
    """

    def __init__(self, limit: int, *, _arrays=None):
        if limit < 1:
            raise ValueError("sieve limit must be >= 1")
        if limit >= 1 << 31:
            raise ValueError("sieve limit must fit in 31 bits")
        self.limit = int(limit)
        if _arrays is not None:
            self.phi, self.mu, self.smallest_prime_factor = _arrays
            return
        n = self.limit
        phi = np.arange(n + 1, dtype=np.int64)
        mu = np.ones(n + 1, dtype=np.int8)
        spf = np.zeros(n + 1, dtype=np.int32)
        is_comp = np.zeros(n + 1, dtype=bool)
        for p in range(2, n + 1):
            if is_comp[p]:
                continue
            is_comp[p * p:: p] = True
            phi[p::p] -= phi[p::p] // p
            mu[p::p] *= -1
            psq = p * p
            if psq <= n:
                mu[psq::psq] = 0
            sub = spf[p::p]
            sub[sub == 0] = p
        mu[0] = 0
        if n >= 1:
            phi[0] = 0
            mu[1] = 1
            spf[1] = 1
        self.phi = phi
        self.mu = mu
        self.smallest_prime_factor = spf

    def _check(self, n: int):
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range [1, {self.limit}]")

    def phi_of(self, n: int) -> int:
        self._check(n)
        return int(self.phi[n])

    def mu_of(self, n: int) -> int:
        self._check(n)
        return int(self.mu[n])

    def spf_of(self, n: int) -> int:
        self._check(n)
        return int(self.smallest_prime_factor[n])

    def save(self, path) -> None:
        """Flat binary cache: magic, little-endian u64 limit, packed arrays."""
        with open(path, "wb") as fh:
            fh.write(SIEVE_MAGIC)
            fh.write(struct.pack("<Q", self.limit))
            fh.write(self.phi.astype("<i8").tobytes())
            fh.write(self.mu.astype("i1").tobytes())
            fh.write(self.smallest_prime_factor.astype("<i4").tobytes())

    @classmethod
    def load(cls, path) -> "SieveTable":
        with open(path, "rb") as fh:
            magic = fh.read(len(SIEVE_MAGIC))
            if magic != SIEVE_MAGIC:
                raise ValueError(f"bad sieve cache magic {magic!r}")
            (limit,) = struct.unpack("<Q", fh.read(8))
            count = limit + 1
            phi = np.frombuffer(fh.read(8 * count), dtype="<i8").astype(np.int64)
            mu = np.frombuffer(fh.read(count), dtype="i1").astype(np.int8)
            spf = np.frombuffer(fh.read(4 * count), dtype="<i4").astype(np.int32)
        return cls(limit, _arrays=(phi, mu, spf))


def phi_ratio_sum_coprime(N: int, ps: PrimeSet, sieve: SieveTable | None = None) -> Fraction:
    """Sum of phi(n)/n over n <= N with no p in ps dividing n, exactly.

    Computed as a balanced pairwise tree of Fractions so that denominators
    stay near the lcm of the block rather than the product.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if sieve is None:
        sieve = SieveTable(N)
    elif N > sieve.limit:
        raise ValueError(f"N={N} exceeds sieve limit {sieve.limit}")
    phi = sieve.phi
    rad = ps.radical
    # Binary-counter pairwise accumulation: stack[i] holds a sum of 2**i terms.
    stack: list[Fraction | None] = []
    for n in range(1, N + 1):
        if rad > 1 and math.gcd(n, rad) != 1:
            continue
        carry = Fraction(int(phi[n]), n)
        i = 0
        while i < len(stack) and stack[i] is not None:
            carry += stack[i]  # type: ignore[operator]
            stack[i] = None
            i += 1
        if i == len(stack):
            stack.append(carry)
        else:
            stack[i] = carry
    total = Fraction(0)
    for part in stack:
        if part is not None:
            total += part
    return total


def phi_ratio_main_term(N: int, ps: PrimeSet) -> float:
    """(6N/pi**2) * prod p/(p+1): the linear main term of the coprime phi-ratio sum."""
    if N < 1:
        raise ValueError("N must be >= 1")
    value = 6.0 * N / (math.pi * math.pi)
    for p in ps:
        value *= p / (p + 1.0)
    return value


# ---------------------------------------------------------------------------
# Vectorized helpers shared by the series and counting loops.  Stepping over
# multiples of p, p**2, ... touches each n about 1/(p-1) extra times, which is
# how the prime-power structure is exploited instead of per-n factoring.

def valuation_block(n0: int, n1: int, p: int) -> np.ndarray:
    """v_p(n) for n in [n0, n1] as an int16 array."""
    out = np.zeros(n1 - n0 + 1, dtype=np.int16)
    m = p
    while m <= n1:
        start = ((n0 + m - 1) // m) * m
        if start <= n1:
            out[start - n0:: m] += 1
        m *= p
    return out


def norm_block(n0: int, n1: int, ps: PrimeSet) -> np.ndarray:
    """prod_i |n|_{p_i} for n in [n0, n1] as float64."""
    out = np.ones(n1 - n0 + 1, dtype=np.float64)
    for p in ps:
        m = p
        inv = 1.0 / p
        while m <= n1:
            start = ((n0 + m - 1) // m) * m
            if start <= n1:
                out[start - n0:: m] *= inv
            m *= p
    return out


def coprime_block(n0: int, n1: int, ps: PrimeSet) -> np.ndarray:
    """Boolean mask of n in [n0, n1] coprime to every prime of ps."""
    out = np.ones(n1 - n0 + 1, dtype=bool)
    for p in ps:
        start = ((n0 + p - 1) // p) * p
        if start <= n1:
            out[start - n0:: p] = False
    return out
