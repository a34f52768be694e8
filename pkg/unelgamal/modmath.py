'''
Modular arithmetic and number-theoretic helpers: exponentiation, gcd and
inverses, Miller-Rabin primality, prime generation and factoring.

Copyright (C) 2026 The UnElGamal authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.
'''

import logging
import math
import random
import secrets
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

from .config import MILLER_RABIN_ROUNDS, TRIAL_DIVISION_BOUND, DEFAULT_BUDGET, Budget
from .errors import FactorizationTooHard, InputError, InvalidPrime, NotInvertible

logger = logging.getLogger(__name__)

# Deterministic Miller-Rabin witnesses for every n < 2^64
_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
                 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199)


@dataclass(frozen=True)
class Factorization:
    ''' A prime factorization, as (prime, multiplicity) pairs with the primes
        strictly increasing.
    '''

    factors: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        ''' The integer this factorization describes.
        '''
        product = 1
        for prime, multiplicity in self.factors:
            product *= prime ** multiplicity
        return product

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)

    def without(self, prime: int) -> 'Factorization':
        ''' Returns this factorization with prime removed entirely.
        '''
        return Factorization(tuple(f for f in self.factors if f[0] != prime))

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> 'Factorization':
        return cls(tuple(sorted((p, e) for p, e in counts.items() if e > 0)))

    @classmethod
    def of_safe_prime_predecessor(cls, p: int) -> 'Factorization':
        ''' Factorization of p - 1 = 2q for a safe prime p.
        '''
        q = (p - 1) // 2
        return cls(((2, 2),)) if q == 2 else cls(((2, 1), (q, 1)))

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def __str__(self):
        return ' * '.join(f'{p}^{e}' if e > 1 else str(p) for p, e in self.factors)


def _require_natural(name, value):
    if value < 0:
        raise InputError(f'{name} must be nonnegative, got {value}')


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    ''' Returns base^exponent mod modulus by square-and-multiply.  Any
        exponent reduces to 0 modulo 1.
    '''
    _require_natural('exponent', exponent)
    if modulus < 1:
        raise InputError(f'modulus must be at least 1, got {modulus}')
    return pow(base, exponent, modulus)


def gcd(a: int, b: int) -> int:
    ''' Greatest common divisor of two naturals, not both zero.
    '''
    _require_natural('a', a)
    _require_natural('b', b)
    if a == 0 and b == 0:
        raise InputError('gcd(0, 0) is undefined')
    return math.gcd(a, b)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    ''' Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
    '''
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inv(a: int, modulus: int) -> int:
    ''' Returns w in [1, modulus-1] with a*w = 1 (mod modulus).
    '''
    if modulus < 2:
        raise InputError(f'modulus must be at least 2, got {modulus}')
    g, w, _ = xgcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertible(a, modulus)
    return w % modulus


def is_probable_prime(n: int, rounds: int = MILLER_RABIN_ROUNDS,
                      rng: Optional[random.Random] = None) -> bool:
    ''' Miller-Rabin.  Exact below 2^64; above that a True answer is wrong with
        probability at most 4^-rounds.  Witnesses above 2^64 come from rng, or
        from the system source when rng is None, so callers' seeded generators
        are never consumed.
    '''
    if rounds < 1:
        raise InputError(f'rounds must be at least 1, got {rounds}')
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < 2**64:
        witnesses = _WITNESSES_64
    else:
        draw = rng.randrange if rng is not None else (lambda lo, hi: lo + secrets.randbelow(hi - lo))
        witnesses = tuple(draw(2, n - 1) for _ in range(rounds))

    for a in witnesses:
        if not _passes_round(a % n, d, s, n):
            return False
    return True


def _passes_round(a, d, s, n):
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def gen_prime(bits: int, rng: random.Random) -> int:
    ''' Returns an odd probable prime of exactly the given number of bits,
        drawing candidates from rng (so a seeded rng gives a repeatable prime).
    '''
    if bits < 3:
        raise InputError(f'bits must be at least 3, got {bits}')
    tries = 0
    while True:
        tries += 1
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate):
            logger.debug('found %d-bit prime after %d candidates', bits, tries)
            return candidate


def gen_safe_prime(bits: int, rng: random.Random) -> int:
    ''' Returns a prime p = 2q + 1 of exactly the given number of bits, with q
        also prime.
    '''
    if bits < 3:
        raise InputError(f'bits must be at least 3, got {bits}')
    tries = 0
    while True:
        tries += 1
        q = rng.getrandbits(bits - 1) | (1 << (bits - 2)) | 1
        p = 2 * q + 1
        if _has_small_factor(q) or _has_small_factor(p):
            continue
        if is_probable_prime(q) and is_probable_prime(p):
            logger.debug('found %d-bit safe prime after %d candidates', bits, tries)
            return p


def _has_small_factor(n):
    return any(n % r == 0 and n != r for r in _SMALL_PRIMES)


def euler_phi_special(p: int, m: int, doubled: bool = False) -> int:
    ''' Returns p^(m-1) * (p-1), the order of U(p^m), which is also the order of
        U(2p^m).  The doubled flag is accepted for symmetry with the modulus
        constructor; it does not change the result.
    '''
    if p % 2 == 0 or not is_probable_prime(p):
        raise InvalidPrime(f'{p} is not an odd prime')
    if m < 1:
        raise InputError(f'm must be at least 1, got {m}')
    return p ** (m - 1) * (p - 1)


def factorize(n: int, budget: Budget = DEFAULT_BUDGET) -> Factorization:
    ''' Complete prime factorization: trial division up to a fixed bound, then
        Pollard rho (Brent) on what remains.  Raises FactorizationTooHard when a
        composite cofactor resists budget.rho_iterations.
    '''
    if n < 2:
        raise InputError(f'cannot factor {n}')

    counts: Dict[int, int] = {}
    n = _trial_divide(n, counts)

    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if is_probable_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            pending.extend((root, root))
            continue
        d = _pollard_brent(m, budget.rho_iterations)
        pending.extend((d, m // d))

    return Factorization.from_counts(counts)


def _trial_divide(n, counts):
    for p in (2, 3):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p

    # Wheel over 6k +/- 1, stopping at sqrt(n) or the configured bound
    d = 5
    while d <= TRIAL_DIVISION_BOUND and d * d <= n:
        for f in (d, d + 2):
            while n % f == 0:
                counts[f] = counts.get(f, 0) + 1
                n //= f
        d += 6

    if 1 < n and (n < TRIAL_DIVISION_BOUND ** 2 or d * d > n):
        counts[n] = counts.get(n, 0) + 1
        return 1
    return n


def _pollard_brent(n, iterations):
    # Deterministic constants c = 1, 2, ... keep factorize a pure function
    spent = 0
    c = 0
    while spent < iterations:
        c += 1
        d, used = _brent_attempt(n, c, iterations - spent)
        spent += used
        if d is not None:
            logger.debug('rho split %d after %d iterations (c=%d)', n, spent, c)
            return d
        logger.debug('rho restart on %d with c=%d', n, c + 1)
    raise FactorizationTooHard(n, iterations)


def _brent_attempt(n, c, limit):
    y, r, q = 2, 1, 1
    x = ys = y
    g = 1
    used = 0
    batch = 128
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(batch, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += batch
        used += min(r, k)
        r *= 2
        if used >= limit and g == 1:
            return None, used

    if g == n:
        # Batched product overshot; walk back one step at a time
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    if g == n:
        return None, used
    return g, used
