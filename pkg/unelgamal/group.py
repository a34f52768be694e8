'''
The group of units U(n) for n = p^m or n = 2p^m: validated moduli, units,
element orders, generators, and brute-force oracles for desk-scale checks.

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

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .config import CAYLEY_TABLE_CAP, DEFAULT_BUDGET, Budget
from .errors import (CapExceeded, InputError, InvalidExponent, InvalidPrime,
                     ModulusMismatch, NotAUnit)
from .modmath import Factorization, euler_phi_special, factorize, is_probable_prime, mod_inv

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Modulus:
    ''' A cryptosystem modulus n = p^m, or n = 2p^m when doubled, together with
        phi(n) and the factorization of phi(n).
    '''

    n: int
    p: int
    m: int
    doubled: bool
    phi: int = field(compare=False)
    phi_factors: Factorization = field(compare=False, repr=False)

    @property
    def prime_power(self) -> int:
        ''' p^m, which equals n unless doubled.
        '''
        return self.p ** self.m

    def __str__(self):
        form = f'2*{self.p}^{self.m}' if self.doubled else f'{self.p}^{self.m}'
        return f'{self.n} ({form})'


@dataclass(frozen=True)
class Unit:
    ''' A residue 1 <= value < n with gcd(value, n) = 1.
    '''

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not is_unit(self.value, self.modulus):
            raise NotAUnit(f'{self.value} is not a unit modulo {self.modulus.n}')

    def __mul__(self, other: 'Unit') -> 'Unit':
        return mul(self, other)

    def __pow__(self, exponent: int) -> 'Unit':
        if exponent < 0:
            return Unit(pow(inverse(self).value, -exponent, self.modulus.n), self.modulus)
        return Unit(pow(self.value, exponent, self.modulus.n), self.modulus)

    def __int__(self):
        return self.value


class ModulusForm(enum.Enum):
    CYCLIC_P_M = 'p^m'
    CYCLIC_2P_M = '2p^m'
    CYCLIC_SMALL = 'small'
    NOT_CYCLIC = 'not cyclic'


@dataclass(frozen=True)
class Classification:
    ''' Which of the forms 2, 4, p^m, 2p^m (if any) an integer n has.  p and m
        are set for the two prime-power forms only.
    '''

    form: ModulusForm
    p: Optional[int] = None
    m: Optional[int] = None

    @property
    def is_cyclic(self) -> bool:
        return self.form is not ModulusForm.NOT_CYCLIC

    def __str__(self):
        if self.form in (ModulusForm.CYCLIC_P_M, ModulusForm.CYCLIC_2P_M):
            return f'cyclic: {self.form.value}, p={self.p}, m={self.m}'
        if self.form is ModulusForm.CYCLIC_SMALL:
            return 'cyclic: small'
        return 'not cyclic'


def make_modulus(p: int, m: int, doubled: bool = False,
                 p_minus_one_factors: Optional[Factorization] = None,
                 budget: Budget = DEFAULT_BUDGET) -> Modulus:
    ''' Validates p and m and returns the modulus p^m (or 2p^m).  The prime
        factors of phi are those of p - 1 plus p itself when m > 1; callers that
        already know the factorization of p - 1 (safe primes) pass it in to skip
        factoring.
    '''
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise InvalidPrime(f'p must be an odd prime, got {p}')
    if m < 1:
        raise InvalidExponent(f'm must be at least 1, got {m}')

    if p_minus_one_factors is None:
        q = (p - 1) // 2
        if q > 2 and is_probable_prime(q):
            p_minus_one_factors = Factorization(((2, 1), (q, 1)))
        else:
            p_minus_one_factors = factorize(p - 1, budget)
    elif p_minus_one_factors.value != p - 1:
        raise InputError(f'{p_minus_one_factors} does not factor {p - 1}')

    counts = dict(p_minus_one_factors.factors)
    if m > 1:
        counts[p] = m - 1

    n = p ** m * (2 if doubled else 1)
    phi = euler_phi_special(p, m, doubled)
    return Modulus(n, p, m, doubled, phi, Factorization.from_counts(counts))


def classify_modulus(n: int, budget: Budget = DEFAULT_BUDGET) -> Classification:
    ''' Decides whether U(n) is cyclic by the shape of n's factorization.
    '''
    if n < 2:
        raise InputError(f'n must be at least 2, got {n}')
    if n in (2, 4):
        return Classification(ModulusForm.CYCLIC_SMALL)

    twos = 0
    odd = n
    while odd % 2 == 0:
        odd //= 2
        twos += 1

    if odd == 1 or twos > 1:
        return Classification(ModulusForm.NOT_CYCLIC)

    factors = factorize(odd, budget).factors
    if len(factors) != 1:
        return Classification(ModulusForm.NOT_CYCLIC)

    p, m = factors[0]
    form = ModulusForm.CYCLIC_2P_M if twos else ModulusForm.CYCLIC_P_M
    return Classification(form, p, m)


def modulus_for(n: int, budget: Budget = DEFAULT_BUDGET) -> Modulus:
    ''' Returns the Modulus for an integer of the form p^m or 2p^m.
    '''
    kind = classify_modulus(n, budget)
    if kind.form not in (ModulusForm.CYCLIC_P_M, ModulusForm.CYCLIC_2P_M):
        raise InputError(f'{n} is not of the form p^m or 2p^m ({kind})')
    return make_modulus(kind.p, kind.m, kind.form is ModulusForm.CYCLIC_2P_M, budget=budget)


def is_unit(x: int, mod: Modulus) -> bool:
    return 1 <= x < mod.n and math.gcd(x, mod.n) == 1


def unit(x: int, mod: Modulus) -> Unit:
    ''' Wraps x as a Unit of mod, rejecting non-units.
    '''
    if not is_unit(x, mod):
        raise NotAUnit(f'{x} is not a unit modulo {mod.n}')
    return Unit(x, mod)


def mul(a: Unit, b: Unit) -> Unit:
    if a.modulus != b.modulus:
        raise ModulusMismatch(f'cannot multiply units modulo {a.modulus.n} and {b.modulus.n}')
    return Unit(a.value * b.value % a.modulus.n, a.modulus)


def inverse(a: Unit) -> Unit:
    return Unit(mod_inv(a.value, a.modulus.n), a.modulus)


def element_order(g: Unit) -> int:
    ''' The least d >= 1 with g^d = 1, found by stripping prime factors off phi
        while the power stays at 1.
    '''
    n = g.modulus.n
    order = g.modulus.phi
    for q, e in g.modulus.phi_factors:
        for _ in range(e):
            if pow(g.value, order // q, n) != 1:
                break
            order //= q
    return order


def verify_generator(g: int, mod: Modulus) -> bool:
    ''' True iff g is a unit whose order is phi(n).
    '''
    if not is_unit(g, mod):
        return False
    return all(pow(g, mod.phi // q, mod.n) != 1 for q in mod.phi_factors.primes)


def find_generator(mod: Modulus) -> Unit:
    ''' Deterministic generator of U(n).  Scans 2, 3, 5, 6, 7, ... for the
        smallest primitive root of p and lifts it to p^m (adding p when
        g^(p-1) = 1 mod p^2).  For 2p^m the first odd lifted root below 2p is
        taken; if there is none the even one is shifted by p^m.
    '''
    p, m = mod.p, mod.m
    p_minus_one = mod.phi_factors.without(p) if m > 1 else mod.phi_factors
    limit = 2 * p if mod.doubled else p

    first = None
    for c in _candidates(limit):
        if c % p == 0 or any(pow(c, (p - 1) // q, p) == 1 for q in p_minus_one.primes):
            continue
        lifted = c
        if m > 1 and pow(c, p - 1, p * p) == 1:
            lifted = c + p

        if not mod.doubled:
            return _checked(lifted, mod)
        if lifted % 2 == 1:
            return _checked(lifted, mod)
        if first is None:
            first = lifted

    if first is None:
        raise InputError(f'no primitive root found for {mod}')
    return _checked(first + mod.prime_power, mod)


def _candidates(limit):
    for c in range(2, limit):
        root = math.isqrt(c)
        if root * root != c:
            yield c


def _checked(g, mod):
    if not verify_generator(g, mod):
        raise ArithmeticError(f'{g} failed the generator check for {mod}')
    logger.debug('generator of U(%d) is %d', mod.n, g)
    return Unit(g, mod)


def power_table(g: Unit) -> List[Tuple[int, int]]:
    ''' Returns (x, g^x mod n) for x from 0 up to the order of g.
    '''
    n = g.modulus.n
    rows = []
    value = 1
    for x in range(element_order(g)):
        rows.append((x, value))
        value = value * g.value % n
    return rows


# Desk-scale oracles ==========================================================

def enumerate_units(n: int, cap: int = DEFAULT_BUDGET.units_cap) -> List[int]:
    ''' All units modulo n in ascending order.
    '''
    if n > cap:
        raise CapExceeded('enumerate_units', n, cap)
    if n < 2:
        raise InputError(f'n must be at least 2, got {n}')
    return [x for x in range(1, n) if math.gcd(x, n) == 1]


def is_cyclic_bruteforce(n: int, cap: int = DEFAULT_BUDGET.units_cap) -> bool:
    ''' True iff some unit's powers run through all of U(n).
    '''
    units = enumerate_units(n, cap)
    phi = len(units)
    for g in units:
        value, order = g, 1
        while value != 1:
            value = value * g % n
            order += 1
        if order == phi:
            return True
    return False


def cayley_table(n: int, cap: int = CAYLEY_TABLE_CAP) -> Tuple[np.ndarray, np.ndarray]:
    ''' Returns (units, table) where table[i, j] = units[i] * units[j] mod n.
    '''
    if n > cap:
        raise CapExceeded('cayley_table', n, cap)
    units = np.array(enumerate_units(n), dtype=np.int64)
    return units, np.outer(units, units) % n
