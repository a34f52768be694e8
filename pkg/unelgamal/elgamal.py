'''
ElGamal key generation, encryption and decryption over U(n), n = p^m or 2p^m.

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
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .codec import EncodedMessage, letters_per_block_for
from .config import DEFAULT_BUDGET, RECOMMENDED_P_BITS, Budget
from .errors import BadEphemeral, BlockOutOfRange, InputError, ModulusMismatch
from .group import Modulus, Unit, find_generator, make_modulus, unit, verify_generator
from .modmath import Factorization, gen_safe_prime, mod_inv

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PublicKey:
    ''' The published triple (r1, r2, n): r1 generates U(n) and r2 = r1^a.
    '''

    r1: Unit
    r2: Unit

    @property
    def modulus(self) -> Modulus:
        return self.r1.modulus

    @property
    def n(self) -> int:
        return self.r1.modulus.n

    def __str__(self):
        return f'({self.r1.value}, {self.r2.value}, {self.n})'


@dataclass(frozen=True)
class PrivateKey:

    a: int
    modulus: Modulus

    @property
    def n(self) -> int:
        return self.modulus.n


@dataclass(frozen=True)
class CiphertextBlock:
    ''' One encrypted block (c1, c2) = (r1^k, P * r2^k) mod n.
    '''

    c1: int
    c2: int


@dataclass(frozen=True)
class Ciphertext:
    ''' An encrypted message: the blocks plus what decoding needs to undo the
        block packing.
    '''

    blocks: Tuple[CiphertextBlock, ...]
    pad_count: int = 0
    letters_per_block: int = 1


@dataclass(frozen=True)
class KPolicy:
    ''' How ephemeral exponents are chosen: a fresh random k for every block
        (the default) or one fixed k for all blocks.
    '''

    fixed_k: Optional[int] = None

    @classmethod
    def fixed(cls, k: int) -> 'KPolicy':
        return cls(k)

    @classmethod
    def fresh(cls) -> 'KPolicy':
        return cls()

    @property
    def is_fixed(self) -> bool:
        return self.fixed_k is not None


FRESH_K = KPolicy()


def keygen(p_bits: int, m: int = 1, doubled: bool = False,
           rng: Optional[random.Random] = None,
           budget: Budget = DEFAULT_BUDGET) -> Tuple[PublicKey, PrivateKey]:
    ''' Generates a key pair over U(p^m) or U(2p^m) with p a safe prime of
        p_bits bits, so phi(n) factors for free.
    '''
    rng = rng or random.SystemRandom()
    if p_bits < 3:
        raise InputError(f'p_bits must be at least 3, got {p_bits}')
    if p_bits < RECOMMENDED_P_BITS:
        logger.warning('%d-bit prime is below the recommended %d bits; keys are for testing only',
                       p_bits, RECOMMENDED_P_BITS)

    p = gen_safe_prime(p_bits, rng)
    mod = make_modulus(p, m, doubled, Factorization.of_safe_prime_predecessor(p), budget)
    r1 = find_generator(mod)
    a = rng.randint(2, mod.n - 2)

    logger.info('generated key over U(%s), %d-bit n', mod, mod.n.bit_length())
    return _keypair(mod, a, r1)


def keypair_from_parameters(p: int, m: int, doubled: bool, a: int,
                            r1: Optional[int] = None,
                            budget: Budget = DEFAULT_BUDGET) -> Tuple[PublicKey, PrivateKey]:
    ''' Builds a key pair from explicit values, for reproducing known examples.
        r1 defaults to find_generator and must generate U(n) when given.
    '''
    mod = make_modulus(p, m, doubled, budget=budget)
    if not 2 <= a <= mod.n - 2:
        raise InputError(f'a must lie in [2, {mod.n - 2}], got {a}')
    if r1 is None:
        generator = find_generator(mod)
    elif verify_generator(r1, mod):
        generator = Unit(r1, mod)
    else:
        raise InputError(f'{r1} does not generate U({mod.n})')
    return _keypair(mod, a, generator)


def _keypair(mod, a, r1):
    if math.gcd(a, mod.n) != 1:
        logger.warning('private exponent %d is not a unit modulo %d', a, mod.n)
    r2 = Unit(pow(r1.value, a, mod.n), mod)
    return PublicKey(r1, r2), PrivateKey(a, mod)


def public_key(r1: int, r2: int, mod: Modulus) -> PublicKey:
    ''' Rebuilds a public key from its parts, checking that r1 generates U(n).
    '''
    if not verify_generator(r1, mod):
        raise InputError(f'{r1} does not generate U({mod.n})')
    return PublicKey(Unit(r1, mod), unit(r2, mod))


def private_key(a: int, mod: Modulus) -> PrivateKey:
    if not 2 <= a <= mod.n - 2:
        raise InputError(f'a must lie in [2, {mod.n - 2}], got {a}')
    return PrivateKey(a, mod)


def encrypt_block(pub: PublicKey, P: int, k: int) -> CiphertextBlock:
    ''' Returns (r1^k mod n, P * r2^k mod n).
    '''
    n = pub.n
    if not 0 <= P < n:
        raise BlockOutOfRange(f'plaintext block {P} is not in [0, {n})')
    if not 1 <= k <= n - 2:
        raise BadEphemeral(f'k must lie in [1, {n - 2}], got {k}')
    c1 = pow(pub.r1.value, k, n)
    c2 = P * pow(pub.r2.value, k, n) % n
    return CiphertextBlock(c1, c2)


def decrypt_block(priv: PrivateKey, ct: CiphertextBlock) -> int:
    ''' Returns c2 * (c1^a)^-1 mod n.
    '''
    n = priv.n
    mask = pow(ct.c1, priv.a, n)
    return ct.c2 * mod_inv(mask, n) % n


def encrypt_message(pub: PublicKey, msg: EncodedMessage, k_policy: KPolicy = FRESH_K,
                    rng: Optional[random.Random] = None) -> List[CiphertextBlock]:
    ''' Encrypts every block of msg.  With a fixed k all c1 values are equal
        and equal plaintext blocks give equal ciphertext blocks.
    '''
    if k_policy.is_fixed:
        logger.warning('encrypting with fixed k=%d; equal blocks will give equal ciphertexts',
                       k_policy.fixed_k)
    else:
        rng = rng or random.SystemRandom()

    blocks = []
    for P in msg.blocks:
        k = k_policy.fixed_k if k_policy.is_fixed else rng.randint(1, pub.n - 2)
        blocks.append(encrypt_block(pub, P, k))
    return blocks


def decrypt_message(priv: PrivateKey, cts: Sequence[CiphertextBlock],
                    pad_count: int = 0,
                    letters_per_block: Optional[int] = None) -> EncodedMessage:
    ''' Decrypts block by block.  letters_per_block defaults to what encode
        would choose for this modulus (1 when n is too small to hold letters).
    '''
    if letters_per_block is None:
        letters_per_block = letters_per_block_for(priv.n) if priv.n > 25 else 1
    blocks = tuple(decrypt_block(priv, ct) for ct in cts)
    return EncodedMessage(blocks, letters_per_block, pad_count)


def seal(pub: PublicKey, msg: EncodedMessage, k_policy: KPolicy = FRESH_K,
         rng: Optional[random.Random] = None) -> Ciphertext:
    ''' encrypt_message, keeping the padding metadata alongside the blocks.
    '''
    blocks = encrypt_message(pub, msg, k_policy, rng)
    return Ciphertext(tuple(blocks), msg.pad_count, msg.letters_per_block)


def unseal(priv: PrivateKey, ct: Ciphertext) -> EncodedMessage:
    return decrypt_message(priv, ct.blocks, ct.pad_count, ct.letters_per_block)


def check_pair(pub: PublicKey, priv: PrivateKey) -> None:
    ''' Raises unless the two keys belong together.
    '''
    if pub.modulus != priv.modulus:
        raise ModulusMismatch(f'public key modulo {pub.n}, private key modulo {priv.n}')
    if pow(pub.r1.value, priv.a, pub.n) != pub.r2.value:
        raise InputError('r2 is not r1^a modulo n')
