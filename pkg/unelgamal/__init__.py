'''
Python classes and functions for the ElGamal cryptosystem over the group of
units U(n), where n = p^m or n = 2p^m for an odd prime p.

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

from .codec import EncodedMessage, decode, encode, letters_per_block_for
from .config import Budget, DEFAULT_BUDGET
from .dlog import (AttackReport, DlogInstance, dlog_bruteforce, dlog_bsgs, make_instance,
                   recover_private_key, scaling_benchmark)
from .elgamal import (Ciphertext, CiphertextBlock, KPolicy, PrivateKey, PublicKey,
                      decrypt_block, decrypt_message, encrypt_block, encrypt_message,
                      keygen, keypair_from_parameters, seal, unseal)
from .errors import UnElGamalError
from .group import (Classification, Modulus, ModulusForm, Unit, classify_modulus,
                    element_order, find_generator, make_modulus, verify_generator)
from .modmath import Factorization, factorize, gcd, is_probable_prime, mod_inv, mod_pow

__version__ = '0.1'
