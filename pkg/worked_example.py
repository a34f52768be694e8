#!/usr/bin/env python3

'''
worked_example.py Walk through the textbook example: encrypt "I like math" to
the public key (3, 23, 29) with k = 5, then decrypt it with a = 4.

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

# The example's key material and fixed ephemeral exponent
P  = 29
A  = 4
R1 = 3
K  = 5

MESSAGE = 'I like math'

from unelgamal import (KPolicy, decode, decrypt_message, dlog_bsgs, encode, encrypt_message,
                       keypair_from_parameters, make_instance)

pub, priv = keypair_from_parameters(P, 1, False, A, R1)
print('Public key (r1, r2, n) = %s, private key a = %d' % (pub, priv.a))

msg = encode(MESSAGE, pub.n)
print('Plaintext blocks: %s' % msg.digits())

cts = encrypt_message(pub, msg, KPolicy.fixed(K))
print('Ciphertext: %s' % ' '.join('(%d, %d)' % (c.c1, c.c2) for c in cts))

back = decrypt_message(priv, cts, msg.pad_count)
print('Decrypted blocks: %s' % back.digits())
print('Decrypted text: %s' % decode(back))

# The same key falls to a discrete-log attack at this size
print('Recovered a from (r1, r2): %d' % dlog_bsgs(make_instance(pub.r1, pub.r2)))
