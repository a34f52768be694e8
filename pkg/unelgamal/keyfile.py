'''
Line-oriented decimal text formats for public keys, private keys and
ciphertexts.

Copyright (C) 2026 The UnElGamal authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

Public key:                 Private key:               Ciphertext:
    UN-ELGAMAL PUBLIC v1        UN-ELGAMAL PRIVATE v1      UN-ELGAMAL CT v1
    n=<dec>                     n=<dec>                    blocks=<N>
    p=<dec>                     p=<dec>                    pad=<count>
    m=<dec>                     m=<dec>                    c1=<dec> c2=<dec>   (N lines)
    doubled=<0|1>               doubled=<0|1>
    r1=<dec>                    a=<dec>
    r2=<dec>
'''

import logging
import math
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .codec import letters_per_block_for
from .elgamal import Ciphertext, CiphertextBlock, PrivateKey, PublicKey, private_key, public_key
from .errors import MalformedFile, UnElGamalError, UnsupportedCharacter
from .group import Modulus, make_modulus

logger = logging.getLogger(__name__)

PUBLIC_HEADER = 'UN-ELGAMAL PUBLIC v1'
PRIVATE_HEADER = 'UN-ELGAMAL PRIVATE v1'
CIPHERTEXT_HEADER = 'UN-ELGAMAL CT v1'

_MODULUS_FIELDS = ('n', 'p', 'm', 'doubled')

PathLike = Union[str, Path]


# Writing =====================================================================

def _modulus_lines(mod: Modulus) -> List[str]:
    return [f'n={mod.n}', f'p={mod.p}', f'm={mod.m}', f'doubled={int(mod.doubled)}']


def dumps_public_key(pub: PublicKey) -> str:
    lines = [PUBLIC_HEADER] + _modulus_lines(pub.modulus)
    lines += [f'r1={pub.r1.value}', f'r2={pub.r2.value}']
    return '\n'.join(lines) + '\n'


def dumps_private_key(priv: PrivateKey) -> str:
    lines = [PRIVATE_HEADER] + _modulus_lines(priv.modulus) + [f'a={priv.a}']
    return '\n'.join(lines) + '\n'


def dumps_ciphertext(ct: Ciphertext) -> str:
    lines = [CIPHERTEXT_HEADER, f'blocks={len(ct.blocks)}', f'pad={ct.pad_count}']
    lines += [f'c1={b.c1} c2={b.c2}' for b in ct.blocks]
    return '\n'.join(lines) + '\n'


# Reading =====================================================================

class _Reader:
    ''' Walks the lines of one file, turning every problem into MalformedFile
        with the offending line number.
    '''

    def __init__(self, text: str, path: PathLike):
        self.lines = text.splitlines()
        self.path = str(path)
        self.index = 0

    def fail(self, reason, line=None):
        raise MalformedFile(self.path, self.index if line is None else line, reason)

    def header(self, expected):
        if not self.lines or self.lines[0].strip() != expected:
            self.fail(f'expected header {expected!r}', 1)
        self.index = 1

    def next_line(self):
        if self.index >= len(self.lines):
            self.index += 1
            self.fail('unexpected end of file')
        line = self.lines[self.index].strip()
        self.index += 1
        return line

    def field(self, name):
        key, sep, value = self.next_line().partition('=')
        if not sep or key.strip() != name:
            self.fail(f'expected {name}=<decimal>')
        return self.decimal(value)

    def decimal(self, value):
        value = value.strip()
        if not (value.isascii() and value.isdigit()):
            self.fail(f'{value!r} is not a decimal integer')
        return int(value)

    def pair(self) -> Tuple[int, int]:
        parts = self.next_line().split()
        fields: Dict[str, str] = {}
        for part in parts:
            key, sep, value = part.partition('=')
            if not sep:
                self.fail(f'expected c1=<decimal> c2=<decimal>, got {part!r}')
            fields[key] = value
        if sorted(fields) != ['c1', 'c2']:
            self.fail('expected c1=<decimal> c2=<decimal>')
        return self.decimal(fields['c1']), self.decimal(fields['c2'])

    def end(self):
        if any(line.strip() for line in self.lines[self.index:]):
            self.index += 1
            self.fail('unexpected trailing content')

    def modulus(self) -> Modulus:
        n, p, m, doubled = (self.field(name) for name in _MODULUS_FIELDS)
        if doubled not in (0, 1):
            self.fail('doubled must be 0 or 1')
        try:
            mod = make_modulus(p, m, bool(doubled))
        except UnElGamalError as err:
            self.fail(str(err))
        if mod.n != n:
            self.fail(f'n={n} does not match p={p}, m={m}, doubled={doubled}')
        return mod


def loads_public_key(text: str, path: PathLike = '<string>') -> PublicKey:
    reader = _Reader(text, path)
    reader.header(PUBLIC_HEADER)
    mod = reader.modulus()
    r1, r2 = reader.field('r1'), reader.field('r2')
    reader.end()
    try:
        return public_key(r1, r2, mod)
    except UnElGamalError as err:
        reader.fail(str(err))


def loads_private_key(text: str, path: PathLike = '<string>') -> PrivateKey:
    reader = _Reader(text, path)
    reader.header(PRIVATE_HEADER)
    mod = reader.modulus()
    a = reader.field('a')
    reader.end()
    try:
        return private_key(a, mod)
    except UnElGamalError as err:
        reader.fail(str(err))


def loads_ciphertext(text: str, n: int, path: PathLike = '<string>') -> Ciphertext:
    ''' Parses a ciphertext for the key with modulus n, which fixes how many
        letters each block holds.
    '''
    reader = _Reader(text, path)
    reader.header(CIPHERTEXT_HEADER)
    count = reader.field('blocks')
    pad = reader.field('pad')
    per_block = letters_per_block_for(n)
    if pad >= per_block:
        reader.fail(f'pad={pad} must be below {per_block} letters per block')

    blocks: List[CiphertextBlock] = []
    for _ in range(count):
        c1, c2 = reader.pair()
        if c1 >= n or c2 >= n:
            reader.fail(f'({c1}, {c2}) is not reduced modulo {n}')
        if math.gcd(c1, n) != 1:
            reader.fail(f'c1={c1} is not a unit modulo {n}')
        blocks.append(CiphertextBlock(c1, c2))
    reader.end()
    return Ciphertext(tuple(blocks), pad, per_block)


# Files =======================================================================

def _write(path: PathLike, text: str, what: str):
    Path(path).write_text(text, encoding='ascii')
    logger.info('saved %s: %s', what, path)


def _read(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding='ascii')
    except UnicodeDecodeError:
        raise MalformedFile(str(path), None, 'not an ASCII text file') from None


def save_public_key(pub: PublicKey, path: PathLike) -> None:
    _write(path, dumps_public_key(pub), 'public key')


def save_private_key(priv: PrivateKey, path: PathLike) -> None:
    _write(path, dumps_private_key(priv), 'private key')


def save_ciphertext(ct: Ciphertext, path: PathLike) -> None:
    _write(path, dumps_ciphertext(ct), 'ciphertext')


def load_public_key(path: PathLike) -> PublicKey:
    return loads_public_key(_read(path), path)


def load_private_key(path: PathLike) -> PrivateKey:
    return loads_private_key(_read(path), path)


def load_ciphertext(path: PathLike, n: int) -> Ciphertext:
    return loads_ciphertext(_read(path), n, path)


def load_message(path: PathLike) -> str:
    ''' Reads a plaintext message file as UTF-8.  Bytes that do not decode are
        reported like any other character the codec cannot encode.
    '''
    try:
        return Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as err:
        raise UnsupportedCharacter(err.object[err.start:err.end], err.start) from None
