'''
Letter-to-number translation (A=00 ... Z=25) and packing of the two-digit
codes into fixed-width decimal blocks below the modulus.

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

import string
from dataclasses import dataclass
from typing import List, Tuple

from .config import PAD_LETTER
from .errors import BlockOutOfRange, InputError, InvalidBlock, ModulusTooSmall, UnsupportedCharacter

ALPHABET = string.ascii_uppercase

# Largest two-digit code, for Z
_MAX_CODE = len(ALPHABET) - 1


@dataclass(frozen=True)
class EncodedMessage:
    ''' Numeric plaintext blocks.  Each block renders to exactly
        2 * letters_per_block decimal digits; the last pad_count letters of the
        last block are padding.
    '''

    blocks: Tuple[int, ...]
    letters_per_block: int = 1
    pad_count: int = 0

    def __post_init__(self):
        if self.letters_per_block < 1:
            raise InputError(f'letters_per_block must be positive, got {self.letters_per_block}')
        if not 0 <= self.pad_count < self.letters_per_block:
            raise InputError(f'pad_count {self.pad_count} must be below {self.letters_per_block}')

    def digits(self) -> str:
        ''' The blocks as space-separated fixed-width decimal strings.
        '''
        width = 2 * self.letters_per_block
        return ' '.join(f'{b:0{width}d}' for b in self.blocks)


def letters_per_block_for(n: int) -> int:
    ''' The most letters t such that t copies of "25" read as a number stay
        below n.
    '''
    if n <= _MAX_CODE:
        raise ModulusTooSmall(f'modulus {n} cannot hold the letter code {_MAX_CODE}')
    t = 1
    while int(f'{_MAX_CODE:02d}' * (t + 1)) < n:
        t += 1
    return t


def normalize(text: str) -> str:
    ''' Uppercases text and drops whitespace, rejecting anything outside A-Z.
    '''
    letters: List[str] = []
    for position, char in enumerate(text):
        if char.isspace():
            continue
        upper = char.upper()
        if len(upper) != 1 or upper not in ALPHABET:
            raise UnsupportedCharacter(char, position)
        letters.append(upper)
    return ''.join(letters)


def encode(text: str, n: int) -> EncodedMessage:
    ''' Translates text into blocks of letters_per_block_for(n) letters each,
        padding the last block with X.
    '''
    per_block = letters_per_block_for(n)
    letters = normalize(text)

    pad_count = -len(letters) % per_block
    letters += PAD_LETTER * pad_count

    blocks = []
    for start in range(0, len(letters), per_block):
        chunk = letters[start:start + per_block]
        block = int(''.join(f'{ALPHABET.index(c):02d}' for c in chunk))
        if block >= n:
            raise BlockOutOfRange(f'block {block} is not below {n}')
        blocks.append(block)

    return EncodedMessage(tuple(blocks), per_block, pad_count)


def decode(msg: EncodedMessage) -> str:
    ''' Turns blocks back into letters and strips the padding.
    '''
    width = 2 * msg.letters_per_block
    letters: List[str] = []
    for i, block in enumerate(msg.blocks):
        digits = f'{block:0{width}d}'
        if block < 0 or len(digits) != width:
            raise InvalidBlock(f'block {i} ({block}) does not fit in {width} digits')
        for k in range(0, width, 2):
            code = int(digits[k:k + 2])
            if code > _MAX_CODE:
                raise InvalidBlock(f'block {i} ({digits}) holds letter code {code}')
            letters.append(ALPHABET[code])

    if msg.pad_count:
        del letters[-msg.pad_count:]
    return ''.join(letters)
