'''
Exception classes raised by the UnElGamal package.

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


class UnElGamalError(Exception):
    ''' Root of every error raised on purpose by this package.
    '''


class InputError(UnElGamalError, ValueError):
    ''' An argument was rejected before any work was done.
    '''


# Arithmetic ==================================================================

class NotInvertible(UnElGamalError, ArithmeticError):

    def __init__(self, value, modulus):
        super().__init__(f'{value} has no inverse modulo {modulus}')
        self.value = value
        self.modulus = modulus


class FactorizationTooHard(UnElGamalError):
    ''' A composite cofactor survived the configured Pollard rho budget.
        Use a safe prime so that phi factors without general factoring.
    '''

    def __init__(self, cofactor, iterations):
        super().__init__(
            f'could not split composite {cofactor} within {iterations} rho iterations')
        self.cofactor = cofactor
        self.iterations = iterations


# Group structure =============================================================

class InvalidPrime(InputError):
    pass


class InvalidExponent(InputError):
    pass


class NotAUnit(InputError):
    pass


class ModulusMismatch(UnElGamalError):
    pass


class CapExceeded(UnElGamalError):
    ''' A desk-scale routine was asked to work above its cap.
    '''

    def __init__(self, what, size, cap):
        super().__init__(f'{what}: {size} exceeds the cap of {cap}')
        self.size = size
        self.cap = cap


class MemoryBudgetExceeded(CapExceeded):
    pass


class NotInSubgroup(UnElGamalError):
    pass


# Cryptosystem and codec ======================================================

class BlockOutOfRange(InputError):
    pass


class BadEphemeral(InputError):
    pass


class ModulusTooSmall(InputError):
    pass


class UnsupportedCharacter(InputError):

    def __init__(self, char, position):
        super().__init__(f'unsupported character {char!r} at position {position}')
        self.char = char
        self.position = position


class InvalidBlock(UnElGamalError):
    pass


class MalformedFile(UnElGamalError):

    def __init__(self, path, line, reason):
        where = f'{path}:{line}' if line else str(path)
        super().__init__(f'{where}: {reason}')
        self.path = path
        self.line = line
