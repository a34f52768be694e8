'''
Defaults and effort budgets for UnElGamal.

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

import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .errors import InputError

# Key sizing: primes below this get a warning but are still used
DEFAULT_P_BITS     = 1024
RECOMMENDED_P_BITS = 1024

# Primality and factoring
MILLER_RABIN_ROUNDS  = 64
TRIAL_DIVISION_BOUND = 10**6

# Effort budgets
DEFAULT_RHO_ITERATIONS   = 2**20
DEFAULT_BSGS_TABLE       = 2**22
DEFAULT_BRUTEFORCE_ORDER = 2**26
DEFAULT_UNITS_CAP        = 2**20

# Largest n for which a full multiplication table is built
CAYLEY_TABLE_CAP = 4096

# Letter appended to fill the last block of a message
PAD_LETTER = 'X'

EFFORT_CAP_ENV = 'UN_ELGAMAL_EFFORT_CAP'


@dataclass(frozen=True)
class Budget:
    ''' How much work the factoring and discrete-log routines may do before
        giving up.  rho_iterations bounds each Pollard rho attempt, bsgs_table
        bounds the number of baby steps stored, bruteforce_order bounds the
        group order accepted by the exhaustive solver and units_cap bounds
        the n accepted by the unit-enumerating oracles.
    '''

    rho_iterations: int = DEFAULT_RHO_ITERATIONS
    bsgs_table: int = DEFAULT_BSGS_TABLE
    bruteforce_order: int = DEFAULT_BRUTEFORCE_ORDER
    units_cap: int = DEFAULT_UNITS_CAP

    def with_effort_cap(self, cap: int) -> 'Budget':
        ''' Returns a copy with the factoring and solver budgets set to cap.
        '''
        if cap < 1:
            raise InputError(f'effort cap must be positive, got {cap}')
        return replace(self, rho_iterations=cap, bsgs_table=cap, bruteforce_order=cap)

    @classmethod
    def from_environment(cls, environ: Optional[Mapping[str, str]] = None) -> 'Budget':
        ''' Returns the default budget, overridden by UN_ELGAMAL_EFFORT_CAP when set.
        '''
        environ = os.environ if environ is None else environ
        raw = environ.get(EFFORT_CAP_ENV)
        budget = cls()
        if raw is None or not raw.strip():
            return budget
        try:
            cap = int(raw.strip())
        except ValueError:
            raise InputError(f'{EFFORT_CAP_ENV} must be an integer, got {raw!r}') from None
        return budget.with_effort_cap(cap)


DEFAULT_BUDGET = Budget()
