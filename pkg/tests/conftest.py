'''
Shared fixtures: the textbook key (3, 23, 29) with a = 4, and a list of the
small moduli p^m and 2p^m used by the exhaustive checks.
'''

import pytest
from hypothesis import settings

from unelgamal.elgamal import keypair_from_parameters
from unelgamal.group import make_modulus
from unelgamal.modmath import is_probable_prime

settings.register_profile('unelgamal', deadline=None)
settings.load_profile('unelgamal')

# Worked example: "I like math" under (r1, r2, n) = (3, 23, 29), a = 4, k = 5
TEXTBOOK_P = 29
TEXTBOOK_A = 4
TEXTBOOK_R1 = 3
TEXTBOOK_K = 5
TEXTBOOK_BLOCKS = (8, 11, 8, 10, 4, 12, 0, 19, 7)
TEXTBOOK_PAIRS = [(11, 26), (11, 14), (11, 26), (11, 18), (11, 13),
                  (11, 10), (11, 0), (11, 11), (11, 1)]


def supported_moduli(limit, smallest=3):
    ''' Every (p, m, doubled) with p an odd prime and smallest <= n <= limit.
    '''
    found = []
    for p in range(3, limit + 1, 2):
        if not is_probable_prime(p):
            continue
        m = 1
        while p ** m <= limit:
            if p ** m >= smallest:
                found.append((p, m, False))
            if 2 * p ** m <= limit and 2 * p ** m >= smallest:
                found.append((p, m, True))
            m += 1
    return sorted(found, key=lambda t: t[0] ** t[1] * (2 if t[2] else 1))


def moduli_up_to(limit, smallest=3):
    return [make_modulus(p, m, d) for p, m, d in supported_moduli(limit, smallest)]


@pytest.fixture
def textbook_keys():
    return keypair_from_parameters(TEXTBOOK_P, 1, False, TEXTBOOK_A, TEXTBOOK_R1)


@pytest.fixture
def textbook_pub(textbook_keys):
    return textbook_keys[0]


@pytest.fixture
def textbook_priv(textbook_keys):
    return textbook_keys[1]


@pytest.fixture
def u29():
    return make_modulus(29, 1, False)
