'''
Command-line front end: key generation, encryption, decryption, discrete
logarithms, modulus classification and the attack-cost benchmark.

Copyright (C) 2026 The UnElGamal authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as
published by the Free Software Foundation, either version 3 of the
License, or (at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

Exit status:
    0  success
    2  invalid arguments
    3  I/O failure
    4  message cannot be encoded
    5  malformed key or ciphertext file
    6  decrypted block does not decode to letters
    7  target is not a power of the base
    8  effort cap or memory budget exceeded
'''

import argparse
import logging
import random
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import codec, dlog, elgamal, group, keyfile
from .config import DEFAULT_P_BITS, Budget
from .errors import (BlockOutOfRange, CapExceeded, FactorizationTooHard, InputError,
                     InvalidBlock, MalformedFile, ModulusTooSmall, NotInSubgroup,
                     UnElGamalError, UnsupportedCharacter)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CODEC = 4
EXIT_MALFORMED = 5
EXIT_INVALID_BLOCK = 6
EXIT_NOT_IN_SUBGROUP = 7
EXIT_CAP = 8

# First match wins, so subclasses come before their bases
_EXIT_CODES = (
    ((UnsupportedCharacter, ModulusTooSmall, BlockOutOfRange), EXIT_CODEC),
    ((MalformedFile,), EXIT_MALFORMED),
    ((InvalidBlock,), EXIT_INVALID_BLOCK),
    ((NotInSubgroup,), EXIT_NOT_IN_SUBGROUP),
    ((CapExceeded, FactorizationTooHard), EXIT_CAP),
    ((InputError,), EXIT_USAGE),
    ((OSError,), EXIT_IO),
)

_LOG_FORMAT = '%(asctime)s | %(levelname)s | %(message)s'


class UsageError(InputError):
    pass


# Helpers =====================================================================

def _bits_list(text: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got {text!r}')
    if not values or any(v < 3 for v in values):
        raise argparse.ArgumentTypeError(f'every bit size must be at least 3, got {text!r}')
    return values


def _budget(args) -> Budget:
    budget = Budget.from_environment()
    if getattr(args, 'effort_cap', None) is not None:
        budget = budget.with_effort_cap(args.effort_cap)
    return budget


def _rng(args, gated: bool = True) -> random.Random:
    ''' A seeded generator when --seed is given, the system source otherwise.
    '''
    if args.seed is None:
        return random.SystemRandom()
    if gated and not args.insecure_deterministic:
        raise UsageError('--seed requires --insecure-deterministic')
    logger.warning('using seed %d: output is reproducible and NOT secret', args.seed)
    return random.Random(args.seed)


def _cyclic_modulus(n: int, budget: Budget) -> group.Modulus:
    kind = group.classify_modulus(n, budget)
    if kind.form not in (group.ModulusForm.CYCLIC_P_M, group.ModulusForm.CYCLIC_2P_M):
        raise UsageError(f'n={n} is {kind}; need n = p^m or 2p^m with p an odd prime')
    return group.make_modulus(kind.p, kind.m, kind.form is group.ModulusForm.CYCLIC_2P_M,
                              budget=budget)


# Subcommands =================================================================

def cmd_keygen(args) -> int:
    budget = _budget(args)
    exact = (args.exact_p, args.exact_a, args.exact_r1)
    rng = _rng(args)

    if any(v is not None for v in exact):
        if not args.insecure_deterministic:
            raise UsageError('--exact-* values require --insecure-deterministic')
        if args.exact_p is None:
            raise UsageError('--exact-a and --exact-r1 need --exact-p')
        a = args.exact_a
        if a is None:
            mod = group.make_modulus(args.exact_p, args.m, args.doubled, budget=budget)
            a = rng.randint(2, mod.n - 2)
        pub, priv = elgamal.keypair_from_parameters(
            args.exact_p, args.m, args.doubled, a, args.exact_r1, budget)
    else:
        pub, priv = elgamal.keygen(args.p_bits, args.m, args.doubled, rng, budget)

    if args.pub:
        keyfile.save_public_key(pub, args.pub)
    if args.priv:
        keyfile.save_private_key(priv, args.priv)

    print(f'n={pub.n}')
    print(f'bits={pub.n.bit_length()}')
    print(f'generator={pub.r1.value}')
    print(f'public key: {pub}')
    return EXIT_OK


def cmd_encrypt(args) -> int:
    if args.k is not None and not args.paper_mode:
        raise UsageError('--k is only used with --paper-mode')
    if args.paper_mode and args.k is None:
        raise UsageError('--paper-mode needs --k')

    pub = keyfile.load_public_key(args.pub)
    text = args.message if args.message is not None else keyfile.load_message(args.input)
    msg = codec.encode(text, pub.n)

    if args.paper_mode:
        policy = elgamal.KPolicy.fixed(args.k)
        rng = None
    else:
        policy = elgamal.FRESH_K
        rng = _rng(args)

    ct = elgamal.seal(pub, msg, policy, rng)
    if args.out:
        keyfile.save_ciphertext(ct, args.out)
    else:
        sys.stdout.write(keyfile.dumps_ciphertext(ct))
    return EXIT_OK


def cmd_decrypt(args) -> int:
    priv = keyfile.load_private_key(args.priv)
    ct = keyfile.load_ciphertext(args.input, priv.n)
    msg = elgamal.unseal(priv, ct)
    if args.show_blocks:
        print(msg.digits())
    print(codec.decode(msg))
    return EXIT_OK


def cmd_dlog(args) -> int:
    budget = _budget(args)
    mod = _cyclic_modulus(args.n, budget)
    base = group.unit(args.base % mod.n, mod)
    if not group.is_unit(args.target % mod.n, mod):
        raise NotInSubgroup(f'{args.target} is not a unit modulo {mod.n}')
    target = group.Unit(args.target % mod.n, mod)

    inst = dlog.make_instance(base, target, require_generator=False)
    if inst.order != mod.phi:
        logger.warning('%d has order %d, not a generator of U(%d)', base.value, inst.order, mod.n)
    report = dlog.solve(inst, args.alg, budget)
    print(f'{report.solution} ({report.algorithm})')
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.n < 2:
        raise UsageError(f'n must be at least 2, got {args.n}')
    print(group.classify_modulus(args.n, _budget(args)))
    return EXIT_OK


def cmd_powers(args) -> int:
    budget = _budget(args)
    mod = _cyclic_modulus(args.n, budget)
    g = group.unit(args.base % mod.n, mod)
    for x, value in group.power_table(g):
        print(f'{x} {value}')
    return EXIT_OK


def cmd_attack(args) -> int:
    pub = keyfile.load_public_key(args.pub)
    print(dlog.recover_private_key(pub, args.alg, _budget(args)))
    return EXIT_OK


def cmd_bench(args) -> int:
    rng = _rng(args, gated=False)
    reports = dlog.scaling_benchmark(args.p_bits, args.m, args.doubled, args.trials, rng,
                                     _budget(args), args.workers)
    table = dlog.reports_to_csv(reports, args.omit_timing)
    if args.out:
        Path(args.out).write_text(table)
        logger.info('wrote %d rows to %s', len(reports), args.out)
    else:
        sys.stdout.write(table)

    try:
        slope = f'{dlog.fit_scaling_exponent(reports):.4f}'
    except InputError:
        slope = 'n/a'
    print(f'slope={slope}' if args.out else f'# slope: {slope}')
    return EXIT_OK


# Parser ======================================================================

def _add_seed(p: argparse.ArgumentParser):
    p.add_argument('--seed', type=int, help='seed for the random source')
    p.add_argument('--insecure-deterministic', action='store_true',
                   help='allow --seed and other reproducible, NON-SECRET key material')


def _add_effort(p: argparse.ArgumentParser):
    p.add_argument('--effort-cap', type=int,
                   help='override factoring and solver budgets (also UN_ELGAMAL_EFFORT_CAP)')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='un-elgamal',
        description='ElGamal over the group of units U(n), n = p^m or 2p^m.')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log more to stderr (-v info, -vv debug)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('keygen', help='generate a key pair')
    p.add_argument('--p-bits', type=int, default=DEFAULT_P_BITS, help='bits of the prime p')
    p.add_argument('--m', type=int, default=1, help='exponent m in n = p^m')
    p.add_argument('--doubled', action='store_true', help='use n = 2p^m')
    p.add_argument('--pub', help='write the public key here')
    p.add_argument('--priv', help='write the private key here')
    p.add_argument('--exact-p', type=int, help='use this prime instead of generating one')
    p.add_argument('--exact-a', type=int, help='use this private exponent')
    p.add_argument('--exact-r1', type=int, help='use this generator')
    _add_seed(p)
    _add_effort(p)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser('encrypt', help='encrypt a letters-only message')
    p.add_argument('--pub', required=True, help='public key file')
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument('--message', help='message text')
    source.add_argument('--in', dest='input', help='file holding the message text')
    p.add_argument('--out', help='ciphertext file (default: stdout)')
    p.add_argument('--paper-mode', action='store_true',
                   help='use one fixed k for every block (leaks equal blocks)')
    p.add_argument('--k', type=int, help='the fixed k for --paper-mode')
    _add_seed(p)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser('decrypt', help='decrypt a ciphertext file')
    p.add_argument('--priv', required=True, help='private key file')
    p.add_argument('--in', dest='input', required=True, help='ciphertext file')
    p.add_argument('--show-blocks', action='store_true',
                   help='also print the decrypted numeric blocks')
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser('dlog', help='solve base^x = target in U(n)')
    p.add_argument('--base', type=int, required=True)
    p.add_argument('--target', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--alg', choices=(dlog.BRUTE, dlog.BSGS), default=dlog.BSGS)
    _add_effort(p)
    p.set_defaults(func=cmd_dlog)

    p = sub.add_parser('classify', help='is U(n) cyclic, and of which form')
    p.add_argument('n', type=int)
    _add_effort(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('powers', help='list x and base^x mod n')
    p.add_argument('--base', type=int, required=True)
    p.add_argument('--n', type=int, required=True)
    _add_effort(p)
    p.set_defaults(func=cmd_powers)

    p = sub.add_parser('attack', help='recover a private exponent from a public key')
    p.add_argument('--pub', required=True, help='public key file')
    p.add_argument('--alg', choices=(dlog.BRUTE, dlog.BSGS), default=dlog.BSGS)
    _add_effort(p)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser('bench', help='measure baby-step giant-step cost against group size',
                       description='Time baby-step giant-step on random safe-prime groups.  '
                                   'With the same --seed every column but elapsed_s repeats; '
                                   'add --omit-timing for byte-identical output.')
    p.add_argument('--p-bits', type=_bits_list, default=[12, 16, 20, 24],
                   help='comma-separated bit sizes of p')
    p.add_argument('--m', type=int, default=1)
    p.add_argument('--doubled', action='store_true')
    p.add_argument('--trials', type=int, default=5)
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--out', help='CSV file (default: stdout)')
    p.add_argument('--omit-timing', action='store_true',
                   help='write elapsed_s as 0 so equal seeds give identical files')
    _add_seed(p)
    _add_effort(p)
    p.set_defaults(func=cmd_bench)

    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=_LOG_FORMAT, stream=sys.stderr, force=True)


def _exit_code(err: BaseException) -> int:
    for classes, code in _EXIT_CODES:
        if isinstance(err, classes):
            return code
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code or 0

    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (UnElGamalError, OSError) as err:
        print(f'error: {err}', file=sys.stderr)
        return _exit_code(err)


if __name__ == '__main__':
    sys.exit(main())
