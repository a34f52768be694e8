'''
Discrete logarithms over U(n): the exhaustive definition-level solver,
baby-step giant-step, and a benchmark that measures how the cost of the
attack grows with the size of the group.

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

import csv
import io
import logging
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .errors import CapExceeded, InputError, MemoryBudgetExceeded, ModulusMismatch, NotInSubgroup
from .group import Modulus, Unit, element_order, find_generator, make_modulus, verify_generator
from .modmath import Factorization, gen_safe_prime, mod_inv

logger = logging.getLogger(__name__)

BRUTE = 'brute'
BSGS = 'bsgs'

# group_ops <= BSGS_OPS_CONSTANT * sqrt(order) for every order >= 9
BSGS_OPS_CONSTANT = 3

CSV_HEADER = ('group_order', 'algorithm', 'bits', 'elapsed_s', 'group_ops', 'solution')


@dataclass(frozen=True)
class DlogInstance:
    ''' Find x with base^x = target.  order is the order of base, which is
        phi(n) whenever base is a generator.
    '''

    base: Unit
    target: Unit
    order: int

    @property
    def modulus(self) -> Modulus:
        return self.base.modulus


@dataclass(frozen=True)
class AttackReport:

    group_order: int
    algorithm: str
    bits: int
    solution: int
    elapsed: float
    group_ops: int


def make_instance(base: Unit, target: Unit, require_generator: bool = True) -> DlogInstance:
    ''' Builds a DlogInstance.  The base must generate U(n) unless
        require_generator is False, in which case its own order is used.
    '''
    if base.modulus != target.modulus:
        raise ModulusMismatch(f'base modulo {base.modulus.n}, target modulo {target.modulus.n}')
    if verify_generator(base.value, base.modulus):
        return DlogInstance(base, target, base.modulus.phi)
    if require_generator:
        raise InputError(f'{base.value} does not generate U({base.modulus.n})')
    return DlogInstance(base, target, element_order(base))


def dlog_bruteforce(inst: DlogInstance, budget: Budget = DEFAULT_BUDGET) -> int:
    ''' Least x >= 0 with base^x = target, by trying x = 0, 1, 2, ...
    '''
    return _bruteforce(inst, budget)[0]


def _bruteforce(inst, budget):
    if inst.order > budget.bruteforce_order:
        raise CapExceeded('dlog_bruteforce group order', inst.order, budget.bruteforce_order)
    n = inst.modulus.n
    g, h = inst.base.value, inst.target.value
    value = 1
    for x in range(inst.order):
        if value == h:
            return x, x
        value = value * g % n
    raise NotInSubgroup(f'{h} is not a power of {g} modulo {n}')


def dlog_bsgs(inst: DlogInstance, budget: Budget = DEFAULT_BUDGET) -> int:
    ''' Least x >= 0 with base^x = target, in O(sqrt(order)) multiplications
        and O(sqrt(order)) stored baby steps.
    '''
    return _bsgs(inst, budget)[0]


def _bsgs(inst, budget):
    n = inst.modulus.n
    g, h = inst.base.value, inst.target.value
    steps = math.isqrt(inst.order - 1) + 1 if inst.order > 1 else 1
    if steps > budget.bsgs_table:
        raise MemoryBudgetExceeded('dlog_bsgs baby-step table', steps, budget.bsgs_table)
    logger.debug('bsgs: order %d, %d baby steps', inst.order, steps)

    # Baby steps: g^j -> j, keeping the smallest j per residue
    table: Dict[int, int] = {}
    value = 1
    for j in range(steps):
        table.setdefault(value, j)
        value = value * g % n
    ops = steps

    # Giant steps: h * g^(-steps*i)
    stride = mod_inv(pow(g, steps, n), n)
    value = h
    for i in range(steps + 1):
        ops += 1
        j = table.get(value)
        if j is not None:
            return (i * steps + j) % inst.order, ops
        value = value * stride % n

    raise NotInSubgroup(f'{h} is not a power of {g} modulo {n}')


_SOLVERS: Dict[str, Callable[[DlogInstance, Budget], Tuple[int, int]]] = {
    BRUTE: _bruteforce,
    BSGS: _bsgs,
}


def solve(inst: DlogInstance, algorithm: str = BSGS,
          budget: Budget = DEFAULT_BUDGET, bits: int = 0) -> AttackReport:
    ''' Runs the named solver and reports the answer with its cost.
    '''
    try:
        solver = _SOLVERS[algorithm]
    except KeyError:
        raise InputError(f'unknown algorithm {algorithm!r}; use one of {sorted(_SOLVERS)}') from None
    start = time.perf_counter()
    solution, ops = solver(inst, budget)
    elapsed = time.perf_counter() - start
    return AttackReport(inst.order, algorithm, bits or inst.modulus.p.bit_length(),
                        solution, elapsed, ops)


def recover_private_key(pub, algorithm: str = BSGS, budget: Budget = DEFAULT_BUDGET) -> int:
    ''' Attacks a public key (r1, r2, n) by solving r1^x = r2.  The least x is
        returned; it decrypts exactly like the private exponent a.
    '''
    return solve(make_instance(pub.r1, pub.r2), algorithm, budget).solution


def scaling_benchmark(p_bits_list: Sequence[int], m: int, doubled: bool, trials: int,
                      rng: random.Random, budget: Budget = DEFAULT_BUDGET,
                      workers: int = 1) -> List[AttackReport]:
    ''' For each bit size, builds U(n) over a safe prime of that size, draws
        `trials` random exponents x and times BSGS on (g, g^x).  Instances are
        drawn in order from rng before any solving, so the reports do not
        depend on workers.  The result is sorted by group order.
    '''
    if trials < 0:
        raise InputError(f'trials must be nonnegative, got {trials}')
    if trials == 0:
        return []

    jobs = []
    for bits in p_bits_list:
        mod = _safe_prime_modulus(bits, m, doubled, rng, budget)
        g = find_generator(mod)
        logger.info('benchmark group: %d-bit p, n=%d, order %d', bits, mod.n, mod.phi)
        for _ in range(trials):
            x = rng.randrange(mod.phi)
            target = Unit(pow(g.value, x, mod.n), mod)
            jobs.append((DlogInstance(g, target, mod.phi), bits))

    def run(job):
        inst, bits = job
        return solve(inst, BSGS, budget, bits)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, jobs))
    else:
        reports = [run(job) for job in jobs]

    return sorted(reports, key=lambda r: r.group_order)


def _safe_prime_modulus(bits, m, doubled, rng, budget):
    p = gen_safe_prime(bits, rng)
    return make_modulus(p, m, doubled, Factorization.of_safe_prime_predecessor(p), budget)


def fit_scaling_exponent(reports: Iterable[AttackReport]) -> float:
    ''' Least-squares slope of log(median group_ops) against log(group order),
        one point per distinct group order.
    '''
    by_order: Dict[int, List[int]] = {}
    for r in reports:
        by_order.setdefault(r.group_order, []).append(r.group_ops)
    if len(by_order) < 2:
        raise InputError('need reports for at least two group orders to fit a slope')

    orders = sorted(by_order)
    x = np.log(np.array(orders, dtype=float))
    y = np.log(np.array([np.median(by_order[o]) for o in orders], dtype=float))
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def reports_to_csv(reports: Iterable[AttackReport], omit_timing: bool = False) -> str:
    ''' Renders reports as CSV, one row per trial.
    '''
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for r in reports:
        elapsed = 0.0 if omit_timing else r.elapsed
        writer.writerow((r.group_order, r.algorithm, r.bits, f'{elapsed:.6f}',
                         r.group_ops, r.solution))
    return out.getvalue()
