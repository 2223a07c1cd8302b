"""Irreducible characters of the symmetric groups, exactly.

Values come from the Murnaghan-Nakayama rule on beta-numbers, memoised on
(shape, remaining cycles); degrees from the hook length formula with the
factorial cancelled prime by prime.
"""

from __future__ import annotations

import threading
from collections import Counter
from math import factorial, prod
from typing import Iterable

from .partitions import (
    Partition,
    e_core_and_weight,
    factorial_valuation,
    from_beta_numbers,
    hook_lengths,
    p_adic_expansion,
    valuation,
)

DEFAULT_CACHE_LIMIT = 1 << 22


def _cycles(sigma: Iterable[int]) -> tuple[int, ...]:
    cyc = tuple(sorted((int(c) for c in sigma), reverse=True))
    if cyc and cyc[-1] < 1:
        raise ValueError(f"cycle lengths must be positive: {cyc}")
    return cyc


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"[: n + 1]
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def _factor(m: int) -> Counter:
    out: Counter = Counter()
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] += 1
            m //= d
        d += 1
    if m > 1:
        out[m] += 1
    return out


def hook_degree(lam: Partition) -> int:
    """n! over the product of hook lengths, without forming n!."""
    n = sum(lam)
    exps = Counter({p: factorial_valuation(n, p) for p in _primes_upto(n)})
    for h in hook_lengths(lam):
        exps.subtract(_factor(h))
    if any(v < 0 for v in exps.values()):
        raise ArithmeticError(f"hook product does not divide {n}!")
    return prod(p**v for p, v in exps.items())


class CharacterEngine:
    """Memoised Murnaghan-Nakayama evaluator.

    One engine should be used by one thread at a time; ``default_engine()``
    hands out a per-thread instance.  The memo is cleared wholesale once it
    exceeds ``cache_limit`` entries.
    """

    def __init__(self, cache_limit: int = DEFAULT_CACHE_LIMIT):
        self.cache_limit = cache_limit
        self._values: dict[tuple, int] = {}
        self._degrees: dict[tuple, int] = {}

    def clear(self) -> None:
        self._values.clear()
        self._degrees.clear()

    def degree(self, lam: Partition) -> int:
        key = tuple(lam)
        d = self._degrees.get(key)
        if d is None:
            if len(self._degrees) >= self.cache_limit:
                self._degrees.clear()
            d = self._degrees[key] = hook_degree(lam)
        return d

    def value(self, lam: Partition, sigma: Iterable[int]) -> int:
        cycles = _cycles(sigma)
        if sum(lam) != sum(cycles):
            raise ValueError(f"size mismatch: |lambda| = {sum(lam)}, |sigma| = {sum(cycles)}")
        return self._mn(tuple(lam), cycles)

    def _mn(self, lam: tuple, cycles: tuple) -> int:
        if not cycles:
            return 1
        r = cycles[0]
        if r == 1:
            return self.degree(lam)
        key = (lam, cycles)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        rest = cycles[1:]
        ell = len(lam)
        beta = [lam[i] + ell - 1 - i for i in range(ell)]
        occupied = set(beta)
        total = 0
        for i, b in enumerate(beta):
            t = b - r
            if t < 0 or t in occupied:
                continue
            leg = 0
            for c in beta[i + 1:]:
                if c > t:
                    leg += 1
                else:
                    break
            mu = from_beta_numbers(beta[:i] + [t] + beta[i + 1:])
            v = self._mn(tuple(mu), rest)
            total += -v if leg & 1 else v
        if len(self._values) >= self.cache_limit:
            self._values.clear()
        self._values[key] = total
        return total


_local = threading.local()


def default_engine() -> CharacterEngine:
    eng = getattr(_local, "engine", None)
    if eng is None:
        eng = _local.engine = CharacterEngine()
    return eng


def mn_value(lam: Partition, sigma: Iterable[int]) -> int:
    """The character value chi^lam at an element of cycle type sigma."""
    return default_engine().value(lam, sigma)


def degree(lam: Partition) -> int:
    return default_engine().degree(lam)


def p_valuation_of_degree(lam: Partition, p: int) -> int:
    n = sum(lam)
    return factorial_valuation(n, p) - sum(valuation(h, p) for h in hook_lengths(lam) if h % p == 0)


def is_p_prime_degree(lam: Partition, p: int) -> bool:
    """Macdonald's recursive test for p not dividing the degree.

    Peel the top p-adic digit of n: lam must have exactly that many hooks of
    the top p-power size to remove, then recurse on the remaining core.
    """
    n = sum(lam)
    while n:
        k, a = p_adic_expansion(n, p).terms[0]
        core, w = e_core_and_weight(lam, p**k)
        if w != a:
            return False
        lam, n = core, n - a * p**k
    return True


def is_defect_zero(lam: Partition, p: int) -> bool:
    return e_core_and_weight(lam, p)[1] == 0


def big_core_forces_divisibility(lam: Partition, p: int) -> bool:
    """Return whether |C_p(lam)| >= p; if so, check that p divides the degree.

    Raises AssertionError if the hypothesis holds but the conclusion fails.
    """
    core, _ = e_core_and_weight(lam, p)
    hypothesis = sum(core) >= p
    if hypothesis and p_valuation_of_degree(lam, p) == 0:
        raise AssertionError(f"|C_{p}({lam})| >= {p} but {p} does not divide the degree")
    return hypothesis


def centraliser_order(sigma: Iterable[int]) -> int:
    m = Counter(sigma)
    return prod(i**k * factorial(k) for i, k in m.items())


def sign(sigma: Iterable[int]) -> int:
    cyc = list(sigma)
    return -1 if (sum(cyc) - len(cyc)) % 2 else 1
