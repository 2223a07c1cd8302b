"""Cycle-type census of a Sylow p-subgroup of S_n.

The Sylow subgroup is a direct product of iterated wreath products of C_p,
one factor of degree p**k for each unit in the k-th p-adic digit of n.  The
census of each factor comes from a recursion on k; a brute-force closure of
explicit generators serves as an independent check.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .characters import centraliser_order
from .partitions import Partition, factorial_valuation, format_partition, p_adic_expansion

BRUTE_FORCE_CAP = 1 << 16


@dataclass(frozen=True)
class SylowShape:
    """Wreath factors of P_n: ``factors`` lists (block size p**k, multiplicity)."""

    n: int
    p: int
    factors: tuple[tuple[int, int], ...]
    fixed_points: int

    @classmethod
    def of(cls, n: int, p: int) -> SylowShape:
        terms = p_adic_expansion(n, p).terms
        factors = tuple((p**k, a) for k, a in terms if k > 0)
        fixed = n % p
        return cls(n, p, factors, fixed)


@dataclass(frozen=True)
class CycleTypeCensus:
    n: int
    p: int
    counts: dict[Partition, int] = field(hash=False)
    group_order: int

    def __getitem__(self, mu) -> int:
        return self.counts.get(Partition(mu), 0)

    def items(self):
        return sorted(self.counts.items(), key=lambda kv: [-x for x in kv[0]])

    def to_json(self) -> list[dict[str, str]]:
        return [{"type": format_partition(mu), "count": str(c)} for mu, c in self.items()]


def sylow_order(n: int, p: int) -> int:
    return p ** factorial_valuation(n, p)


def class_size(sigma) -> int:
    """Number of elements of S_n with cycle type sigma."""
    return factorial(sum(sigma)) // centraliser_order(sigma)


def _convolve(a: dict, b: dict) -> dict:
    out: dict = {}
    for mu, x in a.items():
        for nu, y in b.items():
            key = tuple(sorted(mu + nu, reverse=True))
            out[key] = out.get(key, 0) + x * y
    return out


@lru_cache(maxsize=None)
def _wreath_census(k: int, p: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Census of the iterated wreath product W_k acting on p**k points."""
    if k == 0:
        return (((1,), 1),)
    base = dict(_wreath_census(k - 1, p))
    order = sum(base.values())
    top_trivial: dict = {(): 1}
    for _ in range(p):
        top_trivial = _convolve(top_trivial, base)
    # a nontrivial top element cycles the p blocks; its cycle type is the
    # type of the product of the p base components, each cycle stretched by p
    out = dict(top_trivial)
    weight = (p - 1) * order ** (p - 1)
    for tau, c in base.items():
        key = tuple(p * x for x in tau)
        out[key] = out.get(key, 0) + weight * c
    return tuple(sorted(out.items()))


def census(n: int, p: int) -> CycleTypeCensus:
    counts: dict = {(): 1}
    for k, a in p_adic_expansion(n, p).terms:
        factor = dict(_wreath_census(k, p))
        for _ in range(a):
            counts = _convolve(counts, factor)
    return CycleTypeCensus(
        n, p, {Partition._trusted(mu): c for mu, c in counts.items()}, sylow_order(n, p)
    )


# -- brute force --------------------------------------------------------------

def sylow_generators(n: int, p: int) -> list[tuple[int, ...]]:
    """Standard generators of P_n as permutations of range(n) (image tuples)."""
    gens = []
    start = 0
    for k, a in p_adic_expansion(n, p).terms:
        for _ in range(a):
            size = p**k
            for level in range(1, k + 1):
                # top-level p-cycle of the blocks of W_level, placed in the first block
                block = p ** (level - 1)
                img = list(range(n))
                for j in range(p):
                    for x in range(block):
                        src = start + j * block + x
                        img[src] = start + ((j + 1) % p) * block + x
                gens.append(tuple(img))
            start += size
    return gens


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = bytearray(len(perm))
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition._trusted(sorted(lengths, reverse=True))


def census_brute_force(n: int, p: int, cap: int = BRUTE_FORCE_CAP) -> CycleTypeCensus:
    order = sylow_order(n, p)
    if order > cap:
        raise ValueError(f"Sylow {p}-subgroup of S_{n} has order {order} > cap {cap}")
    gens = sylow_generators(n, p)
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[x] for x in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    if len(seen) != order:
        raise AssertionError(f"generated {len(seen)} elements, expected {order}")
    counts = Counter(cycle_type(g) for g in seen)
    return CycleTypeCensus(n, p, dict(counts), order)


def perm_char_value(n: int, p: int, sigma) -> int:
    """Value of the permutation character (1_P)^{S_n} at cycle type sigma."""
    sigma = Partition(sorted(sigma, reverse=True))
    if sum(sigma) != n:
        raise ValueError("cycle type has the wrong size")
    cen = census(n, p)
    num = centraliser_order(sigma) * cen[sigma]
    q, r = divmod(num, cen.group_order)
    if r:
        raise ArithmeticError(f"non-integral permutation character value at {sigma}")
    return q
