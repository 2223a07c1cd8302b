"""Integer partitions: hooks, rim hooks, cores, weights and p-adic digits.

Rim-hook moves are done on beta-numbers (first-column hook lengths), where
removing an e-hook is moving one bead e places down and the leg length is
the number of beads jumped over.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition((3, 1, 0)) == Partition((3, 1))``.
    Instances are plain tuples underneath: hashable, ordered lexicographically.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"

    def __str__(self) -> str:
        return format_partition(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each part to how many times it occurs."""
        m: dict[int, int] = {}
        for x in self:
            m[x] = m.get(x, 0) + 1
        return m


EMPTY = Partition()


class HookSpec(NamedTuple):
    row: int
    col: int
    length: int
    leg: int

    @property
    def arm(self) -> int:
        return self.length - self.leg - 1


class PAdicExpansion(NamedTuple):
    p: int
    terms: tuple[tuple[int, int], ...]  # (exponent, digit), exponents decreasing

    @property
    def value(self) -> int:
        return sum(a * self.p**k for k, a in self.terms)

    def parts(self) -> list[int]:
        """The powers p**k repeated digit times, largest first."""
        return [self.p**k for k, a in self.terms for _ in range(a)]


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse ``"8,2,1"``, ``"3,1^4"`` or ``"-"`` (the empty partition).

    Parts may be given in any order; they are sorted.
    """
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        part, mult = int(m.group(1)), int(m.group(2) or 1)
        if part == 0:
            raise ValueError(f"zero part in {text!r}")
        parts.extend([part] * mult)
    return Partition(sorted(parts, reverse=True))


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


# -- basic shape operations ---------------------------------------------------

def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition._trusted(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hooks(lam: Partition) -> list[HookSpec]:
    """One hook per cell, in row-major order (rows and columns are 1-based)."""
    conj = conjugate(lam)
    return [
        HookSpec(i + 1, j + 1, (row - j - 1) + (conj[j] - i - 1) + 1, conj[j] - i - 1)
        for i, row in enumerate(lam)
        for j in range(row)
    ]


def hook_lengths(lam: Partition) -> list[int]:
    return [h.length for h in hooks(lam)]


def diagonal_hooks(lam: Partition) -> Partition:
    """Lengths of the diagonal hooks h(1,1), h(2,2), ... (strictly decreasing)."""
    conj = conjugate(lam)
    return Partition._trusted(
        (lam[i] - i) + (conj[i] - i) - 1 for i in range(len(lam)) if lam[i] > i
    )


# -- beta-numbers -------------------------------------------------------------

def beta_numbers(lam: Partition, beads: int | None = None) -> list[int]:
    """First-column hook lengths, padded to ``beads`` beads; strictly decreasing."""
    n = len(lam) if beads is None else beads
    if n < len(lam):
        raise ValueError("need at least as many beads as parts")
    return [(lam[i] if i < len(lam) else 0) + n - 1 - i for i in range(n)]


def from_beta_numbers(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    parts = [b - (n - 1 - i) for i, b in enumerate(beta)]
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition._trusted(parts)


def removable_rim_hooks(lam: Partition, e: int) -> list[tuple[Partition, int]]:
    """All (mu, leg) with mu obtained from lam by removing an e-hook."""
    beta = beta_numbers(lam)
    occupied = set(beta)
    out = []
    for i, b in enumerate(beta):
        t = b - e
        if t < 0 or t in occupied:
            continue
        leg = sum(1 for c in beta[i + 1:] if c > t)
        out.append((from_beta_numbers(beta[:i] + [t] + beta[i + 1:]), leg))
    return out


def remove_hook(lam: Partition, h: HookSpec) -> tuple[Partition, int]:
    """Remove the rim hook attached to the cell of ``h``.

    Returns the smaller partition and the leg length of the removed hook.
    """
    if not (1 <= h.row <= len(lam) and 1 <= h.col <= lam[h.row - 1]):
        raise ValueError(f"{h} is not a cell of {format_partition(lam)}")
    conj = conjugate(lam)
    i, j = h.row - 1, h.col - 1
    leg = conj[j] - i - 1
    length = (lam[i] - j - 1) + leg + 1
    if length != h.length or leg != h.leg:
        raise ValueError(f"{h} is not a hook of {format_partition(lam)}")
    beta = beta_numbers(lam)
    t = beta[i] - length
    mu = from_beta_numbers(beta[:i] + [t] + beta[i + 1:])
    return mu, leg


def add_hooks(lam: Partition, e: int) -> list[tuple[Partition, int]]:
    """All (alpha, leg) with alpha obtained from lam by adding an e-hook.

    Ordered by leg length, ties broken by alpha in decreasing lexicographic order.
    """
    if e < 1:
        raise ValueError("hook size must be positive")
    beta = beta_numbers(lam, len(lam) + e)
    occupied = set(beta)
    out = []
    for i, b in enumerate(beta):
        t = b + e
        if t in occupied:
            continue
        leg = sum(1 for c in beta[:i] if c < t)
        out.append((from_beta_numbers(beta[:i] + [t] + beta[i + 1:]), leg))
    out.sort(key=lambda al: (al[1], [-x for x in al[0]]))
    return out


def e_core_and_weight(lam: Partition, e: int) -> tuple[Partition, int]:
    if e < 1:
        raise ValueError("e must be positive")
    beta = beta_numbers(lam)
    counts = [0] * e
    for b in beta:
        counts[b % e] += 1
    core_beta = [r + e * k for r in range(e) for k in range(counts[r])]
    weight = (sum(beta) - sum(core_beta)) // e
    return from_beta_numbers(core_beta), weight


def e_core(lam: Partition, e: int) -> Partition:
    return e_core_and_weight(lam, e)[0]


def e_weight(lam: Partition, e: int) -> int:
    return e_core_and_weight(lam, e)[1]


def is_e_core(lam: Partition, e: int) -> bool:
    return e_weight(lam, e) == 0


# -- numbers ------------------------------------------------------------------

def p_adic_expansion(m: int, p: int) -> PAdicExpansion:
    if m < 0:
        raise ValueError("m must be nonnegative")
    digits = []
    k = 0
    while m:
        m, a = divmod(m, p)
        if a:
            digits.append((k, a))
        k += 1
    return PAdicExpansion(p, tuple(reversed(digits)))


def valuation(m: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if m == 0:
        raise ValueError("valuation of zero is infinite")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def factorial_valuation(n: int, p: int) -> int:
    """Legendre: the exponent of p in n!."""
    v, q = 0, p
    while q <= n:
        v += n // q
        q *= p
    return v


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


# -- enumeration --------------------------------------------------------------

def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    yield from _restricted(n, n if max_part is None else max_part, None)


def p_power_partitions(n: int, p: int) -> Iterator[Partition]:
    """Partitions of n all of whose parts are powers of p (1 included)."""
    powers = [1]
    while powers[-1] * p <= n:
        powers.append(powers[-1] * p)
    yield from _restricted(n, n, tuple(reversed(powers)))


def _restricted(n: int, largest: int, allowed: tuple[int, ...] | None) -> Iterator[Partition]:
    def rec(rest: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if rest == 0:
            yield Partition._trusted(prefix)
            return
        candidates = range(min(rest, cap), 0, -1) if allowed is None else (
            a for a in allowed if a <= min(rest, cap))
        for part in candidates:
            prefix.append(part)
            yield from rec(rest - part, part, prefix)
            prefix.pop()

    if n < 0:
        return
    yield from rec(n, largest, [])


def cores_of_size(n: int, p: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if is_e_core(lam, p)]
