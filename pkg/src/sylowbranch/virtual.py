"""Sylow branching coefficients and sign-weighted hook-addition characters.

``sbc`` computes Z^lam = [chi^lam restricted to P_n, 1] as the average of
chi^lam over the Sylow census.  The virtual characters V^lam[e1, ..., eu]
are built by adding rim hooks with sign (-1)**leg; V^B is the instance whose
hook sizes are the p-adic digits of p*w for the block B(core, w).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Mapping

from .blocks import BlockLabel, irr_height_zero
from .characters import centraliser_order, degree, is_defect_zero, mn_value
from .partitions import (
    Partition,
    add_hooks,
    factorial_valuation,
    format_partition,
    p_adic_expansion,
    partitions_of,
    valuation,
)
from .sylow import census, class_size


class VerificationFailure(AssertionError):
    """A checked mathematical claim did not hold."""


@dataclass(frozen=True)
class SBCRecord:
    partition: Partition
    p: int
    z: int

    @property
    def z_valuation(self) -> int | None:
        """nu_p(z), or None when z = 0 (infinite valuation)."""
        return None if self.z == 0 else valuation(self.z, self.p)

    @property
    def coprime(self) -> bool:
        return self.z % self.p != 0


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer combination of irreducible characters chi^alpha of S_n."""

    n: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for alpha, c in self.coeffs.items():
            alpha = Partition(alpha)
            if sum(alpha) != self.n:
                raise ValueError(f"{format_partition(alpha)} is not a partition of {self.n}")
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        object.__setattr__(self, "coeffs", {a: c for a, c in clean.items() if c})

    @classmethod
    def irreducible(cls, lam: Partition) -> VirtualCharacter:
        return cls(sum(lam), {Partition(lam): 1})

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, alpha) -> int:
        return self.coeffs.get(Partition(alpha), 0)

    def terms(self) -> list[tuple[Partition, int]]:
        """(partition, coefficient) pairs, partitions in decreasing lex order."""
        return sorted(self.coeffs.items(), reverse=True)

    def support(self) -> list[Partition]:
        return [a for a, _ in self.terms()]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for alpha, c in self.terms():
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            out.append(f"{'-' if c < 0 else '+'} {mag}chi[{format_partition(alpha)}]")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"partition": format_partition(a), "coeff": str(c)} for a, c in self.terms()],
        }


# -- Sylow branching coefficients ---------------------------------------------

def sbc(lam: Partition, p: int) -> SBCRecord:
    cen = census(sum(lam), p)
    total = sum(count * mn_value(lam, mu) for mu, count in cen.counts.items())
    z, r = divmod(total, cen.group_order)
    if r or z < 0:
        raise VerificationFailure(f"Z^{lam} at p={p} is {total}/{cen.group_order}")
    return SBCRecord(Partition(lam), p, z)


def restricted_multiplicity(v: VirtualCharacter, p: int) -> int:
    """[V restricted to P_n, 1_{P_n}] = sum of coeff * Z^alpha."""
    return sum(c * sbc(alpha, p).z for alpha, c in v.coeffs.items())


# -- virtual characters -------------------------------------------------------

def virtual_hook_add(lam: Partition, e: int) -> VirtualCharacter:
    out: Counter = Counter()
    for alpha, leg in add_hooks(Partition(lam), e):
        out[alpha] += -1 if leg % 2 else 1
    return VirtualCharacter(sum(lam) + e, out)


def extend_by_hooks(v: VirtualCharacter, e: int) -> VirtualCharacter:
    out: Counter = Counter()
    for lam, c in v.coeffs.items():
        for alpha, leg in add_hooks(lam, e):
            out[alpha] += -c if leg % 2 else c
    return VirtualCharacter(v.n + e, out)


def virtual_iterate(lam: Partition, es: Iterable[int]) -> VirtualCharacter:
    v = VirtualCharacter.irreducible(Partition(lam))
    for e in es:
        v = extend_by_hooks(v, e)
    return v


def block_hook_sizes(block: BlockLabel) -> list[int]:
    """The powers p**i of the p-adic expansion of p*w, with multiplicity."""
    return p_adic_expansion(block.p * block.w, block.p).parts()


def v_block(block: BlockLabel, allow_defect_zero: bool = False) -> VirtualCharacter:
    """V^B for B = B(core, w).

    For w = 0 this degenerates to chi^core and is only returned when
    ``allow_defect_zero`` is set.
    """
    if block.w == 0 and not allow_defect_zero:
        raise ValueError(f"{block} has weight 0; pass allow_defect_zero=True for chi^core")
    return virtual_iterate(block.core, block_hook_sizes(block))


def evaluate_virtual(v: VirtualCharacter, sigma: Iterable[int]) -> int:
    sigma = tuple(sigma)
    if sum(sigma) != v.n:
        raise ValueError(f"cycle type of size {sum(sigma)} for a character of S_{v.n}")
    return sum(c * mn_value(alpha, sigma) for alpha, c in v.coeffs.items())


# -- checked properties -------------------------------------------------------

def _drop_cycle(sigma: tuple[int, ...], e: int) -> tuple[int, ...]:
    i = sigma.index(e)
    return sigma[:i] + sigma[i + 1:]


def gdc_check(lam: Partition, e: int) -> int:
    """Check V^lam[e](sigma) = k*e*chi^lam(tau) for every sigma of |lam| + e.

    Here k counts the e-cycles of sigma and tau drops one of them; the value
    is 0 when k = 0.  Returns the number of classes checked.
    """
    v = virtual_hook_add(lam, e)
    checked = 0
    for sigma in partitions_of(v.n):
        k = sigma.count(e)
        expected = k * e * mn_value(lam, _drop_cycle(sigma, e)) if k else 0
        got = evaluate_virtual(v, sigma)
        if got != expected:
            raise VerificationFailure(
                f"V^{format_partition(lam)}[{e}]({format_partition(sigma)}) = {got}, expected {expected}"
            )
        checked += 1
    return checked


@dataclass(frozen=True)
class PPrimeMultResult:
    core: Partition
    n: int
    p: int
    hook_sizes: tuple[int, ...]
    multiplicity: int
    ledger: tuple[int, int, int, int, int]

    @property
    def ok(self) -> bool:
        return self.multiplicity % self.p != 0 and sum(self.ledger) == 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "core": format_partition(self.core),
            "n": self.n,
            "hooks": list(self.hook_sizes),
            "multiplicity": str(self.multiplicity),
            "ledger": [str(x) for x in self.ledger],
            "pass": self.ok,
        }


def pprime_mult_check(core: Partition, n: int, p: int, hook_sizes: Iterable[int] | None = None) -> PPrimeMultResult:
    """Check p does not divide [V^core[hooks] restricted to P_n, 1].

    ``hook_sizes`` defaults to the p-adic digits of n - |core|; any list of
    powers p**t (t >= 1) summing to n - |core| is accepted.  The multiplicity
    is computed directly from the Z^alpha and again as z*|P_n cap sigma|/|P_n|
    with sigma of type (hooks, 1^|core|); the two must agree.  The five-term
    valuation ledger is
        nu(chi^core(1)) - nu(|core|!) + nu(|C(sigma)|) - nu(n!) + nu(|P_n cap sigma|).
    """
    core = Partition(core)
    m = n - sum(core)
    if m < 0 or m % p:
        raise ValueError(f"p={p} must divide n - |core| = {m}")
    if not is_defect_zero(core, p):
        raise ValueError(f"{format_partition(core)} is not a {p}-core")
    hooks = tuple(sorted(p_adic_expansion(m, p).parts() if hook_sizes is None else hook_sizes, reverse=True))
    if sum(hooks) != m or any(h == 1 or valuation(h, p) == 0 or h != p ** valuation(h, p) for h in hooks):
        raise ValueError(f"hook sizes {hooks} are not powers p**t (t >= 1) summing to {m}")

    v = virtual_iterate(core, hooks)
    direct = restricted_multiplicity(v, p)

    sigma = Partition(hooks + (1,) * sum(core))
    cen = census(n, p)
    z = degree(core) * centraliser_order(sigma) // factorial(sum(core))
    if evaluate_virtual(v, sigma) != z:
        raise VerificationFailure(f"V^{format_partition(core)}{list(hooks)} at {sigma} is not {z}")
    via_class, r = divmod(z * cen[sigma], cen.group_order)
    if r or via_class != direct:
        raise VerificationFailure(
            f"multiplicity {direct} disagrees with class computation {z}*{cen[sigma]}/{cen.group_order}"
        )
    if class_size(sigma) * centraliser_order(sigma) != factorial(n):
        raise VerificationFailure("orbit-stabiliser failed")
    ledger = (
        valuation(degree(core), p),
        -factorial_valuation(sum(core), p),
        valuation(centraliser_order(sigma), p),
        -factorial_valuation(n, p),
        valuation(cen[sigma], p),
    )
    return PPrimeMultResult(core, n, p, hooks, direct, ledger)


@dataclass(frozen=True)
class SnWitness:
    block: BlockLabel
    record: SBCRecord
    v_support_size: int
    from_v_support: bool
    checked: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "block": self.block.to_json(),
            "witness": format_partition(self.record.partition),
            "Z": str(self.record.z),
            "vB_support_size": self.v_support_size,
            "checked": list(self.checked),
        }


def block_witness_sn(block: BlockLabel) -> SnWitness:
    """A height-zero character of the block whose Z is prime to p.

    Looks through the support of V^B first (lexicographically smallest
    first), then the remaining height-zero characters.
    """
    p = block.p
    height_zero = irr_height_zero(block)
    if block.w == 0:
        rec = sbc(block.core, p)
        if not rec.coprime:
            raise VerificationFailure(f"defect-zero {block}: Z = {rec.z}")
        return SnWitness(block, rec, 1, True, ("defect-zero",))
    v = v_block(block)
    support = sorted(v.coeffs)
    stray = set(support) - height_zero
    if stray:
        raise VerificationFailure(f"V^B for {block} has non-height-zero terms {sorted(stray)}")
    mult = pprime_mult_check(block.core, block.n, p)
    checked = []
    if mult.multiplicity % p:
        checked.append("pprime-mult")
    if sum(mult.ledger) == 0:
        checked.append("valuation-ledger")
    for lam in support + sorted(height_zero - set(support)):
        rec = sbc(lam, p)
        if rec.coprime:
            return SnWitness(block, rec, len(support), lam in v.coeffs, tuple(checked))
    raise VerificationFailure(f"no witness in {block}")
