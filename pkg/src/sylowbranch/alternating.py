"""Characters, Sylow branching and block witnesses for the alternating groups.

An irreducible character of A_n is either chi^lam restricted (lam != lam',
labelled by the larger of lam, lam') or one of the two constituents phi^+-
of chi^lam restricted when lam = lam'.  The constituents agree with
chi^lam / 2 everywhere except on the two A_n-classes of cycle type
delta(lam) (the diagonal hook lengths); there the values are obtained from
the column orthogonality relations of the A_n table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, prod
from typing import Iterable

from .blocks import AnBlockLabel, BlockLabel, block_of, defect_group_valuation, irr_height_zero
from .characters import big_core_forces_divisibility, centraliser_order, degree, is_p_prime_degree, mn_value, sign
from .partitions import (
    Partition,
    conjugate,
    cores_of_size,
    diagonal_hooks,
    e_core,
    factorial_valuation,
    format_partition,
    p_adic_expansion,
    p_power_partitions,
    partitions_of,
    valuation,
)
from .sylow import census
from .virtual import SBCRecord, VerificationFailure, sbc, block_witness_sn, v_block


# -- exact quadratic numbers --------------------------------------------------

class QuadraticNumber:
    """a + b*sqrt(d) with rational a, b and a non-square integer d.

    Arithmetic between two irrational values needs a common d; that is all
    the A_n tables require.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a, b = Fraction(a), Fraction(b)
        if b and d:
            r = isqrt(abs(d))
            if d > 0 and r * r == d:
                a, b, d = a + b * r, Fraction(0), 0
        if not b or not d:
            b, d = Fraction(0), 0
        self.a, self.b, self.d = a, b, d

    @staticmethod
    def _lift(x) -> QuadraticNumber:
        return x if isinstance(x, QuadraticNumber) else QuadraticNumber(x)

    def _radicand(self, other: QuadraticNumber) -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self.d or other.d

    def __add__(self, other):
        other = self._lift(other)
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._radicand(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        d = self._radicand(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * d, self.a * other.b + self.b * other.a, d
        )

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = Fraction(k)
        return QuadraticNumber(self.a / k, self.b / k, self.d)

    def conjugate(self) -> QuadraticNumber:
        """Complex conjugate."""
        return QuadraticNumber(self.a, -self.b, self.d) if self.d < 0 else self

    def abs2(self) -> Fraction:
        v = self * self.conjugate()
        if not v.is_rational:
            raise ArithmeticError("|z|^2 not rational")
        return v.a

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadraticNumber(other)
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"QuadraticNumber({self})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        surd = f"sqrt({self.d})"
        b = "" if self.b == 1 else "-" if self.b == -1 else f"{self.b}*"
        if not self.a:
            return f"{b}{surd}"
        sgn = "-" if self.b < 0 else "+"
        bb = "" if abs(self.b) == 1 else f"{abs(self.b)}*"
        return f"{self.a} {sgn} {bb}{surd}"


# -- labels -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AnCharacter:
    """An irreducible character of A_n.

    ``partition`` is the lexicographically larger of lam, lam' for a
    restriction (``sign`` None), or the self-conjugate lam for a constituent
    (``sign`` "+" or "-").
    """

    partition: Partition
    sign: str | None = None

    @classmethod
    def restriction(cls, lam: Partition) -> AnCharacter:
        lam = Partition(lam)
        conj = conjugate(lam)
        if lam == conj and sum(lam) >= 2:
            raise ValueError(f"{format_partition(lam)} is self-conjugate; pick a sign")
        return cls(max(lam, conj))

    @property
    def n(self) -> int:
        return sum(self.partition)

    @property
    def is_split(self) -> bool:
        return self.sign is not None

    @property
    def pair(self) -> tuple[Partition, Partition]:
        return self.partition, conjugate(self.partition)

    def degree(self) -> int:
        d = degree(self.partition)
        return d // 2 if self.is_split else d

    def to_json(self) -> dict:
        if self.is_split:
            return {"split": format_partition(self.partition), "sign": self.sign}
        return {"pair": [format_partition(x) for x in self.pair]}

    def __str__(self):
        if self.is_split:
            return f"phi{self.sign}[{format_partition(self.partition)}]"
        return f"chi[{format_partition(self.partition)}]|A"


def an_characters(n: int) -> list[AnCharacter]:
    out = []
    for lam in partitions_of(n):
        conj = conjugate(lam)
        if lam == conj and n >= 2:
            out.extend(AnCharacter(lam, s) for s in "+-")
        elif lam >= conj:
            out.append(AnCharacter(lam))
    return out


def is_even(sigma: Iterable[int]) -> bool:
    return sign(sigma) == 1


def class_splits(sigma: Iterable[int]) -> bool:
    """Whether the S_n-class of an even cycle type breaks into two A_n-classes."""
    sigma = tuple(sigma)
    return sum(sigma) >= 2 and all(x % 2 for x in sigma) and len(set(sigma)) == len(sigma)


def an_classes(n: int, types: Iterable[Partition] | None = None) -> list[tuple[Partition, str | None]]:
    """A_n-classes as (cycle type, tag); split classes get tags "+" and "-"."""
    out = []
    for sigma in partitions_of(n) if types is None else types:
        if not is_even(sigma):
            continue
        if class_splits(sigma):
            out.extend((Partition(sigma), t) for t in "+-")
        else:
            out.append((Partition(sigma), None))
    return out


def an_centraliser_order(sigma: Iterable[int]) -> int:
    c = centraliser_order(sigma)
    return c if class_splits(sigma) or sum(sigma) < 2 else c // 2


# -- values -------------------------------------------------------------------

def _perm_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def class_is_real(sigma: Iterable[int]) -> bool:
    """Whether an element of this split type is A_n-conjugate to its inverse.

    Builds the element and the conjugator that reverses each cycle; since the
    centraliser lies in A_n, the parity of that conjugator decides.
    """
    sigma = tuple(sigma)
    conj = []
    start = 0
    for length in sigma:
        conj.extend(start + (-i) % length for i in range(length))
        start += length
    return _perm_sign(conj) == 1


@dataclass(frozen=True)
class SplitSolution:
    partition: Partition
    delta: Partition
    plus: QuadraticNumber
    minus: QuadraticNumber
    others_norm: Fraction
    centraliser: int


def solve_split_class(lam: Partition) -> SplitSolution:
    """Values of phi^+ and phi^- on the class delta+ (delta = diagonal hooks).

    Unknowns x = phi^+(delta+), y = phi^+(delta-); then phi^- swaps them.
    Every other character of A_n has the same value on delta+ and delta-,
    known exactly; call the sum of their squared moduli S.  The column norm
    gives |x|^2 + |y|^2 = C - S and orthogonality of the delta+ and delta-
    columns gives 2 Re(x conj y) = -S, so |x + y|^2 = C - 2S (checked against
    chi^lam(delta)^2) and |x - y|^2 = C.  Since phi^+ and phi^- are Galois
    conjugate, (x - y)^2 is rational: C if the class is real, -C otherwise.
    """
    lam = Partition(lam)
    if lam != conjugate(lam) or sum(lam) < 2:
        raise ValueError(f"{format_partition(lam)} does not split in A_n")
    delta = diagonal_hooks(lam)
    n = sum(lam)
    c = prod(delta)
    s = mn_value(lam, delta)
    others2 = 0  # 2 * S, kept integral
    for mu in partitions_of(n):
        if mu == lam:
            continue
        v = mn_value(mu, delta)
        conj = conjugate(mu)
        if mu == conj:
            others2 += v * v  # two constituents, each v/2
        elif mu > conj:
            others2 += 2 * v * v
    if s * s != c - others2:
        raise VerificationFailure(f"orthogonality inconsistent at {format_partition(delta)} for {lam}")
    radicand = c if class_is_real(delta) else -c
    root = QuadraticNumber(0, 1, radicand)
    plus = (root + s) / 2
    minus = (s - root) / 2
    return SplitSolution(lam, delta, plus, minus, Fraction(others2, 2), c)


_split_cache: dict[Partition, SplitSolution] = {}


def _split(lam: Partition) -> SplitSolution:
    sol = _split_cache.get(lam)
    if sol is None:
        sol = _split_cache[lam] = solve_split_class(lam)
    return sol


def split_values(lam: Partition, sigma: Iterable[int], tag: str | None = None) -> tuple[QuadraticNumber, QuadraticNumber]:
    """(phi^+(g), phi^-(g)) for g of cycle type sigma (class ``tag`` if split)."""
    lam = Partition(lam)
    sigma = Partition(sorted(sigma, reverse=True))
    if not is_even(sigma):
        raise ValueError(f"{format_partition(sigma)} is an odd cycle type")
    if sigma == diagonal_hooks(lam):
        sol = _split(lam)
        if tag == "-":
            return sol.minus, sol.plus
        if tag == "+":
            return sol.plus, sol.minus
        raise ValueError("a split class needs a tag '+' or '-'")
    half = QuadraticNumber(Fraction(mn_value(lam, sigma), 2))
    return half, half


def an_value(char: AnCharacter, sigma: Iterable[int], tag: str | None = None) -> QuadraticNumber:
    if not char.is_split:
        return QuadraticNumber(mn_value(char.partition, sigma))
    plus, minus = split_values(char.partition, sigma, tag)
    return plus if char.sign == "+" else minus


# -- Sylow branching in A_n ----------------------------------------------------

def an_sylow_order(n: int, p: int) -> int:
    order = census(n, p).group_order
    return order // 2 if p == 2 and n >= 2 else order


def an_sbc(char: AnCharacter, p: int) -> SBCRecord:
    """[phi restricted to R, 1_R] for R a Sylow p-subgroup of A_n.

    R is P_n when p is odd and the even half of P_n when p = 2.  Elements of
    P_n of a split type fall evenly into the two A_n-classes (an odd
    permutation normalising P_n swaps them), so they are averaged.
    """
    n = char.n
    cen = census(n, p)
    total = QuadraticNumber(0)
    for mu, count in cen.counts.items():
        if not is_even(mu):
            if p != 2:
                raise VerificationFailure(f"odd type {mu} in a Sylow {p}-subgroup")
            continue
        if class_splits(mu) and char.is_split:
            v = (an_value(char, mu, "+") + an_value(char, mu, "-")) / 2
        else:
            v = an_value(char, mu, "+" if class_splits(mu) else None)
        total = total + v * count
    order = an_sylow_order(n, p)
    z = total / order
    if not z.is_rational or z.a.denominator != 1 or z.a < 0:
        raise VerificationFailure(f"[{char}_R, 1_R] = {z} at p={p}")
    return SBCRecord(char.partition, p, int(z.a))


# -- blocks and heights -------------------------------------------------------

def an_block_of(char: AnCharacter, p: int, blocks: list[AnBlockLabel]) -> AnBlockLabel:
    b = block_of(char.partition, p)
    for blk in blocks:
        if b in blk.covering and (blk.split is None or blk.split == char.sign):
            return blk
    raise LookupError(f"no A_n block for {char}")


@dataclass(frozen=True)
class AnHeight:
    char: AnCharacter
    height: int
    established: bool  # False for split characters in positive-weight 2-blocks (formula only)


def an_height(char: AnCharacter, p: int) -> AnHeight:
    n = char.n
    b = block_of(char.partition, p)
    d = defect_group_valuation(b)
    order_val = factorial_valuation(n, p)
    if p == 2:
        if b.w > 0:
            d -= 1
        if n >= 2:
            order_val -= 1
    h = valuation(char.degree(), p) + d - order_val
    if h < 0:
        raise VerificationFailure(f"negative height for {char} at p={p}")
    return AnHeight(char, h, not (p == 2 and char.is_split and b.w > 0))


# -- block witnesses in A_n ---------------------------------------------------

@dataclass(frozen=True)
class AnWitness:
    block: AnBlockLabel
    char: AnCharacter
    z: int
    v_support_size: int
    checked: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "group": "An",
            "block": self.block.to_json(),
            "witness": format_partition(self.char.partition),
            "label": self.char.to_json(),
            "Z": str(self.z),
            "vB_support_size": self.v_support_size,
            "checked": list(self.checked),
        }


def block_witness_an(block: AnBlockLabel) -> AnWitness:
    p, n = block.p, block.n
    base = block.covering[0]
    if p == 2 and base.w > 0:
        v = v_block(base)
        h0 = irr_height_zero(base)
        for lam in sorted(v.coeffs):
            if lam not in h0:
                raise VerificationFailure(f"{lam} in V^B but not of height zero")
            conj = conjugate(lam)
            if lam == conj:
                raise VerificationFailure(f"self-conjugate {lam} of height zero in {base}")
            pair_sum = sbc(lam, 2).z + sbc(conj, 2).z
            if pair_sum % 2:
                char = AnCharacter.restriction(lam)
                rec = an_sbc(char, 2)
                if rec.z != pair_sum:
                    raise VerificationFailure(f"A_n branching {rec.z} != Z^lam + Z^lam' = {pair_sum}")
                _check_an_height_zero(char, p)
                return AnWitness(block, char, rec.z, len(v), ("pair-sum-odd", "height-zero"))
        raise VerificationFailure(f"no witness in {block}")

    if base.w == 0 and block.split is not None:
        char = AnCharacter(base.core, block.split)
        rec = an_sbc(char, p)
        if not rec.coprime:
            raise VerificationFailure(f"defect-zero {char}: [phi_R, 1_R] = {rec.z}")
        _check_an_height_zero(char, p)
        return AnWitness(block, char, rec.z, 1, ("defect-zero", "height-zero"))

    sn = block_witness_sn(base)
    lam = sn.record.partition
    if lam == conjugate(lam) and n >= 2:
        char = AnCharacter(lam, "+")
        rec = an_sbc(char, p)
        if 2 * rec.z != sn.record.z:
            raise VerificationFailure(f"{char}: {rec.z} is not half of Z = {sn.record.z}")
    else:
        char = AnCharacter.restriction(lam) if n >= 2 else AnCharacter(lam)
        rec = an_sbc(char, p)
        if rec.z != sn.record.z:
            raise VerificationFailure(f"{char}: {rec.z} != Z = {sn.record.z}")
    if not rec.coprime:
        raise VerificationFailure(f"{char}: [phi_R, 1_R] = {rec.z} divisible by {p}")
    _check_an_height_zero(char, p)
    return AnWitness(block, char, rec.z, sn.v_support_size, ("sn-witness", "height-zero"))


def _check_an_height_zero(char: AnCharacter, p: int) -> None:
    h = an_height(char, p)
    if h.height != 0:
        raise VerificationFailure(f"{char} has height {h.height} at p={p}")


# -- non-vanishing on Sylow subgroups ----------------------------------------

def p_adic_type(n: int, p: int) -> Partition:
    return Partition(p_adic_expansion(n, p).parts())


def constructed_even_type(lam: Partition) -> tuple[Partition | None, int | None]:
    """An even 2-element type on which chi^lam vanishes, for 2 | chi^lam(1).

    With n = 2^n1 + ... + 2^nt and r the first s at which
    |C_{2^ns}(lam)| > n - (2^n1 + ... + 2^ns):
      * the 2-adic element itself when it is even;
      * otherwise, if r = 1, split the 2^n2-cycle into two halves;
      * otherwise split the 2^n1-cycle into two halves.
    Returns (None, r) when r = 1 and there is no 2^n2 >= 2 to split.
    """
    n = sum(lam)
    ex = [2**k for k, _ in p_adic_expansion(n, 2).terms]
    r = None
    for s in range(1, len(ex) + 1):
        if sum(e_core(lam, ex[s - 1])) > n - sum(ex[:s]):
            r = s
            break
    if r is None:
        raise ValueError(f"chi^{format_partition(lam)} has odd degree")
    if is_even(ex):
        return Partition(ex), r
    if r == 1:
        if len(ex) < 2 or ex[1] == 1:
            return None, r
        return Partition(sorted([ex[0], ex[1] // 2, ex[1] // 2] + ex[2:], reverse=True)), r
    return Partition(sorted([ex[0] // 2, ex[0] // 2] + ex[1:], reverse=True)), r


@dataclass
class NonVanishingResult:
    group: str
    n: int
    p: int
    characters: int = 0
    constructed: int = 0
    searched: int = 0
    failures: list[str] | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "n": self.n,
            "p": self.p,
            "characters": self.characters,
            "constructed_types": self.constructed,
            "searched_types": self.searched,
            "failures": list(self.failures or []),
            "pass": self.ok,
        }


def non_vanishing_sweep(n: int, p: int, group: str = "Sn") -> NonVanishingResult:
    """Check: degree prime to p  <=>  no zero on the Sylow p-subgroup.

    Also checks the explicit vanishing elements: the p-adic element for S_n
    (and A_n, p odd) and the constructed even type for A_n, p = 2.
    """
    res = NonVanishingResult(group, n, p, failures=[])
    types = list(p_power_partitions(n, p))
    padic = p_adic_type(n, p) if n else Partition()
    if group == "Sn":
        for lam in partitions_of(n):
            res.characters += 1
            coprime = valuation(degree(lam), p) == 0
            if coprime != is_p_prime_degree(lam, p):
                res.failures.append(f"{lam}: Macdonald test disagrees with the degree")
            vanishes = any(mn_value(lam, mu) == 0 for mu in types)
            if coprime == vanishes:
                res.failures.append(f"chi^{format_partition(lam)}: coprime={coprime}, vanishes={vanishes}")
            if not coprime and mn_value(lam, padic) != 0:
                res.failures.append(f"chi^{format_partition(lam)} nonzero on the {p}-adic type")
        return res
    if group != "An":
        raise ValueError(f"unknown group {group!r}")
    classes = an_classes(n, types)
    for char in an_characters(n):
        res.characters += 1
        coprime = valuation(char.degree(), p) == 0
        vanishes = any(not an_value(char, mu, tag) for mu, tag in classes)
        if coprime == vanishes:
            res.failures.append(f"{char}: coprime={coprime}, vanishes={vanishes}")
        if coprime or n < p:
            continue
        lam = char.partition
        if p != 2:
            tags = "+-" if class_splits(padic) else [None]
            if any(an_value(char, padic, t) for t in tags):
                res.failures.append(f"{char} nonzero on the {p}-adic type")
            continue
        typ, _ = constructed_even_type(lam)
        if typ is None:
            res.searched += 1
            if not any(not an_value(char, mu, tag) for mu, tag in classes):
                res.failures.append(f"{char}: no even vanishing type")
            continue
        res.constructed += 1
        if not is_even(typ) or mn_value(lam, typ) != 0:
            res.failures.append(f"{char}: constructed type {format_partition(typ)} fails")
    return res


# -- A_n at p in {2, 3} -------------------------------------------------------

_CORES_P2 = {1: Partition((2, 1)), 0: Partition((3, 2, 1))}
_CORES_P3 = {0: Partition((4, 2)), 1: Partition((3, 1)), 2: Partition((6, 4, 2, 1, 1))}


@dataclass(frozen=True)
class An23Result:
    n: int
    p: int
    kind: str  # "defect-zero" or "witness"
    chars: tuple[AnCharacter, ...]
    z: int | None = None
    core: Partition | None = None
    vanishing_type: Partition | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "p": self.p,
            "kind": self.kind,
            "labels": [c.to_json() for c in self.chars],
            "degrees": [str(c.degree()) for c in self.chars],
        }
        if self.kind == "witness":
            out["witness"] = format_partition(self.chars[0].partition)
            out["Z"] = str(self.z)
            out["core"] = format_partition(self.core) if self.core is not None else None
            out["vanishing_type"] = format_partition(self.vanishing_type)
        return out


def an_defect_zero(n: int, p: int) -> list[AnCharacter]:
    top = factorial_valuation(n, p) - (1 if p == 2 and n >= 2 else 0)
    out = []
    for core in cores_of_size(n, p):
        chars = [AnCharacter(core, s) for s in "+-"] if core == conjugate(core) and n >= 2 else [
            AnCharacter.restriction(core)]
        out.extend(c for c in chars if valuation(c.degree(), p) == top and c not in out)
    return sorted(out)


def _theta(lam: Partition, p: int, core: Partition | None) -> An23Result:
    n = sum(lam)
    if lam == conjugate(lam):
        raise VerificationFailure(f"{lam} is self-conjugate")
    char = AnCharacter.restriction(lam)
    if core is not None and not big_core_forces_divisibility(lam, p):
        raise VerificationFailure(f"|C_{p}({lam})| < {p}")
    if char.degree() % p:
        raise VerificationFailure(f"{char} has degree prime to {p}")
    rec = an_sbc(char, p)
    expected = sbc(lam, p).z + (sbc(conjugate(lam), p).z if p == 2 else 0)
    if rec.z != expected:
        raise VerificationFailure(f"{char}: A_n branching {rec.z} != {expected}")
    if not rec.coprime:
        raise VerificationFailure(f"{char}: [theta_R, 1_R] = {rec.z}")
    zero = next(
        (mu for mu, tag in an_classes(n, p_power_partitions(n, p)) if not an_value(char, mu, tag)), None
    )
    if zero is None:
        raise VerificationFailure(f"{char} does not vanish on a Sylow {p}-subgroup")
    return An23Result(n, p, "witness", (char,), rec.z, core, zero)


def an23_search(n: int, p: int) -> An23Result:
    """A p-defect-zero character of A_n, or a non-split theta of degree divisible
    by p with [theta_R, 1_R] prime to p, following the fixed choice of cores."""
    if p not in (2, 3) or n < 5:
        raise ValueError("defined for p in {2, 3} and n >= 5")
    if p == 2:
        if n == 6:
            chars = tuple(AnCharacter(Partition((3, 2, 1)), s) for s in "+-")
            if any(c not in an_defect_zero(6, 2) for c in chars):
                raise VerificationFailure("constituents of chi^(3,2,1) are not 2-defect zero")
            return An23Result(n, p, "defect-zero", chars)
        core = _CORES_P2[n % 2]
        block = BlockLabel(2, core, (n - sum(core)) // 2)
        v = v_block(block)
        h0 = irr_height_zero(block)
        for lam in sorted(v.coeffs):
            if lam not in h0:
                raise VerificationFailure(f"{lam} in V^B but not of height zero")
            if (sbc(lam, 2).z + sbc(conjugate(lam), 2).z) % 2:
                return _theta(lam, p, core)
        raise VerificationFailure(f"no odd pair sum in {block}")
    if n in (5, 8):
        chars = tuple(an_defect_zero(n, 3))
        if not chars:
            raise VerificationFailure(f"A_{n} has no 3-defect-zero character")
        return An23Result(n, p, "defect-zero", chars)
    if n == 11:
        return _theta(Partition((8, 2, 1)), p, None)
    core = _CORES_P3[n % 3]
    block = BlockLabel(3, core, (n - sum(core)) // 3)
    return _theta(block_witness_sn(block).record.partition, p, core)
