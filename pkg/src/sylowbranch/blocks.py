"""p-blocks of S_n and A_n, heights, and height-zero characters."""

from __future__ import annotations

from dataclasses import dataclass

from .characters import p_valuation_of_degree
from .partitions import (
    Partition,
    add_hooks,
    conjugate,
    cores_of_size,
    e_core_and_weight,
    factorial_valuation,
    format_partition,
    is_e_core,
    p_adic_expansion,
    partitions_of,
)


@dataclass(frozen=True, order=True)
class BlockLabel:
    """The block B(core, w) of S_n, n = |core| + p*w."""

    p: int
    core: Partition
    w: int

    def __post_init__(self):
        object.__setattr__(self, "core", Partition(self.core))
        if self.w < 0:
            raise ValueError("weight must be nonnegative")
        if not is_e_core(self.core, self.p):
            raise ValueError(f"{format_partition(self.core)} is not a {self.p}-core")

    @property
    def n(self) -> int:
        return sum(self.core) + self.p * self.w

    def to_json(self) -> dict:
        return {"p": self.p, "core": format_partition(self.core), "w": self.w, "n": self.n}

    def __str__(self) -> str:
        return f"B({format_partition(self.core)}, {self.w}) [p={self.p}, n={self.n}]"


@dataclass(frozen=True)
class HeightRecord:
    partition: Partition
    height: int
    defect_group_valuation: int


def block_of(lam: Partition, p: int) -> BlockLabel:
    core, w = e_core_and_weight(lam, p)
    return BlockLabel(p, core, w)


def blocks_of(n: int, p: int) -> list[BlockLabel]:
    """All p-blocks of S_n, ordered by weight then core."""
    out = []
    for w in range(n // p + 1):
        for core in cores_of_size(n - p * w, p):
            out.append(BlockLabel(p, core, w))
    return out


def defect_group_valuation(block: BlockLabel) -> int:
    return factorial_valuation(block.p * block.w, block.p)


def height(lam: Partition, p: int) -> HeightRecord:
    block = block_of(lam, p)
    d = defect_group_valuation(block)
    h = p_valuation_of_degree(lam, p) + d - factorial_valuation(sum(lam), p)
    if h < 0:
        raise ArithmeticError(f"negative height for {lam} at p={p}")
    return HeightRecord(lam, h, d)


def _add_hooks_repeatedly(start: set[Partition], e: int, times: int) -> set[Partition]:
    current = set(start)
    for _ in range(times):
        current = {alpha for lam in current for alpha, _ in add_hooks(lam, e)}
    return current


def block_characters(block: BlockLabel) -> list[Partition]:
    """All partitions in the block, built by adding w p-hooks to the core."""
    return sorted(_add_hooks_repeatedly({block.core}, block.p, block.w), reverse=True)


def irr_height_zero_recursive(block: BlockLabel) -> set[Partition]:
    """Height-zero characters by peeling the top p-adic digit of p*w.

    A character is of height zero in B(core, w) exactly when removing a
    hooks of size p**k (the top digit of p*w) lands in a height-zero
    character of B(core, w - a*p**(k-1)); so we grow those back up.
    """
    p, w = block.p, block.w
    if w == 0:
        return {block.core}
    k, a = p_adic_expansion(p * w, p).terms[0]
    lower = BlockLabel(p, block.core, w - a * p ** (k - 1))
    return _add_hooks_repeatedly(irr_height_zero_recursive(lower), p**k, a)


def irr_height_zero_filtered(block: BlockLabel) -> set[Partition]:
    return {lam for lam in block_characters(block) if height(lam, block.p).height == 0}


def irr_height_zero(block: BlockLabel) -> set[Partition]:
    """Height-zero characters, computed two ways and cross-checked."""
    rec = irr_height_zero_recursive(block)
    flt = irr_height_zero_filtered(block)
    if rec != flt:
        raise AssertionError(f"height-zero sets disagree for {block}: {sorted(rec ^ flt)}")
    return rec


def height_zero_not_self_conjugate(n: int) -> bool:
    """For p = 2, check that no non-core height-zero partition of n is self-conjugate."""
    for lam in partitions_of(n):
        if is_e_core(lam, 2):
            continue
        if height(lam, 2).height == 0 and lam == conjugate(lam):
            raise AssertionError(f"{format_partition(lam)} is self-conjugate of 2-height zero")
    return True


# -- alternating groups -------------------------------------------------------

@dataclass(frozen=True)
class AnBlockLabel:
    """A p-block of A_n together with the S_n block(s) covering it.

    ``covering`` holds one block, or the two blocks B(core, w) and
    B(core', w) when the core is not self-conjugate.  ``split`` is "+" or
    "-" for the two defect-zero blocks under a self-conjugate core of
    weight zero, else None.
    """

    p: int
    covering: tuple[BlockLabel, ...]
    defect_valuation: int
    split: str | None = None

    @property
    def n(self) -> int:
        return self.covering[0].n

    @property
    def w(self) -> int:
        return self.covering[0].w

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "covering": [b.to_json() for b in self.covering],
            "defect_valuation": self.defect_valuation,
            "split": self.split,
        }

    def __str__(self) -> str:
        cov = " & ".join(f"B({format_partition(b.core)}, {b.w})" for b in self.covering)
        tag = f" {self.split}" if self.split else ""
        return f"A_{self.n} block under {cov}{tag} [p={self.p}]"


def an_blocks(n: int, p: int) -> list[AnBlockLabel]:
    out = []
    seen = set()
    for b in blocks_of(n, p):
        if b in seen:
            continue
        conj = BlockLabel(p, conjugate(b.core), b.w)
        seen.update((b, conj))
        d = defect_group_valuation(b)
        if p == 2 and b.w > 0:
            d -= 1
        if b.core == conj.core:
            if b.w == 0 and n >= 2:
                out.extend(AnBlockLabel(p, (b,), d, s) for s in "+-")
            else:
                out.append(AnBlockLabel(p, (b,), d))
        else:
            out.append(AnBlockLabel(p, tuple(sorted((b, conj), key=lambda x: x.core, reverse=True)), d))
    return out
