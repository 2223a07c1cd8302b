"""Exact character theory of symmetric and alternating groups restricted to
Sylow subgroups: partitions, hooks and cores, Murnaghan-Nakayama values,
blocks and heights, Sylow cycle-type censuses, signed hook-addition virtual
characters, and Sylow branching coefficients."""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402
    EMPTY,
    Partition,
    add_hooks,
    conjugate,
    diagonal_hooks,
    e_core,
    e_core_and_weight,
    e_weight,
    format_partition,
    hook_lengths,
    hooks,
    is_e_core,
    p_adic_expansion,
    parse_partition,
    partitions_of,
    removable_rim_hooks,
    remove_hook,
)
from .characters import (  # noqa: E402
    CharacterEngine,
    degree,
    is_defect_zero,
    is_p_prime_degree,
    mn_value,
)
from .sylow import CycleTypeCensus, census, census_brute_force, perm_char_value, sylow_order  # noqa: E402
from .blocks import (  # noqa: E402
    AnBlockLabel,
    BlockLabel,
    an_blocks,
    block_of,
    blocks_of,
    height,
    irr_height_zero,
)
from .virtual import (  # noqa: E402
    SBCRecord,
    VerificationFailure,
    VirtualCharacter,
    block_witness_sn,
    gdc_check,
    pprime_mult_check,
    sbc,
    v_block,
    virtual_hook_add,
    virtual_iterate,
)
from .alternating import (  # noqa: E402
    AnCharacter,
    an23_search,
    an_characters,
    an_sbc,
    an_value,
    block_witness_an,
    non_vanishing_sweep,
)

__all__ = [
    "AnBlockLabel",
    "AnCharacter",
    "BlockLabel",
    "CharacterEngine",
    "CycleTypeCensus",
    "EMPTY",
    "Partition",
    "SBCRecord",
    "VerificationFailure",
    "VirtualCharacter",
    "add_hooks",
    "an23_search",
    "an_blocks",
    "an_characters",
    "an_sbc",
    "an_value",
    "block_of",
    "block_witness_an",
    "block_witness_sn",
    "blocks_of",
    "census",
    "census_brute_force",
    "conjugate",
    "degree",
    "diagonal_hooks",
    "e_core",
    "e_core_and_weight",
    "e_weight",
    "format_partition",
    "gdc_check",
    "height",
    "hook_lengths",
    "hooks",
    "irr_height_zero",
    "is_defect_zero",
    "is_e_core",
    "is_p_prime_degree",
    "mn_value",
    "non_vanishing_sweep",
    "p_adic_expansion",
    "parse_partition",
    "partitions_of",
    "perm_char_value",
    "pprime_mult_check",
    "removable_rim_hooks",
    "remove_hook",
    "sbc",
    "sylow_order",
    "v_block",
    "virtual_hook_add",
    "virtual_iterate",
]
