from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from sylowbranch.blocks import BlockLabel, blocks_of, irr_height_zero
from sylowbranch.characters import degree, mn_value
from sylowbranch.partitions import EMPTY, Partition, cores_of_size, parse_partition, partitions_of
from sylowbranch.sylow import census_brute_force, cycle_type, sylow_generators, sylow_order
from sylowbranch.virtual import (
    VerificationFailure,
    VirtualCharacter,
    block_hook_sizes,
    block_witness_sn,
    evaluate_virtual,
    gdc_check,
    pprime_mult_check,
    restricted_multiplicity,
    sbc,
    v_block,
    virtual_hook_add,
    virtual_iterate,
)


def V(spec: dict) -> dict:
    return {parse_partition(k): c for k, c in spec.items()}


ONE_HOOK = V({"6,1": 1, "3,2,2": -1, "3,1^4": 1})
TWO_HOOKS = V({
    "9,1": 1, "6,4": 1, "6,2,2": -2, "6,1^4": 2, "4,4,2": 1,
    "3,2^3,1": 2, "3,2,2,1^3": -1, "3,3,2,1,1": -1, "3,1^7": 1,
})


def test_single_hook_example():
    assert virtual_hook_add(Partition((3, 1)), 3).coeffs == ONE_HOOK


def test_two_hook_example():
    v = virtual_iterate(Partition((3, 1)), [3, 3])
    assert v.n == 10 and len(v) == 9
    assert v.coeffs == TWO_HOOKS


def test_rendering():
    v = virtual_hook_add(Partition((3, 1)), 3)
    assert str(v) == "chi[6,1] - chi[3,2,2] + chi[3,1,1,1,1]"
    assert v.to_json()["terms"][1] == {"partition": "3,2,2", "coeff": "-1"}
    assert str(VirtualCharacter(3, {})) == "0"
    assert str(VirtualCharacter(2, {(1, 1): -2, (2,): -1})) == "-chi[2] - 2*chi[1,1]"


def test_consolidation():
    v = VirtualCharacter(3, {(3,): 1, (2, 1): 0})
    assert v.support() == [(3,)]
    with pytest.raises(ValueError):
        VirtualCharacter(3, {(2,): 1})


@given(partitions(5), st.lists(st.integers(1, 3), max_size=3), st.randoms())
def test_hook_order_does_not_matter(lam, es, rnd):
    shuffled = list(es)
    rnd.shuffle(shuffled)
    assert virtual_iterate(lam, es) == virtual_iterate(lam, shuffled)


@pytest.mark.parametrize("lam, e", [((), 3), ((2, 1), 2), ((3, 1), 3), ((2, 2, 1), 4), ((1,), 1)])
def test_hook_addition_values(lam, e):
    assert gdc_check(Partition(lam), e) == sum(1 for _ in partitions_of(sum(lam) + e))


def test_evaluate_rejects_wrong_size():
    with pytest.raises(ValueError):
        evaluate_virtual(virtual_hook_add(Partition((1,)), 2), (2, 1, 1))


# -- Sylow branching coefficients ------------------------------------------------

def z_by_elements(lam, p):
    """Average of chi^lam over the elements of an explicitly generated Sylow subgroup."""
    n = sum(lam)
    gens = sylow_generators(n, p)
    identity = tuple(range(n))
    seen, frontier = {identity}, [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[x] for x in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return Fraction(sum(mn_value(lam, cycle_type(g)) for g in seen), len(seen))


def test_dihedral_example():
    assert sbc(Partition((2, 2)), 2).z == 1 == z_by_elements((2, 2), 2)


@pytest.mark.parametrize("n, p", [(4, 2), (6, 2), (6, 3), (7, 3), (8, 2), (5, 5)])
def test_sbc_against_group_elements(n, p):
    for lam in partitions_of(n):
        assert sbc(lam, p).z == z_by_elements(lam, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_trivial_multiplicity_sum(p):
    # sum_lam Z^lam * chi^lam(1) = [1_P induced to S_n](1) = n! / |P|
    for n in range(0, 13):
        assert sum(sbc(lam, p).z * degree(lam) for lam in partitions_of(n)) == factorial(n) // sylow_order(n, p)


def test_sbc_examples():
    assert sbc(Partition((8, 2, 1)), 3).z == 7
    assert sbc(EMPTY, 2).z == 1
    rec = sbc(Partition((3, 1)), 2)
    assert rec.z == 0 and rec.z_valuation is None and not rec.coprime


def test_defect_zero_multiplicity():
    for p in (2, 3, 5):
        for n in range(0, 15):
            for core in cores_of_size(n, p):
                assert sbc(core, p).z * sylow_order(n, p) == degree(core)


def test_restricted_multiplicity_linear():
    v = virtual_iterate(Partition((1,)), [3, 3])
    assert restricted_multiplicity(v, 3) == sum(c * sbc(a, 3).z for a, c in v.coeffs.items())


# -- V^B and the witness search --------------------------------------------------

def test_block_hook_sizes():
    assert block_hook_sizes(BlockLabel(3, Partition((2,)), 3)) == [9]
    assert block_hook_sizes(BlockLabel(2, EMPTY, 3)) == [4, 2]


def test_v_block_of_weight_zero():
    b = BlockLabel(3, Partition((4, 2)), 0)
    with pytest.raises(ValueError):
        v_block(b)
    assert v_block(b, allow_defect_zero=True).support() == [(4, 2)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_v_block_support_is_height_zero(p):
    for n in range(1, 16):
        for b in blocks_of(n, p):
            if b.w:
                assert set(v_block(b).coeffs) <= irr_height_zero(b)


def test_pprime_mult_example():
    res = pprime_mult_check(Partition((1,)), 10, 3)
    assert res.hook_sizes == (9,) and res.ok
    assert sum(res.ledger) == 0
    assert res.to_json()["pass"] is True


def test_pprime_mult_rejects_bad_input():
    with pytest.raises(ValueError):
        pprime_mult_check(Partition((2, 1)), 5, 3)  # (2,1) is not a 3-core
    with pytest.raises(ValueError):
        pprime_mult_check(Partition((1,)), 5, 3)
    with pytest.raises(ValueError):
        pprime_mult_check(EMPTY, 6, 3, hook_sizes=[3, 2, 1])


def test_pprime_mult_other_hook_lists_stay_consistent():
    # [2, 2] instead of the 2-adic [4]: the two multiplicity computations still agree
    res = pprime_mult_check(Partition((2, 1)), 7, 2, hook_sizes=[2, 2])
    assert res.hook_sizes == (2, 2)


def test_witness_for_weight_zero():
    w = block_witness_sn(BlockLabel(3, Partition((4, 2)), 0))
    assert w.checked == ("defect-zero",) and w.record.z == 1


def test_witness_json():
    w = block_witness_sn(BlockLabel(3, EMPTY, 2))
    data = w.to_json()
    assert data["witness"] == "1,1,1,1,1,1" and data["Z"] == "1"
    assert data["checked"] == ["pprime-mult", "valuation-ledger"]
    assert w.from_v_support


def test_verification_failure_is_assertion():
    assert issubclass(VerificationFailure, AssertionError)


def test_brute_force_agrees_on_small_case():
    assert census_brute_force(6, 3).counts[(3, 3)] == 4
