import cmath
from fractions import Fraction
from math import factorial

import pytest

from sylowbranch.alternating import (
    AnCharacter,
    QuadraticNumber,
    an23_search,
    an_centraliser_order,
    an_characters,
    an_classes,
    an_defect_zero,
    an_height,
    an_sbc,
    an_sylow_order,
    an_value,
    block_witness_an,
    class_is_real,
    class_splits,
    constructed_even_type,
    is_even,
    non_vanishing_sweep,
    solve_split_class,
    split_values,
)
from sylowbranch.blocks import an_blocks
from sylowbranch.characters import mn_value
from sylowbranch.partitions import Partition, conjugate, partitions_of
from sylowbranch.virtual import sbc


def to_complex(q: QuadraticNumber) -> complex:
    return float(q.a) + float(q.b) * cmath.sqrt(q.d)


# -- exact quadratic numbers --------------------------------------------------

def test_quadratic_arithmetic():
    r5 = QuadraticNumber(0, 1, 5)
    golden = (r5 + 1) / 2
    assert golden * golden == golden + 1
    assert str(golden) == "1/2 + 1/2*sqrt(5)"
    assert QuadraticNumber(3, 2, 4) == 7
    w = (QuadraticNumber(0, 1, -3) - 1) / 2
    assert w * w * w == 1
    assert w.conjugate() * w == 1 and w.abs2() == 1
    with pytest.raises(ValueError):
        r5 + QuadraticNumber(0, 1, 3)


# -- labels and classes --------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 13))
def test_an_class_and_character_counts_agree(n):
    assert len(an_characters(n)) == len(an_classes(n))


@pytest.mark.parametrize("n", range(2, 11))
def test_an_class_equation(n):
    order = factorial(n) // 2
    assert sum(Fraction(order, an_centraliser_order(mu)) for mu, _ in an_classes(n)) == order


def test_restriction_label():
    c = AnCharacter.restriction(Partition((3, 2, 1, 1, 1, 1, 1, 1)))
    assert c.partition == (8, 2, 1)
    assert c.to_json() == {"pair": ["8,2,1", "3,2,1,1,1,1,1,1"]}
    with pytest.raises(ValueError):
        AnCharacter.restriction(Partition((2, 2)))


def test_class_reality_rule():
    # a split class is real exactly when sum (h - 1)/2 over its cycle lengths is even
    for n in range(2, 21):
        for mu in partitions_of(n):
            if is_even(mu) and class_splits(mu):
                assert class_is_real(mu) == (sum((h - 1) // 2 for h in mu) % 2 == 0)


# -- split values ----------------------------------------------------------------

def test_a5_golden_values():
    sol = solve_split_class(Partition((3, 1, 1)))
    assert sol.delta == (5,)
    assert {sol.plus, sol.minus} == {(QuadraticNumber(0, 1, 5) + 1) / 2, (1 - QuadraticNumber(0, 1, 5)) / 2}


@pytest.mark.parametrize("lam", [(2, 1), (2, 2)])
def test_cube_roots_of_unity(lam):
    plus, minus = split_values(Partition(lam), (3,) + (1,) * (sum(lam) - 3), "+")
    w = (QuadraticNumber(0, 1, -3) - 1) / 2
    assert {plus, minus} == {w, w.conjugate()}


@pytest.mark.parametrize("n", range(2, 11))
def test_constituents_sum_to_restriction(n):
    for lam in partitions_of(n):
        if lam != conjugate(lam):
            continue
        for mu, tag in an_classes(n):
            plus, minus = split_values(lam, mu, tag)
            assert plus + minus == mn_value(lam, mu)


def test_split_class_needs_tag():
    with pytest.raises(ValueError):
        split_values(Partition((3, 1, 1)), (5,))
    with pytest.raises(ValueError):
        split_values(Partition((3, 1, 1)), (2, 1, 1, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_an_column_orthogonality(n):
    chars = an_characters(n)
    classes = an_classes(n)
    table = {c: [to_complex(an_value(c, mu, tag)) for mu, tag in classes] for c in chars}
    for i, (mu, _) in enumerate(classes):
        for j in range(len(classes)):
            s = sum(row[i] * row[j].conjugate() for row in table.values())
            expected = an_centraliser_order(mu) if i == j else 0
            assert abs(s - expected) < 1e-9


@pytest.mark.parametrize("n", range(2, 9))
def test_an_row_orthogonality(n):
    order = factorial(n) // 2
    classes = an_classes(n)
    sizes = [order // an_centraliser_order(mu) for mu, _ in classes]
    rows = [[to_complex(an_value(c, mu, tag)) for mu, tag in classes] for c in an_characters(n)]
    for a in range(len(rows)):
        for b in range(len(rows)):
            s = sum(k * x * y.conjugate() for k, x, y in zip(sizes, rows[a], rows[b]))
            assert abs(s - (order if a == b else 0)) < 1e-6


# -- Sylow branching in A_n ------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(2, 11))
def test_an_sbc_against_sn(n, p):
    for char in an_characters(n):
        lam = char.partition
        z = an_sbc(char, p).z
        if not char.is_split:
            assert z == sbc(lam, p).z + (sbc(conjugate(lam), p).z if p == 2 else 0)
    for lam in partitions_of(n):
        if lam == conjugate(lam):
            both = an_sbc(AnCharacter(lam, "+"), p).z + an_sbc(AnCharacter(lam, "-"), p).z
            assert both == sbc(lam, p).z * (2 if p == 2 else 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_an_trivial_multiplicity_sum(p):
    for n in range(2, 12):
        total = sum(an_sbc(c, p).z * c.degree() for c in an_characters(n))
        assert total * an_sylow_order(n, p) == factorial(n) // 2


def test_an_heights_nonnegative():
    for n in range(2, 12):
        for p in (2, 3, 5):
            for c in an_characters(n):
                h = an_height(c, p)
                assert h.height >= 0
                if p != 2:
                    assert h.established


# -- block witnesses and the small-prime search ------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5])
def test_an_witnesses(p):
    for n in range(2, 11):
        for b in an_blocks(n, p):
            w = block_witness_an(b)
            assert w.z % p
            if p == 2 and b.w > 0:
                lam = w.char.partition
                assert (sbc(lam, 2).z + sbc(conjugate(lam), 2).z) % 2 == 1


def test_defect_zero_endpoints():
    assert an_defect_zero(6, 2) == [AnCharacter(Partition((3, 2, 1)), "+"), AnCharacter(Partition((3, 2, 1)), "-")]
    assert an23_search(5, 3).kind == "defect-zero"
    assert [c.partition for c in an23_search(8, 3).chars] == [(4, 2, 1, 1)] * 2
    assert an23_search(6, 2).to_json()["labels"][0] == {"split": "3,2,1", "sign": "+"}


def test_eleven_at_three():
    res = an23_search(11, 3)
    assert res.kind == "witness" and res.chars[0].partition == (8, 2, 1)
    assert res.z == 7 and res.chars[0].degree() % 3 == 0


def test_an23_rejects_out_of_range():
    with pytest.raises(ValueError):
        an23_search(4, 2)
    with pytest.raises(ValueError):
        an23_search(10, 5)


# -- vanishing types ---------------------------------------------------------------

def test_constructed_type_gap_cases():
    assert constructed_even_type(Partition((4, 1))) == (None, 1)
    typ, r = constructed_even_type(Partition((4, 1, 1)))
    assert is_even(typ) and mn_value((4, 1, 1), typ) == 0


@pytest.mark.parametrize("group, top", [("Sn", 11), ("An", 10)])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_non_vanishing(group, top, p):
    for n in range(0 if group == "Sn" else 2, top + 1):
        assert non_vanishing_sweep(n, p, group).ok


def test_unknown_group():
    with pytest.raises(ValueError):
        non_vanishing_sweep(5, 2, "Dn")
