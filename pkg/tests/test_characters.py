import itertools
import threading
from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import partitions
from sylowbranch.characters import (
    CharacterEngine,
    big_core_forces_divisibility,
    centraliser_order,
    degree,
    is_defect_zero,
    is_p_prime_degree,
    mn_value,
    p_valuation_of_degree,
    sign,
)
from sylowbranch.partitions import Partition, is_e_core, partitions_of, valuation
from sylowbranch.sylow import cycle_type


# -- Frobenius formula oracle --------------------------------------------------

def _poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def frobenius_value(lam, mu):
    """chi^lam(mu) = [x^(lam + delta)] of a_delta * prod_i p_{mu_i} in len(lam) variables."""
    k = max(len(lam), 1)
    vand = {}
    for perm in itertools.permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        vand[tuple(k - 1 - perm[i] for i in range(k))] = (-1) ** inversions
    poly = vand
    for m in mu:
        psum = {tuple(m if i == j else 0 for i in range(k)): 1 for j in range(k)}
        poly = _poly_mul(poly, psum)
    target = tuple((lam[i] if i < len(lam) else 0) + k - 1 - i for i in range(k))
    return poly.get(target, 0)


@pytest.mark.parametrize("n", range(0, 7))
def test_mn_matches_frobenius(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert mn_value(lam, mu) == frobenius_value(lam, mu), (lam, mu)


def test_s3_table():
    table = {lam: [mn_value(lam, mu) for mu in [(1, 1, 1), (2, 1), (3,)]] for lam in partitions_of(3)}
    assert table == {(3,): [1, 1, 1], (2, 1): [2, 0, -1], (1, 1, 1): [1, -1, 1]}


# -- orthogonality and degrees -------------------------------------------------

@pytest.mark.parametrize("n", range(0, 13))
def test_degree_squares_sum_to_order(n):
    assert sum(degree(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_column_orthogonality(n):
    lams = list(partitions_of(n))
    for mu in lams:
        for nu in lams:
            s = sum(mn_value(lam, mu) * mn_value(lam, nu) for lam in lams)
            assert s == (centraliser_order(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality(n):
    lams = list(partitions_of(n))
    for a in lams:
        for b in lams:
            s = sum(
                factorial(n) // centraliser_order(mu) * mn_value(a, mu) * mn_value(b, mu) for mu in lams
            )
            assert s == (factorial(n) if a == b else 0)


@given(partitions(16))
def test_degree_is_value_at_identity(lam):
    assert degree(lam) == CharacterEngine().value(lam, (1,) * sum(lam))


@given(partitions(12), st.data())
def test_small_cache_gives_same_values(lam, data):
    mu = data.draw(st.sampled_from(list(partitions_of(sum(lam)))))
    tiny = CharacterEngine(cache_limit=3)
    assert tiny.value(lam, mu) == mn_value(lam, mu)


def test_cycle_order_is_irrelevant():
    assert mn_value((4, 2, 1), (1, 3, 2, 1)) == mn_value((4, 2, 1), (3, 2, 1, 1))


def test_size_mismatch():
    with pytest.raises(ValueError):
        mn_value((3, 1), (3,))


def test_threads_agree():
    lams = list(partitions_of(11))
    expected = [mn_value(lam, (3, 3, 2, 2, 1)) for lam in lams]
    results = {}

    def work(k):
        results[k] = [mn_value(lam, (3, 3, 2, 2, 1)) for lam in lams]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results.values())


def test_sign_tensor():
    for lam in partitions_of(7):
        conj = Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))
        for mu in partitions_of(7):
            assert mn_value(conj, mu) == sign(mu) * mn_value(lam, mu)


# -- class sizes against enumeration of S_n ---------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_centraliser_orders(n):
    counts = Counter(cycle_type(p) for p in itertools.permutations(range(n)))
    for mu, c in counts.items():
        assert c * centraliser_order(mu) == factorial(n)


# -- p-parts of degrees -------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_macdonald_matches_hook_valuation(p):
    for n in range(0, 21):
        for lam in partitions_of(n):
            assert is_p_prime_degree(lam, p) == (p_valuation_of_degree(lam, p) == 0)


@given(partitions(18), st.sampled_from([2, 3, 5]))
def test_valuation_of_degree(lam, p):
    assert p_valuation_of_degree(lam, p) == valuation(degree(lam), p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_defect_zero_is_core(p):
    for n in range(0, 15):
        top = valuation(factorial(n), p)
        for lam in partitions_of(n):
            assert is_defect_zero(lam, p) == (valuation(degree(lam), p) == top) == is_e_core(lam, p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_big_core_forces_divisibility(p):
    hits = 0
    for n in range(0, 15):
        for lam in partitions_of(n):
            hits += big_core_forces_divisibility(lam, p)
    assert hits > 0
