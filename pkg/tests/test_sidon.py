from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from sonarseq.errors import AlphaInBaseField, NotPrime, NotPrimitive
from sonarseq.ff import field_new
from sonarseq.sidon import (
    SidonSet,
    bose,
    coverage_check,
    max_sidon_bound,
    residues,
    ruzsa,
    verify_sidon,
)


def test_verify_sidon_golden():
    assert verify_sidon(SidonSet((2, 4, 5, 27, 31, 36), 42)).ok
    report = verify_sidon(SidonSet((0, 1, 2), 6))
    assert not report.ok
    # 0 + 2 = 1 + 1
    assert report.witness == (0, 2, 1, 1)
    assert verify_sidon(SidonSet((), 10)).ok


def test_max_sidon_bound_values():
    assert max_sidon_bound(80) == 9
    assert max_sidon_bound(1) == 1
    assert max_sidon_bound(42) == 6
    # huge input stays exact (no float square root)
    n = 10**30
    k = max_sidon_bound(n)
    assert k * (k - 1) <= n - 1 < (k + 1) * k + n  # loose sanity on magnitude


def test_sidon_set_validation():
    with pytest.raises(ValueError):
        SidonSet((0, 1, 1), 5)  # duplicate element
    with pytest.raises(ValueError):
        SidonSet((0, 7), 5)  # out of range
    with pytest.raises(ValueError):
        SidonSet((0,), 0)  # modulus must be positive


def test_sidon_set_json_round_trip():
    s = SidonSet((2, 4, 5, 27, 31, 36), 42, provenance={"construction": "ruzsa", "p": 7})
    data = s.to_json()
    assert data["modulus"] == 42
    assert data["elements"] == [2, 4, 5, 27, 31, 36]
    assert SidonSet.from_json(data) == s


# --- Bose construction ---


def test_bose_golden_q9():
    s = bose(9, theta=6, alpha=6)
    assert s.elements == (1, 4, 37, 38, 49, 53, 55, 62, 76)
    assert s.modulus == 80
    assert verify_sidon(s).ok


def test_bose_q3_canonical():
    s = bose(3)
    assert s.modulus == 8
    assert len(s) == 3
    assert verify_sidon(s).ok


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_bose_properties_all_parameters(q):
    """Residue facts mod q+1 for every valid (theta, alpha) pair, not just defaults."""
    from sonarseq.ff import subfield_image
    from sonarseq.numth import prime_power_decompose

    p, r = prime_power_decompose(q)
    ctx = field_new(p, 2 * r)
    base = set(subfield_image(ctx, q))
    thetas = [t for t in ctx.primitive_elements() if t not in base][:4]
    alphas = [a for a in range(ctx.q) if a not in base][:4]
    for theta in thetas:
        for alpha in alphas:
            s = bose(q, theta=theta, alpha=alpha, ctx=ctx)
            assert len(s) == q
            assert verify_sidon(s).ok
            res = residues(s, q + 1)
            assert 0 not in res  # no element divisible by q+1
            assert len(set(res)) == q  # residues pairwise distinct
            assert sorted(res) == list(range(1, q + 1))  # residues are exactly [1, q]
            assert coverage_check(s, q + 1, q)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_bose_bound_saturation(q):
    s = bose(q)
    assert len(s) == max_sidon_bound(q * q - 1)


def test_bose_rejects_bad_elements():
    ctx = field_new(3, 2)  # GF(9), base field GF(3) = {0, 1, 2}
    with pytest.raises(AlphaInBaseField):
        bose(3, alpha=1, ctx=ctx)
    nonprimitive = next(x for x in range(2, 9) if not ctx.is_primitive(x))
    with pytest.raises(NotPrimitive):
        bose(3, theta=nonprimitive, ctx=ctx)


def test_bose_provenance():
    s = bose(9, theta=6, alpha=6)
    assert s.provenance["construction"] == "bose"
    assert s.provenance["q"] == 9
    assert s.provenance["theta"] == 6
    assert s.provenance["alpha"] == 6


# --- Ruzsa construction ---


def test_ruzsa_golden_p7():
    s = ruzsa(7, theta=3)
    assert s.elements == (2, 4, 5, 27, 31, 36)
    assert s.modulus == 42
    assert verify_sidon(s).ok


def test_ruzsa_golden_p13():
    s = ruzsa(13, theta=2)
    assert s.elements == (10, 16, 57, 59, 90, 99, 115, 134, 144, 145, 149, 152)
    assert s.modulus == 156


def test_ruzsa_p3_by_hand():
    # i=1: 3 - 2*2 = -1 = 5, i=2: 6 - 4*2 = -2 = 4 (mod 6)
    s = ruzsa(3, theta=2)
    assert s.elements == (4, 5)


def test_ruzsa_rejects_bad_input():
    with pytest.raises(NotPrime):
        ruzsa(9)
    with pytest.raises(NotPrime):
        ruzsa(2)
    with pytest.raises(NotPrimitive):
        ruzsa(7, theta=2)  # 2 has order 3 mod 7


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_ruzsa_properties_all_roots(p):
    """Residue facts mod p and mod p-1 for every primitive root, not just the default."""
    roots = [t for t in range(2, p) if field_new(p, 1).is_primitive(t)]
    for theta in roots:
        s = ruzsa(p, theta=theta)
        assert len(s) == p - 1
        assert verify_sidon(s).ok
        assert sorted(residues(s, p)) == list(range(1, p))  # residues mod p are [1, p-1]
        # each class of [1, p-1] mod p-1 exactly once, 0 read as p-1
        labels = sorted(p - 1 if x == 0 else x for x in residues(s, p - 1))
        assert labels == list(range(1, p))
        assert coverage_check(s, p, p - 1)
        assert coverage_check(s, p - 1, p - 1)


def test_residues_and_coverage_examples():
    assert sorted(residues(bose(9, theta=6, alpha=6), 10)) == list(range(1, 10))
    assert sorted(residues(ruzsa(7, theta=3), 7)) == [1, 2, 3, 4, 5, 6]
    r13 = residues(ruzsa(13, theta=2), 12)
    assert 0 in r13  # 144 = 12 * 12
    assert coverage_check(ruzsa(13, theta=2), 12, 12)


def test_coverage_check_rejects_gaps():
    s = SidonSet((0, 1, 3), 7)
    assert not coverage_check(s, 5, 3)  # residues {0,1,3} are not a [1,3] run
    assert coverage_check(SidonSet((1, 2, 3), 7), 5, 3)


# --- oracle agreement ---


@given(
    st.integers(min_value=1, max_value=200).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.integers(min_value=0, max_value=n - 1), unique=True, max_size=20),
        )
    )
)
def test_verify_sidon_matches_difference_oracle(case):
    n, elems = case
    s = SidonSet(tuple(elems), n)
    assert verify_sidon(s).ok == oracles.naive_sidon_differences(elems, n)


@given(
    st.integers(min_value=1, max_value=60).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.integers(min_value=0, max_value=n - 1), unique=True, max_size=12),
        )
    )
)
def test_sums_and_differences_definitions_agree(case):
    n, elems = case
    assert oracles.naive_sidon_sums(elems, n) == oracles.naive_sidon_differences(elems, n)


def test_verify_sidon_exhaustive_small_groups():
    for n in range(1, 13):
        for size in range(min(n, 6) + 1):
            for elems in combinations(range(n), size):
                s = SidonSet(elems, n)
                assert verify_sidon(s).ok == oracles.naive_sidon_differences(elems, n)


def _all_sidon_subsets(n):
    out = []
    for size in range(2, max_sidon_bound(n) + 1):
        for elems in combinations(range(n), size):
            if oracles.naive_sidon_differences(elems, n):
                out.append(elems)
    return out


@pytest.mark.parametrize("n", [6, 11, 16, 20])
def test_translation_and_unit_scaling_preserve_sidon(n):
    units = [u for u in range(1, n) if gcd(u, n) == 1]
    for elems in _all_sidon_subsets(n):
        for t in range(n):
            shifted = tuple(sorted((a + t) % n for a in elems))
            assert verify_sidon(SidonSet(shifted, n)).ok
        for u in units:
            scaled = tuple(sorted((a * u) % n for a in elems))
            assert verify_sidon(SidonSet(scaled, n)).ok
