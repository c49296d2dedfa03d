from collections import Counter
from fractions import Fraction

import pytest

from rrcablocks.blocks import (
    baby_verma_eigenvalues,
    block_invariant,
    block_partition_g_m_1_n,
    block_partition_g_m_d_n,
    eigenvalue_multiset,
    kappa_zero_key,
    same_block,
    scaled_invariant_classes_agree,
)
from rrcablocks.combin import (
    Multipartition,
    OrbitLabel,
    content,
    delta_action,
    enumerate_multipartitions,
    enumerate_standard_tableaux,
    is_d_stuttering,
    orbit_labels,
)
from rrcablocks.exactnum import Cyclotomic, LinearExponent
from rrcablocks.params import ParameterError, ParamSpec, c_to_H, scale_params

from conftest import random_cyclotomic

M = Multipartition.of
GOLDEN = ParamSpec.numeric(2, 1, [1])


def random_spec(rng, m, admissible_d=1, rational=False):
    def value():
        if rational:
            return Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        return random_cyclotomic(rng, m, spread=2)

    c = [value() if l % admissible_d == 0 else 0 for l in range(1, m)]
    return ParamSpec.numeric(m, value(), c)


def m2_oracle_partition(n, kappa, c1):
    """Blocks for m=2 straight from the box multiset; a = (0, c_1) because eta = -1."""
    a = (Fraction(0), Fraction(c1))
    groups = {}
    for lam in enumerate_multipartitions(2, n):
        key = tuple(sorted(a[b.component] - kappa * content(b) for b in lam.boxes()))
        groups.setdefault(key, set()).add(lam)
    return {frozenset(g) for g in groups.values()}


def test_invariant_examples():
    assert block_invariant(M([2], []), GOLDEN).entries == (-1, 0)
    assert block_invariant(M([], [2]), GOLDEN).entries == (0, 1)
    gen = block_invariant(M([1], [1]), ParamSpec.generic(2))
    assert set(gen.entries) == {LinearExponent(0, (0,)), LinearExponent(0, (1,))}


def test_invariant_rejects_wrong_m():
    with pytest.raises(ParameterError):
        block_invariant(M([1], [], []), GOLDEN)


def test_same_block_examples():
    assert same_block(M([1], [1]), M([1], [1]), GOLDEN)
    assert same_block(M([1, 1], []), M([1], [1]), GOLDEN)
    assert not same_block(M([2], []), M([], [1, 1]), GOLDEN)
    with pytest.raises(ParameterError):
        same_block(M([2], []), M([1], []), GOLDEN)


def test_golden_partition():
    bp = block_partition_g_m_1_n(2, 2, GOLDEN)
    assert bp.as_sets() == {
        frozenset({M([2], [])}),
        frozenset({M([], [1, 1])}),
        frozenset({M([1, 1], []), M([1], [1]), M([], [2])}),
    }
    assert bp.as_sets() == m2_oracle_partition(2, 1, 1)


def test_m2_partitions_match_oracle(rng):
    for _ in range(40):
        n = rng.randint(1, 5)
        kappa, c1 = Fraction(rng.randint(-3, 3), rng.randint(1, 2)), Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        bp = block_partition_g_m_1_n(2, n, ParamSpec.numeric(2, kappa, [c1]))
        assert bp.as_sets() == m2_oracle_partition(n, kappa, c1)


def _check_is_partition(bp, expected_labels):
    flat = [lab for cls in bp.classes for lab in cls]
    assert sorted(map(repr, flat)) == sorted(map(repr, expected_labels))
    assert len(set(flat)) == len(flat)


@pytest.mark.parametrize("n", range(1, 9))
def test_m1_nonzero_kappa_gives_singletons(n):
    for kappa in (1, Fraction(-2, 3)):
        bp = block_partition_g_m_1_n(1, n, ParamSpec.numeric(1, kappa))
        assert all(len(c) == 1 for c in bp.classes)
        _check_is_partition(bp, enumerate_multipartitions(1, n))


def test_kappa_zero_partitions_are_weighted_size_fibers(rng):
    for m in (2, 3):
        for n in (2, 3, 4):
            for _ in range(4):
                spec = random_spec(rng, m)
                spec = ParamSpec.numeric(m, 0, spec.c)
                bp = block_partition_g_m_1_n(m, n, spec)
                fibers = {}
                for lam in enumerate_multipartitions(m, n):
                    fibers.setdefault(kappa_zero_key(lam, spec), set()).add(lam)
                assert bp.as_sets() == {frozenset(f) for f in fibers.values()}
                a = c_to_H(spec).a
                if len(set(a)) == m:
                    sizes = {}
                    for lam in enumerate_multipartitions(m, n):
                        sizes.setdefault(lam.sizes(), set()).add(lam)
                    assert bp.as_sets() == {frozenset(f) for f in sizes.values()}


def test_same_block_is_an_equivalence_relation(rng):
    for m in (1, 2, 3):
        for n in range(1, 5):
            spec = random_spec(rng, m)
            lams = enumerate_multipartitions(m, n)
            rel = {(a, b): same_block(a, b, spec) for a in lams for b in lams}
            for a in lams:
                assert rel[a, a]
                for b in lams:
                    assert rel[a, b] == rel[b, a]
                    if rel[a, b]:
                        assert all(rel[a, c] == rel[b, c] for c in lams)


def test_scaling_invariance(rng):
    for k in range(20):
        m = 1 + k % 3
        n = 1 + k % 4
        spec = random_spec(rng, m, rational=k % 2 == 0)
        factor = random_cyclotomic(rng, m, allow_zero=False)
        base = block_partition_g_m_1_n(m, n, spec).as_sets()
        assert block_partition_g_m_1_n(m, n, scale_params(spec, factor)).as_sets() == base


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_generic_partitions_are_singletons(m, n):
    bp = block_partition_g_m_1_n(m, n, ParamSpec.generic(m))
    assert all(len(c) == 1 for c in bp.classes)
    assert len(bp.classes) == len(enumerate_multipartitions(m, n))
    assert all(len(block_invariant(lam, ParamSpec.generic(m))) == n for lam in bp.labels)


def test_specialization_coarsens(rng):
    for m in (2, 3):
        for n in (2, 3, 4):
            spec = random_spec(rng, m)
            numeric = block_partition_g_m_1_n(m, n, spec)
            for cls in block_partition_g_m_1_n(m, n, ParamSpec.generic(m)).classes:
                assert all(lab in numeric.class_of(cls[0]) for lab in cls)


def test_invariant_length_is_n(rng):
    spec = random_spec(rng, 3)
    for lam in enumerate_multipartitions(3, 4):
        assert len(block_invariant(lam, spec)) == 4


def test_eigenvalue_examples():
    lam = M([2], [])
    (tab,) = enumerate_standard_tableaux(lam)
    assert baby_verma_eigenvalues(lam, tab, GOLDEN) == [-1, -3]
    zero = ParamSpec.numeric(2, 0, [0])
    for lam in enumerate_multipartitions(2, 3):
        for tab in enumerate_standard_tableaux(lam):
            assert all(v == 0 for v in baby_verma_eigenvalues(lam, tab, zero))


def test_eigenvalue_rejects_foreign_tableau():
    (tab,) = enumerate_standard_tableaux(M([2], []))
    with pytest.raises(ParameterError):
        baby_verma_eigenvalues(M([], [2]), tab, GOLDEN)
    with pytest.raises(ParameterError):
        baby_verma_eigenvalues(M([2], []), tab, ParamSpec.generic(2))


def test_eigenvalues_are_tableau_independent(rng):
    for m in (1, 2, 3):
        spec = random_spec(rng, m)
        for n in range(1, 5):
            for lam in enumerate_multipartitions(m, n):
                expected = Counter(eigenvalue_multiset(lam, spec))
                for tab in enumerate_standard_tableaux(lam):
                    assert Counter(baby_verma_eigenvalues(lam, tab, spec)) == expected


def test_scaled_invariant_classes_agree_examples():
    assert scaled_invariant_classes_agree(M([2], []), M([2], []), GOLDEN)
    assert eigenvalue_multiset(M([1, 1], []), GOLDEN) == eigenvalue_multiset(M([1], [1]), GOLDEN)
    assert list(eigenvalue_multiset(M([1], [1]), GOLDEN)) == [-1, 1]
    assert scaled_invariant_classes_agree(M([1, 1], []), M([1], [1]), GOLDEN)
    assert scaled_invariant_classes_agree(M([2], []), M([], [1, 1]), GOLDEN)


# --------------------------------------------------------------------------- G(m,d,n)


@pytest.mark.parametrize("m, n", [(1, 3), (2, 2), (3, 3)])
def test_d1_reduces_to_gm1n(rng, m, n):
    spec = random_spec(rng, m)
    assert block_partition_g_m_d_n(m, 1, n, spec) == block_partition_g_m_1_n(m, n, spec)


def test_stuttering_split_m2_d2_n4():
    lam = M([1, 1], [1, 1])
    # oracle: with c_1 = 0 only contents matter, and no other label shares the content multiset
    target = Counter(content(b) for b in lam.boxes())
    others = [mu for mu in enumerate_multipartitions(2, 4) if Counter(content(b) for b in mu.boxes()) == target]
    assert others == [lam]
    for spec in (ParamSpec.generic(2), ParamSpec.numeric(2, 1, [0])):
        bp = block_partition_g_m_d_n(2, 2, 4, spec)
        a, b = OrbitLabel(lam, 0), OrbitLabel(lam, 1)
        assert bp.class_of(a) == (a,)
        assert bp.class_of(b) == (b,)
        _check_is_partition(bp, orbit_labels(2, 4, 2))


def test_kappa_zero_collapses_to_one_block():
    bp = block_partition_g_m_d_n(2, 2, 4, ParamSpec.numeric(2, 0, [0]))
    assert len(bp.classes) == 1
    assert len(bp.classes[0]) == len(orbit_labels(2, 4, 2))


def test_stuttering_orbits_that_share_an_invariant_stay_together():
    # G(4,2,4) with c = (0, 1, 0) gives a = (0, 1/2, 0, 1/2); choosing kappa = a_1 makes
    # ((1),(1),(1),(1)) and ((1,1),(),(1,1),()) share the exponent multiset {0, 0, 1/2, 1/2}
    spec = ParamSpec.numeric(4, Fraction(1, 2), [0, 1, 0])
    assert list(c_to_H(spec).a) == [0, Fraction(1, 2), 0, Fraction(1, 2)]
    lam, mu = M([1], [1], [1], [1]), M([1, 1], [], [1, 1], [])
    assert is_d_stuttering(lam, 2) and is_d_stuttering(mu, 2)
    assert same_block(lam, mu, spec)
    bp = block_partition_g_m_d_n(4, 2, 4, spec)
    cls = bp.class_of(OrbitLabel(lam, 0))
    assert {OrbitLabel(lam, 1), OrbitLabel(mu, 0), OrbitLabel(mu, 1)} <= set(cls)


@pytest.mark.parametrize(
    "m, d, n, spec, fragment",
    [
        (2, 2, 2, ParamSpec.numeric(2, 1, [0]), "n=2 with even d"),
        (4, 2, 1, ParamSpec.generic(4), "n=1"),
        (3, 3, 0, ParamSpec.generic(3), "n=0"),
        (4, 3, 3, ParamSpec.generic(4), "does not divide"),
        (2, 2, 3, ParamSpec.numeric(2, 1, [1]), "c_l must vanish"),
        (4, 2, 3, ParamSpec.numeric(4, 1, [1, 1, 1]), "l=[1, 3]"),
    ],
)
def test_gmdn_rejects(m, d, n, spec, fragment):
    with pytest.raises(ParameterError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        block_partition_g_m_d_n(m, d, n, spec)


def test_n2_with_odd_d_is_allowed():
    bp = block_partition_g_m_d_n(3, 3, 2, ParamSpec.numeric(3, 1, [0, 0]))
    _check_is_partition(bp, orbit_labels(3, 2, 3))


@pytest.mark.parametrize("m", range(2, 9))
def test_orbit_invariance(rng, m):
    n = 3 if m <= 4 else 2
    for d in (d for d in range(2, m + 1) if m % d == 0):
        spec = random_spec(rng, m, admissible_d=d)
        for lam in enumerate_multipartitions(m, n):
            assert block_invariant(delta_action(lam, d), spec) == block_invariant(lam, spec)
        gen = ParamSpec.generic(m)
        for lam in enumerate_multipartitions(m, n):
            assert block_invariant(delta_action(lam, d), gen, period=m // d) == block_invariant(lam, gen, period=m // d)


def test_gmdn_rules_against_brute_force(rng):
    for m, d, n in [(2, 2, 3), (2, 2, 4), (4, 2, 3), (4, 4, 3), (3, 3, 3), (6, 3, 2)]:
        for spec in (random_spec(rng, m, admissible_d=d), ParamSpec.numeric(m, 1, [0] * (m - 1))):
            bp = block_partition_g_m_d_n(m, d, n, spec)
            inv = {lam: block_invariant(lam, spec) for lam in enumerate_multipartitions(m, n)}
            counts = Counter(inv.values())
            for x in bp.labels:
                for y in bp.labels:
                    together = y in bp.class_of(x)
                    lx, ly = x.representative, y.representative
                    if inv[lx] != inv[ly]:
                        assert not together
                    elif lx == ly and is_d_stuttering(lx, d) and counts[inv[lx]] == 1:
                        assert together == (x.epsilon == y.epsilon)
                    else:
                        assert together


def test_threads_do_not_change_output(rng):
    spec = random_spec(rng, 3)
    one = block_partition_g_m_1_n(3, 4, spec, threads=1)
    many = block_partition_g_m_1_n(3, 4, spec, threads=4)
    assert one == many
    assert block_partition_g_m_d_n(4, 2, 3, ParamSpec.generic(4), threads=3) == block_partition_g_m_d_n(
        4, 2, 3, ParamSpec.generic(4)
    )


def test_partition_json_shape():
    data = block_partition_g_m_d_n(2, 2, 4, ParamSpec.generic(2)).to_json()
    assert data["group"] == {"m": 2, "d": 2, "n": 4}
    assert data["mode"] == "generic"
    assert all(set(lab) == {"orbit_rep", "epsilon"} for cls in data["blocks"] for lab in cls)


def test_numeric_invariants_in_cyclotomic_field():
    spec = ParamSpec.parse(3, "z", "1,z^2")
    inv = block_invariant(M([1], [1], []), spec)
    assert all(isinstance(e, Cyclotomic) and e.order == 3 for e in inv.entries)
