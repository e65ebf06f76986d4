"""Canonical form, isomorphism, embedding, and orbit enumeration tests."""

import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brsc.core import Complex, DomainError, bits, k_submasks, mask_of
from brsc.iso import (
    all_complexes,
    are_isomorphic,
    canonical_complex,
    canonical_key,
    embeds,
    graphs_up_to_iso,
    orbit_min_table,
    orbit_reps,
)


def permute_complex(C, perm):
    gens = []
    for f in C.facets:
        gens.append(mask_of(perm[v] for v in bits(f)))
    return Complex(C.n, gens)


def complexes(max_n=6):
    @st.composite
    def strat(draw):
        n = draw(st.integers(1, max_n))
        full = (1 << n) - 1
        gens = draw(st.lists(st.integers(0, full), max_size=8))
        return Complex(n, gens)

    return strat()


@given(complexes(), st.randoms(use_true_random=False))
@settings(max_examples=150, deadline=None)
def test_canonical_key_is_orbit_invariant(C, rng):
    perm = list(range(C.n))
    rng.shuffle(perm)
    D = permute_complex(C, perm)
    assert canonical_key(C) == canonical_key(D)


@given(complexes(5))
@settings(max_examples=60, deadline=None)
def test_canonical_key_is_orbit_minimum(C):
    keys = []
    for perm in permutations(range(C.n)):
        keys.append(tuple(sorted(
            mask_of(perm[v] for v in bits(f)) for f in C.facets
        )))
    assert canonical_key(C) == min(keys)


def test_canonical_idempotent():
    C = Complex(5, [0b10110, 0b01101])
    K = canonical_complex(C)
    assert canonical_complex(K) == K
    assert are_isomorphic(C, K)


def test_isomorphism_basic():
    A = Complex(4, [0b0111])
    B = Complex(4, [0b1110])
    assert are_isomorphic(A, B)
    D = Complex(4, [0b0111, 0b1100])
    assert not are_isomorphic(A, D)
    assert not are_isomorphic(A, Complex(5, [0b00111]))


def test_embeds():
    # pad the triangle with an isolated vertex to compare on 4 vertices
    tri_in_k4 = embeds(Complex(4, [0b111]), Complex(4, [0b1111]))
    assert tri_in_k4 is not None
    # a triangle does not embed into a complex with no 3-face
    assert embeds(Complex(4, [0b111]), Complex(4, set(k_submasks(0b1111, 2)))) is None
    # but an edge path does
    assert embeds(Complex(4, [0b011, 0b110]), Complex(4, set(k_submasks(0b1111, 2)))) is not None
    with pytest.raises(DomainError):
        embeds(Complex(3, [0b111]), Complex(4, [0b1111]))


def test_orbit_table_matches_brute():
    combs, canon = orbit_min_table(4, 2)
    idx = {c: t for t, c in enumerate(combs)}
    for m in range(1 << len(combs)):
        best = m
        for perm in permutations(range(4)):
            img = 0
            for t, c in enumerate(combs):
                if m >> t & 1:
                    img |= 1 << idx[tuple(sorted(perm[v] for v in c))]
            best = min(best, img)
        assert int(canon[m]) == best


def test_graph_counts_up_to_iso():
    # numbers of graphs on n unlabeled vertices
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n, count in expected.items():
        _, reps = orbit_reps(n, 2)
        assert len(reps) == count, (n, len(reps))


def test_all_complexes_against_downset_scan():
    # independent count: downward closed subsets of the size >= 2 masks
    for n in (2, 3, 4):
        masks = [m for m in range(1 << n) if m.bit_count() >= 2]
        pos = {m: i for i, m in enumerate(masks)}
        count = 0
        for pick in range(1 << len(masks)):
            chosen = {masks[i] for i in range(len(masks)) if pick >> i & 1}
            ok = True
            for m in chosen:
                for v in bits(m):
                    sub = m ^ (1 << v)
                    if sub.bit_count() >= 2 and sub not in chosen:
                        ok = False
                        break
                if not ok:
                    break
            count += ok
        got = list(all_complexes(n))
        assert len(got) == count
        assert len({c.facets for c in got}) == len(got)


def test_all_complexes_small_content():
    got = {frozenset(c.facets) for c in all_complexes(2)}
    assert got == {
        frozenset({0b01, 0b10}),
        frozenset({0b11}),
    }
