import random
from fractions import Fraction

import pytest

from bipgirth.constructions import (
    CirculantParams,
    OffsetSpec,
    ch_reduce,
    circulant,
    layered_cycle,
    offset_circulant,
    random_compliant,
    required_degrees,
)
from bipgirth.digraph import (
    GeneralDigraph,
    compliance_profile,
    girth,
    is_compliant,
)
from bipgirth.errors import InfeasibleDegree, NullDigraph

from oracles import brute_girth, random_general


class TestLayeredCycle:
    def test_smallest(self):
        g = layered_cycle(1, 1)
        assert girth(g).length == 4

    def test_girth_and_degrees(self):
        for k in range(1, 6):
            for t in range(1, 4):
                g = layered_cycle(k, t)
                assert g.a_size == g.b_size == (k + 1) * t
                assert all(m.bit_count() == t for m in g.a_out + g.b_out)
                assert girth(g).length == 2 * k + 2

    def test_min_degree_ratio(self):
        g = layered_cycle(4, 2)
        a, b = compliance_profile(g)
        assert a == b == Fraction(1, 5)

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            layered_cycle(0, 1)


class TestCirculant:
    def test_params_n(self):
        assert CirculantParams(2, 1, 1).n == 3
        assert CirculantParams(2, 2, 1).n == 5

    def test_six_cycle(self):
        g = circulant(2, 1, 1)
        assert g.a_size == 3
        assert girth(g).length == 6

    def test_profile_exact(self):
        for k in range(1, 5):
            for s in range(1, 4):
                for t in range(1, 4):
                    g = circulant(k, s, t)
                    n = k * (s + t - 1) + 1
                    assert compliance_profile(g) == (Fraction(t, n), Fraction(s, n))

    def test_girth_exceeds_2k(self):
        for k in range(1, 5):
            for s in range(1, 4):
                for t in range(1, 4):
                    gr = girth(circulant(k, s, t))
                    assert gr is not None and gr.length > 2 * k


class TestOffsetCirculant:
    def test_matches_circulant(self):
        # the plain circulant is the offset instance with interval offsets
        g = circulant(2, 2, 1)
        spec = OffsetSpec(5, frozenset([0, 1]), frozenset([1]))
        assert offset_circulant(spec) == g

    def test_offsets_reduced_mod_n(self):
        spec = OffsetSpec(5, frozenset([7]), frozenset([-1]))
        assert spec.out_offsets == frozenset([2])
        assert spec.in_offsets == frozenset([4])

    def test_regularity(self):
        spec = OffsetSpec(7, frozenset([0, 2, 3]), frozenset([1, 5]))
        g = offset_circulant(spec)
        assert all(m.bit_count() == 3 for m in g.a_out)
        assert all(m.bit_count() == 2 for m in g.b_out)
        # vertex-transitive, so in-degree equals out-degree per side
        assert all(m.bit_count() == 3 for m in g.b_in)
        assert all(m.bit_count() == 2 for m in g.a_in)


class TestChReduce:
    def test_triangle_to_six_cycle(self):
        h = GeneralDigraph(3, (0b010, 0b100, 0b001))
        g = ch_reduce(h)
        assert girth(g).length == 6

    def test_girth_doubles(self):
        rng = random.Random(21)
        checked = 0
        while checked < 60:
            h = random_general(rng)
            gh = girth(h)
            if gh is None:
                assert girth(ch_reduce(h)) is None
                continue
            assert girth(ch_reduce(h)).length == 2 * gh.length
            checked += 1

    def test_doubling_against_oracle(self):
        rng = random.Random(22)
        for _ in range(40):
            h = random_general(rng)
            expect = brute_girth(h)
            got = girth(ch_reduce(h))
            assert (got.length if got else None) == \
                (2 * expect if expect else None)

    def test_null_rejected(self):
        with pytest.raises(NullDigraph):
            ch_reduce(GeneralDigraph(0, ()))


class TestRandomCompliant:
    def test_exact_degrees(self):
        g = random_compliant(7, 5, Fraction(2, 7), Fraction(2, 5), seed=3)
        assert all(m.bit_count() == 2 for m in g.a_out)
        assert all(m.bit_count() == 2 for m in g.b_out)
        assert is_compliant(g, Fraction(2, 7), Fraction(2, 5))

    def test_seed_determinism(self):
        a = random_compliant(6, 6, Fraction(1, 3), Fraction(1, 3), seed=42)
        b = random_compliant(6, 6, Fraction(1, 3), Fraction(1, 3), seed=42)
        c = random_compliant(6, 6, Fraction(1, 3), Fraction(1, 3), seed=43)
        assert a == b
        assert a != c

    def test_required_degrees(self):
        assert required_degrees(6, 6, Fraction(1, 3), Fraction(1, 3)) == (2, 2)
        assert required_degrees(5, 3, Fraction(2, 5), Fraction(1, 2)) == (2, 2)
        with pytest.raises(InfeasibleDegree):
            required_degrees(2, 2, Fraction(3, 2), Fraction(1, 2))
