from fractions import Fraction

import pytest

from bipgirth.constructions import circulant
from bipgirth.digraph import compliance_profile, girth
from bipgirth.frontier import (
    LARGE_K_START,
    AlphaBeta,
    BadWitness,
    Status,
    bad_pairs,
    classify,
    region_csv,
    region_grid,
    region_svg,
)


def F(p, q=1):
    return Fraction(p, q)


class TestAlphaBeta:
    def test_range_validation(self):
        with pytest.raises(ValueError):
            AlphaBeta(F(3, 2), F(0))

    def test_dominates(self):
        assert AlphaBeta(F(1, 2), F(1, 2)).dominates(AlphaBeta(F(1, 3), F(1, 3)))


class TestBadPairs:
    def test_k2_values(self):
        pairs = bad_pairs(2, 2)
        assert AlphaBeta(F(1, 3), F(1, 3)) in pairs
        assert AlphaBeta(F(2, 5), F(1, 5)) in pairs
        assert AlphaBeta(F(1, 5), F(2, 5)) in pairs

    def test_t1_not_duplicated(self):
        assert len(bad_pairs(3, 1)) == 1

    def test_witnessed_by_circulant(self):
        # every bad pair is realised by a circulant with girth > 2k
        for k in (1, 2, 3):
            for t in (1, 2, 3):
                g = circulant(k, 1, t)
                n = k * t + 1
                assert compliance_profile(g) == (F(t, n), F(1, n))
                assert girth(g).length > 2 * k


class TestClassify:
    def test_bad_one_third(self):
        v = classify(2, AlphaBeta(F(1, 3), F(1, 3)))
        assert v.status is Status.BAD
        assert v.witness == BadWitness(t=1)
        assert v.provenance == "witness:t=1"

    def test_mirrored_witness(self):
        v = classify(2, AlphaBeta(F(1, 5), F(2, 5)))
        assert v.status is Status.BAD
        assert v.witness.mirrored

    def test_axis_witness(self):
        v = classify(2, AlphaBeta(F(1), F(0)))
        assert v.status is Status.BAD
        assert v.witness.t is None

    def test_good_rules(self):
        assert classify(1, AlphaBeta(F(3, 5), F(3, 5))).rule.startswith("k'=1")
        assert classify(2, AlphaBeta(F(2, 5), F(1, 4))).rule.startswith("k'=2")
        assert classify(3, AlphaBeta(F(3, 10), F(27, 100))).rule.startswith("k'=3")
        assert classify(4, AlphaBeta(F(22, 100), F(20, 100))).rule.startswith("k'=4")
        assert classify(6, AlphaBeta(F(1, 6), F(1, 6))).rule.startswith("k'=6")

    def test_large_k_rule(self):
        k = LARGE_K_START
        v = classify(k, AlphaBeta(F(1, k), F(1, k)))
        assert v.status is Status.GOOD
        # at k-1 the same point coincides with the t=1 bad pair
        v2 = classify(k - 1, AlphaBeta(F(1, k), F(1, k)))
        assert v2.status is Status.BAD
        # just inside the diagonal at k-1 nothing proved applies
        v3 = classify(k - 1, AlphaBeta(F(1, k - 1), F(1, k - 1)))
        assert v3.status is Status.UNKNOWN

    def test_unknown_point(self):
        # 2a+b = 190/200 here, short of 1
        v = classify(2, AlphaBeta(F(9, 25), F(23, 100)))
        assert v.status is Status.UNKNOWN
        assert v.provenance == ""

    def test_good_and_bad_exclusive_on_grid(self):
        for k in (1, 2, 3, 4):
            for _a, _b, v in region_grid(k, 30):
                assert not (v.rule and v.witness)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            classify(0, AlphaBeta(F(1, 2), F(1, 2)))


class TestRegion:
    def test_csv_shape(self):
        csv = region_csv(2, 10)
        lines = csv.strip().split("\n")
        assert lines[0] == "alpha,beta,status,provenance"
        assert len(lines) == 1 + 11 * 11

    def test_csv_no_contradictions(self):
        for line in region_csv(2, 40).strip().split("\n")[1:]:
            status = line.split(",")[2]
            assert status in ("good", "bad", "unknown")

    def test_svg_wellformed(self):
        svg = region_svg(2, 8)
        assert svg.startswith("<svg")
        assert svg.rstrip().endswith("</svg>")
        assert "<rect" in svg
