#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test des vérificateurs de lemmes sur calottes
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.analysis.constructions import rotation_orbit_arc
from src.analysis.lemma_lab import (
    TechConfig,
    Verdict,
    check_half_easy,
    check_monotone,
    check_sequence_bound,
    check_tech,
    sample_tech_config,
    straddling_graph,
    tech_premises_hold,
)
from src.geometry.caps import contiguous_cap
from src.geometry.exact_geom import GeometryError, Point

F = Fraction

SYMMETRIC = TechConfig(Point(-1, 0), Point(F(-7, 25), F(24, 25)), Point(0, 1), Point(F(3, 5), F(4, 5)), Point(1, 0))
# b au milieu de ac, d sur le segment ce
WEAKLY_CONVEX = TechConfig(Point(-1, 0), Point(F(-1, 2), F(1, 2)), Point(0, 1), Point(F(3, 8), F(5, 8)), Point(1, 0))


def _arc_cap(count: int, step: int):
    arc = rotation_orbit_arc(range(count), step)
    return contiguous_cap(arc, 0, count - 1)


def test_monotone():
    print("🔬 Monotonie des témoins")
    cap = _arc_cap(5, 3)
    verdict = check_monotone(cap, 2)
    assert verdict.verdict == Verdict.HOLDS
    assert verdict.details["witness_ac"] == 1 and verdict.details["witness_ab"] == 2
    assert check_monotone(cap, 1).verdict == Verdict.SKIP
    assert check_monotone(cap, 3).verdict == Verdict.SKIP
    for endpoint in (0, 4):
        try:
            check_monotone(cap, endpoint)
            assert False, "extrémité acceptée"
        except GeometryError:
            pass
    print("   ✅ HOLDS pour c = 2, SKIP sans témoin")


def test_half_easy():
    print("🔬 Moitié des arêtes d'extrémité sans témoin")
    verdict = check_half_easy(_arc_cap(5, 3))
    assert verdict.verdict == Verdict.HOLDS
    assert verdict.details == {"t": 5, "endpoint_edges": 7, "without_witness": 4}
    print("   ✅ 4 arêtes sur 7 sans témoin")


def test_tech_fixtures():
    print("🔬 Configuration technique")
    for config in (SYMMETRIC, WEAKLY_CONVEX):
        assert tech_premises_hold(config)
        assert check_tech(config).verdict == Verdict.HOLDS
    assert check_tech(SYMMETRIC).details == {"ab2": "36/25", "cd2": "2/5"}
    assert check_tech(WEAKLY_CONVEX).details == {"ab2": "1/2", "cd2": "9/32"}

    off_bisector = TechConfig(SYMMETRIC.a, SYMMETRIC.b, SYMMETRIC.c, Point(F(3, 5), F(3, 5)), SYMMETRIC.e)
    assert not tech_premises_hold(off_bisector)
    counter_clockwise = TechConfig(*reversed(SYMMETRIC.points))
    assert not tech_premises_hold(counter_clockwise)
    print("   ✅ Prémisses certifiées, |ab| > |cd|")


def test_tech_violation_reported():
    print("🔬 Violation rapportée avec la configuration")
    config = TechConfig(Point(0, 0), Point(1, 0), Point(0, 5), Point(2, 5), Point(9, 9))
    verdict = check_tech(config)
    assert verdict.verdict == Verdict.VIOLATED
    assert verdict.details["config"]["a"] == ["0", "0"]
    assert verdict.to_dict()["verdict"] == "violated"
    print("   ✅ OK")


def test_tech_sampler():
    print("🔬 Échantillonneur de configurations")
    for seed in range(5):
        config = sample_tech_config(seed)
        assert tech_premises_hold(config)
        assert check_tech(config).verdict == Verdict.HOLDS
    assert sample_tech_config(3) == sample_tech_config(3)
    print("   ✅ Déterministe pour une graine")


def test_sequence_bound():
    print("🔬 Borne sur les arêtes à cheval")
    small = _arc_cap(4, 3)
    assert straddling_graph(small, 2) == [(0, 2), (1, 3)]
    verdict = check_sequence_bound(small)
    assert verdict.verdict == Verdict.HOLDS and verdict.details["count"] == 2

    verdict = check_sequence_bound(_arc_cap(20, 20))
    assert verdict.verdict == Verdict.HOLDS
    assert verdict.details["t"] == 10 and verdict.details["count"] == 50
    assert verdict.details["bound"] == "355/4"
    assert verdict.details["segment_failures"] == []

    try:
        check_sequence_bound(_arc_cap(5, 3))
        assert False, "calotte impaire acceptée"
    except GeometryError:
        pass
    print("   ✅ 50 <= (7t² + t)/8 pour t = 10")


if __name__ == "__main__":
    print("🧪 === TEST DES LEMMES ===\n")
    test_monotone()
    test_half_easy()
    test_tech_fixtures()
    test_tech_violation_reported()
    test_tech_sampler()
    test_sequence_bound()
    print("\n🎉 Tous les tests des lemmes sont passés")
