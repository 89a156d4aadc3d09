#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test du cercle minimal et des points d'appui
"""

import os
import random
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.analysis.constructions import random_convex, rational_concyclic, rotation_orbit_arc
from src.geometry.caps import ConvexInstance
from src.geometry.enclosing_circle import (
    brute_force_enclosing_circle,
    center_in_triangle,
    smallest_enclosing_circle,
    splitting_points,
)
from src.geometry.exact_geom import EXACT_KERNEL, GeometryError, Point

SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


def test_square_uses_deterministic_rule():
    print("⭕ Carré : quatre points cocycliques")
    circle, support = smallest_enclosing_circle(SQUARE)
    assert circle.center == Point(Fraction(1, 2), Fraction(1, 2))
    assert circle.squared_radius == Fraction(1, 2)
    assert support.indices == (0, 1, 2)
    assert support.rule_applied
    print("   ✅ Appui (0, 1, 2), règle déterministe signalée")


def test_diametral_support():
    print("⭕ Appui diamétral")
    points = [Point(-2, 0), Point(0, -1), Point(2, 0), Point(0, 1)]
    circle, support = smallest_enclosing_circle(points)
    assert circle.center == Point(0, 0) and circle.squared_radius == 4
    assert support.indices == (0, 2)
    assert not support.rule_applied

    # arc plus petit qu'un demi-cercle : les extrémités suffisent
    arc = rotation_orbit_arc(range(5), 3)
    assert splitting_points(arc).indices == (0, 4)
    print("   ✅ OK")


def test_acute_triangle_support():
    print("⭕ Triangle acutangle")
    points = [Point(0, 0), Point(4, 0), Point(2, 3)]
    circle, support = smallest_enclosing_circle(points)
    assert support.indices == (0, 1, 2)
    for p in points:
        assert circle.on_boundary(p, EXACT_KERNEL)
    assert center_in_triangle(circle.center, *points, EXACT_KERNEL)
    print("   ✅ OK")


def test_concyclic_pentagon_rule():
    print("⭕ Pentagone rationnel cocyclique")
    pentagon = rational_concyclic([-2, -1, 0, 1, 2])
    support = splitting_points(pentagon)
    assert support.indices == (0, 1, 3)
    assert support.rule_applied
    print("   ✅ Premier triplet lexicographique contenant le centre: (0, 1, 3)")


def test_matches_brute_force():
    print("⭕ Comparaison avec l'oracle exhaustif")
    rng = random.Random(11)
    for trial in range(15):
        instance = random_convex(rng.randint(3, 12), rng.randrange(10 ** 6), rng.choice(["concyclic", "vector_sum"]))
        circle, support = smallest_enclosing_circle(instance.points)
        oracle = brute_force_enclosing_circle(instance.points)
        assert circle.squared_radius == oracle.squared_radius
        assert circle.center == oracle.center
        assert all(circle.contains(p, EXACT_KERNEL) for p in instance.points)
        assert 1 <= len(support) <= 3
        assert all(circle.on_boundary(p, EXACT_KERNEL) for p in support.points)
        if len(support) == 3:
            assert center_in_triangle(circle.center, *support.points, EXACT_KERNEL)
        if len(support) == 2:
            a, b = support.points
            assert Point((a.x + b.x) / 2, (a.y + b.y) / 2) == circle.center
    print("   ✅ 15 instances aléatoires identiques à l'oracle")


def test_degenerate_inputs():
    print("⭕ Entrées dégénérées")
    circle, support = smallest_enclosing_circle([Point(3, 4)])
    assert circle.squared_radius == 0 and support.indices == (0,)
    try:
        smallest_enclosing_circle([])
        assert False, "ensemble vide accepté"
    except GeometryError:
        pass
    try:
        smallest_enclosing_circle([Point(0, 0), Point(0, 0)])
        assert False, "doublon accepté"
    except GeometryError:
        pass
    instance = ConvexInstance((Point(0, 0), Point(2, 0)))
    assert splitting_points(instance).indices == (0, 1)
    print("   ✅ OK")


if __name__ == "__main__":
    print("🧪 === TEST DU CERCLE MINIMAL ===\n")
    test_square_uses_deterministic_rule()
    test_diametral_support()
    test_acute_triangle_support()
    test_concyclic_pentagon_rule()
    test_matches_brute_force()
    test_degenerate_inputs()
    print("\n🎉 Tous les tests du cercle minimal sont passés")
