#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test du noyau géométrique exact et du format des ensembles de points
"""

import os
import random
import sys
from fractions import Fraction

import numpy as np

# Ajouter la racine du projet au path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.geometry.caps import ConvexInstance
from src.geometry.exact_geom import (
    EXACT_KERNEL,
    FloatPoint,
    GeometryError,
    Orientation,
    Point,
    angle_not_acute,
    float_kernel,
    hull_order,
    is_convex_position,
    is_general_position,
    on_bisector,
    orientation,
    rotate_pythagorean,
    scale,
    squared_distance,
    translate,
)
from src.geometry.point_io import (
    PointSetFormatError,
    dump_point_set,
    format_rational,
    parse_point_set,
    parse_rational,
)

SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


def _raises(exception, func, *args):
    try:
        func(*args)
    except exception:
        return True
    return False


def test_squared_distance_and_orientation():
    print("📐 Distances et orientation")
    assert squared_distance(Point(0, 0), Point(3, 4)) == 25
    assert squared_distance(Point(Fraction(1, 2), 0), Point(0, Fraction(1, 2))) == Fraction(1, 2)
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation.COUNTER_CLOCKWISE
    assert orientation(Point(0, 1), Point(1, 0), Point(0, 0)) == Orientation.CLOCKWISE
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == Orientation.COLLINEAR
    print("   ✅ OK")


def test_angle_and_bisector():
    print("📐 Angles et médiatrices")
    a, b = Point(-1, 0), Point(1, 0)
    assert angle_not_acute(a, Point(0, 1), b)                  # angle droit
    assert angle_not_acute(a, Point(0, Fraction(1, 2)), b)     # obtus
    assert not angle_not_acute(a, Point(0, 2), b)              # aigu
    assert _raises(GeometryError, angle_not_acute, a, a, b)

    assert on_bisector(Point(0, 5), a, b)
    assert not on_bisector(Point(1, 5), a, b)
    assert _raises(GeometryError, on_bisector, Point(0, 0), a, a)
    print("   ✅ OK")


def test_convex_and_general_position():
    print("📐 Position convexe et générale")
    assert is_convex_position(SQUARE)
    assert not is_convex_position(SQUARE + [Point(Fraction(1, 2), Fraction(1, 2))])
    assert not is_convex_position(SQUARE + [Point(0, 0)])
    assert _raises(GeometryError, is_convex_position, SQUARE[:2])

    assert is_general_position(SQUARE)
    assert not is_general_position([Point(0, 0), Point(1, 1), Point(2, 2), Point(0, 1)])

    shuffled = [SQUARE[2], SQUARE[0], SQUARE[3], SQUARE[1]]
    assert sorted(hull_order(shuffled)) == [0, 1, 2, 3]
    assert _raises(GeometryError, ConvexInstance, shuffled)
    instance = ConvexInstance.from_points(shuffled)
    assert instance.n == 4 and instance.backend == "exact"
    print("   ✅ OK")


def test_exact_points_reject_floats():
    print("📐 Coordonnées flottantes refusées par le backend exact")
    assert _raises(GeometryError, Point, 0.5, 1)
    assert Point("1/3", 2).x == Fraction(1, 3)
    assert _raises(GeometryError, ConvexInstance, [Point(0, 0), Point(0, 0)])
    print("   ✅ OK")


def test_float_backend_tolerance():
    print("📐 Backend flottant à eps près")
    kernel = float_kernel(1e-9)
    assert not kernel.exact
    p, q, r = FloatPoint(0, 0), FloatPoint(1, 0), FloatPoint(2, 1e-12)
    assert kernel.orientation(p, q, r) == Orientation.COLLINEAR
    assert EXACT_KERNEL.orientation(Point(0, 0), Point(1, 0), Point(2, Fraction(1, 10 ** 12))) \
        == Orientation.COUNTER_CLOCKWISE
    assert _raises(GeometryError, float_kernel, -1.0)
    print("   ✅ OK")


def test_similarity_invariance():
    print("📐 Invariance par similitude rationnelle")
    p, q, r = Point(1, 2), Point(3, -1), Point(-2, 0)

    def move(point):
        return translate(scale(rotate_pythagorean(point, (3, 4, 5)), Fraction(7, 3)), Fraction(1, 2), -4)

    assert squared_distance(rotate_pythagorean(p, (3, 4, 5)), rotate_pythagorean(q, (3, 4, 5))) == 13
    assert squared_distance(move(p), move(q)) == Fraction(49, 9) * 13
    assert orientation(move(p), move(q), move(r)) == orientation(p, q, r)
    assert on_bisector(move(Point(0, 5)), move(Point(-1, 0)), move(Point(1, 0)))
    assert _raises(GeometryError, rotate_pythagorean, p, (1, 1, 1))
    print("   ✅ OK")


def test_point_set_format():
    print("📄 Format JSON des ensembles de points")
    points = parse_point_set('{"points": [[1, 2, 3, 4], [-5, 1, 0, 7]]}')
    assert points == [Point(Fraction(1, 2), Fraction(3, 4)), Point(-5, 0)]

    floats = parse_point_set({"points_float": [[0.5, 1], [2, -1.25]]})
    assert floats == [FloatPoint(0.5, 1.0), FloatPoint(2.0, -1.25)]
    assert parse_point_set(dump_point_set(points)) == points

    bad_documents = [
        '{"points": [[1, 2, 3]]}',
        '{"points": [[1, 0, 3, 4]]}',
        '{"points": [], "points_float": []}',
        '{"other": []}',
        '{"points": [[1.5, 2, 3, 4]]}',
        'pas du json',
    ]
    for document in bad_documents:
        assert _raises(PointSetFormatError, parse_point_set, document), document
    print("   ✅ OK")


def test_rational_strings():
    print("📄 Rationnels 'p/q'")
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert parse_rational("5/44") == Fraction(5, 44)
    assert parse_rational("8.8") == Fraction(44, 5)
    assert _raises(PointSetFormatError, parse_rational, "1/0")
    assert _raises(PointSetFormatError, parse_rational, "abc")
    print("   ✅ OK")

def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-100, 100), rng.randint(1, 5))


def test_sign_of_numpy_scalars():
    print("📐 Signe des scalaires numpy")
    kernel = float_kernel(1e-9)
    assert kernel.sign(np.float64(0.5)) == 1
    assert kernel.sign(np.float64(-2.0)) == -1
    assert kernel.sign(np.float64(1e-12)) == 0
    assert EXACT_KERNEL.sign(np.int64(3)) == 1
    assert kernel.same_length(np.float64(2.0), np.float64(2.0 + 1e-12))
    print("   ✅ OK")


def test_float_backend_agrees_with_exact():
    print("📐 Backends flottant et exact d'accord sur des rationnels")
    rng = random.Random(17)
    kernel = float_kernel(1e-9)
    compared = 0
    for _ in range(3000):
        exact = [Point(_random_rational(rng), _random_rational(rng)) for _ in range(3)]
        if len(set(exact)) < 3:
            continue
        p, q, r = exact
        fp, fq, fr = (FloatPoint(float(point.x), float(point.y)) for point in exact)
        assert kernel.orientation(fp, fq, fr) == EXACT_KERNEL.orientation(p, q, r)
        assert kernel.angle_not_acute(fq, fp, fr) == EXACT_KERNEL.angle_not_acute(q, p, r)
        assert kernel.on_bisector(fp, fq, fr) == EXACT_KERNEL.on_bisector(p, q, r)
        assert kernel.same_length(kernel.squared_distance(fp, fq), kernel.squared_distance(fp, fr)) \
            == (squared_distance(p, q) == squared_distance(p, r))
        compared += 1
    assert compared > 2900
    print(f"   ✅ {compared} triplets comparés")


def test_bisector_symmetry():
    print("📐 Médiatrice symétrique en ses extrémités")
    rng = random.Random(5)
    for _ in range(500):
        a = Point(_random_rational(rng), _random_rational(rng))
        b = Point(_random_rational(rng), _random_rational(rng))
        if a == b:
            continue
        x = Point(_random_rational(rng), _random_rational(rng))
        assert on_bisector(x, a, b) == on_bisector(x, b, a)
        # milieu + s·(b - a)⊥ est toujours sur la médiatrice
        s = _random_rational(rng)
        on_line = Point((a.x + b.x) / 2 - s * (b.y - a.y), (a.y + b.y) / 2 + s * (b.x - a.x))
        assert on_bisector(on_line, a, b) and on_bisector(on_line, b, a)
    print("   ✅ OK")


if __name__ == "__main__":
    print("🧪 === TEST DU NOYAU GÉOMÉTRIQUE ===\n")
    test_squared_distance_and_orientation()
    test_angle_and_bisector()
    test_convex_and_general_position()
    test_exact_points_reject_floats()
    test_float_backend_tolerance()
    test_sign_of_numpy_scalars()
    test_float_backend_agrees_with_exact()
    test_bisector_symmetry()
    test_similarity_invariance()
    test_point_set_format()
    test_rational_strings()
    print("\n🎉 Tous les tests du noyau sont passés")
