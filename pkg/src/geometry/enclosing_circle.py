# -*- coding: utf-8 -*-
"""
Plus petit cercle englobant (prédicats exacts) et extraction des points
d'appui qui découpent un ensemble convexe en au plus trois calottes
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .exact_geom import (
    AnyPoint,
    FloatPoint,
    GeometryError,
    GeometryKernel,
    Point,
    kernel_for,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Circle:
    """Cercle décrit par son centre et le carré de son rayon"""
    center: AnyPoint
    squared_radius: object

    def contains(self, p: AnyPoint, kernel: GeometryKernel) -> bool:
        return kernel.sign(kernel.squared_distance(self.center, p) - self.squared_radius) <= 0

    def on_boundary(self, p: AnyPoint, kernel: GeometryKernel) -> bool:
        return kernel.sign(kernel.squared_distance(self.center, p) - self.squared_radius) == 0


@dataclass(frozen=True)
class SupportSet:
    """
    Points d'appui du cercle minimal (1 à 3), dans l'ordre des indices

    rule_applied est vrai quand plus de 3 points sont sur le cercle et que le
    triplet a été choisi par la règle déterministe (plus petit triplet
    lexicographique dont le triangle contient le centre).
    """
    indices: Tuple[int, ...]
    points: Tuple[AnyPoint, ...]
    rule_applied: bool = False

    def __len__(self) -> int:
        return len(self.indices)


def _make_point(kernel: GeometryKernel, x, y) -> AnyPoint:
    return Point(x, y) if kernel.exact else FloatPoint(x, y)


def make_diameter(a: AnyPoint, b: AnyPoint, kernel: GeometryKernel) -> Circle:
    center = _make_point(kernel, (a.x + b.x) / 2, (a.y + b.y) / 2)
    return Circle(center, kernel.squared_distance(a, b) / 4)


def make_circumcircle(a: AnyPoint, b: AnyPoint, c: AnyPoint, kernel: GeometryKernel) -> Optional[Circle]:
    """Cercle circonscrit, None si les trois points sont alignés"""
    d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y))
    if kernel.sign(d) == 0:
        return None
    na = a.x * a.x + a.y * a.y
    nb = b.x * b.x + b.y * b.y
    nc = c.x * c.x + c.y * c.y
    x = (na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d
    y = (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d
    center = _make_point(kernel, x, y)
    return Circle(center, kernel.squared_distance(center, a))


def _cross(p: AnyPoint, q: AnyPoint, r: AnyPoint):
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def _circle_with_two(points: Sequence[AnyPoint], p: AnyPoint, q: AnyPoint, kernel: GeometryKernel) -> Circle:
    circ = make_diameter(p, q, kernel)
    left: Optional[Circle] = None
    right: Optional[Circle] = None
    for r in points:
        if circ.contains(r, kernel):
            continue
        cross = kernel.sign(_cross(p, q, r))
        c = make_circumcircle(p, q, r, kernel)
        if c is None:
            continue
        if cross > 0 and (left is None or _cross(p, q, c.center) > _cross(p, q, left.center)):
            left = c
        elif cross < 0 and (right is None or _cross(p, q, c.center) < _cross(p, q, right.center)):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left.squared_radius <= right.squared_radius else right


def _circle_with_one(points: Sequence[AnyPoint], p: AnyPoint, kernel: GeometryKernel) -> Circle:
    c = Circle(p, 0 * kernel.squared_distance(p, p))
    for i, q in enumerate(points):
        if not c.contains(q, kernel):
            if kernel.sign(c.squared_radius) == 0:
                c = make_diameter(p, q, kernel)
            else:
                c = _circle_with_two(points[: i + 1], p, q, kernel)
    return c


def minimal_circle(points: Sequence[AnyPoint], kernel: GeometryKernel) -> Circle:
    """Algorithme incrémental à ordre d'insertion fixe (celui de l'entrée)"""
    c: Optional[Circle] = None
    for i, p in enumerate(points):
        if c is None or not c.contains(p, kernel):
            c = _circle_with_one(points[: i + 1], p, kernel)
    return c


def center_in_triangle(center: AnyPoint, a: AnyPoint, b: AnyPoint, c: AnyPoint, kernel: GeometryKernel) -> bool:
    """Centre dans le triangle fermé abc : chaque arc entre points d'appui <= demi-cercle"""
    signs = {kernel.sign(_cross(a, b, center)), kernel.sign(_cross(b, c, center)), kernel.sign(_cross(c, a, center))}
    return not (1 in signs and -1 in signs)


def _support(points: Sequence[AnyPoint], circle: Circle, kernel: GeometryKernel) -> SupportSet:
    boundary = [i for i, p in enumerate(points) if circle.on_boundary(p, kernel)]
    if len(boundary) <= 3:
        for i, j in combinations(boundary, 2):
            midpoint = _make_point(kernel, (points[i].x + points[j].x) / 2, (points[i].y + points[j].y) / 2)
            if kernel.same_point(midpoint, circle.center):
                return SupportSet((i, j), (points[i], points[j]))
        return SupportSet(tuple(boundary), tuple(points[i] for i in boundary))

    for i, j, k in combinations(boundary, 3):
        if center_in_triangle(circle.center, points[i], points[j], points[k], kernel):
            logger.info(f"🔍 {len(boundary)} points cocycliques sur le cercle minimal, "
                        f"triplet retenu par la règle déterministe: {(i, j, k)}")
            return SupportSet((i, j, k), (points[i], points[j], points[k]), rule_applied=True)
    raise AssertionError("Aucun triplet d'appui ne contient le centre du cercle minimal")


def smallest_enclosing_circle(points: Sequence[AnyPoint],
                              kernel: Optional[GeometryKernel] = None) -> Tuple[Circle, SupportSet]:
    """
    Plus petit cercle englobant et ses points d'appui

    Args:
        points: points distincts (au moins un)
        kernel: backend de prédicats (déduit des points par défaut)

    Returns:
        (cercle, ensemble d'appui)
    """
    if not points:
        raise GeometryError("Ensemble de points vide")
    kernel = kernel or kernel_for(*points)
    if not kernel.all_distinct(points):
        raise GeometryError("Points dupliqués")
    circle = minimal_circle(list(points), kernel)
    return circle, _support(points, circle, kernel)


def brute_force_enclosing_circle(points: Sequence[AnyPoint],
                                 kernel: Optional[GeometryKernel] = None) -> Circle:
    """Oracle quadratique/cubique : meilleur cercle diamétral ou circonscrit contenant tout"""
    kernel = kernel or kernel_for(*points)
    if len(points) == 1:
        return Circle(points[0], 0 * kernel.squared_distance(points[0], points[0]))
    candidates: List[Circle] = [make_diameter(a, b, kernel) for a, b in combinations(points, 2)]
    for a, b, c in combinations(points, 3):
        circle = make_circumcircle(a, b, c, kernel)
        if circle is not None:
            candidates.append(circle)
    best: Optional[Circle] = None
    for circle in candidates:
        if all(circle.contains(p, kernel) for p in points):
            if best is None or circle.squared_radius < best.squared_radius:
                best = circle
    return best


def splitting_points(instance) -> SupportSet:
    """Points d'appui du cercle minimal d'une instance convexe, en indices de l'ordre cyclique"""
    _, support = smallest_enclosing_circle(instance.points, instance.kernel)
    return support
