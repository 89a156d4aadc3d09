# -*- coding: utf-8 -*-
"""
Noyau géométrique : points rationnels exacts, distances au carré, orientation,
signe d'angle et appartenance à la médiatrice

Deux backends partagent les mêmes prédicats :
- exact   : coordonnées Fraction, aucun arrondi
- flottant: coordonnées float, comparaisons à eps près (constructions irrationnelles)
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..utils.system_utils import get_default_eps

Rational = Fraction


class GeometryError(ValueError):
    """Entrée géométrique invalide ou dégénérée"""


def to_rational(value) -> Fraction:
    """Convertit un entier, une Fraction ou une chaîne 'p/q' en Fraction"""
    if isinstance(value, bool):
        raise GeometryError(f"Coordonnée invalide: {value!r}")
    if isinstance(value, float):
        raise GeometryError(f"Coordonnée flottante {value!r} refusée par le backend exact")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise GeometryError(f"Coordonnée invalide: {value!r} ({e})")


@dataclass(frozen=True)
class Point:
    """Point à coordonnées rationnelles exactes"""
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_rational(self.x))
        object.__setattr__(self, "y", to_rational(self.y))

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class FloatPoint:
    """Point flottant (polygones réguliers, arcs uniformes)"""
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise GeometryError(f"Coordonnées non finies: ({x}, {y})")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


AnyPoint = Union[Point, FloatPoint]


class Orientation(Enum):
    """Sens du triplet (p, q, r)"""
    CLOCKWISE = "clockwise"
    COUNTER_CLOCKWISE = "counter_clockwise"
    COLLINEAR = "collinear"


def _cross(p: AnyPoint, q: AnyPoint, r: AnyPoint):
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def _dot_at(a: AnyPoint, v: AnyPoint, b: AnyPoint):
    return (a.x - v.x) * (b.x - v.x) + (a.y - v.y) * (b.y - v.y)


class GeometryKernel:
    """Prédicats géométriques pour un backend donné (eps=None : exact)"""

    def __init__(self, eps: Optional[float] = None):
        if eps is not None and not eps > 0:
            raise GeometryError(f"eps doit être > 0 (reçu {eps})")
        self.eps = eps

    @property
    def exact(self) -> bool:
        return self.eps is None

    @property
    def backend(self) -> str:
        return "exact" if self.exact else "float"

    def __repr__(self) -> str:
        return f"GeometryKernel(backend={self.backend}, eps={self.eps})"

    def sign(self, value) -> int:
        """Signe d'une quantité, à eps près pour le backend flottant"""
        if self.eps is not None and abs(value) <= self.eps:
            return 0
        return int(value > 0) - int(value < 0)

    def same_point(self, p: AnyPoint, q: AnyPoint) -> bool:
        if self.exact:
            return p.x == q.x and p.y == q.y
        return self.sign(self.squared_distance(p, q)) == 0

    def same_length(self, d1, d2) -> bool:
        return self.sign(d1 - d2) == 0

    def squared_distance(self, p: AnyPoint, q: AnyPoint):
        dx = p.x - q.x
        dy = p.y - q.y
        return dx * dx + dy * dy

    def orientation(self, p: AnyPoint, q: AnyPoint, r: AnyPoint) -> Orientation:
        s = self.sign(_cross(p, q, r))
        if s > 0:
            return Orientation.COUNTER_CLOCKWISE
        if s < 0:
            return Orientation.CLOCKWISE
        return Orientation.COLLINEAR

    def angle_not_acute(self, a: AnyPoint, v: AnyPoint, b: AnyPoint) -> bool:
        """Vrai ssi l'angle a-v-b vaut au moins π/2 (produit scalaire <= 0)"""
        if self.same_point(v, a) or self.same_point(v, b):
            raise GeometryError("Angle indéfini: le sommet coïncide avec une extrémité")
        return self.sign(_dot_at(a, v, b)) <= 0

    def on_bisector(self, x: AnyPoint, a: AnyPoint, b: AnyPoint) -> bool:
        """Vrai ssi x est équidistant de a et b"""
        if self.same_point(a, b):
            raise GeometryError("Médiatrice indéfinie: a = b")
        return self.same_length(self.squared_distance(x, a), self.squared_distance(x, b))

    def side_of_line(self, a: AnyPoint, b: AnyPoint, x: AnyPoint) -> int:
        """+1 à gauche de la droite orientée ab, -1 à droite, 0 dessus"""
        return self.sign(_cross(a, b, x))

    def all_distinct(self, points: Sequence[AnyPoint]) -> bool:
        if self.exact:
            return len(set(points)) == len(points)
        coords = np.array([[p.x, p.y] for p in points], dtype=float)
        diff = coords[:, None, :] - coords[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        np.fill_diagonal(sq, np.inf)
        return bool(np.all(sq > self.eps))

    def hull_order(self, points: Sequence[AnyPoint]) -> List[int]:
        """Indices de l'enveloppe convexe stricte, sens trigonométrique (chaîne monotone)"""
        order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))
        if len(order) < 3:
            return order

        def build(indices):
            chain: List[int] = []
            for i in indices:
                while len(chain) >= 2 and self.sign(_cross(points[chain[-2]], points[chain[-1]], points[i])) <= 0:
                    chain.pop()
                chain.append(i)
            return chain

        lower = build(order)
        upper = build(reversed(order))
        return lower[:-1] + upper[:-1]

    def is_convex_position(self, points: Sequence[AnyPoint]) -> bool:
        """Vrai ssi les points sont distincts et sommets d'un polygone strictement convexe"""
        if len(points) < 3:
            raise GeometryError("is_convex_position exige au moins 3 points")
        if not self.all_distinct(points):
            return False
        return len(self.hull_order(points)) == len(points)

    def is_cyclic_order(self, points: Sequence[AnyPoint]) -> bool:
        """Vrai ssi l'ordre donné suit le bord de l'enveloppe (à rotation et sens près)"""
        n = len(points)
        if n < 3:
            return True
        hull = self.hull_order(points)
        if len(hull) != n:
            return False
        position = {index: k for k, index in enumerate(hull)}
        steps = {(position[(i + 1) % n] - position[i]) % n for i in range(n)}
        return steps == {1} or steps == {n - 1}

    def is_general_position(self, points: Sequence[AnyPoint]) -> bool:
        """Vrai ssi aucun triplet de points n'est aligné"""
        n = len(points)
        if self.exact:
            for i in range(n):
                directions: Dict[object, int] = {}
                for j in range(n):
                    if j == i:
                        continue
                    dx = points[j].x - points[i].x
                    dy = points[j].y - points[i].y
                    key = ("v",) if dx == 0 else dy / dx
                    if key in directions:
                        return False
                    directions[key] = j
            return True
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if self.orientation(points[i], points[j], points[k]) == Orientation.COLLINEAR:
                        return False
        return True

    def group_values(self, values: Sequence) -> List[List[int]]:
        """
        Regroupe des distances au carré égales

        Exact : égalité stricte. Flottant : un passage en lien simple sur la
        liste triée (deux voisins à moins de eps appartiennent au même groupe).
        Les groupes sont triés par valeur croissante.
        """
        if not values:
            return []
        if self.exact:
            buckets: Dict[Fraction, List[int]] = {}
            for index, value in enumerate(values):
                buckets.setdefault(value, []).append(index)
            return [buckets[key] for key in sorted(buckets)]
        array = np.asarray(values, dtype=float)
        order = np.argsort(array, kind="stable")
        cuts = np.nonzero(np.diff(array[order]) > self.eps)[0] + 1
        return [sorted(chunk.tolist()) for chunk in np.split(order, cuts)]


EXACT_KERNEL = GeometryKernel()


def float_kernel(eps: Optional[float] = None) -> GeometryKernel:
    return GeometryKernel(eps if eps is not None else get_default_eps())


def kernel_for(*points: AnyPoint, eps: Optional[float] = None) -> GeometryKernel:
    """Backend exact si tous les points sont rationnels, flottant sinon"""
    if all(isinstance(p, Point) for p in points):
        return EXACT_KERNEL
    return float_kernel(eps)


def squared_distance(p: AnyPoint, q: AnyPoint):
    """(p.x-q.x)² + (p.y-q.y)², exact pour des points rationnels"""
    return kernel_for(p, q).squared_distance(p, q)


def orientation(p: AnyPoint, q: AnyPoint, r: AnyPoint) -> Orientation:
    return kernel_for(p, q, r).orientation(p, q, r)


def angle_not_acute(a: AnyPoint, v: AnyPoint, b: AnyPoint) -> bool:
    return kernel_for(a, v, b).angle_not_acute(a, v, b)


def on_bisector(x: AnyPoint, a: AnyPoint, b: AnyPoint) -> bool:
    return kernel_for(x, a, b).on_bisector(x, a, b)


def is_convex_position(points: Sequence[AnyPoint]) -> bool:
    return kernel_for(*points).is_convex_position(points)


def is_general_position(points: Sequence[AnyPoint]) -> bool:
    return kernel_for(*points).is_general_position(points)


def hull_order(points: Sequence[AnyPoint]) -> List[int]:
    return kernel_for(*points).hull_order(points)


def translate(p: Point, dx, dy) -> Point:
    return Point(p.x + to_rational(dx), p.y + to_rational(dy))


def scale(p: Point, factor) -> Point:
    factor = to_rational(factor)
    if factor <= 0:
        raise GeometryError("Le facteur d'échelle doit être > 0")
    return Point(p.x * factor, p.y * factor)


def rotate_pythagorean(p: Point, triple: Tuple[int, int, int]) -> Point:
    """Rotation exacte de matrice ((u, -v), (v, u)) / w pour un triplet u² + v² = w²"""
    u, v, w = triple
    if u * u + v * v != w * w or w == 0:
        raise GeometryError(f"{triple} n'est pas un triplet pythagoricien")
    return Point((u * p.x - v * p.y) / w, (v * p.x + u * p.y) / w)


def angle_sort_key(vector: Tuple[Fraction, Fraction]):
    """Clé de tri exacte par angle polaire dans [0, 2π)"""
    return cmp_to_key(_compare_angles)(vector)


def _half(vector) -> int:
    x, y = vector
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _compare_angles(u, v) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)
