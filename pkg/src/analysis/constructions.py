# -*- coding: utf-8 -*-
"""
Générateurs d'instances : polygones réguliers, arc de quart de cercle avec
son centre, familles cocycliques rationnelles, instances convexes aléatoires
et oracle combinatoire du recensement sur un arc
"""

import logging
import math
import random
from fractions import Fraction
from math import comb, gcd
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..geometry.caps import ConvexInstance
from ..geometry.exact_geom import (
    EXACT_KERNEL,
    FloatPoint,
    GeometryError,
    Point,
    angle_sort_key,
    float_kernel,
)

logger = logging.getLogger(__name__)

RANDOM_METHODS = ("concyclic", "vector_sum")


class SamplerExhaustedError(ValueError):
    """Budget de tirages épuisé sans configuration valide"""


def regular_ngon(n: int, eps: float = None) -> ConvexInstance:
    """n sommets du polygone régulier inscrit dans le cercle unité (backend flottant)"""
    if n < 3:
        raise GeometryError(f"regular_ngon exige n >= 3 (reçu {n})")
    angles = 2 * np.pi * np.arange(n) / n
    points = tuple(FloatPoint(x, y) for x, y in zip(np.cos(angles), np.sin(angles)))
    return ConvexInstance(points, float_kernel(eps))


def regular_ngon_census_oracle(n: int) -> int:
    """Z du polygone régulier : chaque sommet est l'apex de ⌊(n-1)/2⌋ paires symétriques"""
    if n < 3:
        raise ValueError(f"n doit être >= 3 (reçu {n})")
    return n * ((n - 1) // 2)


def quarter_arc_with_center(n: int, eps: float = None) -> ConvexInstance:
    """
    n-1 points régulièrement espacés sur un quart de cercle (extrémités
    comprises), puis le centre
    """
    if n < 4:
        raise GeometryError(f"quarter_arc_with_center exige n >= 4 (reçu {n})")
    angles = (np.pi / 2) * np.arange(n - 1) / (n - 2)
    points = [FloatPoint(x, y) for x, y in zip(np.cos(angles), np.sin(angles))]
    points.append(FloatPoint(0.0, 0.0))
    return ConvexInstance(tuple(points), float_kernel(eps))


def symbolic_arc_census(m: int, include_center: bool = True, arc=Fraction(1, 2)) -> int:
    """
    Z exact de m points régulièrement espacés sur un arc de arc·π (plus le centre)

    Les cordes ne dépendent que de l'écart d'indices et sont injectives en
    l'écart tant que l'arc est <= π :
    - apex sur l'arc, base sur l'arc : apex au milieu d'un 3-AP d'indices
    - apex au centre : toutes les paires de l'arc
    - base {point de l'arc, centre} : écart g0 dont la corde vaut le rayon
    """
    if m < 2:
        raise ValueError(f"m doit être >= 2 (reçu {m})")
    arc = Fraction(arc)
    if not 0 < arc <= 1:
        raise ValueError(f"L'arc doit être dans (0, 1]·π (reçu {arc})")

    z = sum(min(k, m - 1 - k) for k in range(m))
    if include_center:
        z += comb(m, 2)
        # corde = rayon  <=>  écart · (arc·π / (m-1)) = π/3
        g0 = Fraction(m - 1) / (3 * arc)
        if g0.denominator == 1 and 1 <= g0 <= m - 1:
            z += 2 * (m - int(g0))
    return z


def _unit_circle_point(t: Fraction) -> Point:
    t = Fraction(t)
    d = 1 + t * t
    return Point((1 - t * t) / d, 2 * t / d)


def rational_concyclic(parameters: Sequence) -> ConvexInstance:
    """
    Points ((1-t²)/(1+t²), 2t/(1+t²)) du cercle unité, exactement cocycliques,
    dans l'ordre croissant des paramètres (sens trigonométrique)
    """
    values = sorted(Fraction(t) for t in parameters)
    if len(set(values)) != len(values):
        raise GeometryError("Paramètres dupliqués")
    if len(values) < 3:
        raise GeometryError("rational_concyclic exige au moins 3 paramètres")
    return ConvexInstance(tuple(_unit_circle_point(t) for t in values), EXACT_KERNEL)


def rational_ngon(n: int, max_denominator: int = 10 ** 6) -> ConvexInstance:
    """Approximation rationnelle cocyclique du n-gone régulier (demi-angles arrondis)"""
    if n < 3:
        raise GeometryError(f"rational_ngon exige n >= 3 (reçu {n})")
    parameters = []
    for k in range(n):
        theta = -math.pi + 2 * math.pi * (k + 0.5) / n
        parameters.append(Fraction(math.tan(theta / 2)).limit_denominator(max_denominator))
    if len(set(parameters)) != n:
        raise GeometryError(f"max_denominator={max_denominator} trop petit pour n={n}")
    return rational_concyclic(parameters)


def _gaussian_mul(u: Tuple[int, int], v: Tuple[int, int]) -> Tuple[int, int]:
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _gaussian_pow(u: Tuple[int, int], e: int) -> Tuple[int, int]:
    result = (1, 0)
    while e:
        if e & 1:
            result = _gaussian_mul(result, u)
        u = _gaussian_mul(u, u)
        e >>= 1
    return result


def rotation_orbit_arc(exponents: Sequence[int], step: int) -> ConvexInstance:
    """
    Points g^e du cercle pour g = (K + i)² / (K² + 1), K = step, remis à
    l'échelle en coordonnées entières

    Les angles sont exactement en progression arithmétique (raison
    2·atan(1/K)) : deux cordes sont égales ssi leurs écarts d'exposants le sont.
    L'arc doit tenir dans un demi-cercle.
    """
    if not isinstance(step, int) or step < 1:
        raise GeometryError(f"Le pas K doit être un entier >= 1 (reçu {step!r})")
    values = sorted(set(int(e) for e in exponents))
    if len(values) != len(exponents):
        raise GeometryError("Exposants dupliqués")
    if not values:
        raise GeometryError("Aucun exposant")
    base = values[0]
    span = values[-1] - base

    g = (step * step - 1, 2 * step)
    power = (1, 0)
    for _ in range(span):
        power = _gaussian_mul(power, g)
        if power[1] < 0:
            raise GeometryError(f"Arc supérieur à un demi-cercle (écart {span}, K={step})")

    norm = step * step + 1
    points = []
    for e in values:
        x, y = _gaussian_pow(g, e - base)
        scale_factor = norm ** (span - (e - base))
        points.append(Point(x * scale_factor, y * scale_factor))
    return ConvexInstance(tuple(points), EXACT_KERNEL)


def random_convex(n: int, seed: int, method: str = "concyclic") -> ConvexInstance:
    """
    Instance convexe rationnelle aléatoire, déterministe pour une graine

    Methods:
        concyclic : paramètres rationnels aléatoires distincts sur le cercle unité
        vector_sum: vecteurs de Valtr triés par angle puis cumulés ; les vecteurs
                    parallèles sont inclinés de façon rationnelle (un seul tirage)
    """
    if n < 3:
        raise GeometryError(f"random_convex exige n >= 3 (reçu {n})")
    if method not in RANDOM_METHODS:
        raise ValueError(f"Méthode inconnue: {method} (choix: {', '.join(RANDOM_METHODS)})")
    rng = random.Random(seed)
    if method == "concyclic":
        parameters = set()
        while len(parameters) < n:
            parameters.add(Fraction(rng.randint(-20 * n, 20 * n), rng.randint(1, 16)))
        return rational_concyclic(sorted(parameters))

    vectors = separate_parallel(_valtr_vectors(n, rng))
    vectors.sort(key=angle_sort_key)
    points = []
    x = y = 0
    for dx, dy in vectors:
        points.append(Point(x, y))
        x += dx
        y += dy
    return ConvexInstance(tuple(points), EXACT_KERNEL)


def _chain_components(values: List[int], rng: random.Random) -> List[int]:
    """Répartit des abscisses triées en deux chaînes et retourne les incréments (somme nulle)"""
    low, high = values[0], values[-1]
    last_top = last_bottom = low
    components = []
    for v in values[1:-1]:
        if rng.getrandbits(1):
            components.append(v - last_top)
            last_top = v
        else:
            components.append(last_bottom - v)
            last_bottom = v
    components.append(high - last_top)
    components.append(last_bottom - high)
    return components


def _valtr_vectors(n: int, rng: random.Random) -> List[Tuple[int, int]]:
    """n vecteurs entiers non nuls de somme nulle"""
    bound = 10 * n + 10
    xs = _chain_components(sorted(rng.sample(range(bound), n)), rng)
    ys = _chain_components(sorted(rng.sample(range(bound), n)), rng)
    rng.shuffle(ys)
    return list(zip(xs, ys))


def _direction(vector: Tuple[int, int]) -> Tuple[int, int]:
    g = gcd(vector[0], vector[1])
    return vector[0] // g, vector[1] // g


def has_distinct_directions(vectors: Sequence[Tuple]) -> bool:
    """Vrai si deux vecteurs n'ont jamais la même direction (même sens)"""
    ordered = sorted(vectors, key=angle_sort_key)
    for u, v in zip(ordered, ordered[1:]):
        if u[0] * v[1] - u[1] * v[0] == 0 and u[0] * v[0] + u[1] * v[1] > 0:
            return False
    return True


def separate_parallel(vectors: Sequence[Tuple[int, int]]) -> List[Tuple]:
    """
    Rend les directions deux à deux distinctes sans changer la somme

    Les k vecteurs c_j·u d'une même direction u deviennent
    c_j·u + δ·c_j·(j - λ)·u⊥ avec λ = Σ j·c_j / Σ c_j : la somme du groupe est
    conservée et les pentes δ·(j - λ) sont distinctes. δ est divisé par deux
    tant qu'une direction d'un autre groupe est atteinte.
    """
    groups: Dict[Tuple[int, int], List[int]] = {}
    for i, vector in enumerate(vectors):
        groups.setdefault(_direction(vector), []).append(i)
    parallel = {u: members for u, members in groups.items() if len(members) > 1}
    if not parallel:
        return list(vectors)

    logger.debug(f"{sum(len(m) for m in parallel.values())} vecteurs parallèles inclinés")
    delta = Fraction(1, 2)
    while True:
        result: List[Tuple] = list(vectors)
        for (ux, uy), members in parallel.items():
            weights = [vectors[i][0] // ux if ux else vectors[i][1] // uy for i in members]
            center = Fraction(sum(j * c for j, c in enumerate(weights)), sum(weights))
            for j, (i, c) in enumerate(zip(members, weights)):
                tilt = delta * c * (j - center)
                result[i] = (vectors[i][0] - tilt * uy, vectors[i][1] + tilt * ux)
        if has_distinct_directions(result):
            return result
        delta /= 2
