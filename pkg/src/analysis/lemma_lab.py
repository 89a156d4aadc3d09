# -*- coding: utf-8 -*-
"""
Banc d'essai des lemmes sur calottes : échantillonneurs de configurations
satisfaisant les hypothèses et vérificateurs exacts des conclusions
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from ..geometry.caps import Cap, find_witness, is_cap
from ..geometry.exact_geom import (
    EXACT_KERNEL,
    GeometryError,
    Orientation,
    Point,
    rotate_pythagorean,
    scale,
    translate,
)
from ..geometry.point_io import format_rational
from .constructions import SamplerExhaustedError

logger = logging.getLogger(__name__)

PYTHAGOREAN_TRIPLES = ((1, 0, 1), (3, 4, 5), (4, 3, 5), (5, 12, 13), (-8, 15, 17), (20, -21, 29), (0, 1, 1))


class Verdict(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    SKIP = "skip"


@dataclass
class LemmaVerdict:
    """Résultat d'une vérification (SKIP : hypothèses non remplies)"""
    lemma: str
    verdict: Verdict
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"lemma": self.lemma, "verdict": self.verdict.value, "details": self.details}


def _verdict(lemma: str, holds: bool, details: Dict[str, Any]) -> LemmaVerdict:
    if not holds:
        logger.warning(f"⚠️ {lemma}: conclusion violée {details}")
    return LemmaVerdict(lemma, Verdict.HOLDS if holds else Verdict.VIOLATED, details)


def check_monotone(cap: Cap, c: int) -> LemmaVerdict:
    """
    Si x témoigne de ac et y de ab (a, b extrémités de la calotte), alors
    x est strictement entre a et y dans l'ordre cyclique
    """
    if c not in cap.position or c in (cap.a, cap.b):
        raise GeometryError(f"{c} doit être un point intérieur de la calotte")
    x = find_witness(cap, cap.a, c)
    y = find_witness(cap, cap.a, cap.b)
    if x is None or y is None:
        return LemmaVerdict("monotone", Verdict.SKIP, {"witness_ac": x, "witness_ab": y})
    holds = x != y and cap.parent.between(cap.a, x, y)
    return _verdict("monotone", holds, {"c": c, "witness_ac": x, "witness_ab": y})


def check_half_easy(cap: Cap) -> LemmaVerdict:
    """Parmi les 2t-3 arêtes issues d'une extrémité, au moins t-1 sans témoin dans la calotte"""
    a, b = cap.a, cap.b
    edges = [(a, x) for x in cap.indices if x != a]
    edges += [(b, x) for x in cap.indices if x not in (a, b)]
    without = sum(1 for i, j in edges if find_witness(cap, i, j) not in cap.position)
    return _verdict("half_easy", without >= cap.t - 1,
                    {"t": cap.t, "endpoint_edges": len(edges), "without_witness": without})


@dataclass(frozen=True)
class TechConfig:
    """
    Cinq points a, b, c, d, e d'une calotte (sens horaire, convexité faible
    admise) avec c sur la médiatrice de ae et d sur celle de be
    """
    a: Point
    b: Point
    c: Point
    d: Point
    e: Point

    @property
    def points(self) -> Tuple[Point, ...]:
        return (self.a, self.b, self.c, self.d, self.e)

    def to_dict(self) -> Dict[str, List[str]]:
        return {name: [format_rational(p.x), format_rational(p.y)]
                for name, p in zip("abcde", self.points)}


def tech_premises_hold(config: TechConfig) -> bool:
    """Certificats de médiatrice, ordre horaire faible et critère de calotte, en exact"""
    kernel = EXACT_KERNEL
    points = config.points
    if not kernel.all_distinct(points):
        return False
    if not (kernel.on_bisector(config.c, config.a, config.e) and kernel.on_bisector(config.d, config.b, config.e)):
        return False
    for k in range(5):
        turn = kernel.orientation(points[k], points[(k + 1) % 5], points[(k + 2) % 5])
        if turn == Orientation.COUNTER_CLOCKWISE:
            return False
    if not is_cap(points, kernel):
        return False
    distances = [kernel.squared_distance(config.a, p) for p in points[1:]]
    return all(u < v for u, v in zip(distances, distances[1:]))


def _random_similarity(points, rng: random.Random):
    triple = rng.choice(PYTHAGOREAN_TRIPLES)
    factor = Fraction(rng.randint(1, 40), rng.randint(1, 40))
    dx = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
    dy = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
    return [translate(scale(rotate_pythagorean(p, triple), factor), dx, dy) for p in points]


def sample_tech_config(seed: int, max_attempts: int = 2000) -> TechConfig:
    """
    Échantillonneur constructif, déterministe pour une graine

    Repère normalisé a = (-1, 0), e = (1, 0) : c = (0, h) est sur la
    médiatrice de ae, b est pris sur ac (ou légèrement au-dessus), d est
    placé sur la médiatrice de be. Les points rationnels restent exactement
    sur les médiatrices ; une similitude rationnelle aléatoire est appliquée
    ensuite.
    """
    rng = random.Random(seed)
    a, e = Point(-1, 0), Point(1, 0)
    for _ in range(max_attempts):
        h = Fraction(rng.randint(1, 64), 64)
        c = Point(0, h)
        lam = Fraction(rng.randint(1, 63), 64)
        mu = Fraction(0) if rng.random() < 0.125 else Fraction(rng.randint(1, 64), 512)
        # normale extérieure de ac : (-h, 1)
        b = Point(a.x + lam * (c.x - a.x) - mu * h, a.y + lam * (c.y - a.y) + mu)
        m = Point((b.x + e.x) / 2, (b.y + e.y) / 2)
        tau = Fraction(rng.randint(1, 128), 128)
        d = Point(m.x + tau * (b.y - e.y), m.y + tau * (e.x - b.x))
        config = TechConfig(a, b, c, d, e)
        if tech_premises_hold(config):
            moved = TechConfig(*_random_similarity(config.points, rng))
            assert tech_premises_hold(moved), "Similitude non conforme"
            return moved
    raise SamplerExhaustedError(f"Aucune configuration valide en {max_attempts} tirages (graine {seed})")


def check_tech(config: TechConfig) -> LemmaVerdict:
    """|ab| > |cd| strictement ; une égalité compte comme violation"""
    kernel = EXACT_KERNEL
    ab = kernel.squared_distance(config.a, config.b)
    cd = kernel.squared_distance(config.c, config.d)
    details = {"ab2": format_rational(ab), "cd2": format_rational(cd)}
    if not ab > cd:
        details["config"] = config.to_dict()
    return _verdict("tech", ab > cd, details)


def straddling_graph(cap: Cap, split: int) -> List[Tuple[int, int]]:
    """Arêtes à cheval (x_i, i <= t ; x_j, j > t) ayant un témoin dans la calotte"""
    left, right = cap.indices[:split], cap.indices[split:]
    return [(i, j) for i in left for j in right if find_witness(cap, i, j) in cap.position]


def check_sequence_bound(cap: Cap) -> LemmaVerdict:
    """
    Pour une calotte x_1 … x_2t : les segments x_i x_{i+1} (i != t), triés
    par longueur, vérifient d(u_i) + d(v_i) <= t + i pour i <= t (et <= 2t
    au-delà), puis le total est <= (7t² + t)/8
    """
    if cap.t % 2 != 0:
        raise GeometryError(f"La calotte a un nombre impair de points ({cap.t})")
    t = cap.t // 2
    edges = straddling_graph(cap, t)
    degree = {x: 0 for x in cap.indices}
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1

    table = cap.parent.distances
    segments = [(cap.indices[k], cap.indices[k + 1]) for k in range(2 * t - 1) if k != t - 1]
    segments.sort(key=lambda s: table.squared(*s))
    failures = []
    for rank, (u, v) in enumerate(segments, start=1):
        limit = t + rank if rank <= t else 2 * t
        if degree[u] + degree[v] > limit:
            failures.append({"rank": rank, "segment": [u, v], "degree_sum": degree[u] + degree[v], "limit": limit})

    aggregate_holds = 8 * len(edges) <= 7 * t * t + t
    details = {"t": t, "count": len(edges), "bound": format_rational(Fraction(7 * t * t + t, 8)),
               "segment_failures": failures}
    return _verdict("sequence", not failures and aggregate_holds, details)
