# -*- coding: utf-8 -*-
"""
Progressions arithmétiques bicolores de longueur 3 : comptage, recherche
exhaustive du maximum pour petit t et plongement exact sur un arc de cercle
"""

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..geometry.caps import Cap, contiguous_cap
from ..geometry.exact_geom import GeometryError
from ..geometry.point_io import format_rational, parse_rational
from ..utils.system_utils import parallel_map
from .constructions import rotation_orbit_arc

logger = logging.getLogger(__name__)

# C(M, t)² combinaisons au plus
MAX_SEARCH_SPACE = 5_000_000


class SearchSpaceTooLargeError(ValueError):
    """Recherche exhaustive au-delà des limites documentées"""


@dataclass(frozen=True)
class Ap3Instance:
    """t rationnels négatifs rouges et t rationnels positifs bleus"""
    red: Tuple[Fraction, ...]
    blue: Tuple[Fraction, ...]

    def __post_init__(self):
        red = tuple(sorted(Fraction(v) for v in self.red))
        blue = tuple(sorted(Fraction(v) for v in self.blue))
        if len(set(red)) != len(red) or len(set(blue)) != len(blue):
            raise ValueError("Valeurs dupliquées")
        if len(red) != len(blue) or not red:
            raise ValueError(f"|R| = |B| >= 1 requis (reçu {len(red)} et {len(blue)})")
        if any(v >= 0 for v in red) or any(v <= 0 for v in blue):
            raise ValueError("Les rouges doivent être < 0 et les bleus > 0")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)

    @property
    def t(self) -> int:
        return len(self.red)

    def to_dict(self) -> Dict[str, List[str]]:
        return {"red": [format_rational(v) for v in self.red],
                "blue": [format_rational(v) for v in self.blue]}


def parse_ap3_instance(document: Union[str, Dict[str, Any]]) -> Ap3Instance:
    """Lit {"red": [...], "blue": [...]} (entiers ou chaînes 'p/q')"""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise ValueError(f"JSON invalide: {e}")
    if not isinstance(document, dict) or "red" not in document or "blue" not in document:
        raise ValueError("Les clés 'red' et 'blue' sont requises")
    red = [parse_rational(v) for v in document["red"]]
    blue = [parse_rational(v) for v in document["blue"]]
    return Ap3Instance(tuple(red), tuple(blue))


def bichromatic_triples(instance: Ap3Instance) -> List[Tuple[Fraction, Fraction, Fraction]]:
    """Triplets x < y < z de R ∪ B en progression arithmétique, non monochromes"""
    reds = set(instance.red)
    values = sorted(instance.red + instance.blue)
    present = set(values)
    triples = []
    for x, z in combinations(values, 2):
        y = (x + z) / 2
        if y not in present:
            continue
        colors = {v in reds for v in (x, y, z)}
        if len(colors) == 2:
            assert (x in reds) != (z in reds), f"Extrémités de même couleur: {(x, y, z)}"
            triples.append((x, y, z))
    return triples


def count_bichromatic_ap3(instance: Ap3Instance) -> int:
    return len(bichromatic_triples(instance))


def _count_integers(red: Sequence[int], blue: Sequence[int]) -> int:
    present = set(red) | set(blue)
    count = 0
    for x in red:
        for z in blue:
            s = x + z
            if s % 2 == 0 and s // 2 in present:
                count += 1
    return count


def _best_for_red(task: Tuple[Tuple[int, ...], int, int]) -> Tuple[int, Tuple[int, ...], Tuple[int, ...]]:
    red, t, bound = task
    best = (-1, red, ())
    for blue in combinations(range(1, bound + 1), t):
        count = _count_integers(red, blue)
        if count > best[0]:
            best = (count, red, blue)
    return best


@dataclass
class Ap3Search:
    t: int
    bound: int
    best: int
    instance: Ap3Instance
    searched: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "bound": self.bound,
            "best": self.best,
            "instance": self.instance.to_dict(),
            "searched": self.searched,
            "upper_bound": format_rational(Fraction(7 * self.t * self.t + self.t, 8)),
            "three_fifths_t2": format_rational(Fraction(3 * self.t * self.t, 5)),
        }


def max_bichromatic_ap3(t: int, bound: int, workers: int = 1) -> Ap3Search:
    """
    Maximum exhaustif sur R ⊆ {-M … -1}, B ⊆ {1 … M}, |R| = |B| = t

    Un ensemble rationnel fini se ramène à des entiers (dénominateurs
    chassés) sans changer ses progressions ; la recherche sur les entiers
    suffit donc pour M assez grand.
    """
    if t < 1:
        raise ValueError(f"t doit être >= 1 (reçu {t})")
    if bound < t:
        raise ValueError(f"M doit être >= t (reçu M={bound}, t={t})")
    space = comb(bound, t) ** 2
    if space > MAX_SEARCH_SPACE:
        raise SearchSpaceTooLargeError(f"C({bound}, {t})² = {space} combinaisons > {MAX_SEARCH_SPACE}")

    tasks = [(tuple(sorted(-v for v in chosen)), t, bound)
             for chosen in combinations(range(1, bound + 1), t)]
    results = parallel_map(_best_for_red, tasks, workers, description="ap3 max")
    count, red, blue = max(results, key=lambda r: r[0])
    assert 8 * count <= 7 * t * t + t, f"{count} progressions pour t={t}"
    return Ap3Search(t, bound, count, Ap3Instance(red, blue), space)


def integer_normalization(instance: Ap3Instance) -> Tuple[List[int], int]:
    """Valeurs multipliées par le ppcm des dénominateurs (ordre croissant) et ce facteur"""
    values = sorted(instance.red + instance.blue)
    factor = 1
    for v in values:
        factor = factor * v.denominator // math.gcd(factor, v.denominator)
    return [int(v * factor) for v in values], factor


def default_angular_scale(instance: Ap3Instance) -> Fraction:
    """Échelle qui place toutes les valeurs sur un quart de cercle"""
    return Fraction(1, 2) / (instance.blue[-1] - instance.red[0])


def arc_embedding(instance: Ap3Instance, angular_scale: Optional[Fraction] = None) -> Cap:
    """
    Place chaque valeur v au point d'angle ≈ v·échelle·π du cercle (points
    rationnels exactement cocycliques, angles en progression arithmétique
    exacte) : les témoins d'une arête sont les milieux de valeurs.

    La calotte retournée a 2t points ; coupée en t, ses arêtes à cheval
    témoignées correspondent aux progressions bicolores.
    """
    scale = default_angular_scale(instance) if angular_scale is None else Fraction(angular_scale)
    if scale <= 0:
        raise ValueError("L'échelle angulaire doit être > 0")
    if scale * (instance.blue[-1] - instance.red[0]) > 1:
        raise GeometryError(f"Échelle {scale} trop grande: l'arc dépasse un demi-cercle")

    exponents, factor = integer_normalization(instance)
    # angle d'un pas entier : 2·atan(1/K) ≈ échelle·π / facteur
    step_angle = math.pi * float(scale) / factor
    step = max(1, round(1 / math.tan(step_angle / 2)))
    base = exponents[0]
    try:
        arc = rotation_orbit_arc([e - base for e in exponents], step)
    except GeometryError as e:
        raise GeometryError(f"Échelle {scale} trop grande: {e}")
    logger.debug(f"Plongement sur arc: K={step}, {len(exponents)} points")
    return contiguous_cap(arc, 0, arc.n - 1)
