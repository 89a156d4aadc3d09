# -*- coding: utf-8 -*-
"""
Recensement des triangles isocèles Z(P), statistiques de distances distinctes
et chaîne d'inégalités du double comptage
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional

from ..geometry.caps import ConvexInstance, good_edge_count
from ..geometry.exact_geom import GeometryError

logger = logging.getLogger(__name__)


@dataclass
class CensusReport:
    """Statistiques d'une instance (sérialisables en JSON)"""
    n: int
    z: int
    per_point_distinct: List[int]
    max_point_distinct: int
    total_distinct: int
    good_edges: int
    equilateral_triples: int
    backend: str
    eps: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def isosceles_census(instance: ConvexInstance) -> int:
    """Z(P) : incidences (sommet, base non ordonnée) à jambes égales"""
    return instance.distances.isosceles_count


def naive_isosceles_census(instance: ConvexInstance) -> int:
    """Oracle en triple boucle, sans la table de distances"""
    kernel = instance.kernel
    points = instance.points
    z = 0
    for p in range(instance.n):
        others = [q for q in range(instance.n) if q != p]
        for a, b in combinations(others, 2):
            if kernel.same_length(kernel.squared_distance(points[p], points[a]),
                                  kernel.squared_distance(points[p], points[b])):
                z += 1
    return z


def distinct_distances_from(instance: ConvexInstance, p: int) -> int:
    instance.check_index(p)
    return instance.distances.distinct_from(p)


def max_point_distinct(instance: ConvexInstance) -> int:
    """Statistique f : max sur p du nombre de distances distinctes depuis p"""
    return max(instance.distances.distinct_from(p) for p in range(instance.n))


def total_distinct(instance: ConvexInstance) -> int:
    """Statistique g, contrôlée contre la borne d'Altman ⌊n/2⌋"""
    g = instance.distances.total_distinct
    assert g >= instance.n // 2, f"Borne d'Altman violée: {g} < {instance.n // 2}"
    return g


def census_report(instance: ConvexInstance) -> CensusReport:
    n = instance.n
    per_point = [instance.distances.distinct_from(p) for p in range(n)]
    report = CensusReport(
        n=n,
        z=isosceles_census(instance),
        per_point_distinct=per_point,
        max_point_distinct=max(per_point),
        total_distinct=total_distinct(instance),
        good_edges=good_edge_count(instance),
        equilateral_triples=instance.distances.equilateral_triples,
        backend=instance.backend,
        eps=instance.kernel.eps,
    )
    assert report.max_point_distinct <= report.total_distinct <= comb(n, 2)
    return report


def balanced_pair_bound(total: int, parts: int) -> int:
    """min Σ C(m_i, 2) sur les partitions de total en parts entiers (tailles équilibrées)"""
    if parts <= 0:
        return 0
    q, r = divmod(total, parts)
    return r * comb(q + 1, 2) + (parts - r) * comb(q, 2)


@dataclass
class SzemerediVerdict:
    """Double comptage : Σ_p borne équilibrée <= Z(P) <= 2·C(n, 2)"""
    z: int
    lower_bound: int
    upper_bound: int
    per_point_margins: List[int] = field(default_factory=list)
    holds: bool = True

    @property
    def lower_margin(self) -> int:
        return self.z - self.lower_bound

    @property
    def upper_margin(self) -> int:
        return self.upper_bound - self.z

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["lower_margin"] = self.lower_margin
        data["upper_margin"] = self.upper_margin
        return data


def szemeredi_check(instance: ConvexInstance) -> SzemerediVerdict:
    """
    Pour chaque point p dont les n-1 autres se répartissent sur k_p cercles
    concentriques de tailles m_1 … m_k : Σ C(m_i, 2) >= borne équilibrée
    (Jensen sur la partition entière), puis globalement Z(P) <= 2·C(n, 2)
    """
    if not instance.kernel.is_general_position(instance.points):
        raise GeometryError("szemeredi_check exige des points en position générale")
    n = instance.n
    margins = []
    lower = 0
    for groups in instance.distances.apex_groups:
        pairs = sum(comb(len(g), 2) for g in groups)
        bound = balanced_pair_bound(n - 1, len(groups))
        margins.append(pairs - bound)
        lower += bound
    z = isosceles_census(instance)
    verdict = SzemerediVerdict(z=z, lower_bound=lower, upper_bound=2 * comb(n, 2), per_point_margins=margins)
    verdict.holds = all(m >= 0 for m in margins) and lower <= z <= verdict.upper_bound
    if not verdict.holds:
        logger.warning(f"⚠️ Double comptage violé: {verdict.to_dict()}")
    return verdict


@dataclass
class DeductionVerdict:
    """Z(P) <= 2·C(n, 2) - #arêtes bonnes"""
    z: int
    good_edges: int
    bound: int
    holds: bool

    @property
    def slack(self) -> int:
        return self.bound - self.z

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["slack"] = self.slack
        return data


def good_edge_deduction(instance: ConvexInstance) -> DeductionVerdict:
    z = isosceles_census(instance)
    good = good_edge_count(instance)
    bound = 2 * comb(instance.n, 2) - good
    verdict = DeductionVerdict(z=z, good_edges=good, bound=bound, holds=z <= bound)
    if not verdict.holds:
        logger.warning(f"⚠️ Déduction par arêtes bonnes violée: Z={z} > {bound}")
    return verdict


def improvement_coefficient(alpha) -> Fraction:
    """(2 - α)/3 : coefficient de n garanti lorsque Z(P) <= αn²"""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha doit être dans [0, 1] (reçu {alpha})")
    return (2 - alpha) / 3


def improvement_lower_bound(n: int, z: int) -> Fraction:
    """Plus petit k compatible avec Z(P) >= n(2(n-1) - 3k)"""
    if n < 1:
        raise ValueError("n doit être >= 1")
    return (2 * (n - 1) - Fraction(z, n)) / 3


def dumitrescu_bound(n: int) -> int:
    return -(-(13 * n - 6) // 36)


def moser_bound(n: int) -> int:
    return -(-n // 3)
