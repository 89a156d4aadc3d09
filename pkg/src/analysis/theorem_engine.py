# -*- coding: utf-8 -*-
"""
Procédure d'épluchage par cercles minimaux, classification Cas 1 / Cas 2,
coefficients des deux bornes et optimisation exacte des paramètres (a, d)
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy

from ..geometry.caps import ConvexInstance, EdgeClassification, classify_edge
from ..geometry.enclosing_circle import splitting_points
from ..geometry.exact_geom import GeometryError
from ..geometry.point_io import format_rational
from ..utils.system_utils import parallel_map
from .census import improvement_coefficient

logger = logging.getLogger(__name__)

DEFAULT_A = Fraction(5, 44)
DEFAULT_D = Fraction(1, 1132)
TARGET_COEFFICIENT = 1 / Fraction("11.981")
DENOMINATOR_LIMIT = 10 ** 12


class Variant(Enum):
    """Terme intra-calottes du Cas 1 : (n-dn)²/12 (affichage final) ou (n-3dn)²/12 (décompte du texte)"""
    FINAL = "final"
    CONSERVATIVE = "conservative"


class Case(Enum):
    CASE1 = "case1"
    CASE2 = "case2"


def _unit_parameter(name: str, value) -> Fraction:
    value = Fraction(value)
    if not 0 <= value <= 1:
        raise ValueError(f"{name} doit être dans [0, 1] (reçu {value})")
    return value


def circular_distance(i: int, j: int, n: int) -> int:
    """min((j - i) mod n, (i - j) mod n)"""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"Indices ({i}, {j}) hors de [0, {n})")
    return min((j - i) % n, (i - j) % n)


@dataclass(frozen=True)
class StripStep:
    """Étape i : taille de P_i et points d'appui (x, y, z) en indices de l'instance d'origine"""
    step: int
    size: int
    support: Tuple[int, int, int]

    def to_dict(self) -> Dict[str, Any]:
        return {"step": self.step, "size": self.size, "support": list(self.support)}


@dataclass
class StripTrace:
    n: int
    a: Fraction
    d: Fraction
    steps: List[StripStep] = field(default_factory=list)
    case: Case = Case.CASE2
    case_step: Optional[int] = None
    far_point: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "a": format_rational(self.a),
            "d": format_rational(self.d),
            "steps": [s.to_dict() for s in self.steps],
            "case": self.case.value,
            "case_step": self.case_step,
            "far_point": self.far_point,
        }


def _far_from_origin(point: int, origin: Sequence[int], n: int, a: Fraction) -> bool:
    return all(circular_distance(point, o, n) >= a * n for o in origin)


def strip_procedure(instance: ConvexInstance, a, d) -> StripTrace:
    """
    ⌊dn⌋ étapes : à l'étape i, retirer de P_i les points d'appui x_i, y_i, z_i
    de son cercle minimal (x_i = y_i si l'appui n'a que deux points)

    S'arrête à la première étape i > 1 dont un point d'appui est à distance
    circulaire >= an de x_1, y_1 et z_1 (Cas 1) ; sinon Cas 2.
    """
    a = _unit_parameter("a", a)
    d = _unit_parameter("d", d)
    if not (0 < a < 1 and 0 < d < 1):
        raise ValueError("a et d doivent être dans ]0, 1[")
    if not instance.kernel.exact:
        raise GeometryError("strip_procedure exige le backend exact")
    n = instance.n
    total_steps = math.floor(d * n)
    if total_steps < 1:
        raise GeometryError(f"Instance trop petite: ⌊d·n⌋ = 0 (n={n}, d={d})")

    trace = StripTrace(n=n, a=a, d=d)
    alive = list(range(n))
    for step in range(1, total_steps + 1):
        if not alive:
            logger.info(f"🔍 Instance épuisée à l'étape {step}")
            break
        current = instance.subset(alive)
        local = splitting_points(current).indices
        support = [alive[k] for k in local]
        if len(support) == 1:
            triple = (support[0], support[0], support[0])
        elif len(support) == 2:
            triple = (support[0], support[0], support[1])
        else:
            triple = tuple(support)
        trace.steps.append(StripStep(step, len(alive), triple))

        if step > 1:
            origin = trace.steps[0].support
            for point in triple:
                if _far_from_origin(point, origin, n, a):
                    trace.case = Case.CASE1
                    trace.case_step = step
                    trace.far_point = point
                    return trace

        removed = set(triple)
        alive = [i for i in alive if i not in removed]
    return trace


def classify_trace(trace: StripTrace) -> Tuple[Case, Optional[int], Optional[int]]:
    """Re-parcours indépendant de la trace : (cas, étape, point éloigné)"""
    if not trace.steps:
        raise ValueError("Trace vide")
    origin = trace.steps[0].support
    for step in trace.steps[1:]:
        for point in step.support:
            if _far_from_origin(point, origin, trace.n, trace.a):
                return Case.CASE1, step.step, point
    return Case.CASE2, None, None


def straddling_good_edges(instance: ConvexInstance, trace: StripTrace) -> Optional[int]:
    """
    Cas 1 : arêtes bonnes de P entre points à distance circulaire <= an du
    point éloigné x_i, encore présents dans P_i, et situés dans deux
    calottes différentes de la partition de P_i par x_i, y_i, z_i
    (None en Cas 2)
    """
    if trace.case != Case.CASE1:
        return None
    n, a = trace.n, trace.a
    removed = set()
    for step in trace.steps[:-1]:
        removed.update(step.support)
    alive = [i for i in range(n) if i not in removed]
    splitters = sorted(set(trace.steps[-1].support))

    # calotte de chaque point de P_i (les points d'appui appartiennent à deux calottes)
    membership: Dict[int, set] = {i: set() for i in alive}
    position = {index: k for k, index in enumerate(alive)}
    for k, start in enumerate(splitters):
        end = splitters[(k + 1) % len(splitters)]
        length = (position[end] - position[start]) % len(alive)
        for step in range(length + 1):
            membership[alive[(position[start] + step) % len(alive)]].add(k)

    near = [i for i in alive if circular_distance(i, trace.far_point, n) <= a * n]
    count = 0
    for u, v in combinations(near, 2):
        if membership[u] & membership[v]:
            continue
        if classify_edge(instance, u, v).classification == EdgeClassification.GOOD:
            count += 1
    return count


def case1_coefficient(a, d, variant: Variant = Variant.FINAL) -> Fraction:
    """Coefficient de n² du Cas 1"""
    a = _unit_parameter("a", a)
    d = _unit_parameter("d", d)
    shrink = d if variant == Variant.FINAL else 3 * d
    return (1 - shrink) ** 2 / 12 + a * a / 8 - Fraction(3, 2) * d


def case2_coefficient(a, d) -> Fraction:
    """Coefficient de n² du Cas 2 : d - 3d² + (1-3d)²/12 - 3da"""
    a = _unit_parameter("a", a)
    d = _unit_parameter("d", d)
    value = d - 3 * d * d + (1 - 3 * d) ** 2 / 12 - 3 * d * a
    assert value == Fraction(1, 12) + d / 2 - Fraction(9, 4) * d * d - 3 * d * a
    return value


def verify_case2_simplification() -> bool:
    """Identité symbolique d - 3d² + (1-3d)²/12 = 1/12 + d/2 - 9d²/4"""
    d = sympy.Symbol("d")
    lhs = d - 3 * d ** 2 + (1 - 3 * d) ** 2 / sympy.Integer(12)
    rhs = sympy.Rational(1, 12) + d / 2 - sympy.Rational(9, 4) * d ** 2
    return sympy.expand(lhs - rhs) == 0


def case2_finite_sum(n: int, d) -> int:
    """Σ_{i=1}^{⌊dn⌋} (n - 6i), exact"""
    k = math.floor(Fraction(d) * n)
    return k * n - 3 * k * (k + 1)


@dataclass
class BoundReport:
    a: Fraction
    d: Fraction
    variant: Variant
    case1_coefficient: Fraction
    case2_coefficient: Fraction

    @property
    def min_coefficient(self) -> Fraction:
        return min(self.case1_coefficient, self.case2_coefficient)

    @property
    def certified(self) -> bool:
        return self.min_coefficient >= TARGET_COEFFICIENT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": format_rational(self.a),
            "d": format_rational(self.d),
            "variant": self.variant.value,
            "case1_coefficient": format_rational(self.case1_coefficient),
            "case2_coefficient": format_rational(self.case2_coefficient),
            "min_coefficient": format_rational(self.min_coefficient),
            "min_coefficient_approx": f"{float(self.min_coefficient):.10f}",
            "target": format_rational(TARGET_COEFFICIENT),
            "certified": self.certified,
        }


def bound_report(a, d, variant: Variant = Variant.FINAL) -> BoundReport:
    a, d = Fraction(a), Fraction(d)
    return BoundReport(a, d, variant, case1_coefficient(a, d, variant), case2_coefficient(a, d))


def _objective(a: Fraction, d: Fraction) -> Fraction:
    return min(case1_coefficient(a, d, Variant.FINAL), case2_coefficient(a, d))


def _best_d_for(a: Fraction, iterations: int = 80) -> Tuple[Fraction, Fraction, Fraction]:
    """Recherche ternaire en d (Cas 1 décroissant, Cas 2 concave : le minimum est quasi-concave)"""
    low, high = Fraction(0), Fraction(1, 2)
    for _ in range(iterations):
        m1 = (low + (high - low) / 3).limit_denominator(DENOMINATOR_LIMIT)
        m2 = (high - (high - low) / 3).limit_denominator(DENOMINATOR_LIMIT)
        if _objective(a, m1) < _objective(a, m2):
            low = m1
        else:
            high = m2
    d = ((low + high) / 2).limit_denominator(DENOMINATOR_LIMIT)
    return a, d, _objective(a, d)


@dataclass
class OptimizationResult:
    a: Fraction
    d: Fraction
    min_coefficient: Fraction
    resolution: int
    default_report: BoundReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": format_rational(self.a),
            "d": format_rational(self.d),
            "min_coefficient": format_rational(self.min_coefficient),
            "min_coefficient_approx": f"{float(self.min_coefficient):.10f}",
            "resolution": self.resolution,
            "dominates_default_point": self.min_coefficient >= self.default_report.min_coefficient,
            "default_point": self.default_report.to_dict(),
        }


def optimize_parameters(resolution: int = 100, workers: int = 1) -> OptimizationResult:
    """
    Maximise min(Cas 1 final, Cas 2) : grille a = i/R, recherche ternaire
    en d pour chaque a, puis raffinement local de pas 1/R² autour du meilleur a.
    Le point (5/44, 1/1132) fait partie des candidats.
    """
    if resolution < 1:
        raise ValueError("resolution doit être >= 1")
    reference = bound_report(DEFAULT_A, DEFAULT_D)
    assert reference.certified, "Les constantes publiées ne certifient pas 1/11.981"

    grid = [Fraction(i, resolution) for i in range(1, resolution)] or [Fraction(1, 2)]
    candidates = parallel_map(_best_d_for, grid, workers, description="optimize")
    best = max(candidates, key=lambda c: c[2])

    fine = [best[0] + Fraction(k, resolution * resolution) for k in range(-resolution, resolution + 1)]
    fine = [a for a in fine if 0 < a < 1]
    candidates = parallel_map(_best_d_for, fine, workers, description="refine")
    candidates.append((DEFAULT_A, DEFAULT_D, reference.min_coefficient))
    a, d, value = max(candidates + [best], key=lambda c: c[2])
    logger.info(f"✅ Optimum: a={a}, d={d}, min={float(value):.8f}")
    return OptimizationResult(a, d, value, resolution, reference)


@dataclass(frozen=True)
class EpsilonChain:
    alpha: Fraction
    coefficient: Fraction
    excess: Fraction

    @property
    def unreduced_coefficient(self) -> str:
        """(2 - N/D)/3 écrit (2D - N)/(3D), sans simplification"""
        n, d = self.alpha.numerator, self.alpha.denominator
        return f"{2 * d - n}/{3 * d}"

    def summary(self) -> str:
        return (f"alpha={format_rational(self.alpha)}, coeff={self.unreduced_coefficient}, "
                f"excess={format_rational(self.excess)}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alpha": format_rational(self.alpha),
            "coefficient": format_rational(self.coefficient),
            "coefficient_unreduced": self.unreduced_coefficient,
            "excess": format_rational(self.excess),
            "excess_over_1_22701": self.excess > Fraction(1, 22701),
            "excess_over_1_23000": self.excess > Fraction(1, 23000),
        }


def epsilon_chain() -> EpsilonChain:
    """alpha = 1 - 1/11.981, coefficient (2 - alpha)/3 et excédent sur 13/36"""
    alpha = 1 - TARGET_COEFFICIENT
    coefficient = improvement_coefficient(alpha)
    excess = coefficient - Fraction(13, 36)
    assert excess >= Fraction(1, 22702), f"Excédent {excess} < 1/22702"
    assert excess > Fraction(1, 23000), f"Excédent {excess} <= 1/23000"
    return EpsilonChain(alpha, coefficient, excess)
