# -*- coding: utf-8 -*-
"""
Calottes d'un ensemble en position convexe : prédicat de calotte,
décomposition par le cercle minimal, témoins et arêtes bonnes/mauvaises
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..utils.system_utils import is_debug
from .distances import DistanceTable, Edge, edge_key
from .enclosing_circle import splitting_points
from .exact_geom import AnyPoint, GeometryError, GeometryKernel, kernel_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConvexInstance:
    """
    Points p_0 … p_{n-1} en position convexe, dans l'ordre cyclique

    Le sens de parcours (horaire ou trigonométrique) est libre ; les indices
    sont pris modulo n.
    """
    points: Tuple[AnyPoint, ...]
    kernel: GeometryKernel = field(default=None)

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise GeometryError("Instance vide")
        if self.kernel is None:
            object.__setattr__(self, "kernel", kernel_for(*points))
        if not self.kernel.all_distinct(points):
            raise GeometryError("Points dupliqués dans l'instance")
        if len(points) >= 3:
            if not self.kernel.is_convex_position(points):
                raise GeometryError("Les points ne sont pas en position convexe")
            if not self.kernel.is_cyclic_order(points):
                raise GeometryError("Les points ne sont pas dans l'ordre cyclique de l'enveloppe")

    @classmethod
    def from_points(cls, points: Sequence[AnyPoint], kernel: Optional[GeometryKernel] = None) -> "ConvexInstance":
        """Réordonne des points quelconques dans l'ordre de l'enveloppe (sens trigonométrique)"""
        kernel = kernel or kernel_for(*points)
        if len(points) < 3:
            return cls(tuple(points), kernel)
        order = kernel.hull_order(points)
        if len(order) != len(points):
            raise GeometryError("Les points ne sont pas en position convexe")
        return cls(tuple(points[i] for i in order), kernel)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def backend(self) -> str:
        return self.kernel.backend

    @cached_property
    def distances(self) -> DistanceTable:
        return DistanceTable(self.points, self.kernel)

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < self.n:
            raise GeometryError(f"Indice {i!r} hors de [0, {self.n})")
        return i

    def offset(self, i: int, j: int) -> int:
        """Nombre de pas en avant de i vers j"""
        return (j - i) % self.n

    def forward_range(self, i: int, j: int) -> List[int]:
        """Indices de i à j inclus en avançant dans l'ordre cyclique"""
        return [(i + k) % self.n for k in range(self.offset(i, j) + 1)]

    def between(self, i: int, x: int, j: int) -> bool:
        """x strictement entre i et j en avançant de i vers j"""
        return 0 < self.offset(i, x) < self.offset(i, j)

    def subset(self, indices: Sequence[int]) -> "ConvexInstance":
        """Sous-instance (ordre cyclique conservé)"""
        return ConvexInstance(tuple(self.points[i] for i in sorted(indices)), self.kernel)


class EdgeClassification(Enum):
    GOOD = "good"
    BAD = "bad"


@dataclass(frozen=True)
class EdgeClass:
    """Arête {i, j} et points de l'instance sur sa médiatrice"""
    edge: Edge
    classification: EdgeClassification
    bisector_points: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Cap:
    """
    Calotte x_1 … x_t d'une instance (indices en ordre cyclique avant)

    Extrémités a = x_1 et b = x_t ; le critère ∠x_1 x_i x_t >= π/2 est
    vérifié à la construction.
    """
    parent: ConvexInstance
    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if len(indices) < 2:
            raise GeometryError("Une calotte a au moins 2 points")
        for i in indices:
            self.parent.check_index(i)
        offsets = [self.parent.offset(indices[0], i) for i in indices]
        if any(b <= a for a, b in zip(offsets, offsets[1:])):
            raise GeometryError(f"Indices {indices} hors de l'ordre cyclique")
        if not is_cap(self.points, self.parent.kernel):
            raise GeometryError(f"Les indices {indices} ne forment pas une calotte")

    @property
    def t(self) -> int:
        return len(self.indices)

    @property
    def a(self) -> int:
        return self.indices[0]

    @property
    def b(self) -> int:
        return self.indices[-1]

    @property
    def points(self) -> List[AnyPoint]:
        return [self.parent.points[i] for i in self.indices]

    @cached_property
    def position(self) -> Dict[int, int]:
        """Indice d'instance -> rang dans la calotte (0 … t-1)"""
        return {index: k for k, index in enumerate(self.indices)}

    @cached_property
    def side(self) -> int:
        """Côté de la droite ab où se trouve la calotte (+1 / -1)"""
        parent = self.parent
        kernel = parent.kernel
        pa, pb = parent.points[self.a], parent.points[self.b]
        for x in parent.forward_range(self.a, self.b)[1:-1]:
            return kernel.side_of_line(pa, pb, parent.points[x])
        for x in range(parent.n):
            if x not in (self.a, self.b):
                return -kernel.side_of_line(pa, pb, parent.points[x])
        return 1

    def edges(self) -> List[Edge]:
        return [edge_key(i, j) for i, j in combinations(self.indices, 2)]


def contiguous_cap(instance: ConvexInstance, start: int, end: int) -> Cap:
    """Calotte formée de tous les points de start à end en avançant"""
    return Cap(instance, tuple(instance.forward_range(start, end)))


def is_cap(points: Sequence[AnyPoint], kernel: Optional[GeometryKernel] = None) -> bool:
    """∠(premier, milieu, dernier) >= π/2 pour chaque point intermédiaire"""
    if len(points) < 2:
        raise GeometryError("is_cap exige au moins 2 points")
    kernel = kernel or kernel_for(*points)
    first, last = points[0], points[-1]
    return all(kernel.angle_not_acute(first, v, last) for v in points[1:-1])


def is_cap_all_triples(points: Sequence[AnyPoint], kernel: Optional[GeometryKernel] = None) -> bool:
    """Critère équivalent : ∠x_i x_j x_k >= π/2 pour tout i < j < k"""
    if len(points) < 2:
        raise GeometryError("is_cap_all_triples exige au moins 2 points")
    kernel = kernel or kernel_for(*points)
    return all(kernel.angle_not_acute(points[i], points[j], points[k])
               for i, j, k in combinations(range(len(points)), 3))


def is_distance_monotone(cap: Cap) -> bool:
    """|x_1 x_2| < |x_1 x_3| < … < |x_1 x_t|"""
    table = cap.parent.distances
    kernel = cap.parent.kernel
    values = [table.squared(cap.a, x) for x in cap.indices[1:]]
    return all(kernel.sign(v - u) > 0 for u, v in zip(values, values[1:]))


def cap_decomposition(instance: ConvexInstance) -> List[Cap]:
    """
    Découpe l'instance en au plus trois calottes par les points d'appui
    du cercle minimal (deux calottes si l'appui est diamétral)
    """
    support = list(splitting_points(instance).indices)
    if len(support) < 2:
        return []
    caps = []
    for k, start in enumerate(support):
        end = support[(k + 1) % len(support)]
        caps.append(contiguous_cap(instance, start, end))
    return caps


def _check_edge(cap: Cap, i: int, j: int):
    if i not in cap.position or j not in cap.position:
        raise GeometryError(f"L'arête {{{i}, {j}}} n'est pas dans la calotte")
    if i == j:
        raise GeometryError("Extrémités d'arête identiques")


def _on_cap_side(cap: Cap, x: int) -> bool:
    parent = cap.parent
    side = parent.kernel.side_of_line(parent.points[cap.a], parent.points[cap.b], parent.points[x])
    return side == 0 or side == cap.side


def scan_witness(cap: Cap, i: int, j: int) -> Optional[int]:
    """Recherche exhaustive sur toute l'instance (contrôle du mode debug)"""
    _check_edge(cap, i, j)
    parent = cap.parent
    pi, pj = parent.points[i], parent.points[j]
    found = [x for x in range(parent.n)
             if x not in (i, j)
             and parent.kernel.on_bisector(parent.points[x], pi, pj)
             and _on_cap_side(cap, x)]
    assert len(found) <= 1, f"Deux témoins pour l'arête {{{i}, {j}}}: {found}"
    return found[0] if found else None


def find_witness(cap: Cap, i: int, j: int) -> Optional[int]:
    """
    Témoin de l'arête {i, j} de la calotte

    Point x de toute l'instance sur la médiatrice de p_i p_j et du côté fermé
    de la droite ab qui contient la calotte. Un témoin est toujours
    strictement entre p_i et p_j dans l'ordre de a vers b.

    Returns:
        indice d'instance du témoin, ou None
    """
    _check_edge(cap, i, j)
    candidates = [x for x in cap.parent.distances.bisector_points(i, j) if _on_cap_side(cap, x)]
    assert len(candidates) <= 1, f"Deux témoins pour l'arête {{{i}, {j}}}: {candidates}"
    witness = candidates[0] if candidates else None

    if witness is not None:
        first, last = (i, j) if cap.position[i] < cap.position[j] else (j, i)
        assert cap.parent.between(first, witness, last), \
            f"Le témoin {witness} n'est pas entre {first} et {last}"
    if is_debug():
        scanned = scan_witness(cap, i, j)
        assert scanned == witness, f"Témoin manqué pour {{{i}, {j}}}: {scanned} != {witness}"
    return witness


def classify_edge(instance: ConvexInstance, i: int, j: int) -> EdgeClass:
    """Bonne ssi au plus un point de l'instance est sur la médiatrice"""
    instance.check_index(i)
    instance.check_index(j)
    if i == j:
        raise GeometryError("Extrémités d'arête identiques")
    apexes = tuple(instance.distances.bisector_points(i, j))
    assert len(apexes) <= 2, f"{len(apexes)} points sur la médiatrice de {{{i}, {j}}}"
    classification = EdgeClassification.GOOD if len(apexes) <= 1 else EdgeClassification.BAD
    return EdgeClass(edge_key(i, j), classification, apexes)


def bad_edges(instance: ConvexInstance) -> List[Edge]:
    bad = []
    for edge, apexes in instance.distances.apex_map.items():
        assert len(apexes) <= 2, f"{len(apexes)} points sur la médiatrice de {edge}"
        if len(apexes) == 2:
            bad.append(edge)
    return sorted(bad)


def good_edge_count(instance: ConvexInstance) -> int:
    n = instance.n
    return n * (n - 1) // 2 - len(bad_edges(instance))


def witnessed_edges_in_cap(cap: Cap) -> int:
    """Arêtes de la calotte dont le témoin existe et appartient à la calotte (<= t²/4)"""
    count = sum(1 for i, j in cap.edges() if find_witness(cap, i, j) in cap.position)
    assert 4 * count <= cap.t * cap.t, f"{count} arêtes témoignées dans une calotte de {cap.t} points"
    return count


def witnessed_edges_in_instance(cap: Cap) -> int:
    """Arêtes de la calotte ayant un témoin quelconque dans l'instance"""
    return sum(1 for i, j in cap.edges() if find_witness(cap, i, j) is not None)


def straddling_witnessed_edges(cap: Cap, split: int) -> int:
    """
    Arêtes entre les t premiers et les t derniers points d'une calotte de
    2t points ayant un témoin dans la calotte ; borne (7t² + t)/8
    """
    if cap.t % 2 != 0:
        raise GeometryError(f"La calotte a un nombre impair de points ({cap.t})")
    if 2 * split != cap.t:
        raise GeometryError(f"Découpage {split} incompatible avec une calotte de {cap.t} points")
    left, right = cap.indices[:split], cap.indices[split:]
    count = sum(1 for i in left for j in right if find_witness(cap, i, j) in cap.position)
    assert 8 * count <= 7 * split * split + split, \
        f"{count} arêtes témoignées à cheval pour t={split}"
    return count


def witness_load(cap: Cap) -> List[int]:
    """Nombre d'arêtes de la calotte témoignées par chaque x_i (au plus min(i-1, t-i))"""
    load = [0] * cap.t
    for i, j in cap.edges():
        witness = find_witness(cap, i, j)
        if witness in cap.position:
            load[cap.position[witness]] += 1
    for k, value in enumerate(load):
        assert value <= min(k, cap.t - 1 - k), f"x_{k + 1} témoigne {value} arêtes"
    return load


@dataclass(frozen=True)
class EdgeRow:
    """Ligne de la table des arêtes (CSV de decompose)"""
    i: int
    j: int
    classification: EdgeClassification
    bisector_points: Tuple[int, ...]
    witness: Optional[int]


def edge_table(instance: ConvexInstance, caps: Optional[List[Cap]] = None) -> List[EdgeRow]:
    """
    Toutes les arêtes {i < j} : classe, points de la médiatrice et témoin
    dans la première calotte de la décomposition contenant les deux extrémités
    """
    caps = cap_decomposition(instance) if caps is None else caps
    rows = []
    for i, j in combinations(range(instance.n), 2):
        edge_class = classify_edge(instance, i, j)
        witness = None
        for cap in caps:
            if i in cap.position and j in cap.position:
                witness = find_witness(cap, i, j)
                break
        rows.append(EdgeRow(i, j, edge_class.classification, edge_class.bisector_points, witness))
    return rows


@dataclass(frozen=True)
class MoserCheck:
    largest_cap: int
    required: int
    endpoint_distinct: int
    holds: bool


def moser_check(instance: ConvexInstance) -> MoserCheck:
    """
    La plus grande calotte a t >= ⌈n/3⌉ + 1 points et son extrémité voit
    au moins t - 1 distances distinctes
    """
    if instance.n < 2:
        raise GeometryError("moser_check exige au moins 2 points")
    caps = cap_decomposition(instance)
    largest = max(caps, key=lambda cap: cap.t)
    required = -(-instance.n // 3) + 1
    endpoint_distinct = instance.distances.distinct_from(largest.a)
    holds = largest.t >= required and endpoint_distinct >= largest.t - 1
    if not holds:
        logger.warning(f"⚠️ Vérification de Moser en échec: calotte {largest.t}, requis {required}")
    return MoserCheck(largest.t, required, endpoint_distinct, holds)
