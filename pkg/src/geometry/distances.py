# -*- coding: utf-8 -*-
"""
Tables de distances par sommet : cercles concentriques autour de chaque point,
incidences (sommet, base) et statistiques de distances distinctes
"""

from functools import cached_property
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .exact_geom import AnyPoint, GeometryKernel

Edge = Tuple[int, int]


def edge_key(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


class DistanceTable:
    """Distances au carré d'un ensemble de points, groupées par sommet"""

    def __init__(self, points: Sequence[AnyPoint], kernel: GeometryKernel):
        self.points = list(points)
        self.kernel = kernel
        self.n = len(self.points)
        if kernel.exact:
            self._matrix = self._exact_matrix()
        else:
            coords = np.array([[p.x, p.y] for p in self.points], dtype=float).reshape(-1, 2)
            diff = coords[:, None, :] - coords[None, :, :]
            self._matrix = np.einsum("ijk,ijk->ij", diff, diff).tolist()

    def _exact_matrix(self) -> List[List]:
        n = self.n
        matrix = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                value = self.kernel.squared_distance(self.points[i], self.points[j])
                matrix[i][j] = value
                matrix[j][i] = value
        return matrix

    def squared(self, i: int, j: int):
        return self._matrix[i][j]

    @cached_property
    def apex_groups(self) -> List[List[List[int]]]:
        """Pour chaque sommet p : les autres points groupés par distance à p (croissante)"""
        groups = []
        for p in range(self.n):
            others = [q for q in range(self.n) if q != p]
            values = [self._matrix[p][q] for q in others]
            groups.append([[others[k] for k in group] for group in self.kernel.group_values(values)])
        return groups

    def distinct_from(self, p: int) -> int:
        return len(self.apex_groups[p])

    @cached_property
    def apex_map(self) -> Dict[Edge, List[int]]:
        """Arête {i, j} -> sommets p avec |pi| = |pj| (points de la médiatrice)"""
        table: Dict[Edge, List[int]] = {}
        for p, groups in enumerate(self.apex_groups):
            for group in groups:
                for a in range(len(group)):
                    for b in range(a + 1, len(group)):
                        table.setdefault(edge_key(group[a], group[b]), []).append(p)
        for apexes in table.values():
            apexes.sort()
        return table

    def bisector_points(self, i: int, j: int) -> List[int]:
        return list(self.apex_map.get(edge_key(i, j), []))

    @cached_property
    def isosceles_count(self) -> int:
        """Z : nombre d'incidences (sommet, base non ordonnée) à côtés égaux"""
        return sum(len(g) * (len(g) - 1) // 2 for groups in self.apex_groups for g in groups)

    @cached_property
    def total_distinct(self) -> int:
        values = [self._matrix[i][j] for i in range(self.n) for j in range(i + 1, self.n)]
        return len(self.kernel.group_values(values))

    @cached_property
    def equilateral_triples(self) -> int:
        found = 0
        for (i, j), apexes in self.apex_map.items():
            for p in apexes:
                if self.kernel.same_length(self._matrix[i][j], self._matrix[p][i]):
                    found += 1
        # chaque triangle équilatéral est vu une fois par côté
        return found // 3
