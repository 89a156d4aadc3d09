# -*- coding: utf-8 -*-
"""
Géométrie exacte : noyau de prédicats, cercle minimal, calottes et témoins
"""

from .exact_geom import (
    Point,
    FloatPoint,
    GeometryError,
    GeometryKernel,
    Orientation,
    EXACT_KERNEL,
    float_kernel,
    kernel_for,
)
from .point_io import PointSetFormatError, parse_point_set, dump_point_set
from .enclosing_circle import Circle, SupportSet, smallest_enclosing_circle, splitting_points
from .caps import ConvexInstance, Cap, cap_decomposition, find_witness, classify_edge, good_edge_count

__all__ = [
    'Point',
    'FloatPoint',
    'GeometryError',
    'GeometryKernel',
    'Orientation',
    'EXACT_KERNEL',
    'float_kernel',
    'kernel_for',
    'PointSetFormatError',
    'parse_point_set',
    'dump_point_set',
    'Circle',
    'SupportSet',
    'smallest_enclosing_circle',
    'splitting_points',
    'ConvexInstance',
    'Cap',
    'cap_decomposition',
    'find_witness',
    'classify_edge',
    'good_edge_count',
]
