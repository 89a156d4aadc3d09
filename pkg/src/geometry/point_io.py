# -*- coding: utf-8 -*-
"""
Format de fichier des ensembles de points (JSON)

    {"points": [[xn, xd, yn, yd], ...]}      coordonnées rationnelles exactes
    {"points_float": [[x, y], ...]}          coordonnées décimales

Exactement une des deux clés doit être présente.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Union

from .exact_geom import AnyPoint, FloatPoint, GeometryError, Point


class PointSetFormatError(ValueError):
    """Document JSON d'ensemble de points mal formé"""


def parse_point_set(document: Union[str, Dict[str, Any]]) -> List[AnyPoint]:
    """Lit un document (texte ou dictionnaire déjà décodé) et retourne ses points"""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise PointSetFormatError(f"JSON invalide: {e}")
    if not isinstance(document, dict):
        raise PointSetFormatError("Le document doit être un objet JSON")

    keys = [key for key in ("points", "points_float") if key in document]
    if len(keys) != 1:
        raise PointSetFormatError("Exactement une des clés 'points' ou 'points_float' est requise")

    rows = document[keys[0]]
    if not isinstance(rows, list):
        raise PointSetFormatError(f"'{keys[0]}' doit être une liste")

    points: List[AnyPoint] = []
    for index, row in enumerate(rows):
        try:
            if keys[0] == "points":
                points.append(_exact_row(row))
            else:
                points.append(_float_row(row))
        except (GeometryError, TypeError, ZeroDivisionError) as e:
            raise PointSetFormatError(f"Point {index} invalide: {row!r} ({e})")
    return points


def _exact_row(row) -> Point:
    if not isinstance(row, list) or len(row) != 4 or not all(_is_int(v) for v in row):
        raise PointSetFormatError(f"quadruplet d'entiers [xn, xd, yn, yd] attendu, reçu {row!r}")
    xn, xd, yn, yd = row
    if xd == 0 or yd == 0:
        raise PointSetFormatError("dénominateur nul")
    return Point(Fraction(xn, xd), Fraction(yn, yd))


def _float_row(row) -> FloatPoint:
    if not isinstance(row, list) or len(row) != 2 or not all(_is_number(v) for v in row):
        raise PointSetFormatError(f"couple [x, y] attendu, reçu {row!r}")
    return FloatPoint(float(row[0]), float(row[1]))


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def point_set_document(points: Sequence[AnyPoint]) -> Dict[str, Any]:
    """Construit le document JSON d'un ensemble de points (un seul backend)"""
    if all(isinstance(p, Point) for p in points):
        return {"points": [[p.x.numerator, p.x.denominator, p.y.numerator, p.y.denominator]
                           for p in points]}
    if all(isinstance(p, FloatPoint) for p in points):
        return {"points_float": [[p.x, p.y] for p in points]}
    raise PointSetFormatError("Mélange de points exacts et flottants")


def dump_point_set(points: Sequence[AnyPoint]) -> str:
    # repr des float = plus courte écriture décimale relisible à l'identique
    return json.dumps(point_set_document(points), sort_keys=True)


def format_rational(value: Fraction) -> str:
    """Rationnel sérialisé en chaîne 'p/q' (ou 'p' si entier)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Lit 'p/q', un entier ou un décimal ('8.8' -> 44/5) en Fraction exacte"""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PointSetFormatError(f"Rationnel invalide: {text!r} ({e})")
