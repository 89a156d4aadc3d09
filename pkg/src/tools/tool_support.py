# -*- coding: utf-8 -*-
"""
Fonctions communes aux outils : lecture des fichiers d'entrée et
construction des résultats
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from ..geometry.caps import ConvexInstance
from ..geometry.exact_geom import kernel_for
from ..geometry.point_io import parse_point_set

logger = logging.getLogger(__name__)

STDIN_PATH = "-"


class InputFileError(ValueError):
    """Fichier d'entrée introuvable ou illisible"""


def read_document(path: str) -> str:
    """Contenu d'un fichier texte, ou de l'entrée standard pour '-'"""
    if path == STDIN_PATH:
        return sys.stdin.read()
    file_path = Path(path).expanduser()
    if not file_path.is_file():
        raise InputFileError(f"Fichier introuvable: {path}")
    try:
        return file_path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileError(f"Lecture impossible de {path}: {e}")


def load_instance(path: str, eps: Optional[float] = None) -> ConvexInstance:
    """
    Instance convexe lue depuis un fichier d'ensemble de points

    Des points en position convexe mais donnés dans le désordre sont
    réordonnés selon l'enveloppe.
    """
    points = parse_point_set(read_document(path))
    kernel = kernel_for(*points, eps=eps)
    if len(points) >= 3 and not kernel.is_cyclic_order(points) and kernel.is_convex_position(points):
        logger.warning("⚠️ Points hors de l'ordre cyclique: réordonnés selon l'enveloppe convexe")
        return ConvexInstance.from_points(points, kernel)
    return ConvexInstance(points, kernel)


def success(report: Dict[str, Any], violated: bool = False, **extra) -> Dict[str, Any]:
    result = {"success": True, "report": report, "violated": violated}
    result.update(extra)
    return result


def failure(error: Exception) -> Dict[str, Any]:
    """Erreur d'entrée (ValueError et sous-classes) ou erreur interne (assertion, bug)"""
    if isinstance(error, ValueError):
        return {"success": False, "error": str(error), "error_type": "input"}
    logger.exception("❌ Erreur interne")
    return {"success": False, "error": f"{type(error).__name__}: {error}", "error_type": "internal"}
