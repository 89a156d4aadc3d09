# -*- coding: utf-8 -*-
"""
Générateurs d'instances : polygones réguliers, quart de cercle plus centre,
points rationnels cocycliques et instances convexes aléatoires
"""

from typing import Any, Dict, List

from ...analysis.constructions import (
    RANDOM_METHODS,
    quarter_arc_with_center,
    random_convex,
    rational_concyclic,
    rational_ngon,
    regular_ngon,
)
from ...geometry.point_io import parse_rational, point_set_document
from ..tool_support import failure, success

CONSTRUCTION_KINDS = ("ngon", "quarter", "concyclic", "random")


class ConstructionTools:
    def get_tools_schema(self) -> List[Dict[str, Any]]:
        """Retourne le schéma du générateur d'instances"""
        return [
            {
                "type": "function",
                "function": {
                    "name": "construct",
                    "description": "Génère une instance au format JSON d'ensemble de points",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "kind": {
                                "type": "string",
                                "enum": list(CONSTRUCTION_KINDS),
                                "description": "Famille d'instances",
                                "x-positional": True
                            },
                            "n": {
                                "type": "integer",
                                "description": "Nombre de points"
                            },
                            "seed": {
                                "type": "integer",
                                "description": "Graine (random)",
                                "default": 0
                            },
                            "method": {
                                "type": "string",
                                "enum": list(RANDOM_METHODS),
                                "description": "Méthode de tirage (random)",
                                "default": "concyclic"
                            },
                            "exact": {
                                "type": "boolean",
                                "description": "Polygone régulier approché par des points rationnels cocycliques (ngon)"
                            },
                            "max_denominator": {
                                "type": "integer",
                                "description": "Dénominateur maximal des demi-angles (ngon --exact)",
                                "default": 10 ** 6
                            },
                            "parameters": {
                                "type": "string",
                                "description": "Paramètres rationnels séparés par des virgules, ex: '-2,-1,0,1,2' (concyclic)"
                            },
                            "eps": {
                                "type": "number",
                                "description": "Tolérance du backend flottant (ngon, quarter)"
                            }
                        },
                        "required": ["kind"],
                        "additionalProperties": False
                    },
                }
            }
        ]

    def execute_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Exécute un outil avec les arguments donnés"""
        try:
            if tool_name == "construct":
                return self._construct(**arguments)
            else:
                return {"success": False, "error": f"Outil inconnu: {tool_name}", "error_type": "input"}
        except Exception as e:
            return failure(e)

    def _construct(self, kind: str, n: int = None, seed: int = 0, method: str = "concyclic",
                   exact: bool = False, max_denominator: int = 10 ** 6, parameters: str = None,
                   eps: float = None) -> Dict[str, Any]:
        if kind not in CONSTRUCTION_KINDS:
            raise ValueError(f"Famille inconnue: {kind} (choix: {', '.join(CONSTRUCTION_KINDS)})")
        if n is None and not (kind == "concyclic" and parameters):
            raise ValueError(f"--n est requis pour {kind}")

        if kind == "ngon":
            instance = rational_ngon(n, max_denominator) if exact else regular_ngon(n, eps)
        elif kind == "quarter":
            instance = quarter_arc_with_center(n, eps)
        elif kind == "concyclic":
            if parameters:
                values = [parse_rational(v.strip()) for v in parameters.split(",") if v.strip()]
            else:
                values = list(range(-(n // 2), n - n // 2))
            instance = rational_concyclic(values)
        else:
            instance = random_convex(n, seed, method)

        report = point_set_document(instance.points)
        report["generator"] = {"kind": kind, "n": instance.n}
        if kind == "random":
            report["generator"].update({"seed": seed, "method": method})
        return success(report)
