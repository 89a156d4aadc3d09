# -*- coding: utf-8 -*-
"""
Progressions arithmétiques bicolores : comptage, maximum exhaustif et
plongement sur un arc de cercle
"""

from typing import Any, Dict, List

from ...analysis.ap3 import (
    arc_embedding,
    bichromatic_triples,
    max_bichromatic_ap3,
    parse_ap3_instance,
)
from ...geometry.caps import straddling_witnessed_edges
from ...geometry.point_io import format_rational, parse_rational, point_set_document
from ...utils.system_utils import get_worker_count
from ..tool_support import failure, read_document, success

AP3_ACTIONS = ("count", "max", "embed")


class Ap3Tools:
    def get_tools_schema(self) -> List[Dict[str, Any]]:
        """Retourne le schéma de l'outil ap3"""
        return [
            {
                "type": "function",
                "function": {
                    "name": "ap3",
                    "description": "Progressions de longueur 3 non monochromes entre t rouges négatifs et t bleus positifs",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "action": {
                                "type": "string",
                                "enum": list(AP3_ACTIONS),
                                "description": "count: compter, max: maximum exhaustif, embed: plongement sur un arc",
                                "x-positional": True
                            },
                            "file": {
                                "type": "string",
                                "description": "Fichier JSON {\"red\": [...], \"blue\": [...]} (count, embed ; '-' pour l'entrée standard)",
                                "x-positional": True
                            },
                            "t": {
                                "type": "integer",
                                "description": "Nombre de points de chaque couleur (max)"
                            },
                            "bound": {
                                "type": "integer",
                                "description": "Borne M des valeurs entières |v| <= M (max)"
                            },
                            "scale": {
                                "type": "string",
                                "description": "Échelle angulaire rationnelle, en demi-tours par unité (embed)"
                            },
                            "threads": {
                                "type": "integer",
                                "description": "Nombre de processus (max, plafonné par CDL_THREADS)"
                            }
                        },
                        "required": ["action"],
                        "additionalProperties": False
                    },
                }
            }
        ]

    def execute_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Exécute un outil avec les arguments donnés"""
        try:
            if tool_name == "ap3":
                return self._ap3(**arguments)
            else:
                return {"success": False, "error": f"Outil inconnu: {tool_name}", "error_type": "input"}
        except Exception as e:
            return failure(e)

    def _ap3(self, action: str, file: str = None, t: int = None, bound: int = None,
             scale: str = None, threads: int = None) -> Dict[str, Any]:
        if action == "max":
            if t is None or bound is None:
                raise ValueError("ap3 max exige --t et --bound")
            return success(max_bichromatic_ap3(t, bound, get_worker_count(threads)).to_dict())

        if action not in AP3_ACTIONS:
            raise ValueError(f"Action inconnue: {action} (choix: {', '.join(AP3_ACTIONS)})")
        if file is None:
            raise ValueError(f"ap3 {action} exige un fichier d'instance")
        instance = parse_ap3_instance(read_document(file))
        triples = bichromatic_triples(instance)

        if action == "count":
            report = {
                "instance": instance.to_dict(),
                "t": instance.t,
                "count": len(triples),
                "triples": [[format_rational(v) for v in triple] for triple in triples],
            }
            return success(report)

        cap = arc_embedding(instance, parse_rational(scale) if scale else None)
        straddling = straddling_witnessed_edges(cap, instance.t)
        report = {
            "instance": instance.to_dict(),
            "t": instance.t,
            "count": len(triples),
            "straddling_witnessed_edges": straddling,
            "counts_match": straddling == len(triples),
            "points": point_set_document(cap.points)["points"],
        }
        return success(report, violated=straddling != len(triples))
