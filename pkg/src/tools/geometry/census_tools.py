# -*- coding: utf-8 -*-
"""
Recensement des triangles isocèles et décomposition en calottes d'une instance
"""

import csv
import io
from dataclasses import asdict
from typing import Any, Dict, List

from ...analysis.census import (
    census_report,
    dumitrescu_bound,
    good_edge_deduction,
    improvement_lower_bound,
    moser_bound,
    szemeredi_check,
)
from ...geometry.caps import (
    EdgeRow,
    bad_edges,
    cap_decomposition,
    edge_table,
    good_edge_count,
    moser_check,
    witness_load,
    witnessed_edges_in_cap,
    witnessed_edges_in_instance,
)
from ...geometry.enclosing_circle import splitting_points
from ...geometry.point_io import format_rational
from ..tool_support import failure, load_instance, success

EDGE_TABLE_HEADER = ("i", "j", "class", "bisector_points", "witness_index")


class CensusTools:
    def get_tools_schema(self) -> List[Dict[str, Any]]:
        """Retourne les schémas des outils de recensement"""
        file_property = {
            "type": "string",
            "description": "Fichier d'ensemble de points JSON ('-' pour l'entrée standard)",
            "x-positional": True
        }
        eps_property = {
            "type": "number",
            "description": "Tolérance du backend flottant (défaut: CDL_EPS)"
        }
        return [
            {
                "type": "function",
                "function": {
                    "name": "census",
                    "description": "Rapport de recensement: Z(P), distances distinctes, arêtes bonnes et bornes",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "file": file_property,
                            "eps": eps_property
                        },
                        "required": ["file"],
                        "additionalProperties": False
                    },
                }
            },
            {
                "type": "function",
                "function": {
                    "name": "decompose",
                    "description": "Points d'appui, calottes, témoins et table des arêtes (CSV par défaut)",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "file": file_property,
                            "eps": eps_property
                        },
                        "required": ["file"],
                        "additionalProperties": False
                    },
                }
            }
        ]

    def execute_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Exécute un outil avec les arguments donnés"""
        try:
            method_map = {
                "census": self._census,
                "decompose": self._decompose
            }

            if tool_name in method_map:
                return method_map[tool_name](**arguments)
            else:
                return {"success": False, "error": f"Outil inconnu: {tool_name}", "error_type": "input"}
        except Exception as e:
            return failure(e)

    def _census(self, file: str, eps: float = None) -> Dict[str, Any]:
        instance = load_instance(file, eps)
        census = census_report(instance)
        report = census.to_dict()

        deduction = good_edge_deduction(instance)
        report["good_edge_deduction"] = deduction.to_dict()
        szemeredi = None
        if instance.kernel.is_general_position(instance.points):
            szemeredi = szemeredi_check(instance)
        report["szemeredi"] = szemeredi.to_dict() if szemeredi else None
        report["improvement_lower_bound"] = format_rational(improvement_lower_bound(census.n, census.z))
        report["dumitrescu_bound"] = dumitrescu_bound(census.n)
        report["moser_bound"] = moser_bound(census.n)

        violated = instance.kernel.exact and (not deduction.holds or (szemeredi is not None and not szemeredi.holds))
        return success(report, violated)

    def _decompose(self, file: str, eps: float = None) -> Dict[str, Any]:
        instance = load_instance(file, eps)
        support = splitting_points(instance)
        caps = cap_decomposition(instance)
        rows = edge_table(instance, caps)

        report = {
            "n": instance.n,
            "backend": instance.backend,
            "support": list(support.indices),
            "support_rule_applied": support.rule_applied,
            "caps": [
                {
                    "indices": list(cap.indices),
                    "t": cap.t,
                    "witnessed_in_cap": witnessed_edges_in_cap(cap),
                    "witnessed_in_instance": witnessed_edges_in_instance(cap),
                    "witness_load": witness_load(cap),
                }
                for cap in caps
            ],
            "good_edges": good_edge_count(instance),
            "bad_edges": [list(edge) for edge in bad_edges(instance)],
            "moser": asdict(moser_check(instance)) if instance.n >= 2 else None,
            "edges": [_row_dict(row) for row in rows],
        }
        return success(report, csv=edge_table_csv(rows), default_format="csv")


def _row_dict(row: EdgeRow) -> Dict[str, Any]:
    return {
        "i": row.i,
        "j": row.j,
        "class": row.classification.value,
        "bisector_points": list(row.bisector_points),
        "witness_index": row.witness,
    }


def edge_table_csv(rows: List[EdgeRow]) -> str:
    """Table des arêtes ; points de la médiatrice séparés par ';', témoin vide si absent"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(EDGE_TABLE_HEADER)
    for row in rows:
        writer.writerow([
            row.i,
            row.j,
            row.classification.value,
            ";".join(str(p) for p in row.bisector_points),
            "" if row.witness is None else row.witness,
        ])
    return buffer.getvalue()
