# -*- coding: utf-8 -*-
"""
Procédure de découpe par cercles minimaux, coefficients des deux cas et
chaîne d'inégalités finale
"""

from typing import Any, Dict, List

from ...analysis.theorem_engine import (
    DEFAULT_A,
    DEFAULT_D,
    Variant,
    bound_report,
    case2_finite_sum,
    classify_trace,
    epsilon_chain,
    optimize_parameters,
    straddling_good_edges,
    strip_procedure,
    verify_case2_simplification,
)
from ...geometry.caps import good_edge_count
from ...geometry.point_io import format_rational, parse_rational
from ...utils.system_utils import get_worker_count
from ..tool_support import failure, load_instance, success


class TheoremTools:
    def get_tools_schema(self) -> List[Dict[str, Any]]:
        """Retourne les schémas des outils de la borne principale"""
        return [
            {
                "type": "function",
                "function": {
                    "name": "strip",
                    "description": "Exécute la procédure de découpe sur une instance exacte et classe la trace",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "file": {
                                "type": "string",
                                "description": "Fichier d'ensemble de points JSON ('-' pour l'entrée standard)",
                                "x-positional": True
                            },
                            "a": {
                                "type": "string",
                                "description": "Paramètre a (rationnel 'p/q' ou décimal)",
                                "default": format_rational(DEFAULT_A)
                            },
                            "d": {
                                "type": "string",
                                "description": "Paramètre d (rationnel 'p/q' ou décimal)",
                                "default": format_rational(DEFAULT_D)
                            },
                            "variant": {
                                "type": "string",
                                "enum": [v.value for v in Variant],
                                "description": "Terme intra-calottes du Cas 1",
                                "default": Variant.FINAL.value
                            }
                        },
                        "required": ["file"],
                        "additionalProperties": False
                    },
                }
            },
            {
                "type": "function",
                "function": {
                    "name": "optimize",
                    "description": "Maximise min(Cas 1, Cas 2) en (a, d) en arithmétique rationnelle",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "resolution": {
                                "type": "integer",
                                "description": "Résolution R de la grille en a",
                                "default": 100
                            },
                            "threads": {
                                "type": "integer",
                                "description": "Nombre de processus (plafonné par CDL_THREADS)"
                            }
                        },
                        "required": [],
                        "additionalProperties": False
                    },
                }
            },
            {
                "type": "function",
                "function": {
                    "name": "epsilon_chain",
                    "description": "Chaîne exacte 13/36 + excédent à partir de la constante 1/11.981",
                    "parameters": {
                        "type": "object",
                        "properties": {},
                        "required": [],
                        "additionalProperties": False
                    },
                }
            }
        ]

    def execute_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Exécute un outil avec les arguments donnés"""
        try:
            method_map = {
                "strip": self._strip,
                "optimize": self._optimize,
                "epsilon_chain": self._epsilon_chain
            }

            if tool_name in method_map:
                return method_map[tool_name](**arguments)
            else:
                return {"success": False, "error": f"Outil inconnu: {tool_name}", "error_type": "input"}
        except Exception as e:
            return failure(e)

    def _strip(self, file: str, a: str = None, d: str = None, variant: str = "final") -> Dict[str, Any]:
        a = DEFAULT_A if a is None else parse_rational(a)
        d = DEFAULT_D if d is None else parse_rational(d)
        variant = Variant(variant)
        instance = load_instance(file)

        trace = strip_procedure(instance, a, d)
        case, step, far_point = classify_trace(trace)
        assert (case, step, far_point) == (trace.case, trace.case_step, trace.far_point), \
            "La re-lecture de la trace contredit la procédure"

        n = instance.n
        good = good_edge_count(instance)
        floor_holds = 12 * good >= n * n
        report = {
            "trace": trace.to_dict(),
            "good_edges": good,
            "good_edge_floor_holds": floor_holds,
            "straddling_good_edges": straddling_good_edges(instance, trace),
            "case2_finite_sum": case2_finite_sum(n, d),
            "bound": bound_report(a, d, variant).to_dict(),
        }
        return success(report, violated=not floor_holds)

    def _optimize(self, resolution: int = 100, threads: int = None) -> Dict[str, Any]:
        result = optimize_parameters(resolution, get_worker_count(threads))
        report = result.to_dict()
        report["case2_simplification"] = verify_case2_simplification()
        return success(report, violated=not report["case2_simplification"])

    def _epsilon_chain(self) -> Dict[str, Any]:
        chain = epsilon_chain()
        return success(chain.to_dict(), text=chain.summary(), default_format="text")
