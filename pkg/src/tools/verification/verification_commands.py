# -*- coding: utf-8 -*-
"""
Campagnes de vérification aléatoires des lemmes sur des instances exactes
"""

from typing import Any, Dict, List

from ...analysis.campaigns import SUITES, run_campaign
from ...utils.system_utils import get_worker_count
from ..tool_support import failure, success


class VerificationCommands:
    def get_tools_schema(self) -> List[Dict[str, Any]]:
        """Retourne le schéma de la commande de vérification"""
        return [
            {
                "type": "function",
                "function": {
                    "name": "verify",
                    "description": "Lance une campagne reproductible de vérification d'un lemme",
                    "parameters": {
                        "type": "object",
                        "properties": {
                            "suite": {
                                "type": "string",
                                "enum": list(SUITES),
                                "description": "Suite de vérifications"
                            },
                            "trials": {
                                "type": "integer",
                                "description": "Nombre d'essais",
                                "default": 100
                            },
                            "seed": {
                                "type": "integer",
                                "description": "Graine de la campagne",
                                "default": 0
                            },
                            "threads": {
                                "type": "integer",
                                "description": "Nombre de processus (plafonné par CDL_THREADS)"
                            }
                        },
                        "required": ["suite"],
                        "additionalProperties": False
                    },
                }
            }
        ]

    def execute_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Exécute une commande avec les arguments donnés"""
        try:
            if tool_name == "verify":
                return self._verify(**arguments)
            else:
                return {"success": False, "error": f"Commande inconnue: {tool_name}", "error_type": "input"}
        except Exception as e:
            return failure(e)

    def _verify(self, suite: str, trials: int = 100, seed: int = 0, threads: int = None) -> Dict[str, Any]:
        report = run_campaign(suite, trials, seed, get_worker_count(threads))
        return success(report.to_dict(), violated=report.violations > 0)
