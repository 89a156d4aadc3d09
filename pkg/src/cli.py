# -*- coding: utf-8 -*-
"""
Interface en ligne de commande

Chaque sous-commande est un outil auto-découvert : ses arguments sont
construits à partir du schéma de l'outil (propriétés "x-positional" en
positionnel, enum en choices).
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from . import __version__
from .tools.tool_manager import CATEGORY_EMOJIS, ToolManager
from .utils.system_utils import LOG_LEVELS, configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT_ERROR = 2

CATEGORY_NAMES = {
    "geometry": "Géométrie des instances",
    "verification": "Campagnes de vérification",
    "theorem": "Borne principale",
    "combinatorics": "Combinatoire additive",
}

_ARG_TYPES = {"integer": int, "number": float, "string": str}


def command_name(tool_name: str) -> str:
    return tool_name.replace("_", "-")


class CommandLineInterface:
    def __init__(self, tool_manager: ToolManager = None, stdout: TextIO = None):
        self.tool_manager = tool_manager or ToolManager()
        self.stdout = stdout or sys.stdout
        self.commands = {command_name(s["function"]["name"]): s for s in self.tool_manager.get_all_tools_schema()}

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="cdl",
            description="Vérification exacte des bornes de distances distinctes en position convexe",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        parser.add_argument("--log-level", choices=LOG_LEVELS, help="Niveau de journalisation (défaut: CDL_LOG_LEVEL)")

        output = argparse.ArgumentParser(add_help=False)
        formats = output.add_mutually_exclusive_group()
        formats.add_argument("--json", dest="output_format", action="store_const", const="json",
                             help="Rapport JSON")
        formats.add_argument("--csv", dest="output_format", action="store_const", const="csv",
                             help="Table CSV (si l'outil en produit une)")

        subparsers = parser.add_subparsers(dest="command", metavar="commande")
        subparsers.required = True

        tools_parser = subparsers.add_parser("tools", help="Liste les commandes disponibles")
        tools_parser.add_argument("tool", nargs="?", help="Nom d'une commande pour son aide détaillée")

        for name, schema in self.commands.items():
            function = schema["function"]
            sub = subparsers.add_parser(name, parents=[output], help=function["description"],
                                        description=function["description"])
            self._add_schema_arguments(sub, function["parameters"])
        return parser

    @staticmethod
    def _add_schema_arguments(parser: argparse.ArgumentParser, parameters: Dict[str, Any]):
        required = set(parameters.get("required", []))
        for name, prop in parameters["properties"].items():
            kwargs: Dict[str, Any] = {"help": prop.get("description")}
            if prop["type"] == "boolean":
                parser.add_argument(f"--{command_name(name)}", dest=name, action="store_true", **kwargs)
                continue
            kwargs["type"] = _ARG_TYPES[prop["type"]]
            if "enum" in prop:
                kwargs["choices"] = prop["enum"]
            if "default" in prop:
                kwargs["default"] = prop["default"]
            if prop.get("x-positional"):
                if name not in required:
                    kwargs["nargs"] = "?"
                parser.add_argument(name, **kwargs)
            else:
                parser.add_argument(f"--{command_name(name)}", dest=name, required=name in required, **kwargs)

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Exécute une ligne de commande et retourne le code de sortie"""
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_OK

        configure_logging(args.log_level)

        if args.command == "tools":
            return self.show_tools_help() if args.tool is None else self.show_tool_help(args.tool)

        schema = self.commands[args.command]
        properties = schema["function"]["parameters"]["properties"]
        arguments = {k: v for k, v in vars(args).items() if k in properties and v is not None}
        tool_name = schema["function"]["name"]
        logger.info(f"🔧 {tool_name} {arguments}")

        result = self.tool_manager.execute_tool(tool_name, arguments)
        if not result["success"]:
            print(f"❌ {result['error']}", file=sys.stderr)
            return EXIT_INPUT_ERROR if result.get("error_type") == "input" else EXIT_VIOLATED

        self.emit(result, args.output_format)
        if result.get("violated"):
            logger.warning(f"⚠️ {tool_name}: vérification en échec")
            return EXIT_VIOLATED
        return EXIT_OK

    def emit(self, result: Dict[str, Any], output_format: Optional[str] = None):
        """Écrit le rapport sur la sortie standard (JSON trié, CSV ou ligne de texte)"""
        output_format = output_format or result.get("default_format", "json")
        if output_format == "csv" and "csv" not in result:
            logger.warning("⚠️ Pas de table CSV pour cette commande: sortie JSON")
            output_format = "json"

        if output_format == "csv":
            self.stdout.write(result["csv"])
        elif output_format == "text" and "text" in result:
            self.stdout.write(result["text"] + "\n")
        else:
            report = dict(result["report"])
            report["version"] = __version__
            self.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")

    def show_tools_help(self) -> int:
        """Affiche la liste des commandes disponibles"""
        help_data = self.tool_manager.get_tool_help()
        print("\n🛠️ === COMMANDES DISPONIBLES ===", file=self.stdout)
        print(f"📊 Total: {help_data['total_tools']} commandes disponibles\n", file=self.stdout)

        for category, tools in help_data["categories"].items():
            title = CATEGORY_NAMES.get(category, category.upper())
            print(f"{CATEGORY_EMOJIS.get(category, '🔧')} {title}:", file=self.stdout)
            for tool in tools:
                print(f"  • {command_name(tool['name'])} - {tool['description']}", file=self.stdout)
            print(file=self.stdout)

        print("💡 Tapez 'tools [commande]' pour plus d'infos sur une commande", file=self.stdout)
        return EXIT_OK

    def show_tool_help(self, name: str) -> int:
        """Affiche l'aide pour une commande spécifique"""
        help_data = self.tool_manager.get_tool_help(name.replace("-", "_"))
        if not help_data["success"]:
            print(f"❌ Erreur: {help_data['error']}", file=sys.stderr)
            return EXIT_INPUT_ERROR

        print(f"\n🛠️ === COMMANDE: {command_name(help_data['tool_name']).upper()} ===", file=self.stdout)
        print(f"📂 Catégorie: {help_data['category']}", file=self.stdout)
        print(f"📝 Description: {help_data['description']}", file=self.stdout)
        print("\n📋 Paramètres:", file=self.stdout)
        for param_name, param_info in help_data["parameters"].items():
            required = " (REQUIS)" if param_name in help_data["required_parameters"] else " (optionnel)"
            print(f"  • {param_name}{required}: {param_info.get('description', 'Pas de description')}",
                  file=self.stdout)
        return EXIT_OK
