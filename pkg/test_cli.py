#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test de l'interface en ligne de commande : sorties, formats et codes de sortie
"""

import io
import json
import os
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src import __version__
from src.cli import EXIT_INPUT_ERROR, EXIT_OK, CommandLineInterface, command_name
from src.tools import ToolManager

TOOL_MANAGER = ToolManager()
SQUARE = '{"points": [[0, 1, 0, 1], [1, 1, 0, 1], [1, 1, 1, 1], [0, 1, 1, 1]]}'
SQUARE_WITH_CENTER = '{"points": [[0, 1, 0, 1], [1, 1, 0, 1], [1, 1, 1, 1], [0, 1, 1, 1], [1, 2, 1, 2]]}'


def run(*argv):
    """Exécute une ligne de commande, retourne (code, sortie standard)"""
    cli = CommandLineInterface(TOOL_MANAGER, stdout=io.StringIO())
    code = cli.run(list(argv))
    return code, cli.stdout.getvalue()


def write_temp(content: str) -> str:
    handle = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False, encoding="utf-8")
    with handle:
        handle.write(content)
    return handle.name


def test_discovered_commands():
    print("🛠️ Commandes découvertes")
    names = {schema["function"]["name"] for schema in TOOL_MANAGER.get_all_tools_schema()}
    assert names == {"census", "decompose", "construct", "verify", "strip", "optimize", "epsilon_chain", "ap3"}
    assert command_name("epsilon_chain") == "epsilon-chain"
    result = TOOL_MANAGER.execute_tool("inconnu", {})
    assert not result["success"] and result["error_type"] == "input"
    code, output = run("tools")
    assert code == EXIT_OK and "epsilon-chain" in output
    assert run("tools", "census")[0] == EXIT_OK
    assert run("tools", "inconnu")[0] == EXIT_INPUT_ERROR
    print("   ✅ 8 commandes")


def test_construct_then_census():
    print("🛠️ construct ngon | census")
    code, document = run("construct", "ngon", "--n", "12")
    assert code == EXIT_OK
    data = json.loads(document)
    assert len(data["points_float"]) == 12 and data["version"] == __version__
    assert data["generator"] == {"kind": "ngon", "n": 12}

    path = write_temp(document)
    try:
        code, output = run("census", path)
        assert code == EXIT_OK
        report = json.loads(output)
        assert report["z"] == 60 and report["max_point_distinct"] == 6
        assert report["backend"] == "float"
    finally:
        os.unlink(path)

    saved = sys.stdin
    sys.stdin = io.StringIO(document)
    try:
        code, output = run("census", "-")
    finally:
        sys.stdin = saved
    assert code == EXIT_OK and json.loads(output)["total_distinct"] == 6
    print("   ✅ Z = 60, f = 6 (fichier et entrée standard)")


def test_exact_census_report():
    print("🛠️ census exact")
    path = write_temp(SQUARE)
    try:
        code, output = run("census", path)
    finally:
        os.unlink(path)
    assert code == EXIT_OK
    report = json.loads(output)
    assert report["z"] == 4 and report["good_edges"] == 4
    assert report["good_edge_deduction"]["holds"] is True
    assert report["szemeredi"]["holds"] is True
    assert report["improvement_lower_bound"] == "5/3"
    assert list(output.splitlines()[1:3]) == ['  "backend": "exact",', '  "dumitrescu_bound": 2,']
    print("   ✅ Clés triées, rationnels en 'p/q'")


def test_decompose_formats():
    print("🛠️ decompose : CSV par défaut, JSON sur demande")
    path = write_temp(SQUARE)
    try:
        code, table = run("decompose", path)
        assert code == EXIT_OK
        lines = table.splitlines()
        assert lines[0] == "i,j,class,bisector_points,witness_index"
        assert len(lines) == 1 + 6
        assert "0,2,bad,1;3,3" in lines

        code, output = run("decompose", path, "--json")
        report = json.loads(output)
        assert report["support"] == [0, 1, 2] and report["support_rule_applied"] is True
        assert [cap["t"] for cap in report["caps"]] == [2, 2, 3]
        assert report["bad_edges"] == [[0, 2], [1, 3]]
    finally:
        os.unlink(path)
    print("   ✅ OK")


def test_epsilon_chain_output():
    print("🛠️ epsilon-chain")
    code, output = run("epsilon-chain")
    assert code == EXIT_OK
    assert output == "alpha=10981/11981, coeff=12981/35943, excess=19/431316\n"
    code, output = run("epsilon-chain", "--json")
    assert json.loads(output)["excess"] == "19/431316"
    print("   ✅ OK")


def test_strip_and_ap3():
    print("🛠️ strip et ap3")
    code, document = run("construct", "random", "--n", "40", "--seed", "1")
    assert code == EXIT_OK
    path = write_temp(document)
    try:
        code, output = run("strip", path, "--a", "3/5", "--d", "1/10")
    finally:
        os.unlink(path)
    assert code == EXIT_OK
    report = json.loads(output)
    assert report["trace"]["case"] == "case2" and len(report["trace"]["steps"]) == 4
    assert report["straddling_good_edges"] is None
    assert report["bound"]["a"] == "3/5"

    path = write_temp('{"red": [-3, -1], "blue": [1, 3]}')
    try:
        code, output = run("ap3", "count", path)
        assert code == EXIT_OK and json.loads(output)["count"] == 2
        code, output = run("ap3", "embed", path, "--scale", "1/16")
        assert code == EXIT_OK and json.loads(output)["counts_match"] is True
    finally:
        os.unlink(path)
    code, output = run("ap3", "max", "--t", "2", "--bound", "6")
    assert code == EXIT_OK and json.loads(output)["best"] == 2
    print("   ✅ OK")


def test_verify_command():
    print("🛠️ verify")
    code, output = run("verify", "--suite", "tech", "--trials", "3", "--seed", "5", "--threads", "1")
    assert code == EXIT_OK
    report = json.loads(output)
    assert report["violations"] == 0 and report["trials"] == 3
    print("   ✅ OK")


def test_input_errors_exit_2():
    print("🛠️ Erreurs d'entrée : code 2")
    path = write_temp(SQUARE_WITH_CENTER)
    try:
        assert run("census", path)[0] == EXIT_INPUT_ERROR
    finally:
        os.unlink(path)
    for argv in [
        ("census", "/chemin/inexistant.json"),
        ("ap3", "max", "--t", "2"),
        ("ap3", "count"),
        ("commande-inconnue",),
        ("construct", "hexagone", "--n", "6"),
        ("construct", "ngon"),
        ("verify", "--suite", "tech", "--trials", "-1"),
        ("strip", "/chemin/inexistant.json", "--a", "1/0"),
    ]:
        code, output = run(*argv)
        assert code == EXIT_INPUT_ERROR, (argv, code)
        assert output == ""
    print("   ✅ OK")


if __name__ == "__main__":
    print("🧪 === TEST DE LA LIGNE DE COMMANDE ===\n")
    test_discovered_commands()
    test_construct_then_census()
    test_exact_census_report()
    test_decompose_formats()
    test_epsilon_chain_output()
    test_strip_and_ap3()
    test_verify_command()
    test_input_errors_exit_2()
    print("\n🎉 Tous les tests de la ligne de commande sont passés")
