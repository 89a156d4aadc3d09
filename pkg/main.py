#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Boîte à outils de vérification des bornes de distances distinctes
pour les points en position convexe
"""

import sys


def main():
    """
    Point d'entrée principal du programme
    """
    try:
        # la lecture des paramètres CDL_* a lieu à l'import
        from src.cli import CommandLineInterface

        cli = CommandLineInterface()
        sys.exit(cli.run())

    except KeyboardInterrupt:
        print("\n\n👋 Programme interrompu par l'utilisateur", file=sys.stderr)
        sys.exit(0)
    except ValueError as e:
        # paramètres d'environnement invalides (CDL_*)
        print(f"❌ Configuration invalide: {str(e)}", file=sys.stderr)
        print("Vérifiez votre fichier .env", file=sys.stderr)
        sys.exit(2)
    except Exception as e:
        print(f"❌ Erreur fatale: {str(e)}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
