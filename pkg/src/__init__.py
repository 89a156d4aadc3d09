# -*- coding: utf-8 -*-
"""
Boîte à outils de vérification : distances distinctes en position convexe
"""

__version__ = "1.0.0"

__all__ = ['__version__']
