# -*- coding: utf-8 -*-
"""
Module d'outils - Gestionnaire centralisé des commandes auto-découvertes
"""

from .tool_manager import ToolManager

__all__ = ['ToolManager']
