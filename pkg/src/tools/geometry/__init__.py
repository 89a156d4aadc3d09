# -*- coding: utf-8 -*-
"""
Outils géométriques : recensement, décomposition en calottes, générateurs
"""
