# -*- coding: utf-8 -*-
"""
Procédure de découpe et optimisation des constantes
"""
