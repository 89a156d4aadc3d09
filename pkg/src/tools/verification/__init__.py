# -*- coding: utf-8 -*-
"""
Campagnes de vérification des lemmes
"""
