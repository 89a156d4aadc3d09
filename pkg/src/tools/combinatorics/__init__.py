# -*- coding: utf-8 -*-
"""
Progressions arithmétiques bicolores
"""
