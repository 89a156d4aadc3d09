# -*- coding: utf-8 -*-
"""
Package utilitaires du toolkit
"""

from .system_utils import (
    RunSettings,
    run_settings,
    configure_logging,
    get_worker_count,
    get_default_eps,
    is_debug,
    parallel_map,
    DEFAULT_EPS,
)

__all__ = [
    'RunSettings',
    'run_settings',
    'configure_logging',
    'get_worker_count',
    'get_default_eps',
    'is_debug',
    'parallel_map',
    'DEFAULT_EPS',
]
