# -*- coding: utf-8 -*-
"""
Utilitaires d'exécution : paramètres de lancement (.env), journalisation
et répartition des campagnes sur un pool de processus
"""

import logging
import os
import sys
from multiprocessing import Pool
from typing import Callable, Iterable, List, Optional, TypeVar

import psutil
from dotenv import load_dotenv
from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_EPS = 1e-9
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class RunSettings:
    """Paramètres d'exécution lus depuis l'environnement (et le fichier .env)"""

    def __init__(self):
        load_dotenv()
        self._threads = self._read_threads()
        self._eps = self._read_eps()
        self._log_level = self._read_log_level()
        self._debug = os.getenv("CDL_DEBUG", "0").strip() == "1"
        self._progress = os.getenv("CDL_PROGRESS", "0").strip() == "1"

    def _read_threads(self) -> int:
        """Nombre de workers : CDL_THREADS, sinon le nombre de cœurs physiques"""
        raw = os.getenv("CDL_THREADS")
        if raw is None or not raw.strip():
            return psutil.cpu_count(logical=False) or 1
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"CDL_THREADS invalide: {raw!r} (entier attendu)")
        if value < 1:
            raise ValueError(f"CDL_THREADS doit être >= 1 (reçu {value})")
        return value

    def _read_eps(self) -> float:
        raw = os.getenv("CDL_EPS")
        if raw is None or not raw.strip():
            return DEFAULT_EPS
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(f"CDL_EPS invalide: {raw!r}")
        if not value > 0:
            raise ValueError(f"CDL_EPS doit être > 0 (reçu {value})")
        return value

    def _read_log_level(self) -> str:
        level = os.getenv("CDL_LOG_LEVEL", "WARNING").strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"CDL_LOG_LEVEL inconnu: {level} (choix: {', '.join(LOG_LEVELS)})")
        return level

    @property
    def threads(self) -> int:
        """Plafond de workers pour verify / optimize"""
        return self._threads

    @property
    def eps(self) -> float:
        """Tolérance par défaut du backend flottant"""
        return self._eps

    @property
    def log_level(self) -> str:
        return self._log_level

    @property
    def debug(self) -> bool:
        """Active les vérifications croisées coûteuses (balayage complet des témoins)"""
        return self._debug

    @property
    def progress(self) -> bool:
        return self._progress


# Instance globale pour usage facile
run_settings = RunSettings()


def configure_logging(level: Optional[str] = None) -> None:
    """Configure la journalisation (toujours sur stderr, stdout reste réservé aux rapports)"""
    logging.basicConfig(
        level=getattr(logging, (level or run_settings.log_level).upper()),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def get_worker_count(requested: Optional[int] = None) -> int:
    """Nombre de workers effectif : la demande explicite, plafonnée par CDL_THREADS"""
    if requested is None:
        return run_settings.threads
    return max(1, min(requested, run_settings.threads))


def get_default_eps() -> float:
    return run_settings.eps


def is_debug() -> bool:
    return run_settings.debug


def parallel_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1,
                 description: Optional[str] = None) -> List[R]:
    """
    Applique func à chaque élément, en parallèle si workers > 1

    L'ordre des résultats suit celui des entrées : la fusion reste déterministe.
    func doit être une fonction de module (sérialisable par pickle).
    """
    items = list(items)
    show = run_settings.progress and description is not None
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in tqdm(items, desc=description, disable=not show,
                                            file=sys.stderr, ncols=100)]

    chunksize = max(1, len(items) // (workers * 8))
    with Pool(processes=workers) as pool:
        results = []
        with tqdm(total=len(items), desc=description, disable=not show,
                  file=sys.stderr, ncols=100) as progress_bar:
            for result in pool.imap(func, items, chunksize=chunksize):
                results.append(result)
                progress_bar.update(1)
        return results
