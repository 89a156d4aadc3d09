# -*- coding: utf-8 -*-
"""
Campagnes de vérification reproductibles : chaque essai tire son instance
d'une graine dérivée, les essais sont répartis sur un pool de processus
et fusionnés dans l'ordre des graines
"""

import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Tuple

from ..geometry.caps import (
    ConvexInstance,
    cap_decomposition,
    contiguous_cap,
    good_edge_count,
    moser_check,
    witnessed_edges_in_cap,
)
from ..utils.system_utils import parallel_map
from .census import szemeredi_check, total_distinct
from .constructions import SamplerExhaustedError, random_convex, rotation_orbit_arc
from .lemma_lab import (
    LemmaVerdict,
    Verdict,
    check_half_easy,
    check_monotone,
    check_sequence_bound,
    check_tech,
    sample_tech_config,
)

logger = logging.getLogger(__name__)

SEED_STRIDE = 100003


@dataclass
class CampaignReport:
    suite: str
    trials: int
    seed: int
    holds: int = 0
    skips: int = 0
    violations: int = 0
    violation_seeds: List[int] = field(default_factory=list)
    skip_seeds: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def trial_seed(seed: int, k: int) -> int:
    return seed * SEED_STRIDE + k


def witness_rich_arc(rng: random.Random, size: int) -> ConvexInstance:
    """Sous-ensemble aléatoire d'un arc à angles en progression arithmétique exacte"""
    span = 2 * size + rng.randint(0, size)
    exponents = sorted(rng.sample(range(span + 1), size))
    return rotation_orbit_arc(exponents, exponents[-1] - exponents[0] + 1)


def _random_instance(rng: random.Random, low: int, high: int) -> ConvexInstance:
    method = rng.choice(("concyclic", "vector_sum"))
    return random_convex(rng.randint(low, high), rng.randrange(2 ** 31), method)


def _trial_monotone(rng: random.Random) -> List[LemmaVerdict]:
    if rng.random() < 0.1:
        instance = _random_instance(rng, 6, 20)
        cap = max(cap_decomposition(instance), key=lambda c: c.t)
        if cap.t < 3:
            return []
        return [check_monotone(cap, rng.choice(cap.indices[1:-1]))]
    # a = 0, b = 2m, témoin de ab en m ; c = 2j, témoin de ac en j
    m = rng.randint(2, 12)
    j = rng.randint(1, m - 1)
    exponents = {0, 2 * m, m, j, 2 * j}
    exponents.update(rng.sample(range(1, 2 * m), rng.randint(0, m)))
    exponents = sorted(exponents)
    arc = rotation_orbit_arc(exponents, 2 * m + 1)
    cap = contiguous_cap(arc, 0, arc.n - 1)
    return [check_monotone(cap, exponents.index(2 * j))]


def _trial_tech(rng: random.Random) -> List[LemmaVerdict]:
    return [check_tech(sample_tech_config(rng.randrange(2 ** 31)))]


def _trial_half_easy(rng: random.Random) -> List[LemmaVerdict]:
    if rng.random() < 0.5:
        instance = witness_rich_arc(rng, rng.randint(4, 24))
    else:
        instance = _random_instance(rng, 6, 40)
    return [check_half_easy(cap) for cap in cap_decomposition(instance)]


def _trial_sequence(rng: random.Random) -> List[LemmaVerdict]:
    t = rng.randint(1, 30)
    if rng.random() < 0.5:
        arc = witness_rich_arc(rng, 2 * t)
        return [check_sequence_bound(contiguous_cap(arc, 0, arc.n - 1))]
    instance = random_convex(max(2 * t, 6), rng.randrange(2 ** 31), "concyclic")
    cap = max(cap_decomposition(instance), key=lambda c: c.t)
    size = cap.t - cap.t % 2
    return [check_sequence_bound(contiguous_cap(instance, cap.a, cap.indices[size - 1]))]


def _trial_corollaries(rng: random.Random) -> List[LemmaVerdict]:
    instance = _random_instance(rng, 10, 100)
    n = instance.n
    verdicts = []
    for cap in cap_decomposition(instance):
        count = witnessed_edges_in_cap(cap)
        verdicts.append(_holds("quarter_t2", 4 * count <= cap.t * cap.t, {"t": cap.t, "count": count}))
    good = good_edge_count(instance)
    verdicts.append(_holds("n2_over_12", 12 * good >= n * n, {"n": n, "good_edges": good}))
    moser = moser_check(instance)
    verdicts.append(_holds("moser", moser.holds, asdict(moser)))
    return verdicts


def _trial_altman(rng: random.Random) -> List[LemmaVerdict]:
    instance = _random_instance(rng, 3, 100)
    g = total_distinct(instance)
    return [_holds("altman", g >= instance.n // 2, {"n": instance.n, "total_distinct": g})]


def _trial_szemeredi(rng: random.Random) -> List[LemmaVerdict]:
    instance = _random_instance(rng, 3, 100)
    verdict = szemeredi_check(instance)
    return [_holds("szemeredi", verdict.holds, verdict.to_dict())]


def _holds(lemma: str, holds: bool, details: Dict[str, Any]) -> LemmaVerdict:
    if not holds:
        logger.warning(f"⚠️ {lemma}: violation {details}")
    return LemmaVerdict(lemma, Verdict.HOLDS if holds else Verdict.VIOLATED, details)


SUITES: Dict[str, Callable[[random.Random], List[LemmaVerdict]]] = {
    "monotone": _trial_monotone,
    "tech": _trial_tech,
    "half-easy": _trial_half_easy,
    "sequence": _trial_sequence,
    "corollaries": _trial_corollaries,
    "altman": _trial_altman,
    "szemeredi": _trial_szemeredi,
}


def run_trial(task: Tuple[str, int]) -> Tuple[int, Verdict]:
    """Un essai : VIOLATED si une vérification échoue, SKIP si aucune ne s'applique"""
    suite, seed = task
    try:
        verdicts = SUITES[suite](random.Random(seed))
    except SamplerExhaustedError as e:
        logger.info(f"🔍 Essai ignoré ({suite}, graine {seed}): {e}")
        return seed, Verdict.SKIP
    except AssertionError as e:
        logger.error(f"❌ Assertion interne ({suite}, graine {seed}): {e}")
        return seed, Verdict.VIOLATED
    outcomes = {v.verdict for v in verdicts}
    if Verdict.VIOLATED in outcomes:
        return seed, Verdict.VIOLATED
    if Verdict.HOLDS in outcomes:
        return seed, Verdict.HOLDS
    return seed, Verdict.SKIP


def run_campaign(suite: str, trials: int, seed: int = 0, workers: int = 1) -> CampaignReport:
    """Exécute trials essais de la suite ; le rapport ne dépend que de (suite, trials, seed)"""
    if suite not in SUITES:
        raise ValueError(f"Suite inconnue: {suite} (choix: {', '.join(SUITES)})")
    if trials < 0:
        raise ValueError("trials doit être >= 0")
    tasks = [(suite, trial_seed(seed, k)) for k in range(trials)]
    report = CampaignReport(suite=suite, trials=trials, seed=seed)
    for trial, verdict in parallel_map(run_trial, tasks, workers, description=f"verify {suite}"):
        if verdict == Verdict.HOLDS:
            report.holds += 1
        elif verdict == Verdict.SKIP:
            report.skips += 1
            report.skip_seeds.append(trial)
        else:
            report.violations += 1
            report.violation_seeds.append(trial)
    if report.violations:
        logger.warning(f"⚠️ {report.violations} violations dans la suite {suite}")
    else:
        logger.info(f"✅ Suite {suite}: {report.holds} essais valides, {report.skips} ignorés")
    return report
