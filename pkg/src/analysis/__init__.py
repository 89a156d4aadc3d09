# -*- coding: utf-8 -*-
"""
Analyses : recensement Z(P), constructions, lemmes, procédure de découpe et progressions bicolores
"""

from .census import CensusReport, census_report, szemeredi_check, good_edge_deduction
from .constructions import SamplerExhaustedError, random_convex, rational_concyclic, regular_ngon
from .lemma_lab import Verdict, LemmaVerdict
from .theorem_engine import Variant, Case, strip_procedure, optimize_parameters, epsilon_chain
from .ap3 import Ap3Instance, SearchSpaceTooLargeError, count_bichromatic_ap3, max_bichromatic_ap3
from .campaigns import CampaignReport, SUITES, run_campaign

__all__ = [
    'CensusReport',
    'census_report',
    'szemeredi_check',
    'good_edge_deduction',
    'SamplerExhaustedError',
    'random_convex',
    'rational_concyclic',
    'regular_ngon',
    'Verdict',
    'LemmaVerdict',
    'Variant',
    'Case',
    'strip_procedure',
    'optimize_parameters',
    'epsilon_chain',
    'Ap3Instance',
    'SearchSpaceTooLargeError',
    'count_bichromatic_ap3',
    'max_bichromatic_ap3',
    'CampaignReport',
    'SUITES',
    'run_campaign',
]
