#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test de la procédure d'épluchage, des coefficients et de la chaîne finale
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.analysis.constructions import random_convex, rational_concyclic, rational_ngon, regular_ngon
from src.analysis.theorem_engine import (
    DEFAULT_A,
    DEFAULT_D,
    TARGET_COEFFICIENT,
    Case,
    Variant,
    bound_report,
    case1_coefficient,
    case2_coefficient,
    case2_finite_sum,
    circular_distance,
    classify_trace,
    epsilon_chain,
    optimize_parameters,
    strip_procedure,
    straddling_good_edges,
    verify_case2_simplification,
)
from src.geometry.exact_geom import GeometryError


def _check_trace_shape(trace):
    for previous, current in zip(trace.steps, trace.steps[1:]):
        assert current.step == previous.step + 1
        assert current.size == previous.size - len(set(previous.support))
    assert classify_trace(trace) == (trace.case, trace.case_step, trace.far_point)


def test_circular_distance():
    print("📈 Distance circulaire")
    assert circular_distance(0, 9, 10) == 1
    assert circular_distance(2, 7, 10) == 5
    assert circular_distance(3, 3, 10) == 0
    try:
        circular_distance(0, 10, 10)
        assert False, "indice hors bornes accepté"
    except ValueError:
        pass
    print("   ✅ OK")


def test_strip_case2_when_far_is_impossible():
    print("📈 Épluchage sans point éloigné (a > 1/2)")
    instance = random_convex(40, 1)
    trace = strip_procedure(instance, Fraction(3, 5), Fraction(1, 10))
    assert trace.case == Case.CASE2 and trace.case_step is None
    assert len(trace.steps) == 4
    assert trace.steps[0].size == 40
    _check_trace_shape(trace)
    assert straddling_good_edges(instance, trace) is None
    print("   ✅ Cas 2 après ⌊dn⌋ = 4 étapes")


def test_strip_case1_at_second_step():
    print("📈 Épluchage avec a minuscule")
    instance = random_convex(40, 2, "vector_sum")
    trace = strip_procedure(instance, Fraction(1, 100), Fraction(1, 10))
    assert trace.case == Case.CASE1
    assert trace.case_step == 2 and len(trace.steps) == 2
    assert trace.far_point == trace.steps[1].support[0]
    _check_trace_shape(trace)
    count = straddling_good_edges(instance, trace)
    assert isinstance(count, int) and count >= 0
    assert trace.to_dict()["case"] == "case1"
    print(f"   ✅ Cas 1 à l'étape 2 ({count} arêtes bonnes à cheval)")


def test_strip_properties_on_random_instances():
    print("📈 Propriétés de la trace")
    for seed in range(4):
        instance = random_convex(30 + 10 * seed, seed, "vector_sum" if seed % 2 else "concyclic")
        trace = strip_procedure(instance, DEFAULT_A, Fraction(1, 10))
        _check_trace_shape(trace)
        if trace.case == Case.CASE2:
            assert len(trace.steps) == (instance.n // 10)
        for step in trace.steps:
            assert all(0 <= i < instance.n for i in step.support)
    print("   ✅ OK")


def test_strip_rejects_bad_input():
    print("📈 Entrées refusées")
    for instance, a, d, error in [
        (regular_ngon(20), DEFAULT_A, Fraction(1, 10), GeometryError),
        (random_convex(5, 0), DEFAULT_A, Fraction(1, 10), GeometryError),
        (random_convex(20, 0), 0, Fraction(1, 10), ValueError),
        (random_convex(20, 0), DEFAULT_A, Fraction(3, 2), ValueError),
    ]:
        try:
            strip_procedure(instance, a, d)
            assert False, f"({a}, {d}) accepté"
        except error:
            pass
    print("   ✅ OK")


def test_coefficients_at_default_point():
    print("📈 Coefficients au point (5/44, 1/1132)")
    final = bound_report(DEFAULT_A, DEFAULT_D)
    assert final.certified
    assert final.case2_coefficient == case2_coefficient(DEFAULT_A, DEFAULT_D)
    assert final.to_dict()["target"] == "1000/11981"
    conservative = bound_report(DEFAULT_A, DEFAULT_D, Variant.CONSERVATIVE)
    assert not conservative.certified
    assert conservative.case1_coefficient < final.case1_coefficient
    assert case1_coefficient(0, 0) == case2_coefficient(0, 0) == Fraction(1, 12)
    assert verify_case2_simplification()
    print("   ✅ Variante finale certifiée, variante conservatrice non")


def test_case2_finite_sum():
    print("📈 Somme finie du Cas 2")
    assert case2_finite_sum(100, Fraction(1, 10)) == 670
    assert case2_finite_sum(9, Fraction(1, 10)) == 0
    n, d = 1132 * 5, DEFAULT_D
    assert case2_finite_sum(n, d) == sum(n - 6 * i for i in range(1, 6))
    print("   ✅ OK")


def test_optimizer_dominates_default_point():
    print("📈 Optimisation des paramètres")
    result = optimize_parameters(10)
    assert result.min_coefficient >= TARGET_COEFFICIENT
    data = result.to_dict()
    assert data["dominates_default_point"] is True
    assert data["resolution"] == 10
    assert 0 < result.a < 1 and 0 < result.d < 1
    try:
        optimize_parameters(0)
        assert False, "résolution nulle acceptée"
    except ValueError:
        pass
    print(f"   ✅ min = {float(result.min_coefficient):.8f}")


def test_epsilon_chain():
    print("📈 Chaîne finale")
    chain = epsilon_chain()
    assert chain.alpha == Fraction(10981, 11981)
    assert chain.coefficient == Fraction(12981, 35943)
    assert chain.unreduced_coefficient == "12981/35943"
    assert chain.excess == Fraction(19, 431316)
    assert chain.summary() == "alpha=10981/11981, coeff=12981/35943, excess=19/431316"
    data = chain.to_dict()
    assert data["excess_over_1_22701"] is True and data["excess_over_1_23000"] is True
    assert data["coefficient"] == "4327/11981" and data["coefficient_unreduced"] == "12981/35943"
    print("   ✅ 13/36 + 19/431316")

def test_strip_on_rational_sixty_gon():
    print("📈 60-gone rationnel, a = 5/44, d = 1/12")
    instance = rational_ngon(60)
    trace = strip_procedure(instance, DEFAULT_A, Fraction(1, 12))
    assert trace.steps[0].size == 60
    assert len(trace.steps) == 5
    assert trace.case == Case.CASE1 and trace.case_step == 5
    _check_trace_shape(trace)
    print(f"   ✅ Cas 1 à l'étape 5 (point éloigné {trace.far_point})")


def test_strip_single_step():
    print("📈 Douze points cocycliques, ⌊dn⌋ = 1")
    instance = rational_concyclic(range(-6, 6))
    trace = strip_procedure(instance, DEFAULT_A, Fraction(1, 12))
    assert len(trace.steps) == 1 and trace.steps[0].size == 12
    assert trace.case == Case.CASE2 and trace.far_point is None
    assert len(set(trace.steps[0].support)) in (2, 3)
    try:
        strip_procedure(instance, DEFAULT_A, Fraction(1, 13))
        assert False, "⌊dn⌋ = 0 accepté"
    except GeometryError:
        pass
    print("   ✅ OK")


if __name__ == "__main__":
    print("🧪 === TEST DU MOTEUR DE BORNES ===\n")
    test_circular_distance()
    test_strip_case2_when_far_is_impossible()
    test_strip_case1_at_second_step()
    test_strip_properties_on_random_instances()
    test_strip_rejects_bad_input()
    test_strip_on_rational_sixty_gon()
    test_strip_single_step()
    test_coefficients_at_default_point()
    test_case2_finite_sum()
    test_optimizer_dominates_default_point()
    test_epsilon_chain()
    print("\n🎉 Tous les tests du moteur de bornes sont passés")
