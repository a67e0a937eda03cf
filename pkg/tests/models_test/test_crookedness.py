#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests completos para crookedness del proyecto crookedlab.

Estos tests verifican la decisión exacta de δ-crookedness:
- Pares con refutación y traza exactas
- Casos vacuos y atajo de 2δ
- Certificación en malla y búsqueda de δ mínimo
- Horizonte de iterados y torres
"""

import sys
import os
import unittest
from fractions import Fraction as F

import numpy as np

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.models.crookedness import (
    GridStatus, PairStatus, check_grid, check_pair, horizon, min_delta,
    pair_threshold, tower_crookedness,
)
from src.models.pl_map import identity_map, make_pl_map, restrict


class TestCrookedness(unittest.TestCase):
    """Tests para check_pair, check_grid, min_delta y horizon."""

    def setUp(self):
        """Configurar aplicaciones de referencia."""
        self.identity = identity_map()
        self.tent = make_pl_map([(0, 0), (F(1, 2), 1), (1, 0)])
        # Zigzag: sube a 7/10, baja a 3/10 y termina en 1
        self.zigzag = make_pl_map([(0, 0), (F(1, 3), F(7, 10)), (F(2, 3), F(3, 10)), (1, 1)])

    def test_identity_pair_fails(self):
        """Test: La identidad no es 2/5-torcida entre 0 y 1."""
        verdict = check_pair(self.identity, 0, 1, F(2, 5))
        self.assertEqual(verdict.status, PairStatus.FAILS)
        self.assertEqual(verdict.witness, (0, 1))
        self.assertFalse(verdict.holds)
        print("✓ test_identity_pair_fails: EXITOSO")

    def test_identity_pair_holds_above_half(self):
        """Test: Por encima de δ = 1/2 el par (0,1) se cumple."""
        self.assertTrue(check_pair(self.identity, 0, 1, F(3, 5)).holds)
        self.assertFalse(check_pair(self.identity, 0, 1, F(1, 2)).holds)
        print("✓ test_identity_pair_holds_above_half: EXITOSO")

    def test_zigzag_pair_trace(self):
        """Test: El zigzag se cumple con una traza exacta."""
        verdict = check_pair(self.zigzag, 0, 1, F(2, 5))
        self.assertEqual(verdict.status, PairStatus.HOLDS)
        self.assertEqual(verdict.trace, (F(59, 168), F(109, 168)))
        c_prime, d_prime = verdict.trace
        self.assertLess(abs(1 - self.zigzag(c_prime)), F(2, 5))
        self.assertLess(abs(self.zigzag(d_prime)), F(2, 5))
        print("✓ test_zigzag_pair_trace: EXITOSO")

    def test_vacuous_and_shortcut(self):
        """Test: Valores no alcanzados y pares cercanos."""
        low = make_pl_map([(0, 0), (1, F(1, 2))])
        verdict = check_pair(low, 0, F(3, 4), F(1, 10))
        self.assertTrue(verdict.holds)
        self.assertTrue(verdict.vacuous)
        near = check_pair(self.identity, 0, F(1, 2), F(1, 2))
        self.assertTrue(near.holds)
        self.assertFalse(near.vacuous)
        self.assertIsNone(near.trace)
        with self.assertRaises(ValueError):
            check_pair(self.identity, 0, 1, 0)
        print("✓ test_vacuous_and_shortcut: EXITOSO")

    def test_pair_symmetry(self):
        """Test: Intercambiar a y b no cambia el veredicto."""
        for delta in (F(1, 4), F(2, 5), F(1, 2)):
            for a, b in ((0, 1), (F(1, 10), F(9, 10)), (0, F(4, 5))):
                self.assertEqual(check_pair(self.zigzag, a, b, delta).holds,
                                 check_pair(self.zigzag, b, a, delta).holds)
        print("✓ test_pair_symmetry: EXITOSO")

    def test_grid_certified(self):
        """Test: El zigzag queda certificado en malla con δ = 2/5."""
        verdict = check_grid(self.zigzag, F(2, 5), F(1, 10))
        self.assertEqual(verdict.status, GridStatus.GRID_CERTIFIED)
        self.assertTrue(verdict.is_certified)
        self.assertIsNone(verdict.witness)
        self.assertEqual(verdict.pairs_checked, 55)
        print("✓ test_grid_certified: EXITOSO")

    def test_grid_refuted_with_exact_witness(self):
        """Test: Con δ = 1/4 la refutación es exacta y reproducible."""
        verdict = check_grid(self.zigzag, F(1, 4), F(1, 10))
        self.assertEqual(verdict.status, GridStatus.REFUTED)
        a, b, c, d = verdict.witness
        self.assertEqual(a, 0)
        self.assertEqual(self.zigzag(c), a)
        self.assertEqual(self.zigzag(d), b)
        self.assertFalse(check_pair(self.zigzag, a, b, F(1, 4)).holds)
        print("✓ test_grid_refuted_with_exact_witness: EXITOSO")

    def test_grid_mesh_validation(self):
        """Test: La malla debe cumplir 0 < mesh <= δ."""
        with self.assertRaises(ValueError):
            check_grid(self.identity, F(1, 4), F(1, 2))
        with self.assertRaises(ValueError):
            check_grid(self.identity, F(1, 4), 0)
        print("✓ test_grid_mesh_validation: EXITOSO")

    def test_min_delta_identity(self):
        """Test: La identidad tiene umbral 1/2."""
        bracket = min_delta(self.identity, F(1, 64))
        self.assertEqual(bracket.lo, F(1, 2))
        self.assertEqual(bracket.hi, F(33, 64))
        self.assertIsNotNone(bracket.witness)
        print("✓ test_min_delta_identity: EXITOSO")

    def test_min_delta_zigzag(self):
        """Test: Horquilla del zigzag entre sus refutaciones y certificaciones."""
        bracket = min_delta(self.zigzag, F(1, 16))
        self.assertGreaterEqual(bracket.lo, F(1, 4))
        self.assertLessEqual(bracket.hi, F(3, 8))
        self.assertLessEqual(bracket.hi - bracket.lo, F(1, 16))
        print("✓ test_min_delta_zigzag: EXITOSO")

    def test_pair_threshold(self):
        """Test: Umbral exacto del par (0,1) para la identidad."""
        bracket = pair_threshold(self.identity, 0, 1, F(1, 64))
        self.assertEqual((bracket.lo, bracket.hi), (F(1, 2), F(33, 64)))
        print("✓ test_pair_threshold: EXITOSO")

    def test_monotone_maps_never_crooked_below_half(self):
        """Test: Homeomorfismos PL aleatorios fallan (0,1) con δ ≤ 1/2 y su umbral es 1/2."""
        rng = np.random.default_rng(11)
        for i in range(100):
            size = int(rng.integers(0, 6))
            xs = sorted(rng.choice(np.arange(1, 32), size=size, replace=False).tolist())
            ys = sorted(rng.choice(np.arange(1, 32), size=size, replace=False).tolist())
            points = [(0, 0)] + [(F(int(x), 32), F(int(y), 32)) for x, y in zip(xs, ys)] + [(1, 1)]
            f = make_pl_map(points)
            if i % 2:
                f = make_pl_map([(x, 1 - y) for x, y in points])
            for delta in (F(1, 8), F(1, 4), F(1, 2)):
                self.assertEqual(check_pair(f, 0, 1, delta).status, PairStatus.FAILS)
            self.assertTrue(check_pair(f, 0, 1, F(1, 2) + F(1, 64)).holds)
            if i < 5:
                bracket = min_delta(f, F(1, 64))
                self.assertEqual((bracket.lo, bracket.hi), (F(1, 2), F(33, 64)))
        print("✓ test_monotone_maps_never_crooked_below_half: EXITOSO")

    def test_tent_horizon_refuted(self):
        """Test: Ningún iterado de la tienda es 3/10-torcido."""
        result = horizon(self.tent, F(3, 10), 6)
        self.assertIsNone(result.n_found)
        self.assertEqual(len(result.per_n), 6)
        self.assertTrue(all(v.status == GridStatus.REFUTED for v in result.per_n))
        self.assertEqual(result.per_n[0].mesh, F(3, 40))
        print("✓ test_tent_horizon_refuted: EXITOSO")

    def test_horizon_finds_first_certified(self):
        """Test: El zigzag está certificado desde n = 1 con δ = 2/5."""
        result = horizon(self.zigzag, F(2, 5), 3, F(1, 10))
        self.assertEqual(result.n_found, 1)
        self.assertEqual(len(result.per_n), 1)
        print("✓ test_horizon_finds_first_certified: EXITOSO")

    def test_partial_map_grid(self):
        """Test: Una restricción de diámetro pequeño se certifica sin refutaciones."""
        piece = restrict(self.identity, F(1, 2), 1)
        verdict = check_grid(piece, F(3, 10), F(1, 16))
        self.assertTrue(verdict.is_certified)
        self.assertFalse(check_grid(piece, F(1, 4), F(1, 16)).is_certified)
        print("✓ test_partial_map_grid: EXITOSO")


class TestTowerCrookedness(unittest.TestCase):
    """Tests para tower_crookedness sobre torres construidas."""

    def test_tower_levels(self):
        """Test: Una torre bajo la diagonal se certifica en cada nivel."""
        from src.models.inverse_limit import component_tower
        f = make_pl_map([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
        tower = component_tower(f, F(3, 4), 4)
        levels = tower_crookedness(tower, F(1, 2), F(1, 64))
        self.assertEqual([lv.k for lv in levels], [1, 2, 3, 4])
        self.assertTrue(all(lv.is_certified for lv in levels))
        self.assertEqual(levels[0].k_prime, 2)
        self.assertEqual(levels[-1].k_prime, 4)
        print("✓ test_tower_levels: EXITOSO")


if __name__ == '__main__':
    print("🌀 EJECUTANDO TESTS DE CROOKEDNESS")
    print("=" * 60)

    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTests(loader.loadTestsFromTestCase(TestCrookedness))
    suite.addTests(loader.loadTestsFromTestCase(TestTowerCrookedness))

    runner = unittest.TextTestRunner(verbosity=0, stream=open(os.devnull, 'w'))
    result = runner.run(suite)

    total_tests = result.testsRun
    failures = len(result.failures)
    errors = len(result.errors)
    passed = total_tests - failures - errors

    print(f"\n📈 ESTADÍSTICAS DE CROOKEDNESS:")
    print(f"   Tests ejecutados: {total_tests}")
    print(f"   Exitosos: {passed}")
    print(f"   Fallidos: {failures}")
    print(f"   Errores: {errors}")

    if failures > 0 or errors > 0:
        print(f"\n❌ FALLOS DETECTADOS:")
        for failure in result.failures + result.errors:
            print(f"   • {failure[0]}")
    else:
        print(f"\n🎉 ¡TODOS LOS TESTS DE CROOKEDNESS PASAN! 🎉")
