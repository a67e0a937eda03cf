#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests para invariantes de conjugación del proyecto crookedlab.

Verifican:
- Descomposición en monotonía y puntos críticos
- Firma del conjunto fijo y marcas de acumulación
- Estimación de entropía por laps
- Testigos de no conjugación y censo
"""

import sys
import os
import math
import unittest
from fractions import Fraction as F

import numpy as np

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.models.constructors import census_schedules, henderson, zero_attracted_variant
from src.models.invariants import (
    ComponentKind, NotApplicableError, WitnessKind, accumulation_descriptor,
    census, conjugate_family, distinguish, entropy_estimate, fix_signature,
    lap_profile, monotonicity_decomposition, strict_critical_points,
)
from src.models.pl_map import Component, identity_map, make_pl_map


class TestInvariants(unittest.TestCase):
    """Tests para los invariantes individuales."""

    def setUp(self):
        """Configurar aplicaciones de referencia."""
        self.tent = make_pl_map([(0, 0), (F(1, 2), 1), (1, 0)])
        self.plateau = make_pl_map([(0, 0), (F(1, 3), F(1, 2)), (F(2, 3), F(1, 2)), (1, 1)])

    def test_monotonicity_decomposition(self):
        """Test: Tramos de la tienda y de una meseta."""
        dec = monotonicity_decomposition(self.tent)
        self.assertEqual(dec.increasing, (Component(0, F(1, 2)),))
        self.assertEqual(dec.decreasing, (Component(F(1, 2), 1),))
        self.assertEqual(dec.plateaus, ())
        self.assertEqual(monotonicity_decomposition(self.plateau).plateaus,
                         (Component(F(1, 3), F(2, 3)),))
        print("✓ test_monotonicity_decomposition: EXITOSO")

    def test_strict_critical_points(self):
        """Test: Las mesetas no generan puntos críticos estrictos."""
        self.assertEqual(strict_critical_points(self.tent), [F(1, 2)])
        self.assertEqual(strict_critical_points(self.plateau), [])
        print("✓ test_strict_critical_points: EXITOSO")

    def test_fix_signature(self):
        """Test: Tipos de componentes fijas."""
        sig = fix_signature(self.tent)
        self.assertEqual(sig.kinds, (ComponentKind.POINT, ComponentKind.POINT))
        self.assertTrue(sig.has_zero)
        self.assertFalse(sig.has_one)
        self.assertEqual(sig.reversed().has_one, True)
        self.assertEqual(fix_signature(identity_map()).kinds, (ComponentKind.INTERVAL,))
        print("✓ test_fix_signature: EXITOSO")

    def test_accumulation_requires_family(self):
        """Test: Una PLMap sin descriptor no tiene marcas."""
        with self.assertRaises(NotApplicableError):
            accumulation_descriptor(self.tent)
        data = accumulation_descriptor(henderson(2))
        self.assertEqual((data.count, data.positions), (1, (F(1),)))
        print("✓ test_accumulation_requires_family: EXITOSO")

    def test_entropy_estimate(self):
        """Test: La tienda duplica laps y Henderson no crece."""
        estimate = entropy_estimate(self.tent, 4)
        self.assertEqual(estimate.laps, (2, 4, 8, 16))
        self.assertAlmostEqual(estimate.slope, math.log(2), places=9)
        flat = entropy_estimate(henderson(0).map, 3)
        self.assertAlmostEqual(flat.slope, 0.0, places=9)
        with self.assertRaises(ValueError):
            entropy_estimate(self.tent, 1)
        self.assertEqual(list(lap_profile(self.tent, 3)), [2, 4, 8])
        print("✓ test_entropy_estimate: EXITOSO")


class TestDistinguish(unittest.TestCase):
    """Tests para distinguish y census."""

    def setUp(self):
        """Configurar miembros del censo."""
        self.members = [zero_attracted_variant(s) for s in census_schedules()]

    def test_accumulation_mismatch(self):
        """Test: Una y dos marcas de acumulación."""
        witness = distinguish(self.members[2], self.members[5], lap_depth=1)
        self.assertEqual(witness.kind, WitnessKind.ACCUMULATION_COUNT_MISMATCH)
        self.assertEqual(witness.detail, "1 vs 2")
        print("✓ test_accumulation_mismatch: EXITOSO")

    def test_conjugates_not_distinguished(self):
        """Test: Conjugar por homeomorfismos PL no crea testigos."""
        fm = henderson(1)
        increasing = make_pl_map([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])
        decreasing = make_pl_map([(0, 1), (F(1, 2), F(1, 3)), (1, 0)])
        self.assertIsNone(distinguish(fm, conjugate_family(fm, increasing), lap_depth=2))
        flipped = conjugate_family(fm, decreasing)
        self.assertTrue(flipped.reflected)
        self.assertIsNone(distinguish(fm, flipped, lap_depth=2))
        print("✓ test_conjugates_not_distinguished: EXITOSO")

    def test_random_conjugates_not_distinguished(self):
        """Test: Cien homeomorfismos PL aleatorios, crecientes y decrecientes, sin testigo."""
        rng = np.random.default_rng(5)
        fm = henderson(1)
        for i in range(100):
            size = int(rng.integers(0, 5))
            xs = sorted(rng.choice(np.arange(1, 32), size=size, replace=False).tolist())
            ys = sorted(rng.choice(np.arange(1, 32), size=size, replace=False).tolist())
            inner = [(F(int(x), 32), F(int(y), 32)) for x, y in zip(xs, ys)]
            if i % 2:
                points = [(0, 1)] + [(x, 1 - y) for x, y in inner] + [(1, 0)]
            else:
                points = [(0, 0)] + inner + [(1, 1)]
            conjugated = conjugate_family(fm, make_pl_map(points))
            self.assertEqual(conjugated.reflected, bool(i % 2))
            self.assertIsNone(distinguish(fm, conjugated, lap_depth=2))
        print("✓ test_random_conjugates_not_distinguished: EXITOSO")

    def test_census_all_distinguished(self):
        """Test: Los diez miembros se distinguen dos a dos."""
        rows = census(self.members, lap_depth=1)
        self.assertEqual(len(rows), 45)
        self.assertEqual(rows[0].pair_id, "0-1")
        self.assertTrue(all(row.witness is not None for row in rows))
        print("✓ test_census_all_distinguished: EXITOSO")


if __name__ == '__main__':
    print("🧬 EJECUTANDO TESTS DE INVARIANTES")
    print("=" * 60)

    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    suite.addTests(loader.loadTestsFromTestCase(TestInvariants))
    suite.addTests(loader.loadTestsFromTestCase(TestDistinguish))

    runner = unittest.TextTestRunner(verbosity=0, stream=open(os.devnull, 'w'))
    result = runner.run(suite)

    total_tests = result.testsRun
    failures = len(result.failures)
    errors = len(result.errors)
    passed = total_tests - failures - errors

    print(f"\n📈 ESTADÍSTICAS DE INVARIANTES:")
    print(f"   Tests ejecutados: {total_tests}")
    print(f"   Exitosos: {passed}")
    print(f"   Fallidos: {failures}")
    print(f"   Errores: {errors}")

    if failures > 0 or errors > 0:
        print(f"\n❌ FALLOS DETECTADOS:")
        for failure in result.failures + result.errors:
            print(f"   • {failure[0]}")
    else:
        print(f"\n🎉 ¡TODOS LOS TESTS DE INVARIANTES PASAN! 🎉")
