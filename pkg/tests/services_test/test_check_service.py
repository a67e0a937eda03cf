#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests completos para CheckService del proyecto crookedlab.

Estos tests verifican la funcionalidad del servicio de comprobaciones:
- Desenlaces certified / refuted por tipo de chequeo
- Secciones de informe con testigos exactos
- Errores de parámetros devueltos sin excepción
"""

import sys
import os
import unittest
from fractions import Fraction as F

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.models.pl_map import identity_map, make_pl_map
from src.services.check_service import CERTIFIED, REFUTED, CheckService


class TestCheckService(unittest.TestCase):
    """Tests para la clase CheckService."""

    def setUp(self):
        """Configurar servicio y aplicaciones de referencia."""
        self.service = CheckService()
        self.identity = identity_map()
        self.tent = make_pl_map([(0, 0), (F(1, 2), 1), (1, 0)])
        self.zigzag = make_pl_map([(0, 0), (F(1, 3), F(7, 10)), (F(2, 3), F(3, 10)), (1, 1)])
        self.under = make_pl_map([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])

    def test_check_pair(self):
        """Test: Par refutado y par certificado."""
        result = self.service.check_pair(self.identity, F(0), F(1), F(2, 5))
        self.assertTrue(result['success'])
        self.assertEqual(result['outcome'], REFUTED)
        name, items = result['sections'][0]
        self.assertEqual(name, "pair")
        self.assertIn(("witness_c", F(0)), items)
        held = self.service.check_pair(self.zigzag, F(0), F(1), F(2, 5))
        self.assertEqual(held['outcome'], CERTIFIED)
        self.assertIn("trace_c_prime", dict(held['sections'][0][1]))
        print("✓ test_check_pair: EXITOSO")

    def test_check_grid(self):
        """Test: Certificación en malla y malla inválida."""
        result = self.service.check_grid(self.zigzag, F(2, 5), F(1, 10))
        self.assertEqual(result['outcome'], CERTIFIED)
        self.assertEqual(dict(result['sections'][0][1])['pairs_checked'], 55)
        refuted = self.service.check_grid(self.zigzag, F(1, 4), F(1, 10))
        self.assertEqual(refuted['outcome'], REFUTED)
        self.assertIn("witness_d", dict(refuted['sections'][0][1]))
        bad = self.service.check_grid(self.zigzag, F(1, 4), F(1, 2))
        self.assertFalse(bad['success'])
        print("✓ test_check_grid: EXITOSO")

    def test_check_horizon(self):
        """Test: La tienda no tiene iterados 3/10-torcidos."""
        result = self.service.check_horizon(self.tent, F(3, 10), 3)
        self.assertEqual(result['outcome'], REFUTED)
        names = [name for name, _ in result['sections']]
        self.assertEqual(names, ["horizon", "horizon.n1", "horizon.n2", "horizon.n3"])
        found = self.service.check_horizon(self.zigzag, F(2, 5), 2, F(1, 10))
        self.assertEqual(found['outcome'], CERTIFIED)
        print("✓ test_check_horizon: EXITOSO")

    def test_check_min_delta(self):
        """Test: Horquilla de la identidad."""
        result = self.service.check_min_delta(self.identity, F(1, 64))
        self.assertEqual(result['outcome'], CERTIFIED)
        items = dict(result['sections'][0][1])
        self.assertEqual((items['lo'], items['hi']), (F(1, 2), F(33, 64)))
        self.assertIn("witness_a", items)
        print("✓ test_check_min_delta: EXITOSO")

    def test_check_tower(self):
        """Test: Torre certificada y clase no admitida."""
        result = self.service.check_tower(self.under, F(3, 4), 4, F(1, 2), F(1, 64))
        self.assertEqual(result['outcome'], CERTIFIED)
        names = [name for name, _ in result['sections']]
        self.assertEqual(names[:2], ["tower", "tower_crookedness"])
        self.assertIn("tower_crookedness.k4", names)
        failed = self.service.check_tower(self.tent, F(1, 2), 2, F(1, 2), F(1, 64))
        self.assertFalse(failed['success'])
        print("✓ test_check_tower: EXITOSO")


if __name__ == '__main__':
    print("🔍 EJECUTANDO TESTS DE CHECK SERVICE")
    print("=" * 60)

    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestCheckService)

    runner = unittest.TextTestRunner(verbosity=0, stream=open(os.devnull, 'w'))
    result = runner.run(suite)

    total_tests = result.testsRun
    failures = len(result.failures)
    errors = len(result.errors)
    passed = total_tests - failures - errors

    print(f"\n📈 ESTADÍSTICAS DE CHECK SERVICE:")
    print(f"   Tests ejecutados: {total_tests}")
    print(f"   Exitosos: {passed}")
    print(f"   Fallidos: {failures}")
    print(f"   Errores: {errors}")

    if failures > 0 or errors > 0:
        print(f"\n❌ FALLOS DETECTADOS:")
        for failure in result.failures + result.errors:
            print(f"   • {failure[0]}")
    else:
        print(f"\n🎉 ¡TODOS LOS TESTS DE CHECK SERVICE PASAN! 🎉")
