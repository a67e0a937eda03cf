#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests completos para FamilyService del proyecto crookedlab.

Estos tests verifican la funcionalidad del servicio de familias:
- Construcción de cada familia desde opciones de la CLI
- Lectura de documentos con digest
- Conversión y canonización
- Manejo de errores en el formato de respuesta
"""

import sys
import os
import shutil
import tempfile
import unittest
from fractions import Fraction as F
from unittest.mock import patch

# Configurar path para imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from src.models.constructors import cantor_descriptor, nowhere_dense_fixed
from src.models.family_models import FamilyMap, FamilyTag
from src.models.map_parser import serialize_map
from src.models.pl_map import PLMap, make_pl_map
from src.services.family_service import FamilyService, parse_cluster, parse_component


class TestFamilyService(unittest.TestCase):
    """Tests para la clase FamilyService."""

    def setUp(self):
        """Configurar servicio y directorio temporal."""
        self.service = FamilyService()
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Limpiar el directorio temporal."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def _write(self, name: str, text: str) -> str:
        path = os.path.join(self.temp_dir, name)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        return path

    def test_parse_cluster_and_component(self):
        """Test: Opciones compuestas de la CLI."""
        cluster = parse_cluster("1/4:3:1")
        self.assertEqual((cluster.position, cluster.oscillations, cluster.accumulating), (F(1, 4), 3, True))
        self.assertEqual(parse_component("1/10:1/8"), (F(1, 10), F(1, 8)))
        with self.assertRaises(ValueError):
            parse_cluster("1/4:3:2")
        with self.assertRaises(ValueError):
            parse_component("1/10")
        print("✓ test_parse_cluster_and_component: EXITOSO")

    def test_construct_each_family(self):
        """Test: Cada familia se construye con sus opciones mínimas."""
        cases = {
            "henderson": ({"notches": 2}, FamilyTag.HENDERSON),
            "nwd-fixed": ({"cantor_depth": 1}, FamilyTag.NOWHERE_DENSE_FIXED),
            "variant": ({"census_index": 3}, FamilyTag.ZERO_ATTRACTED_VARIANT),
            "double-sin": ({"levels": 2}, FamilyTag.DOUBLE_SIN),
            "arc": ({"levels": 2}, FamilyTag.ARC_EXAMPLE),
        }
        for family, (options, tag) in cases.items():
            result = self.service.construct(family, options)
            self.assertTrue(result['success'], result.get('error'))
            self.assertEqual(result['family_map'].family_tag, tag)
            self.assertTrue(result['text'].startswith("family v1\n"))
            self.assertEqual(result['sections'][0][0], "map")
        print("✓ test_construct_each_family: EXITOSO")

    def test_construct_options(self):
        """Test: Componentes, grupos explícitos y reflexión."""
        fm = self.service.build_family("nwd-fixed", {"components": ["1/10:1/10", "1/8:1/8"]})
        self.assertEqual(fm.map(F(1, 8)), F(1, 8))
        fm = self.service.build_family("variant", {"clusters": ["1/4:2:1"], "notches": 1})
        self.assertEqual(fm.marks, (F(1, 4),))
        self.assertEqual(fm.descriptor.notches, 1)
        fm = self.service.build_family("henderson", {"notches": 1, "reflect": True})
        self.assertTrue(fm.reflected)
        print("✓ test_construct_options: EXITOSO")

    def test_nwd_fixed_respects_zero_notches(self):
        """Test: --notches 0 construye la aplicación sin muescas."""
        fm = self.service.build_family("nwd-fixed", {"notches": 0, "cantor_depth": 1})
        self.assertEqual(fm.map, nowhere_dense_fixed(cantor_descriptor(1), 0).map)
        self.assertEqual(fm.marks, ())
        default = self.service.build_family("nwd-fixed", {"cantor_depth": 1})
        self.assertEqual(default.map, nowhere_dense_fixed(cantor_descriptor(1), 2).map)
        self.assertNotEqual(fm.map, default.map)
        print("✓ test_nwd_fixed_respects_zero_notches: EXITOSO")

    def test_construct_errors(self):
        """Test: Errores devueltos en el formato del servicio."""
        result = self.service.construct("unknown", {})
        self.assertFalse(result['success'])
        self.assertIn("unknown", result['error'])
        self.assertFalse(self.service.construct("henderson", {})['success'])
        self.assertFalse(self.service.construct("variant", {"census_index": 10})['success'])
        print("✓ test_construct_errors: EXITOSO")

    def test_load_map_and_family(self):
        """Test: Lectura de ambos formatos."""
        tent = make_pl_map([(0, 0), (F(1, 2), 1), (1, 0)])
        path = self._write("tent.plmap", serialize_map(tent))
        result = self.service.load(path)
        self.assertTrue(result['success'])
        self.assertIsInstance(result['document'], PLMap)
        self.assertIsNone(result['family_map'])
        self.assertEqual(len(result['digest']), 64)

        text = self.service.construct("henderson", {"notches": 1})['text']
        result = self.service.load(self._write("h.family", text))
        self.assertIsInstance(result['family_map'], FamilyMap)
        self.assertEqual(result['map'], result['family_map'].map)
        print("✓ test_load_map_and_family: EXITOSO")

    def test_load_errors(self):
        """Test: Archivo ausente o mal formado."""
        self.assertFalse(self.service.load(os.path.join(self.temp_dir, "missing.plmap"))['success'])
        bad = self._write("bad.plmap", "plmap v1\n0 0\n1 1\n")
        result = self.service.load(bad)
        self.assertFalse(result['success'])
        self.assertIn("línea 2", result['error'])
        print("✓ test_load_errors: EXITOSO")

    def test_convert(self):
        """Test: Canonización de aplicaciones y documentos de familia."""
        padded = make_pl_map([(0, 0), (F(1, 2), F(1, 2)), (1, 1)])
        path = self._write("padded.plmap", serialize_map(padded))
        result = self.service.convert(path, canonical=True)
        self.assertEqual(result['text'], "plmap v1\n0/1 0/1\n1/1 1/1\n")
        self.assertEqual(self.service.convert(path)['text'], serialize_map(padded))

        family = self._write("h.family", self.service.construct("henderson", {"notches": 1})['text'])
        self.assertFalse(self.service.convert(family, canonical=True)['success'])
        plain = self.service.convert(family, canonical=True, strip_family=True)
        self.assertTrue(plain['text'].startswith("plmap v1\n"))
        print("✓ test_convert: EXITOSO")

    @patch('src.services.family_service.write_text_file')
    def test_save_failure(self, mock_write):
        """Test: Fallo de escritura devuelve error."""
        mock_write.return_value = ""
        result = self.service.save("plmap v1\n", "/nonexistent/out.plmap")
        self.assertFalse(result['success'])
        mock_write.return_value = "/tmp/out.plmap"
        self.assertTrue(self.service.save("plmap v1\n", "/tmp/out.plmap")['success'])
        print("✓ test_save_failure: EXITOSO")

    def test_census_members(self):
        """Test: Diez miembros del censo."""
        members = self.service.census_members()
        self.assertEqual(len(members), 10)
        self.assertTrue(all(m.family_tag == FamilyTag.ZERO_ATTRACTED_VARIANT for m in members))
        print("✓ test_census_members: EXITOSO")


if __name__ == '__main__':
    print("🏭 EJECUTANDO TESTS DE FAMILY SERVICE")
    print("=" * 60)

    loader = unittest.TestLoader()
    suite = loader.loadTestsFromTestCase(TestFamilyService)

    runner = unittest.TextTestRunner(verbosity=0, stream=open(os.devnull, 'w'))
    result = runner.run(suite)

    total_tests = result.testsRun
    failures = len(result.failures)
    errors = len(result.errors)
    passed = total_tests - failures - errors

    print(f"\n📈 ESTADÍSTICAS DE FAMILY SERVICE:")
    print(f"   Tests ejecutados: {total_tests}")
    print(f"   Exitosos: {passed}")
    print(f"   Fallidos: {failures}")
    print(f"   Errores: {errors}")

    if failures > 0 or errors > 0:
        print(f"\n❌ FALLOS DETECTADOS:")
        for failure in result.failures + result.errors:
            print(f"   • {failure[0]}")
    else:
        print(f"\n🎉 ¡TODOS LOS TESTS DE FAMILY SERVICE PASAN! 🎉")
