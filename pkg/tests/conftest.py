#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuración global para las pruebas de pytest.
Define fixtures comunes para todos los tests.
"""

import os
import sys
from fractions import Fraction

import pytest

# Agregar la ruta raíz del proyecto al PYTHONPATH
# Esto permite importar módulos de forma absoluta en los tests
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.models.map_parser import serialize_map
from src.models.pl_map import identity_map, make_pl_map


@pytest.fixture(scope="session")
def project_root():
    """Devuelve la ruta raíz del proyecto."""
    return os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))


@pytest.fixture
def tent():
    """Aplicación tienda completa: 0 -> 1 -> 0."""
    return make_pl_map([(0, 0), (Fraction(1, 2), 1), (1, 0)])


@pytest.fixture
def identity():
    """La identidad de [0,1]."""
    return identity_map()


@pytest.fixture
def plateau_map():
    """Aplicación creciente con una meseta en y = 1/2."""
    return make_pl_map([(0, 0), (Fraction(1, 3), Fraction(1, 2)), (Fraction(2, 3), Fraction(1, 2)), (1, 1)])


@pytest.fixture
def tent_file(tmp_path, tent):
    """Archivo plmap v1 temporal con la tienda."""
    path = tmp_path / "tent.plmap"
    path.write_text(serialize_map(tent), encoding="utf-8", newline="\n")
    return str(path)


@pytest.fixture
def identity_file(tmp_path, identity):
    """Archivo plmap v1 temporal con la identidad."""
    path = tmp_path / "identity.plmap"
    path.write_text(serialize_map(identity), encoding="utf-8", newline="\n")
    return str(path)
