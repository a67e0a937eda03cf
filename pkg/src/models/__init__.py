"""
Módulo de modelos y algoritmos exactos de crookedlab.

Este módulo proporciona funcionalidades de:
- Aplicaciones lineales a trozos con coordenadas racionales exactas
- Distancia de Hausdorff certificada entre gráficas
- Decisión de δ-crookedness entre pares y sobre mallas de valores
- Constructores de familias de dinámica nula con sus descriptores
- Invariantes de conjugación y testigos de no conjugación
- Torres de componentes, atracción e informes de caracterización
- Formatos de texto plmap v1 y family v1
"""

from .pl_map import (
    PLMap, PartialMap, Component, DiagonalClass, BreakpointLimitError,
    make_pl_map, evaluate, compose, iterate, preimage, lap_number,
    fixed_points, classify_diagonal, restrict, reflect,
)
from .hausdorff import DistanceCertificate, hausdorff_graph_distance
from .crookedness import check_pair, check_grid, min_delta, horizon, tower_crookedness
from .family_models import FamilyMap, FamilyTag, reflect_family
from .constructors import (
    henderson, nowhere_dense_fixed, zero_attracted_variant, double_sin_map,
    arc_example_map, cantor_descriptor,
)
from .invariants import NotApplicableError, distinguish, fix_signature, entropy_estimate
from .inverse_limit import (
    Tower, component_tower, attraction, nowhere_dense_fix_check,
    lemma_conditions, characterization_report,
)
from .map_parser import MapFormatError, parse_map, serialize_map, parse_family, serialize_family

__all__ = [
    'PLMap',
    'PartialMap',
    'Component',
    'DiagonalClass',
    'BreakpointLimitError',
    'make_pl_map',
    'evaluate',
    'compose',
    'iterate',
    'preimage',
    'lap_number',
    'fixed_points',
    'classify_diagonal',
    'restrict',
    'reflect',
    'DistanceCertificate',
    'hausdorff_graph_distance',
    'check_pair',
    'check_grid',
    'min_delta',
    'horizon',
    'tower_crookedness',
    'FamilyMap',
    'FamilyTag',
    'reflect_family',
    'henderson',
    'nowhere_dense_fixed',
    'zero_attracted_variant',
    'double_sin_map',
    'arc_example_map',
    'cantor_descriptor',
    'NotApplicableError',
    'distinguish',
    'fix_signature',
    'entropy_estimate',
    'Tower',
    'component_tower',
    'attraction',
    'nowhere_dense_fix_check',
    'lemma_conditions',
    'characterization_report',
    'MapFormatError',
    'parse_map',
    'serialize_map',
    'parse_family',
    'serialize_family',
]

# Versión del módulo
__version__ = '1.0.0'

# Metadatos del módulo
__author__ = 'Crookedlab Team'
__description__ = 'Modelos exactos de dinámica de aplicaciones del intervalo'
