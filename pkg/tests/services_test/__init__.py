"""
Módulo de tests para el directorio /services del proyecto crookedlab.

Este módulo proporciona tests para los servicios de aplicación:
- FamilyService: Construcción de familias y E/S de documentos
- CheckService: Comprobaciones de pares, mallas, horizonte y torres
- ReportService: Caracterización, condiciones, invariantes y censo
- PlotService: SVG deterministas y tablas CSV

Cada test está diseñado para identificar exactamente qué función falla cuando hay problemas.
"""

__version__ = '1.0.0'
__author__ = 'crookedlab Testing Team'
