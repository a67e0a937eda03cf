"""
Módulo de tests para el directorio /models del proyecto crookedlab.

Este módulo proporciona tests comprehensivos para:
- PLMap: Aritmética exacta, composición, preimágenes y clasificación diagonal
- Hausdorff: Certificados de distancia entre gráficas
- Crookedness: Pares, mallas, δ mínimo, horizonte y torres
- Constructors: Familias de dinámica nula y sus descriptores
- Invariants: Invariantes de conjugación y censo
- InverseLimit: Torres de componentes, atracción y caracterización
- MapParser: Formatos plmap v1 y family v1
- Oráculo: Contraste con muestreo denso en coma flotante

Cada test está diseñado para identificar exactamente qué función falla cuando hay problemas.
"""

__version__ = '1.0.0'
__author__ = 'crookedlab Testing Team'
