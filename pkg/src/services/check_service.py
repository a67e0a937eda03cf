#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de comprobaciones de crookedness.
Responsabilidad única: Ejecutar los chequeos de pares, mallas, horizontes y torres.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional

from src.models.crookedness import check_grid, check_pair, horizon, min_delta, tower_crookedness
from src.models.inverse_limit import component_tower
from src.models.pl_map import PLMap
from src.utils.report_formatter import ReportFormatter

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


class CheckService:
    """
    Servicio que encapsula las comprobaciones de δ-crookedness.
    Cada resultado incluye un desenlace (certified, refuted, inconclusive)
    y las secciones del informe.
    """

    def __init__(self):
        """Inicializa el servicio de comprobaciones."""
        logger.info("Servicio de comprobaciones inicializado")

    def check_pair(self, f: PLMap, a: Fraction, b: Fraction, delta: Fraction) -> Dict[str, Any]:
        """Decide exactamente un par (a, b)."""
        try:
            verdict = check_pair(f, a, b, delta)
            return {
                'success': True,
                'outcome': CERTIFIED if verdict.holds else REFUTED,
                'verdict': verdict,
                'sections': ReportFormatter.pair_verdict(verdict, a, b, delta),
            }
        except Exception as e:
            logger.error(f"Error comprobando el par: {str(e)}")
            return {'success': False, 'error': str(e)}

    def check_grid(self, f: PLMap, delta: Fraction, mesh: Fraction) -> Dict[str, Any]:
        """Comprueba todos los pares de la malla."""
        try:
            verdict = check_grid(f, delta, mesh)
            logger.info(f"Malla δ={delta}, mesh={mesh}: {verdict.status.value} "
                        f"({verdict.pairs_checked} pares)")
            return {
                'success': True,
                'outcome': CERTIFIED if verdict.is_certified else REFUTED,
                'verdict': verdict,
                'sections': ReportFormatter.grid_verdict(verdict),
            }
        except Exception as e:
            logger.error(f"Error comprobando la malla: {str(e)}")
            return {'success': False, 'error': str(e)}

    def check_horizon(self, f: PLMap, delta: Fraction, n_max: int,
                      mesh: Optional[Fraction] = None) -> Dict[str, Any]:
        """Busca el menor iterado certificado."""
        try:
            result = horizon(f, delta, n_max, mesh)
            return {
                'success': True,
                'outcome': CERTIFIED if result.n_found is not None else REFUTED,
                'horizon': result,
                'sections': ReportFormatter.horizon(result),
            }
        except Exception as e:
            logger.error(f"Error calculando el horizonte: {str(e)}")
            return {'success': False, 'error': str(e)}

    def check_min_delta(self, f: PLMap, resolution: Fraction) -> Dict[str, Any]:
        """Horquilla del menor δ certificado en malla."""
        try:
            bracket = min_delta(f, resolution)
            items = [("lo", bracket.lo), ("hi", bracket.hi), ("resolution", resolution)]
            if bracket.witness:
                a, b, c, d = bracket.witness
                items.extend([("witness_a", a), ("witness_b", b), ("witness_c", c), ("witness_d", d)])
            return {
                'success': True,
                'outcome': CERTIFIED,
                'bracket': bracket,
                'sections': [("min_delta", items)],
            }
        except Exception as e:
            logger.error(f"Error buscando δ mínimo: {str(e)}")
            return {'success': False, 'error': str(e)}

    def check_tower(self, f: PLMap, eta: Fraction, depth: int, delta: Fraction,
                    mesh: Fraction) -> Dict[str, Any]:
        """Construye la torre de η y comprueba cada nivel."""
        try:
            tower = component_tower(f, eta, depth)
            levels = tower_crookedness(tower, delta, min(mesh, delta))
            certified = all(level.is_certified for level in levels)
            return {
                'success': True,
                'outcome': CERTIFIED if certified else REFUTED,
                'tower': tower,
                'levels': levels,
                'sections': ReportFormatter.tower(tower) + ReportFormatter.tower_levels(levels, delta),
            }
        except Exception as e:
            logger.error(f"Error comprobando la torre: {str(e)}")
            return {'success': False, 'error': str(e)}
