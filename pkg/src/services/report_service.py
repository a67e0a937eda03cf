#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de informes para la lógica de caracterización e invariantes.
Responsabilidad única: Generar informes de caracterización, condiciones,
invariantes y censos de no conjugación.
"""

import csv
import io
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from src.models.family_models import FamilyMap
from src.models.inverse_limit import (
    DEFAULT_DELTA_SCHEDULE, DEFAULT_DEPTH, DEFAULT_MESH, OverallStatus,
    characterization_report, lemma_conditions,
)
from src.models.invariants import (
    NotApplicableError, accumulation_descriptor, census, distinguish,
    entropy_estimate, fix_signature, monotonicity_decomposition, strict_critical_points,
)
from src.models.pl_map import PLMap, classify_diagonal, reflect
from src.utils.report_formatter import ReportFormatter

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"

_OVERALL_OUTCOME = {
    OverallStatus.CONDITIONS_MET: CERTIFIED,
    OverallStatus.REFUTED: REFUTED,
    OverallStatus.INCONCLUSIVE: INCONCLUSIVE,
}


def default_lemma_etas(f: PLMap, count: int = 10) -> List[Fraction]:
    """Sucesión η_N = 2^-N (o 1 - 2^-N sobre la diagonal) para N = 1..count."""
    diagonal = classify_diagonal(f)
    above = diagonal.is_above and not diagonal.is_under
    etas = [Fraction(1, 2 ** n) for n in range(1, count + 1)]
    return [1 - eta for eta in etas] if above else etas


class ReportService:
    """
    Servicio que encapsula los informes compuestos.
    Maneja caracterización, condiciones de torcimiento, invariantes y censos.
    """

    def __init__(self):
        """Inicializa el servicio de informes."""
        logger.info("Servicio de informes inicializado")

    def characterize(self, f: PLMap, family_map: Optional[FamilyMap] = None,
                     eta_grid: Optional[Sequence[Fraction]] = None, depth: int = DEFAULT_DEPTH,
                     delta_schedule: Sequence[Fraction] = DEFAULT_DELTA_SCHEDULE,
                     mesh: Fraction = DEFAULT_MESH) -> Dict[str, Any]:
        """Informe de caracterización; los testigos de la familia encabezan la malla de η."""
        try:
            witnesses = family_map.witnesses if family_map is not None else ()
            report = characterization_report(f, eta_grid, depth, delta_schedule, mesh, witnesses)
            logger.info(f"Caracterización: {report.overall.value}")
            return {
                'success': True,
                'outcome': _OVERALL_OUTCOME[report.overall],
                'report': report,
                'sections': ReportFormatter.characterization(report),
            }
        except Exception as e:
            logger.error(f"Error generando la caracterización: {str(e)}")
            return {'success': False, 'error': str(e)}

    def lemma(self, f: PLMap, delta: Fraction, eta_sequence: Optional[Sequence[Fraction]] = None,
              m_search_max: int = 3, mesh: Fraction = DEFAULT_MESH) -> Dict[str, Any]:
        """Condiciones (a), (b) y (c) con la primera combinación N, m que las cumple."""
        try:
            etas = list(eta_sequence) if eta_sequence else default_lemma_etas(f)
            report = lemma_conditions(f, delta, etas, m_search_max, mesh)
            return {
                'success': True,
                'outcome': CERTIFIED if report.success else INCONCLUSIVE,
                'report': report,
                'sections': ReportFormatter.lemma(report),
            }
        except Exception as e:
            logger.error(f"Error evaluando las condiciones: {str(e)}")
            return {'success': False, 'error': str(e)}

    def invariants(self, f: PLMap, family_map: Optional[FamilyMap] = None,
                   n_max: int = 6) -> Dict[str, Any]:
        """Invariantes de conjugación de una aplicación."""
        try:
            decomposition = monotonicity_decomposition(f)
            signature = fix_signature(f)
            entropy = entropy_estimate(f, n_max)
            items = [
                ("fix_signature", str(signature)),
                ("fix_has_zero", signature.has_zero),
                ("fix_has_one", signature.has_one),
                ("increasing_pieces", len(decomposition.increasing)),
                ("decreasing_pieces", len(decomposition.decreasing)),
                ("plateaus", len(decomposition.plateaus)),
                ("strict_critical_points", strict_critical_points(f)),
                ("diagonal_class", classify_diagonal(f)),
                ("reflected_class", classify_diagonal(reflect(f))),
                ("lap_profile", list(entropy.laps)),
                ("entropy_slope", f"{entropy.slope:.6f}"),
            ]
            try:
                accumulation = accumulation_descriptor(family_map)
                items.extend([("accumulation_count", accumulation.count),
                              ("accumulation_marks", list(accumulation.positions))])
            except NotApplicableError:
                items.append(("accumulation_count", "not-applicable"))
            return {'success': True, 'outcome': CERTIFIED, 'sections': [("invariants", items)]}
        except Exception as e:
            logger.error(f"Error calculando invariantes: {str(e)}")
            return {'success': False, 'error': str(e)}

    def distinguish(self, first: FamilyMap, second: FamilyMap,
                    lap_depth: Optional[int] = None) -> Dict[str, Any]:
        """Testigo de no conjugación entre dos miembros de familia."""
        try:
            if not isinstance(first, FamilyMap) or not isinstance(second, FamilyMap):
                raise NotApplicableError("distinguish requiere dos documentos family v1")
            witness = distinguish(first, second, lap_depth)
            items = [
                ("first", first.family_tag),
                ("second", second.family_tag),
                ("witness_kind", witness.kind if witness else None),
                ("detail", witness.detail if witness else None),
            ]
            return {
                'success': True,
                'outcome': CERTIFIED if witness else INCONCLUSIVE,
                'witness': witness,
                'sections': [("distinguish", items)],
            }
        except Exception as e:
            logger.error(f"Error distinguiendo aplicaciones: {str(e)}")
            return {'success': False, 'error': str(e)}

    def census(self, members: Sequence[FamilyMap], lap_depth: Optional[int] = None) -> Dict[str, Any]:
        """Censo por pares exportado como CSV (pair_id, witness_kind)."""
        try:
            rows = census(members, lap_depth)
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["pair_id", "witness_kind", "detail"])
            for row in rows:
                writer.writerow([row.pair_id, row.witness_kind, row.witness.detail if row.witness else ""])
            distinguished = sum(1 for row in rows if row.witness is not None)
            return {
                'success': True,
                'outcome': CERTIFIED if distinguished == len(rows) else INCONCLUSIVE,
                'rows': rows,
                'csv': buffer.getvalue(),
                'sections': [("census", [
                    ("members", len(members)),
                    ("pairs", len(rows)),
                    ("distinguished", distinguished),
                ] + [(f"member_{i}_marks", list(m.marks)) for i, m in enumerate(members)])],
            }
        except Exception as e:
            logger.error(f"Error generando el censo: {str(e)}")
            return {'success': False, 'error': str(e)}

