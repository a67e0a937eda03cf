#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de familias para la lógica de construcción y gestión de archivos.
Responsabilidad única: Construir familias y leer/escribir documentos de aplicaciones.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.models.constructors import (
    arc_example_map, cantor_descriptor, census_schedules, double_sin_map,
    finite_set_descriptor, henderson, nowhere_dense_fixed, zero_attracted_variant,
)
from src.models.family_models import ClusterSpec, FamilyMap, OscillationSchedule, reflect_family
from src.models.map_parser import parse_document, serialize_family, serialize_map
from src.models.pl_map import PLMap, canonicalize
from src.utils.helpers import file_digest, parse_rational, read_text_file, write_text_file
from src.utils.report_formatter import ReportFormatter

logger = logging.getLogger(__name__)

Document = Union[PLMap, FamilyMap]

FAMILY_NAMES = ("henderson", "nwd-fixed", "variant", "double-sin", "arc")


def parse_cluster(text: str) -> ClusterSpec:
    """
    Interpreta un grupo 'posición:oscilaciones:acumulativo'.

    Raises:
        ValueError: Si el texto no tiene tres campos válidos
    """
    fields = text.split(":")
    if len(fields) != 3 or fields[2] not in ("0", "1"):
        raise ValueError(f"Grupo inválido {text!r}, se espera posición:oscilaciones:0|1")
    return ClusterSpec(parse_rational(fields[0]), int(fields[1]), fields[2] == "1")


def parse_component(text: str) -> Tuple:
    """Interpreta un componente 'lo:hi' de un conjunto fijo."""
    fields = text.split(":")
    if len(fields) != 2:
        raise ValueError(f"Componente inválido {text!r}, se espera lo:hi")
    return parse_rational(fields[0]), parse_rational(fields[1])


class FamilyService:
    """
    Servicio que encapsula la construcción de familias y la E/S de documentos.
    Maneja los formatos plmap v1 y family v1.
    """

    def __init__(self):
        """Inicializa el servicio de familias."""
        logger.info("Servicio de familias inicializado")

    def build_family(self, family: str, options: Dict[str, Any]) -> FamilyMap:
        """
        Construye un miembro de familia a partir de las opciones de la CLI.

        Args:
            family: Uno de FAMILY_NAMES
            options: notches, base_resolution, cantor_depth, components,
                clusters, census_index, levels, reflect

        Raises:
            ValueError: Familia desconocida o parámetros inválidos
        """
        base = options.get("base_resolution") or 8
        if family == "henderson":
            fm = henderson(self._required(options, "notches"), base)
        elif family == "nwd-fixed":
            fm = nowhere_dense_fixed(self._fixed_set(options), self._notches(options), base)
        elif family == "variant":
            fm = zero_attracted_variant(self._schedule(options), base)
        elif family == "double-sin":
            fm = double_sin_map(self._required(options, "levels"))
        elif family == "arc":
            fm = arc_example_map(self._required(options, "levels"))
        else:
            raise ValueError(f"Familia desconocida {family!r}; opciones: {', '.join(FAMILY_NAMES)}")
        if options.get("reflect"):
            fm = reflect_family(fm)
        return fm

    @staticmethod
    def _notches(options: Dict[str, Any]) -> int:
        notches = options.get("notches")
        return 2 if notches is None else notches

    def _required(self, options: Dict[str, Any], name: str) -> int:
        value = options.get(name)
        if value is None:
            raise ValueError(f"Falta el parámetro --{name.replace('_', '-')}")
        return value

    def _fixed_set(self, options: Dict[str, Any]):
        components: Optional[Sequence[str]] = options.get("components")
        if components:
            return finite_set_descriptor([parse_component(c) for c in components])
        depth = options.get("cantor_depth")
        return cantor_descriptor(1 if depth is None else depth)

    def _schedule(self, options: Dict[str, Any]) -> OscillationSchedule:
        clusters: Optional[Sequence[str]] = options.get("clusters")
        if clusters:
            return OscillationSchedule(tuple(parse_cluster(c) for c in clusters), self._notches(options))
        schedules = census_schedules()
        index = options.get("census_index") or 0
        if not 0 <= index < len(schedules):
            raise ValueError(f"Índice de censo fuera de rango: {index}")
        return schedules[index]

    def construct(self, family: str, options: Dict[str, Any]) -> Dict[str, Any]:
        """Construye una familia y devuelve el documento family v1."""
        try:
            fm = self.build_family(family, options)
            logger.info(f"Familia {fm.family_tag.value} construida: {len(fm.map.xs)} breakpoints")
            return {
                'success': True,
                'family_map': fm,
                'text': serialize_family(fm),
                'sections': ReportFormatter.family_summary(fm),
            }
        except Exception as e:
            logger.error(f"Error construyendo la familia {family}: {str(e)}")
            return {'success': False, 'error': str(e)}

    def load(self, path: str) -> Dict[str, Any]:
        """Lee un documento plmap v1 o family v1 y calcula su digest."""
        try:
            document = parse_document(read_text_file(path))
            f = document.map if isinstance(document, FamilyMap) else document
            return {
                'success': True,
                'document': document,
                'map': f,
                'family_map': document if isinstance(document, FamilyMap) else None,
                'digest': file_digest(path),
            }
        except Exception as e:
            logger.error(f"Error leyendo {path}: {str(e)}")
            return {'success': False, 'error': str(e)}

    def save(self, text: str, path: str) -> Dict[str, Any]:
        """Escribe un documento serializado."""
        written = write_text_file(text, path)
        if not written:
            return {'success': False, 'error': f"No se pudo escribir {path}"}
        return {'success': True, 'path': written}

    def convert(self, path: str, canonical: bool = False, strip_family: bool = False) -> Dict[str, Any]:
        """
        Normaliza un documento: opcionalmente canoniza breakpoints o
        descarta el descriptor de familia.
        """
        loaded = self.load(path)
        if not loaded['success']:
            return loaded
        try:
            document: Document = loaded['document']
            if isinstance(document, FamilyMap) and not strip_family:
                if canonical:
                    raise ValueError("Canonizar descartaría breakpoints descriptivos; use --plain")
                text = serialize_family(document)
            else:
                f = loaded['map']
                text = serialize_map(canonicalize(f) if canonical else f)
            return {'success': True, 'text': text, 'digest': loaded['digest']}
        except Exception as e:
            logger.error(f"Error convirtiendo {path}: {str(e)}")
            return {'success': False, 'error': str(e)}

    def census_members(self) -> List[FamilyMap]:
        """Los diez miembros del censo de variantes 0-atraídas."""
        return [zero_attracted_variant(schedule) for schedule in census_schedules()]
