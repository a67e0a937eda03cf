#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo para el formato de informes crookedlab-report v1.
Responsabilidad única: estructurar veredictos en secciones clave-valor
con racionales exactos y su representación decimal.
"""

import logging
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from src.utils.config import get_crookedness_config
from src.utils.helpers import format_rational, render_decimal

logger = logging.getLogger(__name__)

REPORT_HEADER = "crookedlab-report v1"

Section = Tuple[str, List[Tuple[str, str]]]


def format_value(value: Any) -> str:
    """
    Representación textual estable de un valor de informe.

    Los racionales se escriben p/q seguidos de su decimal truncado.
    """
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "none"
    if isinstance(value, Fraction):
        places = get_crookedness_config()["decimal_places"]
        return f"{format_rational(value)} ({render_decimal(value, places)})"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    if hasattr(value, "value") and hasattr(value, "name"):
        return str(value.value)
    return str(value)


def format_interval(lo: Fraction, hi: Fraction) -> str:
    """Intervalo cerrado con extremos exactos."""
    return f"[{format_rational(lo)}, {format_rational(hi)}]"


class ReportDocument:
    """
    Documento de informe determinista.

    El campo de tiempo es el único no determinista y se omite con
    include_timing=False.
    """

    def __init__(self, command: str, version: str):
        self.command = command
        self.version = version
        self.inputs: List[Tuple[str, str]] = []
        self.sections: List[Section] = []
        self.timing: Optional[float] = None

    def add_input(self, name: str, digest: str) -> None:
        self.inputs.append((name, digest))

    def add_section(self, name: str, items: Iterable[Tuple[str, Any]]) -> None:
        self.sections.append((name, [(key, format_value(value)) for key, value in items]))

    def extend(self, sections: Sequence[Tuple[str, Iterable[Tuple[str, Any]]]]) -> None:
        for name, items in sections:
            self.add_section(name, items)

    def render(self, include_timing: bool = True) -> str:
        lines = [
            REPORT_HEADER,
            f"tool_version = {self.version}",
            f"command = {self.command}",
        ]
        for name, digest in self.inputs:
            lines.append(f"input_sha256 = {name} {digest}")
        for name, items in self.sections:
            lines.append("")
            lines.append(f"[{name}]")
            lines.extend(f"{key} = {value}" for key, value in items)
        if include_timing and self.timing is not None:
            lines.append("")
            lines.append("[timing]")
            lines.append(f"seconds = {self.timing:.3f}")
        return "\n".join(lines) + "\n"


class ReportFormatter:
    """
    Formateador de veredictos con funciones puras.
    Cada método devuelve una lista de secciones (nombre, items).
    """

    @staticmethod
    def map_summary(f, name: str = "map") -> List[Section]:
        """Resumen de una aplicación: breakpoints, laps, clase y puntos fijos."""
        from src.models.pl_map import classify_diagonal, fixed_points, has_plateau, is_surjective, lap_number
        fix = fixed_points(f)
        return [(name, [
            ("breakpoints", len(f.xs)),
            ("laps", lap_number(f)),
            ("has_plateau", has_plateau(f)),
            ("surjective", is_surjective(f)),
            ("diagonal_class", classify_diagonal(f)),
            ("fixed_components", len(fix)),
            ("fixed_set", " ".join(format_interval(c.lo, c.hi) for c in fix) or "none"),
        ])]

    @staticmethod
    def family_summary(fm) -> List[Section]:
        sections = ReportFormatter.map_summary(fm.map)
        sections.append(("family", [
            ("tag", fm.family_tag),
            ("reflected", fm.reflected),
            ("witnesses", list(fm.witnesses)),
            ("marks", list(fm.marks)),
        ] + [(f"param_{k}", v) for k, v in fm.descriptor.to_params().items()]))
        return sections

    @staticmethod
    def pair_verdict(verdict, a: Fraction, b: Fraction, delta: Fraction) -> List[Section]:
        items = [
            ("a", a), ("b", b), ("delta", delta),
            ("status", verdict.status),
            ("vacuous", verdict.vacuous),
        ]
        if verdict.witness:
            items.extend([("witness_c", verdict.witness[0]), ("witness_d", verdict.witness[1])])
        if verdict.trace:
            items.extend([("trace_c_prime", verdict.trace[0]), ("trace_d_prime", verdict.trace[1])])
        return [("pair", items)]

    @staticmethod
    def _grid_items(verdict) -> List[Tuple[str, Any]]:
        items = [
            ("status", verdict.status),
            ("delta", verdict.delta),
            ("mesh", verdict.mesh),
            ("pairs_checked", verdict.pairs_checked),
        ]
        if verdict.witness:
            a, b, c, d = verdict.witness
            items.extend([("witness_a", a), ("witness_b", b), ("witness_c", c), ("witness_d", d)])
        return items

    @staticmethod
    def grid_verdict(verdict, name: str = "grid") -> List[Section]:
        return [(name, ReportFormatter._grid_items(verdict))]

    @staticmethod
    def horizon(result) -> List[Section]:
        sections: List[Section] = [("horizon", [
            ("delta", result.delta),
            ("n_max", result.n_max),
            ("n_found", result.n_found),
        ])]
        for n, verdict in enumerate(result.per_n, start=1):
            sections.append((f"horizon.n{n}", ReportFormatter._grid_items(verdict)))
        return sections

    @staticmethod
    def tower(tower) -> List[Section]:
        items = [("eta", tower.eta), ("depth", tower.depth), ("above_diagonal", tower.above_diagonal)]
        items.extend(
            (f"level_{i}", format_interval(level.lo, level.hi))
            for i, level in enumerate(tower.levels, start=1)
        )
        return [("tower", items)]

    @staticmethod
    def tower_levels(levels, delta: Fraction, prefix: str = "tower_crookedness") -> List[Section]:
        sections: List[Section] = [(prefix, [
            ("delta", delta),
            ("certified_levels", sum(1 for lv in levels if lv.is_certified)),
            ("levels", len(levels)),
        ])]
        for lv in levels:
            items = [("k", lv.k), ("k_prime", lv.k_prime), ("vacuous", lv.vacuous)]
            items.extend(ReportFormatter._grid_items(lv.verdict))
            sections.append((f"{prefix}.k{lv.k}", items))
        return sections

    @staticmethod
    def characterization(report) -> List[Section]:
        fix = report.fix_check
        sections: List[Section] = [("characterization", [
            ("diagonal_class", report.diagonal_class),
            ("fix_nowhere_dense", fix.nowhere_dense),
            ("fix_interval", format_interval(fix.interval.lo, fix.interval.hi) if fix.interval else None),
            ("fix_resolution", fix.resolution),
            ("depth", report.depth),
            ("mesh", report.mesh),
            ("delta_schedule", list(report.delta_schedule)),
            ("etas_examined", len(report.eta_search)),
            ("overall", report.overall),
            ("eta", report.eta),
            ("reason", report.reason or None),
        ])]
        for i, record in enumerate(report.eta_search, start=1):
            att = record.attraction
            items = [
                ("eta", record.eta),
                ("attraction_status", att.status if att else None),
                ("attraction_steps", att.steps if att else None),
                ("attraction_limit",
                 format_interval(att.limit_component.lo, att.limit_component.hi)
                 if att and att.limit_component else None),
                ("passed", record.passed),
                ("note", record.note or None),
            ]
            if record.tower:
                items.append(("level_1", format_interval(record.tower.levels[0].lo, record.tower.levels[0].hi)))
            for rec in record.deltas:
                certified = [lv.k_prime for lv in rec.levels]
                items.append((f"delta {format_rational(rec.delta)}",
                              f"certified={format_value(rec.certified)} trivial={format_value(rec.trivial)} "
                              f"k_prime={format_value(certified)}"))
            sections.append((f"eta.{i}", items))
        return sections

    @staticmethod
    def lemma(report) -> List[Section]:
        return [("lemma_conditions", [
            ("delta", report.delta),
            ("reflected", report.reflected),
            ("n", report.n_index),
            ("m", report.m),
            ("eta_n", report.eta_n),
            ("a_bound", report.delta / 12),
            ("a_pass", report.condition_a),
            ("b_distance_sq_lower", report.distance.lower_sq),
            ("b_distance_sq_upper", report.distance.upper_sq),
            ("b_distance_decimal", f"[{report.distance.lower_decimal}, {report.distance.upper_decimal}]"),
            ("b_bound", report.delta / 24),
            ("b_pass", report.condition_b),
            ("c_delta", report.delta / 3),
            ("c_status", report.grid_verdict.status),
            ("c_mesh", report.grid_verdict.mesh),
            ("c_pass", report.condition_c),
            ("success", report.success),
        ])]
