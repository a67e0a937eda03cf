#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de figuras y tablas.
Responsabilidad única: Generar SVG deterministas de gráficas y torres,
y CSV de umbrales de crookedness y niveles de torre.
"""

import csv
import io
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from src.models.crookedness import pair_threshold
from src.models.inverse_limit import Tower, component_tower
from src.models.pl_map import PLMap, iterate, lap_number
from src.utils.config import get_crookedness_config, get_plot_config
from src.utils.helpers import format_rational, render_decimal

logger = logging.getLogger(__name__)


class PlotService:
    """
    Servicio que encapsula la generación de figuras SVG y tablas CSV.
    La salida es reproducible byte a byte para las mismas entradas.
    """

    def __init__(self):
        """Inicializa el servicio de figuras."""
        self.config = get_plot_config()
        logger.info("Servicio de figuras inicializado")

    def _figure(self, title: str):
        plt.rcParams["svg.hashsalt"] = self.config["svg_hashsalt"]
        fig, ax = plt.subplots(figsize=self.config["figsize"], dpi=self.config["dpi"])
        ax.plot([0, 1], [0, 1], self.config["diagonal_style"], color="gray", linewidth=0.8)
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
        ax.set_aspect("equal")
        ax.set_title(title)
        ax.grid(alpha=0.3)
        return fig, ax

    def _draw(self, ax, f) -> None:
        # Solo para dibujo: los breakpoints se pasan a float
        ax.plot([float(x) for x in f.xs], [float(y) for y in f.ys],
                color="#1f4e9c", linewidth=self.config["line_width"])

    def _render_svg(self, fig) -> str:
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)
        return buffer.getvalue()

    def graph_svg(self, f: PLMap, title: str = "f") -> Dict[str, Any]:
        """Gráfica de f junto a la diagonal."""
        try:
            fig, ax = self._figure(f"{title}: {lap_number(f)} laps")
            self._draw(ax, f)
            return {'success': True, 'text': self._render_svg(fig)}
        except Exception as e:
            logger.error(f"Error dibujando la gráfica: {str(e)}")
            return {'success': False, 'error': str(e)}

    def iterate_svg(self, f: PLMap, n: int) -> Dict[str, Any]:
        """Gráfica del iterado f^n."""
        try:
            fn = iterate(f, n, get_crookedness_config()["max_breakpoints"])
            result = self.graph_svg(fn, title=f"f^{n}")
            if result['success']:
                result['laps'] = lap_number(fn)
            return result
        except Exception as e:
            logger.error(f"Error dibujando el iterado {n}: {str(e)}")
            return {'success': False, 'error': str(e)}

    def tower_svg(self, f: PLMap, eta: Fraction, depth: int) -> Dict[str, Any]:
        """Gráfica de f con las bandas de los niveles de la torre."""
        try:
            tower = component_tower(f, eta, depth)
            fig, ax = self._figure(f"torre η={format_rational(tower.eta)}")
            for level in tower.levels:
                ax.axvspan(float(level.lo), float(level.hi), color="#e07b39", alpha=self.config["band_alpha"])
            self._draw(ax, f)
            return {'success': True, 'text': self._render_svg(fig), 'tower': tower}
        except Exception as e:
            logger.error(f"Error dibujando la torre: {str(e)}")
            return {'success': False, 'error': str(e)}

    @staticmethod
    def _csv_text(header: List[str], rows: List[List[str]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()

    def tower_csv(self, f: PLMap, eta: Fraction, depth: int,
                  tower: Optional[Tower] = None) -> Dict[str, Any]:
        """Niveles de la torre: índice, extremos exactos y decimales."""
        try:
            tower = tower or component_tower(f, eta, depth)
            places = get_crookedness_config()["decimal_places"]
            rows = [
                [str(i), format_rational(level.lo), format_rational(level.hi),
                 render_decimal(level.lo, places), render_decimal(level.hi, places)]
                for i, level in enumerate(tower.levels, start=1)
            ]
            return {'success': True, 'text': self._csv_text(["level", "lo", "hi", "lo_decimal", "hi_decimal"], rows)}
        except Exception as e:
            logger.error(f"Error exportando la torre: {str(e)}")
            return {'success': False, 'error': str(e)}

    def heatmap_csv(self, f: PLMap, step: Fraction, resolution: Fraction) -> Dict[str, Any]:
        """
        Umbral de crookedness por par (a, b) con a < b en la malla de paso step.

        Cada celda es la horquilla (lo, hi] del menor δ con el que el par se cumple.
        """
        try:
            step = Fraction(step)
            if not 0 < step <= 1:
                raise ValueError(f"El paso debe estar en (0,1], recibido {step}")
            count = int(1 / step)
            values = [k * step for k in range(count + 1)]
            if values[-1] != 1:
                values.append(Fraction(1))
            rows = []
            for i, a in enumerate(values):
                for b in values[i + 1:]:
                    bracket = pair_threshold(f, a, b, resolution)
                    rows.append([format_rational(a), format_rational(b),
                                 format_rational(bracket.lo), format_rational(bracket.hi)])
            logger.info(f"Mapa de umbrales: {len(rows)} pares")
            return {'success': True, 'text': self._csv_text(["a", "b", "delta_lo", "delta_hi"], rows),
                    'cells': len(rows)}
        except Exception as e:
            logger.error(f"Error generando el mapa de umbrales: {str(e)}")
            return {'success': False, 'error': str(e)}
