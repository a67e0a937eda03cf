#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de configuración para la aplicación.
Gestiona la configuración de logging y los parámetros de cálculo
leídos desde variables de entorno.
"""

import os
import logging
from datetime import datetime
from fractions import Fraction
from .helpers import get_logs_directory, parse_rational

logger = logging.getLogger(__name__)

# Valores por defecto de los parámetros de cálculo
DEFAULT_MAX_BREAKPOINTS = 2_000_000
DEFAULT_LAP_DEPTH = 6
DEFAULT_ATTRACTION_STEPS = 200
DEFAULT_ATTRACTION_TOL = Fraction(1, 2 ** 20)
DEFAULT_HAUSDORFF_TOL = Fraction(1, 2 ** 40)
DEFAULT_DECIMAL_PLACES = 10


def setup_logging():
    """Configura el sistema de logging para la aplicación."""
    # Usar la función de utilidad para obtener el directorio de logs
    logs_dir = get_logs_directory()

    # Nombre del archivo de log con timestamp
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_file = os.path.join(logs_dir, f"crookedlab_{timestamp}.log")

    level_name = os.environ.get("CROOKEDLAB_LOG_LEVEL", "INFO").upper()
    level = getattr(logging, level_name, logging.INFO)

    # Configuración básica de logging (stderr, stdout queda para reportes)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler()
        ]
    )

    # Reducir verbosidad de bibliotecas externas
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    logging.getLogger("PIL").setLevel(logging.WARNING)

    return logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    """Lee un entero positivo del entorno, con valor por defecto."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
        if value <= 0:
            raise ValueError(raw)
        return value
    except ValueError:
        logger.warning(f"Valor inválido para {name}: {raw!r}, usando {default}")
        return default


def _env_fraction(name: str, default: Fraction) -> Fraction:
    """Lee un racional positivo p/q del entorno, con valor por defecto."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = parse_rational(raw)
        if value <= 0:
            raise ValueError(raw)
        return value
    except ValueError:
        logger.warning(f"Valor inválido para {name}: {raw!r}, usando {default}")
        return default


def get_crookedness_config():
    """Obtiene los parámetros de cálculo exacto desde el entorno."""
    return {
        "max_breakpoints": _env_int("CROOKEDLAB_MAX_BREAKPOINTS", DEFAULT_MAX_BREAKPOINTS),
        "lap_depth": _env_int("CROOKEDLAB_LAP_DEPTH", DEFAULT_LAP_DEPTH),
        "attraction_steps": _env_int("CROOKEDLAB_ATTRACTION_STEPS", DEFAULT_ATTRACTION_STEPS),
        "attraction_tol": _env_fraction("CROOKEDLAB_ATTRACTION_TOL", DEFAULT_ATTRACTION_TOL),
        "hausdorff_tol": _env_fraction("CROOKEDLAB_HAUSDORFF_TOL", DEFAULT_HAUSDORFF_TOL),
        "decimal_places": _env_int("CROOKEDLAB_DECIMAL_PLACES", DEFAULT_DECIMAL_PLACES),
    }


def get_plot_config():
    """Obtiene la configuración para las figuras SVG."""
    return {
        "figsize": (6.0, 6.0),
        "dpi": 100,
        "line_width": 1.2,
        "diagonal_style": "--",
        "band_alpha": 0.15,
        "svg_hashsalt": "crookedlab",  # Salt fijo: SVG reproducible byte a byte
    }
