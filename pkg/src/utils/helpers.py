#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo con funciones auxiliares para crookedlab.
Rutas del proyecto, lectura/escritura de archivos, racionales en texto.
"""

import os
import hashlib
import logging
from decimal import Decimal, localcontext, ROUND_FLOOR
from fractions import Fraction

logger = logging.getLogger(__name__)


def get_project_root() -> str:
    """
    Obtiene la ruta raíz del proyecto de forma confiable.

    Returns:
        Ruta absoluta del directorio raíz del proyecto
    """
    # helpers.py está en src/utils/: subir dos niveles
    current_dir = os.path.dirname(os.path.abspath(__file__))
    project_root = os.path.dirname(os.path.dirname(current_dir))
    return project_root


def get_logs_directory() -> str:
    """
    Obtiene el directorio de logs, creándolo si no existe.

    Returns:
        Ruta absoluta del directorio de logs
    """
    logs_dir = os.path.join(get_project_root(), "logs")
    if not os.path.exists(logs_dir):
        os.makedirs(logs_dir)
    return logs_dir


def parse_rational(text: str) -> Fraction:
    """
    Interpreta un racional escrito como p/q o como entero.

    Args:
        text: Texto a interpretar

    Returns:
        Fraction exacta

    Raises:
        ValueError: Si el texto es decimal o no es un racional válido
    """
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("Racional vacío")
    if any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"Decimales no admitidos, use p/q: {text!r}")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Racional inválido: {text!r}") from e


def format_rational(value: Fraction) -> str:
    """Representación canónica p/q (siempre con denominador)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def render_decimal(value: Fraction, places: int = 10) -> str:
    """
    Representación decimal truncada de un racional (solo para mostrar).

    Args:
        value: Racional exacto
        places: Número de decimales

    Returns:
        Cadena decimal con el número fijo de decimales
    """
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = places + 30
        ctx.rounding = ROUND_FLOOR
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        return format(quotient.quantize(Decimal(1).scaleb(-places)), "f")


def file_digest(path: str) -> str:
    """Calcula el SHA-256 de un archivo."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def read_text_file(path: str) -> str:
    """
    Lee un archivo de texto UTF-8.

    Raises:
        OSError: Si el archivo no existe o no es legible
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def write_text_file(text: str, path: str) -> str:
    """
    Escribe texto en un archivo con terminaciones LF.

    Args:
        text: Contenido
        path: Ruta destino

    Returns:
        Ruta escrita o cadena vacía si hubo error
    """
    try:
        directory = os.path.dirname(os.path.abspath(path))
        if not os.path.exists(directory):
            os.makedirs(directory)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.info(f"Archivo guardado en {path}")
        return path
    except OSError as e:
        logger.error(f"Error al guardar archivo {path}: {str(e)}")
        return ""
