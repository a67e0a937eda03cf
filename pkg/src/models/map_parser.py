#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lectura y escritura de los formatos de texto `plmap v1` y `family v1`.

Los racionales se escriben siempre como p/q en términos mínimos; el parser
rechaza cualquier forma no canónica para que la serialización sea exacta.
"""

import logging
import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from src.models.family_models import DESCRIPTOR_TYPES, Entry, FamilyMap, FamilyTag
from src.models.pl_map import PLMap, make_pl_map
from src.utils.helpers import format_rational

logger = logging.getLogger(__name__)

PLMAP_HEADER = "plmap v1"
FAMILY_HEADER = "family v1"

_RATIONAL = re.compile(r"^(-?)(\d+)/(\d+)$")
_NAME = re.compile(r"^[a-z][a-z0-9_]*$")


class MapFormatError(ValueError):
    """Texto mal formado; line es el número de línea (1-based) si se conoce."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"línea {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


def parse_canonical_rational(token: str, line: Optional[int] = None) -> Fraction:
    """
    Interpreta un racional p/q canónico (términos mínimos, q > 0, sin signo en 0).

    Raises:
        MapFormatError: Si el token no es canónico
    """
    match = _RATIONAL.match(token)
    if not match:
        raise MapFormatError(f"racional no canónico {token!r} (se espera p/q)", line)
    sign, num, den = match.groups()
    if int(den) == 0:
        raise MapFormatError(f"denominador nulo en {token!r}", line)
    value = Fraction(int(sign + num), int(den))
    if format_rational(value) != token:
        raise MapFormatError(f"racional no canónico {token!r}, debería ser {format_rational(value)}", line)
    return value


def _split_lines(text: str) -> List[str]:
    if "\r" in text:
        raise MapFormatError("se requieren terminaciones de línea LF")
    if not text.endswith("\n"):
        raise MapFormatError("falta el salto de línea final")
    return text[:-1].split("\n")


def _parse_breakpoints(lines: List[str], first_line: int) -> PLMap:
    points: List[Tuple[Fraction, Fraction]] = []
    for offset, line in enumerate(lines):
        number = first_line + offset
        tokens = line.split(" ")
        if len(tokens) != 2:
            raise MapFormatError(f"se esperaban dos racionales, recibido {line!r}", number)
        points.append((parse_canonical_rational(tokens[0], number),
                       parse_canonical_rational(tokens[1], number)))
    if not points:
        raise MapFormatError("la aplicación no tiene breakpoints", first_line)
    try:
        return make_pl_map(points)
    except ValueError as e:
        raise MapFormatError(str(e), first_line) from e


def serialize_map(f: PLMap) -> str:
    """Texto `plmap v1` de f, una línea por breakpoint."""
    lines = [PLMAP_HEADER]
    lines.extend(f"{format_rational(x)} {format_rational(y)}" for x, y in zip(f.xs, f.ys))
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> PLMap:
    """
    Interpreta un documento `plmap v1`.

    Raises:
        MapFormatError: Cabecera, racionales o breakpoints inválidos
    """
    lines = _split_lines(text)
    if lines[0] != PLMAP_HEADER:
        raise MapFormatError(f"cabecera inválida {lines[0]!r}, se esperaba {PLMAP_HEADER!r}", 1)
    return _parse_breakpoints(lines[1:], 2)


def serialize_family(fm: FamilyMap) -> str:
    """Texto `family v1`: bloque de descriptor seguido del bloque plmap."""
    lines = [FAMILY_HEADER, f"tag {fm.family_tag.value}", f"reflected {int(fm.reflected)}"]
    lines.extend(f"witness {format_rational(w)}" for w in fm.witnesses)
    lines.extend(f"mark {format_rational(m)}" for m in fm.marks)
    lines.extend(f"param {key} {value}" for key, value in fm.descriptor.to_params().items())
    for name, values in fm.descriptor.to_entries():
        lines.append("entry " + " ".join([name] + [format_rational(v) for v in values]))
    return "\n".join(lines) + "\n" + serialize_map(fm.map)


def parse_family(text: str) -> FamilyMap:
    """
    Interpreta un documento `family v1`.

    Raises:
        MapFormatError: Estructura, etiqueta o descriptor inválidos
    """
    lines = _split_lines(text)
    if lines[0] != FAMILY_HEADER:
        raise MapFormatError(f"cabecera inválida {lines[0]!r}, se esperaba {FAMILY_HEADER!r}", 1)
    try:
        map_start = lines.index(PLMAP_HEADER)
    except ValueError:
        raise MapFormatError("falta el bloque plmap v1")

    tag: Optional[FamilyTag] = None
    reflected = False
    witnesses: List[Fraction] = []
    marks: List[Fraction] = []
    params: Dict[str, str] = {}
    entries: List[Entry] = []
    for index in range(1, map_start):
        number = index + 1
        tokens = lines[index].split(" ")
        key = tokens[0]
        if key == "tag" and len(tokens) == 2:
            try:
                tag = FamilyTag(tokens[1])
            except ValueError:
                raise MapFormatError(f"familia desconocida {tokens[1]!r}", number)
        elif key == "reflected" and len(tokens) == 2 and tokens[1] in ("0", "1"):
            reflected = tokens[1] == "1"
        elif key == "witness" and len(tokens) == 2:
            witnesses.append(parse_canonical_rational(tokens[1], number))
        elif key == "mark" and len(tokens) == 2:
            marks.append(parse_canonical_rational(tokens[1], number))
        elif key == "param" and len(tokens) == 3 and _NAME.match(tokens[1]):
            params[tokens[1]] = tokens[2]
        elif key == "entry" and len(tokens) >= 2 and _NAME.match(tokens[1]):
            values = tuple(parse_canonical_rational(t, number) for t in tokens[2:])
            entries.append((tokens[1], values))
        else:
            raise MapFormatError(f"línea de descriptor inválida {lines[index]!r}", number)
    if tag is None:
        raise MapFormatError("falta la etiqueta de familia")

    f = _parse_breakpoints(lines[map_start + 1:], map_start + 2)
    try:
        descriptor = DESCRIPTOR_TYPES[tag].from_parts(params, entries)
    except ValueError as e:
        raise MapFormatError(f"descriptor inválido: {e}") from e
    return FamilyMap(f, tag, descriptor, tuple(witnesses), tuple(marks), reflected)


def parse_document(text: str) -> Union[PLMap, FamilyMap]:
    """Interpreta cualquiera de los dos formatos según la cabecera."""
    header = text.split("\n", 1)[0]
    if header == FAMILY_HEADER:
        return parse_family(text)
    return parse_map(text)
