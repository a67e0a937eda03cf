#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Pruebas para el módulo report_formatter.py
"""

from fractions import Fraction
from unittest.mock import patch

from src.models.crookedness import PairStatus
from src.utils.report_formatter import ReportDocument, ReportFormatter, format_interval, format_value

DIGEST = "ab" * 32

EXPECTED_REPORT = (
    "crookedlab-report v1\n"
    "tool_version = 0.1.0\n"
    "command = check pair\n"
    f"input_sha256 = tent.plmap {DIGEST}\n"
    "\n"
    "[pair]\n"
    "a = 0/1 (0.0000)\n"
    "delta = 1/3 (0.3333)\n"
    "status = Fails\n"
    "vacuous = no\n"
    "witness = none\n"
    "values = [1/2 (0.5000)]\n"
    "\n"
    "[map]\n"
    "breakpoints = 3\n"
    "laps = 2\n"
    "has_plateau = no\n"
    "surjective = yes\n"
    "diagonal_class = Neither\n"
    "fixed_components = 2\n"
    "fixed_set = [0/1, 0/1] [2/3, 2/3]\n"
)


def _document(tent):
    doc = ReportDocument("check pair", "0.1.0")
    doc.add_input("tent.plmap", DIGEST)
    doc.add_section("pair", [
        ("a", Fraction(0)),
        ("delta", Fraction(1, 3)),
        ("status", PairStatus.FAILS),
        ("vacuous", False),
        ("witness", None),
        ("values", [Fraction(1, 2)]),
    ])
    doc.extend(ReportFormatter.map_summary(tent))
    doc.timing = 1.23456
    return doc


@patch('src.utils.report_formatter.get_crookedness_config')
def test_render_golden_text(mock_config, tent):
    """Prueba el texto exacto de un informe con y sin tiempo."""
    mock_config.return_value = {"decimal_places": 4}
    doc = _document(tent)
    assert doc.render(include_timing=False) == EXPECTED_REPORT
    assert doc.render() == EXPECTED_REPORT + "\n[timing]\nseconds = 1.235\n"


@patch('src.utils.report_formatter.get_crookedness_config')
def test_format_value_types(mock_config):
    """Prueba la representación de cada tipo de valor."""
    mock_config.return_value = {"decimal_places": 2}
    assert format_value(True) == "yes"
    assert format_value(None) == "none"
    assert format_value(Fraction(2, 3)) == "2/3 (0.66)"
    assert format_value((1, Fraction(1, 4))) == "[1, 1/4 (0.25)]"
    assert format_value(7) == "7"
    assert format_interval(Fraction(1, 4), Fraction(1)) == "[1/4, 1/1]"
