#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Aplicación principal de línea de órdenes.
Responsabilidad única: Interpretar argumentos, orquestar servicios y
traducir resultados a informes y códigos de salida.
"""

import argparse
import logging
import os
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

# Agregar la ruta del proyecto al PYTHONPATH
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.models.inverse_limit import DEFAULT_DELTA_SCHEDULE, DEFAULT_DEPTH, DEFAULT_MESH
from src.services import CheckService, FamilyService, PlotService, ReportService
from src.services.family_service import FAMILY_NAMES
from src.utils.config import setup_logging
from src.utils.helpers import parse_rational
from src.utils.report_formatter import ReportDocument

logger = logging.getLogger(__name__)

__version__ = '1.0.0'

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

OUTCOME_EXIT = {
    "certified": EXIT_OK,
    "refuted": EXIT_REFUTED,
    "inconclusive": EXIT_INCONCLUSIVE,
}


class CrookedLabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser que sale con código 3; el 2 queda para 'inconcluso'."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational_arg(text: str) -> Fraction:
    """Tipo argparse para racionales p/q o enteros."""
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mesh", type=rational_arg, default=None, help="Paso de la malla de valores")
    common.add_argument("--delta", type=rational_arg, default=None, help="Tolerancia δ")
    common.add_argument("--depth", type=int, default=None, help="Profundidad de la torre")
    common.add_argument("--n-max", type=int, default=None, help="Máximo iterado o m de búsqueda")
    common.add_argument("--no-timing", action="store_true", help="Omitir el tiempo en el informe")
    common.add_argument("--out", default=None, help="Archivo de salida (por defecto stdout)")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Construye el parser con los verbos construct, check, report, plot y convert."""
    common = _common_options()
    parser = CrookedLabArgumentParser(
        prog="crookedlab",
        description="Dinámica exacta de aplicaciones lineales a trozos del intervalo",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    construct = verbs.add_parser("construct", parents=[common], help="Construir una familia")
    construct.add_argument("family", choices=FAMILY_NAMES)
    construct.add_argument("--notches", type=int, default=None)
    construct.add_argument("--base-resolution", type=int, default=None)
    construct.add_argument("--cantor-depth", type=int, default=None)
    construct.add_argument("--component", action="append", dest="components", metavar="LO:HI")
    construct.add_argument("--cluster", action="append", dest="clusters", metavar="POS:OSC:ACC")
    construct.add_argument("--census-index", type=int, default=None)
    construct.add_argument("--levels", type=int, default=None)
    construct.add_argument("--reflect", action="store_true")

    check = verbs.add_parser("check", parents=[common], help="Comprobaciones de crookedness")
    check.add_argument("kind", choices=("pair", "grid", "horizon", "tower", "min-delta"))
    check.add_argument("map")
    check.add_argument("--a", type=rational_arg, default=None)
    check.add_argument("--b", type=rational_arg, default=None)
    check.add_argument("--eta", type=rational_arg, default=None)
    check.add_argument("--resolution", type=rational_arg, default=Fraction(1, 64))

    report = verbs.add_parser("report", parents=[common], help="Informes compuestos")
    report.add_argument("kind", choices=("characterize", "lemma46", "invariants", "distinguish", "census"))
    report.add_argument("maps", nargs="*")
    report.add_argument("--eta", type=rational_arg, action="append", dest="etas")
    report.add_argument("--delta-schedule", type=rational_arg, nargs="+", default=None)
    report.add_argument("--lap-depth", type=int, default=None)
    report.add_argument("--csv", default=None, help="Destino del CSV del censo")

    plot = verbs.add_parser("plot", parents=[common], help="Figuras SVG y tablas CSV")
    plot.add_argument("kind", choices=("graph", "iterate-n", "crookedness-heatmap", "tower"))
    plot.add_argument("map")
    plot.add_argument("--n", type=int, default=2)
    plot.add_argument("--eta", type=rational_arg, default=None)
    plot.add_argument("--step", type=rational_arg, default=Fraction(1, 8))
    plot.add_argument("--resolution", type=rational_arg, default=Fraction(1, 64))

    convert = verbs.add_parser("convert", parents=[common], help="Normalizar documentos")
    convert.add_argument("map")
    convert.add_argument("--canonical", action="store_true", help="Fusionar breakpoints colineales")
    convert.add_argument("--plain", action="store_true", help="Descartar el descriptor de familia")
    return parser


class CrookedLabApp:
    """
    Clase principal de la aplicación que orquesta los servicios.
    Cada verbo devuelve un código de salida.
    """

    def __init__(self):
        """Inicializa la aplicación."""
        self.services: Dict[str, Any] = {}
        self.args: Optional[argparse.Namespace] = None
        self.argv: List[str] = []

    def _initialize_services(self):
        self.services = {
            'family': FamilyService(),
            'check': CheckService(),
            'report': ReportService(),
            'plot': PlotService(),
        }
        logger.info(f"Servicios inicializados: {list(self.services.keys())}")

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Ejecuta la línea de órdenes.

        Returns:
            0 certificado/se cumple/testigo, 1 refutado, 2 inconcluso,
            3 error de uso o de entrada
        """
        load_dotenv()
        self.argv = list(sys.argv[1:] if argv is None else argv)
        self.args = build_parser().parse_args(self.argv)
        setup_logging()
        self._initialize_services()
        handler = getattr(self, f"_cmd_{self.args.verb}")
        return handler()

    # Salida

    def _fail(self, message: str) -> int:
        print(f"crookedlab: error: {message}", file=sys.stderr)
        return EXIT_USAGE

    def _emit(self, text: str, path: Optional[str] = None) -> int:
        if path:
            result = self.services['family'].save(text, path)
            if not result['success']:
                return self._fail(result['error'])
            logger.info(f"Salida escrita en {path}")
        else:
            sys.stdout.write(text)
        return EXIT_OK

    def _new_document(self) -> ReportDocument:
        return ReportDocument(" ".join(["crookedlab"] + self.argv), __version__)

    def _finish(self, document: ReportDocument, result: Dict[str, Any], started: float) -> int:
        if not result['success']:
            return self._fail(result['error'])
        document.extend(result['sections'])
        document.timing = time.perf_counter() - started
        code = self._emit(document.render(include_timing=not self.args.no_timing), self.args.out)
        return code if code != EXIT_OK else OUTCOME_EXIT[result['outcome']]

    def _load(self, path: str, document: Optional[ReportDocument] = None) -> Optional[Dict[str, Any]]:
        loaded = self.services['family'].load(path)
        if not loaded['success']:
            self._fail(loaded['error'])
            return None
        if document is not None:
            document.add_input(path, loaded['digest'])
        return loaded

    # Verbos

    def _cmd_construct(self) -> int:
        args = self.args
        options = {
            'notches': args.notches,
            'base_resolution': args.base_resolution,
            'cantor_depth': args.cantor_depth,
            'components': args.components,
            'clusters': args.clusters,
            'census_index': args.census_index,
            'levels': args.levels,
            'reflect': args.reflect,
        }
        result = self.services['family'].construct(args.family, options)
        if not result['success']:
            return self._fail(result['error'])
        if not args.out:
            return self._emit(result['text'])
        code = self._emit(result['text'], args.out)
        if code != EXIT_OK:
            return code
        document = self._new_document()
        document.extend(result['sections'])
        sys.stdout.write(document.render(include_timing=False))
        return EXIT_OK

    def _cmd_check(self) -> int:
        args = self.args
        started = time.perf_counter()
        document = self._new_document()
        loaded = self._load(args.map, document)
        if loaded is None:
            return EXIT_USAGE
        f = loaded['map']
        service = self.services['check']
        if args.kind == "min-delta":
            return self._finish(document, service.check_min_delta(f, args.resolution), started)
        if args.delta is None:
            return self._fail(f"check {args.kind} requiere --delta")
        if args.kind == "pair":
            if args.a is None or args.b is None:
                return self._fail("check pair requiere --a y --b")
            result = service.check_pair(f, args.a, args.b, args.delta)
        elif args.kind == "grid":
            result = service.check_grid(f, args.delta, args.mesh or min(DEFAULT_MESH, args.delta))
        elif args.kind == "horizon":
            result = service.check_horizon(f, args.delta, args.n_max or 6, args.mesh)
        else:
            eta = args.eta if args.eta is not None else self._first_witness(loaded)
            if eta is None:
                return self._fail("check tower requiere --eta")
            result = service.check_tower(f, eta, args.depth or DEFAULT_DEPTH, args.delta,
                                         args.mesh or DEFAULT_MESH)
        return self._finish(document, result, started)

    @staticmethod
    def _first_witness(loaded: Dict[str, Any]) -> Optional[Fraction]:
        family_map = loaded.get('family_map')
        if family_map is not None and family_map.witnesses:
            return family_map.witnesses[0]
        return None

    def _cmd_report(self) -> int:
        args = self.args
        started = time.perf_counter()
        document = self._new_document()
        service = self.services['report']
        if args.kind == "census":
            members = self.services['family'].census_members()
            result = service.census(members, args.lap_depth)
            if result['success'] and args.csv:
                code = self._emit(result['csv'], args.csv)
                if code != EXIT_OK:
                    return code
            return self._finish(document, result, started)

        expected = 2 if args.kind == "distinguish" else 1
        if len(args.maps) != expected:
            return self._fail(f"report {args.kind} requiere {expected} archivo(s)")
        loaded = [self._load(path, document) for path in args.maps]
        if any(item is None for item in loaded):
            return EXIT_USAGE
        first = loaded[0]

        if args.kind == "characterize":
            schedule = args.delta_schedule or ([args.delta] if args.delta else list(DEFAULT_DELTA_SCHEDULE))
            result = service.characterize(first['map'], first['family_map'], args.etas,
                                          args.depth or DEFAULT_DEPTH, schedule, args.mesh or DEFAULT_MESH)
        elif args.kind == "lemma46":
            if args.delta is None:
                return self._fail("report lemma46 requiere --delta")
            result = service.lemma(first['map'], args.delta, args.etas, args.n_max or 3,
                                   args.mesh or DEFAULT_MESH)
        elif args.kind == "invariants":
            result = service.invariants(first['map'], first['family_map'], args.n_max or 6)
        else:
            result = service.distinguish(first['document'], loaded[1]['document'], args.lap_depth)
        return self._finish(document, result, started)

    def _cmd_plot(self) -> int:
        args = self.args
        loaded = self._load(args.map)
        if loaded is None:
            return EXIT_USAGE
        f = loaded['map']
        service = self.services['plot']
        if args.kind == "graph":
            result = service.graph_svg(f)
        elif args.kind == "iterate-n":
            result = service.iterate_svg(f, args.n)
        elif args.kind == "crookedness-heatmap":
            result = service.heatmap_csv(f, args.step, args.resolution)
        else:
            eta = args.eta if args.eta is not None else self._first_witness(loaded)
            if eta is None:
                return self._fail("plot tower requiere --eta")
            depth = args.depth or DEFAULT_DEPTH
            if args.out and args.out.endswith(".csv"):
                result = service.tower_csv(f, eta, depth)
            else:
                result = service.tower_svg(f, eta, depth)
        if not result['success']:
            return self._fail(result['error'])
        return self._emit(result['text'], args.out)

    def _cmd_convert(self) -> int:
        args = self.args
        result = self.services['family'].convert(args.map, args.canonical, args.plain)
        if not result['success']:
            return self._fail(result['error'])
        return self._emit(result['text'], args.out)


def main() -> int:
    """Función principal de la línea de órdenes."""
    return CrookedLabApp().run()


if __name__ == "__main__":
    sys.exit(main())
