#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Torres de componentes I_i(η), análisis de atracción e informes de condiciones.

Una torre de profundidad finita es la aproximación computable del límite
inverso: niveles anidados con las restricciones de f entre niveles
consecutivos.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.models.crookedness import GridVerdict, TowerLevelVerdict, check_grid, tower_crookedness
from src.models.hausdorff import DistanceCertificate, hausdorff_graph_distance
from src.models.pl_map import (
    Component, DiagonalClass, PLMap, PartialMap, classify_diagonal, fixed_points,
    iterates, reflect, restrict,
)
from src.utils.config import get_crookedness_config

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)
DEFAULT_DELTA_SCHEDULE = (Fraction(1, 2), Fraction(1, 4))
DEFAULT_MESH = Fraction(1, 64)
DEFAULT_DEPTH = 6


@dataclass(frozen=True)
class Tower:
    """
    Torre finita: levels[i] es I_{i+1}(η) y maps[i] es f restringida de
    levels[i+1] sobre levels[i] (sobreyectiva).
    """
    eta: Fraction
    levels: Tuple[Component, ...]
    maps: Tuple[PartialMap, ...]
    above_diagonal: bool = False

    @property
    def depth(self) -> int:
        return len(self.levels)


class AttractionStatus(Enum):
    REACHED_EXACTLY = "ReachedExactly"
    CONVERGING_TO = "ConvergingTo"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class AttractionResult:
    """Órbita exacta de start y componente fija alcanzada o acotada."""
    start: Fraction
    limit_component: Optional[Component]
    steps: int
    status: AttractionStatus
    orbit: Tuple[Fraction, ...] = field(default_factory=tuple, repr=False)

    def attracted_to(self, point: Fraction) -> bool:
        return (self.status != AttractionStatus.UNDECIDED
                and self.limit_component == Component(point, point))


@dataclass(frozen=True)
class FixDensityResult:
    """Yes si Fix(f) no contiene intervalos; en otro caso el primer intervalo fijo."""
    nowhere_dense: bool
    interval: Optional[Component]
    resolution: Fraction


@dataclass(frozen=True)
class LemmaConditionsReport:
    """
    Condiciones cuantitativas para un δ: (a) η_N < δ/12, (b) distancia entre
    gráficas < δ/24 y (c) f^m restringida a I_1(η_N) certificada δ/3-torcida.
    """
    delta: Fraction
    n_index: int
    m: int
    eta_n: Fraction
    condition_a: bool
    distance: DistanceCertificate
    condition_b: bool
    grid_verdict: GridVerdict
    condition_c: bool
    reflected: bool = False

    @property
    def passes(self) -> int:
        return int(self.condition_a) + int(self.condition_b) + int(self.condition_c)

    @property
    def success(self) -> bool:
        return self.passes == 3


@dataclass(frozen=True)
class DeltaRecord:
    """Crookedness de la torre para un δ del calendario."""
    delta: Fraction
    levels: Tuple[TowerLevelVerdict, ...]
    certified: bool
    trivial: bool


@dataclass(frozen=True)
class EtaRecord:
    """Resultado del análisis para un η de la malla."""
    eta: Fraction
    attraction: Optional[AttractionResult]
    tower: Optional[Tower]
    deltas: Tuple[DeltaRecord, ...]
    passed: bool
    note: str = ""


class OverallStatus(Enum):
    CONDITIONS_MET = "ConditionsMet"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CharacterizationReport:
    """Informe del criterio de caracterización a escala finita."""
    diagonal_class: DiagonalClass
    fix_check: FixDensityResult
    eta_search: Tuple[EtaRecord, ...]
    overall: OverallStatus
    eta: Optional[Fraction]
    delta_schedule: Tuple[Fraction, ...]
    depth: int
    mesh: Fraction
    reason: str = ""


def _left_end(f: PLMap, u: Fraction) -> Fraction:
    """Extremo izquierdo de la componente de {f >= u} que contiene 1."""
    xs, ys = f.xs, f.ys
    for j in range(len(xs) - 2, -1, -1):
        if ys[j] >= u:
            continue
        return xs[j] + (u - ys[j]) * (xs[j + 1] - xs[j]) / (ys[j + 1] - ys[j])
    return xs[0]


def _under_tower(f: PLMap, eta: Fraction, depth: int) -> Tuple[List[Component], List[PartialMap]]:
    if f.ys[-1] != ONE:
        raise ValueError("La torre requiere f(1) = 1")
    levels = [Component(eta, ONE)]
    maps: List[PartialMap] = []
    for _ in range(depth - 1):
        u = levels[-1].lo
        x_star = _left_end(f, u)
        piece = restrict(f, x_star, ONE)
        value_range = piece.value_range
        if value_range.lo != u or value_range.hi != ONE:
            raise ValueError(f"Restricción no sobreyectiva sobre [{u}, 1]: rango {value_range}")
        levels.append(Component(x_star, ONE))
        maps.append(piece)
    return levels, maps


def component_tower(f: PLMap, eta, depth: int) -> Tower:
    """
    Torre de componentes I_1(η) ⊃ ... ⊃ I_depth(η).

    Bajo la diagonal se toma la componente que contiene 1; sobre la diagonal
    la torre se obtiene conjugando por x -> 1 - x (niveles que contienen 0).

    Raises:
        ValueError: η fuera de (0,1), depth < 1 o f no diagonal
    """
    eta = Fraction(eta)
    if not ZERO < eta < ONE:
        raise ValueError(f"η debe estar en (0,1), recibido {eta}")
    if depth < 1:
        raise ValueError(f"depth debe ser >= 1, recibido {depth}")
    diagonal = classify_diagonal(f)
    if diagonal.is_under:
        levels, maps = _under_tower(f, eta, depth)
        return Tower(eta, tuple(levels), tuple(maps), False)
    if diagonal.is_above:
        levels, maps = _under_tower(reflect(f), ONE - eta, depth)
        return Tower(
            eta,
            tuple(level.mirrored() for level in levels),
            tuple(reflect(piece) for piece in maps),
            True,
        )
    raise ValueError(f"La torre requiere una aplicación diagonal, clase {diagonal.value}")


def attraction(f: PLMap, x, n_max: Optional[int] = None, tol: Optional[Fraction] = None) -> AttractionResult:
    """
    Itera exactamente la órbita de x.

    ReachedExactly si la órbita cae en una componente fija; ConvergingTo si es
    monótona y termina a distancia <= tol de la componente fija más cercana en
    la dirección del movimiento; Undecided en otro caso.
    """
    config = get_crookedness_config()
    n_max = config["attraction_steps"] if n_max is None else n_max
    tol = config["attraction_tol"] if tol is None else Fraction(tol)
    x = Fraction(x)
    if not ZERO <= x <= ONE:
        raise ValueError(f"x={x} fuera de [0,1]")
    if n_max < 1 or tol <= 0:
        raise ValueError("Se requiere n_max >= 1 y tol > 0")

    fixed = fixed_points(f)
    orbit = [x]
    current = x
    for step in range(n_max + 1):
        hit = next((comp for comp in fixed if comp.contains(current)), None)
        if hit is not None:
            return AttractionResult(x, hit, step, AttractionStatus.REACHED_EXACTLY, tuple(orbit))
        if step == n_max:
            break
        current = f(current)
        orbit.append(current)

    decreasing = all(b <= a for a, b in zip(orbit, orbit[1:]))
    increasing = all(b >= a for a, b in zip(orbit, orbit[1:]))
    target = None
    if decreasing:
        below = [comp for comp in fixed if comp.hi <= current]
        if below and current - below[-1].hi <= tol:
            target = below[-1]
    elif increasing:
        above = [comp for comp in fixed if comp.lo >= current]
        if above and above[0].lo - current <= tol:
            target = above[0]
    if target is not None:
        return AttractionResult(x, target, n_max, AttractionStatus.CONVERGING_TO, tuple(orbit))
    return AttractionResult(x, None, n_max, AttractionStatus.UNDECIDED, tuple(orbit))


def nowhere_dense_fix_check(f: PLMap, resolution) -> FixDensityResult:
    """
    Comprueba si Fix(f) no tiene interior.

    Para aplicaciones PL el conjunto fijo es una unión finita de puntos e
    intervalos, así que la comprobación es exacta; resolution solo se informa.
    """
    resolution = Fraction(resolution)
    if resolution <= 0:
        raise ValueError(f"La resolución debe ser positiva, recibido {resolution}")
    for comp in fixed_points(f):
        if not comp.is_point:
            return FixDensityResult(False, comp, resolution)
    return FixDensityResult(True, None, resolution)


def lemma_conditions(f: PLMap, delta, eta_sequence: Sequence, m_search_max: int,
                     mesh) -> LemmaConditionsReport:
    """
    Busca N y m <= m_search_max que cumplan (a), (b) y (c).

    Las aplicaciones sobre la diagonal se conjugan por x -> 1 - x y η_N se
    toma como 1 - η en esas coordenadas.

    Returns:
        El primer éxito completo o el mejor resultado parcial (más condiciones,
        el primero en caso de empate)

    Raises:
        ValueError: eta_sequence vacía o parámetros no positivos
    """
    if not eta_sequence:
        raise ValueError("La sucesión de η no puede ser vacía")
    delta = Fraction(delta)
    mesh = Fraction(mesh)
    if delta <= 0 or mesh <= 0 or m_search_max < 1:
        raise ValueError("Se requiere delta > 0, mesh > 0 y m_search_max >= 1")

    diagonal = classify_diagonal(f)
    reflected = diagonal.is_above and not diagonal.is_under
    work = reflect(f) if reflected else f
    etas = [ONE - Fraction(e) if reflected else Fraction(e) for e in eta_sequence]
    grid_mesh = min(mesh, delta / 3)
    powers = list(iterates(work, m_search_max))

    best: Optional[LemmaConditionsReport] = None
    for n_index, eta_n in enumerate(etas, start=1):
        if not ZERO < eta_n < ONE:
            raise ValueError(f"η_N fuera de (0,1): {eta_n}")
        for m, power in enumerate(powers, start=1):
            piece = restrict(power, eta_n, ONE)
            distance = hausdorff_graph_distance(power, piece)
            verdict = check_grid(piece, delta / 3, grid_mesh)
            report = LemmaConditionsReport(
                delta=delta,
                n_index=n_index,
                m=m,
                eta_n=eta_n,
                condition_a=eta_n < delta / 12,
                distance=distance,
                condition_b=distance.certainly_below(delta / 24),
                grid_verdict=verdict,
                condition_c=verdict.is_certified,
                reflected=reflected,
            )
            if report.success:
                logger.info(f"Condiciones cumplidas con N={n_index}, m={m}")
                return report
            if best is None or report.passes > best.passes:
                best = report
    logger.info(f"Sin éxito completo; mejor resultado con {best.passes} condiciones")
    return best


def first_level_diameter(diagonal: DiagonalClass, eta: Fraction) -> Fraction:
    """Diámetro de I_1(η): 1 - η bajo la diagonal, η sobre ella."""
    return ONE - eta if diagonal.is_under else eta


def default_eta_grid(f: PLMap, delta_schedule: Sequence, witnesses: Sequence = ()) -> List[Fraction]:
    """
    Testigos de la construcción primero y después k/64 con diam I_1(η) >= 2·min δ.
    """
    diagonal = classify_diagonal(f)
    finest = min(Fraction(d) for d in delta_schedule)
    grid = [Fraction(w) for w in witnesses]
    for k in range(1, 64):
        eta = Fraction(k, 64)
        if eta in grid:
            continue
        if first_level_diameter(diagonal, eta) >= 2 * finest:
            grid.append(eta)
    return grid


def _analyze_eta(f: PLMap, diagonal: DiagonalClass, eta: Fraction, depth: int,
                 delta_schedule: Sequence[Fraction], mesh: Fraction) -> EtaRecord:
    target = ZERO if diagonal.is_under else ONE
    result = attraction(f, eta)
    if not result.attracted_to(target):
        return EtaRecord(eta, result, None, (), False, f"η no atraído a {target}")
    try:
        tower = component_tower(f, eta, depth)
    except ValueError as e:
        return EtaRecord(eta, result, None, (), False, str(e))

    records: List[DeltaRecord] = []
    diameter = tower.levels[0].length
    for delta in delta_schedule:
        levels = tower_crookedness(tower, delta, min(mesh, delta))
        certified = all(level.is_certified for level in levels)
        records.append(DeltaRecord(delta, tuple(levels), certified, diameter < 2 * delta))
        if not certified:
            return EtaRecord(eta, result, tower, tuple(records), False, f"torre refutada en δ={delta}")
    return EtaRecord(eta, result, tower, tuple(records), True)


def characterization_report(f: PLMap, eta_grid: Optional[Sequence] = None, depth: int = DEFAULT_DEPTH,
                            delta_schedule: Sequence = DEFAULT_DELTA_SCHEDULE, mesh=DEFAULT_MESH,
                            witnesses: Sequence = ()) -> CharacterizationReport:
    """
    Reúne clase diagonal, densidad del conjunto fijo y, para cada η de la
    malla, atracción, torre y crookedness de la torre en cada δ.

    El recorrido de la malla se detiene en el primer η que cumple todas las
    condiciones. ConditionsMet es un certificado a escala finita.
    """
    schedule = tuple(Fraction(d) for d in delta_schedule)
    mesh = Fraction(mesh)
    if not schedule:
        raise ValueError("El calendario de δ no puede ser vacío")
    diagonal = classify_diagonal(f)
    fix_check = nowhere_dense_fix_check(f, mesh)

    def build(records, overall, eta=None, reason=""):
        return CharacterizationReport(diagonal, fix_check, tuple(records), overall, eta,
                                      schedule, depth, mesh, reason)

    if diagonal == DiagonalClass.NEITHER:
        return build([], OverallStatus.REFUTED, reason=f"clase diagonal {diagonal.value}")
    if not fix_check.nowhere_dense:
        interval = fix_check.interval
        return build([], OverallStatus.REFUTED, reason=f"intervalo fijo [{interval.lo}, {interval.hi}]")

    grid = list(eta_grid) if eta_grid is not None else default_eta_grid(f, schedule, witnesses)
    records: List[EtaRecord] = []
    for eta in grid:
        record = _analyze_eta(f, diagonal, Fraction(eta), depth, schedule, mesh)
        records.append(record)
        logger.info(f"η={record.eta}: {'cumple' if record.passed else 'no cumple'} {record.note}".strip())
        if record.passed:
            return build(records, OverallStatus.CONDITIONS_MET, eta=record.eta)
    return build(records, OverallStatus.INCONCLUSIVE, reason="ningún η cumple las condiciones")
