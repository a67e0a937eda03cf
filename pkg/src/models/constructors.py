#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Constructores de las familias de aplicaciones de dinámica nula.

Cada constructor devuelve una FamilyMap y verifica en la construcción las
propiedades exactas que implica su descriptor (clase diagonal, extremos
fijos, preimágenes designadas).
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.family_models import (
    ArcLevels, ClusterSpec, FamilyMap, FamilyTag, NotchRecord, NotchSchedule,
    OscillationSchedule, SetDescriptor, SetKind, SinLevels,
)
from src.models.pl_map import (
    Component, DiagonalClass, PLMap, Point, classify_diagonal, fixed_points,
    make_pl_map,
)

logger = logging.getLogger(__name__)

F = Fraction
HALF = F(1, 2)
QUARTER = F(1, 4)

# η racional con f(η) = 3/8 en la parte de Henderson
HENDERSON_WITNESS = F(49, 80)
HENDERSON_WITNESS_IMAGE = F(3, 8)

# Anclas de las dos primeras muescas
_FIRST_NOTCHES: Tuple[Tuple[Point, ...], ...] = (
    ((F(3, 4), F(9, 16)), (F(77, 100), F(3, 5)), (F(4, 5), F(11, 20)), (F(5, 6), F(25, 36))),
    ((F(43, 50), F(1849, 2500)), (F(7, 8), F(71, 100)), (F(8, 9), F(64, 81))),
)
_NOTCH_DEPTH = F(37, 1250)

DEFAULT_CANTOR_AMBIENT = Component(F(1, 16), F(3, 16))


def _notch_schedule(n_notches: int, base_resolution: int) -> NotchSchedule:
    """Muescas en v acumulándose en (1,1) con profundidad que se reduce a la mitad."""
    anchors: List[NotchRecord] = []
    for k in range(1, n_notches + 1):
        if k <= len(_FIRST_NOTCHES):
            anchors.append(NotchRecord(_FIRST_NOTCHES[k - 1]))
            continue
        left = 1 - F(1, 2 ** (k - 1)) / 4
        right = 1 - F(1, 2 ** k) / 4
        tip_y = left * left - _NOTCH_DEPTH / 2 ** (k - 2)
        anchors.append(NotchRecord((
            (left, left * left),
            ((left + right) / 2, tip_y),
            (right, right * right),
        )))
    return NotchSchedule(n_notches, tuple(anchors), base_resolution)


def _henderson_points(schedule: NotchSchedule) -> List[Point]:
    """Breakpoints de la aproximación de x^2 con las muescas superpuestas."""
    resolution = schedule.base_resolution
    points: Dict[Fraction, Fraction] = {}
    notch_ranges = [(n.entry[0], n.exit[0]) for n in schedule.anchors]
    for k in range(resolution + 1):
        x = F(k, resolution)
        y = x * x
        if x <= HENDERSON_WITNESS and y >= HENDERSON_WITNESS_IMAGE and x != HENDERSON_WITNESS:
            continue
        if any(lo < x < hi for lo, hi in notch_ranges):
            continue
        points[x] = y
    # Las anclas prevalecen sobre la malla
    points[HALF] = QUARTER
    points[HENDERSON_WITNESS] = HENDERSON_WITNESS_IMAGE
    for notch in schedule.anchors:
        for x, y in notch.points:
            points[x] = y
    return sorted(points.items())


def _check_family(fm: FamilyMap, expected: DiagonalClass) -> FamilyMap:
    """Comprueba las propiedades exactas declaradas por la construcción."""
    f = fm.map
    if f.ys[0] != 0 or f.ys[-1] != 1:
        raise ValueError(f"{fm.family_tag.value}: la construcción no fija 0 y 1")
    found = classify_diagonal(f)
    if found != expected:
        raise ValueError(
            f"{fm.family_tag.value}: clase diagonal {found.value}, se esperaba {expected.value}"
        )
    logger.debug(f"{fm.family_tag.value} construida: {len(f)} breakpoints, clase {found.value}")
    return fm


def henderson(n_notches: int, base_resolution: int = 8) -> FamilyMap:
    """
    Aproximación lineal a trozos de x^2 con n_notches muescas en v hacia (1,1).

    La malla uniforme k/base_resolution se completa con los puntos forzados
    (1/2, 1/4) y (49/80, 3/8), de modo que 3/8 es imagen de un breakpoint.
    Los puntos de malla dentro de una muesca se descartan.

    Args:
        n_notches: Número de muescas (>= 0)
        base_resolution: Resolución de la malla base (>= 4)

    Returns:
        FamilyMap 0-atraída con lap 1 + 2·n_notches

    Raises:
        ValueError: Parámetros fuera de rango
    """
    if n_notches < 0:
        raise ValueError(f"n_notches debe ser >= 0, recibido {n_notches}")
    if base_resolution < 4:
        raise ValueError(f"base_resolution debe ser >= 4, recibido {base_resolution}")
    schedule = _notch_schedule(n_notches, base_resolution)
    f = make_pl_map(_henderson_points(schedule))
    fm = FamilyMap(
        map=f,
        family_tag=FamilyTag.HENDERSON,
        descriptor=schedule,
        witnesses=(HENDERSON_WITNESS,),
        marks=(F(1),) if n_notches > 0 else (),
    )
    return _check_family(fm, DiagonalClass.ZERO_ATTRACTED)


def _henderson_tail(n_notches: int, base_resolution: int) -> List[Point]:
    """Breakpoints de Henderson con x > 1/2."""
    schedule = _notch_schedule(n_notches, base_resolution)
    return [(x, y) for x, y in _henderson_points(schedule) if x > HALF]


def cantor_descriptor(depth: int, ambient: Optional[Component] = None) -> SetDescriptor:
    """
    Truncación de profundidad depth del Cantor de tercios medios sobre ambient.

    Raises:
        ValueError: depth negativo o ambient fuera de (0, 1/4)
    """
    ambient = ambient or DEFAULT_CANTOR_AMBIENT
    if depth < 0:
        raise ValueError(f"depth debe ser >= 0, recibido {depth}")
    if not 0 < ambient.lo < ambient.hi < QUARTER:
        raise ValueError(f"El intervalo ambiente {ambient} debe estar en (0, 1/4)")
    intervals = [ambient]
    for _ in range(depth):
        refined = []
        for comp in intervals:
            third = comp.length / 3
            refined.append(Component(comp.lo, comp.lo + third))
            refined.append(Component(comp.hi - third, comp.hi))
        intervals = refined
    return SetDescriptor(SetKind.CANTOR_TRUNCATION, tuple(intervals), ambient, depth)


def finite_set_descriptor(components: Sequence[Tuple]) -> SetDescriptor:
    """Unión finita de puntos e intervalos; el ambiente es su envolvente."""
    comps = tuple(sorted(Component(F(lo), F(hi)) for lo, hi in components))
    if not comps:
        raise ValueError("El conjunto S no puede ser vacío")
    ambient = Component(comps[0].lo, comps[-1].hi)
    return SetDescriptor(SetKind.FINITE_UNION, comps, ambient, 0)


def nowhere_dense_fixed(s: SetDescriptor, n_notches: int = 2, base_resolution: int = 8) -> FamilyMap:
    """
    Aplicación bajo la diagonal con Fix(f) = S ∪ {0,1}.

    En (0,1/4) cada hueco (h, l) de S se cubre con una v monótona bajo la
    diagonal y f = x sobre S. f(1/4) es el punto medio entre max S y 1/4,
    f(3/8) = 0, f(1/2) = 1/4 y sobre [1/2,1] coincide con Henderson.
    No se fija f(1/4) = 1/4 porque 1/4 quedaría en Fix(f) fuera de S.

    Raises:
        ValueError: Si S no está contenido en (0, 1/4)
    """
    if not (0 < s.components[0].lo and s.maximum < QUARTER):
        raise ValueError("S debe estar contenido en (0, 1/4)")

    points: List[Point] = [(F(0), F(0))]
    left = F(0)
    for comp in s.components:
        points.append(((left + comp.lo) / 2, (3 * left + comp.lo) / 4))
        points.append((comp.lo, comp.lo))
        if not comp.is_point:
            points.append((comp.hi, comp.hi))
        left = comp.hi
    points.append((QUARTER, (s.maximum + QUARTER) / 2))
    points.append((HENDERSON_WITNESS_IMAGE, F(0)))
    points.append((HALF, QUARTER))
    points.extend(_henderson_tail(n_notches, base_resolution))

    f = make_pl_map(points)
    expected_fix = (Component(F(0), F(0)),) + s.components + (Component(F(1), F(1)),)
    if fixed_points(f) != expected_fix:
        raise ValueError("El conjunto fijo construido no coincide con S ∪ {0,1}")
    fm = FamilyMap(
        map=f,
        family_tag=FamilyTag.NOWHERE_DENSE_FIXED,
        descriptor=s,
        witnesses=(HENDERSON_WITNESS,),
        marks=(F(1),) if n_notches > 0 else (),
    )
    return _check_family(fm, DiagonalClass.UNDER_DIAGONAL)


def _v_dip(p: Fraction, q: Fraction) -> Point:
    """Punta de una v sobre la base y = x/2 en [p, q], con profundidad (q - p)/2."""
    m = (p + q) / 2
    return m, m / 2 - (q - p) / 2


def zero_attracted_variant(schedule: OscillationSchedule, base_resolution: int = 8) -> FamilyMap:
    """
    Variante 0-atraída: base x/2 en [0,1/2] con grupos de oscilaciones y Henderson en [1/2,1].

    Un grupo acumulativo en t con n oscilaciones coloca v's en
    [t - r_j, t - r_j/2] con r_j = r_0/2^j; un grupo simple coloca una v en
    [t - r_0, t + r_0]. r_0 es la cuarta parte de la menor separación entre
    posiciones, 0 y 1/2.

    Raises:
        ValueError: Si el resultado no queda estrictamente bajo la diagonal
    """
    positions = [F(0)] + [c.position for c in schedule.clusters] + [HALF]
    r0 = min(b - a for a, b in zip(positions, positions[1:])) / 4

    points: List[Point] = [(F(0), F(0))]
    for cluster in schedule.clusters:
        t = cluster.position
        if cluster.accumulating:
            for j in range(cluster.oscillations):
                r = r0 / 2 ** j
                p, q = t - r, t - r / 2
                points.extend([(p, p / 2), _v_dip(p, q), (q, q / 2)])
        else:
            p, q = t - r0, t + r0
            points.extend([(p, p / 2), _v_dip(p, q), (q, q / 2)])
    points.append((HALF, QUARTER))
    points.extend(_henderson_tail(schedule.notches, base_resolution))

    unique = sorted(dict(points).items())
    fm = FamilyMap(
        map=make_pl_map(unique),
        family_tag=FamilyTag.ZERO_ATTRACTED_VARIANT,
        descriptor=schedule,
        witnesses=(HENDERSON_WITNESS,),
        marks=schedule.accumulation_marks,
    )
    return _check_family(fm, DiagonalClass.ZERO_ATTRACTED)


def census_schedules() -> List[OscillationSchedule]:
    """Diez calendarios con pares (marcas, oscilaciones) distintos dos a dos."""
    c = ClusterSpec
    layouts = [
        (),
        (c(F(1, 4), 1, False),),
        (c(F(1, 4), 3, True),),
        (c(F(1, 4), 5, True),),
        (c(F(1, 8), 1, False), c(F(1, 4), 1, False)),
        (c(F(1, 8), 2, True), c(F(1, 4), 2, True)),
        (c(F(1, 8), 3, True), c(F(1, 4), 1, False)),
        (c(F(1, 8), 2, True), c(F(1, 4), 3, True), c(F(3, 8), 2, True)),
        (c(F(1, 8), 1, False), c(F(1, 4), 1, False), c(F(3, 8), 1, False)),
        (c(F(1, 8), 3, True), c(F(3, 8), 3, True)),
    ]
    return [OscillationSchedule(tuple(layout)) for layout in layouts]


def double_sin_map(levels: int) -> FamilyMap:
    """
    Aplicación 1-atraída de tipo doble sin(1/x) con `levels` niveles.

    Con s = 1/(4(levels+1)) los niveles son J_i = [1-(i+1)s, 1-(i+1)s+s/2].
    Sobre J_1 la pendiente es 1; cada J_{i+1} se pliega en zigzag sobre J_i,
    así que diam(f^{i-1}(J_i)) = s/2 en todos los niveles. Los niveles se
    acumulan en 3/4.
    """
    if levels < 1:
        raise ValueError(f"levels debe ser >= 1, recibido {levels}")
    s = F(1, 4 * (levels + 1))
    width = s / 2
    intervals = tuple(
        Component(1 - (i + 1) * s, 1 - (i + 1) * s + width) for i in range(1, levels + 1)
    )

    points: List[Point] = [(F(0), F(0))]
    for i in range(levels, 0, -1):
        level = intervals[i - 1]
        if i == 1:
            shift = 3 * s / 4
            points.extend([(level.lo, level.lo + shift), (level.hi, level.hi + shift)])
        else:
            target = intervals[i - 2]
            p = level.lo
            points.extend([
                (p, target.lo),
                (p + width / 3, target.hi),
                (p + 2 * width / 3, target.lo),
                (p + width, target.hi),
            ])
    points.append((F(1), F(1)))

    fm = FamilyMap(
        map=make_pl_map(points),
        family_tag=FamilyTag.DOUBLE_SIN,
        descriptor=SinLevels(levels, intervals),
        witnesses=(),
        marks=(F(3, 4),),
    )
    return _check_family(fm, DiagonalClass.ONE_ATTRACTED)


def image_diameter(f: PLMap, interval: Component) -> Fraction:
    """Diámetro exacto de f(interval): máximo menos mínimo sobre breakpoints y extremos."""
    values = [f(interval.lo), f(interval.hi)]
    values.extend(y for x, y in zip(f.xs, f.ys) if interval.lo < x < interval.hi)
    return max(values) - min(values)


def arc_example_map(levels: int) -> FamilyMap:
    """
    Aplicación 0-atraída con grupos de oscilación que encogen hacia t = 2/5.

    El nivel i tiene dos v's en [t - r_i, t - r_i/2] y [t + r_i/2, t + r_i]
    con r_i = (1/16)/2^{i-1}; el diámetro de la imagen de cada grupo se
    reduce a la mitad por nivel.
    """
    if levels < 1:
        raise ValueError(f"levels debe ser >= 1, recibido {levels}")
    t = F(2, 5)
    radius = F(1, 16)

    points: List[Point] = [(F(0), F(0))]
    for i in range(1, levels + 1):
        r = radius / 2 ** (i - 1)
        for p, q in ((t - r, t - r / 2), (t + r / 2, t + r)):
            points.extend([(p, p / 2), _v_dip(p, q), (q, q / 2)])
    points.append((HALF, QUARTER))
    points.append((F(1), F(1)))
    f = make_pl_map(sorted(dict(points).items()))

    clusters = tuple(
        Component(t - radius / 2 ** (i - 1), t + radius / 2 ** (i - 1)) for i in range(1, levels + 1)
    )
    fm = FamilyMap(
        map=f,
        family_tag=FamilyTag.ARC_EXAMPLE,
        descriptor=ArcLevels(levels, t, clusters, tuple(image_diameter(f, c) for c in clusters)),
        witnesses=(),
        marks=(t,),
    )
    return _check_family(fm, DiagonalClass.ZERO_ATTRACTED)
