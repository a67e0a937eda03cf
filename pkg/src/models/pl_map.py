#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Representación exacta de aplicaciones lineales a trozos del intervalo [0,1].

Todas las coordenadas son racionales (fractions.Fraction); ninguna operación
de este módulo redondea. Los valores son inmutables y las operaciones son
funciones puras.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from src.utils.config import get_crookedness_config
from src.utils.helpers import parse_rational

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class BreakpointLimitError(ValueError):
    """Se superó el techo de breakpoints al componer o iterar."""

    def __init__(self, limit: int, reached: int):
        self.limit = limit
        self.reached = reached
        super().__init__(
            f"Límite de breakpoints superado: {reached} > {limit} "
            f"(ajustable con CROOKEDLAB_MAX_BREAKPOINTS)"
        )


class DiagonalClass(Enum):
    """Posición de la gráfica respecto a la diagonal."""
    UNDER_DIAGONAL = "UnderDiagonal"
    ABOVE_DIAGONAL = "AboveDiagonal"
    ZERO_ATTRACTED = "ZeroAttracted"
    ONE_ATTRACTED = "OneAttracted"
    NEITHER = "Neither"
    IDENTITY = "Identity"

    @property
    def is_under(self) -> bool:
        return self in (DiagonalClass.UNDER_DIAGONAL, DiagonalClass.ZERO_ATTRACTED,
                        DiagonalClass.IDENTITY)

    @property
    def is_above(self) -> bool:
        return self in (DiagonalClass.ABOVE_DIAGONAL, DiagonalClass.ONE_ATTRACTED,
                        DiagonalClass.IDENTITY)

    def reflected(self) -> "DiagonalClass":
        """Clase de la aplicación conjugada por x -> 1 - x."""
        swap = {
            DiagonalClass.UNDER_DIAGONAL: DiagonalClass.ABOVE_DIAGONAL,
            DiagonalClass.ABOVE_DIAGONAL: DiagonalClass.UNDER_DIAGONAL,
            DiagonalClass.ZERO_ATTRACTED: DiagonalClass.ONE_ATTRACTED,
            DiagonalClass.ONE_ATTRACTED: DiagonalClass.ZERO_ATTRACTED,
        }
        return swap.get(self, self)


@dataclass(frozen=True, order=True)
class Component:
    """Intervalo cerrado racional [lo, hi]; un punto cuando lo == hi."""
    lo: Fraction
    hi: Fraction

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def mirrored(self) -> "Component":
        """Imagen por x -> 1 - x."""
        return Component(ONE - self.hi, ONE - self.lo)


@dataclass(frozen=True)
class PreimageSet:
    """Componentes ordenadas y maximales de f^{-1}(value)."""
    value: Fraction
    components: Tuple[Component, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Component]:
        return iter(self.components)

    @property
    def is_empty(self) -> bool:
        return not self.components


@dataclass(frozen=True)
class MonotoneRun:
    """Tramo maximal de monotonía: sign = 1 creciente, -1 decreciente, 0 meseta."""
    sign: int
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class PLMap:
    """
    Aplicación continua lineal a trozos de [0,1] en [0,1].

    Los breakpoints (xs[i], ys[i]) tienen xs estrictamente creciente con
    xs[0] = 0 y xs[-1] = 1. Usar make_pl_map para construir con validación.
    """
    xs: Tuple[Fraction, ...]
    ys: Tuple[Fraction, ...]

    @property
    def breakpoints(self) -> Tuple[Point, ...]:
        return tuple(zip(self.xs, self.ys))

    def __len__(self) -> int:
        return len(self.xs)

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)


@dataclass(frozen=True)
class PartialMap:
    """
    Restricción de una aplicación lineal a trozos a un subintervalo [u, v].

    Conserva los datos PL exactos; dominio y rango se derivan de ellos.
    """
    xs: Tuple[Fraction, ...]
    ys: Tuple[Fraction, ...]

    @property
    def domain(self) -> Component:
        return Component(self.xs[0], self.xs[-1])

    @property
    def value_range(self) -> Component:
        return Component(min(self.ys), max(self.ys))

    @property
    def breakpoints(self) -> Tuple[Point, ...]:
        return tuple(zip(self.xs, self.ys))

    def __len__(self) -> int:
        return len(self.xs)

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        if not self.xs[0] <= x <= self.xs[-1]:
            raise ValueError(f"x={x} fuera del dominio [{self.xs[0]}, {self.xs[-1]}]")
        return _eval(self.xs, self.ys, x)


PLData = Union[PLMap, PartialMap]


# ---------------------------------------------------------------------------
# Utilidades internas sobre datos PL (xs, ys)
# ---------------------------------------------------------------------------

def _as_fraction(value) -> Fraction:
    """Convierte a Fraction rechazando flotantes."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Valor no racional: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValueError(f"Se requiere un racional exacto, recibido {type(value).__name__}: {value!r}")


def _eval(xs: Sequence[Fraction], ys: Sequence[Fraction], x: Fraction) -> Fraction:
    """Interpolación lineal exacta; x debe estar en [xs[0], xs[-1]]."""
    i = bisect_right(xs, x) - 1
    if i >= len(xs) - 1:
        return ys[-1]
    if i < 0:
        return ys[0]
    x0 = xs[i]
    if x0 == x:
        return ys[i]
    x1 = xs[i + 1]
    return ys[i] + (ys[i + 1] - ys[i]) * (x - x0) / (x1 - x0)


def _compose_data(fxs, fys, gxs, gys) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Datos PL de f∘g: breakpoints de g más las preimágenes por g de los
    breakpoints de f. Requiere que los valores de g estén en el dominio de f.
    """
    xs = [gxs[0]]
    ys = [_eval(fxs, fys, gys[0])]
    for i in range(len(gxs) - 1):
        x0, x1 = gxs[i], gxs[i + 1]
        y0, y1 = gys[i], gys[i + 1]
        if y0 != y1:
            lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
            start = bisect_right(fxs, lo)
            end = bisect_left(fxs, hi)
            if start < end:
                indices = range(start, end) if y0 < y1 else range(end - 1, start - 1, -1)
                scale = (x1 - x0) / (y1 - y0)
                for j in indices:
                    xs.append(x0 + (fxs[j] - y0) * scale)
                    ys.append(fys[j])
        xs.append(x1)
        ys.append(_eval(fxs, fys, y1))
    return xs, ys


def _canonical_data(xs, ys) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """Elimina breakpoints interiores colineales."""
    out_x = [xs[0]]
    out_y = [ys[0]]
    for i in range(1, len(xs) - 1):
        x0, y0 = out_x[-1], out_y[-1]
        x1, y1 = xs[i], ys[i]
        x2, y2 = xs[i + 1], ys[i + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            continue
        out_x.append(x1)
        out_y.append(y1)
    out_x.append(xs[-1])
    out_y.append(ys[-1])
    return tuple(out_x), tuple(out_y)


def _level_components(xs, vals, target: Fraction) -> List[Component]:
    """Componentes ordenadas y maximales de {x : v(x) = target} para v lineal a trozos."""
    comps: List[Component] = []

    def add(lo: Fraction, hi: Fraction) -> None:
        if comps and comps[-1].hi >= lo:
            comps[-1] = Component(comps[-1].lo, max(comps[-1].hi, hi))
        else:
            comps.append(Component(lo, hi))

    for i in range(len(xs) - 1):
        v0, v1 = vals[i], vals[i + 1]
        x0, x1 = xs[i], xs[i + 1]
        if v0 == target and v1 == target:
            add(x0, x1)
        elif v0 == target:
            add(x0, x0)
        elif (v0 - target) * (v1 - target) < 0:
            x = x0 + (target - v0) * (x1 - x0) / (v1 - v0)
            add(x, x)
    if vals[-1] == target:
        add(xs[-1], xs[-1])
    return comps


def _runs(xs, ys) -> List[MonotoneRun]:
    """Tramos maximales de signo de pendiente constante (datos canónicos)."""
    runs: List[MonotoneRun] = []
    for i in range(len(xs) - 1):
        dy = ys[i + 1] - ys[i]
        sign = (dy > 0) - (dy < 0)
        if runs and runs[-1].sign == sign:
            runs[-1] = MonotoneRun(sign, runs[-1].lo, xs[i + 1])
        else:
            runs.append(MonotoneRun(sign, xs[i], xs[i + 1]))
    return runs


def _restrict_data(xs, ys, u: Fraction, v: Fraction) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    """Datos PL sobre [u, v] con breakpoints interiores exactos."""
    start = bisect_right(xs, u)
    end = bisect_left(xs, v)
    new_x = [u] + list(xs[start:end]) + [v]
    new_y = [_eval(xs, ys, u)] + list(ys[start:end]) + [_eval(xs, ys, v)]
    return tuple(new_x), tuple(new_y)


# ---------------------------------------------------------------------------
# Operaciones públicas
# ---------------------------------------------------------------------------

def make_pl_map(points: Sequence[Tuple]) -> PLMap:
    """
    Construye una PLMap validada a partir de pares (x, y) racionales.

    Los breakpoints interiores colineales se conservan tal cual.

    Args:
        points: Secuencia de pares (x, y); enteros, Fraction o texto p/q

    Returns:
        PLMap validada

    Raises:
        ValueError: x no estrictamente creciente, x no cubre exactamente [0,1],
            y fuera de [0,1] o valores no racionales
    """
    if not points:
        raise ValueError("Se requiere al menos un breakpoint")
    xs = tuple(_as_fraction(p[0]) for p in points)
    ys = tuple(_as_fraction(p[1]) for p in points)
    for i in range(len(xs) - 1):
        if xs[i] >= xs[i + 1]:
            raise ValueError(f"x no estrictamente creciente en la posición {i + 1}: {xs[i]} >= {xs[i + 1]}")
    if xs[0] != ZERO or xs[-1] != ONE:
        raise ValueError(f"El rango de x debe ser exactamente [0,1], recibido [{xs[0]}, {xs[-1]}]")
    for x, y in zip(xs, ys):
        if not ZERO <= y <= ONE:
            raise ValueError(f"y={y} fuera de [0,1] en x={x}")
    return PLMap(xs, ys)


def identity_map() -> PLMap:
    """La identidad de [0,1]."""
    return PLMap((ZERO, ONE), (ZERO, ONE))


def evaluate(f: PLMap, x) -> Fraction:
    """
    Evalúa f en x por interpolación lineal exacta.

    Raises:
        ValueError: Si x está fuera de [0,1]
    """
    x = _as_fraction(x)
    if not ZERO <= x <= ONE:
        raise ValueError(f"x={x} fuera de [0,1]")
    return _eval(f.xs, f.ys, x)


def compose(f: PLMap, g: PLMap) -> PLMap:
    """
    Composición exacta h = f∘g.

    Los breakpoints de h son los de g más las preimágenes por g de los
    breakpoints de f.
    """
    xs, ys = _compose_data(f.xs, f.ys, g.xs, g.ys)
    return PLMap(tuple(xs), tuple(ys))


def compose_partial(outer: PLData, inner: PLData) -> PartialMap:
    """
    Composición outer∘inner de restricciones.

    Raises:
        ValueError: Si el rango de inner no está contenido en el dominio de outer
    """
    lo, hi = min(inner.ys), max(inner.ys)
    if lo < outer.xs[0] or hi > outer.xs[-1]:
        raise ValueError(
            f"Rango [{lo}, {hi}] fuera del dominio [{outer.xs[0]}, {outer.xs[-1]}]"
        )
    xs, ys = _compose_data(outer.xs, outer.ys, inner.xs, inner.ys)
    return PartialMap(tuple(xs), tuple(ys))


def iterates(f: PLMap, n_max: int, max_breakpoints: Optional[int] = None) -> Iterator[PLMap]:
    """
    Genera f, f^2, ..., f^n_max por composición incremental.

    Raises:
        BreakpointLimitError: Si un iterado supera el techo de breakpoints
    """
    limit = max_breakpoints or get_crookedness_config()["max_breakpoints"]
    current = f
    for n in range(1, n_max + 1):
        if n > 1:
            current = compose(f, current)
        if len(current.xs) > limit:
            logger.error(f"Iterado {n} con {len(current.xs)} breakpoints supera el límite {limit}")
            raise BreakpointLimitError(limit, len(current.xs))
        yield current


def iterate(f: PLMap, n: int, max_breakpoints: Optional[int] = None) -> PLMap:
    """
    Composición exacta f^n; iterate(f, 1) es f.

    Raises:
        ValueError: Si n < 1
        BreakpointLimitError: Si se supera el techo de breakpoints
    """
    if n < 1:
        raise ValueError(f"n debe ser positivo, recibido {n}")
    result = f
    for result in iterates(f, n, max_breakpoints):
        pass
    logger.debug(f"Iterado {n} calculado: {len(result.xs)} breakpoints")
    return result


def preimage(f: PLData, y) -> PreimageSet:
    """
    Conjunto exacto f^{-1}(y) como componentes ordenadas y maximales.

    Vacío si y no es alcanzado.
    """
    y = _as_fraction(y)
    if isinstance(f, PLMap) and not ZERO <= y <= ONE:
        raise ValueError(f"y={y} fuera de [0,1]")
    return PreimageSet(y, tuple(_level_components(f.xs, f.ys, y)))


def canonicalize(f: PLData) -> PLData:
    """Misma gráfica sin breakpoints interiores colineales."""
    xs, ys = _canonical_data(f.xs, f.ys)
    return type(f)(xs, ys)


def graph_equal(f: PLData, g: PLData) -> bool:
    """Igualdad de gráficas (formas canónicas iguales)."""
    return _canonical_data(f.xs, f.ys) == _canonical_data(g.xs, g.ys)


def monotone_runs(f: PLData) -> List[MonotoneRun]:
    """Tramos maximales de monotonía estricta y mesetas, de izquierda a derecha."""
    xs, ys = _canonical_data(f.xs, f.ys)
    return _runs(xs, ys)


def lap_number(f: PLData) -> int:
    """
    Número de intervalos maximales de monotonía tras canonicalizar.

    Las mesetas cuentan como tramo propio; una aplicación constante tiene 1.
    """
    return len(monotone_runs(f))


def has_plateau(f: PLData) -> bool:
    """Indica si f tiene algún tramo constante."""
    return any(run.sign == 0 for run in monotone_runs(f))


def is_surjective(f: PLMap) -> bool:
    """f([0,1]) = [0,1]."""
    return min(f.ys) == ZERO and max(f.ys) == ONE


def fixed_points(f: PLMap) -> Tuple[Component, ...]:
    """Componentes ordenadas (puntos o intervalos) de Fix(f)."""
    diffs = [y - x for x, y in zip(f.xs, f.ys)]
    return tuple(_level_components(f.xs, diffs, ZERO))


def classify_diagonal(f: PLMap) -> DiagonalClass:
    """
    Clasificación exacta respecto a la diagonal, comparando breakpoints.

    Basta comparar en los breakpoints porque y - x es lineal en cada tramo.
    """
    diffs = [y - x for x, y in zip(f.xs, f.ys)]
    if all(d == 0 for d in diffs):
        return DiagonalClass.IDENTITY
    interior = diffs[1:-1]
    if diffs[0] == 0 and diffs[-1] == 0 and interior:
        if all(d < 0 for d in interior):
            return DiagonalClass.ZERO_ATTRACTED
        if all(d > 0 for d in interior):
            return DiagonalClass.ONE_ATTRACTED
    if all(d <= 0 for d in diffs):
        return DiagonalClass.UNDER_DIAGONAL
    if all(d >= 0 for d in diffs):
        return DiagonalClass.ABOVE_DIAGONAL
    return DiagonalClass.NEITHER


def restrict(f: PLData, u, v) -> PartialMap:
    """
    Restricción de f a [u, v] con breakpoints exactos; el rango queda registrado.

    Raises:
        ValueError: Intervalo degenerado o fuera del dominio
    """
    u = _as_fraction(u)
    v = _as_fraction(v)
    if not u < v:
        raise ValueError(f"Intervalo degenerado [{u}, {v}]")
    if u < f.xs[0] or v > f.xs[-1]:
        raise ValueError(f"[{u}, {v}] no está contenido en el dominio [{f.xs[0]}, {f.xs[-1]}]")
    xs, ys = _restrict_data(f.xs, f.ys, u, v)
    return PartialMap(xs, ys)


def reflect(f: PLData) -> PLData:
    """Conjugación por φ(x) = 1 - x; es una involución."""
    xs = tuple(ONE - x for x in reversed(f.xs))
    ys = tuple(ONE - y for y in reversed(f.ys))
    return type(f)(xs, ys)


def inverse_homeomorphism(h: PLMap) -> PLMap:
    """
    Inversa de un homeomorfismo PL de [0,1] (estrictamente monótono y sobreyectivo).

    Raises:
        ValueError: Si h no es estrictamente monótona o no es sobreyectiva
    """
    increasing = all(h.ys[i] < h.ys[i + 1] for i in range(len(h.ys) - 1))
    decreasing = all(h.ys[i] > h.ys[i + 1] for i in range(len(h.ys) - 1))
    if not (increasing or decreasing) or not is_surjective(h):
        raise ValueError("h no es un homeomorfismo de [0,1]")
    pairs = sorted(zip(h.ys, h.xs))
    return PLMap(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def conjugate(f: PLMap, h: PLMap) -> PLMap:
    """h∘f∘h^{-1} para un homeomorfismo PL h."""
    return compose(h, compose(f, inverse_homeomorphism(h)))
