#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Distancia de Hausdorff entre gráficas de aplicaciones lineales a trozos.

Las distancias euclídeas son algebraicas de grado 2, así que se trabaja con
distancias al cuadrado racionales y se devuelve un certificado
[lower_sq, upper_sq] más una envolvente decimal de la raíz.
"""

import heapq
import logging
from bisect import bisect_right
from dataclasses import dataclass
from decimal import Decimal, localcontext, ROUND_CEILING, ROUND_FLOOR
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.models.pl_map import PLData
from src.utils.config import get_crookedness_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceCertificate:
    """
    Envolvente exacta de d_H^2 y envolvente decimal de d_H.

    lower_sq <= d_H^2 <= upper_sq; cuando ambos coinciden la distancia al
    cuadrado es exacta.
    """
    lower_sq: Fraction
    upper_sq: Fraction
    lower_decimal: str
    upper_decimal: str

    @property
    def is_exact(self) -> bool:
        return self.lower_sq == self.upper_sq

    def certainly_below(self, bound: Fraction) -> bool:
        """d_H < bound garantizado por el certificado."""
        return bound > 0 and self.upper_sq < bound * bound

    def certainly_at_least(self, bound: Fraction) -> bool:
        """d_H >= bound garantizado por el certificado."""
        return bound <= 0 or self.lower_sq >= bound * bound


def _segment_distance_sq(px: Fraction, py: Fraction,
                         ax: Fraction, ay: Fraction,
                         bx: Fraction, by: Fraction) -> Fraction:
    """Distancia al cuadrado exacta del punto p al segmento [a, b]."""
    dx, dy = bx - ax, by - ay
    length_sq = dx * dx + dy * dy
    u = ((px - ax) * dx + (py - ay) * dy) / length_sq
    if u < 0:
        u = Fraction(0)
    elif u > 1:
        u = Fraction(1)
    cx = ax + u * dx - px
    cy = ay + u * dy - py
    return cx * cx + cy * cy


class _SegmentIndex:
    """Segmentos de una gráfica ordenados por x, con búsqueda del más cercano."""

    def __init__(self, xs: Sequence[Fraction], ys: Sequence[Fraction]):
        self.xs = xs
        self.ys = ys
        self.count = len(xs) - 1

    def distance_sq(self, j: int, px: Fraction, py: Fraction) -> Fraction:
        return _segment_distance_sq(px, py, self.xs[j], self.ys[j], self.xs[j + 1], self.ys[j + 1])

    def nearest(self, px: Fraction, py: Fraction) -> Tuple[Fraction, int]:
        """
        Distancia al cuadrado mínima de p a la gráfica y segmento que la alcanza.

        Se recorre hacia fuera desde el segmento bajo p mientras la separación
        horizontal al cuadrado sea menor que el mejor valor.
        """
        k = min(max(bisect_right(self.xs, px) - 1, 0), self.count - 1)
        best = self.distance_sq(k, px, py)
        best_j = k
        i = k - 1
        while i >= 0:
            gap = px - self.xs[i + 1]
            if gap > 0 and gap * gap >= best:
                break
            d = self.distance_sq(i, px, py)
            if d < best:
                best, best_j = d, i
            i -= 1
        i = k + 1
        while i < self.count:
            gap = self.xs[i] - px
            if gap > 0 and gap * gap >= best:
                break
            d = self.distance_sq(i, px, py)
            if d < best:
                best, best_j = d, i
            i += 1
        return best, best_j


def _directed_sq(source: PLData, target: PLData, tol: Fraction) -> Tuple[Fraction, Fraction]:
    """
    Envolvente [lower, upper] de sup_{p en Γ(source)} dist(p, Γ(target))^2.

    Ramificación y poda sobre el parámetro de cada segmento de source. La
    cota superior de un subintervalo [t0, t1] es min_j max(D_j(t0), D_j(t1)),
    válida porque cada D_j es convexa en t.
    """
    index = _SegmentIndex(target.xs, target.ys)
    xs, ys = source.xs, source.ys

    def point(seg: int, t: Fraction) -> Tuple[Fraction, Fraction]:
        return (xs[seg] + t * (xs[seg + 1] - xs[seg]),
                ys[seg] + t * (ys[seg + 1] - ys[seg]))

    def upper_bound(seg: int, t0: Fraction, t1: Fraction, j0: int, j1: int) -> Fraction:
        p0 = point(seg, t0)
        p1 = point(seg, t1)
        bound = None
        for j in {j0, j1}:
            value = max(index.distance_sq(j, *p0), index.distance_sq(j, *p1))
            if bound is None or value < bound:
                bound = value
        return bound

    lower = Fraction(0)
    heap = []
    counter = 0
    for seg in range(len(xs) - 1):
        h0, j0 = index.nearest(*point(seg, Fraction(0)))
        h1, j1 = index.nearest(*point(seg, Fraction(1)))
        lower = max(lower, h0, h1)
        ub = upper_bound(seg, Fraction(0), Fraction(1), j0, j1)
        heapq.heappush(heap, (-ub, counter, seg, Fraction(0), Fraction(1), j0, j1))
        counter += 1

    while heap:
        neg_ub, _, seg, t0, t1, j0, j1 = heap[0]
        ub = -neg_ub
        if ub - lower <= tol:
            return lower, max(lower, ub)
        heapq.heappop(heap)
        mid = (t0 + t1) / 2
        hm, jm = index.nearest(*point(seg, mid))
        lower = max(lower, hm)
        for a, b, ja, jb in ((t0, mid, j0, jm), (mid, t1, jm, j1)):
            sub_ub = upper_bound(seg, a, b, ja, jb)
            if sub_ub > lower:
                heapq.heappush(heap, (-sub_ub, counter, seg, a, b, ja, jb))
                counter += 1
    return lower, lower


def _sqrt_decimal(value: Fraction, places: int, round_up: bool) -> str:
    """Raíz decimal redondeada hacia fuera de la envolvente."""
    with localcontext() as ctx:
        ctx.prec = places + 30
        ctx.rounding = ROUND_CEILING if round_up else ROUND_FLOOR
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
        root = quotient.sqrt()
        # sqrt redondea al par más cercano: ensanchar un ulp
        root = root.next_plus() if round_up else root.next_minus()
        if root < 0:
            root = Decimal(0)
        return format(root.quantize(Decimal(1).scaleb(-places)), "f")


def hausdorff_graph_distance(f: PLData, g: PLData,
                             tol: Optional[Fraction] = None,
                             places: Optional[int] = None) -> DistanceCertificate:
    """
    Distancia de Hausdorff entre las gráficas de f y g como conjuntos de segmentos.

    Args:
        f: Aplicación (o restricción) cuya gráfica se compara
        g: Restricción con dominio contenido en [0,1]
        tol: Anchura máxima de la envolvente de distancias al cuadrado
        places: Decimales de la envolvente decimal

    Returns:
        DistanceCertificate con la envolvente exacta y decimal
    """
    config = get_crookedness_config()
    tol = config["hausdorff_tol"] if tol is None else tol
    places = config["decimal_places"] if places is None else places

    lo_fg, hi_fg = _directed_sq(f, g, tol)
    lo_gf, hi_gf = _directed_sq(g, f, tol)
    lower_sq = max(lo_fg, lo_gf)
    upper_sq = max(hi_fg, hi_gf)
    logger.debug(f"Distancia de Hausdorff^2 en [{lower_sq}, {upper_sq}]")
    return DistanceCertificate(
        lower_sq=lower_sq,
        upper_sq=upper_sq,
        lower_decimal=_sqrt_decimal(lower_sq, places, round_up=False),
        upper_decimal=_sqrt_decimal(upper_sq, places, round_up=True),
    )
