#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Decisión exacta de δ-torcimiento (crookedness) para aplicaciones lineales a trozos.

f es δ-torcida entre a y b si para todo c, d con f(c) = a, f(d) = b existen
c' entre c y d y d' entre c' y d con |b - f(c')| < δ y |a - f(d')| < δ.

Las refutaciones son exactas; las certificaciones globales están
cualificadas por la malla de valores comprobada.
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple

from src.models.pl_map import (
    Component, PLData, PLMap, PartialMap, _level_components, compose_partial,
    iterates,
)

if TYPE_CHECKING:
    from src.models.inverse_limit import Tower

logger = logging.getLogger(__name__)


class PairStatus(Enum):
    HOLDS = "Holds"
    FAILS = "Fails"


class GridStatus(Enum):
    REFUTED = "Refuted"
    GRID_CERTIFIED = "GridCertified"


@dataclass(frozen=True)
class PairVerdict:
    """
    Resultado de check_pair.

    witness es el par (c, d) que viola la definición cuando falla; trace es un
    par (c', d') que la cumple cuando se verifica por búsqueda explícita.
    """
    status: PairStatus
    witness: Optional[Tuple[Fraction, Fraction]] = None
    trace: Optional[Tuple[Fraction, Fraction]] = None
    vacuous: bool = False

    @property
    def holds(self) -> bool:
        return self.status == PairStatus.HOLDS


@dataclass(frozen=True)
class GridVerdict:
    """Resultado de check_grid; GridCertified no prueba nada fuera de la malla."""
    status: GridStatus
    delta: Fraction
    mesh: Fraction
    witness: Optional[Tuple[Fraction, Fraction, Fraction, Fraction]] = None
    pairs_checked: int = 0

    @property
    def is_certified(self) -> bool:
        return self.status == GridStatus.GRID_CERTIFIED


@dataclass(frozen=True)
class Horizon:
    """Menor iterado certificado en la malla, con los veredictos por n."""
    delta: Fraction
    n_found: Optional[int]
    n_max: int
    per_n: Tuple[GridVerdict, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class DeltaBracket:
    """Horquilla (lo, hi]: refutado en lo (o lo = 0) y certificado en hi."""
    lo: Fraction
    hi: Fraction
    witness: Optional[Tuple[Fraction, ...]] = None


@dataclass(frozen=True)
class TowerLevelVerdict:
    """Resultado de la búsqueda de k' para el nivel k de una torre."""
    k: int
    k_prime: Optional[int]
    verdict: GridVerdict
    vacuous: bool = False

    @property
    def is_certified(self) -> bool:
        return self.k_prime is not None


class Band:
    """
    Conjunto abierto {x : |f(x) - value| < delta} como componentes (L, R) ordenadas.

    Dos trozos contiguos solo se unen si el breakpoint compartido está
    estrictamente dentro de la banda.
    """

    def __init__(self, xs, ys, value: Fraction, delta: Fraction):
        self.value = value
        self.delta = delta
        lows: List[Fraction] = []
        highs: List[Fraction] = []
        lower, upper = value - delta, value + delta
        for i in range(len(xs) - 1):
            x0, x1 = xs[i], xs[i + 1]
            y0, y1 = ys[i], ys[i + 1]
            if y0 == y1:
                if not lower < y0 < upper:
                    continue
                lo, hi = x0, x1
            else:
                scale = (x1 - x0) / (y1 - y0)
                xa = x0 + (lower - y0) * scale
                xb = x0 + (upper - y0) * scale
                lo = max(x0, min(xa, xb))
                hi = min(x1, max(xa, xb))
                if not lo < hi:
                    continue
            if highs and highs[-1] == lo == x0 and lower < y0 < upper:
                highs[-1] = hi
            else:
                lows.append(lo)
                highs.append(hi)
        self.lows = lows
        self.highs = highs

    def first_entry(self, x0: Fraction, x1: Fraction) -> Optional[Tuple[Fraction, int]]:
        """Ínfimo de la banda dentro de [x0, x1] y componente que lo contiene."""
        i = bisect_right(self.highs, x0)
        if i < len(self.lows) and self.lows[i] < x1:
            return max(self.lows[i], x0), i
        return None

    def last_exit(self, x0: Fraction, x1: Fraction) -> Optional[Tuple[Fraction, int]]:
        """Supremo de la banda dentro de [x0, x1] y componente que lo contiene."""
        i = bisect_left(self.lows, x1) - 1
        if i >= 0 and self.highs[i] > x0:
            return min(self.highs[i], x1), i
        return None


class _PairChecker:
    """Comprobador con caché de bandas y preimágenes para un δ fijo."""

    def __init__(self, f: PLData, delta: Fraction):
        if delta <= 0:
            raise ValueError(f"delta debe ser positivo, recibido {delta}")
        self.xs = f.xs
        self.ys = f.ys
        self.delta = delta
        self._bands: Dict[Fraction, Band] = {}
        self._preimages: Dict[Fraction, List[Component]] = {}

    def band(self, value: Fraction) -> Band:
        band = self._bands.get(value)
        if band is None:
            band = Band(self.xs, self.ys, value, self.delta)
            self._bands[value] = band
        return band

    def preimage(self, value: Fraction) -> List[Component]:
        comps = self._preimages.get(value)
        if comps is None:
            comps = _level_components(self.xs, self.ys, value)
            self._preimages[value] = comps
        return comps

    def _forward(self, c: Fraction, d: Fraction, a: Fraction, b: Fraction):
        """Caso c < d: entrar primero cerca de b y salir después cerca de a."""
        band_b, band_a = self.band(b), self.band(a)
        entry = band_b.first_entry(c, d)
        exit_ = band_a.last_exit(c, d)
        if entry is None or exit_ is None or not entry[0] < exit_[0]:
            return None
        s, ib = entry
        big_s, ia = exit_
        c_prime = (s + min(band_b.highs[ib], big_s)) / 2
        d_prime = (max(band_a.lows[ia], c_prime) + big_s) / 2
        return c_prime, d_prime

    def _backward(self, d: Fraction, c: Fraction, a: Fraction, b: Fraction):
        """Caso d < c: d' cerca de a a la izquierda de c' cerca de b."""
        band_a, band_b = self.band(a), self.band(b)
        entry = band_a.first_entry(d, c)
        exit_ = band_b.last_exit(d, c)
        if entry is None or exit_ is None or not entry[0] < exit_[0]:
            return None
        s, ia = entry
        big_s, ib = exit_
        d_prime = (s + min(band_a.highs[ia], big_s)) / 2
        c_prime = (max(band_b.lows[ib], d_prime) + big_s) / 2
        return c_prime, d_prime

    def check(self, a: Fraction, b: Fraction) -> PairVerdict:
        comps_a = self.preimage(a)
        comps_b = self.preimage(b)
        if not comps_a or not comps_b:
            return PairVerdict(PairStatus.HOLDS, vacuous=True)
        # (a+b)/2 se alcanza entre c y d (valor intermedio)
        if abs(a - b) < 2 * self.delta:
            return PairVerdict(PairStatus.HOLDS)

        # Solo pares adyacentes de tipo distinto con extremos enfrentados
        merged = sorted([(comp, 0) for comp in comps_a] + [(comp, 1) for comp in comps_b])
        trace = None
        for (left, kind_left), (right, kind_right) in zip(merged, merged[1:]):
            if kind_left == kind_right:
                continue
            if kind_left == 0:
                c, d = left.hi, right.lo
                found = self._forward(c, d, a, b)
            else:
                d, c = left.hi, right.lo
                found = self._backward(d, c, a, b)
            if found is None:
                return PairVerdict(PairStatus.FAILS, witness=(c, d))
            if trace is None:
                trace = found
        return PairVerdict(PairStatus.HOLDS, trace=trace)


def check_pair(f: PLData, a, b, delta) -> PairVerdict:
    """
    Decide exactamente si f es δ-torcida entre a y b.

    Para cada par adyacente de componentes de f^{-1}(a) y f^{-1}(b) basta
    comprobar los extremos enfrentados: acercar c y d solo reduce las
    opciones para c' y d'. Las igualdades con δ cuentan como fallo.

    Args:
        f: Aplicación o restricción
        a: Valor en c
        b: Valor en d
        delta: Tolerancia positiva

    Returns:
        PairVerdict; Holds vacuo si a o b no se alcanzan

    Raises:
        ValueError: Si delta no es positivo
    """
    return _PairChecker(f, Fraction(delta)).check(Fraction(a), Fraction(b))


def _grid_values(f: PLData, mesh: Fraction) -> List[Fraction]:
    """Imágenes de breakpoints más los múltiplos de mesh dentro del rango de f."""
    lo, hi = min(f.ys), max(f.ys)
    values = set(f.ys)
    k = -((-lo) // mesh)  # techo de lo / mesh
    value = k * mesh
    while value <= hi:
        values.add(value)
        k += 1
        value = k * mesh
    return sorted(values)


def check_grid(f: PLData, delta, mesh) -> GridVerdict:
    """
    Comprueba check_pair sobre todos los pares a < b de la malla.

    La malla contiene las imágenes de los breakpoints de f y los múltiplos de
    mesh en su rango. El primer fallo en orden lexicográfico es el testigo.

    Raises:
        ValueError: Si no se cumple 0 < mesh <= delta
    """
    delta = Fraction(delta)
    mesh = Fraction(mesh)
    if not 0 < mesh <= delta:
        raise ValueError(f"Se requiere 0 < mesh <= delta, recibido mesh={mesh}, delta={delta}")

    checker = _PairChecker(f, delta)
    grid = _grid_values(f, mesh)
    two_delta = 2 * delta
    checked = 0
    for i, a in enumerate(grid):
        # pares con b - a < 2δ se cumplen siempre
        start = bisect_left(grid, a + two_delta, i + 1)
        checked += start - i - 1
        for b in grid[start:]:
            checked += 1
            verdict = checker.check(a, b)
            if not verdict.holds:
                c, d = verdict.witness
                logger.debug(f"Refutado en δ={delta}: a={a}, b={b}, c={c}, d={d}")
                return GridVerdict(GridStatus.REFUTED, delta, mesh, (a, b, c, d), checked)
    return GridVerdict(GridStatus.GRID_CERTIFIED, delta, mesh, None, checked)


def min_delta(f: PLData, resolution) -> DeltaBracket:
    """
    Búsqueda binaria del menor δ certificado en la malla, con mesh = δ/4.

    Returns:
        DeltaBracket con hi - lo <= resolution; lo = 0 si nada se refutó
    """
    resolution = Fraction(resolution)
    if resolution <= 0:
        raise ValueError(f"La resolución debe ser positiva, recibido {resolution}")
    lo, hi = Fraction(0), Fraction(1)
    witness = None
    while hi - lo > resolution:
        mid = (lo + hi) / 2
        verdict = check_grid(f, mid, mid / 4)
        if verdict.is_certified:
            hi = mid
        else:
            lo = mid
            witness = verdict.witness
    logger.info(f"Horquilla de δ mínimo: ({lo}, {hi}]")
    return DeltaBracket(lo, hi, witness)


def pair_threshold(f: PLData, a, b, resolution) -> DeltaBracket:
    """Horquilla del menor δ con el que f es δ-torcida entre a y b."""
    resolution = Fraction(resolution)
    if resolution <= 0:
        raise ValueError(f"La resolución debe ser positiva, recibido {resolution}")
    a, b = Fraction(a), Fraction(b)
    lo, hi = Fraction(0), Fraction(1)
    witness = None
    while hi - lo > resolution:
        mid = (lo + hi) / 2
        verdict = check_pair(f, a, b, mid)
        if verdict.holds:
            hi = mid
        else:
            lo = mid
            witness = verdict.witness
    return DeltaBracket(lo, hi, witness)


def horizon(f: PLMap, delta, n_max: int, mesh=None) -> Horizon:
    """
    Menor n <= n_max cuyo iterado f^n queda certificado en la malla.

    Raises:
        BreakpointLimitError: Propagado desde la iteración
    """
    delta = Fraction(delta)
    mesh = delta / 4 if mesh is None else Fraction(mesh)
    if n_max < 1:
        raise ValueError(f"n_max debe ser positivo, recibido {n_max}")
    per_n: List[GridVerdict] = []
    for n, fn in enumerate(iterates(f, n_max), start=1):
        verdict = check_grid(fn, delta, mesh)
        per_n.append(verdict)
        logger.info(f"Horizonte δ={delta}: n={n} -> {verdict.status.value}")
        if verdict.is_certified:
            return Horizon(delta, n, n_max, tuple(per_n))
    return Horizon(delta, None, n_max, tuple(per_n))


def _identity_on(level: Component) -> PartialMap:
    return PartialMap((level.lo, level.hi), (level.lo, level.hi))


def tower_crookedness(tower: "Tower", delta, mesh) -> List[TowerLevelVerdict]:
    """
    Para cada nivel k busca k' > k con f_{k',k} certificada δ-torcida.

    f_{k',k} se construye encadenando las restricciones entre niveles. En el
    último nivel se usa la identidad sobre I_depth. δ es absoluto.
    """
    delta = Fraction(delta)
    mesh = Fraction(mesh)
    depth = len(tower.levels)
    results: List[TowerLevelVerdict] = []
    for k in range(1, depth + 1):
        level = tower.levels[k - 1]
        if level.is_point:
            vacuous = GridVerdict(GridStatus.GRID_CERTIFIED, delta, mesh, None, 0)
            results.append(TowerLevelVerdict(k, k, vacuous, vacuous=True))
            continue
        if k == depth:
            verdict = check_grid(_identity_on(level), delta, mesh)
            results.append(TowerLevelVerdict(k, k if verdict.is_certified else None, verdict))
            continue
        chain: Optional[PartialMap] = None
        found = None
        verdict = None
        for k_prime in range(k + 1, depth + 1):
            step = tower.maps[k_prime - 2]
            chain = step if chain is None else compose_partial(chain, step)
            verdict = check_grid(chain, delta, mesh)
            if verdict.is_certified:
                found = k_prime
                break
        results.append(TowerLevelVerdict(k, found, verdict))
        logger.debug(f"Torre nivel {k}: k'={found}")
    return results
