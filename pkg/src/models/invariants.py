#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Invariantes de conjugación y testigos de no conjugación entre aplicaciones de familia.

Las conjugaciones pueden invertir la orientación, así que las firmas se
comparan también invertidas y la clase diagonal como par no ordenado.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.models.family_models import FamilyMap
from src.models.pl_map import (
    Component, PLMap, classify_diagonal, conjugate, fixed_points,
    iterates, lap_number, monotone_runs, reflect,
)
from src.utils.config import get_crookedness_config

logger = logging.getLogger(__name__)


class NotApplicableError(ValueError):
    """El invariante requiere un descriptor de familia."""
    pass


class ComponentKind(Enum):
    POINT = "Point"
    INTERVAL = "Interval"


class WitnessKind(Enum):
    FIX_SIGNATURE_MISMATCH = "FixSignatureMismatch"
    ACCUMULATION_COUNT_MISMATCH = "AccumulationCountMismatch"
    LAP_PROFILE_MISMATCH = "LapProfileMismatch"
    DIAGONAL_PAIR_MISMATCH = "DiagonalPairMismatch"


@dataclass(frozen=True)
class MonotoneDecomposition:
    """Intervalos maximales crecientes, decrecientes y mesetas."""
    increasing: Tuple[Component, ...]
    decreasing: Tuple[Component, ...]
    plateaus: Tuple[Component, ...]


@dataclass(frozen=True)
class FixSignature:
    """Tipos de las componentes de Fix(f) y pertenencia de 0 y 1."""
    kinds: Tuple[ComponentKind, ...]
    has_zero: bool
    has_one: bool

    def reversed(self) -> "FixSignature":
        return FixSignature(tuple(reversed(self.kinds)), self.has_one, self.has_zero)

    def __str__(self) -> str:
        return "(" + ", ".join(k.value for k in self.kinds) + ")"


@dataclass(frozen=True)
class AccumulationData:
    count: int
    positions: Tuple[Fraction, ...]


@dataclass(frozen=True)
class EntropyEstimate:
    """Pendiente de mínimos cuadrados de log lap(f^n) frente a n."""
    slope: float
    laps: Tuple[int, ...]


@dataclass(frozen=True)
class NonConjugacyWitness:
    kind: WitnessKind
    detail: str


@dataclass(frozen=True)
class CensusRow:
    pair_id: str
    first: int
    second: int
    witness: Optional[NonConjugacyWitness]

    @property
    def witness_kind(self) -> str:
        return self.witness.kind.value if self.witness else "None"


def monotonicity_decomposition(f: PLMap) -> MonotoneDecomposition:
    """Descomposición exacta en tramos de monotonía estricta y mesetas."""
    increasing, decreasing, plateaus = [], [], []
    for run in monotone_runs(f):
        target = increasing if run.sign > 0 else decreasing if run.sign < 0 else plateaus
        target.append(Component(run.lo, run.hi))
    return MonotoneDecomposition(tuple(increasing), tuple(decreasing), tuple(plateaus))


def strict_critical_points(f: PLMap) -> List[Fraction]:
    """Breakpoints interiores donde cambia la monotonía entre tramos estrictos."""
    runs = monotone_runs(f)
    return [
        left.hi for left, right in zip(runs, runs[1:])
        if left.sign != 0 and right.sign != 0 and left.sign != right.sign
    ]


def fix_signature(f: PLMap) -> FixSignature:
    comps = fixed_points(f)
    kinds = tuple(ComponentKind.POINT if c.is_point else ComponentKind.INTERVAL for c in comps)
    has_zero = bool(comps) and comps[0].lo == 0
    has_one = bool(comps) and comps[-1].hi == 1
    return FixSignature(kinds, has_zero, has_one)


def accumulation_descriptor(fm) -> AccumulationData:
    """
    Marcas de acumulación registradas por la construcción.

    Una PLMap finita no tiene puntos de acumulación propios; el dato vive en
    el descriptor de la familia.

    Raises:
        NotApplicableError: Si fm no es una FamilyMap
    """
    if not isinstance(fm, FamilyMap):
        raise NotApplicableError("Las marcas de acumulación requieren una FamilyMap con descriptor")
    return AccumulationData(len(fm.marks), tuple(fm.marks))


def lap_profile(f: PLMap, depth: int) -> Iterator[int]:
    """lap(f^n) para n = 1..depth, calculado de forma incremental."""
    for fn in iterates(f, depth):
        yield lap_number(fn)


def entropy_estimate(f: PLMap, n_max: int) -> EntropyEstimate:
    """
    Estimación de entropía por crecimiento del número de laps.

    Raises:
        ValueError: Si n_max < 2
        BreakpointLimitError: Si algún iterado supera el techo de breakpoints
    """
    if n_max < 2:
        raise ValueError(f"n_max debe ser >= 2, recibido {n_max}")
    laps = tuple(lap_profile(f, n_max))
    n = np.arange(1, n_max + 1, dtype=float)
    slope = float(np.polyfit(n, np.log(np.array(laps, dtype=float)), 1)[0])
    logger.debug(f"Entropía estimada {slope:.6f} con laps {laps}")
    return EntropyEstimate(slope, laps)


def _diagonal_pair(f: PLMap) -> frozenset:
    return frozenset({classify_diagonal(f), classify_diagonal(reflect(f))})


def distinguish(a: FamilyMap, b: FamilyMap, lap_depth: Optional[int] = None) -> Optional[NonConjugacyWitness]:
    """
    Busca un invariante de conjugación que diferencie a y b.

    Orden: firma de Fix (directa e invertida), número de marcas de
    acumulación, perfil de laps de los iterados y par de clases diagonales.
    None significa indistinguibles a esta resolución, no conjugadas.
    """
    depth = get_crookedness_config()["lap_depth"] if lap_depth is None else lap_depth

    sig_a, sig_b = fix_signature(a.map), fix_signature(b.map)
    if sig_b != sig_a and sig_b != sig_a.reversed():
        return NonConjugacyWitness(WitnessKind.FIX_SIGNATURE_MISMATCH, f"{sig_a} vs {sig_b}")

    acc_a, acc_b = accumulation_descriptor(a), accumulation_descriptor(b)
    if acc_a.count != acc_b.count:
        return NonConjugacyWitness(WitnessKind.ACCUMULATION_COUNT_MISMATCH, f"{acc_a.count} vs {acc_b.count}")

    for n, (lap_a, lap_b) in enumerate(zip(lap_profile(a.map, depth), lap_profile(b.map, depth)), start=1):
        if lap_a != lap_b:
            return NonConjugacyWitness(WitnessKind.LAP_PROFILE_MISMATCH, f"n={n}: {lap_a} vs {lap_b}")

    pair_a, pair_b = _diagonal_pair(a.map), _diagonal_pair(b.map)
    if pair_a != pair_b:
        names_a = sorted(c.value for c in pair_a)
        names_b = sorted(c.value for c in pair_b)
        return NonConjugacyWitness(WitnessKind.DIAGONAL_PAIR_MISMATCH, f"{names_a} vs {names_b}")
    return None


def conjugate_family(fm: FamilyMap, h: PLMap) -> FamilyMap:
    """h∘f∘h^{-1} conservando el descriptor; marcas y testigos se transportan por h."""
    decreasing = h.ys[0] > h.ys[-1]
    return FamilyMap(
        map=conjugate(fm.map, h),
        family_tag=fm.family_tag,
        descriptor=fm.descriptor,
        witnesses=tuple(h(w) for w in fm.witnesses),
        marks=tuple(sorted(h(m) for m in fm.marks)),
        reflected=fm.reflected != decreasing,
    )


def census(family_maps: Sequence[FamilyMap], lap_depth: Optional[int] = None) -> List[CensusRow]:
    """distinguish sobre todos los pares no ordenados, en orden lexicográfico."""
    rows = []
    for i, j in combinations(range(len(family_maps)), 2):
        witness = distinguish(family_maps[i], family_maps[j], lap_depth)
        rows.append(CensusRow(f"{i}-{j}", i, j, witness))
    found = sum(1 for row in rows if row.witness is not None)
    logger.info(f"Censo: {found}/{len(rows)} pares distinguidos")
    return rows
