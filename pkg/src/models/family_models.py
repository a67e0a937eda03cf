#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Modelos de datos para las familias de aplicaciones construidas.
Cada FamilyMap agrupa una PLMap con el descriptor de su construcción.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Type

from src.models.pl_map import Component, PLMap, Point, reflect

Entry = Tuple[str, Tuple[Fraction, ...]]

ONE = Fraction(1)


class FamilyTag(Enum):
    HENDERSON = "Henderson"
    NOWHERE_DENSE_FIXED = "NowhereDenseFixed"
    ZERO_ATTRACTED_VARIANT = "ZeroAttractedVariant"
    DOUBLE_SIN = "DoubleSin"
    ARC_EXAMPLE = "ArcExample"


class SetKind(Enum):
    FINITE_UNION = "FiniteUnion"
    CANTOR_TRUNCATION = "CantorTruncation"


class Descriptor(ABC):
    """
    Interfaz común de los descriptores de construcción.

    Un descriptor se serializa como parámetros enteros o simbólicos
    (líneas param) más entradas de racionales exactos (líneas entry).
    """

    @abstractmethod
    def to_params(self) -> Dict[str, str]:
        """Parámetros escalares del descriptor."""
        pass

    @abstractmethod
    def to_entries(self) -> List[Entry]:
        """Entradas con valores racionales exactos."""
        pass

    @classmethod
    @abstractmethod
    def from_parts(cls, params: Dict[str, str], entries: List[Entry]) -> "Descriptor":
        """Reconstruye el descriptor a partir de parámetros y entradas."""
        pass


def _entries_named(entries: List[Entry], name: str, arity: Optional[int]) -> List[Tuple[Fraction, ...]]:
    """Valores de las entradas con un nombre, validando su aridad."""
    values = [v for n, v in entries if n == name]
    for v in values:
        if arity is not None and len(v) != arity:
            raise ValueError(f"Entrada '{name}' con {len(v)} valores, se esperaban {arity}")
    return values


def _param_int(params: Dict[str, str], name: str) -> int:
    if name not in params:
        raise ValueError(f"Falta el parámetro '{name}'")
    try:
        return int(params[name])
    except ValueError as e:
        raise ValueError(f"Parámetro '{name}' no entero: {params[name]!r}") from e


@dataclass(frozen=True)
class NotchRecord:
    """
    Muesca en v como poligonal: entrada, vértices intermedios y salida.
    La punta es el vértice más bajo.
    """
    points: Tuple[Point, ...]

    @property
    def entry(self) -> Point:
        return self.points[0]

    @property
    def exit(self) -> Point:
        return self.points[-1]

    @property
    def tip(self) -> Point:
        return min(self.points, key=lambda p: p[1])


@dataclass(frozen=True)
class NotchSchedule(Descriptor):
    """
    Calendario de muescas de la aproximación de Henderson.
    Las muescas se acumulan en accumulation_target = (1,1).
    """
    count: int
    anchors: Tuple[NotchRecord, ...]
    base_resolution: int = 8
    accumulation_target: Point = (ONE, ONE)

    def __post_init__(self):
        if self.count != len(self.anchors):
            raise ValueError(f"count={self.count} no coincide con {len(self.anchors)} muescas")
        for prev, nxt in zip(self.anchors, self.anchors[1:]):
            if prev.exit[0] > nxt.entry[0]:
                raise ValueError("Las muescas deben ser disjuntas y crecientes hacia 1")
        for notch in self.anchors:
            xs = [p[0] for p in notch.points]
            if len(xs) < 3 or any(x0 >= x1 for x0, x1 in zip(xs, xs[1:])):
                raise ValueError(f"Muesca mal formada: {notch}")
            tip = notch.tip
            if not (tip[1] < notch.entry[1] and tip[1] < notch.exit[1]):
                raise ValueError(f"La punta no queda por debajo de la muesca: {notch}")

    def to_params(self) -> Dict[str, str]:
        return {"count": str(self.count), "base_resolution": str(self.base_resolution)}

    def to_entries(self) -> List[Entry]:
        entries: List[Entry] = [("target", self.accumulation_target)]
        for notch in self.anchors:
            entries.append(("notch", tuple(v for p in notch.points for v in p)))
        return entries

    @classmethod
    def from_parts(cls, params, entries) -> "NotchSchedule":
        anchors = []
        for v in _entries_named(entries, "notch", None):
            if len(v) % 2 or len(v) < 6:
                raise ValueError(f"Muesca con número de valores inválido: {len(v)}")
            anchors.append(NotchRecord(tuple((v[i], v[i + 1]) for i in range(0, len(v), 2))))
        targets = _entries_named(entries, "target", 2)
        target = tuple(targets[0]) if targets else (ONE, ONE)
        return cls(_param_int(params, "count"), tuple(anchors), _param_int(params, "base_resolution"), target)


@dataclass(frozen=True)
class SetDescriptor(Descriptor):
    """
    Conjunto cerrado S ⊂ (0,1) como unión finita de puntos e intervalos.
    rank_tag registra la profundidad de truncación de Cantor (0 para uniones finitas).
    """
    kind: SetKind
    components: Tuple[Component, ...]
    ambient: Component
    rank_tag: int = 0

    def __post_init__(self):
        if not self.components:
            raise ValueError("El conjunto S no puede ser vacío")
        if self.ambient.lo <= 0 or self.ambient.hi >= 1:
            raise ValueError(f"El intervalo ambiente {self.ambient} debe estar en (0,1)")
        for comp in self.components:
            if comp.lo > comp.hi:
                raise ValueError(f"Componente mal formada: {comp}")
            if comp.lo < self.ambient.lo or comp.hi > self.ambient.hi:
                raise ValueError(f"Componente {comp} fuera del intervalo ambiente {self.ambient}")
        for prev, nxt in zip(self.components, self.components[1:]):
            if not prev.hi < nxt.lo:
                raise ValueError(f"Componentes no ordenadas o no disjuntas: {prev}, {nxt}")

    @property
    def maximum(self) -> Fraction:
        return self.components[-1].hi

    def to_params(self) -> Dict[str, str]:
        return {"kind": self.kind.value, "rank": str(self.rank_tag)}

    def to_entries(self) -> List[Entry]:
        entries: List[Entry] = [("ambient", (self.ambient.lo, self.ambient.hi))]
        entries.extend(("component", (c.lo, c.hi)) for c in self.components)
        return entries

    @classmethod
    def from_parts(cls, params, entries) -> "SetDescriptor":
        try:
            kind = SetKind(params.get("kind", ""))
        except ValueError as e:
            raise ValueError(f"Tipo de conjunto desconocido: {params.get('kind')!r}") from e
        ambient = _entries_named(entries, "ambient", 2)
        if not ambient:
            raise ValueError("Falta la entrada 'ambient'")
        comps = tuple(Component(v[0], v[1]) for v in _entries_named(entries, "component", 2))
        return cls(kind, comps, Component(*ambient[0]), _param_int(params, "rank"))


@dataclass(frozen=True)
class ClusterSpec:
    """Grupo de oscilaciones en (0,1/2); acumulativo si se estrecha hacia position."""
    position: Fraction
    oscillations: int
    accumulating: bool


@dataclass(frozen=True)
class OscillationSchedule(Descriptor):
    """Calendario de grupos de puntos críticos de una variante 0-atraída."""
    clusters: Tuple[ClusterSpec, ...]
    notches: int = 2

    def __post_init__(self):
        positions = [c.position for c in self.clusters]
        if positions != sorted(set(positions)):
            raise ValueError("Las posiciones de los grupos deben ser estrictamente crecientes")
        for c in self.clusters:
            if not 0 < c.position < Fraction(1, 2):
                raise ValueError(f"Posición {c.position} fuera de (0, 1/2)")
            if c.oscillations < 1:
                raise ValueError(f"Número de oscilaciones inválido: {c.oscillations}")

    @property
    def accumulation_marks(self) -> Tuple[Fraction, ...]:
        return tuple(c.position for c in self.clusters if c.accumulating)

    @property
    def dip_count(self) -> int:
        return sum(c.oscillations if c.accumulating else 1 for c in self.clusters)

    def to_params(self) -> Dict[str, str]:
        return {"notches": str(self.notches)}

    def to_entries(self) -> List[Entry]:
        return [
            ("cluster", (c.position, Fraction(c.oscillations), Fraction(int(c.accumulating))))
            for c in self.clusters
        ]

    @classmethod
    def from_parts(cls, params, entries) -> "OscillationSchedule":
        clusters = []
        for v in _entries_named(entries, "cluster", 3):
            if v[1].denominator != 1 or v[2] not in (0, 1):
                raise ValueError(f"Grupo mal formado: {v}")
            clusters.append(ClusterSpec(v[0], int(v[1]), bool(v[2])))
        return cls(tuple(clusters), _param_int(params, "notches"))


@dataclass(frozen=True)
class SinLevels(Descriptor):
    """Niveles [a_i, b_i] de la aplicación doble sin(1/x)."""
    levels: int
    intervals: Tuple[Component, ...]
    accumulation: Fraction = Fraction(3, 4)

    def to_params(self) -> Dict[str, str]:
        return {"levels": str(self.levels)}

    def to_entries(self) -> List[Entry]:
        entries: List[Entry] = [("accumulation", (self.accumulation,))]
        entries.extend(("level", (c.lo, c.hi)) for c in self.intervals)
        return entries

    @classmethod
    def from_parts(cls, params, entries) -> "SinLevels":
        intervals = tuple(Component(v[0], v[1]) for v in _entries_named(entries, "level", 2))
        acc = _entries_named(entries, "accumulation", 1)
        return cls(_param_int(params, "levels"), intervals, acc[0][0] if acc else Fraction(3, 4))


@dataclass(frozen=True)
class ArcLevels(Descriptor):
    """Grupos de oscilación que encogen a la mitad por nivel hacia position."""
    levels: int
    position: Fraction
    clusters: Tuple[Component, ...]
    image_diameters: Tuple[Fraction, ...]

    def to_params(self) -> Dict[str, str]:
        return {"levels": str(self.levels)}

    def to_entries(self) -> List[Entry]:
        entries: List[Entry] = [("position", (self.position,))]
        entries.extend(
            ("cluster", (c.lo, c.hi, diam)) for c, diam in zip(self.clusters, self.image_diameters)
        )
        return entries

    @classmethod
    def from_parts(cls, params, entries) -> "ArcLevels":
        position = _entries_named(entries, "position", 1)
        if not position:
            raise ValueError("Falta la entrada 'position'")
        values = _entries_named(entries, "cluster", 3)
        return cls(
            _param_int(params, "levels"),
            position[0][0],
            tuple(Component(v[0], v[1]) for v in values),
            tuple(v[2] for v in values),
        )


DESCRIPTOR_TYPES: Dict[FamilyTag, Type[Descriptor]] = {
    FamilyTag.HENDERSON: NotchSchedule,
    FamilyTag.NOWHERE_DENSE_FIXED: SetDescriptor,
    FamilyTag.ZERO_ATTRACTED_VARIANT: OscillationSchedule,
    FamilyTag.DOUBLE_SIN: SinLevels,
    FamilyTag.ARC_EXAMPLE: ArcLevels,
}


@dataclass(frozen=True)
class FamilyMap:
    """
    PLMap con su descriptor de construcción.

    witnesses son racionales expuestos por la construcción (por ejemplo η con
    f(f(η)) = 0); marks son las posiciones de acumulación registradas.
    reflected indica que la aplicación está conjugada por x -> 1 - x
    respecto al descriptor.
    """
    map: PLMap
    family_tag: FamilyTag
    descriptor: Descriptor
    witnesses: Tuple[Fraction, ...] = field(default_factory=tuple)
    marks: Tuple[Fraction, ...] = field(default_factory=tuple)
    reflected: bool = False


def reflect_family(fm: FamilyMap) -> FamilyMap:
    """Conjuga una FamilyMap por φ(x) = 1 - x conservando el descriptor."""
    return FamilyMap(
        map=reflect(fm.map),
        family_tag=fm.family_tag,
        descriptor=fm.descriptor,
        witnesses=tuple(ONE - w for w in fm.witnesses),
        marks=tuple(sorted(ONE - m for m in fm.marks)),
        reflected=not fm.reflected,
    )
