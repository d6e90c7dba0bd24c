"""Coxeter symbols, the catalog of Coxeter tetrahedra, and the presentations of the
tetrahedron group H and the tetrahedron Kleinian group K."""

import dataclasses
import enum
import functools
import pathlib
import re

import pandas as pd

from tetra_subgroups import perms, words

DATA_FOLDER = pathlib.Path(__file__).parent / "data"
CATALOG_FILE = DATA_FOLDER / "catalog.csv"

SYMBOL_FIELDS = ("p", "q", "r", "s", "t", "u")

FULL_GENERATORS = ("P", "Q", "R", "S")
KLEINIAN_GENERATORS = ("a", "b", "c")

# dihedral-angle elements in symbol order: (PQ)^p, (QR)^q, (RS)^r, (PR)^s, (PS)^t, (QS)^u
ANGLE_LABELS = ("PQ", "QR", "RS", "PR", "PS", "QS")
_FULL_ANGLE_PAIRS = ((0, 1), (1, 2), (2, 3), (0, 2), (0, 3), (1, 3))
# the same elements written over a = PQ, b = QR, c = RS
_KLEINIAN_ANGLE_WORDS = ((0,), (1,), (2,), (0, 1), (0, 1, 2), (1, 2))


class Group(enum.StrEnum):
    full = "full"
    kleinian = "kleinian"


class Geometry(enum.StrEnum):
    spherical = "spherical"
    euclidean = "euclidean"
    hyperbolic_compact = "hyperbolic-compact"
    hyperbolic_noncompact = "hyperbolic-noncompact"


@dataclasses.dataclass(frozen=True)
class CoxeterSymbol:
    p: int
    q: int
    r: int
    s: int
    t: int
    u: int

    def __post_init__(self) -> None:
        for name, value in zip(SYMBOL_FIELDS, self.entries, strict=True):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"symbol entry {name} must be an integer, got {value!r}")
            if value < 2:
                raise ValueError(f"symbol entry {name}={value} is below 2")

    @property
    def entries(self) -> tuple[int, int, int, int, int, int]:
        return (self.p, self.q, self.r, self.s, self.t, self.u)

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.entries)


def parse_symbol(text: str) -> CoxeterSymbol:
    parts = [part.strip() for part in text.strip().strip("[]").split(",")]
    if len(parts) != 6 or not all(re.fullmatch(r"[+-]?\d+", part) for part in parts):
        raise ValueError(f"expected six comma-separated integers, got {text!r}")
    return CoxeterSymbol(*(int(part) for part in parts))


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    id: str
    symbol: CoxeterSymbol
    geometry: Geometry
    ideal_vertices: int = 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "symbol": str(self.symbol),
            "geometry": str(self.geometry),
            "ideal_vertices": self.ideal_vertices,
        }


@functools.cache
def catalog() -> tuple[CatalogEntry, ...]:
    df = pd.read_csv(CATALOG_FILE, comment="#", skipinitialspace=True)
    return tuple(
        CatalogEntry(
            id=row.id,
            symbol=CoxeterSymbol(*(int(getattr(row, name)) for name in SYMBOL_FIELDS)),
            geometry=Geometry(row.geometry),
            ideal_vertices=int(row.ideal_vertices),
        )
        for row in df.itertuples(index=False)
    )


def lookup(entry_id: str) -> CatalogEntry:
    for entry in catalog():
        if entry.id == entry_id:
            return entry
    raise ValueError(f"unknown catalog id {entry_id!r}")


def entries_with_geometry(geometry: Geometry | None = None) -> list[CatalogEntry]:
    return [entry for entry in catalog() if geometry is None or entry.geometry == geometry]


def hyperbolic_entries() -> list[CatalogEntry]:
    return [entry for entry in catalog() if entry.id.startswith("t")]


@dataclasses.dataclass(frozen=True)
class Presentation:
    """Generators plus relators, each relator stored as ``base^exponent``."""

    group: Group
    generator_names: tuple[str, ...]
    powers: tuple[tuple[words.Word, int], ...]
    angle_words: tuple[tuple[str, words.Word], ...] = ()
    symbol: CoxeterSymbol | None = None

    def __post_init__(self) -> None:
        for base, exponent in self.powers:
            unknown = [gen for gen in words.generators_of(base) if not 0 <= gen < self.n_generators]
            if unknown:
                raise ValueError(f"relator mentions undeclared generators {unknown}")
            if exponent < 1:
                raise ValueError(f"relator exponent must be positive, got {exponent}")

    @property
    def n_generators(self) -> int:
        return len(self.generator_names)

    @property
    def relators(self) -> tuple[words.Word, ...]:
        return tuple(words.power(base, exponent) for base, exponent in self.powers)

    @property
    def element_orders(self) -> dict[words.Word, int]:
        return {base: exponent for base, exponent in self.powers}

    @functools.cached_property
    def involutions(self) -> frozenset[int]:
        return frozenset(
            base[0][0] for base, exponent in self.powers if len(base) == 1 and exponent == 2
        )

    def reduce(self, w: words.Word) -> words.Word:
        return words.free_reduce(w, self.involutions)

    def invert(self, w: words.Word) -> words.Word:
        return words.inverse(w, self.involutions)


    def format_word(self, w: words.Word) -> str:
        return words.format_word(w, self.generator_names)

    def parse_word(self, text: str) -> words.Word:
        return self.reduce(words.parse_word(text, self.generator_names))

    def describe(self) -> str:
        relators = ", ".join(
            f"{self.format_word(base)}^{exponent}" if len(base) == 1 else f"({self.format_word(base)})^{exponent}"
            for base, exponent in self.powers
        )
        return f"<{', '.join(self.generator_names)} | {relators}>"


def full_presentation(sym: CoxeterSymbol) -> Presentation:
    involution_powers = tuple((((gen, 1),), 2) for gen in range(4))
    angle_bases = tuple(((x, 1), (y, 1)) for x, y in _FULL_ANGLE_PAIRS)
    return Presentation(
        group=Group.full,
        generator_names=FULL_GENERATORS,
        powers=involution_powers + tuple(zip(angle_bases, sym.entries, strict=True)),
        angle_words=tuple(zip(ANGLE_LABELS, angle_bases, strict=True)),
        symbol=sym,
    )


def kleinian_presentation(sym: CoxeterSymbol) -> Presentation:
    bases = tuple(tuple((gen, 1) for gen in gens) for gens in _KLEINIAN_ANGLE_WORDS)
    return Presentation(
        group=Group.kleinian,
        generator_names=KLEINIAN_GENERATORS,
        powers=tuple(zip(bases, sym.entries, strict=True)),
        angle_words=tuple(zip(ANGLE_LABELS, bases, strict=True)),
        symbol=sym,
    )


def presentation_for(sym: CoxeterSymbol, group: Group) -> Presentation:
    if group == Group.full:
        return full_presentation(sym)
    return kleinian_presentation(sym)


def kleinian_restriction(a: perms.Assignment) -> perms.Assignment:
    """The images of a = PQ, b = QR, c = RS induced by an assignment of P, Q, R, S."""
    if a.generators != FULL_GENERATORS:
        raise ValueError(f"expected an assignment of {FULL_GENERATORS}, got {a.generators}")
    p, q, r, s = a.perms
    return perms.Assignment(
        KLEINIAN_GENERATORS,
        (perms.compose(p, q), perms.compose(q, r), perms.compose(r, s)),
    )
