"""Permutations of 1..n acting on the left: ``compose(f, g)(x) == f(g(x))``."""

import dataclasses
import functools
import itertools
import math
import re
from collections.abc import Iterable, Iterator, Mapping

from tetra_subgroups import words

MAX_DEGREE = 12


class DegreeCapError(ValueError):
    pass


def check_degree(n: int) -> None:
    if n < 1:
        raise ValueError(f"degree must be >= 1, got {n}")
    if n > MAX_DEGREE:
        raise DegreeCapError(f"degree {n} exceeds the cap of {MAX_DEGREE}")


@dataclasses.dataclass(frozen=True, order=True)
class Perm:
    """A bijection of {1..n} in one-line notation: ``images[i - 1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        check_degree(len(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        return format_cycles(self)


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def _unchecked(images: tuple[int, ...]) -> Perm:
    # skips validation for images built from other permutations
    perm = object.__new__(Perm)
    object.__setattr__(perm, "images", images)
    return perm


def compose(f: Perm, g: Perm) -> Perm:
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    f_images = f.images
    return _unchecked(tuple(f_images[x - 1] for x in g.images))


def inverse(f: Perm) -> Perm:
    images = [0] * f.degree
    for point, image in enumerate(f.images, start=1):
        images[image - 1] = point
    return _unchecked(tuple(images))


def order(f: Perm) -> int:
    return math.lcm(1, *(len(cycle) for cycle in f.cycles()))


def is_even(f: Perm) -> bool:
    return sum(len(cycle) - 1 for cycle in f.cycles()) % 2 == 0


def conjugate(g: Perm, sigma: Perm) -> Perm:
    """``sigma . g . sigma^-1``."""
    return compose(compose(sigma, g), inverse(sigma))


@functools.cache
def all_perms(n: int) -> tuple[Perm, ...]:
    """Every permutation of degree n, in lexicographic order of one-line notation."""
    check_degree(n)
    return tuple(_unchecked(images) for images in itertools.permutations(range(1, n + 1)))


@functools.cache
def point_stabilizer(n: int) -> tuple[Perm, ...]:
    return tuple(sigma for sigma in all_perms(n) if sigma(1) == 1)


def format_cycles(f: Perm) -> str:
    cycles = f.cycles()
    if not cycles:
        return "(1)"
    separator = "," if f.degree >= 10 else ""
    return "".join("(" + separator.join(str(point) for point in cycle) + ")" for cycle in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Perm:
    """Parses cycle notation such as ``(12)(34)`` or ``(1)``; whitespace is ignored.

    Points are single digits unless the cycle is written with commas, ``(1,10,3)``.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact or _CYCLE_RE.sub("", compact):
        raise ValueError(f"malformed cycle notation {text!r}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(compact):
        parts = body.split(",") if "," in body else list(body)
        try:
            cycle = [int(part) for part in parts]
        except ValueError as e:
            raise ValueError(f"malformed cycle notation {text!r}") from e
        if any(point < 1 or point > degree for point in cycle):
            raise ValueError(f"{text!r} moves a point outside 1..{degree}")
        if len(cycle) == 1:
            continue
        if seen.intersection(cycle) or len(set(cycle)) != len(cycle):
            raise ValueError(f"cycles in {text!r} are not disjoint")
        seen.update(cycle)
        for point, image in zip(cycle, cycle[1:] + cycle[:1], strict=True):
            images[point - 1] = image
    return Perm(tuple(images))


@dataclasses.dataclass(frozen=True, order=True)
class Assignment:
    """Images of the generators of a presentation, all of a common degree."""

    generators: tuple[str, ...]
    perms: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if len(self.generators) != len(self.perms):
            raise ValueError("every generator needs exactly one image")
        if len({perm.degree for perm in self.perms}) > 1:
            raise ValueError("generator images have different degrees")

    @property
    def degree(self) -> int:
        return self.perms[0].degree if self.perms else 1

    def __getitem__(self, name: str) -> Perm:
        try:
            return self.perms[self.generators.index(name)]
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def as_dict(self) -> dict[str, Perm]:
        return dict(zip(self.generators, self.perms, strict=True))

    def to_cycles(self) -> dict[str, str]:
        return {name: format_cycles(perm) for name, perm in self.as_dict().items()}

    def __str__(self) -> str:
        return " ".join(f"{name}:{cycles}" for name, cycles in self.to_cycles().items())


def assignment(images: Mapping[str, Perm], generators: Iterable[str]) -> Assignment:
    generators = tuple(generators)
    missing = [name for name in generators if name not in images]
    if missing:
        raise ValueError(f"no image given for generators {missing}")
    return Assignment(generators, tuple(images[name] for name in generators))


def parse_assignment(cycles: Mapping[str, str], generators: Iterable[str], degree: int) -> Assignment:
    return assignment({name: parse_cycles(text, degree) for name, text in cycles.items()}, generators)


def evaluate_word(w: words.Word, a: Assignment) -> Perm:
    result = identity(a.degree)
    for gen, sign in w:
        if not 0 <= gen < len(a.perms):
            raise ValueError(f"unknown generator index {gen} for generators {a.generators}")
        image = a.perms[gen]
        result = compose(result, image if sign == 1 else inverse(image))
    return result


def orbit(point: int, perms: Iterable[Perm]) -> set[int]:
    perms = tuple(perms)
    reached = {point}
    frontier = [point]
    while frontier:
        current = frontier.pop()
        for perm in perms:
            image = perm(current)
            if image not in reached:
                reached.add(image)
                frontier.append(image)
    return reached


def is_transitive(a: Assignment) -> bool:
    return len(orbit(1, a.perms)) == a.degree


def conjugate_assignment(a: Assignment, sigma: Perm) -> Assignment:
    if sigma.degree != a.degree:
        raise ValueError(f"degree mismatch: conjugator {sigma.degree} vs assignment {a.degree}")
    return Assignment(a.generators, tuple(conjugate(perm, sigma) for perm in a.perms))


def iter_products(candidates: list[tuple[Perm, ...]], generators: tuple[str, ...]) -> Iterator[Assignment]:
    for perms in itertools.product(*candidates):
        yield Assignment(generators, perms)
