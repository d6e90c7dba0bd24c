import collections
import concurrent.futures
import dataclasses
import enum
import itertools
import logging
import math
from collections.abc import Iterator

from tetra_subgroups import perms, presentations, words

logger = logging.getLogger(__name__)

ORACLE_MAX_INDEX = 4


class Stage(enum.StrEnum):
    all = "all"
    nontrivial = "nontrivial"
    relator_filtered = "relator_filtered"
    transitive = "transitive"


def satisfies_relators(a: perms.Assignment, pres: presentations.Presentation) -> bool:
    return all(
        exponent % perms.order(perms.evaluate_word(base, a)) == 0 for base, exponent in pres.powers
    )


@dataclasses.dataclass(frozen=True)
class TransitiveRep:
    presentation: presentations.Presentation
    assignment: perms.Assignment

    def __post_init__(self) -> None:
        if self.assignment.generators != self.presentation.generator_names:
            raise ValueError("assignment generators do not match the presentation")
        if not satisfies_relators(self.assignment, self.presentation):
            raise ValueError(f"{self.assignment} does not satisfy the relators")
        if not perms.is_transitive(self.assignment):
            raise ValueError(f"{self.assignment} is not transitive")

    @property
    def degree(self) -> int:
        return self.assignment.degree


@dataclasses.dataclass(frozen=True)
class SubgroupClass:
    rep: TransitiveRep
    index: int
    image_type: str
    labeled_orbit_size: int
    # distinct subgroups in the conjugacy class
    subgroup_count: int


def _evaluate(base: words.Word, images: tuple[perms.Perm, ...]) -> perms.Perm:
    result = images[base[0][0]] if base[0][1] == 1 else perms.inverse(images[base[0][0]])
    for gen, sign in base[1:]:
        image = images[gen] if sign == 1 else perms.inverse(images[gen])
        result = perms.compose(result, image)
    return result


def _relator_schedule(pres: presentations.Presentation) -> list[list[tuple[words.Word, int]]]:
    """Relators grouped by the last generator they need, in declared generator order."""
    schedule: list[list[tuple[words.Word, int]]] = [[] for _ in pres.generator_names]
    for base, exponent in pres.powers:
        schedule[max(words.generators_of(base))].append((base, exponent))
    return schedule


def _passes(images: tuple[perms.Perm, ...], checks: list[tuple[words.Word, int]]) -> bool:
    return all(exponent % perms.order(_evaluate(base, images)) == 0 for base, exponent in checks)


def _search(
    pres: presentations.Presentation, n: int, prefix: tuple[perms.Perm, ...]
) -> list[tuple[perms.Perm, ...]]:
    schedule = _relator_schedule(pres)
    candidates = perms.all_perms(n)
    found: list[tuple[perms.Perm, ...]] = []

    def extend(images: tuple[perms.Perm, ...]) -> None:
        depth = len(images)
        if depth == pres.n_generators:
            found.append(images)
            return
        for image in candidates:
            extended = images + (image,)
            if _passes(extended, schedule[depth]):
                extend(extended)

    extend(prefix)
    return found


def _first_images(pres: presentations.Presentation, n: int) -> list[perms.Perm]:
    checks = _relator_schedule(pres)[0]
    return [image for image in perms.all_perms(n) if _passes((image,), checks)]


def _relator_survivors(
    pres: presentations.Presentation, n: int, jobs: int = 1
) -> list[perms.Assignment]:
    if pres.n_generators == 0:
        return []
    firsts = _first_images(pres, n)
    if jobs > 1 and len(firsts) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            chunks = list(
                executor.map(_search, itertools.repeat(pres), itertools.repeat(n), [(f,) for f in firsts])
            )
    else:
        chunks = [_search(pres, n, (first,)) for first in firsts]
    found = sorted(
        perms.Assignment(pres.generator_names, images) for chunk in chunks for images in chunk
    )
    logger.debug("%d relator-satisfying assignments of degree %d for %s", len(found), n, pres.describe())
    return found


def enumerate_candidates(
    pres: presentations.Presentation, n: int, stage: Stage = Stage.transitive, jobs: int = 1
) -> list[perms.Assignment]:
    perms.check_degree(n)
    stage = Stage(stage)
    if stage in (Stage.all, Stage.nontrivial):
        space = [perms.all_perms(n)] * pres.n_generators
        result = list(perms.iter_products(space, pres.generator_names))
        if stage == Stage.nontrivial and n > 1:
            result = [a for a in result if not all(perm.is_identity() for perm in a.perms)]
        return result
    survivors = _relator_survivors(pres, n, jobs=jobs)
    if stage == Stage.relator_filtered:
        return survivors
    return [a for a in survivors if perms.is_transitive(a)]


def _min_conjugate(a: perms.Assignment, conjugators: tuple[perms.Perm, ...]) -> perms.Assignment:
    return min(perms.conjugate_assignment(a, sigma) for sigma in conjugators)


def canonical_form(a: perms.Assignment) -> perms.Assignment:
    """Least S_n-conjugate, comparing generator images in declared order by one-line notation."""
    return _min_conjugate(a, perms.all_perms(a.degree))


def point_stabilizer_form(a: perms.Assignment) -> perms.Assignment:
    """Least conjugate under relabelings fixing point 1; equal forms mean equal stabilizers."""
    return _min_conjugate(a, perms.point_stabilizer(a.degree))


def centralizer_size(a: perms.Assignment) -> int:
    return sum(1 for sigma in perms.all_perms(a.degree) if perms.conjugate_assignment(a, sigma) == a)


def image_group(a: perms.Assignment) -> set[perms.Perm]:
    group = {perms.identity(a.degree)}
    frontier = list(group)
    while frontier:
        element = frontier.pop()
        for generator in a.perms:
            product = perms.compose(element, generator)
            if product not in group:
                group.add(product)
                frontier.append(product)
    return group


_SMALL_IMAGE_TYPES = {
    (2, 2): "S2",
    (3, 3): "Z3",
    (3, 6): "S3",
    (4, 8): "D4",
    (4, 12): "A4",
    (4, 24): "S4",
}


def classify_image(rep: TransitiveRep) -> str:
    group = image_group(rep.assignment)
    n = rep.degree
    size = len(group)
    if size == 1:
        return "1"
    if (n, size) in _SMALL_IMAGE_TYPES:
        return _SMALL_IMAGE_TYPES[(n, size)]
    if (n, size) == (4, 4):
        return "Z4" if max(perms.order(element) for element in group) == 4 else "V"
    if size == math.factorial(n):
        return f"S{n}"
    if size == math.factorial(n) // 2 and all(perms.is_even(element) for element in group):
        return f"A{n}"
    return f"order-{size}"


def _warn_if_unchecked(n: int) -> None:
    if n > ORACLE_MAX_INDEX:
        logger.warning("index %d: oracle cross-checks only run for n <= %d", n, ORACLE_MAX_INDEX)


def enumerate_classes(
    pres: presentations.Presentation, n: int, jobs: int = 1
) -> list[SubgroupClass]:
    perms.check_degree(n)
    _warn_if_unchecked(n)
    orbits: dict[perms.Assignment, list[perms.Assignment]] = collections.defaultdict(list)
    for a in enumerate_candidates(pres, n, Stage.transitive, jobs=jobs):
        orbits[canonical_form(a)].append(a)

    classes = []
    for canonical in sorted(orbits):
        members = orbits[canonical]
        rep = TransitiveRep(pres, canonical)
        classes.append(
            SubgroupClass(
                rep=rep,
                index=n,
                image_type=classify_image(rep),
                labeled_orbit_size=len(members),
                subgroup_count=len({point_stabilizer_form(member) for member in members}),
            )
        )
    logger.info("%s, index %d: %d classes", pres.describe(), n, len(classes))
    return classes


def count_distinct_subgroups(pres: presentations.Presentation, n: int, jobs: int = 1) -> int:
    perms.check_degree(n)
    _warn_if_unchecked(n)
    return len({point_stabilizer_form(a) for a in enumerate_candidates(pres, n, Stage.transitive, jobs=jobs)})


def angle_images(a: perms.Assignment, pres: presentations.Presentation) -> dict[str, perms.Perm]:
    """Images of the dihedral-angle elements PQ, QR, RS, PR, PS, QS."""
    return {label: perms.evaluate_word(w, a) for label, w in pres.angle_words}


def pair_images(rep: TransitiveRep) -> dict[str, perms.Perm]:
    return angle_images(rep.assignment, rep.presentation)


def classes_by_image_type(classes: list[SubgroupClass]) -> dict[str, int]:
    return dict(collections.Counter(cls.image_type for cls in classes))


def iter_conjugates(a: perms.Assignment) -> Iterator[perms.Assignment]:
    for sigma in perms.all_perms(a.degree):
        yield perms.conjugate_assignment(a, sigma)
