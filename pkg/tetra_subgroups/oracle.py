import dataclasses
import enum
import itertools
import logging
from typing import NamedTuple

import numpy as np

from tetra_subgroups import enumerator, perms, presentations, stabilizer, words

logger = logging.getLogger(__name__)

MAX_ORACLE_INDEX = enumerator.ORACLE_MAX_INDEX
COSETS_PER_INDEX_AND_GENERATOR = 10


class OracleCounts(NamedTuple):
    labeled: int
    classes: int
    subgroups: int


def _all_perm_rows(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def _compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    # row-wise f(g(x)), points 0-based
    return np.take_along_axis(f, g, axis=1)


def _evaluate(base: words.Word, images: list[np.ndarray], inverses: list[np.ndarray]) -> np.ndarray:
    result = images[base[0][0]] if base[0][1] == 1 else inverses[base[0][0]]
    for gen, sign in base[1:]:
        result = _compose(result, images[gen] if sign == 1 else inverses[gen])
    return result


def _is_trivial_power(element: np.ndarray, exponent: int) -> np.ndarray:
    identity = np.arange(element.shape[1], dtype=np.intp)
    result = np.broadcast_to(identity, element.shape)
    for _ in range(exponent):
        result = _compose(element, result)
    return (result == identity).all(axis=1)


def _transitive_mask(images: list[np.ndarray], n: int) -> np.ndarray:
    rows = images[0].shape[0] if images else 0
    reached = np.zeros((rows, n), dtype=bool)
    reached[:, 0] = True
    for _ in range(n - 1):
        for image in images:
            moved = np.zeros_like(reached)
            np.put_along_axis(moved, image, reached, axis=1)
            reached |= moved
    return reached.all(axis=1)


def _fixed_by(sigma: np.ndarray, images: list[np.ndarray]) -> int:
    """Assignments left unchanged by relabeling with sigma, i.e. commuting with it."""
    commutes = np.ones(images[0].shape[0], dtype=bool)
    for image in images:
        commutes &= (sigma[image] == image[:, sigma]).all(axis=1)
    return int(commutes.sum())


def _orbit_count(conjugators: np.ndarray, images: list[np.ndarray]) -> int:
    fixed = sum(_fixed_by(sigma, images) for sigma in conjugators)
    count, remainder = divmod(fixed, len(conjugators))
    assert remainder == 0, "Burnside sum not divisible by the group order"
    return count


def brute_force_classes(pres: presentations.Presentation, n: int) -> OracleCounts:
    """Exhaustive count over every assignment, orbits by Burnside's lemma; shares no code with the enumerator."""
    if not 1 <= n <= MAX_ORACLE_INDEX:
        raise ValueError(f"brute force only runs for 1 <= n <= {MAX_ORACLE_INDEX}, got {n}")
    k = pres.n_generators
    rows = _all_perm_rows(n)
    choice = np.indices((len(rows),) * k).reshape(k, -1)
    images = [rows[choice[gen]] for gen in range(k)]
    logger.debug("brute force over %d assignments of degree %d", images[0].shape[0], n)

    for base, exponent in pres.powers:
        inverses = [np.argsort(image, axis=1) for image in images]
        keep = _is_trivial_power(_evaluate(base, images, inverses), exponent)
        images = [image[keep] for image in images]

    keep = _transitive_mask(images, n)
    images = [image[keep] for image in images]
    labeled = images[0].shape[0]
    if labeled == 0:
        return OracleCounts(0, 0, 0)

    return OracleCounts(
        labeled=labeled,
        classes=_orbit_count(rows, images),
        subgroups=_orbit_count(rows[rows[:, 0] == 0], images),
    )


class TCStatus(enum.StrEnum):
    closed = "closed"
    overflow = "overflow"


@dataclasses.dataclass(frozen=True)
class TCResult:
    status: TCStatus
    index: int | None = None
    # right action: rows[c - 1][x] is coset c times generator x, 1-based
    rows: tuple[tuple[int, ...], ...] = ()

    @property
    def closed(self) -> bool:
        return self.status == TCStatus.closed

    def __str__(self) -> str:
        return f"closed({self.index})" if self.closed else "overflow"

    def to_assignment(self, pres: presentations.Presentation) -> perms.Assignment:
        """Left action on cosets: x sends coset c to c times x inverse."""
        if not self.closed:
            raise ValueError("only a closed coset table induces an action")
        columns = _columns(pres)
        result = []
        for gen in range(pres.n_generators):
            inverse_column = columns.inverse[columns.of[(gen, 1)]]
            result.append(perms.Perm(tuple(row[inverse_column] for row in self.rows)))
        return perms.Assignment(pres.generator_names, tuple(result))


class _Columns(NamedTuple):
    of: dict[words.Letter, int]
    inverse: list[int]


def _columns(pres: presentations.Presentation) -> _Columns:
    """One column per involution, two per other generator."""
    of: dict[words.Letter, int] = {}
    inverse: list[int] = []
    for gen in range(pres.n_generators):
        if gen in pres.involutions:
            of[(gen, 1)] = of[(gen, -1)] = len(inverse)
            inverse.append(len(inverse))
        else:
            of[(gen, 1)], of[(gen, -1)] = len(inverse), len(inverse) + 1
            inverse.extend([len(inverse) + 1, len(inverse)])
    return _Columns(of, inverse)


class _Overflow(Exception):
    pass


class _CosetEnumeration:
    """HLT coset enumeration with immediate coincidence processing."""

    def __init__(self, pres: presentations.Presentation, max_cosets: int) -> None:
        self.columns = _columns(pres)
        self.width = len(self.columns.inverse)
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.width]
        self.parent = [0]
        self.live = 1

    def define(self, coset: int, column: int) -> None:
        if self.live >= self.max_cosets:
            raise _Overflow
        new = len(self.table)
        self.table.append([None] * self.width)
        self.parent.append(new)
        self.live += 1
        self.table[coset][column] = new
        self.table[new][self.columns.inverse[column]] = coset

    def rep(self, coset: int) -> int:
        root = coset
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[coset] != root:
            self.parent[coset], coset = root, self.parent[coset]
        return root

    def merge(self, first: int, second: int, queue: list[int]) -> None:
        first, second = self.rep(first), self.rep(second)
        if first == second:
            return
        low, high = min(first, second), max(first, second)
        self.parent[high] = low
        queue.append(high)
        self.live -= 1

    def coincidence(self, first: int, second: int) -> None:
        queue: list[int] = []
        self.merge(first, second, queue)
        while queue:
            dead = queue.pop(0)
            for column in range(self.width):
                target = self.table[dead][column]
                if target is None:
                    continue
                back = self.columns.inverse[column]
                if self.table[target][back] == dead:
                    self.table[target][back] = None
                mu, nu = self.rep(dead), self.rep(target)
                mu_image, nu_preimage = self.table[mu][column], self.table[nu][back]
                if mu_image is not None:
                    self.merge(nu, mu_image, queue)
                elif nu_preimage is not None:
                    self.merge(mu, nu_preimage, queue)
                else:
                    self.table[mu][column] = nu
                    self.table[nu][back] = mu

    def scan_and_fill(self, coset: int, letters: list[int]) -> None:
        inverse = self.columns.inverse
        forward, backward = coset, coset
        i, j = 0, len(letters) - 1
        while True:
            while i <= j and (step := self.table[forward][letters[i]]) is not None:
                forward = step
                i += 1
            if i > j:
                if forward != backward:
                    self.coincidence(forward, backward)
                return
            while j >= i and (step := self.table[backward][inverse[letters[j]]]) is not None:
                backward = step
                j -= 1
            if j < i:
                self.coincidence(forward, backward)
                return
            if i == j:
                self.table[forward][letters[i]] = backward
                self.table[backward][inverse[letters[i]]] = forward
                return
            self.define(forward, letters[i])

    def run(self, relators: list[list[int]], subgroup_gens: list[list[int]]) -> None:
        for gen in subgroup_gens:
            self.scan_and_fill(0, gen)
        alpha = 0
        while alpha < len(self.table):
            for relator in relators:
                if self.parent[alpha] != alpha:
                    break
                self.scan_and_fill(alpha, relator)
            for column in range(self.width):
                if self.parent[alpha] != alpha:
                    break
                if self.table[alpha][column] is None:
                    self.define(alpha, column)
            alpha += 1

    def compressed(self) -> tuple[tuple[int, ...], ...]:
        live = [coset for coset in range(len(self.table)) if self.parent[coset] == coset]
        number = {coset: position for position, coset in enumerate(live, start=1)}
        rows = []
        for coset in live:
            row = []
            for column in range(self.width):
                target = self.table[coset][column]
                assert target is not None, "closed coset table has an undefined entry"
                row.append(number[self.rep(target)])
            rows.append(tuple(row))
        return tuple(rows)


def default_max_cosets(pres: presentations.Presentation, n: int, factor: int = COSETS_PER_INDEX_AND_GENERATOR) -> int:
    return factor * n * pres.n_generators


def todd_coxeter(
    pres: presentations.Presentation, subgroup_gens: list[words.Word], max_cosets: int
) -> TCResult:
    if max_cosets < 1:
        raise ValueError(f"max_cosets must be >= 1, got {max_cosets}")
    enumeration = _CosetEnumeration(pres, max_cosets)
    of = enumeration.columns.of
    relators = sorted(
        ([of[letter] for letter in relator] for relator in pres.relators), key=lambda r: (len(r), r)
    )
    gens = [[of[letter] for letter in gen] for gen in subgroup_gens if gen]
    try:
        enumeration.run(relators, gens)
    except _Overflow:
        logger.warning("coset enumeration for %s overflowed at %d live cosets", pres.describe(), max_cosets)
        return TCResult(TCStatus.overflow)
    rows = enumeration.compressed()
    return TCResult(TCStatus.closed, index=len(rows), rows=rows)


class VerificationStatus(enum.StrEnum):
    verified = "verified"
    wrong_index = "wrong_index"
    inconclusive = "inconclusive"


@dataclasses.dataclass(frozen=True)
class Verification:
    status: VerificationStatus
    expected_index: int
    result: TCResult
    generators: tuple[words.Word, ...]

    @property
    def ok(self) -> bool:
        return self.status == VerificationStatus.verified


def verify_class(rep: enumerator.TransitiveRep, max_cosets: int | None = None) -> Verification:
    pres = rep.presentation
    gens = stabilizer.schreier_generators(stabilizer.build_coset_table(rep)).simplified
    cap = max_cosets if max_cosets is not None else default_max_cosets(pres, rep.degree)
    result = todd_coxeter(pres, list(gens), cap)
    if not result.closed:
        status = VerificationStatus.inconclusive
    elif result.index == rep.degree:
        status = VerificationStatus.verified
    else:
        status = VerificationStatus.wrong_index
        logger.warning("stabilizer of %s closed at index %s, expected %d", rep.assignment, result.index, rep.degree)
    return Verification(status=status, expected_index=rep.degree, result=result, generators=gens)


@dataclasses.dataclass(frozen=True)
class OracleDiff:
    index: int
    enumerated: OracleCounts
    brute_force: OracleCounts

    @property
    def agrees(self) -> bool:
        return self.enumerated == self.brute_force


def enumerated_counts(classes: list[enumerator.SubgroupClass]) -> OracleCounts:
    return OracleCounts(
        labeled=sum(cls.labeled_orbit_size for cls in classes),
        classes=len(classes),
        subgroups=sum(cls.subgroup_count for cls in classes),
    )


def oracle_diff(pres: presentations.Presentation, n: int, jobs: int = 1) -> OracleDiff:
    diff = OracleDiff(
        index=n,
        enumerated=enumerated_counts(enumerator.enumerate_classes(pres, n, jobs=jobs)),
        brute_force=brute_force_classes(pres, n),
    )
    if not diff.agrees:
        logger.warning(
            "%s index %d: enumerator %s, brute force %s", pres.describe(), n, diff.enumerated, diff.brute_force
        )
    return diff
