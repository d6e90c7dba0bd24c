"""Coset tables, Schreier transversals and generators of the stabilizer of color 1."""

import dataclasses
import functools

from tetra_subgroups import enumerator, perms, presentations, words


@dataclasses.dataclass(frozen=True)
class CosetTable:
    """``rows[i - 1][g]`` is the image of coset i under generator g.

    ``transversal[i - 1]`` is the representative word m_i; ``evaluate_word(m_i)`` sends
    point 1 to i and m_1 is the empty word.
    """

    presentation: presentations.Presentation
    rows: tuple[tuple[int, ...], ...]
    transversal: tuple[words.Word, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def image(self, coset: int, generator: int) -> int:
        return self.rows[coset - 1][generator]


@dataclasses.dataclass(frozen=True)
class StabilizerGens:
    presentation: presentations.Presentation
    # one formal word per (coset, generator), freely reduced in the free group only
    raw: tuple[words.Word, ...]
    reduced: tuple[words.Word, ...]
    simplified: tuple[words.Word, ...]

    def format(self, simplified: bool = True) -> list[str]:
        chosen = self.simplified if simplified else self.reduced
        return [self.presentation.format_word(w) for w in chosen]


def build_coset_table(rep: enumerator.TransitiveRep) -> CosetTable:
    a = rep.assignment
    n = a.degree
    rows = tuple(tuple(perm(coset) for perm in a.perms) for coset in range(1, n + 1))

    representatives: dict[int, words.Word] = {1: words.EMPTY}
    layer = [1]
    while layer:
        candidates: dict[int, words.Word] = {}
        for coset in layer:
            for gen, perm in enumerate(a.perms):
                target = perm(coset)
                if target in representatives:
                    continue
                w = ((gen, 1),) + representatives[coset]
                if target not in candidates or w < candidates[target]:
                    candidates[target] = w
        representatives.update(candidates)
        layer = sorted(candidates)

    return CosetTable(
        presentation=rep.presentation,
        rows=rows,
        transversal=tuple(representatives[coset] for coset in range(1, n + 1)),
    )


def _dedup(candidates: list[words.Word], pres: presentations.Presentation) -> tuple[words.Word, ...]:
    kept: list[words.Word] = []
    seen: set[words.Word] = set()
    for w in candidates:
        if not w or w in seen or pres.invert(w) in seen:
            continue
        kept.append(w)
        seen.add(w)
    return tuple(kept)


def schreier_generators(table: CosetTable) -> StabilizerGens:
    pres = table.presentation
    raw: list[words.Word] = []
    for coset in range(1, table.n + 1):
        m_i = table.transversal[coset - 1]
        for gen in range(pres.n_generators):
            m_target = table.transversal[table.image(coset, gen) - 1]
            raw.append(words.concat(words.inverse(m_i), ((gen, -1),), m_target))

    kept = _dedup([pres.reduce(w) for w in raw], pres)
    simplified = _dedup([simplify_word(w, pres) for w in kept], pres)
    return StabilizerGens(presentation=pres, raw=tuple(raw), reduced=kept, simplified=simplified)


def stabilizer_words(cls: enumerator.SubgroupClass) -> StabilizerGens:
    return schreier_generators(build_coset_table(cls.rep))


@functools.cache
def _relator_patterns(pres: presentations.Presentation) -> tuple[words.Word, ...]:
    patterns: set[words.Word] = set()
    for relator in pres.relators:
        for w in (pres.reduce(relator), pres.invert(relator)):
            if w:
                patterns.update(words.cyclic_rotations(w))
    # longest first so a full relator is removed before a shorter one inside it
    return tuple(sorted(patterns, key=lambda w: (-len(w), w)))


@functools.cache
def _commuting_involution_rules(pres: presentations.Presentation) -> tuple[tuple[words.Word, words.Word], ...]:
    rules = []
    for base, exponent in pres.powers:
        if exponent != 2 or len(base) != 2:
            continue
        (x, _), (y, _) = base
        if x == y or x not in pres.involutions or y not in pres.involutions:
            continue
        # (xy)^2 = x^2 = y^2 = e gives xyx = y and yxy = x
        rules.append((((x, 1), (y, 1), (x, 1)), ((y, 1),)))
        rules.append((((y, 1), (x, 1), (y, 1)), ((x, 1),)))
    return tuple(rules)


def _rewrite_once(w: words.Word, pres: presentations.Presentation) -> words.Word | None:
    for pattern in _relator_patterns(pres):
        i = words.find_subword(w, pattern)
        if i >= 0:
            return w[:i] + w[i + len(pattern) :]
    for lhs, rhs in _commuting_involution_rules(pres):
        i = words.find_subword(w, lhs)
        if i >= 0:
            return w[:i] + rhs + w[i + len(lhs) :]
    return None


def simplify_word(w: words.Word, pres: presentations.Presentation) -> words.Word:
    """Rewrites with length-reducing identities that hold in the group until none applies."""
    current = pres.reduce(w)
    while (rewritten := _rewrite_once(current, pres)) is not None:
        current = pres.reduce(rewritten)
    return current


def same_subgroup(rep1: enumerator.TransitiveRep, rep2: enumerator.TransitiveRep) -> bool:
    if rep1.degree != rep2.degree:
        raise ValueError(f"degree mismatch: {rep1.degree} vs {rep2.degree}")
    if rep1.presentation != rep2.presentation:
        raise ValueError("representations belong to different presentations")
    return enumerator.point_stabilizer_form(rep1.assignment) == enumerator.point_stabilizer_form(
        rep2.assignment
    )


def stabilizer_fixes_point(gens: StabilizerGens, a: perms.Assignment) -> bool:
    return all(perms.evaluate_word(w, a)(1) == 1 for w in gens.raw + gens.reduced + gens.simplified)
