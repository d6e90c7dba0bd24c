"""Color i is the coset of transversal word m_i; the action on colors is the class's assignment."""

import dataclasses
import math

import pandas as pd

from tetra_subgroups import enumerator, perms, presentations, stabilizer, words


@dataclasses.dataclass(frozen=True)
class Coloring:
    presentation: presentations.Presentation
    coset_words: tuple[words.Word, ...]
    action: perms.Assignment

    @property
    def n(self) -> int:
        return len(self.coset_words)

    @property
    def is_transitive(self) -> bool:
        return perms.is_transitive(self.action)

    def to_json(self) -> dict:
        return {
            "index": self.n,
            "coset_words": [self.presentation.format_word(w) for w in self.coset_words],
            "action": self.action.to_cycles(),
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per generator and color, with the color it is sent to."""
        records = [
            {"generator": name, "color": color, "image_color": perm(color)}
            for name, perm in self.action.as_dict().items()
            for color in range(1, self.n + 1)
        ]
        return pd.DataFrame.from_records(records, columns=["generator", "color", "image_color"])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False)


def coloring_of(cls: enumerator.SubgroupClass) -> Coloring:
    table = stabilizer.build_coset_table(cls.rep)
    return Coloring(
        presentation=cls.rep.presentation,
        coset_words=table.transversal,
        action=cls.rep.assignment,
    )


def colorings_fixing_c1_count(cls: enumerator.SubgroupClass) -> int:
    return math.factorial(cls.index - 1)


def action_from_frame(df: pd.DataFrame, generators: tuple[str, ...]) -> perms.Assignment:
    """Reads the action back from the CSV layout of ``Coloring.to_frame``."""
    images = {}
    for name, group in df.groupby("generator", sort=False):
        ordered = group.sort_values("color")
        images[str(name)] = perms.Perm(tuple(int(image) for image in ordered["image_color"]))
    return perms.assignment(images, generators)
