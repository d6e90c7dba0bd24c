"""Counts of index 2, 3, 4 subgroups for the hyperbolic tetrahedra, compared with the
published table and, where they differ, with the brute-force oracle."""

import concurrent.futures
import dataclasses
import logging

import pandas as pd

from tetra_subgroups import enumerator, oracle, presentations

logger = logging.getLogger(__name__)

EXPECTATION_FILE = presentations.DATA_FOLDER / "table7.csv"

# column -> (group, index)
COLUMNS: dict[str, tuple[presentations.Group, int]] = {
    "h2": (presentations.Group.full, 2),
    "h3": (presentations.Group.full, 3),
    "h4": (presentations.Group.full, 4),
    "k2": (presentations.Group.kleinian, 2),
    "k3": (presentations.Group.kleinian, 3),
    "k4": (presentations.Group.kleinian, 4),
}


def load_expectation() -> pd.DataFrame:
    df = pd.read_csv(EXPECTATION_FILE, comment="#", skipinitialspace=True, index_col="id")
    missing = [column for column in COLUMNS if column not in df.columns]
    if missing:
        raise ValueError(f"{EXPECTATION_FILE.name} lacks columns {missing}")
    if (df[list(COLUMNS)] < 0).to_numpy().any():
        raise ValueError(f"{EXPECTATION_FILE.name} holds negative counts")
    return df[list(COLUMNS)].astype(int)


def compute_row(entry: presentations.CatalogEntry, jobs: int = 1) -> dict[str, int]:
    row = {}
    for column, (group, n) in COLUMNS.items():
        pres = presentations.presentation_for(entry.symbol, group)
        row[column] = len(enumerator.enumerate_classes(pres, n, jobs=jobs))
    return row


def compute_table(entries: list[presentations.CatalogEntry], jobs: int = 1) -> pd.DataFrame:
    """One row per entry, in the order given; rows are spread over ``jobs`` processes."""
    if jobs > 1 and len(entries) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(compute_row, entries))
    else:
        rows = [compute_row(entry) for entry in entries]
    df = pd.DataFrame.from_records(rows, columns=list(COLUMNS))
    df.index = pd.Index([entry.id for entry in entries], name="id")
    return df


@dataclasses.dataclass(frozen=True)
class Cell:
    id: str
    column: str
    computed: int
    expected: int | None
    # brute-force class count, only filled in for cells that disagree with the table
    oracle: int | None = None

    @property
    def matches_table(self) -> bool:
        return self.expected == self.computed

    @property
    def oracle_agrees(self) -> bool:
        return self.oracle is None or self.oracle == self.computed

    @property
    def verdict(self) -> str:
        return "PASS" if self.matches_table else "MISMATCH"


@dataclasses.dataclass(frozen=True)
class Report:
    cells: tuple[Cell, ...]

    @property
    def table_mismatches(self) -> list[Cell]:
        return [cell for cell in self.cells if not cell.matches_table]

    @property
    def oracle_disagreements(self) -> list[Cell]:
        return [cell for cell in self.cells if not cell.oracle_agrees]

    @property
    def ok(self) -> bool:
        return not self.oracle_disagreements

    def summary(self) -> str:
        return (
            f"cells: {len(self.cells)} paper-mismatches: {len(self.table_mismatches)} "
            f"oracle-disagreements: {len(self.oracle_disagreements)}"
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame.from_records(
            [
                {
                    "id": cell.id,
                    "column": cell.column,
                    "computed": cell.computed,
                    "expected": cell.expected,
                    "verdict": cell.verdict,
                    "oracle": cell.oracle,
                }
                for cell in self.cells
            ],
            columns=["id", "column", "computed", "expected", "verdict", "oracle"],
        )


def _oracle_count(entry_id: str, column: str) -> int:
    group, n = COLUMNS[column]
    pres = presentations.presentation_for(presentations.lookup(entry_id).symbol, group)
    return oracle.brute_force_classes(pres, n).classes


def diff_table(computed: pd.DataFrame, expected: pd.DataFrame) -> Report:
    cells = []
    for entry_id, row in computed.iterrows():
        for column in COLUMNS:
            value = int(row[column])
            known = int(expected.at[entry_id, column]) if entry_id in expected.index else None
            cell = Cell(id=str(entry_id), column=column, computed=value, expected=known)
            if not cell.matches_table:
                cell = dataclasses.replace(cell, oracle=_oracle_count(cell.id, column))
                logger.warning(
                    "%s %s: computed %d, table %s, oracle %d", cell.id, column, value, known, cell.oracle
                )
                if not cell.oracle_agrees:
                    logger.error("%s %s: enumerator and oracle disagree", cell.id, column)
            cells.append(cell)
    return Report(cells=tuple(cells))
