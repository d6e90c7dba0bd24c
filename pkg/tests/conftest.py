import pytest

from tetra_subgroups import perms, presentations


@pytest.fixture
def t10_full() -> presentations.Presentation:
    return presentations.full_presentation(presentations.lookup("t10").symbol)


@pytest.fixture
def t10_kleinian() -> presentations.Presentation:
    return presentations.kleinian_presentation(presentations.lookup("t10").symbol)


@pytest.fixture
def t19_full() -> presentations.Presentation:
    return presentations.full_presentation(presentations.lookup("t19").symbol)


def make_assignment(pres: presentations.Presentation, degree: int, **cycles: str) -> perms.Assignment:
    """Generators not mentioned map to the identity."""
    full = {name: cycles.get(name, "(1)") for name in pres.generator_names}
    return perms.parse_assignment(full, pres.generator_names, degree)
