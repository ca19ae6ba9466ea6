import pytest

from dpdelta import builtin_models


@pytest.fixture(scope="session")
def catalog():
    return builtin_models()


@pytest.fixture(scope="session")
def by_name(catalog):
    return {m.name: m for m in catalog}


def catalog_flags(models):
    """Every (model, flag) pair the delta computation exercises."""
    pairs = []
    for m in models:
        seen = []
        for pt in m.points:
            if pt.flag not in seen:
                seen.append(pt.flag)
        exc = m.exceptional()
        if exc is not None and exc.name not in seen:
            seen.append(exc.name)
        pairs.extend((m, flag) for flag in seen)
    return pairs
