import pytest

from commvar.rootsystem import build_root_system, direct_sum
from commvar.chevalley import build_lie_algebra

_cache = {}


def _get(label, rank):
    key = (label, rank)
    if key not in _cache:
        _cache[key] = build_lie_algebra(build_root_system(label, rank))
    return _cache[key]


@pytest.fixture(scope="session")
def alg():
    """Memoized algebra factory shared across the whole run."""
    return _get


@pytest.fixture(scope="session")
def sl2sl2():
    if "sl2sl2" not in _cache:
        _cache["sl2sl2"] = build_lie_algebra(
            direct_sum(build_root_system("A", 1), build_root_system("A", 1)))
    return _cache["sl2sl2"]
