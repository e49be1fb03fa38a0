import pytest

from algebra.cache import BasisCache
from config.config_manager import ConfigManager, set_config
from verification.context import QuiverContext

FAST_QUIVERS = ("d4", "d5", "d6", "e6")


@pytest.fixture(autouse=True)
def fresh_config():
    """CLI calls write their flags into the global config; start every test from the defaults."""
    set_config(ConfigManager())
    yield


@pytest.fixture(scope="session")
def basis_cache(tmp_path_factory):
    return BasisCache(str(tmp_path_factory.mktemp("basis-cache")), enabled=True)


@pytest.fixture(scope="session")
def contexts(basis_cache):
    """Selector -> QuiverContext, built once per session."""
    built = {}

    def get(selector: str) -> QuiverContext:
        if selector not in built:
            built[selector] = QuiverContext(selector, cache=basis_cache)
        return built[selector]

    return get


@pytest.fixture(scope="session")
def d4(contexts):
    return contexts("d4")


@pytest.fixture(scope="session")
def d5(contexts):
    return contexts("d5")


@pytest.fixture(scope="session")
def d6(contexts):
    return contexts("d6")


@pytest.fixture(scope="session")
def e6(contexts):
    return contexts("e6")


@pytest.fixture(scope="session")
def e7(contexts):
    return contexts("e7")


@pytest.fixture(scope="session")
def e8(contexts):
    return contexts("e8")


@pytest.fixture(scope="session", params=FAST_QUIVERS)
def context(request, contexts):
    return contexts(request.param)
