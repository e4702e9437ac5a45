import pytest

from families import ChainFamily, DiagonalFamily, GoldFamily, RectangleFamily
from utils import logger


@pytest.fixture(autouse=True)
def lab_logging(tmp_path):
    """应用日志写到临时目录，控制台不输出"""
    logger.reset_logging()
    logger.setup_logging(log_level=logger.LOG_LEVEL_DEBUG, log_dir=str(tmp_path / "logs"), console_output=False)
    yield
    logger.reset_logging()


@pytest.fixture
def chain() -> ChainFamily:
    return ChainFamily()


@pytest.fixture
def rect() -> RectangleFamily:
    return RectangleFamily()


@pytest.fixture
def diag() -> DiagonalFamily:
    return DiagonalFamily()


@pytest.fixture
def gold() -> GoldFamily:
    return GoldFamily()
