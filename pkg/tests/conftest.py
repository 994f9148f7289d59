import sys
from collections.abc import Generator

import pytest
from loguru import logger


@pytest.fixture(autouse=True)
def restore_logging() -> Generator[None]:
    """Put back loguru's default stderr handler after commands reconfigure it."""
    yield
    logger.remove()
    logger.add(sys.stderr)
