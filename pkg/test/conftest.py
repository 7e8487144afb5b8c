"""Shared fixtures for the test suite"""

import logging
import random

import pytest
from click.testing import CliRunner

from lorenz_links.config import settings
from lorenz_links.topology.laurent import LaurentPoly
from lorenz_links.utils.logger import ROOT_LOGGER_NAME


@pytest.fixture
def rng():
    """Seeded generator so property tests are reproducible"""
    return random.Random(settings.PROPERTY_SEED)


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def api_client():
    from fastapi.testclient import TestClient

    from lorenz_links.main import app

    with TestClient(app) as client:
        yield client


@pytest.fixture
def t():
    return LaurentPoly.monomial(1, variable="t")


@pytest.fixture
def A():
    return LaurentPoly.monomial(1, variable="A")


@pytest.fixture(autouse=True)
def reset_logging():
    """CLI runs install handlers on the runner's streams; drop them afterwards"""
    yield
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
