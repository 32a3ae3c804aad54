"""Shared fixtures and cached builders for the test suite."""

import random
from functools import lru_cache

import pytest

from operadkit import b_construction as bc
from operadkit import classic_models as cm
from operadkit import wb_construction as wb


@lru_cache(maxsize=None)
def built(model, n):
    """Cached face complex of one classic model."""
    return cm.build_complex(model, n)


@lru_cache(maxsize=None)
def built_wb_bar(n):
    return wb.assemble_wb_bar(n)


@lru_cache(maxsize=None)
def built_wb(n):
    return wb.quotient_wb(n)


@lru_cache(maxsize=None)
def built_b_bar(n):
    return bc.assemble_b_bar(n)


@lru_cache(maxsize=None)
def built_b(n):
    return bc.quotient_b(n)


@pytest.fixture
def rng():
    return random.Random(cm.DEFAULT_SEED)


@pytest.fixture(scope="session")
def corrupted_report():
    """Axiom report for the deliberately wrong right action."""
    return cm.check_axioms(
        "square", right_override=cm.corrupted_square_right_action)
