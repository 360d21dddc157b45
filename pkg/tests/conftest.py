from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ptasm.matrix import IntMatrix, Permutation

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def signed01_matrices(draw, min_n: int = 1, max_n: int = 6) -> IntMatrix:
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.lists(st.sampled_from((-1, 0, 1)), min_size=n, max_size=n), min_size=n, max_size=n))
    return IntMatrix(rows)


@st.composite
def int_matrices(draw, max_n: int = 5, bound: int = 4) -> IntMatrix:
    n = draw(st.integers(1, max_n))
    entry = st.integers(-bound, bound)
    return IntMatrix(draw(st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))


@st.composite
def permutations(draw, n: int) -> Permutation:
    return Permutation(tuple(draw(st.permutations(range(n)))))


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN
