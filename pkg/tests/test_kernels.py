"""The compiled and pure-Python kernels must agree on every input."""

import importlib
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symtor._kernels import _py

try:
    _ext = importlib.import_module("symtor._kernels._ext")
except ImportError:  # extension not built
    _ext = None

needs_ext = pytest.mark.skipif(_ext is None, reason="compiled extension not built")

matrices = st.integers(0, 7).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), max_size=7)
)


def _rank_fraction(rows):
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


@given(matrices)
def test_integer_rank_against_fractions(rows):
    assert _py.rank_integer(rows) == _rank_fraction(rows)


def test_integer_rank_large_entries():
    rows = [[10**15, 3], [10**15 + 1, 3], [7, 10**18]]
    assert _py.rank_integer(rows) == 2
    assert _py.rank_integer([[2**70, 2**71], [1, 2]]) == 1


def test_mod_p_rank():
    assert _py.rank_mod_p([[2, 4], [4, 6]], 2) == 0
    assert _py.rank_mod_p([[2, 4], [1, 2]], 2) == 1
    assert _py.rank_mod_p([[2, 4], [1, 3]], 3) == 2
    assert _py.rank_mod_p([], 5) == 0


@needs_ext
@given(matrices, st.sampled_from([2, 3, 5, 7, 1_000_003, 3037000493]))
def test_rank_backends_agree(rows, p):
    assert _ext.rank_integer(rows) == _py.rank_integer(rows)
    assert _ext.rank_mod_p(rows, p) == _py.rank_mod_p(rows, p)


@needs_ext
def test_rank_backends_agree_on_overflowing_input():
    rows = [[random.Random(i * 31 + j).randint(-10**17, 10**17) for j in range(6)] for i in range(6)]
    rows.append([x + y for x, y in zip(rows[0], rows[1])])
    assert _ext.rank_integer(rows) == _py.rank_integer(rows) == 6
    huge = (1 << 61) - 1
    assert _ext.rank_mod_p(rows, huge) == _py.rank_mod_p(rows, huge)


def _random_complex(rng, s):
    faces = {0}
    for _ in range(rng.randint(0, 6)):
        top = rng.randrange(1 << s)
        sub = top
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & top
    if rng.random() < 0.1:
        return []
    return sorted(faces)


@needs_ext
def test_homology_backends_agree():
    rng = random.Random(11)
    for _ in range(400):
        masks = _random_complex(rng, rng.randint(0, 7))
        for char in (0, 2, 3):
            assert _ext.reduced_homology(masks, char) == _py.reduced_homology(masks, char)


@needs_ext
@settings(max_examples=200)
@given(
    st.integers(1, 5).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 4), min_size=n, max_size=n),
            st.lists(st.lists(st.integers(0, 4), min_size=n, max_size=n), max_size=4),
        )
    )
)
def test_lower_complex_backends_agree(data):
    a, gens = data
    assert sorted(_ext.lower_complex_masks(a, gens)) == sorted(_py.lower_complex_masks(a, gens))


def test_pure_python_selected_by_environment():
    import subprocess
    import sys

    code = "import symtor; print(symtor.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"SYMTOR_PURE_PYTHON": "1", "PATH": ""},
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
