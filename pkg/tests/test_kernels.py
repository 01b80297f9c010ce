import os
import subprocess
import sys

import numpy as np
import pytest

from cliquebell import kernels
from cliquebell._jit import JIT_ENABLED, python_impl
from cliquebell.clique_colourings import build_family


def drain(fill, clique, k, chunk):
    clique = np.asarray(clique, dtype=np.int64)
    n = len(clique)
    labels = np.full(n, -1, dtype=np.int64)
    prefix = np.zeros(n + 1, dtype=np.int64)
    state = np.zeros(3, dtype=np.int64)
    rows = []
    while not state[2]:
        out = np.empty((chunk, n), dtype=np.int8)
        got = fill(clique, k, labels, prefix, state, out)
        rows.extend(map(tuple, out[:got]))
    return rows


@pytest.mark.parametrize("sizes,k", [([3, 3], 4), ([3, 3], 0), ([2, 1, 3], 0), ([1] * 6, 3), ([4], 4)])
@pytest.mark.parametrize("chunk", [1, 3, 1000])
def test_compiled_and_python_agree(sizes, k, chunk):
    clique = build_family(sizes).clique_array()
    reference = drain(python_impl(kernels.rgs_fill), clique, k, 1000)
    assert drain(kernels.rgs_fill, clique, k, chunk) == reference
    assert len(set(reference)) == len(reference)


def test_chunked_generator():
    clique = build_family([2, 2, 2]).clique_array()
    whole = np.vstack(list(kernels.iter_rgs_chunks(clique, 0, chunk=100000)))
    pieces = np.vstack(list(kernels.iter_rgs_chunks(clique, 0, chunk=7)))
    assert np.array_equal(whole, pieces)
    assert len(whole) == 87


def test_series_agree():
    args = (0, 1, 6, 1.0, 1e-12, 6, 10_000)
    assert kernels.series_sum(*args) == python_impl(kernels.series_sum)(*args)


def test_series_cap():
    with pytest.raises(ArithmeticError):
        kernels.dobinski_series(0, 1, 3, 1.0, 1e-12, 3, max_terms=5)


def test_env_flag_selects_python_path():
    code = ("from cliquebell import _jit, kernels, exact_numbers as en;"
            "print(_jit.JIT_ENABLED, kernels.rgs_fill is _jit.python_impl(kernels.rgs_fill),"
            " en.dobinski_bell(6))")
    env = dict(os.environ, CLIQUEBELL_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    flag, is_python, value = out.stdout.split()
    assert flag == "False" and is_python == "True"
    assert abs(float(value) - 203) < 1e-6


def test_jit_active_by_default():
    if os.environ.get("CLIQUEBELL_DISABLE_JIT"):
        pytest.skip("JIT disabled for this run")
    assert JIT_ENABLED
    assert hasattr(kernels.rgs_fill, "py_func")
