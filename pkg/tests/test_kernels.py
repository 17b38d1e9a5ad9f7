import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cupcube import _kernels_py, kernels
from cupcube.algebra.linalg import matmul
from cupcube.branched import branched_setup, knot_diagram
from cupcube.coloring import Representation

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


@given(st.integers(2, 50), st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.data())
def test_matmul_fallback(n, r, k, c, data):
    ints = st.integers(-100, 100)
    A = data.draw(st.lists(st.lists(ints, min_size=k, max_size=k), min_size=r, max_size=r))
    B = data.draw(st.lists(st.lists(ints, min_size=c, max_size=c), min_size=k, max_size=k))
    want = [[v % n for v in row] for row in matmul(A, B)]
    assert _kernels_py.matmul_mod(A, B, n).tolist() == want
    assert kernels.matmul_mod(np.array(A) % n, np.array(B) % n, n).tolist() == want


@compiled
@pytest.mark.parametrize("name, n", [("3_1", 2), ("4_1", 3), ("5_2", 2), ("6_2", 3)])
def test_backends_agree(name, n):
    D = knot_diagram(name)
    st_ = branched_setup(n)
    f = Representation.constant(D, st_.group, "t")
    a = kernels.brute_force_colorings(D, f, st_.module, backend="cython")
    b = kernels.brute_force_colorings(D, f, st_.module, backend="python")
    assert a == b and len(a) >= n * n


def test_pure_switch():
    code = "import cupcube.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"CUPCUBE_PURE": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
