"""Hot loops, compiled when the Cython extension is built.

``BACKEND`` is ``"cython"`` or ``"python"``.  Setting ``CUPCUBE_PURE=1``
forces the numpy fallback, which the benchmark uses for comparison.
"""
import os

from . import _kernels_py

if os.environ.get("CUPCUBE_PURE") == "1":
    _impl, BACKEND = _kernels_py, "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl, BACKEND = _kernels_py, "python"

matmul_mod = _impl.matmul_mod
enumerate_colorings = _impl.enumerate_colorings


def brute_force_colorings(D, f, M, backend=None):
    """All colorings of ``D`` over ``f`` by exhaustive search, as flat tuples.

    Independent of the linear system: each candidate is tested against the
    quandle relation at every crossing.
    """
    impl = {"cython": _impl, "python": _kernels_py}.get(backend, _impl)
    G = M.group
    roles, acts = [], []
    for r in D.roles:
        h = f[r.arc_over]
        if r.sign > 0:
            roles.append((r.arc_in, r.arc_over, r.arc_out))
            acts.append(M.action[h])
        else:
            # C(out) |> C(over) = C(in)
            roles.append((r.arc_out, r.arc_over, r.arc_in))
            acts.append(M.action[h])
    rows = impl.enumerate_colorings(M.n, M.d, D.n_arcs, roles, acts)
    return [tuple(int(v) for v in row) for row in rows]
