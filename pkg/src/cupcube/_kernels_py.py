"""numpy versions of the compiled kernels, used when the extension is absent."""
import numpy as np


def matmul_mod(A, B, n):
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    return (A.dot(B) % n).astype(np.int64)


def enumerate_colorings(n, d, n_arcs, roles, acts, chunk=1 << 16):
    roles = np.asarray(roles, dtype=np.int64).reshape(-1, 3)
    acts = np.asarray(acts, dtype=np.int64).reshape(-1, d, d)
    width = n_arcs * d
    total = n ** width
    powers = n ** np.arange(width - 1, -1, -1, dtype=np.int64)
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        X = (idx[:, None] // powers[None, :]) % n
        ok = np.ones(len(idx), dtype=bool)
        for (s, o, t), R in zip(roles, acts):
            src = X[:, s * d:(s + 1) * d]
            over = X[:, o * d:(o + 1) * d]
            dst = X[:, t * d:(t + 1) * d]
            ok &= np.all(((src - over) @ R + over - dst) % n == 0, axis=1)
        found.append(X[ok])
    if not found:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(found)
