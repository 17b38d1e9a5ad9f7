"""Closed-form values of T for the trefoil, the figure-eight knot and the
(m, m)-torus link, written directly in terms of arc colours.

Each oracle checks its own coloring constraints first and raises
:class:`OracleError` when they fail, so a disagreement with the generic
crossing sum can never come from feeding it a non-coloring.
"""
from __future__ import annotations


class OracleError(ValueError):
    pass


def _ring(M, x, terms):
    return M.act_ring(x, terms)


def trefoil_constraints(M, a, b, g, h):
    """Violations of the trefoil coloring equations for arcs (a, g), (b, h)."""
    G = M.group
    errs = []
    if G.mul(g, h, g) != G.mul(h, g, h):
        errs.append("ghg != hgh")
    u = M.sub(a, b)
    if any(_ring(M, u, [(1, 0), (-1, g), (1, G.mul(h, g))])):
        errs.append("(a-b)(1-g+hg) != 0")
    if any(_ring(M, u, [(1, 0), (-1, h), (1, G.mul(g, h))])):
        errs.append("(a-b)(1-h+gh) != 0")
    return errs


def oracle_trefoil(cols, g, h, psi):
    """``psi((a1-b1) g^-1, (a2-b2) h, a3-b3)``.

    ``cols`` holds three pairs ``(a_i, b_i)``: the M-parts on the arcs
    coloured by ``g`` and ``h`` in each of the three colorings.
    """
    mods = psi.modules
    for M, (a, b) in zip(mods, cols):
        errs = trefoil_constraints(M, a, b, g, h)
        if errs:
            raise OracleError("; ".join(errs))
    G = mods[0].group
    (a1, b1), (a2, b2), (a3, b3) = cols
    M1, M2, M3 = mods
    return psi(M1.act(M1.sub(a1, b1), G.inverse(g)),
               M2.act(M2.sub(a2, b2), h),
               M3.sub(a3, b3))


def fig8_constraints(M, x1, x2, z1, z2):
    G = M.group
    errs = []
    lhs = G.mul(G.inverse(z2), z1, z2)
    rhs = G.mul(G.inverse(z1), G.inverse(z2), z1, z2, G.inverse(z1), z2, z1)
    if lhs != rhs:
        errs.append("group relation fails")
    u = M.sub(x1, x2)
    z1z2, z2z1 = G.mul(z1, z2), G.mul(z2, z1)
    v0 = _ring(M, u, [(1, z1), (1, z2), (-1, 0)])
    v1 = _ring(M, u, [(1, z1z2), (-1, G.mul(G.inverse(z2), z1z2))])
    v2 = _ring(M, u, [(1, z2z1), (-1, G.mul(G.inverse(z1), z2z1))])
    if not (v0 == v1 == v2):
        errs.append("(x1-x2)(z1+z2-1) = (x1-x2)(1-z2^-1)z1z2 = (x1-x2)(1-z1^-1)z2z1 fails")
    return errs


def oracle_fig8(cols, z1, z2, psi):
    """The two-term figure-eight formula; ``cols`` are three pairs ``(x1, x2)``."""
    mods = psi.modules
    for M, (x1, x2) in zip(mods, cols):
        errs = fig8_constraints(M, x1, x2, z1, z2)
        if errs:
            raise OracleError("; ".join(errs))
    G = mods[0].group
    M1, M2, M3 = mods
    (x1, x2), (y1, y2), (w1, w2) = cols
    z1i, z2i = G.inverse(z1), G.inverse(z2)
    u, v, w = M1.sub(x1, x2), M2.sub(y1, y2), M3.sub(w1, w2)
    first = psi(M1.act(u, G.mul(z1, z2i)),
                M2.neg(v),
                _ring(M3, w, [(1, 0), (-1, z2i)]))
    second = psi(M1.act(u, G.mul(z2i, z1)),
                 _ring(M2, v, [(1, 0), (-1, z1)]),
                 _ring(M3, w, [(1, z1), (-1, G.mul(z2i, z1))]))
    n = psi.codomain.n
    return tuple((p + q) % n for p, q in zip(first, second))


def _zhat(G, z, s, t):
    """``z_s z_(s+1) ... z_t`` with cyclic indices; empty product when t < s."""
    m = len(z)
    out = 0
    for i in range(s, t + 1):
        out = G.mul(out, z[(i - 1) % m])
    return out


def torus_kernel_violations(M, x, z):
    """Components whose iterated relation ``(..(C_l |> C_l+1) ..) |> C_l+m-1 = C_l``
    fails; ``x`` and ``z`` list the arc colours ``alpha_1 .. alpha_m``."""
    m = len(x)
    bad = []
    for l in range(m):
        cur = list(x[l])
        for k in range(1, m):
            j = (l + k) % m
            cur = M.add(M.act(M.sub(cur, x[j]), z[j]), x[j])
        if cur != list(x[l]):
            bad.append(l + 1)
    return bad


def oracle_torus_mm(w, x, y, z, psi):
    """The double sum over ``l = 1..m`` and ``k = 1..m-1`` for ``T(m, m)``."""
    M1, M2, M3 = psi.modules
    G = M1.group
    m = len(z)
    for M, cols in ((M1, w), (M2, x), (M3, y)):
        bad = torus_kernel_violations(M, cols, z)
        if bad:
            raise OracleError(f"not in the kernel of Gamma_f at components {bad}")

    def at(seq, i):
        return seq[(i - 1) % m]

    n = psi.codomain.n
    acc = [0] * psi.codomain.degree
    for l in range(1, m + 1):
        for k in range(1, m):
            first = M1.act(_ring(M1, at(w, l), [(1, 0), (-1, at(z, l))]),
                           _zhat(G, z, l + 1, l + k - 1))
            mid = M2.zero
            for j in range(1, k + 1):
                diff = M2.sub(at(x, j + l - 1), at(x, j + l))
                mid = M2.add(mid, M2.act(diff, _zhat(G, z, j + l, k + l - 1)))
            zl = at(z, k + l)
            last = _ring(M3, at(y, k + l), [(1, 0), (-1, G.inverse(zl))])
            for i, v in enumerate(psi(first, mid, last)):
                acc[i] += v
    return tuple(v % n for v in acc)
