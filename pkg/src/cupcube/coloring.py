"""X-colorings of a diagram over a representation, for ``X = M x G``.

The quandle operation is ``(a, g) |> (b, h) = ((a - b) h + b, h^-1 g h)``.
At a positive crossing the incoming under-arc ``alpha``, the over-arc
``beta`` and the outgoing under-arc ``gamma`` satisfy
``C(alpha) |> C(beta) = C(gamma)``; at a negative crossing the roles of
``alpha`` and ``gamma`` swap.  Equivalently, crossing the over-arc from
its right to its left applies ``|> C(beta)`` to the under-arc colour, and
the same rule (right to left) governs region labels of shadow colorings.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .algebra.linalg import ModuleBasis, identity, kernel_mod


class ColoringError(ValueError):
    pass


def quandle_op(M, x, y):
    (a, g), (b, h) = x, y
    G = M.group
    return M.add(M.act(M.sub(a, b), h), b), G.conj(g, h)


def quandle_op_inv(M, z, y):
    """The unique ``x`` with ``x |> y = z``."""
    (c, k), (b, h) = z, y
    G = M.group
    hinv = G.inverse(h)
    return M.add(M.act(M.sub(c, b), hinv), b), G.conj(k, hinv)


# -- representations -----------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    """A homomorphism from the link group, given on the arcs of ``diagram``."""

    diagram: object
    group: object
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.diagram.n_arcs:
            raise ColoringError(
                f"representation needs {self.diagram.n_arcs} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(self.values))

    def __getitem__(self, arc):
        return self.values[arc]

    @classmethod
    def constant(cls, D, G, g):
        return cls(D, G, (G.element(g),) * D.n_arcs)

    @classmethod
    def from_names(cls, D, G, names):
        return cls(D, G, tuple(G.element(v) for v in names))


def check_representation(f):
    """``None`` when every Wirtinger relation holds, else the first
    violated crossing as a dict."""
    G = f.group
    for r in f.diagram.roles:
        expect = G.conj(f[r.arc_in], G.power(f[r.arc_over], r.sign))
        if f[r.arc_out] != expect:
            return dict(crossing=r.index, alpha=r.arc_in, beta=r.arc_over,
                        gamma=r.arc_out, expected=G.name(expect), got=G.name(f[r.arc_out]))
    return None


def _require_rep(f):
    bad = check_representation(f)
    if bad:
        raise ColoringError(f"not a representation: {bad}")


# -- the linear system ----------------------------------------------------------

def crossing_matrix(M, f, r):
    """``rho(h^eps)`` for the over-arc ``h`` at crossing roles ``r``."""
    G = M.group
    return M.action[G.power(f[r.arc_over], r.sign)]


def coloring_system(D, f, M):
    """Matrix ``A`` over Z/n with ``x A = 0`` iff ``x`` colours the arcs.

    ``x`` concatenates the M-parts of the arcs (``d`` entries each).  The
    column block of crossing ``tau`` is
    ``m_alpha rho(h^eps) + m_beta (1 - rho(h^eps)) - m_gamma``.
    """
    _require_rep(f)
    d, n = M.d, M.n
    rows = d * D.n_arcs
    A = [[0] * (d * D.n_crossings) for _ in range(rows)]
    I = identity(d)
    for t, r in enumerate(D.roles):
        R = crossing_matrix(M, f, r)
        blocks = ((r.arc_in, R, 1),
                  (r.arc_over, [[I[i][j] - R[i][j] for j in range(d)] for i in range(d)], 1),
                  (r.arc_out, I, -1))
        for arc, B, sgn in blocks:
            for i in range(d):
                for j in range(d):
                    A[arc * d + i][t * d + j] = (A[arc * d + i][t * d + j] + sgn * B[i][j]) % n
    return A


@dataclass
class Coloring:
    """M-parts per arc; the group parts are those of ``rep``."""

    module: object
    rep: Representation
    parts: tuple

    @property
    def flat(self):
        return [v for p in self.parts for v in p]

    @classmethod
    def from_flat(cls, M, f, x):
        d = M.d
        return cls(M, f, tuple(tuple(x[i * d:(i + 1) * d]) for i in range(len(x) // d)))

    def __getitem__(self, arc):
        return list(self.parts[arc]), self.rep[arc]

    def is_valid(self):
        D, M = self.rep.diagram, self.module
        for r in D.roles:
            x, y, z = self[r.arc_in], self[r.arc_over], self[r.arc_out]
            if r.sign > 0:
                if quandle_op(M, x, y) != z:
                    return False
            elif quandle_op(M, z, y) != x:
                return False
        return True


@dataclass
class ColoringSpace:
    """``Col_X(D_f)`` with its splitting ``Col = Col^red + M_diag``.

    ``reduced`` consists of the colorings vanishing on arc 0, a complement
    of the diagonal colorings; :meth:`reduce` is the projection along the
    diagonal.
    """

    diagram: object
    rep: Representation
    module: object
    system: list
    full: ModuleBasis
    reduced: ModuleBasis
    diagonal: list = field(default_factory=list)

    def reduce(self, x):
        d = self.module.d
        a = x[:d]
        n = self.module.n
        return [(v - a[i % d]) % n for i, v in enumerate(x)]

    def diag(self, a):
        return list(a) * self.diagram.n_arcs

    def coloring(self, x):
        return Coloring.from_flat(self.module, self.rep, x)

    def reduced_colorings(self):
        return [self.coloring(g) for g in self.reduced.gens]


def colorings(D, f, M):
    A = coloring_system(D, f, M)
    d, n = M.d, M.n
    rows = d * D.n_arcs
    full = kernel_mod(A, n, rows=rows)
    # colorings vanishing on arc 0: extra columns reading off arc 0
    pin = [row + [int(i == j) for j in range(d)] for i, row in enumerate(A)]
    red = kernel_mod(pin, n, rows=rows)
    diagonal = [[int(i % d == k) for i in range(rows)] for k in range(d)]
    return ColoringSpace(D, f, M, A, full, red, diagonal)


# -- shadow colorings -------------------------------------------------------------

@dataclass
class ShadowColoring:
    coloring: Coloring
    regions: list
    unbounded: int

    @property
    def diagram(self):
        return self.coloring.rep.diagram


def shadow_extend(C, unbounded=None):
    """Label the faces: the base face gets 0 and crossing an arc coloured
    ``(b, h)`` from its right side to its left maps ``r -> (r - b) h + b``."""
    D, M = C.rep.diagram, C.module
    base = D.default_unbounded if unbounded is None else unbounded
    nf = len(D.faces)
    labels = [None] * nf
    labels[base] = M.zero
    adj = [[] for _ in range(nf)]
    for e, right, left in D.face_adjacency():
        b, h = C[D.edge_arc[e]]
        adj[right].append((left, b, h, 1))
        adj[left].append((right, b, h, -1))
    G = M.group
    stack = [base]
    while stack:
        f = stack.pop()
        for g, b, h, way in adj[f]:
            hh = h if way > 0 else G.inverse(h)
            lab = M.add(M.act(M.sub(labels[f], b), hh), b)
            if labels[g] is None:
                labels[g] = lab
                stack.append(g)
            elif labels[g] != lab:
                raise ColoringError("shadow labels are inconsistent; not a coloring")
    if any(v is None for v in labels):
        raise ColoringError("face graph is disconnected")
    return ShadowColoring(C, labels, base)


# -- transport along Reidemeister moves ----------------------------------------

def transport(C, move):
    """Carry a coloring of ``D`` to the diagram produced by ``move``.

    Arcs containing an edge listed in ``move.edge_map`` inherit the old
    colour; the rest follow from the crossing relations.  Returns the new
    :class:`Coloring`, whose representation is transported alongside.
    """
    D, M = C.rep.diagram, C.module
    D2 = move.diagram
    known = [None] * D2.n_arcs
    for new, old in move.edge_map.items():
        if new not in D2.edge_arc:
            continue
        col = C[D.edge_arc[old]]
        arc = D2.edge_arc[new]
        col = (list(col[0]), col[1])
        if known[arc] is None:
            known[arc] = col
        elif known[arc] != col:
            raise ColoringError(f"transport conflict on arc {arc}")
    progress = True
    while progress and any(k is None for k in known):
        progress = False
        for r in D2.roles:
            a, b, c = r.arc_in, r.arc_over, r.arc_out
            if known[b] is None:
                continue
            src, dst = (a, c) if r.sign > 0 else (c, a)
            if known[src] is not None and known[dst] is None:
                known[dst] = quandle_op(M, known[src], known[b])
                progress = True
            elif known[dst] is not None and known[src] is None:
                known[src] = quandle_op_inv(M, known[dst], known[b])
                progress = True
    if any(k is None for k in known):
        raise ColoringError("transport left arcs undetermined")
    f2 = Representation(D2, C.rep.group, tuple(k[1] for k in known))
    out = Coloring(M, f2, tuple(tuple(k[0]) for k in known))
    if check_representation(f2) or not out.is_valid():
        raise ColoringError("transported assignment is not a coloring")
    return out
