"""Named coefficient setups, generic-vs-oracle comparisons and R-move runs.

A *setup* bundles a group, three modules and a G-invariant form.  The CLI
and the acceptance tests refer to setups by name:

``branched:N``   G = Z/3, M = Z[t]/(N, t^2+t+1), psi = xyz (ring valued)
``s3std:N``      G = S3 on the sum-zero lattice mod N, every invariant psi
``a4perm:N``     G = A4 permuting 4 points, orbit-indicator forms
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .algebra.groups import FiniteGroup, GModule
from .algebra.linalg import kernel_mod
from .branched import branched_setup, knot_diagram
from .coloring import (
    ColoringError, Representation, check_representation, colorings, shadow_extend, transport,
)
from .diagram import apply_rmove
from .oracles import OracleError, oracle_fig8, oracle_torus_mm, oracle_trefoil
from .trilinear import DEFAULT, TrilinearPsi, psi_check, trilinear_sum, zn


@dataclass
class Setup:
    name: str
    group: FiniteGroup
    modules: tuple
    psis: list
    # representation used when none is given; "t" means constant
    default_rep: object = None

    def representation(self, D):
        if self.default_rep is not None:
            return Representation.constant(D, self.group, self.default_rep)
        reps = find_representations(D, self.group, limit=1, nonabelian=True)
        if reps:
            return reps[0]
        # abelian link groups (e.g. the Hopf link): any nontrivial one
        for f in find_representations(D, self.group, limit=self.group.order ** 2):
            if any(f.values):
                return f
        raise ValueError(f"{self.name}: only the trivial representation exists")


def invariant_psis(modules, A, cap=None):
    """A generating set of the G-invariant trilinear forms ``M1 x M2 x M3 -> Z/n``.

    Solved as the kernel of ``psi . (g x g x g) - psi`` over the group
    generators; ``A`` must be ``Z/n``.
    """
    G = modules[0].group
    dims = [M.d for M in modules]
    idx = list(product(*(range(k) for k in dims)))
    N = len(idx)
    gens = sorted(set(G.gens.values())) or list(range(G.order))
    rows = [[0] * (N * len(gens)) for _ in range(N)]
    for gi, g in enumerate(gens):
        m0, m1, m2 = (M.action[g] for M in modules)
        for r, (i, j, k) in enumerate(idx):
            for c, (a, b, e) in enumerate(idx):
                rows[r][gi * N + c] += m0[a][i] * m1[b][j] * m2[e][k] - (r == c)
    basis = kernel_mod(rows, A.n)
    pos = {t: i for i, t in enumerate(idx)}
    out = []
    for v in basis.gens[:cap]:
        psi = TrilinearPsi.from_function(tuple(modules), A, lambda i, j, k, v=v: A(v[pos[(i, j, k)]]))
        out.append(psi)
    return out


def find_representations(D, G, limit=1, nonabelian=False):
    """Representations of the link group of ``D`` in ``G``, by backtracking
    over arcs with every fully assigned crossing checked on the way."""
    by_arc = [[] for _ in range(D.n_arcs)]
    for r in D.roles:
        by_arc[max(r.arc_in, r.arc_over, r.arc_out)].append(r)
    vals = [None] * D.n_arcs
    out = []

    def ok(arc):
        for r in by_arc[arc]:
            want = G.conj(vals[r.arc_in], G.power(vals[r.arc_over], r.sign))
            if vals[r.arc_out] != want:
                return False
        return True

    def image_nonabelian():
        im = set(vals)
        return any(G.mul(a, b) != G.mul(b, a) for a in im for b in im)

    def go(arc):
        if len(out) >= limit:
            return
        if arc == D.n_arcs:
            if not nonabelian or image_nonabelian():
                out.append(Representation(D, G, tuple(vals)))
            return
        for g in range(G.order):
            vals[arc] = g
            if ok(arc):
                go(arc + 1)
        vals[arc] = None

    go(0)
    return out


def _sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])
    return -1 if inv % 2 else 1


def s3_std(n):
    """S3 on ``{x in Z^3 : sum x = 0}`` with basis ``e1-e2, e2-e3``, reduced mod n."""
    G = FiniteGroup.symmetric(3)

    def mat(p):
        def img(v):
            w = [0, 0, 0]
            for i in range(3):
                w[p[i]] += v[i]
            return w
        # coordinates of w in the basis (1,-1,0), (0,1,-1) are (w0, -w2)
        return [[img(u)[0] % n, -img(u)[2] % n] for u in ([1, -1, 0], [0, 1, -1])]

    gens = sorted(set(G.gens.values()))
    return G, GModule.from_generators(G, n, 2, {G.name(g): mat(G.perms[g]) for g in gens},
                                      name=f"std({n})")


def a4_perm(n):
    G = FiniteGroup.from_permutations({"a": (1, 2, 0, 3), "b": (1, 0, 3, 2)})
    M = GModule.permutation(G, n)
    A = zn(n)
    seen, psis = set(), []
    for t in product(range(4), repeat=3):
        if t in seen:
            continue
        orb = {tuple(G.perms[g][i] for i in t) for g in range(G.order)}
        seen |= orb
        psis.append(TrilinearPsi.from_function(
            (M, M, M), A, lambda i, j, k, orb=orb: A(int((i, j, k) in orb)), name=f"orbit{min(orb)}"))
    return G, M, psis


def make_setup(spec):
    """Parse ``kind:n`` into a :class:`Setup`."""
    kind, _, arg = spec.partition(":")
    try:
        n = int(arg)
    except ValueError:
        raise ValueError(f"setup {spec!r}: expected kind:modulus") from None
    if kind == "branched":
        st = branched_setup(n)
        return Setup(spec, st.group, (st.module,) * 3, [st.psi0], default_rep="t")
    if kind == "s3std":
        G, M = s3_std(n)
        return Setup(spec, G, (M,) * 3, invariant_psis((M, M, M), zn(n)))
    if kind == "a4perm":
        G, M, psis = a4_perm(n)
        return Setup(spec, G, (M,) * 3, psis)
    raise ValueError(f"unknown setup kind {kind!r}; use branched, s3std or a4perm")


def random_coloring(space, rng):
    return space.coloring(space.full.combine([rng.randrange(o) for o in space.full.orders]))


# -- generic vs closed form -------------------------------------------------------

@dataclass
class Report:
    name: str
    checked: int = 0
    nonzero: int = 0
    mismatches: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.mismatches

    def to_json(self):
        return {"check": self.name, "pass": self.passed, "checked": self.checked,
                "nonzero": self.nonzero, "mismatches": self.mismatches[:10],
                "mismatch_count": len(self.mismatches), "notes": self.notes}


EXHAUSTIVE_LIMIT = 81


def _triples(spaces, samples, rng):
    total = 1
    for sp in spaces:
        total *= sp.full.size
    if total <= EXHAUSTIVE_LIMIT:
        elems = [[sp.coloring(x) for x in sp.full.elements()] for sp in spaces]
        return list(product(*elems)), True
    return [[random_coloring(sp, rng) for sp in spaces] for _ in range(samples)], False


def _compare(report, setup, D, f, samples, seed, oracle, conv):
    """Compare ``T_psi`` with ``oracle(colorings, psi)`` on every coloring
    triple when there are at most ``EXHAUSTIVE_LIMIT``, else on ``samples``
    seeded random triples."""
    rng = random.Random(seed)
    spaces = [colorings(D, f, M) for M in setup.modules]
    triples, exhaustive = _triples(spaces, samples, rng)
    report.notes.append("exhaustive" if exhaustive else f"{samples} samples, seed {seed}")
    shadow = {}
    for Cs in triples:
        Ss = []
        for i, C in enumerate(Cs):
            key = (i, C.parts)
            if key not in shadow:
                shadow[key] = shadow_extend(C)
            Ss.append(shadow[key])
        for psi in setup.psis:
            generic = tuple(trilinear_sum(*Ss, psi, conv))
            closed = tuple(oracle(Cs, psi))
            report.checked += 1
            report.nonzero += any(generic) or any(closed)
            if generic != closed:
                report.mismatches.append({
                    "psi": psi.name, "generic": list(generic), "oracle": list(closed),
                    "colorings": [[list(p) for p in C.parts] for C in Cs]})
    return report


def check_trefoil(setup, samples=100, seed=0, conv=DEFAULT, mirror=False):
    """Labels: alpha is arc 0 and beta is arc 1 of the census trefoil.

    The closed form is for the census chirality; on the mirror image it
    holds up to the sign of the fundamental class.
    """
    D = knot_diagram("3_1")
    if mirror:
        D = D.mirror()
    f = setup.representation(D)
    g, h = f[0], f[1]
    sign = -1 if mirror else 1

    def oracle(Cs, psi):
        v = oracle_trefoil([(C[0][0], C[1][0]) for C in Cs], g, h, psi)
        return tuple((sign * c) % psi.codomain.n for c in v)

    rep = Report(f"trefoil[{setup.name}]" + ("[mirror]" if mirror else ""))
    return _compare(rep, setup, D, f, samples, seed, oracle, conv)


# arcs of the census 4_1 satisfying alpha1 |> alpha2 = alpha3, alpha2 |> alpha1 = alpha4
FIG8_ARCS = (3, 1)


def check_fig8(setup, samples=100, seed=0, conv=DEFAULT):
    D = knot_diagram("4_1")
    f = setup.representation(D)
    a1, a2 = FIG8_ARCS
    z1, z2 = f[a1], f[a2]

    def oracle(Cs, psi):
        return oracle_fig8([(C[a1][0], C[a2][0]) for C in Cs], z1, z2, psi)

    return _compare(Report(f"fig8[{setup.name}]"), setup, D, f, samples, seed, oracle, conv)


def torus_diagram(m):
    """Closure of ``(s1 ... s_{m-1})^m``; see ``data/census.toml``."""
    return knot_diagram(f"T({m},{m})")


def torus_alphas(D, m):
    """The over-arcs ``alpha_1 .. alpha_m`` of the last full twist."""
    return [D.roles[(m - 1) * l].arc_over for l in range(m)]


def check_torus(setup, m, samples=100, seed=0, conv=DEFAULT, rep=None):
    D = torus_diagram(m)
    f = rep(D) if rep else setup.representation(D)
    alphas = torus_alphas(D, m)
    z = [f[a] for a in alphas]

    def oracle(Cs, psi):
        w, x, y = ([C[a][0] for a in alphas] for C in Cs)
        return oracle_torus_mm(w, x, y, z, psi)

    return _compare(Report(f"torus({m},{m})[{setup.name}]"), setup, D, f, samples, seed, oracle, conv)


# -- Reidemeister invariance ------------------------------------------------------

def rmove_suite(D, f, modules, psis, sites, conv=DEFAULT, samples=20, seed=0):
    """Check ``T_psi(C1, C2, C3) = T'_psi(B C1, B C2, B C3)`` across each move.

    All triples of full-space generators are tried when there are at most
    ``samples`` of them, otherwise ``samples`` random triples.
    """
    if check_representation(f):
        raise ColoringError("not a representation")
    rng = random.Random(seed)
    spaces = [colorings(D, f, M) for M in modules]
    gens = [[sp.coloring(g) for g in sp.full.gens] for sp in spaces]
    triples = list(product(*gens))
    if len(triples) > samples:
        triples = [tuple(random_coloring(sp, rng) for sp in spaces) for _ in range(samples)]
    report = Report(f"rmove[{len(sites)} sites]")
    for site in sites:
        move = apply_rmove(D, site)
        for Cs in triples:
            moved = [transport(C, move) for C in Cs]
            before = [shadow_extend(C) for C in Cs]
            after = [shadow_extend(C) for C in moved]
            for psi in psis:
                a = tuple(trilinear_sum(*before, psi, conv))
                b = tuple(trilinear_sum(*after, psi, conv))
                report.checked += 1
                report.nonzero += any(a)
                if a != b:
                    report.mismatches.append({"site": site.to_json(), "psi": psi.name,
                                              "before": list(a), "after": list(b)})
    return report


__all__ = [
    "OracleError", "Report", "Setup", "a4_perm", "check_fig8", "check_torus", "check_trefoil",
    "find_representations", "invariant_psis", "make_setup", "psi_check", "random_coloring",
    "rmove_suite", "s3_std", "torus_alphas", "torus_diagram",
]
