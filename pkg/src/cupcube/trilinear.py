"""Crossing weights and the trilinear form of three shadow colorings."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra.ring import QuotRing
from .coloring import shadow_extend


class PsiError(ValueError):
    pass


def zn(n):
    """``Z/n`` as the degree-one quotient ring ``Z[t]/(n, t)``."""
    return QuotRing(n, (0, 1))


@dataclass
class TrilinearPsi:
    """A Z-trilinear map ``M1 x M2 x M3 -> A`` given by a coefficient tensor.

    ``tensor[i][j][k]`` is the coefficient tuple (in ``codomain``) of
    ``psi(e_i, e_j, e_k)`` on the standard bases of the three modules.
    """

    modules: tuple
    codomain: QuotRing
    tensor: list
    name: str = "psi"

    def __post_init__(self):
        n = {M.n for M in self.modules}
        if len(n) != 1 or {M.group.order for M in self.modules} != {self.modules[0].group.order}:
            raise PsiError("modules must share the group and modulus")
        if self.codomain.n % self.modules[0].n and self.modules[0].n % self.codomain.n:
            raise PsiError("codomain modulus is incompatible with the modules")

    def __call__(self, x, y, z):
        A = self.codomain
        acc = [0] * A.degree
        T = self.tensor
        for i, xi in enumerate(x):
            if not xi:
                continue
            Ti = T[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                xy = xi * yj
                Tij = Ti[j]
                for k, zk in enumerate(z):
                    if zk:
                        c = xy * zk
                        for m, v in enumerate(Tij[k]):
                            acc[m] += c * v
        return tuple(v % A.n for v in acc)

    def value(self, x, y, z):
        return self.codomain(*self(x, y, z))

    def compose(self, proj, codomain):
        """``proj o psi`` for a coefficientwise map ``proj`` into ``codomain``."""
        T = [[[tuple(proj(v)) for v in row] for row in mat] for mat in self.tensor]
        return TrilinearPsi(self.modules, codomain, T, name=f"p.{self.name}")

    @classmethod
    def from_function(cls, modules, codomain, fn, name="psi"):
        """Tabulate ``fn(i, j, k) -> codomain element`` on basis triples."""
        d1, d2, d3 = (M.d for M in modules)
        T = [[[tuple(fn(i, j, k).coeffs) for k in range(d3)] for j in range(d2)]
             for i in range(d1)]
        return cls(tuple(modules), codomain, T, name)

    @classmethod
    def zero(cls, modules, codomain):
        return cls.from_function(modules, codomain, lambda i, j, k: codomain.zero, "zero")


def psi_check(psi):
    """``None`` if ``psi`` is G-invariant on every group element (exhaustive
    over basis triples, which suffices by trilinearity), else the first
    violating tuple."""
    M1, M2, M3 = psi.modules
    G = M1.group
    basis = [[[int(i == j) for j in range(M.d)] for i in range(M.d)] for M in psi.modules]
    gens = sorted(set(G.gens.values())) or list(range(G.order))
    for g in gens:
        for x, y, z in product(*basis):
            lhs = psi(M1.act(x, g), M2.act(y, g), M3.act(z, g))
            if lhs != psi(x, y, z):
                return dict(g=G.name(g), x=x, y=y, z=z,
                            lhs=str(psi.codomain(*lhs)), rhs=str(psi.value(x, y, z)))
    return None


# -- crossing data ----------------------------------------------------------------

@dataclass(frozen=True)
class Convention:
    """Which region and arcs of a crossing feed the weight.

    For each sign, ``b_arc`` names the under-arc ("in" or "out") used as
    the b-arc, and ``region`` names the corner face by the under-edge
    ("in"/"out") and over-edge ("in"/"out") that bound it.

    The default takes, at a positive crossing, the incoming under-arc and
    the corner between it and the outgoing over-edge.  At a negative
    crossing it takes the outgoing under-arc and the corner between it and
    the outgoing over-edge, i.e. the source corner moved across the b-arc,
    which is what the ``g^-1`` factor in the weight compensates for.
    """

    pos_b: str = "in"
    pos_region: tuple = ("in", "out")
    neg_b: str = "out"
    neg_region: tuple = ("out", "out")
    name: str = "cupcube-1"

    def pick(self, sign):
        return (self.pos_b, self.pos_region) if sign > 0 else (self.neg_b, self.neg_region)


DEFAULT = Convention()


def corner_face(D, c, under, over):
    """Face of the corner bounded by the given under- and over-edges."""
    us = 0 if under == "in" else 2
    oin = D.over_in_slot(c)
    os_ = oin if over == "in" else (oin + 2) % 4
    s = us if (us + 1) % 4 == os_ else os_
    return D.corner_face(c, s)


def crossing_data(S, c, conv=DEFAULT):
    """``(a, (b, g), (c, h), sign)`` read from shadow coloring ``S`` at ``c``."""
    D = S.diagram
    r = D.roles[c]
    b_side, (ru, ro) = conv.pick(r.sign)
    b_arc = r.arc_in if b_side == "in" else r.arc_out
    C = S.coloring
    a = S.regions[corner_face(D, c, ru, ro)]
    return a, C[b_arc], C[r.arc_over], r.sign


def weight(c, S1, S2, S3, psi, conv=DEFAULT):
    """``psi((a1 - b1)(1 - g^eps), b2 - c2, c3 - c3 h^-1)`` at crossing ``c``."""
    M1, M2, M3 = psi.modules
    G = M1.group
    a1, (b1, g), _, eps = crossing_data(S1, c, conv)
    _, (b2, _), (c2, _), _ = crossing_data(S2, c, conv)
    _, _, (c3, h), _ = crossing_data(S3, c, conv)
    u = M1.sub(a1, b1)
    x = M1.sub(u, M1.act(u, G.power(g, eps)))
    y = M2.sub(b2, c2)
    z = M3.sub(c3, M3.act(c3, G.inverse(h)))
    return psi(x, y, z)


def trilinear_sum(S1, S2, S3, psi, conv=DEFAULT):
    D = S1.diagram
    A = psi.codomain
    acc = [0] * A.degree
    for c in range(D.n_crossings):
        for m, v in enumerate(weight(c, S1, S2, S3, psi, conv)):
            acc[m] += v
    return tuple(v % A.n for v in acc)


def diagonal_invariant(S, psi, conv=DEFAULT):
    """The quandle-cocycle value ``T(S, S, S)``; needs ``M1 = M2 = M3``."""
    M1, M2, M3 = psi.modules
    if not (M1 is M2 is M3) and not (M1.action == M2.action == M3.action):
        raise PsiError("diagonal invariant needs three identical modules")
    return trilinear_sum(S, S, S, psi, conv)


# -- standard forms -----------------------------------------------------------------

def product_psi(M, R):
    """``psi_0(x, y, z) = xyz`` for a module ``M`` that is the ring ``R``
    with its coefficient basis ``1, t, ..., t^(d-1)``."""
    basis = [R(*[int(i == j) for j in range(R.degree)]) for i in range(R.degree)]
    return TrilinearPsi.from_function((M, M, M), R,
                                      lambda i, j, k: basis[i] * basis[j] * basis[k],
                                      name="psi0")


def p_project(psi):
    """Compose with ``p(a_0 + a_1 t + ...) = a_0``, landing in ``Z/n``."""
    A = zn(psi.codomain.n)
    out = psi.compose(lambda c: (c[0],), A)
    out.name = f"p.{psi.name}"
    return out


# -- cubic forms over coloring bases --------------------------------------------------

@dataclass
class CubicForm:
    """``T`` on the reduced bases of three coloring spaces.

    ``tensor[(i, j, k)]`` is ``T(e_i, e_j, e_k)`` as a codomain coefficient
    tuple; only nonzero entries are stored.
    """

    spaces: tuple
    codomain: QuotRing
    tensor: dict
    convention: Convention = DEFAULT

    @property
    def orders(self):
        return tuple(tuple(sp.reduced.orders) for sp in self.spaces)

    def is_zero(self):
        return not self.tensor

    def evaluate(self, x, y, z):
        """Value at coordinate vectors with respect to the three bases."""
        A = self.codomain
        acc = [0] * A.degree
        for (i, j, k), v in self.tensor.items():
            c = x[i] * y[j] * z[k]
            for m, w in enumerate(v):
                acc[m] += c * w
        return tuple(w % A.n for w in acc)

    def poly(self):
        """Readable polynomial in ``a_i, b_j, c_k`` (``a*b*c`` when rank one)."""
        if not self.tensor:
            return "0"
        ranks = [sp.reduced.rank for sp in self.spaces]
        terms = []
        for (i, j, k), v in sorted(self.tensor.items()):
            mono = "*".join(
                name if r == 1 else f"{name}{idx + 1}"
                for name, r, idx in zip("abc", ranks, (i, j, k)))
            coef = str(self.codomain(*v))
            terms.append(mono if coef == "1" else f"{_paren(coef)}*{mono}")
        return " + ".join(terms)


def _paren(s):
    return f"({s})" if "+" in s or "-" in s[1:] else s


def cubic_tensor(spaces, psi, conv=DEFAULT, unbounded=None):
    """Tabulate ``T_psi`` on the reduced bases of ``spaces`` (one per slot)."""
    shadows = [[shadow_extend(C, unbounded) for C in sp.reduced_colorings()] for sp in spaces]
    tensor = {}
    for i, S1 in enumerate(shadows[0]):
        for j, S2 in enumerate(shadows[1]):
            for k, S3 in enumerate(shadows[2]):
                v = trilinear_sum(S1, S2, S3, psi, conv)
                if any(v):
                    tensor[(i, j, k)] = v
    return CubicForm(tuple(spaces), psi.codomain, tensor, conv)


# -- semilinear equivalence over A = Z[t]/(n, t^2+t+1) ------------------------------

def semilinear_orbit(lam):
    """``{u * lam, u * sigma(lam)}`` over units ``u``, sigma the Galois twist."""
    R = lam.ring
    seeds = {lam, R.galois(lam)}
    return {u * s for u in R.units for s in seeds}


def canonical_scalar(lam, key=None):
    """Smallest orbit member (by ``key``, default the coefficient tuple) and
    the orbit size."""
    orbit = semilinear_orbit(lam)
    return min(orbit, key=key or (lambda a: a.coeffs)), len(orbit)


def scalars_equivalent(lam, mu):
    return mu in semilinear_orbit(lam)


def tensors_equivalent(F1, F2, budget=200_000):
    """Raw-tensor comparison under independent basis changes per slot.

    Returns ``True``/``False``, or ``None`` when the search would exceed
    ``budget`` combinations.  Only meaningful for small reduced modules.
    """
    if F1.orders != F2.orders or F1.codomain != F2.codomain:
        return False
    if F1.tensor == F2.tensor:
        return True
    autos = [_automorphisms(o) for o in F1.orders]
    if any(a is None for a in autos):
        return None
    total = 1
    for a in autos:
        total *= len(a)
    if total > budget:
        return None
    target = F2.tensor
    n = F1.codomain.n
    dims = [len(o) for o in F1.orders]
    for P in product(*autos):
        T = {}
        for idx in product(*(range(d) for d in dims)):
            x, y, z = (P[s][idx[s]] for s in range(3))
            v = F1.evaluate(x, y, z)
            if any(v):
                T[idx] = v
        if T == target:
            return True
    return False


def _automorphisms(orders, cap=5000):
    """Images of the basis under automorphisms of ``prod Z/orders[i]``."""
    dims = len(orders)
    if dims == 0:
        return [()]
    elems = list(product(*(range(o) for o in orders)))
    size = len(elems)
    out = []

    def ok_image(v, o):
        return all((o * c) % oi == 0 for c, oi in zip(v, orders))

    cands = [[v for v in elems if ok_image(v, o)] for o in orders]
    for imgs in product(*cands):
        span = set()
        for coeffs in product(*(range(o) for o in orders)):
            span.add(tuple(sum(c * v[m] for c, v in zip(coeffs, imgs)) % orders[m]
                           for m in range(dims)))
        if len(span) == size:
            out.append(imgs)
            if len(out) > cap:
                return None
    return out
