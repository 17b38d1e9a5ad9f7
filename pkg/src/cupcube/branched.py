"""Triple cup products of 3-fold cyclic branched covers, via colorings.

For a knot diagram and a modulus ``n`` the setup is ``G = Z/3`` with every
meridian sent to ``t``, ``M = A = Z[t]/(n, t^2+t+1)`` and
``psi_0(x, y, z) = xyz``.  The reduced coloring module then stands in for
``H^1`` of the branched cover with ``Z/n`` coefficients, and
``T_{p.psi_0}`` for the triple cup product, where ``p(a + bt) = a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .algebra.descriptors import tomllib
from .algebra.groups import FiniteGroup, GModule
from .algebra.ring import QuotRing
from .coloring import Representation, colorings, shadow_extend
from .diagram import parse_pd
from .trilinear import (
    DEFAULT, CubicForm, canonical_scalar, cubic_tensor, p_project, product_psi,
    scalars_equivalent, trilinear_sum,
)


@lru_cache(maxsize=None)
def census():
    """The bundled knot data (see ``data/census.toml``)."""
    text = resources.files("cupcube").joinpath("data/census.toml").read_text()
    return tomllib.loads(text)


def knot_names():
    return list(census()["knots"])


def knot_diagram(name, alt=False):
    """Canonical diagram of a census knot, or its braid-closure alternative."""
    data = census()
    entry = data["knots"].get(name) or data["links"].get(name)
    if entry is None:
        raise KeyError(f"unknown knot {name!r}; known: {', '.join(knot_names())}")
    return parse_pd(entry["alt_pd"] if alt else entry["pd"])


@dataclass
class BranchedSetup:
    n: int
    ring: QuotRing
    group: FiniteGroup
    module: GModule
    psi0: object
    psi: object  # p . psi0


@lru_cache(maxsize=None)
def branched_setup(n):
    if n < 2:
        raise ValueError("modulus must be at least 2")
    R = QuotRing(n)
    G = FiniteGroup.cyclic(3)
    M = GModule.from_generators(G, n, 2, {"t": R.mul_matrix(R.t)}, name=f"A({n})")
    M.ring = R
    psi0 = product_psi(M, R)
    return BranchedSetup(n, R, G, M, psi0, p_project(psi0))


def a_scale(space, R, x, a):
    """The coloring ``x`` multiplied by ``a`` in ``A``, arc by arc."""
    m = R.mul_matrix(a)
    n = R.n
    out = []
    for i in range(0, len(x), 2):
        u, v = x[i], x[i + 1]
        out += [(u * m[0][0] + v * m[1][0]) % n, (u * m[0][1] + v * m[1][1]) % n]
    return out


def free_generator(space, R):
    """A generator ``e`` with ``Col^red = A e`` free of rank one, else ``None``."""
    red = space.reduced
    size = R.n ** 2
    if red.size != size:
        return None
    for x in red.elements():
        orbit = {tuple(a_scale(space, R, x, a)) for a in R.elements()}
        if len(orbit) == size:
            return x
    return None


@dataclass
class BranchedResult:
    knot: str
    n: int
    orders: list
    form: CubicForm
    lam: object = None        # RingElem, when Col^red is free of rank one
    canonical: object = None
    orbit_size: int = 0
    notes: list = field(default_factory=list)

    @property
    def is_zero(self):
        return self.form.is_zero()

    def label(self):
        """``"0"``, ``"a*b*c"``, ``"2*a*b*c"``, ... from the canonical scalar."""
        if self.is_zero:
            return "0"
        if self.canonical is None:
            return self.form.poly()
        s = str(self.canonical)
        if s == "1":
            return "a*b*c"
        if "+" in s or "-" in s[1:]:
            s = f"({s})"
        return f"{s}*a*b*c"

    def to_json(self):
        return {
            "knot": self.knot,
            "n": self.n,
            "col_red_orders": self.orders,
            "col_red_size": self.form.spaces[0].reduced.size,
            "free_rank_one": self.lam is not None,
            "lambda": None if self.lam is None else str(self.lam),
            "canonical_lambda": None if self.canonical is None else str(self.canonical),
            "orbit_size": self.orbit_size,
            "form": self.label(),
            "tensor": {",".join(map(str, k)): list(v) for k, v in sorted(self.form.tensor.items())},
            "notes": self.notes,
        }


def _lex_key(a):
    # compare from the top coefficient down so that constants come first
    return tuple(reversed(a.coeffs))


def canonical(lam):
    rep, size = canonical_scalar(lam, key=_lex_key)
    return rep, size


def branched_form(D, n, knot="", torus=None, conv=DEFAULT):
    """Cubic form of ``T_{p.psi_0}`` on ``Col^red`` of ``D`` over ``A(n)``."""
    st = branched_setup(n)
    f = Representation.constant(D, st.group, "t")
    sp = colorings(D, f, st.module)
    form = cubic_tensor((sp, sp, sp), st.psi, conv)
    res = BranchedResult(knot, n, list(sp.reduced.orders), form)
    if sp.reduced.size == 1:
        res.lam = st.ring.zero
    else:
        e = free_generator(sp, st.ring)
        if e is not None:
            S = shadow_extend(sp.coloring(e))
            res.lam = st.ring(*trilinear_sum(S, S, S, st.psi0, conv))
    if res.lam is not None:
        res.canonical, res.orbit_size = canonical(res.lam)
    if torus:
        p, q = torus
        res.notes.append(
            f"torus knot T({p},{q}): the cup-product reading holds only modulo {p * q}")
    return res


def matches(result, expected):
    """Does ``result`` agree with an expected scalar (coefficient pair)?"""
    R = branched_setup(result.n).ring
    target = R(*expected)
    if result.lam is None:
        return not target and result.is_zero
    if not target:
        return result.is_zero
    return scalars_equivalent(result.lam, target)


@dataclass
class TableRow:
    knot: str
    n: int
    expected: str
    computed: str
    passed: bool
    result: BranchedResult

    def to_json(self):
        return {"knot": self.knot, "n": self.n, "expected": self.expected,
                "computed": self.computed, "pass": self.passed}


TORUS_KNOTS = {"3_1": (2, 3), "5_1": (2, 5)}


def table_check(alt=False):
    rows = []
    for entry in census()["table"]:
        D = knot_diagram(entry["knot"], alt=alt)
        for n in entry["n"]:
            res = branched_form(D, n, knot=entry["knot"], torus=TORUS_KNOTS.get(entry["knot"]))
            ok = matches(res, entry["lambda"])
            rows.append(TableRow(entry["knot"], n, entry["form"], res.label(), ok, res))
    return rows
