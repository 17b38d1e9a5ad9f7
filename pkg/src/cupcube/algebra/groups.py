"""Finite groups given by tables or permutations, and right G-modules."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .linalg import det, identity, matmul


class GroupError(ValueError):
    pass


class ModuleError(ValueError):
    pass


@dataclass
class FiniteGroup:
    """A finite group on the elements ``0 .. order-1``.

    ``table[g][h]`` is the product ``gh``.  Element 0 is the identity.
    ``gens`` maps generator names to elements.
    """

    table: list
    gens: dict = field(default_factory=dict)
    labels: list = None
    check: bool = True

    def __post_init__(self):
        N = len(self.table)
        if any(len(row) != N for row in self.table):
            raise GroupError("multiplication table is not square")
        if self.table[0] != list(range(N)) or [r[0] for r in self.table] != list(range(N)):
            raise GroupError("element 0 must be the identity")
        self.inv = [None] * N
        for g in range(N):
            for h in range(N):
                if self.table[g][h] == 0:
                    self.inv[g] = h
                    break
            else:
                raise GroupError(f"element {g} has no inverse")
        if self.check and N <= 64:
            T = self.table
            for a in range(N):
                for b in range(N):
                    ab = T[a][b]
                    for c in range(N):
                        if T[ab][c] != T[a][T[b][c]]:
                            raise GroupError(f"not associative at {(a, b, c)}")

    @property
    def order(self):
        return len(self.table)

    identity = 0

    def mul(self, *elems):
        out = 0
        for g in elems:
            out = self.table[out][g]
        return out

    def inverse(self, g):
        return self.inv[g]

    def power(self, g, k):
        if k < 0:
            g, k = self.inv[g], -k
        out = 0
        for _ in range(k):
            out = self.table[out][g]
        return out

    def conj(self, g, h):
        """``h^-1 g h``."""
        return self.mul(self.inv[h], g, h)

    def name(self, g):
        return self.labels[g] if self.labels else str(g)

    def element(self, spec):
        """Look up an element by index, generator name or label."""
        if isinstance(spec, int):
            return spec
        if spec in self.gens:
            return self.gens[spec]
        if self.labels and spec in self.labels:
            return self.labels.index(spec)
        if isinstance(spec, str) and spec.lstrip("-").isdigit():
            return int(spec)
        raise GroupError(f"unknown group element {spec!r}")

    def is_abelian(self):
        T = self.table
        return all(T[a][b] == T[b][a] for a in range(self.order) for b in range(a))

    @classmethod
    def cyclic(cls, N, name="t"):
        table = [[(a + b) % N for b in range(N)] for a in range(N)]
        labels = ["1"] + [name if k == 1 else f"{name}^{k}" for k in range(1, N)]
        return cls(table, gens={name: 1} if N > 1 else {}, labels=labels, check=False)

    @classmethod
    def from_permutations(cls, gens):
        """Group generated by permutations of ``0..k-1``.

        Products compose left to right: ``(gh)(i) = h(g(i))``, which is what
        a right action needs.
        """
        names = list(gens)
        perms = [tuple(gens[k]) for k in names]
        k = len(perms[0]) if perms else 0
        if any(sorted(p) != list(range(k)) for p in perms):
            raise GroupError("generators must be permutations of 0..k-1")
        ident = tuple(range(k))
        elems, index = [ident], {ident: 0}
        i = 0
        while i < len(elems):
            g = elems[i]
            for p in perms:
                gp = tuple(p[g[j]] for j in range(k))
                if gp not in index:
                    index[gp] = len(elems)
                    elems.append(gp)
            i += 1
        table = [[index[tuple(h[g[j]] for j in range(k))] for h in elems] for g in elems]
        grp = cls(table, gens={n: index[p] for n, p in zip(names, perms)},
                  labels=[cycle_notation(p) for p in elems], check=False)
        grp.perms = elems
        return grp

    @classmethod
    def symmetric(cls, k):
        if k < 2:
            return cls([[0]], check=False)
        gens = {"s": tuple([1, 0] + list(range(2, k))),
                "c": tuple(list(range(1, k)) + [0])}
        return cls.from_permutations(gens)


def cycle_notation(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


@dataclass
class GModule:
    """A free ``Z/n``-module of rank ``d`` with a right action of ``group``.

    ``action[g]`` is the ``d x d`` matrix of ``x -> x . g`` on row vectors.
    """

    group: FiniteGroup
    n: int
    d: int
    action: list
    name: str = ""

    def act(self, x, g):
        M = self.action[g]
        n = self.n
        return [sum(x[i] * M[i][j] for i in range(self.d)) % n for j in range(self.d)]

    def add(self, x, y):
        return [(a + b) % self.n for a, b in zip(x, y)]

    def sub(self, x, y):
        return [(a - b) % self.n for a, b in zip(x, y)]

    def neg(self, x):
        return [-a % self.n for a in x]

    def scale(self, k, x):
        return [(k * a) % self.n for a in x]

    def act_ring(self, x, terms):
        """Apply the group-ring element ``sum c * g`` given as ``[(c, g), ...]``."""
        acc = [0] * self.d
        for c, g in terms:
            for i, v in enumerate(self.act(x, g)):
                acc[i] += c * v
        return [v % self.n for v in acc]

    @property
    def zero(self):
        return [0] * self.d

    def elements(self):
        from itertools import product
        for v in product(range(self.n), repeat=self.d):
            yield list(v)

    @property
    def size(self):
        return self.n ** self.d

    @classmethod
    def from_generators(cls, group, n, d, gen_mats, name=""):
        """Extend generator matrices to the whole group along products.

        Raises :class:`ModuleError` when two words for the same element get
        different matrices, i.e. the assignment is not a representation.
        """
        action = [None] * group.order
        action[0] = identity(d)
        frontier = [0]
        gens = [(group.element(k), [[v % n for v in row] for row in m])
                for k, m in gen_mats.items()]
        for g, m in gens:
            _check_shape(m, d)
        while frontier:
            nxt = []
            for g in frontier:
                for h, m in gens:
                    gh = group.mul(g, h)
                    mat = matmul(action[g], m, n)
                    if action[gh] is None:
                        action[gh] = mat
                        nxt.append(gh)
                    elif action[gh] != mat:
                        raise ModuleError(
                            f"action is not well defined at element {group.name(gh)}")
            frontier = nxt
        if any(a is None for a in action):
            raise ModuleError("generators do not generate the group")
        mod = cls(group, n, d, action, name)
        violation = gmodule_check(mod)
        if violation:
            raise ModuleError(violation)
        return mod

    @classmethod
    def trivial(cls, group, n, d=1):
        return cls(group, n, d, [identity(d) for _ in range(group.order)], "trivial")

    @classmethod
    def permutation(cls, group, n):
        """``(Z/n)^k`` with coordinates permuted: ``(x.g)_{g(i)} = x_i``."""
        k = len(group.perms[0])
        mats = []
        for p in group.perms:
            m = [[0] * k for _ in range(k)]
            for i in range(k):
                m[i][p[i]] = 1
            mats.append(m)
        return cls(group, n, k, mats, f"perm({n})")


def _check_shape(m, d):
    if len(m) != d or any(len(row) != d for row in m):
        raise ModuleError(f"action matrix must be {d}x{d}")


def gmodule_check(M):
    """Return ``None`` when ``M`` is a right G-module, else a description
    of the first violation found."""
    G, n = M.group, M.n
    if len(M.action) != G.order:
        return "action must list one matrix per group element"
    for g, m in enumerate(M.action):
        if len(m) != M.d or any(len(row) != M.d for row in m):
            return f"dimension mismatch at element {G.name(g)}"
        if gcd(det(m), n) != 1:
            return f"action of {G.name(g)} is not invertible mod {n}"
    if M.action[0] != identity(M.d):
        return "identity does not act trivially"
    for g in range(G.order):
        for h in range(G.order):
            if matmul(M.action[g], M.action[h], n) != M.action[G.mul(g, h)]:
                return f"rho({G.name(g)}) rho({G.name(h)}) != rho({G.name(g)}{G.name(h)})"
    return None


def check_generators(group, n, d, gen_mats):
    """Like :func:`gmodule_check`, but starting from generator matrices only."""
    try:
        GModule.from_generators(group, n, d, gen_mats)
    except ModuleError as exc:
        return str(exc)
    return None
