"""Oriented link diagrams given by planar-diagram (PD) codes.

A crossing ``X(a, b, c, d)`` lists its four edges counterclockwise,
starting from the incoming under-edge; so ``a -> c`` is the under-strand
and ``b, d`` carry the over-strand.  Slots are numbered 0..3 in that
order.

Faces are traced as orbits of darts.  A dart ``(c, s)`` leaves crossing
``c`` along the edge in slot ``s``; the face it bounds lies on its right.
The corner between slots ``s`` and ``s + 1`` belongs to the face of dart
``(c, s + 1)``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property

UNDER_IN, OVER_A, UNDER_OUT, OVER_B = 0, 1, 2, 3


class DiagramError(ValueError):
    pass


_TERM = re.compile(r"X\s*[\[(]\s*([^\])]*)[\])]", re.I)


def parse_pd(text):
    """Parse a PD code and return a validated :class:`LinkDiagram`.

    Accepts ``X(1,4,2,5) X(3,6,4,1) ...`` (round or square brackets, any
    whitespace or commas between terms), ``PD[X[..], ..]``, and nested
    lists ``[[1,4,2,5], [3,6,4,1], ...]``.
    """
    text = text.strip()
    if not text:
        raise DiagramError("empty PD code")
    if text.startswith("[") and not re.match(r"^\[\s*X", text, re.I):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed list PD code: {exc}") from None
        if not isinstance(data, list) or not all(
                isinstance(t, list) and len(t) == 4 for t in data):
            raise DiagramError("list PD code must be a list of 4-element lists")
        crossings = data
    else:
        body = re.sub(r"^PD\s*[\[(]|[\])]\s*$", "", text) if text[:2].upper() == "PD" else text
        crossings, pos = [], 0
        for m in _TERM.finditer(body):
            if body[pos:m.start()].strip(" ,\t\n;"):
                raise DiagramError(f"unexpected text {body[pos:m.start()].strip()!r}")
            parts = [p.strip() for p in m.group(1).split(",")]
            if len(parts) != 4:
                raise DiagramError(f"crossing {m.group(0)!r} does not have 4 entries")
            crossings.append(parts)
            pos = m.end()
        if body[pos:].strip(" ,\t\n;") or not crossings:
            raise DiagramError(f"malformed PD code near {body[pos:pos + 20]!r}")
    try:
        tuples = [tuple(int(v) for v in t) for t in crossings]
    except (TypeError, ValueError):
        raise DiagramError("edge labels must be integers") from None
    return LinkDiagram(tuples)


@dataclass(frozen=True)
class CrossingRoles:
    """Arcs and edges meeting at one crossing."""

    index: int
    sign: int
    under_in: int   # edges
    under_out: int
    over_in: int
    over_out: int
    arc_in: int     # arcs
    arc_out: int
    arc_over: int


class LinkDiagram:
    """A validated oriented link diagram.  Treat instances as immutable."""

    def __init__(self, crossings, unknots=0):
        self.crossings = tuple(tuple(int(v) for v in c) for c in crossings)
        # crossingless unknotted components; only the 0-crossing unknot
        # (one component, nothing else) is supported as a diagram on its own
        self.unknots = unknots
        if unknots and self.crossings:
            raise DiagramError("split unknot components are not supported")
        if not self.crossings and unknots != 1:
            raise DiagramError("a diagram needs crossings or exactly one unknot")
        self._validate()

    # -- construction ------------------------------------------------------

    @classmethod
    def unknot(cls):
        return cls((), unknots=1)

    def _validate(self):
        occ = {}
        for c, X in enumerate(self.crossings):
            if len(X) != 4:
                raise DiagramError(f"crossing {c} does not have 4 edges")
            for s, e in enumerate(X):
                if e <= 0:
                    raise DiagramError(f"edge labels must be positive, got {e}")
                occ.setdefault(e, []).append((c, s))
        bad = sorted(e for e, o in occ.items() if len(o) != 2)
        if bad:
            raise DiagramError(f"edges {bad} do not appear exactly twice")
        self.occurrences = occ
        self._orient()
        self._trace_faces()
        if self.crossings:
            if not self.is_connected():
                raise DiagramError("diagram is not connected")
            V, E, F = len(self.crossings), len(occ), len(self.faces)
            if V - E + F != 2:
                raise DiagramError(
                    f"face tracing is not planar: V - E + F = {V - E + F}")

    def _other(self, e, cs):
        a, b = self.occurrences[e]
        return b if a == cs else a

    def _orient(self):
        """Orient every edge and split edges into components."""
        X = self.crossings
        head = {}  # edge -> (c, s) where it enters a crossing
        tail = {}
        comps = []

        def walk(start):
            # start: (c, s) where an edge enters; follow the strand through
            seq, cs = [], start
            while True:
                c, s = cs
                e = X[c][s]
                if s == UNDER_OUT or (e in head and head[e] != cs):
                    raise DiagramError(f"inconsistent orientation on edge {e}")
                t = self._other(e, cs)
                if t[1] == UNDER_IN:
                    raise DiagramError(f"inconsistent orientation on edge {e}")
                head[e], tail[e] = cs, t
                seq.append(e)
                out = (c, (s + 2) % 4)
                cs = self._other(X[c][out[1]], out)
                if cs == start:
                    return seq

        # components carrying an under-crossing have a forced orientation
        for c, Xc in enumerate(X):
            e = Xc[UNDER_IN]
            if e in head:
                continue
            comps.append(walk((c, UNDER_IN)))
        # over-only components: orient along increasing labels where possible
        for e in sorted(self.occurrences):
            if e in head:
                continue
            a, b = self.occurrences[e]
            options = []
            for h in (a, b):
                trial = self._trace_free(h)
                if trial is not None:
                    options.append((trial[1:2], h))
            if not options:
                raise DiagramError(f"cannot orient the component of edge {e}")
            options.sort()
            comps.append(walk(options[0][1]))
        self.head, self.tail = head, tail
        # rotate each component to start at its smallest edge, order by it
        out = []
        for comp in comps:
            k = comp.index(min(comp))
            out.append(comp[k:] + comp[:k])
        out.sort(key=lambda cpt: cpt[0])
        self.components = out

    def _trace_free(self, start):
        """Edge sequence of the strand entering at ``start``; None if the
        walk hits a slot with a forced contrary direction."""
        X, seq, cs = self.crossings, [], start
        for _ in range(2 * len(self.occurrences) + 2):
            c, s = cs
            if s in (UNDER_IN, UNDER_OUT):
                return None
            seq.append(X[c][s])
            out = (c, (s + 2) % 4)
            cs = self._other(X[c][out[1]], out)
            if cs == start:
                return seq
        return None

    def _trace_faces(self):
        X = self.crossings
        face_of = {}
        faces = []
        for c in range(len(X)):
            for s in range(4):
                if (c, s) in face_of:
                    continue
                idx, darts, d = len(faces), [], (c, s)
                while d not in face_of:
                    face_of[d] = idx
                    darts.append(d)
                    e = X[d[0]][d[1]]
                    c2, s2 = self._other(e, d)
                    d = (c2, (s2 + 1) % 4)
                if d != (c, s):
                    raise DiagramError("face tracing does not close up")
                faces.append(darts)
        self._face_darts = faces
        self._face_of = face_of

    # -- derived data --------------------------------------------------------

    @property
    def n_crossings(self):
        return len(self.crossings)

    @property
    def edges(self):
        return sorted(self.occurrences)

    def is_connected(self):
        if not self.crossings:
            return True
        adj = {c: set() for c in range(len(self.crossings))}
        for (c1, _), (c2, _) in self.occurrences.values():
            adj[c1].add(c2)
            adj[c2].add(c1)
        seen, stack = {0}, [0]
        while stack:
            for d in adj[stack.pop()]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return len(seen) == len(self.crossings)

    def over_in_slot(self, c):
        """Slot (1 or 3) through which the over-strand enters crossing ``c``."""
        X = self.crossings[c]
        return OVER_A if self.head[X[OVER_A]] == (c, OVER_A) else OVER_B

    @cached_property
    def signs(self):
        # over-strand entering at slot 3 and leaving at slot 1 is positive
        return tuple(1 if self.over_in_slot(c) == OVER_B else -1
                     for c in range(len(self.crossings)))

    @property
    def writhe(self):
        return sum(self.signs)

    @cached_property
    def arcs(self):
        """Arcs as sorted edge lists, numbered by their smallest edge."""
        if not self.crossings:
            return [[]]
        parent = {e: e for e in self.occurrences}

        def find(e):
            while parent[e] != e:
                parent[e] = parent[parent[e]]
                e = parent[e]
            return e

        for X in self.crossings:
            a, b = find(X[OVER_A]), find(X[OVER_B])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups = {}
        for e in self.occurrences:
            groups.setdefault(find(e), []).append(e)
        return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    @cached_property
    def edge_arc(self):
        return {e: i for i, arc in enumerate(self.arcs) for e in arc}

    @property
    def n_arcs(self):
        return len(self.arcs)

    @cached_property
    def roles(self):
        out = []
        ea = self.edge_arc
        for c, X in enumerate(self.crossings):
            oin = self.over_in_slot(c)
            out.append(CrossingRoles(
                index=c, sign=self.signs[c],
                under_in=X[UNDER_IN], under_out=X[UNDER_OUT],
                over_in=X[oin], over_out=X[(oin + 2) % 4],
                arc_in=ea[X[UNDER_IN]], arc_out=ea[X[UNDER_OUT]],
                arc_over=ea[X[OVER_A]]))
        return out

    def component_of_edge(self, e):
        for i, comp in enumerate(self.components):
            if e in comp:
                return i
        raise KeyError(e)

    @property
    def n_components(self):
        return len(self.components) if self.crossings else self.unknots

    # -- faces -----------------------------------------------------------------

    def _dart_side(self, d):
        e = self.crossings[d[0]][d[1]]
        return e, ("R" if self.tail[e] == d else "L")

    @cached_property
    def faces(self):
        """Faces as cyclic lists of ``(edge, side)`` pairs, numbered in
        order of first appearance of their smallest ``(edge, side)``."""
        if not self.crossings:
            return [[], []]
        raw = [[self._dart_side(d) for d in darts] for darts in self._face_darts]
        order = sorted(range(len(raw)), key=lambda i: min(raw[i]))
        self._face_perm = {old: new for new, old in enumerate(order)}
        return [raw[i] for i in order]

    def dart_face(self, c, s):
        self.faces  # noqa: B018  (builds the renumbering)
        return self._face_perm[self._face_of[(c, s)]]

    def face_right(self, e):
        return self.dart_face(*self.tail[e])

    def face_left(self, e):
        return self.dart_face(*self.head[e])

    def face_on(self, e, side):
        return self.face_left(e) if side == "L" else self.face_right(e)

    def corner_face(self, c, s):
        """Face containing the corner between slots ``s`` and ``s + 1``."""
        return self.dart_face(c, (s + 1) % 4)

    def quadrants(self, c):
        """The four corner faces at crossing ``c``, keyed by the pair of
        slots that bound each corner."""
        return {(s, (s + 1) % 4): self.corner_face(c, s) for s in range(4)}

    @property
    def default_unbounded(self):
        """Face on the left of the lowest-numbered edge."""
        if not self.crossings:
            return 0
        return self.face_left(min(self.occurrences))

    def face_adjacency(self):
        """``(edge, right_face, left_face)`` for every edge."""
        return [(e, self.face_right(e), self.face_left(e)) for e in self.edges]

    # -- presentations ------------------------------------------------------

    def wirtinger(self):
        """One relation per crossing: ``gamma = beta^-eps alpha beta^eps``.

        Each relation is a dict with the arc indices ``alpha`` (incoming
        under), ``beta`` (over), ``gamma`` (outgoing under) and ``sign``.
        """
        return [dict(crossing=r.index, alpha=r.arc_in, beta=r.arc_over,
                     gamma=r.arc_out, sign=r.sign) for r in self.roles]

    # -- misc ------------------------------------------------------------------

    def pd_string(self):
        return " ".join("X(%d,%d,%d,%d)" % X for X in self.crossings)

    def mirror(self):
        """Swap over and under at every crossing (orientation kept)."""
        out = []
        for c, X in enumerate(self.crossings):
            # new incoming under-edge is the old incoming over-edge
            oin = self.over_in_slot(c)
            if oin == OVER_B:
                out.append((X[3], X[0], X[1], X[2]))
            else:
                out.append((X[1], X[2], X[3], X[0]))
        return LinkDiagram(out)

    def reverse(self):
        """Reverse the orientation of every component."""
        out = []
        for c, X in enumerate(self.crossings):
            # new incoming under is the old outgoing under; keep ccw order
            out.append((X[2], X[3], X[0], X[1]))
        return LinkDiagram(out)

    def info(self):
        return {
            "pd": [list(X) for X in self.crossings],
            "crossings": len(self.crossings),
            "edges": len(self.occurrences),
            "components": [list(c) for c in self.components],
            "arcs": self.arcs,
            "signs": list(self.signs),
            "writhe": self.writhe,
            "faces": [[[e, s] for e, s in f] for f in self.faces],
            "unbounded_face": self.default_unbounded,
            "wirtinger": self.wirtinger(),
        }

    def __repr__(self):
        return f"LinkDiagram({self.pd_string() or 'unknot'})"

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self.crossings == other.crossings \
            and self.unknots == other.unknots

    def __hash__(self):
        return hash((self.crossings, self.unknots))


def isomorphic(D1, D2):
    """True when the PD codes agree after relabelling edges and reordering
    crossings (orientation-preserving planar isomorphism)."""
    if len(D1.crossings) != len(D2.crossings) or D1.unknots != D2.unknots:
        return False
    if not D1.crossings:
        return True
    X1, X2 = D1.crossings, D2.crossings
    for c2 in range(len(X2)):
        emap, cmap = {}, {0: c2}
        stack, ok = [0], True
        while stack and ok:
            a = stack.pop()
            b = cmap[a]
            for s in range(4):
                e1, e2 = X1[a][s], X2[b][s]
                if emap.setdefault(e1, e2) != e2:
                    ok = False
                    break
                o1 = D1._other(e1, (a, s))
                o2 = D2._other(e2, (b, s))
                if o1[1] != o2[1]:
                    ok = False
                    break
                if o1[0] in cmap:
                    if cmap[o1[0]] != o2[0]:
                        ok = False
                        break
                else:
                    cmap[o1[0]] = o2[0]
                    stack.append(o1[0])
        if ok and len(set(cmap.values())) == len(X1) and len(set(emap.values())) == len(emap):
            return True
    return False
