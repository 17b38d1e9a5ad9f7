"""Reidemeister moves on PD codes.

A move is addressed by an :class:`RMoveSite` built from edge labels.  New
edges get fresh labels ``max + 1, max + 2, ...`` and new crossings are
appended, so applying a move and then its inverse at the returned site
gives back the original PD code exactly.

Every rewrite also returns a correspondence ``new edge -> old edge`` for
the edges whose colour is carried over unchanged; colourings of the new
diagram are obtained from it by propagation (see ``coloring.transport``).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .pd import OVER_A, OVER_B, UNDER_IN, UNDER_OUT, DiagramError, LinkDiagram


class SiteError(DiagramError):
    pass


@dataclass(frozen=True)
class RMoveSite:
    """Where and how to apply a Reidemeister move.

    kind      1, 2 or 3
    inverse   False to add crossings (R1, R2), True to remove them
    edges     R1: (edge,)         -- the edge that gets a kink
              R1 inverse: (loop,) -- the edge forming the kink
              R2: (a, b)          -- push a finger of ``a`` across ``b``
              R2 inverse: (m, n)  -- the two sides of the bigon
              R3: (a, b, c)       -- the three sides of the triangle
    side      R1: "L"/"R", side of the edge the loop goes to;
              R2: side of ``a`` facing the common face (side of ``b`` is
              inferred, or given as a second letter, e.g. "RL")
    variant   R1: crossing sign +1/-1; R2: "over"/"under" for the finger
    """

    kind: int
    edges: tuple
    inverse: bool = False
    side: str = ""
    variant: object = None

    def to_json(self):
        return dict(kind=self.kind, edges=list(self.edges), inverse=self.inverse,
                    side=self.side, variant=self.variant)

    @classmethod
    def from_json(cls, d):
        return cls(kind=int(d["kind"]), edges=tuple(d["edges"]),
                   inverse=bool(d.get("inverse", False)), side=d.get("side", ""),
                   variant=d.get("variant"))


@dataclass
class MoveResult:
    diagram: LinkDiagram
    edge_map: dict           # new edge -> old edge, colour preserved
    inverse_site: RMoveSite  # undoes this move on the new diagram
    fresh: list = field(default_factory=list)


def apply_rmove(D, site):
    handler = {
        (1, False): _r1, (1, True): _r1_inverse,
        (2, False): _r2, (2, True): _r2_inverse,
        (3, False): _r3, (3, True): _r3,
    }.get((site.kind, bool(site.inverse)))
    if handler is None:
        raise SiteError(f"unknown move kind {site.kind}")
    return handler(D, site)


def _fresh(D, k):
    top = max(D.occurrences)
    return [top + i for i in range(1, k + 1)]


def _replace(crossings, c, s, e):
    X = list(crossings[c])
    X[s] = e
    crossings[c] = tuple(X)


# Kink patterns (sign, side of loop) -> crossing tuple in terms of the
# incoming edge e, the loop x and the outgoing edge f.
_KINKS = {
    (-1, "R"): lambda e, x, f: (e, x, x, f),
    (1, "L"): lambda e, x, f: (e, f, x, x),
    (-1, "L"): lambda e, x, f: (x, e, f, x),
    (1, "R"): lambda e, x, f: (x, x, f, e),
}


def _r1(D, site):
    (e,) = site.edges
    if e not in D.occurrences:
        raise SiteError(f"no edge {e}")
    key = (int(site.variant or 1), site.side or "L")
    if key not in _KINKS:
        raise SiteError(f"bad R1 variant {key}")
    x, f = _fresh(D, 2)
    X = list(D.crossings)
    _replace(X, *D.head[e], f)
    X.append(_KINKS[key](e, x, f))
    new = LinkDiagram(X)
    return MoveResult(new, {g: g for g in D.occurrences} | {f: e},
                      RMoveSite(1, (x,), inverse=True), fresh=[x, f])


def _r1_inverse(D, site):
    (x,) = site.edges
    occ = D.occurrences.get(x)
    if occ is None:
        raise SiteError(f"no edge {x}")
    (c1, s1), (c2, s2) = occ
    if c1 != c2 or (s1 - s2) % 4 not in (1, 3):
        raise SiteError(f"edge {x} is not a kink loop")
    c = c1
    Xc = D.crossings[c]
    rest = [s for s in range(4) if s not in (s1, s2)]
    e = next(Xc[s] for s in rest if D.head[Xc[s]] == (c, s))
    f = next(Xc[s] for s in rest if D.tail[Xc[s]] == (c, s))
    if e == f:
        raise SiteError("removing this kink would leave a crossingless component")
    X = [Y for i, Y in enumerate(D.crossings) if i != c]
    far = D.head[f]
    far = (far[0] - (far[0] > c), far[1])
    _replace(X, *far, e)
    new = LinkDiagram(X)
    return MoveResult(new, {g: g for g in new.occurrences},
                      _undo_site(new, D, [RMoveSite(1, (e,), side=side, variant=sign)
                                          for sign in (1, -1) for side in "LR"]))


def _undo_site(new, old, candidates):
    """The candidate forward site that turns ``new`` back into ``old``."""
    from .pd import isomorphic
    for cand in candidates:
        try:
            if isomorphic(apply_rmove(new, cand).diagram, old):
                return cand
        except DiagramError:
            continue
    raise SiteError("could not reconstruct the forward move")


# compass positions in counterclockwise order
_CCW = ("E", "N", "W", "S")


def _crossing(pos, under_in):
    """Crossing tuple from edges at compass points, ccw from ``under_in``."""
    k = _CCW.index(under_in)
    return tuple(pos[_CCW[(k + i) % 4]] for i in range(4))


def _r2(D, site):
    a, b = site.edges
    if a == b or a not in D.occurrences or b not in D.occurrences:
        raise SiteError(f"bad R2 edges {site.edges}")
    side_a = (site.side or "R")[0]
    F = D.face_on(a, side_a)
    if len(site.side) > 1:
        side_b = site.side[1]
        if D.face_on(b, side_b) != F:
            raise SiteError(f"edge {b} does not bound face {F} on side {side_b}")
    else:
        sides = [s for s in "LR" if D.face_on(b, s) == F]
        if len(sides) != 1:
            raise SiteError(f"edge {b} must border face {F} on exactly one side")
        side_b = sides[0]
    finger_over = (site.variant or "over") == "over"
    m, a2, n, b2 = _fresh(D, 4)
    X = list(D.crossings)
    _replace(X, *D.head[a], a2)
    _replace(X, *D.head[b], b2)
    # local picture: b horizontal below the face, a horizontal above it,
    # the finger of a dips down across b at two crossings, west and east
    b_east = side_b == "L"
    a_east = side_a == "R"
    west, east = {}, {}
    if b_east:
        west.update(W=b, E=n)
        east.update(W=n, E=b2)
    else:
        east.update(E=b, W=n)
        west.update(E=n, W=b2)
    if a_east:
        first, second = west, east
    else:
        first, second = east, west
    first.update(N=a, S=m)
    second.update(S=m, N=a2)
    if finger_over:
        under_in = "W" if b_east else "E"
        crossings = [_crossing(first, under_in), _crossing(second, under_in)]
    else:
        crossings = [_crossing(first, "N"), _crossing(second, "S")]
    X.extend(crossings)
    new = LinkDiagram(X)
    emap = {g: g for g in D.occurrences} | {a2: a, b2: b}
    return MoveResult(new, emap, RMoveSite(2, (m, n), inverse=True), fresh=[m, a2, n, b2])


def _r2_inverse(D, site):
    m, n = site.edges
    for e in (m, n):
        if e not in D.occurrences:
            raise SiteError(f"no edge {e}")
    (c1, _), (c2, _) = D.tail[m], D.head[m]
    if c1 == c2 or {D.tail[n][0], D.head[n][0]} != {c1, c2}:
        raise SiteError(f"edges {m}, {n} do not bound a bigon")
    fm = {D.face_left(m), D.face_right(m)}
    fn = {D.face_left(n), D.face_right(n)}
    bigon = [f for f in fm & fn if len(D.faces[f]) == 2]
    if not bigon:
        raise SiteError(f"edges {m}, {n} do not bound a bigon face")

    def level(e, c):
        s = D.head[e][1] if D.head[e][0] == c else D.tail[e][1]
        return "under" if s in (UNDER_IN, UNDER_OUT) else "over"

    if level(m, c1) != level(m, c2):
        raise SiteError("bigon strands alternate; not an R2 bigon")
    chains = []
    for e in (m, n):
        tc, ts = D.tail[e]
        hc, hs = D.head[e]
        e_in = D.crossings[tc][(ts + 2) % 4]
        e_out = D.crossings[hc][(hs + 2) % 4]
        chains.append((e_in, e, e_out))
    rename = {}

    def find(e):
        while e in rename:
            e = rename[e]
        return e

    for e_in, mid, e_out in chains:
        rename[mid] = e_in
        rename[e_out] = e_in
    X = []
    for i, Y in enumerate(D.crossings):
        if i in (c1, c2):
            continue
        X.append(tuple(find(v) for v in Y))
    if not X:
        raise SiteError("removing this bigon leaves no crossings")
    new = LinkDiagram(X)
    a, b = find(chains[0][0]), find(chains[1][0])
    cands = [RMoveSite(2, (a, b), side=s, variant=level(m, c1)) for s in "LR"]
    return MoveResult(new, {g: g for g in new.occurrences}, _undo_site(new, D, cands))


def _r3(D, site):
    sides = tuple(site.edges)
    if len(set(sides)) != 3 or any(e not in D.occurrences for e in sides):
        raise SiteError(f"bad R3 edges {sides}")
    ends = {e: (D.tail[e], D.head[e]) for e in sides}
    cross = {c for e in sides for (c, _) in ends[e]}
    if len(cross) != 3 or any(ends[e][0][0] == ends[e][1][0] for e in sides):
        raise SiteError("R3 edges do not form a triangle")
    faces = set.intersection(*({D.face_left(e), D.face_right(e)} for e in sides))
    if not any(len(D.faces[f]) == 3 for f in faces):
        raise SiteError("R3 edges do not bound a triangular face")

    def is_over(cs):
        return cs[1] in (OVER_A, OVER_B)

    levels = sorted((is_over(ends[e][0]), is_over(ends[e][1])) for e in sides)
    if levels[0] != (False, False) or levels[2] != (True, True):
        raise SiteError("triangle strands are not stacked; R3 does not apply")
    X = list(D.crossings)
    changes = []
    for e in sides:
        (pc, ps), (qc, qs) = ends[e]
        e_in = D.crossings[pc][(ps + 2) % 4]
        e_out = D.crossings[qc][(qs + 2) % 4]
        if {e_in, e_out} & set(sides):
            raise SiteError("triangle strands are not independent")
        changes += [(pc, (ps + 2) % 4, e), (pc, ps, e_out),
                    (qc, qs, e_in), (qc, (qs + 2) % 4, e)]
    for c, s, v in changes:
        _replace(X, c, s, v)
    new = LinkDiagram(X)
    emap = {g: g for g in D.occurrences if g not in sides}
    return MoveResult(new, emap, RMoveSite(3, sides))


def find_sites(D, kind, inverse=False):
    """All sites of the given kind at which the move applies."""
    out = []
    if kind == 1 and not inverse:
        for e in D.edges:
            for sign in (1, -1):
                for side in "LR":
                    out.append(RMoveSite(1, (e,), side=side, variant=sign))
    elif kind == 1:
        for e, ((c1, s1), (c2, s2)) in sorted(D.occurrences.items()):
            if c1 == c2 and (s1 - s2) % 4 in (1, 3):
                out.append(RMoveSite(1, (e,), inverse=True))
    elif kind == 2 and not inverse:
        for f, bound in enumerate(D.faces):
            es = [e for e, _ in bound]
            for a, sa in bound:
                for b, sb in bound:
                    if a != b and es.count(b) == 1:
                        for v in ("over", "under"):
                            out.append(RMoveSite(2, (a, b), side=sa + sb, variant=v))
    elif kind == 2:
        for bound in D.faces:
            if len(bound) == 2 and bound[0][0] != bound[1][0]:
                s = RMoveSite(2, (bound[0][0], bound[1][0]), inverse=True)
                try:
                    apply_rmove(D, s)
                except DiagramError:
                    continue
                out.append(s)
    elif kind == 3:
        for bound in D.faces:
            if len(bound) == 3:
                s = RMoveSite(3, tuple(e for e, _ in bound))
                try:
                    apply_rmove(D, s)
                except DiagramError:
                    continue
                out.append(s)
    return out
