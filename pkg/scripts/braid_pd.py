"""Write PD codes for braid closures.

Used once to produce the alternative census diagrams and the T(m, m)
torus links stored in ``src/cupcube/data/census.toml``::

    python scripts/braid_pd.py 3 1 -2 1 -2      # strands, then the word
"""
import sys


def closure_pd(strands, word):
    """PD tuples of the closure of ``word``.

    Letter ``i`` crosses positions ``i`` and ``i+1`` with strands running
    upward; positive letters give positive crossings.  Edges are numbered
    1, 2, ... along each component in turn.
    """
    seg = list(range(strands))
    fresh = strands
    raw, succ = [], {}
    for letter in word:
        i = abs(letter) - 1
        sw, se = seg[i], seg[i + 1]
        nw, ne = fresh, fresh + 1
        fresh += 2
        if letter > 0:
            raw.append((se, ne, nw, sw))  # under SE -> NW, over SW -> NE
        else:
            raw.append((sw, se, ne, nw))  # under SW -> NE, over SE -> NW
        succ[sw], succ[se] = ne, nw
        seg[i], seg[i + 1] = nw, ne
    alias = {seg[p]: p for p in range(strands)}
    raw = [tuple(alias.get(s, s) for s in x) for x in raw]
    succ = {alias.get(a, a): alias.get(b, b) for a, b in succ.items()}
    label, k = {}, 0
    for start in sorted(succ):
        s = start
        while s not in label:
            k += 1
            label[s] = k
            s = succ[s]
    return [tuple(label[s] for s in x) for x in raw]


if __name__ == "__main__":
    k = int(sys.argv[1])
    w = [int(v) for v in sys.argv[2:]]
    print(" ".join("X(%d,%d,%d,%d)" % x for x in closure_pd(k, w)))
