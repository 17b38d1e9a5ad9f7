"""Load groups, modules, rings and forms from TOML or JSON descriptors.

The schemas are small tables; see the README for worked examples::

    [group]
    kind = "cyclic"            # or "permutation" / "table"
    order = 3

    [module]
    n = 2
    rank = 2
    action = { t = [[0, 1], [1, 1]] }

Integers are decimal throughout.  Permutation images are 0-based.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from .groups import FiniteGroup, GModule, GroupError, ModuleError
from .ring import QuotRing


class DescriptorError(ValueError):
    pass


def read(path):
    """Parse a ``.toml`` or ``.json`` file into a dict."""
    path = Path(path)
    text = path.read_text()
    try:
        if path.suffix == ".json":
            return json.loads(text)
        return tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise DescriptorError(f"{path}: {exc}") from exc


def _section(data, key):
    return data.get(key, data)


def group_from(data):
    d = _section(data, "group")
    kind = d.get("kind", "cyclic")
    try:
        if kind == "cyclic":
            return FiniteGroup.cyclic(int(d["order"]), d.get("name", "t"))
        if kind == "symmetric":
            return FiniteGroup.symmetric(int(d["degree"]))
        if kind == "permutation":
            return FiniteGroup.from_permutations({k: tuple(v) for k, v in d["gens"].items()})
        if kind == "table":
            gens = {k: int(v) for k, v in d.get("gens", {}).items()}
            return FiniteGroup(d["table"], gens=gens, labels=d.get("labels"))
    except KeyError as exc:
        raise DescriptorError(f"group descriptor is missing {exc}") from exc
    except GroupError as exc:
        raise DescriptorError(str(exc)) from exc
    raise DescriptorError(f"unknown group kind {kind!r}")


def ring_from(data):
    d = _section(data, "ring")
    try:
        return QuotRing(int(d["n"]), tuple(d.get("poly", (1, 1, 1))))
    except KeyError as exc:
        raise DescriptorError(f"ring descriptor is missing {exc}") from exc
    except ValueError as exc:
        raise DescriptorError(str(exc)) from exc


def module_from(data, group):
    """Build a :class:`GModule` over ``group``.

    ``kind = "ring"`` turns ``Z[t]/(n, p)`` into a module of rank ``deg p``
    where each generator acts by multiplication with the given ring
    element, written as a coefficient list.
    """
    d = _section(data, "module")
    kind = d.get("kind", "matrices")
    try:
        if kind == "trivial":
            return GModule.trivial(group, int(d["n"]), int(d.get("rank", 1)))
        if kind == "permutation":
            if not hasattr(group, "perms"):
                raise DescriptorError("permutation module needs a permutation group")
            return GModule.permutation(group, int(d["n"]))
        if kind == "ring":
            R = ring_from(d["ring"])
            mats = {g: R.mul_matrix(R(*c)) for g, c in d["action"].items()}
            M = GModule.from_generators(group, R.n, R.degree, mats, name=f"ring{R.poly}")
            M.ring = R
            return M
        if kind == "matrices":
            return GModule.from_generators(group, int(d["n"]), int(d["rank"]), d["action"])
    except KeyError as exc:
        raise DescriptorError(f"module descriptor is missing {exc}") from exc
    except (ModuleError, GroupError) as exc:
        raise DescriptorError(str(exc)) from exc
    raise DescriptorError(f"unknown module kind {kind!r}")


def psi_from(data, modules):
    """A trilinear form: ``kind = "product"`` (ring multiplication, optionally
    followed by ``project = true``) or ``kind = "tensor"`` with sparse
    entries ``[i, j, k, c0, c1, ...]``."""
    from ..trilinear import TrilinearPsi, product_psi

    d = _section(data, "psi")
    kind = d.get("kind", "product")
    if kind == "product":
        rings = [getattr(M, "ring", None) for M in modules]
        if None in rings or len(set(rings)) != 1:
            raise DescriptorError("product form needs three identical ring modules")
        psi = product_psi(modules[0], rings[0])
        if d.get("project"):
            from ..trilinear import p_project
            psi = p_project(psi)
        return psi
    if kind == "tensor":
        A = ring_from(d["codomain"])
        table = {}
        for entry in d.get("entries", []):
            i, j, k, *c = (int(v) for v in entry)
            table[(i, j, k)] = A(*c)
        return TrilinearPsi.from_function(modules, A, lambda i, j, k: table.get((i, j, k), A.zero),
                                          name=d.get("name", "psi"))
    raise DescriptorError(f"unknown psi kind {kind!r}")
