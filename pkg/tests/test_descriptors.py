import json
from pathlib import Path

import pytest

from cupcube.algebra.descriptors import (
    DescriptorError, group_from, module_from, psi_from, read, ring_from,
)
from cupcube.trilinear import psi_check

DATA = Path(__file__).parent / "data"


def test_bundled_descriptors_load():
    G = group_from(read(DATA / "z3.toml"))
    M = module_from(read(DATA / "ring2.toml"), G)
    assert M.ring.n == 2 and M.d == 2
    psi = psi_from(read(DATA / "psi0.toml"), (M, M, M))
    assert psi.codomain.degree == 1 and psi_check(psi) is None

    S3 = group_from(read(DATA / "s3.toml"))
    assert S3.order == 6
    std = module_from(read(DATA / "std3.toml"), S3)
    psi = psi_from(read(DATA / "psi_std3.toml"), (std, std, std))
    assert psi_check(psi) is None


def test_json_and_toml_agree(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"group": {"kind": "cyclic", "order": 3}}))
    assert group_from(read(p)).table == group_from(read(DATA / "z3.toml")).table


@pytest.mark.parametrize("data", [
    {"group": {"kind": "klein"}},
    {"group": {"kind": "cyclic"}},
    {"group": {"kind": "permutation", "gens": {"a": [0, 0, 1]}}},
])
def test_bad_groups(data):
    with pytest.raises(DescriptorError):
        group_from(data)


def test_bad_module_and_ring():
    G = group_from({"group": {"kind": "cyclic", "order": 3}})
    with pytest.raises(DescriptorError):
        module_from({"module": {"n": 2, "rank": 2, "action": {"t": [[1, 1], [0, 1]]}}}, G)
    with pytest.raises(DescriptorError):
        module_from({"module": {"kind": "exotic"}}, G)
    with pytest.raises(DescriptorError):
        ring_from({"ring": {"n": 3, "poly": [1, 2]}})


def test_unreadable(tmp_path):
    p = tmp_path / "x.toml"
    p.write_text("not = [valid")
    with pytest.raises(DescriptorError):
        read(p)
