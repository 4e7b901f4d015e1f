"""Smoke tests for the pyendolie extension."""

import json

import pyendolie as pe


def test_build_and_dims():
    a = pe.build_algebra("sl2-u1", 3)
    assert a.p == 3 and a.dim == 3
    k = pe.trivial_module(a)
    assert k.dim == 1
    assert "sl2-u1" in pe.preset_names()


def test_syzygy_and_group_law():
    a = pe.build_algebra("sl2-u1", 3)
    k = pe.trivial_module(a)
    o1 = pe.syzygy(k, 1)
    o2 = pe.syzygy(k, 2)
    assert (o1.dim, o2.dim) == (2, 1)
    s = pe.strip_projectives(pe.tensor(o1, o1))
    assert pe.is_isomorphic(s, o2) == "yes"
    assert pe.is_endotrivial(o1)
    assert pe.syzygy_degree(o1) == 1


def test_dual_and_decompose():
    a = pe.build_algebra("sl2-g1", 3)
    v1 = pe.weyl_sl2(a, 1)
    parts = pe.decompose(pe.tensor(v1, v1))
    assert sorted(m.dim for m in parts) == [1, 3]
    assert pe.is_isomorphic(pe.dual(v1), v1) == "yes"


def test_census_json():
    a = pe.build_algebra("sl2-u1", 2)
    rep = json.loads(pe.census(a, 3))
    assert rep["classes"] == 1


def test_module_roundtrip(tmp_path):
    a = pe.build_algebra("sl2-b1", 3)
    m = pe.syzygy(pe.trivial_module(a), 1)
    path = str(tmp_path / "m.json")
    pe.save_module(m, path)
    again = pe.load_module(path)
    # loaded modules carry their own algebra instance, so compare
    # instance-independent invariants
    assert again.dim == m.dim
    assert again.algebra.preset == "sl2-b1" and again.algebra.p == 3
    assert pe.is_endotrivial(again)
    assert pe.syzygy_degree(again) == 1


def test_suites():
    t = json.loads(pe.sl2_table(2, 2))
    assert all(c["verdict"] != "fail" for c in t["checks"])
