#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds nothing itself: expects the extension to have been compiled with

    cargo build --release -p alglev-py

and loads the produced cdylib straight from the target directory.
"""

import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libalglev_py.so",
        ROOT / "target" / "debug" / "libalglev_py.so",
        ROOT / "target" / "release" / "libalglev_py.dylib",
        ROOT / "target" / "debug" / "libalglev_py.dylib",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("build the extension first: cargo build --release -p alglev-py")
    stage = Path(tempfile.mkdtemp(prefix="alglev-py-"))
    shutil.copy(lib, stage / "alglev_py.so")
    sys.path.insert(0, str(stage))
    import alglev_py

    return alglev_py


def main():
    al = load_module()

    # partitions and the dominance level
    assert al.partition_level("3,2") == 4
    assert al.partition_preceding("3,1") == ["(2,2)"]
    assert al.partition_dominates("3,1", "2,2")
    assert not al.partition_dominates("2,2", "3,1")

    # catalog structures, generation type and invariants
    eta2 = al.catalog("eta", ["2"], 5)
    assert al.gen_type(eta2) == 1
    inv = al.invariants(eta2)
    assert inv["anticommutative"] and not inv["jordan"]
    assert inv["square_dim"] == 1

    assert al.gen_type(al.catalog("G", [], 3)) == 3
    assert al.gen_type(al.catalog("A3", [], 4)) == 2

    # full specters of rational matrices
    assert al.full_specter([["0", "0"], ["1", "0"]]) == "{(0, (2))}"
    try:
        al.full_specter([["0", "-1"], ["1", "0"]])
    except ValueError:
        pass
    else:
        raise AssertionError("rotation matrix must be rejected")

    # the generation-type-1 variety
    assert al.tn_level(0, "0:2.1") == 1
    assert al.tn_level(1, "1:2;0:1") == 3
    assert al.tn_degenerates(1, "1:2", 1, "1:1.1")
    assert not al.tn_degenerates(1, "1:1.1", 1, "1:2")
    primaries = al.tn_primary(1, "1:2")
    assert len(primaries) == 2

    # primary witnesses round-trip through the .deg format and verify
    deg = al.primary_witness(1, "1:2", 1, "1:1.1")
    assert al.check_witness(deg) == "VERIFIED"

    # tables and classification lists
    table1 = al.emit_table(1, 5)
    assert "T_0^{2,2}" in table1
    rows = al.classify_level2(5)
    assert any("eta_2" in r for r in rows)
    jordan = al.classify_filter(4, "jordan")
    assert jordan == [
        "k^2 x|t_0 D2^{0,0}  [(a,b) = (0,0)]",
        "k^2 x|t_0 D2^{1,1}  [(a,b) = (1,1)]",
        "F^{1,1} + k  [(a,b) = (1,1)]",
    ]

    # the generation-type-2 criterion
    ext_a3 = al.catalog("ext_A3", [], 4)
    assert al.g2_check(ext_a3)

    print("python bindings smoke test: all checks passed")


if __name__ == "__main__":
    main()
