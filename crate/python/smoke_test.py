"""Smoke test for the grassmoduli_py extension.

Run after `cargo build -p grassmoduli-python`; if the module is not installed
the freshly built library is loaded from target/.
"""

import importlib.util
import json
import pathlib
import sys
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    try:
        import grassmoduli_py

        return grassmoduli_py
    except ImportError:
        pass
    for profile in ("debug", "release"):
        lib = ROOT / "target" / profile / "libgrassmoduli_py.so"
        if lib.exists():
            spec = importlib.util.spec_from_file_location("grassmoduli_py", lib)
            mod = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(mod)
            return mod
    sys.exit("grassmoduli_py not built; run `cargo build -p grassmoduli-python`")


def main():
    gm = load()

    assert gm.dim_gl([2, 2], 4) == 20
    assert gm.dim_rect(4, 2, 2) == 20
    assert gm.dim_rect(20, 20, 10) > 2**64
    assert gm.fund_to_partition([1, 0, 1]) == [2, 1, 1]
    assert gm.partition_to_fund([3, 3, 3, 3], 4) == [0, 0, 0]
    assert gm.lr_coefficient([1, 1], [1, 1], [2, 2]) == 1

    prod = gm.multiply([1, 1], [1, 1], 4)
    assert prod.terms() == [([2, 2], 1), ([2, 1, 1], 1), ([1, 1, 1, 1], 1)]
    assert str(gm.adams2([1, 1], 4)) == "1·[2,2] −1·[2,1,1] 1·[1,1,1,1]"
    assert gm.sym_square([1, 1], 4).dimension(4) == 21
    assert gm.alt_square([1, 1], 4).terms() == [([2, 1, 1], 1)]
    assert json.loads(prod.to_json())[0] == {"partition": [2, 2], "coeff": "1"}

    rows = gm.decompose(2, 2, 1)
    assert [r.partition for r in rows] == [[2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert [r.parity for r in rows] == ["sym", "alt", "sym"]
    assert [r.dimension for r in rows] == [20, 15, 1]
    assert [r.center_weight for r in rows] == [Fraction(-2), Fraction(-1), Fraction(0)]
    assert [r.passes_gs_filter for r in rows] == [True, True, False]

    rep = gm.moduli_report(2, 2, 1)
    assert (rep.dim_vk, rep.n_target) == (1, -1)
    assert rep.routes_agree and rep.gs_singleton and not rep.skew_label_matches
    assert json.loads(rep.to_json())["dim_Vk"] == "1"
    assert gm.moduli_report(1, 1, 3).dim_vk == 3

    try:
        gm.decompose(2, 3, 1)
    except ValueError as e:
        assert "requires p ≥ q" in str(e)
    else:
        raise AssertionError("p < q accepted")

    v = gm.run_verify(4, 1, ["weights", "discrepancies"])
    assert v.ok(), v.checks
    assert "skew-label" in v.discrepancies

    print("smoke test passed")


if __name__ == "__main__":
    main()
