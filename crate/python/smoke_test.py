"""Smoke test for the sptlab extension module.

Build and run from the repository root:

    cargo build -p sptlab-py --release --features extension-module
    cp target/release/libsptlab.so python/sptlab.so
    python3 python/smoke_test.py
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import sptlab  # noqa: E402


def main():
    assert sptlab.euler_p(10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert sptlab.lambert_phi(1, 6) == [0, 1, 3, 4, 7, 6, 12]
    assert sptlab.spt_plus(4)[2:] == [1, 6, 19]

    spt = [v for _, v in sptlab.compute("spt", 6)]
    assert spt == [0, 1, 3, 5, 10, 14, 26]
    assert all(sptlab.spt_oracle(n) == spt[n] for n in range(7))

    assert len(sptlab.partitions(8)) == 22
    assert sptlab.rank_of([3, 1, 1]) == 0
    assert sptlab.crank_of([3, 1, 1]) == -1

    crank = sptlab.crank_table(10)
    assert crank.row(1) == {-1: 1, 0: -1, 1: 1}
    assert crank.moment(4, 4) == 544
    eta4 = sptlab.rank_table(10).symmetrized_moment(4, 4)
    assert eta4 == 6 and isinstance(eta4, Fraction)

    printed = sptlab.verify("thm2", variant="printed")
    assert printed.status == "fail" and printed.met
    assert printed.first_failure["n"] == 1
    assert printed.first_failure["diff"] == Fraction(-1, 6)
    assert json.loads(printed.to_json())["first_failure"]["diff"] == "-1/6"

    assert sptlab.verify("thm2", variant="corrected").passed
    assert sptlab.verify("eq2_specialized", order=20, params=["1/2", "1/3", "1/5", "1/7"]).passed
    assert sptlab.congruence("SPT_plus", 11, 11, 110).passed

    reports = sptlab.verify_all(order=30)
    assert all(r.met for r in reports), [r for r in reports if not r.met]

    try:
        sptlab.verify("bogus")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown identity accepted")

    print(f"sptlab smoke test ok ({len(reports)} reports)")


if __name__ == "__main__":
    main()
