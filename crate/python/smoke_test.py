"""Smoke test for the homquiver extension module.

Run from anywhere: the script builds the extension with cargo when it is not
importable, copies it next to itself as homquiver.so and imports it.
"""

import importlib
import math
import pathlib
import shutil
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def load():
    sys.path.insert(0, str(HERE))
    try:
        return importlib.import_module("homquiver")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "homquiver-python"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libhomquiver_py.so"
    shutil.copyfile(lib, HERE / "homquiver.so")
    return importlib.import_module("homquiver")


def main():
    hq = load()

    e8 = hq.RootSystem("E", 8)
    assert len(e8.positive_roots()) == 120
    a3 = hq.RootSystem("A", 3)
    assert a3.cartan_matrix()[0] == [2, -1, 0]
    assert a3.chevalley([2, -2, 0, 0], [0, 2, -2, 0]) in (1, -1)
    try:
        hq.RootSystem("B", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("non-ADE type accepted")

    for sigma in ([1], [2], [1, 3], None):
        report = hq.Parabolic("A", 3, sigma).simplicity()
        assert report.verdict == "SIMPLE", (sigma, report)
        assert report.hom_dimension == 1
    comps = hq.Parabolic("E", 6, [1]).levi_components()
    assert [rank for _, rank in comps] == [16]

    flag = hq.Parabolic("A", 3)
    assert flag.intersection_number([1, 4, 1]) == 2
    assert flag.intersection_number([3, 2, 1]) == 1
    assert sum(v for _, v in flag.intersection_table()) > 0
    assert flag.c1() == [2, 2, 2]
    assert flag.cone_verdict([2, 2, 2]) == "STABLE"
    assert len(flag.cone()) == 6

    a2 = hq.Parabolic("A", 2, [1, 2])
    polys = [i.polynomial for i in a2.cone()]
    assert polys == ["-4a^2 + 2ab + 5b^2", "5a^2 + 2ab - 4b^2"], polys
    lower, upper = a2.boundary()
    assert math.isclose(lower[5], (-1 + math.sqrt(21)) / 5, rel_tol=1e-12)
    assert math.isclose(upper[5], (1 + math.sqrt(21)) / 4, rel_tol=1e-12)

    king = a2.king([1, 10])
    assert not king.semistable and king.witness is not None
    assert a2.king([1, 1]).stable
    assert a2.cone_verdict([1, 10]) == "UNSTABLE"

    dot = flag.quiver_dot("reduced")
    assert dot.count("->") == 6

    try:
        hq.Parabolic("E", 8).intersection_table()
    except hq.BudgetExceededError:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("homquiver python smoke test: ok")


if __name__ == "__main__":
    main()
