#!/usr/bin/env python3
"""Smoke test for the Python bindings.

Builds the extension with cargo (release), copies it next to this script
under the importable module name, and exercises the main types and
operations end to end.
"""

import json
import shutil
import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
MODULE = HERE / "planar_center_py.so"


def build_extension() -> None:
    subprocess.run(
        ["cargo", "build", "-p", "planar-center-py", "--release"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libplanar_center_py.so"
    shutil.copy2(built, MODULE)


def main() -> int:
    if not MODULE.exists():
        build_extension()
    sys.path.insert(0, str(HERE))
    import planar_center_py as pc

    # basic graph machinery on the five-vertex path
    p5 = pc.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert len(p5) == 5
    assert p5.bfs(0) == [0, 1, 2, 3, 4]
    assert p5.radius() == 2 and p5.diameter() == 4
    assert p5.center() == [2]
    q = p5.qcc([1, 2])
    assert q["qcc"] == [0, 4] and q["ecc"] == [4]
    assert (q["e"], q["q"]) == (2, 1)

    # embeddings and face configurations on the octahedron
    octa_edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3]
    octa = pc.PlaneGraph.mpg(pc.Graph(6, octa_edges))
    assert octa.is_maximal_plane()
    assert len(octa.faces()) == 8
    cfg = octa.face_configuration(0)
    assert cfg["k"] == 0 and cfg["case"] == "Case5_1"
    assert octa.is_jordan_separating([0, 1, 3, 4])

    # the face criterion and host synthesis
    verdict = octa.qef_check()
    assert verdict["pass"]
    report = octa.synthesize()
    assert report["radius"] == 2 and report["is_center_subset"]
    host = octa.center_host()  # alpha defaults to diameter + 3
    assert host["is_exact_center"] and host["radius"] == 5

    # round-trip through JSON
    again = pc.PlaneGraph.from_json(octa.to_json())
    assert again.canonical_code() == octa.canonical_code()

    # enumeration and census
    assert len(pc.enumerate_mpgs(6)) == 2
    rows = pc.census(8)
    assert len(rows) == 14 and all(r["qef_pass"] for r in rows)
    rows9 = pc.census(9)
    failures = [r for r in rows9 if not r["qef_pass"]]
    assert failures, "order nine must contain failing classes"

    # the nine-vertex counterexample fixture fails at its hub
    g9 = pc.fixture("g9")
    assert g9["all_pass"]
    g9_pg = pc.PlaneGraph.from_json(json.dumps(g9["graph"]))
    v = g9_pg.qef_check(2)
    assert not v["pass"] and v["failing_vertex"] == g9["named"]["u"]
    assert g9_pg.canonical_code() in {r["code"] for r in failures}

    # flips stay inside the unique order-five class
    t5 = pc.stacked_triangulation(5)
    flipped = next(
        f
        for (u, v) in t5.graph().edges()
        if (f := pc.diagonal_flip(t5, u, v)) is not None
    )
    assert flipped.canonical_code() == t5.canonical_code()

    # the four-vertex augmentation centers exactly on its input
    star = pc.Graph(4, [(0, 1), (1, 2), (1, 3)])
    aug, image = pc.hedetniemi(star)
    assert aug.center() == image

    # products
    frame = pc.cartesian_product(
        pc.Graph(3, [(0, 1), (1, 2)]), pc.Graph(3, [(0, 1), (1, 2), (0, 2)])
    )
    assert len(frame) == 9 and len(frame.edges()) == 15

    # decorated gadgets carry their special-vertex map
    gd = pc.gadget(2, singles="xyz", pairs=["xy", "yz", "zx"])
    assert gd["graph"]["n"] == 6 * 2 - 2 + 6
    assert {"apex", "far_x", "far_xy"} <= set(gd["specials"])

    assert set(pc.fixture_names()) >= {"p5-qcc", "g-star", "g9", "cycle-not-qef"}

    print("smoke test: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
