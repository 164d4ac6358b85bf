#!/usr/bin/env python3
"""Smoke test for the fekete_py extension module.

Builds nothing itself: expects `cargo build -p fekete-python` (or --release)
to have produced target/<profile>/libfekete_py.so, which it copies next to a
temporary import path under the name Python expects.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path


def locate_extension(repo_root: Path) -> Path:
    candidates = [
        repo_root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libfekete_py.so", "fekete_py.so", "libfekete_py.dylib")
    ]
    existing = [p for p in candidates if p.exists()]
    if not existing:
        sys.exit(
            "extension not found; run `cargo build -p fekete-python` first "
            f"(searched {', '.join(str(c) for c in candidates)})"
        )
    return max(existing, key=lambda p: p.stat().st_mtime)


def main() -> int:
    repo_root = Path(__file__).resolve().parent.parent
    ext = locate_extension(repo_root)
    staging = Path(tempfile.mkdtemp(prefix="fekete-py-"))
    shutil.copy2(ext, staging / "fekete_py.so")
    sys.path.insert(0, str(staging))

    import fekete_py as fk

    failures = []

    def check(name, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name} {detail}")
        if not ok:
            failures.append(name)

    check("dim_pn(2,2) == 6", fk.dim_pn(2, 2) == 6)
    check("ln_sum(2,2) == 8", fk.ln_sum(2, 2) == 8)

    pts = fk.padua(4)
    check("padua(4) has 15 points", len(pts) == 15, f"got {len(pts)}")
    check("padua provenance", pts.provenance == "padua")
    coords = pts.points()
    in_square = all(
        abs(z.real) <= 1 + 1e-14 and abs(z.imag) < 1e-14 for p in coords for z in p
    )
    check("padua points lie in the real square", in_square)

    first = fk.leja_disk(4)
    want = [1 + 0j, -1 + 0j, 1j, -1j]
    check(
        "disk Leja starts 1, -1, i, -i",
        all(abs(a - b) < 1e-14 for a, b in zip(first, want)),
        f"got {first}",
    )

    rl = fk.r_leja(3)
    check(
        "R-Leja starts 1, -1, 0",
        all(abs(a - b) < 1e-14 for a, b in zip(rl, [1.0, -1.0, 0.0])),
        f"got {rl}",
    )

    want_b2 = 1.0 / math.sqrt(2.0 * math.e)
    check(
        "tdiam_ball(2) = 1/sqrt(2e)",
        abs(fk.tdiam_ball(2) - want_b2) < 1e-12,
        f"{fk.tdiam_ball(2):.12f}",
    )
    check(
        "tdiam_simplex(2) = 1/(2e)",
        abs(fk.tdiam_simplex(2) - 1.0 / (2.0 * math.e)) < 1e-12,
    )

    lg = fk.l_functional("chebyshev")
    check(
        "L(G_chebyshev) lemma constant",
        abs(lg - (-0.6806085842)) < 1e-6,
        f"{lg:.10f}",
    )
    check(
        "bos_vdm_limit(equilibrium) near 0.42597",
        abs(fk.bos_vdm_limit("equilibrium") - 0.42597) < 5e-5,
    )

    stage = fk.discrete_leja("interval", 8)
    check("discrete Leja stage size", len(stage) == 9)
    lam = stage.lebesgue_constant("interval")
    check("interval Leja Lebesgue constant is modest", 1.0 <= lam <= 20.0, f"{lam:.3f}")

    est = fk.approx_fekete("interval", 12, 8).tdiam_estimate()
    check("interval tdiam estimate above capacity", 0.5 < est < 1.0, f"{est:.4f}")

    bos = fk.bos_array(6)
    check("bos_array(6) has 28 points", len(bos) == 28)
    check(
        "bos moment distance to disk equilibrium is small",
        bos.moment_distance("disk") < 0.2,
    )

    inter = fk.intertwined(3)
    check("intertwined stage size", len(inter) == 10)

    ok, worst = fk.kergin_checks(
        [[0.1, 0.2], [0.9, -0.3], [-0.5, 0.4], [0.1, 0.2]], seed=0
    )
    check("kergin checks pass", ok, f"worst error {worst:.2e}")

    if failures:
        print(f"{len(failures)} smoke checks failed")
        return 1
    print("all smoke checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
