#!/usr/bin/env python3
"""End-to-end smoke test of the colebrook_py extension module.

Builds the extension with cargo, loads it straight from the target
directory, and exercises every exported function against the library's
documented benchmark values. Run from anywhere:

    python3 python/smoke_test.py
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def build_and_load():
    subprocess.run(
        ["cargo", "build", "-p", "colebrook-py", "--quiet"], cwd=ROOT, check=True
    )
    lib = ROOT / "target" / "debug" / "libcolebrook_py.so"
    if not lib.exists():  # macOS fallback
        lib = ROOT / "target" / "debug" / "libcolebrook_py.dylib"
    staging = Path(tempfile.mkdtemp(prefix="colebrook_py_"))
    shutil.copy(lib, staging / "colebrook_py.so")
    sys.path.insert(0, str(staging))
    import colebrook_py

    return colebrook_py


def main():
    cb = build_and_load()
    print(f"loaded colebrook_py {cb.__version__}")

    # The two benchmark conditions, every method, against the documented roots.
    cases = [(5e6, 2.5e-5, 0.010279663295529), (3e4, 9e-3, 0.038630738574792)]
    methods = [
        "fixed-point", "newton-lambda", "newton-x", "halley", "schroder",
        "h3", "secant-lambda", "secant-x", "3pt",
    ]
    for re, rr, lam in cases:
        for method in methods:
            r = cb.solve(re, rr, method=method, tol=1e-12)
            assert r.converged, (method, re, rr)
            assert abs(r.friction - lam) <= 1e-12, (method, r.friction)
            assert abs(r.x - 1.0 / math.sqrt(r.friction)) <= 1e-12
            assert len(r.iterates) == r.iterations + 1
            assert len(r.residuals) >= r.iterations
    print("solve: 2 conditions x 9 methods at |dlambda| <= 1e-12")

    # Certified reference and the approximation ladder against it.
    lam_ref = cb.friction_factor(5e6, 2.5e-5)
    assert abs(lam_ref - 0.010279663295529) <= 1e-12
    for level, bound_pct in [(0, 11.0), (1, 1.1), (2, 0.2)]:
        lam = cb.approx_friction(5e6, 2.5e-5, level=level)
        assert 100.0 * abs(lam - lam_ref) / lam_ref <= bound_pct, (level, lam)
    print("friction_factor + approx_friction: ladder within 11% / 1.1% / 0.2%")

    # Lambert-W: defining identity, the Colebrook route, and the fragile
    # low start that the default start avoids.
    y = cb.w_argument(5e6, 2.5e-5)
    assert abs(y - 5e6 * math.log(10) / 5.02) <= 1e-9 * y
    assert abs(y - 2293411.45) <= 0.005  # the documented table argument
    w, n_iter = cb.lambert_w(y)
    assert abs(w * math.exp(w) - y) <= 1e-9 * y and n_iter <= 10
    lam_w = cb.friction_via_lambert(5e6, 2.5e-5)
    assert abs(lam_w - lam_ref) / lam_ref <= 0.03
    try:
        cb.lambert_w(45871560.0, method="newton", z0=8.0)
    except RuntimeError:
        pass
    else:
        raise AssertionError("z0=8 should not converge for y=45871560")
    print("lambert_w + friction_via_lambert: identity, route, fragile start")

    # Non-convergence is data, not an exception: the trace still carries
    # the partial estimate.
    r = cb.solve(3e4, 9e-3, method="fixed-point", max_iter=1)
    assert not r.converged and r.iterations == 1 and math.isfinite(r.friction)

    # Bad inputs raise ValueError with a usable message.
    for bad in [
        lambda: cb.solve(5e6, 2.5e-5, method="bisection"),
        lambda: cb.solve(-10.0, 2.5e-5),
        lambda: cb.lambert_w(-1.0),
        lambda: cb.sweep_error("approx:3"),
    ]:
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    print("error mapping: non-convergence as data, ValueError on bad input")

    # Small sweeps: iteration counts bounded, error maps positive.
    it = cb.sweep_iterations("newton-x", start="traditional", nx=32, ny=32)
    assert it.metric_kind == "iteration_count"
    assert 1 <= it.max_value <= 8 and it.n_nonconverged == 0
    err = cb.sweep_error("approx:2", n=1024)
    assert err.metric_kind == "relative_error_pct"
    assert 0.0 < err.max_value <= 0.2
    print(f"sweeps: {it!r}, {err!r}")

    print("smoke test PASS")


if __name__ == "__main__":
    main()
