"""Smoke test for the capdisc Python extension.

Uses an installed `capdisc` module if there is one (e.g. after
`maturin develop -m crates/py/Cargo.toml`); otherwise loads the shared
library from target/release or target/debug after
`cargo build --release -p capdisc-py`.
"""

import importlib.machinery
import importlib.util
import json
import math
import os
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        import capdisc

        return capdisc
    except ImportError:
        pass
    for profile in ("release", "debug"):
        for name in ("libcapdisc_py.so", "libcapdisc_py.dylib", "capdisc_py.dll"):
            lib = ROOT / "target" / profile / name
            if lib.exists():
                loader = importlib.machinery.ExtensionFileLoader("capdisc", str(lib))
                spec = importlib.util.spec_from_file_location("capdisc", lib, loader=loader)
                module = importlib.util.module_from_spec(spec)
                loader.exec_module(module)
                return module
    sys.exit("capdisc extension not found; run `cargo build --release -p capdisc-py`")


def close(a, b, tol):
    return abs(a - b) <= tol


def main():
    cd = load()

    assert close(cd.stolarsky_constant(2), 0.25, 1e-15)
    assert close(cd.c_uniform(2), 0.1959291678902056, 1e-14)
    assert close(cd.c_asymptotic(2), 0.4336625352920387, 1e-14)
    assert close(cd.c_conjectured("A2"), 0.4467972835040832, 1e-10)
    assert close(cd.c_conjectured("leech"), 0.1557897704986152, 1e-10)
    rows = cd.table1()
    assert [r["rel_error_percent"] for r in rows] == [3, 4, 5, 7], rows

    one = cd.PointConfiguration(2, [[0.0, 0.0, 1.0]])
    r = cd.cap_discrepancy_stolarsky(one)
    assert close(r.value, 1 / math.sqrt(3), 1e-15), r

    fib = cd.PointConfiguration.fibonacci(377)
    assert len(fib) == 377 and fib.d == 2 and fib.is_uniform
    s = cd.cap_discrepancy_stolarsky(fib)
    mc = cd.cap_discrepancy_montecarlo(fib, samples=200_000, seed=3)
    assert mc.stderr > 0 and mc.samples == 200_000
    assert abs(mc.squared - s.squared) <= 4 * mc.squared_stderr
    assert s.value >= s.bounds["uniform_cstar"]
    assert json.loads(s.to_json())["method"] == "stolarsky"

    table = cd.moment_table(cd.PointConfiguration.cross_polytope(2), 6)
    assert all(abs(t["s"]) < 1e-15 for t in table if t["parity"] == "odd")
    assert min(cd.moment_sums(fib, 50)) >= -1e-12

    e = cd.energy_deficit(cd.PointConfiguration.random(2, 50, seed=1), 1.0)
    assert close(e["deficit"], e["continuous"] - e["discrete"], 1e-15)

    z_closed = cd.epstein_zeta("E8", 6.0)
    z_theta = cd.epstein_zeta("E8", 6.0, method="theta")
    assert close(z_closed, z_theta, 1e-10 * abs(z_closed))

    gc = cd.curve_discrepancy()
    assert close(gc.value, math.sqrt(0.25 * (4 / 3 - 4 / math.pi)), 2e-3 * gc.value)

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "fib.txt")
        fib.write(path)
        back = cd.PointConfiguration.read(path)
        assert back.points == fib.points

    try:
        cd.PointConfiguration(2, [[1.0, 1.0, 0.0]])
    except ValueError:
        pass
    else:
        raise AssertionError("non-unit point accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
