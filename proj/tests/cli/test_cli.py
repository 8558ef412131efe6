#!/usr/bin/env python3
"""Exit-code contract of the gsvidx command line: 0 ok, 1 input, 2 math, 3 mismatch."""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = sys.argv[1]
CORPUS = Path(sys.argv[2])
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=120)


def check(name, proc, code, needle=None):
    out = proc.stdout + proc.stderr
    ok = proc.returncode == code and (needle is None or needle in out)
    print(f"{'ok  ' if ok else 'FAIL'} {name}: exit {proc.returncode}")
    if not ok:
        failures.append(name)
        print(out)


check("elk node", run("elk", "--vars", "x,y", "-X", "x,y"), 0, "elk = 1")
check("elk saddle json", run("elk", "--vars", "x,y", "-X", "x,-y", "--json"), 0, '"elk": -1')
check("gsv cone", run("gsv", "--vars", "x,y,z", "--f", "x^2+y^2-z^2", "-X", "x,y,z"), 0, "gsv_minus = 2")
check("sigma", run("sigma", "--vars", "x,y", "--f", "x^5+y^5+x^2*y^2"), 0, "depth = 2")
check("algebra socle", run("algebra", "--vars", "x,y", "--gens", "x^2,x*y^2,y^3"), 0, "socle (dim 2)")
check("oracle degree", run("oracle", "degree", "--vars", "x,y", "-X", "x^2-y^2,2*x*y"), 0)
check("oracle curve", run("oracle", "curve-gsv", "--vars", "x,y", "--f", "x^2-y^2", "-X", "x,y",
                          "--side", "both"), 0)
check("problem file", run("gsv", str(CORPUS / "cusp_euler.json")), 0)

check("parse error", run("elk", "--vars", "x", "-X", "x^^2"), 1, "position")
check("unknown variable", run("elk", "--vars", "x", "-X", "q"), 1)
check("bad variant", run("gsv", "--vars", "x", "--f", "x^2", "-X", "x", "--variant", "other"), 1)
check("global order outside algebra", run("elk", "--vars", "x", "-X", "x", "--order", "global"), 1)
check("missing file", run("elk", "/nonexistent/problem.json"), 1)

check("not tangent", run("gsv", "--vars", "x,y", "--f", "x^2+y^2", "-X", "1,0"), 2, "remainder")
check("non-isolated", run("elk", "--vars", "x,y", "-X", "x*y,x^2"), 2, "InfiniteDimensional")
check("non-isolated hypersurface", run("sigma", "--vars", "x,y", "--f", "x^2*y^2"), 2, "InfiniteDimensional")

check("bundled corpus", run("validate", str(CORPUS)), 0)
with tempfile.TemporaryDirectory() as tmp:
    check("empty corpus", run("validate", tmp), 0, "0/0")
    shutil.copy(CORPUS / "node.json", tmp)
    bad = json.loads((CORPUS / "saddle.json").read_text())
    bad["expect"]["elk"] = 1
    Path(tmp, "wrong.json").write_text(json.dumps(bad))
    proc = run("validate", tmp)
    check("wrong expectation", proc, 3, "wrong.json")
    check("wrong expectation row", proc, 3, "elk: expected 1, got -1")
    check("validate json", run("validate", tmp, "--json"), 3, '"status": "FAIL"')
check("validate missing dir", run("validate", "/nonexistent/dir"), 1)

sys.exit(1 if failures else 0)
