"""Schema validity, determinism and exit codes of the command-line reports.

usage: cli_reports.py <pathco binary> <repository root>
"""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, root = sys.argv[1], pathlib.Path(sys.argv[2])
schema = json.loads((root / "schema" / "report.schema.json").read_text())
validator = jsonschema.Draft202012Validator(schema)
quivers = root / "quivers"
failures = []


def run(*args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout


def report(name, *args, code=0):
    rc, out = run(*args, "--json")
    if rc != code:
        failures.append(f"{name}: exit {rc}, expected {code}")
        return None
    doc = json.loads(out)
    errors = sorted(validator.iter_errors(doc), key=str)
    if errors:
        failures.append(f"{name}: schema violation: {errors[0].message} at {list(errors[0].path)}")
    if json.loads(json.dumps(doc)) != doc:
        failures.append(f"{name}: JSON does not round-trip")
    rc2, out2 = run(*args, "--json")
    again = json.loads(out2)
    doc.pop("timings")
    again.pop("timings")
    if json.dumps(doc) != json.dumps(again):
        failures.append(f"{name}: output differs between identical runs")
    return doc


regular = ["loop", "two_cycle", "three_cycle", "no_arrow"]
for q in regular + ["kronecker"]:
    path = str(quivers / f"{q}.txt")
    report(f"{q} gate", "--quiver", path, "gate")
    report(f"{q} asreg", "--quiver", path, "asreg", "--trunc", "10")
    report(f"{q} nakayama", "--quiver", path, "nakayama", "--trunc", "10")
    report(f"{q} cy", "--quiver", path, "cy", "--trunc", "10")
    report(f"{q} ext", "--quiver", path, "ext", "--module", "S1", "--target", "A", "--trunc", "10")
    report(f"{q} ext fd", "--quiver", path, "ext", "--module", "I1:2", "--target", "S1", "--degree", "1")
    report(f"{q} verify", "--quiver", path, "verify", "--cases", "5", "--seed", "11")
    if q != "no_arrow":
        report(f"{q} localcoh", "--quiver", path, "localcoh", "--trunc", "8", "--mmax", "8")

two = str(quivers / "two_cycle.txt")
doc = report("comodule Ext", "--quiver", two, "ext", "--module", "C", "--target", "S1", "--trunc", "8")
if doc and (doc["result"]["dimension"] != 1 or doc["result"]["vertex_support"] != [0, 1]):
    failures.append("Ext^1_C(C, S_1) on the 2-cycle is not one-dimensional at vertex 2")
doc = report("prime field", "--quiver", two, "nakayama", "--field", "F101", "--trunc", "8")
if doc and doc["config"]["field"] != "F101":
    failures.append("field flag not echoed")

report("two loops gated", "--quiver", str(quivers / "two_loops.txt"), "gate", code=3)
report("two loops forced", "--quiver", str(quivers / "two_loops.txt"), "gate", "--force")
report("two loops forced asreg", "--quiver", str(quivers / "two_loops.txt"), "asreg", "--force", code=3)

doc = report("parse error", "--quiver", str(quivers / "missing.txt"), "gate", code=2)
doc = report("usage error", "--quiver", two, "ext", "--module", "X9", code=2)
doc = report("stabilization", "--quiver", str(quivers / "three_cycle.txt"), "ext", "--module", "C", "--target", "S1",
             "--trunc", "2", code=4)
if doc and "suggested_truncation" not in doc["error"]:
    failures.append("stabilization failure does not suggest a truncation")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
