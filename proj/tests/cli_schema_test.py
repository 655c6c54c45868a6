"""Runs the command-line tool on small inputs and validates every JSON report against docs/schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CLI = pathlib.Path(sys.argv[1])
SCHEMAS = pathlib.Path(sys.argv[2])

GRAPHS = {
    "k4.txt": "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
    "c3.txt": "0 1\n1 2\n2 0\n",
    "c4x2.txt": "0 1 2\n1 2 2\n2 3 2\n3 0 2\n",
    "c5chord.txt": "1 2\n2 3\n3 4\n4 5\n5 1\n1 3\n",
    "path.txt": "a b\nb c\n",
    "multi.txt": "0 1 2\n",
    "bad.txt": "0\n",
    "twoblocks.txt": "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n",
}

failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args, expected_code, schema_name=None, cwd=None):
    proc = subprocess.run([str(CLI), *args], capture_output=True, text=True, cwd=cwd)
    label = " ".join(args)
    if proc.returncode != expected_code:
        failures.append(f"{label}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
        return None
    if schema_name is None:
        return proc.stdout
    doc = json.loads(proc.stdout)
    try:
        jsonschema.validate(doc, schema(schema_name))
    except jsonschema.ValidationError as ex:
        failures.append(f"{label}: schema {schema_name}: {ex.message}")
    return doc


def expect(cond, message):
    if not cond:
        failures.append(message)


with tempfile.TemporaryDirectory() as tmp:
    d = pathlib.Path(tmp)
    for name, text in GRAPHS.items():
        (d / name).write_text(text)

    for name in ["k4.txt", "c3.txt", "c5chord.txt", "path.txt", "twoblocks.txt"]:
        run(["check", "base", str(d / name)], 0, "verdict")
    for name in ["k4.txt", "c4x2.txt", "c5chord.txt", "path.txt", "multi.txt", "twoblocks.txt"]:
        run(["check", "indep", str(d / name)], 0, "verdict")

    doc = run(["check", "base", str(d / "k4.txt")], 0, "verdict")
    expect(doc and doc["status"] == "gorenstein" and doc["delta"] == 2, "check base K4")
    doc = run(["check", "indep", str(d / "c4x2.txt")], 0, "verdict")
    expect(doc and doc["delta"] == 3 and doc["m"] == 2, "check indep doubled C4")
    run(["check", "base", str(d / "multi.txt")], 4)
    run(["check", "base", str(d / "bad.txt")], 1)
    run(["check", "base", str(d / "missing.txt")], 1)

    doc = run(["oracle", "base", str(d / "c3.txt"), "--hstar", "--normality", "2"], 0, "oracle")
    expect(doc and doc["witness"]["point"] == [2, 2, 2] and doc["polytope"]["facet_count"] == 3, "oracle base C3")
    doc = run(["oracle", "base", str(d / "c5chord.txt"), "--hstar"], 0, "oracle")
    expect(doc and doc["witness"] is None and not doc["hstar"]["palindromic"], "oracle base C5 with chord")
    doc = run(["oracle", "indep", str(d / "multi.txt")], 0, "oracle")
    expect(doc and doc["delta"] == 3, "oracle indep doubled K2")
    run(["--guard-nodes", "1", "oracle", "base", str(d / "k4.txt"), "--hstar"], 2)

    doc = run(["certify", "base", str(d / "twoblocks.txt")], 0, "certify")
    expect(doc and doc["replay_verified"], "certify base two triangles")
    run(["certify", "base", str(d / "c5chord.txt")], 3, "verdict")
    run(["certify", "indep", str(d / "k4.txt")], 3, "verdict")
    report = run(["certify", "indep", str(d / "c4x2.txt")], 0, "certify")
    if report:
        cert = report["blocks"][0]["certificate"]
        jsonschema.validate(cert, schema("certificate"))
        (d / "cert.json").write_text(json.dumps(cert))
        (d / "report.json").write_text(json.dumps(report))
        doc = run(["replay", str(d / "cert.json"), "--graph", str(d / "c4x2.txt")], 0, "replay")
        expect(doc and doc["all_match"], "replay certificate")
        doc = run(["replay", str(d / "report.json")], 0, "replay")
        expect(doc and doc["all_match"], "replay certify report")

    text = run(["generate", "glue", str(d / "c3.txt"), str(d / "c3.txt"), "--delta", "3"], 0)
    expect(text and "# verdict base: gorenstein delta=3" in text, "generate glue verdict")
    text = run(["generate", "collide", str(d / "k4.txt"), str(d / "k4.txt"), "--dot", str(d / "g.dot")], 0)
    expect(text and "gorenstein delta=2" in text and (d / "g.dot").exists(), "generate collide")
    run(["generate", "subdivide", str(d / "k4.txt"), "--delta", "3"], 4)

    doc = run(["sweep", "--max-vertices", "4", "--kind", "base", "--cross-validate"], 0, "sweep")
    expect(doc and doc["mismatch_count"] == 0 and doc["graphs"] == 5, "sweep base 4")
    doc2 = run(["sweep", "--max-vertices", "4", "--kind", "base", "--cross-validate", "--jobs", "3"], 0, "sweep")
    if doc and doc2:
        for key in ["census", "mismatches", "multi_delta", "certificates_checked"]:
            expect(doc[key] == doc2[key], f"sweep result depends on --jobs ({key})")
    run(["sweep", "--max-vertices", "5", "--kind", "indep"], 0, "sweep")
    run(["sweep", "--max-vertices", "7", "--cross-validate"], 2)

for f in failures:
    print("FAIL", f)
print(f"{'OK' if not failures else 'FAILED'}: cli schema test")
sys.exit(1 if failures else 0)
