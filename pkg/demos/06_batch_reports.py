"""Driving the batch runner programmatically.

Every CLI run writes a report whose body is canonical JSON: byte-identical
across repeats of the same config, with timestamp and duration isolated in a
header. This script runs a few commands in-process and inspects the outputs.
"""

import json
import pathlib
import tempfile

from schurlab import serialize
from schurlab.cli import main

workdir = pathlib.Path(tempfile.mkdtemp(prefix="schurlab-demo-"))
print(f"writing reports under {workdir}\n")

print("=== constant-1 sweep ===")
out = workdir / "bks.json"
code = main(["bks", "--p", "1", "--theta", "0.5", "--dims", "2,4,6",
             "--trials", "500", "--seed", "7", "--out", str(out)])
body = json.loads(out.read_text())["body"]
print(f"  exit {code}, max ratio {body['results']['max_ratio']:.6f}")

print("\n=== determinism check ===")
out2 = workdir / "bks2.json"
main(["bks", "--p", "1", "--theta", "0.5", "--dims", "2,4,6",
      "--trials", "500", "--seed", "7", "--out", str(out2)])
b1 = serialize.dumps_canonical(json.loads(out.read_text())["body"])
b2 = serialize.dumps_canonical(json.loads(out2.read_text())["body"])
print(f"  bodies byte-identical: {b1 == b2}")

print("\n=== spectrum table as CSV ===")
csv_out = workdir / "spectrum.csv"
main(["kernel-spectrum", "--kmax", "5", "--nystrom", "512",
      "--quadrature", "512", "--format", "csv", "--out", str(csv_out)])
for line in csv_out.read_text().splitlines():
    if not line.startswith("#"):
        print("  " + line)

print("\n=== input validation maps to exit 1 ===")
code = main(["estimate-constant", "--p", "0.5", "--theta", "0.5", "--trials", "0",
             "--out", str(workdir / "never.json")])
print(f"  trials = 0 -> exit {code}")

print("\n=== certified sandwich report ===")
out3 = workdir / "bound.json"
main(["multiplier-bound", "--kernel", "von-mises", "--p", "0.5",
      "--trials", "4", "--out", str(out3)])
res = json.loads(out3.read_text())["body"]["results"]
print(f"  lower {res['lower']:.4f} <= certified {res['upper']:.4f}")
print(f"  scope note: {res['lower_scope']}")
