# Copyright 2026 The loqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Runs every loqc subcommand, validates its JSON against schemas/, checks the
threshold CSV layout and exit codes, and compares repeated runs byte for byte."""

import argparse
import csv
import io
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

CIRCUIT_DETECT = {
    "n_modes": 3,
    "elements": [
        {"type": "bs", "modes": [0, 1], "theta_deg": 45},
        {"type": "bs", "modes": [1, 2], "theta_deg": 30, "phi_deg": 20},
    ],
    "detect": {"modes": [2]},
}
CIRCUIT_PLAIN = {"n_modes": 2, "elements": [{"type": "bs", "modes": [0, 1], "theta_deg": 45}]}
UNITARY = {
    "n": 2,
    "rows": [
        [{"re": 0.6, "im": 0}, {"re": 0, "im": 0.8}],
        [{"re": 0, "im": 0.8}, {"re": 0.6, "im": 0}],
    ],
}


def load_registry(schema_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        schemas[path.name.removesuffix(".schema.json")] = doc
        registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))
    return schemas, registry


def run(binary, args, threads="1"):
    env = dict(os.environ, LOQC_THREADS=threads)
    return subprocess.run([binary, *args], capture_output=True, text=True, env=env, check=False)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("schema_dir", type=Path)
    opts = parser.parse_args()
    schemas, registry = load_registry(opts.schema_dir)
    failures = []

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        (tmp / "detect.json").write_text(json.dumps(CIRCUIT_DETECT))
        (tmp / "plain.json").write_text(json.dumps(CIRCUIT_PLAIN))
        (tmp / "unitary.json").write_text(json.dumps(UNITARY))
        (tmp / "state.json").write_text(
            json.dumps({"n_modes": 2, "terms": [{"occ": [1, 1], "re": 1, "im": 0}]})
        )
        (tmp / "bad.json").write_text("{ nope")

        json_cases = [
            ("run", ["run", "--circuit", str(tmp / "detect.json"), "--occ", "1,1,0"]),
            ("run", ["run", "--circuit", str(tmp / "plain.json"), "--state", str(tmp / "state.json")]),
            ("decompose", ["decompose", "--unitary", str(tmp / "unitary.json")]),
            ("ns", ["ns", "--alpha", "0.577", "--beta", "0.577", "--gamma", "0.577"]),
            ("csign", ["csign", "klm", "--alpha", "1", "--beta", "i", "--gamma", "1", "--delta", "-1"]),
            ("csign", ["csign", "2_27", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "1"]),
            ("csign", ["csign", "2_27", "--refined", "--alpha", "1", "--beta", "1", "--gamma", "0", "--delta", "1"]),
            ("csign", ["csign", "teleported", "--alpha", "1", "--beta", "1", "--gamma", "1", "--delta", "1"]),
            ("teleport", ["teleport", "--n", "1", "--alpha", "0.6", "--beta", "0.8i"]),
            ("teleport", ["teleport", "--n", "3", "--alpha", "1", "--beta", "1"]),
            ("erasure", ["erasure", "--k", "3"]),
            ("erasure", ["erasure"]),
            ("recover_demo", ["recover-demo"]),
            ("recover_demo", ["recover-demo", "--alpha", "1", "--beta", "-1+i"]),
        ]
        for schema_name, args in json_cases:
            first = run(opts.binary, args, "1")
            label = " ".join(args[:2])
            if first.returncode != 0:
                failures.append(f"{label}: exit {first.returncode}: {first.stderr.strip()}")
                continue
            try:
                jsonschema.validate(
                    json.loads(first.stdout), schemas[schema_name], registry=registry,
                    format_checker=jsonschema.Draft202012Validator.FORMAT_CHECKER,
                )
            except jsonschema.ValidationError as e:
                failures.append(f"{label}: schema: {e.message}")
            for threads in ("4", "1"):
                again = run(opts.binary, args, threads)
                if again.stdout != first.stdout:
                    failures.append(f"{label}: output differs with LOQC_THREADS={threads}")

        csv_args = ["threshold", "--f-min", "0", "--f-max", "1", "--f-step", "0.25", "--trials", "20000", "--seed", "7"]
        out = run(opts.binary, csv_args, "1")
        rows = list(csv.reader(io.StringIO(out.stdout)))
        if out.returncode != 0 or rows[0] != ["f", "F_z_analytic", "F_z_mc", "stderr"] or len(rows) != 6:
            failures.append(f"threshold: unexpected CSV {rows[:2]!r}")
        else:
            for row in rows[1:]:
                try:
                    f, fz, mc, se = map(float, row)
                except ValueError:
                    failures.append(f"threshold: non-numeric row {row!r}")
                    continue
                if not (0 <= f <= 1 and 0 <= fz <= 1 and 0 <= mc <= 1 and se >= 0):
                    failures.append(f"threshold: out-of-range row {row!r}")
        if run(opts.binary, csv_args, "4").stdout != out.stdout:
            failures.append("threshold: output differs across thread counts")

        bad_input = [
            ["teleport", "--n", "0", "--alpha", "1", "--beta", "0"],
            ["threshold", "--f", "-0.1"],
            ["decompose", "--unitary", str(tmp / "bad.json")],
            ["decompose", "--unitary", str(tmp / "missing.json")],
            ["ns", "--alpha", "1"],
            ["nonsense"],
        ]
        for args in bad_input:
            r = run(opts.binary, args)
            if r.returncode != 1 or not r.stderr:
                failures.append(f"{' '.join(args)}: expected exit 1 with a diagnostic, got {r.returncode}")

        target = tmp / "out.json"
        r = run(opts.binary, ["--out", str(target), "erasure", "--k", "2"])
        if r.returncode != 0 or r.stdout or json.loads(target.read_text())["correctable"] != 21:
            failures.append("--out: file output broken")

    for f in failures:
        print("FAIL", f)
    print(f"{len(json_cases)} JSON cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
