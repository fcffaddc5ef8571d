"""Runs every --json command of the CLI and validates the output against schema/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def integers_as_strings(node, path="$"):
    if isinstance(node, bool) or node is None or isinstance(node, str):
        return []
    if isinstance(node, int):
        return [path]
    if isinstance(node, float):
        return []
    if isinstance(node, list):
        return [p for i, v in enumerate(node) for p in integers_as_strings(v, f"{path}[{i}]")]
    return [p for k, v in node.items() if k != "runtime_ms" for p in integers_as_strings(v, f"{path}.{k}")]


def main():
    tool, schema_dir = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
    schemas = {
        "verify": "report", "det": "det", "bound": "bound", "feasible": "feasible",
        "search-maxdet": "search-maxdet", "search-pairs": "search-pairs", "table": "table",
    }
    validators = {
        kind: jsonschema.Draft202012Validator(json.loads((schema_dir / f"{name}.schema.json").read_text()))
        for kind, name in schemas.items()
    }

    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)
        setup = [
            ["construct", "--family", "paley1", "--p", "11", "--out", str(tmp / "h12.pm1")],
            ["construct", "--family", "brouwer-whiteman", "--p", "3", "--out", str(tmp / "w25.pm1")],
            ["construct", "--family", "osds", "--q", "7", "--out", str(tmp / "m31.pm1")],
            ["construct", "--family", "cohn", "--q", "5", "--out", str(tmp / "c6.pm1")],
            ["search", "pairs", "--k", "7", "--out", str(tmp / "pair7.pm1")],
            ["construct", "--family", "two-circulant", "--pair", str(tmp / "pair7.pm1"), "--out", str(tmp / "b15.pm1")],
        ]
        for args in setup:
            subprocess.run([tool, *args], check=True, capture_output=True)

        runs = [
            ["verify", "--in", str(tmp / "h12.pm1"), "--expect", "paley1"],
            ["verify", "--in", str(tmp / "w25.pm1")],
            ["verify", "--in", str(tmp / "m31.pm1"), "--expect", "osds"],
            ["verify", "--in", str(tmp / "c6.pm1")],
            ["verify", "--in", str(tmp / "b15.pm1"), "--expect", "two-circulant"],
            ["det", "--in", str(tmp / "w25.pm1")],
            ["bound", "--n", "23"],
            ["bound", "--n", "6"],
            ["bound", "--n", "7", "--which", "ehlich-partition"],
            ["bound", "--n", "63"],
            ["feasible", "--n", "22"],
            ["feasible", "--n", "25"],
            ["search", "maxdet", "--n", "5"],
            ["search", "pairs", "--k", "5", "--all"],
            ["table", "--min", "23", "--max", "35", "--search-pairs"],
        ]
        failures = 0
        for args in runs:
            proc = subprocess.run([tool, *args, "--json"], capture_output=True, text=True)
            label = " ".join(pathlib.Path(a).name if a.startswith(str(tmp)) else a for a in args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            doc = json.loads(proc.stdout)
            errors = list(validators[doc["kind"]].iter_errors(doc))
            bare = integers_as_strings(doc)
            for e in errors:
                print(f"FAIL {label}: {e.json_path}: {e.message}")
            for p in bare:
                print(f"FAIL {label}: bare JSON integer at {p}")
            failures += bool(errors or bare)
            if not (errors or bare):
                print(f"ok   {label} ({doc['kind']})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
