"""Runs cnlt subcommands with --json and validates the output against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ["dump-algebra", "--n", "1"],
    ["dump-algebra", "--n", "3"],
    ["gen-conditions", "--n", "2"],
    ["enumerate", "--n", "2", "--k", "2", "--max-degree", "8"],
    ["enumerate", "--n", "1", "--k", "1", "--max-degree", "6", "--list", "--grading", "homogeneous"],
    ["count-leading-terms", "--n", "3", "--k", "2"],
    ["qseries", "--n", "2", "--k", "3", "--max-degree", "12"],
    ["check-identity", "--n", "2", "--k", "2", "--max-degree", "8"],
    ["check-identity", "--n", "1", "--k", "2", "--max-degree", "8"],
    ["verify-theorem", "--n", "2", "--k", "1", "--construct"],
    ["verify-theorem", "--n", "1", "--k", "2", "--j", "2"],
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for args in RUNS:
        schema = json.loads((schema_dir / f"{args[0]}.schema.json").read_text())
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            status = "ok"
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            status = f"invalid: {str(e).splitlines()[0]}"
        print(" ".join(args), f"(exit {proc.returncode})", status)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
