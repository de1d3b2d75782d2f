"""Runs padic-dyn with --format json and validates every output against docs/schemas."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

CASES = [
    ("roots", 0, ["roots", "--poly", "x^2", "--prime", "7", "--target", "2"]),
    ("roots", 0, ["roots", "--poly", "7x^2 + 3", "--prime", "7", "--target", "3"]),
    ("oracle", 0, ["oracle", "--poly", "x^2 - 7x + 2", "--modulus", "10"]),
    ("lift", 0, ["lift", "--poly", "x^2 - 2", "--prime", "7", "--precision", "3", "--seed", "3"]),
    ("preimages", 0, ["preimages", "--poly", "x^2", "--prime", "7", "--precision", "2", "--target", "2"]),
    ("preimages", 0, ["preimages", "--poly", "x^2", "--prime", "5", "--precision", "2"]),
    ("tree", 0, ["tree", "--poly", "x^2", "--prime", "7", "--seed", "2", "--depth", "2"]),
    ("tree", 0, ["tree", "--poly", "x^2", "--prime", "5", "--precision", "2", "--seed", "0", "--depth", "3"]),
    ("orbit", 0, ["orbit", "--poly", "x^2", "--prime", "7", "--seed", "3", "--steps", "3"]),
    ("orbit", 0, ["orbit", "--poly", "x + 1", "--prime", "3", "--precision", "2", "--seed", "0", "--steps", "2"]),
    ("dist", 0, ["dist", "--lhs", "0,2,0", "--rhs", "0,0,1", "--prime", "5"]),
    ("dist", 0, ["dist", "--lhs", "1,2", "--rhs", "1,3", "--metric", "first"]),
    ("error", 1, ["roots", "--poly", "x", "--prime", "8"]),
    ("error", 1, ["lift", "--poly", "x^2", "--prime", "5", "--seed", "0"]),
    ("error", 1, ["tree", "--poly", "x^2", "--prime", "7", "--seed", "2", "--depth", "2", "--max-nodes", "3"]),
    ("error", 2, ["roots", "--poly", "x^", "--prime", "7"]),
    ("error", 2, ["roots", "--prime", "7"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    failures = 0
    for schema_name, expected_code, args in CASES:
        schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True, check=False)
        label = " ".join(args)
        try:
            if proc.returncode != expected_code:
                raise AssertionError(f"exit {proc.returncode}, expected {expected_code}")
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (AssertionError, json.JSONDecodeError, jsonschema.ValidationError) as exc:
            failures += 1
            print(f"FAIL {schema_name}: {label}\n  {exc}")
            continue
        print(f"ok   {schema_name}: {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
