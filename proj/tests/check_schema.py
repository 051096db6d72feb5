#!/usr/bin/env python3
"""Validate CLI JSON reports against the published schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *inputs = sys.argv[1:]
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    for path in inputs:
        for extra in ([], ["--oracle", "--oracle-k", "4"], ["--corroborate"]):
            cmd = [cli, "analyze", path, "--format", "json"] + extra
            out = subprocess.run(cmd, capture_output=True, text=True)
            if out.returncode != 0:
                print(f"FAIL: {' '.join(cmd)} exited {out.returncode}")
                print(out.stderr)
                return 1
            report = json.loads(out.stdout)
            errors = sorted(validator.iter_errors(report), key=str)
            if errors:
                print(f"FAIL: {' '.join(cmd)}")
                for err in errors[:5]:
                    print(f"  {'/'.join(map(str, err.path))}: {err.message}")
                return 1
            print(f"ok: {' '.join(cmd)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
