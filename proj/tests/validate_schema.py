#!/usr/bin/env python3
"""Runs the CLI over every report-producing command and validates the JSON."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

COMMANDS = [
    ["attr", "verify", "-w", "adcbaadcbadc", "--positions", "4,6,8,11"],
    ["attr", "verify", "-w", "adcbaadcbadc", "--positions", "1,2,3,4"],
    ["attr", "min", "-w", "abbaab", "--exhaustive"],
    ["--jobs", "2", "attr", "min", "--gen", "tm:4", "--gen", "sturmian:1,2,1"],
    ["--timings", "attr", "bounds", "-w", "abaababaabcabbca"],
    ["--budget", "0", "attr", "bounds", "-w", "abaababaabcabbca"],
    ["bwt", "-w", "abaab"],
    ["bwt", "-w", "abaab", "--endpoint", "last"],
    ["lz", "-w", "aaaa"],
    ["lz", "-w", "abab", "--self-ref"],
    ["collage", "tm", "--n", "4"],
    ["family", "sturmian", "--directive", "1,2,1", "--exact"],
    ["family", "sturmian", "--directive", "3"],
    ["family", "sturmian", "--sweep", "1:4"],
    ["family", "tm", "--n", "3", "--exact"],
    ["family", "tm", "--sweep", "3:6"],
    ["family", "epistandard", "--family", "i", "--k", "3", "--m", "2"],
    ["family", "epistandard", "--family", "ii", "--k", "4", "--ell", "0"],
    ["family", "epistandard", "--family", "iii", "--k", "3", "--exact"],
    ["family", "epistandard", "--directive", "cab"],
    ["family", "debruijn", "--sigma", "2", "--k", "3", "--exact"],
    ["family", "debruijn", "--sigma", "3", "--k", "2"],
    ["suite"],
    ["suite", "--mutate"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], Path(sys.argv[2])
    validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
    failures = 0
    for args in COMMANDS:
        run = subprocess.run([binary, *args], capture_output=True, text=True)
        if run.returncode not in (0, 1, 2) or not run.stdout.strip():
            print(f"FAIL {' '.join(args)}: exit {run.returncode} {run.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(run.stdout)))
        for e in errors[:3]:
            print(f"FAIL {' '.join(args)}: {'/'.join(map(str, e.absolute_path))}: {e.message[:200]}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")

    # the schema has to reject something
    bad = {"schema_version": 2, "command": [], "records": [{"word": "a"}], "status": "ok"}
    if validator.is_valid(bad):
        print("FAIL schema accepts a malformed report")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
