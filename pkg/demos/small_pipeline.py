"""Run every pipeline stage at smoke-test size and print a tau table.

Uses the reduced profile, so the numbers only show the plumbing works; the
full-size run is ``vispec bench`` with the default profile.
"""

import sys
import tempfile

from vispec import cli

run_dir = sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp(prefix="vispec-")
base = ["--run-dir", run_dir, "--profile", "small", "-v"]
for args in (["train-target", "--gate", "0"], ["gen-traces"],
             ["bench", "--suite", "small", "--no-timing", "--max-new-tokens", "16"]):
    print(f"$ vispec {' '.join(base + args)}", flush=True)
    if cli.main(base + args) != 0:
        sys.exit(1)
