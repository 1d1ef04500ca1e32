"""
Driving the command line
========================

Every subcommand prints a JSON report with sorted keys, so identical
inputs and seeds give identical bytes.
"""

import io
import json

from jacring.cli import run

out = io.StringIO()
code = run(["hodge", "--poly", "x0^4+x1^4+x2^4+x3^4", "--dim", "2"], out)
print("exit", code, json.loads(out.getvalue())["result"])

out = io.StringIO()
run(["family-scan", "--template", "x0^4+x1^4+x2^4+x3^4 - t*x0^2*x1^2", "--dim", "2",
     "--t", "0,1,2,3", "--samples", "1", "--format", "csv"], out)
print(out.getvalue())
