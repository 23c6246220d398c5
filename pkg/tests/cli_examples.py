"""CLI invocations exercised by the determinism checks."""

from __future__ import annotations

import subprocess
import sys

EXAMPLES = [
    ["kempf", '{"n":2,"weights":[[1,0],[0,1]]}', "--format", "json"],
    ["kempf", '{"n":3,"weights":[[1,0,0],[0,2,-1],[3,3,3]]}'],
    ["tl-dim", "--p", "3", "--n", "2", "--l", "4"],
    ["tl-dim", "--p", "2,3", "--n", "1,2,3", "--table", "--invariants"],
    ["tl-basis", "--n", "2", "--l", "2", "--p", "3", "--format", "json"],
    ["invariants-dim", "--n", "2", "--l", "2", "--p", "2"],
    ["tl-rep", "--n", "2", "--p", "3", "--l", "2"],
    ["bound", "thm32", "--p", "2", "--m", "3", "--d", "2"],
    ["bound", "thm54", "--p", "3", "--n", "1", "--m", "2", "--d", "1", "--format", "json"],
    ["bound", "thm31", "--p", "2,3", "--m", "1,2,3", "--d", "2,5", "--table"],
    ["bound", "cor55", "--kind", "sym", "--n", "3", "--d", "2"],
    ["sandbox", "functor", '{"p":2,"degrees":[1,0]}', "--kind", "truncated", "--param", "2"],
    ["sandbox", "hn", '{"p":3,"degrees":[3,1,0]}', "--format", "json"],
    ["kempf", "--rep", "TL_REP_2_3_1", "--coords", "1,1", "--samples", "6", "--format", "json"],
    ["selftest"],
]


def run(args, env=None):
    return subprocess.run([sys.executable, "-m", "frobstab.cli", *args], capture_output=True, env=env, check=False)


def resolve(args):
    """Replace placeholders with generated inputs."""
    out = []
    for a in args:
        if a == "TL_REP_2_3_1":
            a = run(["tl-rep", "--n", "2", "--p", "3", "--l", "1"]).stdout.decode()
        out.append(a)
    return out
