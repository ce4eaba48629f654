"""
Command line
============

The same computations from the shell.  Exit code 2 means a verification
produced unequal sides.
"""
import subprocess
import sys

commands = [
    ["volume", "--shape", "sphere", "--m", "3", "--n", "1"],
    ["--json", "volume", "--shape", "ball", "--m", "3", "--n", "1"],
    ["integrate", "--domain", "ball", "--retraction", "std", "--m", "3", "--n", "1",
     "--expr", "th1*th2 - 2*x1^2"],
    ["laplacian", "--m", "4", "--n", "2", "--expr", "R^2"],
    ["laplacian", "--m", "3", "--n", "1", "--expr", "R^3"],
    ["divergence", "--m", "3", "--n", "1", "--field", "x1;x2;x3;th1;0", "--formula", "iii"],
    ["verify", "mvt-sphere", "--m", "3", "--n", "1", "--expr", "th1*th2 - 2*x1^2"],
    ["verify", "mvt-sphere", "--m", "3", "--n", "1", "--expr", "x1^2", "--skip-harmonic-check"],
    ["verify", "fundamental", "--m", "4", "--n", "1"],
]
for argv in commands:
    proc = subprocess.run([sys.executable, "-m", "supersphere", *argv], capture_output=True, text=True)
    print("$ supersphere", " ".join(argv))
    print(proc.stdout.strip() or proc.stderr.strip(), f"  [exit {proc.returncode}]")
