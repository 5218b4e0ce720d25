"""Cross-check the combinatorial verdicts against brute force in rank 2.

Run with ``python3 demos/rank2_sweep.py [max_dim]`` (default 40).
"""

import sys
import time

from liewide.rootsys import build_root_system
from liewide.widecheck import verify_theorems

if __name__ == "__main__":
    max_dim = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    for name in ("A2", "B2", "G2"):
        t = time.perf_counter()
        rep = verify_theorems(build_root_system(name), max_dim=max_dim)
        summ = rep["summary"]
        print(f"{name}: {summ['subalgebras']} subalgebras, {len(rep['grid'])} weights, "
              f"{summ['parabolic']} parabolic, {summ['wide']} wide, "
              f"discrepancies {summ['discrepancies']} ({time.perf_counter() - t:.1f} s)")
