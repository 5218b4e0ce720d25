"""The T_k family in A_n: parabolic, cyclic wide, and perfect only for k = 1.

Run with ``python3 demos/tk_family.py``.
"""

from liewide.presets import preset_tk_subalgebra
from liewide.regsub import derived_dimension, is_perfect
from liewide.rootsys import build_root_system
from liewide.widecheck import decide_cyclic_wide, default_grid, empirical_cyclic_wide

if __name__ == "__main__":
    for n in (2, 3, 4):
        for k in range(1, n):
            s = preset_tk_subalgebra(n, k)
            d = decide_cyclic_wide(s)
            print(f"A{n} k={k}: dim s = {s.dim}, dim [s,s] = {derived_dimension(s)}, "
                  f"perfect={is_perfect(s)}, |T^u| = {len(s.Tu)}, cyclic wide: {d.cyclic_wide}")
    s = preset_tk_subalgebra(3, 1)
    grid = default_grid(build_root_system("A3"), 64)
    rep = empirical_cyclic_wide(s, grid)
    print(f"\nA3 k=1 against {len(grid)} simple modules of dim <= 64: all cyclic indecomposable = {rep.all_cyclic}")
