"""A wide subalgebra of sl_4 that is not cyclic wide, and what an extra torus does.

Run with ``python3 demos/sl4_counterexample.py``.
"""

from liewide import hwmod
from liewide.presets import sl4_counterexample
from liewide.rootsys import root_label
from liewide.widecheck import check_cell, decide_cyclic_wide, simple_module


def show(title, s, lam):
    phi = s.ambient
    print(f"== {title}")
    print("  T^r:", ", ".join(root_label(phi, a) for a in sorted(s.Tr)))
    print("  T^u:", ", ".join(root_label(phi, a) for a in sorted(s.Tu)))
    print("  t basis:", [[str(x) for x in h] for h in s.t_basis], " k_perp:", [[str(x) for x in h] for h in s.kperp_basis])
    d = decide_cyclic_wide(s)
    print(f"  verdict: wide={d.wide} cyclic_wide={d.cyclic_wide}")
    print(f"  ({d.note})")
    V = simple_module(phi, lam)
    W = hwmod.radical_image(V, s)
    print(f"  V{list(lam)}: dim {V.dim}, Levi summands {hwmod.levi_decomposition(V, s)}")
    print(f"  r.V has dim {W.dim}, weights {[list(w.marks) for w in W.weights()]}")
    rec = check_cell(V, s)
    quotient = f"dim {rec['quotient_dim']}" if rec["quotient_dim"] else "V(0)"
    print(f"  quotient: {quotient}, singular vectors {rec['quotient_singular_dim']}")
    print(f"  indecomposable={rec['indecomposable']} cyclic indecomposable={rec['cyclic_indecomposable']}")
    print()


if __name__ == "__main__":
    show("t generated by the Levi coroots", sl4_counterexample(), (0, 0, 1))
    variant = sl4_counterexample(enlarged_t=True)
    show("t enlarged by 2h_2 + h_3", variant, (0, 0, 1))
    # the enlarged torus rescues V(lambda_3) but not every module
    show("same enlarged t on a larger module", variant, (0, 1, 1))
