"""Named subalgebras used as one-command regressions."""

from __future__ import annotations

from typing import Sequence

from .closedset import ClosedSubset
from .regsub import GENERATED_BY_TR, RegularSubalgebra, SubalgebraError
from .rootsys import RootSystem, build_root_system, neg


def type_a_root(n: int, p: int, q: int) -> tuple:
    """``alpha_{p,q} = alpha_p + ... + alpha_q`` in ``A_n`` (1-based ``p <= q``)."""
    return tuple(int(p - 1 <= i <= q - 1) for i in range(n))


def sl4_counterexample(enlarged_t: bool = False) -> RegularSubalgebra:
    """A wide subalgebra of ``sl_4`` that is not cyclic wide.

    ``T^r = {+-alpha_3}``, ``T^u = {-alpha_1, -alpha_{1,2}, -alpha_{1,3}}``.
    With ``enlarged_t`` the torus also contains ``2 h_2 + h_3``, which is
    Killing-orthogonal to ``h_3``.
    """
    phi = build_root_system("A3")
    a3 = type_a_root(3, 3, 3)
    T = ClosedSubset(phi, [a3, neg(a3), neg(type_a_root(3, 1, 1)), neg(type_a_root(3, 1, 2)), neg(type_a_root(3, 1, 3))])
    if enlarged_t:
        return RegularSubalgebra(T, [(0, 0, 1), (0, 2, 1)])
    return RegularSubalgebra(T)


def preset_tk_subalgebra(n: int, k: int) -> RegularSubalgebra:
    """``s_{T_k, t_k}`` in ``A_n``: Levi ``sl_{n+1-k}``, radical spanned by ``alpha_{i,j}``, ``i <= k``."""
    if not (isinstance(n, int) and isinstance(k, int)) or n < 2 or not 1 <= k <= n - 1:
        raise SubalgebraError(f"need n >= 2 and 1 <= k <= n - 1, got n={n}, k={k}")
    phi = build_root_system(f"A{n}")
    roots = []
    for i in range(k + 1, n + 1):
        for j in range(i, n + 1):
            a = type_a_root(n, i, j)
            roots += [a, neg(a)]
    for i in range(1, k + 1):
        for j in range(i, n + 1):
            roots.append(type_a_root(n, i, j))
    return RegularSubalgebra(ClosedSubset(phi, roots))


def direct_sum_subalgebra(parts: Sequence[RegularSubalgebra], phi: RootSystem | None = None) -> RegularSubalgebra:
    """Blockwise union of subalgebras living on the components of a reducible system."""
    if not parts:
        raise SubalgebraError("need at least one part")
    comps = tuple(c for s in parts for c in s.ambient.components)
    if phi is None:
        phi = build_root_system(list(comps))
    elif phi.components != comps:
        raise SubalgebraError(f"components {comps} do not match {phi.name}")
    if len(parts) == 1:
        return parts[0]
    roots, tvecs = [], []
    explicit = any(s.t_mode != GENERATED_BY_TR for s in parts)
    off = 0
    for s in parts:
        r = s.ambient.rank
        pad = lambda v: (0,) * off + tuple(v) + (0,) * (phi.rank - off - r)  # noqa: E731
        roots += [pad(a) for a in s.T.members]
        tvecs += [pad(h) for h in s.t_basis]
        off += r
    T = ClosedSubset(phi, roots)
    return RegularSubalgebra(T, tvecs) if explicit else RegularSubalgebra(T)


def borel_a1_negative() -> RegularSubalgebra:
    phi = build_root_system("A1")
    return RegularSubalgebra(ClosedSubset(phi, [(-1,)]))


PRESETS = {
    "example1": ("sl_4 subalgebra that is wide but not cyclic wide (t generated by T^r)", lambda: sl4_counterexample(False)),
    "example1-variant": ("same T with t enlarged by 2h_2 + h_3 (k_perp != 0)", lambda: sl4_counterexample(True)),
    "tk": ("T_k family in A_n; pass --n and --k", preset_tk_subalgebra),
    "example3": (
        "direct sum on A2+A1: T_1 on A2 and {-alpha} on A1",
        lambda: direct_sum_subalgebra([preset_tk_subalgebra(2, 1), borel_a1_negative()]),
    ),
}


def get_preset(name: str, n: int | None = None, k: int | None = None) -> RegularSubalgebra:
    if name not in PRESETS:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    if name == "tk":
        if n is None or k is None:
            raise SubalgebraError("preset tk needs --n and --k")
        return preset_tk_subalgebra(n, k)
    return PRESETS[name][1]()
