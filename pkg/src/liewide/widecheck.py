"""Wide / cyclic-wide decisions and the brute-force cross-validator.

The combinatorial side reads everything off ``T``: wideness is
``[T u -T] = Phi``, cyclic wideness is ``T u -T = Phi`` (decided for a
radical that is ad-nilpotent, i.e. ``k_perp = 0``).  The empirical side builds
``V(lam)`` and inspects the restriction directly, so the two routes share no
code beyond the root system itself.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import hwmod
from .closedset import (
    ClosedSubset,
    conjugate_special_negative,
    enumerate_closed_subsets,
    is_parabolic,
    symmetric_hull,
)
from .regsub import (
    GENERATED_BY_TR,
    RegularSubalgebra,
    SubalgebraError,
    chevalley_constants,
    is_levi_decomposable,
)
from .rootsys import (
    RootSystem,
    Weight,
    apply_word,
    apply_word_coroot,
    build_root_system,
    dominant_weights,
    fundamental_weight,
    neg,
    weyl_dimension,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"
DEFAULT_GRID_DIM = 300


@dataclass
class Decision:
    wide: bool
    cyclic_wide: str
    parabolic: bool
    missing: list = field(default_factory=list)
    hull_missing: list = field(default_factory=list)
    word: tuple = ()
    witness_weight: Optional[tuple] = None
    note: str = ""

    def __post_init__(self):
        if self.cyclic_wide == YES and not self.wide:
            raise AssertionError("cyclic wide but not wide")  # pragma: no cover

    def to_json(self) -> dict:
        out = {
            "wide": self.wide,
            "cyclic_wide": self.cyclic_wide,
            "parabolic": self.parabolic,
            "missing_from_T_union_minus_T": [list(a) for a in self.missing],
            "missing_from_hull": [list(a) for a in self.hull_missing],
            "normal_form_word": list(self.word),
            "note": self.note,
        }
        if self.witness_weight is not None:
            out["witness_weight"] = list(self.witness_weight)
        return out


def is_wide(s: RegularSubalgebra) -> bool:
    return len(symmetric_hull(s.T)) == len(s.ambient.roots)


def normal_form(s: RegularSubalgebra) -> tuple[tuple, RegularSubalgebra]:
    """Weyl conjugate of ``s`` whose special part lies in the negative roots."""
    phi = s.ambient
    if not s.Tu or all(sum(a) < 0 for a in s.Tu):
        return (), s
    word, _ = conjugate_special_negative(phi, s.Tu)
    T = ClosedSubset(phi, apply_word(phi, word, s.T.members))
    if s.t_mode == GENERATED_BY_TR:
        return word, RegularSubalgebra(T)
    return word, RegularSubalgebra(T, [apply_word_coroot(phi, word, h) for h in s.t_basis])


def decide_cyclic_wide(s: RegularSubalgebra) -> Decision:
    if not is_levi_decomposable(s):
        raise SubalgebraError(f"not Levi decomposable ({s.kind})")
    phi = s.ambient
    T = s.T
    both = T.members | {neg(a) for a in T.members}
    missing = [a for a in phi.roots if a not in both]
    hull = symmetric_hull(T)
    hull_missing = [a for a in phi.roots if a not in hull]
    wide = not hull_missing
    word, sn = normal_form(s)
    if is_parabolic(T):
        return Decision(wide, YES, True, missing, hull_missing, word, note="T u -T = Phi")
    if not s.kperp_basis:
        l = next(i for i, a in enumerate(phi.simple_roots) if neg(a) not in sn.T)
        return Decision(
            wide, NO, False, missing, hull_missing, word,
            witness_weight=fundamental_weight(phi, l).marks,
            note=f"-alpha_{l + 1} is missing from the normal form; V(lambda_{l + 1}) has a non-simple quotient",
        )
    return Decision(
        wide, UNKNOWN, False, missing, hull_missing, word,
        note="k_perp != 0 and T u -T != Phi: no criterion applies; use the empirical sweep",
    )


# -- empirical side ------------------------------------------------------------

_MODULES: dict = {}


def simple_module(phi: RootSystem, lam, cap: int | None = None) -> hwmod.WeightModule:
    """``V(lam)``, memoised per process."""
    lam = tuple(lam.marks if isinstance(lam, Weight) else lam)
    key = (phi, lam)
    V = _MODULES.get(key)
    if V is None:
        V = hwmod.build_simple_module(phi, chevalley_constants(phi), lam, cap)
        _MODULES[key] = V
    return V


def clear_module_cache():
    _MODULES.clear()


def check_cell(V: hwmod.WeightModule, s: RegularSubalgebra, method: str | None = None) -> dict:
    """Empirical verdicts for one restriction."""
    R = hwmod.restrict(V, s)
    indec = hwmod.is_indecomposable(R, method)
    W = hwmod.radical_image(V, s)
    Q = hwmod.quotient_module(V, W, s, check=False)
    sing = hwmod.singular_dimension(Q)
    return {
        "dim": V.dim,
        "radical_image_dim": W.dim,
        "quotient_dim": 0 if Q.degenerate else Q.dim,
        "quotient_singular_dim": sing,
        "indecomposable": indec,
        "quotient_simple": sing == 1,
        "cyclic_indecomposable": indec and sing == 1,
    }


def lemma_dichotomy(V: hwmod.WeightModule, s: RegularSubalgebra) -> str:
    """Which alternative holds for a parabolic ``T`` in normal form.

    Returns ``"direct-sum"`` (``V = r.V + <v_lam>`` with zero intersection),
    ``"radical-is-all"`` (``r.V = V``), or ``"neither"``.
    """
    W = hwmod.radical_image(V, s)
    C = hwmod.cyclic_levi_submodule(V, s)
    direct = W.intersection_dim(C) == 0 and W.dim + C.dim == V.dim
    everything = W.dim == V.dim
    if direct and everything:  # pragma: no cover - impossible, C is nonzero
        return "both"
    return "direct-sum" if direct else "radical-is-all" if everything else "neither"


@dataclass
class EmpiricalReport:
    cells: list
    all_indecomposable: bool
    all_cyclic: bool
    witness: Optional[tuple]

    def to_json(self) -> dict:
        return {
            "cells": self.cells,
            "all_indecomposable": self.all_indecomposable,
            "all_cyclic_indecomposable": self.all_cyclic,
            "witness": list(self.witness) if self.witness is not None else None,
        }


def empirical_cyclic_wide(s: RegularSubalgebra, grid: Iterable, cap: int | None = None) -> EmpiricalReport:
    """Check every ``V(lam)`` of the grid; ``witness`` is the first failing ``lam``."""
    phi = s.ambient
    cap = hwmod.dimension_cap() if cap is None else cap
    cells = []
    witness = None
    ok_i = ok_c = True
    for lam in grid:
        lam = tuple(lam.marks if isinstance(lam, Weight) else lam)
        d = weyl_dimension(phi, Weight(lam))
        if d > cap:
            cells.append({"weight": list(lam), "dim": d, "skipped": "dimension cap"})
            continue
        rec = {"weight": list(lam), **check_cell(simple_module(phi, lam, cap), s)}
        cells.append(rec)
        ok_i &= rec["indecomposable"]
        if not rec["cyclic_indecomposable"]:
            ok_c = False
            if witness is None:
                witness = lam
    return EmpiricalReport(cells, ok_i, ok_c, witness)


def default_grid(phi: RootSystem, max_dim: int = DEFAULT_GRID_DIM, cap: int | None = None) -> list[tuple]:
    cap = hwmod.dimension_cap() if cap is None else cap
    return [w.marks for w in dominant_weights(phi, min(max_dim, cap))]


# -- theorem cross-validation ----------------------------------------------------


def _subalgebras(phi: RootSystem, bound: int | None = None):
    """Enumerated closed subsets giving Levi decomposable ``s`` with ``t = k``."""
    kwargs = {} if bound is None else {"bound": bound}
    for T in enumerate_closed_subsets(phi, **kwargs):
        if not T.symmetric:
            continue
        s = RegularSubalgebra(T)
        if is_levi_decomposable(s):
            yield s


def _weight_task(args) -> list[dict]:
    """All enumerated subalgebras against one ``V(lam)`` (runs in a worker)."""
    system, lam, subsets, cap = args
    phi = build_root_system(system)
    V = simple_module(phi, lam, cap)
    out = []
    for roots in subsets:
        s = RegularSubalgebra(ClosedSubset(phi, [tuple(a) for a in roots]))
        rec = check_cell(V, s)
        if is_parabolic(s.T):
            _, sn = normal_form(s)
            rec["dichotomy"] = lemma_dichotomy(V, sn)
        out.append(rec)
    clear_module_cache()
    return out


def verify_theorems(
    phi: RootSystem,
    grid: Sequence | None = None,
    *,
    max_dim: int = DEFAULT_GRID_DIM,
    jobs: int = 1,
    cap: int | None = None,
    bound: int | None = None,
) -> dict:
    """Compare the combinatorial verdicts with brute force on every cell.

    A subalgebra predicted (cyclic) wide must pass at every grid weight; one
    predicted not (cyclic) wide must fail at some grid weight.  For the
    "no" verdict the fundamental-weight witness must fail as well.
    """
    cap = hwmod.dimension_cap() if cap is None else cap
    grid = default_grid(phi, max_dim, cap) if grid is None else [tuple(w.marks if isinstance(w, Weight) else w) for w in grid]
    grid = [lam for lam in grid if weyl_dimension(phi, Weight(lam)) <= cap]
    subs = list(_subalgebras(phi, bound))
    decisions = [decide_cyclic_wide(s) for s in subs]
    # the witness weights join the grid so a "no" is always checked at its witness
    extra = sorted({d.witness_weight for d in decisions if d.witness_weight is not None} - set(grid))
    extra = [lam for lam in extra if weyl_dimension(phi, Weight(lam)) <= cap]
    weights = grid + extra
    payload = [s.T.to_json() for s in subs]
    tasks = [(phi.name, lam, payload, cap) for lam in weights]
    order = sorted(range(len(tasks)), key=lambda k: -weyl_dimension(phi, Weight(weights[k])))
    results: list = [None] * len(tasks)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for k, res in zip(order, ex.map(_weight_task, [tasks[k] for k in order])):
                results[k] = res
    else:
        for k in order:
            results[k] = _weight_task(tasks[k])

    cells = []
    subalgebras = []
    discrepancies = []
    grid_set = set(grid)
    for j, (s, dec) in enumerate(zip(subs, decisions)):
        rows = []
        for k, lam in enumerate(weights):
            rec = results[k][j]
            cell = {
                "system": phi.name,
                "T": s.T.to_json(),
                "t-mode": s.t_mode,
                "weight": list(lam),
                "in_grid": lam in grid_set,
                "predicted": {"wide": dec.wide, "cyclic_wide": dec.cyclic_wide},
                "empirical": rec,
            }
            if dec.cyclic_wide == YES and not rec["cyclic_indecomposable"]:
                cell["witness"] = "predicted cyclic wide but this module fails"
            if dec.wide and not rec["indecomposable"]:
                cell["witness"] = "predicted wide but this module decomposes"
            if rec.get("dichotomy") == "neither":
                cell["witness"] = "neither alternative of the radical/cyclic decomposition holds"
            rows.append(cell)
            cells.append(cell)
        in_grid = [c for c in rows if c["in_grid"]]
        all_indec = all(c["empirical"]["indecomposable"] for c in in_grid)
        all_cyc = all(c["empirical"]["cyclic_indecomposable"] for c in in_grid)
        problems = []
        if dec.cyclic_wide == UNKNOWN:
            problems.append("undecided although k_perp = 0")
        if dec.wide != all_indec:
            problems.append("wide criterion disagrees with the grid")
        if (dec.cyclic_wide == YES) != all_cyc:
            problems.append("cyclic wide criterion disagrees with the grid")
        if any(c["empirical"].get("dichotomy") == "neither" for c in rows):
            problems.append("radical/cyclic decomposition fails")
        if dec.witness_weight is not None:
            wc = next((c for c in rows if tuple(c["weight"]) == tuple(dec.witness_weight)), None)
            if wc is not None and wc["empirical"]["cyclic_indecomposable"]:
                problems.append("fundamental witness is cyclic indecomposable")
        entry = {
            "T": s.T.to_json(),
            "decision": dec.to_json(),
            "all_indecomposable": all_indec,
            "all_cyclic_indecomposable": all_cyc,
            "problems": problems,
        }
        subalgebras.append(entry)
        if problems:
            discrepancies.append(entry)
    return {
        "system": phi.name,
        "grid": [list(lam) for lam in grid],
        "extra_weights": [list(lam) for lam in extra],
        "subalgebras": subalgebras,
        "cells": cells,
        "summary": {
            "subalgebras": len(subs),
            "cells": len(cells),
            "parabolic": sum(d.parabolic for d in decisions),
            "wide": sum(d.wide for d in decisions),
            "cyclic_wide_yes": sum(d.cyclic_wide == YES for d in decisions),
            "discrepancies": len(discrepancies),
        },
        "discrepancies": discrepancies,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1)


def default_jobs() -> int:
    return max(1, min(4, os.cpu_count() or 1))
