"""Command-line interface: ``liewide decide | verify | module | enumerate | preset list``.

Exit codes: 0 success, 1 usage error, 2 mathematical rejection (invalid T or t,
non-Levi-decomposable input, dimension cap), 3 verification discrepancy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import hwmod, linalg
from .closedset import ClosedSetError, ClosedSubset, enumerate_closed_subsets
from .presets import PRESETS, get_preset
from .regsub import GENERATED_BY_TR, RegularSubalgebra, SubalgebraError, is_levi_decomposable
from .rootsys import RootSystemError, build_root_system, root_label
from .widecheck import (
    YES,
    decide_cyclic_wide,
    default_grid,
    empirical_cyclic_wide,
    is_wide,
    report_json,
    simple_module,
    verify_theorems,
)

EXIT_OK, EXIT_USAGE, EXIT_REJECTED, EXIT_DISCREPANCY = 0, 1, 2, 3
SPEC_KEYS = {"system", "T", "t"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


# -- input specs ---------------------------------------------------------------------


def parse_spec(data) -> RegularSubalgebra:
    """Strict reader for ``{system, T, t}``; unknown keys are usage errors."""
    if not isinstance(data, dict):
        raise UsageError("subalgebra spec must be a JSON object")
    extra = set(data) - SPEC_KEYS
    if extra:
        raise UsageError(f"unknown keys in spec: {sorted(extra)}")
    for key in ("system", "T"):
        if key not in data:
            raise UsageError(f"spec is missing {key!r}")
    if not isinstance(data["system"], str):
        raise UsageError("'system' must be a string such as \"A3\"")
    T = data["T"]
    if not isinstance(T, list) or not all(isinstance(a, list) and all(isinstance(c, int) for c in a) for a in T):
        raise UsageError("'T' must be a list of integer coefficient vectors")
    t = data.get("t", GENERATED_BY_TR)
    if isinstance(t, str):
        if t != GENERATED_BY_TR:
            raise UsageError(f"'t' must be a list of vectors or {GENERATED_BY_TR!r}")
    elif isinstance(t, list) and all(isinstance(h, list) for h in t):
        try:
            t = [[Fraction(str(x)) for x in h] for h in t]
        except (ValueError, ZeroDivisionError):
            raise UsageError("'t' entries must be rationals (numbers or \"p/q\" strings)")
    else:
        raise UsageError("'t' must be a list of vectors")
    phi = build_root_system(data["system"])
    if any(len(a) != phi.rank for a in T):
        raise UsageError(f"every root of T needs {phi.rank} coordinates")
    return RegularSubalgebra(ClosedSubset(phi, [tuple(a) for a in T]), t)


def load_spec(args) -> RegularSubalgebra:
    if args.preset:
        if args.input:
            raise UsageError("give either --input or --preset, not both")
        try:
            return get_preset(args.preset, args.n, args.k)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
    if not args.input:
        raise UsageError("an --input spec or a --preset is required")
    text = args.input
    if not text.lstrip().startswith("{"):
        path = Path(text)
        if not path.exists():
            raise UsageError(f"no such file: {text}")
        text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}")
    return parse_spec(data)


def spec_json(s: RegularSubalgebra) -> dict:
    return {
        "system": s.ambient.name,
        "T": s.T.to_json(),
        "t": s.t_mode if s.t_mode == GENERATED_BY_TR else [[linalg.fmt(x) for x in h] for h in s.t_basis],
    }


def _labels(phi, roots) -> str:
    return "{" + ", ".join(root_label(phi, a) for a in roots) + "}"


def _parse_weight(text: str, rank: int) -> tuple:
    try:
        marks = tuple(int(x) for x in text.replace(" ", "").strip("[]()").split(",") if x != "")
    except ValueError:
        raise UsageError(f"bad weight {text!r}; use comma-separated marks such as 0,0,1")
    if len(marks) != rank or any(m < 0 for m in marks):
        raise UsageError(f"weight needs {rank} nonnegative marks")
    return marks


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        sys.stdout.write(report_json(payload) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


# -- subcommands ---------------------------------------------------------------------


def cmd_decide(args) -> int:
    s = load_spec(args)
    dec = decide_cyclic_wide(s)
    payload = {"input": spec_json(s), "decision": dec.to_json(), "kind": s.kind}
    phi = s.ambient
    lines = [
        f"system       {phi.name}",
        f"T^r          {_labels(phi, sorted(s.Tr, key=phi.roots.index))}",
        f"T^u          {_labels(phi, sorted(s.Tu, key=phi.roots.index))}",
        f"k_perp dim   {len(s.kperp_basis)}",
        f"wide         {'yes' if dec.wide else 'no'}",
        f"cyclic wide  {dec.cyclic_wide}",
        f"note         {dec.note}",
    ]
    if dec.missing:
        lines.append(f"missing from T u -T  {_labels(phi, dec.missing)}")
    if dec.hull_missing:
        lines.append(f"missing from [T u -T]  {_labels(phi, dec.hull_missing)}")
    if dec.word:
        lines.append(f"normal form word  {' '.join(f's{i + 1}' for i in dec.word)}")
    if dec.witness_weight is not None:
        lines.append(f"witness weight  {list(dec.witness_weight)}")
    if args.empirical:
        rep = empirical_cyclic_wide(s, default_grid(phi, args.max_dim, args.cap), args.cap)
        payload["empirical"] = rep.to_json()
        lines.append(
            f"empirical    {sum(1 for c in rep.cells if 'skipped' not in c)} weights (dim <= {args.max_dim}): "
            f"indecomposable={rep.all_indecomposable} cyclic={rep.all_cyclic}"
            + (f" witness={list(rep.witness)}" if rep.witness is not None else "")
        )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    phi = build_root_system(args.system)
    grid = None
    if args.weights:
        try:
            grid = [tuple(w) for w in json.loads(args.weights)]
        except (json.JSONDecodeError, TypeError):
            raise UsageError("--weights expects a JSON list of mark vectors")
    kwargs = {} if args.bound is None else {"bound": args.bound}
    report = verify_theorems(phi, grid, max_dim=args.max_dim, jobs=args.jobs, cap=args.cap, **kwargs)
    if args.output:
        Path(args.output).write_text(report_json(report) + "\n")
    summ = report["summary"]
    lines = [f"{phi.name}: {summ['subalgebras']} Levi decomposable subalgebras (t = k), "
             f"{len(report['grid'])} grid weights, {summ['cells']} cells"]
    lines.append(f"{'T^r':<28} {'T^u':<40} {'wide':<5} {'cyc':<7} {'emp.ind':<8} {'emp.cyc':<8}")
    for sub in report["subalgebras"]:
        T = [tuple(a) for a in sub["T"]]
        Tr = [a for a in T if tuple(-x for x in a) in T]
        Tu = [a for a in T if a not in Tr]
        d = sub["decision"]
        lines.append(
            f"{_labels(phi, Tr):<28} {_labels(phi, Tu):<40} {str(d['wide']):<5} {d['cyclic_wide']:<7} "
            f"{str(sub['all_indecomposable']):<8} {str(sub['all_cyclic_indecomposable']):<8}"
            + ("  <-- " + "; ".join(sub["problems"]) if sub["problems"] else "")
        )
    lines.append(f"discrepancies: {summ['discrepancies']}")
    if args.format == "json":
        payload = report
    else:
        payload = None
    _emit(args, payload, "\n".join(lines))
    return EXIT_DISCREPANCY if summ["discrepancies"] else EXIT_OK


def cmd_module(args) -> int:
    s = load_spec(args)
    phi = s.ambient
    if not args.weight:
        raise UsageError("--weight is required")
    lam = _parse_weight(args.weight, phi.rank)
    if not is_levi_decomposable(s):
        raise SubalgebraError(f"not Levi decomposable ({s.kind})")
    V = simple_module(phi, lam, args.cap)
    W = hwmod.radical_image(V, s)
    Q = hwmod.quotient_module(V, W, s)
    sing = hwmod.singular_dimension(Q)
    E = hwmod.endomorphism_algebra(hwmod.restrict(V, s))
    indec = E.is_local()
    payload = {
        "input": spec_json(s),
        "weight": list(lam),
        "dim": V.dim,
        "radical_image_dim": W.dim,
        "radical_image_weights": [list(w.marks) for w in W.weights()],
        "cyclic_levi_submodule_dim": hwmod.cyclic_levi_submodule(V, s).dim,
        "levi_decomposition": hwmod.levi_decomposition(V, s),
        "quotient": "V(0)" if Q.degenerate else {"dim": Q.dim, "singular_dim": sing},
        "quotient_simple": sing == 1,
        "endomorphisms": {"dim": E.dim, "radical_dim": E.radical_dim},
        "indecomposable": indec,
        "cyclic_indecomposable": indec and sing == 1,
    }
    quotient = "V(0)" if Q.degenerate else f"dim {Q.dim}, singular dim {sing}"
    lines = [
        f"V({list(lam)}) over {phi.name}: dim {V.dim}",
        f"r.V            dim {W.dim}",
        f"<v_lam>        dim {payload['cyclic_levi_submodule_dim']}",
        f"Levi summands  {' + '.join(map(str, payload['levi_decomposition']))}",
        f"V / r.V        {quotient}",
        f"End_s(V)       dim {E.dim}, radical dim {E.radical_dim}",
        f"indecomposable {indec}",
        f"cyclic indecomposable {indec and sing == 1}",
    ]
    if args.dump:
        Path(args.dump).write_text(json.dumps(V.to_json(), sort_keys=True) + "\n")
        lines.append(f"module written to {args.dump}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    phi = build_root_system(args.system)
    kwargs = {} if args.bound is None else {"bound": args.bound}
    rows = []
    for T in enumerate_closed_subsets(phi, **kwargs):
        s = RegularSubalgebra(T)
        row = {"T": T.to_json(), "Tr": len(s.Tr), "Tu": len(s.Tu), "kind": s.kind, "wide": is_wide(s)}
        if is_levi_decomposable(s):
            dec = decide_cyclic_wide(s)
            row["cyclic_wide"] = dec.cyclic_wide
            assert dec.cyclic_wide != YES or dec.wide
        else:
            row["cyclic_wide"] = None
        rows.append(row)
    if args.format == "json":
        sys.stdout.write(report_json({"system": phi.name, "count": len(rows), "rows": rows}) + "\n")
    else:
        for row in rows:
            T = [tuple(a) for a in row["T"]]
            cw = row["cyclic_wide"] or "-"
            sys.stdout.write(f"{_labels(phi, T):<60} {row['kind']:<10} wide={str(row['wide']):<5} cyclic_wide={cw}\n")
        sys.stdout.write(f"{len(rows)} closed subsets\n")
    return EXIT_OK


def cmd_preset(args) -> int:
    if args.action != "list":
        raise UsageError("only 'preset list' is supported")
    if args.format == "json":
        sys.stdout.write(report_json({name: desc for name, (desc, _) in PRESETS.items()}) + "\n")
    else:
        for name, (desc, _) in PRESETS.items():
            sys.stdout.write(f"{name:<18} {desc}\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--cap", type=_positive, default=None, help="module dimension cap (default: $LIEWIDE_CAP or 2000)")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes for verification")

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--input", help="subalgebra spec: a JSON file path or inline JSON")
    spec.add_argument("--preset", help="named subalgebra (see 'preset list')")
    spec.add_argument("--n", type=_positive, help="rank for the tk preset")
    spec.add_argument("--k", type=_positive, help="k for the tk preset")

    p = _Parser(prog="liewide", description="Wide and cyclic wide regular subalgebras of semisimple Lie algebras.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    d = sub.add_parser("decide", parents=[common, spec], help="wide / cyclic wide verdicts for one subalgebra")
    d.add_argument("--empirical", action="store_true", help="also sweep simple modules by brute force")
    d.add_argument("--max-dim", type=_positive, default=100)

    v = sub.add_parser("verify", parents=[common], help="cross-check the criteria on every closed subset")
    v.add_argument("--system", required=True)
    v.add_argument("--max-dim", type=_positive, default=300)
    v.add_argument("--weights", help="explicit JSON list of highest weights instead of the dimension grid")
    v.add_argument("--bound", type=_positive, default=None, help="enumeration bound on the number of roots")
    v.add_argument("--output", help="write the full JSON report here")

    m = sub.add_parser("module", parents=[common, spec], help="inspect V(lambda) restricted to a subalgebra")
    m.add_argument("--weight", help="highest weight marks, e.g. 0,0,1")
    m.add_argument("--dump", help="write weights and action matrices as JSON")

    e = sub.add_parser("enumerate", parents=[common], help="list closed subsets with their verdicts")
    e.add_argument("--system", required=True)
    e.add_argument("--bound", type=_positive, default=None)

    pr = sub.add_parser("preset", parents=[common], help="preset registry")
    pr.add_argument("action", choices=["list"])
    return p


COMMANDS = {"decide": cmd_decide, "verify": cmd_verify, "module": cmd_module, "enumerate": cmd_enumerate, "preset": cmd_preset}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None:
        args.cap = hwmod.dimension_cap()
    else:
        os.environ["LIEWIDE_CAP"] = str(args.cap)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"liewide: error: {exc}\n")
        return EXIT_USAGE
    except (RootSystemError, ClosedSetError, SubalgebraError, hwmod.ModuleError) as exc:
        sys.stderr.write(f"liewide: rejected: {exc}\n")
        return EXIT_REJECTED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
