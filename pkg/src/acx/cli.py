"""Deterministic command-line front end.

Every report is assembled from exact library results into plain JSON types,
emitted with sorted keys (or as an aligned table), so identical invocations
produce byte-identical output.  Exit codes: 0 success, 1 refusal or failed
verification, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .errors import InputError, RefusalError
from .hodge import invariant_harmonic_space
from .lie import is_integrable, nijenhuis, structure_equations
from .models import kt_model, load_model_file
from .scalars import PiParam
from .torus import (
    DEFAULT_PROFILE_LENGTH,
    IntInterval,
    PlurigeneraProfile,
    curve_profile,
    kodaira_dimension,
    kt_first_nonzero,
    kt_irregularity,
    kt_mode_oracle,
    kt_plurigenus,
    kt_profile,
    kt_solvable_modes,
    kunneth,
    mode_window,
    rr_plurigenus,
    rr_profile,
    t4_family_pair,
    t4_irregularity,
    t4_obstruction,
    t4_plurigenus,
    t4_profile,
    t4_standard_pair,
    torus_profile,
)
from . import g2 as sphere

PRESETS = ("kt", "t4", "g2")

_T4_LIE_REFUSAL = (
    "the four-torus family has non-constant structure coefficients; "
    "frame-level reports cover constant-coefficient models only "
    "(use plurigenera / irregularity / kodaira for this family)"
)


# ---------------------------------------------------------------------------
# Argument parsing helpers
# ---------------------------------------------------------------------------


def _parse_a_list(text: str) -> List[PiParam]:
    out = []
    for chunk in text.split(","):
        try:
            out.append(PiParam.parse(chunk))
        except ValueError as exc:
            raise InputError(f"--a: {exc}") from exc
    if not out:
        raise InputError("--a: empty parameter list")
    return out


def _parse_m_spec(text: str) -> List[int]:
    """Level specs: '4', '1..12', or comma-separated pieces of those."""
    levels: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo_txt, _, hi_txt = chunk.partition("..")
            try:
                lo, hi = int(lo_txt), int(hi_txt)
            except ValueError as exc:
                raise InputError(f"--m: bad range {chunk!r}") from exc
            if lo > hi:
                raise InputError(f"--m: empty range {chunk!r}")
            levels.extend(range(lo, hi + 1))
        else:
            try:
                levels.append(int(chunk))
            except ValueError as exc:
                raise InputError(f"--m: bad level {chunk!r}") from exc
    if not levels or any(m < 1 for m in levels):
        raise InputError("--m: levels must be positive integers")
    return levels


def _parse_t_member(text: Optional[str]):
    """--t 't1,t2' selects the deformation-family member; None is standard."""
    if text is None:
        return t4_standard_pair(), "standard"
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--t: want two comma-separated rationals, e.g. 0,0")
    try:
        t1, t2 = Fraction(parts[0].strip()), Fraction(parts[1].strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--t: {exc}") from exc
    return t4_family_pair(t1, t2), f"t=({t1},{t2})"


def _load_model(spec: str, a_values: Optional[List[PiParam]]):
    """Resolve --model into ('kt'|'t4'|'g2'|'file', loaded-or-None)."""
    if spec in PRESETS:
        return spec, None
    model, param = load_model_file(spec)
    if a_values is not None and param is not None and len(a_values) == 1:
        if a_values[0] != param:
            raise InputError(
                "--a conflicts with the model file's params.a; "
                "drop one of the two"
            )
    return "file", (model, param)


# ---------------------------------------------------------------------------
# Report assembly
# ---------------------------------------------------------------------------


def _jsonable(value):
    if isinstance(value, IntInterval):
        return [value.lo, value.hi]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return "-inf" if value == float("-inf") else value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _flatten(value, prefix: str, rows: List[Tuple[str, str]]):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten(value[key], f"{prefix}.{key}" if prefix else str(key), rows)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for idx, item in enumerate(value):
            _flatten(item, f"{prefix}[{idx}]", rows)
    elif isinstance(value, list):
        rows.append((prefix, " ".join(str(v) for v in value) if value else "[]"))
    else:
        rows.append((prefix, str(value)))


def _render(report: Dict, fmt: str) -> str:
    report = _jsonable(report)
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    rows: List[Tuple[str, str]] = []
    _flatten(report, "", rows)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _vector_str(coeffs, names, symbol: str) -> str:
    parts = []
    for c, name in zip(coeffs, names):
        if not c.is_zero():
            parts.append(f"({c.to_str(symbol)})*{name}")
    return " + ".join(parts) if parts else "0"


def _kappa_json(value):
    return "-inf" if value == float("-inf") else value


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (report, exit_code)
# ---------------------------------------------------------------------------


def _lie_model_for(args):
    """The constant-coefficient model behind frame-level subcommands."""
    a_list = _parse_a_list(args.a) if getattr(args, "a", None) else None
    kind, loaded = _load_model(args.model, a_list)
    if kind == "kt":
        a = a_list[0] if a_list else PiParam.generic()
        if a_list and len(a_list) != 1:
            raise InputError("this subcommand takes a single --a value")
        return kt_model(a), {"model": "kt", "a": str(a)}
    if kind == "g2":
        if a_list:
            raise InputError("--a does not apply to the g2 preset")
        return sphere.s6_model(), {"model": "g2"}
    if kind == "t4":
        raise RefusalError(_T4_LIE_REFUSAL)
    model, param = loaded
    desc = {"model": args.model}
    if param is not None:
        desc["a"] = str(param)
    return model, desc


def _cmd_nijenhuis(args):
    model, desc = _lie_model_for(args)
    tensor = nijenhuis(model.alg, model.J)
    names = model.alg.basis_names
    entries = []
    for (i, j), vec in sorted(tensor.values.items()):
        entries.append(
            {
                "i": i,
                "j": j,
                "value": _vector_str(vec, names, model.symbol),
            }
        )
    report = dict(desc)
    report.update(
        {
            "integrable": is_integrable(model.alg, model.J),
            "nonzero_entries": len(entries),
            "entries": entries,
        }
    )
    return report, 0


def _cmd_structure_eqs(args):
    model, desc = _lie_model_for(args)
    eqs = structure_equations(model.coframe)
    rows = []
    for i in range(1, model.n + 1):
        d_full = model.coframe.d_phi(i)
        rows.append(
            {
                "i": i,
                "d": d_full.to_str(model.symbol),
                "part_20": d_full.project(2, 0).to_str(model.symbol),
                "part_11": eqs.dbar_phi(i).to_str(model.symbol),
                "part_02": d_full.project(0, 2).to_str(model.symbol),
            }
        )
    report = dict(desc)
    report.update(
        {"n": model.n, "integrable": eqs.integrable(), "coframe": rows}
    )
    return report, 0


def _kt_plurigenera_rows(a_list, levels, cross_check):
    rows = []
    for a in a_list:
        values = [kt_plurigenus(a, m) for m in levels]
        if cross_check:
            window = mode_window()
            for m in levels:
                coeff = Fraction(m, 4)
                closed = {
                    mode
                    for mode in kt_solvable_modes(a, coeff)
                    if all(abs(c) <= window for c in mode)
                }
                if closed != set(kt_mode_oracle(a, coeff, window=window)):
                    raise AssertionError(
                        f"mode oracle disagrees with the closed form at "
                        f"a={a}, m={m}"
                    )
        row = {"a": str(a), "values": values}
        first = kt_first_nonzero(a)
        row["first_nonzero"] = first
        rows.append(row)
    return rows


def _cmd_plurigenera(args):
    levels = _parse_m_spec(args.m)
    a_list = _parse_a_list(args.a) if args.a else None
    kind, loaded = _load_model(args.model, a_list)
    report: Dict[str, object] = {"levels": levels}
    if kind == "kt":
        if not a_list:
            raise InputError("the kt preset needs --a (e.g. --a 4*pi,generic)")
        report["model"] = "kt"
        report["rows"] = _kt_plurigenera_rows(a_list, levels, args.cross_check)
        if args.cross_check:
            report["cross_check"] = {"window": mode_window(), "agreed": True}
        return report, 0
    if kind == "t4":
        (alpha, beta), member = _parse_t_member(args.t)
        report.update(
            {
                "model": "t4",
                "member": member,
                "obstruction": t4_obstruction(alpha, beta).to_str("pi"),
                "values": [t4_plurigenus(alpha, beta, m) for m in levels],
            }
        )
        return report, 0
    if kind == "g2":
        report.update(
            {
                "model": "g2",
                "values": [sphere.s6_plurigenus(m) for m in levels],
            }
        )
        return report, 0
    model, param = loaded
    values = [
        invariant_harmonic_space(model, 0, 0, bundle_power=m).dimension
        for m in levels
    ]
    report.update({"model": args.model, "values": values})
    if param is not None:
        report["a"] = str(param)
    return report, 0


def _cmd_irregularity(args):
    a_list = _parse_a_list(args.a) if args.a else None
    kind, loaded = _load_model(args.model, a_list)
    if kind == "kt":
        if not a_list:
            raise InputError("the kt preset needs --a (e.g. --a 4*pi,generic)")
        rows = [{"a": str(a), "value": kt_irregularity(a)} for a in a_list]
        return {"model": "kt", "rows": rows}, 0
    if kind == "t4":
        (alpha, beta), member = _parse_t_member(args.t)
        return (
            {
                "model": "t4",
                "member": member,
                "value": t4_irregularity(alpha, beta),
            },
            0,
        )
    if kind == "g2":
        dim = invariant_harmonic_space(sphere.s6_model(), 1, 0).dimension
        return {"model": "g2", "value": dim}, 0
    model, param = loaded
    report = {
        "model": args.model,
        "value": invariant_harmonic_space(model, 1, 0).dimension,
    }
    if param is not None:
        report["a"] = str(param)
    return report, 0


def _cmd_hodge(args):
    model, desc = _lie_model_for(args)
    if args.power and args.model == "g2":
        raise RefusalError(
            "canonical powers of the sphere are exposed through plurigenera; "
            "the full-frame canonical bundle is not the sphere's"
        )
    space = invariant_harmonic_space(
        model, args.p, args.q, bundle_power=args.power
    )
    blocks = [
        {
            "character": [v.to_str(model.symbol) for v in blk.character.values],
            "dimension": blk.dimension,
        }
        for blk in space.blocks
    ]
    report = dict(desc)
    report.update(
        {
            "p": args.p,
            "q": args.q,
            "bundle_power": args.power,
            "dimension": space.dimension,
            "blocks": blocks,
        }
    )
    return report, 0


def _profile_report(profile: PlurigeneraProfile) -> Dict[str, object]:
    return {
        "values": [_jsonable(v) for v in profile.values],
        "kind": profile.kind,
        "degree": profile.degree,
        "kappa": _kappa_json(kodaira_dimension(profile)),
    }


def _cmd_kodaira(args):
    a_list = _parse_a_list(args.a) if args.a else None
    kind, loaded = _load_model(args.model, a_list)
    length = args.length
    if kind == "kt":
        if not a_list:
            raise InputError("the kt preset needs --a (e.g. --a 4*pi,generic)")
        rows = []
        for a in a_list:
            prof = kt_profile(a, length)
            row = {"a": str(a)}
            row.update(_profile_report(prof))
            rows.append(row)
        return {"model": "kt", "rows": rows}, 0
    if kind == "t4":
        (alpha, beta), member = _parse_t_member(args.t)
        prof = t4_profile(alpha, beta, length)
        report = {"model": "t4", "member": member}
        report.update(_profile_report(prof))
        return report, 0
    if kind == "g2":
        values = [sphere.s6_plurigenus(m) for m in range(1, length + 1)]
        prof = PlurigeneraProfile(values)
        report = {"model": "g2"}
        report.update(_profile_report(prof))
        return report, 0
    model, param = loaded
    values = [
        invariant_harmonic_space(model, 0, 0, bundle_power=m).dimension
        for m in range(1, length + 1)
    ]
    prof = PlurigeneraProfile(values)
    report = {"model": args.model}
    if param is not None:
        report["a"] = str(param)
    report.update(_profile_report(prof))
    return report, 0


def _factor_profile(spec: str, length: int) -> PlurigeneraProfile:
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    arg = arg.strip()
    if name == "kt":
        if not arg:
            raise InputError(f"factor {spec!r}: want kt:<a>, e.g. kt:4*pi")
        try:
            return kt_profile(PiParam.parse(arg), length)
        except ValueError as exc:
            raise InputError(f"factor {spec!r}: {exc}") from exc
    if name == "t4":
        if arg in ("", "std", "standard"):
            alpha, beta = t4_standard_pair()
        elif arg in ("0", "zero"):
            alpha, beta = t4_family_pair(0, 0)
        else:
            raise InputError(f"factor {spec!r}: want t4:std or t4:zero")
        return t4_profile(alpha, beta, length)
    if name == "rr":
        try:
            return rr_profile(int(arg), length)
        except ValueError as exc:
            raise InputError(f"factor {spec!r}: want rr:<genus>") from exc
    if name == "curve":
        try:
            return curve_profile(int(arg), length)
        except ValueError as exc:
            raise InputError(f"factor {spec!r}: want curve:<genus>") from exc
    if name == "torus":
        return torus_profile(length)
    if name == "s6":
        values = [sphere.s6_plurigenus(m) for m in range(1, length + 1)]
        return PlurigeneraProfile(values)
    raise InputError(
        f"unknown factor {spec!r}; want kt:<a>, t4:std, t4:zero, rr:<g>, "
        "curve:<g>, torus, or s6"
    )


def _cmd_kunneth(args):
    specs = [s for s in (args.factors or "").split(",") if s.strip()]
    if len(specs) < 2:
        raise InputError("--factors: want at least two comma-separated factors")
    profiles = [_factor_profile(s, args.length) for s in specs]
    product = profiles[0]
    for prof in profiles[1:]:
        product = kunneth(product, prof)
    factor_rows = []
    kappa_sum = 0.0
    for spec, prof in zip(specs, profiles):
        kappa = kodaira_dimension(prof)
        kappa_sum = kappa_sum + kappa
        row = {"factor": spec.strip()}
        row.update(_profile_report(prof))
        factor_rows.append(row)
    product_kappa = kodaira_dimension(product)
    report = {
        "factors": factor_rows,
        "product": _profile_report(product),
        "kappa_additive": product_kappa == kappa_sum,
    }
    return report, 0 if report["kappa_additive"] else 1


def _cmd_g2_verify(args):
    table = sphere.verify_bracket_table()
    crossrep = sphere.verify_cross_identities()
    membership = sphere.membership_sample_check(
        members=args.samples, nonmembers=args.negatives, seed=args.seed
    )
    projection = sphere.verify_projection()
    ok = table.ok and crossrep.ok and membership.ok and projection.ok
    report = {
        "bracket_table": table.summary(),
        "cross_product": crossrep.summary(),
        "membership": membership.summary(),
        "projection": projection.summary(),
        "ok": ok,
    }
    if table.mismatches:
        report["bracket_mismatches"] = table.mismatches
    return report, 0 if ok else 1


def _cmd_s6_report(args):
    structure = sphere.s6_structure_package()
    reduction = sphere.verify_reduction_brackets()
    census = sphere.s6_hodge_report(levels=args.levels)
    ok = structure.ok and reduction.ok and census.ok
    report = {
        "structure": structure.summary(),
        "reduction_brackets": reduction.summary(),
        "census": census.summary(),
        "ok": ok,
    }
    return report, 0 if ok else 1


def _cmd_rr(args):
    levels = _parse_m_spec(args.m)
    if args.genus < 2:
        raise InputError("--genus must be at least 2")
    values = [_jsonable(rr_plurigenus(args.genus, m)) for m in levels]
    prof = rr_profile(args.genus, max(DEFAULT_PROFILE_LENGTH, max(levels)))
    report = {
        "genus": args.genus,
        "levels": levels,
        "values": values,
        "kappa": _kappa_json(kodaira_dimension(prof)),
    }
    return report, 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "table"), default="json",
        help="output format (default json)",
    )
    common.add_argument(
        "--meta", action="store_true",
        help="include tool and invocation metadata in the report",
    )

    model_arg = argparse.ArgumentParser(add_help=False)
    model_arg.add_argument(
        "--model", required=True,
        help="preset kt, t4, or g2; or a path to a model JSON file",
    )
    a_arg = argparse.ArgumentParser(add_help=False)
    a_arg.add_argument(
        "--a", default=None,
        help="structure parameter(s): 'q*pi' or 'generic', comma-separated",
    )
    t_arg = argparse.ArgumentParser(add_help=False)
    t_arg.add_argument(
        "--t", default=None,
        help="t4 family member as 't1,t2' (default: the standard member)",
    )

    parser = argparse.ArgumentParser(
        prog="acx",
        description=(
            "Exact invariant almost-complex geometry: structure equations, "
            "plurigenera, Hodge data, and the seven-dimensional cross "
            "product algebra."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "nijenhuis", parents=[common, model_arg, a_arg],
        help="integrability tensor of a model",
    )
    sub.add_parser(
        "structure-eqs", parents=[common, model_arg, a_arg],
        help="coframe differentials split by bidegree",
    )
    p = sub.add_parser(
        "plurigenera", parents=[common, model_arg, a_arg, t_arg],
        help="pluricanonical section counts",
    )
    p.add_argument("--m", default="1..12", help="levels: '4', '1..12', or a comma list")
    p.add_argument(
        "--cross-check", action="store_true",
        help="re-derive each count by window enumeration (ACX_MODE_WINDOW)",
    )
    sub.add_parser(
        "irregularity", parents=[common, model_arg, a_arg, t_arg],
        help="closed (1,0)-form counts",
    )
    p = sub.add_parser(
        "hodge", parents=[common, model_arg, a_arg],
        help="invariant harmonic (p,q) dimensions",
    )
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument(
        "--power", type=int, default=0,
        help="canonical bundle power twisting the forms (default 0)",
    )
    p = sub.add_parser(
        "kodaira", parents=[common, model_arg, a_arg, t_arg],
        help="Kodaira dimension from the plurigenera profile",
    )
    p.add_argument("--length", type=int, default=DEFAULT_PROFILE_LENGTH)
    p = sub.add_parser(
        "kunneth", parents=[common],
        help="product profiles and Kodaira dimension additivity",
    )
    p.add_argument(
        "--factors", required=True,
        help="comma list of kt:<a>, t4:std, t4:zero, rr:<g>, curve:<g>, torus, s6",
    )
    p.add_argument("--length", type=int, default=DEFAULT_PROFILE_LENGTH)
    p = sub.add_parser(
        "g2-verify", parents=[common],
        help="bracket catalogue, Jacobi, membership, and cross identities",
    )
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--negatives", type=int, default=10)
    p.add_argument("--seed", type=int, default=20260815)
    p = sub.add_parser(
        "s6-report", parents=[common],
        help="sphere structure displays and invariant census",
    )
    p.add_argument("--levels", type=int, default=8)
    p = sub.add_parser(
        "rr", parents=[common],
        help="curve-fibration plurigenera by degree count",
    )
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--m", default="1..6")
    return parser


_HANDLERS = {
    "nijenhuis": _cmd_nijenhuis,
    "structure-eqs": _cmd_structure_eqs,
    "plurigenera": _cmd_plurigenera,
    "irregularity": _cmd_irregularity,
    "hodge": _cmd_hodge,
    "kodaira": _cmd_kodaira,
    "kunneth": _cmd_kunneth,
    "g2-verify": _cmd_g2_verify,
    "s6-report": _cmd_s6_report,
    "rr": _cmd_rr,
}


def run(argv: Sequence[str], stdout=None) -> int:
    """Parse argv, dispatch, print the report; returns the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(list(argv))
    report, code = _HANDLERS[args.command](args)
    if args.meta:
        report = dict(report)
        report["meta"] = {
            "tool": "acx",
            "version": __version__,
            "subcommand": args.command,
            "argv": list(argv),
        }
    stdout.write(_render(report, args.format))
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except RefusalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except (InputError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
