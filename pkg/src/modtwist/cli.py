"""Command-line interface.

Exit codes: 0 success; 1 verified-negative result (e.g. a perfect check that
legitimately reports False); 2 usage or parse errors; 3 internal oracle
mismatches; 4 model validation failures; 5 parity mismatches between a model
and a level.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import selftest as selftest_mod
from .arith import Level
from .curves import (
    al_fixed_points,
    cusps_X0,
    cusps_oracle,
    genus_AL_quotient,
    genus_X0,
    genus_XNp,
    genus_XNp_hurwitz,
    lemma_pairs,
    low_genus_XNp,
    xplus_verdict,
)
from .extgroup import involutions_extending_wN, verify_relations, wgroup
from .galmodel import classify, validate_model
from .modelfile import ModelParseError, parse_model
from .twists import (
    ParityError,
    build_xi,
    centralizer_verdict,
    check_cocycle,
    twist_plan,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_MODEL = 4
EXIT_PARITY = 5


@dataclass
class Report:
    """Structured result of one CLI invocation; JSON round-trippable."""

    command: str
    inputs: dict
    outputs: dict
    elapsed_s: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "elapsed_s": self.elapsed_s,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        doc = json.loads(text)
        return cls(
            command=doc["command"],
            inputs=doc["inputs"],
            outputs=doc["outputs"],
            elapsed_s=doc["elapsed_s"],
        )


def _emit(report: Report, args, lines: list[str]) -> None:
    if args.json:
        print(report.to_json())
    else:
        for line in lines:
            print(line)


def _level_or_exit(N: int, p: int) -> Level:
    try:
        return Level(N, p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_genus(args) -> int:
    level = _level_or_exit(args.N, args.p)
    t0 = time.perf_counter()
    outputs: dict = {}
    lines = []
    if args.plus:
        if not level.cyclotomic:
            print(f"error: X+({level.N},{level.p}) requires a cyclotomic level", file=sys.stderr)
            return EXIT_USAGE
        rep = xplus_verdict(level)
        outputs = {"curve": rep.curve, "genus": rep.genus, "method": rep.method, "note": rep.note}
        lines.append(
            f"{rep.curve}: genus {rep.genus if rep.genus is not None else rep.note}"
        )
    else:
        g = genus_XNp(level)
        outputs = {"curve": f"X({level.N},{level.p})", "genus": g}
        lines.append(f"X({level.N},{level.p}): genus {g}")
        if args.oracle:
            go = genus_XNp_hurwitz(level)
            outputs["oracle_genus"] = go
            if go != g:
                print(
                    f"error: oracle mismatch: closed form {g}, Riemann-Hurwitz {go}",
                    file=sys.stderr,
                )
                return EXIT_ORACLE
            lines.append(f"oracle (Riemann-Hurwitz over the j-line): genus {go} [agrees]")
    report = Report(
        command="genus",
        inputs={"N": level.N, "p": level.p, "plus": args.plus, "oracle": args.oracle},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_cusps(args) -> int:
    if args.N <= 0:
        print("error: N must be positive", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    cusps = cusps_X0(args.N)
    outputs = {
        "N": args.N,
        "count": len(cusps),
        "cusps": [
            {"label": c.label, "n": c.n, "m": c.m, "width_class": c.h, "ram_degree": c.ram_degree}
            for c in cusps
        ],
    }
    lines = [f"X_0({args.N}): {len(cusps)} cusps"]
    for c in cusps:
        lines.append(f"  {c.label}  (ram degree {c.ram_degree} over X(1))")
    if args.oracle:
        n_orb = cusps_oracle(args.N)
        outputs["oracle_count"] = n_orb
        if n_orb != len(cusps):
            print(
                f"error: oracle mismatch: formula {len(cusps)}, orbit count {n_orb}",
                file=sys.stderr,
            )
            return EXIT_ORACLE
        lines.append(f"oracle (orbit count on P^1(Z/{args.N})): {n_orb} [agrees]")
    report = Report(
        command="cusps",
        inputs={"N": args.N, "oracle": args.oracle},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_structure(args) -> int:
    level = _level_or_exit(args.N, args.p)
    t0 = time.perf_counter()
    rep = wgroup(level)
    outputs = {
        "level": {"N": level.N, "p": level.p},
        "case": "cyclotomic" if level.cyclotomic else "non-cyclotomic",
        "order": rep.order,
        "structure": rep.structure,
        "v": rep.v,
        "generators": {
            name: [[m.a, m.b], [m.c, m.d]] for name, m in rep.generators.items()
        },
        "image_order": rep.image_group.order,
    }
    lines = [
        f"W({level.N},{level.p}): order {rep.order}, structure {rep.structure}",
        f"  mod-p image order: {rep.image_group.order}",
    ]
    for name, m in rep.generators.items():
        lines.append(f"  {name} = [[{m.a}, {m.b}], [{m.c}, {m.d}]]  (det {m.det})")
    if not level.cyclotomic:
        ok = verify_relations(level)
        inv = involutions_extending_wN(level)
        outputs["relations_verified"] = ok
        outputs["extending_involutions"] = len(inv.involutions)
        outputs["single_conjugacy_class"] = inv.single_conjugacy_class
        lines.append(f"  relations verified: {ok}")
        lines.append(
            f"  involutions extending w_N: {len(inv.involutions)}"
            f" (single conjugacy class: {inv.single_conjugacy_class})"
        )
        if not ok:
            report = Report(
                "structure", {"N": level.N, "p": level.p}, outputs, time.perf_counter() - t0
            )
            _emit(report, args, lines)
            return EXIT_ORACLE
    report = Report(
        command="structure",
        inputs={"N": level.N, "p": level.p},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_scan(args) -> int:
    t0 = time.perf_counter()
    if args.lemma:
        pairs = sorted(lemma_pairs(args.max))
        outputs = {"bound": args.max, "pairs": [list(x) for x in pairs]}
        lines = [f"pairs (N, p) with X_0(pN)/w_N of genus 0, pN <= {args.max}:"]
        lines += [f"  N={n}, p={p}" for n, p in pairs]
    else:
        levels = low_genus_XNp(args.max_n, args.max_p)
        outputs = {
            "max_n": args.max_n,
            "max_p": args.max_p,
            "levels": [{"N": lv.N, "p": lv.p, "genus": g} for lv, g in levels],
        }
        lines = [f"levels with genus X(N,p) <= 1, N <= {args.max_n}, p <= {args.max_p}:"]
        lines += [f"  X({lv.N},{lv.p}): genus {g}" for lv, g in levels]
    report = Report(
        command="scan",
        inputs={
            "lemma": args.lemma,
            "max": args.max,
            "max_n": args.max_n,
            "max_p": args.max_p,
        },
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_al_fixed(args) -> int:
    t0 = time.perf_counter()
    try:
        f = al_fixed_points(args.M, args.Q)
        g = genus_X0(args.M)
        gq = genus_AL_quotient(args.M, args.Q)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    outputs = {"M": args.M, "Q": args.Q, "fixed_points": f, "genus_X0": g, "genus_quotient": gq}
    lines = [
        f"w_{args.Q} on X_0({args.M}): {f} fixed points",
        f"genus X_0({args.M}) = {g}; genus X_0({args.M})/w_{args.Q} = {gq}",
    ]
    report = Report(
        command="al-fixed",
        inputs={"M": args.M, "Q": args.Q},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    level = _level_or_exit(args.N, args.p)
    t0 = time.perf_counter()
    case = classify(level)
    outputs = {"level": {"N": level.N, "p": level.p}, "case": case.value}
    report = Report(
        command="classify",
        inputs={"N": level.N, "p": level.p},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, [f"level ({level.N}, {level.p}): {case.value}"])
    return EXIT_OK


def _load_model_or_exit(path: str):
    try:
        model = parse_model(Path(path))
    except (ModelParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    errs = validate_model(model)
    if errs:
        for e in errs:
            print(f"model error: {e}", file=sys.stderr)
        raise SystemExit(EXIT_MODEL)
    return model


def cmd_twist_plan(args) -> int:
    level = _level_or_exit(args.N, args.p)
    model = _load_model_or_exit(args.model)
    t0 = time.perf_counter()
    k_fields = tuple(int(k) for k in args.k.split(",") if k) if args.k else ()
    try:
        plan = twist_plan(level, model, k_fields=k_fields)
    except ParityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    outputs = plan.to_jsonable()
    lines = [
        f"level ({level.N}, {level.p}): {plan.case}",
        f"twisted curves: {', '.join(plan.curves)}",
        f"centralizer of rho image: {plan.centralizer.value}",
        f"cocycles valid: {plan.cocycles_valid}",
        f"finiteness: {plan.finiteness}",
    ]
    if plan.field_k is not None:
        lines.insert(2, f"field k: squarefree label {plan.field_k}")
    report = Report(
        command="twist-plan",
        inputs={"N": level.N, "p": level.p, "model": args.model, "k": args.k},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK if plan.cocycles_valid else EXIT_ORACLE


def cmd_cocycle_check(args) -> int:
    model = _load_model_or_exit(args.model)
    t0 = time.perf_counter()
    k_char = None
    if args.k:
        if args.k not in model.characters:
            print(f"error: model has no character named {args.k!r}", file=sys.stderr)
            return EXIT_MODEL
        k_char = model.characters[args.k].values
    try:
        xi = build_xi(model, variant=args.variant, k_char=k_char)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARITY
    valid = check_cocycle(xi)
    outputs = {
        "variant": args.variant,
        "ambient": xi.ambient.value,
        "valid": valid,
        "values": {
            str(s): {"matrix": [list(g.rep[:2]), list(g.rep[2:])], "w": w}
            for s, (g, w) in xi.values.items()
        },
    }
    report = Report(
        command="cocycle-check",
        inputs={"model": args.model, "variant": args.variant, "k": args.k},
        outputs=outputs,
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, [f"ambient {xi.ambient.value}: cocycle valid: {valid}"])
    return EXIT_OK if valid else EXIT_NEGATIVE


def cmd_centralizer(args) -> int:
    model = _load_model_or_exit(args.model)
    t0 = time.perf_counter()
    verdict = centralizer_verdict(model)
    report = Report(
        command="centralizer",
        inputs={"model": args.model},
        outputs={"verdict": verdict.value},
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, [f"centralizer verdict: {verdict.value}"])
    return EXIT_OK


def cmd_selftest(args) -> int:
    t0 = time.perf_counter()
    results = selftest_mod.run(quick=args.quick, seed=args.seed)
    ok = all(passed for _name, passed, _detail in results)
    lines = []
    for name, passed, detail in results:
        status = "ok" if passed else "FAIL"
        lines.append(f"[{status}] {name}" + (f": {detail}" if detail else ""))
    lines.append(f"selftest: {'all passed' if ok else 'FAILURES detected'}")
    report = Report(
        command="selftest",
        inputs={"quick": args.quick, "seed": args.seed},
        outputs={
            "results": [
                {"name": n, "passed": p, "detail": d} for n, p, d in results
            ],
            "ok": ok,
        },
        elapsed_s=time.perf_counter() - t0,
    )
    _emit(report, args, lines)
    return EXIT_OK if ok else EXIT_ORACLE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modtwist",
        description="Exact computations around the modular curves X(N,p), "
        "their automorphisms and Galois twists.",
    )
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genus", help="genus of X(N,p) or X+(N,p)")
    g.add_argument("N", type=int)
    g.add_argument("p", type=int)
    g.add_argument("--plus", action="store_true", help="the quotient X+(N,p)")
    g.add_argument("--oracle", action="store_true", help="cross-check with Riemann-Hurwitz")
    g.set_defaults(func=cmd_genus)

    c = sub.add_parser("cusps", help="cusps of X_0(N)")
    c.add_argument("N", type=int)
    c.add_argument("--oracle", action="store_true", help="cross-check by orbit counting")
    c.set_defaults(func=cmd_cusps)

    s = sub.add_parser("structure", help="structure of W(N,p)")
    s.add_argument("N", type=int)
    s.add_argument("p", type=int)
    s.set_defaults(func=cmd_structure)

    sc = sub.add_parser("scan", help="scan levels")
    sc.add_argument("--lemma", action="store_true", help="genus-0 AL quotients X_0(pN)/w_N")
    sc.add_argument("--max", type=int, default=71, help="bound on pN for --lemma")
    sc.add_argument("--max-n", type=int, default=20, help="bound on N for the low-genus scan")
    sc.add_argument("--max-p", type=int, default=13, help="bound on p for the low-genus scan")
    sc.set_defaults(func=cmd_scan)

    al = sub.add_parser("al-fixed", help="Atkin-Lehner fixed points on X_0(M)")
    al.add_argument("M", type=int)
    al.add_argument("Q", type=int)
    al.set_defaults(func=cmd_al_fixed)

    cl = sub.add_parser("classify", help="cyclotomic or non-cyclotomic")
    cl.add_argument("N", type=int)
    cl.add_argument("p", type=int)
    cl.set_defaults(func=cmd_classify)

    tp = sub.add_parser("twist-plan", help="full twist plan for a model at a level")
    tp.add_argument("N", type=int)
    tp.add_argument("p", type=int)
    tp.add_argument("model", help="path to a JSON model file")
    tp.add_argument("--k", default="", help="comma-separated squarefree field labels")
    tp.set_defaults(func=cmd_twist_plan)

    cc = sub.add_parser("cocycle-check", help="build and check a twisting cocycle")
    cc.add_argument("model", help="path to a JSON model file")
    cc.add_argument("--variant", choices=("plain", "primed"), default="plain")
    cc.add_argument("--k", default="", help="named character for the w-component")
    cc.set_defaults(func=cmd_cocycle_check)

    ce = sub.add_parser("centralizer", help="centralizer verdict for a model")
    ce.add_argument("model", help="path to a JSON model file")
    ce.set_defaults(func=cmd_centralizer)

    st = sub.add_parser("selftest", help="run the internal invariant suites")
    st.add_argument("--quick", action="store_true", help="reduced ranges")
    st.add_argument("--seed", type=int, default=0)
    st.set_defaults(func=cmd_selftest)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
