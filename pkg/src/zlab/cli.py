"""zlab command line.  Exit codes: 0 pass, 1 mathematical mismatch, 2 usage error."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import contracted as ct
from . import genforms as gf
from . import hilbert as hs
from . import lexseg
from . import rees
from . import staircase as st
from .reproduce import run_manifest
from .scan import SCANS, ScanConfig, render, run_scan, scan_failed

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ideal(text: str) -> st.ColumnSequence:
    try:
        return st.parse_ideal(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, default=str))


def _gens(a, x="x", y="y") -> str:
    return st.format_generators(st.minimal_generators(a), x, y)


def parse_contracted(text: str):
    """A ledger ``d=..; form ..: ..``, Hilbert-Burch data ``hb:b1,..;alpha1,..`` or a monomial ideal."""
    text = text.strip()
    try:
        if text.startswith("d="):
            return ct.parse_ledger(text), None
        if text.startswith("hb:"):
            bpart, apart = text[3:].split(";")
            hb = ct.HilbertBurchData(
                tuple(int(t) for t in bpart.split(",")), tuple(Fraction(t) for t in apart.split(","))
            )
            return ct.ledger_from_hilbert_burch(hb), None
        a = st.parse_ideal(text)
        return ct.ledger_from_monomial(a), a
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ----------------------------------------------------------------- commands


def cmd_reproduce(args) -> int:
    man = run_manifest(args.only)
    for line in man.lines():
        print(line)
    print(f"{sum(c.passed for c in man.checks)}/{len(man.checks)} checks pass")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(man.to_dict(), fh, indent=2)
    return EXIT_OK if man.ok else EXIT_MISMATCH


def cmd_hs(args) -> int:
    a = _ideal(args.ideal)
    s = hs.hilbert_series(a, window=args.window)
    out = {"ideal": str(a), "generators": _gens(a), "series": str(s), **s.to_dict(), "cm": s.is_cm()}
    if args.check:
        lengths = [hs.hilbert_samuel(a, n) for n in range(1, 5)]
        brute = [hs.brute_force_colength(a, n) for n in range(1, 5)]
        out["oracle_ok"] = lengths == brute and all(s.samuel(n) == lengths[n - 1] for n in range(1, 5))
        _emit(out)
        return EXIT_OK if out["oracle_ok"] else EXIT_MISMATCH
    _emit(out)
    return EXIT_OK


def cmd_depth(args) -> int:
    a = _ideal(args.ideal)
    v = lexseg.depth_classify(a, args.kmax, args.power_probe)
    _emit({"ideal": str(a), **v.to_dict()})
    return EXIT_OK


def cmd_factor(args) -> int:
    ledger, a = parse_contracted(args.target)
    fac = ct.zariski_factor(ledger)
    out = {
        "ledger": str(ledger),
        "m_exponent": fac.m_exp,
        "factors": [{"form": str(f), "order": L.d, "a": str(L), "generators": _gens(L)} for f, L in fac.factors],
        "colength": ct.colength_composite(ledger),
    }
    status = EXIT_OK
    if a is not None:
        rec = ct.reconstruct_monomial(fac)
        out["reconstruction_ok"] = rec == a
        status = EXIT_OK if rec == a else EXIT_MISMATCH
    _emit(out)
    return status


def cmd_hs_contracted(args) -> int:
    ledger, a = parse_contracted(args.target)
    s = ct.hilbert_series_composite(ledger)
    out = {"ledger": str(ledger), "series": str(s), **s.to_dict()}
    status = EXIT_OK
    if a is not None:
        out["direct_ok"] = s == hs.hilbert_series(a)
        status = EXIT_OK if out["direct_ok"] else EXIT_MISMATCH
    _emit(out)
    return status


def cmd_depth_contracted(args) -> int:
    ledger, _ = parse_contracted(args.target)
    _emit({"ledger": str(ledger), **ct.depth_composite(ledger).to_dict()})
    return EXIT_OK


def cmd_transform(args) -> int:
    a = _ideal(args.ideal)
    if not st.is_lex(a):
        raise UsageError(f"{a} is not a lex-segment ideal")
    prof = lexseg.blocks(a)
    t = lexseg.transform(a)
    sub = lexseg.transform_by_substitution(a)
    out = {
        "ideal": str(a),
        "blocks": list(prof.p),
        "c": prof.c,
        "kind": lexseg.transform_is_lex(prof),
        "transform": None if t is None else _gens(t, "z", "y"),
        "transform_a": None if t is None else str(t),
        "routes_agree": t == sub,
    }
    _emit(out)
    return EXIT_OK if t == sub else EXIT_MISMATCH


def cmd_generic(args) -> int:
    try:
        degs = [int(t) for t in args.degrees.split(",") if t.strip()]
        h = gf.generic_hs(degs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    prof = gf.delta_profile(h)
    L = gf.lex_from_profile(prof)
    v = lexseg.depth_classify(L)
    _emit(
        {
            "degrees": degs,
            "hs": h,
            "delta": prof.coefficients(),
            "profile": {"d1": prof.d1, "p": list(prof.p), "c": prof.c},
            "lex": str(L),
            "lex_generators": _gens(L),
            "depth_verdict": v.to_dict(),
        }
    )
    return EXIT_OK


def cmd_rees(args) -> int:
    a = _ideal(args.ideal)
    try:
        basis, order = rees.gb_family(a, args.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fam = args.family if args.family != "auto" else rees.eligible_families(a)[0]
    caps = {"tdeg": args.tdeg_cap, "xy": args.xy_cap if args.xy_cap else a[-1] + a.d}
    bb = rees.buchberger_verify(basis, order)
    viol = rees.toric_membership_sample(a, basis, order, caps["tdeg"], caps["xy"])
    _emit(
        {
            "ideal": str(a),
            "family": fam,
            "basis": [str(g) for g in basis],
            "order_weights": list(order.weights),
            "buchberger_ok": bb,
            "toric_sample_ok": not viol,
            "toric_violations": [str(b) for v in viol[:10] for b in v.binomials()],
            "normal": rees.normality_certificate(basis, order),
            "integrally_closed": rees.crosscheck_integral_closedness(a),
            "caps": caps,
        }
    )
    return EXIT_OK if bb and not viol else EXIT_MISMATCH


def cmd_scan(args) -> int:
    try:
        cfg = ScanConfig(
            d_max=args.dmax,
            a_d_max=args.admax,
            kmax=args.kmax,
            seed=args.seed,
            mode=args.mode,
            samples=args.samples,
            out=args.out,
            format=args.format,
            jobs=args.jobs,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = run_scan(args.scan, cfg)
    text = render(report, cfg.format)
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
        print(json.dumps(report["summary"], indent=2, sort_keys=True))
    else:
        sys.stdout.write(text)
    return EXIT_MISMATCH if scan_failed(report) else EXIT_OK


# ------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zlab", description="Monomial and contracted ideals in k[x, y].")
    sub = p.add_subparsers(dest="command", required=True)
    ideal_help = "ideal as a:0,3,3,5 or g:(3,0)(1,3)(0,5)"

    r = sub.add_parser("reproduce", help="re-derive every published number")
    r.add_argument("--only", nargs="*", help="check ids to run")
    r.add_argument("--out", help="write the manifest as JSON")
    r.set_defaults(fn=cmd_reproduce)

    h = sub.add_parser("hs", help="Hilbert series of a monomial ideal")
    h.add_argument("ideal", help=ideal_help)
    h.add_argument("--window", type=int, default=3)
    h.add_argument("--check", action="store_true", help="compare against brute-force colengths")
    h.set_defaults(fn=cmd_hs)

    d = sub.add_parser("depth", help="depth of the associated graded ring")
    d.add_argument("ideal", help=ideal_help)
    d.add_argument("--kmax", type=int, default=6)
    d.add_argument("--power-probe", type=int, default=4)
    d.set_defaults(fn=cmd_depth)

    for name, fn, what in (
        ("factor", cmd_factor, "Zariski factorization"),
        ("hs-contracted", cmd_hs_contracted, "Hilbert series from the factors"),
        ("depth-contracted", cmd_depth_contracted, "depth from the factors"),
    ):
        f = sub.add_parser(name, help=what + " of a contracted ideal")
        f.add_argument("target", help="ledger 'd=5; form x+2y: 3,2,1', 'hb:b1,..;alpha1,..' or a contracted monomial ideal")
        f.set_defaults(fn=fn)

    t = sub.add_parser("transform", help="the transform T(L) of a lex-segment ideal")
    t.add_argument("ideal", help=ideal_help)
    t.set_defaults(fn=cmd_transform)

    g = sub.add_parser("generic", help="lex ideal of generic forms of given degrees")
    g.add_argument("degrees", help="comma separated, e.g. 5,7,8")
    g.set_defaults(fn=cmd_generic)

    re_ = sub.add_parser("rees", help="Groebner basis of the Rees presentation of a lex ideal")
    re_.add_argument("ideal", help=ideal_help)
    re_.add_argument("--family", default="auto", choices=("auto",) + rees.FAMILIES)
    re_.add_argument("--tdeg-cap", type=int, default=4)
    re_.add_argument("--xy-cap", type=int, default=0, help="default a_d + d")
    re_.set_defaults(fn=cmd_rees)

    s = sub.add_parser("scan", help="census scans")
    s.add_argument("scan", choices=SCANS)
    s.add_argument("--dmax", type=int, default=5)
    s.add_argument("--admax", type=int, default=10)
    s.add_argument("--kmax", type=int, default=6)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", default="exhaustive", choices=("exhaustive", "sampled"))
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--out")
    s.add_argument("--format", default="json", choices=("json", "csv"))
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(fn=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"zlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
