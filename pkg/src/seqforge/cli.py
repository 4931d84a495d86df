"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 convention could not be resolved.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .construction import (
    ConstructionInput,
    THEOREMS,
    catalog,
    construct,
    corollary1_check,
    infer_e,
    pattern_for,
    verify_case,
    verify_pattern,
)
from .cyclotomy import (
    build_system,
    select_system_for_convention,
    six_sequences,
    system_report,
)
from .errors import ConventionError, DomainError
from .families import (
    BinaryFieldSpec,
    SequencePair,
    format_pair,
    gmw_pair,
    legendre_pair,
    m_sequence,
    twin_prime_pair,
)
from .fixtures import load_fixture_pair, load_listing
from .seqcore import (
    BinarySequence,
    QuaternarySequence,
    auto_spectrum,
    cross_spectrum,
    format_sequence,
    is_optimal_even_length,
    parse_sequence,
    r_max_squared,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CONVENTION = 0, 1, 2, 3

FAMILIES = ("legendre", "twin_prime", "gmw", "mseq") + tuple(
    f"cyclotomic_s{k}" for k in range(1, 7)
)


class Mismatch(Exception):
    """A rebuilt object differs from its reference."""


def _kv_params(items) -> dict:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise DomainError(f"expected key=value, got {item!r}")
        params[key] = value
    return params


def _int_param(params, key):
    if key not in params:
        raise DomainError(f"missing parameter {key}=")
    try:
        return int(params[key])
    except ValueError:
        raise DomainError(f"{key} must be an integer, got {params[key]!r}") from None


def _emit(args, report: dict) -> None:
    text = json.dumps(report, indent=2)
    if getattr(args, "output", None) and args.command != "generate":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _report(args, argv, inputs, outputs, started) -> dict:
    return {
        "command": list(argv),
        "inputs": inputs,
        "outputs": outputs,
        "timing_ms": round((time.perf_counter() - started) * 1000, 3),
        "version": __version__,
    }


# -- generate ---------------------------------------------------------------

def _generate_text(family: str, params: dict, args) -> tuple[str, dict]:
    if family == "legendre":
        pair = legendre_pair(_int_param(params, "p"))
    elif family == "twin_prime":
        pair = twin_prime_pair(_int_param(params, "p"))
    elif family == "gmw":
        poly = args.poly or params.get("poly")
        k = _int_param(params, "k")
        pair = gmw_pair(k, BinaryFieldSpec.from_bits(poly) if poly else None)
    elif family == "mseq":
        poly = args.poly or params.get("poly")
        spec = BinaryFieldSpec.from_bits(poly) if poly else BinaryFieldSpec.default(_int_param(params, "m"))
        if "m" in params and _int_param(params, "m") != spec.m:
            raise DomainError(f"m={params['m']} disagrees with polynomial degree {spec.m}")
        seq = m_sequence(spec)
        header = f"n={len(seq)} family=mseq params=m:{spec.m},poly:{spec.bits}"
        return f"{header}\n{format_sequence(seq)}\n", {"m": spec.m, "poly": spec.bits}
    else:
        k = int(family.rsplit("s", 1)[1])
        n = _int_param(params, "n")
        alpha = args.alpha if args.alpha is not None else params.get("alpha")
        system = build_system(n, int(alpha) if alpha is not None else None)
        seq = six_sequences(system)[k - 1]
        header = f"n={n} family={family} params=alpha:{system.generator}"
        return f"{header}\n{format_sequence(seq)}\n", {"n": n, "alpha": system.generator}
    return format_pair(pair), dict(pair.parameters)


def cmd_generate(args, argv) -> int:
    started = time.perf_counter()
    params = _kv_params(args.params)
    text, meta = _generate_text(args.family, params, args)
    if not args.output:
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.output, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)
    _emit(args, _report(args, argv, {"family": args.family, **params},
                        {"path": args.output, "parameters": meta}, started))
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def cmd_verify(args, argv) -> int:
    started = time.perf_counter()
    theorem = args.theorem.upper()
    params = _kv_params(args.params)
    if args.poly:
        params["poly"] = args.poly
    e = tuple(int(b) for b in args.e) if args.e else None
    if e is not None and (len(e) != 3 or set(e) - {0, 1}):
        raise DomainError(f"--e expects three bits like 001, got {args.e!r}")
    cases = catalog(theorem, e=e, sweep_e=args.sweep_e, **params)
    results = []
    for case in cases:
        res = verify_case(case)
        res["corollary1"] = corollary1_check(case.input).ok
        results.append(res)
        status = "PASS" if res["pattern_ok"] else "FAIL"
        print(
            f"{status} {theorem} #{res['index']} tuple=({','.join(res['tuple'])}) "
            f"e={''.join(map(str, res['e']))} r_max^2={res['r_max_squared']} "
            f"mismatches={len(res['mismatches'])}",
            file=sys.stderr,
        )
    all_ok = all(r["pattern_ok"] for r in results)
    _emit(args, _report(
        args, argv,
        {"theorem": theorem, "params": params, "sweep_e": args.sweep_e},
        {"parameters": cases[0].parameters if cases else {}, "cases": results, "all_passed": all_ok},
        started,
    ))
    return EXIT_OK if all_ok else EXIT_MISMATCH


# -- reproduce --------------------------------------------------------------

def _compare(name, got, want, notes):
    got, want = list(got), list(want)
    if got != want:
        if len(got) != len(want):
            raise Mismatch(f"{name}: length {len(got)} != reference {len(want)}")
        first = next(i for i, (g, w) in enumerate(zip(got, want)) if g != w)
        raise Mismatch(f"{name}: first difference at index {first} ({got[first]} != {want[first]})")
    notes.append(f"{name}: match ({len(got)} entries)")


def _single_e(cols, u):
    found = infer_e(*cols, u)
    if len(found) != 1:
        raise Mismatch(f"expected exactly one e reproducing u, found {found}")
    return found[0]


def _reproduce_1(notes) -> dict:
    listing = load_listing("example1")
    pair = load_fixture_pair("example1_pair")
    a0, a1 = pair.first, pair.second
    _compare("a0", a0, listing["a0"], notes)
    _compare("a1", a1, listing["a1"], notes)
    _compare("R_a0", auto_spectrum(a0).real_parts(), listing["R_a0"], notes)
    _compare("R_a1", auto_spectrum(a1).real_parts(), listing["R_a1"], notes)
    _compare("R_a0_a1", cross_spectrum(a0, a1).real_parts(), listing["R_a0_a1"], notes)
    _compare("R_a1_a0", cross_spectrum(a1, a0).real_parts(), listing["R_a1_a0"], notes)
    reference_u = QuaternarySequence(listing["u"])
    e = _single_e((a0, a1, a0, a1), reference_u)
    notes.append(f"e inferred as {e}")
    u = construct(ConstructionInput(a0, a1, a0, a1, e))
    _compare("u", u, reference_u, notes)
    spec = auto_spectrum(u)
    _compare("R_u", [v for v in spec.off_phase()], listing["R_u"], notes)
    return {"e": list(e), "u": format_sequence(u), "r_max_squared": r_max_squared(spec)}


def _reproduce_2(notes) -> dict:
    listing = load_listing("example2")
    pair = gmw_pair(3, BinaryFieldSpec.from_bits("1000011"))
    fixture = load_fixture_pair("example2_pair")
    _compare("a0", pair.first, listing["a0"], notes)
    _compare("a1", pair.second, listing["a1"], notes)
    _compare("pair fixture", pair.first.symbols + pair.second.symbols,
             fixture.first.symbols + fixture.second.symbols, notes)
    s, t = pair.first, pair.second
    reference_u = QuaternarySequence(listing["u"])
    e = _single_e((s, t, s, t), reference_u)
    notes.append(f"e inferred as {e}")
    u = construct(ConstructionInput(s, t, s, t, e))
    _compare("u", u, reference_u, notes)
    verdict = verify_pattern(u, pattern_for("T6", 9))
    if not verdict.ok:
        raise Mismatch(f"R_u: pattern mismatch at tau={verdict.mismatches[0][0]}")
    notes.append("R_u: matches the modulus-9 pattern at every shift")
    measured = [v.re for v in auto_spectrum(u).off_phase()]
    typos = [
        tau for tau, (m, p) in enumerate(zip(measured, listing["R_u"]), start=1) if m != p
    ]
    notes.append(f"reference R_u differs from the measured spectrum at tau={typos} (typographical)")
    return {"e": list(e), "u": format_sequence(u), "r_max_squared": verdict.r_max_squared,
            "reference_spectrum_irregularities": typos}


def _reproduce_3(notes) -> dict:
    listing = load_listing("example3")
    system = build_system(17, 3)
    for k in range(4):
        _compare(f"C{k}", system.classes[k], sorted(listing[f"C{k}"]), notes)
    s = six_sequences(system)
    for k in (1, 3, 4, 6):
        _compare(f"s{k}", s[k - 1], listing[f"s{k}"], notes)
    inp = ConstructionInput(s[5], s[2], s[3], s[0], (0, 0, 0))
    u = construct(inp)
    _compare("u", u, listing["u"], notes)
    spec = auto_spectrum(u)
    _compare("R_u", list(spec.off_phase()), listing["R_u"], notes)
    return {"e": [0, 0, 0], "u": format_sequence(u), "r_max_squared": r_max_squared(spec)}


def cmd_reproduce(args, argv) -> int:
    started = time.perf_counter()
    notes: list[str] = []
    runner = {1: _reproduce_1, 2: _reproduce_2, 3: _reproduce_3}[args.example]
    try:
        outputs = runner(notes)
        outputs["match"] = True
        code = EXIT_OK
    except Mismatch as exc:
        notes.append(str(exc))
        print(f"mismatch: {exc}", file=sys.stderr)
        outputs = {"match": False, "error": str(exc)}
        code = EXIT_MISMATCH
    outputs["notes"] = notes
    _emit(args, _report(args, argv, {"example": args.example}, outputs, started))
    return code


# -- spectrum ---------------------------------------------------------------

def _read_sequence_arg(value: str, kind):
    if os.path.isfile(value):
        with open(value, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        body = [ln for ln in lines if not ln.startswith("n=")]
        if not body:
            raise DomainError(f"{value}: no sequence found")
        value = body[0]
    return parse_sequence(value, kind)


def cmd_spectrum(args, argv) -> int:
    started = time.perf_counter()
    seq = _read_sequence_arg(args.sequence, args.kind)
    spec = auto_spectrum(seq)
    if args.csv:
        lines = ["tau,re,im"] + [f"{tau},{v.re},{v.im}" for tau, v in enumerate(spec)]
        text = "\n".join(lines) + "\n"
        if args.output:
            with open(args.output, "w", encoding="ascii") as fh:
                fh.write(text)
        sys.stdout.write(text)
        return EXIT_OK
    optimal = None
    if isinstance(seq, QuaternarySequence) and len(seq) % 2 == 0:
        optimal = is_optimal_even_length(seq).optimal
    outputs = {
        "length": len(seq),
        "alphabet": seq.alphabet,
        "spectrum": spec.to_json(),
        "r_max_squared": r_max_squared(spec) if len(seq) > 1 else None,
        "optimal": optimal,
    }
    _emit(args, _report(args, argv, {"sequence": format_sequence(seq)}, outputs, started))
    return EXIT_OK


# -- cyclotomy --------------------------------------------------------------

def cmd_cyclotomy(args, argv) -> int:
    started = time.perf_counter()
    if args.target:
        system = select_system_for_convention(args.n, args.target)
    else:
        system = build_system(args.n, args.alpha)
    report = system_report(system)
    _emit(args, _report(args, argv, {"n": args.n, "alpha": args.alpha, "target": args.target},
                        report, started))
    return EXIT_OK if report["closed_form_matches"] else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV output for spectra")
    common.add_argument("--output", "-o", help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="seqforge",
        description="Optimal even-length quaternary sequences from interleaved binary columns.",
    )
    parser.add_argument("--version", action="version", version=f"seqforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="generate a sequence or pair")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. p=7 m=6 k=3 n=17")
    p.add_argument("--poly", help="primitive polynomial bits, highest degree first")
    p.add_argument("--alpha", type=int, help="generator for cyclotomic families")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="verify a theorem's catalog")
    p.add_argument("theorem", type=str.upper, choices=sorted(THEOREMS, key=lambda t: int(t[1:])))
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. n=17, p=3, k=3, m=5")
    p.add_argument("--sweep-e", action="store_true", help="run every e of the required parity")
    p.add_argument("--e", help="explicit e as three bits, e.g. 100")
    p.add_argument("--poly", help="primitive polynomial bits for T6")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reproduce", parents=[common], help="rebuild a reference example")
    p.add_argument("example", type=int, choices=(1, 2, 3))
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("spectrum", parents=[common], help="autocorrelation spectrum")
    p.add_argument("sequence", help="inline literal like 0,1,2,3 or a file path")
    p.add_argument("--kind", choices=("binary", "quaternary"))
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("cyclotomy", parents=[common], help="quartic cyclotomic system report")
    p.add_argument("n", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--target", help="normalization to search for: y=-1 or x=+-1")
    p.set_defaults(func=cmd_cyclotomy)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except ConventionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVENTION
    except (DomainError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
