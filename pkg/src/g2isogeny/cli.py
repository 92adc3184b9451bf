"""Command line: ``compute``, ``scan`` and ``example``.

Every code path prints JSON (or, for ``compute --format text``, a short
report).  Failures print {"status": "error", "code": ..., "module": ...}
and exit with the code attached to the error class:

    0 ok, 1 internal, 2 parse/curve, 3 jacobian, 4 secant/pipeline,
    5 recovery, 6 verify.
"""

import argparse
import json
import logging
import sys
import time

from .curve import Genus2Curve
from .errors import IsogenyError, ParseError
from .isogeny import alternative_model, isogenous_curve
from .jacobian import MumfordPoint
from .scan import scan
from .verify import count_points, same_invariants, twist_equiv, weil_poly, weil_poly_of

SAFE_INT = 2 ** 53

EXAMPLE_JOB = {
    "curve": {"p": 997, "F": [630, 503, 64, 363, 99, 113, 1]},
    "generators": [
        {"a": [208, 392, 1], "b": [603, 579, 0, 0], "d": 2},
        {"a": [527, 48, 1], "b": [832, 918, 0, 0], "d": 2},
    ],
    "options": {"verify": True, "emit_intermediate": False, "seed": 0},
    "expected_curve": {"G": [474, 174, 35, 613, 183, 118, 0]},
}


def to_jsonable(obj):
    """Recursively turn ints >= 2^53 into decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < SAFE_INT else str(obj)
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def _int(v, what):
    if isinstance(v, bool):
        raise ParseError("%s: expected an integer, got a boolean" % what)
    if isinstance(v, int):
        return v
    if isinstance(v, str) and v.lstrip("-").isdigit():
        return int(v)
    raise ParseError("%s: expected an integer, got %r" % (what, v))


def parse_job(text):
    """JobSpec from JSON text: returns (curve, D1, D2, options, expected G or None)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("malformed JSON: %s" % exc) from None
    if not isinstance(obj, dict):
        raise ParseError("job must be a JSON object")
    try:
        c = obj["curve"]
        p = _int(c["p"], "curve.p")
        F = [_int(x, "curve.F") for x in c["F"]]
        gens = obj["generators"]
        if len(gens) != 2:
            raise ParseError("exactly two generators are required")
        Ds = []
        for g in gens:
            a = [_int(x, "generator.a") % p for x in g["a"]]
            b = [_int(x, "generator.b") % p for x in g["b"]]
            Ds.append(MumfordPoint(tuple(a), tuple(b), _int(g["d"], "generator.d")))
        options = dict(obj.get("options") or {})
        expected = obj.get("expected_curve")
        G = None
        if expected is not None:
            G = tuple(_int(x, "expected_curve.G") % p for x in expected["G"])
            if len(G) != 7:
                raise ParseError("expected_curve.G needs 7 coefficients")
    except (KeyError, TypeError) as exc:
        raise ParseError("missing or malformed field: %s" % exc) from None
    if len(F) != 7:
        raise ParseError("curve.F needs 7 coefficients")
    H = Genus2Curve(p, tuple(F))
    return H, Ds[0], Ds[1], options, G


def verification_report(H, X, expected_G=None, result=None):
    N1, N2 = count_points(H, 1), count_points(H, 2)
    W_H = weil_poly(N1, N2, H.p)
    W_X = weil_poly_of(X)
    match = None
    if X.kind == "sextic":
        if expected_G is not None:
            match = same_invariants(X.G, expected_G, H.p)
        elif result is not None:
            alt = alternative_model(H, result)
            if alt is not None:
                match = same_invariants(X.G, alt.G, H.p)
    return {"N1": N1, "N2": N2, "weil_H": W_H.to_json(), "weil_X": W_X.to_json(),
            "twist_equiv": twist_equiv(W_X, W_H), "invariants_match": match}


def compute(text, verify=False, emit_intermediate=False):
    """Run a job given as JSON text; returns the output document."""
    H, D1, D2, options, expected = parse_job(text)
    verify = verify or bool(options.get("verify", False))
    emit_intermediate = emit_intermediate or bool(options.get("emit_intermediate", False))
    t0 = time.perf_counter()
    result = isogenous_curve(H, D1, D2)
    elapsed = time.perf_counter() - t0
    out = {"status": "ok", "p": H.p, "curve": result.curve.to_json(),
           "pipeline_seconds": round(elapsed, 6)}
    if emit_intermediate:
        out["intermediate"] = result.provenance.to_json()
    if verify:
        out["verification"] = verification_report(H, result.curve, expected, result)
    out["_display"] = str(result.curve)
    return out


def _text_report(doc):
    lines = ["X: %s" % doc["_display"]]
    ver = doc.get("verification")
    if ver:
        lines.append("N1 = %d, N2 = %d" % (ver["N1"], ver["N2"]))
        lines.append("P_H coefficients: %s" % ver["weil_H"])
        lines.append("P_X coefficients: %s" % ver["weil_X"])
        lines.append("twist_equiv: %s" % ver["twist_equiv"])
        lines.append("invariants_match: %s" % ver["invariants_match"])
    return "\n".join(lines)


def _emit(doc, stream=None):
    stream = stream or sys.stdout
    doc = {k: v for k, v in doc.items() if not k.startswith("_")}
    json.dump(to_jsonable(doc), stream, indent=2)
    stream.write("\n")


def _error_doc(exc):
    if isinstance(exc, IsogenyError):
        return exc.to_json(), exc.exit_code
    return {"status": "error", "code": "Internal", "module": "cli",
            "message": "%s: %s" % (type(exc).__name__, exc)}, 1


def cmd_compute(args):
    try:
        with open(args.input) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (args.input, exc.strerror)) from None
    doc = compute(text, args.verify, args.emit_intermediate)
    if args.format == "text":
        print(_text_report(doc))
    else:
        _emit(doc)
    return 0


def cmd_scan(args):
    if args.pmax > 997:
        raise ParseError("--pmax is capped at 997")
    report = scan(args.pmin, args.pmax, args.count, args.seed)
    doc = dict(status="ok", params={"pmin": args.pmin, "pmax": args.pmax,
                                    "count": args.count, "seed": args.seed},
               **report.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            _emit(doc, fh)
        _emit({"status": "ok", "instances": len(report.instances),
               "failures": len(report.failures), "out": args.out})
    else:
        _emit(doc)
    hard = [f for f in report.failures if f["code"] == "TwistMismatch"]
    return 6 if hard else 0


def cmd_example(args):
    _emit(EXAMPLE_JOB)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="g2isogeny", description="Explicit (3,3)-isogenies of genus-2 Jacobians over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="run the pipeline on a JSON job file")
    c.add_argument("--input", required=True, help="job file (see 'example')")
    c.add_argument("--verify", action="store_true", help="count points and compare invariants")
    c.add_argument("--emit-intermediate", action="store_true",
                   help="include secant matrix, projection maps, Q and C")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("scan", help="harvest random instances with a rational (3,3) kernel")
    s.add_argument("--pmin", type=int, default=11)
    s.add_argument("--pmax", type=int, default=97)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None, help="write the instance list here")
    s.set_defaults(func=cmd_scan)

    e = sub.add_parser("example", help="print the built-in F_997 job")
    e.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as exc:    # every path must end in JSON
        doc, code = _error_doc(exc)
        _emit(doc)
        return code


if __name__ == "__main__":
    sys.exit(main())
