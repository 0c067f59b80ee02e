"""Command-line driver.

Subcommands:
    check <file>          exit 0 iff the map is valid and idempotent
    analyze <file>        full retract report (text or --json)
    gen                   emit reproducible random idempotent problem files
    selftest              run the embedded acceptance checks

Exit codes: 0 success, 1 invalid/not idempotent, 2 parse error,
3 internal certificate failure.
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .domains import QQ, ZZ, GF
from .endo import validate, idempotency_defect
from .engine import analyze, CertificateError, NotIdempotentError
from .generator import GeneratorSpec, problem_text
from .grammar import parse_problem, render_report, ParseError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_CERTIFICATE = 3


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_domain(text):
    if text == "QQ":
        return QQ
    if text == "ZZ":
        return ZZ
    if text.startswith("GF(") and text.endswith(")"):
        return GF(int(text[3:-1]))
    raise ValueError("unknown domain %r (use QQ, ZZ or GF(p))" % text)


def _cmd_check(args):
    ring, phi, _ = parse_problem(_load(args.file))
    if not validate(phi):
        bad = next(i for i in range(ring.laurent)
                   if phi.images[i].is_unit() is None)
        print("invalid: image of %s is not a unit: %s"
              % (ring.names[bad], phi.images[bad]), file=sys.stderr)
        return EXIT_INVALID
    defect = idempotency_defect(phi)
    bad = [i for i, delta in enumerate(defect) if not delta.is_zero()]
    if bad:
        for i in bad:
            print("not idempotent: phi²(%s) - phi(%s) = %s"
                  % (ring.names[i], ring.names[i], defect[i]), file=sys.stderr)
        return EXIT_INVALID
    print("ok: valid and idempotent")
    return EXIT_OK


def _cmd_analyze(args):
    _, phi, _ = parse_problem(_load(args.file))
    report = analyze(phi)
    out = render_report(report, "json" if args.json else "text")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def _cmd_gen(args):
    domain = _parse_domain(args.domain)
    # per-index seeds keep each emitted file reproducible on its own
    specs = [GeneratorSpec(args.n, args.d, args.r, args.seed + k,
                           args.complexity, domain)
             for k in range(args.count)]
    if args.threads > 1 and len(specs) > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            texts = list(pool.map(problem_text, specs))
    else:
        texts = [problem_text(s) for s in specs]
    if args.out_dir:
        import os
        os.makedirs(args.out_dir, exist_ok=True)
        for k, text in enumerate(texts):
            path = os.path.join(args.out_dir, "problem_%04d.ring" % k)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(path)
    else:
        sys.stdout.write("\n".join(texts))
    return EXIT_OK


def _cmd_selftest(args):
    from .selftest import run_selftest
    ok = run_selftest(threads=args.threads)
    return EXIT_OK if ok else EXIT_CERTIFICATE


def build_parser():
    parser = argparse.ArgumentParser(
        prog="retractlab",
        description="Analyze idempotent endomorphisms of mixed "
                    "Laurent/polynomial rings and classify their retracts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate and test idempotency")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("analyze", help="full retract analysis")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("gen", help="generate random idempotent instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--complexity", type=int, default=1)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--domain", default="QQ")
    p.add_argument("--out-dir")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("selftest", help="run the embedded acceptance checks")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_selftest)
    return parser


def run_cli(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print("cannot read input: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except NotIdempotentError as exc:
        print("not idempotent: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    except CertificateError as exc:
        print("certificate failure: %s" % exc, file=sys.stderr)
        if exc.evidence:
            print("evidence: %s" % exc.evidence, file=sys.stderr)
        return EXIT_CERTIFICATE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID


def main():
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
