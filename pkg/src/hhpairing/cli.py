"""``hhpairing`` command line: spaces, pairings, transforms and verification.

Exit codes: 0 when everything passes, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify
from .hochschild import hh_degree, mukai_gram, shklyarov_gram
from .records import RecordError, parse_kernel, parse_space
from .spaces import SpaceError
from .transforms import CatalogError, KernelError, transform_matrix


class UsageError(Exception):
    pass


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    line = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(r) for r in rows])


def _matrix_table(names: list[str], cols: list[str], m) -> str:
    return _table([[n] + [fmt(x) for x in row] for n, row in zip(names, m)], [""] + cols)


def _write_json(path: str | None, payload: dict) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(verify.dumps(payload))


def cmd_spaces(args) -> int:
    space = parse_space(args.space)
    ring = space.ring
    rows = [[name, f"({p},{q})", str(p - q)] for name, (p, q) in zip(ring.names, ring.bidegrees)]
    print(f"space {space.label}  dim {space.n}")
    print(_table(rows, ["basis", "(p,q)", "HH degree"]))
    print(f"td    = {space.todd}")
    print(f"ch(T) = {space.tangent_ch}")
    _write_json(args.json, {
        "space": space.to_record(),
        "basis": [{"name": n, "bidegree": list(b), "hh_degree": b[0] - b[1]}
                  for n, b in zip(ring.names, ring.bidegrees)],
        "todd": space.todd.to_dict(),
        "tangent_ch": space.tangent_ch.to_dict(),
    })
    return 0


def cmd_pairing(args) -> int:
    space = parse_space(args.space)
    gram = mukai_gram(space) if args.pairing == "mukai" else shklyarov_gram(space)
    names = list(space.ring.names)
    print(f"{args.pairing} pairing on {space.label}")
    print(_matrix_table(names, names, gram))
    deg = [hh_degree(b) for b in space.ring.bidegrees]
    for i in sorted(set(deg)):
        rows = [k for k, d in enumerate(deg) if d == i]
        cols = [k for k, d in enumerate(deg) if d == -i]
        print(f"\nHH_{i} x HH_{-i} block")
        print(_matrix_table([names[k] for k in rows], [names[k] for k in cols],
                            [[gram[r][c] for c in cols] for r in rows]))
    _write_json(args.json, {
        "space": space.to_record(),
        "pairing": args.pairing,
        "basis": names,
        "gram": [[fmt(x) for x in row] for row in gram],
    })
    return 0


def cmd_transform(args) -> int:
    source = parse_space(args.space)
    target = parse_space(args.target) if args.target else source
    if args.kernel is None:
        raise UsageError("transform needs --kernel")
    record = json.loads(args.kernel) if args.kernel.lstrip().startswith("{") else args.kernel
    if isinstance(record, dict) and record.get("kind") == "random":
        record.setdefault("seed", args.seed)
    kernel = parse_kernel(record, source, target)
    m = transform_matrix(kernel)
    print(f"kernel {kernel.label}: {source.label} -> {target.label}")
    print(f"ch = {kernel.ch}")
    print("rows: source basis, columns: image coordinates in the target basis")
    print(_matrix_table(list(source.ring.names), list(target.ring.names), m))
    _write_json(args.json, {
        "source": source.to_record(),
        "target": target.to_record(),
        "kernel": kernel.ch.value.to_dict(),
        "matrix": [[fmt(x) for x in row] for row in m],
    })
    return 0


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite, seed=args.seed, jobs=args.jobs)
    rep = verify.report(results, args.seed, args.suite, timings=args.timings)
    for r in results:
        print(f"{r.status.upper():4}  {r.name}  ({r.instances} instances)")
        if r.status != "pass":
            print(f"      witness: {json.dumps(r.witness, sort_keys=True, ensure_ascii=False)}")
    s = rep["summary"]
    print(f"{s['passed']}/{s['total']} checks passed")
    _write_json(args.json, rep)
    return 0 if s["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hhpairing", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spaces", help="print the basis table of a space")
    p.add_argument("--space", required=True, help='shorthand like "P2", "E", "P1xE" or a JSON record')
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_spaces)

    p = sub.add_parser("pairing", help="print a Gram matrix")
    p.add_argument("--space", required=True)
    p.add_argument("--pairing", choices=("mukai", "shk"), default="mukai")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("transform", help="print the matrix of an integral transform")
    p.add_argument("--space", required=True, help="source space")
    p.add_argument("--target", help="target space (defaults to the source)")
    p.add_argument("--kernel", help='JSON kernel record, e.g. {"kind": "identity"}')
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED, help="seed for random kernels")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="include per-check seconds (breaks byte-stability)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RecordError, json.JSONDecodeError, SpaceError, KernelError, CatalogError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
