"""Command line: ``hallhodge compute | table | verify``.

Exit codes: 0 success, 1 a verification instance failed, 2 usage or domain
error, 3 capacity exceeded, 4 internal consistency failure.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from .errors import CapacityError, ConfigurationError, ConsistencyError, DomainError
from .report import FORMATS, build_report, emit
from .rootdata import FAMILIES, build_root_datum, dominant_within_bound
from .verify import SUITES, run_suite


@dataclass(frozen=True)
class JobSpec:
    family: str
    rank: int
    lambdas: tuple = ()
    bound: int | None = None
    q0s: tuple = (2, 3)
    format: str = "text"
    out: str | None = None
    threads: int = 1

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ConfigurationError(f"format must be one of {FORMATS}")
        if self.bound is not None and self.bound < 0:
            raise ConfigurationError("bound must be non-negative")
        if any(q < 2 for q in self.q0s):
            raise ConfigurationError("q0 values must be at least 2")
        if self.threads < 1:
            raise ConfigurationError("threads must be positive")

    def datum(self):
        return build_root_datum(self.family, self.rank)

    def corpus(self):
        datum = self.datum()
        lams = [datum.require_dominant(lam) for lam in self.lambdas]
        if self.bound is not None:
            lams.extend(lam for lam in dominant_within_bound(datum, self.bound) if lam not in lams)
        if not lams:
            raise ConfigurationError("give --lambda or --bound")
        return datum, lams


def _coweight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coweight {text!r}; expected e.g. 2,0")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hallhodge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=FORMATS):
        p.add_argument("--family", required=True, choices=FAMILIES)
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--lambda", dest="lambdas", action="append", type=_coweight, default=[],
                       help="dominant coweight, comma separated (repeatable)")
        p.add_argument("--bound", type=int, help="include every dominant lambda with <2 lambda, rho> <= BOUND")
        p.add_argument("--q0", dest="q0s", action="append", type=int, help="field size (repeatable)")
        p.add_argument("--format", default="text", choices=formats)
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--threads", type=int, default=1)

    common(sub.add_parser("compute", help="P_lambda and its Euler table for each --lambda"))
    common(sub.add_parser("table", help="tables for all lambda within --bound"))
    v = sub.add_parser("verify", help="run a verification suite")
    common(v, formats=("text",))
    v.add_argument("--suite", required=True, choices=SUITES)
    return parser


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        spec = JobSpec(args.family, args.rank, tuple(args.lambdas), args.bound,
                       tuple(args.q0s or (2, 3)), args.format, args.out, args.threads)
        if args.command == "table" and spec.bound is None:
            raise ConfigurationError("table needs --bound")
        datum, lams = spec.corpus()
        if args.command in ("compute", "table"):
            _write(emit(build_report(datum, lams, spec.threads), spec.format), spec.out)
            return 0
        checks = run_suite(args.suite, datum, lams, spec.q0s)
        failed = sum(not c.passed for c in checks)
        lines = [c.line() for c in checks]
        lines.append(f"{args.suite}: {len(checks) - failed}/{len(checks)} passed")
        _write("\n".join(lines) + "\n", spec.out)
        return 1 if failed or not checks else 0
    except (ConfigurationError, DomainError) as exc:
        print(f"hallhodge: error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"hallhodge: capacity exceeded: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"hallhodge: internal consistency failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
