"""Report assembly and the json / csv / latex / text emitters.

A report is plain data::

    {"datum": {"family": "GL", "rank": 2},
     "tables": [{"lambda": [2, 0],
                 "P": [{"nu": [2, 0], "coeff": "1"}, ...],
                 "euler": [{"nu": [2, 0], "L": "q^2", "dim": 2, "qm1": [1, 2, 1]}, ...]}]}

Polynomials are canonical text and integers are never narrowed, so ``json``
and ``csv`` both round-trip exactly.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .hall_littlewood import hall_littlewood
from .hodge import euler_table
from .laurent import parse_laurent
from .rootdata import RootDatum, build_root_datum
from .symfunc import SymmetricFunction

FORMATS = ("json", "csv", "latex", "text")
CSV_FIELDS = ("family", "rank", "lambda", "nu", "P", "L", "dim", "qm1")


def table_record(datum: RootDatum, lam) -> dict:
    p = hall_littlewood(datum, lam)
    table = euler_table(p)
    return {
        "lambda": list(p.lam),
        "P": [{"nu": list(nu), "coeff": str(c)} for nu, c in p.expansion.items()],
        "euler": [
            {"nu": list(nu), "L": str(row.L), "dim": row.dimension, "qm1": list(row.qm1)}
            for nu, row in table
        ],
    }


def build_report(datum: RootDatum, lams: Sequence, threads: int = 1) -> dict:
    """One table per ``lam``, in the given order; any failure aborts the whole report."""
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            tables = list(pool.map(lambda lam: table_record(datum, lam), lams))
    else:
        tables = [table_record(datum, lam) for lam in lams]
    return {"datum": {"family": datum.family, "rank": datum.rank}, "tables": tables}


# -- json


def emit_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def parse_json(text: str) -> dict:
    return json.loads(text)


# -- csv: one line per (lambda, nu)


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


def emit_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    fam, rank = report["datum"]["family"], report["datum"]["rank"]
    for tab in report["tables"]:
        coeffs = {tuple(e["nu"]): e["coeff"] for e in tab["P"]}
        for row in tab["euler"]:
            nu = tuple(row["nu"])
            w.writerow([fam, rank, _ints(tab["lambda"]), _ints(nu), coeffs[nu], row["L"], row["dim"],
                        _ints(row["qm1"])])
    return buf.getvalue()


def parse_csv(text: str) -> dict:
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty csv report")
    split = lambda s: [int(x) for x in s.split()]
    report = {"datum": {"family": rows[0]["family"], "rank": int(rows[0]["rank"])}, "tables": []}
    current = None
    for r in rows:
        lam = split(r["lambda"])
        if current is None or current["lambda"] != lam:
            current = {"lambda": lam, "P": [], "euler": []}
            report["tables"].append(current)
        nu = split(r["nu"])
        current["P"].append({"nu": nu, "coeff": r["P"]})
        current["euler"].append({"nu": nu, "L": r["L"], "dim": int(r["dim"]), "qm1": split(r["qm1"])})
    return report


# -- latex


def _tex_poly(text: str) -> str:
    p = parse_laurent(text)
    s = p.to_str()
    out = []
    i = 0
    while i < len(s):
        if s[i] == "^":
            j = i + 1
            while j < len(s) and (s[j].isdigit() or s[j] == "-"):
                j += 1
            out.append("^{" + s[i + 1:j] + "}")
            i = j
        elif s[i] == "*":
            i += 1
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def _tex_weight(nu) -> str:
    return "(" + ",".join(str(x) for x in nu) + ")"


def emit_latex(report: dict) -> str:
    d = report["datum"]
    lines = [f"% Hall-Littlewood expansions and L_{{\\lambda\\nu}} for {d['family']} rank {d['rank']}"]
    for tab in report["tables"]:
        lam = _tex_weight(tab["lambda"])
        coeffs = {tuple(e["nu"]): e["coeff"] for e in tab["P"]}
        lines.append(f"% \\lambda = {lam}")
        lines.append("\\begin{tabular}{llll}")
        lines.append(f"$\\nu$ & $[m_\\nu] P_{{{lam}}}$ & $L_{{{lam}\\nu}}(q)$ & $\\dim$ \\\\")
        lines.append("\\hline")
        for row in tab["euler"]:
            nu = tuple(row["nu"])
            lines.append(f"${_tex_weight(nu)}$ & ${_tex_poly(coeffs[nu])}$ & ${_tex_poly(row['L'])}$ & "
                         f"{row['dim']} \\\\")
        lines.append("\\end{tabular}")
        lines.append("")
    return "\n".join(lines)


# -- text


def emit_text(report: dict) -> str:
    d = report["datum"]
    out = [f"datum {d['family']} rank {d['rank']}"]
    for tab in report["tables"]:
        lam = tab["lambda"]
        datum = build_root_datum(d["family"], d["rank"])
        p = SymmetricFunction(datum, {tuple(e["nu"]): parse_laurent(e["coeff"]) for e in tab["P"]})
        out.append(f"\nlambda = {lam}")
        out.append(f"  P = {p}")
        width = max(len(str(r["nu"])) for r in tab["euler"])
        for r in tab["euler"]:
            out.append(f"  nu = {str(r['nu']):<{width}}  dim {r['dim']:>3}  L = {r['L']}   (q-1)-coeffs {r['qm1']}")
    return "\n".join(out) + "\n"


EMITTERS = {"json": emit_json, "csv": emit_csv, "latex": emit_latex, "text": emit_text}


def emit(report: dict, fmt: str) -> str:
    return EMITTERS[fmt](report)
