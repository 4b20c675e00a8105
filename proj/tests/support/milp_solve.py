#!/usr/bin/env python3
"""Reads an LP or MPS model file, solves it with scipy's HiGHS backend and
writes a `<name> <value>` solution file whose first line is a comment with
the objective value.

Usage: milp_solve.py MODEL_FILE SOLUTION_OUT [TIME_LIMIT_S]

Exit codes: 0 solved, 4 infeasible, 5 unbounded/other, 2 usage/parse error.
"""

import re
import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

INF = float("inf")


class Model:
    def __init__(self):
        self.var_names = []
        self.var_index = {}
        self.objective = {}
        self.rows = []  # (terms dict, sense, rhs)
        self.lower = {}
        self.upper = {}
        self.integer = set()
        self.binary = set()

    def var(self, name):
        if name not in self.var_index:
            self.var_index[name] = len(self.var_names)
            self.var_names.append(name)
        return self.var_index[name]


TERM_RE = re.compile(
    r"([+-])?\s*(\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)?\s*([A-Za-z_][A-Za-z0-9_]*)"
)
NUM_RE = re.compile(r"[-+]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?$")


def parse_terms(text, model):
    terms = {}
    for sign, coeff, name in TERM_RE.findall(text):
        value = float(coeff) if coeff else 1.0
        if sign == "-":
            value = -value
        terms[model.var(name)] = terms.get(model.var(name), 0.0) + value
    return terms


def parse_lp(text):
    model = Model()
    section = None
    entries = []  # (kind, text) accumulated logical entries
    current = None
    for raw in text.splitlines():
        line = raw.rstrip()
        stripped = line.strip()
        low = stripped.lower()
        if low in ("minimize", "maximize", "subject to", "bounds", "binaries",
                   "generals", "end", "binary", "general"):
            if current is not None:
                entries.append((section, current))
                current = None
            section = low
            continue
        if not stripped:
            continue
        if section in ("minimize", "subject to"):
            if re.match(r"^\s*[A-Za-z_][A-Za-z0-9_]*\s*:", line):
                if current is not None:
                    entries.append((section, current))
                current = stripped
            else:
                current += " " + stripped  # wrapped continuation
        else:
            entries.append((section, stripped))
    if current is not None:
        entries.append((section, current))

    for section, text_entry in entries:
        if section == "minimize":
            body = text_entry.split(":", 1)[1]
            model.objective = parse_terms(body, model)
        elif section == "subject to":
            body = text_entry.split(":", 1)[1]
            m = re.search(r"(<=|>=|=)\s*([-+]?\d+(?:\.\d+)?(?:[eE][+-]?\d+)?)\s*$", body)
            if not m:
                raise ValueError("constraint without sense: " + text_entry)
            terms = parse_terms(body[: m.start()], model)
            model.rows.append((terms, m.group(1), float(m.group(2))))
        elif section == "bounds":
            parts = text_entry.split()
            if len(parts) == 3 and parts[1] == "=":
                v = model.var(parts[0])
                model.lower[v] = model.upper[v] = float(parts[2])
            elif len(parts) == 3 and parts[1] == "<=":
                model.upper[model.var(parts[0])] = float(parts[2])
            elif len(parts) == 5 and parts[1] == "<=" and parts[3] == "<=":
                v = model.var(parts[2])
                model.lower[v] = float(parts[0])
                model.upper[v] = float(parts[4])
            else:
                raise ValueError("unsupported bound: " + text_entry)
        elif section in ("binaries", "binary"):
            for name in text_entry.split():
                model.binary.add(model.var(name))
        elif section in ("generals", "general"):
            for name in text_entry.split():
                model.integer.add(model.var(name))
    return model


def parse_mps(text):
    model = Model()
    section = None
    row_sense = {}
    objective_row = None
    integer_mode = False
    for raw in text.splitlines():
        if not raw.strip() or raw.startswith("*"):
            continue
        if not raw[0].isspace():
            section = raw.split()[0]
            continue
        fields = raw.split()
        if section == "ROWS":
            sense, name = fields[0], fields[1]
            if sense == "N":
                objective_row = name
            else:
                row_sense[name] = sense
                model.rows.append(({}, {"L": "<=", "G": ">=", "E": "="}[sense], 0.0))
                row_sense[name] = len(model.rows) - 1
        elif section == "COLUMNS":
            if len(fields) >= 3 and fields[1] == "'MARKER'":
                integer_mode = fields[2] == "'INTORG'"
                continue
            name = fields[0]
            v = model.var(name)
            if integer_mode:
                model.integer.add(v)
            for k in range(1, len(fields) - 1, 2):
                row, value = fields[k], float(fields[k + 1])
                if row == objective_row:
                    model.objective[v] = model.objective.get(v, 0.0) + value
                else:
                    model.rows[row_sense[row]][0][v] = value
        elif section == "RHS":
            for k in range(1, len(fields) - 1, 2):
                row, value = fields[k], float(fields[k + 1])
                idx = row_sense[row]
                terms, sense, _ = model.rows[idx]
                model.rows[idx] = (terms, sense, value)
        elif section == "BOUNDS":
            btype, name = fields[0], fields[2]
            v = model.var(name)
            value = float(fields[3]) if len(fields) > 3 else 0.0
            if btype == "UP":
                model.upper[v] = value
            elif btype == "LO":
                model.lower[v] = value
            elif btype == "FX":
                model.lower[v] = model.upper[v] = value
            elif btype == "BV":
                model.integer.add(v)
                model.lower[v] = 0.0
                model.upper[v] = 1.0
            elif btype == "UI":
                model.integer.add(v)
                model.upper[v] = value
            elif btype == "LI":
                model.integer.add(v)
                model.lower[v] = value
            else:
                raise ValueError("unsupported bound type " + btype)
    return model


def solve(model, time_limit):
    n = len(model.var_names)
    c = np.zeros(n)
    for v, coeff in model.objective.items():
        c[v] = coeff
    lower = np.zeros(n)
    upper = np.full(n, INF)
    for v in model.binary:
        upper[v] = 1.0
    for v, value in model.lower.items():
        lower[v] = value
    for v, value in model.upper.items():
        upper[v] = value
    integrality = np.zeros(n)
    for v in model.binary | model.integer:
        integrality[v] = 1

    constraints = []
    if model.rows:
        data, lo, hi = [], [], []
        for terms, sense, rhs in model.rows:
            row = np.zeros(n)
            for v, coeff in terms.items():
                row[v] = coeff
            data.append(row)
            lo.append(rhs if sense in (">=", "=") else -INF)
            hi.append(rhs if sense in ("<=", "=") else INF)
        constraints = LinearConstraint(np.array(data), lo, hi)

    return milp(c=c, constraints=constraints, integrality=integrality,
                bounds=Bounds(lower, upper),
                options={"time_limit": time_limit})


def main(argv):
    if len(argv) < 3:
        print(__doc__, file=sys.stderr)
        return 2
    path, out = argv[1], argv[2]
    time_limit = float(argv[3]) if len(argv) > 3 else 60.0
    with open(path) as f:
        text = f.read()
    try:
        model = parse_mps(text) if path.endswith(".mps") else parse_lp(text)
    except (ValueError, KeyError, IndexError) as exc:
        print("parse error:", exc, file=sys.stderr)
        return 2
    result = solve(model, time_limit)
    if result.status == 2:
        return 4
    if result.status != 0 or result.x is None:
        return 5
    with open(out, "w") as f:
        f.write("# objective %.12g\n" % result.fun)
        for v, name in enumerate(model.var_names):
            value = result.x[v]
            if model.integer or True:
                pass
            if abs(value) > 1e-11:
                f.write("%s %.12g\n" % (name, value))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
