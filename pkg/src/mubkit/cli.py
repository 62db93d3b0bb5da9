"""
Command-line interface: ``mubkit construct | verify | analyze-phase | search6``.

Exit codes: 0 certified/completed, 1 verification failed, 2 usage or parse error.
"""
import argparse
import json
import math
import re
import sys

import numpy as np

from . import phase_family
from .errors import ContractError, DimensionError, UnsupportedDimension
from .galois import FieldSpec, galois_mub_set
from .hadamard import PhaseVector, qubit_triple
from .mub import Basis, MubSet, certify, pair_reports, verify_set
from .pauli import pauli_mub_set
from .search6 import (
    BASE_SETS,
    SearchConfig,
    base_set,
    extend_set,
    fourier_family_basis,
    search_additional_basis,
    tensor_mub_triple,
)
from .mub import standard_basis
from .weyl import weyl_mub_set

SCHEMA_VERSION = "1.0"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

METHODS = ("hadamard2-set", "weyl", "galois", "pauli4", "fourier-family", "tensor6")


class DocumentError(ValueError):
    pass


# ---------------------------------------------------------------- documents


def to_document(s: MubSet, metadata=None):
    bases = []
    for b in s:
        cols = [[[float(z.real), float(z.imag)] for z in b.vectors[:, k]] for k in range(b.dim)]
        bases.append({"label": b.label, "columns": cols})
    return {
        "schema_version": SCHEMA_VERSION,
        "dim": s.dim,
        "bases": bases,
        "metadata": dict(metadata or {}),
    }


def dumps(doc):
    return json.dumps(doc, allow_nan=False) + "\n"


def _require(cond, where, what):
    if not cond:
        raise DocumentError(f"{where}: {what}")


def from_document(doc):
    """Rebuild ``(MubSet, metadata)``; unknown top-level or per-basis keys are ignored."""
    _require(isinstance(doc, dict), "document", "expected a JSON object")
    for key in ("schema_version", "dim", "bases"):
        _require(key in doc, "document", f"missing field {key!r}")
    _require(isinstance(doc["schema_version"], str), "schema_version", "expected a string")
    d = doc["dim"]
    _require(isinstance(d, int) and not isinstance(d, bool) and d >= 1, "dim", "expected a positive integer")
    _require(isinstance(doc["bases"], list) and doc["bases"], "bases", "expected a non-empty list")
    bases = []
    for bi, entry in enumerate(doc["bases"]):
        where = f"bases[{bi}]"
        _require(isinstance(entry, dict), where, "expected an object")
        _require(isinstance(entry.get("label"), str) and entry["label"], f"{where}.label", "expected a non-empty string")
        cols = entry.get("columns")
        _require(isinstance(cols, list) and len(cols) == d, f"{where}.columns", f"expected {d} columns")
        m = np.empty((d, d), dtype=np.complex128)
        for k, col in enumerate(cols):
            _require(isinstance(col, list) and len(col) == d, f"{where}.columns[{k}]", f"expected {d} entries")
            for r, z in enumerate(col):
                ok = (
                    isinstance(z, list)
                    and len(z) == 2
                    and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in z)
                )
                _require(ok, f"{where}.columns[{k}][{r}]", "expected [re, im]")
                m[r, k] = complex(z[0], z[1])
        bases.append(Basis(m, entry["label"]))
    meta = doc.get("metadata", {})
    return MubSet(tuple(bases)), meta if isinstance(meta, dict) else {}


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"parse error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return from_document(doc)


# ---------------------------------------------------------------- parsing helpers

_ANGLE = re.compile(r"^\s*([+-]?)\s*(\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*(pi)?\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_angle(text):
    """Accept plain floats and multiples of pi such as ``pi``, ``-pi/2``, ``3pi/4``, ``2*pi/3``."""
    try:
        return float(text)
    except ValueError:
        pass
    m = _ANGLE.match(text.lower())
    if not m or not m.group(3):
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}")
    sign, coef, _, den = m.groups()
    val = (float(coef) if coef else 1.0) * math.pi
    if den:
        val /= float(den)
    return -val if sign == "-" else val


# ---------------------------------------------------------------- commands


def _construct(args):
    m = args.method
    params = {}
    if m == "hadamard2-set":
        s = qubit_triple()
    elif m == "weyl":
        if args.dim is None:
            raise ContractError("weyl requires --dim")
        params["dim"] = args.dim
        s = weyl_mub_set(args.dim)
    elif m == "galois":
        if args.p is None:
            raise ContractError("galois requires --p")
        if args.p == 2:
            raise UnsupportedDimension("galois requires an odd prime p")
        params.update(p=args.p, n=args.n)
        s = galois_mub_set(FieldSpec.create(args.p, args.n))
    elif m == "pauli4":
        s = pauli_mub_set()
    elif m == "fourier-family":
        thetas = args.theta or [[0.0] * 5]
        params["theta"] = [list(t) for t in thetas]
        bases = [standard_basis(6)] + [fourier_family_basis(t) for t in thetas]
        s = certify(bases, tol=args.tol)
    elif m == "tensor6":
        s = tensor_mub_triple()
    else:  # pragma: no cover - argparse restricts choices
        raise ContractError(f"unknown method {m}")
    v = verify_set(s, args.tol)
    meta = {
        "method": m,
        "params": params,
        "certified": v.certified,
        "tol": args.tol,
        "max_deviation": v.max_deviation,
        "worst_pair": list(v.worst_pair) if v.worst_pair else None,
    }
    _emit(dumps(to_document(s, meta)), args.output)
    return EXIT_OK


def _emit(text, path):
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_table(t, d, tol):
    lines = []
    for row in t:
        cells = []
        for x in row:
            mark = "*" if abs(x - 1.0 / d) > tol else " "
            cells.append(f"{x:8.6f}{mark}")
        lines.append("    " + " ".join(cells))
    return lines


def _verify(args):
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    s, _ = loads(text)
    v = verify_set(s, args.tol, args.ortho_tol)
    out = [f"dim {s.dim}, {len(s)} bases, tol {args.tol:g}"]
    for i, b in enumerate(s):
        err = b.orthonormality_error()
        status = "ok" if err <= args.ortho_tol else "FAIL orthonormality"
        out.append(f"basis {i} [{b.label}]: orthonormality error {err:.3e} {status}")
    for rep in pair_reports(s):
        i, j = rep.pair
        flag = "ok" if rep.max_deviation <= args.tol else "FAIL"
        out.append(f"pair ({i},{j}): max |overlap^2 - 1/{s.dim}| = {rep.max_deviation:.3e} {flag}")
        if args.tables:
            out.extend(_format_table(rep.table, s.dim, args.tol))
    if v.worst_pair is not None:
        out.append(f"worst pair: {v.worst_pair} deviation {v.max_deviation:.3e}")
    out.append("CERTIFIED" if v.certified else "NOT CERTIFIED")
    print("\n".join(out))
    return EXIT_OK if v.certified else EXIT_FAIL


def _analyze_phase(args):
    delta = phase_family.PhaseDelta(tuple(args.delta))
    print("delta = (" + ", ".join(f"{x:.10g}" for x in delta.delta) + ")")
    for cfg, pairs, value in phase_family.criterion_by_class(delta):
        eps = ",".join(f"{e:+d}" for e in cfg.eps)
        print(f"k={cfg.k:+d} eps=({eps}) pairs={len(pairs)}: |4<v_i|v_j>|^2 - 4 = {value:.12g}")
    ok = phase_family.is_unbiased_family_pair(delta, args.tol)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def _search6(args):
    cfg = SearchConfig(
        seed=args.seed,
        restarts=args.restarts,
        max_iters=args.max_iters,
        target_bases=args.target_bases,
        tol=args.tol,
    )
    existing = base_set(args.base_set)
    report = search_additional_basis(existing, cfg)
    ext = extend_set(existing, report.best_phases, tol=args.verify_tol)
    v = verify_set(ext, args.verify_tol)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "base_set": args.base_set,
        "existing_labels": existing.labels,
        "report": report.to_dict(),
        "candidate": {
            "verify_tol": args.verify_tol,
            "certified": v.certified,
            "max_deviation": v.max_deviation,
            "worst_pair": list(v.worst_pair) if v.worst_pair else None,
        },
    }
    _emit(dumps(doc), args.output)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="mubkit", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a set of bases and emit it as JSON")
    c.add_argument("--method", required=True, choices=METHODS)
    c.add_argument("--dim", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--theta", type=parse_angle, nargs=5, action="append", metavar="T",
                   help="phases of one Fourier-family basis (repeatable)")
    c.add_argument("--tol", type=float, default=1e-10)
    c.add_argument("--output", "-o")
    c.set_defaults(func=_construct)

    v = sub.add_parser("verify", help="verify a basis-set document")
    v.add_argument("input", nargs="?", default="-")
    v.add_argument("--tol", type=float, default=1e-10)
    v.add_argument("--ortho-tol", type=float, default=1e-10)
    v.add_argument("--tables", action="store_true", help="print every overlap table")
    v.set_defaults(func=_verify)

    a = sub.add_parser("analyze-phase", help="evaluate the d=4 phase criterion")
    a.add_argument("--delta", type=parse_angle, nargs=3, required=True, metavar="D")
    a.add_argument("--tol", type=float, default=1e-12)
    a.set_defaults(func=_analyze_phase)

    s = sub.add_parser("search6", help="search for an additional Fourier-family basis in d=6")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=8)
    s.add_argument("--max-iters", type=int, default=2000)
    s.add_argument("--base-set", choices=BASE_SETS, default="standard+fourier")
    s.add_argument("--target-bases", type=int, default=2)
    s.add_argument("--tol", type=float, default=1e-20)
    s.add_argument("--verify-tol", type=float, default=1e-10)
    s.add_argument("--output", "-o")
    s.set_defaults(func=_search6)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, ContractError, UnsupportedDimension, DimensionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
