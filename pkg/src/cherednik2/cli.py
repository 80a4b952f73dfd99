"""Command-line front end.

Subcommands: labels, act, singular, hom, diagram, verify, repro.  Parameters
come from a JSON file {"r": 3, "c0": "1", "d": ["5", "0", "-5"]} with exact
"p/q" rationals; the d entries must sum to zero.  Exit codes: 0 success,
1 verification or golden-file mismatch, 2 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from importlib import resources

from cherednik2.cyclo import NotRationalError, parse_rational
from cherednik2.dunkl_oracle import y_act_oracle
from cherednik2.homspaces import (DEFAULT_MAX_DEGREE, _diag_weight,
                                  hom_conditions, hom_dim_bruteforce,
                                  morphism_diagram, singular_space, to_dot,
                                  transitive_reduction)
from cherednik2.labels import (GroupElement, Label, Params, ParamsError,
                               charged_content, enumerate_labels)
from cherednik2.singular import CaseTag, applicable_cases, coefficient_ledger, construct
from cherednik2.standard_module import ModElem, y_act


def load_params(path: str) -> Params:
    with open(path) as fh:
        data = json.load(fh)
    return params_from_json(data)


def params_from_json(data: dict) -> Params:
    try:
        r = int(data["r"])
        c0 = parse_rational(str(data["c0"]))
        d = [parse_rational(str(x)) for x in data["d"]]
    except (KeyError, ValueError, TypeError) as e:
        raise ParamsError("BadRational", f"malformed parameter file: {e}") from e
    return Params(r, c0, tuple(d))


def _max_degree(args) -> int:
    if getattr(args, "max_degree", None) is not None:
        return args.max_degree
    return int(os.environ.get("CHEREDNIK2_MAX_DEGREE", str(DEFAULT_MAX_DEGREE)))


def _parse_group(text: str) -> GroupElement:
    # "a,b" or "a,b,s" (s marks the transposition factor)
    parts = text.split(",")
    if len(parts) == 2:
        return GroupElement(int(parts[0]), int(parts[1]), False)
    if len(parts) == 3 and parts[2] in ("s", "swap", "1"):
        return GroupElement(int(parts[0]), int(parts[1]), True)
    raise ValueError(f"bad group element {text!r}; use 'a,b' or 'a,b,s'")


def _digest(p: Params | None) -> str | None:
    if p is None:
        return None
    blob = json.dumps({"r": p.r, "c0": str(p.c0), "d": [str(x) for x in p.d_vec]},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _echo(args, payload: dict, t0: float, p: Params | None = None) -> None:
    # stdout stays byte-identical across runs; the timing goes to stderr
    report = {
        "command": getattr(args, "cmd", ""),
        "params_digest": _digest(p),
        "result": payload,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    print(f"# elapsed {time.time() - t0:.3f}s", file=sys.stderr)


def cmd_labels(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    out = []
    for lab in enumerate_labels(p.r):
        tabs = []
        for T in lab.tableaux():
            tabs.append([str(charged_content(b, p)) for b in T])
        out.append({"label": lab.serialize(), "dim": lab.dim,
                    "charged_contents": tabs})
    _echo(args, {"labels": out}, t0, p)
    return 0


def cmd_act(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    lab = Label.parse(args.label)
    e = ModElem.parse(lab, p, args.elem)
    if args.op in ("y1", "y2"):
        img = y_act(e, 1 if args.op == "y1" else 2)
    elif args.op.startswith("w:"):
        img = e.w_act(_parse_group(args.op[2:]))
    else:
        raise ValueError(f"unknown op {args.op!r}")
    print(img.text())
    _echo(args, {"image": img.to_json(), "text": img.text()}, t0, p)
    return 0


def cmd_singular(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    lab = Label.parse(args.label)
    if args.mode == "construct":
        if args.case:
            tags = [CaseTag.parse(args.case)]
        else:
            tags = applicable_cases(p, lab, _max_degree(args))
        out = []
        for tag in tags:
            elem = construct(p, lab, tag)
            out.append({"case": tag.serialize(), "element": elem.to_json(),
                        "text": elem.text(),
                        "coefficients": coefficient_ledger(p, lab, tag)})
            print(f"{tag.serialize()}: {elem.text()}")
        _echo(args, {"constructed": out}, t0, p)
        return 0
    # brute-force search
    out = []
    for d in range(1, _max_degree(args) + 1):
        for e in singular_space(lab, p, d):
            out.append({"degree": d, "element": e.to_json(), "text": e.text()})
            print(f"deg {d}: {e.text()}")
    _echo(args, {"singular": out}, t0, p)
    return 0


def cmd_hom(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    lam = Label.parse(getattr(args, "from"))
    mu = Label.parse(args.to)
    report = hom_conditions(lam, mu, p)
    payload = report.to_json()
    if args.brute:
        payload["brute_dimension"] = hom_dim_bruteforce(lam, mu, p, _max_degree(args))
    print(f"{lam} -> {mu}: exists={report.exists} "
          f"rules={[i.rule for i in report.fired]} degrees={report.predicted_degrees()}"
          + (f" brute_dim={payload['brute_dimension']}" if args.brute else ""))
    _echo(args, payload, t0, p)
    return 0


def cmd_diagram(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    diagram = morphism_diagram(p)
    if args.reduce:
        diagram = transitive_reduction(diagram)
    dot = to_dot(diagram)
    if args.dot == "-":
        sys.stdout.write(dot)
    else:
        with open(args.dot, "w") as fh:
            fh.write(dot)
    _echo(args, {"edges": len(diagram.edges),
                 "removed": len(diagram.removed)}, t0, p)
    return 0


def cmd_verify(args) -> int:
    t0 = time.time()
    p = load_params(args.params)
    lab = Label.parse(args.label)
    e = ModElem.parse(lab, p, args.elem)
    y1, y2 = y_act(e, 1), y_act(e, 2)
    ok = y1.is_zero() and y2.is_zero()
    detail = {"singular": ok, "y1": y1.text(), "y2": y2.text()}
    if args.oracle:
        o1, o2 = y_act_oracle(e, 1), y_act_oracle(e, 2)
        detail["oracle_singular"] = o1.is_zero() and o2.is_zero()
        detail["oracle_agrees"] = (o1 == y1) and (o2 == y2)
        ok = ok and detail["oracle_singular"] and detail["oracle_agrees"]
    print("singular" if ok else "not singular")
    _echo(args, detail, t0, p)
    return 0 if ok else 1


def _golden(name: str) -> dict:
    ref = resources.files("cherednik2").joinpath("golden", name)
    return json.loads(ref.read_text())


def cmd_repro(args) -> int:
    t0 = time.time()
    if args.which == "example35":
        return _repro_example35(args, t0)
    return _repro_example36(args, t0)


def _repro_example35(args, t0) -> int:
    from cherednik2.singular import solve_rec_system

    golden = _golden("example35.json")
    p = params_from_json(golden["params"])
    i, j = golden["pair"]
    sys_ = solve_rec_system(p, i, j, golden["variant"], golden["n"], golden["k"])
    got = {
        "s": [str(x) for x in sys_.s],
        "a": [str(x) for x in sys_.a],
        "b": [str(x) for x in sys_.b],
    }
    elem = construct(p, Label.pair(i, j),
                     CaseTag("pair_" + golden["variant"], n=golden["n"], k=golden["k"]))
    got["polynomial"] = elem.text()
    want = {k: golden[k] for k in ("s", "a", "b", "polynomial")}
    ok = got == want and elem.is_singular()
    print(f"s = {got['s']}")
    print(f"a = {got['a']}")
    print(f"b = {got['b']}")
    print(got["polynomial"])
    print("MATCH" if ok else f"MISMATCH: expected {want}")
    _echo(args, {"match": ok, "got": got}, t0, p)
    return 0 if ok else 1


def _scalar_multiple(a: ModElem, b: ModElem) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if set(a.terms) != set(b.terms):
        return False
    ratio = None
    for k, c in a.terms.items():
        q = b.terms[k] / c
        if ratio is None:
            ratio = q
        elif ratio != q:
            return False
    return True


def _matches_golden_row(constructed: ModElem, golden_elem: ModElem, row: dict,
                        p: Params) -> bool:
    if row.get("compare") == "span-membership":
        # the hom space here is 2-dimensional, so the stored vector and the
        # constructed one may be different basis vectors of the same singular
        # space: accept a singular golden vector of matching degree and weight
        return (golden_elem.is_singular()
                and golden_elem.degree() == constructed.degree()
                and _diag_weight(golden_elem) in
                (_diag_weight(constructed),
                 _diag_weight(constructed.w_act(GroupElement.transposition()))))
    if _scalar_multiple(constructed, golden_elem):
        return True
    if constructed.label.kind == "pair":
        swapped = golden_elem.w_act(GroupElement.transposition())
        return _scalar_multiple(constructed, swapped)
    return False


def _repro_example36(args, t0) -> int:
    golden = _golden("example36.json")
    p = params_from_json(golden["params"])
    diagram = morphism_diagram(p)
    rows = golden["rows"]
    ok = True
    notes = []
    if len(diagram.edges) != len(rows):
        ok = False
        notes.append(f"expected {len(rows)} edges, classifier fired {len(diagram.edges)}")
    by_pair = {(e.domain.serialize(), e.codomain.serialize()): e for e in diagram.edges}
    for row in rows:
        key = (row["from"], row["to"])
        edge = by_pair.get(key)
        if edge is None:
            ok = False
            notes.append(f"row {row['index']}: no edge {key}")
            continue
        if edge.degree != row["degree"]:
            ok = False
            notes.append(f"row {row['index']}: degree {edge.degree} != {row['degree']}")
            continue
        golden_elem = ModElem.from_json(row["element"], p)
        if not _matches_golden_row(edge.hom.gen_image, golden_elem, row, p):
            ok = False
            notes.append(f"row {row['index']}: generator image mismatch")
        line = f"{row['index']:2d}  {row['from']:>8s} -> {row['to']:8s}  deg {row['degree']:2d}  ok"
        if row.get("note"):
            line += f"   [{row['note']}]"
        print(line)
    for n in notes:
        print("MISMATCH:", n)
    print("MATCH" if ok else "MISMATCH")
    _echo(args, {"match": ok, "notes": notes}, t0, p)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cherednik2",
        description="Standard modules of the rational Cherednik algebra of G(r,1,2): "
                    "Dunkl actions, singular polynomials, homomorphism classification.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_params(sp):
        sp.add_argument("--params", required=True, help="JSON parameter file")

    sp = sub.add_parser("labels", help="list labels and charged contents")
    add_params(sp)
    sp.set_defaults(fn=cmd_labels)

    sp = sub.add_parser("act", help="apply y1, y2 or a group element to an element")
    add_params(sp)
    sp.add_argument("--label", required=True)
    sp.add_argument("--elem", required=True,
                    help="sum of c*x1^n*x2^m@t terms, t in {T, T1, T2}")
    sp.add_argument("--op", required=True, help="y1 | y2 | w:a,b[,s]")
    sp.set_defaults(fn=cmd_act)

    sp = sub.add_parser("singular", help="construct or search singular polynomials")
    sp.add_argument("mode", choices=["construct", "search"])
    add_params(sp)
    sp.add_argument("--label", required=True)
    sp.add_argument("--case", help="case tag, e.g. row_c:n=8,k=2")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.set_defaults(fn=cmd_singular)

    sp = sub.add_parser("hom", help="check existence of a morphism")
    sp.add_argument("mode", choices=["check"])
    add_params(sp)
    sp.add_argument("--from", required=True)
    sp.add_argument("--to", required=True)
    sp.add_argument("--brute", action="store_true")
    sp.add_argument("--max-degree", type=int, default=None)
    sp.set_defaults(fn=cmd_hom)

    sp = sub.add_parser("diagram", help="morphism diagram as DOT")
    add_params(sp)
    sp.add_argument("--dot", required=True, help="output path or -")
    sp.add_argument("--reduce", action="store_true",
                    help="apply the transitive reduction")
    sp.set_defaults(fn=cmd_diagram)

    sp = sub.add_parser("verify", help="certify singularity of an element")
    add_params(sp)
    sp.add_argument("--label", required=True)
    sp.add_argument("--elem", required=True)
    sp.add_argument("--oracle", action="store_true",
                    help="also evaluate the first-principles Dunkl action")
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("repro", help="regenerate the bundled worked examples")
    sp.add_argument("which", choices=["example35", "example36"])
    sp.set_defaults(fn=cmd_repro)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParamsError, NotRationalError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
