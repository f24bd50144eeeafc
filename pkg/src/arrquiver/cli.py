"""Command line front end.

Every command builds a report dictionary by calling the library and then
prints it either as plain text tables or as JSON (``--format structured``).
Exit status: 0 on success or a true verdict, 1 on a false verdict, 2 on
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cousin, groupoid, onedim
from .arrangement import (ArrangementError, chamber_distance, collinear, compose, enumerate_faces, flats,
                          fmt_signs, parse_signs)
from .exactla import Field, LinAlgError, Matrix
from .formats import (ParseError, fmt_num, parse_arrangement, parse_onedim, parse_quiver,
                      serialize_onedim, serialize_quiver)
from .quiver import QuiverError, dual, multiplicities, restrict_flat, slice, validate


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _load(loader, path: str, *args):
    try:
        return loader(_read(path), *args)
    except ParseError as e:
        raise InputError(f"{path}: {e}") from None


def _matrix(m: Matrix) -> list:
    return [[fmt_num(x) for x in row] for row in m.entries]


def _point(x) -> list:
    return [fmt_num(v) for v in x]


_ALIASES = str.maketrans({"p": "+", "m": "-"})


def _face_arg(poset, text: str) -> int:
    # p/m spell +/- so that faces such as "--" survive argparse
    text = text.translate(_ALIASES)
    try:
        s = parse_signs(text)
    except ArrangementError as e:
        raise InputError(str(e)) from None
    if s not in poset.index:
        raise InputError(f"{text} is not a face of the arrangement")
    return poset.index[s]


def _flat_arg(lat, text: str):
    text = text.strip()
    try:
        hs = frozenset(int(t) for t in text.split(",") if t.strip()) if text not in ("", "ambient") else frozenset()
    except ValueError:
        raise InputError(f"bad flat {text!r}: give hyperplane indices such as 0,2") from None
    try:
        return lat.find(hs)
    except ArrangementError as e:
        raise InputError(str(e)) from None


def _cell(p, c) -> str:
    return f"[{p.label(c.C)}, {p.label(c.D)}]"


# ---------------------------------------------------------------------------
# commands; each returns (report, verdict or None, text lines)


def cmd_faces(args):
    a = _load(parse_arrangement, args.arrangement, args.mode)
    p = enumerate_faces(a)
    rows = [{"signs": f.label, "dim": f.dim, "interior_point": _point(f.interior_point)} for f in p.faces]
    text = [f"{len(rows)} faces", "signs\tdim\tinterior point"]
    text += [f"{r['signs']}\t{r['dim']}\t({', '.join(r['interior_point'])})" for r in rows]
    return {"command": "faces", "count": len(rows), "faces": rows}, None, text


def cmd_flats(args):
    a = _load(parse_arrangement, args.arrangement, args.mode)
    lat = flats(a)
    rows = [{"hyperplanes": sorted(f.hyperplanes), "dim": f.dim} for f in lat.flats]
    text = [f"{len(rows)} flats", "hyperplanes\tdim"]
    text += [f"{lat.label(f)}\t{f.dim}" for f in lat.flats]
    return {"command": "flats", "count": len(rows), "flats": rows}, None, text


def cmd_compose(args):
    a = _load(parse_arrangement, args.arrangement, args.mode)
    p = enumerate_faces(a)
    i, j = _face_arg(p, args.C), _face_arg(p, args.D)
    r = fmt_signs(compose(p.faces[i].signs, p.faces[j].signs))
    return {"command": "compose", "C": args.C, "D": args.D, "result": r}, None, [f"{args.C} o {args.D} = {r}"]


def cmd_collinear(args):
    a = _load(parse_arrangement, args.arrangement, args.mode)
    p = enumerate_faces(a)
    A, B, C = (p.faces[_face_arg(p, x)] for x in (args.A, args.B, args.C))
    ok = collinear(a, A, B, C)
    rep = {"command": "collinear", "triple": [args.A, args.B, args.C], "verdict": ok}
    return rep, ok, [f"({args.A}, {args.B}, {args.C}) collinear: {'yes' if ok else 'no'}"]


def cmd_validate(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    p = q.poset
    r = validate(q)
    mon = [{"pair": [p.label(lo), p.label(hi)], "defect": _matrix(d)} for (lo, hi), d in r.mon_violations]
    tran = [{"triple": [p.label(x) for x in t], "phi_AC": _matrix(l), "phi_BC_phi_AB": _matrix(rr)}
            for t, l, rr in r.tran_violations]
    inv = [{"pair": [p.label(x) for x in pair], "phi": _matrix(m)} for pair, m in r.inv_violations]
    rep = {"command": "validate", "verdict": r.verdict, "mon": mon, "tran": tran, "inv": inv}
    text = [f"verdict: {'pass' if r.verdict else 'fail'}",
            f"Mon violations: {len(mon)}", *[f"  Mon ({x['pair'][0]}, {x['pair'][1]})" for x in mon],
            f"Tran violations: {len(tran)}", *[f"  Tran ({', '.join(x['triple'])})" for x in tran],
            f"Inv violations: {len(inv)}", *[f"  Inv ({x['pair'][0]}, {x['pair'][1]})" for x in inv]]
    return rep, r.verdict, text


def _h_line(h) -> str:
    return ", ".join(f"H^{k}: {x}" for k, x in enumerate(h))


def cmd_cousin(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    try:
        cx = cousin.global_complex(q)
    except cousin.CousinError as e:
        return {"command": "cousin", "verdict": False, "error": str(e)}, False, [f"error: {e}"]
    h = cx.cohomology()
    rep = {"command": "cousin", "verdict": True, "terms": list(cx.complex.terms), "cohomology": list(h),
           "euler": cousin.euler_characteristic(q)}
    return rep, True, [f"terms: {', '.join(map(str, cx.complex.terms))}", _h_line(h)]


def cmd_stalks(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    p = q.poset
    rows, ok = [], True
    for cell, h in sorted(cousin.stalk_cohomology(q).items()):
        if isinstance(h, Exception):
            ok = False
            rows.append({"cell": [p.label(cell.C), p.label(cell.D)], "error": str(h)})
        else:
            rows.append({"cell": [p.label(cell.C), p.label(cell.D)], "cohomology": list(h)})
    text = ["cell\tcohomology"]
    for r in rows:
        text.append(f"[{r['cell'][0]}, {r['cell'][1]}]\t" + (_h_line(r["cohomology"]) if "cohomology" in r
                                                             else "error: " + r["error"]))
    return {"command": "stalks", "verdict": ok, "cells": rows}, ok, text


def cmd_smooth(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    p = q.poset
    r = cousin.smoothness_check(q)
    fails = [{"type": k, "from": [p.label(lo.C), p.label(lo.D)], "to": [p.label(hi.C), p.label(hi.D)],
              "reason": why} for k, lo, hi, why in r.failures]
    text = [f"verdict: {'pass' if r.verdict else 'fail'}", f"inclusions checked: {r.checked}"]
    text += [f"  type {k} {_cell(p, lo)} <= {_cell(p, hi)}: {why}" for k, lo, hi, why in r.failures]
    return {"command": "smooth", "verdict": r.verdict, "checked": r.checked, "failures": fails}, r.verdict, text


def cmd_perversity(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    p = q.poset
    r = cousin.perversity_support_check(q)
    fails = [{"which": w, "cell": [p.label(c.C), p.label(c.D)], "degree": d, "detail": x}
             for w, c, d, x in r.failures]
    text = [f"verdict: {'pass' if r.verdict else 'fail'}"]
    for w, c, d, x in r.failures:
        text.append(f"  {w} {_cell(p, c)}: " + (f"H^{d} nonzero above codimension {x}" if d is not None else x))
    return {"command": "perversity", "verdict": r.verdict, "failures": fails}, r.verdict, text


def _emit_quiver(name, q):
    body = serialize_quiver(q)
    return {"command": name, "quiver": body}, None, body.rstrip("\n").splitlines()


def cmd_restrict(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    L = _flat_arg(flats(q.arrangement), args.flat)
    return _emit_quiver("restrict", restrict_flat(q, L))


def cmd_slice(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    return _emit_quiver("slice", slice(q, _face_arg(q.poset, args.face)))


def cmd_dual(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    return _emit_quiver("dual", dual(q))


def cmd_mult(args):
    q = _load(parse_quiver, args.quiver, args.mode, args.field)
    lat = flats(q.arrangement)
    m = multiplicities(q, lat)
    rows = [{"hyperplanes": sorted(f.hyperplanes), "dim": f.dim, "multiplicity": m[f.hyperplanes]}
            for f in lat.flats]
    text = ["flat\tdim\tmultiplicity"] + [f"{lat.label(f)}\t{f.dim}\t{m[f.hyperplanes]}" for f in lat.flats]
    return {"command": "mult", "flats": rows}, None, text


def _load_arr_or_quiver(args):
    text = _read(args.file)
    try:
        if "[arrangement]" in text:
            q = parse_quiver(text, args.mode, args.field)
            return q.arrangement, q
        return parse_arrangement(text, args.mode), None
    except ParseError as e:
        raise InputError(f"{args.file}: {e}") from None


def cmd_groupoid(args):
    a, q = _load_arr_or_quiver(args)
    build = {"salvetti": groupoid.salvetti_presentation,
             "collinearity": groupoid.collinearity_presentation}[args.presentation]
    pres = build(a)
    p = enumerate_faces(a)
    gens = [{"source": p.label(s), "target": p.label(t)} for s, t, _ in pres.generators]
    rels = [{"lhs": list(w1), "rhs": list(w2)} for w1, w2 in pres.relations]
    rep = {"command": "groupoid", "presentation": pres.kind, "objects": [p.label(c) for c in pres.objects],
           "generators": gens, "relations": rels}
    text = [f"presentation: {pres.kind}", f"objects: {len(pres.objects)}",
            f"generators: {len(gens)}", f"relations: {len(rels)}"]
    text += [f"  g{k}: {g['source']} -> {g['target']}" for k, g in enumerate(gens)]
    text += [f"  r{k}: {' '.join(f'g{i}' for i in r['lhs'])} = {' '.join(f'g{i}' for i in r['rhs'])}"
             for k, r in enumerate(rels)]
    verdict = None
    if q is not None:
        r = groupoid.check_representation(q, pres)
        verdict = r.verdict
        rep["verdict"] = verdict
        rep["failed_relations"] = [k for k, _, _ in r.failures]
        text.append(f"representation: {'pass' if verdict else 'fail'} ({r.checked} relations checked)")
        text += [f"  r{k} fails" for k, _, _ in r.failures]
    return rep, verdict, text


def cmd_word(args):
    a = _load(parse_arrangement, args.arrangement, args.mode)
    p = enumerate_faces(a)
    A, B = _face_arg(p, args.A), _face_arg(p, args.B)
    path = groupoid.crossing_chambers(a, A, B)
    rep = {"command": "word", "chambers": [p.label(c) for c in path], "length": len(path) - 1,
           "distance": chamber_distance(a, p.faces[A], p.faces[B])}
    return rep, None, [" -> ".join(rep["chambers"]), f"length: {rep['length']}"]


def cmd_onedim(args):
    obj = _load(parse_onedim, args.file, args.field)
    op = args.operation
    if op == "to-B":
        if not isinstance(obj, onedim.PObject):
            raise InputError("to-B needs a P object")
        out = onedim.to_B(obj)
    elif op == "to-P":
        if not isinstance(obj, onedim.BObject):
            raise InputError("to-P needs a B object")
        out = onedim.to_P(obj, args.convention)
    elif op == "fourier":
        out = onedim.fourier(obj if isinstance(obj, onedim.BObject) else onedim.to_B(obj))
    else:
        b = obj if isinstance(obj, onedim.BObject) else onedim.to_B(obj)
        return _emit_quiver("onedim", onedim.to_quiver(b))
    body = serialize_onedim(out)
    return {"command": "onedim", "operation": op, "object": body}, None, body.rstrip("\n").splitlines()


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("linear", "affine"), help="expected arrangement mode")
    common.add_argument("--field", help="q or fp:<prime>")
    common.add_argument("--format", choices=("text", "structured"), default="text")

    ap = argparse.ArgumentParser(prog="arrquiver", description="Perverse sheaves on real arrangements as quiver data.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, *pos, **extra):
        sp = sub.add_parser(name, parents=[common])
        for p in pos:
            sp.add_argument(p)
        for k, v in extra.items():
            sp.add_argument(k, **v)
        sp.set_defaults(fn=fn)
        return sp

    add("faces", cmd_faces, "arrangement")
    add("flats", cmd_flats, "arrangement")
    add("compose", cmd_compose, "arrangement", "C", "D")
    add("collinear", cmd_collinear, "arrangement", "A", "B", "C")
    for name, fn in (("validate", cmd_validate), ("cousin", cmd_cousin), ("stalks", cmd_stalks),
                     ("smooth", cmd_smooth), ("perversity", cmd_perversity), ("dual", cmd_dual),
                     ("mult", cmd_mult)):
        add(name, fn, "quiver")
    add("restrict", cmd_restrict, "quiver", "flat")
    add("slice", cmd_slice, "quiver", "face")
    add("groupoid", cmd_groupoid, "file",
        **{"--presentation": {"choices": ("salvetti", "collinearity"), "default": "salvetti"}})
    add("word", cmd_word, "arrangement", "A", "B")
    od = sub.add_parser("onedim", parents=[common])
    od.add_argument("operation", choices=("to-B", "to-P", "fourier", "to-quiver"))
    od.add_argument("file")
    od.add_argument("--convention", choices=("+", "-"), default="+")
    od.set_defaults(fn=cmd_onedim)
    return ap


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.field is not None:
            try:
                args.field = Field.parse(args.field)
            except (LinAlgError, ValueError) as e:
                raise InputError(f"--field: {e}") from None
        report, verdict, text = args.fn(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ArrangementError, QuiverError, LinAlgError, onedim.DictionaryError, groupoid.GroupoidError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.format == "structured":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return 1 if verdict is False else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
