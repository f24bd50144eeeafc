"""Text formats for arrangements, quivers and dimension-1 objects.

All formats are line based; ``#`` starts a comment.  Numbers are exact
rationals (``-3``, ``1/2``, ``0.25``) and are always written back in lowest
terms, so parse followed by serialize is the identity on normalized files.

Arrangement::

    dim 2
    mode linear
    1 0
    0 1
    1 -1

In affine mode each hyperplane line is ``coefficients | offset``.

Quiver::

    field q
    [arrangement]
    dim 1
    mode linear
    1
    [dims]
    0: 2
    +: 1
    -: 1
    [maps]
    gamma 0->+: 1x2
    1 0
    delta +->0: 2x1
    1
    0

One-dimensional objects::

    kind P            kind B
    field q           field q
    u: 1x1            P+: 2x2
    1                 ...
    v: 1x1            P-: 2x2
    1                 ...
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arrangement import Arrangement, ArrangementError, enumerate_faces, fmt_signs, parse_signs, sign_key
from .exactla import QQ, Field, LinAlgError, Matrix
from .onedim import BObject, DictionaryError, PObject
from .quiver import DoubleRep, QuiverError


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.msg, self.line, self.col = msg, line, col
        where = f"line {line}" + (f", column {col}" if col else "") + ": " if line else ""
        super().__init__(where + msg)


class _Lines:
    """Non-blank lines with comments stripped, keeping 1-based line numbers."""

    def __init__(self, text: str):
        self.items = []
        for no, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0].rstrip()
            if body.strip():
                indent = len(body) - len(body.lstrip())
                self.items.append((no, indent + 1, body.strip()))
        self.pos = 0

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def next(self, what: str):
        item = self.peek()
        if item is None:
            last = self.items[-1][0] if self.items else 1
            raise ParseError(f"unexpected end of input, expected {what}", last)
        self.pos += 1
        return item


def _num(tok: str, line: int, col: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {tok!r}", line, col) from None


def _tokens(body: str, col0: int):
    """Whitespace-separated tokens with their columns."""
    out, i = [], 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        j = i
        while j < len(body) and not body[j].isspace():
            j += 1
        out.append((body[i:j], col0 + i))
        i = j
    return out


def fmt_num(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# arrangements


def _parse_arrangement_lines(lines: _Lines, mode_hint: str | None, stop=()) -> Arrangement:
    dim = mode = None
    forms = []
    while (item := lines.peek()) is not None and item[2] not in stop:
        no, col, body = lines.next("a hyperplane")
        head = body.split()[0]
        if head == "dim":
            parts = body.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("expected 'dim <n>'", no, col)
            dim = int(parts[1])
        elif head == "mode":
            parts = body.split()
            if len(parts) != 2 or parts[1] not in ("linear", "affine"):
                raise ParseError("expected 'mode linear' or 'mode affine'", no, col)
            mode = parts[1]
        else:
            if "|" in body:
                lhs, rhs = body.split("|", 1)
                coeffs = [_num(t, no, c) for t, c in _tokens(lhs, col)]
                off_toks = _tokens(rhs, col + len(lhs) + 1)
                if len(off_toks) != 1:
                    raise ParseError("expected exactly one offset after '|'", no, col + len(lhs))
                off = _num(off_toks[0][0], no, off_toks[0][1])
            else:
                coeffs = [_num(t, no, c) for t, c in _tokens(body, col)]
                off = Fraction(0)
            if dim is not None and len(coeffs) != dim:
                raise ParseError(f"hyperplane has {len(coeffs)} coefficients, expected {dim}", no, col)
            forms.append((tuple(coeffs), off, no))
    if dim is None:
        if not forms:
            raise ParseError("missing 'dim' line", lines.items[0][0] if lines.items else 1)
        dim = len(forms[0][0])
    if mode is None:
        mode = mode_hint or "linear"
    elif mode_hint is not None and mode_hint != mode:
        raise ParseError(f"file declares mode {mode} but --mode {mode_hint} was given")
    try:
        return Arrangement(dim, tuple((c, o) for c, o, _ in forms), mode)
    except ArrangementError as e:
        # messages name hyperplanes by index; point at the last one named
        idx = [int(k) for k in re.findall(r"\d+", str(e))]
        no = forms[idx[-1]][2] if idx and idx[-1] < len(forms) else None
        raise ParseError(str(e), no) from None


def parse_arrangement(text: str, mode: str | None = None) -> Arrangement:
    lines = _Lines(text)
    a = _parse_arrangement_lines(lines, mode)
    return a


def serialize_arrangement(a: Arrangement) -> str:
    out = [f"dim {a.n}", f"mode {a.mode}"]
    for c, off in a.forms:
        row = " ".join(fmt_num(x) for x in c)
        out.append(f"{row} | {fmt_num(off)}" if a.affine_mode else row)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# matrices


def _parse_matrix(lines: _Lines, header: tuple, shape_text: str, field: Field) -> Matrix:
    no, col, _ = header
    try:
        r, c = (int(x) for x in shape_text.strip().split("x"))
    except ValueError:
        raise ParseError(f"bad matrix shape {shape_text.strip()!r}, expected RxC", no, col) from None
    if c == 0:
        return Matrix(r, 0, (), field)  # no row lines for empty rows
    rows = []
    for _ in range(r):
        rno, rcol, body = lines.next("a matrix row")
        toks = _tokens(body, rcol)
        if len(toks) != c:
            raise ParseError(f"matrix row has {len(toks)} entries, expected {c}", rno, rcol)
        try:
            rows.append([field(_num(t, rno, tc)) for t, tc in toks])
        except LinAlgError as e:
            raise ParseError(str(e), rno, rcol) from None
    return Matrix(r, c, rows, field)


def _serialize_matrix(head: str, m: Matrix) -> list[str]:
    out = [f"{head}: {m.rows}x{m.cols}"]
    if m.cols:
        out.extend(" ".join(fmt_num(x) for x in row) for row in m.entries)
    return out


def _parse_field(body: str, no: int, col: int) -> Field:
    parts = body.split()
    if len(parts) != 2:
        raise ParseError("expected 'field q' or 'field fp:<p>'", no, col)
    try:
        return Field.parse(parts[1])
    except (LinAlgError, ValueError) as e:
        raise ParseError(str(e), no, col) from None


def _resolve_field(declared: Field | None, flag: Field | None) -> Field:
    if declared is not None and flag is not None and declared != flag:
        raise ParseError(f"file declares field {declared.name} but --field {flag.name} was given")
    return declared or flag or QQ


# ---------------------------------------------------------------------------
# quivers


def parse_quiver(text: str, mode: str | None = None, field: Field | None = None) -> DoubleRep:
    lines = _Lines(text)
    declared = None
    item = lines.peek()
    if item and item[2].startswith("field"):
        declared = _parse_field(item[2], item[0], item[1])
        lines.next("field")
    fld = _resolve_field(declared, field)
    no, col, body = lines.next("[arrangement]")
    if body != "[arrangement]":
        raise ParseError("expected '[arrangement]'", no, col)
    a = _parse_arrangement_lines(lines, mode, stop=("[dims]",))
    poset = enumerate_faces(a)
    no, col, body = lines.next("[dims]")
    dims = {}
    while (item := lines.peek()) is not None and item[2] != "[maps]":
        no, col, body = lines.next("a dimension line")
        key, sep, val = body.partition(":")
        if not sep or not val.strip().isdigit():
            raise ParseError("expected '<sign vector>: <dimension>'", no, col)
        try:
            s = parse_signs(key.strip())
        except ArrangementError as e:
            raise ParseError(str(e), no, col) from None
        if s not in poset.index:
            raise ParseError(f"{key.strip()} is not a face of the arrangement", no, col)
        if poset.index[s] in dims:
            raise ParseError(f"duplicate dimension for {key.strip()}", no, col)
        dims[poset.index[s]] = int(val)
    missing = [poset.label(i) for i in range(len(poset)) if i not in dims]
    if missing:
        raise ParseError(f"no dimension given for faces {', '.join(missing)}", no)
    lines.next("[maps]")
    gam, dl = {}, {}
    while lines.peek() is not None:
        header = lines.next("a map header")
        no, col, body = header
        head, sep, shape = body.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] not in ("gamma", "delta") or "->" not in parts[1]:
            raise ParseError("expected 'gamma C'->C: RxC' or 'delta C->C': RxC'", no, col)
        kind = parts[0]
        src, dst = parts[1].split("->", 1)
        try:
            i, j = poset.index[parse_signs(src)], poset.index[parse_signs(dst)]
        except (ArrangementError, KeyError):
            raise ParseError(f"{parts[1]} does not name two faces", no, col) from None
        lo, hi = (i, j) if kind == "gamma" else (j, i)
        if (lo, hi) not in poset.covering_pairs:
            raise ParseError(f"{poset.label(lo)} < {poset.label(hi)} is not a covering pair", no, col)
        store = gam if kind == "gamma" else dl
        if (lo, hi) in store:
            raise ParseError(f"duplicate {kind} for {parts[1]}", no, col)
        store[(lo, hi)] = _parse_matrix(lines, header, shape, fld)
    try:
        return DoubleRep(poset, dims, gam, dl, fld)
    except QuiverError as e:
        raise ParseError(str(e)) from None


def _pair_order(poset, pairs):
    return sorted(pairs, key=lambda t: (sign_key(poset.faces[t[0]].signs), sign_key(poset.faces[t[1]].signs)))


def serialize_quiver(q: DoubleRep) -> str:
    p = q.poset
    out = [f"field {q.field.name}", "[arrangement]"]
    out.extend(serialize_arrangement(q.arrangement).splitlines())
    out.append("[dims]")
    out.extend(f"{p.label(i)}: {d}" for i, d in enumerate(q.dims))
    out.append("[maps]")
    for lo, hi in _pair_order(p, p.covering_pairs):
        out.extend(_serialize_matrix(f"gamma {p.label(lo)}->{p.label(hi)}", q.gamma(lo, hi)))
        out.extend(_serialize_matrix(f"delta {p.label(hi)}->{p.label(lo)}", q.delta(lo, hi)))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# dimension-1 objects


def parse_onedim(text: str, field: Field | None = None):
    lines = _Lines(text)
    no, col, body = lines.next("'kind P' or 'kind B'")
    parts = body.split()
    if len(parts) != 2 or parts[0] != "kind" or parts[1] not in ("P", "B"):
        raise ParseError("expected 'kind P' or 'kind B'", no, col)
    kind = parts[1]
    declared = None
    item = lines.peek()
    if item and item[2].startswith("field"):
        declared = _parse_field(item[2], item[0], item[1])
        lines.next("field")
    fld = _resolve_field(declared, field)
    names = ("u", "v") if kind == "P" else ("P+", "P-")
    mats = {}
    while lines.peek() is not None:
        header = lines.next("a matrix header")
        no, col, body = header
        name, sep, shape = body.partition(":")
        name = name.strip()
        if not sep or name not in names:
            raise ParseError(f"expected one of {', '.join(n + ': RxC' for n in names)}", no, col)
        if name in mats:
            raise ParseError(f"duplicate matrix {name}", no, col)
        mats[name] = _parse_matrix(lines, header, shape, fld)
    for n in names:
        if n not in mats:
            raise ParseError(f"missing matrix {n}")
    try:
        if kind == "P":
            u, v = mats["u"], mats["v"]
            return PObject(u.rows, u.cols, u, v)
        return BObject(mats["P+"].rows, mats["P+"], mats["P-"])
    except DictionaryError as e:
        raise ParseError(str(e)) from None


def serialize_onedim(obj) -> str:
    if isinstance(obj, PObject):
        out = ["kind P", f"field {obj.field.name}"]
        out += _serialize_matrix("u", obj.u) + _serialize_matrix("v", obj.v)
    else:
        out = ["kind B", f"field {obj.field.name}"]
        out += _serialize_matrix("P+", obj.pplus) + _serialize_matrix("P-", obj.pminus)
    return "\n".join(out) + "\n"


def face_key(poset, i: int) -> str:
    return fmt_signs(poset.faces[i].signs)
