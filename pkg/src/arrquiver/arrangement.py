"""Real hyperplane arrangements: faces, flats, composition and collinearity.

Sign vectors are tuples over {1, -1, 0}.  Every face carries an exact
interior point found by the LP in :mod:`arrquiver.exactla`.  Faces of an
arrangement are always listed in the canonical order (lexicographic on
sign vectors with 0 < + < -).
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import Sequence

from .exactla import (LinearSystem, LinAlgError, Matrix, echelon_coords, kernel, lp_feasible,
                      row_space, vec_dot)

SignVec = tuple  # of ints in {1, -1, 0}

SIGN_CHARS = {0: "0", 1: "+", -1: "-"}
SIGN_ORDER = {0: 0, 1: 1, -1: 2}


class ArrangementError(ValueError):
    pass


def sign(x) -> int:
    return (x > 0) - (x < 0)


def fmt_signs(s: SignVec) -> str:
    return "".join(SIGN_CHARS[x] for x in s)


def parse_signs(text: str) -> SignVec:
    table = {"0": 0, "+": 1, "-": -1}
    try:
        return tuple(table[ch] for ch in text)
    except KeyError:
        raise ArrangementError(f"bad sign vector {text!r}") from None


def sign_key(s: SignVec) -> tuple:
    return tuple(SIGN_ORDER[x] for x in s)


def _proportional(u: Sequence, v: Sequence) -> bool:
    i = next(k for k, x in enumerate(u) if x != 0)
    if v[i] == 0:
        return False
    r = v[i] / u[i]
    return all(b == r * a for a, b in zip(u, v))


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes ``coeffs . x + offset = 0`` in dimension ``n``."""

    n: int
    forms: tuple
    mode: str = "linear"

    def __post_init__(self):
        forms = tuple((tuple(Fraction(c) for c in a), Fraction(b)) for a, b in self.forms)
        object.__setattr__(self, "forms", forms)
        if self.mode not in ("linear", "affine"):
            raise ArrangementError(f"unknown mode {self.mode!r}")
        for i, (a, b) in enumerate(forms):
            if len(a) != self.n:
                raise ArrangementError(f"hyperplane {i} has {len(a)} coefficients, expected {self.n}")
            if all(c == 0 for c in a):
                raise ArrangementError(f"hyperplane {i} has a zero coefficient vector")
            if self.mode == "linear" and b != 0:
                raise ArrangementError(f"hyperplane {i} has a nonzero offset in linear mode")
        for i in range(len(forms)):
            for j in range(i):
                if _proportional(forms[j][0] + (forms[j][1],), forms[i][0] + (forms[i][1],)):
                    raise ArrangementError(f"hyperplanes {j} and {i} coincide")

    @classmethod
    def linear(cls, rows: Sequence[Sequence]) -> "Arrangement":
        rows = [tuple(r) for r in rows]
        n = len(rows[0]) if rows else 0
        return cls(n, tuple((r, 0) for r in rows), "linear")

    @classmethod
    def affine(cls, forms: Sequence) -> "Arrangement":
        forms = [(tuple(a), b) for a, b in forms]
        return cls(len(forms[0][0]), tuple(forms), "affine")

    @property
    def size(self) -> int:
        return len(self.forms)

    @property
    def affine_mode(self) -> bool:
        return self.mode == "affine"

    def value(self, i: int, x: Sequence) -> Fraction:
        a, b = self.forms[i]
        return vec_dot(a, x) + b

    def signs_at(self, x: Sequence) -> SignVec:
        return tuple(sign(self.value(i, x)) for i in range(self.size))

    def system(self, s: SignVec) -> LinearSystem:
        """Linear system whose solutions are the points with sign vector s."""
        eq, st = [], []
        for (a, b), e in zip(self.forms, s):
            if e == 0:
                eq.append((a, b))
            else:
                st.append((tuple(e * c for c in a), e * b))
        return LinearSystem.build(self.n, eq, (), st)


# convenient sample arrangements

def line_point() -> Arrangement:
    """One point in the real line."""
    return Arrangement.linear([(1,)])


def coordinate_cross() -> Arrangement:
    return Arrangement.linear([(1, 0), (0, 1)])


def concurrent_lines(k: int = 3) -> Arrangement:
    rows = [(1, 0), (0, 1), (1, -1), (1, 1), (1, -2), (2, -1)]
    if not 1 <= k <= len(rows):
        raise ArrangementError("k out of range")
    return Arrangement.linear(rows[:k])


def boolean(n: int) -> Arrangement:
    return Arrangement.linear([tuple(int(i == j) for j in range(n)) for i in range(n)])


def parallel_points(offsets=(0, -1)) -> Arrangement:
    """Affine arrangement of points x = -offset on the real line."""
    return Arrangement.affine([((1,), b) for b in offsets])


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True)
class Face:
    signs: SignVec
    dim: int
    zero_set: frozenset
    direction_basis: tuple  # echelon basis of the direction space of the affine hull
    direction_pivots: tuple
    span_basis: tuple  # echelon basis of the linear span (homogenised in affine mode)
    interior_point: tuple

    @property
    def label(self) -> str:
        return fmt_signs(self.signs)

    def is_chamber(self, n: int) -> bool:
        return self.dim == n


def _normalise_point(a: Arrangement, x: tuple) -> tuple:
    if a.affine_mode or not any(x):
        return x
    # cones are scale invariant: use the primitive integer multiple
    den = lcm(*(c.denominator for c in x))
    ints = [int(c * den) for c in x]
    g = functools.reduce(gcd, (abs(v) for v in ints if v))
    return tuple(Fraction(v // g) for v in ints)


def _make_face(a: Arrangement, s: SignVec, x: tuple) -> Face:
    zero = frozenset(i for i, e in enumerate(s) if e == 0)
    rows = [a.forms[i][0] for i in sorted(zero)]
    dirs = kernel(rows, a.n)
    dirs_basis, dirs_piv = row_space(dirs, a.n)
    if a.affine_mode:
        hom_rows = [a.forms[i][0] + (a.forms[i][1],) for i in sorted(zero)]
        span = kernel(hom_rows, a.n + 1)
    else:
        span = dirs_basis
    return Face(s, len(dirs_basis), zero, tuple(map(tuple, dirs_basis)), tuple(dirs_piv),
                tuple(map(tuple, span)), x)


class FacePoset:
    """All faces of an arrangement, in canonical order, with the face order."""

    def __init__(self, arrangement: Arrangement, faces: Sequence[Face]):
        self.arrangement = arrangement
        self.faces = tuple(sorted(faces, key=lambda f: sign_key(f.signs)))
        self.index = {f.signs: i for i, f in enumerate(self.faces)}
        nf = len(self.faces)
        self.below = tuple(frozenset(j for j in range(nf) if sign_leq(self.faces[j].signs, self.faces[i].signs))
                           for i in range(nf))
        self.above = tuple(frozenset(j for j in range(nf) if i in self.below[j]) for i in range(nf))
        self.covering_pairs = tuple((j, i) for i in range(nf) for j in sorted(self.below[i])
                                    if self.faces[j].dim == self.faces[i].dim - 1)
        self.covers_below = tuple(tuple(j for (j, k) in self.covering_pairs if k == i) for i in range(nf))
        self.covers_above = tuple(tuple(k for (j, k) in self.covering_pairs if j == i) for i in range(nf))

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    @property
    def n(self) -> int:
        return self.arrangement.n

    def find(self, s) -> int:
        if isinstance(s, str):
            s = parse_signs(s)
        s = tuple(s)
        if s not in self.index:
            raise ArrangementError(f"{fmt_signs(s)} is not a face")
        return self.index[s]

    def leq(self, i: int, j: int) -> bool:
        return i in self.below[j]

    def dim(self, i: int) -> int:
        return self.faces[i].dim

    def codim(self, i: int) -> int:
        return self.n - self.faces[i].dim

    def chambers(self) -> list[int]:
        return [i for i, f in enumerate(self.faces) if f.dim == self.n]

    def compose(self, i: int, j: int) -> int:
        return self.index[compose(self.faces[i].signs, self.faces[j].signs)]

    def lower_bounds(self, *faces: int) -> frozenset:
        out = self.below[faces[0]]
        for f in faces[1:]:
            out = out & self.below[f]
        return out

    def meet(self, i: int, j: int) -> int | None:
        """Largest common lower bound, or None if there is none."""
        lb = self.lower_bounds(i, j)
        if not lb:
            return None
        tops = [k for k in lb if not any(k != m and k in self.below[m] for m in lb)]
        if len(tops) != 1:
            raise ArrangementError("common lower bounds have no maximum")
        return tops[0]

    def label(self, i: int) -> str:
        return self.faces[i].label

    def same_span(self, i: int, j: int) -> bool:
        return self.faces[i].zero_set == self.faces[j].zero_set


def sign_leq(s: SignVec, t: SignVec) -> bool:
    """Face order: 0 <= +, 0 <= -, coordinatewise."""
    return all(a == 0 or a == b for a, b in zip(s, t))


@functools.lru_cache(maxsize=None)
def enumerate_faces(a: Arrangement) -> FacePoset:
    """Faces by incremental insertion of hyperplanes, LP-pruned."""
    live: list[tuple[SignVec, tuple]] = []
    base = lp_feasible(LinearSystem.build(a.n))
    live.append(((), base.witness))
    for k in range(a.size):
        sub = Arrangement(a.n, a.forms[:k + 1], a.mode)
        nxt = []
        for s, _ in live:
            for e in (0, 1, -1):
                t = s + (e,)
                r = lp_feasible(sub.system(t))
                if r:
                    nxt.append((t, r.witness))
        live = nxt
    faces = []
    for s, x in live:
        x = _normalise_point(a, x)
        if a.signs_at(x) != s:
            raise ArrangementError("interior point does not realise its sign vector")
        faces.append(_make_face(a, s, x))
    return FacePoset(a, faces)


def brute_force_faces(a: Arrangement) -> set:
    """All realizable sign vectors by checking every candidate (test oracle)."""
    return {s for s in product((0, 1, -1), repeat=a.size) if lp_feasible(a.system(s))}


# ---------------------------------------------------------------------------
# composition


def compose(s: SignVec, t: SignVec) -> SignVec:
    if len(s) != len(t):
        raise ArrangementError("sign vectors of different length")
    return tuple(a if a != 0 else b for a, b in zip(s, t))


def compose_oracle(a: Arrangement, c: Face, d: Face) -> SignVec:
    """Sign vector of a small displacement from c towards d."""
    p, q = c.interior_point, d.interior_point
    eps = Fraction(1, 2)
    for i in range(a.size):
        fc, fd = a.value(i, p), a.value(i, q)
        if fc != 0 and sign(fc) != sign(fd):
            eps = min(eps, fc / (fc - fd) / 2)
    x = tuple((1 - eps) * u + eps * v for u, v in zip(p, q))
    return a.signs_at(x)


# ---------------------------------------------------------------------------
# collinearity

_RANK = {-1: 0, 0: 1, 1: 2}


def _monotone(x: int, y: int, z: int) -> bool:
    a, b, c = _RANK[x], _RANK[y], _RANK[z]
    return a <= b <= c or a >= b >= c


def monotone_signs(sa: SignVec, sb: SignVec, sc: SignVec) -> bool:
    """Per-hyperplane monotonicity under - < 0 < +.

    Necessary for collinearity but not sufficient once boundary faces are
    involved: the origin, the ray (0,+) and the chamber (+,+) of the
    coordinate cross are monotone, yet no segment from the origin into the
    open chamber touches the ray.
    """
    return all(_monotone(x, y, z) for x, y, z in zip(sa, sb, sc))


def collinear_signs(sa: SignVec, sb: SignVec, sc: SignVec) -> bool:
    """Sign test for some b in B lying on a segment [a, c], a in A, c in C.

    Away from the endpoints a form keeps its sign wherever the endpoint
    signs agree, and takes the nonzero endpoint sign when exactly one of
    them vanishes; only opposite endpoint signs leave it free.
    """
    if sb == sa or sb == sc:
        return True
    for x, y, z in zip(sa, sb, sc):
        if x == z:
            if y != x:
                return False
        elif x == 0 or z == 0:
            if y != x + z:
                return False
    return True


def collinear(a: Arrangement, A: Face, B: Face, C: Face) -> bool:
    if not collinear_signs(A.signs, B.signs, C.signs):
        return False
    if a.affine_mode:
        poset = enumerate_faces(a)
        ia, ib, ic = (poset.index[f.signs] for f in (A, B, C))
        return bool(poset.lower_bounds(ia, ib, ic))
    return True


def segment_meets(a: Arrangement, A: Face, B: Face, C: Face) -> bool:
    """Whether some point of B lies on a segment from a point of A to a point of C."""
    if A.signs == B.signs or B.signs == C.signs:
        return True
    n = a.n
    # variables p (n), q (n), s; b = p + q
    eq, st = [], []

    def membership(s: SignVec, coef_p, coef_q, coef_s, const):
        for (f, off), e in zip(a.forms, s):
            lin = tuple(coef_p * c for c in f) + tuple(coef_q * c for c in f) + (coef_s * off,)
            form = (lin, const * off)
            if e == 0:
                eq.append(form)
            else:
                st.append((tuple(e * v for v in form[0]), e * form[1]))

    # p in s*A: f.p + s*off ~ 0
    membership(A.signs, 1, 0, 1, 0)
    # q in (1-s)*C: f.q + (1-s)*off ~ 0
    membership(C.signs, 0, 1, -1, 1)
    # p + q in B
    membership(B.signs, 1, 1, 0, 1)
    st.append((tuple([0] * (2 * n)) + (1,), 0))
    st.append((tuple([0] * (2 * n)) + (-1,), 1))
    return bool(lp_feasible(LinearSystem.build(2 * n + 1, eq, (), st)))


def collinear_oracle(a: Arrangement, A: Face, B: Face, C: Face) -> bool:
    """Geometric collinearity by LP; in affine mode also demands a common lower bound."""
    if not segment_meets(a, A, B, C):
        return False
    if a.affine_mode:
        return _closures_meet(a, (A, B, C))
    return True


def _closures_meet(a: Arrangement, faces) -> bool:
    """Whether the closures of the given faces share a point (LP, no poset)."""
    eq, weak = [], []
    for f in faces:
        for (c, off), e in zip(a.forms, f.signs):
            if e == 0:
                eq.append((c, off))
            else:
                weak.append((tuple(e * v for v in c), e * off))
    return bool(lp_feasible(LinearSystem.build(a.n, eq, weak, ())))


# ---------------------------------------------------------------------------
# flats


@dataclass(frozen=True)
class Flat:
    hyperplanes: frozenset  # every hyperplane containing the flat
    basis: tuple  # echelon basis of its span (homogenised in affine mode)
    dim: int

    def contains(self, other: "Flat") -> bool:
        return self.hyperplanes <= other.hyperplanes


class FlatLattice:
    def __init__(self, arrangement: Arrangement, flats: Sequence[Flat]):
        self.arrangement = arrangement
        self.flats = tuple(sorted(flats, key=lambda f: (-f.dim, sorted(f.hyperplanes))))
        self.index = {f.hyperplanes: i for i, f in enumerate(self.flats)}

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def find(self, hyperplanes) -> Flat:
        key = frozenset(hyperplanes)
        if key not in self.index:
            raise ArrangementError(f"{sorted(key)} is not the hyperplane set of a flat")
        return self.flats[self.index[key]]

    def of_face(self, face: Face) -> Flat:
        return self.find(face.zero_set)

    def ambient(self) -> Flat:
        return self.find(())

    def label(self, f: Flat) -> str:
        return "{" + ",".join(str(i) for i in sorted(f.hyperplanes)) + "}"


def _hom_rows(a: Arrangement, hs) -> list:
    if a.affine_mode:
        return [a.forms[i][0] + (a.forms[i][1],) for i in sorted(hs)]
    return [a.forms[i][0] for i in sorted(hs)]


def _flat_from(a: Arrangement, hs) -> Flat | None:
    width = a.n + 1 if a.affine_mode else a.n
    basis = kernel(_hom_rows(a, hs), width)
    if a.affine_mode:
        if not any(v[-1] != 0 for v in basis):
            return None  # empty intersection
        dim = len(basis) - 1
    else:
        dim = len(basis)
    closed = frozenset(i for i in range(a.size)
                       if all(vec_dot(_hom_rows(a, [i])[0], v) == 0 for v in basis))
    return Flat(closed, tuple(basis), dim)


@functools.lru_cache(maxsize=None)
def flats(a: Arrangement) -> FlatLattice:
    start = _flat_from(a, ())
    seen = {start.hyperplanes: start}
    todo = deque([start])
    while todo:
        f = todo.popleft()
        for h in range(a.size):
            if h in f.hyperplanes:
                continue
            g = _flat_from(a, f.hyperplanes | {h})
            if g is not None and g.hyperplanes not in seen:
                seen[g.hyperplanes] = g
                todo.append(g)
    return FlatLattice(a, list(seen.values()))


def _as_flat(a: Arrangement, L) -> Flat:
    lat = flats(a)
    if isinstance(L, Flat):
        if L.hyperplanes not in lat.index:
            raise ArrangementError("not a flat of this arrangement")
        return lat.find(L.hyperplanes)
    return lat.find(L)


def _point_on(a: Arrangement, L: Flat) -> tuple:
    if not a.affine_mode:
        return tuple([Fraction(0)] * a.n)
    r = lp_feasible(LinearSystem.build(a.n, [a.forms[i] for i in sorted(L.hyperplanes)]))
    return r.witness


# ---------------------------------------------------------------------------
# quotient and restriction


@dataclass(frozen=True)
class Quotient:
    arrangement: Arrangement
    projection: Matrix  # k x n, applied to x - base_point
    base_point: tuple
    hyperplanes: tuple  # original indices surviving, in order
    face_map: dict  # original face index -> quotient face index

    def project(self, x) -> tuple:
        d = [u - v for u, v in zip(x, self.base_point)]
        return tuple(vec_dot(r, d) for r in self.projection.entries)


def quotient(a: Arrangement, L) -> Quotient:
    """The central arrangement of hyperplanes containing L, on the quotient space."""
    L = _as_flat(a, L)
    hs = tuple(sorted(L.hyperplanes))
    rows = [a.forms[i][0] for i in hs]
    basis, piv = row_space(rows, a.n)
    k = len(basis)
    if k == a.n:
        # already the whole space: keep coordinates
        basis = [tuple(Fraction(int(i == j)) for j in range(a.n)) for i in range(a.n)]
        piv = list(range(a.n))
    new_rows = [tuple(echelon_coords(basis, piv, r)) for r in rows]
    q = Arrangement(k, tuple((r, 0) for r in new_rows), "linear")
    proj = Matrix(k, a.n, basis) if k else Matrix(0, a.n)
    base = _point_on(a, L)
    poset, qposet = enumerate_faces(a), enumerate_faces(q)
    fmap = {i: qposet.index[tuple(f.signs[h] for h in hs)] for i, f in enumerate(poset.faces)}
    return Quotient(q, proj, base, hs, fmap)


def essentialize(a: Arrangement) -> Quotient:
    if a.affine_mode:
        raise ArrangementError("essentialize needs a linear arrangement")
    lat = flats(a)
    smallest = min(lat.flats, key=lambda f: f.dim)
    return quotient(a, smallest)


@dataclass(frozen=True)
class Restriction:
    arrangement: Arrangement
    basis: Matrix  # n x d, columns span the direction of L
    base_point: tuple
    hyperplanes: tuple  # original index chosen for each restricted hyperplane
    face_map: dict  # restricted face index -> original face index

    def embed(self, y) -> tuple:
        return tuple(p + vec_dot(r, y) for p, r in zip(self.base_point, self.basis.entries))


def restrict(a: Arrangement, L) -> Restriction:
    """The arrangement cut out on L by the hyperplanes not containing it."""
    L = _as_flat(a, L)
    dirs = kernel([a.forms[i][0] for i in sorted(L.hyperplanes)], a.n)
    d = len(dirs)
    base = _point_on(a, L)
    B = Matrix(a.n, d, [[v[i] for v in dirs] for i in range(a.n)]) if a.n else Matrix(0, d)
    forms, chosen = [], []
    for i, (f, off) in enumerate(a.forms):
        if i in L.hyperplanes:
            continue
        g = tuple(vec_dot(f, v) for v in dirs)
        c = vec_dot(f, base) + off
        if all(x == 0 for x in g):
            continue  # parallel to L and disjoint from it
        if any(_proportional(h + (hc,), g + (c,)) for h, hc in forms):
            continue
        forms.append((g, c))
        chosen.append(i)
    r = Arrangement(d, tuple(forms), a.mode)
    rposet, poset = enumerate_faces(r), enumerate_faces(a)
    res = Restriction(r, B, base, tuple(chosen), {})
    fmap = {}
    for j, f in enumerate(rposet.faces):
        fmap[j] = poset.index[a.signs_at(res.embed(f.interior_point))]
    return Restriction(r, B, base, tuple(chosen), fmap)


# ---------------------------------------------------------------------------
# chambers, adjacency, stratification cells


def adjacent(a: Arrangement, C1: Face, C2: Face) -> Face | None:
    """The common wall of two faces of one flat lying on opposite sides of it."""
    if C1.signs == C2.signs or C1.dim != C2.dim or C1.zero_set != C2.zero_set:
        return None
    poset = enumerate_faces(a)
    i, j = poset.index[C1.signs], poset.index[C2.signs]
    common = set(poset.covers_below[i]) & set(poset.covers_below[j])
    if not common:
        return None
    (w,) = common
    return poset.faces[w]


def _wall_graph(poset: FacePoset) -> dict:
    ch = poset.chambers()
    graph = {c: [] for c in ch}
    for w, f in enumerate(poset.faces):
        if f.dim == poset.n - 1:
            up = poset.covers_above[w]
            if len(up) == 2:
                x, y = up
                graph[x].append(y)
                graph[y].append(x)
    return graph


def chamber_distance(a: Arrangement, D: Face, D2: Face) -> int:
    poset = enumerate_faces(a)
    if D.dim != a.n or D2.dim != a.n:
        raise ArrangementError("chamber_distance needs two chambers")
    src, dst = poset.index[D.signs], poset.index[D2.signs]
    graph = _wall_graph(poset)
    dist = {src: 0}
    todo = deque([src])
    while todo:
        x = todo.popleft()
        if x == dst:
            return dist[x]
        for y in graph[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                todo.append(y)
    raise ArrangementError("chambers are not connected")


@dataclass(frozen=True, order=True)
class S1Cell:
    """The cell [C, D] of the stratification by (real part, imaginary part); C <= D."""

    C: int
    D: int


def s1_cells(poset: FacePoset) -> list[S1Cell]:
    return [S1Cell(c, d) for d in range(len(poset)) for c in sorted(poset.below[d])]


def s1_leq(poset: FacePoset, lo: S1Cell, hi: S1Cell) -> bool:
    """[C', D'] <= [C, D] iff C' <= C and C o D' <= D."""
    return poset.leq(lo.C, hi.C) and poset.leq(poset.compose(hi.C, lo.D), hi.D)


def s1_leq_oracle(poset: FacePoset, lo: S1Cell, hi: S1Cell) -> bool:
    """Closure test by geometry only: is a point of [C', D'] in the closure of [C, D]?

    [C, D] is the set of z with Im z in C and Re z in D + span(C).  Its
    closure is closure(C) x (closure(D) + span(C)), so it suffices to test
    one point of the smaller cell against both factors with an LP.
    """
    a = poset.arrangement
    C, D = poset.faces[hi.C], poset.faces[hi.D]
    im, re = poset.faces[lo.C].interior_point, poset.faces[lo.D].interior_point
    if not all(sign(a.value(i, im)) in (0, e) if e else a.value(i, im) == 0
               for i, e in enumerate(C.signs)):
        return False
    # re = x + y with x in closure(D), y in the direction space of C
    n = a.n
    eq, weak = [], []
    for i, ((f, off), e) in enumerate(zip(a.forms, D.signs)):
        lin = tuple(f) + tuple([0] * n)
        if e == 0:
            eq.append((lin, off))
        else:
            weak.append((tuple(e * c for c in lin), e * off))
    for i in C.zero_set:
        f = a.forms[i][0]
        eq.append((tuple([0] * n) + tuple(f), 0))
    for k in range(n):
        unit = [0] * (2 * n)
        unit[k] = 1
        unit[n + k] = 1
        eq.append((tuple(unit), -re[k]))
    return bool(lp_feasible(LinearSystem.build(2 * n, eq, weak, ())))


def s2_to_s1(poset: FacePoset, C: int, D: int) -> S1Cell:
    return S1Cell(C, poset.compose(C, D))
