"""Presentations of the fundamental groupoid of the complexified complement.

Objects are chambers.  Words are tuples of generator indices written in
composition order: the last generator is applied first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import (Arrangement, ArrangementError, FacePoset, collinear, enumerate_faces, quotient,
                          sign)
from .exactla import Matrix
from .quiver import DoubleRep, transition


class GroupoidError(ValueError):
    pass


@dataclass(frozen=True)
class GroupoidPresentation:
    objects: tuple  # chamber face indices
    generators: tuple  # (source, target, kind)
    relations: tuple  # (word, word)
    kind: str

    def __post_init__(self):
        for w1, w2 in self.relations:
            if self.ends(w1) != self.ends(w2):
                raise GroupoidError("relation words have different ends")

    def ends(self, word) -> tuple:
        """(source, target) of a word; words must be non-empty here."""
        for a, b in zip(word, word[1:]):
            if self.generators[b][1] != self.generators[a][0]:
                raise GroupoidError("word is not composable")
        return self.generators[word[-1]][0], self.generators[word[0]][1]

    def generator_index(self, src: int, dst: int) -> int:
        return self._gen_index[(src, dst)]

    @functools.cached_property
    def _gen_index(self) -> dict:
        return {(s, t): i for i, (s, t, _) in enumerate(self.generators)}


def _linear_poset(a: Arrangement) -> FacePoset:
    if a.affine_mode:
        raise GroupoidError("groupoid presentations need a linear arrangement")
    return enumerate_faces(a)


def collinearity_presentation(a: Arrangement) -> GroupoidPresentation:
    p = _linear_poset(a)
    ch = p.chambers()
    gens = tuple((x, y, "any-pair") for x in ch for y in ch if x != y)
    idx = {(s, t): i for i, (s, t, _) in enumerate(gens)}
    rels = []
    for x in ch:
        for y in ch:
            for z in ch:
                if len({x, y, z}) == 3 and collinear(a, p.faces[x], p.faces[y], p.faces[z]):
                    rels.append(((idx[(x, z)],), (idx[(y, z)], idx[(x, y)])))
    return GroupoidPresentation(tuple(ch), gens, tuple(rels), "collinearity")


def _adjacent_chambers(p: FacePoset) -> list[tuple[int, int]]:
    out = []
    for w, f in enumerate(p.faces):
        if f.dim == p.n - 1:
            ups = p.covers_above[w]
            for x in ups:
                for y in ups:
                    if x != y:
                        out.append((x, y))
    return sorted(out)


def _half_plane(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u, v) -> int:
    hu, hv = _half_plane(u), _half_plane(v)
    if hu != hv:
        return -1 if hu < hv else 1
    cross = u[0] * v[1] - u[1] * v[0]
    return -sign(cross)


def cyclic_chambers(a: Arrangement, F: int) -> list[int]:
    """Chambers around a codimension-2 face, in counterclockwise order."""
    p = _linear_poset(a)
    quo = quotient(a, p.faces[F].zero_set)
    if quo.arrangement.n != 2:
        raise GroupoidError("face is not of codimension 2")
    ch = [c for c in p.chambers() if p.leq(F, c)]
    pts = {c: quo.project(p.faces[c].interior_point) for c in ch}
    return sorted(ch, key=functools.cmp_to_key(lambda x, y: _angle_cmp(pts[x], pts[y])))


def salvetti_presentation(a: Arrangement) -> GroupoidPresentation:
    p = _linear_poset(a)
    ch = p.chambers()
    gens = tuple((x, y, "adjacent") for x, y in _adjacent_chambers(p))
    idx = {(s, t): i for i, (s, t, _) in enumerate(gens)}
    rels = []
    for F, f in enumerate(p.faces):
        if f.dim != p.n - 2:
            continue
        ring = cyclic_chambers(a, F)
        m2 = len(ring)
        if m2 % 2:
            raise GroupoidError("odd number of chambers around a codimension-2 face")
        m = m2 // 2
        for k in range(m2):
            fwd = [ring[(k + i) % m2] for i in range(m + 1)]
            bwd = [ring[(k - i) % m2] for i in range(m + 1)]
            w1 = tuple(idx[(fwd[i], fwd[i + 1])] for i in reversed(range(m)))
            w2 = tuple(idx[(bwd[i], bwd[i + 1])] for i in reversed(range(m)))
            rels.append((w1, w2))
    return GroupoidPresentation(tuple(ch), gens, tuple(rels), "salvetti")


# ---------------------------------------------------------------------------
# crossing words


def _perturbation(n: int) -> tuple:
    return tuple(Fraction(1, k + 2) ** (k + 1) for k in range(n))


def crossing_chambers(a: Arrangement, A: int, B: int, retries: int = 40) -> list[int]:
    """Chambers met by a generic segment from a point of A to a point of B."""
    p = _linear_poset(a)
    fa, fb = p.faces[A], p.faces[B]
    if fa.dim != a.n or fb.dim != a.n:
        raise GroupoidError("crossing words join two chambers")
    x = fa.interior_point
    w = _perturbation(a.n)
    for k in range(retries):
        eps = Fraction(1, 3) ** k if k else Fraction(0)
        y = tuple(b + eps * d for b, d in zip(fb.interior_point, w))
        if a.signs_at(y) != fb.signs:
            continue
        crossings = []
        for i in range(a.size):
            u, v = a.value(i, x), a.value(i, y)
            if sign(u) != sign(v):
                crossings.append((u / (u - v), i))
        times = [t for t, _ in crossings]
        if len(set(times)) != len(times):
            continue  # segment passes through a codimension >= 2 flat
        crossings.sort()
        s = list(fa.signs)
        path = [A]
        for _, i in crossings:
            s[i] = -s[i]
            path.append(p.index[tuple(s)])
        return path
    raise GroupoidError("could not find a generic segment; regenerate interior points")


def crossing_word(a: Arrangement, A: int, B: int, pres: GroupoidPresentation | None = None) -> tuple:
    path = crossing_chambers(a, A, B)
    if pres is None:
        p = _linear_poset(a)
        gens = _adjacent_chambers(p)
        idx = {g: i for i, g in enumerate(gens)}
    else:
        idx = pres._gen_index
    return tuple(idx[(path[i], path[i + 1])] for i in reversed(range(len(path) - 1)))


# ---------------------------------------------------------------------------
# representations


def evaluate(q: DoubleRep, pres: GroupoidPresentation, word, start: int | None = None) -> Matrix:
    if not word:
        if start is None:
            raise GroupoidError("empty word needs a base chamber")
        return Matrix.identity(q.dims[start], q.field)
    src = pres.generators[word[-1]][0]
    m = Matrix.identity(q.dims[src], q.field)
    for g in reversed(word):
        s, t, _ = pres.generators[g]
        m = transition(q, s, t) @ m
    return m


@dataclass
class RepresentationReport:
    failures: list = field(default_factory=list)  # (relation index, lhs, rhs)
    checked: int = 0

    @property
    def verdict(self) -> bool:
        return not self.failures


def check_representation(q: DoubleRep, pres: GroupoidPresentation) -> RepresentationReport:
    rep = RepresentationReport()
    for k, (w1, w2) in enumerate(pres.relations):
        rep.checked += 1
        lhs, rhs = evaluate(q, pres, w1), evaluate(q, pres, w2)
        if lhs != rhs:
            rep.failures.append((k, lhs, rhs))
    return rep


def long_form_product(q: DoubleRep, a: Arrangement, A: int, B: int) -> Matrix:
    """Alternating gamma/delta product along the faces met by a generic segment.

    Between consecutive chambers X, Y with wall W this is gamma_{WY} delta_{XW}.
    """
    p = q.poset
    path = crossing_chambers(a, A, B)
    m = Matrix.identity(q.dims[A], q.field)
    for x, y in zip(path, path[1:]):
        w = _wall(p, x, y)
        m = q.gamma(w, y) @ q.delta(w, x) @ m
    return m


def _wall(p: FacePoset, x: int, y: int) -> int:
    (w,) = set(p.covers_below[x]) & set(p.covers_below[y])
    return w


def zifferblatt_check(q: DoubleRep) -> RepresentationReport:
    """Around each codimension-2 face, the two alternating gamma/delta products
    of half length from any chamber of the ring must agree.

    Built from gamma and delta directly, independent of ``transition``.
    """
    p = q.poset
    a = q.arrangement
    rep = RepresentationReport()
    for F, f in enumerate(p.faces):
        if f.dim != p.n - 2:
            continue
        ring = cyclic_chambers(a, F)
        m2 = len(ring)
        m = m2 // 2
        for k in range(m2):
            prods = []
            for step in (1, -1):
                chain = [ring[(k + step * i) % m2] for i in range(m + 1)]
                acc = Matrix.identity(q.dims[chain[0]], q.field)
                for x, y in zip(chain, chain[1:]):
                    w = _wall(p, x, y)
                    acc = q.gamma(w, y) @ q.delta(w, x) @ acc
                prods.append(acc)
            rep.checked += 1
            if prods[0] != prods[1]:
                rep.failures.append(((F, ring[k]), prods[0], prods[1]))
    return rep


__all__ = ["GroupoidPresentation", "GroupoidError", "collinearity_presentation", "salvetti_presentation",
           "crossing_word", "crossing_chambers", "cyclic_chambers", "check_representation", "evaluate",
           "long_form_product", "zifferblatt_check", "RepresentationReport", "ArrangementError"]
