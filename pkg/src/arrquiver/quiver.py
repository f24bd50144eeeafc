"""Double representations of a face poset and their validation.

A double representation attaches a vector space E_C to every face and,
to every covering pair C' < C, maps gamma: E_C' -> E_C and
delta: E_C -> E_C'.  Both families must compose path independently; the
constructor closes them to all comparable pairs and refuses data that
does not.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping

from .arrangement import (Arrangement, FacePoset, Flat, adjacent, enumerate_faces,
                          flats, quotient, restrict)
from .arrangement import collinear as _collinear
from .exactla import QQ, Field, Matrix


class QuiverError(ValueError):
    pass


class DoubleRep:
    """Immutable double representation over a face poset.

    Maps are keyed by face-index pairs ``(lo, hi)`` with ``lo <= hi``.
    ``gamma(lo, hi)`` goes up, ``delta(lo, hi)`` goes down.
    """

    def __init__(self, poset: FacePoset, dims, gamma: Mapping, delta: Mapping, field: Field = QQ):
        self.poset = poset
        self.field = field
        if isinstance(dims, Mapping):
            dims = [dims[i] for i in range(len(poset))]
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != len(poset) or any(d < 0 for d in self.dims):
            raise QuiverError("need one non-negative dimension per face")
        self._gamma: dict = {}
        self._delta: dict = {}
        for lo, hi in poset.covering_pairs:
            for name, store, src, want in (("gamma", gamma, (lo, hi), (self.dims[hi], self.dims[lo])),
                                           ("delta", delta, (lo, hi), (self.dims[lo], self.dims[hi]))):
                if src not in store:
                    raise QuiverError(f"missing {name} for covering pair "
                                      f"{poset.label(lo)} < {poset.label(hi)}")
                m = store[src]
                if m.shape != want:
                    raise QuiverError(f"{name} {poset.label(lo)} < {poset.label(hi)} has shape {m.shape}, "
                                      f"expected {want}")
                if m.field != field:
                    raise QuiverError(f"{name} {poset.label(lo)} < {poset.label(hi)} is over the wrong field")
            self._gamma[(lo, hi)] = gamma[(lo, hi)]
            self._delta[(lo, hi)] = delta[(lo, hi)]
        self._close()

    def _close(self):
        p = self.poset
        for i in range(len(p)):
            self._gamma[(i, i)] = Matrix.identity(self.dims[i], self.field)
            self._delta[(i, i)] = Matrix.identity(self.dims[i], self.field)
        pairs = sorted(((lo, hi) for hi in range(len(p)) for lo in p.below[hi]
                        if p.dim(hi) - p.dim(lo) >= 2), key=lambda t: p.dim(t[1]) - p.dim(t[0]))
        for lo, hi in pairs:
            mids = [m for m in p.covers_above[lo] if m in p.below[hi]]
            g0 = d0 = None
            for m in mids:
                g = self._gamma[(m, hi)] @ self._gamma[(lo, m)]
                d = self._delta[(lo, m)] @ self._delta[(m, hi)]
                if g0 is None:
                    g0, d0, m0 = g, d, m
                    continue
                for name, x, y in (("gamma", g0, g), ("delta", d0, d)):
                    if x != y:
                        raise QuiverError(
                            f"{name} is path dependent: chains {p.label(lo)} < {p.label(m0)} < ... < "
                            f"{p.label(hi)} and {p.label(lo)} < {p.label(m)} < ... < {p.label(hi)} disagree")
            self._gamma[(lo, hi)] = g0
            self._delta[(lo, hi)] = d0

    @property
    def arrangement(self) -> Arrangement:
        return self.poset.arrangement

    def gamma(self, lo: int, hi: int) -> Matrix:
        return self._gamma[(lo, hi)]

    def delta(self, lo: int, hi: int) -> Matrix:
        """The map E_hi -> E_lo."""
        return self._delta[(lo, hi)]

    def covering_data(self) -> tuple[dict, dict]:
        cov = self.poset.covering_pairs
        return {k: self._gamma[k] for k in cov}, {k: self._delta[k] for k in cov}

    def __eq__(self, other):
        if not isinstance(other, DoubleRep):
            return NotImplemented
        return (self.poset.arrangement == other.poset.arrangement and self.dims == other.dims
                and self.field == other.field and self.covering_data() == other.covering_data())

    def __repr__(self):
        return f"DoubleRep(faces={len(self.poset)}, dims={self.dims})"


def build(poset: FacePoset, dims, gamma: Mapping, delta: Mapping, field: Field = QQ) -> DoubleRep:
    return DoubleRep(poset, dims, gamma, delta, field)


def constant_quiver(poset: FacePoset, d: int = 1, field: Field = QQ) -> DoubleRep:
    if d < 0:
        raise QuiverError("dimension must be non-negative")
    one = Matrix.identity(d, field)
    cov = {k: one for k in poset.covering_pairs}
    return DoubleRep(poset, [d] * len(poset), cov, cov, field)


def transition(q: DoubleRep, A: int, B: int, check: bool = False) -> Matrix:
    """phi_AB = gamma_{MB} delta_{AM} through the largest common lower bound M.

    With ``check`` the result is compared against every other common lower
    bound, which must agree for quivers satisfying (Mon).
    """
    p = q.poset
    m = p.meet(A, B)
    if m is None:
        raise QuiverError(f"{p.label(A)} and {p.label(B)} have no common lower bound")
    phi = q.gamma(m, B) @ q.delta(m, A)
    if check:
        for w in p.lower_bounds(A, B):
            other = q.gamma(w, B) @ q.delta(w, A)
            if other != phi:
                raise QuiverError(f"transition {p.label(A)} -> {p.label(B)} depends on the lower bound "
                                  f"({p.label(m)} vs {p.label(w)})")
    return phi


@dataclass
class ValidationReport:
    mon_violations: list = field(default_factory=list)
    tran_violations: list = field(default_factory=list)
    inv_violations: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return not (self.mon_violations or self.tran_violations or self.inv_violations)

    def __bool__(self):
        return self.verdict


def adjacent_pairs(poset: FacePoset) -> list[tuple[int, int, int]]:
    """Ordered pairs (C1, C2, wall) of faces on opposite sides of a common wall."""
    a = poset.arrangement
    out = []
    for i, f in enumerate(poset.faces):
        for j, g in enumerate(poset.faces):
            if i != j and f.zero_set == g.zero_set:
                w = adjacent(a, f, g)
                if w is not None:
                    out.append((i, j, poset.index[w.signs]))
    return out


def collinear_triples(poset: FacePoset) -> list[tuple[int, int, int]]:
    a = poset.arrangement
    faces = poset.faces
    out = []
    for i, A in enumerate(faces):
        for k, C in enumerate(faces):
            for j, B in enumerate(faces):
                if _collinear(a, A, B, C):
                    out.append((i, j, k))
    return out


def transitions(q: DoubleRep) -> dict:
    """phi for every pair of faces admitting a common lower bound."""
    p = q.poset
    out = {}
    for i in range(len(p)):
        for j in range(len(p)):
            if p.meet(i, j) is not None:
                out[(i, j)] = transition(q, i, j)
    return out


def validate(q: DoubleRep, a: Arrangement | None = None) -> ValidationReport:
    p = q.poset
    if a is not None and a != p.arrangement:
        raise QuiverError("quiver is not built over this arrangement")
    rep = ValidationReport()
    for hi in range(len(p)):
        for lo in sorted(p.below[hi]):
            if lo == hi:
                continue
            defect = q.gamma(lo, hi) @ q.delta(lo, hi) - Matrix.identity(q.dims[hi], q.field)
            if not defect.is_zero():
                rep.mon_violations.append(((lo, hi), defect))
    phi = transitions(q)
    for A, B, C in collinear_triples(p):
        lhs = phi[(A, C)]
        rhs = phi[(B, C)] @ phi[(A, B)]
        if lhs != rhs:
            rep.tran_violations.append(((A, B, C), lhs, rhs))
    for c1, c2, _ in adjacent_pairs(p):
        m = phi[(c1, c2)]
        if not m.is_invertible():
            rep.inv_violations.append(((c1, c2), m))
    return rep


def dual(q: DoubleRep) -> DoubleRep:
    g, d = q.covering_data()
    return DoubleRep(q.poset, q.dims, {k: m.T for k, m in d.items()}, {k: m.T for k, m in g.items()}, q.field)


def _resolve_flat(a: Arrangement, L) -> Flat:
    lat = flats(a)
    if isinstance(L, Flat):
        L = L.hyperplanes
    return lat.find(L)


def restrict_flat(q: DoubleRep, L) -> DoubleRep:
    """The sub-diagram on faces contained in L, as a quiver over the restricted arrangement."""
    a = q.arrangement
    L = _resolve_flat(a, L)
    res = restrict(a, L)
    rp = enumerate_faces(res.arrangement)
    fm = res.face_map
    dims = [q.dims[fm[j]] for j in range(len(rp))]
    gam = {(lo, hi): q.gamma(fm[lo], fm[hi]) for lo, hi in rp.covering_pairs}
    dl = {(lo, hi): q.delta(fm[lo], fm[hi]) for lo, hi in rp.covering_pairs}
    return DoubleRep(rp, dims, gam, dl, q.field)


def slice(q: DoubleRep, C: int) -> DoubleRep:
    """The sub-diagram on faces >= C, as a quiver over the quotient by the span of C."""
    a = q.arrangement
    p = q.poset
    if not 0 <= C < len(p):
        raise QuiverError("not a face index")
    quo = quotient(a, p.faces[C].zero_set)
    qp = enumerate_faces(quo.arrangement)
    back = {}
    for i in sorted(p.above[C]):
        back[quo.face_map[i]] = i
    if len(back) != len(qp):
        raise QuiverError("faces above C do not match the quotient faces")
    dims = [q.dims[back[j]] for j in range(len(qp))]
    gam = {(lo, hi): q.gamma(back[lo], back[hi]) for lo, hi in qp.covering_pairs}
    dl = {(lo, hi): q.delta(back[lo], back[hi]) for lo, hi in qp.covering_pairs}
    return DoubleRep(qp, dims, gam, dl, q.field)


def multiplicities(q: DoubleRep, lat=None) -> dict:
    """Solve dim E_C = sum of m_L over flats L containing C, keyed by hyperplane sets."""
    a = q.arrangement
    lat = lat or flats(a)
    p = q.poset
    mult: dict = {}
    for L in sorted(lat.flats, key=lambda f: -f.dim):
        reps = [i for i, f in enumerate(p.faces) if f.zero_set == L.hyperplanes]
        if not reps:
            raise QuiverError(f"flat {lat.label(L)} has no open face")
        ds = {q.dims[i] for i in reps}
        if len(ds) != 1:
            raise QuiverError(f"faces open in flat {lat.label(L)} have different dimensions {sorted(ds)}")
        above = sum(mult[M.hyperplanes] for M in lat.flats
                    if M.hyperplanes < L.hyperplanes)
        mult[L.hyperplanes] = ds.pop() - above
    neg = [k for k, v in mult.items() if v < 0]
    if neg:
        warnings.warn(f"negative multiplicities at flats {[sorted(k) for k in neg]}")
    return mult
