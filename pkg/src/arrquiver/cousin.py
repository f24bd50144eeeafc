"""Cousin complexes of double representations.

The global complex puts E_C in degree codim C and uses the delta maps,
twisted by incidence signs coming from explicit orientations of the face
spans.  Stalk complexes live on the cells [C1, D] of the stratification
by real and imaginary parts.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .arrangement import FacePoset, S1Cell, s1_cells, s1_leq
from .exactla import (ChainComplex, ChainMap, LinAlgError, Matrix, cohomology, echelon_coords,
                      quasi_iso)
from .quiver import DoubleRep, QuiverError, dual, transition


class CousinError(ValueError):
    pass


@dataclass(frozen=True)
class OrientationData:
    poset: FacePoset
    signs: dict  # covering pair (lo, hi) -> +1 / -1

    def sign(self, lo: int, hi: int) -> int:
        return self.signs[(lo, hi)]


def _det_sign(rows) -> int:
    if not rows:
        return 1
    d = Matrix.from_rows(rows).det()
    if d == 0:
        raise CousinError("degenerate orientation data")
    return 1 if d > 0 else -1


@functools.lru_cache(maxsize=None)
def orientation_data(poset: FacePoset) -> OrientationData:
    """Incidence signs: compare basis(C') plus the inward direction with basis(C)."""
    signs = {}
    for lo, hi in poset.covering_pairs:
        f, g = poset.faces[lo], poset.faces[hi]
        inward = tuple(x - y for x, y in zip(g.interior_point, f.interior_point))
        vecs = list(f.direction_basis) + [inward]
        try:
            rows = [echelon_coords(g.direction_basis, g.direction_pivots, v) for v in vecs]
        except LinAlgError:
            raise CousinError(f"span of {poset.label(lo)} is not inside the span of {poset.label(hi)}") from None
        signs[(lo, hi)] = _det_sign(rows)
    od = OrientationData(poset, signs)
    _check_diamonds(od)
    return od


def _check_diamonds(od: OrientationData):
    p = od.poset
    for hi in range(len(p)):
        for lo in p.below[hi]:
            if p.dim(hi) - p.dim(lo) != 2:
                continue
            mids = [m for m in p.covers_above[lo] if m in p.below[hi]]
            total = sum(od.sign(lo, m) * od.sign(m, hi) for m in mids)
            if len(mids) != 2 or total != 0:
                raise CousinError(f"diamond condition fails on {p.label(lo)} < {p.label(hi)}")


@dataclass(frozen=True)
class CousinComplex:
    degrees: tuple  # per degree: tuple of (face, dim E)
    complex: ChainComplex

    def cohomology(self) -> tuple:
        return cohomology(self.complex)


@dataclass(frozen=True)
class StalkComplex:
    cell: S1Cell
    degrees: tuple  # per degree: tuple of (face C, face C o D, dim)
    complex: ChainComplex

    def cohomology(self) -> tuple:
        return cohomology(self.complex)


def _faces_by_codim(p: FacePoset, faces) -> list[list[int]]:
    out = [[] for _ in range(p.n + 1)]
    for i in faces:
        out[p.codim(i)].append(i)
    return out


def _assemble(p: FacePoset, q: DoubleRep, layers, space, block, where: str) -> ChainComplex:
    terms = [sum(q.dims[space(c)] for c in layer) for layer in layers]
    diffs = []
    for k in range(len(layers) - 1):
        src, dst = layers[k], layers[k + 1]
        blocks = [[block(c, cp) if cp in p.covers_below[c] else None for c in src] for cp in dst]
        diffs.append(Matrix.block(blocks, [q.dims[space(c)] for c in dst], [q.dims[space(c)] for c in src],
                                  q.field))
    for k in range(len(diffs) - 1):
        dd = diffs[k + 1] @ diffs[k]
        if not dd.is_zero():
            for c in layers[k]:
                for cpp in layers[k + 2]:
                    if p.leq(cpp, c):
                        acc = Matrix.zeros(q.dims[space(cpp)], q.dims[space(c)], q.field)
                        for m in layers[k + 1]:
                            if m in p.covers_below[c] and cpp in p.covers_below[m]:
                                acc = acc + block(m, cpp) @ block(c, m)
                        if not acc.is_zero():
                            raise CousinError(f"d^2 != 0 in {where} on the interval "
                                              f"{p.label(cpp)} < {p.label(c)}")
            raise CousinError(f"d^2 != 0 in {where} at degree {k}")
    return ChainComplex(terms, diffs, q.field)


def global_complex(q: DoubleRep) -> CousinComplex:
    p = q.poset
    od = orientation_data(p)
    layers = _faces_by_codim(p, range(len(p)))
    cx = _assemble(p, q, layers, lambda c: c,
                   lambda c, cp: q.delta(cp, c).scale(od.sign(cp, c)), "the global complex")
    return CousinComplex(tuple(tuple((c, q.dims[c]) for c in layer) for layer in layers), cx)


def stalk_complex(q: DoubleRep, cell: S1Cell) -> StalkComplex:
    p = q.poset
    if not p.leq(cell.C, cell.D):
        raise CousinError("a cell [C, D] needs C <= D")
    od = orientation_data(p)
    layers = _faces_by_codim(p, sorted(p.above[cell.C]))
    comp = {c: p.compose(c, cell.D) for layer in layers for c in layer}
    cx = _assemble(p, q, layers, lambda c: comp[c],
                   lambda c, cp: transition(q, comp[c], comp[cp]).scale(od.sign(cp, c)),
                   f"the stalk complex of [{p.label(cell.C)}, {p.label(cell.D)}]")
    degrees = tuple(tuple((c, comp[c], q.dims[comp[c]]) for c in layer) for layer in layers)
    return StalkComplex(cell, degrees, cx)


def generalization_chain_map(q: DoubleRep, lo: S1Cell, hi: S1Cell,
                             source: StalkComplex | None = None, target: StalkComplex | None = None) -> ChainMap:
    """Map from the stalk at [C1', D'] to the stalk at [C1, D] for [C1', D'] <= [C1, D]."""
    p = q.poset
    if not s1_leq(p, lo, hi):
        raise CousinError("cells are not comparable")
    source = source or stalk_complex(q, lo)
    target = target or stalk_complex(q, hi)
    comps = []
    for sl, tl in zip(source.degrees, target.degrees):
        blocks = []
        for tc, tk, _ in tl:
            row = []
            for sc, sk, _ in sl:
                row.append(q.gamma(sk, tk) if sc == tc else None)
            blocks.append(row)
        comps.append(Matrix.block(blocks, [d for _, _, d in tl], [d for _, _, d in sl], q.field))
    return ChainMap(source.complex, target.complex, comps)


def elementary_inclusions(p: FacePoset) -> list[tuple[str, S1Cell, S1Cell]]:
    """Type 1: [C', D] <= [C, D].  Type 2: [C1, D1] <= [D2, D2] across a wall C1."""
    out = []
    for d in range(len(p)):
        for c in sorted(p.below[d]):
            for cp in sorted(p.below[c]):
                if cp != c:
                    out.append(("1", S1Cell(cp, d), S1Cell(c, d)))
    for w in range(len(p)):
        ups = p.covers_above[w]
        for d1 in ups:
            for d2 in ups:
                if d1 != d2 and p.same_span(d1, d2):
                    out.append(("2", S1Cell(w, d1), S1Cell(d2, d2)))
    return out


@dataclass
class SmoothnessReport:
    failures: list = field(default_factory=list)  # (type, lo cell, hi cell, reason)
    checked: int = 0

    @property
    def verdict(self) -> bool:
        return not self.failures


def _stalks(q: DoubleRep) -> dict:
    out = {}
    for cell in s1_cells(q.poset):
        try:
            out[cell] = stalk_complex(q, cell)
        except (CousinError, QuiverError, LinAlgError) as e:
            out[cell] = e
    return out


def smoothness_check(q: DoubleRep) -> SmoothnessReport:
    p = q.poset
    stalks = _stalks(q)
    rep = SmoothnessReport()
    for kind, lo, hi in elementary_inclusions(p):
        rep.checked += 1
        s, t = stalks[lo], stalks[hi]
        if isinstance(s, Exception) or isinstance(t, Exception):
            rep.failures.append((kind, lo, hi, "stalk complex undefined"))
            continue
        try:
            f = generalization_chain_map(q, lo, hi, s, t)
        except (CousinError, LinAlgError) as e:
            rep.failures.append((kind, lo, hi, f"not a chain map: {e}"))
            continue
        if not quasi_iso(f):
            rep.failures.append((kind, lo, hi, "not a quasi-isomorphism"))
    return rep


@dataclass
class PerversityReport:
    failures: list = field(default_factory=list)  # (which, cell, degree, flat codim)
    stalk_cohomology: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return not self.failures


def stalk_cohomology(q: DoubleRep) -> dict:
    """Cohomology dimensions per cell, or the error raised while building the stalk."""
    return {c: (s.cohomology() if not isinstance(s, Exception) else s) for c, s in _stalks(q).items()}


def _support(q: DoubleRep, which: str, rep: PerversityReport):
    p = q.poset
    for cell, h in stalk_cohomology(q).items():
        if which == "quiver":
            rep.stalk_cohomology[cell] = h
        if isinstance(h, Exception):
            rep.failures.append((which, cell, None, str(h)))
            continue
        codim = p.codim(cell.D)
        for deg, x in enumerate(h):
            if x and codim < deg:
                rep.failures.append((which, cell, deg, codim))


def perversity_support_check(q: DoubleRep) -> PerversityReport:
    rep = PerversityReport()
    _support(q, "quiver", rep)
    _support(dual(q), "dual", rep)
    return rep


def euler_characteristic(q: DoubleRep) -> int:
    p = q.poset
    return sum((-1) ** p.codim(i) * d for i, d in enumerate(q.dims))


def strata(p: FacePoset) -> dict:
    """Cells grouped by the stratum they lie in (the span of D)."""
    out: dict = {}
    for cell in s1_cells(p):
        out.setdefault(p.faces[cell.D].zero_set, []).append(cell)
    return out
