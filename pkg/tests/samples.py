"""Sample quivers shared by the tests."""

from fractions import Fraction

from arrquiver.arrangement import (Arrangement, concurrent_lines, coordinate_cross, enumerate_faces, line_point,
                                   restrict)
from arrquiver.exactla import QQ, Matrix
from arrquiver.onedim import constant, local_system, skyscraper, to_B, to_quiver
from arrquiver.quiver import DoubleRep, constant_quiver

M = Matrix.from_rows


def kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([a.entries[i][j] * b.entries[k][l] for j in range(a.cols) for l in range(b.cols)])
    return Matrix(a.rows * b.rows, a.cols * b.cols, rows, a.field)


def product_arrangement(a1: Arrangement, a2: Arrangement) -> Arrangement:
    n1, n2 = a1.n, a2.n
    forms = [(tuple(c) + (0,) * n2, off) for c, off in a1.forms]
    forms += [((0,) * n1 + tuple(c), off) for c, off in a2.forms]
    mode = "affine" if a1.affine_mode or a2.affine_mode else "linear"
    return Arrangement(n1 + n2, tuple(forms), mode)


def external_product(q1: DoubleRep, q2: DoubleRep) -> DoubleRep:
    a = product_arrangement(q1.arrangement, q2.arrangement)
    p, p1, p2 = enumerate_faces(a), q1.poset, q2.poset
    k1 = q1.arrangement.size

    def split(i):
        s = p.faces[i].signs
        return p1.index[s[:k1]], p2.index[s[k1:]]

    dims = [q1.dims[x] * q2.dims[y] for x, y in map(split, range(len(p)))]
    gam, dl = {}, {}
    for lo, hi in p.covering_pairs:
        (x0, y0), (x1, y1) = split(lo), split(hi)
        gam[(lo, hi)] = kron(q1.gamma(x0, x1), q2.gamma(y0, y1))
        dl[(lo, hi)] = kron(q1.delta(x0, x1), q2.delta(y0, y1))
    return DoubleRep(p, dims, gam, dl, q1.field)


def extend_by_zero(q: DoubleRep, a: Arrangement, L) -> DoubleRep:
    """Put a quiver over the restriction to L back on a, with zero spaces off L."""
    res = restrict(a, L)
    if res.arrangement != q.arrangement:
        raise ValueError("quiver is not over the restriction")
    p = enumerate_faces(a)
    back = {v: k for k, v in res.face_map.items()}
    dims = [q.dims[back[i]] if i in back else 0 for i in range(len(p))]
    gam, dl = {}, {}
    for lo, hi in p.covering_pairs:
        if lo in back and hi in back:
            gam[(lo, hi)] = q.gamma(back[lo], back[hi])
            dl[(lo, hi)] = q.delta(back[lo], back[hi])
        else:
            gam[(lo, hi)] = Matrix.zeros(dims[hi], dims[lo])
            dl[(lo, hi)] = Matrix.zeros(dims[lo], dims[hi])
    return DoubleRep(p, dims, gam, dl, q.field)


def line_quiver(lam) -> DoubleRep:
    return to_quiver(to_B(local_system(lam)))


def sky_quiver() -> DoubleRep:
    return to_quiver(skyscraper())


def validated_samples() -> dict:
    """Named quivers expected to pass validate."""
    out = {}
    for name, a in (("line", line_point()), ("cross", coordinate_cross()), ("lines3", concurrent_lines(3))):
        p = enumerate_faces(a)
        out[f"const1-{name}"] = constant_quiver(p, 1)
    out["const2-lines3"] = constant_quiver(enumerate_faces(concurrent_lines(3)), 2)
    out["sky-line"] = sky_quiver()
    for lam in (2, -1, Fraction(1, 3)):
        out[f"local-{lam}"] = line_quiver(lam)
    out["local2xlocal-1/3-cross"] = external_product(line_quiver(2), line_quiver(Fraction(1, 3)))
    out["skyxlocal-cross"] = external_product(sky_quiver(), line_quiver(-1))
    out["constxsky-cross"] = external_product(constant_quiver(enumerate_faces(line_point())), sky_quiver())
    out["skyxsky-cross"] = external_product(sky_quiver(), sky_quiver())
    # a nontrivial sheaf on one line of three, pushed forward
    a3 = concurrent_lines(3)
    L = frozenset({0})
    res = restrict(a3, L)
    out["line0-local2-lines3"] = extend_by_zero(
        _transport(line_quiver(2), res.arrangement), a3, L)
    return out


def _transport(q: DoubleRep, target: Arrangement) -> DoubleRep:
    """Move a quiver to an arrangement with the same face signs (e.g. a rescaled line)."""
    p = enumerate_faces(target)
    if [f.signs for f in p.faces] != [f.signs for f in q.poset.faces]:
        raise ValueError("face posets differ")
    g, d = q.covering_data()
    return DoubleRep(p, q.dims, g, d, q.field)


# mutations: each breaks exactly one axiom

def mon_broken() -> DoubleRep:
    p = enumerate_faces(line_point())
    o, plus, minus = p.find("0"), p.find("+"), p.find("-")
    dims = {o: 2, plus: 1, minus: 1}
    gam = {(o, plus): M([[0, 1]]), (o, minus): M([[1, 0]])}
    dl = {(o, plus): M([[1], [0]]), (o, minus): M([[1], [1]])}
    return DoubleRep(p, dims, gam, dl)


def inv_broken() -> DoubleRep:
    p = enumerate_faces(line_point())
    o, plus, minus = p.find("0"), p.find("+"), p.find("-")
    dims = {o: 2, plus: 1, minus: 1}
    gam = {(o, plus): M([[1, 1]]), (o, minus): M([[0, 1]])}
    dl = {(o, plus): M([[0], [1]]), (o, minus): M([[-1], [1]])}
    return DoubleRep(p, dims, gam, dl)


def tran_broken(twist=True) -> DoubleRep:
    """Rank 2 on the origin and rays, rank 1 on chambers; every chamber
    splits E_ray as k + k with its own kernel line."""
    p = enumerate_faces(concurrent_lines(3))
    ch = p.chambers()
    dims = [2 if p.dim(i) < 2 else 1 for i in range(len(p))]
    ab = {c: (0, 0) for c in ch}
    if twist:
        ab[ch[0]] = (1, -1)
    gam, dl = {}, {}
    for lo, hi in p.covering_pairs:
        if p.dim(hi) < 2:
            gam[(lo, hi)] = dl[(lo, hi)] = Matrix.identity(2)
        else:
            x, y = ab[hi]
            gam[(lo, hi)] = M([[1 - x * y, y]])
            dl[(lo, hi)] = M([[1], [x]])
    return DoubleRep(p, dims, gam, dl)
