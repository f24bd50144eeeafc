"""The one-dimensional dictionary.

Three equivalent descriptions of the data of a perverse sheaf on the line
with a singularity at the origin:

* ``PObject``: spaces Phi, Psi with u: Psi -> Phi and v: Phi -> Psi,
  vu + 1 invertible;
* ``BObject``: one space E0 with two idempotents P+ and P- that restrict
  to mutually inverse-up-to-iso maps between their images;
* a double representation over the arrangement {0} in the line.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arrangement import enumerate_faces, line_point
from .exactla import QQ, Field, LinAlgError, Matrix, image_basis, kernel_matrix, rank_kernel, solve
from .quiver import DoubleRep


class DictionaryError(ValueError):
    pass


def _check_shape(m: Matrix, shape, name):
    if m.shape != shape:
        raise DictionaryError(f"{name} has shape {m.shape}, expected {shape}")


@dataclass(frozen=True)
class PObject:
    phi: int
    psi: int
    u: Matrix  # psi -> phi, shape (phi, psi)
    v: Matrix  # phi -> psi, shape (psi, phi)

    def __post_init__(self):
        _check_shape(self.u, (self.phi, self.psi), "u")
        _check_shape(self.v, (self.psi, self.phi), "v")
        if not (self.v @ self.u + Matrix.identity(self.psi, self.field)).is_invertible():
            raise DictionaryError("vu + 1 is not invertible")

    @property
    def field(self) -> Field:
        return self.u.field

    @staticmethod
    def make(u, v, phi: int | None = None, psi: int | None = None, field: Field = QQ) -> "PObject":
        u = u if isinstance(u, Matrix) else Matrix(phi, psi, u, field)
        v = v if isinstance(v, Matrix) else Matrix(psi, phi, v, field)
        return PObject(u.rows, u.cols, u, v)


@dataclass(frozen=True)
class BObject:
    e0: int
    pplus: Matrix
    pminus: Matrix

    def __post_init__(self):
        for m, name in ((self.pplus, "P+"), (self.pminus, "P-")):
            _check_shape(m, (self.e0, self.e0), name)
            if m @ m != m:
                raise DictionaryError(f"{name} is not idempotent")
        ip, im = image_basis(self.pplus), image_basis(self.pminus)
        if ip.cols != im.cols:
            raise DictionaryError("images of P+ and P- have different dimensions")
        # P- on Im P+ and P+ on Im P- must be injective (hence isomorphisms)
        if (self.pminus @ ip).rank() != ip.cols or (self.pplus @ im).rank() != im.cols:
            raise DictionaryError("P+ and P- do not identify their images")

    @property
    def field(self) -> Field:
        return self.pplus.field


def to_B(p: PObject) -> BObject:
    f = p.field
    z = lambda r, c: Matrix.zeros(r, c, f)  # noqa: E731
    one = Matrix.identity(p.psi, f)
    dims = [p.phi, p.psi]
    plus = Matrix.block([[z(p.phi, p.phi), None], [p.v, one]], dims, dims, f)
    minus = Matrix.block([[z(p.phi, p.phi), p.u], [None, one]], dims, dims, f)
    return BObject(p.phi + p.psi, plus, minus)


def _coords(basis: Matrix, m: Matrix) -> Matrix:
    x = solve(basis, m)
    if x is None:
        raise DictionaryError("map does not land in the expected subspace")
    return x


def to_P(b: BObject, convention: str = "+") -> PObject:
    """Phi = Ker P-, Psi = Im P+, v = P+, u = P- - 1 (or the same with + and - swapped)."""
    if convention not in ("+", "-"):
        raise DictionaryError("convention is '+' or '-'")
    first, second = (b.pplus, b.pminus) if convention == "+" else (b.pminus, b.pplus)
    one = Matrix.identity(b.e0, b.field)
    K = kernel_matrix(second)
    I = image_basis(first)
    v = _coords(I, first @ K)
    u = _coords(K, (second - one) @ I)
    return PObject(K.cols, I.cols, u, v)


def half_monodromy(b: BObject, convention: str = "+") -> tuple[Matrix, Matrix]:
    """The pair (P+ - 1, P-) from the '+' description to the '-' one (or back).

    Returned as matrices (on Phi, on Psi) in the bases used by ``to_P``.
    """
    src, dst = to_P_bases(b, convention), to_P_bases(b, "-" if convention == "+" else "+")
    first, second = (b.pplus, b.pminus) if convention == "+" else (b.pminus, b.pplus)
    one = Matrix.identity(b.e0, b.field)
    a = _coords(dst[0], (first - one) @ src[0])
    c = _coords(dst[1], second @ src[1])
    return a, c


def to_P_bases(b: BObject, convention: str = "+") -> tuple[Matrix, Matrix]:
    first, second = (b.pplus, b.pminus) if convention == "+" else (b.pminus, b.pplus)
    return kernel_matrix(second), image_basis(first)


def fourier(b: BObject) -> BObject:
    one = Matrix.identity(b.e0, b.field)
    return BObject(b.e0, one - b.pplus, one - b.pminus)


def to_quiver(b: BObject) -> DoubleRep:
    """E0 at the origin, Im P+ and Im P- on the half lines."""
    poset = enumerate_faces(line_point())
    origin, plus, minus = poset.find("0"), poset.find("+"), poset.find("-")
    dims = [0] * 3
    gam, dl = {}, {}
    dims[origin] = b.e0
    for face, proj in ((plus, b.pplus), (minus, b.pminus)):
        I = image_basis(proj)
        dims[face] = I.cols
        dl[(origin, face)] = I
        gam[(origin, face)] = _coords(I, proj)
    return DoubleRep(poset, dims, gam, dl, b.field)


# ---------------------------------------------------------------------------
# isomorphisms


def _generic_invertible(basis: list[Matrix], size: int, field: Field, tries: int = 40) -> Matrix | None:
    """An invertible element of the span of ``basis`` (size x size), if one exists."""
    if not basis:
        return Matrix.identity(0, field) if size == 0 else None
    rng = random.Random(1)
    for t in range(tries):
        coeffs = [1 if t == 0 and i == 0 else rng.randint(-5, 5) for i in range(len(basis))]
        m = Matrix.zeros(size, size, field)
        for c, x in zip(coeffs, basis):
            if c:
                m = m + x.scale(c)
        if m.is_invertible():
            return m
    return None


def _solve_intertwiner(shapes, equations, field: Field):
    """Solve linear equations in unknown matrices; return a basis of solutions.

    ``shapes`` lists (rows, cols) per unknown; ``equations`` are callables
    mapping a tuple of unknown matrices to a matrix that must vanish.
    """
    sizes = [r * c for r, c in shapes]
    total = sum(sizes)

    def unpack(vec):
        out, k = [], 0
        for (r, c), s in zip(shapes, sizes):
            out.append(Matrix(r, c, [vec[k + i * c:k + (i + 1) * c] for i in range(r)], field))
            k += s
        return out

    # the equations are linear: build their matrix column by column
    cols = []
    for j in range(total):
        e = [field.zero] * total
        e[j] = field.one
        xs = unpack(e)
        col = []
        for eq in equations:
            m = eq(xs)
            col.extend(x for row in m.entries for x in row)
        cols.append(col)
    nrows = len(cols[0]) if cols else 0
    if total == 0:
        return [unpack([])]
    if nrows == 0:
        basis = [[field.one if i == j else field.zero for i in range(total)] for j in range(total)]
    else:
        A = Matrix(nrows, total, [[cols[j][i] for j in range(total)] for i in range(nrows)], field)
        basis = rank_kernel(A)[1]
    return [unpack(v) for v in basis]


def p_isomorphism(p: PObject, p2: PObject) -> tuple[Matrix, Matrix] | None:
    """Invertible (a on Phi, b on Psi) with b v = v2 a and a u = u2 b, or None."""
    if (p.phi, p.psi) != (p2.phi, p2.psi):
        return None
    f = p.field
    shapes = [(p.phi, p.phi), (p.psi, p.psi)]
    eqs = [lambda x: x[1] @ p.v - p2.v @ x[0], lambda x: x[0] @ p.u - p2.u @ x[1]]
    sols = _solve_intertwiner(shapes, eqs, f)
    # a generic solution is invertible on both factors iff one exists
    big = []
    for a, b in sols:
        big.append(Matrix.block([[a, None], [None, b]], [p.phi, p.psi], [p.phi, p.psi], f))
    m = _generic_invertible(big, p.phi + p.psi, f)
    if m is None:
        return None
    a = m.submatrix(range(p.phi), range(p.phi))
    b = m.submatrix(range(p.phi, p.phi + p.psi), range(p.phi, p.phi + p.psi))
    return a, b


def is_p_morphism(p: PObject, p2: PObject, a: Matrix, b: Matrix) -> bool:
    return b @ p.v == p2.v @ a and a @ p.u == p2.u @ b


def b_isomorphism(b: BObject, b2: BObject) -> Matrix | None:
    """Invertible T with T P+ = P+' T and T P- = P-' T, or None."""
    if b.e0 != b2.e0:
        return None
    f = b.field
    eqs = [lambda x: x[0] @ b.pplus - b2.pplus @ x[0], lambda x: x[0] @ b.pminus - b2.pminus @ x[0]]
    sols = [s[0] for s in _solve_intertwiner([(b.e0, b.e0)], eqs, f)]
    return _generic_invertible(sols, b.e0, f)


def is_b_morphism(b: BObject, b2: BObject, t: Matrix) -> bool:
    return t @ b.pplus == b2.pplus @ t and t @ b.pminus == b2.pminus @ t


# sample objects

def skyscraper(field: Field = QQ) -> BObject:
    """(k, 0, 0)."""
    return BObject(1, Matrix.zeros(1, 1, field), Matrix.zeros(1, 1, field))


def constant(field: Field = QQ) -> BObject:
    """(k, 1, 1)."""
    return BObject(1, Matrix.identity(1, field), Matrix.identity(1, field))


def local_system(lam, field: Field = QQ) -> PObject:
    """Phi = Psi = k, v = 1, u = lam - 1; the monodromy is lam."""
    return PObject(1, 1, Matrix(1, 1, [[field(lam) - 1]], field), Matrix.identity(1, field))
