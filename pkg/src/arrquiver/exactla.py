"""Exact linear algebra over the rationals (and small prime fields).

Matrices are dense and immutable.  Every routine here is exact: there is
no tolerance anywhere, zero means zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


class LinAlgError(ValueError):
    pass


# ---------------------------------------------------------------------------
# scalar fields


class Mod:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise LinAlgError("mixing different prime fields")
            return other.v
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise LinAlgError(f"{other} is not defined mod {self.p}")
            return other.numerator * pow(other.denominator, -1, self.p)
        return int(other)

    def __add__(self, o):
        return Mod(self.v + self._lift(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return Mod(self.v - self._lift(o), self.p)

    def __rsub__(self, o):
        return Mod(self._lift(o) - self.v, self.p)

    def __mul__(self, o):
        return Mod(self.v * self._lift(o), self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._lift(o) % self.p
        if w == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Mod(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        return Mod(self._lift(o), self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __eq__(self, o):
        try:
            return (self.v - self._lift(o)) % self.p == 0
        except (LinAlgError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """Scalar field: ``q`` (the rationals) or ``fp:<p>``."""

    p: int = 0

    @property
    def name(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"

    def __call__(self, x):
        if self.p == 0:
            if isinstance(x, Mod):
                raise LinAlgError("prime field element used over q")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != self.p:
                raise LinAlgError("mixing different prime fields")
            return x
        x = Fraction(x)
        return Mod(0, self.p) + x

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @staticmethod
    def parse(text: str) -> "Field":
        if text == "q":
            return QQ
        if text.startswith("fp:"):
            p = int(text[3:])
            if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
                raise LinAlgError(f"{p} is not a prime")
            return Field(p)
        raise LinAlgError(f"unknown field {text!r}")


QQ = Field(0)


def field_of(x) -> Field:
    return Field(x.p) if isinstance(x, Mod) else QQ


def parse_rat(text: str) -> Fraction:
    """Parse ``-3``, ``1/2`` or ``0.25`` into a Fraction."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LinAlgError(f"not a rational number: {text!r}") from None


def fmt_scalar(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense immutable matrix over a Field."""

    __slots__ = ("rows", "cols", "entries", "field", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable] = (), field: Field = QQ):
        grid = tuple(tuple(field(x) for x in r) for r in entries)
        if rows == 0:
            grid = ()
        elif cols == 0 and not grid:
            grid = ((),) * rows
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise LinAlgError(f"entry grid does not have shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, k, v):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if cols is None:
            if not rows:
                raise LinAlgError("cannot infer column count of an empty row list")
            cols = len(rows[0])
        return cls(len(rows), cols, rows, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        z = field.zero
        return cls(rows, cols, [[z] * cols for _ in range(rows)], field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls(n, n, [[o if i == j else z for j in range(n)] for i in range(n)], field)

    @classmethod
    def scalar(cls, x, field: Field = QQ) -> "Matrix":
        return cls(1, 1, [[x]], field)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]], row_dims: Sequence[int], col_dims: Sequence[int],
              field: Field = QQ) -> "Matrix":
        """Assemble a block matrix; ``None`` blocks are zero."""
        out = [[field.zero] * sum(col_dims) for _ in range(sum(row_dims))]
        r0 = 0
        for bi, rd in enumerate(row_dims):
            c0 = 0
            for bj, cd in enumerate(col_dims):
                b = blocks[bi][bj]
                if b is not None:
                    if b.shape != (rd, cd):
                        raise LinAlgError(f"block ({bi},{bj}) has shape {b.shape}, expected {(rd, cd)}")
                    for i in range(rd):
                        out[r0 + i][c0:c0 + cd] = b.entries[i]
                c0 += cd
            r0 += rd
        return cls(sum(row_dims), sum(col_dims), out, field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise LinAlgError("matrices over different fields")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.shape, self.entries)))
        return self._hash

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [[-a for a in r] for r in self.entries], self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.rows, self.cols, [[c * a for a in r] for r in self.entries], self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise LinAlgError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.field.zero
        cols = [other.col(j) for j in range(other.cols)]
        out = []
        for r in self.entries:
            out.append([sum((a * b for a, b in zip(r, c) if a and b), z) for c in cols])
        return Matrix(self.rows, other.cols, out, self.field)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [self.col(j) for j in range(self.cols)], self.field)

    def is_zero(self) -> bool:
        return all(not a for r in self.entries for a in r)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows, self.field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [[self.entries[i][j] for j in cols] for i in rows], self.field)

    def rank(self) -> int:
        return rref(self)[1].__len__()

    def det(self):
        if self.rows != self.cols:
            raise LinAlgError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n = self.rows
        d = self.field.one
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return self.field.zero
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d = d * a[c][c]
            for i in range(c + 1, n):
                if a[i][c]:
                    f = a[i][c] / a[c][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return d

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LinAlgError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(n, 2 * n, [list(r) + list(e) for r, e in
                                zip(self.entries, Matrix.identity(n, self.field).entries)], self.field)
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise LinAlgError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def __repr__(self):
        return f"Matrix({self.rows}, {self.cols}, {[[str(x) for x in r] for r in self.entries]})"


def vec_dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = [list(r) for r in m.entries]
    piv: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
        if r == m.rows:
            break
    return Matrix(m.rows, m.cols, a, m.field), piv


def rank_kernel(m: Matrix) -> tuple[int, list[tuple]]:
    """Rank of m and a kernel basis in reduced echelon form."""
    red, piv = rref(m)
    free = [c for c in range(m.cols) if c not in piv]
    basis = []
    for f in free:
        v = [m.field.zero] * m.cols
        v[f] = m.field.one
        for i, p in enumerate(piv):
            v[p] = -red[i, f]
        basis.append(v)
    if basis:
        # the standard nullspace basis is not echelon in general; normalise it
        kb, kp = rref(Matrix(len(basis), m.cols, basis, m.field))
        basis = [kb.row(i) for i in range(len(kp))]
    return len(piv), [tuple(v) for v in basis]


def row_space(rows: Sequence[Sequence], ncols: int, field: Field = QQ) -> tuple[list[tuple], list[int]]:
    """Reduced echelon basis of the span of the given rows, with pivots."""
    if not rows:
        return [], []
    red, piv = rref(Matrix(len(rows), ncols, rows, field))
    return [red.row(i) for i in range(len(piv))], piv


def kernel(rows: Sequence[Sequence], ncols: int, field: Field = QQ) -> list[tuple]:
    if not rows:
        return [tuple(field.one if i == j else field.zero for j in range(ncols)) for i in range(ncols)]
    return rank_kernel(Matrix(len(rows), ncols, rows, field))[1]


def echelon_coords(basis: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> list:
    """Coordinates of v in a reduced echelon basis (v must lie in the span)."""
    coords = [v[p] for p in pivots]
    back = [sum((c * b[j] for c, b in zip(coords, basis)), 0) for j in range(len(v))]
    if any(x != y for x, y in zip(back, v)):
        raise LinAlgError("vector is not in the span of the basis")
    return coords


def image_basis(m: Matrix) -> Matrix:
    """Column basis of Im(m): the pivot columns of m, as an m.rows x r matrix."""
    _, piv = rref(m)
    return m.submatrix(range(m.rows), piv)


def kernel_matrix(m: Matrix) -> Matrix:
    """Kernel basis as columns of an m.cols x k matrix."""
    _, basis = rank_kernel(m)
    return Matrix(m.cols, len(basis), [[b[i] for b in basis] for i in range(m.cols)], m.field)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Some x with a @ x == b, or None."""
    n = a.cols
    aug = Matrix(a.rows, n + b.cols, [list(r) + list(s) for r, s in zip(a.entries, b.entries)], a.field)
    red, piv = rref(aug)
    if any(p >= n for p in piv):
        return None
    x = [[a.field.zero] * b.cols for _ in range(n)]
    for i, p in enumerate(piv):
        x[p] = list(red.row(i)[n:])
    return Matrix(n, b.cols, x, a.field)


# ---------------------------------------------------------------------------
# linear programs with strict inequalities


@dataclass(frozen=True)
class LinearSystem:
    """Affine forms ``(coeffs, const)`` meaning ``coeffs . x + const``.

    equalities are ``== 0``, weak are ``>= 0``, strict are ``> 0``.
    """

    nvars: int
    equalities: tuple = ()
    weak: tuple = ()
    strict: tuple = ()

    def __post_init__(self):
        for group in (self.equalities, self.weak, self.strict):
            for coeffs, _ in group:
                if len(coeffs) != self.nvars:
                    raise LinAlgError("affine form has the wrong arity")

    @staticmethod
    def build(nvars, equalities=(), weak=(), strict=()) -> "LinearSystem":
        def norm(g):
            return tuple((tuple(Fraction(c) for c in a), Fraction(b)) for a, b in g)
        return LinearSystem(nvars, norm(equalities), norm(weak), norm(strict))

    def holds(self, x: Sequence) -> bool:
        def val(f):
            return vec_dot(f[0], x) + f[1]
        return (all(val(f) == 0 for f in self.equalities) and all(val(f) >= 0 for f in self.weak)
                and all(val(f) > 0 for f in self.strict))


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.feasible


def _simplex(tab: list[list[Fraction]], basis: list[int], ncols: int, allowed: int) -> bool:
    """Maximise the objective row (last row, stored as reduced costs) in place.

    ``tab`` rows are constraints ``[... | rhs]`` plus the objective row
    holding ``-c`` so that a negative entry means an improving column.
    Bland's rule keeps it finite.  Returns False if unbounded.
    """
    m = len(tab) - 1
    obj = tab[m]
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][ncols] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        r = best[1]
        pr = tab[r]
        inv = 1 / pr[enter]
        pr[:] = [x * inv for x in pr]
        for i in range(m + 1):
            if i != r and tab[i][enter]:
                f = tab[i][enter]
                row = tab[i]
                row[:] = [x - f * y for x, y in zip(row, pr)]
        basis[r] = enter


def lp_feasible(sys: LinearSystem) -> LPResult:
    """Exact feasibility with witness.

    Strict inequalities share one slack ``t`` (capped at 1) that is
    maximised; the system is feasible iff the optimum is positive.
    """
    n = sys.nvars
    rows: list[tuple[list[Fraction], Fraction]] = []
    # column layout: x+ (n), x- (n), t, one surplus per inequality, cap slack
    n_ineq = len(sys.weak) + len(sys.strict)
    has_t = bool(sys.strict)
    t_col = 2 * n
    s0 = 2 * n + 1
    cap_col = s0 + n_ineq
    nstruct = cap_col + 1
    k = 0
    for a, b in sys.equalities:
        coeffs = list(a) + [-c for c in a] + [Fraction(0)] * (nstruct - 2 * n)
        rows.append((coeffs, -b))
    for a, b in sys.weak:
        coeffs = list(a) + [-c for c in a] + [Fraction(0)] * (nstruct - 2 * n)
        coeffs[s0 + k] = Fraction(-1)
        rows.append((coeffs, -b))
        k += 1
    for a, b in sys.strict:
        coeffs = list(a) + [-c for c in a] + [Fraction(0)] * (nstruct - 2 * n)
        coeffs[t_col] = Fraction(-1)
        coeffs[s0 + k] = Fraction(-1)
        rows.append((coeffs, -b))
        k += 1
    cap = [Fraction(0)] * nstruct
    cap[t_col] = Fraction(1)
    cap[cap_col] = Fraction(1)
    rows.append((cap, Fraction(1)))

    m = len(rows)
    width = nstruct + m  # artificials
    tab = []
    basis = []
    for i, (coeffs, rhs) in enumerate(rows):
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tab.append(coeffs + art + [rhs])
        basis.append(nstruct + i)
    # phase 1: maximise -(sum of artificials)
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(nstruct):
            obj[j] -= tab[i][j]
        obj[width] -= tab[i][width]
    tab.append(obj)
    _simplex(tab, basis, width, nstruct)
    if tab[m][width] != 0:
        return LPResult(False)
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nstruct:
            j = next((j for j in range(nstruct) if tab[i][j] != 0), None)
            if j is not None:
                pr = tab[i]
                inv = 1 / pr[j]
                pr[:] = [x * inv for x in pr]
                for r in range(m + 1):
                    if r != i and tab[r][j]:
                        f = tab[r][j]
                        tab[r][:] = [x - f * y for x, y in zip(tab[r], pr)]
                basis[i] = j
    # phase 2: maximise t
    obj = [Fraction(0)] * (width + 1)
    if has_t:
        obj[t_col] = Fraction(-1)
        for i in range(m):
            if basis[i] == t_col:
                obj = [o + x for o, x in zip(obj, tab[i])]
    tab[m] = obj
    _simplex(tab, basis, width, nstruct)
    val = [Fraction(0)] * nstruct
    for i in range(m):
        if basis[i] < nstruct:
            val[basis[i]] = tab[i][width]
    if has_t and val[t_col] <= 0:
        return LPResult(False)
    x = tuple(val[j] - val[n + j] for j in range(n))
    if not sys.holds(x):
        raise LinAlgError("internal error: LP witness does not verify")
    return LPResult(True, x)


# ---------------------------------------------------------------------------
# chain complexes


@dataclass(frozen=True)
class ChainComplex:
    """Cochain complex in degrees 0..len(terms)-1; d[k]: terms[k] -> terms[k+1]."""

    terms: tuple
    differentials: tuple
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "differentials", tuple(self.differentials))
        if len(self.differentials) != max(len(self.terms) - 1, 0):
            raise LinAlgError("need one differential between consecutive terms")
        for k, d in enumerate(self.differentials):
            if d.shape != (self.terms[k + 1], self.terms[k]):
                raise LinAlgError(f"differential {k} has shape {d.shape}, expected "
                                  f"{(self.terms[k + 1], self.terms[k])}")
        for k in range(len(self.differentials) - 1):
            if not (self.differentials[k + 1] @ self.differentials[k]).is_zero():
                raise LinAlgError(f"d^2 != 0 at degree {k}")

    @property
    def length(self) -> int:
        return len(self.terms)

    def d(self, k: int) -> Matrix:
        """Differential out of degree k, zero outside the stored range."""
        src = self.terms[k] if 0 <= k < len(self.terms) else 0
        dst = self.terms[k + 1] if 0 <= k + 1 < len(self.terms) else 0
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        return Matrix.zeros(dst, src, self.field)

    def euler(self) -> int:
        return sum((-1) ** k * t for k, t in enumerate(self.terms))


def cohomology(c: ChainComplex) -> tuple[int, ...]:
    """dim H^k for every degree k."""
    ranks = [d.rank() for d in c.differentials]
    out = []
    for k, t in enumerate(c.terms):
        out_rank = ranks[k] if k < len(ranks) else 0
        in_rank = ranks[k - 1] if k >= 1 else 0
        out.append(t - out_rank - in_rank)
    return tuple(out)


@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        s, t = self.source, self.target
        if len(self.components) != max(s.length, t.length):
            raise LinAlgError("one component per degree required")
        for k, f in enumerate(self.components):
            ts = s.terms[k] if k < s.length else 0
            tt = t.terms[k] if k < t.length else 0
            if f.shape != (tt, ts):
                raise LinAlgError(f"component {k} has shape {f.shape}, expected {(tt, ts)}")
        for k in range(len(self.components) - 1):
            lhs = self.components[k + 1] @ s.d(k)
            rhs = t.d(k) @ self.components[k]
            if lhs != rhs:
                raise LinAlgError(f"not a chain map: square at degree {k} does not commute")

    def compose(self, first: "ChainMap") -> "ChainMap":
        """self after first."""
        return ChainMap(first.source, self.target,
                        [g @ f for g, f in zip(self.components, first.components)])

    @staticmethod
    def identity(c: ChainComplex) -> "ChainMap":
        return ChainMap(c, c, [Matrix.identity(t, c.field) for t in c.terms])


def mapping_cone(f: ChainMap) -> ChainComplex:
    """Cone(f)^k = A^{k+1} + B^k, stored from degree -1 (index 0)."""
    a, b = f.source, f.target
    fld = a.field
    n = len(f.components)

    def ta(k):
        return a.terms[k] if 0 <= k < a.length else 0

    def tb(k):
        return b.terms[k] if 0 <= k < b.length else 0

    degs = list(range(-1, n))
    terms = [ta(k + 1) + tb(k) for k in degs]
    diffs = []
    for k in degs[:-1]:
        fk1 = f.components[k + 1] if 0 <= k + 1 < n else Matrix.zeros(tb(k + 1), ta(k + 1), fld)
        blocks = [[-a.d(k + 1), None], [fk1, b.d(k)]]
        diffs.append(Matrix.block(blocks, [ta(k + 2), tb(k + 1)], [ta(k + 1), tb(k)], fld))
    return ChainComplex(terms, diffs, fld)


def quasi_iso(f: ChainMap) -> bool:
    return all(h == 0 for h in cohomology(mapping_cone(f)))
