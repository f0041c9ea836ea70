"""Exact scalars (rationals and prime fields) and dense exact linear algebra.

Everything downstream computes with these: no floating point anywhere.
Rationals come from gmpy2.mpq when available (about an order of magnitude
faster than fractions.Fraction), with a stdlib fallback.
"""

from __future__ import annotations

from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _ratimpl

    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _ratimpl

    RATIONAL_BACKEND = "fractions"


class ScalarKindError(TypeError):
    """Scalars of different kinds (rational vs F_p, or different p) were mixed."""


class DimensionError(ValueError):
    """Matrix/vector dimensions are incompatible."""


def rat(p=0, q=1):
    """Exact rational p/q. Accepts ints, rational strings like '-3/4', rationals."""
    return _ratimpl(p) if q == 1 else _ratimpl(p) / _ratimpl(q)


QQ_ZERO = rat(0)
QQ_ONE = rat(1)


def rat_str(x) -> str:
    """Canonical 'p' or 'p/q' string for a rational."""
    return str(x)


def is_rational(x) -> bool:
    return isinstance(x, type(QQ_ZERO))


class Fp:
    """Element of the prime field F_p; residue stored reduced in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ScalarKindError(f"mixed prime fields F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        raise ScalarKindError(f"cannot mix F_{self.p} with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


def scalar_kind(x) -> tuple:
    """('Q',) for rationals, ('F', p) for prime-field elements."""
    if isinstance(x, Fp):
        return ("F", x.p)
    if is_rational(x) or isinstance(x, int):
        return ("Q",)
    raise ScalarKindError(f"unsupported scalar {type(x).__name__}")


def _zero_like(x):
    return Fp(0, x.p) if isinstance(x, Fp) else QQ_ZERO


def _one_like(x):
    return Fp(1, x.p) if isinstance(x, Fp) else QQ_ONE


class Matrix:
    """Immutable dense matrix of exact scalars, all of one kind."""

    __slots__ = ("rows", "ncols", "nrows")

    def __init__(self, rows: Iterable[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    # -- constructors -------------------------------------------------
    @staticmethod
    def identity(n: int, one=QQ_ONE):
        z = _zero_like(one)
        return Matrix([[one if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int, zero=QQ_ZERO):
        return Matrix([[zero] * ncols for _ in range(nrows)])

    @staticmethod
    def from_ints(rows, p: int | None = None):
        """Build from an int table, as rationals or as F_p elements."""
        if p is None:
            return Matrix([[rat(x) for x in r] for r in rows])
        return Matrix([[Fp(x, p) for x in r] for r in rows])

    # -- basics -------------------------------------------------------
    def kind(self) -> tuple:
        for r in self.rows:
            for x in r:
                return scalar_kind(x)
        return ("Q",)

    def _check_same_kind(self, other: "Matrix"):
        if self.nrows and other.nrows and self.kind() != other.kind():
            raise ScalarKindError(f"mixed scalar kinds {self.kind()} and {other.kind()}")

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.rows]})"

    def __add__(self, other: "Matrix"):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in addition")
        self._check_same_kind(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix"):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionError("shape mismatch in subtraction")
        self._check_same_kind(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, c):
        return Matrix([[c * x for x in r] for r in self.rows])

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def transpose(self):
        return Matrix(list(zip(*self.rows))) if self.nrows else Matrix([])

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise DimensionError("vector length mismatch")
        out = []
        for r in self.rows:
            acc = _zero_like(r[0]) if r else QQ_ZERO
            for x, v in zip(r, vec):
                if x and v:
                    acc = acc + x * v
            out.append(acc)
        return tuple(out)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    if a.ncols != b.nrows:
        raise DimensionError(f"inner dimensions {a.ncols} and {b.nrows} disagree")
    a._check_same_kind(b)
    bt = b.transpose().rows
    out = []
    for ra in a.rows:
        row = []
        for cb in bt:
            acc = None
            for x, y in zip(ra, cb):
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            if acc is None:
                acc = _zero_like(ra[0]) if ra else QQ_ZERO
            row.append(acc)
        out.append(row)
    return Matrix(out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_mul(a, b) - mat_mul(b, a)


def _rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    _, pivots = _rref([list(r) for r in m.rows])
    return len(pivots)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Exact basis of the right null space; empty iff full column rank."""
    ncols = m.ncols
    if m.nrows == 0:
        one = QQ_ONE
        return [tuple(one if i == j else QQ_ZERO for j in range(ncols)) for i in range(ncols)]
    one = _one_like(m.rows[0][0])
    zero = _zero_like(m.rows[0][0])
    rows, pivots = _rref([list(r) for r in m.rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def solve_exact(a: Matrix, b: Sequence):
    """One exact solution x of a x = b, or None when inconsistent."""
    if len(b) != a.nrows:
        raise DimensionError("right-hand side length mismatch")
    if a.nrows == 0:
        return tuple()
    zero = _zero_like(a.rows[0][0]) if a.ncols else _zero_like(b[0]) if b else QQ_ZERO
    aug = [list(r) + [bv] for r, bv in zip(a.rows, b)]
    rows, pivots = _rref(aug)
    if a.ncols in pivots:
        return None
    x = [zero] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][-1]
    return tuple(x)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, row-major on (i_a, i_b) pairs."""
    out = []
    for ra in a.rows:
        for rb in b.rows:
            out.append([x * y for x in ra for y in rb])
    return Matrix(out)


def vec_zero(n: int) -> tuple:
    return (QQ_ZERO,) * n


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(u: Sequence, c) -> tuple:
    return tuple(c * x for x in u)


def vec_is_zero(u: Sequence) -> bool:
    return not any(u)


class SpanBuilder:
    """Incremental exact row space: add vectors, test membership, extract a basis.

    Keeps rows in reduced echelon form, remembering which added vectors were
    retained so callers can recover a basis of the original vectors.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.echelon: list[list] = []
        self.pivot_cols: list[int] = []
        self.kept: list[tuple] = []

    def _reduce(self, vec: Sequence) -> list:
        v = list(vec)
        for row, pc in zip(self.echelon, self.pivot_cols):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Add vec to the span; True if it enlarged the span."""
        v = self._reduce(vec)
        pc = next((c for c in range(self.ncols) if v[c]), None)
        if pc is None:
            return False
        inv = v[pc]
        v = [x / inv for x in v]
        for row in self.echelon:
            if row[pc]:
                f = row[pc]
                row[:] = [x - f * y for x, y in zip(row, v)]
        self.echelon.append(v)
        self.pivot_cols.append(pc)
        self.kept.append(tuple(vec))
        return True

    @property
    def dim(self) -> int:
        return len(self.echelon)
