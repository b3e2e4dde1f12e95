"""Exact linear algebra over arbitrary-precision rationals.

Every scalar is a ``fractions.Fraction``, so each result is exact and every
decision procedure here (rank, solvability, definiteness, contraction,
feasibility) is free of rounding. Matrices are small and dense; the
algorithms favour determinism and simplicity over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce an int, string or Fraction to a canonical Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(frac(x) for x in entries)


def zero_vector(dim: int) -> Vector:
    return (Fraction(0),) * dim


def unit_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dot of vectors with lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in v)


def linear_combination(vectors_: Sequence[Sequence[Fraction]],
                       coeffs: Sequence[Fraction], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for c, v in zip(coeffs, vectors_):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


class Matrix:
    """Immutable dense rational matrix with an explicit shape.

    The shape is fixed at construction; zero-row and zero-column matrices
    are legal (``ncols`` must then be given explicitly for empty row lists).
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vector(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("rows have inconsistent lengths")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} does not match row width {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], nrows: int) -> "Matrix":
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)], self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.rows[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by "
                             f"{other.nrows}x{other.ncols}")
        return Matrix(
            [[dot(r, other.column(j)) for j in range(other.ncols)] for r in self.rows],
            other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix([add_vectors(r, s) for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "Matrix":
        c = frac(scalar)
        return Matrix([scale_vector(c, r) for r in self.rows], self.ncols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix([{body}], ncols={self.ncols})"

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def max_abs_entry(self) -> Fraction:
        return max((abs(x) for r in self.rows for x in r), default=Fraction(0))


def vec_mat(v: Sequence[Fraction], m: Matrix) -> Vector:
    """Row vector times matrix."""
    if len(v) != m.nrows:
        raise ValueError(f"vector length {len(v)} does not match {m.nrows} rows")
    out = [Fraction(0)] * m.ncols
    for vi, row in zip(v, m.rows):
        if vi:
            for j, x in enumerate(row):
                out[j] += vi * x
    return tuple(out)


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    """Matrix times column vector."""
    if len(v) != m.ncols:
        raise ValueError(f"vector length {len(v)} does not match {m.ncols} columns")
    return tuple(dot(r, v) for r in m.rows)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and the pivot column indices.

    Row space is preserved; pivots are leading ones and pivot columns are
    cleared above and below.
    """
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(rows, m.ncols), tuple(pivots)


@dataclass(frozen=True)
class AffineSolution:
    """Full solution set of a consistent linear system: particular + span(nullspace)."""
    particular: Vector
    nullspace: tuple[Vector, ...]


def solve_affine(a: Matrix, b: Sequence[Fraction]) -> AffineSolution | None:
    """Solve A x = b exactly, returning the affine solution set or None."""
    b = vector(b)
    if len(b) != a.nrows:
        raise ValueError("right-hand side length does not match row count")
    aug = Matrix([list(r) + [bi] for r, bi in zip(a.rows, b)], a.ncols + 1)
    red, pivots = rref(aug)
    if a.ncols in pivots:
        return None
    pivot_set = set(pivots)
    free = [c for c in range(a.ncols) if c not in pivot_set]
    particular = [Fraction(0)] * a.ncols
    for i, p in enumerate(pivots):
        particular[p] = red[i, a.ncols]
    nullspace = []
    for f in free:
        v = [Fraction(0)] * a.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        nullspace.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(nullspace))


def membership_in_span(v: Sequence[Fraction],
                       basis: Sequence[Sequence[Fraction]]) -> Vector | None:
    """Coefficients c with sum(c_i * basis_i) = v, or None if v is outside the span."""
    v = vector(v)
    basis = [vector(bv) for bv in basis]
    if any(len(bv) != len(v) for bv in basis):
        raise ValueError("basis vectors must share the target dimension")
    a = Matrix.from_columns(basis, len(v))
    sol = solve_affine(a, v)
    return None if sol is None else sol.particular


def determinant(m: Matrix) -> Fraction:
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    n = m.nrows
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def invert(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    aug = Matrix([list(m.rows[i]) + [1 if i == j else 0 for j in range(n)]
                  for i in range(n)], 2 * n)
    red, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([r[n:] for r in red.rows], n)


def is_positive_definite(p: Matrix) -> bool:
    """Sylvester criterion: all leading principal minors strictly positive.

    Rejects non-symmetric input.
    """
    if not p.is_square():
        raise ValueError("positive definiteness of a non-square matrix")
    if not p.is_symmetric():
        raise ValueError("matrix is not symmetric")
    for k in range(1, p.nrows + 1):
        minor = Matrix([r[:k] for r in p.rows[:k]], k)
        if determinant(minor) <= 0:
            return False
    return True


def spectral_radius_lt_one(m: Matrix) -> bool:
    """Decide exactly whether the powers of a square matrix converge to zero.

    Solves the discrete Lyapunov system M^T P M - P = -I for a symmetric P,
    parameterised by the upper triangle. Powers of M vanish iff the system
    has a unique solution and that solution is positive definite.
    """
    if not m.is_square():
        raise ValueError("spectral test of a non-square matrix")
    n = m.nrows
    if n == 0:
        return True
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    rows = []
    rhs = []
    for r, s in pairs:
        coeffs = [Fraction(0)] * len(pairs)
        for i in range(n):
            mi = m[i, r]
            if not mi:
                continue
            for j in range(n):
                c = mi * m[j, s]
                if c:
                    coeffs[index[(min(i, j), max(i, j))]] += c
        coeffs[index[(r, s)]] -= 1
        rows.append(coeffs)
        rhs.append(Fraction(-1 if r == s else 0))
    sol = solve_affine(Matrix(rows, len(pairs)), rhs)
    if sol is None or sol.nullspace:
        return False
    p = Matrix([[sol.particular[index[(min(i, j), max(i, j))]] for j in range(n)]
                for i in range(n)], n)
    return is_positive_definite(p)


@dataclass(frozen=True)
class Constraint:
    """Affine constraint ``constant + coeffs . x  (>= 0 | = 0)``."""
    coeffs: Vector
    constant: Fraction
    equality: bool = False

    @classmethod
    def ge(cls, coeffs: Iterable, constant) -> "Constraint":
        return cls(vector(coeffs), frac(constant), False)

    @classmethod
    def eq(cls, coeffs: Iterable, constant) -> "Constraint":
        return cls(vector(coeffs), frac(constant), True)


def _normalize_row(co: Vector, c: Fraction) -> tuple[Vector, Fraction]:
    for v in co:
        if v:
            s = abs(v)
            return tuple(x / s for x in co), c / s
    return co, c


def _dedupe(rows: Iterable[tuple[Vector, Fraction]]) -> list[tuple[Vector, Fraction]] | None:
    """Normalise and deduplicate inequality rows; None signals infeasibility."""
    seen: set[tuple[Vector, Fraction]] = set()
    out = []
    for co, c in rows:
        co, c = _normalize_row(co, c)
        if not any(co):
            if c < 0:
                return None
            continue
        if (co, c) not in seen:
            seen.add((co, c))
            out.append((co, c))
    return out


def _fourier_motzkin(rows: list[tuple[Vector, Fraction]], k: int) -> Vector | None:
    """Feasible point of ``c + co . y >= 0`` rows via variable elimination."""
    system = _dedupe(rows)
    if system is None:
        return None
    eliminated: list[tuple[int, list, list]] = []
    for j in reversed(range(k)):
        pos = [rc for rc in system if rc[0][j] > 0]
        neg = [rc for rc in system if rc[0][j] < 0]
        rest = [rc for rc in system if rc[0][j] == 0]
        new_rows = list(rest)
        for cop, cp in pos:
            for con, cn in neg:
                fp = -con[j]
                fn = cop[j]
                co2 = tuple(fp * a + fn * b for a, b in zip(cop, con))
                c2 = fp * cp + fn * cn
                new_rows.append((co2, c2))
        system = _dedupe(new_rows)
        if system is None:
            return None
        eliminated.append((j, pos, neg))
    for _, c in system:
        if c < 0:
            return None
    assign = [Fraction(0)] * k
    for j, pos, neg in reversed(eliminated):
        lo = None
        hi = None
        for co, c in pos:
            val = -(c + sum(co[l] * assign[l] for l in range(j))) / co[j]
            lo = val if lo is None else max(lo, val)
        for co, c in neg:
            val = -(c + sum(co[l] * assign[l] for l in range(j))) / co[j]
            hi = val if hi is None else min(hi, val)
        if lo is not None and hi is not None and lo > hi:
            raise AssertionError("elimination produced an empty interval")
        if lo is not None:
            assign[j] = lo
        elif hi is not None:
            assign[j] = hi
    return tuple(assign)


def lp_feasible(constraints: Sequence[Constraint], n_vars: int | None = None) -> Vector | None:
    """Exact feasible point of a system of affine equalities and >= constraints.

    Equalities are removed first by exact substitution; the remaining
    inequalities go through Fourier-Motzkin elimination. Returns None iff
    the system is infeasible.
    """
    constraints = list(constraints)
    if n_vars is None:
        if not constraints:
            raise ValueError("n_vars is required when no constraints are given")
        n_vars = len(constraints[0].coeffs)
    if any(len(c.coeffs) != n_vars for c in constraints):
        raise ValueError("constraints must share one variable count")
    eqs = [c for c in constraints if c.equality]
    ineqs = [c for c in constraints if not c.equality]
    if eqs:
        sol = solve_affine(Matrix([c.coeffs for c in eqs], n_vars),
                           [-c.constant for c in eqs])
        if sol is None:
            return None
        part, null = sol.particular, list(sol.nullspace)
    else:
        part, null = zero_vector(n_vars), [unit_vector(n_vars, i) for i in range(n_vars)]
    k = len(null)
    rows = []
    for c in ineqs:
        const = c.constant + dot(c.coeffs, part)
        co = tuple(dot(c.coeffs, null[l]) for l in range(k))
        rows.append((co, const))
    y = _fourier_motzkin(rows, k)
    if y is None:
        return None
    return add_vectors(part, linear_combination(null, y, n_vars))


class SpanBasis:
    """Row space with incremental insertion, kept in reduced echelon form."""

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: list[tuple[int, list[Fraction]]] = []

    def _reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = list(v)
        for pivot, row in self._rows:
            c = v[pivot]
            if c:
                for i in range(pivot, self.dim):
                    v[i] -= c * row[i]
        return v

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self._reduce(v))

    def add(self, v: Sequence[Fraction]) -> bool:
        """Insert v; True iff it enlarged the span."""
        r = self._reduce(v)
        pivot = next((i for i, x in enumerate(r) if x), None)
        if pivot is None:
            return False
        inv = 1 / r[pivot]
        r = [x * inv for x in r]
        for _, row in self._rows:
            c = row[pivot]
            if c:
                for i in range(pivot, self.dim):
                    row[i] -= c * r[i]
        self._rows.append((pivot, r))
        self._rows.sort(key=lambda pr: pr[0])
        return True

    @property
    def dimension(self) -> int:
        return len(self._rows)
