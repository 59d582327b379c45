"""Matrices and Smith normal form over the Euclidean domains in `rings`.

Matrices are immutable tuples of row tuples; every algorithm takes the ring
descriptor explicitly so the same code serves Z, F3, Q[t^±1] and Z[w].

The Smith pass is the classic elimination: pick the smallest-size nonzero
entry as pivot (ties broken by row-then-column position, so output is
deterministic), clear its column and row by Euclidean division, patch any
divisibility failure in the remaining block by a row addition, and normalize
each finished pivot to its canonical associate.  Transforms U and V are
accumulated from elementary operations only, so their determinants are units.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence


class SmithCancelled(Exception):
    """Raised when a cooperative cancellation callback asks to stop."""


class Mat:
    """An immutable nrows x ncols matrix; ncols survives even with no rows."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[object]], ncols: Optional[int] = None):
        rs = tuple(tuple(r) for r in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("ragged matrix rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"ncols={ncols} disagrees with row width {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "nrows", len(rs))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Mat is immutable")

    @classmethod
    def zeros(cls, ring, nrows: int, ncols: int) -> "Mat":
        return cls([[ring.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n: int) -> "Mat":
        return cls(
            [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n
        )

    @classmethod
    def from_int_rows(cls, ring, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "Mat":
        return cls([[ring.from_int(x) for x in row] for row in rows], ncols)

    @classmethod
    def column(cls, entries: Sequence[object]) -> "Mat":
        return cls([[x] for x in entries], 1)

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> "Mat":
        return Mat([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)], self.nrows)

    def map_entries(self, fn: Callable[[object], object]) -> "Mat":
        return Mat([[fn(x) for x in row] for row in self.rows], self.ncols)

    def take_rows(self, count: int) -> "Mat":
        return Mat(self.rows[:count], self.ncols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mat) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"Mat({[list(r) for r in self.rows]!r}, ncols={self.ncols})"


def hstack(*mats: Mat) -> Mat:
    mats = tuple(m for m in mats)
    if not mats:
        raise ValueError("hstack of nothing")
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise ValueError("hstack: row counts differ")
    ncols = sum(m.ncols for m in mats)
    if n == 0:
        return Mat([], ncols)
    return Mat([sum((list(m.rows[i]) for m in mats), []) for i in range(n)], ncols)


def vstack(*mats: Mat) -> Mat:
    mats = tuple(m for m in mats)
    if not mats:
        raise ValueError("vstack of nothing")
    c = mats[0].ncols
    if any(m.ncols != c for m in mats):
        raise ValueError("vstack: column counts differ")
    rows: list = []
    for m in mats:
        rows.extend(m.rows)
    return Mat(rows, c)


def block_diag(ring, *mats: Mat) -> Mat:
    nrows = sum(m.nrows for m in mats)
    ncols = sum(m.ncols for m in mats)
    out = [[ring.zero] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for m in mats:
        for i in range(m.nrows):
            row = out[r0 + i]
            for j in range(m.ncols):
                row[c0 + j] = m.rows[i][j]
        r0 += m.nrows
        c0 += m.ncols
    return Mat(out, ncols)


def mat_mul(ring, a: Mat, b: Mat) -> Mat:
    if a.ncols != b.nrows:
        raise ValueError(f"shape mismatch: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    if a.nrows == 0 or b.ncols == 0:
        return Mat([[] for _ in range(a.nrows)] if b.ncols == 0 else [], b.ncols)
    out = []
    for i in range(a.nrows):
        arow = a.rows[i]
        orow = []
        for j in range(b.ncols):
            acc = ring.zero
            for k in range(a.ncols):
                x = arow[k]
                if ring.is_zero(x):
                    continue
                acc = ring.add(acc, ring.mul(x, b.rows[k][j]))
            orow.append(acc)
        out.append(orow)
    return Mat(out, b.ncols)


def mat_vec(ring, a: Mat, v: Sequence[object]) -> tuple:
    return mat_mul(ring, a, Mat.column(v)).col(0)


def mat_neg(ring, a: Mat) -> Mat:
    return a.map_entries(ring.neg)


def mat_is_zero(ring, a: Mat) -> bool:
    return all(ring.is_zero(x) for row in a.rows for x in row)


def determinant(ring, m: Mat):
    """Cofactor-expansion determinant; intended for small matrices."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return ring.one
    cols = list(range(n))

    def go(i: int, remaining: tuple) -> object:
        if not remaining:
            return ring.one
        acc = ring.zero
        sign = True
        for idx, j in enumerate(remaining):
            x = m.rows[i][j]
            if not ring.is_zero(x):
                rest = remaining[:idx] + remaining[idx + 1 :]
                sub = go(i + 1, rest)
                term = ring.mul(x, sub)
                acc = ring.add(acc, term if sign else ring.neg(term))
            sign = not sign
        return acc

    return go(0, tuple(cols))


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant via fraction-free arithmetic over Fractions."""
    n = len(rows)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] * inv
            if f:
                a[r] = [a[r][k] - f * a[col][k] for k in range(n)]
    assert det.denominator == 1
    return int(det)


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V = D with D diagonal, d1 | d2 | ..., and unit-determinant U, V.

    U or V is None when the caller asked not to accumulate it.  Diagonal
    entries are canonical associates; `invariant_factors` keeps the nonunit
    ones (trailing zeros included).
    """

    u: Optional[Mat]
    d: Mat
    v: Optional[Mat]
    diagonal: tuple
    rank: int
    unit_count: int
    invariant_factors: tuple


def smith_normal_form(
    ring,
    m: Mat,
    with_u: bool = True,
    with_v: bool = True,
    cancel: Optional[Callable[[], bool]] = None,
) -> SmithDecomposition:
    R, C = m.nrows, m.ncols
    d = [list(row) for row in m.rows]
    u = [[ring.one if i == j else ring.zero for j in range(R)] for i in range(R)] if with_u else None
    v = [[ring.one if i == j else ring.zero for j in range(C)] for i in range(C)] if with_v else None

    def tick() -> None:
        if cancel is not None and cancel():
            raise SmithCancelled()

    def swap_rows(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def row_sub(i: int, j: int, q) -> None:
        # row_i -= q * row_j
        if ring.is_zero(q):
            return
        d[i] = [ring.sub(d[i][k], ring.mul(q, d[j][k])) for k in range(C)]
        if u is not None:
            u[i] = [ring.sub(u[i][k], ring.mul(q, u[j][k])) for k in range(R)]

    def col_sub(i: int, j: int, q) -> None:
        # col_i -= q * col_j
        if ring.is_zero(q):
            return
        for row in d:
            row[i] = ring.sub(row[i], ring.mul(q, row[j]))
        if v is not None:
            for row in v:
                row[i] = ring.sub(row[i], ring.mul(q, row[j]))

    def find_pivot(s: int):
        best = None
        for i in range(s, R):
            di = d[i]
            for j in range(s, C):
                x = di[j]
                if not ring.is_zero(x):
                    sz = ring.size(x)
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        return best

    def clear_pivot(s: int) -> None:
        """Zero out column s below and row s right of the pivot."""
        while True:
            tick()
            # column pass: reduce, promoting any smaller remainder to the pivot
            i = s + 1
            while i < R:
                if ring.is_zero(d[i][s]):
                    i += 1
                    continue
                q, _ = ring.divmod(d[i][s], d[s][s])
                row_sub(i, s, q)
                if ring.is_zero(d[i][s]):
                    i += 1
                else:
                    swap_rows(i, s)  # strictly smaller pivot; restart the pass
                    i = s + 1
            # row pass: same on columns; a swap dirties the cleared column
            dirtied = False
            j = s + 1
            while j < C:
                if ring.is_zero(d[s][j]):
                    j += 1
                    continue
                q, _ = ring.divmod(d[s][j], d[s][s])
                col_sub(j, s, q)
                if ring.is_zero(d[s][j]):
                    j += 1
                else:
                    swap_cols(j, s)
                    dirtied = True
                    j = s + 1
            if not dirtied and all(ring.is_zero(d[i][s]) for i in range(s + 1, R)):
                return

    steps = min(R, C)
    s = 0
    while s < steps:
        tick()
        best = find_pivot(s)
        if best is None:
            break
        _, pi, pj = best
        if pi != s:
            swap_rows(pi, s)
        if pj != s:
            swap_cols(pj, s)
        clear_pivot(s)
        # divisibility patch: the pivot must divide the remaining block
        patched = True
        while patched:
            patched = False
            piv = d[s][s]
            for i in range(s + 1, R):
                row = d[i]
                for j in range(s + 1, C):
                    if ring.is_zero(row[j]):
                        continue
                    _, r = ring.divmod(row[j], piv)
                    if not ring.is_zero(r):
                        row_sub(s, i, ring.neg(ring.one))  # row_s += row_i
                        clear_pivot(s)
                        patched = True
                        break
                if patched:
                    break
        # normalize the pivot to its canonical associate
        assoc, unit = ring.canonical(d[s][s])
        if not ring.eq(unit, ring.one):
            inv = ring.inv_unit(unit)
            d[s] = [ring.mul(inv, x) for x in d[s]]
            if u is not None:
                u[s] = [ring.mul(inv, x) for x in u[s]]
        s += 1

    diagonal = tuple(d[i][i] for i in range(steps))
    rank = sum(1 for x in diagonal if not ring.is_zero(x))
    unit_count = sum(1 for x in diagonal if ring.is_unit(x))
    invariant_factors = tuple(x for x in diagonal if not ring.is_unit(x))
    return SmithDecomposition(
        u=Mat(u, R) if u is not None else None,
        d=Mat(d, C),
        v=Mat(v, C) if v is not None else None,
        diagonal=diagonal,
        rank=rank,
        unit_count=unit_count,
        invariant_factors=invariant_factors,
    )


def kernel_basis(ring, m: Mat, cancel: Optional[Callable[[], bool]] = None) -> Mat:
    """Columns form a basis of { x : m @ x = 0 }; free because the ring is a PID."""
    dec = smith_normal_form(ring, m, with_u=False, with_v=True, cancel=cancel)
    cols = range(dec.rank, m.ncols)
    if m.ncols == 0:
        return Mat([], 0)
    rows = [[dec.v.rows[i][j] for j in cols] for i in range(m.ncols)]
    return Mat(rows, len(range(dec.rank, m.ncols)))


def solve_with(ring, dec: SmithDecomposition, m: Mat, b: Mat) -> Optional[Mat]:
    """All X with m @ X = b, via a precomputed decomposition of m (with U and V).

    Returns one particular solution, or None when some column is unsolvable.
    """
    if dec.u is None or dec.v is None:
        raise ValueError("solve needs both transforms")
    if b.nrows != m.nrows:
        raise ValueError("right-hand side has wrong height")
    if b.ncols == 0:
        return Mat([() for _ in range(m.ncols)], 0)
    ub = mat_mul(ring, dec.u, b)
    xcols = []
    for j in range(b.ncols):
        z = [ring.zero] * m.ncols
        for i in range(m.nrows):
            w = ub.rows[i][j]
            if i < dec.rank:
                di = dec.diagonal[i]
                q, r = ring.divmod(w, di)
                if not ring.is_zero(r):
                    return None
                z[i] = q
            elif not ring.is_zero(w):
                return None
        xcols.append(z)
    zmat = Mat(xcols, m.ncols).transpose() if xcols else Mat([], 0)
    if m.ncols == 0:
        return Mat([], b.ncols)
    return mat_mul(ring, dec.v, zmat)


def solve_columns(ring, m: Mat, b: Mat) -> Optional[Mat]:
    dec = smith_normal_form(ring, m, with_u=True, with_v=True)
    return solve_with(ring, dec, m, b)


def column_span_contains(ring, m: Mat, b: Mat) -> bool:
    return solve_columns(ring, m, b) is not None
