"""Dense matrices over a polynomial ring or a local ring.

Entries are ring elements (:class:`~locus.poly.Polynomial` or
:class:`~locus.localring.Fraction`). ``Matrix`` is treated as immutable;
``MutableMatrix`` adds the in-place row/column operations used by pruning.
"""

from __future__ import annotations

from typing import List, Sequence


class ShapeError(ValueError):
    pass


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "entries")

    def __init__(self, ring, entries: Sequence[Sequence], nrows: int = None, ncols: int = None):
        rows = [list(r) for r in entries]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ShapeError(f"entries do not form a {nrows}x{ncols} grid")
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries = [[ring(e) for e in r] for r in rows]

    @classmethod
    def _raw(cls, ring, rows, nrows, ncols):
        m = cls.__new__(cls)
        m.ring, m.entries, m.nrows, m.ncols = ring, rows, nrows, ncols
        return m

    @classmethod
    def zero(cls, ring, nrows: int, ncols: int):
        z = ring.zero()
        return cls._raw(ring, [[z] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, ring, n: int):
        z, o = ring.zero(), ring.one()
        return cls._raw(ring, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, ring, columns: Sequence[Sequence], nrows: int):
        cols = [list(c) for c in columns]
        if any(len(c) != nrows for c in cols):
            raise ShapeError("columns have inconsistent length")
        rows = [[ring(c[i]) for c in cols] for i in range(nrows)]
        return cls._raw(ring, rows, nrows, len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> List:
        return [r[j] for r in self.entries]

    def columns(self) -> List[List]:
        return [[r[j] for r in self.entries] for j in range(self.ncols)]

    def row(self, i: int) -> List:
        return list(self.entries[i])

    def submatrix(self, rows=None, cols=None) -> "Matrix":
        rows = range(self.nrows) if rows is None else list(rows)
        cols = range(self.ncols) if cols is None else list(cols)
        return type(self)._raw(self.ring, [[self.entries[i][j] for j in cols] for i in rows],
                               len(rows), len(cols))

    def _check_ring(self, other: "Matrix"):
        if other.ring != self.ring:
            raise ShapeError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ring.zero()
        B = other.entries
        out = []
        for row in self.entries:
            new = []
            for j in range(other.ncols):
                acc = z
                for k, a in enumerate(row):
                    if a:
                        b = B[k][j]
                        if b:
                            acc = acc + a * b
                new.append(acc)
            out.append(new)
        return Matrix._raw(self.ring, out, self.nrows, other.ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        c = self.ring(other)
        return Matrix._raw(self.ring, [[c * e for e in r] for r in self.entries], self.nrows, self.ncols)

    def __rmul__(self, other):
        c = self.ring(other)
        return Matrix._raw(self.ring, [[c * e for e in r] for r in self.entries], self.nrows, self.ncols)

    def __add__(self, other: "Matrix"):
        self._check_ring(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix._raw(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                           self.nrows, self.ncols)

    def __neg__(self):
        return Matrix._raw(self.ring, [[-a for a in r] for r in self.entries], self.nrows, self.ncols)

    def __sub__(self, other: "Matrix"):
        return self + (-other)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ring, [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                           self.ncols, self.nrows)

    def is_zero(self) -> bool:
        return not any(e for r in self.entries for e in r)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.nrows != other.nrows:
            raise ShapeError("concatenation needs equal row counts")
        return Matrix._raw(self.ring, [r + s for r, s in zip(self.entries, other.entries)],
                           self.nrows, self.ncols + other.ncols)

    def nonzero_columns(self) -> "Matrix":
        keep = [j for j in range(self.ncols) if any(r[j] for r in self.entries)]
        return self.submatrix(cols=keep)

    def map(self, fn, ring) -> "Matrix":
        return Matrix._raw(ring, [[fn(e) for e in r] for r in self.entries], self.nrows, self.ncols)

    def mutable(self) -> "MutableMatrix":
        return MutableMatrix._raw(self.ring, [list(r) for r in self.entries], self.nrows, self.ncols)

    def frozen(self) -> "Matrix":
        return Matrix._raw(self.ring, [list(r) for r in self.entries], self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.ring})"

    def __str__(self):
        return render_matrix(self)


def _entry_text(e) -> str:
    return e.compact() if hasattr(e, "compact") else str(e)


def render_matrix(M: Matrix) -> str:
    """Transcript style: one ``| a b c |`` line per row, columns left-aligned."""
    if M.nrows == 0 or M.ncols == 0:
        return f"0 : {M.nrows}x{M.ncols}"
    texts = [[_entry_text(e) for e in r] for r in M.entries]
    widths = [max(len(texts[i][j]) for i in range(M.nrows)) for j in range(M.ncols)]
    lines = []
    for r in texts:
        cells = [t.ljust(w) for t, w in zip(r, widths)]
        lines.append("| " + " ".join(cells) + " |")
    return "\n".join(lines)


class MutableMatrix(Matrix):
    """Single-owner matrix with in-place elementary operations."""

    def _row_index(self, i):
        if not 0 <= i < self.nrows:
            raise IndexError(f"row {i} out of range for {self.nrows} rows")

    def _col_index(self, j):
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} out of range for {self.ncols} columns")

    def __setitem__(self, ij, value):
        i, j = ij
        self._row_index(i)
        self._col_index(j)
        self.entries[i][j] = self.ring(value)

    def swap_rows(self, i: int, k: int):
        self._row_index(i)
        self._row_index(k)
        E = self.entries
        E[i], E[k] = E[k], E[i]

    def swap_cols(self, j: int, k: int):
        self._col_index(j)
        self._col_index(k)
        for r in self.entries:
            r[j], r[k] = r[k], r[j]

    def add_multiple_of_row(self, target: int, source: int, c):
        """row[target] += c * row[source]"""
        self._row_index(target)
        self._row_index(source)
        c = self.ring(c)
        if not c:
            return
        src, dst = self.entries[source], self.entries[target]
        for j, a in enumerate(src):
            if a:
                dst[j] = dst[j] + c * a

    def add_multiple_of_col(self, target: int, source: int, c):
        """col[target] += c * col[source]"""
        self._col_index(target)
        self._col_index(source)
        c = self.ring(c)
        if not c:
            return
        for r in self.entries:
            a = r[source]
            if a:
                r[target] = r[target] + c * a

    def scale_row(self, i: int, c):
        self._row_index(i)
        c = self.ring(c)
        self.entries[i] = [c * a for a in self.entries[i]]

    def scale_col(self, j: int, c):
        self._col_index(j)
        c = self.ring(c)
        for r in self.entries:
            r[j] = c * r[j]

    def delete_row(self, i: int):
        self._row_index(i)
        del self.entries[i]
        self.nrows -= 1

    def delete_col(self, j: int):
        self._col_index(j)
        for r in self.entries:
            del r[j]
        self.ncols -= 1
