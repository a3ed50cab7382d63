"""Partitions, skew shapes, semistandard tableaux and Littlewood-Richardson numbers.

Everything here is exact integer combinatorics.  Partitions are identified up
to trailing zeros and normalised eagerly; tableau enumeration is deterministic
(row-major, lexicographically increasing fillings) so that reports are
reproducible run to run.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator


class Partition:
    """A weakly decreasing sequence of nonnegative integers, up to trailing zeros."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated grammar ``int ("," int)*``; '' is empty."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}: {exc}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        # descending weight first so tables list big shapes in a stable order
        return (self.weight(), self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        if isinstance(i, slice):
            raise TypeError("no slicing; use .parts")
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def contains(self, other: "Partition") -> bool:
        return all(self[i] >= other[i] for i in range(len(other)))


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: result[j] = #{i : p[i] >= j+1}."""
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for q in p.parts if q >= j + 1) for j in range(p.parts[0])))


class SkewPartition:
    """A pair outer/inner with the inner diagram contained in the outer one."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition = Partition(())):
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} not contained in outer {outer}")
        self.outer = outer
        self.inner = inner

    @classmethod
    def parse(cls, text: str) -> "SkewPartition":
        if "/" in text:
            out_text, in_text = text.split("/", 1)
            return cls(Partition.parse(out_text), Partition.parse(in_text))
        return cls(Partition.parse(text))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    def __repr__(self) -> str:
        return f"SkewPartition({self.outer.parts}, {self.inner.parts})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewPartition)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def weight(self) -> int:
        return self.outer.weight() - self.inner.weight()

    def num_rows(self) -> int:
        return len(self.outer)

    def row_bounds(self, r: int) -> tuple[int, int]:
        """Half-open column range [inner[r], outer[r]) of row r (0-indexed)."""
        return self.inner[r], self.outer[r]

    def cells(self) -> list[tuple[int, int]]:
        """Row-major list of (row, col) cells, 0-indexed."""
        out = []
        for r in range(self.num_rows()):
            lo, hi = self.row_bounds(r)
            out.extend((r, c) for c in range(lo, hi))
        return out

    def has_cell(self, r: int, c: int) -> bool:
        return 0 <= r < self.num_rows() and self.inner[r] <= c < self.outer[r]

    def conjugate(self) -> "SkewPartition":
        return SkewPartition(conjugate(self.outer), conjugate(self.inner))

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(self.outer[r] - self.inner[r] for r in range(self.num_rows()))

    def row_overlap(self, r: int) -> int:
        """Number of columns shared by rows r and r+1."""
        lo = max(self.inner[r], self.inner[r + 1])
        hi = min(self.outer[r], self.outer[r + 1])
        return max(0, hi - lo)

    def column_runs(self, c: int) -> list[int]:
        """Lengths of the maximal contiguous vertical runs of cells in column c."""
        runs, current = [], 0
        for r in range(self.num_rows()):
            if self.has_cell(r, c):
                current += 1
            elif current:
                runs.append(current)
                current = 0
        if current:
            runs.append(current)
        return runs


class Tableau:
    """A filling of a skew diagram, stored row by row over the skew cells only."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: SkewPartition, rows):
        rows = tuple(tuple(row) for row in rows)
        if tuple(len(row) for row in rows) != shape.row_lengths():
            raise ValueError("row lengths do not match shape")
        self.shape = shape
        self.rows = rows

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"Tableau({self.shape!r}, {self.rows})"

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c - self.shape.inner[r]]

    def content(self) -> tuple[int, ...]:
        """Multiplicity vector of the entries (index i counts entry i+1)."""
        if not self.rows:
            return ()
        top = max((max(row) for row in self.rows if row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                counts[v - 1] += 1
        return tuple(counts)

    def is_row_semistandard(self) -> bool:
        return all(row[i] <= row[i + 1] for row in self.rows for i in range(len(row) - 1))

    def is_semistandard(self) -> bool:
        if not self.is_row_semistandard():
            return False
        sh = self.shape
        for r in range(1, sh.num_rows()):
            for c in range(*sh.row_bounds(r)):
                if sh.has_cell(r - 1, c) and self.entry(r - 1, c) >= self.entry(r, c):
                    return False
        return True


def enumerate_sst(shape: SkewPartition, max_entry: int) -> Iterator[Tableau]:
    """Yield all semistandard tableaux with entries <= max_entry.

    Deterministic order: cells are filled row-major and values tried in
    increasing order, so the output is lexicographic in the reading word.
    """
    if max_entry < 1:
        raise ValueError("max_entry must be >= 1")
    cells = shape.cells()
    if not cells:
        yield Tableau(shape, [[]] * shape.num_rows() if shape.num_rows() else [])
        return
    rows = [[0] * (shape.outer[r] - shape.inner[r]) for r in range(shape.num_rows())]

    def cell_min(r: int, c: int) -> int:
        lo = 1
        if c - 1 >= shape.inner[r] and shape.has_cell(r, c - 1):
            lo = max(lo, rows[r][c - 1 - shape.inner[r]])
        if r > 0 and shape.has_cell(r - 1, c):
            lo = max(lo, rows[r - 1][c - shape.inner[r - 1]] + 1)
        return lo

    def fill(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau(shape, [row[:] for row in rows])
            return
        r, c = cells[idx]
        for v in range(cell_min(r, c), max_entry + 1):
            rows[r][c - shape.inner[r]] = v
            yield from fill(idx + 1)
        rows[r][c - shape.inner[r]] = 0

    yield from fill(0)


def count_sst(shape: SkewPartition, max_entry: int) -> int:
    return sum(1 for _ in enumerate_sst(shape, max_entry))


def weyl_dimension(p: Partition, n_vars: int) -> int:
    """Dimension of the irreducible polynomial module of highest weight p over GL_N,
    realised as the number of semistandard tableaux with entries <= n_vars."""
    if n_vars < 1:
        raise ValueError("n_vars must be >= 1")
    return count_sst(SkewPartition(p), n_vars)


def weyl_dimension_product_formula(p: Partition, n_vars: int) -> int:
    """Independent dimension oracle: prod_{i<j} (p_i - p_j + j - i)/(j - i)."""
    if len(p) > n_vars:
        return 0
    padded = [p[i] for i in range(n_vars)]
    value = Fraction(1)
    for i in range(n_vars):
        for j in range(i + 1, n_vars):
            value *= Fraction(padded[i] - padded[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


# -- shape constructors used throughout the bracket calculus ------------------


def _require_nk(n: int, k: int) -> None:
    if n < 2 or k < 2:
        raise ValueError(f"need n >= 2 and k >= 2, got n={n}, k={k}")


def bracket_partition(n: int, k: int) -> Partition:
    """Partition (n, (n-1)^(k-1)): the argument counts of a comb of k brackets."""
    _require_nk(n, k)
    return Partition((n,) + (n - 1,) * (k - 1))


def weyl_presentation_shape(n: int, k: int) -> SkewPartition:
    """Skew shape with rows (n, n-1, ..., n-1) overlapping by n-1 then n-2.

    Outer (n+k-2, n+k-3, ..., n, n-1); inner (k-2, k-2, k-3, ..., 2, 1, 0).
    """
    _require_nk(n, k)
    outer = tuple(n + k - 2 - i for i in range(k))
    inner = (k - 2,) + tuple(k - 1 - i for i in range(1, k))
    return SkewPartition(Partition(outer), Partition(inner))


def specht_source_shape(n: int, k: int) -> SkewPartition:
    """Skew shape (k^(n-1), k-1, ..., 1)/(k-1, ..., 2); its skew Specht module
    surjects onto the multilinear bracket module."""
    _require_nk(n, k)
    outer = (k,) * (n - 1) + tuple(range(k - 1, 0, -1))
    inner = tuple(range(k - 1, 1, -1))
    return SkewPartition(Partition(outer), Partition(inner))


def min_column_count(p: Partition) -> int:
    """Number of columns of the diagram (= first part)."""
    return p[0]


def has_full_column(shape: SkewPartition, k: int) -> bool:
    """True iff some column of the skew diagram has a contiguous run of >= k cells."""
    if shape.num_rows() == 0:
        return k <= 0
    top = max(shape.outer[r] for r in range(shape.num_rows()))
    return any(run >= k for c in range(top) for run in shape.column_runs(c))


# -- partitions of m and Littlewood-Richardson numbers ------------------------


@lru_cache(maxsize=None)
def partitions_of(m: int) -> tuple[Partition, ...]:
    """All partitions of m, in descending lexicographic order."""
    if m < 0:
        return ()

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(parts) for parts in gen(m, m)) if m else (Partition(()),)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson number c^lam_{mu,nu}.

    Counts semistandard fillings of lam/mu with content nu whose reverse
    reading word (right-to-left, top-to-bottom) is a lattice word.
    """
    if lam.weight() != mu.weight() + nu.weight():
        return 0
    if not lam.contains(mu):
        return 0
    if nu.weight() == 0:
        return 1
    shape = SkewPartition(lam, mu)
    # cells in reverse reading order: row-major, right-to-left within a row
    cells = []
    for r in range(shape.num_rows()):
        lo, hi = shape.row_bounds(r)
        cells.extend((r, c) for c in range(hi - 1, lo - 1, -1))
    nu_counts = list(nu.parts)
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * len(nu_counts)
    total = 0

    def place(idx: int) -> int:
        nonlocal total
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = len(nu_counts)
        found = 0
        for v in range(1, hi + 1):
            if counts[v - 1] >= nu_counts[v - 1]:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue  # lattice condition
            right = grid.get((r, c + 1))
            if right is not None and v > right:
                continue
            above = grid.get((r - 1, c))
            if above is not None and v <= above:
                continue
            grid[(r, c)] = v
            counts[v - 1] += 1
            found += place(idx + 1)
            counts[v - 1] -= 1
            del grid[(r, c)]
        return found

    return place(0)


def skew_specht_multiplicities(shape: SkewPartition) -> dict[Partition, int]:
    """Decomposition of the skew Specht module of this shape: nu -> c^outer_{inner,nu}."""
    w = shape.weight()
    out: dict[Partition, int] = {}
    for nu in partitions_of(w):
        c = lr_coefficient(shape.outer, shape.inner, nu)
        if c:
            out[nu] = c
    return out


# -- counting oracles ----------------------------------------------------------


def hook_length_dimension(p: Partition) -> int:
    """Number of standard tableaux of straight shape p (hook length formula)."""
    m = p.weight()
    if m == 0:
        return 1
    conj = conjugate(p)
    denom = 1
    for i, row in enumerate(p.parts):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return factorial(m) // denom

def standard_tableaux_count(shape: SkewPartition) -> int:
    """Number of standard tableaux of a skew shape, by the determinant formula."""
    w = shape.weight()
    q = shape.num_rows()
    lam, mu = shape.outer, shape.inner
    # det [ 1/(lam_i - mu_j - i + j)! ]
    rows = []
    for i in range(q):
        rows.append(
            [
                Fraction(1, factorial(lam[i] - mu[j] - i + j))
                if lam[i] - mu[j] - i + j >= 0
                else Fraction(0)
                for j in range(q)
            ]
        )
    det = _determinant(rows)
    value = det * factorial(w)
    assert value.denominator == 1
    return int(value)


def _determinant(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    rows = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col] != 0:
                factor = rows[r][col] * inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def binomial(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0
