"""Exact sparse linear algebra over arbitrary-precision rationals.

Two layers live here.  The `SparseRationalMatrix`/`SubspaceBasis` API does
everything with `fractions.Fraction` and reduced row echelon forms; the
canonical echelon form doubles as a subspace fingerprint so equality is a
plain comparison.

`certified_kernel` computes the null space of a large integer row system by
searching modulo machine-word primes and then certifying the answer over the
rationals: the modular run only ever chooses pivots, every returned number is
exact and every returned vector is re-verified against the original rows with
exact arithmetic.  A nonzero pivot minor mod p bounds the rank from below and
the verified kernel vectors bound it from above, so the reported rank is exact
regardless of the primes used.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

import numpy as np
import scipy.sparse as sp


class NotInvariantError(ValueError):
    """A subspace was not stable under the supplied group element."""


class SparseRationalMatrix:
    """Immutable sparse matrix with nonzero exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], Fraction]):
        clean: dict[tuple[int, int], Fraction] = {}
        for (r, c), v in entries.items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry ({r},{c}) out of range for {rows}x{cols}")
            v = Fraction(v)
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self.entries = clean

    @classmethod
    def from_rows(cls, row_dicts, cols: int) -> "SparseRationalMatrix":
        entries = {}
        for r, row in enumerate(row_dicts):
            for c, v in row.items():
                entries[(r, c)] = Fraction(v)
        return cls(len(row_dicts), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseRationalMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def row_vectors(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column_vectors(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def transpose(self) -> "SparseRationalMatrix":
        return SparseRationalMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}
        )

    def matvec(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (r, c), a in self.entries.items():
            x = v.get(c)
            if x:
                out[r] = out.get(r, Fraction(0)) + a * x
        return {r: val for r, val in out.items() if val}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseRationalMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SparseRationalMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


class SubspaceBasis:
    """Canonical reduced-row-echelon spanning set of a subspace."""

    __slots__ = ("ambient_dim", "vectors", "pivots")

    def __init__(self, ambient_dim: int, vectors, pivots):
        self.ambient_dim = ambient_dim
        self.vectors = tuple(dict(v) for v in vectors)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.vectors == other.vectors
        )

    def __repr__(self) -> str:
        return f"SubspaceBasis(ambient={self.ambient_dim}, dim={self.dim})"


def rref_from_vectors(vectors, ambient_dim: int) -> SubspaceBasis:
    """Reduced row echelon span of the given sparse rational vectors."""
    pivot_rows: dict[int, dict[int, Fraction]] = {}
    for vec in vectors:
        row = {c: Fraction(v) for c, v in vec.items() if v}
        while row:
            lead = min(row)
            piv = pivot_rows.get(lead)
            if piv is None:
                break
            coef = row.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = row.get(c, Fraction(0)) - coef * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute the new pivot into the existing rows
        for other in pivot_rows.values():
            coef = other.get(lead)
            if coef:
                for c, v in row.items():
                    if c == lead:
                        other.pop(lead, None)
                        continue
                    nv = other.get(c, Fraction(0)) - coef * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        pivot_rows[lead] = row
    pivots = sorted(pivot_rows)
    return SubspaceBasis(ambient_dim, [pivot_rows[p] for p in pivots], pivots)


def rank(matrix: SparseRationalMatrix) -> int:
    return rref_from_vectors(matrix.row_vectors(), matrix.cols).dim


def image_basis(matrix: SparseRationalMatrix) -> SubspaceBasis:
    """Canonical basis of the column space (the image of the map)."""
    return rref_from_vectors(matrix.column_vectors(), matrix.rows)


def kernel_basis(matrix: SparseRationalMatrix) -> SubspaceBasis:
    """Canonical basis of the null space {v : Mv = 0}."""
    row_space = rref_from_vectors(matrix.row_vectors(), matrix.cols)
    pivot_set = set(row_space.pivots)
    by_pivot = dict(zip(row_space.pivots, row_space.vectors))
    free = [c for c in range(matrix.cols) if c not in pivot_set]
    kernel_vectors = []
    for f in free:
        vec = {f: Fraction(1)}
        for p, row in by_pivot.items():
            coef = row.get(f)
            if coef:
                vec[p] = -coef
        kernel_vectors.append(vec)
    return rref_from_vectors(kernel_vectors, matrix.cols)


def subspace_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    return a.pivots == b.pivots and a.vectors == b.vectors


def reduce_against(basis: SubspaceBasis, v: dict[int, Fraction]) -> dict[int, Fraction]:
    """Residual of v after subtracting its projection onto the basis span."""
    residual = {c: Fraction(val) for c, val in v.items() if val}
    by_pivot = dict(zip(basis.pivots, basis.vectors))
    for p in basis.pivots:
        coef = residual.get(p)
        if not coef:
            continue
        for c, val in by_pivot[p].items():
            nv = residual.get(c, Fraction(0)) - coef * val
            if nv:
                residual[c] = nv
            else:
                residual.pop(c, None)
    return residual


def contains(basis: SubspaceBasis, v: dict[int, Fraction]) -> bool:
    return not reduce_against(basis, v)


def restricted_trace(action: SparseRationalMatrix, subspace: SubspaceBasis) -> Fraction:
    """Trace of the action on an invariant subspace, in echelon coordinates.

    For an RREF basis the coordinates of any vector in the span are just its
    values at the pivot columns, so the trace is the sum of (action . w_i) at
    pivot_i.  Raises NotInvariantError if some image leaves the span.
    """
    if action.rows != action.cols or action.cols != subspace.ambient_dim:
        raise ValueError("action must be a square matrix on the ambient space")
    total = Fraction(0)
    for pivot, w in zip(subspace.pivots, subspace.vectors):
        image = action.matvec(w)
        coords = {p: image.get(p, Fraction(0)) for p in subspace.pivots}
        residual = dict(image)
        # subtract sum coef_p * w_p
        for p2, w2 in zip(subspace.pivots, subspace.vectors):
            coef = coords[p2]
            if not coef:
                continue
            for c, val in w2.items():
                nv = residual.get(c, Fraction(0)) - coef * val
                if nv:
                    residual[c] = nv
                else:
                    residual.pop(c, None)
        if residual:
            raise NotInvariantError(
                f"image of basis vector with pivot {pivot} is not in the subspace"
            )
        total += coords[pivot]
    return total


# -- certified kernels of large integer systems --------------------------------

# 31-bit primes: products of two residues fit comfortably in int64 for numpy
_PRIMES = (
    2147483629,
    2147483587,
    2147483579,
    2147483563,
    2147483549,
    2147483543,
    2147483497,
    2147483489,
    2147483477,
    2147483423,
)


def _modular_echelon(rows, p):
    """Forward echelon mod p.  Returns {pivot_col: (cols_list, vals_list)} with
    unit leading value; row supports only contain columns >= the pivot."""
    pivots: dict[int, tuple[list[int], list[int]]] = {}
    for row in rows:
        r = {}
        for c, v in row.items():
            v %= p
            if v:
                r[c] = v
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                break
            coef = r[lead]
            pcols, pvals = piv
            for c, v in zip(pcols, pvals):
                nv = (r.get(c, 0) - coef * v) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        if not r:
            continue
        lead = min(r)
        inv = pow(r[lead], p - 2, p)
        cols = sorted(r)
        vals = [(r[c] * inv) % p for c in cols]
        pivots[lead] = (cols, vals)
    return pivots


def _backsolve_tails(pivots, ncols, p):
    """Fully reduce echelon rows; returns (pivot_cols, free_cols, tails) where
    tails[i] is the dense row over the free columns for pivot_cols[i]."""
    pivot_cols = sorted(pivots)
    pivot_index = {c: i for i, c in enumerate(pivot_cols)}
    free_cols = [c for c in range(ncols) if c not in pivots]
    free_index = {c: i for i, c in enumerate(free_cols)}
    tails = np.zeros((len(pivot_cols), len(free_cols)), dtype=np.int64)
    for lead in reversed(pivot_cols):
        i = pivot_index[lead]
        dense = tails[i]
        cols, vals = pivots[lead]
        for c, v in zip(cols, vals):
            if c == lead:
                continue
            j = pivot_index.get(c)
            if j is None:
                fi = free_index[c]
                dense[fi] = (dense[fi] + v) % p
            else:
                # substituting the already-reduced pivot row for e_c
                np.subtract(dense, v * tails[j], out=dense)
                np.mod(dense, p, out=dense)
    return pivot_cols, free_cols, tails


def _crt_pair(a1, m1, a2, m2):
    # combine residues; m1, m2 coprime
    t = ((a2 - a1) * pow(m1 % m2, -1, m2)) % m2
    return a1 + m1 * t, m1 * m2


def rational_reconstruct(a: int, modulus: int):
    """Recover num/den with num ≡ a*den (mod modulus), |num|, den <= sqrt(modulus/2).

    Returns a Fraction or None if no candidate exists at this modulus size.
    """
    a %= modulus
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    num = r1 if s1 > 0 else -r1
    den = abs(s1)
    if gcd(den, modulus) != 1:
        return None
    if (num - a * den) % modulus != 0:
        return None
    return Fraction(num, den)


class KernelCertificate:
    """Exact verified kernel of an integer row system, stored column-major.

    vectors are indexed by their free column f and normalised so that
    vector_f[f] = 1 and vector_f[f'] = 0 for other free columns.  Internally
    each vector is scaled by an integer denominator so pairings stay in ZZ.
    """

    __slots__ = ("ncols", "rank", "free_cols", "dens", "columns", "primes_used")

    def __init__(self, ncols, rank_, free_cols, dens, columns, primes_used):
        self.ncols = ncols
        self.rank = rank_
        self.free_cols = tuple(free_cols)
        self.dens = tuple(dens)
        self.columns = columns  # col -> (list of free indices, list of int numerators)
        self.primes_used = tuple(primes_used)

    @property
    def dim(self) -> int:
        return len(self.free_cols)

    def entry(self, free_index: int, col: int) -> Fraction:
        slot = self.columns.get(col)
        if slot is None:
            return Fraction(0)
        fis, nums = slot
        for fi, num in zip(fis, nums):
            if fi == free_index:
                return Fraction(num, self.dens[free_index])
        return Fraction(0)

    def pairings(self, v: dict[int, int | Fraction]):
        """List over free indices of <kernel_vector, v> (up to the positive
        per-vector denominator, so zero-testing is exact)."""
        acc = [0] * len(self.free_cols)
        for c, val in v.items():
            slot = self.columns.get(c)
            if slot is None:
                continue
            fis, nums = slot
            for fi, num in zip(fis, nums):
                acc[fi] += val * num
        return acc

    def annihilates(self, v: dict[int, int | Fraction]) -> bool:
        """True iff v is orthogonal to the whole kernel, i.e. v lies in the
        row space of the original system."""
        return all(x == 0 for x in self.pairings(v))

    def vector_items(self, free_index: int):
        """Iterate (col, numerator) pairs of one kernel vector (scaled by dens)."""
        for c, slot in self.columns.items():
            fis, nums = slot
            for fi, num in zip(fis, nums):
                if fi == free_index:
                    yield c, num


class KernelCertificationError(RuntimeError):
    pass


def certified_kernel(rows, ncols: int, max_primes: int = 8) -> KernelCertificate:
    """Exact kernel of the integer row system, certified over the rationals.

    rows: iterable of dicts col -> int.  The returned rank equals the exact
    rational rank: the modular echelon gives a nonzero pivot minor (rank lower
    bound) and the exactly verified kernel vectors give the matching upper
    bound.
    """
    rows = [dict(r) for r in rows]
    if not rows:
        free_cols = list(range(ncols))
        columns = {c: ([i], [1]) for i, c in enumerate(free_cols)}
        return KernelCertificate(ncols, 0, free_cols, [1] * ncols, columns, ())

    for start in range(3):  # restart with a different primary prime if ever needed
        available = list(_PRIMES[start:])
        per_prime = []
        pivot_cols = free_cols = None
        prime_iter = iter(available)
        failed = False
        while len(per_prime) < max_primes:
            try:
                p = next(prime_iter)
            except StopIteration:
                failed = True
                break
            pivots = _modular_echelon(rows, p)
            pcols, fcols, tails = _backsolve_tails(pivots, ncols, p)
            if pivot_cols is None:
                pivot_cols, free_cols = pcols, fcols
            elif pcols != pivot_cols:
                continue  # unlucky prime; skip it
            per_prime.append((p, tails))
            result = _try_lift_and_verify(rows, ncols, pivot_cols, free_cols, per_prime)
            if result is not None:
                return result
        if failed:
            continue
    raise KernelCertificationError("could not certify kernel with available primes")


def _try_lift_and_verify(rows, ncols, pivot_cols, free_cols, per_prime):
    nfree = len(free_cols)
    npiv = len(pivot_cols)
    modulus = 1
    for p, _ in per_prime:
        modulus *= p

    # CRT-combine the (negated) tail columns: kernel vector f has value
    # -tails[:, f] at the pivot columns and identity at the free columns.
    lifted: list[dict[int, Fraction]] = []
    for fi in range(nfree):
        residues = None
        for p, tails in per_prime:
            col = ((-tails[:, fi]) % p).tolist() if npiv else []
            if residues is None:
                residues = [(int(x), p) for x in col]
            else:
                residues = [
                    _crt_pair(a, m, int(x), p) for (a, m), x in zip(residues, col)
                ]
        vec: dict[int, Fraction] = {free_cols[fi]: Fraction(1)}
        ok = True
        for i in range(npiv):
            a, m = residues[i] if npiv else (0, 1)
            if a == 0:
                continue
            value = rational_reconstruct(a, m)
            if value is None:
                ok = False
                break
            if value:
                vec[pivot_cols[i]] = value
        if not ok:
            return None  # need more primes
        lifted.append(vec)

    # clear denominators and verify A v = 0 exactly
    dens = []
    int_vectors = []
    for vec in lifted:
        den = 1
        for v in vec.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ints = {c: int(v * den) for c, v in vec.items()}
        dens.append(den)
        int_vectors.append(ints)

    if not _verify_kernel(rows, ncols, int_vectors):
        return None

    columns: dict[int, tuple[list[int], list[int]]] = {}
    for fi, ints in enumerate(int_vectors):
        for c, num in ints.items():
            slot = columns.get(c)
            if slot is None:
                columns[c] = ([fi], [num])
            else:
                slot[0].append(fi)
                slot[1].append(num)
    primes = tuple(p for p, _ in per_prime)
    return KernelCertificate(ncols, npiv, free_cols, dens, columns, primes)


def _verify_kernel(rows, ncols, int_vectors) -> bool:
    """Exact check that every integer vector annihilates every row."""
    max_row_sum = 0
    for row in rows:
        s = sum(abs(v) for v in row.values())
        if s > max_row_sum:
            max_row_sum = s
    # fast path: int64 sparse matvec when no overflow is possible
    fast, slow = [], []
    limit = (2**62) // max(max_row_sum, 1)
    for idx, vec in enumerate(int_vectors):
        big = max((abs(v) for v in vec.values()), default=0)
        (fast if big <= limit else slow).append(idx)

    if fast:
        data, ri, ci = [], [], []
        for r, row in enumerate(rows):
            for c, v in row.items():
                ri.append(r)
                ci.append(c)
                data.append(v)
        mat = sp.csr_matrix(
            (np.asarray(data, dtype=np.int64), (ri, ci)), shape=(len(rows), ncols)
        )
        block_size = 64
        for i in range(0, len(fast), block_size):
            chunk = fast[i : i + block_size]
            dense = np.zeros((ncols, len(chunk)), dtype=np.int64)
            for j, idx in enumerate(chunk):
                for c, v in int_vectors[idx].items():
                    dense[c, j] = v
            if (mat @ dense).any():
                return False

    if slow:
        col_index: dict[int, list[tuple[int, int]]] = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                col_index.setdefault(c, []).append((r, v))
        for idx in slow:
            acc: dict[int, int] = {}
            for c, val in int_vectors[idx].items():
                for r, a in col_index.get(c, ()):
                    acc[r] = acc.get(r, 0) + a * val
            if any(acc.values()):
                return False
    return True
