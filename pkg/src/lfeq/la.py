"""Exact matrices over GF(p^n): Gaussian elimination, kernels, characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, NotSquare, ParseError, ZeroPolynomial
from .ff import FieldElem, FieldSpec, PolyFF, check_enumerable, parse_element, vec_ops


@dataclass(frozen=True)
class MatFF:
    """Row-major matrix of canonical element indices."""

    spec: FieldSpec
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows * self.cols:
            raise DimensionMismatch(f"{len(self.data)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence]) -> "MatFF":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        data = tuple(spec.elem(x).value for r in rows for x in r)
        return cls(spec, len(rows), ncols, data)

    @classmethod
    def from_array(cls, spec: FieldSpec, arr) -> "MatFF":
        arr = np.asarray(arr, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        return cls(spec, arr.shape[0], arr.shape[1], tuple(int(x) for x in arr.ravel()))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatFF":
        return cls(spec, rows, cols, (0,) * (rows * cols))

    def __getitem__(self, key) -> FieldElem:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols}")
        return FieldElem(self.spec, self.data[i * self.cols + j])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_array(self) -> np.ndarray:
        return np.array(self.data, dtype=np.int64).reshape(self.rows, self.cols)

    def tolist(self) -> list[list[int]]:
        return self.to_array().tolist()

    def is_zero(self) -> bool:
        return not any(self.data)

    @property
    def T(self) -> "MatFF":
        return transpose(self)

    def __matmul__(self, other: "MatFF") -> "MatFF":
        return mat_mul(self, other)

    def __add__(self, other: "MatFF") -> "MatFF":
        return add(self, other)

    def __sub__(self, other: "MatFF") -> "MatFF":
        _check(self, other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return MatFF.from_array(self.spec, vec_ops(self.spec).sub(self.to_array(), other.to_array()))

    def format(self) -> str:
        """Rows separated by ';', entries by ','."""
        return ";".join(",".join(str(FieldElem(self.spec, self.data[i * self.cols + j]))
                                 for j in range(self.cols)) for i in range(self.rows))

    def pretty(self, indent: str = "  ") -> str:
        cells = [[str(self[i, j]) for j in range(self.cols)] for i in range(self.rows)]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(indent + " ".join(c.rjust(width) for c in r) for r in cells)


def parse_matrix(spec: FieldSpec, text: str) -> MatFF:
    rows = [r for r in text.replace(" ", "").split(";") if r]
    if not rows:
        raise ParseError("empty matrix text")
    return MatFF.from_rows(spec, [[parse_element(spec, c) for c in r.split(",")] for r in rows])


def _check(a: MatFF, b: MatFF) -> None:
    if a.spec != b.spec:
        raise FieldMismatch(f"{a.spec} vs {b.spec}")


def identity(spec: FieldSpec, n: int) -> MatFF:
    return MatFF.from_array(spec, np.eye(n, dtype=np.int64))


def transpose(a: MatFF) -> MatFF:
    return MatFF.from_array(a.spec, a.to_array().T)


def add(a: MatFF, b: MatFF) -> MatFF:
    _check(a, b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} + {b.shape}")
    return MatFF.from_array(a.spec, vec_ops(a.spec).add(a.to_array(), b.to_array()))


def scalar_mul(c, a: MatFF) -> MatFF:
    c = a.spec.elem(c)
    return MatFF.from_array(a.spec, vec_ops(a.spec).mul(a.to_array(), c.value))


def _matmul_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ops = vec_ops(spec)
    if spec.n == 1:
        p = spec.p
        if (p - 1) ** 2 * max(a.shape[1], 1) < 2**53:
            return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = ops.add(out, ops.mul(a[:, k:k + 1], b[k:k + 1, :]))
    return out


def mat_mul(a: MatFF, b: MatFF) -> MatFF:
    _check(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.shape} @ {b.shape}")
    return MatFF.from_array(a.spec, _matmul_arrays(a.spec, a.to_array(), b.to_array()))


class RowReducer:
    """Incremental reduced row echelon form over a finite field.

    Blocks of rows are reduced against the current basis in one pass, then
    eliminated among themselves; the basis is kept fully reduced so that
    the kernel can be read off at any time.
    """

    def __init__(self, spec: FieldSpec, ncols: int):
        self.spec = spec
        self.ncols = ncols
        self.ops = vec_ops(spec)
        self._basis = np.zeros((0, ncols), dtype=np.int64)
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def _reduce(self, block: np.ndarray) -> np.ndarray:
        if not self._pivots:
            return block
        ops = self.ops
        coeffs = block[:, self._pivots]
        if self.spec.n == 1:
            return (block - _matmul_arrays(self.spec, coeffs, self._basis)) % self.spec.p
        for i in range(len(self._pivots)):
            c = coeffs[:, i]
            nz = np.flatnonzero(c)
            if nz.size:
                block[nz] = ops.sub(block[nz], ops.mul(c[nz, None], self._basis[i][None, :]))
        return block

    def add(self, block) -> None:
        block = np.array(block, dtype=np.int64, copy=True).reshape(-1, self.ncols)
        if block.size == 0:
            return
        if block.shape[1] != self.ncols:
            raise DimensionMismatch(f"rows of width {block.shape[1]}, expected {self.ncols}")
        ops = self.ops
        work = self._reduce(block)
        work = work[work.any(axis=1)]
        new_rows: list[np.ndarray] = []
        new_piv: list[int] = []
        while work.shape[0]:
            row = work[0]
            j = int(np.flatnonzero(row)[0])
            row = ops.mul(row, int(ops.inv(row[j])))
            rest = work[1:]
            c = rest[:, j]
            nz = np.flatnonzero(c)
            if nz.size:
                rest[nz] = ops.sub(rest[nz], ops.mul(c[nz, None], row[None, :]))
            for k, r in enumerate(new_rows):
                if r[j]:
                    new_rows[k] = ops.sub(r, ops.mul(r[j], row))
            new_rows.append(row)
            new_piv.append(j)
            work = rest[rest.any(axis=1)]
        if not new_rows:
            return
        new = np.array(new_rows, dtype=np.int64)
        if self._pivots:
            coeffs = self._basis[:, new_piv]
            if self.spec.n == 1:
                self._basis = (self._basis - _matmul_arrays(self.spec, coeffs, new)) % self.spec.p
            else:
                for i, j in enumerate(new_piv):
                    c = coeffs[:, i]
                    nz = np.flatnonzero(c)
                    if nz.size:
                        self._basis[nz] = ops.sub(self._basis[nz],
                                                  ops.mul(c[nz, None], new[i][None, :]))
        self._basis = np.vstack([self._basis, new])
        self._pivots.extend(new_piv)

    def rref(self) -> tuple[np.ndarray, list[int]]:
        order = np.argsort(self._pivots, kind="stable")
        return self._basis[order], [self._pivots[i] for i in order]

    def kernel(self) -> np.ndarray:
        """Canonical kernel basis: one vector per free column, ascending."""
        basis, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        out = np.zeros((len(free), self.ncols), dtype=np.int64)
        if free:
            out[np.arange(len(free)), free] = 1
            if pivots:
                out[:, pivots] = self.ops.neg(basis[:, free].T)
        return out


@dataclass(frozen=True)
class KernelBasis:
    """Basis of a null space; ``vectors`` are column matrices."""

    vectors: tuple[MatFF, ...]
    ambient: int

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i) -> MatFF:
        return self.vectors[i]


def _reducer(a: MatFF) -> RowReducer:
    red = RowReducer(a.spec, a.cols)
    red.add(a.to_array())
    return red


def rank(a: MatFF) -> int:
    return _reducer(a).rank


def rref(a: MatFF) -> tuple[MatFF, list[int]]:
    basis, pivots = _reducer(a).rref()
    full = np.zeros((a.rows, a.cols), dtype=np.int64)
    full[: basis.shape[0]] = basis
    return MatFF.from_array(a.spec, full), pivots


def kernel(a: MatFF) -> KernelBasis:
    vecs = _reducer(a).kernel()
    return KernelBasis(tuple(MatFF.from_array(a.spec, v.reshape(-1, 1)) for v in vecs), a.cols)


def kernel_array(spec: FieldSpec, rows: np.ndarray, ncols: int) -> np.ndarray:
    red = RowReducer(spec, ncols)
    red.add(rows)
    return red.kernel()


def solve(a: MatFF, b: MatFF) -> MatFF | None:
    """One solution x of a @ x = b (b a column), or None when inconsistent."""
    _check(a, b)
    if b.rows != a.rows or b.cols != 1:
        raise DimensionMismatch(f"right-hand side {b.shape} for {a.shape}")
    aug = np.hstack([a.to_array(), b.to_array()])
    red = RowReducer(a.spec, a.cols + 1)
    red.add(aug)
    basis, pivots = red.rref()
    if a.cols in pivots:
        return None
    x = np.zeros(a.cols, dtype=np.int64)
    for row, j in zip(basis, pivots):
        x[j] = row[a.cols]
    return MatFF.from_array(a.spec, x.reshape(-1, 1))


def inverse(a: MatFF) -> MatFF:
    if a.rows != a.cols:
        raise NotSquare(f"{a.shape} is not square")
    n = a.rows
    red = RowReducer(a.spec, 2 * n)
    red.add(np.hstack([a.to_array(), np.eye(n, dtype=np.int64)]))
    basis, pivots = red.rref()
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ZeroDivisionError("singular matrix")
    return MatFF.from_array(a.spec, basis[:, n:])


def char_poly(a: MatFF) -> PolyFF:
    """det(tI - A) by Berkowitz's division-free algorithm."""
    if a.rows != a.cols:
        raise NotSquare(f"{a.shape} is not square")
    sp = a.spec
    n = a.rows
    A = [[a.data[i * n + j] for j in range(n)] for i in range(n)]
    add_, mul, neg = sp.add, sp.mul, sp.neg
    # descending coefficients of the char poly of the trailing (n-k)x(n-k) block
    poly = [1]
    for k in range(n - 1, -1, -1):
        m = n - k
        rvec = A[k][k + 1:]
        cvec = [A[i][k] for i in range(k + 1, n)]
        col = [1, neg(A[k][k])]
        v = cvec
        for _ in range(m - 1):
            col.append(neg(_dot(sp, rvec, v)))
            v = [_dot(sp, [A[i][j] for j in range(k + 1, n)], v) for i in range(k + 1, n)]
        new = []
        for i in range(m + 1):
            acc = 0
            for j in range(len(poly)):
                if 0 <= i - j < len(col):
                    acc = add_(acc, mul(col[i - j], poly[j]))
            new.append(acc)
        poly = new
    return PolyFF(sp, tuple(reversed(poly)))


def _dot(sp: FieldSpec, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = sp.add(acc, sp.mul(x, y))
    return acc


def determinant(a: MatFF) -> FieldElem:
    cp = char_poly(a)
    c0 = cp.values[0] if cp.values else 0
    return FieldElem(a.spec, c0 if a.rows % 2 == 0 else a.spec.neg(c0))


def poly_at_matrix(f: PolyFF, a: MatFF) -> MatFF:
    """Horner evaluation f(A)."""
    n = a.rows
    out = MatFF.zeros(a.spec, n, n)
    eye = identity(a.spec, n)
    for c in reversed(f.values):
        out = mat_mul(out, a) + scalar_mul(c, eye)
    return out


def roots_in_field(f: PolyFF) -> list[tuple[FieldElem, int]]:
    """All roots with multiplicity, by exhaustive evaluation."""
    if f.is_zero():
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    check_enumerable(f.spec.q)
    out = []
    sp = f.spec
    for x in sp.elements():
        if f(x):
            continue
        mult = 0
        g = f
        lin = PolyFF(sp, (sp.neg(x.value), 1))
        while g.degree >= 1:
            quo, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            g = quo
            mult += 1
        out.append((x, mult))
    return out


def eigenspace(a: MatFF, gamma) -> KernelBasis:
    gamma = a.spec.elem(gamma)
    return kernel(a - scalar_mul(gamma, identity(a.spec, a.rows)))


def stack(mats: Iterable[MatFF]) -> MatFF:
    mats = list(mats)
    spec = mats[0].spec
    return MatFF.from_array(spec, np.vstack([m.to_array() for m in mats]))
