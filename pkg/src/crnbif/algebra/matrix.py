"""Small exact matrices.

Entries are Fractions by default, but the elimination routines only use
field operations, so quadratic-field numbers work as well.  The rank used
throughout the package comes from fraction-free (Bareiss) elimination on
an integer-scaled copy; :meth:`ExactMatrix.rank_rref` is an independent
row-reduction with a different pivot rule, kept for cross-checking.
"""
from fractions import Fraction
from math import lcm


def _is_zero(x):
    return x == 0


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols=None, data=None):
        """Build from a list of rows, or from (rows, cols, flat row-major data)."""
        if cols is None:
            rws = [list(r) for r in rows]
            self.rows = len(rws)
            self.cols = len(rws[0]) if rws else 0
            if any(len(r) != self.cols for r in rws):
                raise ValueError("ragged rows")
            self.data = [_coerce(x) for r in rws for x in r]
        else:
            self.rows, self.cols = rows, cols
            self.data = [_coerce(x) for x in data]
            if len(self.data) != rows * cols:
                raise ValueError("entry count does not match shape")

    # -- construction helpers --------------------------------------------
    @classmethod
    def zeros(cls, r, c):
        return cls(r, c, [0] * (r * c))

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def hstack(cls, *ms):
        rows = [sum((m.row(i) for m in ms), []) for i in range(ms[0].rows)]
        return cls(rows)

    @classmethod
    def vstack(cls, *ms):
        return cls([r for m in ms for r in m.tolist()])

    # -- access -----------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return list(self.data[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return "ExactMatrix(" + repr([[str(x) for x in r] for r in self.tolist()]) + ")"

    def T(self):
        return ExactMatrix([self.col(j) for j in range(self.cols)])

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            oc = [other.col(j) for j in range(other.cols)]
            return ExactMatrix([[sum((a * b for a, b in zip(self.row(i), c)), Fraction(0)) for c in oc]
                                for i in range(self.rows)])
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((a * b for a, b in zip(self.row(i), vec)), Fraction(0)) for i in range(self.rows)]

    def __sub__(self, other):
        return ExactMatrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __add__(self, other):
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def scale(self, s):
        return ExactMatrix(self.rows, self.cols, [a * s for a in self.data])

    # -- elimination ------------------------------------------------------
    def rank(self):
        """Rank via fraction-free Bareiss elimination (rational entries only)."""
        if not all(isinstance(x, (int, Fraction)) for x in self.data):
            return self.rank_rref()
        rows = []
        for r in self.tolist():
            den = 1
            for x in r:
                den = lcm(den, Fraction(x).denominator)
            rows.append([int(Fraction(x) * den) for x in r])
        return bareiss_rank(rows)

    def rank_rref(self):
        """Rank by Gauss-Jordan elimination choosing the last nonzero pivot."""
        return len(rref(self.tolist(), pivot="last")[1])

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.tolist()]
        n = self.rows
        d = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if not _is_zero(m[i][k])), None)
            if p is None:
                return Fraction(0)
            if p != k:
                m[k], m[p] = m[p], m[k]
                d = -d
            d = d * m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                f = m[i][k] * inv
                if not _is_zero(f):
                    for j in range(k, n):
                        m[i][j] = m[i][j] - f * m[k][j]
        return d

    def inverse(self):
        n = self.rows
        if n != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [r + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.tolist())]
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return ExactMatrix([r[n:] for r in red])

    def nullspace(self):
        """Basis of the right kernel, one vector per free column."""
        red, piv = rref(self.tolist())
        free = [j for j in range(self.cols) if j not in piv]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for i, pc in enumerate(piv):
                v[pc] = -red[i][f]
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution of M x = b (None when inconsistent)."""
        aug = [r + [bi] for r, bi in zip(self.tolist(), b)]
        red, piv = rref(aug)
        if self.cols in piv:
            return None
        x = [Fraction(0)] * self.cols
        for i, pc in enumerate(piv):
            x[pc] = red[i][-1]
        return x


def _coerce(x):
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    return x


def bareiss_rank(rows):
    """Rank of an integer matrix by one-step fraction-free elimination."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(rank, nr) if m[i][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (piv * m[i][j] - m[i][c] * m[rank][j]) // prev
            m[i][c] = 0
        prev = piv
        rank += 1
        if rank == nr:
            break
    return rank


def rref(rows, pivot="first"):
    """Reduced row echelon form over a field; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    piv = []
    r = 0
    for c in range(nc):
        cands = [i for i in range(r, nr) if not _is_zero(m[i][c])]
        if not cands:
            continue
        p = cands[0] if pivot == "first" else cands[-1]
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
        if r == nr:
            break
    return m, piv


def rank_generic(rows):
    """Rank over any exact field whose elements support ``== 0`` and division."""
    return len(rref(rows)[1])
