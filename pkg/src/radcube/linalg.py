"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced to [0, p); the prime
lives in a shared :class:`PrimeField` context so that mixing moduli is
detected instead of silently producing garbage.  All outputs are canonical:
`rref` returns the unique reduced row-echelon form, `nullspace_basis` reads
its basis off the RREF (free variables in increasing column order, free
variable set to 1), and `solve` zeroes the free variables.  Downstream
computations are therefore reproducible bit for bit.

Only dense algorithms are provided; the intended problem sizes are desk
scale (up to a few thousand rows/columns).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PrimeField",
    "Mat",
    "RrefResult",
    "rref",
    "rank",
    "nullspace",
    "nullspace_basis",
    "solve",
    "solve_matrix",
]


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; bases {2,3,5,7} cover all n < 3.2e9,
    # which includes the admitted range p < 2**31.
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p, shared as context by every matrix of one computation."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not (2 <= p < 2**31):
            raise ValueError(f"modulus must be an integer in [2, 2^31), got {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def normalize(self, a: int) -> int:
        return int(a) % self.p

    def neg(self, a: int) -> int:
        return (-int(a)) % self.p

    def add(self, a: int, b: int) -> int:
        return (int(a) + int(b)) % self.p

    def mul(self, a: int, b: int) -> int:
        return (int(a) * int(b)) % self.p

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, -1, self.p)

    def asarray(self, data) -> np.ndarray:
        """Reduce arbitrary integer array data into [0, p) as int64."""
        arr = np.asarray(data, dtype=np.int64)
        return np.mod(arr, self.p)


class Mat:
    """An immutable rows x cols matrix over a fixed prime field."""

    __slots__ = ("field", "a")

    def __init__(self, field: PrimeField, data):
        self.field = field
        a = field.asarray(data)
        if a.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {a.shape}")
        a.setflags(write=False)
        self.a = a

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> "Mat":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "Mat":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def transpose(self) -> "Mat":
        return Mat(self.field, self.a.T)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.field != other.field:
            raise ValueError("matrices over different prime fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        return Mat(self.field, _matmul_mod(self.a, other.a, self.field.p))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __repr__(self) -> str:
        return f"Mat(p={self.field.p}, {self.a.tolist()})"


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64 products are exact as long as the accumulated dot products stay
    # below 2**63; chunk the inner dimension when p is large enough to risk
    # overflow.  For small p and large operands, a float64 GEMM is exact
    # (accumulants below 2**53) and runs at BLAS speed.
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.size + b.size >= 1 << 14 and (p - 1) ** 2 * inner < 1 << 53:
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return np.mod(prod, p).astype(np.int64)
    safe = (2**62) // max(1, (p - 1) ** 2)
    if inner <= safe:
        return np.mod(a @ b, p)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, safe)
    for k in range(0, inner, step):
        out = np.mod(out + a[:, k : k + step] @ b[k : k + step, :], p)
    return out


@dataclass(frozen=True)
class RrefResult:
    matrix: Mat
    rank: int
    pivots: tuple[int, ...]


def _rref_array_simple(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """In-place RREF of an int64 array already reduced mod p (reference)."""
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        pv = int(a[r, c])
        if pv != 1:
            a[r] = a[r] * pow(pv, -1, p) % p
        # Clear the entire column in one vectorized update; doing it at pivot
        # time leaves the matrix fully reduced at the end.
        col_all = a[:, c].copy()
        col_all[r] = 0
        hit = np.nonzero(col_all)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col_all[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


_PANEL = 96


def _rref_array_blocked(a_int: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Blocked RREF: identical output to the reference, BLAS-speed updates.

    Columns are eliminated in panels; within a panel, row operations touch
    only the panel columns while the multipliers are recorded, and the
    trailing columns get one matrix-product update per panel.  Everything
    runs in float64, which is exact here: entries stay in [0, p) and every
    accumulated product is bounded by p^2 * panel_width < 2^53 (the caller
    gates on p).  The RREF is unique, so blocking cannot change the result.
    """
    rows, cols = a_int.shape
    a = a_int.astype(np.float64)
    pivots: list[int] = []
    inv_cache: dict[int, int] = {}

    def inv(v: int) -> int:
        w = inv_cache.get(v)
        if w is None:
            w = pow(v, -1, p)
            inv_cache[v] = w
        return w

    r = 0
    c0 = 0
    fmat = np.zeros((rows, _PANEL), dtype=np.float64)
    while c0 < cols and r < rows:
        c1 = min(c0 + _PANEL, cols)
        fmat[:] = 0.0
        prow_idx: list[int] = []
        panel_pivots: list[int] = []
        pivvals: list[int] = []
        for c in range(c0, c1):
            if r == rows:
                break
            nz = np.nonzero(a[r:, c])[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i]] = a[[i, r]]
                fmat[[r, i]] = fmat[[i, r]]
            pv = int(a[r, c])
            if pv != 1:
                a[r, c0:c1] = np.mod(a[r, c0:c1] * inv(pv), p)
            k = len(panel_pivots)
            f = a[:, c].copy()
            f[r] = 0.0
            hit = np.nonzero(f)[0]
            if hit.size:
                a[hit, c0:c1] = np.mod(
                    a[hit, c0:c1] - np.outer(f[hit], a[r, c0:c1]), p
                )
            fmat[:, k] = f
            prow_idx.append(r)
            panel_pivots.append(c)
            pivvals.append(pv)
            r += 1
        k = len(panel_pivots)
        if k and c1 < cols:
            # Pivot rows were untouched beyond the panel; roll the recorded
            # multipliers forward (normalizing by the raw pivot values) to
            # recover their fully reduced trailing parts.
            t = a[prow_idx, c1:]
            z = np.empty_like(t)
            for j in range(k):
                acc = t[j]
                if j:
                    coefs = fmat[prow_idx[j], :j]
                    nzc = np.nonzero(coefs)[0]
                    if nzc.size:
                        acc = np.mod(acc - coefs[nzc] @ z[nzc], p)
                z[j] = np.mod(acc * inv(pivvals[j]), p) if pivvals[j] != 1 else acc
            fk = fmat[:, :k].copy()
            fk[prow_idx, :] = 0.0
            a[:, c1:] = np.mod(a[:, c1:] - fk @ z, p)
            # A placed pivot row still absorbs eliminations from the later
            # pivots of the same panel (z folded in only the earlier ones).
            zfinal = z.copy()
            for j in range(k - 1):
                coefs = fmat[prow_idx[j], j + 1 : k]
                nzc = np.nonzero(coefs)[0]
                if nzc.size:
                    zfinal[j] = np.mod(z[j] - coefs[nzc] @ z[j + 1 + nzc], p)
            a[prow_idx, c1:] = zfinal
        pivots.extend(panel_pivots)
        c0 = c1
    return a.astype(np.int64), pivots


def _rref_array(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Route between the reference and blocked RREF; same canonical output."""
    rows, cols = a.shape
    if p <= 1 << 20 and rows * cols >= 1 << 16 and rows > 4:
        return _rref_array_blocked(a, p)
    return _rref_array_simple(a, p)


def rref(m: Mat) -> RrefResult:
    """Unique reduced row-echelon form, with rank and pivot columns."""
    a, pivots = _rref_array(m.a.copy(), m.field.p)
    return RrefResult(Mat(m.field, a), len(pivots), tuple(pivots))


def rank(m: Mat) -> int:
    """Rank over F_p (forward elimination; blocked path for large inputs)."""
    a = m.a.copy()
    p = m.field.p
    rows, cols = a.shape
    if p <= 1 << 20 and rows * cols >= 1 << 16 and rows > 4:
        return len(_rref_array_blocked(a, p)[1])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        pv = int(a[r, c])
        inv = pow(pv, -1, p)
        below = a[r + 1 :, c]
        hit = np.nonzero(below)[0]
        if hit.size:
            factors = below[hit] * inv % p
            a[r + 1 + hit] = (a[r + 1 + hit] - np.outer(factors, a[r])) % p
        r += 1
    return r


def _nullspace_from_rref(red: np.ndarray, pivots: list[int], cols: int, p: int) -> np.ndarray:
    """Assemble the canonical kernel basis from a computed RREF."""
    pivset = set(pivots)
    free = np.array([c for c in range(cols) if c not in pivset], dtype=np.int64)
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    if len(free):
        basis[free, np.arange(len(free))] = 1
        if pivots:
            piv = np.array(pivots, dtype=np.int64)
            basis[piv[:, None], np.arange(len(free))[None, :]] = (
                -red[: len(pivots), :][:, free]
            ) % p
    return basis


def nullspace(m: Mat) -> tuple[Mat, list[int]]:
    """Canonical kernel basis plus the free-column index of each vector.

    For each free (non-pivot) column c, in increasing order, the basis
    vector has 1 in coordinate c, the negated RREF entries in the pivot
    coordinates, and 0 elsewhere.  Zero rows and zero columns of the input
    are pruned before elimination and the result re-embedded; this is a
    pure speedup and returns exactly the unpruned canonical basis.
    """
    a = m.a
    p = m.field.p
    n = a.shape[1]
    row_nz = np.nonzero(np.any(a != 0, axis=1))[0]
    col_nz = np.nonzero(np.any(a != 0, axis=0))[0]
    if len(row_nz) == a.shape[0] and len(col_nz) == n:
        red, pivots = _rref_array(a.copy(), p)
        free = [c for c in range(n) if c not in set(pivots)]
        return Mat(m.field, _nullspace_from_rref(red, pivots, n, p)), free
    red, core_pivots = _rref_array(a[np.ix_(row_nz, col_nz)].copy(), p)
    core_basis = _nullspace_from_rref(red, core_pivots, len(col_nz), p)
    pivset = {int(col_nz[c]) for c in core_pivots}
    col_nz_set = set(int(c) for c in col_nz)
    free = sorted(set(range(n)) - pivset)
    basis = np.zeros((n, n - len(pivset)), dtype=np.int64)
    ci = 0
    for k, c in enumerate(free):
        if c in col_nz_set:
            basis[col_nz, k] = core_basis[:, ci]
            ci += 1
        else:
            basis[c, k] = 1
    return Mat(m.field, basis), free


def nullspace_basis(m: Mat) -> Mat:
    """Basis of ker(m) as matrix columns, read off the RREF (see nullspace)."""
    return nullspace(m)[0]


def solve(m: Mat, b) -> np.ndarray | None:
    """Canonical solution of m @ x = b (free variables zero), or None.

    Raises ValueError on a length mismatch between b and the rows of m.
    """
    p = m.field.p
    bv = m.field.asarray(b).reshape(-1)
    if bv.shape[0] != m.rows:
        raise ValueError(f"rhs length {bv.shape[0]} != rows {m.rows}")
    aug = np.concatenate([m.a, bv[:, None]], axis=1)
    red, pivots = _rref_array(aug, p)
    if pivots and pivots[-1] == m.cols:
        return None  # pivot in the rhs column: inconsistent
    x = np.zeros(m.cols, dtype=np.int64)
    for r_i, pc in enumerate(pivots):
        x[pc] = red[r_i, m.cols]
    return x


def solve_matrix(m: Mat, rhs: Mat) -> Mat | None:
    """Columnwise canonical solve of m @ X = rhs; None if any column fails."""
    if m.field != rhs.field:
        raise ValueError("matrices over different prime fields")
    if rhs.rows != m.rows:
        raise ValueError(f"rhs rows {rhs.rows} != rows {m.rows}")
    p = m.field.p
    aug = np.concatenate([m.a, rhs.a], axis=1)
    red, pivots = _rref_array(aug, p)
    if pivots and pivots[-1] >= m.cols:
        return None
    x = np.zeros((m.cols, rhs.cols), dtype=np.int64)
    for r_i, pc in enumerate(pivots):
        x[pc] = red[r_i, m.cols :]
    return Mat(m.field, x)
