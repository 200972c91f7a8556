"""Exact integer polynomials in q and fraction-free linear algebra.

QPoly is a dense, canonical (no trailing zeros) coefficient list over
arbitrary-precision ints.  The matrix helpers are ring-generic: they work on
nested lists whose entries support +, -, * and exact //, so the same Bareiss
elimination serves both ZZ and ZZ[q].
"""

from fractions import Fraction


class QPoly:
    """Polynomial in q with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    # -- constructors

    @classmethod
    def const(cls, n: int) -> "QPoly":
        return cls((n,))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls((0,) * exp + (coeff,))

    @classmethod
    def from_exponent_counts(cls, counts: dict) -> "QPoly":
        if not counts:
            return cls()
        out = [0] * (max(counts) + 1)
        for e, c in counts.items():
            out[e] = c
        return cls(out)

    # -- structure

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, exp: int) -> int:
        return self.coeffs[exp] if 0 <= exp < len(self.coeffs) else 0

    def evaluate(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def is_self_reciprocal(self) -> bool:
        """Palindromic up to an overall sign (q^deg p(1/q) = +-p(q))."""
        rev = tuple(reversed(self.coeffs))
        return self.coeffs == rev or self.coeffs == tuple(-c for c in rev)

    # -- arithmetic

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        acc = QPoly((1,))
        for _ in range(n):
            acc = acc * self
        return acc

    def divmod(self, other):
        """Long division; requires the leading coefficient of the divisor to
        divide exactly at each step (always true for monic divisors)."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.leading_coefficient()
        quot = [0] * max(len(rem) - d, 0)
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            c, r = divmod(rem[-1], lead)
            if r != 0:
                raise ValueError("non-exact leading-coefficient division")
            shift = len(rem) - 1 - d
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] -= c * b
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("non-exact polynomial division")
        return q

    # -- comparison / hashing / display

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for exp, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if exp == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}q" if exp == 1 else f"{mag}q^{exp}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+" if c > 0 else "-") + term)
        return "".join(parts)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    raise TypeError(f"cannot coerce {type(x)!r} to QPoly")


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def qint(n: int) -> QPoly:
    """The q-integer [n] = 1 + q + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return QPoly((1,) * n)


def qfactorial(n: int) -> QPoly:
    """[n]! = [n][n-1]...[1]."""
    acc = ONE
    for k in range(2, n + 1):
        acc = acc * qint(k)
    return acc


def divide_out(p: QPoly, f: QPoly) -> tuple[int, QPoly]:
    """Largest k with f^k | p, together with p / f^k.

    f must be nonzero; p = 0 is rejected (every power divides it).
    """
    if f.is_zero():
        raise ValueError("divisor is zero")
    if p.is_zero():
        raise ValueError("cannot extract multiplicities from the zero polynomial")
    if f.degree() == 0:
        raise ValueError("constant divisor has no well-defined multiplicity")
    k = 0
    while True:
        q, r = p.divmod(f)
        if not r.is_zero():
            return k, p
        p = q
        k += 1


# ---------------------------------------------------------------------------
# exact matrix helpers (entries: int or QPoly)


def det_exact(matrix):
    """Exact determinant by fraction-free Bareiss elimination.

    Works over any integral domain whose elements support +, -, * and exact
    floor division (ints and QPoly both qualify); no rounding anywhere.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero_entry(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero_entry(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = m[k][k] * 0
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _is_zero_entry(x) -> bool:
    return x.is_zero() if isinstance(x, QPoly) else x == 0


def det_cofactor(matrix):
    """Naive cofactor expansion, the independent oracle for det_exact."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = matrix[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def rank_exact(matrix) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    if not matrix:
        return 0
    m = [list(row) for row in matrix]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for i in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) // prev
            m[i][col] = 0
        prev = m[row][col]
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def unimodular_inverse(matrix) -> list[list[int]]:
    """Exact inverse of an integer matrix with determinant +-1.

    Raises ValueError on non-unimodular input.
    """
    n = len(matrix)
    det = det_exact(matrix)
    if det not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {det})")
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    inv = [[x for x in row[n:]] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("inverse is not integral")
    return [[int(x) for x in row] for row in inv]


def solve_rational(matrix, rhs) -> list[Fraction]:
    """Solve a nonsingular rational linear system exactly."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n] for row in aug]


def kernel_basis(matrix) -> list[list[Fraction]]:
    """Basis of the right kernel of a rational matrix (reduced row echelon)."""
    if not matrix:
        return []
    m = [[Fraction(x) for x in row] for row in matrix]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for i in range(nrows):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis
