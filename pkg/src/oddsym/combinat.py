"""Partitions, compositions, tableaux and the sign statistics built on them.

Partitions and compositions are plain tuples of positive ints (partitions
weakly decreasing).  Everything here is immutable and pure.
"""

from functools import lru_cache
from itertools import permutations


# ---------------------------------------------------------------------------
# partitions / compositions


def is_partition(seq) -> bool:
    parts = tuple(seq)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_composition(seq) -> bool:
    return all(p >= 1 for p in seq)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in ascending lexicographic order.

    The optional bound restricts the largest part.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(1, max_part + 1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All 2^(n-1) compositions of n in ascending lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return tuple(out)


def sort_to_partition(seq) -> tuple[int, ...]:
    return tuple(sorted(seq, reverse=True))


def transpose(lam) -> tuple[int, ...]:
    """Conjugate partition (column heights of the Young diagram)."""
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def triangular(k: int) -> int:
    """k(k+1)/2, the sign-governing statistic of the odd calculus."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return k * (k + 1) // 2


def triangular_sum(seq) -> int:
    return sum(triangular(a) for a in seq)


def dominates(lam, mu) -> bool:
    """Dominance partial order: prefix sums of lam >= those of mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return False
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def sw_ne_pairs(lam) -> int:
    """Number of box pairs of the Young diagram with one box strictly
    below and strictly left of the other.

    For rows i < k the pairs between them number lam_i*lam_k - T(lam_k),
    T the triangular number.
    """
    lam = tuple(lam)
    total = 0
    for i in range(len(lam)):
        for k in range(i + 1, len(lam)):
            total += lam[i] * lam[k] - triangular(lam[k])
    return total


def shape_sign(lam) -> int:
    """(-1)^(lam_2 + lam_4 + ...), equal to (-1)^(T(lam^T) + |lam|)."""
    return -1 if sum(lam[i] for i in range(1, len(lam), 2)) % 2 else 1


def reverse_sort_sign(lam) -> int:
    """Sign accrued sorting the reversed parts back into weakly decreasing
    order, counting -1 whenever an odd part passes an even part on its right.
    """
    rev = tuple(reversed(tuple(lam)))
    count = 0
    for i in range(len(rev)):
        for j in range(i + 1, len(rev)):
            if rev[i] < rev[j] and rev[i] % 2 == 1 and rev[j] % 2 == 0:
                count += 1
    return -1 if count % 2 else 1


def inversions(word) -> int:
    """Strict inversions of a finite sequence."""
    word = tuple(word)
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def word_sign(word) -> int:
    """Sign of the minimal-length permutation sorting word ascending."""
    return -1 if inversions(word) % 2 else 1


# ---------------------------------------------------------------------------
# tableaux


class Tableau:
    """Semistandard Young tableau with rows stored as tuples of ints.

    Row entries weakly increase, column entries strictly increase; row 1 is
    the top (longest) row.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def content(self, width: int | None = None) -> tuple[int, ...]:
        """Multiplicity vector of the entries 1..width."""
        if width is None:
            width = max((x for r in self.rows for x in r), default=0)
        counts = [0] * width
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def row_word(self) -> tuple[int, ...]:
        """Entries read left to right, bottom row to top row."""
        out = []
        for r in reversed(self.rows):
            out.extend(r)
        return tuple(out)

    def sign(self) -> int:
        return word_sign(self.row_word())

    def is_semistandard(self) -> bool:
        if not is_partition(self.shape):
            return False
        for r in self.rows:
            if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
                return False
            if any(x < 1 for x in r):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


def superstandard(lam) -> Tableau:
    """The unique SSYT with shape and content both lam (row i filled with i)."""
    return Tableau([(i + 1,) * p for i, p in enumerate(lam)])


def ssyt(shape, content) -> list[Tableau]:
    """All semistandard Young tableaux of the given shape and content.

    Cells are filled in row-major order by backtracking; output order is
    deterministic (lexicographic in the filling).
    """
    shape = tuple(shape)
    content = tuple(content)
    if sum(shape) != sum(content):
        raise ValueError("shape and content have different weights")
    if not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    remaining = list(content)
    rows = [[0] * p for p in shape]
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    found: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            found.append(Tableau(rows))
            return
        i, j = cells[pos]
        lo = rows[i][j - 1] if j > 0 else 1
        lo = max(lo, rows[i - 1][j] + 1 if i > 0 else 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            rows[i][j] = v
            fill(pos + 1)
            rows[i][j] = 0
            remaining[v - 1] += 1

    fill(0)
    return found


# ---------------------------------------------------------------------------
# matrices with prescribed margins


def matrices_with_margins(row_sums, col_sums, zero_one: bool = False):
    """All N-matrices (or {0,1}-matrices) with the given row and column sums.

    Deterministic order: rows are filled top to bottom, each row enumerated
    lexicographically.  Raises on mismatched margin weights.
    """
    row_sums, col_sums = tuple(row_sums), tuple(col_sums)
    if sum(row_sums) != sum(col_sums):
        raise ValueError("row and column margins have different weights")
    ncols = len(col_sums)
    out = []

    def fill_row(i: int, rows_acc, col_left):
        if i == len(row_sums):
            if all(c == 0 for c in col_left):
                out.append(tuple(rows_acc))
            return
        target = row_sums[i]

        def fill_cell(j: int, row_acc, left):
            if j == ncols:
                if left == 0:
                    fill_row(
                        i + 1,
                        rows_acc + [tuple(row_acc)],
                        [col_left[k] - row_acc[k] for k in range(ncols)],
                    )
                return
            cap = min(left, col_left[j])
            if zero_one:
                cap = min(cap, 1)
            for v in range(cap + 1):
                fill_cell(j + 1, row_acc + [v], left - v)

        fill_cell(0, [], target)

    fill_row(0, [], list(col_sums))
    return out


def matrix_inv(matrix) -> int:
    """Sum over SW-NE entry pairs of the product of the two entries."""
    total = 0
    rows = len(matrix)
    for k in range(rows):
        for l, a in enumerate(matrix[k]):
            if a == 0:
                continue
            above_right = sum(
                matrix[i][j] for i in range(k) for j in range(l + 1, len(matrix[i]))
            )
            total += a * above_right
    return total


def matrix_sign(matrix) -> int:
    return -1 if matrix_inv(matrix) % 2 else 1


def cable_sign(matrix) -> int:
    """Product over entries a of (-1)^T(a-1)."""
    total = sum(triangular(a - 1) for row in matrix for a in row if a >= 1)
    return -1 if total % 2 else 1


# ---------------------------------------------------------------------------
# misc enumeration helpers


def permutations_of_degree(n: int):
    """All of S_n as one-line tuples on 1..n."""
    return permutations(range(1, n + 1))
