"""Row insertion, the RSK correspondence, Knuth equivalence, and the
sign-tracked correspondence behind the Kostka identity for the (h,h) table.

Elementary Knuth moves (bumping forms):
    (K')  y z x  <->  y x z   when x < y <= z
    (K'') x z y  <->  z x y   when x <= y < z
Both transpose two letters, so each move flips the word sign; the odd
plactic ring imposes the same relations with a coefficient of -1.
"""

from collections import namedtuple
from functools import lru_cache

from . import form
from .bases import kostka
from .combinat import (
    Tableau,
    matrices_with_margins,
    matrix_sign,
    partitions_of,
    shape_sign,
)

RskPair = namedtuple("RskPair", ["insertion", "recording"])


def row_insert(tab: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Schensted row insertion: bump the leftmost entry greater than x.

    Returns the new tableau and the (row, col) position of the added box,
    0-indexed.
    """
    rows = [list(r) for r in tab.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return Tableau(rows), (i, 0)
        row = rows[i]
        j = next((j for j, y in enumerate(row) if y > x), None)
        if j is None:
            row.append(x)
            return Tableau(rows), (i, len(row) - 1)
        row[j], x = x, row[j]
        i += 1


def insert_word(word) -> tuple[Tableau, int]:
    """Insert the letters of a word successively into the empty tableau.

    Returns the insertion tableau and the number of elementary Knuth moves
    performed: a bump through row j of current length L contributes L - 1.
    """
    tab = Tableau([])
    moves = 0
    for x in word:
        lengths = tab.shape
        new_tab, (r, _) = row_insert(tab, x)
        moves += sum(lengths[j] - 1 for j in range(r))
        tab = new_tab
    return tab, moves


def knuth_normalize(word) -> tuple[Tableau, int]:
    """The unique tableau whose row word is Knuth equivalent to the word,
    with the parity (0/1) of the number of elementary moves used."""
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    tab, moves = insert_word(word)
    return tab, moves % 2


def odd_plactic_reduce(word) -> tuple[int, tuple[int, ...]]:
    """Canonical signed form in the odd plactic ring: (sign, row word)."""
    tab, parity = knuth_normalize(word)
    return (-1 if parity else 1), tab.row_word()


def knuth_neighbors(word):
    """Words one elementary Knuth move away (either direction)."""
    word = tuple(word)
    out = set()
    for i in range(len(word) - 2):
        a, b, c = word[i : i + 3]
        # (K'): y z x <-> y x z
        y, z, x = a, b, c
        if x < y <= z:
            out.add(word[:i] + (y, x, z) + word[i + 3 :])
        y, x, z = a, b, c
        if x < y <= z:
            out.add(word[:i] + (y, z, x) + word[i + 3 :])
        # (K''): x z y <-> z x y
        x, z, y = a, b, c
        if x <= y < z:
            out.add(word[:i] + (z, x, y) + word[i + 3 :])
        z, x, y = a, b, c
        if x <= y < z:
            out.add(word[:i] + (x, z, y) + word[i + 3 :])
    out.discard(word)
    return sorted(out)


# ---------------------------------------------------------------------------
# RSK


def two_line_array(matrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Book-reading two-line array of an N-matrix; an entry k stands for k
    coincident unit entries."""
    u, v = [], []
    for i, row in enumerate(matrix):
        for j, a in enumerate(row):
            if a < 0:
                raise ValueError("matrix entries must be nonnegative")
            u.extend([i + 1] * a)
            v.extend([j + 1] * a)
    return tuple(u), tuple(v)


def rsk(matrix) -> RskPair:
    """RSK bijection.  The insertion tableau has the column sums as content,
    the recording tableau the row sums."""
    u, v = two_line_array(matrix)
    p = Tableau([])
    q_rows: list[list[int]] = []
    for uk, vk in zip(u, v):
        p, (r, _) = row_insert(p, vk)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(uk)
    return RskPair(p, Tableau(q_rows))


def odd_rsk_check(mu, rho) -> dict:
    """Sign-tracked RSK over one margin class.

    For each N-matrix with row margins mu and column margins rho checks
    sign(A) = shape_sign(shape) * sign(P) * sign(Q), that the map is a
    bijection onto same-shape SSYT pairs with contents (rho, mu), and that
    the signed count aggregates to the (h,h) table entry.
    """
    mu, rho = tuple(mu), tuple(rho)
    entries = []
    images = set()
    total = 0
    for a in matrices_with_margins(mu, rho):
        p, q = rsk(a)
        sa = matrix_sign(a)
        sp, sq = p.sign(), q.sign()
        ss = shape_sign(p.shape)
        ok = (
            sa == ss * sp * sq
            and p.shape == q.shape
            and p.is_semistandard()
            and q.is_semistandard()
            and p.content(len(rho)) == rho
            and q.content(len(mu)) == mu
        )
        total += sa
        images.add((p, q))
        entries.append(
            {
                "matrix": [list(r) for r in a],
                "P": p.to_lists(),
                "Q": q.to_lists(),
                "sign_A": sa,
                "sign_P": sp,
                "sign_Q": sq,
                "shape_sign": ss,
                "ok": ok,
            }
        )
    expected_pairs = {
        (p, q)
        for lam in partitions_of(sum(mu))
        for p in _ssyt_cached(lam, rho)
        for q in _ssyt_cached(lam, mu)
    }
    bijective = len(images) == len(entries) and images == expected_pairs
    aggregate = form.pair_h_at(mu, rho, -1)
    kostka_sum = sum(
        shape_sign(lam) * kostka(lam, mu) * kostka(lam, rho)
        for lam in partitions_of(sum(mu))
    )
    report = {
        "mu": mu,
        "rho": rho,
        "matrices": entries,
        "bijective": bijective,
        "aggregate_sign_count": total,
        "hh_entry": aggregate,
        "kostka_identity": kostka_sum,
        "ok": bijective
        and all(e["ok"] for e in entries)
        and total == aggregate == kostka_sum,
    }
    return report


@lru_cache(maxsize=None)
def _ssyt_cached(lam, content):
    from .combinat import ssyt

    return tuple(ssyt(lam, content))


def rsk_verify_degree(n: int) -> dict:
    """Exhaustive sign report over all partition-margin classes of weight n."""
    reports = []
    for mu in partitions_of(n):
        for rho in partitions_of(n):
            reports.append(odd_rsk_check(mu, rho))
    return {"degree": n, "ok": all(r["ok"] for r in reports), "classes": reports}
