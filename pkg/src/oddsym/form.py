"""Bilinear form on free h/e-words, computed by margin-matrix enumeration.

The generic-q pairing of two h-words sums q^inv(A) over N-matrices A whose
row margins are the left word and whose column margins the right word, inv
counting SW-NE entry pairs.  At q = -1 colored words (e-letters = black
platforms) follow the same scheme with two extra rules: an entry joining a
black and a white platform is at most 1, and an entry a joining two black
platforms carries the cable sign (-1)^T(a-1).

The enumeration runs row by row, memoized on the remaining margins, so whole
Gram tables cost little more than their largest entry.
"""

from functools import lru_cache
from itertools import permutations

from .combinat import compositions_of, triangular
from .polyq import QPoly

H = "h"
E = "e"

Word = tuple[tuple[int, str], ...]


def h_word(parts) -> Word:
    return tuple((p, H) for p in parts)


def e_word(parts) -> Word:
    return tuple((p, E) for p in parts)


def word_degree(word: Word) -> int:
    return sum(n for n, _ in word)


# ---------------------------------------------------------------------------
# generic-q pairing of h-words


def _row_fillings(total: int, caps: tuple[int, ...], max_entry=None):
    """All ways to fill one row: vectors 0 <= m_j <= caps[j] (and <= max_entry
    where the colors differ) summing to total, with the exponent contributed
    by SW-NE pairs between this row and everything below it.

    Yields (m, exponent_increment).
    """
    ncols = len(caps)

    def rec(j: int, left: int, acc: list[int]):
        if j == ncols:
            if left == 0:
                m = tuple(acc)
                exp = 0
                for jj in range(ncols):
                    if m[jj]:
                        below_left = sum(caps[t] - m[t] for t in range(jj))
                        exp += below_left * m[jj]
                yield m, exp
            return
        cap = min(left, caps[j])
        if max_entry is not None and max_entry[j] is not None:
            cap = min(cap, max_entry[j])
        for v in range(cap + 1):
            acc.append(v)
            yield from rec(j + 1, left - v, acc)
            acc.pop()

    yield from rec(0, total, [])


@lru_cache(maxsize=None)
def _pair_h(beta: tuple[int, ...], alpha: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Exponent/count pairs of the generic pairing (h_beta, h_alpha)."""
    if not beta:
        return ((0, 1),) if not alpha else ()
    if sum(beta) != sum(alpha):
        return ()
    counts: dict[int, int] = {}
    b, rest = beta[0], beta[1:]
    for m, exp in _row_fillings(b, alpha):
        reduced = tuple(a - x for a, x in zip(alpha, m) if a - x > 0)
        for sub_exp, sub_count in _pair_h(rest, reduced):
            e = exp + sub_exp
            counts[e] = counts.get(e, 0) + sub_count
    return tuple(sorted(counts.items()))


def pair_h_generic(beta, alpha) -> QPoly:
    """(h_beta, h_alpha) at generic q; zero when the degrees differ."""
    return QPoly.from_exponent_counts(dict(_pair_h(tuple(beta), tuple(alpha))))


def pair_h_at(beta, alpha, q: int) -> int:
    """(h_beta, h_alpha) specialized at an integer q."""
    return sum(c * q**e for e, c in _pair_h(tuple(beta), tuple(alpha)))


# ---------------------------------------------------------------------------
# colored pairing at q = -1


@lru_cache(maxsize=None)
def _pair_colored(beta: Word, alpha: Word) -> int:
    if not beta:
        return 1 if not alpha else 0
    if word_degree(beta) != word_degree(alpha):
        return 0
    (b, bcol), rest = beta[0], beta[1:]
    caps = tuple(n for n, _ in alpha)
    col_colors = tuple(c for _, c in alpha)
    max_entry = tuple(1 if c != bcol else None for c in col_colors)
    total = 0
    for m, exp in _row_fillings(b, caps, max_entry):
        sign = -1 if exp % 2 else 1
        if bcol == E:
            cables = sum(
                triangular(m[j] - 1) for j in range(len(m)) if m[j] and col_colors[j] == E
            )
            if cables % 2:
                sign = -sign
        reduced = tuple(
            (caps[j] - m[j], col_colors[j]) for j in range(len(m)) if caps[j] - m[j] > 0
        )
        total += sign * _pair_colored(rest, reduced)
    return total


def pair_words_odd(y, x) -> int:
    """q = -1 pairing, bilinear over formal combinations of colored words.

    Accepts single words or dicts word -> integer coefficient.
    """
    y_terms = y if isinstance(y, dict) else {tuple(y): 1}
    x_terms = x if isinstance(x, dict) else {tuple(x): 1}
    total = 0
    for wy, cy in y_terms.items():
        for wx, cx in x_terms.items():
            if cy and cx:
                total += cy * cx * _pair_colored(tuple(wy), tuple(wx))
    return total


# ---------------------------------------------------------------------------
# e-letters as h-word combinations


@lru_cache(maxsize=None)
def e_expansion(n: int) -> dict:
    """The canonical lift of e_n to signed h-words:
    (-1)^T(n) * sum over compositions a of n of (-1)^len(a) h_a.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return {(): 1}
    outer = -1 if triangular(n) % 2 else 1
    return {
        alpha: outer * (-1 if len(alpha) % 2 else 1) for alpha in compositions_of(n)
    }


def expand_colored_word(word: Word) -> dict:
    """Rewrite every e-letter of a colored word through its h-expansion."""
    terms = {(): 1}
    for n, color in word:
        factor = e_expansion(n) if color == E else {(n,): 1}
        new: dict = {}
        for w, c in terms.items():
            for fw, fc in factor.items():
                key = w + fw
                new[key] = new.get(key, 0) + c * fc
        terms = new
    return terms


def pair_words_generic(y: Word, x: Word) -> QPoly:
    """Generic-q pairing of colored words, via e-expansion into h-words."""
    total = QPoly()
    for wy, cy in expand_colored_word(tuple(y)).items():
        for wx, cx in expand_colored_word(tuple(x)).items():
            total = total + cy * cx * pair_h_generic(wy, wx)
    return total


# ---------------------------------------------------------------------------
# descent compositions and the platform-restricted form


def descent_composition(sigma) -> tuple[int, ...]:
    """Composition of n whose partial sums are the descent set of sigma
    (one-line notation on 1..n)."""
    sigma = tuple(sigma)
    n = len(sigma)
    descents = [k for k in range(1, n) if sigma[k - 1] > sigma[k]]
    parts = []
    prev = 0
    for d in descents + [n]:
        parts.append(d - prev)
        prev = d
    return tuple(p for p in parts if p)


def refinements(alpha) -> list[tuple[int, ...]]:
    """All compositions refining alpha (alpha itself included)."""
    alpha = tuple(alpha)
    out = [()]
    for part in alpha:
        out = [pre + comp for pre in out for comp in compositions_of(part)]
    return out


def coarsenings(alpha) -> list[tuple[int, ...]]:
    """All compositions obtained by merging adjacent parts of alpha."""
    alpha = tuple(alpha)
    if not alpha:
        return [()]
    out = []

    def rec(i: int, acc: list[int]):
        if i == len(alpha):
            out.append(tuple(acc))
            return
        acc.append(alpha[i])
        rec(i + 1, acc)
        acc.pop()
        if acc:
            acc[-1] += alpha[i]
            rec(i + 1, acc)
            acc[-1] -= alpha[i]

    rec(0, [])
    return out


def htilde_expansion(alpha) -> dict:
    """h-tilde basis element as a signed sum of coarser h-words."""
    alpha = tuple(alpha)
    la = len(alpha)
    return {beta: (-1) ** (la - len(beta)) for beta in coarsenings(alpha)}


@lru_cache(maxsize=None)
def _htilde_table_permutations(n: int) -> dict:
    """dict (beta, alpha) -> QPoly from one sweep of S_n: the pairing
    sums q^length(sigma) over sigma with descent composition alpha and
    inverse descent composition beta."""
    table: dict = {}
    for sigma in permutations(range(1, n + 1)):
        alpha = descent_composition(sigma)
        inv_sigma = [0] * n
        for i, v in enumerate(sigma):
            inv_sigma[v - 1] = i + 1
        beta = descent_composition(inv_sigma)
        length = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if sigma[i] > sigma[j]
        )
        counts = table.setdefault((beta, alpha), {})
        counts[length] = counts.get(length, 0) + 1
    return {key: QPoly.from_exponent_counts(c) for key, c in table.items()}


def pair_htilde_permutations(beta, alpha) -> QPoly:
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        return QPoly()
    return _htilde_table_permutations(sum(alpha)).get((beta, alpha), QPoly())


def pair_htilde_inclusion_exclusion(beta, alpha) -> QPoly:
    total = QPoly()
    for b, cb in htilde_expansion(beta).items():
        for a, ca in htilde_expansion(alpha).items():
            total = total + cb * ca * pair_h_generic(b, a)
    return total


HTILDE_DEGREE_BOUND = 9


def pair_htilde(beta, alpha) -> QPoly:
    """Pairing of h-tilde elements, computed by both the permutation route
    and the inclusion-exclusion route; they must agree."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(alpha) > HTILDE_DEGREE_BOUND or sum(beta) > HTILDE_DEGREE_BOUND:
        raise ValueError(f"degree bound {HTILDE_DEGREE_BOUND} exceeded")
    via_perm = pair_htilde_permutations(beta, alpha)
    via_ie = pair_htilde_inclusion_exclusion(beta, alpha)
    if via_perm != via_ie:
        raise AssertionError(
            f"h-tilde pairing routes disagree at ({beta}, {alpha}): "
            f"{via_perm} vs {via_ie}"
        )
    return via_perm
