"""The quotient ring at q = -1: normal forms on the partition-indexed
h-basis, product, coproduct, pairing and h/e conversions.

Normal form = weakly decreasing subscripts.  Straightening rewrites the
leftmost ascent h_a h_b (a < b): an even-degree pair commutes, an odd-degree
pair is replaced through the relation

    h_a h_b = (-1)^a h_b h_a + h_{b+1} h_{a-1} - (-1)^a h_{a-1} h_{b+1}

recursing on the last term until the left subscript reaches 1, where
h_1 h_m = 2 h_{m+1} - h_m h_1 (m even).  Every replacement word is strictly
lexicographically larger, so the rewriting terminates.

Straightening is cross-validated against an independent route: solve
M' c = [(h_mu, w)]_mu, with M' the partition Gram matrix (determinant +-1).
"""

from functools import lru_cache

from . import form
from .combinat import is_partition, partitions_of, transpose
from .polyq import unimodular_inverse


@lru_cache(maxsize=None)
def _ascent_expansion(a: int, b: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """h_a h_b (a < b) as a combination of lex-larger words."""
    if a >= b:
        raise ValueError("not an ascent")
    if (a + b) % 2 == 0:
        return ((1, (b, a)),)
    if a == 1:
        return ((2, (b + 1,)), (-1, (b, 1)))
    sign = -1 if a % 2 else 1
    terms = [(sign, (b, a)), (1, (b + 1, a - 1))]
    for coeff, word in _ascent_expansion(a - 1, b + 1):
        terms.append((-sign * coeff, word))
    merged: dict[tuple[int, ...], int] = {}
    for coeff, word in terms:
        merged[word] = merged.get(word, 0) + coeff
    return tuple((c, w) for w, c in merged.items() if c)


@lru_cache(maxsize=None)
def normalize_word(word: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Image of a free h-word in the partition basis, as (partition, coeff)
    pairs."""
    word = tuple(word)
    if any(n < 1 for n in word):
        raise ValueError("letters must be positive")
    i = next((i for i in range(len(word) - 1) if word[i] < word[i + 1]), None)
    if i is None:
        return ((word, 1),)
    out: dict[tuple[int, ...], int] = {}
    for coeff, repl in _ascent_expansion(word[i], word[i + 1]):
        for part, c in normalize_word(word[:i] + repl + word[i + 2 :]):
            out[part] = out.get(part, 0) + coeff * c
    return tuple(sorted((p, c) for p, c in out.items() if c))


class OddElt:
    """Element of the quotient ring in normal form: a finite integer
    combination of partition-indexed h-basis vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for part, coeff in (terms or {}).items():
            part = tuple(part)
            if not is_partition(part):
                raise ValueError(f"not a partition: {part}")
            if coeff:
                clean[part] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "OddElt":
        return cls()

    @classmethod
    def one(cls) -> "OddElt":
        return cls({(): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            other = OddElt({(): other})
        return isinstance(other, OddElt) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) + c
        return OddElt(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) - c
        return OddElt(out)

    def __neg__(self):
        return OddElt({p: -c for p, c in self.terms.items()})

    def scale(self, k: int) -> "OddElt":
        return OddElt({p: k * c for p, c in self.terms.items()})

    def __rmul__(self, k):
        if isinstance(k, int):
            return self.scale(k)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, ...], int] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                for part, c in normalize_word(p1 + p2):
                    out[part] = out.get(part, 0) + c1 * c2 * c
        return OddElt(out)

    def degrees(self) -> set[int]:
        return {sum(p) for p in self.terms}

    def component(self, n: int) -> "OddElt":
        return OddElt({p: c for p, c in self.terms.items() if sum(p) == n})

    def coefficient(self, part) -> int:
        return self.terms.get(tuple(part), 0)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def to_json_dict(self) -> dict:
        return {",".join(map(str, p)): c for p, c in sorted(self.terms.items())}

    @classmethod
    def from_json_dict(cls, d: dict) -> "OddElt":
        terms = {}
        for key, coeff in d.items():
            part = tuple(int(x) for x in key.split(",")) if key else ()
            terms[part] = coeff
        return cls(terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for p, c in sorted(self.terms.items()):
            label = "h(" + ",".join(map(str, p)) + ")" if p else "1"
            if c == 1:
                bits.append(f"+{label}")
            elif c == -1:
                bits.append(f"-{label}")
            else:
                bits.append(f"{c:+d}*{label}")
        s = " ".join(bits)
        return s[1:] if s.startswith("+") else s


def h_elt(parts) -> OddElt:
    """Image of the h-word with the given subscripts (any order)."""
    return OddElt(dict(normalize_word(tuple(parts))))


def normalize(terms) -> OddElt:
    """Image in the quotient of a formal combination of free h-words."""
    if isinstance(terms, tuple):
        terms = {terms: 1}
    out: dict[tuple[int, ...], int] = {}
    for word, coeff in terms.items():
        if not coeff:
            continue
        for part, c in normalize_word(tuple(word)):
            out[part] = out.get(part, 0) + coeff * c
    return OddElt(out)


@lru_cache(maxsize=None)
def e_letter(n: int) -> OddElt:
    """e_n in the h-basis, through its canonical word expansion."""
    return normalize(form.e_expansion(n))


def e_elt(parts) -> OddElt:
    out = OddElt.one()
    for p in parts:
        out = out * e_letter(p)
    return out


# ---------------------------------------------------------------------------
# pairing and the Gram route


@lru_cache(maxsize=None)
def gram_h(n: int) -> tuple[tuple[int, ...], ...]:
    """Partition-basis Gram matrix (h_lam, h_mu) at q = -1, ascending lex."""
    parts = partitions_of(n)
    return tuple(
        tuple(form.pair_h_at(lam, mu, -1) for mu in parts) for lam in parts
    )


@lru_cache(maxsize=None)
def gram_h_inverse(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in unimodular_inverse([list(r) for r in gram_h(n)]))


def pair(x: OddElt, y: OddElt) -> int:
    """Bilinear form on the quotient."""
    total = 0
    for p1, c1 in x.terms.items():
        for p2, c2 in y.terms.items():
            if sum(p1) == sum(p2):
                total += c1 * c2 * form.pair_h_at(p1, p2, -1)
    return total


def normalize_via_gram(terms) -> OddElt:
    """Independent normal-form route: coefficients solve M' c = [(h_mu, w)].

    Accepts combinations of colored words (h- and e-letters), or of plain
    h-words given as integer tuples.
    """
    if isinstance(terms, tuple):
        terms = {terms: 1}
    colored: dict = {}
    for word, coeff in terms.items():
        word = tuple(word)
        if word and not isinstance(word[0], tuple):
            word = form.h_word(word)
        colored[word] = colored.get(word, 0) + coeff
    by_degree: dict[int, dict] = {}
    for word, coeff in colored.items():
        by_degree.setdefault(form.word_degree(word), {})[word] = coeff
    out: dict[tuple[int, ...], int] = {}
    for n, chunk in by_degree.items():
        parts = partitions_of(n)
        v = [form.pair_words_odd(form.h_word(mu), chunk) for mu in parts]
        inv = gram_h_inverse(n)
        for i, lam in enumerate(parts):
            c = sum(inv[i][j] * v[j] for j in range(len(parts)))
            if c:
                out[lam] = out.get(lam, 0) + c
    return OddElt(out)


# ---------------------------------------------------------------------------
# coproduct


@lru_cache(maxsize=None)
def _coproduct_word(word: tuple[int, ...]) -> tuple:
    """Coproduct of a single h-word as ((left, right), coeff) pairs."""
    acc: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {((), ()): 1}
    for letter in word:
        new: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for (left, right), c in acc.items():
            deg_right = sum(right)
            for m in range(letter + 1):
                sign = -1 if (deg_right * m) % 2 else 1
                lefts = normalize_word(left + (m,)) if m else ((left, 1),)
                rights = (
                    normalize_word(right + (letter - m,))
                    if letter - m
                    else ((right, 1),)
                )
                for lp, lc in lefts:
                    for rp, rc in rights:
                        key = (lp, rp)
                        new[key] = new.get(key, 0) + c * sign * lc * rc
        acc = {k: v for k, v in new.items() if v}
    return tuple(acc.items())


def coproduct(x: OddElt) -> dict:
    """Coproduct into the tensor square, components in normal form.

    Returns a dict (partition, partition) -> integer.  The braiding at
    q = -1 contributes (-1)^(deg(x2) * m) when a letter h_m multiplies into
    the left slot past x2.
    """
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
    for word, coeff in x.terms.items():
        for key, c in _coproduct_word(word):
            out[key] = out.get(key, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def pair_tensor(left: dict, y1: OddElt, y2: OddElt) -> int:
    """Pair a tensor-square element against y1 (x) y2, component-wise."""
    total = 0
    for (p1, p2), c in left.items():
        total += c * pair(OddElt({p1: 1}), y1) * pair(OddElt({p2: 1}), y2)
    return total


# ---------------------------------------------------------------------------
# e-basis coordinates


@lru_cache(maxsize=None)
def _e_change_of_basis(n: int):
    """Matrix with row lam = e_lam in h-coordinates, plus its inverse."""
    parts = partitions_of(n)
    idx = {p: i for i, p in enumerate(parts)}
    mat = []
    for lam in parts:
        elt = e_elt(lam)
        row = [0] * len(parts)
        for p, c in elt.terms.items():
            row[idx[p]] = c
        mat.append(row)
    inv = unimodular_inverse(mat)
    return parts, tuple(map(tuple, mat)), tuple(map(tuple, inv))


def e_coordinates(x: OddElt) -> dict:
    """Coordinates of x in the e-basis, keyed by partition."""
    out: dict[tuple[int, ...], int] = {}
    for n in x.degrees():
        parts, _, inv = _e_change_of_basis(n)
        idx = {p: i for i, p in enumerate(parts)}
        v = [0] * len(parts)
        for p, c in x.component(n).terms.items():
            v[idx[p]] = c
        # x = sum_j v_j h_j, h = E^{-1} applied on coordinates: x = c^T E
        for i, lam in enumerate(parts):
            c = sum(v[j] * inv[j][i] for j in range(len(parts)))
            if c:
                out[lam] = c
    return out


def from_e_coordinates(coords: dict) -> OddElt:
    out = OddElt.zero()
    for lam, c in coords.items():
        out = out + e_elt(tuple(lam)).scale(c)
    return out


# ---------------------------------------------------------------------------
# semi-orthogonality report


def semiorthogonality_check(n: int) -> dict:
    """Check (h_lam, e_lam^T) = (-1)^(sw-ne pairs) and the vanishing
    (h_lam, e_alpha) = (e_lam, h_alpha) = 0 for alpha > lam^T lexicographic.
    """
    from .combinat import compositions_of, sw_ne_pairs

    failures = []
    for lam in partitions_of(n):
        lt = transpose(lam)
        want = -1 if sw_ne_pairs(lam) % 2 else 1
        got = form.pair_words_odd(form.h_word(lam), form.e_word(lt))
        if got != want:
            failures.append({"lambda": lam, "kind": "diagonal", "got": got, "want": want})
        for alpha in compositions_of(n):
            if alpha > lt:
                he = form.pair_words_odd(form.h_word(lam), form.e_word(alpha))
                eh = form.pair_words_odd(form.e_word(lam), form.h_word(alpha))
                if he != 0 or eh != 0:
                    failures.append(
                        {"lambda": lam, "alpha": alpha, "kind": "vanishing",
                         "he": he, "eh": eh}
                    )
    return {"degree": n, "ok": not failures, "failures": failures}
