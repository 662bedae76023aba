"""Symmetric group combinatorics in one-line notation.

A permutation of rank n is a tuple ``w`` of length n whose entries are
1..n in some order, with ``w[t-1]`` the image of t.  Composition is
function composition: ``compose(a, b)`` sends t to a(b(t)).  Lengths are
inversion counts, and the Bruhat order is decided by the rank-matrix
criterion, so no reduced words are ever built.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Perm = tuple[int, ...]


def is_perm(seq: Sequence[int]) -> bool:
    """Whether ``seq`` is a permutation of 1..len(seq).

    >>> is_perm((2, 1, 3))
    True
    >>> is_perm((2, 2, 3))
    False
    """
    return sorted(seq) == list(range(1, len(seq) + 1))


def check_perm(seq: Sequence[int]) -> Perm:
    """Return ``seq`` as a tuple, raising ValueError if it is not a permutation."""
    w = tuple(seq)
    if not is_perm(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    """The identity permutation of rank n."""
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The order-reversing permutation [n, n-1, ..., 1].

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    return tuple(range(n, 0, -1))


def compose(a: Sequence[int], b: Sequence[int]) -> Perm:
    """The composite sending t to a(b(t)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    return tuple(a[t - 1] for t in b)


def inverse(a: Sequence[int]) -> Perm:
    """The inverse permutation.

    >>> inverse((4, 1, 2, 3))
    (2, 3, 4, 1)
    """
    out = [0] * len(a)
    for t, v in enumerate(a, start=1):
        out[v - 1] = t
    return tuple(out)


def length(a: Sequence[int]) -> int:
    """Coxeter length, the number of inversions.

    >>> length((4, 1, 2, 3))
    3
    >>> length((1, 2, 3))
    0
    """
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def rank_table(w: Sequence[int]) -> tuple[int, ...]:
    """Flattened table with entry (i, j) counting {t <= i : w(t) >= j}.

    Entries are stored row by row, i and j both running 1..n.
    """
    n = len(w)
    row = [0] * (n + 1)
    out: list[int] = []
    for v in w:
        for j in range(1, v + 1):
            row[j] += 1
        out.extend(row[1:])
    return tuple(out)


def table_leq(ta: Sequence[int], tb: Sequence[int]) -> bool:
    """Entrywise <= of two rank tables."""
    return all(x <= y for x, y in zip(ta, tb))


def bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Whether u <= v in the Bruhat order (rank-matrix criterion).

    >>> bruhat_leq((1, 3, 2), (3, 1, 2))
    True
    >>> bruhat_leq((3, 1, 2), (1, 3, 2))
    False
    """
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    return table_leq(rank_table(u), rank_table(v))


def position_blocks(n: int, roots: Iterable[int]) -> list[range]:
    """Maximal runs of positions glued by the adjacent transpositions in ``roots``.

    ``roots`` is a subset of 1..n-1; root i glues positions i and i+1.

    >>> position_blocks(4, {1, 3})
    [range(1, 3), range(3, 5)]
    """
    rs = set(roots)
    if not rs <= set(range(1, n)):
        raise ValueError(f"roots must lie in 1..{n - 1}: {sorted(rs)}")
    blocks = []
    start = 1
    for i in range(1, n):
        if i not in rs:
            blocks.append(range(start, i + 1))
            start = i + 1
    blocks.append(range(start, n + 1))
    return blocks


def min_coset_rep(u: Sequence[int], roots: Iterable[int]) -> Perm:
    """Minimal-length representative of the coset u W_P.

    W_P is the parabolic subgroup generated by the adjacent transpositions
    indexed by ``roots``.  The representative sorts the one-line values of
    u ascending within each glued block of positions.

    >>> min_coset_rep((3, 1, 2), {1})
    (1, 3, 2)
    """
    w = check_perm(u)
    out = list(w)
    for blk in position_blocks(len(w), roots):
        vals = sorted(out[t - 1] for t in blk)
        for t, v in zip(blk, vals):
            out[t - 1] = v
    return tuple(out)


def is_min_coset_rep(u: Sequence[int], roots: Iterable[int]) -> bool:
    """Whether u is already the minimal representative of its coset."""
    return tuple(u) == min_coset_rep(u, roots)


def parabolic_quotient(n: int, roots: Iterable[int]) -> list[Perm]:
    """All minimal coset representatives for W_P, in lexicographic order.

    These are exactly the permutations ascending within each glued block,
    so they are generated by distributing 1..n over the blocks rather than
    by filtering all n! permutations.

    >>> parabolic_quotient(3, {1})
    [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    """
    sizes = [len(b) for b in position_blocks(n, roots)]
    out: list[Perm] = []

    def fill(remaining: tuple[int, ...], sizes_left: list[int], acc: list[int]) -> None:
        if not sizes_left:
            out.append(tuple(acc))
            return
        head, *rest = sizes_left
        for chosen in itertools.combinations(remaining, head):
            left = tuple(v for v in remaining if v not in chosen)
            fill(left, rest, acc + list(chosen))

    fill(tuple(range(1, n + 1)), sizes, [])
    return out


@lru_cache(maxsize=256)
def _quotient_index(n: int, roots: frozenset[int]) -> list[tuple[Perm, int, tuple[int, ...]]]:
    # (perm, length, rank table) per representative; cached per parabolic
    return [(x, length(x), rank_table(x)) for x in parabolic_quotient(n, roots)]


def join(u: Sequence[int], v: Sequence[int], roots: Iterable[int]) -> Optional[Perm]:
    """Least upper bound of u and v inside the quotient poset, or None.

    u and v must be minimal coset representatives for ``roots``; the poset
    is the Bruhat order restricted to those representatives.  The common
    upper bounds are scanned and the join exists exactly when they have a
    least element.  None means no join (an explicit NoJoin outcome, not a
    failure).
    """
    if len(u) != len(v):
        raise ValueError(f"rank mismatch: {len(u)} vs {len(v)}")
    n = len(u)
    rs = frozenset(roots)
    for w in (u, v):
        if not is_min_coset_rep(w, rs):
            raise ValueError(f"not a minimal coset representative: {tuple(w)}")
    if bruhat_leq(u, v):
        return tuple(v)
    if bruhat_leq(v, u):
        return tuple(u)
    tu, tv = rank_table(u), rank_table(v)
    floor = max(length(u), length(v)) + 1
    bounds = [
        (x, lx, tx)
        for x, lx, tx in _quotient_index(n, rs)
        if lx >= floor and table_leq(tu, tx) and table_leq(tv, tx)
    ]
    if not bounds:
        return None
    lmin = min(lx for _, lx, _ in bounds)
    least = [(x, tx) for x, lx, tx in bounds if lx == lmin]
    if len(least) != 1:
        # two incomparable minimal-length bounds, so no least element
        return None
    m, tm = least[0]
    if all(table_leq(tm, tx) for _, _, tx in bounds):
        return m
    return None


def seidel_generator(n: int) -> Perm:
    """The n-cycle [n, 1, 2, ..., n-1] generating the cyclic group of
    minimal representatives for the cocharacter translations.

    >>> seidel_generator(4)
    (4, 1, 2, 3)
    """
    return (n,) + tuple(range(1, n))


def seidel_element(n: int, i: int) -> Perm:
    """The i-th power of ``seidel_generator(n)``, for 0 <= i <= n-1.

    In one-line notation this is [n-i+1, ..., n, 1, ..., n-i].

    >>> seidel_element(4, 2)
    (3, 4, 1, 2)
    >>> seidel_element(4, 0)
    (1, 2, 3, 4)
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"power must lie in 0..{n - 1}: {i}")
    return tuple(range(n - i + 1, n + 1)) + tuple(range(1, n - i + 1))


def parse_perm(text: str) -> Perm:
    """Parse a comma-separated one-line permutation such as "4,1,2,3"."""
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed permutation: {text!r}") from None
    return check_perm(vals)


def fmt_perm(w: Sequence[int]) -> str:
    """Render a permutation as comma-separated values."""
    return ",".join(str(v) for v in w)


def parse_roots(text: str, n: int) -> frozenset[int]:
    """Parse a comma-separated set of simple-root indices such as "1,3".

    The empty string denotes the empty set.
    """
    if text.strip() == "":
        return frozenset()
    try:
        rs = frozenset(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed root set: {text!r}") from None
    if not rs <= set(range(1, n)):
        raise ValueError(f"roots must lie in 1..{n - 1}: {sorted(rs)}")
    return rs


def fmt_roots(roots: Iterable[int]) -> str:
    return ",".join(str(r) for r in sorted(roots))
