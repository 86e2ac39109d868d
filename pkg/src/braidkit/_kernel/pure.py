"""Pure-Python implementations of the hot kernels.

These functions do the inner-loop work of the whole package: tracking strand
permutations through a word, splitting positive words into permutation-braid
factors, sliding factors into left-canonical position, and enumerating
single-relation rewrites. They operate on plain data so that the compiled
twin (`_ckernel.pyx`) can implement the identical contract:

- a *word* is a sequence of nonzero ints, letter sigma_i^s encoded as s*i;
- a *permutation* is a tuple `images` of length n with `images[i-1]` the
  endpoint position of the strand starting at position i (positions 1..n).

Both lanes must return identical values, including ordering, for every
input; `tests/test_kernels.py` checks this.
"""

from __future__ import annotations

from typing import Sequence


def permutation_of_word(n: int, letters: Sequence[int]) -> tuple[int, ...]:
    """Endpoint positions of each strand after the word. Signs are ignored
    because sigma_i and its inverse induce the same transposition."""
    pos2str = list(range(n + 1))  # slot 0 unused
    for g in letters:
        i = g if g > 0 else -g
        pos2str[i], pos2str[i + 1] = pos2str[i + 1], pos2str[i]
    images = [0] * n
    for p in range(1, n + 1):
        images[pos2str[p] - 1] = p
    return tuple(images)


def is_permutation_braid(n: int, letters: Sequence[int]) -> bool:
    """True iff no strand pair crosses twice. `letters` must be positive."""
    pos2str = list(range(n + 1))
    crossed: set[tuple[int, int]] = set()
    for i in letters:
        a = pos2str[i]
        b = pos2str[i + 1]
        pair = (a, b) if a < b else (b, a)
        if pair in crossed:
            return False
        crossed.add(pair)
        pos2str[i], pos2str[i + 1] = b, a
    return True


def word_of_permutation(n: int, images: Sequence[int]) -> tuple[int, ...]:
    """Canonical positive word for a permutation: bubble-sort reading.

    Scans left to right repeatedly, emitting sigma_i whenever the strands at
    positions i, i+1 still have to cross; the word length equals the
    inversion count of the permutation.
    """
    q = list(images)
    out: list[int] = []
    swapped = True
    while swapped:
        swapped = False
        for i in range(n - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                out.append(i + 1)
                swapped = True
    return tuple(out)


def left_canonical_positive(
    n: int, letters: Sequence[int]
) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Left-canonical data (delta power, factor permutations) of a positive word.

    Three phases: greedy left-to-right factorization into permutation braids,
    local sliding passes until every adjacent pair is left-weighted, then
    absorption of leading half-twist factors into the power. Sliding moves one
    generator at a time and is bounded by (factors x letters) full passes;
    exceeding the bound means the implementation is broken, so it raises.
    """
    identity = list(range(1, n + 1))

    # Greedy factorization. `p` is the running factor's permutation, `pinv`
    # its inverse; appending sigma_i keeps the factor a permutation braid
    # exactly when the strands ending at positions i, i+1 have not crossed,
    # i.e. pinv[i-1] < pinv[i].
    factors: list[list[int]] = []
    p = identity[:]
    pinv = identity[:]
    for i in letters:
        if pinv[i - 1] > pinv[i]:
            factors.append(p)
            p = identity[:]
            pinv = identity[:]
        u = pinv[i - 1]
        v = pinv[i]
        p[u - 1] = i + 1
        p[v - 1] = i
        pinv[i - 1] = v
        pinv[i] = u
    if letters:
        factors.append(p)

    # Local sliding. For each adjacent pair (a, b): while some generator s
    # left-divides b (descent of b) but does not right-divide a (non-descent
    # of a's inverse), move it from the head of b to the tail of a.
    max_passes = max(1, len(factors) * len(letters)) + 1
    passes = 0
    changed = True
    while changed:
        passes += 1
        if passes > max_passes:
            raise RuntimeError("left-canonical sliding failed to converge")
        changed = False
        k = 0
        while k < len(factors) - 1:
            a = factors[k]
            b = factors[k + 1]
            ainv = [0] * n
            for j in range(n):
                ainv[a[j] - 1] = j + 1
            moved = False
            while True:
                s = 0
                for j in range(1, n):
                    if b[j - 1] > b[j] and ainv[j - 1] < ainv[j]:
                        s = j
                        break
                if s == 0:
                    break
                u = ainv[s - 1]
                v = ainv[s]
                a[u - 1] = s + 1
                a[v - 1] = s
                ainv[s - 1] = v
                ainv[s] = u
                b[s - 1], b[s] = b[s], b[s - 1]
                moved = True
            if moved:
                changed = True
                if b == identity:
                    del factors[k + 1]
                    continue
            k += 1

    delta = list(range(n, 0, -1))
    power = 0
    while factors and factors[0] == delta:
        power += 1
        del factors[0]
    return power, tuple(tuple(f) for f in factors)


def rewrite_neighbors(
    n: int, letters: Sequence[int]
) -> list[tuple[int, int, tuple[int, ...]]]:
    """All words one defining relation away from a positive word.

    Returns (kind, position, word) triples, kind 0 for a commutation swap and
    1 for a triple rewrite, commutations first, each ordered by position.
    Both relation kinds are involutive patterns, so every neighbor in both
    directions is produced.
    """
    w = tuple(letters)
    length = len(w)
    out: list[tuple[int, int, tuple[int, ...]]] = []
    for pos in range(length - 1):
        a = w[pos]
        b = w[pos + 1]
        if a - b >= 2 or b - a >= 2:
            out.append((0, pos, w[:pos] + (b, a) + w[pos + 2 :]))
    for pos in range(length - 2):
        a = w[pos]
        b = w[pos + 1]
        if w[pos + 2] == a and (b == a + 1 or b == a - 1):
            out.append((1, pos, w[:pos] + (b, a, b) + w[pos + 3 :]))
    return out
