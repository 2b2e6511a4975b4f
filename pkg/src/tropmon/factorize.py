"""Constructive factorisation of 2x2 min-plus and max-plus matrices.

Both families share one case analysis; only the alphabet differs:

    swap      A_inf   / X_-inf   (left: swap rows, right: swap columns)
    shift     B       / Y        (left: +1 on row 0, right: +1 on column 0)
    kill      C       / Z        (left: kill row 0,  right: kill column 0)
    diag(i)   A_i     / X_i

A matrix with an absorbing entry is first moved by row/column swaps into one
of the shapes (z = absorbing, p, q finite, r arbitrary)

    (z z; z r)   = kill swap diag(r) swap kill
    (z z; p q)   = kill swap diag(q) swap shift^p
    (z p; z q)   = shift^p swap diag(q) swap kill
    (z p; q r)   = shift^p swap diag(r) swap shift^q

An all-finite matrix is swapped so its minimum sits at (0, 0), then written
as a "core" matrix with a zero diagonal or zero top row times shifts and one
swap. Cores are closed off with A_i A_j (min-plus) or W_jk (max-plus).

Every word is built over the infinite semiring on the representative
payloads, so it also factors the matrix in any quotient (reduction is a
homomorphism). Word length on the infinite spec is at most
``WORD_BASE + WORD_SLOPE * (sum of finite entries)``.
"""

from .errors import SpecMismatch
from .generators import INF, MaxW, MaxX, MaxY, MaxZ, MinA, MinB, MinC, gen_matrix
from .matrix import TropMatrix, identity, mat_mul, mat_pow
from .semiring import ABSORB, Family

WORD_BASE = 24
WORD_SLOPE = 2


class _Alphabet:
    def __init__(self, swap, shift, kill, diag, closer, zero_top):
        self.swap = swap
        self.shift = shift
        self.kill = kill
        self.diag = diag
        self.closer = closer
        self.zero_top = zero_top


def eval_word(spec, n, word, lookup=None):
    """Left-to-right product of ``word``; runs of a letter use fast powering.

    ``lookup`` maps descriptors without an intrinsic matrix (opaque ones) to
    their matrices.
    """
    result = identity(spec, n)
    i = 0
    cache = {}
    while i < len(word):
        d = word[i]
        j = i
        while j < len(word) and word[j] == d:
            j += 1
        m = cache.get(d)
        if m is None:
            m = lookup[d] if lookup is not None and d in lookup else gen_matrix(spec, d)
            cache[d] = m
        if m.n != n:
            raise SpecMismatch(f"letter {d} is {m.n}x{m.n}, word is over {n}x{n}")
        result = mat_mul(result, m if j - i == 1 else mat_pow(m, j - i))
        i = j
    return result


def word_tokens(word):
    return " ".join(str(d) for d in word)


def _cancel_swaps(word, swap):
    out = []
    for d in word:
        if d == swap and out and out[-1] == swap:
            out.pop()
        else:
            out.append(d)
    return out


def _swapped(e, rows, cols):
    # e is a 4-tuple (a, b, c, d) row-major
    a, b, c, d = e
    if rows:
        a, b, c, d = c, d, a, b
    if cols:
        a, b, c, d = b, a, d, c
    return (a, b, c, d)


def _with_swaps(al, rows, cols, inner):
    # target = P N Q with P, Q in {I, swap}
    return ([al.swap] if rows else []) + inner + ([al.swap] if cols else [])


def _conj(al, r):
    # swap diag(r) swap = (z 0; 0 r); diag(z) is the swap itself
    return [al.swap] if r == ABSORB else [al.swap, al.diag(r), al.swap]


def _absorbing(al, e):
    z = ABSORB
    pos = [k for k in range(4) if e[k] == z]
    if len(pos) >= 3:
        # bring the remaining (possibly absorbing) entry to (1, 1)
        free = next((k for k in range(4) if e[k] != z), 3)
        rows, cols = free < 2, free % 2 == 0
        _, _, _, r = _swapped(e, rows, cols)
        return _with_swaps(al, rows, cols, [al.kill] + _conj(al, r) + [al.kill])
    if len(pos) == 2 and pos in ([0, 1], [2, 3]):
        rows = pos == [2, 3]
        _, _, p, q = _swapped(e, rows, False)
        return _with_swaps(al, rows, False, [al.kill] + _conj(al, q) + [al.shift] * p)
    if len(pos) == 2 and pos in ([0, 2], [1, 3]):
        cols = pos == [1, 3]
        _, p, _, q = _swapped(e, False, cols)
        return _with_swaps(al, False, cols, [al.shift] * p + _conj(al, q) + [al.kill])
    # one absorbing entry, or two on a diagonal: put one at (0, 0)
    k = pos[0]
    rows, cols = k >= 2, k % 2 == 1
    _, p, q, r = _swapped(e, rows, cols)
    return _with_swaps(al, rows, cols, [al.shift] * p + _conj(al, r) + [al.shift] * q)


def _finite(al, e):
    # minimum to (0, 0), ties broken row-major
    k = min(range(4), key=lambda idx: (e[idx], idx))
    rows, cols = k >= 2, k % 2 == 1
    a, b, c, d = _swapped(e, rows, cols)
    if b <= d:
        # (a b; c d) = (0 0; d-b c-a) shift^b swap shift^a
        core = _zero_top(al, d - b, c - a)
        tail = [al.shift] * b
    else:
        # (b-d 0; 0 c-a) = (0 b-d; c-a 0) swap
        core = al.closer(al, b - d, c - a) + [al.swap]
        tail = [al.shift] * d
    inner = core + tail + [al.swap] + [al.shift] * a
    return _with_swaps(al, rows, cols, inner)


def _zero_top(al, i, j):
    """Word for (0 0; i j), i, j finite."""
    if i < j:
        return _zero_top(al, j, i) + [al.swap]
    return al.zero_top(al, i, j)


def _min_closer(al, i, j):
    # (0 i; j 0) = A_i A_j
    return [MinA(i), MinA(j)]


def _min_zero_top(al, i, j):
    # (0 0; i j) = A_inf B^j A_inf A_0 A_{i-j}, i >= j
    return [al.swap] + [al.shift] * j + [al.swap, MinA(0), MinA(i - j)]


def _max_closer(al, i, j):
    # (0 i; j 0)
    if j == 0:
        # rows swapped: (0 0; 0 i)
        return [al.swap] + _zero_top(al, 0, i)
    if i == 0:
        return _zero_top(al, j, 0)
    if i <= j:
        return [MaxW(i, j)]
    return [al.swap, MaxW(j, i), al.swap]


def _max_zero_top(al, i, j):
    # (0 0; i j) = X_-inf Y^j (0 0; z 0) (i-j z; 0 0), i >= j
    z = ABSORB
    return ([al.swap] + [al.shift] * j + _absorbing(al, (0, 0, z, 0))
            + _absorbing(al, (i - j, z, 0, 0)))


_MIN = _Alphabet(MinA(INF), MinB, MinC, MinA, _min_closer, _min_zero_top)
_MAX = _Alphabet(MaxX(INF), MaxY, MaxZ, MaxX, _max_closer, _max_zero_top)


def _factor(al, family, m):
    if not isinstance(m, TropMatrix) or m.n != 2 or m.spec.family is not family:
        raise SpecMismatch(f"expected a 2x2 {family.value} matrix")
    e = m.entries
    word = _absorbing(al, e) if ABSORB in e else _finite(al, e)
    return _cancel_swaps(word, al.swap)


def factor_minplus2(m):
    """Word in A_i, B, C whose product is the 2x2 min-plus matrix ``m``."""
    return _factor(_MIN, Family.MIN_PLUS, m)


def factor_maxplus2(m):
    """Word in X_i, Y, Z, W_jk whose product is the 2x2 max-plus matrix ``m``."""
    return _factor(_MAX, Family.MAX_PLUS, m)


def factor(m):
    if m.spec.family is Family.MIN_PLUS:
        return factor_minplus2(m)
    if m.spec.family is Family.MAX_PLUS:
        return factor_maxplus2(m)
    raise SpecMismatch(f"no generator theorem for {m.spec}")


def letters_valid(spec, word):
    """True when every letter is a generator over ``spec`` (parameters in range)."""
    try:
        for d in set(word):
            gen_matrix(spec, d)
    except (ValueError, SpecMismatch):
        return False
    return True
