"""Enumeration of the monoid (or semigroup) generated by a set of matrices.

Elements are discovered breadth-first along the right Cayley graph, taking
generators in the order of the generating set. Each new element is recorded
with its parent and last letter, so the stored word of every element is its
short-lex least word over that generator order.
"""

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels as K
from .errors import RangeError, SpecMismatch
from .generators import GeneratorSet
from .matrix import TropMatrix, identity, key_space, mat_decode, mat_encode, mat_mul, to_digit
from .semiring import min_plus, sr_add, sr_mul, sr_zero

DEFAULT_LIMIT = 50_000_000
DENSE_MAX_KEYS = 1 << 26
_INITIAL_CAP = 1 << 12
_INITIAL_HASH = 1 << 13


def semiring_tables(spec):
    """Digit-level ``add`` and ``mul`` tables plus the digit of the zero."""
    elems = spec.elements()
    size = len(elems)
    add_tab = np.empty((size, size), np.uint8)
    mul_tab = np.empty((size, size), np.uint8)
    for a in elems:
        for b in elems:
            da, db = to_digit(spec, a), to_digit(spec, b)
            add_tab[da, db] = to_digit(spec, sr_add(spec, a, b))
            mul_tab[da, db] = to_digit(spec, sr_mul(spec, a, b))
    return add_tab, mul_tab, to_digit(spec, sr_zero(spec))


def matrix_digits(m):
    return np.array([to_digit(m.spec, v) for v in m.entries], np.uint8)


class _Engine:
    """Growable element storage plus key table driving the compiled kernel."""

    def __init__(self, spec, n, matrices, store_cayley=True, limit=DEFAULT_LIMIT):
        self.spec, self.n = spec, n
        self.keyspace = key_space(spec, n)
        self.base = spec.carrier_size
        self.add_tab, self.mul_tab, self.zero = semiring_tables(spec)
        self.limit = int(min(limit, self.keyspace))
        self.store_cayley = store_cayley
        self.gens = np.zeros((0, n * n), np.uint8)
        for m in matrices:
            self._push_gen(m)
        self.dense = self.keyspace <= DENSE_MAX_KEYS
        if self.dense:
            self.tkeys = np.full(1, -1, np.int64)
            self.tvals = np.full(self.keyspace, -1, np.int32)
        else:
            self.tkeys = np.full(_INITIAL_HASH, -1, np.int64)
            self.tvals = np.full(_INITIAL_HASH, -1, np.int32)
        cap = min(_INITIAL_CAP, self.limit)
        self.digits = np.zeros((cap, n * n), np.uint8)
        self.keys = np.zeros(cap, np.int64)
        self.parent = np.zeros(cap, np.int32)
        self.letter = np.zeros(cap, np.int32)
        self.cayley = np.full((cap if store_cayley else 1, max(len(self.gens), 1)), -1, np.int32)
        self.count = 0
        self.pos = 0
        self.complete = False

    def _push_gen(self, m):
        if m.spec != self.spec or m.n != self.n:
            raise SpecMismatch(f"generator over M_{m.n}({m.spec}), expected M_{self.n}({self.spec})")
        self.gens = np.vstack([self.gens, matrix_digits(m)[None, :]])

    def find(self, key):
        return int(K.table_find(self.dense, self.tkeys, self.tvals, np.int64(key)))

    def add_root(self, m, letter):
        """Seed an element with an empty parent; returns False at the limit."""
        key = mat_encode(m)
        if self.find(key) >= 0:
            return True
        if self.count >= self.limit:
            return False
        self._ensure(self.count + 1)
        i = self.count
        K.table_insert(self.dense, self.tkeys, self.tvals, np.int64(key), i)
        self.digits[i] = matrix_digits(m)
        self.keys[i] = key
        self.parent[i] = -1
        self.letter[i] = letter
        self.count += 1
        return True

    def _ensure(self, need):
        cap = self.keys.shape[0]
        if need > cap:
            new = min(max(2 * cap, need), self.limit)
            self.digits = _grow(self.digits, new)
            self.keys = _grow(self.keys, new)
            self.parent = _grow(self.parent, new)
            self.letter = _grow(self.letter, new)
            if self.store_cayley:
                self.cayley = _grow(self.cayley, new, fill=-1)
        if not self.dense and 2 * need > self.tkeys.shape[0]:
            size = self.tkeys.shape[0]
            while 2 * need > size:
                size *= 2
            self.tkeys = np.full(size, -1, np.int64)
            self.tvals = np.full(size, -1, np.int32)
            K.rehash(self.keys, self.count, self.tkeys, self.tvals)

    def run(self, stop_key=-1, old_count=0, gen_from=0):
        """Close under right multiplication; returns the final kernel status."""
        while True:
            self.pos, self.count, status = K.run(
                self.digits, self.keys, self.parent, self.letter, self.cayley,
                self.store_cayley, self.count, self.pos, old_count, gen_from,
                self.dense, self.tkeys, self.tvals, self.gens, self.add_tab, self.mul_tab,
                self.n, self.base, self.zero, self.limit, np.int64(stop_key))
            if status in (K.GROW, K.REHASH):
                self._ensure(self.count + 1)
                continue
            self.complete = status == K.DONE
            return status

    def add_generator(self, m):
        """Adjoin a generator and extend the closure incrementally."""
        if self.store_cayley:
            raise ValueError("incremental closure does not maintain a Cayley graph")
        self._push_gen(m)
        old = self.count
        self.pos = 0
        return self.run(old_count=old, gen_from=len(self.gens) - 1)


def _grow(a, new, fill=0):
    out = np.full((new,) + a.shape[1:], fill, a.dtype)
    out[:a.shape[0]] = a
    return out


@dataclass
class EnumerationResult:
    spec: object
    n: int
    gens: GeneratorSet
    keys: np.ndarray
    parent: np.ndarray
    letter: np.ndarray
    right_cayley: Optional[np.ndarray]
    complete: bool
    monoid: bool
    seconds: float
    _engine: object = None

    @property
    def size(self):
        return int(self.keys.shape[0])

    @property
    def elements(self):
        return [int(k) for k in self.keys]

    def index_of(self, key):
        if not 0 <= key < self._engine.keyspace:
            return None
        i = self._engine.find(key)
        return None if i < 0 or i >= self.size else i

    def matrix(self, idx):
        return mat_decode(self.spec, self.n, int(self.keys[idx]))

    def word_of(self, idx):
        """Generator indices of the stored short-lex least word."""
        if not 0 <= idx < self.size:
            raise RangeError(f"element index {idx} outside 0..{self.size - 1}")
        out = []
        while idx >= 0:
            g = int(self.letter[idx])
            if g >= 0:
                out.append(g)
            idx = int(self.parent[idx])
        out.reverse()
        return out

    def cayley_edges(self):
        if self.right_cayley is None:
            raise ValueError("the right Cayley graph was not stored")
        for e in range(self.size):
            for g in range(self.right_cayley.shape[1]):
                yield e, g, int(self.right_cayley[e, g])


_warm = False


def _load_kernels():
    # first kernel call loads the compiled code; keep that out of timings
    global _warm
    if not _warm:
        spec = min_plus(0)
        eng = _Engine(spec, 2, [identity(spec, 2)], store_cayley=True, limit=4)
        eng.add_root(identity(spec, 2), -1)
        eng.run()
        _warm = True


def _enumerate(gens, element_limit, cayley, monoid, stop_key=-1):
    if element_limit is None:
        element_limit = DEFAULT_LIMIT
    _load_kernels()
    start = time.perf_counter()
    eng = _Engine(gens.spec, gens.n, gens.matrices, store_cayley=cayley, limit=element_limit)
    ok = True
    if monoid:
        ok = eng.add_root(identity(gens.spec, gens.n), -1)
    else:
        for g, m in enumerate(gens.matrices):
            ok = ok and eng.add_root(m, g)
    if stop_key >= 0 and eng.find(stop_key) >= 0:
        pass
    elif ok and len(gens):
        eng.run(stop_key=stop_key)
    elif ok:
        eng.complete = True
    size = eng.count
    return EnumerationResult(
        spec=gens.spec, n=gens.n, gens=gens,
        keys=eng.keys[:size].copy(), parent=eng.parent[:size].copy(),
        letter=eng.letter[:size].copy(),
        right_cayley=eng.cayley[:size, :len(gens)].copy() if cayley and len(gens) else (
            np.zeros((size, 0), np.int32) if cayley else None),
        complete=eng.complete, monoid=monoid, seconds=time.perf_counter() - start, _engine=eng)


def enumerate_monoid(gens, element_limit=None, cayley=True):
    """All elements of the monoid generated by ``gens`` (identity adjoined)."""
    if not gens.spec.finite:
        raise SpecMismatch("enumeration needs a finite carrier")
    return _enumerate(gens, element_limit, cayley, monoid=True)


def enumerate_semigroup(gens, element_limit=None, cayley=True, stop_at=None):
    """Like :func:`enumerate_monoid` but without adjoining the identity.

    With ``stop_at`` (a matrix) the search stops as soon as it is found; the
    result is then marked incomplete unless the closure had finished anyway.
    """
    if not gens.spec.finite:
        raise SpecMismatch("enumeration needs a finite carrier")
    stop_key = -1 if stop_at is None else mat_encode(stop_at)
    return _enumerate(gens, element_limit, cayley, monoid=False, stop_key=stop_key)


def member(result, m):
    if not isinstance(m, TropMatrix) or m.spec != result.spec or m.n != result.n:
        raise SpecMismatch(f"query is not in M_{result.n}({result.spec})")
    return result.index_of(mat_encode(m))


def element_word(result, idx):
    ds = result.gens.descriptors
    return [ds[g] for g in result.word_of(idx)]


def naive_closure(gens, monoid=True):
    """Keys of the generated monoid by plain fixpoint iteration (test oracle).

    Whole frontiers are multiplied at once with numpy, using scalar tables
    filled from ``sr_add``/``sr_mul``; no key table or word bookkeeping.
    """
    spec, n = gens.spec, gens.n
    elems = spec.elements()
    digit = {v: to_digit(spec, v) for v in elems}
    size = len(elems)
    add = np.empty((size, size), np.int64)
    mul = np.empty((size, size), np.int64)
    for a in elems:
        for b in elems:
            add[digit[a], digit[b]] = digit[sr_add(spec, a, b)]
            mul[digit[a], digit[b]] = digit[sr_mul(spec, a, b)]
    weights = size ** np.arange(n * n, dtype=np.int64)

    def as_digits(m):
        return np.array([digit[v] for v in m.entries], np.int64).reshape(n, n)

    mats = [as_digits(m) for m in gens.matrices]
    if monoid:
        start = [as_digits(identity(spec, n))]
    else:
        start = mats
    frontier = np.unique(np.stack(start).reshape(-1, n * n), axis=0) if start else \
        np.zeros((0, n * n), np.int64)
    seen = set((frontier @ weights).tolist())
    while len(frontier):
        x = frontier.reshape(-1, n, n)
        fresh = []
        for g in mats:
            y = np.empty_like(x)
            for i in range(n):
                for j in range(n):
                    acc = mul[x[:, i, 0], g[0, j]]
                    for k in range(1, n):
                        acc = add[acc, mul[x[:, i, k], g[k, j]]]
                    y[:, i, j] = acc
            y = y.reshape(-1, n * n)
            keys = y @ weights
            keep = np.array([k not in seen for k in keys.tolist()], bool)
            if keep.any():
                y, keys = y[keep], keys[keep]
                _, first = np.unique(keys, return_index=True)
                fresh.append(y[first])
                seen.update(keys[first].tolist())
        frontier = np.concatenate(fresh) if fresh else np.zeros((0, n * n), np.int64)
    return seen


def naive_closure_slow(gens, monoid=True):
    """Same as :func:`naive_closure` with one ``mat_mul`` per product."""
    spec, n = gens.spec, gens.n
    mats = list(gens.matrices)
    current = {identity(spec, n)} if monoid else set(mats)
    frontier = set(current)
    while frontier:
        fresh = set()
        for x in frontier:
            for g in mats:
                y = mat_mul(x, g)
                if y not in current:
                    fresh.add(y)
        current |= fresh
        frontier = fresh
    return {mat_encode(m) for m in current}


class IncrementalClosure:
    """Monoid closure that can be extended one generator at a time."""

    def __init__(self, spec, n, element_limit=None):
        self.spec, self.n = spec, n
        self.generators = []
        self._eng = _Engine(spec, n, [], store_cayley=False,
                            limit=DEFAULT_LIMIT if element_limit is None else element_limit)
        self._eng.add_root(identity(spec, n), -1)
        self._eng.complete = True

    @property
    def size(self):
        return self._eng.count

    def contains_key(self, key):
        return self._eng.find(key) >= 0

    def contains_keys(self, keys):
        e = self._eng
        return K.find_many(e.dense, e.tkeys, e.tvals, np.asarray(keys, np.int64)) >= 0

    def add(self, m):
        self.generators.append(m)
        status = self._eng.add_generator(m)
        return status == K.DONE
