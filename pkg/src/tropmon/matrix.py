"""Square matrices over a semiring.

A matrix over a finite carrier has a canonical integer key: its entries read
row-major as base ``b`` digits, least significant first, where ``b`` is the
carrier size and the digit of a value is its payload (``ABSORB`` is ``t + 1``).
"""

import json
from dataclasses import dataclass

from .errors import ParseError, RangeError, SpecMismatch
from .semiring import (
    ABSORB,
    MAX_FINITE,
    Family,
    SemiringSpec,
    is_valid,
    reduce,
    sr_add,
    sr_format,
    sr_mul,
    sr_one,
    sr_parse,
    sr_zero,
)

DIMENSIONS = (2, 3)
MAX_KEY = (1 << 63) - 1


@dataclass(frozen=True, eq=False)
class TropMatrix:
    spec: SemiringSpec
    n: int
    entries: tuple

    def __post_init__(self):
        if self.n not in DIMENSIONS:
            raise ValueError(f"dimension must be 2 or 3, got {self.n}")
        if len(self.entries) != self.n * self.n:
            raise ValueError(f"expected {self.n * self.n} entries, got {len(self.entries)}")
        for v in self.entries:
            if not is_valid(self.spec, v):
                raise ValueError(f"{v!r} is not an element of {self.spec}")

    @classmethod
    def from_rows(cls, spec, rows):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        return cls(spec, n, tuple(v for r in rows for v in r))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.n + c]

    def rows(self):
        n = self.n
        return [list(self.entries[r * n:(r + 1) * n]) for r in range(n)]

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        if self.spec != other.spec:
            raise SpecMismatch(f"cannot compare matrices over {self.spec} and {other.spec}")
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.spec, self.n, self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"TropMatrix({self.spec}, {mat_format(self)!r})"


def _trusted(spec, n, entries):
    # entries already known valid (products of valid matrices)
    m = object.__new__(TropMatrix)
    object.__setattr__(m, "spec", spec)
    object.__setattr__(m, "n", n)
    object.__setattr__(m, "entries", entries)
    return m


def _check_compatible(x, y):
    if x.spec != y.spec:
        raise SpecMismatch(f"{x.spec} vs {y.spec}")
    if x.n != y.n:
        raise SpecMismatch(f"dimension {x.n} vs {y.n}")


def mat_mul(x, y):
    if x.spec is not y.spec or x.n != y.n:
        _check_compatible(x, y)
    spec, n = x.spec, x.n
    a, b = x.entries, y.entries
    if spec.family is not Family.BOOLEAN:
        return _trusted(spec, n, _tropical_product(spec, n, a, b))
    out = []
    for r in range(n):
        row = a[r * n:(r + 1) * n]
        for c in range(n):
            acc = sr_mul(spec, row[0], b[c])
            for m in range(1, n):
                acc = sr_add(spec, acc, sr_mul(spec, row[m], b[m * n + c]))
            out.append(acc)
    return _trusted(spec, n, tuple(out))


def _tropical_product(spec, n, a, b):
    # inlined sr_add / sr_mul for the min-plus and max-plus families
    t = spec.t
    cap = MAX_FINITE if t is None else t
    is_min = spec.family is Family.MIN_PLUS
    out = []
    for r in range(n):
        row = a[r * n:(r + 1) * n]
        for c in range(n):
            best = ABSORB
            for m in range(n):
                u = row[m]
                v = b[m * n + c]
                if u == ABSORB or v == ABSORB:
                    continue
                s = u + v
                if s > cap:
                    if t is None:
                        raise OverflowError(f"{u} + {v} exceeds the 64-bit natural range")
                    s = t
                if best == ABSORB or (s < best if is_min else s > best):
                    best = s
            out.append(best)
    return tuple(out)


def mat_pow(x, k):
    result = identity(x.spec, x.n)
    base = x
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def identity(spec, n):
    one, zero = sr_one(spec), sr_zero(spec)
    return _trusted(spec, n, tuple(one if r == c else zero for r in range(n) for c in range(n)))


def mat_reduce(spec, x):
    """Entrywise image of an infinite-spec matrix in the quotient ``spec``."""
    if x.spec.family is not spec.family:
        raise SpecMismatch(f"{x.spec} vs {spec}")
    return TropMatrix(spec, x.n, tuple(reduce(spec, v) for v in x.entries))


def all_matrices(spec, n):
    """Every matrix over a finite carrier, in canonical key order."""
    return [mat_decode(spec, n, k) for k in range(key_space(spec, n))]


# -- canonical encoding --------------------------------------------------

def key_space(spec, n):
    if not spec.finite:
        raise SpecMismatch(f"{spec} has an infinite carrier; no canonical key")
    size = spec.carrier_size ** (n * n)
    if size - 1 > MAX_KEY:
        raise RangeError(f"keys for M_{n} over {spec} do not fit in 63 bits")
    return size


def to_digit(spec, v):
    if spec.family is Family.BOOLEAN:
        return v
    return spec.t + 1 if v == ABSORB else v


def from_digit(spec, d):
    if spec.family is Family.BOOLEAN:
        return d
    return ABSORB if d == spec.t + 1 else d


def mat_encode(x):
    spec = x.spec
    base = spec.carrier_size if spec.finite else None
    if base is None:
        raise SpecMismatch(f"{spec} has an infinite carrier; no canonical key")
    key = 0
    for v in reversed(x.entries):
        key = key * base + to_digit(spec, v)
    return key


def mat_decode(spec, n, key):
    size = key_space(spec, n)
    if not 0 <= key < size:
        raise RangeError(f"key {key} outside 0..{size - 1}")
    base = spec.carrier_size
    entries = []
    for _ in range(n * n):
        key, d = divmod(key, base)
        entries.append(from_digit(spec, d))
    return TropMatrix(spec, n, tuple(entries))


# -- text and JSON -------------------------------------------------------

def mat_format(x):
    return "; ".join(" ".join(sr_format(x.spec, v) for v in row) for row in x.rows())


def mat_parse(spec, n, text):
    rows = [r.split() for r in text.split(";")]
    if n is None:
        n = len(rows)
    if n not in DIMENSIONS or len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"expected {n} rows of {n} entries: {text!r}")
    return TropMatrix(spec, n, tuple(sr_parse(spec, tok) for r in rows for tok in r))


def mat_to_json(x):
    return [[v if v != ABSORB or x.spec.family is Family.BOOLEAN else sr_format(x.spec, v)
             for v in row] for row in x.rows()]


def mat_from_json(spec, obj, n=None):
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ParseError("matrix JSON must be a non-empty array of rows")
    size = len(obj)
    if (n is not None and size != n) or size not in DIMENSIONS or any(len(r) != size for r in obj):
        raise ParseError(f"bad matrix shape: {obj!r}")
    entries = []
    for r in obj:
        for tok in r:
            if isinstance(tok, bool) or not isinstance(tok, (int, str)):
                raise ParseError(f"bad matrix entry {tok!r}")
            entries.append(sr_parse(spec, str(tok)))
    return TropMatrix(spec, size, tuple(entries))


def random_matrix(spec, n, rng, max_entry=None, absorb_prob=0.25):
    """Random matrix; finite entries uniform in ``0..max_entry`` (default ``t``)."""
    if spec.family is Family.BOOLEAN:
        return TropMatrix(spec, n, tuple(rng.randrange(2) for _ in range(n * n)))
    hi = spec.t if max_entry is None else max_entry
    if hi is None:
        raise ValueError("max_entry is required for infinite specs")
    if spec.t is not None:
        hi = min(hi, spec.t)
    return TropMatrix(spec, n, tuple(
        ABSORB if rng.random() < absorb_prob else rng.randint(0, hi) for _ in range(n * n)))
