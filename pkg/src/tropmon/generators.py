"""Generator families for 2x2 min-plus / max-plus matrices and the 3x3
min-plus family, plus their closed-form counts.

Descriptor tokens (used by the CLI and in JSON):

    A<i>, Ainf, B, C                  min-plus 2x2
    X<i>, X-inf, Y, Z, W<j>,<k>       max-plus 2x2
    F<f> or F<f>[i,j,k]               3x3 min-plus family f in 1..9
    G<index>                          opaque generator from a user file
"""

import re
from dataclasses import dataclass, field

from .errors import ParseError, RangeError, SpecMismatch
from .matrix import TropMatrix, mat_format
from .semiring import ABSORB, Family, SemiringSpec, reduce

INF = ABSORB

MIN_PLUS_TAGS = frozenset("ABC")
MAX_PLUS_TAGS = frozenset("XYZW")


@dataclass(frozen=True)
class Gen:
    tag: str
    params: tuple = ()

    def __str__(self):
        return descriptor_token(self)


def MinA(i):
    return Gen("A", (i,))


MinB = Gen("B")
MinC = Gen("C")


def MaxX(i):
    return Gen("X", (i,))


MaxY = Gen("Y")
MaxZ = Gen("Z")


def MaxW(j, k):
    return Gen("W", (j, k))


def Conj3(family, *params):
    return Gen("F", (family,) + tuple(params))


def Opaque(index):
    return Gen("G", (index,))


def descriptor_token(d):
    tag, p = d.tag, d.params
    if tag == "A":
        return "Ainf" if p[0] == INF else f"A{p[0]}"
    if tag == "X":
        return "X-inf" if p[0] == INF else f"X{p[0]}"
    if tag == "W":
        return f"W{p[0]},{p[1]}"
    if tag == "F":
        return f"F{p[0]}" if len(p) == 1 else f"F{p[0]}[{','.join(map(str, p[1:]))}]"
    if tag == "G":
        return f"G{p[0]}"
    return tag


_TOKEN_RE = re.compile(
    r"^(?:(?P<a>A)(?P<ai>\d+|inf)|(?P<x>X)(?P<xi>\d+|-inf)|(?P<simple>[BCYZ])"
    r"|W(?P<wj>\d+),(?P<wk>\d+)|F(?P<ff>[1-9])(?:\[(?P<fp>\d+(?:,\d+)*)\])?|G(?P<g>\d+))$")


def parse_descriptor(token):
    m = _TOKEN_RE.match(token.strip())
    if m is None:
        raise ParseError(f"unknown generator token {token!r}")
    if m["a"]:
        return MinA(INF if m["ai"] == "inf" else int(m["ai"]))
    if m["x"]:
        return MaxX(INF if m["xi"] == "-inf" else int(m["xi"]))
    if m["simple"]:
        return Gen(m["simple"])
    if m["wj"] is not None:
        return MaxW(int(m["wj"]), int(m["wk"]))
    if m["ff"] is not None:
        params = tuple(int(v) for v in m["fp"].split(",")) if m["fp"] else ()
        return Conj3(int(m["ff"]), *params)
    return Opaque(int(m["g"]))


# -- 3x3 min-plus families, in displayed order --------------------------

def _f1():
    return [[INF, INF, 0], [0, INF, INF], [INF, 0, INF]]


def _f2():
    return [[INF, INF, 0], [INF, 0, INF], [0, INF, INF]]


def _f3():
    return [[INF, INF, INF], [INF, 0, INF], [INF, INF, 0]]


def _f4():
    return [[1, INF, INF], [INF, 0, INF], [INF, INF, 0]]


def _f5(i):
    return [[0, i, INF], [INF, 0, INF], [INF, INF, 0]]


def _f6(i):
    return [[0, i, INF], [INF, 0, i], [i, INF, 0]]


def _f7(i, j):
    return [[INF, 0, 0], [0, INF, i], [0, j, INF]]


def _f8(i, j):
    return [[0, INF, 0], [i, 0, INF], [INF, j, 0]]


def _f9(i, j, k):
    return [[0, i, INF], [INF, 0, j], [k, INF, 0]]


CONJ3_FAMILIES = {1: _f1, 2: _f2, 3: _f3, 4: _f4, 5: _f5, 6: _f6, 7: _f7, 8: _f8, 9: _f9}


def conj3_params(family, t):
    """Parameter tuples of one 3x3 family, lexicographic."""
    if family <= 4:
        return [()]
    if family in (5, 6):
        return [(i,) for i in range(t + 1)]
    if family == 7:
        return [(i, j) for i in range(1, t + 1) for j in range(1, i + 1)]
    if family == 8:
        return [(i, j) for i in range(t + 1) for j in range(1, t + 1)]
    return [(i, j, k) for i in range(1, t + 1) for j in range(i, t + 1) for k in range(1, j)]


def _conj3_param_ok(family, params, t):
    if t is None:
        # same shape constraints, no upper bound
        t = max(params, default=0)
    return params in conj3_params(family, t)


# -- descriptor -> matrix ------------------------------------------------

def _raw_rows(d):
    tag, p = d.tag, d.params
    if tag == "A":
        return [[p[0], 0], [0, INF]]
    if tag == "B":
        return [[1, INF], [INF, 0]]
    if tag == "C":
        return [[INF, INF], [INF, 0]]
    if tag == "X":
        return [[p[0], 0], [0, INF]]
    if tag == "Y":
        return [[1, INF], [INF, 0]]
    if tag == "Z":
        return [[INF, INF], [INF, 0]]
    if tag == "W":
        return [[0, p[0]], [p[1], 0]]
    if tag == "F":
        return CONJ3_FAMILIES[p[0]](*p[1:])
    raise ValueError(f"{descriptor_token(d)} has no intrinsic matrix")


def descriptor_dim(d):
    return 3 if d.tag == "F" else 2


def gen_matrix(spec, d):
    tag, p = d.tag, d.params
    if tag in MIN_PLUS_TAGS or tag == "F":
        family = Family.MIN_PLUS
    elif tag in MAX_PLUS_TAGS:
        family = Family.MAX_PLUS
    else:
        raise ValueError(f"{descriptor_token(d)} has no intrinsic matrix")
    if spec.family is not family:
        raise SpecMismatch(f"{descriptor_token(d)} is not a generator over {spec}")
    t = spec.t
    if tag in "AX":
        if p[0] != INF and (p[0] < 0 or (t is not None and p[0] > t)):
            raise RangeError(f"{descriptor_token(d)}: parameter outside 0..{t}")
    elif tag == "W":
        j, k = p
        if not 0 < j <= k or (t is not None and k > t):
            raise RangeError(f"{descriptor_token(d)}: need 0 < j <= k <= t")
    elif tag == "F":
        if p[0] not in CONJ3_FAMILIES or not _conj3_param_ok(p[0], p[1:], t):
            raise RangeError(f"{descriptor_token(d)}: parameters outside the family's range")
    rows = _raw_rows(d)
    return TropMatrix.from_rows(spec, [[reduce(spec, v) for v in r] for r in rows])


# -- generator sets ------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSet:
    spec: SemiringSpec
    n: int
    items: tuple  # of (Gen, TropMatrix)
    _by_desc: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for d, m in self.items:
            if m.spec != self.spec or m.n != self.n:
                raise SpecMismatch(f"generator {descriptor_token(d)} is not in M_{self.n}({self.spec})")
        object.__setattr__(self, "_by_desc", {d: m for d, m in self.items})

    @classmethod
    def from_descriptors(cls, spec, descriptors):
        descriptors = list(descriptors)
        n = descriptor_dim(descriptors[0]) if descriptors else 2
        return cls(spec, n, tuple((d, gen_matrix(spec, d)) for d in descriptors))

    @classmethod
    def from_matrices(cls, spec, n, matrices):
        return cls(spec, n, tuple((Opaque(i), m) for i, m in enumerate(matrices)))

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def descriptors(self):
        return [d for d, _ in self.items]

    @property
    def matrices(self):
        return [m for _, m in self.items]

    def matrix_of(self, d):
        return self._by_desc[d]

    def subset(self, indices):
        return GeneratorSet(self.spec, self.n, tuple(self.items[i] for i in indices))

    def without(self, index):
        return self.subset([i for i in range(len(self)) if i != index])

    def describe(self):
        return [f"{descriptor_token(d)}: {mat_format(m)}" for d, m in self.items]


def minplus2_descriptors(t):
    return [MinA(i) for i in range(t + 1)] + [MinA(INF), MinB, MinC]


def maxplus2_descriptors(t):
    ws = [MaxW(j, k) for j in range(1, t + 1) for k in range(j, t + 1)]
    return [MaxX(INF)] + [MaxX(i) for i in range(t + 1)] + [MaxY, MaxZ] + ws


def conj3_descriptors(t):
    return [Conj3(f, *p) for f in range(1, 10) for p in conj3_params(f, t)]


def _check_t(t):
    if not isinstance(t, int) or t < 0:
        raise ValueError(f"threshold must be a natural number, got {t!r}")


def minplus2_gens(t):
    _check_t(t)
    spec = SemiringSpec(Family.MIN_PLUS, t)
    return GeneratorSet.from_descriptors(spec, minplus2_descriptors(t))


def maxplus2_gens(t):
    _check_t(t)
    spec = SemiringSpec(Family.MAX_PLUS, t)
    return GeneratorSet.from_descriptors(spec, maxplus2_descriptors(t))


def conj3_gens(t):
    _check_t(t)
    spec = SemiringSpec(Family.MIN_PLUS, t)
    return GeneratorSet.from_descriptors(spec, conj3_descriptors(t))


def standard_gens(spec, n):
    """The standard generating family for ``M_n`` over a quotient spec, if one exists."""
    if spec.t is None:
        raise ValueError("generator sets are only materialised for quotient specs")
    if spec.family is Family.MIN_PLUS and n == 2:
        return minplus2_gens(spec.t)
    if spec.family is Family.MAX_PLUS and n == 2:
        return maxplus2_gens(spec.t)
    if spec.family is Family.MIN_PLUS and n == 3:
        return conj3_gens(spec.t)
    raise ValueError(f"no known generator family for M_{n} over {spec}")


def minplus2_count(t):
    return t + 4


def maxplus2_count(t):
    return (t * t + 3 * t + 8) // 2


def conj3_count(t):
    return (2 * t ** 3 + 9 * t ** 2 + 19 * t + 36) // 6
