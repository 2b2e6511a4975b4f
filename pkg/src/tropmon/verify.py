"""Computational checks on generating sets: full generation, irredundancy,
the 3x3 min-plus family, and greedy irredundant generating sets."""

import time

import numpy as np

from .errors import LimitExceeded
from .froidure_pin import IncrementalClosure, enumerate_monoid, enumerate_semigroup, member
from .generators import GeneratorSet, conj3_count, conj3_gens, descriptor_token
from .matrix import key_space, mat_decode
from .semiring import Family, SemiringSpec

# irredundant set sizes reported for 3x3 max-plus matrices, by threshold
REPORTED_MAXPLUS3_SIZES = {1: 19, 2: 78}


def verify_full(gens, element_limit=None):
    expected = key_space(gens.spec, gens.n)
    res = enumerate_monoid(gens, element_limit=element_limit, cayley=False)
    if not res.complete:
        raise LimitExceeded(f"enumeration stopped at {res.size} elements", size=res.size)
    return {
        "generated_size": res.size,
        "expected_size": expected,
        "full": res.size == expected,
        "seconds": round(res.seconds, 6),
    }


def is_redundant(gens, index, element_limit=None):
    """Whether generator ``index`` lies in the semigroup generated by the others."""
    target = gens.matrices[index]
    rest = gens.without(index)
    if not len(rest):
        return False
    res = enumerate_semigroup(rest, element_limit=element_limit, cayley=False, stop_at=target)
    if member(res, target) is not None:
        return True
    if not res.complete:
        raise LimitExceeded(f"semigroup enumeration stopped at {res.size} elements", size=res.size)
    return False


def verify_irredundant(gens, element_limit=None):
    rows = []
    for i, d in enumerate(gens.descriptors):
        rows.append({"index": i, "descriptor": descriptor_token(d),
                     "redundant": is_redundant(gens, i, element_limit)})
    return {"generators": rows, "irredundant": not any(r["redundant"] for r in rows)}


def check_conjecture(t, element_limit=None):
    gens = conj3_gens(t)
    report = verify_full(gens, element_limit=element_limit)
    formula = conj3_count(t)
    return {
        "t": t,
        "generator_count": len(gens),
        "formula_count": formula,
        "generated_size": report["generated_size"],
        "expected_size": report["expected_size"],
        "verified": len(gens) == formula and report["full"],
        "seconds": report["seconds"],
    }


def greedy_order(spec, n):
    """Every key, most absorbing entries first, then ascending key."""
    size = key_space(spec, n)
    base = spec.carrier_size
    zero_digit = 0 if spec.family is Family.BOOLEAN else spec.t + 1
    keys = np.arange(size, dtype=np.int64)
    absorbing = np.zeros(size, np.int64)
    rest = keys.copy()
    for _ in range(n * n):
        absorbing += (rest % base) == zero_digit
        rest //= base
    return keys[np.lexsort((keys, -absorbing))]


def small_generating_set(spec, n, element_limit=None):
    """Greedy irredundant generating set of the whole monoid ``M_n(spec)``.

    Walks every matrix in :func:`greedy_order`, keeping it when the monoid
    generated so far does not contain it, then drops (in one pass) each kept
    matrix lying in the semigroup generated by the remaining ones.
    """
    if not isinstance(spec, SemiringSpec) or not spec.finite:
        raise ValueError("small_generating_set needs a finite carrier")
    start = time.perf_counter()
    total = key_space(spec, n)
    if element_limit is not None and total > element_limit:
        raise LimitExceeded(f"M_{n}({spec}) has {total} elements, above the limit {element_limit}")
    closure = IncrementalClosure(spec, n, element_limit=element_limit)
    for key in greedy_order(spec, n):
        if closure.size == total:
            break
        if not closure.contains_key(int(key)):
            closure.add(mat_decode(spec, n, int(key)))
    greedy_size = len(closure.generators)
    gens = GeneratorSet.from_matrices(spec, n, closure.generators)
    i = 0
    while i < len(gens):
        if is_redundant(gens, i, element_limit):
            gens = gens.without(i)
        else:
            i += 1
    gens = GeneratorSet.from_matrices(spec, n, gens.matrices)
    reported = REPORTED_MAXPLUS3_SIZES.get(spec.t) if (
        spec.family is Family.MAX_PLUS and n == 3) else None
    return gens, {
        "semiring": spec.family.value,
        "n": n,
        "t": spec.t,
        "size": len(gens),
        "greedy_size": greedy_size,
        "reported_size": reported,
        "matches_reported": None if reported is None else len(gens) == reported,
        "seconds": round(time.perf_counter() - start, 3),
    }
