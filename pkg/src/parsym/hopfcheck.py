"""Generic verification harness for graded connected Hopf algebra data.

Works over raw dict elements {basis key: int} through a small adapter
object providing::

    unit_key            -- basis key of the unit
    degree(key)         -- grading
    mul_key(a, b)       -- basis product (monomial to monomial)
    coproduct_key(key)  -- dict {(left, right): int}
    antipode_key(key)   -- dict {key: int}, the closed-form antipode
    basis(degree)       -- iterable of basis keys
    render_key(key)     -- printable form for counterexample reports

Takeuchi's formula  S = sum_k (-1)^k mul^(k-1) proj^(x k) Delta^(k-1),
with proj killing degree zero, is evaluated here and used as the oracle
for the closed-form antipode.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

AXIOM_NAMES = (
    "coassociativity",
    "counit",
    "compatibility",
    "antipode-left",
    "antipode-right",
    "antihomomorphism",
    "takeuchi",
)


def _add_into(acc: dict, key, coeff: int) -> None:
    value = acc.get(key, 0) + coeff
    if value:
        acc[key] = value
    else:
        acc.pop(key, None)


def _mul_elements(ops, a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            _add_into(out, ops.mul_key(k1, k2), c1 * c2)
    return out


def _coproduct_element(ops, a: dict) -> dict:
    out: dict = {}
    for key, coeff in a.items():
        for pair, c in ops.coproduct_key(key).items():
            _add_into(out, pair, coeff * c)
    return out


def _antipode_element(ops, a: dict) -> dict:
    out: dict = {}
    for key, coeff in a.items():
        for k, c in ops.antipode_key(key).items():
            _add_into(out, k, coeff * c)
    return out


def iterated_coproduct(ops, a: dict, legs: int) -> dict:
    """Coproduct iterated to the given number of tensor legs (keys become
    tuples of basis keys); legs = 1 returns the element itself."""
    out = {(key,): coeff for key, coeff in a.items()}
    for _ in range(legs - 1):
        nxt: dict = {}
        for tup, coeff in out.items():
            for (left, right), c in ops.coproduct_key(tup[-1]).items():
                _add_into(nxt, tup[:-1] + (left, right), coeff * c)
        out = nxt
    return out


def takeuchi(ops, a: dict, degree: int) -> dict:
    """Evaluate Takeuchi's antipode formula on an element whose nonzero
    terms all live in degrees <= degree.  The sum truncates at k = degree
    because each projected leg carries degree at least one."""
    result: dict = {}
    _add_into(result, ops.unit_key, a.get(ops.unit_key, 0))
    for k in range(1, degree + 1):
        sign = -1 if k % 2 else 1
        for tup, coeff in iterated_coproduct(ops, a, k).items():
            if any(ops.degree(key) == 0 for key in tup):
                continue
            word = tup[0]
            for key in tup[1:]:
                word = ops.mul_key(word, key)
            _add_into(result, word, sign * coeff)
    return result


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    counterexample: str | None = None

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        return f"{self.name}: FAIL ({self.counterexample})"


@dataclass(frozen=True)
class AxiomReport:
    algebra: str
    max_degree: int
    results: tuple[AxiomResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def _describe(ops, a: dict) -> str:
    parts = [f"{c}*{ops.render_key(k)}" for k, c in sorted(
        a.items(), key=lambda item: (ops.degree(item[0]), ops.render_key(item[0]))
    )]
    return " + ".join(parts) if parts else "0"


def verify_axioms(ops, max_degree: int, seed: int = 20240) -> AxiomReport:
    """Check coassociativity, the counit laws, product compatibility, both
    antipode composites, the antimorphism law and agreement with Takeuchi,
    over every basis element up to max_degree plus seeded random elements."""
    rng = random.Random(seed)
    unit = ops.unit_key
    levels = {n: list(ops.basis(n)) for n in range(max_degree + 1)}

    def random_element(homogeneous: bool) -> dict:
        out: dict = {}
        if homogeneous:
            degrees = [rng.randint(0, max_degree)] * 3
        else:
            degrees = [rng.randint(0, max_degree) for _ in range(3)]
        for n in degrees:
            _add_into(out, rng.choice(levels[n]), rng.randint(-3, 3))
        return out

    singletons = [
        {key: 1} for n in range(max_degree + 1) for key in levels[n]
    ]
    mixed = [random_element(homogeneous=False) for _ in range(10)]
    homogeneous = [random_element(homogeneous=True) for _ in range(10)]
    results = []

    def record(name: str, failure: str | None) -> None:
        results.append(AxiomResult(name, failure is None, failure))

    # coassociativity: (id x Delta) Delta = (Delta x id) Delta
    failure = None
    for a in itertools.chain(singletons, mixed):
        pairs = _coproduct_element(ops, a)
        left: dict = {}
        right: dict = {}
        for (x, y), coeff in pairs.items():
            for (u, v), c in ops.coproduct_key(x).items():
                _add_into(left, (u, v, y), coeff * c)
            for (u, v), c in ops.coproduct_key(y).items():
                _add_into(right, (x, u, v), coeff * c)
        if left != right:
            failure = f"at {_describe(ops, a)}"
            break
    record("coassociativity", failure)

    # counit laws: (eps x id) Delta = id = (id x eps) Delta
    failure = None
    for a in itertools.chain(singletons, mixed):
        pairs = _coproduct_element(ops, a)
        left: dict = {}
        right: dict = {}
        for (x, y), coeff in pairs.items():
            if x == unit:
                _add_into(left, y, coeff)
            if y == unit:
                _add_into(right, x, coeff)
        if left != a or right != a:
            failure = f"at {_describe(ops, a)}"
            break
    record("counit", failure)

    # compatibility: Delta(ab) = Delta(a) Delta(b)
    failure = None
    pool = singletons + mixed
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        product_side = _coproduct_element(ops, _mul_elements(ops, a, b))
        tensor_side: dict = {}
        pa = _coproduct_element(ops, a)
        pb = _coproduct_element(ops, b)
        for (x1, y1), c1 in pa.items():
            for (x2, y2), c2 in pb.items():
                _add_into(
                    tensor_side,
                    (ops.mul_key(x1, x2), ops.mul_key(y1, y2)),
                    c1 * c2,
                )
        if product_side != tensor_side:
            failure = f"at {_describe(ops, a)} ; {_describe(ops, b)}"
            break
    record("compatibility", failure)

    # antipode composites: mul (S x id) Delta = unit eps = mul (id x S) Delta
    for name, side in (("antipode-left", 0), ("antipode-right", 1)):
        failure = None
        for a in itertools.chain(singletons, mixed):
            expected: dict = {}
            _add_into(expected, unit, a.get(unit, 0))
            acc: dict = {}
            for (x, y), coeff in _coproduct_element(ops, a).items():
                if side == 0:
                    piece = _mul_elements(ops, _antipode_element(ops, {x: 1}), {y: 1})
                else:
                    piece = _mul_elements(ops, {x: 1}, _antipode_element(ops, {y: 1}))
                for k, c in piece.items():
                    _add_into(acc, k, coeff * c)
            if acc != expected:
                failure = f"at {_describe(ops, a)}"
                break
        record(name, failure)

    # antimorphism: S(ab) = S(b) S(a)
    failure = None
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        lhs = _antipode_element(ops, _mul_elements(ops, a, b))
        rhs = _mul_elements(
            ops, _antipode_element(ops, b), _antipode_element(ops, a)
        )
        if lhs != rhs:
            failure = f"at {_describe(ops, a)} ; {_describe(ops, b)}"
            break
    record("antihomomorphism", failure)

    # closed form S agrees with Takeuchi's formula
    failure = None
    for a in itertools.chain(singletons, homogeneous):
        degree = max((ops.degree(k) for k in a), default=0)
        if takeuchi(ops, a, degree) != _antipode_element(ops, a):
            failure = f"at {_describe(ops, a)}"
            break
    record("takeuchi", failure)

    return AxiomReport(ops.name, max_degree, tuple(results))
