"""The graded Hopf algebra on partition diagrams, over the H-basis.

Basis words are partition diagrams; the product is the bilinear extension
of horizontal concatenation, so the algebra is free on the
tensor-irreducible diagrams.  The coproduct of an irreducible generator
with bullet decomposition t_1 . t_2 ... t_m is the sum of the m+1
prefix/suffix splits

    sum_j  H(t_1 ... t_j) (x) H(t_{j+1} ... t_m),

the j = 0 and j = m terms carrying the empty diagram; on a reducible word
it is the product of the factors' coproducts.  A brute-force enumeration of
all bullet splittings (``coproduct_pairs_oracle``) is kept alongside as an
independent check of the split rule.

The antipode acts on an irreducible generator by the signed sum over
compositions of m of regrouped bullet factors, extended as an algebra
antimorphism; Takeuchi's alternating formula is implemented separately as
an oracle.  The elementary-like basis E differs from S only by the global
sign (-1)^degree on generators and is extended multiplicatively.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import hopfcheck
from .diagrams import (
    EMPTY_DIAGRAM,
    CapExceeded,
    PartitionDiagram,
    bullet,
    bullet_decompose,
    bullet_fold,
    enumerate_diagrams,
    is_tensor_irreducible,
    m_statistic,
    render,
    sort_key,
    tensor,
    tensor_factorize,
)
from .linear import LinearCombination
from .sequences import compositions

DEFAULT_TAKEUCHI_CAP = 4
DEFAULT_ORACLE_CAP = 4
DEFAULT_MATRIX_CAP = 4


class ParSymElement(LinearCombination):
    """Integer linear combination of diagram basis words."""

    _mul_key = staticmethod(tensor)

    @classmethod
    def one(cls) -> "ParSymElement":
        return cls.basis(EMPTY_DIAGRAM)

    def degrees(self) -> set[int]:
        return {d.order for d in self.terms}

    def homogeneous_degree(self) -> int:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0


class DiagramTensor(LinearCombination):
    """Integer linear combination of ordered pairs of diagrams."""

    @staticmethod
    def _mul_key(left, right):
        return (tensor(left[0], right[0]), tensor(left[1], right[1]))

    @classmethod
    def one(cls) -> "DiagramTensor":
        return cls.basis((EMPTY_DIAGRAM, EMPTY_DIAGRAM))


def h(d: PartitionDiagram) -> ParSymElement:
    """The basis element indexed by d."""
    return ParSymElement.basis(d)


def multiply(a: ParSymElement, b: ParSymElement) -> ParSymElement:
    return a * b


@functools.lru_cache(maxsize=1 << 16)
def _generator_split_pairs(
    pi: PartitionDiagram,
) -> tuple[tuple[PartitionDiagram, PartitionDiagram], ...]:
    # prefix/suffix splits of the bullet decomposition of an irreducible word
    factors = bullet_decompose(pi)
    prefixes = [EMPTY_DIAGRAM]
    for f in factors:
        prefixes.append(bullet(prefixes[-1], f))
    suffixes = [EMPTY_DIAGRAM]
    for f in reversed(factors):
        suffixes.append(bullet(f, suffixes[-1]))
    suffixes.reverse()
    return tuple(zip(prefixes, suffixes))


@functools.lru_cache(maxsize=1 << 16)
def _coproduct_word(d: PartitionDiagram) -> DiagramTensor:
    if d.is_empty():
        return DiagramTensor.one()
    out = DiagramTensor.one()
    for pi in tensor_factorize(d):
        out = out * DiagramTensor(
            {pair: 1 for pair in _generator_split_pairs(pi)}
        )
    return out


def coproduct(a: ParSymElement) -> DiagramTensor:
    out = DiagramTensor.zero()
    for d, coeff in a.terms.items():
        out = out + coeff * _coproduct_word(d)
    return out


def coproduct_pairs(pi: PartitionDiagram) -> list[tuple[PartitionDiagram, PartitionDiagram]]:
    """Production split-pairs of an irreducible generator, sorted."""
    if not is_tensor_irreducible(pi):
        raise ValueError("expected a tensor-irreducible diagram")
    return sorted(
        _generator_split_pairs(pi), key=lambda p: (sort_key(p[0]), sort_key(p[1]))
    )


@functools.lru_cache(maxsize=None)
def _diagram_level(k: int) -> tuple[PartitionDiagram, ...]:
    return tuple(enumerate_diagrams(k))


def coproduct_pairs_oracle(
    pi: PartitionDiagram, max_order: int = DEFAULT_ORACLE_CAP
) -> list[tuple[PartitionDiagram, PartitionDiagram]]:
    """All pairs (x, y), empty diagrams included, with x . y = pi, found by
    exhaustive enumeration over complementary orders.  Independent of the
    cut-based split rule; capped because it scans whole basis levels."""
    if not is_tensor_irreducible(pi):
        raise ValueError("expected a tensor-irreducible diagram")
    if pi.order > max_order:
        raise CapExceeded(f"oracle capped at order {max_order}")
    found = [(EMPTY_DIAGRAM, pi), (pi, EMPTY_DIAGRAM)]
    for i in range(1, pi.order):
        for x in _diagram_level(i):
            for y in _diagram_level(pi.order - i):
                if bullet(x, y) == pi:
                    found.append((x, y))
    return sorted(found, key=lambda p: (sort_key(p[0]), sort_key(p[1])))


def counit(a: ParSymElement) -> int:
    return a.coefficient(EMPTY_DIAGRAM)


@functools.lru_cache(maxsize=1 << 16)
def _antipode_generator(pi: PartitionDiagram, degree_sign: bool) -> ParSymElement:
    # signed regroupings of the bullet factors; degree_sign adds (-1)^order
    factors = bullet_decompose(pi)
    m = len(factors)
    terms: dict[PartitionDiagram, int] = {}
    for alpha in compositions(m):
        sign = -1 if len(alpha) % 2 else 1
        if degree_sign and pi.order % 2:
            sign = -sign
        word = EMPTY_DIAGRAM
        pos = 0
        for part in alpha:
            word = tensor(word, bullet_fold(factors[pos : pos + part]))
            pos += part
        terms[word] = terms.get(word, 0) + sign
    return ParSymElement(terms)


@functools.lru_cache(maxsize=1 << 16)
def _antipode_word(d: PartitionDiagram) -> ParSymElement:
    if d.is_empty():
        return ParSymElement.one()
    out = ParSymElement.one()
    for pi in reversed(tensor_factorize(d)):
        out = out * _antipode_generator(pi, False)
    return out


def antipode(a: ParSymElement) -> ParSymElement:
    """Closed-form antipode: antimorphism extension of the signed
    regrouping sum on irreducible generators."""
    out = ParSymElement.zero()
    for d, coeff in a.terms.items():
        out = out + coeff * _antipode_word(d)
    return out


def takeuchi_antipode(
    a: ParSymElement, max_degree: int = DEFAULT_TAKEUCHI_CAP
) -> ParSymElement:
    """Antipode by Takeuchi's alternating sum; independent oracle for
    :func:`antipode`.  Requires a homogeneous element within the cap."""
    degree = a.homogeneous_degree()
    if degree > max_degree:
        raise CapExceeded(f"Takeuchi evaluation capped at degree {max_degree}")
    raw = hopfcheck.takeuchi(PARSYM_OPS, a.terms, degree)
    return ParSymElement(raw)


def e_basis_expand(d: PartitionDiagram) -> ParSymElement:
    """The elementary-like basis element indexed by d, in the H-basis."""
    if d.is_empty():
        return ParSymElement.one()
    out = ParSymElement.one()
    for pi in tensor_factorize(d):
        out = out * _antipode_generator(pi, True)
    return out


def character_zeta(a: ParSymElement) -> int:
    """The canonical multiplicative character: 1 on a basis word iff every
    tensor-irreducible factor is bullet-irreducible (so 1 on both order-one
    diagrams and on the empty diagram), extended linearly."""
    total = 0
    for d, coeff in a.terms.items():
        if d.is_empty() or all(
            m_statistic(pi) == 1 for pi in tensor_factorize(d)
        ):
            total += coeff
    return total


@dataclass(frozen=True)
class EHMatrix:
    """Change of basis from the E-family to the H-basis in one degree."""

    degree: int
    basis: tuple[PartitionDiagram, ...]
    matrix: tuple[tuple[int, ...], ...]
    determinant: int


def _det_bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for j in range(i + 1, n):
                if m[j][i] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[i][i]
        for j in range(i + 1, n):
            row_j = m[j]
            row_i = m[i]
            factor = row_j[i]
            for k in range(i, n):
                row_j[k] = (row_j[k] * pivot - factor * row_i[k]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_by_word_length(
    basis: list[PartitionDiagram], rows: list[list[int]]
) -> int:
    # E_w = +-H_w plus words with strictly more irreducible factors, so the
    # matrix is triangular after sorting by factor count; verify and multiply.
    lengths = [len(tensor_factorize(d)) for d in basis]
    order = sorted(range(len(basis)), key=lambda i: lengths[i])
    det = 1
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            value = rows[i][j]
            if a == b:
                if value not in (1, -1):
                    raise ArithmeticError("diagonal entry not a unit")
                det *= value
            elif b < a and value != 0:
                raise ArithmeticError("matrix is not triangular by word length")
    return det


def e_h_matrix(n: int, max_degree: int = DEFAULT_MATRIX_CAP) -> EHMatrix:
    """Expand every degree-n E-element in the H-basis over the enumeration
    ordering and report the determinant (a unit iff E is a basis)."""
    if n > max_degree:
        raise CapExceeded(f"matrix construction capped at degree {max_degree}")
    basis = list(enumerate_diagrams(n))
    index = {d: i for i, d in enumerate(basis)}
    rows = []
    for d in basis:
        expansion = e_basis_expand(d)
        row = [0] * len(basis)
        for word, coeff in expansion.terms.items():
            row[index[word]] = coeff
        rows.append(row)
    if len(basis) <= 256:
        det = _det_bareiss(rows)
    else:
        det = _det_by_word_length(basis, rows)
    return EHMatrix(n, tuple(basis), tuple(tuple(r) for r in rows), det)


# ---------------------------------------------------------------------------
# Hopf-structure adapter used by the generic verification harness


class _ParSymOps:
    name = "parsym"

    @staticmethod
    def degree(key: PartitionDiagram) -> int:
        return key.order

    unit_key = EMPTY_DIAGRAM

    @staticmethod
    def mul_key(a: PartitionDiagram, b: PartitionDiagram) -> PartitionDiagram:
        return tensor(a, b)

    @staticmethod
    def coproduct_key(key: PartitionDiagram) -> dict:
        return _coproduct_word(key).terms

    @staticmethod
    def antipode_key(key: PartitionDiagram) -> dict:
        return _antipode_word(key).terms

    @staticmethod
    def basis(degree: int):
        return enumerate_diagrams(degree)

    @staticmethod
    def render_key(key: PartitionDiagram) -> str:
        return render(key)


PARSYM_OPS = _ParSymOps()


def verify_hopf_axioms(max_degree: int, seed: int = 20240) -> "hopfcheck.AxiomReport":
    """Check all Hopf axioms on every basis diagram of order <= max_degree,
    plus seeded random elements and pairs.  See :mod:`parsym.hopfcheck`."""
    return hopfcheck.verify_axioms(PARSYM_OPS, max_degree, seed=seed)
