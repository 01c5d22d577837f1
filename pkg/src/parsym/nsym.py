"""A minimal Hopf algebra of noncommutative symmetric functions, plus the
morphisms tying it to the partition-diagram algebra.

Basis words are integer compositions (tuples of positive ints); the product
concatenates, Delta on a one-part generator is the full binomial-style sum
H_i (x) H_{n-i}, and the antipode sends H_n to the signed sum over all
compositions of n.  The elementary generators E_n are implemented both by
their recursion and by the closed signed-sum formula.

Bridges:

* ``phi``  -- embeds H_n as the diagram with n isolated top nodes and one
  bottom block, extended multiplicatively;
* ``chi``  -- projects a diagram word to the composition of bullet-statistic
  values of its tensor factors;
* ``qsym_image`` -- the quasisymmetric shadow on the monomial basis, taken
  through ``chi`` and evaluated by multigraded iterated coproducts.
"""

from __future__ import annotations

import functools
import re

from . import hopfcheck
from .algebra import ParSymElement, h
from .diagrams import (
    CapExceeded,
    PartitionDiagram,
    m_statistic,
    tensor_factorize,
)
from .linear import LinearCombination
from .sequences import compositions

Composition = tuple[int, ...]

DEFAULT_QSYM_CAP = 4

_COMPOSITION_RE = re.compile(r"^\(\s*\)$|^\(\s*[0-9]+(\s*,\s*[0-9]+)*\s*\)$")


def parse_composition(text: str) -> Composition:
    """Parse ``"(3,1,4)"`` (or ``"()"``) into a composition tuple."""
    if not _COMPOSITION_RE.match(text.strip()):
        raise ValueError(f"malformed composition {text!r}")
    inner = text.strip()[1:-1].strip()
    if not inner:
        return ()
    parts = tuple(int(p) for p in inner.split(","))
    if any(p <= 0 for p in parts):
        raise ValueError("composition parts must be positive")
    return parts


def render_composition(alpha: Composition) -> str:
    return "(" + ",".join(str(p) for p in alpha) + ")"


class NSymElement(LinearCombination):
    """Integer linear combination of composition-indexed basis words."""

    @staticmethod
    def _mul_key(a: Composition, b: Composition) -> Composition:
        return a + b

    @classmethod
    def one(cls) -> "NSymElement":
        return cls.basis(())

    def weights(self) -> set[int]:
        return {sum(alpha) for alpha in self.terms}

    def homogeneous_weight(self) -> int:
        weights = self.weights()
        if len(weights) > 1:
            raise ValueError(f"element is not homogeneous: weights {sorted(weights)}")
        return weights.pop() if weights else 0


class NSymTensor(LinearCombination):
    @staticmethod
    def _mul_key(left, right):
        return (left[0] + right[0], left[1] + right[1])

    @classmethod
    def one(cls) -> "NSymTensor":
        return cls.basis(((), ()))


class QSymImage(LinearCombination):
    """Coefficients on the quasisymmetric monomial basis (no product)."""


def nsym_h(alpha: Composition) -> NSymElement:
    return NSymElement.basis(alpha)


def nsym_multiply(a: NSymElement, b: NSymElement) -> NSymElement:
    return a * b


@functools.lru_cache(maxsize=None)
def _coproduct_word(alpha: Composition) -> NSymTensor:
    out = NSymTensor.one()
    for part in alpha:
        split = NSymTensor(
            {(((i,) if i else ()), ((part - i,) if part - i else ())): 1
             for i in range(part + 1)}
        )
        out = out * split
    return out


def nsym_coproduct(a: NSymElement) -> NSymTensor:
    out = NSymTensor.zero()
    for alpha, coeff in a.terms.items():
        out = out + coeff * _coproduct_word(alpha)
    return out


def nsym_counit(a: NSymElement) -> int:
    return a.coefficient(())


@functools.lru_cache(maxsize=None)
def _antipode_generator(n: int) -> NSymElement:
    return NSymElement({alpha: -1 if len(alpha) % 2 else 1 for alpha in compositions(n)})


@functools.lru_cache(maxsize=None)
def _antipode_word(alpha: Composition) -> NSymElement:
    out = NSymElement.one()
    for part in reversed(alpha):
        out = out * _antipode_generator(part)
    return out


def nsym_antipode(a: NSymElement) -> NSymElement:
    out = NSymElement.zero()
    for alpha, coeff in a.terms.items():
        out = out + coeff * _antipode_word(alpha)
    return out


def nsym_e(n: int) -> NSymElement:
    """Elementary generator by the recursion E_n = sum (-1)^(i+1) H_i E_(n-i)."""
    if n < 1:
        raise ValueError("n must be positive")

    @functools.cache
    def rec(m: int) -> NSymElement:
        if m == 0:
            return NSymElement.one()
        out = NSymElement.zero()
        for i in range(1, m + 1):
            sign = 1 if i % 2 else -1
            out = out + sign * (nsym_h((i,)) * rec(m - i))
        return out

    return rec(n)


def nsym_e_closed(n: int) -> NSymElement:
    """Elementary generator by the closed form, a signed composition sum."""
    if n < 1:
        raise ValueError("n must be positive")
    return NSymElement(
        {alpha: -1 if (len(alpha) + n) % 2 else 1 for alpha in compositions(n)}
    )


def zeta_nsym(a: NSymElement) -> int:
    """Canonical multiplicative character: 1 on H_alpha iff every part of
    alpha equals 1 (the generator value 1 at H_1, 0 at H_n for n >= 2)."""
    return sum(
        coeff for alpha, coeff in a.terms.items() if all(p == 1 for p in alpha)
    )


# ---------------------------------------------------------------------------
# bridges between the two algebras


@functools.lru_cache(maxsize=None)
def phi_generator(n: int) -> PartitionDiagram:
    """Diagram with isolated top nodes and a single full bottom block."""
    if n < 1:
        raise ValueError("n must be positive")
    blocks = [(i,) for i in range(1, n + 1)]
    blocks.append(tuple(-i for i in range(1, n + 1)))
    return PartitionDiagram(n, blocks)


def phi(a: NSymElement) -> ParSymElement:
    """The embedding determined by H_n -> H(phi_generator(n))."""
    out = ParSymElement.zero()
    for alpha, coeff in a.terms.items():
        word = ParSymElement.one()
        for part in alpha:
            word = word * h(phi_generator(part))
        out = out + coeff * word
    return out


def chi(a: ParSymElement) -> NSymElement:
    """The projection sending a word to the composition of bullet-statistic
    values of its tensor-irreducible factors."""
    out = NSymElement.zero()
    for d, coeff in a.terms.items():
        if d.is_empty():
            alpha: Composition = ()
        else:
            alpha = tuple(m_statistic(pi) for pi in tensor_factorize(d))
        out = out + coeff * nsym_h(alpha)
    return out


@functools.lru_cache(maxsize=None)
def _qsym_word(alpha: Composition) -> QSymImage:
    # coefficient of M_beta = coefficient sum of the beta-multigraded
    # component of the iterated coproduct, i.e. the evaluation sending
    # every one-part generator to 1 (so H_n lands on sum over beta of M_beta)
    n = sum(alpha)
    if n == 0:
        return QSymImage({(): 1})
    out: dict[Composition, int] = {}
    element = {alpha: 1}
    for legs in range(1, n + 1):
        for tup, coeff in hopfcheck.iterated_coproduct(NSYM_OPS, element, legs).items():
            weights = tuple(sum(part) for part in tup)
            if all(w > 0 for w in weights):
                out[weights] = out.get(weights, 0) + coeff
    return QSymImage(out)


def qsym_image(
    a: ParSymElement | NSymElement, max_degree: int = DEFAULT_QSYM_CAP
) -> QSymImage:
    """Image under the canonical morphism to quasisymmetric functions, as
    monomial-basis coefficients.  Diagram elements are first projected by
    ``chi``; the input must be homogeneous and within the degree cap."""
    if isinstance(a, ParSymElement):
        degree = a.homogeneous_degree()
        if degree > max_degree:
            raise CapExceeded(f"qsym image capped at degree {max_degree}")
        b = chi(a)
    elif isinstance(a, NSymElement):
        degree = a.homogeneous_weight()
        if degree > max_degree:
            raise CapExceeded(f"qsym image capped at degree {max_degree}")
        b = a
    else:
        raise TypeError("expected a ParSym or NSym element")
    out = QSymImage.zero()
    for alpha, coeff in b.terms.items():
        out = out + coeff * _qsym_word(alpha)
    return out


# ---------------------------------------------------------------------------
# Hopf-structure adapter


class _NSymOps:
    name = "nsym"

    unit_key: Composition = ()

    @staticmethod
    def degree(key: Composition) -> int:
        return sum(key)

    @staticmethod
    def mul_key(a: Composition, b: Composition) -> Composition:
        return a + b

    @staticmethod
    def coproduct_key(key: Composition) -> dict:
        return _coproduct_word(key).terms

    @staticmethod
    def antipode_key(key: Composition) -> dict:
        return _antipode_word(key).terms

    @staticmethod
    def basis(degree: int):
        return compositions(degree)

    @staticmethod
    def render_key(key: Composition) -> str:
        return "H" + render_composition(key)


NSYM_OPS = _NSymOps()


def verify_nsym_hopf_axioms(max_degree: int, seed: int = 20241) -> "hopfcheck.AxiomReport":
    return hopfcheck.verify_axioms(NSYM_OPS, max_degree, seed=seed)
