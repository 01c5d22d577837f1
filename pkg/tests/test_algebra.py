import random

import pytest

from parsym.algebra import (
    DiagramTensor,
    PARSYM_OPS,
    ParSymElement,
    antipode,
    character_zeta,
    coproduct,
    coproduct_pairs,
    coproduct_pairs_oracle,
    counit,
    e_basis_expand,
    e_h_matrix,
    h,
    multiply,
    takeuchi_antipode,
    verify_hopf_axioms,
)
from parsym import hopfcheck
from parsym.diagrams import (
    EMPTY_DIAGRAM,
    CapExceeded,
    enumerate_diagrams,
    identity_diagram,
    is_tensor_irreducible,
    m_statistic,
    parse,
    tensor,
)

D4 = parse("1,2,3/4/1',2'/3',4'")
D4_LEFT = parse("1,2,3/1',2'/3'")
SINGLETONS = parse("1/1'")
ID1 = parse("1,1'")


def all_diagrams(k):
    return list(enumerate_diagrams(k))


def basis_up_to(n):
    out = []
    for k in range(n + 1):
        out.extend(all_diagrams(k))
    return out


class TestProduct:
    def test_basis_product(self):
        assert multiply(h(ID1), h(ID1)) == h(parse("1,1'/2,2'"))

    def test_bilinearity(self):
        assert (2 * h(ID1)) * (3 * h(SINGLETONS)) == 6 * h(parse("1,1'/2/2'"))

    def test_unit_law(self):
        rng = random.Random(3)
        pool = basis_up_to(3)
        for _ in range(20):
            x = rng.randint(-4, 4) * h(rng.choice(pool)) + h(rng.choice(pool))
            assert ParSymElement.one() * x == x == x * ParSymElement.one()

    def test_grading_additive(self):
        for a in all_diagrams(2):
            for b in all_diagrams(1):
                (word,) = (h(a) * h(b)).terms
                assert word.order == 3


class TestCoproduct:
    def test_order_four_splits(self):
        expected = DiagramTensor(
            {
                (D4, EMPTY_DIAGRAM): 1,
                (D4_LEFT, SINGLETONS): 1,
                (EMPTY_DIAGRAM, D4): 1,
            }
        )
        assert coproduct(h(D4)) == expected

    def test_unit_grouplike(self):
        assert coproduct(ParSymElement.one()) == DiagramTensor.one()

    def test_primitive_iff_m_one(self):
        for d in basis_up_to(4):
            if not is_tensor_irreducible(d):
                continue
            primitive = coproduct(h(d)) == DiagramTensor(
                {(d, EMPTY_DIAGRAM): 1, (EMPTY_DIAGRAM, d): 1}
            )
            assert primitive == (m_statistic(d) == 1)

    def test_bidegrees_sum_to_order(self):
        for d in basis_up_to(3):
            for left, right in coproduct(h(d)).terms:
                assert left.order + right.order == d.order

    def test_split_pairs_match_oracle_up_to_order_three(self):
        for d in basis_up_to(3):
            if is_tensor_irreducible(d):
                assert coproduct_pairs(d) == coproduct_pairs_oracle(d)

    def test_split_pairs_match_oracle_order_four(self):
        for d in all_diagrams(4):
            if is_tensor_irreducible(d):
                assert coproduct_pairs(d) == coproduct_pairs_oracle(d)

    def test_oracle_examples(self):
        assert coproduct_pairs_oracle(SINGLETONS) == [
            (EMPTY_DIAGRAM, SINGLETONS),
            (SINGLETONS, EMPTY_DIAGRAM),
        ]
        pairs = coproduct_pairs_oracle(parse("1,1',2'/2"))
        assert (ID1, SINGLETONS) in pairs
        assert len(pairs) == 3

    def test_oracle_cap(self):
        with pytest.raises(CapExceeded):
            coproduct_pairs_oracle(D4, max_order=3)

    def test_oracle_rejects_reducible(self):
        with pytest.raises(ValueError):
            coproduct_pairs_oracle(parse("1,1'/2,2'"))


class TestCounit:
    def test_values(self):
        assert counit(ParSymElement.one()) == 1
        assert counit(h(D4)) == 0
        assert counit(5 * ParSymElement.one() - 2 * h(ID1)) == 5


class TestAntipode:
    def test_unit(self):
        assert antipode(ParSymElement.one()) == ParSymElement.one()

    def test_primitive_generators_negate(self):
        for d in basis_up_to(3):
            if is_tensor_irreducible(d) and m_statistic(d) == 1:
                assert antipode(h(d)) == -1 * h(d)

    def test_order_four_signed_regrouping(self):
        assert antipode(h(D4)) == -1 * h(D4) + h(tensor(D4_LEFT, SINGLETONS))

    def test_takeuchi_agreement_on_basis(self):
        for d in basis_up_to(3):
            assert takeuchi_antipode(h(d)) == antipode(h(d))

    def test_takeuchi_agreement_random_homogeneous(self):
        rng = random.Random(17)
        levels = {k: all_diagrams(k) for k in range(4)}
        for _ in range(100):
            degree = rng.randint(0, 3)
            x = ParSymElement.zero()
            for _ in range(3):
                x = x + rng.randint(-3, 3) * h(rng.choice(levels[degree]))
            assert takeuchi_antipode(x) == antipode(x)

    def test_takeuchi_requires_homogeneous(self):
        with pytest.raises(ValueError, match="not homogeneous"):
            takeuchi_antipode(h(ID1) + h(D4))

    def test_takeuchi_cap(self):
        with pytest.raises(CapExceeded):
            takeuchi_antipode(h(identity_diagram(5)), max_degree=4)

    def test_degree_preserved(self):
        for d in basis_up_to(3):
            for word in antipode(h(d)).terms:
                assert word.order == d.order
            for word in antipode(antipode(h(d))).terms:
                assert word.order == d.order

    def test_left_composite_vanishes_on_nonempty(self):
        for d in basis_up_to(3):
            if d.is_empty():
                continue
            acc = ParSymElement.zero()
            for (left, right), coeff in coproduct(h(d)).terms.items():
                acc = acc + coeff * (antipode(h(left)) * h(right))
            assert acc == ParSymElement.zero()


class TestEBasis:
    def test_order_one(self):
        assert e_basis_expand(ID1) == h(ID1)
        assert e_basis_expand(SINGLETONS) == h(SINGLETONS)

    def test_order_four_expansion(self):
        assert e_basis_expand(D4) == -1 * h(D4) + h(tensor(D4_LEFT, SINGLETONS))

    def test_bullet_irreducible_order_two(self):
        # m = 1 and order 2 gives the single tuple with sign (-1)^3
        d = parse("1,2/1',2'")
        assert m_statistic(d) == 1
        assert e_basis_expand(d) == -1 * h(d)

    def test_two_factor_order_two(self):
        # {1,2,1',2'} = {1,1'} . {1,1'} has m = 2
        d = parse("1,2,1',2'")
        assert e_basis_expand(d) == -1 * h(d) + h(identity_diagram(2))

    def test_multiplicative_on_words(self):
        a, b = parse("1,2,1',2'"), parse("1,1'")
        assert e_basis_expand(tensor(a, b)) == e_basis_expand(a) * e_basis_expand(b)

    def test_matrix_order_one(self):
        report = e_h_matrix(1)
        assert report.matrix == ((1, 0), (0, 1))
        assert report.determinant == 1

    def test_matrix_determinants_are_units(self):
        for n in (1, 2, 3):
            report = e_h_matrix(n)
            assert len(report.basis) == len(all_diagrams(n))
            assert report.determinant in (1, -1)

    def test_matrix_cap(self):
        with pytest.raises(CapExceeded):
            e_h_matrix(5)


class TestCharacter:
    def test_values_on_order_one(self):
        assert character_zeta(ParSymElement.one()) == 1
        assert character_zeta(h(ID1)) == 1
        # the no-edge order-one diagram also has bullet statistic 1
        assert character_zeta(h(SINGLETONS)) == 1

    def test_vanishes_past_statistic_one(self):
        assert character_zeta(h(parse("1,2,1',2'"))) == 0
        assert character_zeta(h(D4)) == 0

    def test_survives_on_words_of_statistic_one_factors(self):
        assert character_zeta(h(identity_diagram(3))) == 1
        assert character_zeta(h(tensor(D4_LEFT, SINGLETONS))) == 1

    def test_multiplicative(self):
        rng = random.Random(23)
        pool = basis_up_to(3)
        for _ in range(200):
            a, b = h(rng.choice(pool)), h(rng.choice(pool))
            assert character_zeta(a * b) == character_zeta(a) * character_zeta(b)


class _CorruptedOps:
    """Drops the interior coproduct term of one fixed generator."""

    name = "parsym-corrupted"
    unit_key = PARSYM_OPS.unit_key
    degree = staticmethod(PARSYM_OPS.degree)
    mul_key = staticmethod(PARSYM_OPS.mul_key)
    antipode_key = staticmethod(PARSYM_OPS.antipode_key)
    basis = staticmethod(PARSYM_OPS.basis)
    render_key = staticmethod(PARSYM_OPS.render_key)

    def __init__(self, victim):
        self.victim = victim

    def coproduct_key(self, key):
        pairs = dict(PARSYM_OPS.coproduct_key(key))
        if key == self.victim:
            pairs = {
                pair: coeff
                for pair, coeff in pairs.items()
                if EMPTY_DIAGRAM in pair
            }
        return pairs


class TestAxiomHarness:
    def test_degree_two_all_pass(self):
        report = verify_hopf_axioms(2)
        assert report.all_passed
        assert [r.name for r in report.results] == list(hopfcheck.AXIOM_NAMES)
        assert report.lines()[0] == "coassociativity: PASS"

    def test_degree_zero_trivial(self):
        assert verify_hopf_axioms(0).all_passed

    def test_corrupted_coproduct_breaks_antipode_axiom(self):
        victim = parse("1,1',2'/2")
        report = hopfcheck.verify_axioms(_CorruptedOps(victim), 2, seed=5)
        failed = {r.name for r in report.results if not r.passed}
        assert "antipode-left" in failed or "antipode-right" in failed
        assert not report.all_passed
