"""The enumeration oracle itself: golden model lists and operator algebra."""

import random

import pytest

from hornsafe import Clause, HornTheory, Model, ModelSet, random_horn
from hornsafe.oracle import (
    all_models,
    envelope_models,
    exterior_models,
    interior_models,
    oracle_deduce,
)
from conftest import EX2_MODELS


class TestAllModels:
    def test_example2_model_list(self, ex2):
        assert [m.to01() for m in all_models(ex2)] == sorted(EX2_MODELS)

    def test_empty_theory(self):
        assert len(all_models(HornTheory(2))) == 4

    def test_contradiction(self):
        t = HornTheory(2, (Clause(pos={1}), Clause(neg={1})))
        assert len(all_models(t)) == 0

    def test_cap(self):
        with pytest.raises(ValueError, match="capped"):
            all_models(HornTheory(30))


class TestInteriorExteriorModels:
    def test_example2_interior(self, ex2):
        mod = all_models(ex2)
        assert [m.to01() for m in interior_models(mod, 1)] == ["0011"]
        assert len(interior_models(mod, 2)) == 0

    def test_example2_exterior(self, ex2):
        mod = all_models(ex2)
        e1 = exterior_models(mod, 1)
        assert len(e1) == 15
        assert Model.from_string("1100") not in e1
        assert Model.from_string("0101") in e1
        assert len(exterior_models(mod, 2)) == 16

    def test_alpha_zero_is_identity(self, ex2):
        mod = all_models(ex2)
        assert interior_models(mod, 0) == mod
        assert exterior_models(mod, 0) == mod


class TestOracleDeduce:
    def test_interior_model_satisfies(self):
        ms = ModelSet(4, (Model.from_string("0011"),))
        assert oracle_deduce(ms, Clause(neg={1}))

    def test_empty_set_entails_empty_clause(self):
        assert oracle_deduce(ModelSet(3), Clause())

    def test_example2_not_entailing_x3(self, ex2):
        assert not oracle_deduce(all_models(ex2), Clause(pos={3}))


class TestEnvelopeModels:
    def test_exterior_envelope_is_full_cube(self, ex2):
        # 1101 and 1110 live in the 1-exterior; their AND re-enters 1100.
        env = envelope_models(exterior_models(all_models(ex2), 1))
        assert len(env) == 16

    def test_example1(self, m1, m2):
        assert envelope_models(m1) == m2

    def test_idempotent_on_closed(self, m2):
        assert envelope_models(m2) == m2


class TestOperatorAlgebra:
    """Composition laws and inclusion chains, checked on random model sets."""

    def test_identities(self):
        rng = random.Random(2024)
        for _ in range(50):
            n = rng.randint(2, 7)
            t = random_horn(n, rng.randint(0, 10), 3, seed=rng.getrandbits(40))
            mod = all_models(t)
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            assert interior_models(interior_models(mod, a), b) == interior_models(mod, a + b)
            assert exterior_models(exterior_models(mod, a), b) == exterior_models(mod, a + b)
            assert interior_models(mod, a).bits_set <= mod.bits_set
            assert mod.bits_set <= exterior_models(mod, a).bits_set
            if a <= b:
                assert interior_models(mod, b).bits_set <= interior_models(mod, a).bits_set
                assert exterior_models(mod, a).bits_set <= exterior_models(mod, b).bits_set
            env = envelope_models(exterior_models(mod, a))
            assert envelope_models(env) == env
            assert exterior_models(mod, a).bits_set <= env.bits_set
            # envelope is monotone in the underlying model set
            sub = ModelSet.from_bits(
                n, [b for b in mod.bits_set if rng.random() < 0.5]
            )
            assert envelope_models(sub).bits_set <= envelope_models(mod).bits_set

    def test_interior_distributes_over_intersection(self):
        rng = random.Random(11)
        for _ in range(40):
            n = rng.randint(2, 6)
            m1 = all_models(random_horn(n, rng.randint(0, 8), 3, seed=rng.getrandbits(40)))
            m2 = all_models(random_horn(n, rng.randint(0, 8), 3, seed=rng.getrandbits(40)))
            both = ModelSet.from_bits(n, m1.bits_set & m2.bits_set)
            a = rng.randint(0, 3)
            lhs = interior_models(both, a)
            rhs = ModelSet.from_bits(
                n, interior_models(m1, a).bits_set & interior_models(m2, a).bits_set
            )
            assert lhs == rhs

    def test_sandwich_inclusions(self):
        rng = random.Random(5150)
        for _ in range(40):
            n = rng.randint(2, 6)
            mod = all_models(random_horn(n, rng.randint(0, 8), 3, seed=rng.getrandbits(40)))
            a, b = rng.randint(0, 3), rng.randint(0, 3)
            lhs = exterior_models(interior_models(mod, b), a)
            mid = (
                exterior_models(mod, a - b) if a >= b else interior_models(mod, b - a)
            )
            rhs = interior_models(exterior_models(mod, a), b)
            assert lhs.bits_set <= mid.bits_set <= rhs.bits_set
