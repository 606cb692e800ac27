"""Queries are pure functions over immutable inputs: many threads hammering
one shared theory/charset must reproduce the single-threaded answers."""

import random
from concurrent.futures import ThreadPoolExecutor

from hornsafe import (
    characteristic_set,
    charset_entails,
    deduce_envelope_charset,
    deduce_envelope_formula,
    deduce_exterior_charset,
    deduce_exterior_formula,
    deduce_interior_charset,
    deduce_interior_formula,
    entails,
    random_horn,
)
from hornsafe.oracle import all_models
from conftest import random_query_clause


def test_parallel_queries_are_deterministic():
    rng = random.Random(314159)
    theory = random_horn(9, 14, 4, seed=rng.getrandbits(48))
    charset = characteristic_set(all_models(theory))
    jobs = []
    for _ in range(120):
        clause = random_query_clause(9, rng)
        alpha = rng.randint(0, 4)
        jobs.append((clause, alpha))

    def run_all(job):
        clause, alpha = job
        return (
            entails(theory, clause).entailed,
            charset_entails(charset, clause).entailed,
            deduce_interior_formula(theory, clause, alpha).entailed,
            deduce_interior_charset(charset, clause, alpha).entailed,
            deduce_exterior_formula(theory, clause, alpha).entailed,
            deduce_exterior_charset(charset, clause, alpha).entailed,
            deduce_envelope_formula(theory, clause, alpha).entailed,
            deduce_envelope_charset(charset, clause, alpha).entailed,
        )

    sequential = [run_all(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(run_all, jobs))
    assert parallel == sequential
