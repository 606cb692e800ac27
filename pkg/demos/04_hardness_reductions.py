#!/usr/bin/env python3
"""Graph reductions as cross-validation: the same instances that witness
hardness double as test generators with independently computable answers.

Three constructions tie graph problems to robust-deduction queries:
independent sets to formula-based exterior queries, independent sets again
to charset-based interior consistency, and vertex covers to charset-based
exterior queries over a padded variable set.  On small graphs, plain
subset enumeration gives the ground truth.
"""

from hornsafe import (
    Clause,
    deduce_exterior_charset,
    deduce_exterior_formula,
    deduce_interior_charset,
    has_independent_set,
    independent_set_instance,
    interior_consistency_instance,
    max_independent_set_size,
    min_vertex_cover_size,
    named_graph,
    vertex_cover_instance,
)

for spec in ("k3", "p3", "c5"):
    g = named_graph(spec)
    print(f"\n=== {spec}: {g.nv} vertices, edges {g.edges}")
    print(f"    max independent set {max_independent_set_size(g)}, "
          f"min vertex cover {min_vertex_cover_size(g)}")

    for k in (2, g.nv):
        theory, clause, alpha = independent_set_instance(g, k)
        d = deduce_exterior_formula(theory, clause, alpha)
        print(f"    exterior(edge theory, a={alpha}) |= all-negative query: "
              f"{d.answer}  <=> no independent set of size >= {k}: "
              f"{not has_independent_set(g, k)}")

    charset, alpha = interior_consistency_instance(g, 2)
    d = deduce_interior_charset(charset, Clause(), alpha)
    verdict = "inconsistent" if d.entailed else "consistent"
    print(f"    interior from charset (a={alpha}) is {verdict}; "
          f"independent set of size >= 2 exists: {has_independent_set(g, 2)}")

    k = 1
    charset, clause, alpha = vertex_cover_instance(g, k)
    d = deduce_exterior_charset(charset, clause, alpha)
    print(f"    exterior from charset over {charset.n} padded variables "
          f"(a={k}) |= query: {d.answer}  <=> no vertex cover of size <= {k}: "
          f"{min_vertex_cover_size(g) > k}")
