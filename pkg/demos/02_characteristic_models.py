#!/usr/bin/env python3
"""Model-based representation: characteristic models instead of clauses.

A model set is the model set of some Horn theory exactly when it is closed
under componentwise AND.  The closure is regenerated from its extreme
members, so those members (the characteristic set) are a complete, often
compact, semantic representation -- and the deduction procedures can work
from them directly, without ever seeing a clause.
"""

from hornsafe import (
    Clause,
    charset_entails,
    characteristic_set,
    deduce_interior_charset,
    intersection_closure,
    is_intersection_closed,
    parse_horn_cnf,
    parse_model_set,
    serialize_model_set,
)
from hornsafe.oracle import all_models

m1 = parse_model_set("""p models 4 3
0101
1001
1000
""")

print("M1 closed under AND?", is_intersection_closed(m1))
m2 = intersection_closure(m1)
print("closure adds:", " ".join(m.to01() for m in m2 if m not in m1))
print("char(closure) == M1?", characteristic_set(m2) == m1)

# The same pipeline on the running example's theory.
kb = parse_horn_cnf("p hcnf 4 3\n-1 3 0\n-2 3 0\n-2 4 0\n")
mod = all_models(kb)
charset = characteristic_set(mod)
print(f"\ntheory has {len(mod)} models, {len(charset)} characteristic:")
print(serialize_model_set(charset), end="")

# Entailment from the characteristic set alone: intersect the members above
# the minimal falsifying vector.
for q in (Clause(pos={4}, neg={2}), Clause(pos={2}, neg={1})):
    d = charset_entails(charset, q)
    suffix = "" if d.entailed else f"  countermodel {d.witness.to01()}"
    print(f"charset |= {q}: {d.answer}{suffix}")

# Interior deduction from the charset scans the neighborhood of the minimal
# falsifier and records the non-models it stumbles on.
d = deduce_interior_charset(charset, Clause(neg={1}), 1)
print("\n1-interior |= ~x1:", d.answer)
print("non-models examined along the way:", " ".join(v.to01() for v in d.trace))
