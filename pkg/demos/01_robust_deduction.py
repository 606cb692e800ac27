#!/usr/bin/env python3
"""Tour of robust deduction on a small Horn knowledge base.

A knowledge base is rarely perfect: some rules are wrong, some are missing.
Querying the alpha-interior asks "does this hold even for assignments whose
whole alpha-neighborhood satisfies the KB?" (strong satisfaction), while the
alpha-exterior asks the generous version (some neighbor satisfies the KB).
A NO from the interior, or a YES from the exterior, is a conclusion that
survives up to alpha wrong bits.
"""

from hornsafe import (
    Clause,
    deduce_exterior_formula,
    deduce_interior_formula,
    entails,
    parse_horn_cnf,
)
from hornsafe.oracle import all_models, exterior_models, interior_models

kb = parse_horn_cnf("""c x1 -> x3, x2 -> x3, x2 -> x4
p hcnf 4 3
-1 3 0
-2 3 0
-2 4 0
""")

print("knowledge base:")
for clause in kb.clauses:
    print("   ", clause)

mod = all_models(kb)
print("\nmodels:", " ".join(m.to01() for m in mod))
print("1-interior:", " ".join(m.to01() for m in interior_models(mod, 1)))
print("1-exterior leaves out:",
      " ".join(m.to01() for m in all_models(parse_horn_cnf("p hcnf 4 0"))
               if m not in exterior_models(mod, 1)))

# Plain deduction vs robust deduction.
queries = [Clause(neg={1}), Clause(neg={3}), Clause(pos={4}, neg={2})]
print(f"\n{'query':>12} {'plain':>6} {'interior a=1':>13} {'exterior a=1':>13}")
for q in queries:
    plain = entails(kb, q)
    strong = deduce_interior_formula(kb, q, 1)
    weak = deduce_exterior_formula(kb, q, 1)
    print(f"{str(q):>12} {plain.answer:>6} {strong.answer:>13} {weak.answer:>13}")

# Countermodels certify every NO.
d = deduce_interior_formula(kb, Clause(neg={3}), 1)
print("\ninterior countermodel for ~x3:", d.witness.to01(),
      "(the unique model whose whole 1-neighborhood satisfies the KB)")

# At alpha = 2 the interior is inconsistent (entails everything), and the
# exterior is tautologous (entails nothing but tautologies).
print("\nalpha = 2:")
print("   interior |= empty clause:",
      deduce_interior_formula(kb, Clause(), 2).answer)
print("   exterior |= x1:",
      deduce_exterior_formula(kb, Clause(pos={1}), 2).answer)
