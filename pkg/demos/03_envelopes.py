#!/usr/bin/env python3
"""Horn envelopes of exteriors: regaining Horn-ness, and what it costs.

Interiors of Horn theories stay Horn; exteriors generally do not, so their
model sets are not AND-closed and the cheap Horn query machinery breaks.
The Horn envelope -- the least Horn upper bound -- restores closure at the
price of extra models.  Deduction against the envelope of the exterior is
linear from characteristic models, and the weakening is visible: queries the
exterior entails can fail against its envelope.
"""

from hornsafe import (
    Clause,
    characteristic_set,
    deduce_envelope_charset,
    deduce_envelope_formula,
    deduce_exterior_formula,
    is_intersection_closed,
    parse_horn_cnf,
)
from hornsafe.oracle import all_models, envelope_models, exterior_models

kb = parse_horn_cnf("p hcnf 4 3\n-1 3 0\n-2 3 0\n-2 4 0\n")
mod = all_models(kb)
ext = exterior_models(mod, 1)
print("1-exterior closed under AND?", is_intersection_closed(ext))
env = envelope_models(ext)
print(f"exterior has {len(ext)} models; its envelope has {len(env)}",
      "(the full cube -- closure re-admits 1100 = 1101 AND 1110)")

query = Clause(pos={3, 4}, neg={1, 2})
print(f"\nexterior |= {query}:",
      deduce_exterior_formula(kb, query, 1).answer)
d = deduce_envelope_formula(kb, query, 1)
print(f"envelope |= {query}:", d.answer,
      f" countermodel {d.witness.to01()}" if d.witness else "")

# The charset route decides envelope queries in one linear pass.
charset = characteristic_set(mod)
d = deduce_envelope_charset(charset, query, 1)
print("same answer from characteristic models:", d.answer)
if d.trace:
    print("member violating the off-bit threshold:", d.trace[0].to01())

# For purely negative theories, exteriors stay Horn and the envelope
# changes nothing.
negative = parse_horn_cnf("p hcnf 3 2\n-1 -2 0\n-2 -3 0\n")
print("\nnegative theory: envelope == exterior on every query/alpha")
for alpha in (0, 1, 2):
    for q in (Clause(neg={1, 2, 3}), Clause(pos={2}), Clause()):
        a = deduce_exterior_formula(negative, q, alpha).answer
        b = deduce_envelope_formula(negative, q, alpha).answer
        assert a == b
        print(f"   alpha={alpha} {str(q):>10}: {a}")
