"""Baseline Horn machinery: satisfiability, entailment, and model-set algebra.

Two representations of the same knowledge base are served here:

* formula-based: a :class:`~hornsafe.core.HornTheory`, queried through unit
  propagation (:class:`HornPropagator`), which computes the unique minimal
  model of the theory under forced literals in time linear in the theory
  size;
* model-based: a :class:`~hornsafe.core.ModelSet` holding characteristic
  models, queried by intersecting the members above a vector.

The bridge between them is the classical fact that a model set is the model
set of some Horn theory exactly when it is closed under componentwise AND,
and that the closure of a set is regenerated from its extreme ("characteristic")
members.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from .core import Clause, Decision, HornTheory, Model, ModelSet


class HornPropagator:
    """Reusable unit-propagation engine for one Horn theory.

    Construction builds the occurrence lists once (linear in the theory
    size); each :meth:`minimal_model` call then runs in O(theory size + n).
    Clauses are viewed as rules ``body -> head`` with the body being the
    negative index set; a clause with no positive literal is a pure
    constraint whose fully-true body is a conflict.
    """

    def __init__(self, theory: HornTheory):
        self.theory = theory
        self.n = theory.n
        self.heads: list[int] = []          # 0 when the clause has no positive literal
        self.body_sizes: list[int] = []
        self.occ: dict[int, list[int]] = {}  # body variable -> clause ids
        for k, c in enumerate(theory.clauses):
            self.heads.append(next(iter(c.pos)) if c.pos else 0)
            self.body_sizes.append(len(c.neg))
            for i in c.neg:
                self.occ.setdefault(i, []).append(k)

    def minimal_model(
        self,
        forced_true: Iterable[int] = (),
        forced_false: Iterable[int] = (),
    ) -> Optional[Model]:
        """Unique minimal model of the theory with the given variables pinned.

        Returns None when the constrained theory is unsatisfiable.
        """
        n = self.n
        state = bytearray(n + 1)  # 0 unseen, 1 true, 2 pinned false
        for i in forced_false:
            if not 1 <= i <= n:
                raise ValueError(f"forced index {i} out of range (n={n})")
            state[i] = 2
        trues: list[int] = []
        for i in forced_true:
            if not 1 <= i <= n:
                raise ValueError(f"forced index {i} out of range (n={n})")
            if state[i] == 2:
                return None
            if state[i] == 0:
                state[i] = 1
                trues.append(i)

        counters = self.body_sizes.copy()
        heads = self.heads
        occ = self.occ
        pending = list(trues)
        # Clauses whose body is already fully true fire immediately.
        for k, cnt in enumerate(counters):
            if cnt == 0:
                h = heads[k]
                if h == 0:
                    return None  # empty clause in the theory
                if state[h] == 2:
                    return None
                if state[h] == 0:
                    state[h] = 1
                    trues.append(h)
                    pending.append(h)
        while pending:
            i = pending.pop()
            for k in occ.get(i, ()):
                counters[k] -= 1
                if counters[k] == 0:
                    h = heads[k]
                    if h == 0:
                        return None  # negative clause with fully-true body
                    if state[h] == 2:
                        return None
                    if state[h] == 0:
                        state[h] = 1
                        trues.append(h)
                        pending.append(h)
        bits = 0
        for i in trues:
            bits |= 1 << (i - 1)
        return Model(n, bits)


def minimal_model(
    t: HornTheory,
    forced_true: Iterable[int] = (),
    forced_false: Iterable[int] = (),
) -> Optional[Model]:
    """One-shot form of :meth:`HornPropagator.minimal_model`."""
    return HornPropagator(t).minimal_model(forced_true, forced_false)


def entails(t: HornTheory, c: Clause) -> Decision:
    """Decide ``t |= c`` for an arbitrary clause ``c`` (Horn or not).

    The clause fails in some model of ``t`` exactly when the theory stays
    satisfiable with N(c) pinned true and P(c) pinned false; the minimal
    such model is the countermodel reported on NO.
    """
    if c.width > t.n:
        raise ValueError(f"clause [{c}] mentions x{c.width} but n={t.n}")
    m = minimal_model(t, c.neg, c.pos)
    if m is None:
        return Decision(True)
    return Decision(False, witness=m)


def min_model_above(charset: ModelSet, v: Model) -> Optional[Model]:
    """AND of all charset members componentwise >= ``v``; None when there are none.

    When the charset is the characteristic set of a Horn theory, this is the
    unique minimal model of the theory above ``v``.  The empty intersection
    deliberately yields None, never the all-ones vector: no member above ``v``
    means no model above ``v``.
    """
    if v.n != charset.n:
        raise ValueError("dimension mismatch")
    arr = charset.bits_array
    vb = np.uint64(v.bits)
    sel = arr[arr & vb == vb]
    if not sel.size:
        return None
    return Model(charset.n, int(np.bitwise_and.reduce(sel)))


def charset_entails(charset: ModelSet, c: Clause) -> Decision:
    """Decide entailment of ``c`` from a characteristic set in O(n |charset|).

    Let ``v*`` be the minimal vector falsifying ``c`` (exactly N(c) true).
    The theory entails ``c`` iff the minimal model above ``v*`` is absent or
    satisfies ``c``; otherwise that model is the countermodel.
    """
    if c.width > charset.n:
        raise ValueError(f"clause [{c}] mentions x{c.width} but n={charset.n}")
    w = min_model_above(charset, Model(charset.n, c.neg_mask))
    if w is None:
        return Decision(True)
    # w >= v*, so only a positive index of c can still satisfy it.
    if w.bits & c.pos_mask:
        return Decision(True)
    return Decision(False, witness=w)


def intersection_closure(ms: ModelSet) -> ModelSet:
    """Smallest superset of ``ms`` closed under componentwise AND.

    Fixpoint iteration on numpy arrays; the result can grow to 2^n, so
    callers at large ``n`` are expected to keep their sets small.
    """
    if not len(ms):
        return ms
    arr = np.unique(ms.bits_array)
    while True:
        rows = max(1, (1 << 22) // arr.size)  # bound each outer block to ~32MB
        chunks = [arr]
        for lo in range(0, arr.size, rows):
            block = arr[lo:lo + rows]
            chunks.append(np.unique(np.bitwise_and.outer(block, arr).ravel()))
        grown = np.unique(np.concatenate(chunks))
        if grown.size == arr.size:
            return ModelSet.from_bits(ms.n, arr.tolist())
        arr = grown


def is_intersection_closed(ms: ModelSet) -> bool:
    """Check closure under AND without materialising the closure."""
    if len(ms) <= 1:
        return True
    arr = np.unique(ms.bits_array)
    rows = max(1, (1 << 22) // arr.size)
    for lo in range(0, arr.size, rows):
        block = np.unique(np.bitwise_and.outer(arr[lo:lo + rows], arr).ravel())
        if not np.isin(block, arr, assume_unique=True).all():
            return False
    return True


def characteristic_set(ms: ModelSet) -> ModelSet:
    """Extract the extreme members of an AND-closed model set.

    A member is characteristic when it is not the AND of other members;
    equivalently, the AND of all strictly greater members differs from it.
    The input must be AND-closed (it is meant to be the full model set of a
    Horn theory), otherwise ValueError is raised.
    """
    if not is_intersection_closed(ms):
        raise ValueError("model set is not closed under intersection")
    arr = ms.bits_array
    keep = []
    for m in ms:
        vb = np.uint64(m.bits)
        above = arr[(arr & vb == vb) & (arr != vb)]
        if not above.size or int(np.bitwise_and.reduce(above)) != m.bits:
            keep.append(m.bits)
    return ModelSet.from_bits(ms.n, keep)
