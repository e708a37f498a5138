"""The desk-scale corpus of primitive almost simple rank-1 actions.

Enumerates, for each admissible group and maximal-subgroup recipe, the
conjugation action on the subgroup's conjugates, keeping only the faithful
primitive ones.  Recipe admissibility conditions are necessary but not
sufficient for maximality, so primitivity is always rechecked on the
constructed action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import is_primitive
from .action import conjugation_action
from .gf import prime_power
from . import families


@dataclass
class CorpusEntry:
    name: str
    q: int
    group_name: str
    key: str
    action: object  # GroupAction
    zeta: int


def _key_attempts(q):
    p, f = prime_power(q)
    attempts = [("borel", None), ("d-minus", None), ("d-plus", None)]
    for d in range(1, f):
        if f % d == 0:
            q0 = p ** d
            attempts.append(("subfield", q0))
    if f % 2 == 0 and q % 2 == 1:
        attempts.append(("pgl-subfield", p ** (f // 2)))
    attempts += [("a4", None), ("s4", None), ("klein", None), ("a5", None)]
    return attempts


def psl2_corpus(qs=(5, 7, 8, 9, 11, 13)):
    """Faithful primitive actions for every almost simple group over each q.

    Within one group, actions are deduplicated by conjugacy of the
    constructed subgroup: recipes that rebuild the same maximal class (for
    instance a Klein normalizer reached through two keys) contribute one
    entry, while distinct classes of the same order and degree (say a
    torus normalizer and an Alt(4), both of order 12) each keep theirs.
    """
    entries = []
    for q in qs:
        for group_name, group in families.almost_simple_psl2_groups(q):
            zeta = families.zeta_of(group, q)
            accepted = []
            for key, param in _key_attempts(q):
                try:
                    m = families.maximal_subgroup_psl2(group, q, key, param)
                except (ValueError, AssertionError):
                    continue
                if m.order() >= group.order():
                    continue
                label = tuple(sorted(h.images for h in m.element_list()))
                if any(label in prev._index for prev in accepted
                       if prev.degree == group.order() // m.order()):
                    continue
                keyname = key if param is None else "%s:%d" % (key, param)
                a = conjugation_action(
                    group, m, provenance="%s/coset:%s" % (group_name, keyname))
                if a.group.order() != group.order():
                    continue  # not faithful
                if a.degree < 2 or not is_primitive(a.group):
                    continue
                accepted.append(a)
                entries.append(CorpusEntry(
                    name="%s/coset:%s" % (group_name, keyname),
                    q=q, group_name=group_name, key=keyname,
                    action=a, zeta=zeta))
    return entries


def is_exceptional(entry):
    """True for the binary corpus actions: Sym(5) or Sym(6) acting naturally.

    These arise as a Klein-normalizer action over q = 5 and an icosahedral
    action over q = 9; they are the only primitive corpus actions without a
    non-binary certificate.
    """
    from .perm import factorial
    return (entry.action.degree in (5, 6)
            and entry.action.group.order() == factorial(entry.action.degree))
