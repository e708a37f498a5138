"""Group actions with canonical point labels.

A GroupAction bundles a permutation group on {0..n-1} with an opaque label
per point and a `push` map taking elements of the originating ("source")
group to their induced permutations of the labeled point set.  Labels are
sorted, so two runs of the same construction agree point-for-point.
"""

from __future__ import annotations

from .perm import Permutation, PermutationGroup


class GroupAction:
    """A permutation group together with labeled points and provenance."""

    def __init__(self, group, point_labels, provenance, source=None, push_fn=None):
        if len(set(point_labels)) != len(point_labels):
            raise ValueError("duplicate point labels")
        if group.degree != len(point_labels):
            raise ValueError("degree/label mismatch")
        self.group = group
        self.point_labels = list(point_labels)
        self.provenance = provenance
        self.source = source if source is not None else group
        self._push_fn = push_fn
        self._index = {lab: i for i, lab in enumerate(self.point_labels)}

    @property
    def degree(self):
        return self.group.degree

    def label_index(self, label):
        return self._index[label]

    def push(self, g):
        """Image in Sym(points) of an element g of the source group."""
        if self._push_fn is None:
            return g
        return self._push_fn(g)

    def __repr__(self):
        return "GroupAction(%s, degree=%d)" % (self.provenance, self.degree)


def natural_action(group, provenance="natural", labels=None):
    """Wrap a permutation group as the action on its own point set."""
    if labels is None:
        labels = list(range(group.degree))
    return GroupAction(group, labels, provenance)


def orbit_action(source, seed, apply_fn, provenance, index_cap=None):
    """Action of `source` on the orbit of `seed` under apply_fn(obj, gen).

    Objects must be hashable and totally ordered; points are labeled by the
    sorted orbit, giving a deterministic numbering.  apply_fn must satisfy
    apply_fn(apply_fn(x, a), b) = apply_fn(x, a*b).
    """
    gens = source.generators
    seen = {seed}
    queue = [seed]
    while queue:
        obj = queue.pop()
        for g in gens:
            img = apply_fn(obj, g)
            if img not in seen:
                if index_cap is not None and len(seen) >= index_cap:
                    raise ValueError("orbit exceeds cap %d" % index_cap)
                seen.add(img)
                queue.append(img)
    labels = sorted(seen)
    index = {lab: i for i, lab in enumerate(labels)}

    def push(g):
        return Permutation([index[apply_fn(lab, g)] for lab in labels])

    image_gens = [push(g) for g in gens]
    if not image_gens:
        image_gens = [Permutation.identity(len(labels))]
    group = PermutationGroup(image_gens, degree=len(labels))
    act = GroupAction(group, labels, provenance, source=source, push_fn=push)
    act.seed_index = index[seed]
    return act


def conjugation_action(group, subgroup, provenance=None, index_cap=100000):
    """Action of `group` on the set of its conjugates of `subgroup`.

    A conjugate is labeled by the sorted tuple of its elements' image
    tuples.  This is the paper-style model of a primitive action as the
    orbit of a (maximal-ish) subgroup under conjugation.
    """
    els = subgroup.element_list()
    seed = tuple(sorted(h.images for h in els))
    if provenance is None:
        provenance = "conjugates of order-%d subgroup" % len(els)
    inv_cache = {}

    def apply_fn(obj, g):
        gi = g.images
        gv = inv_cache.get(id(g))
        if gv is None:
            gv = g.inverse().images
            inv_cache[id(g)] = gv
        return tuple(sorted(tuple(gi[him[p]] for p in gv) for him in obj))

    return orbit_action(group, seed, apply_fn, provenance, index_cap=index_cap)


def coset_action(group, subgroup, provenance=None, index_cap=100000):
    """Action of `group` on the right cosets of `subgroup`.

    Each coset Hx is labeled by the minimum of the image tuples of its
    elements, a canonical representative independent of how the coset was
    reached.
    """
    if subgroup.degree != group.degree:
        raise ValueError("subgroup degree mismatch")
    for g in subgroup.generators:
        if g not in group:
            raise ValueError("subgroup is not contained in group")
    sub_els = subgroup.element_list()
    if provenance is None:
        provenance = "cosets of order-%d subgroup" % len(sub_els)

    def canon(obj):
        x = Permutation(obj)
        return min((h * x).images for h in sub_els)

    def apply_fn(obj, g):
        return canon(tuple(g.images[p] for p in obj))

    seed = canon(tuple(Permutation.identity(group.degree).images))
    return orbit_action(group, seed, apply_fn, provenance, index_cap=index_cap)
