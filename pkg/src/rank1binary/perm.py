"""Exact permutation-group algorithms.

Everything here works with the right-action convention: a point w is mapped
by g to ``w^g = g.images[w]``, and products act left-to-right, so
``w^(a*b) = (w^a)^b``.  All objects are immutable after construction and may
be shared freely between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce


class DegreeMismatchError(ValueError):
    pass


class Permutation:
    """A bijection on {0..degree-1}, stored as an image table."""

    __slots__ = ("images", "_hash")

    def __init__(self, images, check=True):
        images = tuple(images)
        if check and set(images) != set(range(len(images))):
            raise ValueError("image table is not a bijection on {0..%d}" % (len(images) - 1))
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, degree):
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree, cycles):
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + (cyc[0],) if isinstance(cyc, tuple) else cyc[1:] + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise DegreeMismatchError("cannot compose degree %d with degree %d"
                                      % (len(self.images), len(other.images)))
        o = other.images
        return Permutation([o[i] for i in self.images], check=False)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv, check=False)

    def __pow__(self, n):
        if n == 0:
            return Permutation.identity(self.degree)
        if n < 0:
            return self.inverse() ** (-n)
        half = self ** (n // 2)
        sq = half * half
        return sq * self if n % 2 else sq

    def conjugate(self, g):
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def support(self):
        return frozenset(i for i, j in enumerate(self.images) if i != j)

    def fixed_points(self):
        return frozenset(i for i, j in enumerate(self.images) if i == j)

    def cycles(self, include_fixed=False):
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            j = self.images[i]
            seen.add(i)
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return "Permutation(%s)" % self.cycle_string()


def orbit(start, gens):
    """Orbit of a point with a Schreier transversal.

    Returns (orbit_list, transversal) where transversal[p] is a group element
    sending start to p.  BFS in generator order, so the result is
    deterministic for a fixed generator list.
    """
    if not gens:
        raise ValueError("need at least one generator (use the identity)")
    degree = gens[0].degree
    if not 0 <= start < degree:
        raise ValueError("start point %d out of range" % start)
    transversal = {start: Permutation.identity(degree)}
    queue = [start]
    orb = [start]
    while queue:
        p = queue.pop(0)
        for g in gens:
            q = g.images[p]
            if q not in transversal:
                transversal[q] = transversal[p] * g
                orb.append(q)
                queue.append(q)
    return orb, transversal


def orbits_of(gens, degree):
    """All orbits on {0..degree-1}, each sorted, in order of smallest point."""
    seen = set()
    out = []
    for p in range(degree):
        if p in seen:
            continue
        orb, _ = orbit(p, gens)
        seen.update(orb)
        out.append(sorted(orb))
    return out


@dataclass(frozen=True)
class ChainLevel:
    base_point: int
    gens: tuple          # strong generators for this level's group
    transversal: dict    # orbit point -> coset representative (base_point^rep = point)


class _MutableLevel:
    __slots__ = ("b", "gens", "trans", "orbit", "done")

    def __init__(self, b, degree):
        self.b = b
        self.gens = []
        self.trans = {b: Permutation.identity(degree)}
        self.orbit = [b]
        self.done = set()   # processed (orbit point, gen index) Schreier pairs


class StabilizerChain:
    """Base and strong generating set, built by deterministic Schreier-Sims.

    Base points are chosen as the smallest moved point unless a base prefix
    is prescribed, so two runs over the same generators agree bit-for-bit.
    """

    def __init__(self, gens, degree, base_prefix=()):
        self.degree = degree
        self.levels = []
        self._build(list(gens), list(base_prefix))

    def _build(self, gens, base_prefix):
        degree = self.degree
        levels = [_MutableLevel(p, degree) for p in base_prefix]
        tagged = []   # (deepest level the gen belongs to, gen)

        def strip(g, start):
            for i in range(start, len(levels)):
                img = g.images[levels[i].b]
                rep = levels[i].trans.get(img)
                if rep is None:
                    return g, i
                g = g * rep.inverse()
            return g, len(levels)

        def extend_orbit(i):
            # BFS restart over all gens belonging to level i; pays only for
            # newly reached points
            lv = levels[i]
            mygens = [g for tag, g in tagged if tag >= i]
            queue = list(lv.orbit)
            while queue:
                p = queue.pop(0)
                rep = lv.trans[p]
                for s in mygens:
                    q = s.images[p]
                    if q not in lv.trans:
                        lv.trans[q] = rep * s
                        lv.orbit.append(q)
                        queue.append(q)

        def register(j, g):
            # g fixes the base points of levels < j and is not the identity
            if j == len(levels):
                levels.append(_MutableLevel(min(g.support()), degree))
            tagged.append((j, g))
            for i in range(j + 1):
                extend_orbit(i)

        for g in gens:
            if not g.is_identity():
                j = 0
                for lv in levels:
                    if g.images[lv.b] != lv.b:
                        break
                    j += 1
                register(min(j, len(levels)), g)

        # fixpoint: every Schreier generator at every level must sift to the
        # identity through the deeper levels
        while True:
            dirty = False
            for i in range(len(levels)):
                lv = levels[i]
                pairs = [(p, k) for p in lv.orbit
                         for k in range(len(tagged))
                         if tagged[k][0] >= i and (p, k) not in lv.done]
                for p, k in pairs:
                    lv.done.add((p, k))
                    s = tagged[k][1]
                    rep = lv.trans[p]
                    q = s.images[p]
                    schreier = rep * s * lv.trans[q].inverse()
                    if schreier.is_identity():
                        continue
                    res, j = strip(schreier, i + 1)
                    if not res.is_identity():
                        register(j, res)
                        dirty = True
                if pairs:
                    dirty = True
            if not dirty:
                break

        self.levels = [
            ChainLevel(lv.b, tuple(g for tag, g in tagged if tag >= i), dict(lv.trans))
            for i, lv in enumerate(levels)
        ]

    @property
    def base(self):
        return [lv.base_point for lv in self.levels]

    def order(self):
        return reduce(lambda a, b: a * b, (len(lv.transversal) for lv in self.levels), 1)

    def sift(self, g):
        """Return the residue of g after sifting; identity iff g is a member."""
        for lv in self.levels:
            img = g.images[lv.base_point]
            if img not in lv.transversal:
                return g
            g = g * lv.transversal[img].inverse()
        return g

    def contains(self, g):
        if g.degree != self.degree:
            return False
        return self.sift(g).is_identity()

    def elements(self):
        """Iterate over all group elements, deterministically."""
        degree = self.degree

        def rec(i):
            if i == len(self.levels):
                yield Permutation.identity(degree)
                return
            reps = [self.levels[i].transversal[p] for p in sorted(self.levels[i].transversal)]
            for h in rec(i + 1):
                for t in reps:
                    yield h * t

        return rec(0)

    def stabilizer_gens(self, nfixed):
        """Strong generators of the stabilizer of the first nfixed base points."""
        if nfixed >= len(self.levels):
            return []
        return list(self.levels[nfixed].gens)


class PermutationGroup:
    """A permutation group given by generators, with a lazily built chain."""

    def __init__(self, gens, degree=None):
        gens = [g for g in gens if not g.is_identity()]
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError("generator degrees disagree")
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = None

    @classmethod
    def trivial(cls, degree):
        return cls([], degree=degree)

    @property
    def chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self.generators, self.degree)
        return self._chain

    def chain_with_base(self, base_prefix):
        return StabilizerChain(self.generators, self.degree, base_prefix=tuple(base_prefix))

    def order(self):
        return self.chain.order()

    def __contains__(self, g):
        return self.chain.contains(g)

    def __len__(self):
        return self.order()

    def identity(self):
        return Permutation.identity(self.degree)

    def elements(self):
        return self.chain.elements()

    def element_list(self):
        return list(self.elements())

    def is_trivial(self):
        return not self.generators

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(g in other for g in self.generators)

    def orbit_of(self, point):
        gens = self.generators or [self.identity()]
        return orbit(point, gens)

    def orbits(self):
        gens = self.generators or [self.identity()]
        return orbits_of(gens, self.degree)

    def is_transitive(self):
        orb, _ = self.orbit_of(0)
        return len(orb) == self.degree

    def random_like_stream(self):
        # deterministic element stream in chain order; used by bounded searches
        return self.elements()

    def __repr__(self):
        return "PermutationGroup(degree=%d, ngens=%d)" % (self.degree, len(self.generators))


_TRANSPORTER_ENUM_THRESHOLD = 6000


def _point_data(group, rep_point):
    """Cached (transversal over orbit of rep_point, stabilizer of rep_point)."""
    cache = getattr(group, "_point_data_cache", None)
    if cache is None:
        cache = {}
        group._point_data_cache = cache
    if rep_point not in cache:
        gens = list(group.generators) or [group.identity()]
        _, trans = orbit(rep_point, gens)
        cache[rep_point] = (trans, stabilizer_of_point(group, rep_point))
    return cache[rep_point]


def _cached_elements(group):
    elems = getattr(group, "_element_cache", None)
    if elems is None:
        elems = group.element_list()
        group._element_cache = elems
    return elems


def transporter(I, J, group):
    """Some x in the group with I^x = J entrywise, or None.

    Repeated entries are allowed; inconsistent repeats give None immediately.
    The search peels constraints one point at a time through cached point
    stabilizers, enumerating once the remaining stabilizer is small.
    """
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J):
        raise ValueError("tuples must have equal length")
    for p in I + J:
        if not 0 <= p < group.degree:
            raise ValueError("tuple entry %r out of range" % (p,))
    # condense repeats into a consistent distinct-point constraint list
    constraint = {}
    for a, b in zip(I, J):
        if a in constraint:
            if constraint[a] != b:
                return None
        else:
            constraint[a] = b
    src = list(constraint)
    dst = [constraint[a] for a in src]
    if len(set(dst)) != len(dst):
        return None
    return _transporter_rec(group, list(zip(src, dst)))


def _transporter_rec(group, constraints):
    if not constraints:
        return group.identity()
    if group.order() <= _TRANSPORTER_ENUM_THRESHOLD:
        for g in _cached_elements(group):
            if all(g.images[a] == b for a, b in constraints):
                return g
        return None
    (a, b), rest = constraints[0], constraints[1:]
    gens = list(group.generators) or [group.identity()]
    orb, _ = orbit(a, gens)
    rep = min(orb)
    trans, stab = _point_data(group, rep)
    if b not in trans:
        return None
    # solutions mapping a to b form the coset trans[a]^-1 * Stab(rep) * trans[b]
    u = trans[a].inverse()
    v = trans[b]
    vinv = v.inverse()
    inner = [(u.images[x], vinv.images[y]) for x, y in rest]
    s = _transporter_rec(stab, inner)
    if s is None:
        return None
    return u * s * v


def setwise_stabilizer(points, group):
    """The exact setwise stabilizer {x : points^x = points}.

    Backtrack over a stabilizer chain whose base starts with the given
    points.  The empty set stabilizes to the whole group by convention.
    """
    pts = sorted(set(points))
    if not pts:
        return group
    if len(pts) == group.degree:
        return group
    pset = set(pts)
    chain = group.chain_with_base(pts)
    found = []
    identity = Permutation.identity(group.degree)

    levels = chain.levels
    nlev = len(levels)

    def rec(i, acc):
        # acc is the product t_{i-1} * ... * t_0 (applied after deeper factors)
        if i == nlev:
            found.append(acc)
            return
        b = levels[i].base_point
        constrained = b in pset
        for p in sorted(levels[i].transversal):
            t = levels[i].transversal[p]
            if constrained and acc.images[p] not in pset:
                continue
            rec(i + 1, t * acc)

    rec(0, identity)
    # every element of the setwise stabilizer appears as a leaf: base points
    # include all of pts, so the pruning is exact
    stab = [g for g in found if all(g.images[p] in pset for p in pts)]
    return PermutationGroup([g for g in stab if not g.is_identity()], degree=group.degree)


def pointwise_stabilizer(points, group):
    pts = list(dict.fromkeys(points))
    if not pts:
        return group
    chain = group.chain_with_base(pts)
    # levels whose base point lies in pts come first (prescribed); the tail
    # generates the pointwise stabilizer
    n = 0
    remaining = set(pts)
    for lv in chain.levels:
        if lv.base_point in remaining:
            remaining.discard(lv.base_point)
            n += 1
        else:
            break
    gens = chain.stabilizer_gens(n)
    gens = [g for g in gens if all(g.images[p] == p for p in pts)]
    return PermutationGroup(gens, degree=group.degree)


def induced_action(points, group):
    """Restrict the setwise stabilizer to the given points.

    Returns (image_group, point_map, kernel) where image_group acts
    faithfully on {0..len(points)-1} via point_map (sorted original points)
    and kernel is the pointwise stabilizer inside the setwise stabilizer.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("need a nonempty point set")
    stab = setwise_stabilizer(pts, group)
    index = {p: i for i, p in enumerate(pts)}
    img_gens = []
    for g in stab.generators:
        img_gens.append(Permutation([index[g.images[p]] for p in pts], check=False))
    image = PermutationGroup([g for g in img_gens if not g.is_identity()], degree=len(pts))
    kernel = pointwise_stabilizer(pts, stab)
    return image, pts, kernel


def restrict_to(points, g):
    """Restriction of g to an invariant point list (sorted order labels)."""
    pts = sorted(set(points))
    index = {p: i for i, p in enumerate(pts)}
    return Permutation([index[g.images[p]] for p in pts])


def minimal_block_with(group, pair):
    """Smallest block containing the two points (Atkinson's algorithm).

    Returns the block partition as a list of sorted blocks, or None when the
    minimal block is the whole point set.
    """
    degree = group.degree
    parent = list(range(degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return None
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        return rx, ry

    a, b = pair
    queue = [(a, b)]
    parent[max(a, b)] = min(a, b)
    while queue:
        x, y = queue.pop()
        for g in group.generators:
            u = union(g.images[x], g.images[y])
            if u:
                queue.append(u)
    blocks = {}
    for p in range(degree):
        blocks.setdefault(find(p), []).append(p)
    out = [sorted(v) for v in blocks.values()]
    if len(out) == 1:
        return None
    return sorted(out)


def is_primitive(group):
    """Transitive with no nontrivial proper block system."""
    if group.degree == 1:
        return True
    if not group.is_transitive():
        return False
    if group.degree == 2:
        return True
    for b in range(1, group.degree):
        blocks = minimal_block_with(group, (0, b))
        if blocks is not None and any(len(blk) > 1 for blk in blocks):
            return False
    return True


def pair_orbit_count(group):
    """Number of orbits on ordered pairs of distinct points (suborbit count)."""
    if not group.is_transitive():
        raise ValueError("pair-orbit count is for transitive groups")
    stab = stabilizer_of_point(group, 0)
    gens = stab.generators or [group.identity()]
    orbs = orbits_of(gens, group.degree)
    # orbits of the point stabilizer on all points; drop the fixed point orbit {0}
    return len([o for o in orbs if o != [0]])


def stabilizer_of_point(group, point):
    cache = getattr(group, "_stab_cache", None)
    if cache is None:
        cache = {}
        group._stab_cache = cache
    if point not in cache:
        chain = group.chain_with_base([point])
        n = 1 if chain.levels and chain.levels[0].base_point == point else 0
        cache[point] = PermutationGroup(chain.stabilizer_gens(n), degree=group.degree)
    return cache[point]


def is_two_transitive(group):
    if group.degree < 2:
        return False
    return group.is_transitive() and pair_orbit_count(group) == 1


def classify_action(group):
    """{transitive, primitive, two_transitive} flags for a permutation group."""
    transitive = group.is_transitive()
    return {
        "transitive": transitive,
        "primitive": is_primitive(group) if transitive else False,
        "two_transitive": is_two_transitive(group) if transitive else False,
    }


def conjugacy_class(x, group):
    """The orbit of x under conjugation by the group, as a list."""
    if x not in group:
        raise ValueError("element is not in the group")
    seen = {x}
    queue = [x]
    inv = {g: g.inverse() for g in group.generators}
    while queue:
        y = queue.pop()
        for g in group.generators:
            z = inv[g] * y * g
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen, key=lambda p: p.images)


def involutions(group):
    return [g for g in group.elements() if not g.is_identity() and (g * g).is_identity()]


class Undecided(Exception):
    """Raised when a bounded search exceeds its budget."""


def two_rank(group, order_budget=10 ** 6):
    """Largest k with an elementary-abelian 2-subgroup of order 2^k."""
    if group.order() > order_budget:
        raise Undecided("group order exceeds the two_rank budget")
    invs = involutions(group)
    if not invs:
        return 0
    inv_set = set(invs)
    best = [1]

    def extend(subgroup_elems, candidates):
        # subgroup_elems: set of non-identity elements of the current E_2^k
        k = (len(subgroup_elems) + 1).bit_length() - 1
        best[0] = max(best[0], k)
        for i, t in enumerate(candidates):
            if t in subgroup_elems:
                continue
            if all((t * s) == (s * t) for s in subgroup_elems):
                new_elems = set(subgroup_elems)
                new_elems.add(t)
                for s in subgroup_elems:
                    new_elems.add(s * t)
                extend(new_elems, candidates[i + 1:])

    for i, t in enumerate(invs):
        extend({t}, invs[i + 1:])
    return best[0]


def subgroup_closure(elems, degree):
    """Close a set of permutations under products; returns the element set."""
    elems = set(elems)
    elems.add(Permutation.identity(degree))
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for g in list(elems):
            for y in (x * g, g * x):
                if y not in elems:
                    elems.add(y)
                    frontier.append(y)
    return elems


def generating_subset(elems, degree):
    """A small generating list for the subgroup formed by a closed element set."""
    target = len(set(elems)) + (1 if Permutation.identity(degree) not in set(elems) else 0)
    gens = []
    sub = PermutationGroup.trivial(degree)
    for h in sorted(set(elems), key=lambda p: p.images):
        if h.is_identity() or h in sub:
            continue
        gens.append(h)
        sub = PermutationGroup(gens, degree=degree)
        if sub.order() >= target:
            break
    return gens


def normalizer_brute(subgroup_elems, group):
    """N_group(H) by filtering all group elements; H given as element set."""
    hset = set(subgroup_elems)
    hgens = generating_subset(hset, group.degree)
    out = []
    for g in group.elements():
        gi = g.inverse()
        if all((gi * h * g) in hset for h in hgens):
            out.append(g)
    return PermutationGroup([g for g in out if not g.is_identity()], degree=group.degree)


def are_isomorphic(g1, g2, budget=200000):
    """Brute generator-image isomorphism test for small groups."""
    n1, n2 = g1.order(), g2.order()
    if n1 != n2:
        return False
    if n1 == 1:
        return True
    e1 = g1.element_list()
    e2 = g2.element_list()
    if _order_histogram(e1) != _order_histogram(e2):
        return False
    gens = _small_generating_set(g1, e1)
    gen_orders = [g.order() for g in gens]
    by_order = {}
    for h in e2:
        by_order.setdefault(h.order(), []).append(h)
    count = [0]

    def assign(i, images):
        count[0] += 1
        if count[0] > budget:
            raise Undecided("isomorphism search budget exceeded")
        if i == len(gens):
            return _check_hom(gens, images, g1, g2)
        for h in by_order.get(gen_orders[i], []):
            if assign(i + 1, images + [h]):
                return True
        return False

    return assign(0, [])


def _order_histogram(elems):
    hist = {}
    for e in elems:
        o = e.order()
        hist[o] = hist.get(o, 0) + 1
    return hist


def _small_generating_set(group, elems=None):
    if not group.generators:
        return []
    target = group.order()
    if elems is None:
        elems = group.element_list()
    # try single generators, then pairs, then fall back to given generators
    for e in elems:
        if e.order() == target:
            return [e]
    for a in elems:
        if a.is_identity():
            continue
        for b in elems:
            if b.is_identity():
                continue
            if PermutationGroup([a, b], degree=group.degree).order() == target:
                return [a, b]
    return list(group.generators)


def _check_hom(gens, images, g1, g2):
    """Does gens -> images extend to an isomorphism?  Brute word check."""
    if PermutationGroup([h for h in images if not h.is_identity()],
                        degree=g2.degree).order() != g1.order():
        return False
    # multiplication-table check via a word map built by BFS
    word = {Permutation.identity(g1.degree): Permutation.identity(g2.degree)}
    queue = [Permutation.identity(g1.degree)]
    while queue:
        x = queue.pop(0)
        for g, h in zip(gens, images):
            y = x * g
            if y not in word:
                word[y] = word[x] * h
                queue.append(y)
    if len(word) != g1.order():
        return False
    image_set = set(word.values())
    if len(image_set) != len(word):
        return False
    # verify homomorphism property on generators applied to every element
    for x, wx in word.items():
        for g, h in zip(gens, images):
            if word[x * g] != wx * h:
                return False
    return True


def quotient_group(group, normal_elems):
    """G/N as a permutation group on the cosets of N (regular-style action)."""
    nset = frozenset(p.images for p in normal_elems)
    elems = group.element_list()
    cosets = {}
    labels = []
    for e in elems:
        key = _coset_key(e, normal_elems)
        if key not in cosets:
            cosets[key] = len(labels)
            labels.append((key, e))
    deg = len(labels)
    gens = []
    for g in group.generators:
        images = [0] * deg
        for key, rep in labels:
            images[cosets[key]] = cosets[_coset_key(rep * g, normal_elems)]
        gens.append(Permutation(images))
    return PermutationGroup([g for g in gens if not g.is_identity()], degree=deg)


def _coset_key(x, normal_elems):
    return min((n * x).images for n in normal_elems)


def normal_closure(seed_elems, group, max_order=None):
    """Smallest normal subgroup of group containing the seed elements."""
    elems = subgroup_closure(seed_elems, group.degree)
    changed = True
    while changed:
        changed = False
        for g in group.generators:
            gi = g.inverse()
            for h in list(elems):
                c = gi * h * g
                if c not in elems:
                    elems = subgroup_closure(elems | {c}, group.degree)
                    changed = True
                    if max_order and len(elems) > max_order:
                        raise Undecided("normal closure exceeded budget")
    return elems


def composition_factor_orders(group, budget=10 ** 4):
    """Multiset of composition factor orders (with a simplicity marker).

    Returns a list of (order, is_abelian) pairs.  Requires |G| within budget.
    """
    n = group.order()
    if n > budget:
        raise Undecided("group too large for composition series")
    if n == 1:
        return []
    elems = group.element_list()
    # find a minimal proper nontrivial normal subgroup via normal closures
    best = None
    for e in sorted(elems, key=lambda p: p.images):
        if e.is_identity():
            continue
        nc = normal_closure([e], group)
        if len(nc) < n and (best is None or len(nc) < len(best)):
            best = nc
            if len(best) == min(p for p in _prime_factors(n)):
                break
    if best is None:
        # simple group
        abelian = all((a * b) == (b * a) for a in group.generators for b in group.generators)
        return [(n, abelian)]
    sub = PermutationGroup([p for p in best if not p.is_identity()], degree=group.degree)
    quot = quotient_group(group, list(best))
    return composition_factor_orders(sub, budget) + composition_factor_orders(quot, budget)


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def has_section(group, target, order_budget=10 ** 4, node_budget=20000):
    """True iff some subgroup-quotient of the group is isomorphic to target.

    target is a PermutationGroup.  Bounded: raises Undecided past budget.
    Cheap obstructions (Lagrange, Cauchy for cyclic prime targets) are tried
    first.
    """
    n = group.order()
    t = target.order()
    if n > order_budget or t > 10 ** 3:
        raise Undecided("has_section budgets exceeded")
    if n % t != 0 and t > n:
        return False
    if n % t != 0:
        # |section| divides |G|
        return False
    if t == 1:
        return True
    tfac = sorted(_prime_factors(t))
    if t in tfac:  # prime order target: Cauchy
        return n % t == 0
    # enumerate subgroups by closing cyclic subgroups under joins, bounded
    elems = group.element_list()
    cyclics = {}
    for e in elems:
        if e.is_identity():
            continue
        key = frozenset(p.images for p in subgroup_closure([e], group.degree))
        cyclics.setdefault(key, e)
    subgroups = {frozenset([Permutation.identity(group.degree).images])}
    frontier = set()
    for key in cyclics:
        if key not in subgroups:
            subgroups.add(key)
            frontier.add(key)
    nodes = 0
    all_keys = set(subgroups)
    while frontier:
        new = set()
        for a in frontier:
            for ckey, cgen in cyclics.items():
                nodes += 1
                if nodes > node_budget:
                    raise Undecided("has_section subgroup enumeration budget exceeded")
                if ckey <= a:
                    continue
                gens = [Permutation(img, check=False) for img in a if img != tuple(range(group.degree))]
                joined = subgroup_closure(gens + [cgen], group.degree)
                key = frozenset(p.images for p in joined)
                if key not in all_keys:
                    all_keys.add(key)
                    new.add(key)
        frontier = new
    for key in sorted(all_keys, key=len):
        if len(key) % t != 0:
            continue
        sub = PermutationGroup(
            [Permutation(img, check=False) for img in key if img != tuple(range(group.degree))],
            degree=group.degree)
        if _section_in_subgroup(sub, target, key):
            return True
    return False


def _section_in_subgroup(sub, target, key):
    t = target.order()
    h = len(key)
    if h == t:
        return are_isomorphic(sub, target)
    # look for a normal subgroup of index t
    elems = [Permutation(img, check=False) for img in key]
    seen = set()
    for e in elems:
        if e.is_identity():
            continue
        try:
            nc = normal_closure([e], sub, max_order=h)
        except Undecided:
            continue
        nkey = frozenset(p.images for p in nc)
        if nkey in seen:
            continue
        seen.add(nkey)
        if len(nc) * t == h:
            quot = quotient_group(sub, list(nc))
            if are_isomorphic(quot, target):
                return True
    return False


def cyclic_group(n):
    """C_n acting regularly on n points."""
    return PermutationGroup([Permutation([(i + 1) % n for i in range(n)])], degree=n)


def symmetric_group(n):
    if n < 2:
        return PermutationGroup.trivial(max(n, 1))
    gens = [Permutation([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(Permutation([(i + 1) % n for i in range(n)]))
    return PermutationGroup(gens, degree=n)


def alternating_group(n):
    if n < 3:
        return PermutationGroup.trivial(max(n, 1))
    gens = [Permutation([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        if n % 2:
            gens.append(Permutation([(i + 1) % n for i in range(n)]))
        else:
            gens.append(Permutation([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)]))
    return PermutationGroup(gens, degree=n)


def factorial(n):
    return reduce(lambda a, b: a * b, range(2, n + 1), 1)
