"""Witnesses and certificates for non-binary actions.

A binary action is one where 2-subtuple completeness of a pair of tuples
forces the tuples to be conjugate.  This module builds the machinery to
refute binarity: subtuple-completeness checking, witness search, exact
2-closure, strongly-non-binary patterns, Klein-subgroup subset
certificates, beautiful subsets, witness lifting, and the suborbit
divisibility report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .perm import (
    Permutation,
    PermutationGroup,
    Undecided,
    composition_factor_orders,
    factorial,
    induced_action,
    is_two_transitive,
    orbit,
    orbits_of,
    restrict_to,
    stabilizer_of_point,
    transporter,
)
from .action import GroupAction, natural_action
from . import families
from .gf import GF, prime_power


# ---------------------------------------------------------------------------
# orbitals


class OrbitalTable:
    """Orbital identifiers for ordered pairs of points, lazily cached.

    Two pairs lie in the same orbital exactly when a group element maps one
    onto the other; the id of (x, y) is (rep of x's orbit, suborbit of the
    translate of y under the stabilizer of that representative).
    """

    def __init__(self, group):
        self.group = group
        n = group.degree
        gens = group.generators or [Permutation.identity(n)]
        self._gens = gens
        self._rep = [None] * n
        self._parent = [None] * n  # BFS tree: point -> (previous point, gen index)
        self._subid = {}           # rep -> point -> suborbit id
        self._fwd = {}             # point -> permutation sending its rep to it
        for s in range(n):
            if self._rep[s] is not None:
                continue
            rep = s
            self._rep[s] = rep
            queue = [s]
            while queue:
                p = queue.pop(0)
                for k, g in enumerate(gens):
                    q = g.images[p]
                    if self._rep[q] is None:
                        self._rep[q] = rep
                        self._parent[q] = (p, k)
                        queue.append(q)
            stab = stabilizer_of_point(group, rep)
            sgens = stab.generators or [Permutation.identity(n)]
            subid = [None] * n
            for oi, orb in enumerate(sorted(orbits_of(sgens, n), key=min)):
                for p in orb:
                    subid[p] = oi
            self._subid[rep] = subid

    def _forward(self, x):
        """A group element mapping rep(x) to x."""
        t = self._fwd.get(x)
        if t is None:
            if self._parent[x] is None:
                t = Permutation.identity(self.group.degree)
            else:
                p, k = self._parent[x]
                t = self._forward(p) * self._gens[k]
            self._fwd[x] = t
        return t

    def orbital_id(self, x, y):
        rep = self._rep[x]
        back = self._forward(x).inverse()
        return (rep, self._subid[rep][back.images[y]])

    def point_orbit_id(self, x):
        return self._rep[x]


def orbital_table(group):
    table = getattr(group, "_orbital_table", None)
    if table is None:
        table = OrbitalTable(group)
        group._orbital_table = table
    return table


# ---------------------------------------------------------------------------
# witness pairs


@dataclass(frozen=True)
class WitnessPair:
    """A verified non-binary witness: 2-subtuple complete, not conjugate."""

    I: tuple
    J: tuple


def is_r_subtuple_complete(I, J, r, a):
    """True iff every size-r subtuple of I maps onto the matching one of J."""
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J):
        raise ValueError("tuples must have equal length")
    if not 1 <= r <= len(I):
        raise ValueError("need 1 <= r <= tuple length")
    for p in I + J:
        if not 0 <= p < a.degree:
            raise ValueError("point out of range")
    if I == J:
        return True
    table = orbital_table(a.group)
    if r == 1:
        return all(table.point_orbit_id(x) == table.point_orbit_id(y)
                   for x, y in zip(I, J))
    # the r = 2 criterion is necessary for every r, so filter with it first
    for i in range(len(I)):
        for j in range(i, len(I)):
            if table.orbital_id(I[i], I[j]) != table.orbital_id(J[i], J[j]):
                return False
    if r == 2:
        return True
    if r == len(I):
        return transporter(I, J, a.group) is not None
    for idx in combinations(range(len(I)), r):
        sub_i = tuple(I[i] for i in idx)
        sub_j = tuple(J[i] for i in idx)
        if transporter(sub_i, sub_j, a.group) is None:
            return False
    return True


def verify_witness(a, I, J):
    """Check the witness invariants, returning the pair or raising."""
    I = tuple(I)
    J = tuple(J)
    if len(I) != len(J) or len(I) < 2:
        raise ValueError("witness tuples must have equal length >= 2")
    if not is_r_subtuple_complete(I, J, 2, a):
        raise ValueError("witness pair is not 2-subtuple complete")
    if transporter(I, J, a.group) is not None:
        raise ValueError("witness tuples are conjugate")
    return WitnessPair(I, J)


# ---------------------------------------------------------------------------
# 2-closure


@dataclass
class TwoClosureResult:
    closure: PermutationGroup
    is_closed: bool
    sigma: Permutation
    decided: bool
    reason: str = ""


def two_closure(a, degree_cap=200, node_budget=2 * 10 ** 6, element_cap=200000):
    """The exact 2-closure: the full automorphism group of the orbital coloring.

    2-transitive actions take a shortcut (the closure is the symmetric
    group); otherwise a backtrack over color-preserving permutations
    builds a strong generating set, pruning whole cosets once a
    representative is known.  Past the node budget the result is
    undecided.  (element_cap is kept for interface stability; the
    generator-based search no longer needs it.)
    """
    group = a.group
    n = group.degree
    if group.is_transitive() and is_two_transitive(group):
        order = group.order()
        full = factorial(n)
        closure = _symmetric_group_on(n)
        if order == full:
            return TwoClosureResult(closure, True, None, True)
        sigma = Permutation.from_cycles(n, [(0, 1)])
        if sigma in group:
            raise AssertionError("2-transitive proper subgroup contains a transposition")
        return TwoClosureResult(closure, False, sigma, True)
    if n > degree_cap:
        return TwoClosureResult(None, False, None, False,
                                reason="degree %d exceeds cap %d" % (n, degree_cap))
    table = orbital_table(group)
    ids = {}
    color = []
    for x in range(n):
        row = []
        for y in range(n):
            key = table.orbital_id(x, y)
            row.append(ids.setdefault(key, len(ids)))
        color.append(row)

    def signature(x):
        row = sorted(color[x])
        col = sorted(color[y][x] for y in range(n))
        return (color[x][x], tuple(row), tuple(col))

    sigs = [signature(x) for x in range(n)]
    img = [None] * n
    used = [False] * n
    budget = [node_budget]
    gens = []

    def consistent(i, cand):
        if used[cand] or sigs[cand] != sigs[i]:
            return False
        for j in range(i):
            pj = img[j]
            if color[pj][cand] != color[j][i] or color[cand][pj] != color[i][j]:
                return False
        return True

    def tick():
        budget[0] -= 1
        if budget[0] < 0:
            raise Undecided("closure node budget exceeded")

    def complete(i):
        """Any single color-preserving completion of the prefix, or None."""
        if i == n:
            return Permutation(tuple(img))
        for cand in range(n):
            if not consistent(i, cand):
                continue
            tick()
            img[i] = cand
            used[cand] = True
            try:
                g = complete(i + 1)
            finally:
                used[cand] = False
                img[i] = None
            if g is not None:
                return g
        return None

    def level_orbit(i):
        fixing = [g for g in gens if all(g.images[j] == j for j in range(i))]
        return set(orbit(i, fixing)[0]) if fixing else {i}

    def strong_gens(i):
        """Strong generators for the coloring stabilizer of points < i.

        The identity branch recurses first so deeper stabilizer levels are
        complete; then one coset representative per new image of point i
        suffices, and each found representative prunes its whole orbit.
        """
        if i == n:
            return
        img[i] = i
        used[i] = True
        try:
            strong_gens(i + 1)
        finally:
            used[i] = False
            img[i] = None
        reached = level_orbit(i)
        for cand in range(n):
            if cand == i or cand in reached or not consistent(i, cand):
                continue
            tick()
            img[i] = cand
            used[cand] = True
            try:
                g = complete(i + 1)
            finally:
                used[cand] = False
                img[i] = None
            if g is not None:
                gens.append(g)
                reached = level_orbit(i)

    try:
        strong_gens(0)
    except Undecided as exc:
        return TwoClosureResult(None, False, None, False, reason=str(exc))
    if gens:
        closure = PermutationGroup(gens, degree=n)
    else:
        closure = PermutationGroup.trivial(n)
    for g in group.generators:
        if g not in closure:
            raise AssertionError("closure search missed a group element")
    is_closed = closure.order() == group.order()
    sigma = None
    if not is_closed:
        for p in sorted(gens, key=lambda q: q.images):
            if p not in group:
                sigma = p
                break
        if sigma is None:
            raise AssertionError("closure exceeds the group but no generator shows it")
    return TwoClosureResult(closure, is_closed, sigma, True)


def _symmetric_group_on(n):
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(n, [(0, 1)]))
    if n >= 3:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return PermutationGroup(gens, degree=n)


def strongly_nonbinary_exhaustive(a, space_cap=2 * 10 ** 6):
    """Definition-based full-length distinct-entry witness search.

    Both tuples may be normalized to start at point 0: entries exhaust the
    point set, simultaneous coordinate reordering preserves witnesses, and
    translating by a group element moves the first entry onto 0.
    """
    if a.degree < 2:
        return None
    table = orbital_table(a.group)
    return _search_fixed_first(a, table, 0, a.degree, True, space_cap)


def is_strongly_nonbinary(a, degree_cap=200):
    """A full-length distinct-entry witness from a separating closure element.

    Returns a WitnessPair when the action is not 2-closed, None when it is
    2-closed, and raises Undecided past the closure budget.
    """
    res = two_closure(a, degree_cap=degree_cap)
    if not res.decided:
        raise Undecided(res.reason)
    if res.is_closed:
        return None
    I = tuple(range(a.degree))
    J = res.sigma.images
    return verify_witness(a, I, J)


# ---------------------------------------------------------------------------
# strongly-non-binary patterns


@dataclass(frozen=True)
class SNBPattern:
    """tau together with eta_i and g_i = tau.eta_i as in the factored pattern."""

    tau: Permutation
    etas: tuple
    gs: tuple


def verify_snb_pattern(pattern, a):
    """Check every pattern invariant and emit the full-length witness."""
    tau = pattern.tau
    etas = tuple(pattern.etas)
    gs = tuple(pattern.gs)
    n = a.degree
    if not gs or len(gs) != len(etas):
        raise ValueError("pattern needs matching g_i and eta_i lists")
    if tau in a.group:
        raise ValueError("tau lies in the acting group")
    tau_support = set(tau.support())
    for eta, g in zip(etas, gs):
        if g not in a.group:
            raise ValueError("g_i is not an element of the acting group")
        if tau * eta != g:
            raise ValueError("g_i != tau.eta_i")
        if tau_support & set(eta.support()):
            raise ValueError("support of tau meets support of eta_i")
    for w in range(n):
        if not any(eta.images[w] == w for eta in etas):
            raise ValueError("point %d is fixed by no eta_i" % w)
    I = tuple(range(n))
    J = tau.images
    # pairwise completeness via the pattern: points moved by tau are sent to
    # their tau-images by every g_i; a point fixed by tau needs some eta_i
    # fixing it, and that g_i handles the pair
    for x in range(n):
        for y in range(x, n):
            if tau.images[x] == x and tau.images[y] == y:
                continue
            ok = any(g.images[x] == tau.images[x] and g.images[y] == tau.images[y]
                     for g in gs)
            if not ok:
                raise ValueError("pair (%d, %d) is not covered by any g_i" % (x, y))
    return verify_witness(a, I, J)


# ---------------------------------------------------------------------------
# subset certificates


@dataclass
class SubsetCertificate:
    """Evidence that a point subset forces the ambient action to be non-binary."""

    lam: tuple
    kind: str  # "beautiful" or "strongly-non-binary"
    evidence: dict = field(default_factory=dict)


def _restricted_perm(lam, index, moving, image_fn, degree):
    """A permutation of the lam index space moving only the listed points."""
    images = list(range(degree))
    for p in moving:
        images[index[p]] = index[image_fn(p)]
    return Permutation(images)


def build_klein_witness(a, K, details=None):
    """A strongly-non-binary subset certificate from a Klein four-subgroup.

    Uses the union of the fixed sets of the three involutions, or the
    six-point variant when the subgroup itself fixes nothing and the
    involutions fix many points.  Returns None when the pattern element is
    induced by the setwise stabilizer (the blocking element goes into
    `details`) or when the fixed sets are too small.
    """
    if details is None:
        details = {}
    els = sorted((p for p in K.element_list() if not p.is_identity()),
                 key=lambda p: p.images)
    if len(els) != 3 or any(not (p * p).is_identity() for p in els):
        raise ValueError("K must be a Klein four-group")
    for p in els:
        if p not in a.group:
            raise ValueError("K must lie in the acting group")
    g, h, gh = els
    if g * h not in els:
        raise ValueError("K is not closed under products")
    fix_g = g.fixed_points()
    fix_h = h.fixed_points()
    fix_gh = gh.fixed_points()
    if not (fix_g and fix_h and fix_gh):
        details["reason"] = "an involution has no fixed points"
        return None
    fix_k = sorted(set(fix_g) & set(fix_h))
    if not fix_k and min(len(fix_g), len(fix_h), len(fix_gh)) >= 16:
        return _klein_six_point(a, g, h, gh, fix_g, fix_h, fix_gh, details)
    return _klein_union(a, g, h, gh, fix_g, fix_h, fix_gh, details)


def _klein_union(a, g, h, gh, fix_g, fix_h, fix_gh, details):
    lam = sorted(set(fix_g) | set(fix_h) | set(fix_gh))
    index = {p: i for i, p in enumerate(lam)}
    m = len(lam)
    tau1 = _restricted_perm(lam, index, fix_gh, lambda p: g.images[p], m)
    tau2 = _restricted_perm(lam, index, fix_h, lambda p: g.images[p], m)
    tau3 = _restricted_perm(lam, index, fix_g, lambda p: h.images[p], m)
    if tau1.is_identity():
        details["reason"] = "g acts trivially on Fix(gh)"
        return None
    g_lam = restrict_to(lam, g)
    h_lam = restrict_to(lam, h)
    if g_lam != tau1 * tau2 or h_lam != tau1 * tau3:
        raise AssertionError("induced involutions do not factor as expected")
    return _finish_klein(a, lam, tau1, (tau2, tau3), (g_lam, h_lam), details,
                         variant="fixed-set-union")


def _klein_six_point(a, g, h, gh, fix_g, fix_h, fix_gh, details):
    l1 = min(fix_gh)
    l2 = g.images[l1]
    l3 = min(fix_g)
    l4 = h.images[l3]
    l5 = min(fix_h)
    l6 = g.images[l5]
    pts = [l1, l2, l3, l4, l5, l6]
    if len(set(pts)) != 6:
        details["reason"] = "could not choose six distinct points"
        return None
    lam = sorted(pts)
    index = {p: i for i, p in enumerate(lam)}
    m = len(lam)
    tau1 = _restricted_perm(lam, index, [l1, l2], lambda p: g.images[p], m)
    eta_g = _restricted_perm(lam, index, [l5, l6], lambda p: g.images[p], m)
    eta_h = _restricted_perm(lam, index, [l3, l4], lambda p: h.images[p], m)
    g_lam = restrict_to(lam, g)
    h_lam = restrict_to(lam, h)
    if g_lam != tau1 * eta_g or h_lam != tau1 * eta_h:
        raise AssertionError("six-point factorization failed")
    return _finish_klein(a, lam, tau1, (eta_g, eta_h), (g_lam, h_lam), details,
                         variant="six-point")


def _finish_klein(a, lam, tau, etas, gs, details, variant):
    image, pts, _kernel = induced_action(lam, a.group)
    if tau in image:
        blocker = transporter(list(range(len(lam))),
                              tau.images, image)
        details["reason"] = "pattern element induced by the setwise stabilizer"
        details["blocker"] = blocker
        return None
    sub_action = natural_action(image, provenance="induced on %s" % (tuple(lam),),
                                labels=list(lam))
    pattern = SNBPattern(tau=tau, etas=etas, gs=gs)
    sub_witness = verify_snb_pattern(pattern, sub_action)
    omega_i = tuple(lam)
    omega_j = tuple(lam[k] for k in tau.images)
    omega_witness = verify_witness(a, omega_i, omega_j)
    return SubsetCertificate(
        lam=tuple(lam),
        kind="strongly-non-binary",
        evidence={
            "variant": variant,
            "pattern": pattern,
            "witness_on_subset": sub_witness,
            "witness_on_omega": omega_witness,
            "induced_order": image.order(),
        },
    )


# ---------------------------------------------------------------------------
# beautiful subsets


def _validate_beautiful(a, lam, name):
    lam = tuple(sorted(set(lam)))
    m = len(lam)
    if m < 3:
        return None
    if m == a.degree:
        image = a.group
    else:
        image, _pts, _kernel = induced_action(lam, a.group)
    if not image.is_transitive() or not is_two_transitive(image):
        return None
    order = image.order()
    if order in (factorial(m), factorial(m) // 2):
        return None
    return SubsetCertificate(
        lam=lam,
        kind="beautiful",
        evidence={"name": name, "induced_order": order, "two_transitive": True},
    )


def structured_subset_candidates(a, desc):
    """Unipotent-times-torus orbit candidates for coset actions that admit them."""
    seed = getattr(a, "seed_index", None)
    if desc is None or seed is None or not desc.coset_key:
        return
    fam = desc.family
    q = desc.q
    gens = []
    name = None
    if fam in ("psl2", "pgl2", "psigmal2", "pgammal2", "intermediate"):
        F = GF.of(q)
        nu = F.generator
        if desc.coset_key == "d-minus" and q % 2 == 0:
            # full unipotent subgroup extended by the split torus
            gens = [families.moebius_perm(F, 1, 1 << i, 0, 1) for i in range(F.f)]
            gens.append(families.moebius_perm(F, nu, 0, 0, 1))
            name = "unipotent-torus-orbit"
        elif desc.coset_key == "pgl-subfield" and desc.coset_param:
            q0 = int(desc.coset_param)
            nu0 = F.subfield_generator(q0)
            gens = [families.moebius_perm(F, 1, F.mul(nu, s), 0, 1)
                    for s in F.subfield_elements(q0) if s != 0]
            gens.append(families.moebius_perm(F, nu0, 0, 0, 1))
            name = "subfield-unipotent-torus-orbit"
        elif desc.coset_key == "subfield" and desc.coset_param and q % 2 == 0:
            q0 = int(desc.coset_param)
            if q0 > 4:
                nu0 = F.subfield_generator(q0)
                gens = [families.moebius_perm(F, 1, F.mul(nu, s), 0, 1)
                        for s in F.subfield_elements(q0) if s != 0]
                gens.append(families.moebius_perm(F, nu0, 0, 0, 1))
                name = "subfield-unipotent-torus-orbit"
    elif fam == "sz" and desc.coset_key == "subfield" and desc.coset_param:
        q0 = int(desc.coset_param)
        if q0 > 2:
            data = families.suzuki(q)
            F = GF.of(q)
            zeta_prime = F.generator
            gens = [data.to_perm(families.zp2_element(q, zeta_prime, q0, s))
                    for s in F.subfield_elements(q0) if s != 0]
            nu0 = F.subfield_generator(q0)
            gens.append(data.to_perm(families.sz_torus_matrix(q, nu0)))
            name = "center-unipotent-torus-orbit"
    if not gens:
        return
    pushed = [a.push(x) for x in gens]
    lam = _point_orbit(seed, pushed)
    yield (name, lam)


def _point_orbit(start, gens):
    seen = {start}
    queue = [start]
    while queue:
        p = queue.pop()
        for g in gens:
            q = g.images[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return sorted(seen)


def find_beautiful_subset(a, desc=None, small_bound=0):
    """The first valid beautiful-subset certificate among the candidates.

    Candidates: the whole point set, structured unipotent-times-torus
    orbits (for descriptor-built coset actions), and exhaustive subsets of
    size at most small_bound.
    """
    cert = _validate_beautiful(a, range(a.degree), "omega")
    if cert is not None:
        return cert
    for name, lam in structured_subset_candidates(a, desc) or ():
        cert = _validate_beautiful(a, lam, name)
        if cert is not None:
            return cert
    for size in range(3, small_bound + 1):
        for lam in combinations(range(a.degree), size):
            cert = _validate_beautiful(a, lam, "exhaustive")
            if cert is not None:
                return cert
    return None


# ---------------------------------------------------------------------------
# exhaustive tuple search


def _profile(table, t):
    out = []
    for i in range(len(t)):
        for j in range(i, len(t)):
            out.append(table.orbital_id(t[i], t[j]))
    return tuple(out)


def _orbit_canonicals(space, gens):
    """Map each tuple in the space to the minimum of its orbit under gens."""
    canon = {}
    space_set = set(space)
    for start in sorted(space_set):
        if start in canon:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            t = queue.pop()
            for g in gens:
                u = tuple(g.images[p] for p in t)
                if u not in orbit:
                    orbit.add(u)
                    queue.append(u)
        rep = min(orbit)
        for u in orbit:
            canon[u] = rep
    return canon


def _search_fixed_first(a, table, rep, length, distinct, space_cap):
    n = a.degree
    others = [p for p in range(n) if p != rep] if distinct else list(range(n))
    if distinct:
        count = 1
        for k in range(length - 1):
            count *= max(len(others) - k, 0)
    else:
        count = n ** (length - 1)
    if count > space_cap:
        raise Undecided("tuple space of size %d exceeds cap" % count)
    if distinct:
        space = [(rep,) + tail for tail in permutations(others, length - 1)]
    else:
        space = [(rep,) + tail for tail in product(range(n), repeat=length - 1)]
    stab = stabilizer_of_point(a.group, rep)
    gens = stab.generators or [Permutation.identity(n)]
    canon = _orbit_canonicals(space, gens)
    classes = {}
    for t in space:
        classes.setdefault(_profile(table, t), set()).add(canon[t])
    for prof in sorted(classes):
        reps = sorted(classes[prof])
        if len(reps) > 1:
            return verify_witness(a, reps[0], reps[1])
    return None


def exhaustive_witness_search(a, max_length, allow_repeats=True,
                              space_cap=2 * 10 ** 6):
    """Definition-based search over tuples with normalized first entry.

    Distinct-entry tuples are searched before tuples with repeats, shorter
    lengths before longer.  Returns the first verified witness, or None
    when the searched space contains none.  Raises Undecided when a tuple
    space exceeds the cap.
    """
    table = orbital_table(a.group)
    first_entries = sorted(min(o) for o in orbits_of(
        a.group.generators or [Permutation.identity(a.degree)], a.degree))
    passes = (True, False) if allow_repeats else (True,)
    undecided = None
    for length in range(3, max_length + 1):
        for distinct in passes:
            for rep in first_entries:
                try:
                    w = _search_fixed_first(a, table, rep, length, distinct,
                                            space_cap)
                except Undecided as exc:
                    undecided = exc
                    continue
                if w is not None:
                    return w
    if undecided is not None:
        raise undecided
    return None


# ---------------------------------------------------------------------------
# the witness pipeline


STRATEGY_ORDER = ("closure-first", "klein-subset", "exhaustive-short-tuples")


def _klein_candidates(a):
    """Klein four-subgroups pushed into the action, one per source class."""
    source = a.source
    if source.order() % 4 != 0:
        return []
    reps = families.klein_subgroups(source)
    out = []
    for k in reps:
        gens = [a.push(g) for g in k.generators]
        out.append(PermutationGroup(gens, degree=a.degree))
    return out


def find_nonbinary_witness(a, max_length=4, allow_repeats=True,
                           strategies=STRATEGY_ORDER, degree_cap=200,
                           space_cap=2 * 10 ** 6):
    """The first verified witness found by the enabled strategies.

    The strategy order is fixed (closure, Klein subsets, exhaustive
    tuples) regardless of the order given.  None means no witness was
    found within the budgets, not that the action is binary.
    """
    enabled = set(strategies)
    unknown = enabled - set(STRATEGY_ORDER)
    if unknown:
        raise ValueError("unknown strategies: %s" % sorted(unknown))
    for strategy in STRATEGY_ORDER:
        if strategy not in enabled:
            continue
        if strategy == "closure-first":
            try:
                w = is_strongly_nonbinary(a, degree_cap=degree_cap)
            except Undecided:
                w = None
            if w is not None:
                return w
        elif strategy == "klein-subset":
            for k in _klein_candidates(a):
                cert = build_klein_witness(a, k)
                if cert is not None:
                    return cert.evidence["witness_on_omega"]
        else:
            try:
                w = exhaustive_witness_search(a, max_length,
                                              allow_repeats=allow_repeats,
                                              space_cap=space_cap)
            except Undecided:
                w = None
            if w is not None:
                return w
    return None


def nonbinary_certificate(a, desc=None, max_length=4, degree_cap=200,
                          space_cap=2 * 10 ** 6, small_bound=0):
    """A certificate that the action is not binary, or None within budget.

    Tries, in order: a closure witness, a beautiful subset (non-binary by
    the inductive subset lemma), a Klein-subgroup strongly-non-binary
    subset, and exhaustive short tuples.  Returns a dict with the kind and
    the certificate object.
    """
    try:
        w = is_strongly_nonbinary(a, degree_cap=degree_cap)
    except Undecided:
        w = None
    if w is not None:
        return {"kind": "witness", "witness": w, "via": "closure"}
    cert = find_beautiful_subset(a, desc=desc, small_bound=small_bound)
    if cert is not None:
        return {"kind": "beautiful-subset", "certificate": cert,
                "via": "inductive subset lemma"}
    for k in _klein_candidates(a):
        cert = build_klein_witness(a, k)
        if cert is not None:
            return {"kind": "snb-subset", "certificate": cert,
                    "witness": cert.evidence["witness_on_omega"],
                    "via": "klein pattern"}
    w = _suborbit_lift_witness(a, max_length=max_length, space_cap=space_cap)
    if w is not None:
        return {"kind": "witness", "witness": w, "via": "suborbit-lift"}
    try:
        w = exhaustive_witness_search(a, max_length, space_cap=space_cap)
    except Undecided:
        w = None
    if w is not None:
        return {"kind": "witness", "witness": w, "via": "exhaustive"}
    return None


def _suborbit_lift_witness(a, alpha=0, size_bound=60, max_length=4,
                           space_cap=2 * 10 ** 6):
    """A witness found on a small stabilizer suborbit, lifted to the action."""
    stab = stabilizer_of_point(a.group, alpha)
    if stab.order() == 1:
        return None
    gens = stab.generators
    for orb in sorted((o for o in orbits_of(gens, a.degree)
                       if o != [alpha] and len(o) <= size_bound),
                      key=lambda o: (len(o), min(o))):
        image = PermutationGroup(
            [restrict_to(orb, g) for g in gens
             if not restrict_to(orb, g).is_identity()],
            degree=len(orb))
        sub = natural_action(image, provenance="suborbit %d" % min(orb))
        try:
            w = exhaustive_witness_search(sub, min(max_length, len(orb)),
                                          space_cap=space_cap)
        except Undecided:
            w = None
        if w is not None:
            I = tuple(orb[i] for i in w.I)
            J = tuple(orb[i] for i in w.J)
            return lift_witness(a, alpha, I, J)
    return None


# ---------------------------------------------------------------------------
# lifting and the metacyclic witness


def lift_witness(a, alpha, I, J):
    """Prefix a verified stabilizer-suborbit witness with its fixed point.

    (I, J) must be a witness for the action of the stabilizer of alpha on
    one of its orbits; the returned pair is re-verified for the full
    action from scratch.
    """
    I = tuple(I)
    J = tuple(J)
    if not I or len(I) != len(J):
        raise ValueError("need nonempty tuples of equal length")
    stab = stabilizer_of_point(a.group, alpha)
    gens = stab.generators or [Permutation.identity(a.degree)]
    lam = next(orb for orb in orbits_of(gens, a.degree) if I[0] in orb)
    if alpha in lam or any(p not in set(lam) for p in I + J):
        raise ValueError("tuples must lie in a single suborbit away from alpha")
    image = PermutationGroup([restrict_to(lam, g) for g in gens
                              if not restrict_to(lam, g).is_identity()],
                             degree=len(lam))
    index = {p: i for i, p in enumerate(lam)}
    sub = natural_action(image, provenance="suborbit of %d" % alpha, labels=lam)
    verify_witness(sub, tuple(index[p] for p in I), tuple(index[p] for p in J))
    return verify_witness(a, (alpha,) + I, (alpha,) + J)


def frobenius_witness(n, kappa):
    """The canonical witness triple for the metacyclic Frobenius action."""
    a = families.frobenius_metacyclic(n, kappa)
    I = (0, 1, (1 + kappa * kappa) % n)
    J = (0, 1, (1 + kappa) % n)
    # brute-force the non-conjugacy over the whole (small) group, and check
    # that only the identity fixes the first two entries
    fixers = [g for g in a.group.elements()
              if g.images[0] == 0 and g.images[1] == 1]
    if fixers != [Permutation.identity(n)]:
        raise AssertionError("point pair (0, 1) has a nontrivial stabilizer")
    if any(tuple(g.images[p] for p in I) == J for g in a.group.elements()):
        raise AssertionError("canonical triples are conjugate")
    return verify_witness(a, I, J)


# ---------------------------------------------------------------------------
# suborbit divisibility


def binary_up_to(a, max_length, space_cap=2 * 10 ** 6):
    """('non-binary', witness) | ('binary-up-to', length) | ('undecided', reason)."""
    try:
        w = exhaustive_witness_search(a, max_length, space_cap=space_cap)
    except Undecided as exc:
        return ("undecided", str(exc))
    if w is not None:
        return ("non-binary", w)
    return ("binary-up-to", max_length)


def suborbit_divisibility_report(a, d, alpha=0, tuple_budget=3,
                                 section_budget=10 ** 3,
                                 space_cap=2 * 10 ** 6):
    """Per-suborbit data feeding the divisibility argument.

    For each orbit of the point stabilizer M on the remaining points:
    record its size, a bounded binarity verdict for the induced action,
    and whether every composition factor of M is accounted for by a
    section of the induced image.  Concludes with the d | (degree - 1)
    flag.
    """
    group = a.group
    stab = stabilizer_of_point(group, alpha)
    if stab.order() == 1:
        raise ValueError("the point stabilizer is trivial")
    gens = stab.generators or [Permutation.identity(a.degree)]
    rows = []
    factors = None
    if stab.order() <= section_budget:
        factors = composition_factor_orders(stab, budget=section_budget)
    for orb in sorted((o for o in orbits_of(gens, a.degree) if o != [alpha]),
                      key=lambda o: (len(o), min(o))):
        image = PermutationGroup(
            [restrict_to(orb, g) for g in gens
             if not restrict_to(orb, g).is_identity()],
            degree=len(orb))
        sub = natural_action(image, provenance="suborbit %s" % min(orb))
        verdict = binary_up_to(sub, tuple_budget, space_cap=space_cap)
        sections = "undecided"
        if factors is not None:
            sections = _sections_present(image, factors)
        qualifies = (len(orb) > 1 and sections is True
                     and verdict[0] != "non-binary")
        rows.append({
            "size": len(orb),
            "min_point": min(orb),
            "binary": verdict[0],
            "binary_detail": verdict[1],
            "sections_ok": sections,
            "qualifies": qualifies,
            "divisible_by_d": len(orb) % d == 0,
        })
    qualifying = [r for r in rows if r["qualifies"]]
    all_divisible = all(r["divisible_by_d"] for r in qualifying)
    return {
        "d": d,
        "alpha": alpha,
        "stabilizer_order": stab.order(),
        "rows": rows,
        "qualifying_sizes": sorted(r["size"] for r in qualifying),
        "all_qualifying_divisible": all_divisible,
        "degree_minus_one": a.degree - 1,
        "d_divides_degree_minus_one": (a.degree - 1) % d == 0,
    }


def _sections_present(image, factors):
    """True iff each composition factor order of M is visible in the image.

    Abelian (prime) factors are checked by Cauchy's theorem; nonabelian
    factor orders are matched against the image's own composition factors.
    'undecided' when a nonabelian factor cannot be matched either way.
    """
    image_factors = None
    for order, abelian in factors:
        if abelian:
            if image.order() % order != 0:
                return False
        else:
            if image_factors is None:
                try:
                    image_factors = composition_factor_orders(image)
                except Undecided:
                    return "undecided"
            if (order, False) not in image_factors:
                return False
    return True
