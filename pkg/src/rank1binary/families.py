"""Constructors for the rank-1 group families and their primitive actions.

Projective (semi)linear groups act on the projective line over GF(q),
labeled 0..q-1 for the affine points (field element codes) and q for the
point at infinity.  Suzuki groups act on an ovoid in PG(3,q), unitary
groups on Hermitian isotropic points, and the Frobenius metacyclic groups
act regularly on Z_n.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .gf import GF, prime_power
from .perm import (
    Permutation,
    PermutationGroup,
    involutions,
    normalizer_brute,
    stabilizer_of_point,
)
from .action import GroupAction, conjugation_action, natural_action, orbit_action


# ---------------------------------------------------------------------------
# projective line machinery


def projective_points(q):
    """Point labels of PG(1,q): field codes 0..q-1, then q for infinity."""
    return list(range(q + 1))


def moebius_perm(F, a, b, c, d):
    """x -> (ax+b)/(cx+d) on the projective line (infinity = index q)."""
    q = F.q
    det = F.sub(F.mul(a, d), F.mul(b, c))
    if det == 0:
        raise ValueError("singular matrix")
    images = [0] * (q + 1)
    for x in range(q):
        num = F.add(F.mul(a, x), b)
        den = F.add(F.mul(c, x), d)
        images[x] = q if den == 0 else F.div(num, den)
    images[q] = q if c == 0 else F.div(a, c)
    return Permutation(images)


def frobenius_line_perm(F, k=1):
    """The semilinear map x -> x^(p^k) on the projective line."""
    q = F.q
    images = [F.frobenius(x, k) for x in range(q)] + [q]
    return Permutation(images)


def _psl2_gens(F):
    q = F.q
    nu = F.generator
    u = moebius_perm(F, 1, 1, 0, 1)                     # x -> x + 1
    if q % 2 == 1:
        t = moebius_perm(F, F.mul(nu, nu), 0, 0, 1)     # x -> nu^2 x
        w = moebius_perm(F, 0, F.neg(1), 1, 0)          # x -> -1/x
    else:
        t = moebius_perm(F, nu, 0, 0, 1)                # x -> nu x
        w = moebius_perm(F, 0, 1, 1, 0)                 # x -> 1/x
    return [u, t, w]


def _pgl2_gens(F):
    nu = F.generator
    return [
        moebius_perm(F, 1, 1, 0, 1),
        moebius_perm(F, nu, 0, 0, 1),
        moebius_perm(F, 0, 1, 1, 0),
    ]


def psl2_order(q):
    return q * (q * q - 1) // gcd(2, q - 1)


def pgl2_order(q):
    return q * (q * q - 1)


@functools.lru_cache(maxsize=None)
def psl2(q):
    F = GF.of(q)
    return PermutationGroup(_psl2_gens(F), degree=q + 1)


@functools.lru_cache(maxsize=None)
def pgl2(q):
    F = GF.of(q)
    return PermutationGroup(_pgl2_gens(F), degree=q + 1)


@functools.lru_cache(maxsize=None)
def psl2_extension(q, diag=False, field_power=0):
    """The subgroup of PGammaL_2(q) generated by PSL_2(q) and outer parts.

    diag adjoins x -> nu*x (a non-square scaling; only meaningful for q
    odd), field_power e adjoins the automorphism x -> x^(p^e).  diag and
    field_power together adjoin the single product element (the
    diagonal-times-field coset representative), which is how the
    M10-style intermediate subgroups arise.
    """
    F = GF.of(q)
    gens = list(_psl2_gens(F))
    e = field_power % F.f
    delta = moebius_perm(F, F.generator, 0, 0, 1)
    if diag and e:
        gens.append(delta * frobenius_line_perm(F, e))
    elif diag:
        gens.append(delta)
    elif e:
        gens.append(frobenius_line_perm(F, e))
    return PermutationGroup(gens, degree=q + 1)


def psigmal2(q):
    return psl2_extension(q, diag=False, field_power=1)


def pgammal2(q):
    F = GF.of(q)
    gens = _pgl2_gens(F) + [frobenius_line_perm(F, 1)]
    return PermutationGroup(gens, degree=q + 1)


def m10():
    return psl2_extension(9, diag=True, field_power=1)


def pgammal2_order(q):
    p, f = prime_power(q)
    return pgl2_order(q) * f


def almost_simple_psl2_groups(q):
    """All groups G with PSL_2(q) <= G <= PGammaL_2(q), as (name, group).

    Enumerated via the outer group, which is (C2 x) C_f generated by the
    diagonal coset and the field automorphism.
    """
    p, f = prime_power(q)
    out = []
    seen_orders_gens = set()

    def add(name, diag, e):
        g = psl2_extension(q, diag=diag, field_power=e)
        key = (g.order(), tuple(sorted(x.images for x in g.generators)))
        if key not in seen_orders_gens:
            seen_orders_gens.add(key)
            out.append((name, g))

    add("psl2:%d" % q, False, 0)
    if q % 2 == 1:
        add("pgl2:%d" % q, True, 0)
    for e in range(1, f):
        add("psl2:%d/ext:f%d" % (q, e), False, e)
        if q % 2 == 1:
            add("psl2:%d/ext:df%d" % (q, e), True, e)
    if f > 1:
        full = pgammal2(q)
        out2 = [(n, g) for n, g in out if g.order() != full.order()]
        out2.append(("pgammal2:%d" % q, full))
        out = out2
    # drop any accidental duplicates by order+membership
    unique = []
    for name, g in out:
        dup = False
        for _, h in unique:
            if g.order() == h.order() and all(x in h for x in g.generators):
                dup = True
                break
        if not dup:
            unique.append((name, g))
    return unique


def zeta_of(group, q):
    """The parameter distinguishing G <= PSigmaL_2(q) (1) from the rest (2)."""
    if q % 2 == 0:
        return 2
    sig = psigmal2(q)
    return 1 if all(g in sig for g in group.generators) else 2


# ---------------------------------------------------------------------------
# maximal subgroup recipes (PSL2 families)


def _sorted_elements(group):
    return sorted(group.elements(), key=lambda g: g.images)


def first_klein_subgroup(group):
    """Deterministic Klein four-subgroup <g,h> of the group."""
    invs = sorted(involutions(group), key=lambda g: g.images)
    for i, g in enumerate(invs):
        for h in invs[i + 1:]:
            if g * h == h * g:
                return PermutationGroup([g, h], degree=group.degree)
    raise ValueError("no Klein four-subgroup found")


def klein_subgroups(group, budget=10 ** 6):
    """One representative per conjugacy class of Klein four-subgroups."""
    if group.order() > budget:
        raise ValueError("group too large for Klein subgroup enumeration")
    invs = involutions(group)
    kleins = set()
    for i, g in enumerate(invs):
        for h in invs[i + 1:]:
            if g * h == h * g:
                kleins.add(frozenset((g.images, h.images, (g * h).images)))
    reps = []
    unseen = set(kleins)
    gens = group.generators
    for k in sorted(unseen, key=sorted):
        if k not in unseen:
            continue
        # sweep out the conjugacy class of k
        queue = [k]
        cls = {k}
        unseen.discard(k)
        while queue:
            cur = queue.pop()
            for g in gens:
                img = frozenset(
                    tuple(g.images[t[p]] for p in g.inverse().images) for t in cur
                )
                if img not in cls:
                    cls.add(img)
                    queue.append(img)
                    unseen.discard(img)
        perms = [Permutation(list(t)) for t in sorted(k)]
        reps.append(PermutationGroup(perms, degree=group.degree))
    return reps


def _first_element_of_order(group, n):
    for g in _sorted_elements(group):
        if g.order() == n:
            return g
    raise ValueError("no element of order %d" % n)


def _subfield_psl2_gens(F, q0):
    """Generators of the PSL_2(q0) subfield subgroup inside PSL_2(q)."""
    nu0 = F.subfield_generator(q0)
    u = moebius_perm(F, 1, 1, 0, 1)
    if F.q % 2 == 1:
        t = moebius_perm(F, F.mul(nu0, nu0), 0, 0, 1)
        w = moebius_perm(F, 0, F.neg(1), 1, 0)
    else:
        t = moebius_perm(F, nu0, 0, 0, 1)
        w = moebius_perm(F, 0, 1, 1, 0)
    return [u, t, w]


PSL2_KEYS = ("borel", "d-minus", "d-plus", "subfield", "pgl-subfield", "a4", "s4", "a5", "klein")


def maximal_subgroup_psl2(group, q, key, param=None):
    """Build the named (potentially maximal) subgroup of `group`.

    The torus / Klein / A5 seeds live in the socle PSL_2(q); normalizers
    are then taken inside `group`, matching the N_G(H) model of the
    primitive actions.  Inadmissible keys raise ValueError naming the
    violated condition.
    """
    F = GF.of(q)
    socle = psl2(q)
    if key == "borel":
        return stabilizer_of_point(group, q)  # point at infinity
    if key == "d-minus":
        n = (q - 1) // gcd(2, q - 1)
        if n < 2:
            raise ValueError("d-minus needs (q-1)/gcd(2,q-1) >= 2")
        nu = F.generator
        t = (
            moebius_perm(F, F.mul(nu, nu), 0, 0, 1)
            if q % 2
            else moebius_perm(F, nu, 0, 0, 1)
        )
        return normalizer_brute(PermutationGroup([t], degree=q + 1).elements(), group)
    if key == "d-plus":
        n = (q + 1) // gcd(2, q - 1)
        t = _first_element_of_order(socle, n)
        return normalizer_brute(PermutationGroup([t], degree=q + 1).elements(), group)
    if key in ("subfield", "pgl-subfield"):
        q0 = param
        pf = prime_power(q) or (None, None)
        pf0 = prime_power(q0) if q0 else None
        if not q0 or pf0 is None or pf0[0] != pf[0] or GF.of(q).f % pf0[1] != 0 or q0 == q:
            raise ValueError("subfield key needs q = q0^b with q0 a proper subfield size")
        b = GF.of(q).f // pf0[1]
        if key == "subfield":
            from .gf import is_prime

            if not is_prime(b):
                raise ValueError("subfield key needs prime field extension degree")
            h = PermutationGroup(_subfield_psl2_gens(F, q0), degree=q + 1)
            expect = psl2_order(q0)
        else:
            if b != 2 or q % 2 == 0:
                raise ValueError("pgl-subfield needs q = q0^2 with q odd")
            nu0 = F.subfield_generator(q0)
            gens = _subfield_psl2_gens(F, q0) + [moebius_perm(F, nu0, 0, 0, 1)]
            h = PermutationGroup(gens, degree=q + 1)
            expect = pgl2_order(q0)
        if h.order() != expect:
            raise AssertionError("subfield subgroup has wrong order")
        return normalizer_brute(h.elements(), group)
    if key in ("a4", "s4", "klein"):
        if q % 2 == 0:
            raise ValueError("Klein-normalizer keys need q odd")
        K = first_klein_subgroup(socle)
        n = normalizer_brute(K.elements(), group)
        if key == "a4" and n.order() != 12:
            raise ValueError("a4 key: the Klein normalizer here is not Alt(4)")
        if key == "s4" and n.order() != 24:
            raise ValueError("s4 key: the Klein normalizer here is not Sym(4)")
        return n
    if key == "a5":
        ok = (q % 10 in (1, 9)) or (
            prime_power(q)[1] == 2 and prime_power(q)[0] % 10 in (3, 7)
        )
        if not ok:
            raise ValueError("a5 key needs q = +-1 mod 10, or q = p^2 with p = +-3 mod 10")
        a5 = _find_a5(socle)
        return normalizer_brute(a5.elements(), group)
    raise ValueError("unknown maximal subgroup key %r" % key)


def _find_a5(socle):
    invs = sorted(involutions(socle), key=lambda g: g.images)
    threes = [g for g in _sorted_elements(socle) if g.order() == 3]
    for a in invs:
        for b in threes:
            if (a * b).order() == 5:
                h = PermutationGroup([a, b], degree=socle.degree)
                if h.order() == 60:
                    return h
    raise ValueError("no Alt(5) subgroup found")


# ---------------------------------------------------------------------------
# Suzuki groups


def suzuki_params(q):
    pf = prime_power(q)
    if pf is None or pf[0] != 2 or pf[1] % 2 == 0 or pf[1] < 3:
        raise ValueError("Suzuki groups need q = 2^a with a odd, a >= 3")
    a = pf[1]
    r = 2 ** ((a + 1) // 2)
    return a, r


def _mat_mul(F, A, B):
    n = len(A)
    return tuple(
        tuple(
            functools.reduce(F.add, (F.mul(A[i][k], B[k][j]) for k in range(n)))
            for j in range(n)
        )
        for i in range(n)
    )


def _vec_mat(F, v, A):
    n = len(v)
    return tuple(
        functools.reduce(F.add, (F.mul(v[k], A[k][j]) for k in range(n)))
        for j in range(n)
    )


def _normalize(F, v):
    for x in v:
        if x:
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise ValueError("zero vector")


def sz_unipotent(q, alpha, beta):
    """The lower-triangular P2(q) matrix with parameters alpha, beta."""
    F = GF.of(q)
    _, r = suzuki_params(q)
    th = lambda x: F.pow(x, r) if x else 0
    one, zero = 1, 0
    row3_0 = F.add(F.mul(alpha, th(alpha)), beta)  # alpha^(1+theta) + beta
    row4_0 = F.add(
        F.add(F.mul(F.mul(alpha, alpha), th(alpha)), F.mul(alpha, beta)), th(beta)
    )  # alpha^(2+theta) + alpha*beta + beta^theta
    return (
        (one, zero, zero, zero),
        (alpha, one, zero, zero),
        (row3_0, th(alpha), one, zero),
        (row4_0, beta, alpha, one),
    )


def sz_torus_matrix(q, kappa):
    """The K(q) diagonal matrix determined by kappa != 0."""
    F = GF.of(q)
    _, r = suzuki_params(q)
    if kappa == 0:
        raise ValueError("kappa must be nonzero")
    n = q - 1
    rinv = pow(r, -1, n)
    # zeta_2^theta = kappa and zeta_1^theta = kappa^(1+theta)
    z2 = F.pow(kappa, rinv)
    z1 = F.pow(kappa, ((1 + r) * rinv) % n)
    z3 = F.inv(z2)
    z4 = F.inv(z1)
    return ((z1, 0, 0, 0), (0, z2, 0, 0), (0, 0, z3, 0), (0, 0, 0, z4))


def sz_weyl(q):
    return ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0))


def zp2_element(q, zeta_prime, q0, beta):
    """The ZP2(zeta', q0) matrix for beta in the subfield GF(q0)."""
    F = GF.of(q)
    _, r = suzuki_params(q)
    zb = F.mul(zeta_prime, beta)
    return (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (zb, 0, 1, 0),
        (F.pow(zb, r) if zb else 0, zb, 0, 1),
    )


@dataclass
class SuzukiData:
    q: int
    action: GroupAction           # natural action on the ovoid, degree q^2+1
    points: list                  # normalized 4-vectors, sorted
    to_perm: object               # matrix -> Permutation on the ovoid
    p2: PermutationGroup
    torus: PermutationGroup       # K(q), cyclic of order q-1


@functools.lru_cache(maxsize=None)
def suzuki(q):
    """The Suzuki group Sz(q) in its natural degree q^2+1 action."""
    F = GF.of(q)
    _, r = suzuki_params(q)
    nu = F.generator
    gen_mats = [
        sz_unipotent(q, 1, 0),
        sz_unipotent(q, 0, 1),
        sz_unipotent(q, nu, 0),
        sz_torus_matrix(q, nu),
        sz_weyl(q),
    ]
    seed = _normalize(F, (1, 0, 0, 0))
    points = {seed}
    queue = [seed]
    while queue:
        v = queue.pop()
        for A in gen_mats:
            w = _normalize(F, _vec_mat(F, v, A))
            if w not in points:
                points.add(w)
                queue.append(w)
    points = sorted(points)
    index = {v: i for i, v in enumerate(points)}

    def to_perm(A):
        return Permutation([index[_normalize(F, _vec_mat(F, v, A))] for v in points])

    group = PermutationGroup([to_perm(A) for A in gen_mats], degree=len(points))
    expect = q * q * (q * q + 1) * (q - 1)
    if len(points) != q * q + 1 or group.order() != expect:
        raise AssertionError("Suzuki construction does not match the order formula")
    f = GF.of(q).f
    basis = [1 << i for i in range(f)]  # polynomial basis of GF(q) over GF(2)
    p2 = PermutationGroup(
        [to_perm(sz_unipotent(q, al, 0)) for al in basis]
        + [to_perm(sz_unipotent(q, 0, be)) for be in basis],
        degree=len(points),
    )
    if p2.order() != q * q:
        raise AssertionError("P2(q) has wrong order")
    torus = PermutationGroup([to_perm(sz_torus_matrix(q, nu))], degree=len(points))
    if torus.order() != q - 1:
        raise AssertionError("K(q) has wrong order")
    act = natural_action(group, provenance="sz:%d" % q, labels=points)
    return SuzukiData(q=q, action=act, points=points, to_perm=to_perm, p2=p2, torus=torus)


SZ_KEYS = ("borel", "sz-dihedral", "sz-torus-plus", "sz-torus-minus", "sz-subfield")


def maximal_subgroup_sz(q, key, param=None):
    data = suzuki(q)
    group = data.action.group
    _, r = suzuki_params(q)
    if key == "borel":
        seed = data.points.index(_normalize(GF.of(q), (1, 0, 0, 0)))
        return stabilizer_of_point(group, seed)
    if key == "sz-dihedral":
        return normalizer_brute(data.torus.elements(), group)
    if key in ("sz-torus-plus", "sz-torus-minus"):
        n = q + r + 1 if key == "sz-torus-plus" else q - r + 1
        t = _first_element_of_order(group, n)
        return normalizer_brute(PermutationGroup([t], degree=group.degree).elements(), group)
    if key == "sz-subfield":
        q0 = param
        pf0 = prime_power(q0) if q0 else None
        a = suzuki_params(q)[0]
        from .gf import is_prime

        if (
            not q0
            or q0 <= 2
            or pf0 is None
            or pf0[0] != 2
            or a % pf0[1] != 0
            or not is_prime(a // pf0[1])
        ):
            raise ValueError("sz-subfield needs q = q0^b, b prime, q0 = 2^c > 2")
        F = GF.of(q)
        nu0 = F.subfield_generator(q0)
        sub = [x for x in F.subfield_elements(q0)]
        mats = [sz_unipotent(q, al, 0) for al in sub if al] + [
            sz_unipotent(q, 0, be) for be in sub if be
        ] + [sz_torus_matrix(q, nu0), sz_weyl(q)]
        h = PermutationGroup([data.to_perm(A) for A in mats], degree=group.degree)
        if h.order() != q0 * q0 * (q0 * q0 + 1) * (q0 - 1):
            raise AssertionError("Suzuki subfield subgroup has wrong order")
        return normalizer_brute(h.elements(), group)
    raise ValueError("unknown Suzuki key %r" % key)


# ---------------------------------------------------------------------------
# unitary groups PSU3(q)


@dataclass
class UnitaryData:
    q: int
    action: GroupAction            # natural action on isotropic points
    big_group: PermutationGroup    # action on all projective points
    points: list                   # all normalized 3-vectors over GF(q^2)
    isotropic: list                # indices into points
    norm_of: list                  # hermitian norm of each point (in GF(q^2) codes)
    to_big_perm: object


def _hermitian_norm(F2, q, v):
    tot = 0
    for x in v:
        tot = F2.add(tot, F2.mul(x, F2.pow(x, q)))
    return tot


def _hermitian_inner(F2, q, u, v):
    tot = 0
    for x, y in zip(u, v):
        tot = F2.add(tot, F2.mul(x, F2.pow(y, q)))
    return tot


@functools.lru_cache(maxsize=None)
def psu3(q):
    """PSU3(q) acting on the q^3+1 isotropic points (identity Gram matrix)."""
    if q not in (3, 4, 5):
        raise ValueError("psu3 is built for q in {3,4,5}")
    F2 = GF.of(q * q)
    qq = q * q

    def bar(x):
        return F2.pow(x, q)

    def mat_conj_t(A):
        return tuple(tuple(bar(A[j][i]) for j in range(3)) for i in range(3))

    # SU3 generators with respect to the antidiagonal form J
    J = ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def preserves(A, form):
        return _mat_mul(F2, _mat_mul(F2, A, form), mat_conj_t(A)) == form

    def u_mat(a):
        # b must satisfy b + b^q + a^(1+q) = 0 (b nonzero when a = 0)
        target = F2.neg(F2.mul(a, bar(a)))
        for b in range(1 if a == 0 else 0, qq):
            if F2.add(b, bar(b)) == target:
                return ((1, a, b), (0, 1, F2.neg(bar(a))), (0, 0, 1))
        raise AssertionError("no unipotent parameter found")

    lam = F2.generator
    t_mat = (
        (lam, 0, 0),
        (0, F2.pow(lam, q - 1), 0),
        (0, 0, F2.pow(lam, (-q) % (qq - 1))),
    )
    w_mat = ((0, 0, 1), (0, F2.neg(1), 0), (1, 0, 0))
    gen_mats = [u_mat(0), u_mat(1), u_mat(F2.generator), t_mat, w_mat]
    for A in gen_mats:
        if not preserves(A, J):
            raise AssertionError("generator does not preserve the Hermitian form")

    # change basis so the Gram matrix becomes the identity: find C with
    # C J C*^T = I via Gram-Schmidt (norms are surjective onto GF(q))
    def gram_schmidt():
        basis = []
        vecs = [
            tuple((code // (qq ** i)) % qq for i in range(3)) for code in range(1, qq ** 3)
        ]

        def proj_coeff(v, b):
            return F2.div(_hermitian_inner_J(v, b), _hermitian_inner_J(b, b))

        def _hermitian_inner_J(u, v):
            # u J v*^T
            tot = 0
            for i in range(3):
                for j in range(3):
                    if J[i][j]:
                        tot = F2.add(tot, F2.mul(F2.mul(u[i], J[i][j]), bar(v[j])))
            return tot

        for v in vecs:
            w = v
            for b in basis:
                c = proj_coeff(w, b)
                w = tuple(F2.sub(w[i], F2.mul(c, b[i])) for i in range(3))
            n = _hermitian_inner_J(w, w)
            if n == 0 or all(x == 0 for x in w):
                continue
            # scale so the norm becomes 1: find mu with mu^(q+1) = n^(-1)
            ninv = F2.inv(n)
            mu = None
            for cand in range(1, qq):
                if F2.mul(cand, bar(cand)) == ninv:
                    mu = cand
                    break
            w = tuple(F2.mul(mu, x) for x in w)
            basis.append(w)
            if len(basis) == 3:
                return tuple(basis)
        raise AssertionError("Gram-Schmidt failed")

    C = gram_schmidt()
    # invert C over GF(q^2) by adjugate
    def mat_inv(A):
        def det2(a, b, c, d):
            return F2.sub(F2.mul(a, d), F2.mul(b, c))

        cof = [[0] * 3 for _ in range(3)]
        idx = [(1, 2), (0, 2), (0, 1)]
        det = 0
        for i in range(3):
            for j in range(3):
                r = idx[i]
                c = idx[j]
                m = det2(A[r[0]][c[0]], A[r[0]][c[1]], A[r[1]][c[0]], A[r[1]][c[1]])
                if (i + j) % 2:
                    m = F2.neg(m)
                cof[i][j] = m
        for j in range(3):
            det = F2.add(det, F2.mul(A[0][j], cof[0][j]))
        dinv = F2.inv(det)
        return tuple(tuple(F2.mul(dinv, cof[j][i]) for j in range(3)) for i in range(3))

    Cinv = mat_inv(C)
    new_gens = [_mat_mul(F2, _mat_mul(F2, C, A), Cinv) for A in gen_mats]
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    for A in new_gens:
        if not preserves(A, ident):
            raise AssertionError("conjugated generator does not preserve identity form")

    # all projective points, normalized first-nonzero-coordinate-one
    points = set()
    for code in range(1, qq ** 3):
        v = tuple((code // (qq ** i)) % qq for i in range(3))
        points.add(_normalize(F2, v))
    points = sorted(points)
    index = {v: i for i, v in enumerate(points)}
    norm_of = [_hermitian_norm(F2, q, v) for v in points]

    def to_big_perm(A):
        return Permutation([index[_normalize(F2, _vec_mat(F2, v, A))] for v in points])

    big_gens = [to_big_perm(A) for A in new_gens]
    big_group = PermutationGroup(big_gens, degree=len(points))
    iso = [i for i, n in enumerate(norm_of) if n == 0]
    if len(iso) != q ** 3 + 1:
        raise AssertionError("wrong number of isotropic points")
    iso_index = {p: i for i, p in enumerate(iso)}
    nat_gens = [
        Permutation([iso_index[g.images[p]] for p in iso], check=False) for g in big_gens
    ]
    nat = PermutationGroup(nat_gens, degree=len(iso))
    expect = q ** 3 * (q * q - 1) * (q ** 3 + 1) // gcd(3, q + 1)
    if nat.order() != expect:
        raise AssertionError("PSU3 order does not match the formula")
    act = GroupAction(
        nat,
        [points[p] for p in iso],
        "psu3:%d" % q,
        source=nat,
    )
    return UnitaryData(
        q=q,
        action=act,
        big_group=big_group,
        points=points,
        isotropic=iso,
        norm_of=norm_of,
        to_big_perm=to_big_perm,
    )


def psu3_nonisotropic_action(q):
    """PSU3(q) on the non-isotropic projective points."""
    data = psu3(q)
    pts = [i for i, n in enumerate(data.norm_of) if n != 0]
    index = {p: i for i, p in enumerate(pts)}
    gens = [
        Permutation([index[g.images[p]] for p in pts], check=False)
        for g in data.big_group.generators
    ]
    grp = PermutationGroup(gens, degree=len(pts))
    return GroupAction(grp, [data.points[p] for p in pts], "psu3:%d/coset:nonisotropic" % q)


def psu3_frames_action(q):
    """PSU3(q) on orthogonal frames (triples of pairwise orthogonal points)."""
    data = psu3(q)
    F2 = GF.of(q * q)
    e1 = _normalize(F2, (1, 0, 0))
    e2 = _normalize(F2, (0, 1, 0))
    e3 = _normalize(F2, (0, 0, 1))
    pindex = {v: i for i, v in enumerate(data.points)}
    seed = tuple(sorted((pindex[e1], pindex[e2], pindex[e3])))

    def apply_fn(obj, g):
        return tuple(sorted(g.images[p] for p in obj))

    return orbit_action(data.big_group, seed, apply_fn, "psu3:%d/coset:frames" % q)


def psu3_torus_normalizer(q):
    """N(T) for the order-(q^2-q+1)/gcd(3,q+1) non-split torus of PSU3(q)."""
    data = psu3(q)
    group = data.action.group
    n = (q * q - q + 1) // gcd(3, q + 1)
    t = _first_element_of_order(group, n)
    return normalizer_brute(PermutationGroup([t], degree=group.degree).elements(), group)


# ---------------------------------------------------------------------------
# Frobenius metacyclic groups


def frobenius_metacyclic(n, kappa):
    """C_n : C_3 acting on Z_n, with the C_3 acting by c -> c^kappa."""
    if n < 2 or gcd(kappa, n) != 1:
        raise ValueError("kappa must be a unit mod n")
    if kappa % n == 1:
        raise ValueError("kappa = 1 mod n is rejected")
    if pow(kappa, 3, n) != 1:
        raise ValueError("kappa^3 must be 1 mod n")
    c = Permutation([(i + 1) % n for i in range(n)])
    x = Permutation([(kappa * i) % n for i in range(n)])
    grp = PermutationGroup([c, x], degree=n)
    if grp.order() != 3 * n:
        raise AssertionError("Frobenius metacyclic group has unexpected order")
    return natural_action(grp, provenance="frob:%d:%d" % (n, kappa))


# ---------------------------------------------------------------------------
# descriptors and the corpus


@dataclass(frozen=True)
class GroupDescriptor:
    family: str
    q: int = 0
    n: int = 0
    kappa: int = 0
    ext: str = ""
    coset_key: str = ""
    coset_param: int = 0

    def text(self):
        if self.family == "frob":
            return "frob:%d:%d" % (self.n, self.kappa)
        s = "%s:%d" % (self.family, self.q)
        if self.ext:
            s += "/ext:%s" % self.ext
        if self.coset_key:
            s += "/coset:%s" % self.coset_key
            if self.coset_param:
                s += ":%d" % self.coset_param
        return s


FAMILIES = ("psl2", "pgl2", "psigmal2", "pgammal2", "intermediate", "sz", "psu3", "frob")


def parse_descriptor(text):
    """Parse `family:q[/ext:<spec>][/coset:<key>[:param]]` descriptors."""
    parts = text.strip().split("/")
    head = parts[0].split(":")
    family = head[0]
    if family not in FAMILIES:
        raise ValueError("unknown family %r" % family)
    if family == "frob":
        if len(head) != 3:
            raise ValueError("frob descriptors look like frob:n:kappa")
        return GroupDescriptor(family="frob", n=int(head[1]), kappa=int(head[2]))
    if len(head) != 2:
        raise ValueError("descriptor head must be family:q")
    q = int(head[1])
    ext = ""
    coset_key = ""
    coset_param = 0
    for part in parts[1:]:
        if part.startswith("ext:"):
            ext = part[4:]
        elif part.startswith("coset:"):
            rest = part[6:].split(":")
            coset_key = rest[0]
            if len(rest) > 1:
                coset_param = int(rest[1])
            if len(rest) > 2:
                raise ValueError("malformed coset key %r" % part)
        else:
            raise ValueError("unknown descriptor part %r" % part)
    return GroupDescriptor(family=family, q=q, ext=ext, coset_key=coset_key,
                           coset_param=coset_param)


def _parse_ext(ext):
    """ext spec: 'd', 'f<k>', or 'df<k>' (diagonal and/or field power)."""
    diag = False
    e = 0
    s = ext
    if s.startswith("d"):
        diag = True
        s = s[1:]
    if s.startswith("f"):
        e = int(s[1:]) if len(s) > 1 else 1
        s = ""
    if s:
        raise ValueError("malformed ext spec %r" % ext)
    return diag, e


def base_group(desc):
    """The group of a descriptor (ignoring any coset part)."""
    fam = desc.family
    if fam == "frob":
        return frobenius_metacyclic(desc.n, desc.kappa).group
    q = desc.q
    if fam == "psl2" and not desc.ext:
        return psl2(q)
    if fam == "psl2" or fam == "intermediate":
        diag, e = _parse_ext(desc.ext) if desc.ext else (False, 0)
        return psl2_extension(q, diag=diag, field_power=e)
    if fam == "pgl2":
        return pgl2(q)
    if fam == "psigmal2":
        return psigmal2(q)
    if fam == "pgammal2":
        return pgammal2(q)
    if fam == "sz":
        return suzuki(q).action.group
    if fam == "psu3":
        return psu3(q).action.group
    raise ValueError("unknown family %r" % fam)


def descriptor_action(desc):
    """The GroupAction named by a descriptor (natural or coset space)."""
    fam = desc.family
    if fam == "frob":
        return frobenius_metacyclic(desc.n, desc.kappa)
    group = base_group(desc)
    if not desc.coset_key:
        if fam == "sz":
            return suzuki(desc.q).action
        if fam == "psu3":
            return psu3(desc.q).action
        labels = projective_points(desc.q)
        return natural_action(group, provenance=desc.text(), labels=labels)
    key = desc.coset_key
    if fam == "sz":
        if key == "torus-plus":
            key = "sz-torus-plus"
        elif key == "torus-minus":
            key = "sz-torus-minus"
        elif key == "dihedral":
            key = "sz-dihedral"
        h = maximal_subgroup_sz(desc.q, key, desc.coset_param or None)
        return conjugation_action(group, h, provenance=desc.text())
    if fam == "psu3":
        if key == "nonisotropic":
            return psu3_nonisotropic_action(desc.q)
        if key == "frames":
            return psu3_frames_action(desc.q)
        if key == "torus":
            h = psu3_torus_normalizer(desc.q)
            return conjugation_action(group, h, provenance=desc.text())
        raise ValueError("unknown psu3 coset key %r" % key)
    h = maximal_subgroup_psl2(group, desc.q, key, desc.coset_param or None)
    return conjugation_action(group, h, provenance=desc.text())


def projective_line_group(desc):
    """Natural projective-line action for a PSL2-family descriptor."""
    if desc.family not in ("psl2", "pgl2", "psigmal2", "pgammal2", "intermediate"):
        raise ValueError("not a projective-line family")
    group = base_group(desc)
    return natural_action(group, provenance=desc.text(), labels=projective_points(desc.q))
