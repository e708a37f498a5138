"""Exact arithmetic in GF(p^f), with log tables for fast multiplication.

Elements are plain integers 0..p^f-1, read as base-p digit vectors over the
prime field (little-endian polynomial coefficients).  Each field carries a
fixed generator of the multiplicative group, so two runs agree on every
label and every table.
"""

from __future__ import annotations

from math import gcd


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q):
    """(p, f) with q = p^f, or None if q is not a prime power."""
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, f), = fac.items()
    return p, f


class GF:
    """The field with p^f elements.  Construct via GF.of(q) or GF(p, f)."""

    _cache = {}

    def __init__(self, p, f):
        if not is_prime(p):
            raise ValueError("characteristic %d is not prime" % p)
        if f < 1:
            raise ValueError("extension degree must be positive")
        q = p ** f
        if q > 2 ** 16:
            raise ValueError("field size %d exceeds the 2^16 bound" % q)
        self.p = p
        self.f = f
        self.q = q
        self.modulus = self._find_irreducible() if f > 1 else (0, 1)  # coeffs low..high
        self._build_tables()

    @classmethod
    def of(cls, q):
        pf = prime_power(q)
        if pf is None:
            raise ValueError("%d is not a prime power" % q)
        key = pf
        if key not in cls._cache:
            cls._cache[key] = cls(*pf)
        return cls._cache[key]

    # -- polynomial plumbing over GF(p), coefficient lists low..high --

    def _poly_mulmod(self, a, b, mod):
        p = self.p
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] = (res[i + j] + ai * bj) % p
        # reduce mod the monic polynomial `mod`
        deg = len(mod) - 1
        for i in range(len(res) - 1, deg - 1, -1):
            c = res[i]
            if c:
                for j in range(deg + 1):
                    res[i - deg + j] = (res[i - deg + j] - c * mod[j]) % p
        res = res[:deg]
        while len(res) > 1 and res[-1] == 0:
            res.pop()
        return res

    def _is_irreducible(self, mod):
        # x^(p^k) == x mod f exactly for k multiples of factor degrees:
        # irreducible of degree f iff x^(p^f) = x and x^(p^(f/r)) != x for
        # prime divisors r of f
        p, f = self.p, self.f

        def frob_power(k):
            # x^(p^k) mod `mod`
            cur = [0, 1]
            for _ in range(k):
                acc = [1]
                base = cur
                e = p
                while e:
                    if e & 1:
                        acc = self._poly_mulmod(acc, base, mod)
                    base = self._poly_mulmod(base, base, mod)
                    e >>= 1
                cur = acc
            return cur

        x = [0, 1]
        if frob_power(f) != x:
            return False
        for r in factorize(f):
            if frob_power(f // r) == x:
                return False
        return True

    def _find_irreducible(self):
        # smallest monic irreducible of degree f in lexicographic coefficient
        # order (constant term fastest): deterministic modulus choice
        p, f = self.p, self.f
        for low in range(p ** f):
            coeffs = []
            n = low
            for _ in range(f):
                coeffs.append(n % p)
                n //= p
            mod = coeffs + [1]
            if mod[0] == 0:
                continue
            if self._is_irreducible(mod):
                return tuple(mod)
        raise AssertionError("no irreducible polynomial found")

    def _int_to_poly(self, n):
        out = []
        for _ in range(self.f):
            out.append(n % self.p)
            n //= self.p
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def _poly_to_int(self, coeffs):
        n = 0
        for c in reversed(coeffs):
            n = n * self.p + c
        return n

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        mod = list(self.modulus)
        # multiplication table driver: find a generator, then exp/log tables
        order = q - 1
        fac = factorize(order)

        def raw_mul(a, b):
            if f == 1:
                return (a * b) % p
            return self._poly_to_int(self._poly_mulmod(self._int_to_poly(a), self._int_to_poly(b), mod))

        def raw_pow(a, e):
            acc = 1
            while e:
                if e & 1:
                    acc = raw_mul(acc, a)
                a = raw_mul(a, a)
                e >>= 1
            return acc

        gen = None
        for cand in range(2, q):
            if all(raw_pow(cand, order // r) != 1 for r in fac):
                gen = cand
                break
        if gen is None:
            gen = 1  # GF(2)
        self.generator = gen
        exp = [1] * (2 * order)
        log = [0] * q
        cur = 1
        for i in range(order):
            exp[i] = cur
            log[cur] = i
            cur = raw_mul(cur, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log

    # -- field operations on int-coded elements --

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting 0 in GF(%d)" % self.q)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a, k=1):
        """a -> a^(p^k)."""
        return self.pow(a, self.p ** k)

    def element_order(self, a):
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        la = self._log[a]
        return (self.q - 1) // gcd(la, self.q - 1)

    def elements(self):
        return range(self.q)

    def subfield_elements(self, q0):
        """Elements of the subfield of size q0 (q0 must be p^d with d | f)."""
        pf = prime_power(q0)
        if pf is None or pf[0] != self.p or self.f % pf[1] != 0:
            raise ValueError("GF(%d) is not a subfield of GF(%d)" % (q0, self.q))
        return sorted(a for a in range(self.q) if self.pow(a, q0) == a)

    def subfield_generator(self, q0):
        """Generator of the multiplicative group of the size-q0 subfield."""
        if q0 == 2:
            return 1
        return self.pow(self.generator, (self.q - 1) // (q0 - 1))

    def trace_to_prime(self, a):
        t = 0
        cur = a
        for _ in range(self.f):
            t = self.add(t, cur)
            cur = self.frobenius(cur)
        return t

    def __repr__(self):
        return "GF(%d)" % self.q
