"""Exact arithmetic over Z_N and Z[X]/(X^N - 1).

A subset (or multiset) A of Z_N is encoded by its mask polynomial
A(X) = sum_a m_a X^a, an element of Z[X]/(X^N - 1) written with exponents
below N.  Whether the exponential sum A(w^d) vanishes at w = e^{2*pi*i/N}
is decided purely in integer arithmetic: A(w^d) = 0 exactly when the
cyclotomic polynomial Phi_{N/d} divides the fold of A(X) into Z_{N/d}.
No floating point is used anywhere in a decision.

Because the Galois group of Q(w)/Q acts transitively on primitive roots,
the zero set {m : A(w^m) = 0} is a union of divisor classes d*Z_N^* and
is fully described by the divisors d of N at which A vanishes.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.  The
cyclotomic cache is only appended to under CPython's GIL; entries are
fully built before they are published.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class ModulusMismatchError(ValueError):
    """Raised when two residue sets live in different cyclic groups."""


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...) with p increasing."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    out = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        out.append((rest, 1))
    return tuple(out)


@dataclass(frozen=True)
class Modulus:
    """A cyclic group order together with its prime factorization."""

    n: int
    factorization: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "Modulus":
        return cls(n, factorize(n))

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    def __post_init__(self):
        check = 1
        for p, e in self.factorization:
            if e < 1:
                raise ValueError("exponents must be >= 1")
            check *= p**e
        if check != self.n:
            raise ValueError(f"factorization does not multiply out to {self.n}")


def divisors(m: Union[Modulus, int]) -> list[int]:
    """All positive divisors of n, ascending, including 1 and n."""
    if isinstance(m, int):
        m = Modulus.of(m)
    out = [1]
    for p, e in m.factorization:
        out = [d * p**k for k in range(e + 1) for d in out]
    return sorted(out)


def prime_powers(m: Union[Modulus, int]) -> list[int]:
    """The prime powers p^k (k >= 1) dividing n, ascending."""
    if isinstance(m, int):
        m = Modulus.of(m)
    return sorted(p**k for p, e in m.factorization for k in range(1, e + 1))


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_n, stored as a strictly increasing element tuple."""

    modulus: Modulus
    elements: tuple[int, ...]

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "ResidueSet":
        mod = n if isinstance(n, Modulus) else Modulus.of(n)
        reduced = [e % mod.n for e in elements]
        if len(set(reduced)) != len(reduced):
            raise ValueError(f"duplicate elements mod {mod.n}: {sorted(reduced)}")
        return cls(mod, tuple(sorted(reduced)))

    def __post_init__(self):
        n = self.modulus.n
        if any(not 0 <= e < n for e in self.elements):
            raise ValueError("elements must be reduced mod n")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be strictly increasing")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus.n in set(self.elements)

    def translate(self, t: int) -> "ResidueSet":
        n = self.modulus.n
        return ResidueSet(self.modulus, tuple(sorted((e + t) % n for e in self.elements)))

    def dilate(self, u: int) -> "ResidueSet":
        """The set u*A; injective (a set again) only when gcd(u, n) = 1."""
        n = self.modulus.n
        if math.gcd(u, n) != 1:
            raise ValueError(f"dilation by {u} is not a bijection mod {n}")
        return ResidueSet(self.modulus, tuple(sorted((u * e) % n for e in self.elements)))

    def mask(self) -> int:
        """Bitmask encoding, bit e set when e is an element."""
        m = 0
        for e in self.elements:
            m |= 1 << e
        return m

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "ResidueSet":
        return cls.of(n, [e for e in range(n) if (mask >> e) & 1])


@dataclass(frozen=True)
class ResidueMultiset:
    """Nonnegative integer weights on Z_n."""

    modulus: Modulus
    counts: tuple[int, ...]

    @classmethod
    def of(cls, n: int, counts: Sequence[int]) -> "ResidueMultiset":
        mod = n if isinstance(n, Modulus) else Modulus.of(n)
        if len(counts) != mod.n:
            raise ValueError(f"need exactly {mod.n} counts, got {len(counts)}")
        return cls(mod, tuple(int(c) for c in counts))

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "ResidueMultiset":
        mod = n if isinstance(n, Modulus) else Modulus.of(n)
        counts = [0] * mod.n
        for e in elements:
            counts[e % mod.n] += 1
        return cls(mod, tuple(counts))

    def __post_init__(self):
        if len(self.counts) != self.modulus.n:
            raise ValueError("counts length must equal the modulus")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def mass(self) -> int:
        return sum(self.counts)

    def scaled(self, k: int) -> "ResidueMultiset":
        """The multiset k*A = {k*a : a in A} with multiplicities added."""
        n = self.modulus.n
        counts = [0] * n
        for a, c in enumerate(self.counts):
            counts[(k * a) % n] += c
        return ResidueMultiset(self.modulus, tuple(counts))


SetLike = Union[ResidueSet, ResidueMultiset]


def _as_counts(a: SetLike) -> tuple[int, ...]:
    if isinstance(a, ResidueSet):
        counts = [0] * a.modulus.n
        for e in a.elements:
            counts[e] = 1
        return tuple(counts)
    return a.counts


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; trailing coefficient nonzero unless zero."""

    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> "IntPoly":
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        return cls(tuple(int(c) for c in coeffs[:end]))

    @classmethod
    def x_power(cls, k: int) -> "IntPoly":
        return cls((0,) * k + (1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly.of(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly.of(out)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPoly.of(out)

    def scale(self, k: int) -> "IntPoly":
        return IntPoly.of([k * c for c in self.coeffs])

    def __divmod__(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division; requires each elimination step to divide exactly in Z."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        qdeg = len(rem) - len(dc)
        quo = [0] * (qdeg + 1) if qdeg >= 0 else []
        for i in range(qdeg, -1, -1):
            c = rem[i + len(dc) - 1]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r != 0:
                raise ValueError("division is not exact over the integers")
            quo[i] = q
            for j, dj in enumerate(dc):
                rem[i + j] -= q * dj
        return IntPoly.of(quo), IntPoly.of(rem)

    def divides(self, other: "IntPoly") -> bool:
        """True when self divides other in Z[X] (self monic or exactness holds)."""
        if other.is_zero():
            return True
        if self.is_zero() or other.degree() < self.degree():
            return False
        try:
            _, rem = divmod(other, self)
        except ValueError:
            return False
        return rem.is_zero()

    def eval_int(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reduce_cyclic(self, n: int) -> "IntPoly":
        """Reduce mod X^n - 1 by folding exponents."""
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] += c
        return IntPoly.of(out)


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial Phi_m, by exact division of X^m - 1
    by the product of Phi_d over proper divisors d of m."""
    if m < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = IntPoly.of([-1] + [0] * (m - 1) + [1])
    for d in divisors(m):
        if d < m:
            num, rem = divmod(num, cyclotomic(d))
            assert rem.is_zero()
    return num


@functools.lru_cache(maxsize=None)
def _phi_remainder_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Row j is X^j reduced mod Phi_m, for j < m, each of width deg Phi_m.

    A fold C over Z_m has Phi_m | C(X) exactly when sum_j C_j * row_j = 0.
    """
    phi = cyclotomic(m)
    deg = phi.degree()
    rows = []
    # X^j mod Phi is computed iteratively: multiply by X, fold the overflow.
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[deg - 1] if deg > 0 else 0
        nxt = [0] + cur[: deg - 1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi.coeffs[i]
        cur = nxt
    return tuple(rows)


def mask_poly(a: SetLike) -> IntPoly:
    """The mask polynomial sum_a m_a X^a, of degree below n."""
    return IntPoly.of(_as_counts(a))


def fold_counts(a: SetLike, m: int) -> tuple[int, ...]:
    """Counts of residues of A modulo m (m | n), the fold of the mask."""
    counts = _as_counts(a)
    out = [0] * m
    for i, c in enumerate(counts):
        out[i % m] += c
    return tuple(out)


def vanishes_at(a: SetLike, d: int) -> bool:
    """Whether A(w^d) = 0 for w = e^{2*pi*i/n}, decided as Phi_{n/d} | A(X).

    d must divide n; d = n asks whether A(1) = 0, which holds only for the
    empty set or zero multiset.
    """
    n = a.modulus.n
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide the modulus {n}")
    m = n // d
    folded = fold_counts(a, m)
    rows = _phi_remainder_rows(m)
    width = len(rows[0])
    acc = [0] * width
    for j, c in enumerate(folded):
        if c:
            row = rows[j]
            for i in range(width):
                acc[i] += c * row[i]
    return not any(acc)


@dataclass(frozen=True)
class DivisorClassSet:
    """A union of divisor classes d*Z_n^*, stored by the divisors d of n."""

    modulus: Modulus
    divisors: frozenset[int]

    def __contains__(self, residue: int) -> bool:
        return math.gcd(residue % self.modulus.n, self.modulus.n) in self.divisors

    def residues(self) -> list[int]:
        """The full subset of Z_n covered by the classes."""
        n = self.modulus.n
        return [x for x in range(n) if math.gcd(x, n) in self.divisors]

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.divisors))


def zero_divisors(a: SetLike) -> DivisorClassSet:
    """The divisors d of n with A(w^d) = 0; by Galois invariance these
    determine the whole zero set of A on the n-th roots of unity."""
    zs = frozenset(d for d in divisors(a.modulus) if vanishes_at(a, d))
    return DivisorClassSet(a.modulus, zs)


def d_set(a: SetLike) -> tuple[int, ...]:
    """Divisors d of n such that A(w^m) != 0 for every multiple m of d
    dividing n.  Upward closed in the divisor lattice; for a nonempty set
    it always contains n itself."""
    n = a.modulus.n
    zeros = zero_divisors(a).divisors
    divs = divisors(a.modulus)
    return tuple(d for d in divs if not any(m % d == 0 and m in zeros for m in divs))


def max_coefficient(f: IntPoly, n: int) -> int:
    """Largest of the n coefficient slots of f written in Z[X]/(X^n - 1)."""
    if f.degree() >= n:
        raise ValueError("polynomial is not reduced mod X^n - 1")
    if f.is_zero():
        return 0
    return max(max(f.coeffs), 0) if len(f.coeffs) < n else max(f.coeffs)


def compose_power(f: IntPoly, k: int, m: Union[Modulus, int]) -> IntPoly:
    """f(X^k) reduced mod X^n - 1, exactly."""
    n = m.n if isinstance(m, Modulus) else m
    out = [0] * n
    for i, c in enumerate(f.coeffs):
        out[(i * k) % n] += c
    return IntPoly.of(out)


def count_reps(k: int, m: int, n: int) -> list[tuple[int, int]]:
    """All nonnegative (s, t) with k = s*m + t*n, for coprime m and n.

    There is at most one pair for 0 < k < m*n, and exactly the two pairs
    (n, 0) and (0, m) for k = m*n.
    """
    if math.gcd(m, n) != 1:
        raise ValueError(f"{m} and {n} are not coprime")
    out = []
    for s in range(k // m + 1):
        rest = k - s * m
        if rest % n == 0:
            out.append((s, rest // n))
    return out
