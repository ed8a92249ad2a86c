"""Third-order Jacobsthal recurrences and their period-3 companion triples.

The central object is the order-3 linear recurrence

    X(n+3) = X(n+2) + X(n+1) + 2*X(n),    n >= 0,

with rational seeds X(0) = a, X(1) = b, X(2) = c.  Seeds (0, 1, 1) give the
third-order Jacobsthal numbers 0, 1, 1, 2, 5, 9, 18, 37, ...; seeds
(2, 1, 5) give the third-order Jacobsthal-Lucas numbers 2, 1, 5, 10, 17,
37, 74, ...  The characteristic roots are 2 and the two primitive cube
roots of unity, so every member of the family decomposes as

    X(n) = (rho * 2**n - V(n)) / 7,      rho = a + b + c,

where V is periodic with period 3.  This module provides:

* :func:`term` / :func:`term_range`, the plain iterative evaluator used as
  the ground-truth oracle by every closed form and identity check, and
* :func:`companions`, the period-3 triples appearing in those closed forms
  (the remainder triple V, the Cassini companion W with 7*W(n+2) =
  5*V(n+1) - 3*V(n), the Catalan offset U, and the product triple
  T(n) = W(n+1)*W(n+2)).

All values are immutable and all functions are pure; results are memoized
per seed triple behind the scenes (replace-on-write, so concurrent callers
at worst recompute identical values).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import _as_fraction


@dataclass(frozen=True)
class SequenceParams:
    """The rational seed triple (a, b, c) of the recurrence."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        object.__setattr__(self, "c", _as_fraction(self.c))

    @property
    def rho(self) -> Fraction:
        """a + b + c, the coefficient of 2**n in 7 * X(n)."""
        return self.a + self.b + self.c

    @property
    def quartic(self) -> Fraction:
        """The seed form 4a^2 + 3b^2 + c^2 - 2ac - 3bc.

        This is the constant that the Catalan correction term carries for
        arbitrary seeds; it equals 1 for the Jacobsthal seeds (0, 1, 1) and
        enters the fourth-power (Gelin-Cesaro) identity both linearly and
        squared.
        """
        a, b, c = self.a, self.b, self.c
        return 4 * a * a + 3 * b * b + c * c - 2 * a * c - 3 * b * c

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


#: Seeds of the third-order Jacobsthal numbers J: 0, 1, 1, 2, 5, 9, 18, ...
JACOBSTHAL = SequenceParams(0, 1, 1)
#: Seeds of the third-order Jacobsthal-Lucas numbers jL: 2, 1, 5, 10, 17, ...
JACOBSTHAL_LUCAS = SequenceParams(2, 1, 5)


@dataclass(frozen=True)
class PeriodicTriple:
    """A sequence of period 3 given by its values at n == 0, 1, 2 (mod 3)."""

    at0: Fraction
    at1: Fraction
    at2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "at0", _as_fraction(self.at0))
        object.__setattr__(self, "at1", _as_fraction(self.at1))
        object.__setattr__(self, "at2", _as_fraction(self.at2))

    def at(self, n: int) -> Fraction:
        """Value at index n; n may be any integer (reduced mod 3)."""
        return (self.at0, self.at1, self.at2)[n % 3]

    def __iter__(self):
        return iter((self.at0, self.at1, self.at2))


@dataclass(frozen=True)
class CompanionSet:
    """The six period-3 companions of a seed triple.

    v       remainder triple (2, -3, 1) of the Jacobsthal numbers
    v_gen   remainder triple of the given seeds, rho*2**n - 7*X(n)
    w       Cassini companion (2, 1, -3) of the Jacobsthal numbers
    w_gen   Cassini companion of the given seeds, 7*w_gen(n+2) =
            5*v_gen(n+1) - 3*v_gen(n)
    u       Catalan offset (1, -1, 0), evaluated at r - 1; shared by all
            seed triples
    t       product triple t(n) = w_gen(n+1) * w_gen(n+2)
    """

    v: PeriodicTriple
    v_gen: PeriodicTriple
    w: PeriodicTriple
    w_gen: PeriodicTriple
    u: PeriodicTriple
    t: PeriodicTriple


#: Remainder triple of the Jacobsthal numbers: 7*J(n) = 2**(n+1) - V(n).
V_ORDINARY = PeriodicTriple(2, -3, 1)
#: Cassini companion of the Jacobsthal numbers: 7*W(n+2) = 5*V(n+1) - 3*V(n).
W_ORDINARY = PeriodicTriple(2, 1, -3)
#: Catalan offset table, indexed at r - 1: U(r) = 1, -1, 0 for r = 1, 2, 0 (mod 3).
U_OFFSET = PeriodicTriple(1, -1, 0)


def u_value(r: int) -> Fraction:
    """Catalan offset U(r): 1 for r == 1, -1 for r == 2, 0 for r == 0 (mod 3).

    For r >= 1 this equals jL(r-1) - J(r+1); the periodic table extends it
    to r == 0, where the Catalan correction must vanish.
    """
    return U_OFFSET.at(r - 1)


def companions(params: SequenceParams) -> CompanionSet:
    """Build all period-3 companion triples for the given seeds.

    >>> companions(JACOBSTHAL).v_gen
    PeriodicTriple(at0=Fraction(2, 1), at1=Fraction(-3, 1), at2=Fraction(1, 1))
    """
    a, b, c = params.a, params.b, params.c
    v_gen = PeriodicTriple(c + b - 6 * a, 2 * c - 5 * b + 2 * a, -3 * c + 4 * b + 4 * a)
    w_gen = PeriodicTriple(-3 * c + 5 * b + 2 * a, 2 * c - b - 6 * a, c - 4 * b + 4 * a)
    t = PeriodicTriple(
        w_gen.at1 * w_gen.at2,
        w_gen.at2 * w_gen.at0,
        w_gen.at0 * w_gen.at1,
    )
    return CompanionSet(v=V_ORDINARY, v_gen=v_gen, w=W_ORDINARY, w_gen=w_gen, u=U_OFFSET, t=t)


# Memoized oracle prefixes, one immutable tuple per seed triple.  Entries are
# replaced wholesale, never mutated, so readers always see a consistent state.
_TERM_CACHE: dict[SequenceParams, tuple[Fraction, ...]] = {}


def _terms_through(params: SequenceParams, n: int) -> tuple[Fraction, ...]:
    cached = _TERM_CACHE.get(params)
    if cached is not None and len(cached) > n:
        return cached
    values = list(cached) if cached is not None else [params.a, params.b, params.c]
    target = max(n + 1, 2 * len(values))
    while len(values) < target:
        values.append(values[-1] + values[-2] + 2 * values[-3])
    result = tuple(values)
    _TERM_CACHE[params] = result
    return result


def term(params: SequenceParams, n: int) -> Fraction:
    """The n-th term of the recurrence, by plain linear iteration.

    This is the ground-truth oracle: it knows nothing about roots, Binet
    coefficients or periodic triples.

    >>> [str(term(JACOBSTHAL, n)) for n in range(7)]
    ['0', '1', '1', '2', '5', '9', '18']
    """
    if n < 0:
        raise ValueError(f"term index must be nonnegative, got {n}")
    return _terms_through(params, n)[n]


def term_range(params: SequenceParams, first: int, last: int) -> list[Fraction]:
    """Terms first..last inclusive, computed in a single linear pass."""
    if first < 0:
        raise ValueError(f"range start must be nonnegative, got {first}")
    if first > last:
        raise ValueError(f"empty range: first ({first}) exceeds last ({last})")
    table = _terms_through(params, last)
    return list(table[first : last + 1])
