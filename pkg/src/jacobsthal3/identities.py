"""The identity catalog: one verifier per identity, oracle vs closed form.

Every check computes its left-hand side from the iterative recurrence
oracle only and its right-hand side from the printed closed form only
(periodic triples, powers of two, rho, the seed form), so a shared bug
cannot mask a failure.  Equality is exact rational equality.

Catalog.  J = Jacobsthal numbers (seeds 0, 1, 1), jL = Jacobsthal-Lucas
numbers (seeds 2, 1, 5), X = arbitrary rational seeds (a, b, c); triples
are listed by residue of n mod 3.

    e4                  3*J(n) + jL(n) == 2**(n+1)                  n >= 0
    e5                  jL(n) - 3*J(n) == 2*jL(n-3)                 n >= 3
    ec5                 J(n+2) - 4*J(n) == (1, -2, 1)               n >= 0
    e6                  jL(n) - 4*J(n) == (2, -3, 1)                n >= 0
    e7                  jL(n+1) + jL(n) == 3*J(n+2)                 n >= 0
    e8                  jL(n) - J(n+2) == (1, -1, 0)                n >= 0
    e9                  jL(n-3)**2 + 3*J(n)*jL(n) == 4**n           n >= 3
    e10                 sum(J(0..n)) == J(n+1) - [3 divides n]      n >= 0
    e12                 jL(n)**2 - 9*J(n)**2 == 2**(n+2)*jL(n-3)    n >= 3
    catalan-j           J(n)**2 - J(n-r)*J(n+r) via V and U         0 <= r <= n
    cassini-j           catalan-j at r = 1                          n >= 1
    gelin-cesaro-j      J(n)**4 - J(n-2)J(n-1)J(n+1)J(n+2),
                        residue-split constants                     n >= 2
    catalan-gen         X(n)**2 - X(n-r)*X(n+r) via v_gen, rho,
                        the seed form and U                         0 <= r <= n
    cassini-gen         catalan-gen at r = 1                        n >= 1
    gelin-cesaro-gen    X(n)**4 - ... via the w_gen companion       n >= 2
    gelin-cesaro-cases  same value via residue-split constants
                        and the product triple t                    n >= 2

The two Cassini entries are the r = 1 specializations of the Catalan
forms and are cataloged separately only for direct access.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping, NamedTuple, Optional

from .sequences import (
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    SequenceParams,
    V_ORDINARY,
    companions,
    term,
    u_value,
)


class IdentityId(Enum):
    """Catalog labels; values double as the CLI spelling."""

    E4 = "e4"
    E5 = "e5"
    EC5 = "ec5"
    E6 = "e6"
    E7 = "e7"
    E8 = "e8"
    E9 = "e9"
    E10 = "e10"
    E12 = "e12"
    CATALAN_J = "catalan-j"
    CASSINI_J = "cassini-j"
    GELIN_CESARO_J = "gelin-cesaro-j"
    CATALAN_GEN = "catalan-gen"
    CASSINI_GEN = "cassini-gen"
    GELIN_CESARO_GEN = "gelin-cesaro-gen"
    GELIN_CESARO_CASES = "gelin-cesaro-cases"

    @property
    def min_n(self) -> int:
        return _DOMAINS[self].min_n

    @property
    def uses_r(self) -> bool:
        """True for the Catalan forms, whose instances range over (n, r)."""
        return _DOMAINS[self].uses_r

    @property
    def fixed_seeds(self) -> bool:
        """True when the identity is specific to the J / jL seed pair."""
        return _DOMAINS[self].fixed_seeds


class _Domain(NamedTuple):
    min_n: int
    uses_r: bool
    fixed_seeds: bool


_DOMAINS: dict[IdentityId, _Domain] = {
    IdentityId.E4: _Domain(0, False, True),
    IdentityId.E5: _Domain(3, False, True),
    IdentityId.EC5: _Domain(0, False, True),
    IdentityId.E6: _Domain(0, False, True),
    IdentityId.E7: _Domain(0, False, True),
    IdentityId.E8: _Domain(0, False, True),
    IdentityId.E9: _Domain(3, False, True),
    IdentityId.E10: _Domain(0, False, True),
    IdentityId.E12: _Domain(3, False, True),
    IdentityId.CATALAN_J: _Domain(0, True, True),
    IdentityId.CASSINI_J: _Domain(1, False, True),
    IdentityId.GELIN_CESARO_J: _Domain(2, False, True),
    IdentityId.CATALAN_GEN: _Domain(0, True, False),
    IdentityId.CASSINI_GEN: _Domain(1, False, False),
    IdentityId.GELIN_CESARO_GEN: _Domain(2, False, False),
    IdentityId.GELIN_CESARO_CASES: _Domain(2, False, False),
}

_CASSINI_IDS = frozenset({IdentityId.CASSINI_J, IdentityId.CASSINI_GEN})


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single identity instance."""

    identity: IdentityId
    params: SequenceParams
    n: int
    r: Optional[int]
    lhs: Fraction
    rhs: Fraction
    witness: Mapping[str, Fraction] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


#: Failing instances reported verbatim per Report; the rest are counted only.
MAX_FAILURE_WITNESSES = 16


@dataclass(frozen=True)
class Report:
    """Aggregate of a sweep; serializes to the documented JSON shape."""

    identity: IdentityId
    params: SequenceParams
    total: int
    passed: int
    failed: int
    failures: tuple[CheckResult, ...]

    @classmethod
    def from_results(
        cls, identity: IdentityId, params: SequenceParams, results: list[CheckResult]
    ) -> "Report":
        failing = [res for res in results if not res.equal]
        return cls(
            identity=identity,
            params=params,
            total=len(results),
            passed=len(results) - len(failing),
            failed=len(failing),
            failures=tuple(failing[:MAX_FAILURE_WITNESSES]),
        )

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "params": [str(self.params.a), str(self.params.b), str(self.params.c)],
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [
                {"n": res.n, "r": res.r, "lhs": str(res.lhs), "rhs": str(res.rhs)}
                for res in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def catalan_rhs(params: SequenceParams, n: int, r: int) -> Fraction:
    """Closed form of X(n)**2 - X(n-r)*X(n+r) for arbitrary seeds.

    (2**n * rho * (2**r * V(n-r) - 2*V(n) + V(n+r) / 2**r)
     + 7 * quartic * U(r)**2) / 49,
    with V = v_gen of the seeds.  The 2**-r factor is exact rational.
    At r = 0 both the bracket and U vanish, matching the trivial LHS.
    """
    if r < 0 or r > n:
        raise ValueError(f"catalan closed form needs 0 <= r <= n, got n={n}, r={r}")
    v = companions(params).v_gen
    bracket = (
        Fraction(2) ** r * v.at(n - r) - 2 * v.at(n) + Fraction(1, 2**r) * v.at(n + r)
    )
    return (Fraction(2) ** n * params.rho * bracket + 7 * params.quartic * u_value(r) ** 2) / 49


#: Residue-split constants of the J-specific fourth-power identity:
#: the linear bracket and the coefficient of 2**(2n-1), by n mod 3.
_GELIN_J_BRACKET = (Fraction(-11), Fraction(12), Fraction(-1))
_GELIN_J_SQUARE_COEFF = (Fraction(9), Fraction(18), Fraction(-6))

def _gelin_case_bracket(params: SequenceParams, n: int) -> Fraction:
    # residue-split constants of the generalized fourth-power identity
    a, b, c = params.a, params.b, params.c
    table = (
        -c - 10 * b + 24 * a,
        -11 * c + 23 * b - 2 * a,
        12 * c - 13 * b - 22 * a,
    )
    return table[n % 3]


def gelin_cesaro_rhs(params: SequenceParams, n: int, mode: str = "general") -> Fraction:
    """Closed form of X(n)**4 - X(n-2)*X(n-1)*X(n+1)*X(n+2), n >= 2.

    mode="general" uses the w_gen companion triple directly:

        ( X(n)**2 * (2*q + 2**(n-2)*rho*(3*W(n+2) - 2*W(n+1)))
          - (q**2 + 2**(n-2)*rho*q*(3*W(n+2) - 2*W(n+1))
             - 3*2**(2n-3)*rho**2*W(n+1)*W(n+2)) / 7 ) / 7,

    with q the seed form.  mode="cases" substitutes the residue-split
    bracket constants and the product triple t(n) = W(n+1)*W(n+2); both
    modes must agree with each other and with the oracle LHS.
    """
    if n < 2:
        raise ValueError(f"fourth-power closed form needs n >= 2, got {n}")
    comp = companions(params)
    if mode == "general":
        bracket = 3 * comp.w_gen.at(n + 2) - 2 * comp.w_gen.at(n + 1)
        product = comp.w_gen.at(n + 1) * comp.w_gen.at(n + 2)
    elif mode == "cases":
        bracket = _gelin_case_bracket(params, n)
        product = comp.t.at(n)
    else:
        raise ValueError(f"mode must be 'general' or 'cases', got {mode!r}")
    rho = params.rho
    q = params.quartic
    square = term(params, n) ** 2
    p_lin = Fraction(2) ** (n - 2)
    p_sq = Fraction(2) ** (2 * n - 3)
    return (
        square * (2 * q + p_lin * rho * bracket)
        - Fraction(1, 7) * (q * q + p_lin * rho * q * bracket - 3 * p_sq * rho * rho * product)
    ) / 7


def _catalan_j_rhs(n: int, r: int) -> Fraction:
    # J-specific shape: 2**(n+1) replaces 2**n * rho and the seed form is 1.
    v = V_ORDINARY
    bracket = (
        Fraction(2) ** r * v.at(n - r) - 2 * v.at(n) + Fraction(1, 2**r) * v.at(n + r)
    )
    return (Fraction(2) ** (n + 1) * bracket + 7 * u_value(r) ** 2) / 49


def _gelin_j_rhs(n: int) -> Fraction:
    square = term(JACOBSTHAL, n) ** 2
    p_lin = Fraction(2) ** (n - 1)
    p_sq = Fraction(2) ** (2 * n - 1)
    k = _GELIN_J_BRACKET[n % 3]
    s = _GELIN_J_SQUARE_COEFF[n % 3]
    return (square * (2 + k * p_lin) - Fraction(1, 7) * (1 + k * p_lin + s * p_sq)) / 7


# Per-identity evaluators returning (lhs, rhs, witness).  LHS terms come from
# the oracle; RHS from the closed form under test.

_EC5_TABLE = (Fraction(1), Fraction(-2), Fraction(1))
_E8_TABLE = (Fraction(1), Fraction(-1), Fraction(0))


def _eval_e4(params, n, r):
    lhs = 3 * term(JACOBSTHAL, n) + term(JACOBSTHAL_LUCAS, n)
    return lhs, Fraction(2) ** (n + 1), {}


def _eval_e5(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n) - 3 * term(JACOBSTHAL, n)
    return lhs, 2 * term(JACOBSTHAL_LUCAS, n - 3), {}


def _eval_ec5(params, n, r):
    lhs = term(JACOBSTHAL, n + 2) - 4 * term(JACOBSTHAL, n)
    return lhs, _EC5_TABLE[n % 3], {}


def _eval_e6(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n) - 4 * term(JACOBSTHAL, n)
    return lhs, V_ORDINARY.at(n), {"V(n)": V_ORDINARY.at(n)}


def _eval_e7(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n + 1) + term(JACOBSTHAL_LUCAS, n)
    return lhs, 3 * term(JACOBSTHAL, n + 2), {}


def _eval_e8(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n) - term(JACOBSTHAL, n + 2)
    return lhs, _E8_TABLE[n % 3], {}


def _eval_e9(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n - 3) ** 2 + 3 * term(JACOBSTHAL, n) * term(
        JACOBSTHAL_LUCAS, n
    )
    return lhs, Fraction(4) ** n, {}


def _eval_e10(params, n, r):
    lhs = sum(term(JACOBSTHAL, k) for k in range(n + 1))
    rhs = term(JACOBSTHAL, n + 1) - (1 if n % 3 == 0 else 0)
    return lhs, rhs, {}


def _eval_e12(params, n, r):
    lhs = term(JACOBSTHAL_LUCAS, n) ** 2 - 9 * term(JACOBSTHAL, n) ** 2
    return lhs, Fraction(2) ** (n + 2) * term(JACOBSTHAL_LUCAS, n - 3), {}


def _eval_catalan_j(params, n, r):
    lhs = term(JACOBSTHAL, n) ** 2 - term(JACOBSTHAL, n - r) * term(JACOBSTHAL, n + r)
    witness = {
        "V(n-r)": V_ORDINARY.at(n - r),
        "V(n)": V_ORDINARY.at(n),
        "V(n+r)": V_ORDINARY.at(n + r),
        "U(r)": u_value(r),
    }
    return lhs, _catalan_j_rhs(n, r), witness


def _eval_gelin_j(params, n, r):
    j = lambda k: term(JACOBSTHAL, k)
    lhs = j(n) ** 4 - j(n - 2) * j(n - 1) * j(n + 1) * j(n + 2)
    witness = {
        "bracket": _GELIN_J_BRACKET[n % 3],
        "square_coeff": _GELIN_J_SQUARE_COEFF[n % 3],
    }
    return lhs, _gelin_j_rhs(n), witness


def _eval_catalan_gen(params, n, r):
    lhs = term(params, n) ** 2 - term(params, n - r) * term(params, n + r)
    v = companions(params).v_gen
    witness = {
        "rho": params.rho,
        "quartic": params.quartic,
        "V(n-r)": v.at(n - r),
        "V(n)": v.at(n),
        "V(n+r)": v.at(n + r),
        "U(r)": u_value(r),
    }
    return lhs, catalan_rhs(params, n, r), witness


def _gelin_lhs(params, n):
    x = lambda k: term(params, k)
    return x(n) ** 4 - x(n - 2) * x(n - 1) * x(n + 1) * x(n + 2)


def _eval_gelin_gen(params, n, r):
    w = companions(params).w_gen
    witness = {
        "rho": params.rho,
        "quartic": params.quartic,
        "W(n+1)": w.at(n + 1),
        "W(n+2)": w.at(n + 2),
    }
    return _gelin_lhs(params, n), gelin_cesaro_rhs(params, n, "general"), witness


def _eval_gelin_cases(params, n, r):
    comp = companions(params)
    witness = {
        "rho": params.rho,
        "quartic": params.quartic,
        "case_constant": _gelin_case_bracket(params, n),
        "T(n)": comp.t.at(n),
    }
    return _gelin_lhs(params, n), gelin_cesaro_rhs(params, n, "cases"), witness


_Evaluator = Callable[[SequenceParams, int, Optional[int]], tuple]

_EVALUATORS: dict[IdentityId, _Evaluator] = {
    IdentityId.E4: _eval_e4,
    IdentityId.E5: _eval_e5,
    IdentityId.EC5: _eval_ec5,
    IdentityId.E6: _eval_e6,
    IdentityId.E7: _eval_e7,
    IdentityId.E8: _eval_e8,
    IdentityId.E9: _eval_e9,
    IdentityId.E10: _eval_e10,
    IdentityId.E12: _eval_e12,
    IdentityId.CATALAN_J: _eval_catalan_j,
    IdentityId.CASSINI_J: _eval_catalan_j,
    IdentityId.GELIN_CESARO_J: _eval_gelin_j,
    IdentityId.CATALAN_GEN: _eval_catalan_gen,
    IdentityId.CASSINI_GEN: _eval_catalan_gen,
    IdentityId.GELIN_CESARO_GEN: _eval_gelin_gen,
    IdentityId.GELIN_CESARO_CASES: _eval_gelin_cases,
}


def check(
    identity: IdentityId,
    params: SequenceParams = JACOBSTHAL,
    n: int = 0,
    r: Optional[int] = None,
) -> CheckResult:
    """Verify one instance of an identity; exact comparison, no rounding.

    For seed-specific entries (fixed_seeds True) the params argument is
    ignored and the J / jL presets are used.  Out-of-domain (n, r) raises
    ValueError naming the violated constraint.

    >>> check(IdentityId.E4, n=5).equal
    True
    """
    domain = _DOMAINS[identity]
    if n < domain.min_n:
        raise ValueError(f"{identity.value} requires n >= {domain.min_n}, got n={n}")
    if identity in _CASSINI_IDS:
        if r not in (None, 1):
            raise ValueError(f"{identity.value} fixes r = 1, got r={r}")
        r = 1
    elif domain.uses_r:
        if r is None:
            raise ValueError(f"{identity.value} requires r with 0 <= r <= n")
        if r < 0 or r > n:
            raise ValueError(f"{identity.value} requires 0 <= r <= n, got n={n}, r={r}")
    elif r is not None:
        raise ValueError(f"{identity.value} does not take r")
    effective = JACOBSTHAL if domain.fixed_seeds else params
    lhs, rhs, witness = _EVALUATORS[identity](effective, n, r)
    return CheckResult(
        identity=identity, params=effective, n=n, r=r, lhs=lhs, rhs=rhs, witness=witness
    )


def verify_range(
    identity: IdentityId,
    params: SequenceParams = JACOBSTHAL,
    n_max: int = 50,
    r_max: Optional[int] = None,
) -> Report:
    """Run check over the full legal (n, r) grid up to the bounds.

    For Catalan entries the grid is triangular (0 <= r <= n), optionally
    clipped at r_max.  Results are ordered by (n, r), so reports are
    deterministic.
    """
    domain = _DOMAINS[identity]
    if n_max < domain.min_n:
        raise ValueError(
            f"n_max for {identity.value} must be at least {domain.min_n}, got {n_max}"
        )
    results: list[CheckResult] = []
    for n in range(domain.min_n, n_max + 1):
        if domain.uses_r and identity not in _CASSINI_IDS:
            top = n if r_max is None else min(n, r_max)
            for r in range(top + 1):
                results.append(check(identity, params, n, r))
        else:
            results.append(check(identity, params, n))
    effective = JACOBSTHAL if domain.fixed_seeds else params
    return Report.from_results(identity, effective, results)
