"""Acceptance battery.

One test per criterion; each prints a PASS line once its assertions hold
(visible with `pytest -s` or in the captured output section).  All
comparisons are exact; the only tolerances here are wall-clock budgets.
"""

import random
import time
from fractions import Fraction

from jacobsthal3.cli import main
from jacobsthal3.closed_forms import binet_term, decomposed_term
from jacobsthal3.identities import IdentityId, catalan_rhs, check, gelin_cesaro_rhs, verify_range
from jacobsthal3.sequences import (
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    SequenceParams,
    term,
    term_range,
)
from jacobsthal3.series import gf_coefficients
from jacobsthal3.sums import (
    DegenerateStrideError,
    StridedSumContext,
    strided_sum_closed,
    sum_oracle,
    weighted_sum_charpoly_form,
    weighted_sum_closed,
)

PARAM_SET = [
    JACOBSTHAL,
    JACOBSTHAL_LUCAS,
    SequenceParams(1, 2, 3),
    SequenceParams(5, -1, 2),
    SequenceParams(Fraction(1, 2), -3, Fraction(7, 5)),
]


def _random_triples(count, seed=20260810):
    rng = random.Random(seed)

    def draw():
        num = rng.randint(-20, 20)
        den = 0
        while den == 0:
            den = rng.randint(-20, 20)
        return Fraction(num, den)

    return [SequenceParams(draw(), draw(), draw()) for _ in range(count)]


def test_criterion_1_closed_form_agreement():
    started = time.monotonic()
    for params in _random_triples(50):
        stream = term_range(params, 0, 200)
        for n, expected in enumerate(stream):
            assert binet_term(params, n) == expected
            assert decomposed_term(params, n) == expected
    elapsed = time.monotonic() - started
    assert elapsed < 10.0, f"closed-form agreement took {elapsed:.1f}s, budget 10s"
    print(f"PASS criterion 1: closed-form agreement, 50 triples x n<=200 ({elapsed:.1f}s)")


def test_criterion_2_identity_catalog_sweep():
    for ident in (IdentityId.E4, IdentityId.E6, IdentityId.E7, IdentityId.E8,
                  IdentityId.EC5, IdentityId.E10):
        report = verify_range(ident, n_max=100)
        assert report.total == 101 and report.failed == 0, ident
    for ident in (IdentityId.E5, IdentityId.E9, IdentityId.E12):
        report = verify_range(ident, n_max=100)
        assert report.total == 98 and report.failed == 0, ident
    # spot values
    assert 3 * term(JACOBSTHAL, 5) + term(JACOBSTHAL_LUCAS, 5) == 3 * 9 + 37 == 2**6
    assert (term(JACOBSTHAL_LUCAS, 0) ** 2
            + 3 * term(JACOBSTHAL, 3) * term(JACOBSTHAL_LUCAS, 3)) == 4 + 60 == 4**3
    assert (term(JACOBSTHAL_LUCAS, 3) ** 2
            - 9 * term(JACOBSTHAL, 3) ** 2) == 100 - 36 == 2**5 * term(JACOBSTHAL_LUCAS, 0)
    print("PASS criterion 2: linear identity catalog, n <= 100, zero failures")


def test_criterion_3_catalan_cassini():
    report = verify_range(IdentityId.CATALAN_J, n_max=64)
    assert report.failed == 0
    total = report.total
    for params in PARAM_SET:
        report = verify_range(IdentityId.CATALAN_GEN, params, n_max=64)
        assert report.failed == 0, params
        total += report.total
    # instance: J(4)**2 - J(2)*J(6) = 25 - 18 = 7, reproduced by the closed form
    assert term(JACOBSTHAL, 4) ** 2 - term(JACOBSTHAL, 2) * term(JACOBSTHAL, 6) == 7
    assert catalan_rhs(JACOBSTHAL, 4, 2) == 7
    print(f"PASS criterion 3: Catalan/Cassini over {len(PARAM_SET)} seed triples, "
          f"r <= n <= 64 ({total} instances)")


def test_criterion_4_gelin_cesaro():
    report = verify_range(IdentityId.GELIN_CESARO_J, n_max=64)
    assert report.failed == 0
    for params in PARAM_SET:
        for n in range(2, 65):
            general = gelin_cesaro_rhs(params, n, "general")
            cases = gelin_cesaro_rhs(params, n, "cases")
            lhs = check(IdentityId.GELIN_CESARO_GEN, params, n).lhs
            assert general == cases == lhs, (params, n)
    # instances
    assert check(IdentityId.GELIN_CESARO_J, n=2).lhs == 1
    assert check(IdentityId.GELIN_CESARO_J, n=3).lhs == -29
    print("PASS criterion 4: Gelin-Cesaro general/cases/oracle agree, 2 <= n <= 64")


def test_criterion_5_generating_function():
    for params in PARAM_SET:
        assert gf_coefficients(params, 128) == term_range(params, 0, 127), params
    assert gf_coefficients(JACOBSTHAL, 9) == [0, 1, 1, 2, 5, 9, 18, 37, 73]
    print("PASS criterion 5: generating function matches the oracle to 128 coefficients")


def test_criterion_6_weighted_sums():
    xs = (Fraction(1), Fraction(-1), Fraction(3), Fraction(1, 2), Fraction(-2, 3), Fraction(5))
    for params in PARAM_SET:
        for x in xs:
            for n in range(33):
                weights = [x ** (-k) for k in range(n + 1)]
                oracle = sum_oracle(params, range(n + 1), weights)
                assert weighted_sum_closed(params, x, n) == oracle, (params, x, n)
    # erratum pin: the charpoly-denominator variant must give exactly -4
    # where the oracle gives 4
    assert weighted_sum_charpoly_form(JACOBSTHAL, 1, 3) == -4
    assert sum_oracle(JACOBSTHAL, range(4)) == 4
    assert weighted_sum_charpoly_form(JACOBSTHAL, 1, 3) != sum_oracle(JACOBSTHAL, range(4))
    print("PASS criterion 6: weighted sums (sign-corrected) match the oracle; "
          "charpoly variant pinned to -4 vs 4")


def test_criterion_7_strided_sums():
    for params in PARAM_SET:
        for m in (1, 2, 4, 5):
            for r in range(m, m + 7):
                for n in range(25):
                    indices = [m * k + r for k in range(n + 1)]
                    assert strided_sum_closed(params, m, r, n) == sum_oracle(params, indices)
    ctx = StridedSumContext.of(2, 2)
    assert ctx.sigma == 9
    assert strided_sum_closed(JACOBSTHAL, 2, 2, 1) == 6
    for m in (3, 6):
        assert StridedSumContext.of(m, m).sigma == 0
        try:
            strided_sum_closed(JACOBSTHAL, m, m, 4)
            raise AssertionError("degenerate stride must raise")
        except DegenerateStrideError:
            pass
    print("PASS criterion 7: strided sums match the oracle; degenerate strides rejected")


def test_criterion_8_cli(capsys, tmp_path):
    started = time.monotonic()
    code = main(["selftest"])
    elapsed = time.monotonic() - started
    out = capsys.readouterr().out
    assert code == 0, out
    assert elapsed < 60.0, f"selftest took {elapsed:.1f}s, budget 60s"

    path = tmp_path / "b000001.txt"
    assert main(["gen", "--to", "50", "--format", "bfile", "--output", str(path)]) == 0
    capsys.readouterr()
    first = path.read_bytes()
    parsed = [line.split(" ") for line in first.decode("utf-8").splitlines()]
    values = term_range(JACOBSTHAL, 0, 50)
    assert [int(n) for n, _ in parsed] == list(range(51))
    assert [Fraction(v) for _, v in parsed] == values
    assert main(["gen", "--to", "50", "--format", "bfile", "--output", str(path)]) == 0
    capsys.readouterr()
    assert path.read_bytes() == first
    print(f"PASS criterion 8: selftest exit 0 in {elapsed:.1f}s; b-file round trip bit-exact")
