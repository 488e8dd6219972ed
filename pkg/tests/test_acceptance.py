"""Acceptance criteria, one test per criterion.

Each test prints a single PASS line with its measured time (visible with
pytest -s); the assertions pin the exact values and the time budget.
"""

import random
import time
from contextlib import contextmanager

from cubicpart.arith import admissible_residues, kronecker, legendre
from cubicpart.engine import (
    CongruenceClaim,
    build_certificate,
    prove_isolated,
    theorem_claims,
    verify_claim,
    verify_theorem_family,
)
from cubicpart.modform import (
    CharacterDescriptor,
    check_candidacy,
    cusp_orders,
    hecke_tp,
    hecke_tp_factored,
)
from cubicpart.partitions import (
    CUBIC,
    OVERCUBIC,
    PartitionFamily,
    check_functional_equation,
    check_lemma_product,
    check_named_identity,
    count_direct,
    generating_series,
)
from cubicpart.series import TruncatedSeries, ZZ, zmod

CH1 = CharacterDescriptor(weight=2, s_numerator=1, s_denominator=1)


@contextmanager
def budget(num, label, seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"criterion {num} exceeded {seconds}s: {elapsed:.2f}s"
    print(f"criterion {num:2d} PASS  {label}  ({elapsed:.2f}s < {seconds}s)")


def test_criterion_01_known_values():
    with budget(1, "known values a2(3), a2(4), p(4), abar2(3)", 1):
        cases = (
            (CUBIC, 2, 3, 4),
            (CUBIC, 2, 4, 9),
            (CUBIC, 1, 4, 5),
            (OVERCUBIC, 2, 3, 12),
        )
        for kind, c, n, expected in cases:
            fam = PartitionFamily(kind, c)
            assert generating_series(fam, n + 1, ZZ).coefficient(n) == expected
            assert count_direct(fam, n) == expected


def test_criterion_02_oracle_equivalence():
    with budget(2, "series coefficient == DP count, c <= 6, n <= 60", 30):
        for kind in (CUBIC, OVERCUBIC):
            for c in range(1, 7):
                fam = PartitionFamily(kind, c)
                series = generating_series(fam, 61, ZZ)
                for n in range(61):
                    assert series.coefficient(n) == count_direct(fam, n), (kind, c, n)


def test_criterion_03_ramanujan_congruences():
    with budget(3, "p(5n+4), p(7n+5), p(11n+6) to 10^4", 10):
        fam = PartitionFamily(CUBIC, 1)
        for m, r in ((5, 4), (7, 5), (11, 6)):
            result = verify_claim(CongruenceClaim(fam, m, m, r), 10_000)
            assert result.holds, (m, r, result.witness)


def test_criterion_04_closed_form_identities():
    with budget(4, "Ramanujan and Chan identities to order 300", 5):
        assert check_named_identity("ramanujan-p5n4", 300)
        assert check_named_identity("chan-a2-3n2", 300)


def test_criterion_05_functional_machinery():
    with budget(5, "functional equation c=1..6 at 200; product lemma at 128", 10):
        for c in range(1, 7):
            assert check_functional_equation(c, 200), c
        for p in (3, 5, 7):
            assert check_lemma_product(p, 128), p


def test_criterion_06_theorem_12_sharp():
    with budget(6, "family 1.2 admissible hold / inadmissible refuted, p <= 13", 60):
        survivors = []
        for p in (3, 5, 7, 11, 13):
            results = verify_theorem_family("1.2", p=p, n_max=2000)
            assert all(r.holds for r in results), p
            admissible = admissible_residues(p, CUBIC).admissible
            fam = PartitionFamily(CUBIC, p - 1)
            for r in range(1, p):
                if r in admissible or (8 * r + 1) % p == 0:
                    continue
                assert legendre(8 * r + 1, p) == 1
                outcome = verify_claim(CongruenceClaim(fam, p, p, r), 2000)
                if outcome.holds:
                    survivors.append((p, r))
                else:
                    assert outcome.witness is not None
        if survivors:
            # sharpness is an expectation, not a theorem: flag, don't fail
            print(f"criterion 6 NOTE: manual review needed for {survivors}")


def test_criterion_07_corollary_13():
    with budget(7, "family cor-1.3, k in {2,3}, p in {3,5}", 30):
        for p in (3, 5):
            for k in (2, 3):
                results = verify_theorem_family("cor-1.3", p=p, k=k, n_max=2000)
                assert results and all(r.holds for r in results), (p, k)


def test_criterion_08_theorem_11_j2():
    with budget(8, "a2(25n+22) == 0 mod 5 to 10^4", 10):
        claims = theorem_claims("1.1")
        assert claims == [CongruenceClaim(PartitionFamily(CUBIC, 2), 5, 25, 22)]
        assert verify_claim(claims[0], 10_000).holds


def test_criterion_09_theorem_15_numerics():
    with budget(9, "a3(7n+4) mod 7 and a5(11n+10) mod 11 to 10^4", 10):
        for claim in theorem_claims("1.5"):
            assert verify_claim(claim, 10_000).holds, claim


def test_criterion_10_theorem_15_certificates():
    with budget(10, "Sturm certificates for both isolated congruences", 60):
        cert_h = prove_isolated("a3-mod7")
        assert cert_h.proven
        assert cert_h.weight == 37 and cert_h.level == 8 and cert_h.bound == 37
        assert {d: int(v) for d, v in cert_h.cusp_table.orders.items()} == {
            1: 25, 2: 6, 4: 3, 8: 3,
        }
        cert_g = prove_isolated("a5-mod11")
        assert cert_g.proven
        assert cert_g.weight == 14 and cert_g.level == 4 and cert_g.bound == 7
        # independent re-evaluation of the cusp-order formula
        for cert in (cert_h, cert_g):
            assert check_candidacy(cert.quotient).passes
            table = cusp_orders(cert.quotient)
            assert table.orders == cert.cusp_table.orders and table.is_holomorphic


def test_criterion_11_theorem_41():
    with budget(11, "family 4.1, p in {3,5,7}, k in {1,2}", 60):
        for p in (3, 5, 7):
            for k in (1, 2):
                results = verify_theorem_family("4.1", p=p, k=k, n_max=2000)
                assert len(results) == (p - 1) // 2
                assert all(r.holds for r in results), (p, k)


def test_criterion_12_remark_families():
    with budget(12, "a6(5n+4), a8(7n+5), a12(11n+6) to 2000", 30):
        for p, c, r in ((5, 6, 4), (7, 8, 5), (11, 12, 6)):
            results = verify_theorem_family("remarks", p=p, k=1, n_max=2000)
            claim = results[0].claim
            assert claim.family.colors == c and claim.residue == r
            assert results[0].holds


def test_criterion_13_property_suites():
    with budget(13, "randomized property suites, >= 100 cases each", 60):
        rng = random.Random(2024)

        def rand_series(ring, max_len=12):
            length = rng.randrange(1, max_len)
            return TruncatedSeries(
                ring, [rng.randrange(-9, 10) for _ in range(length)], 0, length
            )

        # ring axioms
        for _ in range(120):
            ring = rng.choice([ZZ, zmod(5), zmod(7)])
            a, b, c = (rand_series(ring) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            lhs, rhs = a * (b + c), a * b + a * c
            stop = min(lhs.order, rhs.order)
            assert lhs.coefficients(stop) == rhs.coefficients(stop)

        # Hecke linearity
        for _ in range(120):
            ring = rng.choice([ZZ, zmod(7), zmod(11)])
            n = rng.randrange(8, 40)
            f = TruncatedSeries(ring, [rng.randrange(-9, 10) for _ in range(n)], 0, n)
            g = TruncatedSeries(ring, [rng.randrange(-9, 10) for _ in range(n)], 0, n)
            p = rng.choice([2, 3, 5])
            ell = rng.randrange(2, 6)
            assert hecke_tp(f + g, p, ell, CH1) == hecke_tp(f, p, ell, CH1) + hecke_tp(
                g, p, ell, CH1
            )

        # mod-p collapse of T_p for ell > 1
        for _ in range(120):
            p = rng.choice([3, 5, 7, 11])
            n = rng.randrange(p + 1, 60)
            f = TruncatedSeries(zmod(p), [rng.randrange(p) for _ in range(n)], 0, n)
            assert hecke_tp(f, p, rng.randrange(2, 8), CH1) == f.extract_progression(
                p, 0
            )

        # factored vs direct Hecke route
        for _ in range(100):
            p = rng.choice([3, 5, 7])
            ring = zmod(p)
            ell = rng.randrange(2, 6)
            ng = rng.randrange(p + 1, 50)
            g = TruncatedSeries(ring, [rng.randrange(p) for _ in range(ng)], 0, ng)
            h = TruncatedSeries(
                ring, [rng.randrange(p) for _ in range(rng.randrange(2, 15))], 0, None
            ).substitute_power(p)
            direct = hecke_tp(g * h, p, ell, CH1)
            factored = hecke_tp_factored(g, h, p, ell, CH1)
            stop = min(direct.order, factored.order)
            assert direct.coefficients(stop) == factored.coefficients(stop)

        # Kronecker vs Euler criterion
        checked = 0
        for p in (3, 5, 7, 11, 13, 17, 19):
            for a in range(-15, 16):
                euler = pow(a % p, (p - 1) // 2, p)
                expected = 0 if euler == 0 else (-1 if euler == p - 1 else 1)
                assert kronecker(a, p) == expected
                checked += 1
        assert checked >= 100


def test_mutated_certificate_is_rejected():
    # not numbered, but the failure path must stay honest
    cert = build_certificate("a3-mod7", hecke_prime=5, modulus=5)
    assert not cert.proven and cert.failure_stage == "hecke-window"
