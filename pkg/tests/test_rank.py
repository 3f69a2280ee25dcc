from fractions import Fraction

import pytest

from oracles import naive_rank
from symspan.golden import golden_tables
from symspan.partitions import Partition, count_partitions, enumerate_partitions
from symspan.rank import (
    DEFAULT_PRIMES,
    MemoryBudgetError,
    RelationCertificate,
    build_matrix,
    estimate_matrix_bytes,
    in_span,
    make_certificate,
    nullspace_certificates,
    rank_exact,
    rank_modular,
    verify_certificate,
)
from symspan.series import is_prime, series_row

GOLDEN = golden_tables()

P = Partition
FIRST_RELATION = {P((2, 2, 1, 1, 1)): 4, P((3, 1, 1, 1, 1)): -3, P((3, 2, 2)): -1}
SECOND_RELATION = {P((3, 2, 1, 1)): 3, P((4, 1, 1, 1)): -2, P((4, 3)): -1}


def test_default_primes_are_the_two_smallest_above_2_20():
    above = [p for p in range(2**20 + 1, 2**20 + 20) if is_prime(p)]
    assert tuple(above[:2]) == DEFAULT_PRIMES


def test_build_matrix_n1():
    M = build_matrix(1)
    assert M.entries == ((1,),)
    assert M.shape == (1, 1)


def test_build_matrix_n4():
    M = build_matrix(4)
    assert M.shape == (5, 7)
    assert M.row(P((4,))) == (1, 0, 0, 0, 1, 0, 0)
    assert M.row_index == tuple(enumerate_partitions(4))


@pytest.mark.parametrize("n", range(1, 13))
def test_matrix_shape_and_first_column(n):
    M = build_matrix(n)
    assert M.shape == (count_partitions(n), n * (n - 1) // 2 + 1)
    assert all(r[0] == 1 for r in M.entries)
    for lam, r in zip(M.row_index, M.entries):
        assert r == series_row(lam, M.T).coeffs


def test_build_matrix_memory_budget():
    with pytest.raises(MemoryBudgetError):
        build_matrix(23, memory_budget_mib=0.01)
    assert estimate_matrix_bytes(23) < 64 * 2**20
    build_matrix(7, memory_budget_mib=1)


@pytest.mark.parametrize("n", [1, 7])
def test_rank_exact_small(n):
    assert rank_exact(build_matrix(n)) == GOLDEN.table1[n]["D"]


@pytest.mark.parametrize("n", range(1, 7))
def test_rank_exact_against_naive_elimination(n):
    M = build_matrix(n)
    assert rank_exact(M) == naive_rank([list(r) for r in M.entries])


@pytest.mark.parametrize("n", range(1, 13))
def test_rank_bounded_and_full_only_up_to_six(n):
    D = rank_exact(build_matrix(n))
    assert D <= n * (n - 1) // 2 + 1
    assert D <= count_partitions(n)
    assert (D == count_partitions(n)) == (n <= 6)


def test_rank_modular_seven():
    res = rank_modular(7, (1048583, 1048589))
    assert res.ranks == {1048583: 13, 1048589: 13}
    assert res.consensus and res.rank == 13


def test_rank_modular_nineteen():
    res = rank_modular(19)
    assert res.consensus and res.rank == 118


@pytest.mark.parametrize("n", range(1, 11))
def test_single_prime_rank_is_lower_bound(n):
    exact = rank_exact(build_matrix(n))
    res = rank_modular(n, (1048583, 1048601))
    assert all(r <= exact for r in res.ranks.values())


@pytest.mark.parametrize("n", range(1, 16))
def test_modular_matches_exact(n):
    assert rank_modular(n).rank == rank_exact(build_matrix(n))


def test_rank_modular_flags_disagreement(monkeypatch):
    import symspan.rank as rank_mod

    monkeypatch.setattr(rank_mod, "_streamed_rank_mod", lambda n, p: 5 if p == 1048583 else 6)
    res = rank_modular(4)
    assert res.status == "inconsistent" and res.rank == 6


@pytest.mark.parametrize("primes", [(1048583,), (1048583, 1048583), (1048583, 101), (1048583, 1048587)])
def test_rank_modular_rejects_bad_primes(primes):
    with pytest.raises(ValueError):
        rank_modular(5, primes)


def test_no_certificates_at_six():
    assert nullspace_certificates(6) == []


def test_two_certificates_at_seven():
    certs = nullspace_certificates(7)
    assert len(certs) == 2
    assert all(c.verified for c in certs)
    assert in_span(FIRST_RELATION, certs)
    assert in_span(SECOND_RELATION, certs)
    assert not in_span({P((7,)): 1}, certs)


@pytest.mark.parametrize("n", range(1, 13))
def test_certificate_count_and_validity(n):
    certs = nullspace_certificates(n)
    D = rank_exact(build_matrix(n))
    assert len(certs) == count_partitions(n) - D
    order = {lam: i for i, lam in enumerate(enumerate_partitions(n))}
    for c in certs:
        assert c.verified and verify_certificate(c)
        coeffs = [a for _, a in c.terms]
        assert coeffs[0] > 0
        assert all(a != 0 for a in coeffs)
        from math import gcd
        g = 0
        for a in coeffs:
            g = gcd(g, a)
        assert g == 1
        idx = [order[lam] for lam, _ in c.terms]
        assert idx == sorted(idx)
    # independent: the certificate vectors have full rank
    if certs:
        index = enumerate_partitions(n)
        vecs = [[c.as_dict().get(lam, 0) for lam in index] for c in certs]
        assert naive_rank(vecs) == len(certs)


def test_verify_known_relations():
    assert make_certificate(7, FIRST_RELATION).verified
    assert make_certificate(7, SECOND_RELATION).verified


def test_verify_rejects_non_relations():
    assert not verify_certificate(RelationCertificate(7, ((P((7,)), 1),)))
    assert not verify_certificate(RelationCertificate(7, ()))
    bad = dict(FIRST_RELATION)
    bad[P((3, 2, 2))] = -2
    assert not make_certificate(7, bad).verified
    # partitions of the wrong size
    assert not verify_certificate(RelationCertificate(7, ((P((3, 3)), 1),)))


def test_make_certificate_normalizes():
    scaled = {lam: -6 * a for lam, a in FIRST_RELATION.items()}
    cert = make_certificate(7, scaled)
    assert cert.terms == ((P((3, 2, 2)), 1), (P((3, 1, 1, 1, 1)), 3), (P((2, 2, 1, 1, 1)), -4))


def test_relation_as_character_identity():
    # 4 chi((2,2,1,1,1)-cycle) = 3 chi((3,1,1,1,1)-cycle) + chi((3,2,2)-cycle), every N
    T = 60
    a = series_row(P((2, 2, 1, 1, 1)), T)
    b = series_row(P((3, 1, 1, 1, 1)), T)
    c = series_row(P((3, 2, 2)), T)
    assert all(4 * x == 3 * y + z for x, y, z in zip(a, b, c))


def test_certificate_truncation_is_sharp_enough():
    # A relation that holds to degree T must hold far beyond it.
    for cert in nullspace_certificates(8):
        total = [0] * 200
        for lam, a in cert.terms:
            for i, c in enumerate(series_row(lam, 199)):
                total[i] += a * c
        assert not any(total)


def test_in_span_with_fractions_of_basis():
    certs = nullspace_certificates(7)
    d0, d1 = certs[0].as_dict(), certs[1].as_dict()
    combo = {}
    for lam in set(d0) | set(d1):
        v = Fraction(3, 1) * d0.get(lam, 0) - 5 * d1.get(lam, 0)
        combo[lam] = int(v)
    assert in_span(combo, certs)


@pytest.mark.parametrize("p", [101, 1048583, 2147483629])
def test_matmul_mod_exact(p):
    import numpy as np

    from symspan.rank import _matmul_mod

    rng = np.random.default_rng(p)
    A = rng.integers(0, p, size=(7, 300), dtype=np.int64)
    B = rng.integers(0, p, size=(300, 5), dtype=np.int64)
    want = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(300)) % p for j in range(5)]
            for i in range(7)]
    assert _matmul_mod(A, B, p).tolist() == want


def test_modular_batching_does_not_change_rank():
    from symspan.rank import _streamed_rank_mod

    for batch in (1, 3, 1000):
        assert _streamed_rank_mod(12, 1048583, batch=batch) == 45
