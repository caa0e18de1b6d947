"""Independent floating-point and pure-Python cross-checks."""

from math import comb

import numpy as np
import pytest

import uqpa


def generators(p, n):
    q = np.exp(1j * np.pi / p)
    K1 = np.diag([q, 1 / q])
    E1 = np.array([[0, 1], [0, 0]], dtype=complex)
    F1 = np.array([[0, 0], [1, 0]], dtype=complex)
    K, E, F = K1, E1, F1
    for _ in range(n - 1):
        I = np.eye(2)
        E, F, K = (np.kron(E, K1) + np.kron(np.eye(len(K)), E1),
                   np.kron(F, I) + np.kron(np.linalg.inv(K), F1),
                   np.kron(K, K1))
    return K, E, F


def commutant_numeric(p, n):
    mats = generators(p, n)
    d = 2 ** n
    I = np.eye(d)
    rows = [np.kron(I, g) - np.kron(g.T, I) for g in mats]
    s = np.linalg.svd(np.vstack(rows), compute_uv=False)
    return int(np.sum(s < 1e-8 * s[0]))


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5)])
def test_commutant_matches_numeric_oracle(p, n):
    expected = commutant_numeric(p, n)
    assert uqpa.commutant_dim(p, n) == expected
    assert uqpa.dimension(n, p) == expected


def ballot(a, b):
    def c(x, y):
        return comb(x, y) if 0 <= y <= x else 0
    return c(a, b) - c(a, b - 1)


def half(i, convention):
    if convention == "truncate-toward-zero":
        return int(i / 2)
    return i // 2


def g(n, i, convention):
    if convention == "zero-for-negative-index" and i < 0:
        return 0
    h = half(i, convention)
    total = sum(2 * ballot(n, i + 1 - j) * ballot(n, j) for j in range(0, h + 1))
    return total + (half(i + 1, convention) - h) * ballot(n, h + 1) ** 2


def conjecture(n, p, convention):
    catalan = comb(2 * n, n) // (n + 1)
    return catalan + sum((n + 1) * (n + 3) * g(n, n - (j + 2) * p, convention)
                         for j in range(0, n // p + 1))


@pytest.mark.parametrize("convention", uqpa.conventions())
@pytest.mark.parametrize("p", [2, 3])
def test_conjecture_matches_reference(convention, p):
    for n in range(1, 11):
        assert uqpa.conjecture(n, p, convention) == conjecture(n, p, convention)

