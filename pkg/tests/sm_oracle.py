"""Rank-one (Sherman-Morrison) decompositions of the SRZF quantities.

Straight-line reference code using explicit inverses. Each function
returns the directly evaluated value and the decomposed one, for
user ``k`` (and partner ``j`` where relevant).
"""

import numpy as np


def _q(H, G, lam, theta):
    M = H.shape[1]
    return H.conj().T @ H + theta * G.conj().T @ G + lam * np.eye(M)


def _outer(v):
    # v* v^T for a channel row v (h_k^T)
    return np.outer(v.conj(), v)


def quad(a, B, b):
    """``a^T B b*`` for rows ``a``, ``b``."""
    return a @ B @ b.conj()


def U_k(H, G, lam, theta, k):
    Qi = np.linalg.inv(_q(H, G, lam, theta))
    direct = abs(quad(H[k], Qi, H[k])) ** 2
    Qk_i = np.linalg.inv(_q(H, G, lam, theta) - _outer(H[k]))
    c = quad(H[k], Qk_i, H[k]).real
    return direct, (c / (1 + c)) ** 2


def I_k(H, G, lam, theta, k):
    Q = _q(H, G, lam, theta)
    Qi = np.linalg.inv(Q)
    direct = sum(abs(quad(H[k], Qi, H[j])) ** 2 for j in range(H.shape[0]) if j != k)
    Qk_i = np.linalg.inv(Q - _outer(H[k]))
    ck = quad(H[k], Qk_i, H[k]).real
    total = 0.0
    for j in range(H.shape[0]):
        if j == k:
            continue
        Qkj_i = np.linalg.inv(Q - _outer(H[k]) - _outer(H[j]))
        cj = quad(H[j], Qkj_i, H[j]).real
        total += abs(quad(H[k], Qkj_i, H[j])) ** 2 / ((1 + ck) ** 2 * (1 + cj) ** 2)
    return direct, total


def beta(H, G, lam, theta):
    Q = _q(H, G, lam, theta)
    M = H.shape[1]
    A = np.linalg.inv(Q) @ H.conj().T
    direct = np.trace(A @ A.conj().T).real / M
    total = 0.0
    for k in range(H.shape[0]):
        Qk_i = np.linalg.inv(Q - _outer(H[k]))
        c = quad(H[k], Qk_i, H[k]).real
        total += quad(H[k], Qk_i @ Qk_i, H[k]).real / (1 + c) ** 2
    return direct, total / M


def L_k(H, G, lam, theta, k):
    """Direct form, Q_k form and Gamma_{k,j} form of the leakage quadratic."""
    Q = _q(H, G, lam, theta)
    Qi = np.linalg.inv(Q)
    GhG = G.conj().T @ G
    direct = quad(H[k], Qi @ GhG @ Qi, H[k]).real
    Qk = Q - _outer(H[k])
    Qk_i = np.linalg.inv(Qk)
    c = quad(H[k], Qk_i, H[k]).real
    via_qk = quad(H[k], Qk_i @ GhG @ Qk_i, H[k]).real / (1 + c) ** 2
    total = 0.0
    for j in range(G.shape[0]):
        Gam_i = np.linalg.inv(Qk - theta * _outer(G[j]))
        num = abs(quad(G[j], Gam_i, H[k])) ** 2
        den = (1 + theta * quad(G[j], Gam_i, G[j]).real) ** 2
        total += num / den
    return direct, via_qk, total / (1 + c) ** 2


def random_instance(rng, M, K, J):
    def cn(r):
        return (rng.standard_normal((r, M)) + 1j * rng.standard_normal((r, M))) / np.sqrt(2 * M)

    return cn(K), cn(J)
