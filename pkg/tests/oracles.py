"""Slow reference computations that share no code with the package.

Everything uses Fractions and full bounding boxes, no pruning.
"""
import itertools
from fractions import Fraction


def ratio_chain(lam, s):
    return [Fraction(x, y) for x, y in zip(lam, s)]


def asc_fraction(e, s):
    r = [Fraction(0)] + ratio_chain(e, s)
    return sum(1 for i in range(len(s)) if r[i] < r[i + 1])


def in_dilate(lam, s, t):
    r = [Fraction(0)] + ratio_chain(lam, s) + [Fraction(t)]
    return all(a <= b for a, b in zip(r, r[1:]))


def dilate_points(s, t):
    box = itertools.product(*(range(t * x + 1) for x in s))
    return [lam for lam in box if in_dilate(lam, s, t)]


def interior_points(s, t):
    box = itertools.product(*(range(t * x + 1) for x in s))
    out = []
    for lam in box:
        r = [Fraction(0)] + ratio_chain(lam, s) + [Fraction(t)]
        if all(a < b for a, b in zip(r, r[1:])):
            out.append(lam)
    return out


def parallelepiped_points(s):
    """Integer points of the half-open parallelepiped by full-box search.

    Solves the barycentric system against the explicit vertex list, with
    ``lam_j < n * s_j`` and ``k <= n`` as the search box.
    """
    n = len(s)
    verts = [(0,) * n] + [(0,) * i + tuple(s[i:]) for i in range(n)]
    out = []
    for lam in itertools.product(*(range(n * x) for x in s)):
        for k in range(n + 1):
            # eta_i for i >= 1 from successive differences of lam_j / s_j
            eta = [None] * (n + 1)
            prev = Fraction(0)
            for j in range(n):
                cur = Fraction(lam[j], s[j])
                eta[j + 1] = cur - prev
                prev = cur
            eta[0] = k - prev
            if not all(0 <= x < 1 for x in eta):
                continue
            # reconstruct from the vertex list as an independent check
            pt = [sum(eta[i] * verts[i][j] for i in range(n + 1)) for j in range(n)]
            assert pt == list(lam) and sum(eta) == k
            out.append(tuple(lam) + (k,))
    return out


def hstar_brute(s):
    counts = [0] * (len(s) + 1)
    for p in parallelepiped_points(s):
        counts[p[-1]] += 1
    return counts


def hstar_ascents_brute(s):
    counts = [0] * (len(s) + 1)
    for e in itertools.product(*(range(x) for x in s)):
        counts[asc_fraction(e, s)] += 1
    return counts
