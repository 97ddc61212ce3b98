"""Independent reference computations used to check the package."""
import math

import numpy as np


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    na = sum(x * x for x in a)
    nb = sum(y * y for y in b)
    return dot / math.sqrt(na * nb)


def hamming(a, b):
    return sum(1 for x, y in zip(a, b) if x != y)


def positive_union(names_a, names_b):
    return set(names_a) | set(names_b)


def count_distinct_brute(vectors):
    """Distinct vectors by pairwise comparison, no hashing."""
    reps = []
    for v in vectors:
        if not any(all(x == y for x, y in zip(v, r)) for r in reps):
            reps.append(v)
    return len(reps)


def connected_components(adjacency):
    n = len(adjacency)
    seen, comps = set(), []
    for start in range(n):
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            i = stack.pop()
            if i in comp:
                continue
            comp.add(i)
            stack.extend(j for j in range(n) if adjacency[i][j] and j not in comp)
        seen |= comp
        comps.append(comp)
    return comps


def kwic_scan(rows, targets, width):
    """Naive keyword-in-context scan over (id, segments) rows."""
    out = []
    for fid, segs in rows:
        for i in range(len(segs)):
            if segs[i] in targets:
                left = [segs[j] for j in range(i - width, i) if j >= 0]
                right = [segs[j] for j in range(i + 1, i + 1 + width) if j < len(segs)]
                out.append((fid, tuple(left), segs[i], tuple(right)))
    return out


def covariance_eigvals(x):
    x = np.asarray(x, dtype=float)
    c = x - x.mean(axis=0)
    return np.sort(np.linalg.eigvalsh(c.T @ c / (len(x) - 1)))[::-1]
