#!/usr/bin/env python3
"""Independent state-sum evaluation of the trefoil from a planar diagram code.

Each crossing X[i, j, k, l] lists its four edge labels counterclockwise,
starting from the incoming under-strand. Smoothing A joins (i, j) and (k, l);
smoothing B joins (i, l) and (j, k). Prints the three-variable bracket
sum over states of A^a B^b d^(loops - 1), then the Jones polynomial
(-A^3)^(-w) <D> at A = t^(-1/4), for the code and for its mirror.
"""

from collections import Counter
from fractions import Fraction
from itertools import product

TREFOIL = [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]


def loops(pairs):
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(x) for x in parent})


def bracket(code):
    terms = Counter()
    for choice in product("AB", repeat=len(code)):
        pairs = []
        for (i, j, k, l), c in zip(code, choice):
            pairs += [(i, j), (k, l)] if c == "A" else [(i, l), (j, k)]
        a = choice.count("A")
        terms[(a, len(code) - a, loops(pairs) - 1)] += 1
    return terms


def writhe(code):
    n = 2 * len(code)
    w = 0
    for _, j, _, l in code:
        # over strand runs l -> j when j follows l
        w += 1 if (j - l) % n == 1 else -1
    return w


def jones(code):
    # d = -A^2 - A^-2, B = A^-1, collected by powers of A
    poly = Counter()
    for (a, b, k), c in bracket(code).items():
        part = Counter({a - b: c})
        for _ in range(k):
            nxt = Counter()
            for e, v in part.items():
                nxt[e + 2] -= v
                nxt[e - 2] -= v
            part = nxt
        poly.update(part)
    w = writhe(code)
    sign = -1 if w % 2 else 1
    # A = t^(-1/4): A^e -> t^(-e/4)
    return {Fraction(-(e - 3 * w), 4): sign * v for e, v in poly.items() if v}


def mirror(code):
    return [(l, i, j, k) for i, j, k, l in code]


def show_bracket(terms):
    parts = []
    for (a, b, k), c in sorted(terms.items(), reverse=True):
        parts.append(f"{c}*A^{a}*B^{b}*d^{k}")
    return " + ".join(parts)


def show_jones(poly):
    return " + ".join(f"{v}*t^{e}" for e, v in sorted(poly.items()))


if __name__ == "__main__":
    for name, code in [("code", TREFOIL), ("mirror", mirror(TREFOIL))]:
        print(f"{name}: writhe {writhe(code)}")
        print(f"  bracket {show_bracket(bracket(code))}")
        print(f"  jones   {show_jones(jones(code))}")
