"""Independent sympy oracle for catalog-level frozen values.

Expands products by explicit basis-index loops (no Kronecker algebra) so
that it stays independent of the C++ closed-form route.
"""
import itertools
import sympy as sp

a1, a2, a4, b1, b2 = sp.symbols("a1 a2 a4 b1 b2")
R = sp.Rational


def mat(rows):
    return [[sp.sympify(x) for x in r] for r in rows]


A = {
    "A1": mat([[a1, a2, a2 + 1, a4], [b1, -a1, -a1 + 1, -a2]]),
    "A2": mat([[a1, 0, 0, 1], [b1, b2, 1 - a1, 0]]),
    "A3": mat([[0, 1, 1, 0], [b1, b2, 1, -1]]),
    "A4": mat([[a1, 0, 0, 0], [0, b2, 1 - a1, 0]]),
    "A5": mat([[a1, 0, 0, 0], [1, 2 * a1 - 1, 1 - a1, 0]]),
    "A6": mat([[a1, 0, 0, 1], [b1, 1 - a1, -a1, 0]]),
    "A7": mat([[0, 1, 1, 0], [b1, 1, 0, -1]]),
    "A8": mat([[a1, 0, 0, 0], [0, 1 - a1, -a1, 0]]),
    "A9": mat([[R(1, 3), 0, 0, 0], [1, R(2, 3), R(-1, 3), 0]]),
    "A10": mat([[0, 1, 1, 0], [0, 0, 0, -1]]),
    "A11": mat([[0, 1, 1, 0], [1, 0, 0, -1]]),
    "A12": mat([[0, 0, 0, 0], [1, 0, 0, 0]]),
}

B = {
    "B1": mat([
        [a2 * b1 + a1**2, 0, a1 + a2, a1 * a4 - a2**2, a4 * b1 + a2 * a1 + a1,
         a2**2 - a2 - a1 * a4, a2**2 + 2 * a2 - a1 * a4 + a4 + 1, a4],
        [0, a2 * b1 + a1**2, a2 * b1 + a1**2 - a1 + b1, a4 * b1 + a1 * a2,
         -a2 * b1 - a1**2 + a1, a2, 1 - a1, a2**2 - a1 * a4 + a4]]),
    "B2": mat([[a1**2, 0, 0, a1, b1, b2, 1 - a1, 0],
               [a1 * b1 + b2 * b1, b2**2, (1 - a1) * b2, b1, a1 * (1 - a1), 0, 0, 1 - a1]]),
    "B3": mat([[b1, b2, 1, -1, 0, 1, 1, 0],
               [b1 * b2, b2**2 + b1, b1 + b2, -b2, -b1, 1 - b2, 0, 1]]),
    "B4": mat([[a1**2, 0, 0, 0, 0, 0, 0, 0],
               [0, b2**2, (1 - a1) * b2, 0, a1 * (1 - a1), 0, 0, 0]]),
    "B5": mat([[a1**2, 0, 0, 0, 0, 0, 0, 0],
               [3 * a1 - 1, (2 * a1 - 1)**2, (2 * a1 - 1) * (1 - a1), 0, a1 * (1 - a1), 0, 0, 0]]),
    "B6": mat([[a1**2, 0, 0, a1, b1, 1 - a1, -a1, 0],
               [b1, (1 - a1)**2, -a1 * (1 - a1), b1, -a1**2, 0, 0, -a1]]),
    "B7": mat([[b1, b1 + 1, 0, -1, 0, 1, 1, 0],
               [b1, 1, b1, -1, -b1, -1, 0, 1]]),
    "B8": mat([[a1**2, 0, 0, 0, a1**2, 0, 0, 0],
               [0, (1 - a1)**2, -a1 * (1 - a1), 0, 0, 0, 0, 0]]),
    "B9": mat([[R(1, 9), 0, 0, 0, 0, 0, 0, 0],
               [1, R(4, 9), R(-2, 9), 0, R(-1, 9), 0, 0, 0]]),
    "B10": mat([[0, 0, 0, -1, 0, 1, 1, 0], [0, 0, 0, 0, 0, 0, 0, 1]]),
    "B11": mat([[1, 0, 0, -1, -1, 1, 1, 0], [0, 1, 1, 0, 0, 0, 0, 1]]),
}


def mu(M, r, s):
    return [M[l][2 * r + s] for l in range(2)]


def ternary(M):
    C = [[0] * 8 for _ in range(2)]
    for i, j, k in itertools.product(range(2), repeat=3):
        inner = mu(M, j, k)
        for l in range(2):
            C[l][4 * i + 2 * j + k] = sp.expand(sum(inner[t] * M[l][2 * i + t] for t in range(2)))
    return C


def tprod(C, u, v, w):
    out = [0, 0]
    for i, j, k in itertools.product(range(2), repeat=3):
        c = u[i] * v[j] * w[k]
        if c != 0:
            for l in range(2):
                out[l] += c * C[l][4 * i + 2 * j + k]
    return [sp.expand(x) for x in out]


def e(i):
    return [1 if t == i else 0 for t in range(2)]


def tot_assoc(C):
    for t in itertools.product(range(2), repeat=5):
        u, v, w, x, y = map(e, t)
        p1 = tprod(C, tprod(C, u, v, w), x, y)
        p2 = tprod(C, u, tprod(C, v, w, x), y)
        p3 = tprod(C, u, v, tprod(C, w, x, y))
        if any(sp.simplify(p1[l] - p2[l]) != 0 or sp.simplify(p1[l] - p3[l]) != 0 for l in range(2)):
            return False, t
    return True, None


def bin_assoc(M):
    for i, j, k in itertools.product(range(2), repeat=3):
        left = [0, 0]
        ij = mu(M, i, j)
        for t in range(2):
            for l in range(2):
                left[l] += ij[t] * M[l][2 * t + k]
        jk = mu(M, j, k)
        right = [0, 0]
        for t in range(2):
            for l in range(2):
                right[l] += jk[t] * M[l][2 * i + t]
        if any(sp.expand(left[l] - right[l]) != 0 for l in range(2)):
            return False, (i, j, k)
    return True, None


def sub(M, d):
    return [[sp.sympify(x).subs(d) for x in r] for r in M]


if __name__ == "__main__":
    print("== Table 1")
    for i in range(1, 12):
        T = ternary(A[f"A{i}"])
        for l in range(2):
            for c in range(8):
                d = sp.expand(T[l][c] - B[f"B{i}"][l][c])
                if d != 0:
                    idx = (c >> 2) + 1, ((c >> 1) & 1) + 1, (c & 1) + 1
                    print(f"  B{i} mismatch l={l+1} ijk={idx}: table={B[f'B{i}'][l][c]} computed={T[l][c]}")
    print("  A12 ->", ternary(A["A12"]))
    grid = [-1, R(-1, 2), 0, R(1, 3), R(1, 2), 1]
    print("== scan B4")
    for x, y in itertools.product(grid, grid):
        if tot_assoc(sub(B["B4"], {a1: x, b2: y}))[0]:
            print("  ", x, y)
    print("== scan B2 small")
    for x, y, z in itertools.product([0, R(1, 2)], [0], [R(-1, 2), 0, R(1, 2)]):
        if tot_assoc(sub(B["B2"], {a1: x, b1: y, b2: z}))[0]:
            print("  ", x, y, z)
    print("== scan B2 default grid")
    for x, y, z in itertools.product(grid, grid, grid):
        if tot_assoc(sub(B["B2"], {a1: x, b1: y, b2: z}))[0]:
            print("  ", x, y, z)
    print("== binary assoc")
    for name, M in [("A2(1/2,0,1/2)", sub(A["A2"], {a1: R(1, 2), b1: 0, b2: R(1, 2)})),
                    ("A4(1,0)", sub(A["A4"], {a1: 1, b2: 0})),
                    ("A4(1/2,1/2)", sub(A["A4"], {a1: R(1, 2), b2: R(1, 2)})),
                    ("A4(1,1)", sub(A["A4"], {a1: 1, b2: 1})),
                    ("A4(1/2,0)", sub(A["A4"], {a1: R(1, 2), b2: 0})),
                    ("A12", A["A12"]),
                    ("A2(0,0,0)", sub(A["A2"], {a1: 0, b1: 0, b2: 0})),
                    ("A2(1/2,0,-1/2)", sub(A["A2"], {a1: R(1, 2), b1: 0, b2: R(-1, 2)})),
                    ("A4(1/2,-1/2)", sub(A["A4"], {a1: R(1, 2), b2: R(-1, 2)})),
                    ("A4(1,-1)", sub(A["A4"], {a1: 1, b2: -1}))]:
        ok, w = bin_assoc(M)
        ta = tot_assoc(ternary(M))[0]
        print(f"  {name}: assoc={ok} witness={w} generated_totassoc={ta}")
    print("== identities examples")
    print("  B3(0,0)", tot_assoc(sub(B["B3"], {b1: 0, b2: 0})))
    print("  B11", tot_assoc(B["B11"]))
    print("  B7(0)", tot_assoc(sub(B["B7"], {b1: 0})))
    print("  Ex52", tot_assoc(mat([[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0]])))
    print("== collisions")
    Cd = mat([[R(1, 9), 0, 0, 0, 0, 0, 0, 0], [0, R(1, 9), R(-2, 9), 0, R(2, 9), 0, 0, 0]])
    print("  A4(1/3,-1/3)", ternary(sub(A["A4"], {a1: R(1, 3), b2: R(-1, 3)})) == Cd)
    print("  A5(1/3)", ternary(sub(A["A5"], {a1: R(1, 3)})) == Cd)
    print("  A4(1,1)", ternary(sub(A["A4"], {a1: 1, b2: 1})))
    print("  A4(1,-1)", ternary(sub(A["A4"], {a1: 1, b2: -1})))
    print("  B4(1/2,1/2) specialized", sub(B["B4"], {a1: R(1, 2), b2: R(1, 2)}))
