"""Independent derivations of the frozen expected values in test_liealg.py.

Everything here is built with sympy from first principles (matrix equations,
octonion derivations), deliberately sharing no code with the package, so the
numbers frozen into the test suite are genuinely independent.

Run:  python3 tests/oracles/oracle_liealg.py
"""

import itertools

import sympy as sp


def antidiag(n):
    return sp.Matrix(n, n, lambda i, j: 1 if i + j == n - 1 else 0)


def algebra_from_condition(n, condition):
    """Basis of {A in gl_n : condition(A) == 0} (condition linear in A)."""
    syms = sp.symbols(f"a0:{n * n}")
    A = sp.Matrix(n, n, lambda i, j: syms[i * n + j])
    eqs = []
    for expr in condition(A):
        eqs.extend(sp.Matrix([expr]) if not hasattr(expr, "shape") else expr)
    rows = [[sp.Rational(e.coeff(s)) for s in syms] for e in eqs]
    basis = []
    for vec in sp.Matrix(rows).nullspace():
        basis.append(sp.Matrix(n, n, lambda i, j: vec[i * n + j]))
    return basis


def flatten(mats):
    return sp.Matrix([[m[i, j] for i in range(m.rows) for j in range(m.cols)] for m in mats])


def span_dim(mats):
    return flatten(mats).rank()


def coords_in(basis, mat):
    B = flatten(basis).T
    v = sp.Matrix([mat[i, j] for i in range(mat.rows) for j in range(mat.cols)])
    sol = B.solve_least_squares(v)
    assert B * sol == v, "element outside span"
    return sol


def killing(basis):
    """Killing matrix via explicit ad matrices."""
    dim = len(basis)
    ad = []
    for x in basis:
        cols = [coords_in(basis, x * b - b * x) for b in basis]
        ad.append(sp.Matrix.hstack(*cols))
    return sp.Matrix(dim, dim, lambda i, j: (ad[i] * ad[j]).trace())


def main():
    # --- sl_3, so_3 (split form), generic Borel translate ----------------
    n = 3
    J = antidiag(n)
    so3 = algebra_from_condition(n, lambda A: [A.T * J + J * A])
    assert len(so3) == 3
    sl3 = [sp.Matrix(3, 3, lambda i, j: 0) for _ in range(0)]
    E = lambda i, j, n=3: sp.Matrix(n, n, lambda p, q: 1 if (p, q) == (i, j) else 0)
    sl3 = [E(i, j) for i in range(3) for j in range(3) if i != j]
    sl3 += [E(i, i) - E(i + 1, i + 1) for i in range(2)]
    borel = [E(0, 1), E(0, 2), E(1, 2), E(0, 0) - E(1, 1), E(1, 1) - E(2, 2)]
    g = (sp.eye(3) + E(1, 0) + 2 * E(2, 1)) * (sp.eye(3) + E(2, 0)) * (sp.eye(3) + 3 * E(0, 1))
    conj = [g * b * g.inv() for b in borel]
    print("dim(so3 + Ad(g) borel(sl3)) =", span_dim(so3 + conj))

    # --- sl_2: Cartan line plus generic Borel translate -------------------
    E2 = lambda i, j: sp.Matrix(2, 2, lambda p, q: 1 if (p, q) == (i, j) else 0)
    H2 = E2(0, 0) - E2(1, 1)
    b2 = [H2, E2(0, 1)]
    g2m = (sp.eye(2) + E2(1, 0)) * (sp.eye(2) + 2 * E2(0, 1))
    print("dim(t + Ad(g) borel(sl2)) =", span_dim([H2] + [g2m * b * g2m.inv() for b in b2]))

    # --- Killing complement of so_3 in sl_3 ------------------------------
    K = killing(sl3)
    assert K.det() != 0
    rows = flatten(so3) * flatten(sl3).T  # coords of so3 elements w.r.t. basis? no:
    # express so3 in the sl3 basis first
    so3_coords = sp.Matrix.hstack(*[coords_in(sl3, m) for m in so3]).T
    orth = (so3_coords * K).nullspace()
    print("dim killing_complement(sl3, so3) =", len(orth))

    # --- principal sl_2 in sp_4 ------------------------------------------
    # raising/lowering/semisimple operators on binary cubics
    Ee = sp.Matrix(4, 4, lambda i, j: (j) if j == i + 1 else 0)
    Ff = sp.Matrix(4, 4, lambda i, j: (3 - j) if j == i - 1 else 0)
    Hh = Ee * Ff - Ff * Ee
    assert (Hh * Ee - Ee * Hh) == 2 * Ee and (Hh * Ff - Ff * Hh) == -2 * Ff
    # invariant alternating form
    syms = sp.symbols("j0:16")
    Jm = sp.Matrix(4, 4, lambda i, j: syms[i * 4 + j])
    eqs = list(Ee.T * Jm + Jm * Ee) + list(Ff.T * Jm + Jm * Ff) + list(Jm + Jm.T)
    rows = [[sp.Rational(sp.expand(e).coeff(s)) for s in syms] for e in eqs]
    null = sp.Matrix(rows).nullspace()
    assert len(null) == 1
    Jinv = sp.Matrix(4, 4, lambda i, j: null[0][i * 4 + j])
    sp4 = algebra_from_condition(4, lambda A: [A.T * Jinv + Jinv * A])
    assert len(sp4) == 10
    h = [Ee, Ff, Hh]
    Ksp = killing(sp4)
    h_coords = sp.Matrix.hstack(*[coords_in(sp4, m) for m in h]).T
    orth = (h_coords * Ksp).nullspace()
    print("dim killing_complement(sp4, principal sl2) =", len(orth))
    m_basis = [sum((vec[k] * sp4[k] for k in range(10)), sp.zeros(4, 4)) for vec in orth]
    v = sum(((i + 1) * m for i, m in enumerate(m_basis)), sp.zeros(4, 4))
    cols = [coords_in(sp4, x * v - v * x) for x in h]
    print("dim bracket_kernel(principal sl2, generic v in m) =", len(sp.Matrix.hstack(*cols).nullspace()))

    # --- octonion derivations: the 14-dimensional algebra in so_7 --------
    lines = [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)]
    mult = {}
    for a, b, c in lines:
        for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
            mult[(x, y)] = (1, z)
            mult[(y, x)] = (-1, z)

    def prod(i, j):
        """e_i * e_j = (real, dict imag)"""
        if i == j:
            return (-1, {})
        sgn, k = mult[(i, j)]
        return (0, {k: sgn})

    syms = sp.symbols("d0:49")
    D = sp.Matrix(7, 7, lambda i, j: syms[i * 7 + j])  # D(e_j) = sum_i D[i,j] e_i
    # D(e_i e_j) = D(e_i) e_j + e_i D(e_j); the real part of e_i e_j is constant,
    # so D kills it, and the imaginary part is a combination of D(e_k)
    eqs = []
    for i in range(1, 8):
        for j in range(1, 8):
            real, imag = prod(i, j)
            lhs_vec = {m: sp.Integer(0) for m in range(1, 8)}
            lhs_real = sp.Integer(0)
            for k, coef in imag.items():
                for m in range(1, 8):
                    lhs_vec[m] += coef * D[m - 1, k - 1]
            rhs_vec = {m: sp.Integer(0) for m in range(1, 8)}
            rhs_real = sp.Integer(0)
            for a in range(1, 8):
                ra, ia = prod(a, j)
                rhs_real += D[a - 1, i - 1] * ra
                for k, s in ia.items():
                    rhs_vec[k] += D[a - 1, i - 1] * s
            for b in range(1, 8):
                rb, ib = prod(i, b)
                rhs_real += D[b - 1, j - 1] * rb
                for k, s in ib.items():
                    rhs_vec[k] += D[b - 1, j - 1] * s
            eqs.append(lhs_real - rhs_real)
            for m in range(1, 8):
                eqs.append(lhs_vec[m] - rhs_vec[m])
    rows = [[sp.Rational(sp.expand(e).coeff(s)) for s in syms] for e in eqs]
    der = sp.Matrix(rows).nullspace()
    print("dim Der(octonions) =", len(der))
    der_mats = [sp.Matrix(7, 7, lambda i, j: vec[i * 7 + j]) for vec in der]
    for Dm in der_mats:
        assert Dm + Dm.T == sp.zeros(7, 7), "derivation not antisymmetric"
    so7 = []
    for i in range(7):
        for j in range(i + 1, 7):
            m = sp.zeros(7, 7)
            m[i, j], m[j, i] = 1, -1
            so7.append(m)
    # trace-orthogonal complement of the derivations inside so_7
    der_coords = sp.Matrix.hstack(*[coords_in(so7, m) for m in der_mats]).T
    gram_tr = sp.Matrix(21, 21, lambda i, j: (so7[i] * so7[j]).trace())
    orth = (der_coords * gram_tr).nullspace()
    print("dim trace complement of Der in so7 =", len(orth))
    m_basis = [sum((vec[k] * so7[k] for k in range(21)), sp.zeros(7, 7)) for vec in orth]
    v = sum(((2 * i + 1) * m for i, m in enumerate(m_basis)), sp.zeros(7, 7))
    cols = [coords_in(so7, Dm * v - v * Dm) for Dm in der_mats]
    kern = sp.Matrix.hstack(*cols).nullspace()
    print("dim bracket_kernel(Der(O), generic v in complement) =", len(kern))


if __name__ == "__main__":
    main()
