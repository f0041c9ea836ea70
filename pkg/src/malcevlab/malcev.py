"""Malcev algebras by structure constants, their relative representations,
and the two Lie algebras built on top of them.

A Malcev algebra here is always finite-dimensional over the rationals, given
by an antisymmetric bracket table.  From it we build:

* the "plus" Lie algebra carrying the adjoint symbols ad_a and the derivations
  D_{a,b} = (ad_{[a,b]} + [ad_a, ad_b])/2, realized concretely either on
  m x m (semisimple Lie input) or as the multiplication Lie algebra;
* its extension by a second copy T_m of the underlying space, with
  [ad_a, T_x] = T_{[a,x]},  [D_{a,b}, T_x] = T_{D_{a,b}(x)},
  [T_a, T_b] = (2 ad_{[a,b]} + [ad_a, ad_b])/3,
  which carries the left/right multiplication elements
  lambda_a = (ad_a + T_a)/2 and rho_a = (T_a - ad_a)/2.

With this dictionary ad_a = lambda_a - rho_a annihilates the unit of the
enveloping algebra while T_a = lambda_a + rho_a survives on it, and the three
defining relations of the lambda/rho presentation hold; the variant with
rho_a = (ad_a - T_a)/2 does not satisfy them.
"""

from __future__ import annotations

from .exact import (
    DimensionError,
    Matrix,
    QQ_ONE,
    QQ_ZERO,
    SpanBuilder,
    commutator,
    kernel_basis,
    kron,
    mat_mul,
    rank,
    rat,
    solve_exact,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    vec_zero,
)

HALF = rat(1, 2)
THIRD = rat(1, 3)


class MalcevAlgebra:
    """Anticommutative algebra by structure constants: [e_i, e_j] as vectors."""

    def __init__(self, labels, table, check_malcev=True, name=None):
        self.dim = len(labels)
        self.labels = tuple(labels)
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        self.name = name or "algebra"
        n = self.dim
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise DimensionError("bracket table must be dim x dim")
        for i in range(n):
            for j in range(n):
                if any(len(v) != n for v in self.table[i]):
                    raise DimensionError("bracket values must have length dim")
                if self.table[i][j] != tuple(-x for x in self.table[j][i]):
                    raise ValueError(f"bracket table not antisymmetric at ({i},{j})")
        if check_malcev:
            ok, witness = malcev_check(self)
            if not ok:
                raise ValueError(f"Malcev identity fails at basis tuple {witness}")

    def bracket(self, u, v):
        out = list(vec_zero(self.dim))
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = self.table[i][j]
                c = ui * vj
                for k, wk in enumerate(w):
                    if wk:
                        out[k] = out[k] + c * wk
        return tuple(out)

    def basis_vector(self, i):
        return tuple(QQ_ONE if j == i else QQ_ZERO for j in range(self.dim))

    def ad_matrix(self, i) -> Matrix:
        """Matrix of x -> [e_i, x] in the chosen basis (columns are images)."""
        cols = [self.table[i][j] for j in range(self.dim)]
        return Matrix([[cols[j][k] for j in range(self.dim)] for k in range(self.dim)])

    def label_index(self, label) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"MalcevAlgebra({self.name}, dim={self.dim})"


def _malcev_defect(alg, x1, y, x2, z):
    """[[x1,y],[x2,z]] - [[[x1,y],z],x2] - [[[y,z],x1],x2] - [[[z,x1],x2],y]."""
    br = alg.bracket
    t = br(br(x1, y), br(x2, z))
    t = vec_sub(t, br(br(br(x1, y), z), x2))
    t = vec_sub(t, br(br(br(y, z), x1), x2))
    t = vec_sub(t, br(br(br(z, x1), x2), y))
    return t


def malcev_check(alg: MalcevAlgebra):
    """Whether the Malcev identity holds identically; first counterexample if not.

    The identity has a repeated argument, so over the rationals it holds for
    all elements iff its polarization in that argument vanishes on all basis
    quadruples (u, y, v, z).
    """
    n = alg.dim
    basis = [alg.basis_vector(i) for i in range(n)]
    for iu in range(n):
        for iy in range(n):
            for iv in range(iu, n):
                for iz in range(n):
                    d = vec_add(
                        _malcev_defect(alg, basis[iu], basis[iy], basis[iv], basis[iz]),
                        _malcev_defect(alg, basis[iv], basis[iy], basis[iu], basis[iz]),
                    )
                    if not vec_is_zero(d):
                        return False, (iu, iy, iv, iz)
    return True, None


def is_lie(alg: MalcevAlgebra):
    """Jacobi identity on all basis triples; first failing triple if any."""
    n = alg.dim
    basis = [alg.basis_vector(i) for i in range(n)]
    br = alg.bracket
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = br(br(basis[i], basis[j]), basis[k])
                s = vec_add(s, br(br(basis[j], basis[k]), basis[i]))
                s = vec_add(s, br(br(basis[k], basis[i]), basis[j]))
                if not vec_is_zero(s):
                    return False, (i, j, k)
    return True, None


def d_map(alg: MalcevAlgebra, a, b) -> Matrix:
    """The operator x -> ([[a,b],x] + [a,[b,x]] - [b,[a,x]])/2 on the algebra."""
    br = alg.bracket
    ab = br(a, b)
    cols = []
    for k in range(alg.dim):
        x = alg.basis_vector(k)
        v = vec_add(br(ab, x), vec_sub(br(a, br(b, x)), br(b, br(a, x))))
        cols.append(vec_scale(v, HALF))
    return Matrix([[cols[j][i] for j in range(alg.dim)] for i in range(alg.dim)])


def center_dim(alg: MalcevAlgebra) -> int:
    """Dimension of {x : [x, e_j] = 0 for all j}."""
    n = alg.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([alg.table[i][j][k] for i in range(n)])
    return len(kernel_basis(Matrix(rows)))


def derived_dim(alg: MalcevAlgebra) -> int:
    span = SpanBuilder(alg.dim)
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            span.add(alg.table[i][j])
    return span.dim


class RelativeRep:
    """A linear family a -> l_a of matrices on a module, indexed by the basis."""

    def __init__(self, algebra: MalcevAlgebra, mats, name=None):
        self.algebra = algebra
        self.mats = tuple(mats)
        if len(self.mats) != algebra.dim:
            raise DimensionError("one matrix per basis element required")
        d = self.mats[0].nrows
        for m in self.mats:
            if m.nrows != d or m.ncols != d:
                raise DimensionError("module matrices must be square of equal size")
        self.module_dim = d
        self.name = name or "module"

    def l_of(self, vec) -> Matrix:
        out = Matrix.zero(self.module_dim, self.module_dim)
        for c, m in zip(vec, self.mats):
            if c:
                out = out + m.scale(c)
        return out

    def __repr__(self):
        return f"RelativeRep({self.name} over {self.algebra.name}, dim={self.module_dim})"


def relative_rep_check(rep: RelativeRep):
    """[[l_a,l_b],l_c] = -[l_{[a,b]},l_c] + l_{[[a,b],c]+[[a,c],b]+[a,[b,c]]} on basis triples."""
    alg = rep.algebra
    n = alg.dim
    basis = [alg.basis_vector(i) for i in range(n)]
    br = alg.bracket
    for i in range(n):
        for j in range(n):
            lij = commutator(rep.mats[i], rep.mats[j])
            lbr = rep.l_of(alg.table[i][j])
            for k in range(n):
                a, b, c = basis[i], basis[j], basis[k]
                w = vec_add(br(br(a, b), c), vec_add(br(br(a, c), b), br(a, br(b, c))))
                lhs = commutator(lij, rep.mats[k])
                rhs = rep.l_of(w) - commutator(lbr, rep.mats[k])
                if lhs != rhs:
                    return False, (i, j, k)
    return True, None


def lie_module_check(alg: MalcevAlgebra, mats):
    """rho_{[a,b]} = [rho_a, rho_b] on basis pairs (matrices act on the left)."""
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = RelativeRep(alg, mats).l_of(alg.table[i][j])
            if lhs != commutator(mats[i], mats[j]):
                return False, (i, j)
    return True, None


def intertwiner(rep1: RelativeRep, rep2: RelativeRep):
    """Invertible P with P l1_a = l2_a P for every basis a, or None."""
    if rep1.module_dim != rep2.module_dim:
        return None
    d = rep1.module_dim
    rows = []
    # unknowns: P[r][c], row-major
    for m1, m2 in zip(rep1.mats, rep2.mats):
        for r in range(d):
            for c in range(d):
                row = [QQ_ZERO] * (d * d)
                # (P m1)[r][c] = sum_k P[r][k] m1[k][c]
                for k in range(d):
                    row[r * d + k] = row[r * d + k] + m1.rows[k][c]
                # (m2 P)[r][c] = sum_k m2[r][k] P[k][c]
                for k in range(d):
                    row[k * d + c] = row[k * d + c] - m2.rows[r][k]
                rows.append(row)
    for v in kernel_basis(Matrix(rows)):
        p = Matrix([v[r * d : (r + 1) * d] for r in range(d)])
        if rank(p) == d:
            return p
    return None


def m2_table(alg: MalcevAlgebra) -> RelativeRep:
    """The irreducible two-dimensional non-Lie module of sl2, as left matrices.

    The classical table is a right action (v.h = v, w.h = -w, v.e = w,
    v.f = 0, w.e = 0, w.f = -v); composing right operators matches matrix
    products in the row convention, so the left-matrix family is the
    transpose of the naive column encoding.
    """
    _require_sl2(alg)
    l_e = Matrix.from_ints([[0, 1], [0, 0]])
    l_f = Matrix.from_ints([[0, 0], [-1, 0]])
    l_h = Matrix.from_ints([[1, 0], [0, -1]])
    return RelativeRep(alg, [l_e, l_f, l_h], name="m2")


def sl2_matrix_basis():
    """Trace-zero 2x2 matrices (E, F, H) with [E,F] = H/2, [E,H] = E, [F,H] = -F."""
    e = Matrix([[QQ_ZERO, QQ_ONE], [QQ_ZERO, QQ_ZERO]])
    f = Matrix([[QQ_ZERO, QQ_ZERO], [rat(-1, 4), QQ_ZERO]])
    h = Matrix([[rat(-1, 2), QQ_ZERO], [QQ_ZERO, rat(1, 2)]])
    return e, f, h


def _require_sl2(alg: MalcevAlgebra):
    if alg.dim != 3:
        raise ValueError("not the expected sl2 presentation")
    e, f, h = (alg.basis_vector(i) for i in range(3))
    br = alg.bracket
    ok = (
        br(e, h) == e
        and br(f, h) == vec_scale(f, rat(-1))
        and br(e, f) == vec_scale(h, HALF)
    )
    if not ok:
        raise ValueError("not the expected sl2 presentation")


def m2_matrix_form(alg: MalcevAlgebra) -> RelativeRep:
    """The same module realized as l_x = -2x on k^2, via trace-zero matrices."""
    _require_sl2(alg)
    mats = [m.scale(rat(-2)) for m in sl2_matrix_basis()]
    return RelativeRep(alg, mats, name="m2-matrix")


def natural_sl2_module(alg: MalcevAlgebra):
    """The 2-dimensional Lie module of sl2 in the chosen presentation."""
    _require_sl2(alg)
    return [m for m in sl2_matrix_basis()]


def adjoint_module(alg: MalcevAlgebra):
    return [alg.ad_matrix(i) for i in range(alg.dim)]


def trivial_module(alg: MalcevAlgebra, d=1):
    return [Matrix.zero(d, d) for _ in range(alg.dim)]


def tensor_relative_module(alg: MalcevAlgebra, mats_m, mats_l) -> RelativeRep:
    """Relative module on V_M (x) V_L: a acts as -2(a v_M) (x) v_L + v_M (x) (a v_L)."""
    okm, wit = lie_module_check(alg, mats_m)
    if not okm:
        raise ValueError(f"first factor is not a Lie module (basis pair {wit})")
    okl, wit = lie_module_check(alg, mats_l)
    if not okl:
        raise ValueError(f"second factor is not a Lie module (basis pair {wit})")
    dm, dl = mats_m[0].nrows, mats_l[0].nrows
    im, il = Matrix.identity(dm), Matrix.identity(dl)
    mats = [
        kron(mm.scale(rat(-2)), il) + kron(im, ml)
        for mm, ml in zip(mats_m, mats_l)
    ]
    return RelativeRep(alg, mats, name="tensor")


# ---------------------------------------------------------------------------
# The plus model and the full envelope Lie algebra
# ---------------------------------------------------------------------------

class LiePlusModel:
    """Concrete Lie algebra carrying images of the ad_a and D_{a,b} symbols.

    basis brackets are stored as coordinate vectors; ad_img[i] and
    d_img[(i,j)] (i<j) give the distinguished elements, and decomp[k]
    expresses the k-th basis vector back in the ad/D spanning family.
    """

    def __init__(self, malcev, table, ad_img, d_img, decomp, flag, mode):
        self.malcev = malcev
        self.dim = len(table)
        self.table = table
        self.ad_img = ad_img
        self.d_img = d_img
        self.decomp = decomp
        self.flag = flag
        self.mode = mode

    def bracket(self, u, v):
        out = list(vec_zero(self.dim))
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = self.table[i][j]
                c = ui * vj
                for k, wk in enumerate(w):
                    if wk:
                        out[k] = out[k] + c * wk
        return tuple(out)

    def ad_of(self, vec):
        """Image of ad_v for v in the underlying Malcev algebra."""
        out = list(vec_zero(self.dim))
        for i, c in enumerate(vec):
            if c:
                out = [x + c * y for x, y in zip(out, self.ad_img[i])]
        return tuple(out)

    def d_of(self, u, v):
        """Image of D_{u,v}, bilinear and antisymmetric in (u, v)."""
        out = list(vec_zero(self.dim))
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj or i == j:
                    continue
                key = (i, j) if i < j else (j, i)
                sign = QQ_ONE if i < j else -QQ_ONE
                c = sign * ui * vj
                out = [x + c * y for x, y in zip(out, self.d_img[key])]
        return tuple(out)

    def jacobi_ok(self):
        return _jacobi_table_ok(self.table)


def _jacobi_table_ok(table):
    dim = len(table)

    def br_vec_basis(v, k):
        out = [QQ_ZERO] * dim
        for m, c in enumerate(v):
            if c:
                w = table[m][k]
                for l, wl in enumerate(w):
                    if wl:
                        out[l] = out[l] + c * wl
        return out

    for i in range(dim):
        for j in range(i + 1, dim):
            cij = table[i][j]
            for k in range(j + 1, dim):
                s = br_vec_basis(cij, k)
                s2 = br_vec_basis(table[j][k], i)
                s3 = br_vec_basis(table[k][i], j)
                if any(a + b + c for a, b, c in zip(s, s2, s3)):
                    return False, (i, j, k)
    return True, None


def relation_b_defect(alg: MalcevAlgebra, ad_of_vec, bracket, i, j, k):
    """[[ad_a,ad_b],ad_c] + [ad_{[a,b]},ad_c] - ad_{[[a,b],c]+[[a,c],b]+[a,[b,c]]}."""
    a, b, c = (alg.basis_vector(t) for t in (i, j, k))
    br = alg.bracket
    ada, adb, adc = ad_of_vec(a), ad_of_vec(b), ad_of_vec(c)
    lhs = bracket(bracket(ada, adb), adc)
    lhs = vec_add(lhs, bracket(ad_of_vec(br(a, b)), adc))
    w = vec_add(br(br(a, b), c), vec_add(br(br(a, c), b), br(a, br(b, c))))
    return vec_sub(lhs, ad_of_vec(w))


def build_lie_plus(alg: MalcevAlgebra, mode: str) -> LiePlusModel:
    """Concrete model of the Lie algebra generated by the ad symbols.

    mode "semisimple-lie": m x m with ad_a -> (-2a, a); requires a perfect
    centerless Lie algebra.  mode "multiplication-algebra": the Lie algebra of
    operators on m generated by the adjoint maps.
    """
    n = alg.dim
    if mode == "semisimple-lie":
        ok, wit = is_lie(alg)
        if not ok:
            raise ValueError(f"input is not a Lie algebra (Jacobi fails at {wit})")
        if center_dim(alg) != 0:
            raise ValueError("input has nonzero center")
        if derived_dim(alg) != n:
            raise ValueError("input is not perfect")
        dim = 2 * n
        table = [[None] * dim for _ in range(dim)]
        zero = vec_zero(n)
        for i in range(n):
            for j in range(n):
                c = alg.table[i][j]
                table[i][j] = tuple(c) + zero
                table[n + i][n + j] = zero + tuple(c)
                table[i][n + j] = vec_zero(dim)
                table[n + i][j] = vec_zero(dim)
        ad_img = []
        for i in range(n):
            v = [QQ_ZERO] * dim
            v[i] = rat(-2)
            v[n + i] = QQ_ONE
            ad_img.append(tuple(v))
        d_img = {}
        for i in range(n):
            for j in range(i + 1, n):
                c = alg.table[i][j]
                d_img[(i, j)] = tuple(c) + tuple(c)
        model = LiePlusModel(alg, table, ad_img, d_img, None, "faithful", mode)
        model.decomp = _span_decompositions(model)
        return model

    if mode == "multiplication-algebra":
        ad_mats = [alg.ad_matrix(i) for i in range(n)]
        span = SpanBuilder(n * n)

        def flat(m):
            return tuple(x for row in m.rows for x in row)

        basis_mats = []
        for m in ad_mats:
            if span.add(flat(m)):
                basis_mats.append(m)
        # close under brackets
        frontier = list(basis_mats)
        while frontier:
            new = []
            for m1 in frontier:
                for m2 in basis_mats:
                    c = commutator(m1, m2)
                    if span.add(flat(c)):
                        new.append(c)
            basis_mats.extend(new)
            frontier = new
        dim = len(basis_mats)
        cols = Matrix([[flat(m)[r] for m in basis_mats] for r in range(n * n)])

        def coords(m):
            sol = solve_exact(cols, flat(m))
            if sol is None:
                raise ValueError("operator escaped the multiplication algebra")
            return sol

        table = [
            [coords(commutator(basis_mats[i], basis_mats[j])) for j in range(dim)]
            for i in range(dim)
        ]
        ad_img = [coords(m) for m in ad_mats]
        d_img = {}
        for i in range(n):
            for j in range(i + 1, n):
                a, b = alg.basis_vector(i), alg.basis_vector(j)
                d_img[(i, j)] = coords(d_map(alg, a, b))
        lie, _ = is_lie(alg)
        faithful = not lie
        if faithful and dim:
            faithful = _model_centerless_perfect(table)
        flag = "faithful" if faithful else "possibly-proper-quotient"
        model = LiePlusModel(alg, table, ad_img, d_img, None, flag, mode)
        model.decomp = _span_decompositions(model)
        return model

    raise ValueError(f"unknown mode {mode!r}")


def _model_centerless_perfect(table) -> bool:
    dim = len(table)
    rows = []
    for j in range(dim):
        for k in range(dim):
            rows.append([table[i][j][k] for i in range(dim)])
    if kernel_basis(Matrix(rows)):
        return False
    span = SpanBuilder(dim)
    for i in range(dim):
        for j in range(i + 1, dim):
            span.add(table[i][j])
    return span.dim == dim


def _span_decompositions(model: LiePlusModel):
    """Express each model basis vector in the ad/D spanning family."""
    n = model.malcev.dim
    pairs = sorted(model.d_img.keys())
    columns = [model.ad_img[i] for i in range(n)] + [model.d_img[p] for p in pairs]
    if model.dim == 0:
        return []
    mat = Matrix([[columns[c][r] for c in range(len(columns))] for r in range(model.dim)])
    decomp = []
    for k in range(model.dim):
        target = [QQ_ONE if r == k else QQ_ZERO for r in range(model.dim)]
        sol = solve_exact(mat, target)
        if sol is None:
            raise ValueError("model basis vector outside the ad/D span")
        alpha = sol[:n]
        beta = {p: sol[n + t] for t, p in enumerate(pairs) if sol[n + t]}
        decomp.append((alpha, beta))
    return decomp


class LieEnvelope:
    """Lie algebra on (plus model) + T_m with the multiplication elements.

    Basis: plus-model vectors first, then T_1..T_n.  lam[i]/rho[i] are the
    coordinates of lambda_{e_i} and rho_{e_i}.
    """

    def __init__(self, plus: LiePlusModel):
        self.plus = plus
        self.malcev = plus.malcev
        n = self.malcev.dim
        p = plus.dim
        self.pdim = p
        self.dim = p + n
        alg = self.malcev
        dmats = {}
        for i in range(n):
            for j in range(i + 1, n):
                dmats[(i, j)] = d_map(alg, alg.basis_vector(i), alg.basis_vector(j))
        table = [[None] * self.dim for _ in range(self.dim)]
        for i in range(p):
            for j in range(p):
                table[i][j] = tuple(plus.table[i][j]) + vec_zero(n)
        for k in range(p):
            alpha, beta = plus.decomp[k]
            for j in range(n):
                v = list(vec_zero(n))
                for i, c in enumerate(alpha):
                    if c:
                        w = alg.table[i][j]
                        v = [x + c * y for x, y in zip(v, w)]
                for (a, b), c in beta.items():
                    col = dmats[(a, b)].col(j)
                    v = [x + c * y for x, y in zip(v, col)]
                table[k][p + j] = vec_zero(p) + tuple(v)
                table[p + j][k] = tuple(-x for x in table[k][p + j])
        two = rat(2)
        for i in range(n):
            for j in range(n):
                c = alg.table[i][j]
                v = plus.bracket(plus.ad_img[i], plus.ad_img[j])
                v = vec_add(v, vec_scale(plus.ad_of(c), two))
                table[p + i][p + j] = tuple(vec_scale(v, THIRD)) + vec_zero(n)
        self.table = tuple(tuple(map(tuple, row)) for row in table)
        ok, wit = _jacobi_table_ok(self.table)
        if not ok:
            raise ValueError(f"Jacobi fails in the envelope at triple {wit}")
        self.lam = []
        self.rho = []
        for i in range(n):
            ad = tuple(plus.ad_img[i]) + vec_zero(n)
            t = vec_zero(p) + tuple(QQ_ONE if j == i else QQ_ZERO for j in range(n))
            self.lam.append(vec_scale(vec_add(ad, t), HALF))
            self.rho.append(vec_scale(vec_sub(t, ad), HALF))

    def bracket(self, u, v):
        out = list(vec_zero(self.dim))
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = self.table[i][j]
                c = ui * vj
                for k, wk in enumerate(w):
                    if wk:
                        out[k] = out[k] + c * wk
        return tuple(out)

    def ad_vec(self, i):
        return tuple(self.plus.ad_img[i]) + vec_zero(self.malcev.dim)

    def t_vec(self, i):
        n = self.malcev.dim
        return vec_zero(self.pdim) + tuple(QQ_ONE if j == i else QQ_ZERO for j in range(n))


def build_lie_envelope(plus: LiePlusModel) -> LieEnvelope:
    return LieEnvelope(plus)


def lambda_rho_relations_check(env: LieEnvelope):
    """The three defining relations of the lambda/rho presentation, on basis pairs."""
    alg = env.malcev
    n = alg.dim
    two = rat(2)
    for i in range(n):
        for j in range(n):
            lam_i, lam_j = env.lam[i], env.lam[j]
            rho_i, rho_j = env.rho[i], env.rho[j]
            c = alg.table[i][j]
            lam_c = _mix(env.lam, c)
            rho_c = _mix(env.rho, c)
            lr = env.bracket(lam_i, rho_j)
            if env.bracket(lam_i, lam_j) != vec_sub(lam_c, vec_scale(lr, two)):
                return False, ("lambda-lambda", i, j)
            if env.bracket(rho_i, rho_j) != vec_sub(vec_scale(rho_c, rat(-1)), vec_scale(lr, two)):
                return False, ("rho-rho", i, j)
            if lr != env.bracket(rho_i, lam_j):
                return False, ("lambda-rho symmetry", i, j)
    return True, None


def _mix(family, coeffs):
    out = list(vec_zero(len(family[0])))
    for c, v in zip(coeffs, family):
        if c:
            out = [x + c * y for x, y in zip(out, v)]
    return tuple(out)


def ideal_decomposition_check(alg: MalcevAlgebra, plus: LiePlusModel) -> dict:
    """For Lie input: the spans of ad_{[a,b]} - D_{a,b} and ad_{[a,b]} + 2 D_{a,b}
    are commuting ideals, and [xi_{a,b}, ad_c] = -2 xi_{[a,b],c}."""
    ok, wit = is_lie(alg)
    if not ok:
        raise ValueError(f"input is not a Lie algebra (Jacobi fails at {wit})")
    n = alg.dim
    two = rat(2)
    xi = {}
    xi2 = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = alg.table[i][j]
            adc = plus.ad_of(c)
            d = plus.d_img[(i, j)]
            xi[(i, j)] = vec_sub(adc, d)
            xi2[(i, j)] = vec_add(adc, vec_scale(d, two))
    span_m = SpanBuilder(plus.dim)
    span_l = SpanBuilder(plus.dim)
    for v in xi.values():
        span_m.add(v)
    for v in xi2.values():
        span_l.add(v)
    basis = [tuple(QQ_ONE if t == k else QQ_ZERO for t in range(plus.dim)) for k in range(plus.dim)]
    ideal_m = all(span_m.contains(plus.bracket(v, b)) for v in span_m.kept for b in basis)
    ideal_l = all(span_l.contains(plus.bracket(v, b)) for v in span_l.kept for b in basis)
    commute = all(
        vec_is_zero(plus.bracket(u, v)) for u in xi.values() for v in xi2.values()
    )
    twist_ok = True
    for (i, j), v in xi.items():
        for k in range(n):
            lhs = plus.bracket(v, plus.ad_of(alg.basis_vector(k)))
            c = alg.table[i][j]
            ck = alg.bracket(c, alg.basis_vector(k))
            rhs = vec_sub(plus.ad_of(ck), plus.d_of(c, alg.basis_vector(k)))
            if lhs != vec_scale(rhs, rat(-2)):
                twist_ok = False
    return {
        "dim_m": span_m.dim,
        "dim_l": span_l.dim,
        "ideal_m": ideal_m,
        "ideal_l": ideal_l,
        "commute": commute,
        "twist": twist_ok,
        "ok": ideal_m and ideal_l and commute and twist_ok,
    }
