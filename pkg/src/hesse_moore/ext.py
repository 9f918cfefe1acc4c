"""Graded self-extension spaces of the rank-1 Ulrich module, as exact
linear algebra over F_p.

The degree-m extension space is the quotient

    {C in Mat_3(S_{m+1}) : tr(B*C) = 0 mod f}
    ---------------------------------------------
    {U*A - A*V : U, V in Mat_3(S_m)}

computed coefficientwise: matrices of forms are vectorized over the
basis (entry row-major, monomials graded-lex), solution spaces come from
null spaces, homotopy spaces from column spans, and subspace comparisons
from canonical reduced echelon forms.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .field import FieldElement, one as f_one, zero as f_zero
from .hesse import extension_representative
from .moore import FormMatrix, coordinate_vars, moore_scalar
from .poly import HomForm, divide_by_cubic, monomials
from .ulrich import MatrixFactorization, divergence, moore_factorization, trace_criterion


@dataclass
class ExtSpace:
    """Solution/homotopy bases and the quotient dimension at shift m."""

    m: int
    solution_basis: list[FormMatrix]
    homotopy_basis: list[FormMatrix]
    quotient_dimension: int
    representatives: list[FormMatrix]


def _vectorize(mat: FormMatrix, degree: int) -> list[FieldElement]:
    """Coordinates of a 3x3 matrix of degree-d forms: entries row-major,
    monomials graded-lex."""
    monos = monomials(degree)
    out = []
    for i in range(3):
        for j in range(3):
            entry = mat.entries[i][j]
            out.extend(entry.coefficient(e) for e in monos)
    return out


def _unvectorize(vec, degree: int, p: int) -> FormMatrix:
    monos = monomials(degree)
    k = len(monos)
    rows = []
    idx = 0
    for i in range(3):
        row = []
        for j in range(3):
            coeffs = {e: c for e, c in zip(monos, vec[idx : idx + k]) if c.value}
            row.append(HomForm(degree, p, coeffs))
            idx += k
        rows.append(row)
    return FormMatrix(rows)


def _reduced_coords(g: HomForm, f, target_monos) -> list[FieldElement]:
    _, r = divide_by_cubic(g, f)
    return [r.coefficient(e) for e in target_monos]


def _solution_vectors(fac: MatrixFactorization, m: int) -> list[list[FieldElement]]:
    """Null space of the trace condition on Mat_3(S_{m+1})."""
    p = fac.f.p
    monos = monomials(m + 1)
    if not monos:
        return []
    # tr(B * E_rc * mu) = B[c][r] * mu; constraints are the coefficients of
    # its remainder mod f over the degree-(m+3) monomials
    target = [e for e in monomials(m + 3) if e[0] < 3]
    columns = []
    for r in range(3):
        for c in range(3):
            bcr = fac.B.entries[c][r]
            for mono in monos:
                g = bcr * HomForm.monomial(f_one(p), mono)
                columns.append(_reduced_coords(g, fac.f, target))
    constraint = linalg.transpose(columns)
    return linalg.nullspace(constraint)


def _homotopy_vectors(fac: MatrixFactorization, m: int) -> list[list[FieldElement]]:
    """Span of {vec(U*A - A*V)} for U, V in Mat_3(S_m)."""
    p = fac.f.p
    monos = monomials(m)
    if not monos:
        return []
    vectors = []
    for r in range(3):
        for c in range(3):
            for mono in monos:
                unit = _unit_matrix(r, c, mono, p)
                vectors.append(_vectorize(unit @ fac.A, m + 1))
                vectors.append(_vectorize(-(fac.A @ unit), m + 1))
    return [list(v) for v in linalg.row_space(vectors)]


def _unit_matrix(r: int, c: int, mono, p: int) -> FormMatrix:
    deg = sum(mono)
    zero = HomForm.zero(deg, p)
    entries = [[zero] * 3 for _ in range(3)]
    entries[r] = list(entries[r])
    entries[r][c] = HomForm.monomial(f_one(p), mono)
    return FormMatrix(entries)


def ext_space(a, m: int) -> ExtSpace:
    """The extension space at shift m for the Moore factorization at a."""
    fac = moore_factorization(a)
    p = fac.f.p
    sols = _solution_vectors(fac, m)
    homs = _homotopy_vectors(fac, m)
    dim_sol = linalg.span_dim(sols) if sols else 0
    dim_hom = len(homs)
    dim_join = linalg.span_dim(sols + homs) if (sols or homs) else 0
    dim_meet = dim_sol + dim_hom - dim_join
    quotient = dim_sol - dim_meet
    # representatives: solution vectors extending the homotopy span
    reps = []
    working = [list(v) for v in homs]
    current = linalg.span_dim(working) if working else 0
    for v in sols:
        if linalg.span_dim(working + [v]) > current:
            working.append(v)
            current += 1
            reps.append(v)
    return ExtSpace(
        m=m,
        solution_basis=[_unvectorize(v, m + 1, p) for v in sols],
        homotopy_basis=[_unvectorize(v, m + 1, p) for v in homs],
        quotient_dimension=quotient,
        representatives=[_unvectorize(v, m + 1, p) for v in reps],
    )


def moore_span_basis(a) -> list[FormMatrix]:
    """The constant Moore matrices M_{b,e_i} at the extension
    representative b of -2*a."""
    a = tuple(a)
    p = a[0].p
    b = extension_representative(a)
    basis = []
    for i in range(3):
        e = [f_zero(p)] * 3
        e[i] = f_one(p)
        scalar = moore_scalar(b, e)
        basis.append(FormMatrix.from_scalars(scalar, p))
    return basis


def verify_moore_span(a) -> bool:
    """The m = -1 solution space equals span{M_{b,e0}, M_{b,e1}, M_{b,e2}}
    inside the 9-dimensional space of constant matrices."""
    space = ext_space(a, -1)
    sols = [_vectorize(s, 0) for s in space.solution_basis]
    span = [_vectorize(s, 0) for s in moore_span_basis(a)]
    if linalg.span_dim(span) != 3:
        return False
    return linalg.same_span(sols, span)


class RepresentationError(ValueError):
    """No Moore-form representative exists for the given solution."""


def moore_representative(a, C: FormMatrix):
    """Solve C = M_{b,y} + U*A - A*V for y (linear forms) and constant
    U, V; existence is the content of the divergence theorem."""
    a = tuple(a)
    fac = moore_factorization(a)
    p = fac.f.p
    x = coordinate_vars(p)
    columns = []
    # y unknowns: y_i = sum_k y_ik x_k contributes M_{b,e_i} * x_k
    basis_m = moore_span_basis(a)
    for i in range(3):
        for k in range(3):
            contrib = basis_m[i].scale_form(x[k])
            columns.append(_vectorize(contrib, 1))
    # U and V unknowns (constant matrices)
    for r in range(3):
        for c in range(3):
            unit = _unit_matrix(r, c, (0, 0, 0), p)
            columns.append(_vectorize(unit @ fac.A, 1))
    for r in range(3):
        for c in range(3):
            unit = _unit_matrix(r, c, (0, 0, 0), p)
            columns.append(_vectorize(-(fac.A @ unit), 1))
    system = linalg.transpose(columns)
    rhs = _vectorize(C, 1)
    sol = linalg.solve(system, rhs)
    if sol is None:
        residual = _residual_norm(system, rhs, p)
        raise RepresentationError(
            f"no Moore representative: inconsistent system (residual rank defect {residual})"
        )
    y = []
    for i in range(3):
        coeffs = {}
        for k in range(3):
            c = sol[3 * i + k]
            if c.value:
                exps = tuple(1 if t == k else 0 for t in range(3))
                coeffs[exps] = c
        y.append(HomForm(1, p, coeffs))
    U = [[sol[9 + 3 * r + c] for c in range(3)] for r in range(3)]
    V = [[sol[18 + 3 * r + c] for c in range(3)] for r in range(3)]
    return tuple(y), U, V


def _residual_norm(system, rhs, p) -> int:
    return linalg.span_dim(linalg.transpose(system) + [rhs]) - linalg.rank(system)


def divergence_class(a, C: FormMatrix) -> FieldElement:
    """The divergence of the Moore representative of C; zero exactly on
    the homotopy subspace."""
    if not trace_criterion(moore_factorization(a), C):
        raise RepresentationError(
            "C is not in the m = 0 solution space: tr(B*C) != 0 mod f"
        )
    y, _, _ = moore_representative(a, C)
    return divergence(y)
