"""Exact dense/sparse linear algebra over QQ and QQ(t), built on
sympy DomainMatrix. No floating point arithmetic is ever performed."""
import logging

from sympy.polys.matrices import DomainMatrix

from .scalars import RATIONAL, is_function_field, rational_roots

logger = logging.getLogger(__name__)


def _element(value, domain):
    if domain.of_type(value):
        return value
    return domain.convert(value)


def as_matrix(rows, domain=RATIONAL, ncols=None):
    """Create a DomainMatrix from a list of rows of domain elements.
    ncols must be supplied when rows is empty"""

    if isinstance(rows, DomainMatrix):
        return rows

    rows = [
        [_element(value, domain) for value in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0

    return DomainMatrix(rows, (len(rows), ncols), domain)


def as_sparse_matrix(row_dicts, ncols, domain=RATIONAL):
    """Create a sparse DomainMatrix from a list of {column: value}
    dictionaries, dropping zero entries"""
    elements = {}
    for index, row in enumerate(row_dicts):
        row = {
            col: _element(value, domain)
            for col, value in row.items() if value}
        if row:
            elements[index] = row
    return DomainMatrix(elements, (len(row_dicts), ncols), domain)


def _is_empty(matrix):
    nrows, ncols = matrix.shape
    return nrows == 0 or ncols == 0


def rref(matrix):
    """Reduced row echelon form of an exact matrix

    Parameters
    ----------
    matrix: DomainMatrix

    Returns
    -------
    rank: int
        Number of pivots
    pivots: list of int
        Strictly increasing pivot column indices
    reduced: DomainMatrix
        The unique reduced row echelon form of matrix
    """
    if _is_empty(matrix):
        return 0, [], matrix

    reduced, pivots = matrix.rref()
    pivots = list(pivots)

    return len(pivots), pivots, reduced


def rank(matrix):
    """Rank of an exact matrix"""
    if _is_empty(matrix):
        return 0
    return matrix.rank()


def transpose(matrix):
    return matrix.transpose()


def reduced_rows(matrix):
    """Nonzero rows of the reduced row echelon form together with
    their pivot columns"""
    count, pivots, reduced = rref(matrix)
    if count == 0:
        return [], []
    rows = reduced.to_list()[:count]
    return rows, pivots


def kernel_basis(matrix):
    """Basis of the right kernel {v : matrix * v = 0}, one vector per
    free column, with the free coordinate set to one"""

    domain = matrix.domain
    ncols = matrix.shape[1]
    rows, pivots = reduced_rows(matrix)

    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vector = [domain.zero] * ncols
        vector[free] = domain.one
        for row, pivot in zip(rows, pivots):
            vector[pivot] = -row[free]
        basis.append(vector)

    return basis


def solve_affine(matrix, rhs):
    """Solve matrix * x = rhs exactly

    Returns
    -------
    solution: list or None
        A particular solution, or None when the system is
        inconsistent
    kernel: list of list
        Basis of the kernel of matrix
    """
    domain = matrix.domain
    nrows, ncols = matrix.shape

    if len(rhs) != nrows:
        raise ValueError(
            f"Right hand side has {len(rhs)} entries, "
            f"expected {nrows}")

    kernel = kernel_basis(matrix)

    if nrows == 0:
        return [domain.zero] * ncols, kernel

    augmented = [
        list(row) + [value]
        for row, value in zip(matrix.to_list(), rhs)
    ]
    rows, pivots = reduced_rows(as_matrix(augmented, domain, ncols + 1))

    if pivots and pivots[-1] == ncols:
        return None, kernel

    solution = [domain.zero] * ncols
    for row, pivot in zip(rows, pivots):
        solution[pivot] = row[ncols]

    return solution, kernel


def matvec(matrix, vector):
    """Product of a DomainMatrix with a list of domain elements"""
    domain = matrix.domain
    result = []
    for row in matrix.to_list():
        total = domain.zero
        for entry, value in zip(row, vector):
            total += entry * value
        result.append(total)
    return result


def independent_rows(rows, domain=RATIONAL):
    """Indices of a maximal set of linearly independent rows, chosen
    greedily in order"""
    selected = []
    chosen = []
    for index, row in enumerate(rows):
        trial = chosen + [row]
        if rank(as_matrix(trial, domain)) > len(chosen):
            chosen = trial
            selected.append(index)
    return selected


def rank_drop_values(rows, domain, ncols=None):
    """Rational values of t at which a matrix over QQ(t) may lose rank
    or become undefined

    The returned set contains every rational specialisation where the
    generic rank drops: the determinant of one maximal nonsingular minor
    must vanish there. Poles of the entries are included.

    Returns
    -------
    values: list of QQ
        Sorted candidate special values
    residual: int
        Degree of factors whose roots are not rational (and therefore
        not re-checked)
    """
    if not is_function_field(domain) or not rows:
        return [], 0

    values = set()
    residual = 0

    for row in rows:
        for entry in row:
            if entry:
                roots, _ = rational_roots(entry, domain, poles_only=True)
                values.update(roots)

    row_indices = independent_rows(rows, domain)
    if row_indices:
        sub_rows = [rows[index] for index in row_indices]
        _, pivots = reduced_rows(as_matrix(sub_rows, domain, ncols))
        minor = as_matrix(
            [[row[col] for col in pivots] for row in sub_rows], domain)
        roots, residual = rational_roots(minor.det(), domain)
        values.update(roots)

    return sorted(values), residual
