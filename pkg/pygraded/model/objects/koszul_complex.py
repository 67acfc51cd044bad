import logging
from itertools import combinations

from pygraded.model.core.exact_linalg import rank

logger = logging.getLogger(__name__)


class KoszulComplex:
    """Truncation of the complex C_r = U(L) (x) Lambda_eps^r L with
    internal degrees up to max_degree

    The basis of C_r in internal degree t consists of pairs
    (monomial, wedge): a PBW monomial of U(L) and a strictly increasing
    word of basis indices of L, with total degrees adding up to t.
    differentials[(r, t)] is the matrix of d_r : C_r -> C_(r-1) in
    degree t, columns indexed by C_r and rows by C_(r-1).
    """

    def __init__(self, algebra, r_max, max_degree):
        self.algebra = algebra
        self.r_max = r_max
        self.max_degree = max_degree

        #: Chain bases keyed by (r, t)
        self.bases = {}

        #: Matrices of d_r keyed by (r, t)
        self.differentials = {}

        #: Number of terms of d that left the internal degree of their
        #: source
        self.off_degree = 0

    def wedges(self, r):
        """Strictly increasing index words spanning Lambda_eps^r"""
        return list(combinations(range(self.algebra.dim), r))

    def rank_of_term(self, r):
        """Rank of C_r as a free U(L)-module"""
        return len(self.wedges(r))

    def basis(self, r, t):
        return self.bases.get((r, t), [])

    def dim(self, r, t):
        return len(self.basis(r, t))

    def differential(self, r, t):
        return self.differentials.get((r, t))

    def differential_rank(self, r, t):
        """Rank of d_r in internal degree t, zero outside 1..r_max"""
        matrix = self.differential(r, t)
        if matrix is None:
            return 0
        return rank(matrix)

    def summary_lines(self):
        ranks = [self.rank_of_term(r) for r in range(self.r_max + 1)]
        lines = [f"ranks: {', '.join(map(str, ranks))}"]
        for r in range(self.r_max + 1):
            dims = [self.dim(r, t) for t in range(self.max_degree + 1)]
            lines.append(f"C{r} dims: {', '.join(map(str, dims))}")
        return lines

    def __repr__(self):
        return (
            f"KoszulComplex({self.algebra.name or 'L'}, "
            f"r_max={self.r_max}, max_degree={self.max_degree})")
