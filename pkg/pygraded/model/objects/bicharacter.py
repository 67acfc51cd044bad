import logging

from pygraded.model.core.scalars import (
    RATIONAL, to_scalar, format_scalar)

logger = logging.getLogger(__name__)


def _power(value, exponent, domain):
    if exponent >= 0:
        return value ** exponent
    return (domain.one / value) ** (-exponent)


def bicharacter_eval(omega, alpha, beta, domain=RATIONAL):
    """Evaluate eps(alpha, beta) = prod_ij omega_ij^(alpha_i beta_j)
    for integer vectors alpha and beta"""
    value = domain.one
    for i, a in enumerate(alpha):
        if not a:
            continue
        for j, b in enumerate(beta):
            if b:
                value *= _power(omega[i][j], a * b, domain)
    return value


class Bicharacter:
    """Skew symmetric bicharacter on Z^(m+1), determined by the matrix
    omega_ij = eps(e_i, e_j)"""

    def __init__(self, omega, domain=RATIONAL):
        self.domain = domain
        self.omega = [
            [to_scalar(value, domain) for value in row] for row in omega]

        size = len(self.omega)
        if size == 0:
            raise ValueError("Bicharacter matrix must be non-empty")

        for i, row in enumerate(self.omega):
            if len(row) != size:
                raise ValueError(
                    f"Bicharacter matrix must be square, row {i + 1} "
                    f"has {len(row)} entries")
            for j, value in enumerate(row):
                if not value:
                    raise ValueError(
                        f"omega[{i}][{j}] must be nonzero")

        for i in range(size):
            for j in range(i, size):
                if self.omega[i][j] * self.omega[j][i] != domain.one:
                    raise ValueError(
                        f"omega[{i}][{j}] * omega[{j}][{i}] != 1")

        self._values = {}

    @property
    def rank(self):
        """Number of grading coordinates m + 1"""
        return len(self.omega)

    def __call__(self, alpha, beta):
        key = (tuple(alpha), tuple(beta))
        if key not in self._values:
            if len(alpha) != self.rank or len(beta) != self.rank:
                raise ValueError(
                    f"Degrees must have {self.rank} coordinates")
            self._values[key] = bicharacter_eval(
                self.omega, alpha, beta, self.domain)
        return self._values[key]

    def __eq__(self, other):
        if not isinstance(other, Bicharacter):
            return NotImplemented
        return self.omega == other.omega

    def format_rows(self):
        return [
            ' '.join(format_scalar(value, self.domain) for value in row)
            for row in self.omega]

    def __repr__(self):
        return f"Bicharacter([{'; '.join(self.format_rows())}])"
