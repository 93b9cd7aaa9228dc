"""Exact integer polynomials in q and the rational Catalan polynomial.

Coefficients are arbitrary-precision integers stored ascending by degree
with no trailing zeros, so equality is plain tuple equality.  The rational
Catalan polynomial [m+n-1]!q / ([m]!q [n]!q) is computed by exact long
division, which succeeds precisely because the pair is coprime.
"""

from __future__ import annotations

from math import gcd

from .errors import InexactDivisionError, NonCoprimeError


class QPoly:
    """Dense univariate integer polynomial, zero = empty coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if not isinstance(c, int):
                raise ValueError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "QPoly":
        return cls((0,) * degree + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial conventionally at -1."""
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return QPoly(out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            out[k] -= c
        return QPoly(out)

    def __mul__(self, other: "QPoly") -> "QPoly":
        if self.is_zero or other.is_zero:
            return QPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def div_exact(self, divisor: "QPoly") -> "QPoly":
        """Long division that must leave remainder zero.

        Raises InexactDivisionError (carrying the offending remainder) as
        soon as a leading coefficient fails to divide or a nonzero remainder
        survives.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return QPoly.zero()
        if self.degree < divisor.degree:
            raise InexactDivisionError(
                f"degree {self.degree} < divisor degree {divisor.degree}",
                remainder=self,
            )
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dn = len(divisor.coeffs)
        out = [0] * (len(rem) - dn + 1)
        for shift in range(len(out) - 1, -1, -1):
            top = rem[shift + dn - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r != 0:
                raise InexactDivisionError(
                    f"leading coefficient {top} not divisible by {lead}",
                    remainder=QPoly(rem),
                )
            out[shift] = q
            for k, c in enumerate(divisor.coeffs):
                rem[shift + k] -= q * c
        if any(rem):
            raise InexactDivisionError(
                "nonzero remainder in exact division", remainder=QPoly(rem)
            )
        return QPoly(out)

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def pretty(self) -> str:
        """Human form, e.g. "1 + q^2" or "1 + 2q + 2q^2 + q^3"."""
        if self.is_zero:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append((c < 0, body))
        first_neg, first_body = terms[0]
        text = ("-" if first_neg else "") + first_body
        for neg, body in terms[1:]:
            text += (" - " if neg else " + ") + body
        return text


def q_int(a: int) -> QPoly:
    """1 + q + ... + q^(a-1); zero polynomial for a = 0."""
    if a < 0:
        raise ValueError("q_int needs a nonnegative argument")
    return QPoly((1,) * a)


def q_factorial(a: int) -> QPoly:
    if a < 0:
        raise ValueError("q_factorial needs a nonnegative argument")
    out = QPoly.one()
    for k in range(2, a + 1):
        out = out * q_int(k)
    return out


def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial via exact division of q-factorials."""
    if not 0 <= b <= a:
        raise ValueError(f"need 0 <= b <= a, got ({a}, {b})")
    return q_factorial(a).div_exact(q_factorial(b) * q_factorial(a - b))


def rational_catalan_poly(m: int, n: int) -> QPoly:
    """[m+n-1]!q / ([m]!q [n]!q), a nonnegative polynomial for coprime m, n."""
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    if gcd(m, n) != 1:
        raise NonCoprimeError(f"gcd({m}, {n}) = {gcd(m, n)} > 1")
    return q_factorial(m + n - 1).div_exact(q_factorial(m) * q_factorial(n))


def _accumulate(exponents) -> QPoly:
    coeffs: list[int] = []
    for e in exponents:
        if e >= len(coeffs):
            coeffs.extend([0] * (e + 1 - len(coeffs)))
        coeffs[e] += 1
    return QPoly(coeffs)


def path_sum_poly(m: int, n: int) -> QPoly:
    """Generating polynomial of area + codinv over all (m,n)-Dyck paths."""
    from .enumeration import iter_dyck_steps
    from .paths import Dims, Path, area
    from .stats import dinv_geometric, max_statistic

    dims = Dims(m, n)
    dims.require_coprime()
    top = max_statistic(dims)
    return _accumulate(
        area(p) + top - dinv_geometric(p)
        for p in (Path(dims, w) for w in iter_dyck_steps(dims))
    )


def core_sum_poly(m: int, n: int) -> QPoly:
    """Generating polynomial of length + skew-length over all (m,n)-cores."""
    from .anderson import anderson
    from .enumeration import iter_dyck_steps
    from .paths import Dims, Path
    from .stats import skew_length

    dims = Dims(m, n)
    dims.require_coprime()

    def exponents():
        for w in iter_dyck_steps(dims):
            lam = anderson(Path(dims, w))
            yield lam.length + skew_length(lam, m, n)

    return _accumulate(exponents())
