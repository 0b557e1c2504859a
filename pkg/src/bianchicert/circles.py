"""Circle triples (a, B, c), the discriminant invariant, the two
PSL2(O_d) actions, stabilizer-form recognition, and co-compactness
certificates via quadratic residues.

A triple describes the circle a|z|^2 + B z + conj(B z) + c = 0 in the
Riemann sphere.  Writing B = (b1 + b2 sqrt(-d))/2, primitivity means

    gcd(a, b1/2, b2/2, c) = 1   if b1, b2 both even
    gcd(a, b1, b2, c) = 1       otherwise
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .psl2 import Mat2, PslElement
from .quadint import QuadInt, content


@dataclass(frozen=True)
class CircleTriple:
    """Sign-canonical circle datum.  Build via primitive_triple to also
    divide out the rational content."""

    a: int
    B: QuadInt
    c: int

    @property
    def d(self) -> int:
        return self.B.d

    def matrix(self) -> Mat2:
        """The Hermitian matrix (a, B; conj(B), c)."""
        d = self.d
        return Mat2(QuadInt.integer(d, self.a), self.B, self.B.conj(), QuadInt.integer(d, self.c))

    def render(self) -> str:
        return f"({self.a},{self.B},{self.c})"

    def __str__(self) -> str:
        return self.render()


def primitive_triple(a: int, B: QuadInt, c: int) -> CircleTriple:
    """Divide out the content and apply the canonical sign.  Idempotent."""
    if B.norm() - a * c <= 0:
        raise ValueError(f"degenerate circle datum ({a},{B},{c})")
    b1, b2 = B.half_pair()
    if b1 % 2 == 0 and b2 % 2 == 0:
        g = content(a, b1 // 2, b2 // 2, c)
    else:
        g = content(a, b1, b2, c)
    a, c = a // g, c // g
    b1, b2 = b1 // g, b2 // g
    if a < 0 or (a == 0 and _first_nonzero(b1, b2, c) < 0):
        a, b1, b2, c = -a, -b1, -b2, -c
    return CircleTriple(a, QuadInt.from_half_pair(B.d, b1, b2), c)


def _signed_triple(a: int, B: QuadInt, c: int) -> CircleTriple:
    """Canonical sign without content division.  Used by the actions, which
    must not rescale: T A T* preserves the determinant exactly, while the
    rational content of a triple can change even when the content ideal of
    the Hermitian matrix does not."""
    if a < 0 or (a == 0 and _first_nonzero(*B.half_pair(), c) < 0):
        return CircleTriple(-a, -B, -c)
    return CircleTriple(a, B, c)


def _first_nonzero(*values: int) -> int:
    for v in values:
        if v != 0:
            return v
    return 0


def circle_at_origin(d: int, D: int) -> CircleTriple:
    """C_D: the circle of radius sqrt(D) centered at the origin, (1, 0, -D)."""
    if D < 1:
        raise ValueError(f"D must be a positive integer, got {D}")
    return CircleTriple(1, QuadInt.integer(d, 0), -D)


def discriminant(C: CircleTriple) -> int:
    """|B|^2 - ac, a positive integer; invariant under the PSL2(O_d) action."""
    return C.B.norm() - C.a * C.c


def hermitian_action(T: PslElement, C: CircleTriple) -> CircleTriple:
    """T . A = T A T* on Hermitian matrices, returned sign-canonically."""
    m = T.rep * C.matrix() * T.rep.conj_transpose()
    a = m.a11.rational_value()
    c = m.a22.rational_value()
    if m.a21 != m.a12.conj():
        raise AssertionError("Hermitian structure lost")
    return _signed_triple(a, m.a12, c)


def circle_action(T: PslElement, C: CircleTriple) -> CircleTriple:
    """Image circle under the Moebius transformation of T.

    Realized via the Hermitian action of V = (T^-1)^t, which intertwines
    the two actions and so preserves the discriminant.
    """
    V = PslElement(T.inv().rep.transpose())
    return hermitian_action(V, C)


def stab_form(M: PslElement, D: int) -> Optional[tuple[QuadInt, QuadInt]]:
    """Recognize the shape (alpha, D beta; conj(beta), conj(alpha)).

    Returns (alpha, beta) with |alpha|^2 - D|beta|^2 = 1 iff some sign of the
    representative has the shape; this is membership in Stab_{PSL2(O_d)}(C_D).
    """
    if D < 1:
        raise ValueError(f"D must be a positive integer, got {D}")
    for m in (M.rep, -M.rep):
        alpha = m.a11
        beta = m.a21.conj()
        if m.a22 == alpha.conj() and m.a12 == beta * D:
            if alpha.norm() - D * beta.norm() == 1:
                return (alpha, beta)
    return None


# -- quadratic residues and co-compactness ----------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _check_odd_prime(d: int) -> None:
    if d < 3 or not is_prime(d):
        raise ValueError(f"d must be a prime >= 3, got {d}")


def is_quadratic_nonresidue(D: int, d: int) -> bool:
    """Euler criterion: D is a non-residue mod the odd prime d."""
    _check_odd_prime(d)
    if D % d == 0:
        return False
    return pow(D % d, (d - 1) // 2, d) != 1


def smallest_nonresidue(d: int) -> int:
    """Least x in [2, d-1] that is a quadratic non-residue mod d."""
    _check_odd_prime(d)
    for x in range(2, d):
        if is_quadratic_nonresidue(x, d):
            return x
    raise AssertionError(f"no non-residue mod {d}")  # impossible for prime d >= 3


@dataclass(frozen=True)
class CocompactCertificate:
    """Record of the residue criterion for Stab(C_D) to be co-compact."""

    d: int
    D: int
    d_is_odd_prime: bool
    D_is_nonresidue: bool

    @property
    def certified(self) -> bool:
        return self.d_is_odd_prime and self.D_is_nonresidue


def cocompact_certificate(d: int, D: int) -> CocompactCertificate:
    """Certify co-compactness of Stab_{PSL2(O_d)}(C_D) when the hypotheses
    (d an odd prime, D a non-residue mod d) hold; otherwise mark
    not-applicable without raising."""
    if D < 1:
        raise ValueError(f"D must be a positive integer, got {D}")
    d_ok = d >= 3 and is_prime(d)
    nonres = is_quadratic_nonresidue(D, d) if d_ok else False
    return CocompactCertificate(d, D, d_ok, nonres)
