"""Mod-p cohomology dimensions of wreath products ``Z/m wr S_ell`` in low degree.

The dimensions below come from the standard splitting of the cohomology of
a wreath product: a class of total degree d is built from an invariant
class of degree d on the base torus ``(Z/m)^ell``, from symmetric-group
classes with coefficients in lower-degree parts, or is inflated from
``S_ell`` itself.  In degrees up to two everything depends on m only
through whether p divides it (for p = 2, through m mod 4, although the
two even residue classes give the same counts this low), and on ell only
up to the threshold where the answer stabilises.

These functions are deliberately plain integer arithmetic so that the
enumeration kernels can compile them; they are the single source of truth
for both the per-partition oracle and the closed formulas.
"""

from .accel import njit


@njit(cache=True)
def residue_class(m, p):
    """Which residue class of m the dimension tables distinguish.

    Returns 0 when p does not divide m.  For odd p that is the only
    distinction and divisible m returns 1.  For p = 2 the class is 1 for
    m = 2 (mod 4) and 2 for m = 0 (mod 4); the tables in degrees <= 2
    happen to agree on the two even classes, but the split is kept so the
    discriminator matches the structure of the general answer.
    """
    if p == 2:
        if m % 2 == 1:
            return 0
        if m % 4 == 2:
            return 1
        return 2
    if m % p == 0:
        return 1
    return 0


@njit(cache=True)
def cyclic_wreath_h1(m, ell, p):
    """dim of the degree-1 mod-p cohomology of ``Z/m wr S_ell``."""
    if ell == 0:
        return 0
    divisible = residue_class(m, p) != 0
    if p != 2:
        if divisible:
            return 1
        return 0
    total = 0
    if divisible:
        total += 1  # invariant degree-1 classes of the base torus
    if ell >= 2:
        total += 1  # inflated from the symmetric group
    return total


@njit(cache=True)
def cyclic_wreath_h2(m, ell, p):
    """dim of the degree-2 mod-p cohomology of ``Z/m wr S_ell``.

    For odd p this equals the degree-1 dimension.  For p = 2 the three
    summands are the invariant degree-2 classes of the base torus, the
    mixed classes (degree-1 symmetric classes with degree-1 torus
    coefficients, appearing once ell >= 3), and the classes inflated from
    the symmetric group (one at ell in {2, 3}, two from ell = 4 on).
    """
    if ell == 0:
        return 0
    divisible = residue_class(m, p) != 0
    if p != 2:
        if divisible:
            return 1
        return 0
    total = 0
    if divisible:
        if ell == 1:
            total += 1
        else:
            total += 2
    if divisible and ell >= 3:
        total += 1
    if ell >= 4:
        total += 2
    elif ell >= 2:
        total += 1
    return total
