"""Exterior products of coordinate forms.

A form is a dict from index sets, stored as bit masks, to coefficients: the
2-form ``3 dx0 ^ dx2`` is ``{0b101: 3.0}``. Dimensions are small, so the
products are taken term by term.
"""


def _bits(mask):
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def _sign(left, right):
    # parity of the transpositions sorting the concatenated index sets
    swaps = sum(bin(left >> (j + 1)).count('1') for j in _bits(right))
    return -1.0 if swaps % 2 else 1.0


def covector(components):
    """The 1-form ``sum a_i dx^i``."""
    return {1 << i: float(a) for i, a in enumerate(components) if a != 0.0}


def two_form(matrix):
    """The 2-form ``sum_{i<j} a_ij dx^i ^ dx^j`` of an antisymmetric
    matrix."""
    n = len(matrix)
    return {(1 << i) | (1 << j): float(matrix[i][j])
            for i in range(n) for j in range(i + 1, n)
            if matrix[i][j] != 0.0}


def wedge(alpha, beta):
    """``alpha ^ beta``.

        >>> wedge(covector([1.0, 0.0]), covector([0.0, 1.0]))
        {3: 1.0}

    """
    out = {}
    for a, x in alpha.items():
        for b, y in beta.items():
            if a & b:
                continue
            mask = a | b
            out[mask] = out.get(mask, 0.0) + _sign(a, b) * x * y
    return out


def wedge_power(alpha, k):
    """``alpha^k``, with ``alpha^0 = 1``."""
    out = {0: 1.0}
    for _ in range(k):
        out = wedge(out, alpha)
    return out


def top_coefficient(form, n):
    """The coefficient of ``dx^0 ^ ... ^ dx^(n-1)``."""
    return form.get((1 << n) - 1, 0.0)
