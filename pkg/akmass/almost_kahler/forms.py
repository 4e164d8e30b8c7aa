"""Algebra of 2-forms and curvature operators at a point.

Norms of forms contract over strictly increasing index tuples, so a 2-form
has ``|alpha|^2 = 1/2 alpha_ij alpha^ij`` and a curvature-type 4-tensor
``|T|^2 = 1/4 T_ijkl T^ijkl``; endomorphism-valued tensors use the full
contraction.

"""

import numpy as np


def raise_pair(alpha, g_inv):
    """``alpha^ab = g^ai g^bj alpha_ij`` on the last two slots."""
    return np.einsum('ai,bj,...ij->...ab', g_inv, g_inv, alpha)


def form_inner(alpha, beta, g_inv):
    """The strict-pair inner product of two 2-forms."""
    return 0.5 * float(np.einsum('ij,ij->', raise_pair(alpha, g_inv), beta))


def form_norm2(alpha, g_inv):
    """The squared strict-pair norm of a 2-form."""
    return form_inner(alpha, alpha, g_inv)


def covector_form_norm2(tensor, g_inv):
    """Squared norm of a 1-form with values in 2-forms, such as
    ``nabla omega`` indexed ``[c, i, j]``."""
    up = np.einsum('cd,dij->cij', g_inv, raise_pair(tensor, g_inv))
    return 0.5 * float(np.einsum('cij,cij->', up, tensor))


def curvature_norm2(tensor, g_inv):
    """Squared norm of a curvature-type 4-tensor."""
    up = np.einsum('ai,bj,ck,dl,ijkl->abcd', g_inv, g_inv, g_inv, g_inv,
                   tensor)
    return 0.25 * float(np.einsum('abcd,abcd->', up, tensor))


def curvature_on_form(tensor, alpha, g_inv):
    """The curvature operator ``R(alpha)_cd = -1/2 R_abcd alpha^ab``."""
    return -0.5 * np.einsum('abcd,ab->cd', tensor,
                            raise_pair(alpha, g_inv))


def curvature_pairing(tensor, alpha, beta, g_inv):
    """``R(alpha, beta) = <R(alpha), beta>``."""
    return form_inner(curvature_on_form(tensor, alpha, g_inv), beta, g_inv)


def j_transform(beta, J):
    """``beta(J., J.)`` for a 2-form ``beta``."""
    return np.einsum('ai,bj,ab->ij', J, J, beta)


def j_invariant_part(beta, J):
    """The part ``1/2 (beta + beta(J., J.))`` of a 2-form."""
    return 0.5 * (beta + j_transform(beta, J))


def j_anti_invariant_part(beta, J):
    """The part ``1/2 (beta - beta(J., J.))`` of a 2-form."""
    return 0.5 * (beta - j_transform(beta, J))


def apply_j(tensor, J, slots):
    """Precompose the covariant ``tensor`` with ``J`` in the given slots."""
    out = tensor
    for slot in slots:
        out = np.moveaxis(np.tensordot(J, out, axes=([0], [slot])), 0, slot)
    return out


def anti_invariant_curvature(R, J):
    """The component ``W''`` of a curvature tensor: one eighth of the
    alternating sum of ``R`` precomposed with ``J`` on the slot sets
    {}, {1,2}, {3,4}, {1,2,3,4}, {2,4}, {1,4}, {2,3}, {1,3} (signs
    ``+ - - + - - - -``)."""
    terms = (
        ((), 1.0), ((0, 1), -1.0), ((2, 3), -1.0), ((0, 1, 2, 3), 1.0),
        ((1, 3), -1.0), ((0, 3), -1.0), ((1, 2), -1.0), ((0, 2), -1.0))
    return sum(sign * apply_j(R, J, slots) for slots, sign in terms) / 8.0


def exterior_derivative_values(d_alpha):
    """``(d alpha)_ijk`` from the partials ``d_alpha[l, a, b] = d_l
    alpha_ab`` of a 2-form."""
    return (d_alpha + np.einsum('jki->ijk', d_alpha) +
            np.einsum('kij->ijk', d_alpha))
