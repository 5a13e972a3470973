"""Exact computation of Eulerian polynomials of Coxeter types A, B and D."""

from .families import (
    b_refined,
    eulerian,
    eulerian_A_rec,
    eulerian_B_rec,
    eulerian_D_rec,
    eulerian_enum,
    p_poly,
    q_poly,
    t_refined,
)
from .perms import Kind, SignedPerm
from .poly import IntPoly, RatPoly, reverse
from .roots import interlaces, is_real_rooted

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "RatPoly",
    "reverse",
    "Kind",
    "SignedPerm",
    "eulerian",
    "eulerian_enum",
    "eulerian_A_rec",
    "eulerian_B_rec",
    "eulerian_D_rec",
    "p_poly",
    "q_poly",
    "t_refined",
    "b_refined",
    "interlaces",
    "is_real_rooted",
]
