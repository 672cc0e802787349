"""Nonbinary stabilizer codes over finite fields: construction, exact
verification, bounds, puncturing and derived codes."""

from .additive import INFINITY, AdditiveCode
from .errors import StabError
from .gf import Field, field_create, field_of_order
from .kernels import BACKEND
from .stabilizer import StabilizerCode, css, from_alternating, from_symplectic, verify

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode",
    "BACKEND",
    "Field",
    "INFINITY",
    "StabError",
    "StabilizerCode",
    "css",
    "field_create",
    "field_of_order",
    "from_alternating",
    "from_symplectic",
    "verify",
]
