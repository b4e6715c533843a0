"""Finite fields, sparse polynomials with layered variables, and fractions."""
from .field import FieldCtx, FieldElem, frobenius, get_field, parse_field_spec
from .parse import parse_poly, parse_ratfunc, parse_var
from .poly import MultiPoly, VarId, param, poly_pth_root, reduce_by_monic, xvar
from .ratfunc import RatFunc

__all__ = [
    "FieldCtx",
    "FieldElem",
    "MultiPoly",
    "RatFunc",
    "VarId",
    "frobenius",
    "get_field",
    "param",
    "parse_field_spec",
    "parse_poly",
    "parse_ratfunc",
    "parse_var",
    "poly_pth_root",
    "reduce_by_monic",
    "xvar",
]
