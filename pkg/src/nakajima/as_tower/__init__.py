"""Artin-Schreier towers over F_q(x), their automorphisms and local invariants."""

from .expr import parse_in_tower
from .maps import FieldAuto, MapVerdict, identity_check, map_apply, map_compose, map_verify
from .reduce import as_reduce, as_step_genus, ramification_data
from .tower import TowerElem, TowerField, elem_inv, tower_make
from .wp import wp_image_solve, wp_image_test

__all__ = [
    "FieldAuto", "MapVerdict", "TowerElem", "TowerField",
    "as_reduce", "as_step_genus", "elem_inv", "identity_check", "map_apply",
    "map_compose", "map_verify", "parse_in_tower", "ramification_data",
    "tower_make", "wp_image_solve", "wp_image_test",
]
