"""Exact character-degree combinatorics for symmetric, alternating, nilpotent
and general linear groups.

Partitions are passed and returned as text labels: comma-separated parts with
exponent shorthand ("5,1^4"), "[]" for the empty partition. Degrees are exact
python ints.
"""

from pichar._pichar import (
    alt_degrees,
    alt_extendible_exists,
    alt_witness,
    conjugate,
    core_tower_sizes,
    degree,
    e_core,
    e_quotient,
    e_weight,
    gamma_prime_alt,
    gamma_prime_gl,
    gamma_prime_nilpotent,
    gamma_prime_sym,
    gl_character_degrees,
    gl_only_linear,
    gl_order,
    hook_lengths,
    irr_pi_prime_sym,
    is_p_prime_degree,
    nu_p_degree,
    partitions,
    sym_degrees,
    sym_only_linear,
    sym_witness,
    unipotent_degree,
    verify,
)

__all__ = [
    "alt_degrees",
    "alt_extendible_exists",
    "alt_witness",
    "conjugate",
    "core_tower_sizes",
    "degree",
    "e_core",
    "e_quotient",
    "e_weight",
    "gamma_prime_alt",
    "gamma_prime_gl",
    "gamma_prime_nilpotent",
    "gamma_prime_sym",
    "gl_character_degrees",
    "gl_only_linear",
    "gl_order",
    "hook_lengths",
    "irr_pi_prime_sym",
    "is_p_prime_degree",
    "nu_p_degree",
    "partitions",
    "sym_degrees",
    "sym_only_linear",
    "sym_witness",
    "unipotent_degree",
    "verify",
]
