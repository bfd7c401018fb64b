"""Admissible prime constellations and the cycles of gaps of Eratosthenes sieve.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its public surface. Big integers are plain Python ints, exact
rationals are ``fractions.Fraction``.
"""

from ._core import (
    BudgetError,
    Constellation,
    GapCycle,
    InOutCount,
    InputError,
    Occurrence,
    PrimorialCoords,
    bfs_widths,
    build_cycle,
    coords_from_text,
    coords_to_text,
    count_in_out,
    crt_count,
    decode,
    delta_count,
    encode,
    family_index,
    find_occurrences,
    first_escape_prime,
    from_scientific,
    inout_trajectory,
    is_admissible,
    is_nonconvex,
    load_tuples,
    min_exact_instance,
    next_cycle,
    next_prime_after,
    nu,
    parse_gap_list,
    phi_primorial,
    pi,
    population,
    primorial,
    rho,
    rho_profile,
    to_scientific,
    unique_prefix,
    verify,
    winf,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "Constellation",
    "GapCycle",
    "InOutCount",
    "InputError",
    "Occurrence",
    "PrimorialCoords",
    "bfs_widths",
    "build_cycle",
    "coords_from_text",
    "coords_to_text",
    "count_in_out",
    "crt_count",
    "decode",
    "delta_count",
    "encode",
    "family_index",
    "find_occurrences",
    "first_escape_prime",
    "from_scientific",
    "inout_trajectory",
    "is_admissible",
    "is_nonconvex",
    "load_tuples",
    "min_exact_instance",
    "next_cycle",
    "next_prime_after",
    "nu",
    "parse_gap_list",
    "phi_primorial",
    "pi",
    "population",
    "primorial",
    "rho",
    "rho_profile",
    "to_scientific",
    "unique_prefix",
    "verify",
    "winf",
]
