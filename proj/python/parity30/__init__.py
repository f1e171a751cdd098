"""Collatz parity sequences, fg encodings, parity and rule 30 hashes,
search games, CA evolution, complexity metrics and stream statistics."""

from parity30._core import (  # noqa: F401
    BudgetExceeded,
    ConfigGuardError,
    InvalidCodeword,
    ParityDomainError,
    ParityParseError,
    __version__,
    analyze,
    avalanche,
    ca_evolve,
    center_column,
    collision_search,
    cyclomatic,
    cyclomatic_from_predicates,
    decode,
    emit_table,
    empirical_path_count,
    encode,
    language_stats,
    parity,
    parity_digest,
    parity_fixed,
    parity_table_note,
    path_count_bound,
    pi_bits,
    preimage_search,
    render_pbm,
    rule30_digest,
    rule30_digest_naive,
    single_seed,
    step,
    trajectory,
)
