"""Exact ranks of subset-intersection matrices W_{k,n}^i(m).

Sets are 1-based on this side, matching the command-line tool.
"""

from ._wrank import (
    SizeCapError,
    binomial,
    diagonal_form_compare,
    incidence_matrix,
    incidence_rank,
    incidence_snf,
    james_multiplicity,
    layer_dims,
    lemma_coefficient,
    predicted_rank,
    rank_case,
    rank_lower_bound,
    rank_report,
    smith_normal_form,
    specht_dim,
    subset_rank,
    subset_unrank,
    verify_lemma_image,
)

__all__ = [
    "SizeCapError",
    "binomial",
    "diagonal_form_compare",
    "incidence_matrix",
    "incidence_rank",
    "incidence_snf",
    "james_multiplicity",
    "layer_dims",
    "lemma_coefficient",
    "predicted_rank",
    "rank_case",
    "rank_lower_bound",
    "rank_report",
    "smith_normal_form",
    "specht_dim",
    "subset_rank",
    "subset_unrank",
    "verify_lemma_image",
]
