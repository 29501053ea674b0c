"""DNF synthesis for complete Boolean functions given by their zero sets.

Matrices are lists of row strings over "01"; DNFs are lists of terms, each a
list of signed variable indices (3 for x3, -3 for its negation).
"""

import json

try:
    from . import _compdnf
except ImportError:  # extension built outside the package (build tree)
    import _compdnf

CompdnfError = _compdnf.CompdnfError
band_chains = _compdnf.band_chains
binomial = _compdnf.binomial
blake_dnf = _compdnf.blake_dnf
eval = _compdnf.eval
eval_dnf = _compdnf.eval_dnf
format_dnf = _compdnf.format_dnf
formula5_rank = _compdnf.formula5_rank
hansel = _compdnf.hansel
is_complete = _compdnf.is_complete
lower_rank = _compdnf.lower_rank
make_complete = _compdnf.make_complete
minimal_dnf = _compdnf.minimal_dnf
parse_dnf = _compdnf.parse_dnf
parse_matrix = _compdnf.parse_matrix
reduction_experiment = _compdnf.reduction_experiment
sample_P = _compdnf.sample_P
upper_rank = _compdnf.upper_rank
verify = _compdnf.verify
zero_set = _compdnf.zero_set

__all__ = [
    "CompdnfError",
    "assemble",
    "band_chains",
    "binomial",
    "blake_dnf",
    "conformance",
    "eval",
    "eval_dnf",
    "format_dnf",
    "formula5_rank",
    "hansel",
    "is_complete",
    "lower_rank",
    "make_complete",
    "minimal_dnf",
    "parse_dnf",
    "parse_matrix",
    "reduce",
    "reduction_experiment",
    "sample_P",
    "synthesize",
    "upper_rank",
    "verify",
    "zero_set",
]


def reduce(rows):
    """Return (reduced rows, reduction map as a dict)."""
    reduced, mapping = _compdnf.reduce(rows)
    return reduced, json.loads(mapping)


def assemble(reduced_terms, mapping):
    return _compdnf.assemble(reduced_terms, json.dumps(mapping))


def synthesize(rows, lambda_=None):
    """Return (terms, stats dict)."""
    terms, stats = _compdnf.synthesize(rows, lambda_)
    return terms, json.loads(stats)


def conformance(terms, rows, lambda_, chains=0):
    return json.loads(_compdnf.conformance(terms, rows, lambda_, chains))
