"""Locally testable codes as Cayley graphs over F2^h.

Exact desk-scale implementations of both directions of the code/graph
correspondence: testers and their smoothness/soundness reports, coset
metrics, Walsh-Hadamard spectra, LP-optimal testers (= least L1
distortion), soundness boosting, spectrum generators, small-set
expansion and 2-4 hypercontractivity checks.
"""

from .f2core import BitMatrix, BitVec, fwht, independence_width, kernel_basis, rank, rank_wrt
from .codes import (
    CosetTable,
    LinearCode,
    coset_table,
    dist_to_code,
    dual,
    make_code,
    min_distance,
)
from .testers import (
    Tester,
    TesterReport,
    boost,
    covradius_boost,
    optimal_certificate,
    optimal_tester,
    rej,
    smoothness,
    soundness,
)
# The submodule ltcg.spectrum owns the name "spectrum" at package level;
# the eigenvalue table function is exported as graph_spectrum.
from .cayley import (
    CayleyGraph,
    SpectrumTable,
    bfs_metric,
    code_from_graph,
    eigenvalue_rejection_identity,
    graph_from_code,
    tester_graph,
)
from .cayley import spectrum as graph_spectrum
from .spectrum import (
    SpectrumGenerator,
    expansion,
    hypercontractivity_check,
    ltc_from_sg,
    sg_from_ltc,
    sse_bound_check,
    verify_sg,
)
from .embed import (
    CutEmbedding,
    basis_tester_bound,
    character_cut_embedding,
    distortion,
    khot_naor_bound,
    linear_distortion,
    linearize,
)

__version__ = "0.1.0"
