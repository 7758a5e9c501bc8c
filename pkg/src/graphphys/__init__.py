"""graphphys: graphs as physical systems.

A numpy/scipy toolkit connecting graph structure to physics: adjacency
and Laplacian spectra, deletion-contraction polynomials and spin-model
partition functions, diagram integrand polynomials, resistor networks,
coupled oscillators, random ensembles, node importance, communities and
motifs, and dynamical processes -- plus a plain-text edge-list format
and a command-line front end.

The submodules are the primary API; the names re-exported here cover
the common entry points.
"""

from .errors import (
    AcyclicError,
    BadInitialStateError,
    BadParameterError,
    BridgeOrLoopError,
    DegenerateEnsembleError,
    DegenerateFitError,
    DirectedUnsupportedError,
    DisconnectedError,
    DuplicateEdgeError,
    EmptyGraphError,
    EtaTooSmallError,
    GraphPhysError,
    KTooSmallError,
    NoConvergenceError,
    NoExternalLegsError,
    NoSuchEdgeError,
    NotBipartiteError,
    NotSymmetricError,
    OddNodeCountError,
    OutOfRangeError,
    ParseError,
    SelfLoopError,
    SingularResolventError,
    TooLargeError,
)
from .graphs import (
    Graph,
    build_graph,
    adjacency_matrix,
    laplacian_matrix,
    incidence_matrix,
    shortest_path_distances,
    average_path_length,
    diameter,
    clustering,
    girth,
    connected_components,
    strongly_connected_components,
    is_connected,
    bipartition,
    maximum_bipartite_matching,
    path_graph,
    cycle_graph,
    complete_graph,
    star_graph,
    complete_bipartite_graph,
)
from .spectral import (
    Spectrum,
    eig_symmetric,
    adjacency_spectrum,
    laplacian_spectrum,
    resolvent,
    laplacian_pseudoinverse,
)
from .tutte import (
    Multigraph,
    multigraph_from_graph,
    tutte_polynomial,
    tutte_evaluations,
    chromatic_polynomial,
    chromatic_from_zero_T_limit,
    enumerate_states,
    potts_partition,
)
from .feynman import (
    FeynmanGraph,
    first_symanzik,
    second_symanzik,
    kirchhoff_polynomial,
)
from .tightbinding import (
    HuckelResult,
    NullityBounds,
    huckel_spectrum,
    total_pi_energy,
    energy_bounds,
    closed_form_spectrum,
    nullity,
    nullity_via_matching,
    nullity_bounds,
    girth_nullity_bound,
    lieb_total_spin,
    benzenoid_graph,
    polyacene_graph,
    pyrene_graph,
    triangulene_graph,
)
from .resistance import (
    resistance_distance,
    resistance_matrix,
    pseudoinverse_from_resistance,
    commute_time,
)
from .oscillators import (
    OscillatorParams,
    classical_partition,
    classical_green,
    quantum_partition,
    quantum_green,
)
from .statmech import spectral_partition, thermodynamics, communicability
from .centrality import (
    CentralityVector,
    degree_centrality,
    closeness_centrality,
    betweenness_centrality,
    katz_centrality,
    eigenvector_centrality,
    pagerank,
    subgraph_centrality,
)
from .ensembles import (
    erdos_renyi,
    er_theory,
    ERTheory,
    giant_component_fraction,
    semicircle_density,
    semicircle_cdf,
    ks_statistic,
    watts_strogatz,
    ws_theory,
    WSTheory,
    barabasi_albert,
    ba_theory,
    BATheory,
    degree_distribution,
    DegreeDistribution,
    fit_power_law,
    PowerLawFit,
    split_seed,
)
from .communities import (
    edge_betweenness,
    modularity,
    girvan_newman,
    GNLevel,
    GNResult,
    spectral_bisection,
    cosine_similarity_matrix,
    motif_census,
    MotifCensus,
    motif_zscore,
    MotifZScore,
    MOTIF_ALIASES,
)
from .dynamics import (
    Trajectory,
    consensus_continuous,
    consensus_discrete,
    sync_eigenratio,
    sync_verdict,
    SyncVerdict,
    sir_integrate,
    sis_integrate,
)
from .fileio import (
    EdgeListDocument,
    loads,
    dumps,
    load,
    dump,
    format_float,
    json_ready,
    trajectory_to_json,
    trajectory_to_csv,
)

__version__ = "0.1.0"
