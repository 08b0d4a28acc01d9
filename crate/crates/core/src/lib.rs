//! Adjacency spectra and graph energy: exact eigenvalue computation, an
//! even-power trace series whose truncations bound the energy from above,
//! exact censuses of the small subgraphs that drive the low traces, and
//! the resulting closed-form bound chain.
//!
//! The layers, bottom up:
//!
//! * [`graph`]: the simple-graph type plus edge-list and graph6 parsing,
//!   encoding, and the built-in families.
//! * [`spectral`]: dense symmetric eigenvalues with a residual contract,
//!   power-iteration spectral radius, and exact integer trace powers.
//! * [`series`]: the expansion of `E(G)` in traces of
//!   `B = (A / lambda1)^2 - I`, evaluated in exact rational arithmetic.
//! * [`census`]: subgraph counts by brute force and by closed formulas,
//!   and their translation into even adjacency moments.
//! * [`bounds`]: the `sqrt(2mn)` bound and the first three series
//!   truncations as closed forms, including the cubic girth-five special
//!   case.
//!
//! Everything downstream of the spectral radius refuses disconnected or
//! edgeless input rather than guessing a convention for them.
//!
//! ```
//! use graph_energy::{census_formulas, converge, energy_exact, generate, Family};
//!
//! let g = generate(Family::Cycle, 6)?;
//! let energy = energy_exact(&g)?;
//! assert!((energy - 8.0).abs() < 1e-12);
//!
//! // The hexagon contains one spanning 6-cycle and six 3-paths.
//! let census = census_formulas(&g)?;
//! assert_eq!((census.p3, census.c6), (6, 1));
//!
//! // The series estimate converges to the energy from above.
//! let conv = converge(&g, 1e-9, 512)?;
//! assert!(conv.converged && conv.estimate >= energy);
//! assert!((conv.estimate - energy).abs() < 1e-4);
//! # Ok::<(), graph_energy::Error>(())
//! ```

pub mod bounds;
pub mod census;
pub mod error;
pub mod graph;
pub mod series;
pub mod spectral;

pub use bounds::{
    bound1, bound2, bound3, bound_chain_report, fragment_first_term, fullerene_bound, mcclelland,
    BoundReport,
};
pub use census::{
    census_bruteforce, census_formulas, moments_from_census, SubgraphCensus,
    BRUTEFORCE_VERTEX_CAP,
};
pub use error::{Error, Result};
pub use graph::{
    generate, parse_edge_list, parse_graph6, validate, Family, Graph, ValidationReport,
    MAX_VERTICES,
};
pub use series::{
    binomial_half, converge, expansion, partial_sum, series_coefficient_alt, trace_b_power,
    Convergence, SeriesExpansion, DEFAULT_CONVERGE_TOL, DEFAULT_K_MAX, LAMBDA1_VALIDATION_TOL,
};
pub use spectral::{
    eigenvalues, energy_exact, spectral_radius, trace_power, Spectrum, DEFAULT_EIGEN_TOL,
    DEFAULT_POWER_TOL, TRACE_POWER_CAP,
};
