//! Exact Laplace spectra of the Aloff–Wallach space W^{1,1} under the
//! canonical variation g(t₀,t₁) of its 3-Sasaki metric.
//!
//! Everything is computed in exact rational arithmetic: Casimir values from
//! highest weights, branching multiplicities from Kostant partition
//! functions, and the merged spectrum up to any bound. An independent
//! Freudenthal-based oracle and an Sp(2) branching module serve as
//! cross-checks, and [`estimates`] holds the comparison bounds and
//! parameter conversions.

// Errors carry the offending exact values and only occur on cold paths.
#![allow(clippy::result_large_err)]

pub mod aloff_wallach;
pub mod error;
pub mod estimates;
pub mod freudenthal;
pub mod oracle;
pub mod rational;
pub mod sp2;
pub mod spectrum;

pub use aloff_wallach::{
    dim_so3, dim_su3, eigen_pair, eigenvalue_at, is_s1_spherical, multiplicity_m, partition,
    spherical_triples_lex, EigenPair, SphericalTriple,
};
pub use error::{Error, Result};
pub use estimates::{
    basic_lower_bound, constant_volume_point, convert_r_to_t, convert_sasaki_to_t, convert_t_to_r,
    convert_t_to_sasaki, curvature_regime, f1, f2, volume_factor, volume_normalized_eigenvalue,
    CurvatureRegime, F2Bound, NormalParams, SasakiFamily, SasakiParams,
};
pub use freudenthal::{
    casimir_eigenvalue, so3_casimir, sp2_casimir_killing, su3_casimir, su5_casimir_killing,
    BasisId, GramData, Weight,
};
pub use oracle::{BranchingOracle, WeightMultiset};
pub use rational::{int, parse_rational, ratio, Rational};
pub use sp2::{is_sp1prime_spherical, sp2_multiplicity, sp2_partition, Sp2Triple};
pub use spectrum::{
    aggregate_su3_multiplicity, basic_spectrum, build_spectrum, enumerate_spherical,
    fiber_spectrum, first_eigenvalue, first_eigenvalue_entry, su2_berger_spectrum,
    BergerEigenvalue, MetricParams, Spectrum, SpectrumEntry, SpectrumQuery,
};
