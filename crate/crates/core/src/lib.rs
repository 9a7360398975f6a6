//! Homogeneous vector bundles on ADE flag varieties as quiver representations.
//!
//! The crate builds root systems and parabolic data, materializes the
//! tangent bundle of `G/P` as a representation of the Bondal–Kapranov quiver,
//! certifies its simplicity, and computes the cone of polarizations for which
//! it is slope stable, cross-checked against King's θ-stability.

pub mod error;
pub mod linalg;
pub mod parabolic;
pub mod poly;
pub mod quiver;
pub mod rootsys;
pub mod schubert;
pub mod stability;
pub mod surd;
pub mod tangentrep;

pub use error::{Error, Result};
pub use parabolic::{build_parabolic, LeviComponent, ParabolicData};
pub use quiver::{induced_quiver, relation_instances, verify_flatness, Arrow, ArrowMode, InducedQuiver, QuiverRep, Relation};
pub use rootsys::{build_root_system, RootSystemData, Series, SystemTag, Weight};
pub use poly::Poly;
pub use schubert::{
    intersection_number, intersection_polynomial, minimal_coset_reps, SchubertCalculus, SchubertCycle,
    WeylElement, DEFAULT_BUDGET,
};
pub use tangentrep::{
    closed_subsets, dominant_sum_check, hom_dimension, simplicity_report, structure_report,
    tangent_rep, SimplicityReport, TangentRep, Verdict,
};
pub use stability::{
    boundary_2d, c1_irreducible, c1_picard, cone_membership, equivalence_check, is_sigma_semistable,
    sigma_from_polarization, stability_cone, ConeInequality, ConeVerdict, KingVerdict, SigmaCharacter,
    SlopeInterval, TangentStability,
};
pub use surd::Surd;
