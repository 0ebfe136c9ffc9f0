//! Exact mod-2 homology and cohomology of finitely generated abelian groups.
//!
//! The crate canonicalizes a group into invariant-factor form, derives the
//! mod-2 carrier (the quotient A/2, the 2-torsion subgroup, and the natural
//! map between them), and builds the cohomology ring as a quotient of a
//! symmetric algebra with the squares of the degree-1 generators rewritten
//! into the degree-2 generators. On top of that sit graded dimensions from
//! four independent routes, the filtration by powers of the degree-2 ideal,
//! Steenrod squares, induced maps, the homology-side duals, and a
//! bar-complex oracle that recomputes everything from scratch for finite
//! 2-groups.
//!
//! Everything is exact GF(2) / integer arithmetic; identical inputs always
//! produce identical outputs.

pub mod abelian;
pub mod bar;
mod error;
pub mod gf2;
pub mod graded;
pub mod homology;
pub mod ring;

pub use abelian::{
    parse_relation_matrix, smith_normal_form, FgAbGroup, GroupHom, InducedTriple, IntMatrix,
    ModTwoTriple, Snf,
};
pub use bar::{
    verify_relations, BarCochain, BarComplex, CanonicalCocycles, FiniteGroup, RelationCertificate,
    SpanCheck,
};
pub use error::{Error, Result};
pub use gf2::{BitVec, Gf2Matrix};
pub use graded::{hilbert_series_oracle, predicted_dims, GradedDims};
pub use homology::{
    h2_h3_sequences, h2_map, h3_map, homology_dim, hopf_series_check, psi_filtration,
    H2H3Certificates, HomologyReport, HopfSeriesCheck, SequenceCheck,
};
pub use ring::{
    cohomology_map, ring_isomorphism_witness, FiltrationReport, Monomial, RingElement, RingMap,
    RingPresentation, WitnessReport,
};

/// Default memory budget for the bar oracle: 2 GiB.
pub const DEFAULT_BAR_BUDGET_BYTES: u64 = 2 << 30;
