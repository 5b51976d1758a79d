//! Exact computation of multivariable Alexander invariants and of twisted
//! cohomology of hypersurface arrangement complements.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, cyclotomic numbers, exact dense linear algebra;
//! * [`laurent`]: the Laurent polynomial ring, gcds, torsion-point evaluation;
//! * [`modules`]: finitely presented modules, elementary ideals, supports;
//! * [`aomoto`]: graded-commutative algebras and the wedge-by-ω complex;
//! * [`residue`]: residue systems and admissible residue choices;
//! * [`pipeline`]: scenario-level computations (jumping loci, monodromy);
//! * [`scenario`] / [`report`]: JSON ingestion, bundled corpus and reports.

pub mod aomoto;
pub mod error;
pub mod exact;
pub mod exec;
mod json;
pub mod laurent;
pub mod modules;
pub mod pipeline;
pub mod report;
pub mod residue;
pub mod scenario;

pub use error::{Error, Result};
