//! Finite-structure engine for the noncommutative Stone/Pierce duality between
//! Steinberg semigroups/rings and category/ringoid bundles over ample groupoids.
//!
//! Everything here is table-based: semigroups and rings are multiplication
//! (and addition) tables over an ordered element list, categories and
//! groupoids are partial composition tables, and bundles are projection
//! functors between them. On finite carriers the discrete topology makes
//! "étale", "Hausdorff" and "ample" automatic, so no topology is represented.
//!
//! The main pipeline:
//!
//! * [`structured::StructuredData`] carries a semigroup or ring `A` with a
//!   marked subsemigroup `S`, a marked subset `Z ⊆ S` and an expectation
//!   `Φ : A → S`.
//! * [`relations`] decides the restriction (`≤`), domination (`<`) and
//!   orthogonality (`⊥`) relations by finite witness scans.
//! * [`axioms`] checks which structural profile a value satisfies, with a
//!   witness for every violated law.
//! * [`filters`] enumerates filters and ultrafilters of the `S`-part and
//!   assembles the ultrafilter groupoid.
//! * [`ultrafilter_bundle`] builds the dual bundle out of filter-equivalence
//!   classes, together with the representation `a ↦ â`.
//! * [`sections`] goes the other way: from a finite bundle to its section
//!   semigroup/ring.
//! * [`duality`] translates morphisms across the duality and verifies the
//!   round-trip isomorphisms η and ε.
//! * [`fixtures`] generates the canonical examples used throughout.
//!
//! All values are immutable after validation and every operation is a pure
//! function of its inputs. With the default `parallel` feature the heavy
//! scans run on rayon; disabling it falls back to identical sequential code.

pub mod axioms;
pub mod bundle;
pub mod category;
pub mod duality;
pub mod exec;
pub mod filters;
pub mod fixtures;
pub mod relations;
pub mod sections;
pub mod semigroup;
pub mod structured;
pub mod ultrafilter_bundle;

pub use bundle::{FiniteBundle, FiniteRingoidBundle};
pub use category::{FiniteCategory, FiniteGroupoid};
pub use semigroup::{FiniteRing, FiniteSemigroup};
pub use structured::{Carrier, QuasiCartanPair, StructuredData};
