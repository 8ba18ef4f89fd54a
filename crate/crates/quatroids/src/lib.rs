//! Classification of the incidence types that eight distinct points in the
//! complex projective plane can exhibit with respect to lines (collinear
//! triples) and irreducible conics (co-conic sextuples), together with the
//! exact count of rational plane cubics through a generic configuration of
//! each type.
//!
//! Everything runs in exact arithmetic. The main entry points:
//!
//! * [`enumeration::generate_all_candidates`] lists all 126 candidate types
//!   up to relabeling (780617 labeled pairs) from a catalog of the 67
//!   realizable collinearity patterns, and flags the 76 of them through
//!   which irreducible cubics pass.
//! * [`realization::search_representative`] finds explicit rational
//!   coordinates realizing a given type, and
//!   [`realization::verify_representative`] checks one exactly.
//! * [`pencil::count_rational`] takes a configuration, forms the pencil of
//!   cubics through it, factors the degenerate members, and returns how
//!   many cubics in the pencil are rational over the ground field.
//! * [`enumeration::poset::build_poset`] assembles the specialization
//!   order on the 76 types.
//!
//! The `data` module embeds the expected classification table so every
//! computed quantity can be diffed against it.

pub mod algebra;
pub mod data;
pub mod enumeration;
pub mod pencil;
pub mod perm;
pub mod quatroid;
pub mod realization;
