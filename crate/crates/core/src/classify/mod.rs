//! Classification of real Clifford algebras and of the even subalgebras of
//! multivector-preserving gradings.
//!
//! Two independent routes are provided. [`tables`] evaluates the closed-form
//! classification (8-fold table for `Cl(p,q)`, the usual even parts, the
//! 4x8 table for `Cl0`, and the tensor-product normal form). [`structure`]
//! and [`reference`] compute an isomorphism fingerprint from exact linear
//! algebra on the regular representation, which [`table4`] uses to check the
//! tables cell by cell.

pub mod reference;
pub mod structure;
pub mod table4;
pub mod tables;

pub use reference::{expected_invariants, reference_structure};
pub use structure::{
    regular_representation, structural_invariants, StructuralInvariants, StructureConstants,
};
pub use table4::{verify_table4, Table4Cell, Table4Report};
pub use tables::{
    classify_cl0, classify_clifford, classify_complex, classify_even_part, table4_lookup,
    tensor_simplify, AlgebraClass, DivisionRing, SimpleComponent,
};
