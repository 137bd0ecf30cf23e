//! Presentations of finite dimensional algebras and their Cartan matrices.

mod cartan;
mod poset;
mod quiver;
mod spec;

pub use cartan::{cartan_matrix, dim_hom_count, euler_form, extend_cartan, tits_form};
pub use poset::{all_posets, Poset};
pub use quiver::Quiver;
pub use spec::{AlgebraSpec, CartanBasis, LadderVariant};
