//! Exact Schubert calculus in the torus-equivariant quantum K-theory of
//! cominuscule flag varieties.
//!
//! The crate builds the cominuscule poset of each supported space
//! (Grassmannians, Lagrangian and maximal orthogonal Grassmannians,
//! quadrics, the Cayley plane and the Freudenthal variety), manipulates its
//! order ideals as Schubert indices, and computes ideal sheaves, their
//! quantizations, divisor Chevalley products, quantum K-metric pairings and
//! the det Q structure constants — all in exact integer/character
//! arithmetic.  The `verify` module runs the exhaustive identity checks,
//! and `oracle` provides an independent quantum-cohomology route used to
//! certify the curve-neighborhood distance in type A.

pub mod curves;
pub mod error;
pub mod gamma;
pub mod grassq;
pub mod io;
pub mod oracle;
pub mod poset;
pub mod qk;
pub mod roots;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
pub use poset::{build_poset, CominusculePoset, Space, SpaceKind};
pub use shapes::Shape;
