//! k-shapes, weak tableaux and the charge-preserving weak bijection.

pub mod error;
pub mod filling;
pub mod kshape;
pub mod kshape_tableau;
pub mod moves;
pub mod partition;
pub mod poset;
pub mod pushout;
pub mod verify;
pub mod weak;

pub use error::{Error, Result};
pub use kshape::{classify_string, is_k_shape, StringKind, StringOfCells};
pub use moves::{enumerate_moves, Move, Orientation};
pub use partition::{diag_count, residue, Cell, Partition, SkewShape};
pub use poset::{enumerate_paths, equivalence_classes, Path, PathClass, Poset};
pub use filling::Filling;
pub use kshape_tableau::{Cover, KShapeTableau};
pub use pushout::{full_descent, weak_bijection_standard, DescentRecord};
pub use weak::WeakTableau;
