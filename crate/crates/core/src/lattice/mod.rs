//! Lattice points of ℕ^p, addition-compatible total orders and rational cones.

mod cone;
mod order;
mod point;

pub use cone::Cone;
pub use order::{OrderKind, TotalOrder};
pub use point::{box_points, points_of_degree, pt, LatticePoint};
