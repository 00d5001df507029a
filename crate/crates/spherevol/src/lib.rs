//! Maximum-volume polytopes inscribed in the unit sphere.
//!
//! The crate constructs the known optimal families (orthogonal products of
//! regular simplices, trigonometric cyclic polytopes), measures hull
//! volumes by facial-simplex decomposition, certifies first-order
//! stationarity of the vertex configuration, works with Gale diagrams of
//! polytopes with few vertices, solves the circulant Gram systems arising
//! from the Loewner-ellipsoid conditions of highly symmetric
//! configurations, and rediscovers optima with a multi-start fixed-point
//! ascent over the sphere.
//!
//! All geometry is generic over the scalar type through [`real::Real`];
//! concrete aliases for `f64` are exported at the crate root.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod gale;
pub mod gram;
pub mod io;
pub mod numerics;
pub mod optimizer;
pub mod polytope;
pub mod real;
pub mod stationarity;

pub use error::{Error, Result};
pub use real::Real;

/// Dense `f64` matrix.
pub type Matrix64 = numerics::Matrix<f64>;
/// Inscribed polytope over `f64`.
pub type Polytope64 = polytope::InscribedPolytope<f64>;
/// Boundary triangulation over `f64`.
pub type FacetComplex64 = polytope::FacetComplex<f64>;
/// Gale diagram over `f64`.
pub type GaleDiagram64 = gale::GaleDiagram<f64>;
/// Stationarity report over `f64`.
pub type StationarityReport64 = stationarity::StationarityReport<f64>;
/// Optimizer configuration over `f64`.
pub type OptimizerConfig64 = optimizer::OptimizerConfig<f64>;
/// Gram system over `f64`.
pub type GramSystem64 = gram::GramSystem<f64>;
