//! Poncelet triangle and N-gon families in concentric conic pairs, and the
//! cosine quantities they conserve.
//!
//! * [`elliptic`]: `K(m)` and Jacobi `sn`, `cn`, `dn`.
//! * [`conics`]: ellipses, the Cayley condition and the affine scalings
//!   between the incircle/confocal and circumcircle/excentral families.
//! * [`families`]: vertex constructors, derived triangles, billiard
//!   N-periodics and the caustic solver.
//! * [`invariants`]: closed-form targets and sweep statistics.
//! * [`loci`]: cosine-space curves and their implicit equations.
//! * [`oracle`]: ray-traced billiard checks.
//! * [`export`], [`cli`]: CSV/SVG output and the command line.

pub mod cli;
pub mod conics;
pub mod elliptic;
pub mod error;
pub mod export;
pub mod families;
pub mod geometry;
pub mod invariants;
pub mod loci;
pub mod oracle;

pub use conics::{ConicPair, Ellipse};
pub use error::{Error, Result};
pub use families::{FamilyKind, FamilySpec};
pub use geometry::{Polygon, Vec2};
pub use invariants::InvariantReport;
pub use loci::CosineTriple;
