//! Safety filtering for control-affine systems under bounded
//! state-estimation error.
//!
//! Given a state estimate and a compact set known to contain the estimation
//! error, the filters in this crate compute minimally invasive control inputs
//! whose barrier-function condition holds for every state consistent with the
//! estimate. The robust condition is handled by over-approximating the image
//! of the uncertainty set in coefficient space with a polytope or ellipsoid
//! and solving an exact dual reformulation (a QP in the polytopic case, an
//! SDP in the ellipsoidal case) with the embedded conic solver.

pub mod solvers;
pub mod systems;
