//! Control-affine system and barrier-function abstractions, plus the three
//! benchmark plants used throughout the crate.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SystemError {
    #[error("state dimension {got} does not match system dimension {expect}")]
    DimensionMismatch { expect: usize, got: usize },
    #[error("state outside the declared domain box (coordinate {coord}, value {value})")]
    DomainViolation { coord: usize, value: f64 },
    #[error("non-finite coefficient values encountered")]
    NonFinite,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown benchmark id `{0}` (expected scalar, double_integrator or segway)")]
    UnknownBenchmark(String),
}

type StateFn = Arc<dyn Fn(&DVector<f64>) -> DVector<f64> + Send + Sync>;
type MatrixFn = Arc<dyn Fn(&DVector<f64>) -> DMatrix<f64> + Send + Sync>;
type ScalarFn = Arc<dyn Fn(&DVector<f64>) -> f64 + Send + Sync>;

/// Per-coordinate input bounds; entries may be infinite.
#[derive(Debug, Clone)]
pub struct InputBounds(pub Vec<(f64, f64)>);

impl InputBounds {
    pub fn unbounded(m: usize) -> Self {
        InputBounds(vec![(f64::NEG_INFINITY, f64::INFINITY); m])
    }

    pub fn symmetric(m: usize, limit: f64) -> Self {
        InputBounds(vec![(-limit, limit); m])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn clamp(&self, u: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(u.len(), |i, _| u[i].clamp(self.0[i].0, self.0[i].1))
    }

    pub fn contains(&self, u: &DVector<f64>, tol: f64) -> bool {
        u.iter()
            .zip(&self.0)
            .all(|(&ui, &(lo, hi))| ui >= lo - tol && ui <= hi + tol)
    }
}

/// Axis-aligned box on which the system evaluators are declared total.
#[derive(Debug, Clone)]
pub struct DomainBox(pub Vec<(f64, f64)>);

impl DomainBox {
    pub fn contains(&self, x: &DVector<f64>) -> Result<(), SystemError> {
        if x.len() != self.0.len() {
            return Err(SystemError::DimensionMismatch { expect: self.0.len(), got: x.len() });
        }
        for (i, (&xi, &(lo, hi))) in x.iter().zip(&self.0).enumerate() {
            if !(xi >= lo && xi <= hi) {
                return Err(SystemError::DomainViolation { coord: i, value: xi });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// Control-affine dynamics `xdot = f(x) + g(x) u` with declared domain and
/// input bounds. Immutable after construction; evaluators are pure.
#[derive(Clone)]
pub struct ControlAffineSystem {
    state_dim: usize,
    input_dim: usize,
    drift: StateFn,
    input_matrix: MatrixFn,
    pub input_bounds: InputBounds,
    pub domain: DomainBox,
}

impl ControlAffineSystem {
    pub fn new(
        state_dim: usize,
        input_dim: usize,
        drift: StateFn,
        input_matrix: MatrixFn,
        input_bounds: InputBounds,
        domain: DomainBox,
    ) -> Result<Self, SystemError> {
        if state_dim == 0 || input_dim == 0 {
            return Err(SystemError::InvalidParameter("zero state or input dimension".into()));
        }
        if input_bounds.dim() != input_dim {
            return Err(SystemError::DimensionMismatch {
                expect: input_dim,
                got: input_bounds.dim(),
            });
        }
        if domain.dim() != state_dim {
            return Err(SystemError::DimensionMismatch { expect: state_dim, got: domain.dim() });
        }
        Ok(ControlAffineSystem { state_dim, input_dim, drift, input_matrix, input_bounds, domain })
    }

    pub fn state_dim(&self) -> usize {
        self.state_dim
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn drift(&self, x: &DVector<f64>) -> DVector<f64> {
        (self.drift)(x)
    }

    pub fn input_matrix(&self, x: &DVector<f64>) -> DMatrix<f64> {
        (self.input_matrix)(x)
    }

    /// `f(x) + g(x) u`
    pub fn dynamics(&self, x: &DVector<f64>, u: &DVector<f64>) -> DVector<f64> {
        self.drift(x) + self.input_matrix(x) * u
    }
}

impl std::fmt::Debug for ControlAffineSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ControlAffineSystem")
            .field("state_dim", &self.state_dim)
            .field("input_dim", &self.input_dim)
            .finish_non_exhaustive()
    }
}

/// Barrier function `h` with its gradient and extended class-K rate `alpha`.
/// The safe set is `{x : h(x) >= 0}`.
#[derive(Clone)]
pub struct Cbf {
    barrier: ScalarFn,
    gradient: StateFn,
    alpha: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl Cbf {
    pub fn new(barrier: ScalarFn, gradient: StateFn) -> Self {
        Cbf { barrier, gradient, alpha: Arc::new(|s| s) }
    }

    pub fn with_alpha(mut self, alpha: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn barrier(&self, x: &DVector<f64>) -> f64 {
        (self.barrier)(x)
    }

    pub fn gradient(&self, x: &DVector<f64>) -> DVector<f64> {
        (self.gradient)(x)
    }

    pub fn alpha(&self, s: f64) -> f64 {
        (self.alpha)(s)
    }

    /// Checks the gradient against central finite differences at pseudo-random
    /// domain points; the relative error must stay below `tol`.
    pub fn validate_gradient(
        &self,
        domain: &DomainBox,
        points: usize,
        seed: u64,
        tol: f64,
    ) -> Result<(), SystemError> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = domain.dim();
        for _ in 0..points {
            let x = DVector::from_fn(n, |i, _| {
                let (lo, hi) = domain.0[i];
                // Stay off the box faces so the stencil remains inside.
                let w = hi - lo;
                rng.gen_range(lo + 0.05 * w..hi - 0.05 * w)
            });
            let grad = self.gradient(&x);
            let mut fd = DVector::zeros(n);
            for i in 0..n {
                let step = 1e-5 * (1.0 + x[i].abs());
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[i] += step;
                xm[i] -= step;
                fd[i] = (self.barrier(&xp) - self.barrier(&xm)) / (2.0 * step);
            }
            let err = (&grad - &fd).norm() / (1.0 + grad.norm());
            if err > tol {
                return Err(SystemError::InvalidParameter(format!(
                    "gradient mismatch {err:.3e} at a sampled point"
                )));
            }
        }
        Ok(())
    }

    /// Checks `alpha(0) = 0` and strict monotonicity on a sampled grid.
    pub fn validate_alpha(&self, lo: f64, hi: f64, points: usize) -> Result<(), SystemError> {
        if self.alpha(0.0).abs() > 1e-12 {
            return Err(SystemError::InvalidParameter("alpha(0) != 0".into()));
        }
        let mut prev = self.alpha(lo);
        for i in 1..points {
            let s = lo + (hi - lo) * i as f64 / (points - 1) as f64;
            let cur = self.alpha(s);
            if cur <= prev {
                return Err(SystemError::InvalidParameter(
                    "alpha not strictly increasing on the sampled grid".into(),
                ));
            }
            prev = cur;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Cbf {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Cbf { .. }")
    }
}

/// Coefficients of the barrier condition at a state: the condition reads
/// `a' u + b >= 0` with `a = L_g h` and `b = L_f h + alpha(h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CbfCoefficients {
    pub a: DVector<f64>,
    pub b: f64,
}

impl CbfCoefficients {
    /// Stacks the coefficients into a single point `(a, b)` in R^{m+1}.
    pub fn stacked(&self) -> DVector<f64> {
        let m = self.a.len();
        DVector::from_fn(m + 1, |i, _| if i < m { self.a[i] } else { self.b })
    }

    /// Value of the barrier condition `a'u + b` at an input.
    pub fn margin(&self, u: &DVector<f64>) -> f64 {
        self.a.dot(u) + self.b
    }
}

/// Evaluates the barrier-condition coefficients at a state inside the domain.
pub fn coefficients(
    system: &ControlAffineSystem,
    cbf: &Cbf,
    xi: &DVector<f64>,
) -> Result<CbfCoefficients, SystemError> {
    system.domain.contains(xi)?;
    let grad = cbf.gradient(xi);
    let a = (system.input_matrix(xi).transpose() * &grad).into_owned();
    let b = grad.dot(&system.drift(xi)) + cbf.alpha(cbf.barrier(xi));
    if !b.is_finite() || a.iter().any(|v| !v.is_finite()) {
        return Err(SystemError::NonFinite);
    }
    Ok(CbfCoefficients { a, b })
}

/// One-state benchmark: `xdot = x(x - 1.05)(x + 1.05) + (1 - x^2) u` with
/// barrier `h(x) = 1 - x^2`. The induced coefficients are
/// `a(x) = 2x(x^2 - 1)` and `b(x) = -2x^4 + 1.205x^2 + 1`.
pub fn scalar_benchmark() -> (ControlAffineSystem, Cbf) {
    let drift: StateFn = Arc::new(|x: &DVector<f64>| {
        let v = x[0];
        DVector::from_element(1, v * (v - 1.05) * (v + 1.05))
    });
    let g: MatrixFn =
        Arc::new(|x: &DVector<f64>| DMatrix::from_element(1, 1, 1.0 - x[0] * x[0]));
    let system = ControlAffineSystem::new(
        1,
        1,
        drift,
        g,
        InputBounds::symmetric(1, 100.0),
        DomainBox(vec![(-2.0, 2.0)]),
    )
    .expect("static benchmark definition");
    let cbf = Cbf::new(
        Arc::new(|x: &DVector<f64>| 1.0 - x[0] * x[0]),
        Arc::new(|x: &DVector<f64>| DVector::from_element(1, -2.0 * x[0])),
    );
    (system, cbf)
}

/// Double integrator `x1dot = x2, x2dot = u` with barrier
/// `h(x) = 1 - x1^2 - x2^2 - x1 x2`; coefficients `a(x) = -x1 - 2 x2`,
/// `b(x) = 1 - x1^2 - 2 x2^2 - 3 x1 x2`.
pub fn double_integrator_benchmark() -> (ControlAffineSystem, Cbf) {
    let drift: StateFn = Arc::new(|x: &DVector<f64>| DVector::from_vec(vec![x[1], 0.0]));
    let g: MatrixFn = Arc::new(|_: &DVector<f64>| DMatrix::from_column_slice(2, 1, &[0.0, 1.0]));
    let system = ControlAffineSystem::new(
        2,
        1,
        drift,
        g,
        InputBounds::symmetric(1, 100.0),
        DomainBox(vec![(-2.0, 2.0), (-2.0, 2.0)]),
    )
    .expect("static benchmark definition");
    let cbf = Cbf::new(
        Arc::new(|x: &DVector<f64>| 1.0 - x[0] * x[0] - x[1] * x[1] - x[0] * x[1]),
        Arc::new(|x: &DVector<f64>| {
            DVector::from_vec(vec![-2.0 * x[0] - x[1], -2.0 * x[1] - x[0]])
        }),
    );
    (system, cbf)
}

/// Physical parameters of the planar Segway model: a driven wheel plus an
/// inverted-pendulum body, actuated by a DC motor voltage. All units SI.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SegwayParams {
    /// Body plus rider mass.
    pub body_mass: f64,
    /// Wheel assembly mass (both wheels).
    pub wheel_mass: f64,
    pub wheel_radius: f64,
    /// Wheel assembly spin inertia.
    pub wheel_inertia: f64,
    /// Pivot-to-body center of mass distance.
    pub com_distance: f64,
    /// Body inertia about its center of mass.
    pub body_inertia: f64,
    /// Motor torque per volt (gearbox included).
    pub motor_torque_gain: f64,
    /// Back-EMF damping torque per unit relative speed.
    pub motor_damping: f64,
    pub gravity: f64,
}

impl Default for SegwayParams {
    fn default() -> Self {
        SegwayParams {
            body_mass: 44.8,
            wheel_mass: 4.5,
            wheel_radius: 0.195,
            wheel_inertia: 0.087,
            com_distance: 0.84,
            body_inertia: 3.9,
            motor_torque_gain: 1.6,
            motor_damping: 1.2,
            gravity: 9.81,
        }
    }
}

impl SegwayParams {
    pub fn validate(&self) -> Result<(), SystemError> {
        let fields = [
            ("body_mass", self.body_mass),
            ("wheel_mass", self.wheel_mass),
            ("wheel_radius", self.wheel_radius),
            ("wheel_inertia", self.wheel_inertia),
            ("com_distance", self.com_distance),
            ("body_inertia", self.body_inertia),
            ("motor_torque_gain", self.motor_torque_gain),
            ("motor_damping", self.motor_damping),
            ("gravity", self.gravity),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(SystemError::InvalidParameter(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        // Mass-matrix determinant must stay positive for all pitch angles.
        let mt = self.translational_inertia();
        let jt = self.rotational_inertia();
        let c = self.body_mass * self.com_distance;
        if mt * jt - c * c <= 0.0 {
            return Err(SystemError::InvalidParameter(
                "mass matrix is singular for the given parameters".into(),
            ));
        }
        Ok(())
    }

    fn translational_inertia(&self) -> f64 {
        self.wheel_mass + self.body_mass + self.wheel_inertia / (self.wheel_radius * self.wheel_radius)
    }

    fn rotational_inertia(&self) -> f64 {
        self.body_inertia + self.body_mass * self.com_distance * self.com_distance
    }
}

/// Planar Segway with state `(p, phi, v, omega)`: wheel position and speed,
/// body pitch angle and pitch rate. The input is the motor voltage.
///
/// Dynamics come from the wheel/inverted-pendulum force and torque balance
///   [ m_t          m_b L cos(phi) ] [ vdot     ]   [ m_b L sin(phi) w^2 + tau/R ]
///   [ m_b L cos(phi)    J_t       ] [ omegadot ] = [ m_b g L sin(phi) - tau     ]
/// with `m_t = m_w + m_b + I_w/R^2`, `J_t = J_b + m_b L^2` and motor torque
/// `tau = K_t u - K_d (v/R - omega)`.
///
/// The barrier restricts rotational motion:
/// `h(x) = 1 - (3 phi^2 + 2 phi omega + omega^2)`.
pub fn segway_benchmark(params: &SegwayParams) -> Result<(ControlAffineSystem, Cbf), SystemError> {
    params.validate()?;
    let p = params.clone();
    let mt = p.translational_inertia();
    let jt = p.rotational_inertia();
    let mbl = p.body_mass * p.com_distance;

    let mass_solve = move |phi: f64, rhs: [f64; 2]| -> [f64; 2] {
        let c = mbl * phi.cos();
        let det = mt * jt - c * c;
        [(jt * rhs[0] - c * rhs[1]) / det, (mt * rhs[1] - c * rhs[0]) / det]
    };

    let pd = p.clone();
    let ms = mass_solve;
    let drift: StateFn = Arc::new(move |x: &DVector<f64>| {
        let (phi, v, w) = (x[1], x[2], x[3]);
        let tau_d = -pd.motor_damping * (v / pd.wheel_radius - w);
        let rhs = [
            pd.body_mass * pd.com_distance * phi.sin() * w * w + tau_d / pd.wheel_radius,
            pd.body_mass * pd.gravity * pd.com_distance * phi.sin() - tau_d,
        ];
        let acc = ms(phi, rhs);
        DVector::from_vec(vec![v, w, acc[0], acc[1]])
    });

    let pg = p.clone();
    let g: MatrixFn = Arc::new(move |x: &DVector<f64>| {
        let phi = x[1];
        let rhs = [pg.motor_torque_gain / pg.wheel_radius, -pg.motor_torque_gain];
        let acc = mass_solve(phi, rhs);
        DMatrix::from_column_slice(4, 1, &[0.0, 0.0, acc[0], acc[1]])
    });

    let system = ControlAffineSystem::new(
        4,
        1,
        drift,
        g,
        InputBounds::symmetric(1, 100.0),
        DomainBox(vec![
            (-10.0, 10.0),
            (-std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2),
            (-5.0, 5.0),
            (-5.0, 5.0),
        ]),
    )?;
    let cbf = Cbf::new(
        Arc::new(|x: &DVector<f64>| {
            let (phi, w) = (x[1], x[3]);
            1.0 - (3.0 * phi * phi + 2.0 * phi * w + w * w)
        }),
        Arc::new(|x: &DVector<f64>| {
            let (phi, w) = (x[1], x[3]);
            DVector::from_vec(vec![0.0, -(6.0 * phi + 2.0 * w), 0.0, -(2.0 * phi + 2.0 * w)])
        }),
    );
    Ok((system, cbf))
}

/// Benchmark lookup by string id, as used by the experiment configs.
pub fn benchmark_by_id(
    id: &str,
    segway: Option<&SegwayParams>,
) -> Result<(ControlAffineSystem, Cbf), SystemError> {
    match id {
        "scalar" => Ok(scalar_benchmark()),
        "double_integrator" => Ok(double_integrator_benchmark()),
        "segway" => {
            let default_params;
            let params = match segway {
                Some(p) => p,
                None => {
                    default_params = SegwayParams::default();
                    &default_params
                }
            };
            segway_benchmark(params)
        }
        other => Err(SystemError::UnknownBenchmark(other.into())),
    }
}
