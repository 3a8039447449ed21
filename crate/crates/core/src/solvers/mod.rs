//! Embedded conic optimization layer: linear and convex quadratic objectives
//! over products of nonnegative, second-order and small semidefinite cones,
//! solved by a primal-dual interior-point method with certified optimality
//! and infeasibility statuses.

mod cone;
mod ipm;

pub use cone::ConeSpec;
use cone::{svec, ConeLayout};
use ipm::StandardConic;
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix data is not symmetric: {0}")]
    NonSymmetric(String),
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    /// The constraints admit no solution; the report carries a Farkas-type
    /// certificate in `(y, z)` with `b'y + h'z = -1` and `A'y + G'z = 0`.
    PrimalInfeasible,
    /// The objective is unbounded below; the report carries a ray in `x`
    /// with `c'x = -1`, `A x = 0` and `G x + s = 0`.
    DualInfeasible,
    MaxIterations,
}

/// Solver stopping tolerances, scaled by problem norms inside the loop.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub feas: f64,
    pub gap_abs: f64,
    pub gap_rel: f64,
    pub max_iter: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { feas: 1e-9, gap_abs: 1e-9, gap_rel: 1e-9, max_iter: 200 }
    }
}

/// Conic problem
/// `min (1/2) x'Qx + c'x + c0  s.t.  A x = b,  G x + s = h,  s in K`,
/// with `K` a product of nonnegative, second-order and PSD blocks.
///
/// Constraints are accumulated through the `add_*` methods; cone blocks keep
/// the insertion order.
#[derive(Debug, Clone)]
pub struct ConicProblem {
    n: usize,
    q: Option<DMatrix<f64>>,
    c: DVector<f64>,
    c0: f64,
    a_rows: Vec<(DVector<f64>, f64)>,
    g: Vec<DVector<f64>>,
    h: Vec<f64>,
    cones: Vec<ConeSpec>,
}

impl ConicProblem {
    pub fn new(n: usize) -> Self {
        ConicProblem {
            n,
            q: None,
            c: DVector::zeros(n),
            c0: 0.0,
            a_rows: Vec::new(),
            g: Vec::new(),
            h: Vec::new(),
            cones: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn set_linear_cost(&mut self, c: DVector<f64>) -> Result<(), SolverError> {
        if c.len() != self.n {
            return Err(SolverError::DimensionMismatch("linear cost length".into()));
        }
        self.c = c;
        Ok(())
    }

    /// Sets the quadratic cost term `(1/2) x'Qx`; `Q` must be symmetric PSD.
    pub fn set_quadratic_cost(&mut self, q: DMatrix<f64>) -> Result<(), SolverError> {
        if q.nrows() != self.n || q.ncols() != self.n {
            return Err(SolverError::DimensionMismatch("quadratic cost shape".into()));
        }
        if (&q - q.transpose()).amax() > 1e-12 * (1.0 + q.amax()) {
            return Err(SolverError::NonSymmetric("quadratic cost".into()));
        }
        self.q = Some(q);
        Ok(())
    }

    pub fn set_cost_offset(&mut self, c0: f64) {
        self.c0 = c0;
    }

    pub fn add_equality(&mut self, row: DVector<f64>, rhs: f64) -> Result<(), SolverError> {
        if row.len() != self.n {
            return Err(SolverError::DimensionMismatch("equality row length".into()));
        }
        self.a_rows.push((row, rhs));
        Ok(())
    }

    /// Adds rows `g_i' x <= h_i` (slack in the nonnegative orthant).
    pub fn add_nonneg(&mut self, g: DMatrix<f64>, h: DVector<f64>) -> Result<(), SolverError> {
        self.add_block(g, h, |l| ConeSpec::NonNeg(l))
    }

    /// Adds the block constraint `h - G x` in the second-order cone.
    pub fn add_soc(&mut self, g: DMatrix<f64>, h: DVector<f64>) -> Result<(), SolverError> {
        if g.nrows() < 1 {
            return Err(SolverError::InvalidProblem("empty second-order cone".into()));
        }
        self.add_block(g, h, |l| ConeSpec::Soc(l))
    }

    /// Adds the linear matrix inequality `F0 + sum_i x_i F_i >= 0` as a PSD block.
    pub fn add_psd(&mut self, f0: &DMatrix<f64>, fi: &[DMatrix<f64>]) -> Result<(), SolverError> {
        let k = f0.nrows();
        if f0.ncols() != k {
            return Err(SolverError::DimensionMismatch("LMI constant term".into()));
        }
        if fi.len() != self.n {
            return Err(SolverError::DimensionMismatch(
                "LMI needs one coefficient matrix per variable".into(),
            ));
        }
        let sym_ok = |m: &DMatrix<f64>| (m - m.transpose()).amax() <= 1e-12 * (1.0 + m.amax());
        if !sym_ok(f0) {
            return Err(SolverError::NonSymmetric("LMI constant term".into()));
        }
        let d = k * (k + 1) / 2;
        let mut g = DMatrix::zeros(d, self.n);
        for (j, f) in fi.iter().enumerate() {
            if f.nrows() != k || f.ncols() != k {
                return Err(SolverError::DimensionMismatch("LMI coefficient shape".into()));
            }
            if !sym_ok(f) {
                return Err(SolverError::NonSymmetric(format!("LMI coefficient {j}")));
            }
            g.set_column(j, &(-svec(f)));
        }
        self.add_block(g, svec(f0), |_| ConeSpec::Psd(k))
    }

    fn add_block(
        &mut self,
        g: DMatrix<f64>,
        h: DVector<f64>,
        spec: impl Fn(usize) -> ConeSpec,
    ) -> Result<(), SolverError> {
        if g.ncols() != self.n || g.nrows() != h.len() {
            return Err(SolverError::DimensionMismatch("cone block shape".into()));
        }
        if g.nrows() == 0 {
            return Ok(());
        }
        for i in 0..g.nrows() {
            self.g.push(g.row(i).transpose());
            self.h.push(h[i]);
        }
        self.cones.push(spec(g.nrows()));
        Ok(())
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        if self.g.is_empty() {
            return Err(SolverError::InvalidProblem("no cone constraints".into()));
        }
        Ok(())
    }

    /// Objective value `(1/2) x'Qx + c'x + c0` at a point.
    pub fn objective_at(&self, x: &DVector<f64>) -> f64 {
        let quad = match &self.q {
            Some(q) => 0.5 * x.dot(&(q * x)),
            None => 0.0,
        };
        quad + self.c.dot(x) + self.c0
    }

    fn lower(&self) -> Result<Lowered, SolverError> {
        let n = self.n;
        let m = self.g.len();
        let p = self.a_rows.len();

        // Factor the quadratic term, if any, as Q = F'F.
        let factor = match &self.q {
            Some(q) if q.amax() > 0.0 => {
                let eig = nalgebra::SymmetricEigen::new(q.clone());
                let lmax = eig.eigenvalues.amax();
                let mut rows = Vec::new();
                for (i, &ev) in eig.eigenvalues.iter().enumerate() {
                    if ev < -1e-9 * (1.0 + lmax) {
                        return Err(SolverError::InvalidProblem(
                            "quadratic cost is not positive semidefinite".into(),
                        ));
                    }
                    if ev > 1e-12 * (1.0 + lmax) {
                        rows.push(eig.eigenvectors.column(i).transpose() * ev.sqrt());
                    }
                }
                if rows.is_empty() {
                    None
                } else {
                    let mut f = DMatrix::zeros(rows.len(), n);
                    for (i, r) in rows.iter().enumerate() {
                        f.row_mut(i).copy_from(r);
                    }
                    Some(f)
                }
            }
            _ => None,
        };

        let nt = if factor.is_some() { n + 1 } else { n };
        let r = factor.as_ref().map_or(0, |f| f.nrows());
        let mt = if factor.is_some() { m + r + 2 } else { m };

        let mut c = DVector::zeros(nt);
        c.rows_mut(0, n).copy_from(&self.c);
        let mut a = DMatrix::zeros(p, nt);
        let mut b = DVector::zeros(p);
        for (i, (row, rhs)) in self.a_rows.iter().enumerate() {
            a.view_mut((i, 0), (1, n)).copy_from(&row.transpose());
            b[i] = *rhs;
        }
        let mut g = DMatrix::zeros(mt, nt);
        let mut h = DVector::zeros(mt);
        for (i, row) in self.g.iter().enumerate() {
            g.view_mut((i, 0), (1, n)).copy_from(&row.transpose());
            h[i] = self.h[i];
        }
        let mut cones = self.cones.clone();

        if let Some(f) = &factor {
            // Epigraph variable w with ||Fx||^2 <= 2w, i.e. (1/2)x'Qx <= w,
            // encoded as (1 + 2w, 2 F x, 1 - 2w) in a second-order cone.
            c[n] = 1.0;
            let base = m;
            g[(base, n)] = -2.0;
            h[base] = 1.0;
            for i in 0..r {
                for j in 0..n {
                    g[(base + 1 + i, j)] = -2.0 * f[(i, j)];
                }
            }
            g[(base + 1 + r, n)] = 2.0;
            h[base + 1 + r] = 1.0;
            cones.push(ConeSpec::Soc(r + 2));
        }

        let layout = ConeLayout::new(&cones);
        Ok(Lowered {
            std: StandardConic { c, a, b, g, h, layout },
            n_user: n,
            m_user: m,
            has_epigraph: factor.is_some(),
        })
    }
}

struct Lowered {
    std: StandardConic,
    n_user: usize,
    m_user: usize,
    has_epigraph: bool,
}

/// Full solution data in the lowered standard form, kept for certificate
/// re-verification.
#[derive(Debug, Clone)]
struct InternalSolution {
    x: DVector<f64>,
    y: DVector<f64>,
    z: DVector<f64>,
    s: DVector<f64>,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub status: SolveStatus,
    /// Primal solution (original variables) at `Optimal`; the unbounded ray at
    /// `DualInfeasible`; zeros otherwise.
    pub x: DVector<f64>,
    /// Equality multipliers, or the Farkas certificate component at
    /// `PrimalInfeasible`.
    pub y: DVector<f64>,
    /// Cone multipliers on the user constraint rows.
    pub z: DVector<f64>,
    /// Cone slacks on the user constraint rows.
    pub s: DVector<f64>,
    pub objective: f64,
    pub dual_objective: f64,
    pub duality_gap: f64,
    pub primal_residual: f64,
    pub dual_residual: f64,
    pub iterations: usize,
    /// Result of the independent certificate re-check run by `solve`.
    pub certified: bool,
    internal: InternalSolution,
}

/// Solves a conic problem to the given tolerances.
pub fn solve(problem: &ConicProblem, tol: &Tolerances) -> Result<SolveReport, SolverError> {
    problem.validate()?;
    let lowered = problem.lower()?;
    let raw = ipm::solve_hsde(&lowered.std, tol)?;

    let n = lowered.n_user;
    let m = lowered.m_user;
    let x_user = raw.x.rows(0, n).into_owned();
    let z_user = raw.z.rows(0, m).into_owned();
    let s_user = raw.s.rows(0, m).into_owned();

    let (objective, dual_objective, gap, pres, dres) = report_metrics(&lowered, &raw, problem);

    let mut report = SolveReport {
        status: raw.status,
        x: x_user,
        y: raw.y.clone(),
        z: z_user,
        s: s_user,
        objective,
        dual_objective,
        duality_gap: gap,
        primal_residual: pres,
        dual_residual: dres,
        iterations: raw.iterations,
        certified: false,
        internal: InternalSolution { x: raw.x, y: raw.y, z: raw.z, s: raw.s },
    };
    report.certified = check_certificate_with(problem, &report, tol);
    Ok(report)
}

fn report_metrics(
    lowered: &Lowered,
    raw: &ipm::RawSolution,
    problem: &ConicProblem,
) -> (f64, f64, f64, f64, f64) {
    let std = &lowered.std;
    match raw.status {
        SolveStatus::Optimal | SolveStatus::MaxIterations => {
            let x_user = raw.x.rows(0, lowered.n_user).into_owned();
            let objective = problem.objective_at(&x_user);
            let dual_objective = -std.h.dot(&raw.z) - std.b.dot(&raw.y) + problem.c0;
            let pobj_lowered = std.c.dot(&raw.x) + problem.c0;
            let gap = pobj_lowered - dual_objective;
            let pres = ((&std.a * &raw.x - &std.b).norm() / std.b.norm().max(1.0))
                .max((&std.g * &raw.x + &raw.s - &std.h).norm() / std.h.norm().max(1.0));
            let dres = (std.a.transpose() * &raw.y + std.g.transpose() * &raw.z + &std.c)
                .norm()
                / std.c.norm().max(1.0);
            (objective, dual_objective, gap, pres, dres)
        }
        SolveStatus::PrimalInfeasible => {
            let dres =
                (std.a.transpose() * &raw.y + std.g.transpose() * &raw.z).norm();
            (f64::NAN, f64::NAN, f64::NAN, f64::INFINITY, dres)
        }
        SolveStatus::DualInfeasible => {
            let pres = ((&std.a * &raw.x).norm()).max((&std.g * &raw.x + &raw.s).norm());
            (f64::NEG_INFINITY, f64::NAN, f64::NAN, pres, f64::INFINITY)
        }
    }
}

/// Independently re-evaluates residuals, duality gap and cone membership of a
/// report against the problem data; true iff everything is within ten times
/// the solver tolerance.
pub fn check_certificate(problem: &ConicProblem, report: &SolveReport) -> bool {
    check_certificate_with(problem, report, &Tolerances::default())
}

fn check_certificate_with(problem: &ConicProblem, report: &SolveReport, tol: &Tolerances) -> bool {
    let lowered = match problem.lower() {
        Ok(l) => l,
        Err(_) => return false,
    };
    let std = &lowered.std;
    let int = &report.internal;
    let feas10 = 10.0 * tol.feas;

    // The user-facing primal must agree with the stored internal vector.
    if report.x.len() != lowered.n_user || int.x.len() != std.c.len() {
        return false;
    }

    match report.status {
        SolveStatus::Optimal => {
            let xw = int.x.rows(0, lowered.n_user).into_owned();
            if (&xw - &report.x).norm() > feas10 * (1.0 + report.x.norm()) {
                return false;
            }
            let pres = ((&std.a * &int.x - &std.b).norm() / std.b.norm().max(1.0))
                .max((&std.g * &int.x + &int.s - &std.h).norm() / std.h.norm().max(1.0));
            let dres = (std.a.transpose() * &int.y + std.g.transpose() * &int.z + &std.c)
                .norm()
                / std.c.norm().max(1.0);
            if pres > feas10 || dres > feas10 {
                return false;
            }
            // Cone membership of slack and multiplier.
            let scale_s = 1.0 + int.s.norm();
            let scale_z = 1.0 + int.z.norm();
            if std.layout.margin(&int.s) < -feas10 * scale_s
                || std.layout.margin(&int.z) < -feas10 * scale_z
            {
                return false;
            }
            // Duality gap, recomputed on the lowered form.
            let pobj = std.c.dot(&int.x);
            let dobj = -std.h.dot(&int.z) - std.b.dot(&int.y);
            let gap = (pobj - dobj).abs();
            gap <= 10.0 * (tol.gap_abs + tol.gap_rel * (1.0 + pobj.abs())).max(tol.gap_abs)
                || gap <= 1e-7 * (1.0 + report.objective.abs())
        }
        SolveStatus::PrimalInfeasible => {
            // Farkas certificate: z in K*, A'y + G'z = 0, b'y + h'z = -1.
            let val = std.b.dot(&int.y) + std.h.dot(&int.z);
            if (val + 1.0).abs() > 1e-6 {
                return false;
            }
            let res = (std.a.transpose() * &int.y + std.g.transpose() * &int.z).norm();
            let scale = 1.0 + int.y.norm() + int.z.norm();
            res <= feas10 * scale && std.layout.margin(&int.z) >= -feas10 * scale
        }
        SolveStatus::DualInfeasible => {
            let val = std.c.dot(&int.x);
            if (val + 1.0).abs() > 1e-6 {
                return false;
            }
            let scale = 1.0 + int.x.norm();
            let res = ((&std.a * &int.x).norm()).max((&std.g * &int.x + &int.s).norm());
            res <= feas10 * scale && std.layout.margin(&int.s) >= -feas10 * scale
        }
        SolveStatus::MaxIterations => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn solve_default(p: &ConicProblem) -> SolveReport {
        solve(p, &Tolerances::default()).expect("solver run")
    }

    /// min a+b over the box a in [-1,1], b in [0,2]; optimum -1 at (-1, 0).
    #[test]
    fn lp_box() {
        let mut p = ConicProblem::new(2);
        p.set_linear_cost(DVector::from_vec(vec![1.0, 1.0])).unwrap();
        let g = DMatrix::from_row_slice(4, 2, &[1.0, 0.0, -1.0, 0.0, 0.0, 1.0, 0.0, -1.0]);
        let h = DVector::from_vec(vec![1.0, 1.0, 2.0, 0.0]);
        p.add_nonneg(g, h).unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(r.certified);
        assert_relative_eq!(r.objective, -1.0, epsilon = 1e-7);
        assert_relative_eq!(r.x[0], -1.0, epsilon = 1e-6);
        assert_relative_eq!(r.x[1], 0.0, epsilon = 1e-6);
    }

    /// min ||u - 2||^2 s.t. u >= 3; optimum u = 3 with objective 1.
    #[test]
    fn qp_projection() {
        let mut p = ConicProblem::new(1);
        p.set_quadratic_cost(DMatrix::from_element(1, 1, 2.0)).unwrap();
        p.set_linear_cost(DVector::from_element(1, -4.0)).unwrap();
        p.set_cost_offset(4.0);
        p.add_nonneg(
            DMatrix::from_element(1, 1, -1.0),
            DVector::from_element(1, -3.0),
        )
        .unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(r.certified);
        assert_relative_eq!(r.x[0], 3.0, epsilon = 1e-7);
        assert_relative_eq!(r.objective, 1.0, epsilon = 1e-6);
    }

    /// min s s.t. diag(s, 1) >= 0; optimum s = 0 on the PSD boundary.
    #[test]
    fn sdp_diag_boundary() {
        let mut p = ConicProblem::new(1);
        p.set_linear_cost(DVector::from_element(1, 1.0)).unwrap();
        let f0 = DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 0.0, 1.0]);
        let f1 = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        p.add_psd(&f0, &[f1]).unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(r.certified);
        assert_relative_eq!(r.x[0], 0.0, epsilon = 1e-6);
    }

    /// Infeasible LP {u >= 1, u <= 0} must produce a checkable Farkas ray.
    #[test]
    fn lp_infeasible_certificate() {
        let mut p = ConicProblem::new(1);
        p.set_linear_cost(DVector::from_element(1, 0.0)).unwrap();
        let g = DMatrix::from_row_slice(2, 1, &[-1.0, 1.0]);
        let h = DVector::from_vec(vec![-1.0, 0.0]);
        p.add_nonneg(g, h).unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::PrimalInfeasible);
        assert!(r.certified);
        assert!(check_certificate(&p, &r));
    }

    /// Unbounded LP min -u over u >= 0 must report dual infeasibility.
    #[test]
    fn lp_unbounded_ray() {
        let mut p = ConicProblem::new(1);
        p.set_linear_cost(DVector::from_element(1, -1.0)).unwrap();
        p.add_nonneg(
            DMatrix::from_element(1, 1, -1.0),
            DVector::from_element(1, 0.0),
        )
        .unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::DualInfeasible);
        assert!(r.certified);
    }

    /// SOC projection: min ||u - d||^2 s.t. ||u|| <= 1 projects d radially.
    #[test]
    fn soc_ball_projection() {
        let d = [3.0, 4.0];
        let mut p = ConicProblem::new(2);
        p.set_quadratic_cost(DMatrix::identity(2, 2) * 2.0).unwrap();
        p.set_linear_cost(DVector::from_vec(vec![-2.0 * d[0], -2.0 * d[1]]))
            .unwrap();
        p.set_cost_offset(d[0] * d[0] + d[1] * d[1]);
        // (1, u) in SOC_3
        let g = DMatrix::from_row_slice(3, 2, &[0.0, 0.0, -1.0, 0.0, 0.0, -1.0]);
        let h = DVector::from_vec(vec![1.0, 0.0, 0.0]);
        p.add_soc(g, h).unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(r.certified);
        assert_relative_eq!(r.x[0], 0.6, epsilon = 1e-6);
        assert_relative_eq!(r.x[1], 0.8, epsilon = 1e-6);
    }

    /// QP with an equality constraint: min ||x||^2 s.t. x1 + x2 = 2.
    #[test]
    fn qp_equality() {
        let mut p = ConicProblem::new(2);
        p.set_quadratic_cost(DMatrix::identity(2, 2) * 2.0).unwrap();
        p.add_equality(DVector::from_vec(vec![1.0, 1.0]), 2.0).unwrap();
        // Loose box keeps the cone part nonempty.
        let g = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1.0]);
        p.add_nonneg(g, DVector::from_vec(vec![10.0, 10.0])).unwrap();
        let r = solve_default(&p);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(r.certified);
        assert_relative_eq!(r.x[0], 1.0, epsilon = 1e-6);
        assert_relative_eq!(r.x[1], 1.0, epsilon = 1e-6);
    }

    /// Diagonal SDP instances must match the equivalent LP.
    #[test]
    fn sdp_matches_lp_on_diagonal_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let n = 2;
            let k = 3;
            let c: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            // Random diagonal LMI: diag(d0) + sum x_i diag(di) >= 0, plus a box.
            let d0: Vec<f64> = (0..k).map(|_| rng.gen_range(0.5..2.0)).collect();
            let di: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect())
                .collect();

            let build = |as_sdp: bool| {
                let mut p = ConicProblem::new(n);
                p.set_linear_cost(DVector::from_vec(c.clone())).unwrap();
                let mut gb = DMatrix::zeros(2 * n, n);
                let mut hb = DVector::zeros(2 * n);
                for i in 0..n {
                    gb[(2 * i, i)] = 1.0;
                    hb[2 * i] = 5.0;
                    gb[(2 * i + 1, i)] = -1.0;
                    hb[2 * i + 1] = 5.0;
                }
                p.add_nonneg(gb, hb).unwrap();
                if as_sdp {
                    let f0 = DMatrix::from_diagonal(&DVector::from_vec(d0.clone()));
                    let fi: Vec<DMatrix<f64>> = di
                        .iter()
                        .map(|d| DMatrix::from_diagonal(&DVector::from_vec(d.clone())))
                        .collect();
                    p.add_psd(&f0, &fi).unwrap();
                } else {
                    let mut g = DMatrix::zeros(k, n);
                    let mut h = DVector::zeros(k);
                    for r in 0..k {
                        for i in 0..n {
                            g[(r, i)] = -di[i][r];
                        }
                        h[r] = d0[r];
                    }
                    p.add_nonneg(g, h).unwrap();
                }
                p
            };

            let r_sdp = solve_default(&build(true));
            let r_lp = solve_default(&build(false));
            assert_eq!(r_sdp.status, r_lp.status);
            if r_sdp.status == SolveStatus::Optimal {
                assert_relative_eq!(r_sdp.objective, r_lp.objective, epsilon = 1e-6);
            }
        }
    }

    /// Random bounded 2-D LPs cross-checked against vertex enumeration.
    #[test]
    fn lp_matches_vertex_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            // Bounded polygon: box plus a few random cuts through feasibility.
            let mut rows: Vec<[f64; 3]> = vec![
                [1.0, 0.0, rng.gen_range(0.5..3.0)],
                [-1.0, 0.0, rng.gen_range(0.5..3.0)],
                [0.0, 1.0, rng.gen_range(0.5..3.0)],
                [0.0, -1.0, rng.gen_range(0.5..3.0)],
            ];
            for _ in 0..rng.gen_range(0..8) {
                let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
                rows.push([th.cos(), th.sin(), rng.gen_range(0.2..2.5)]);
            }
            let c = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];

            // Oracle: enumerate pairwise intersections and take the best
            // feasible vertex.
            let mut best = f64::INFINITY;
            for i in 0..rows.len() {
                for j in i + 1..rows.len() {
                    let det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
                    if det.abs() < 1e-10 {
                        continue;
                    }
                    let x = (rows[i][2] * rows[j][1] - rows[i][1] * rows[j][2]) / det;
                    let y = (rows[i][0] * rows[j][2] - rows[i][2] * rows[j][0]) / det;
                    if rows
                        .iter()
                        .all(|r| r[0] * x + r[1] * y <= r[2] + 1e-9)
                    {
                        best = best.min(c[0] * x + c[1] * y);
                    }
                }
            }

            let mut p = ConicProblem::new(2);
            p.set_linear_cost(DVector::from_vec(vec![c[0], c[1]])).unwrap();
            let g = DMatrix::from_fn(rows.len(), 2, |i, j| rows[i][j]);
            let h = DVector::from_fn(rows.len(), |i, _| rows[i][2]);
            p.add_nonneg(g, h).unwrap();
            let r = solve_default(&p);
            assert_eq!(r.status, SolveStatus::Optimal);
            assert!(r.certified);
            assert_relative_eq!(r.objective, best, epsilon = 1e-8, max_relative = 1e-8);
        }
    }

    #[test]
    fn perturbed_primal_fails_certificate() {
        let mut p = ConicProblem::new(1);
        p.set_quadratic_cost(DMatrix::from_element(1, 1, 2.0)).unwrap();
        p.set_linear_cost(DVector::from_element(1, -4.0)).unwrap();
        p.add_nonneg(
            DMatrix::from_element(1, 1, -1.0),
            DVector::from_element(1, -3.0),
        )
        .unwrap();
        let mut r = solve_default(&p);
        assert!(check_certificate(&p, &r));
        r.x[0] += 1e-3;
        assert!(!check_certificate(&p, &r));
    }

    #[test]
    fn rejects_asymmetric_psd_data() {
        let mut p = ConicProblem::new(1);
        let f0 = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, -0.5, 1.0]);
        let f1 = DMatrix::identity(2, 2);
        assert!(matches!(
            p.add_psd(&f0, &[f1]),
            Err(SolverError::NonSymmetric(_))
        ));
    }
}
