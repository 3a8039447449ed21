//! Homogeneous self-dual interior-point method with Nesterov-Todd scaling
//! and Mehrotra predictor-corrector steps, for linear-cost problems over
//! products of nonnegative, second-order and semidefinite cones.

use nalgebra::{DMatrix, DVector};

use super::cone::{ConeLayout, Scaling};
use super::{SolveStatus, SolverError, Tolerances};

/// Conic problem in the internal standard form
/// `min c'x  s.t.  A x = b,  G x + s = h,  s in K`.
#[derive(Debug, Clone)]
pub(crate) struct StandardConic {
    pub c: DVector<f64>,
    pub a: DMatrix<f64>,
    pub b: DVector<f64>,
    pub g: DMatrix<f64>,
    pub h: DVector<f64>,
    pub layout: ConeLayout,
}

#[derive(Debug, Clone)]
pub(crate) struct RawSolution {
    pub status: SolveStatus,
    /// Normalized primal/dual point; for infeasible statuses these hold the
    /// scaled certificate instead (see the status docs on `SolveReport`).
    pub x: DVector<f64>,
    pub y: DVector<f64>,
    pub z: DVector<f64>,
    pub s: DVector<f64>,
    pub iterations: usize,
}

struct Kkt<'a> {
    prob: &'a StandardConic,
    scaling: &'a Scaling,
    lu: nalgebra::FullPivLU<f64, nalgebra::Dyn, nalgebra::Dyn>,
}

impl<'a> Kkt<'a> {
    fn factor(prob: &'a StandardConic, scaling: &'a Scaling) -> Result<Self, SolverError> {
        let n = prob.c.len();
        let p = prob.b.len();
        // (W'W)^-1 G, column by column.
        let mut wig = DMatrix::zeros(prob.g.nrows(), n);
        for j in 0..n {
            let col = DVector::from_column_slice(prob.g.column(j).as_slice());
            wig.set_column(j, &scaling.apply_wtw_inv(&col));
        }
        let m = prob.g.transpose() * &wig;
        let mut kkt = DMatrix::zeros(n + p, n + p);
        kkt.view_mut((0, 0), (n, n)).copy_from(&m);
        if p > 0 {
            kkt.view_mut((0, n), (n, p)).copy_from(&prob.a.transpose());
            kkt.view_mut((n, 0), (p, n)).copy_from(&prob.a);
        }
        // Static regularization keeps the factorization well-posed when the
        // reduced block is rank deficient; refinement removes its effect.
        let delta = 1e-12 * (1.0 + m.amax());
        for i in 0..n {
            kkt[(i, i)] += delta;
        }
        for i in n..n + p {
            kkt[(i, i)] -= delta;
        }
        let lu = kkt.full_piv_lu();
        Ok(Kkt { prob, scaling, lu })
    }

    /// Solve the 3x3 system
    ///   A' uy + G' uz          = bx
    ///   A ux                   = by
    ///   G ux - W'W uz          = bz
    fn solve3(
        &self,
        bx: &DVector<f64>,
        by: &DVector<f64>,
        bz: &DVector<f64>,
    ) -> (DVector<f64>, DVector<f64>, DVector<f64>) {
        let (mut ux, mut uy, mut uz) = self.solve3_raw(bx, by, bz);
        // One round of iterative refinement against the unregularized system.
        for _ in 0..2 {
            let r1 = bx
                - (self.prob.a.transpose() * &uy + self.prob.g.transpose() * &uz);
            let r2 = by - &self.prob.a * &ux;
            let r3 = bz - (&self.prob.g * &ux - self.scaling.apply_wtw(&uz));
            let res = r1.norm() + r2.norm() + r3.norm();
            if res < 1e-13 * (1.0 + bx.norm() + by.norm() + bz.norm()) {
                break;
            }
            let (dx, dy, dz) = self.solve3_raw(&r1, &r2, &r3);
            ux += dx;
            uy += dy;
            uz += dz;
        }
        (ux, uy, uz)
    }

    fn solve3_raw(
        &self,
        bx: &DVector<f64>,
        by: &DVector<f64>,
        bz: &DVector<f64>,
    ) -> (DVector<f64>, DVector<f64>, DVector<f64>) {
        let n = self.prob.c.len();
        let p = self.prob.b.len();
        let wibz = self.scaling.apply_wtw_inv(bz);
        let rhs1 = bx + self.prob.g.transpose() * &wibz;
        let mut rhs = DVector::zeros(n + p);
        rhs.rows_mut(0, n).copy_from(&rhs1);
        if p > 0 {
            rhs.rows_mut(n, p).copy_from(by);
        }
        let sol = self.lu.solve(&rhs).unwrap_or_else(|| DVector::zeros(n + p));
        let ux = sol.rows(0, n).into_owned();
        let uy = sol.rows(n, p).into_owned();
        let gz = &self.prob.g * &ux - bz;
        let uz = self.scaling.apply_wtw_inv(&gz);
        (ux, uy, uz)
    }
}

pub(crate) fn solve_hsde(
    prob: &StandardConic,
    tol: &Tolerances,
) -> Result<RawSolution, SolverError> {
    let n = prob.c.len();
    let p = prob.b.len();
    let m = prob.g.nrows();
    if prob.a.ncols() != n || prob.g.ncols() != n || prob.b.len() != prob.a.nrows() {
        return Err(SolverError::DimensionMismatch(
            "constraint matrices do not match variable count".into(),
        ));
    }
    if prob.layout.dim != m || m == 0 {
        return Err(SolverError::DimensionMismatch(
            "cone layout does not match conic rows".into(),
        ));
    }

    let layout = &prob.layout;
    let e = layout.identity();
    let nu = (layout.degree + 1) as f64;

    // Initialization: least-squares style solves with identity scaling.
    let id_scaling = {
        let ones_s = e.clone() * 1.0;
        Scaling::compute(layout, &ones_s, &ones_s).ok_or_else(|| {
            SolverError::NumericalFailure("identity scaling".into())
        })?
    };
    let kkt0 = Kkt::factor(prob, &id_scaling)?;
    let (x0, _, z0) = kkt0.solve3(&DVector::zeros(n), &prob.b, &prob.h);
    let mut x = x0;
    let mut s = -&z0;
    let (_, y0, z1) = kkt0.solve3(&(-&prob.c), &DVector::zeros(p), &DVector::zeros(m));
    let mut y = y0;
    let mut z = z1;
    let shift = |v: &mut DVector<f64>| {
        let mg = layout.margin(v);
        if mg < 1e-8 * v.norm().max(1.0) {
            *v += &e * (1.0 - mg);
        }
    };
    shift(&mut s);
    shift(&mut z);
    let mut tau = 1.0f64;
    let mut kappa = 1.0f64;

    let norm_b = prob.b.norm().max(1.0);
    let norm_h = prob.h.norm().max(1.0);
    let norm_c = prob.c.norm().max(1.0);

    let mut iterations = 0;
    let mut stall_count = 0;

    for iter in 0..tol.max_iter {
        iterations = iter;

        // Residuals of the embedding.
        let rx = prob.a.transpose() * &y + prob.g.transpose() * &z + &prob.c * tau;
        let ry = &prob.a * &x - &prob.b * tau;
        let rz = &prob.g * &x + &s - &prob.h * tau;
        let rtau = prob.c.dot(&x) + prob.b.dot(&y) + prob.h.dot(&z) + kappa;

        let gap = s.dot(&z);
        let mu = (gap + tau * kappa) / nu;

        // Normalized stopping metrics.
        let pres = ((&ry / tau).norm() / norm_b).max((&rz / tau).norm() / norm_h);
        let dres = (&rx / tau).norm() / norm_c;
        let pcost = prob.c.dot(&x) / tau;
        let gapn = gap / (tau * tau);
        let relgap = gapn / (1.0 + pcost.abs());

        log::debug!(
            "ipm iter {iter}: pres {pres:.3e} dres {dres:.3e} gap {gapn:.3e} tau {tau:.3e} kappa {kappa:.3e}"
        );

        if pres <= tol.feas && dres <= tol.feas && (gapn <= tol.gap_abs || relgap <= tol.gap_rel) {
            return Ok(RawSolution {
                status: SolveStatus::Optimal,
                x: &x / tau,
                y: &y / tau,
                z: &z / tau,
                s: &s / tau,
                iterations: iter,
            });
        }

        // Primal infeasibility certificate: A'y + G'z = 0, h'z + b'y = -1, z in K*.
        let ipval = -(prob.h.dot(&z) + prob.b.dot(&y));
        if ipval > 0.0 {
            let yc = &y / ipval;
            let zc = &z / ipval;
            let res = (prob.a.transpose() * &yc + prob.g.transpose() * &zc).norm() / norm_c;
            if res <= tol.feas {
                return Ok(RawSolution {
                    status: SolveStatus::PrimalInfeasible,
                    x: DVector::zeros(n),
                    y: yc,
                    z: zc,
                    s: DVector::zeros(m),
                    iterations: iter,
                });
            }
        }

        // Dual infeasibility certificate: c'x = -1, A x = 0, G x + s = 0, s in K.
        let idval = -prob.c.dot(&x);
        if idval > 0.0 {
            let xc = &x / idval;
            let sc = &s / idval;
            let res = ((&prob.a * &xc).norm() / norm_b)
                .max(((&prob.g * &xc) + &sc).norm() / norm_h);
            if res <= tol.feas {
                return Ok(RawSolution {
                    status: SolveStatus::DualInfeasible,
                    x: xc,
                    y: DVector::zeros(p),
                    z: DVector::zeros(m),
                    s: sc,
                    iterations: iter,
                });
            }
        }

        let scaling = Scaling::compute(layout, &s, &z).ok_or_else(|| {
            SolverError::NumericalFailure("iterate left the cone interior".into())
        })?;
        let lambda = scaling.lambda.clone();
        let kkt = Kkt::factor(prob, &scaling)?;

        // Constant-column solve, shared by both directions this iteration.
        let (x1, y1, z1) = kkt.solve3(&(-&prob.c), &prob.b, &prob.h);

        let lam_lam = layout.jordan_prod(&lambda, &lambda);

        let mut solve_direction =
            |eta: f64, ds_rhs: &DVector<f64>, dkap_rhs: f64| -> (DVector<f64>, DVector<f64>, DVector<f64>, f64, DVector<f64>, f64) {
                let f = -(1.0 - eta);
                let lds = scaling.lambda_solve(ds_rhs);
                let btz = &rz * f - scaling.apply_wt(&lds);
                let (x0d, y0d, z0d) = kkt.solve3(&(&rx * f), &(&ry * f), &btz);
                let btau = rtau * f - dkap_rhs / tau;
                let denom =
                    prob.c.dot(&x1) + prob.b.dot(&y1) + prob.h.dot(&z1) - kappa / tau;
                let num = btau - (prob.c.dot(&x0d) + prob.b.dot(&y0d) + prob.h.dot(&z0d));
                let dtau = num / denom;
                let dx = &x0d + &x1 * dtau;
                let dy = &y0d + &y1 * dtau;
                let dz = &z0d + &z1 * dtau;
                // W^-T ds = lds - W dz; ds = W'(lds - W dz)
                let wdz = scaling.apply_w(&dz);
                let ds_scaled = &lds - &wdz;
                let ds = scaling.apply_wt(&ds_scaled);
                let dkap = (dkap_rhs - kappa * dtau) / tau;
                (dx, dy, dz, dtau, ds, dkap)
            };

        // Affine (predictor) direction.
        let ds_aff_rhs = -&lam_lam;
        let (dxa, dya, dza, dtaua, dsa, dkapa) = solve_direction(0.0, &ds_aff_rhs, -tau * kappa);

        let alpha_aff = {
            let mut a = layout.max_step(&s, &dsa).min(layout.max_step(&z, &dza));
            if dtaua < 0.0 {
                a = a.min(-tau / dtaua);
            }
            if dkapa < 0.0 {
                a = a.min(-kappa / dkapa);
            }
            a.min(1.0)
        };

        // Mehrotra centering parameter.
        let wdsa = {
            let lds = scaling.lambda_solve(&ds_aff_rhs);
            let wdza = scaling.apply_w(&dza);
            &lds - &wdza
        };
        let wdza = scaling.apply_w(&dza);
        let dsdz = wdsa.dot(&wdza) + dtaua * dkapa;
        let totalgap = gap + tau * kappa;
        let sigma = (1.0 - alpha_aff + dsdz / totalgap * alpha_aff * alpha_aff)
            .clamp(0.0, 1.0)
            .powi(3);

        // Combined (corrector) direction.
        let corr = layout.jordan_prod(&wdsa, &wdza);
        let ds_rhs = -&lam_lam + &e * (sigma * mu) - corr;
        let dkap_rhs = -tau * kappa + sigma * mu - dtaua * dkapa;
        let (dx, dy, dz, dtau, ds, dkap) = solve_direction(sigma, &ds_rhs, dkap_rhs);

        let alpha_max = {
            let mut a = layout.max_step(&s, &ds).min(layout.max_step(&z, &dz));
            if dtau < 0.0 {
                a = a.min(-tau / dtau);
            }
            if dkap < 0.0 {
                a = a.min(-kappa / dkap);
            }
            a
        };
        let alpha = (0.99 * alpha_max).min(1.0);

        if alpha < 1e-10 {
            stall_count += 1;
            if stall_count >= 2 {
                break;
            }
        } else {
            stall_count = 0;
        }

        x += &dx * alpha;
        y += &dy * alpha;
        z += &dz * alpha;
        s += &ds * alpha;
        tau += alpha * dtau;
        kappa += alpha * dkap;

        if !(tau > 0.0) || !tau.is_finite() {
            return Err(SolverError::NumericalFailure("tau collapsed".into()));
        }
    }

    Ok(RawSolution {
        status: SolveStatus::MaxIterations,
        x: &x / tau,
        y: &y / tau,
        z: &z / tau,
        s: &s / tau,
        iterations: iterations + 1,
    })
}
