//! Symmetric-cone machinery for the embedded interior-point solver:
//! block layout, Nesterov-Todd scalings, Jordan-algebra products and
//! boundary step lengths.

use nalgebra::{DMatrix, DVector};

pub(crate) const SQRT2: f64 = std::f64::consts::SQRT_2;

/// One cone block in a product cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConeSpec {
    /// Componentwise nonnegative block of the given length.
    NonNeg(usize),
    /// Second-order cone `{(t, x) : t >= ||x||}` of the given total dimension (>= 1).
    Soc(usize),
    /// Positive semidefinite block of the given matrix side; occupies
    /// `side*(side+1)/2` vectorized rows.
    Psd(usize),
}

impl ConeSpec {
    pub fn vec_dim(&self) -> usize {
        match *self {
            ConeSpec::NonNeg(l) => l,
            ConeSpec::Soc(q) => q,
            ConeSpec::Psd(k) => k * (k + 1) / 2,
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            ConeSpec::NonNeg(l) => l,
            ConeSpec::Soc(_) => 1,
            ConeSpec::Psd(k) => k,
        }
    }
}

/// Scaled vectorization of a symmetric matrix (column-major lower triangle,
/// off-diagonal entries multiplied by sqrt(2)) so that dot products of
/// vectorized matrices equal trace inner products.
pub(crate) fn svec(m: &DMatrix<f64>) -> DVector<f64> {
    let k = m.nrows();
    let mut v = Vec::with_capacity(k * (k + 1) / 2);
    for j in 0..k {
        for i in j..k {
            if i == j {
                v.push(m[(i, j)]);
            } else {
                v.push(SQRT2 * m[(i, j)]);
            }
        }
    }
    DVector::from_vec(v)
}

/// Inverse of [`svec`].
pub(crate) fn smat(v: &[f64], k: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(k, k);
    let mut idx = 0;
    for j in 0..k {
        for i in j..k {
            let val = if i == j { v[idx] } else { v[idx] / SQRT2 };
            m[(i, j)] = val;
            m[(j, i)] = val;
            idx += 1;
        }
    }
    m
}

/// Product-cone layout: block specs plus their offsets into the slack vector.
#[derive(Debug, Clone)]
pub(crate) struct ConeLayout {
    pub blocks: Vec<(ConeSpec, usize)>,
    pub dim: usize,
    pub degree: usize,
}

impl ConeLayout {
    pub fn new(specs: &[ConeSpec]) -> Self {
        let mut blocks = Vec::with_capacity(specs.len());
        let mut offset = 0;
        let mut degree = 0;
        for &spec in specs {
            blocks.push((spec, offset));
            offset += spec.vec_dim();
            degree += spec.degree();
        }
        ConeLayout { blocks, dim: offset, degree }
    }

    /// Jordan identity element of the product cone.
    pub fn identity(&self) -> DVector<f64> {
        let mut e = DVector::zeros(self.dim);
        for &(spec, off) in &self.blocks {
            match spec {
                ConeSpec::NonNeg(l) => {
                    for i in 0..l {
                        e[off + i] = 1.0;
                    }
                }
                ConeSpec::Soc(_) => e[off] = 1.0,
                ConeSpec::Psd(k) => {
                    let mut idx = off;
                    for j in 0..k {
                        e[idx] = 1.0;
                        idx += k - j;
                    }
                }
            }
        }
        e
    }

    /// Interiority margin: the largest `t` with `v - t*e` still in the cone.
    /// Positive for interior points, negative outside.
    pub fn margin(&self, v: &DVector<f64>) -> f64 {
        let mut m = f64::INFINITY;
        for &(spec, off) in &self.blocks {
            let block = v.as_slice();
            let bm = match spec {
                ConeSpec::NonNeg(l) => block[off..off + l]
                    .iter()
                    .cloned()
                    .fold(f64::INFINITY, f64::min),
                ConeSpec::Soc(q) => {
                    let t = block[off];
                    let nx = norm(&block[off + 1..off + q]);
                    t - nx
                }
                ConeSpec::Psd(k) => {
                    let m = smat(&block[off..off + k * (k + 1) / 2], k);
                    min_eig(&m)
                }
            };
            m = m.min(bm);
        }
        m
    }

    /// Largest step `alpha` with `v + t*dv` in the cone for all `t` in `[0, alpha]`.
    /// Requires `v` interior. Returns `f64::INFINITY` when unbounded.
    pub fn max_step(&self, v: &DVector<f64>, dv: &DVector<f64>) -> f64 {
        let mut alpha = f64::INFINITY;
        for &(spec, off) in &self.blocks {
            let vb = v.as_slice();
            let db = dv.as_slice();
            let a = match spec {
                ConeSpec::NonNeg(l) => {
                    let mut a = f64::INFINITY;
                    for i in 0..l {
                        if db[off + i] < 0.0 {
                            a = a.min(-vb[off + i] / db[off + i]);
                        }
                    }
                    a
                }
                ConeSpec::Soc(q) => soc_max_step(&vb[off..off + q], &db[off..off + q]),
                ConeSpec::Psd(k) => {
                    let d = k * (k + 1) / 2;
                    psd_max_step(&smat(&vb[off..off + d], k), &smat(&db[off..off + d], k))
                }
            };
            alpha = alpha.min(a);
        }
        alpha.max(0.0)
    }

    /// Jordan product `a o b` blockwise.
    pub fn jordan_prod(&self, a: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.dim);
        for &(spec, off) in &self.blocks {
            match spec {
                ConeSpec::NonNeg(l) => {
                    for i in 0..l {
                        out[off + i] = a[off + i] * b[off + i];
                    }
                }
                ConeSpec::Soc(q) => {
                    let (ab, bb) = (&a.as_slice()[off..off + q], &b.as_slice()[off..off + q]);
                    out[off] = dot(ab, bb);
                    for i in 1..q {
                        out[off + i] = ab[0] * bb[i] + bb[0] * ab[i];
                    }
                }
                ConeSpec::Psd(k) => {
                    let d = k * (k + 1) / 2;
                    let am = smat(&a.as_slice()[off..off + d], k);
                    let bm = smat(&b.as_slice()[off..off + d], k);
                    let prod = (&am * &bm + &bm * &am) * 0.5;
                    out.rows_mut(off, d).copy_from(&svec(&prod));
                }
            }
        }
        out
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn min_eig(m: &DMatrix<f64>) -> f64 {
    nalgebra::SymmetricEigen::new(m.clone())
        .eigenvalues
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min)
}

/// Smallest positive root of `(v0 + a*d0)^2 - ||v1 + a*d1||^2 = 0`, the first
/// boundary crossing of a second-order cone from an interior point.
fn soc_max_step(v: &[f64], d: &[f64]) -> f64 {
    let (v0, v1) = (v[0], &v[1..]);
    let (d0, d1) = (d[0], &d[1..]);
    let a = d0 * d0 - dot(d1, d1);
    let b = 2.0 * (v0 * d0 - dot(v1, d1));
    let c = v0 * v0 - dot(v1, v1);
    smallest_positive_root(a, b, c)
}

fn smallest_positive_root(a: f64, b: f64, c: f64) -> f64 {
    let eps = 1e-300;
    if a.abs() < eps {
        if b.abs() < eps {
            return f64::INFINITY;
        }
        let r = -c / b;
        return if r > 0.0 { r } else { f64::INFINITY };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return f64::INFINITY;
    }
    let sq = disc.sqrt();
    // Stable quadratic roots.
    let q = -0.5 * (b + b.signum() * sq);
    let mut roots = [q / a, if q.abs() < eps { f64::INFINITY } else { c / q }];
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    for r in roots {
        if r > 0.0 && r.is_finite() {
            return r;
        }
    }
    f64::INFINITY
}

fn psd_max_step(v: &DMatrix<f64>, d: &DMatrix<f64>) -> f64 {
    let chol = match nalgebra::Cholesky::new(v.clone()) {
        Some(c) => c,
        // Not strictly interior: fall back to a bisection on the margin.
        None => return psd_max_step_bisect(v, d),
    };
    let l = chol.l();
    // M = L^-1 D L^-T
    let n = l.solve_lower_triangular(d).unwrap_or_else(|| d.clone());
    let m = l
        .solve_lower_triangular(&n.transpose())
        .unwrap_or_else(|| n.transpose())
        .transpose();
    let sym = (&m + m.transpose()) * 0.5;
    let lam = min_eig(&sym);
    if lam >= 0.0 {
        f64::INFINITY
    } else {
        -1.0 / lam
    }
}

fn psd_max_step_bisect(v: &DMatrix<f64>, d: &DMatrix<f64>) -> f64 {
    let mut lo = 0.0;
    let mut hi = 1.0;
    if min_eig(&(v + d * hi)) >= 0.0 {
        return f64::INFINITY;
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if min_eig(&(v + d * mid)) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Nesterov-Todd scaling for one block.
#[derive(Debug, Clone)]
pub(crate) enum BlockScaling {
    NonNeg {
        w: Vec<f64>,
    },
    /// `W = beta * (2 v v' - J)` with `v' J v = 1`.
    Soc {
        beta: f64,
        v: Vec<f64>,
    },
    Psd {
        r: DMatrix<f64>,
        rinv: DMatrix<f64>,
        t: DMatrix<f64>,
        tinv: DMatrix<f64>,
        sigma: Vec<f64>,
    },
}

/// Nesterov-Todd scaling of a product cone at an interior primal-dual pair,
/// satisfying `W z = W^-T s = lambda`.
#[derive(Debug, Clone)]
pub(crate) struct Scaling {
    pub blocks: Vec<(BlockScaling, ConeSpec, usize)>,
    pub lambda: DVector<f64>,
}

impl Scaling {
    pub fn compute(layout: &ConeLayout, s: &DVector<f64>, z: &DVector<f64>) -> Option<Scaling> {
        let mut blocks = Vec::with_capacity(layout.blocks.len());
        let mut lambda = DVector::zeros(layout.dim);
        for &(spec, off) in &layout.blocks {
            match spec {
                ConeSpec::NonNeg(l) => {
                    let mut w = Vec::with_capacity(l);
                    for i in 0..l {
                        let (si, zi) = (s[off + i], z[off + i]);
                        if si <= 0.0 || zi <= 0.0 {
                            return None;
                        }
                        w.push((si / zi).sqrt());
                        lambda[off + i] = (si * zi).sqrt();
                    }
                    blocks.push((BlockScaling::NonNeg { w }, spec, off));
                }
                ConeSpec::Soc(q) => {
                    let sb = &s.as_slice()[off..off + q];
                    let zb = &z.as_slice()[off..off + q];
                    let a = jnrm(sb);
                    let b = jnrm(zb);
                    if !(a > 0.0) || !(b > 0.0) {
                        return None;
                    }
                    let gamma = ((dot(sb, zb) / (a * b) + 1.0) / 2.0).sqrt();
                    // wbar = (s/a + J z/b) / (2 gamma)
                    let mut v: Vec<f64> = (0..q)
                        .map(|i| {
                            let jz = if i == 0 { zb[0] } else { -zb[i] };
                            (sb[i] / a + jz / b) / (2.0 * gamma)
                        })
                        .collect();
                    // Half-angle vector with v' J v = 1.
                    v[0] += 1.0;
                    let scale = 1.0 / (2.0 * v[0]).sqrt();
                    for vi in v.iter_mut() {
                        *vi *= scale;
                    }
                    let beta = (a / b).sqrt();
                    // Scaled point.
                    let sqab = (a * b).sqrt();
                    let dnm = sb[0] / a + zb[0] / b + 2.0 * gamma;
                    lambda[off] = gamma * sqab;
                    for i in 1..q {
                        lambda[off + i] = sqab
                            * ((gamma + zb[0] / b) / dnm * sb[i] / a
                                + (gamma + sb[0] / a) / dnm * zb[i] / b);
                    }
                    blocks.push((BlockScaling::Soc { beta, v }, spec, off));
                }
                ConeSpec::Psd(k) => {
                    let d = k * (k + 1) / 2;
                    let sm = smat(&s.as_slice()[off..off + d], k);
                    let zm = smat(&z.as_slice()[off..off + d], k);
                    let ls = nalgebra::Cholesky::new(sm)?.l();
                    let lz = nalgebra::Cholesky::new(zm)?.l();
                    let svd = nalgebra::SVD::new(lz.transpose() * &ls, true, true);
                    let u = svd.u.as_ref()?;
                    let vt = svd.v_t.as_ref()?;
                    let sigma: Vec<f64> = svd.singular_values.iter().cloned().collect();
                    if sigma.iter().any(|&x| x <= 0.0) {
                        return None;
                    }
                    let sig_inv_sqrt =
                        DMatrix::from_diagonal(&DVector::from_iterator(
                            k,
                            sigma.iter().map(|&x| 1.0 / x.sqrt()),
                        ));
                    let r = &ls * vt.transpose() * &sig_inv_sqrt;
                    let rinv = &sig_inv_sqrt * u.transpose() * lz.transpose();
                    let t = &r * r.transpose();
                    let tinv = rinv.transpose() * &rinv;
                    let lam_m = DMatrix::from_diagonal(&DVector::from_vec(sigma.clone()));
                    lambda.rows_mut(off, d).copy_from(&svec(&lam_m));
                    blocks.push((BlockScaling::Psd { r, rinv, t, tinv, sigma }, spec, off));
                }
            }
        }
        Some(Scaling { blocks, lambda })
    }

    /// `W v`
    pub fn apply_w(&self, v: &DVector<f64>) -> DVector<f64> {
        self.apply(v, Op::W)
    }

    /// `W' v`
    pub fn apply_wt(&self, v: &DVector<f64>) -> DVector<f64> {
        self.apply(v, Op::Wt)
    }

    /// `W^-T v`
    pub fn apply_wtinv(&self, v: &DVector<f64>) -> DVector<f64> {
        self.apply(v, Op::WtInv)
    }

    /// `W' W v`
    pub fn apply_wtw(&self, v: &DVector<f64>) -> DVector<f64> {
        self.apply(v, Op::WtW)
    }

    /// `(W' W)^-1 v`
    pub fn apply_wtw_inv(&self, v: &DVector<f64>) -> DVector<f64> {
        self.apply(v, Op::WtWInv)
    }

    fn apply(&self, v: &DVector<f64>, op: Op) -> DVector<f64> {
        let mut out = DVector::zeros(v.len());
        for (bs, spec, off) in &self.blocks {
            let off = *off;
            match bs {
                BlockScaling::NonNeg { w } => {
                    for (i, wi) in w.iter().enumerate() {
                        let f = match op {
                            Op::W | Op::Wt => *wi,
                            Op::WInv | Op::WtInv => 1.0 / wi,
                            Op::WtW => wi * wi,
                            Op::WtWInv => 1.0 / (wi * wi),
                        };
                        out[off + i] = f * v[off + i];
                    }
                }
                BlockScaling::Soc { beta, v: hv } => {
                    let q = spec.vec_dim();
                    let block = &v.as_slice()[off..off + q];
                    let res = match op {
                        Op::W | Op::Wt => soc_h(hv, block, *beta, false),
                        Op::WInv | Op::WtInv => soc_h(hv, block, 1.0 / beta, true),
                        Op::WtW => {
                            let t = soc_h(hv, block, *beta, false);
                            soc_h(hv, &t, *beta, false)
                        }
                        Op::WtWInv => {
                            let t = soc_h(hv, block, 1.0 / beta, true);
                            soc_h(hv, &t, 1.0 / beta, true)
                        }
                    };
                    out.rows_mut(off, q).copy_from_slice(&res);
                }
                BlockScaling::Psd { r, rinv, t, tinv, .. } => {
                    let k = match spec {
                        ConeSpec::Psd(k) => *k,
                        _ => unreachable!(),
                    };
                    let d = k * (k + 1) / 2;
                    let m = smat(&v.as_slice()[off..off + d], k);
                    let res = match op {
                        Op::W => r.transpose() * &m * r,
                        Op::Wt => r * &m * r.transpose(),
                        Op::WInv => rinv.transpose() * &m * rinv,
                        Op::WtInv => rinv * &m * rinv.transpose(),
                        Op::WtW => t * &m * t,
                        Op::WtWInv => tinv * &m * tinv,
                    };
                    out.rows_mut(off, d).copy_from(&svec(&res));
                }
            }
        }
        out
    }

    /// Solve `lambda o x = d` for `x` blockwise.
    pub fn lambda_solve(&self, d: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(d.len());
        for (bs, spec, off) in &self.blocks {
            let off = *off;
            match bs {
                BlockScaling::NonNeg { .. } => {
                    let l = spec.vec_dim();
                    for i in 0..l {
                        out[off + i] = d[off + i] / self.lambda[off + i];
                    }
                }
                BlockScaling::Soc { .. } => {
                    let q = spec.vec_dim();
                    let lb = &self.lambda.as_slice()[off..off + q];
                    let db = &d.as_slice()[off..off + q];
                    let detj = lb[0] * lb[0] - dot(&lb[1..], &lb[1..]);
                    let x0 = (lb[0] * db[0] - dot(&lb[1..], &db[1..])) / detj;
                    out[off] = x0;
                    for i in 1..q {
                        out[off + i] = (db[i] - x0 * lb[i]) / lb[0];
                    }
                }
                BlockScaling::Psd { sigma, .. } => {
                    let k = sigma.len();
                    let dd = k * (k + 1) / 2;
                    let dm = smat(&d.as_slice()[off..off + dd], k);
                    let mut x = DMatrix::zeros(k, k);
                    for i in 0..k {
                        for j in 0..k {
                            x[(i, j)] = 2.0 * dm[(i, j)] / (sigma[i] + sigma[j]);
                        }
                    }
                    out.rows_mut(off, dd).copy_from(&svec(&x));
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Op {
    W,
    Wt,
    #[allow(dead_code)]
    WInv,
    WtInv,
    WtW,
    WtWInv,
}

/// `scale * (2 v (v'u) - J u)`; with `inverse` set, applies `scale * J H(v) J u`.
fn soc_h(v: &[f64], u: &[f64], scale: f64, inverse: bool) -> Vec<f64> {
    let q = u.len();
    let ju: Vec<f64> = if inverse {
        (0..q).map(|i| if i == 0 { u[0] } else { -u[i] }).collect()
    } else {
        u.to_vec()
    };
    let vu = dot(v, &ju);
    let mut res: Vec<f64> = (0..q)
        .map(|i| {
            let jterm = if i == 0 { ju[0] } else { -ju[i] };
            2.0 * v[i] * vu - jterm
        })
        .collect();
    if inverse {
        for i in 1..q {
            res[i] = -res[i];
        }
    }
    for r in res.iter_mut() {
        *r *= scale;
    }
    res
}

fn jnrm(x: &[f64]) -> f64 {
    let sq = x[0] * x[0] - dot(&x[1..], &x[1..]);
    if sq <= 0.0 {
        0.0
    } else {
        sq.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn random_interior(spec: ConeSpec, rng: &mut ChaCha8Rng) -> DVector<f64> {
        match spec {
            ConeSpec::NonNeg(l) => {
                DVector::from_iterator(l, (0..l).map(|_| rng.gen_range(0.1..2.0)))
            }
            ConeSpec::Soc(q) => {
                let mut v: Vec<f64> = (0..q).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let nx = norm(&v[1..]);
                v[0] = nx + rng.gen_range(0.1..1.0);
                DVector::from_vec(v)
            }
            ConeSpec::Psd(k) => {
                let a = DMatrix::from_fn(k, k, |_, _| rng.gen_range(-1.0..1.0));
                let m = &a * a.transpose() + DMatrix::identity(k, k) * 0.2;
                svec(&m)
            }
        }
    }

    #[test]
    fn svec_roundtrip_preserves_inner_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let k = rng.gen_range(1..6);
            let a = DMatrix::from_fn(k, k, |_, _| rng.gen_range(-1.0..1.0));
            let a = (&a + a.transpose()) * 0.5;
            let b = DMatrix::from_fn(k, k, |_, _| rng.gen_range(-1.0..1.0));
            let b = (&b + b.transpose()) * 0.5;
            let back = smat(svec(&a).as_slice(), k);
            assert_relative_eq!(a, back, epsilon = 1e-14);
            let ip_vec = svec(&a).dot(&svec(&b));
            let ip_tr = (&a * &b).trace();
            assert_relative_eq!(ip_vec, ip_tr, epsilon = 1e-12);
        }
    }

    #[test]
    fn nt_scaling_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let specs = [ConeSpec::NonNeg(4), ConeSpec::Soc(3), ConeSpec::Psd(3)];
        let layout = ConeLayout::new(&specs);
        for _ in 0..25 {
            let mut s = DVector::zeros(layout.dim);
            let mut z = DVector::zeros(layout.dim);
            for &(spec, off) in &layout.blocks {
                s.rows_mut(off, spec.vec_dim())
                    .copy_from(&random_interior(spec, &mut rng));
                z.rows_mut(off, spec.vec_dim())
                    .copy_from(&random_interior(spec, &mut rng));
            }
            let sc = Scaling::compute(&layout, &s, &z).expect("interior pair");
            // W z = lambda = W^-T s
            let wz = sc.apply_w(&z);
            let wis = sc.apply_wtinv(&s);
            assert_relative_eq!(wz, sc.lambda, epsilon = 1e-9, max_relative = 1e-9);
            assert_relative_eq!(wis, sc.lambda, epsilon = 1e-9, max_relative = 1e-9);
            // W' lambda = s
            let wtl = sc.apply_wt(&sc.lambda);
            assert_relative_eq!(wtl, s, epsilon = 1e-9, max_relative = 1e-9);
            // (W'W)^-1 (W'W) v = v
            let v = DVector::from_fn(layout.dim, |i, _| ((i * 7 % 5) as f64) - 2.0);
            let back = sc.apply_wtw_inv(&sc.apply_wtw(&v));
            assert_relative_eq!(back, v, epsilon = 1e-8, max_relative = 1e-8);
            // lambda o lambda_solve(d) = d
            let d = DVector::from_fn(layout.dim, |i, _| (i as f64 * 0.37).sin());
            let x = sc.lambda_solve(&d);
            let prod = layout.jordan_prod(&sc.lambda, &x);
            assert_relative_eq!(prod, d, epsilon = 1e-9, max_relative = 1e-8);
        }
    }

    #[test]
    fn max_step_reaches_boundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let specs = [ConeSpec::NonNeg(3), ConeSpec::Soc(4), ConeSpec::Psd(3)];
        let layout = ConeLayout::new(&specs);
        for _ in 0..25 {
            let mut v = DVector::zeros(layout.dim);
            for &(spec, off) in &layout.blocks {
                v.rows_mut(off, spec.vec_dim())
                    .copy_from(&random_interior(spec, &mut rng));
            }
            let dv = DVector::from_fn(layout.dim, |i, _| ((i as f64) * 1.3).cos() - 0.4);
            let alpha = layout.max_step(&v, &dv);
            if alpha.is_finite() {
                let at = &v + &dv * alpha;
                assert!(layout.margin(&at) > -1e-7, "margin {}", layout.margin(&at));
                let beyond = &v + &dv * (alpha * 1.01 + 1e-9);
                assert!(layout.margin(&beyond) < 1e-9);
            } else {
                let far = &v + &dv * 1e6;
                assert!(layout.margin(&far) > -1e-6);
            }
        }
    }
}
