//! Pointwise Clifford-algebra identities behind the Weitzenböck formula,
//! checked in an explicit complex matrix representation.
//!
//! Convention: `X·Y + Y·X = -2 g(X, Y)`, so every generator squares to `-Id`.
//! The frame is orthonormal, hence `X^k = X_k`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;
/// Residual ceiling for the identities on valid inputs.
pub const RESIDUAL_TOL: f64 = 1e-12;
/// Symmetry tolerance for Ricci-like inputs.
pub const SYMMETRY_TOL: f64 = 1e-14;

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CliffordError {
    #[error("Clifford representation supports 2 <= n <= 8, got {0}")]
    Dimension(usize),
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Generators `γ_1 … γ_n` of a representation of `Cl(n)` on `C^(2^⌊n/2⌋)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordRep {
    pub n: usize,
    pub generators: Vec<CMatrix>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli() -> [CMatrix; 3] {
    let z = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        CMatrix::from_row_slice(2, 2, &[z, one, one, z]),
        CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        CMatrix::from_row_slice(2, 2, &[one, z, z, -one]),
    ]
}

fn kron_all(factors: &[&CMatrix]) -> CMatrix {
    factors
        .iter()
        .fold(CMatrix::identity(1, 1), |acc, f| acc.kronecker(*f))
}

/// Iterated tensor-product construction: for `j < ⌊n/2⌋`,
/// `σ3^{⊗j} ⊗ σ1 ⊗ I^{⊗…}` and `σ3^{⊗j} ⊗ σ2 ⊗ I^{⊗…}`, plus `σ3^{⊗⌊n/2⌋}`
/// for odd `n`; each multiplied by `i` so that it squares to `-Id`.
pub fn build_rep(n: usize) -> Result<CliffordRep, CliffordError> {
    if !(MIN_DIM..=MAX_DIM).contains(&n) {
        return Err(CliffordError::Dimension(n));
    }
    let k = n / 2;
    let [s1, s2, s3] = pauli();
    let id2 = CMatrix::identity(2, 2);
    let i = c(0.0, 1.0);
    let mut generators = Vec::with_capacity(n);
    for j in 0..k {
        for s in [&s1, &s2] {
            let mut factors: Vec<&CMatrix> = vec![&s3; j];
            factors.push(s);
            factors.extend(std::iter::repeat(&id2).take(k - j - 1));
            generators.push(kron_all(&factors) * i);
        }
    }
    if n % 2 == 1 {
        let factors: Vec<&CMatrix> = vec![&s3; k];
        generators.push(kron_all(&factors) * i);
    }
    Ok(CliffordRep { n, generators })
}

impl CliffordRep {
    pub fn spinor_dim(&self) -> usize {
        self.generators[0].nrows()
    }

    /// Clifford action of the vector `v = Σ v_l e_l`.
    pub fn gamma(&self, v: &[f64]) -> CMatrix {
        let d = self.spinor_dim();
        let mut out = CMatrix::zeros(d, d);
        for (g, &vl) in self.generators.iter().zip(v) {
            if vl != 0.0 {
                out += g * c(vl, 0.0);
            }
        }
        out
    }

    /// Largest entry of `γ_i γ_j + γ_j γ_i + 2 δ_ij Id` over all pairs.
    pub fn anticommutator_defect(&self) -> f64 {
        let d = self.spinor_dim();
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let gi = &self.generators[i];
                let gj = &self.generators[j];
                let mut ac = gi * gj + gj * gi;
                if i == j {
                    ac += CMatrix::identity(d, d) * c(2.0, 0.0);
                }
                worst = ac.iter().map(|z| z.norm()).fold(worst, f64::max);
            }
        }
        worst
    }
}

/// Operator norm (largest singular value).
pub fn operator_norm(m: &CMatrix) -> f64 {
    m.clone().singular_values().max()
}

fn check_square(rep: &CliffordRep, s: &DMatrix<f64>) -> Result<(), CliffordError> {
    if s.nrows() != rep.n || s.ncols() != rep.n {
        return Err(CliffordError::Shape(format!(
            "expected {n}x{n} matrix, got {}x{}",
            s.nrows(),
            s.ncols(),
            n = rep.n
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceResiduals {
    pub residual_full: f64,
    pub residual_traceless: f64,
}

/// Residuals of `Σ_k γ_k γ(S e_k) = -tr(S) Id` and
/// `Σ_k γ_k γ((S - tr(S)/n) e_k) = 0` without the symmetry precondition.
/// Both vanish exactly when `S` is symmetric; the antisymmetric part of `S`
/// survives.
pub fn ricci_trace_residual(rep: &CliffordRep, s: &DMatrix<f64>) -> Result<TraceResiduals, CliffordError> {
    check_square(rep, s)?;
    let n = rep.n;
    let d = rep.spinor_dim();
    let trace = s.trace();
    let mut full = CMatrix::identity(d, d) * c(trace, 0.0);
    let mut free = CMatrix::zeros(d, d);
    for k in 0..n {
        let col: Vec<f64> = (0..n).map(|l| s[(l, k)]).collect();
        let mut col_free = col.clone();
        col_free[k] -= trace / n as f64;
        full += &rep.generators[k] * rep.gamma(&col);
        free += &rep.generators[k] * rep.gamma(&col_free);
    }
    Ok(TraceResiduals {
        residual_full: operator_norm(&full),
        residual_traceless: operator_norm(&free),
    })
}

/// Checked form of [`ricci_trace_residual`]: `S` must be symmetric to 1e-14.
pub fn verify_ricci_trace(rep: &CliffordRep, s: &DMatrix<f64>) -> Result<TraceResiduals, CliffordError> {
    check_square(rep, s)?;
    let scale = s.amax().max(1.0);
    let asym = (s - s.transpose()).amax();
    if asym > SYMMETRY_TOL * scale {
        return Err(CliffordError::NotSymmetric(asym));
    }
    ricci_trace_residual(rep, s)
}

/// Dense `n × n × n` real tensor, indexed `(k, j, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 { n, data: vec![0.0; n * n * n] }
    }

    pub fn from_nested(nested: &[Vec<Vec<f64>>]) -> Result<Self, CliffordError> {
        let n = nested.len();
        let mut t = Tensor3::zeros(n);
        for (k, plane) in nested.iter().enumerate() {
            if plane.len() != n || plane.iter().any(|row| row.len() != n) {
                return Err(CliffordError::Shape(format!("slice {k} is not {n}x{n}")));
            }
            for (j, row) in plane.iter().enumerate() {
                for (l, &v) in row.iter().enumerate() {
                    t[(k, j, l)] = v;
                }
            }
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Totally symmetric tensor; each value is computed once per index multiset
    /// so the symmetry is exact.
    pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut t = Tensor3::zeros(n);
        for k in 0..n {
            for j in k..n {
                for l in j..n {
                    let v: f64 = rng.gen_range(-1.0..1.0);
                    for (a, b, c) in [(k, j, l), (k, l, j), (j, k, l), (j, l, k), (l, k, j), (l, j, k)] {
                        t[(a, b, c)] = v;
                    }
                }
            }
        }
        t
    }

    /// `v_k = T(k, Y, ·)`.
    fn contract_middle(&self, y: &[f64]) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|k| {
                (0..self.n)
                    .map(|l| (0..self.n).map(|j| self[(k, j, l)] * y[j]).sum())
                    .collect()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize, usize)> for Tensor3 {
    type Output = f64;
    fn index(&self, (k, j, l): (usize, usize, usize)) -> &f64 {
        &self.data[(k * self.n + j) * self.n + l]
    }
}

impl std::ops::IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (k, j, l): (usize, usize, usize)) -> &mut f64 {
        &mut self.data[(k * self.n + j) * self.n + l]
    }
}

impl std::ops::Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        Tensor3 {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Operator norm of `Σ_k (γ(v_k) γ_k - γ_k γ(v_k))` with `v_k = T(k, Y, ·)`.
/// Zero whenever `T(k, Y, l) = T(l, Y, k)`.
pub fn verify_codazzi(rep: &CliffordRep, t: &Tensor3, y: &[f64]) -> Result<f64, CliffordError> {
    if t.dim() != rep.n || y.len() != rep.n {
        return Err(CliffordError::Shape(format!(
            "expected tensor and vector of dimension {}, got {} and {}",
            rep.n,
            t.dim(),
            y.len()
        )));
    }
    let d = rep.spinor_dim();
    let mut acc = CMatrix::zeros(d, d);
    for (k, vk) in t.contract_middle(y).iter().enumerate() {
        let gv = rep.gamma(vk);
        let gk = &rep.generators[k];
        acc += &gv * gk - gk * &gv;
    }
    Ok(operator_norm(&acc))
}

/// Random unit-Frobenius antisymmetric matrix.
fn unit_antisymmetric<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let mut a = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v: f64 = rng.gen_range(-1.0..1.0);
            a[(i, j)] = v;
            a[(j, i)] = -v;
        }
    }
    let norm = a.norm();
    a / norm
}

pub fn random_symmetric<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let mut s = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v: f64 = rng.gen_range(-1.0..1.0);
            s[(i, j)] = v;
            s[(j, i)] = v;
        }
    }
    s
}

fn random_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

/// Independent generator for instance `index` of a batch rooted at `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Trace-identity residual for a random symmetric matrix plus an
/// antisymmetric perturbation of Frobenius norm `eps`.
pub fn probe_ricci_trace(rep: &CliffordRep, seed: u64, eps: f64) -> f64 {
    let mut rng = instance_rng(seed, u64::MAX);
    let s = random_symmetric(rep.n, &mut rng) + unit_antisymmetric(rep.n, &mut rng) * eps;
    ricci_trace_residual(rep, &s).expect("shape matches").residual_full
}

/// Codazzi residual for a totally symmetric tensor plus a perturbation whose
/// `(k, Y, l)` contraction is an antisymmetric matrix of Frobenius norm `eps`.
pub fn probe_codazzi(rep: &CliffordRep, seed: u64, eps: f64) -> f64 {
    let n = rep.n;
    let mut rng = instance_rng(seed, u64::MAX - 1);
    let base = Tensor3::random_symmetric(n, &mut rng);
    let y = random_vector(n, &mut rng);
    let omega = unit_antisymmetric(n, &mut rng) * eps;
    let y2: f64 = y.iter().map(|v| v * v).sum();
    let mut pert = Tensor3::zeros(n);
    for k in 0..n {
        for j in 0..n {
            for l in 0..n {
                pert[(k, j, l)] = y[j] * omega[(k, l)] / y2;
            }
        }
    }
    verify_codazzi(rep, &(&base + &pert), &y).expect("shapes match")
}

/// Worst residuals over a seeded batch of random valid instances.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub anticommutator_defect: f64,
    pub max_ricci_trace_residual: f64,
    pub max_ricci_traceless_residual: f64,
    pub max_codazzi_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn run_batch(dim: usize, trials: usize, seed: u64) -> Result<VerificationSummary, CliffordError> {
    let rep = build_rep(dim)?;
    let (mut full, mut free, mut codazzi): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for i in 0..trials {
        let mut rng = instance_rng(seed, i as u64);
        let s = random_symmetric(dim, &mut rng);
        let r = verify_ricci_trace(&rep, &s)?;
        full = full.max(r.residual_full);
        free = free.max(r.residual_traceless);
        let t = Tensor3::random_symmetric(dim, &mut rng);
        let y = random_vector(dim, &mut rng);
        codazzi = codazzi.max(verify_codazzi(&rep, &t, &y)?);
    }
    let defect = rep.anticommutator_defect();
    let passed = defect == 0.0 && full <= RESIDUAL_TOL && free <= RESIDUAL_TOL && codazzi <= RESIDUAL_TOL;
    Ok(VerificationSummary {
        dim,
        trials,
        seed,
        anticommutator_defect: defect,
        max_ricci_trace_residual: full,
        max_ricci_traceless_residual: free,
        max_codazzi_residual: codazzi,
        tolerance: RESIDUAL_TOL,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_anticommute_exactly() {
        for n in MIN_DIM..=MAX_DIM {
            let rep = build_rep(n).unwrap();
            assert_eq!(rep.generators.len(), n);
            assert_eq!(rep.spinor_dim(), 1 << (n / 2));
            assert_eq!(rep.anticommutator_defect(), 0.0, "n = {n}");
        }
    }

    #[test]
    fn dimension_limits() {
        assert_eq!(build_rep(1), Err(CliffordError::Dimension(1)));
        assert_eq!(build_rep(9), Err(CliffordError::Dimension(9)));
    }

    #[test]
    fn identity_trace() {
        let rep = build_rep(4).unwrap();
        let sum = (0..4).fold(CMatrix::zeros(4, 4), |acc, k| acc + &rep.generators[k] * &rep.generators[k]);
        assert_eq!(sum, CMatrix::identity(4, 4) * c(-4.0, 0.0));
        let r = verify_ricci_trace(&rep, &DMatrix::identity(4, 4)).unwrap();
        assert_eq!(r.residual_full, 0.0);
        assert_eq!(r.residual_traceless, 0.0);
    }

    #[test]
    fn opposite_sign_convention_fails() {
        // With X·Y + Y·X = +2g the trace identity reads +tr(S).
        let rep = build_rep(4).unwrap();
        let flipped = CliffordRep {
            n: 4,
            generators: rep.generators.iter().map(|g| g * c(0.0, -1.0)).collect(),
        };
        let r = verify_ricci_trace(&flipped, &DMatrix::identity(4, 4)).unwrap();
        assert!((r.residual_full - 8.0).abs() < 1e-12);
    }

    #[test]
    fn random_symmetric_batch_n5() {
        let rep = build_rep(5).unwrap();
        for i in 0..1000 {
            let s = random_symmetric(5, &mut instance_rng(11, i));
            let r = verify_ricci_trace(&rep, &s).unwrap();
            assert!(r.residual_full < RESIDUAL_TOL && r.residual_traceless < RESIDUAL_TOL);
        }
    }

    #[test]
    fn asymmetric_input_rejected_but_probe_sees_it() {
        let rep = build_rep(3).unwrap();
        let mut s = DMatrix::<f64>::identity(3, 3);
        s[(0, 1)] = 1e-3;
        assert!(matches!(verify_ricci_trace(&rep, &s), Err(CliffordError::NotSymmetric(_))));
        assert!(probe_ricci_trace(&rep, 1, 1.0) >= 0.1);
    }

    #[test]
    fn trace_residual_is_linear_in_asymmetry() {
        let rep = build_rep(6).unwrap();
        let r: Vec<f64> = [1e-3, 1e-2, 1e-1].iter().map(|&e| probe_ricci_trace(&rep, 5, e)).collect();
        assert!((r[1] / r[0] - 10.0).abs() < 1e-6 && (r[2] / r[1] - 10.0).abs() < 1e-6, "{r:?}");
    }

    #[test]
    fn codazzi_zero_tensor() {
        let rep = build_rep(4).unwrap();
        assert_eq!(verify_codazzi(&rep, &Tensor3::zeros(4), &[1.0, 2.0, 3.0, 4.0]).unwrap(), 0.0);
    }

    #[test]
    fn codazzi_symmetric_instances() {
        let rep = build_rep(4).unwrap();
        for i in 0..1000 {
            let mut rng = instance_rng(3, i);
            let t = Tensor3::random_symmetric(4, &mut rng);
            let y = random_vector(4, &mut rng);
            assert!(verify_codazzi(&rep, &t, &y).unwrap() < RESIDUAL_TOL);
        }
    }

    #[test]
    fn codazzi_detects_asymmetry() {
        let rep = build_rep(4).unwrap();
        let mut t = Tensor3::zeros(4);
        t[(0, 0, 1)] = 1.0; // T(1, ·, 2) != T(2, ·, 1)
        let y = [1.0, 0.0, 0.0, 0.0];
        assert!(verify_codazzi(&rep, &t, &y).unwrap() > 0.0);
        assert!(probe_codazzi(&rep, 9, 1.0) >= 0.1);
    }

    #[test]
    fn codazzi_invariant_under_symmetric_shift() {
        let rep = build_rep(5).unwrap();
        let mut rng = instance_rng(21, 0);
        let mut t = Tensor3::random_symmetric(5, &mut rng);
        t[(1, 2, 3)] += 0.7;
        t[(4, 0, 2)] -= 0.3;
        let y = random_vector(5, &mut rng);
        let base = verify_codazzi(&rep, &t, &y).unwrap();
        let shifted = &t + &Tensor3::random_symmetric(5, &mut rng);
        let moved = verify_codazzi(&rep, &shifted, &y).unwrap();
        assert!(base > 0.1);
        assert!((base - moved).abs() < 1e-12 * base.max(1.0));
    }

    #[test]
    fn shape_errors() {
        let rep = build_rep(4).unwrap();
        assert!(matches!(verify_codazzi(&rep, &Tensor3::zeros(3), &[0.0; 4]), Err(CliffordError::Shape(_))));
        assert!(matches!(verify_codazzi(&rep, &Tensor3::zeros(4), &[0.0; 3]), Err(CliffordError::Shape(_))));
        assert!(Tensor3::from_nested(&[vec![vec![0.0; 2]; 2], vec![vec![0.0; 1]; 2]]).is_err());
        assert!(matches!(verify_ricci_trace(&rep, &DMatrix::zeros(3, 3)), Err(CliffordError::Shape(_))));
    }

    #[test]
    fn batch_is_deterministic() {
        let a = run_batch(4, 50, 42).unwrap();
        let b = run_batch(4, 50, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.passed);
    }
}
