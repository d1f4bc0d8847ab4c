//! Massless free-field identities at desk scale: the wave operator on plane
//! waves via finite differences, the rank condition behind the Weyl
//! equation, and the homogeneous Maxwell identities for field strengths
//! built from symmetric spinor amplitudes.
//!
//! The momentum-space side of each identity is exact rational algebra; the
//! position-space side is an independent floating-point check on a sampled
//! grid with the plane-wave phase convention `ψ(x) = exp(-i k·x)`,
//! `k·x = k₀x⁰ - k⃗·x⃗`.

use crate::scalar::{c_zero, norm_sqr, C, RealScalar};
use crate::spinor::{pauli_matrices, sigma_contract, spinor_to_null, FourVector, Matrix2, Spinor};
use num_complex::Complex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FieldError {
    #[error("grid extent {0} too small for the central-difference stencil")]
    GridTooSmall(usize),
    #[error("zero spinor has no rank-1 factorization")]
    ZeroSpinor,
    #[error("wave vector is not null within tolerance")]
    NotNull,
    #[error("spinor amplitude is not symmetric")]
    NotSymmetric,
}

/// Tolerance for the null check and for symmetry of amplitudes in the float
/// backend; the rational backend demands exact equality.
pub const FIELD_TOL: f64 = 1e-10;

/// Plane wave `exp(-i k·x)` sampled on a centered hypercubic grid.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    pub k: FourVector<f64>,
    /// Grid spacing.
    pub h: f64,
    /// Points per axis.
    pub extent: usize,
}

impl PlaneWave {
    pub fn new(k: FourVector<f64>, h: f64, extent: usize) -> Self {
        PlaneWave { k, h, extent }
    }
}

/// Max-norm of the discrete d'Alembertian (second-order central differences,
/// signature `(+,-,-,-)`) over the interior grid points.
///
/// For a null carrier the residual is the pure stencil error, of size
/// `(h²/12)|k₀⁴ - Σkᵢ⁴|` to leading order; for a timelike carrier it
/// converges to `|k·k|` as `h → 0`.
pub fn kg_residual(wave: &PlaneWave) -> Result<f64, FieldError> {
    if wave.extent < 3 {
        return Err(FieldError::GridTooSmall(wave.extent));
    }
    let n = wave.extent;
    let h = wave.h;
    // Phase contribution of axis μ: +k₀ on the time axis, -kᵢ on space.
    let axis_coeff = [
        wave.k.components[0],
        -wave.k.components[1],
        -wave.k.components[2],
        -wave.k.components[3],
    ];
    // Separable samples: ψ(i) = Π_μ factor[μ][i_μ].
    let factors: Vec<Vec<Complex<f64>>> = (0..4)
        .map(|mu| {
            (0..n)
                .map(|i| {
                    let x = (i as f64 - (n as f64 - 1.0) / 2.0) * h;
                    Complex::from_polar(1.0, -axis_coeff[mu] * x)
                })
                .collect()
        })
        .collect();
    let psi = |idx: [usize; 4]| -> Complex<f64> {
        factors[0][idx[0]] * factors[1][idx[1]] * factors[2][idx[2]] * factors[3][idx[3]]
    };

    let mut max_residual = 0.0f64;
    for i0 in 1..n - 1 {
        for i1 in 1..n - 1 {
            for i2 in 1..n - 1 {
                for i3 in 1..n - 1 {
                    let idx = [i0, i1, i2, i3];
                    let center = psi(idx);
                    let second_diff = |axis: usize| {
                        let mut up = idx;
                        let mut down = idx;
                        up[axis] += 1;
                        down[axis] -= 1;
                        psi(up) + psi(down) - center * 2.0
                    };
                    let box_psi = (second_diff(0)
                        - second_diff(1)
                        - second_diff(2)
                        - second_diff(3))
                        / (h * h);
                    max_residual = max_residual.max(box_psi.norm());
                }
            }
        }
    }
    Ok(max_residual)
}

/// Residuals of the same wave across a list of spacings, for ratio tests.
pub fn kg_residuals(
    k: &FourVector<f64>,
    spacings: &[f64],
    extent: usize,
) -> Result<Vec<f64>, FieldError> {
    spacings
        .iter()
        .map(|&h| kg_residual(&PlaneWave::new(k.clone(), h, extent)))
        .collect()
}

/// The rank-condition report for the bispinor form of a null vector.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylReport<R: RealScalar> {
    /// `σ^μ k_μ` for `k = spinor_to_null(u)`.
    pub matrix: Matrix2<R>,
    pub det: C<R>,
    pub rank: usize,
    /// Spanning vector of the kernel, Hermitian-orthogonal to `u`.
    pub kernel: Spinor<R>,
}

/// Checks the rank-1 factorization behind the Weyl equation: for
/// `k = spinor_to_null(u)` the matrix `σ^μ k_μ = 2 u u†` has determinant
/// zero, rank one, and kernel spanned by `(-ū¹, ū⁰)`, the Hermitian
/// complement of `u`.
pub fn weyl_rank_check<R: RealScalar>(u: &Spinor<R>) -> Result<WeylReport<R>, FieldError> {
    if u.is_zero() {
        return Err(FieldError::ZeroSpinor);
    }
    let k = spinor_to_null(u);
    let matrix = sigma_contract(&k);
    let det = matrix.det();
    let nonzero = matrix
        .e
        .iter()
        .flatten()
        .any(|c| !norm_sqr(c).is_zero_within(0.0));
    let rank = if !nonzero {
        0
    } else if norm_sqr(&det).is_zero_within(FIELD_TOL * FIELD_TOL) {
        1
    } else {
        2
    };
    let kernel = Spinor::upper(-u.component(1).conj(), u.component(0).conj());
    Ok(WeylReport {
        matrix,
        det,
        rank,
        kernel,
    })
}

/// Basis pairing symmetric spinor amplitudes with 2-forms:
/// `N^{μν} = ε·¼(σ̃^μ σ^ν - σ̃^ν σ^μ)` with `σ̃ = (I, -σ⃗)`. Each `N^{μν}` is a
/// symmetric 2×2 matrix, antisymmetric in `μν`. The epsilon factor sits on
/// the left so that the plain outer square of the spinor behind a null
/// carrier satisfies the cyclic identity; the σ̃σ block is the one that pairs
/// with the unconjugated slot of the null map.
fn self_dual_basis<R: RealScalar>() -> [[Matrix2<R>; 4]; 4] {
    let sigma = pauli_matrices::<R>();
    let tilde: [Matrix2<R>; 4] = std::array::from_fn(|mu| {
        if mu == 0 {
            sigma[0].clone()
        } else {
            sigma[mu].neg()
        }
    });
    let eps = Matrix2::from_i64([[(0, 0), (1, 0)], [(-1, 0), (0, 0)]]);
    let quarter: C<R> = Complex::new(R::from_ratio(1, 4), R::zero());
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let a = tilde[mu].mul(&sigma[nu]);
            let b = tilde[nu].mul(&sigma[mu]);
            let diff = Matrix2::new(std::array::from_fn(|r| {
                std::array::from_fn(|c| {
                    (a.e[r][c].clone() - b.e[r][c].clone()) * quarter.clone()
                })
            }));
            eps.mul(&diff)
        })
    })
}

/// Plane-wave field-strength amplitude `f_{μν}` with its null carrier `k`;
/// the physical field is `Re[f_{μν} exp(-i k·x)]`. Antisymmetry in `μν` is
/// exact by construction and re-asserted by [`FieldStrength::is_antisymmetric`].
#[derive(Debug, Clone, PartialEq)]
pub struct FieldStrength<R: RealScalar> {
    amplitude: [[C<R>; 4]; 4],
    pub k: FourVector<R>,
}

impl<R: RealScalar> FieldStrength<R> {
    /// The zero field on a carrier.
    pub fn zero(k: FourVector<R>) -> Self {
        FieldStrength {
            amplitude: std::array::from_fn(|_| std::array::from_fn(|_| c_zero())),
            k,
        }
    }

    /// Builds the spin-1 amplitude from a symmetric spinor `φ_{AB}`:
    /// `f_{μν} = Σ_{AB} φ_{AB} N^{μν}_{AB}`. The recorded duality convention
    /// is `f̃ = -i·f` with `ε₀₁₂₃ = +1` (anti-self-dual amplitude); the
    /// conjugate amplitude carries the self-dual half of a real field.
    pub fn from_spinor_amplitude(
        phi: &Matrix2<R>,
        k: &FourVector<R>,
    ) -> Result<Self, FieldError> {
        let asym = phi.e[0][1].clone() - phi.e[1][0].clone();
        if !norm_sqr(&asym).is_zero_within(FIELD_TOL * FIELD_TOL) {
            return Err(FieldError::NotSymmetric);
        }
        if !k.norm().is_zero_within(FIELD_TOL) {
            return Err(FieldError::NotNull);
        }
        let basis = self_dual_basis::<R>();
        let amplitude = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                let mut acc = c_zero::<R>();
                for a in 0..2 {
                    for b in 0..2 {
                        acc = acc + phi.e[a][b].clone() * basis[mu][nu].e[a][b].clone();
                    }
                }
                acc
            })
        });
        Ok(FieldStrength {
            amplitude,
            k: k.clone(),
        })
    }

    pub fn amplitude(&self) -> &[[C<R>; 4]; 4] {
        &self.amplitude
    }

    pub fn is_antisymmetric(&self) -> bool {
        for mu in 0..4 {
            for nu in 0..4 {
                let sum = self.amplitude[mu][nu].clone() + self.amplitude[nu][mu].clone();
                if !norm_sqr(&sum).is_zero_within(0.0) {
                    return false;
                }
            }
        }
        true
    }

    /// The four cyclic combinations `k_λ f_{μν} + k_μ f_{νλ} + k_ν f_{λμ}`,
    /// the momentum-space form of the homogeneous Maxwell identity.
    pub fn cyclic_combinations(&self) -> Vec<C<R>> {
        let mut out = Vec::new();
        for l in 0..4 {
            for m in l + 1..4 {
                for n in m + 1..4 {
                    let term = |a: usize, b: usize, c: usize| {
                        Complex::new(self.k.components[a].clone(), R::zero())
                            * self.amplitude[b][c].clone()
                    };
                    out.push(term(l, m, n) + term(m, n, l) + term(n, l, m));
                }
            }
        }
        out
    }

    /// Largest cyclic-identity violation, as a float magnitude.
    pub fn max_cyclic_residual(&self) -> f64 {
        self.cyclic_combinations()
            .iter()
            .map(|c| norm_sqr(c).to_f64_lossy().sqrt())
            .fold(0.0, f64::max)
    }

    /// Hodge dual `f̃_{μν} = ½ ε_{μνρσ} f^{ρσ}` with `ε₀₁₂₃ = +1`.
    pub fn hodge_dual(&self) -> [[C<R>; 4]; 4] {
        let raise_sign = |i: usize| if i == 0 { 1i64 } else { -1 };
        let mut out: [[C<R>; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| c_zero()));
        for mu in 0..4 {
            for nu in 0..4 {
                let mut acc = c_zero::<R>();
                for rho in 0..4 {
                    for sig in 0..4 {
                        let eps = levi_civita(mu, nu, rho, sig);
                        if eps == 0 {
                            continue;
                        }
                        let sign = eps * raise_sign(rho) * raise_sign(sig);
                        let term = self.amplitude[rho][sig].clone()
                            * Complex::new(R::from_ratio(sign, 2), R::zero());
                        acc = acc + term;
                    }
                }
                out[mu][nu] = acc;
            }
        }
        out
    }
}

fn levi_civita(a: usize, b: usize, c: usize, d: usize) -> i64 {
    let idx = [a, b, c, d];
    let mut sign = 1i64;
    for i in 0..4 {
        for j in i + 1..4 {
            match idx[i].cmp(&idx[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// Report of [`maxwell_identity_check`].
#[derive(Debug, Clone)]
pub struct MaxwellReport<R: RealScalar> {
    pub field: FieldStrength<R>,
    pub antisymmetric: bool,
    pub max_cyclic_residual: f64,
    /// Exact vanishing of every cyclic combination (meaningful in the
    /// rational backend).
    pub cyclic_exact: bool,
}

/// Builds the field strength of a symmetric spinor amplitude on a null
/// carrier and verifies antisymmetry plus the cyclic identity.
pub fn maxwell_identity_check<R: RealScalar>(
    phi: &Matrix2<R>,
    k: &FourVector<R>,
) -> Result<MaxwellReport<R>, FieldError> {
    let field = FieldStrength::from_spinor_amplitude(phi, k)?;
    let antisymmetric = field.is_antisymmetric();
    let cyclic = field.cyclic_combinations();
    let cyclic_exact = cyclic.iter().all(|c| norm_sqr(c).is_zero_within(0.0));
    let max_cyclic_residual = field.max_cyclic_residual();
    Ok(MaxwellReport {
        field,
        antisymmetric,
        max_cyclic_residual,
        cyclic_exact,
    })
}

/// Symmetric spinor amplitude `u ⊗ u`, the aligned spin-1 source for a
/// carrier `k = spinor_to_null(u)`.
pub fn outer_square<R: RealScalar>(u: &Spinor<R>) -> Matrix2<R> {
    Matrix2::new(std::array::from_fn(|a| {
        std::array::from_fn(|b| u.component(a).clone() * u.component(b).clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gq;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Rq = BigRational;

    /// A null carrier with distinct component magnitudes, from u = (2, 1+i).
    fn generic_null() -> FourVector<f64> {
        let u = Spinor::<f64>::upper(Complex::new(2.0, 0.0), Complex::new(1.0, 1.0));
        let k = spinor_to_null(&u);
        assert_eq!(k.components, [6.0, 4.0, 4.0, 2.0]);
        k
    }

    #[test]
    fn residual_zero_for_constant_wave() {
        let wave = PlaneWave::new(FourVector::from_i64(0, 0, 0, 0), 0.1, 9);
        assert_eq!(kg_residual(&wave).unwrap(), 0.0);
    }

    #[test]
    fn residual_cancels_for_axis_aligned_null_wave() {
        // k = (1,0,0,1): the time and z stencil errors cancel identically,
        // so only floating-point noise remains.
        let wave = PlaneWave::new(FourVector::from_i64(1, 0, 0, 1), 0.1, 9);
        assert!(kg_residual(&wave).unwrap() < 1e-12);
    }

    #[test]
    fn residual_matches_taylor_oracle_on_generic_null_wave() {
        // Stencil error (h²/12)|k₀⁴ - Σkᵢ⁴| = 64 h² for k = (6,4,4,2).
        let k = generic_null();
        for h in [0.1, 0.05] {
            let res = kg_residual(&PlaneWave::new(k.clone(), h, 9)).unwrap();
            let oracle = 64.0 * h * h;
            assert!(
                (res - oracle).abs() < 0.15 * oracle,
                "h={h}: residual {res} vs Taylor estimate {oracle}"
            );
        }
    }

    #[test]
    fn second_order_convergence_on_generic_null_wave() {
        let k = generic_null();
        let residuals = kg_residuals(&k, &[0.2, 0.1, 0.05], 9).unwrap();
        for pair in residuals.windows(2) {
            let ratio = pair[0] / pair[1];
            assert!(
                (3.6..=4.4).contains(&ratio),
                "residual ratio {ratio} outside the second-order window"
            );
        }
    }

    #[test]
    fn massive_wave_residual_converges_to_norm() {
        let wave = PlaneWave::new(FourVector::from_i64(1, 0, 0, 0), 0.05, 9);
        let res = kg_residual(&wave).unwrap();
        assert!((res - 1.0).abs() < 1e-3, "residual {res} should approach |k·k| = 1");
    }

    #[test]
    fn grid_too_small() {
        let wave = PlaneWave::new(FourVector::from_i64(1, 0, 0, 1), 0.1, 2);
        assert_eq!(kg_residual(&wave).unwrap_err(), FieldError::GridTooSmall(2));
    }

    #[test]
    fn weyl_rank_one_for_basis_spinor() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let report = weyl_rank_check(&u).unwrap();
        assert_eq!(report.matrix, Matrix2::from_i64([[(2, 0), (0, 0)], [(0, 0), (0, 0)]]));
        assert!(norm_sqr(&report.det).is_zero());
        assert_eq!(report.rank, 1);
        assert_eq!(report.kernel, Spinor::upper_i64(0, 0, 1, 0));
    }

    #[test]
    fn weyl_kernel_is_annihilated_and_orthogonal() {
        let u = Spinor::<Rq>::upper(gq(3, -2), gq(1, 5));
        let report = weyl_rank_check(&u).unwrap();
        let image = report.matrix.apply(&report.kernel);
        assert!(image.is_zero());
        // Hermitian orthogonality ⟨u, kernel⟩ = 0.
        let inner = u.component(0).conj() * report.kernel.component(0).clone()
            + u.component(1).conj() * report.kernel.component(1).clone();
        assert!(norm_sqr(&inner).is_zero());
        assert_eq!(report.rank, 1);
    }

    #[test]
    fn weyl_kernel_invariant_under_scaling() {
        let u = Spinor::<Rq>::upper(gq(2, 1), gq(-1, 3));
        let scaled = u.scale(&gq(3, -4));
        let a = weyl_rank_check(&u).unwrap().kernel;
        let b = weyl_rank_check(&scaled).unwrap().kernel;
        // Same kernel line: the two spanning vectors are parallel.
        assert!(norm_sqr(&crate::spinor::symplectic(&a, &b)).is_zero());
    }

    #[test]
    fn weyl_rejects_zero_spinor() {
        let u = Spinor::<Rq>::upper_i64(0, 0, 0, 0);
        assert_eq!(weyl_rank_check(&u).unwrap_err(), FieldError::ZeroSpinor);
    }

    #[test]
    fn maxwell_identity_exact_for_aligned_amplitude() {
        let u = Spinor::<Rq>::upper(gq(2, -1), gq(1, 3));
        let phi = outer_square(&u);
        let k = spinor_to_null(&u);
        let report = maxwell_identity_check(&phi, &k).unwrap();
        assert!(report.antisymmetric);
        assert!(report.cyclic_exact);
        assert_eq!(report.max_cyclic_residual, 0.0);
    }

    #[test]
    fn recorded_duality_convention() {
        // f̃ = -i·f with ε₀₁₂₃ = +1: the amplitude is anti-self-dual.
        let u = Spinor::<Rq>::upper(gq(1, 2), gq(3, -1));
        let f = FieldStrength::from_spinor_amplitude(&outer_square(&u), &spinor_to_null(&u))
            .unwrap();
        let dual = f.hodge_dual();
        let minus_i = gq(0, -1);
        for mu in 0..4 {
            for nu in 0..4 {
                let expect = f.amplitude()[mu][nu].clone() * minus_i.clone();
                assert_eq!(dual[mu][nu], expect);
            }
        }
    }

    #[test]
    fn zero_field_satisfies_everything() {
        let f = FieldStrength::<Rq>::zero(FourVector::from_i64(1, 0, 0, 1));
        assert!(f.is_antisymmetric());
        assert!(f.cyclic_combinations().iter().all(|c| norm_sqr(c).is_zero()));
    }

    #[test]
    fn timelike_carrier_rejected() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let phi = outer_square(&u);
        let k = FourVector::from_i64(1, 0, 0, 0);
        assert_eq!(
            maxwell_identity_check(&phi, &k).unwrap_err(),
            FieldError::NotNull
        );
    }

    #[test]
    fn asymmetric_amplitude_rejected() {
        let phi = Matrix2::<Rq>::from_i64([[(1, 0), (2, 0)], [(0, 0), (1, 0)]]);
        let k = FourVector::from_i64(1, 0, 0, 1);
        assert_eq!(
            maxwell_identity_check(&phi, &k).unwrap_err(),
            FieldError::NotSymmetric
        );
    }

    #[test]
    fn misaligned_amplitude_violates_cyclic_identity() {
        // φ built from one spinor, carrier from another: the identity fails,
        // which is what makes the aligned case meaningful.
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let w = Spinor::<Rq>::upper_i64(0, 0, 1, 0);
        let report =
            maxwell_identity_check(&outer_square(&w), &spinor_to_null(&u)).unwrap();
        assert!(!report.cyclic_exact);
    }
}
