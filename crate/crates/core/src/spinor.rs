//! Exact 2-spinor algebra and the map from spinors to null four-vectors.
//!
//! Conventions, fixed once and used everywhere downstream:
//!
//! * Pauli basis `σ⁰ = I`, `σ¹ = [[0,1],[1,0]]`, `σ² = [[0,-i],[i,0]]`,
//!   `σ³ = [[1,0],[0,-1]]`; no extra normalization factor.
//! * Metric signature `(+,-,-,-)`.
//! * The null map conjugates its **first** slot: `k_μ = ū^T σ^μ u`, so
//!   `k₀ = |u⁰|² + |u¹|²` is manifestly nonnegative.
//! * Epsilon convention `ε₀₁ = ε^{01} = +1` with `u^A = ε^{AB} u_B` and
//!   `u_A = ε_{AB} u^B`; raising after lowering (either order) returns `-u`.
//! * The contraction `u_A v^A` is the symplectic form
//!   `ε_{AB} u^A v^B = u⁰v¹ - u¹v⁰` (NW–SE), the sign being pinned by the
//!   requirement that the standard dyad `u=(1,0), v=(0,1)` contracts to `+1`.

use crate::scalar::{c_from_i64, c_zero, norm_sqr, C, RealScalar};
use num_complex::Complex;
use thiserror::Error;

/// Index position of a spinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Upper,
    Lower,
}

#[derive(Debug, Error, PartialEq)]
pub enum SpinorError {
    #[error("variance mismatch: operation expects a {expected:?}-index spinor")]
    VarianceMismatch { expected: Variance },
    #[error("matrix is not unimodular: |det - 1| ~ {deviation:e}")]
    NonUnimodular { deviation: f64 },
    #[error("zero spinor where a nonzero one is required")]
    ZeroSpinor,
}

/// Complex 2-spinor with an explicit index-position marker.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor<R: RealScalar> {
    components: [C<R>; 2],
    variance: Variance,
}

impl<R: RealScalar> Spinor<R> {
    pub fn new(c0: C<R>, c1: C<R>, variance: Variance) -> Self {
        Spinor {
            components: [c0, c1],
            variance,
        }
    }

    /// Upper-index spinor `u^A`.
    pub fn upper(c0: C<R>, c1: C<R>) -> Self {
        Self::new(c0, c1, Variance::Upper)
    }

    /// Lower-index spinor `u_A`.
    pub fn lower(c0: C<R>, c1: C<R>) -> Self {
        Self::new(c0, c1, Variance::Lower)
    }

    /// Upper-index spinor from integer Gaussian components.
    pub fn upper_i64(re0: i64, im0: i64, re1: i64, im1: i64) -> Self {
        Self::upper(c_from_i64(re0, im0), c_from_i64(re1, im1))
    }

    pub fn component(&self, idx: usize) -> &C<R> {
        &self.components[idx]
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.re.is_zero() && c.im.is_zero())
    }

    pub fn scale(&self, factor: &C<R>) -> Self {
        Spinor {
            components: [
                self.components[0].clone() * factor.clone(),
                self.components[1].clone() * factor.clone(),
            ],
            variance: self.variance,
        }
    }

    pub fn neg(&self) -> Self {
        Spinor {
            components: [-self.components[0].clone(), -self.components[1].clone()],
            variance: self.variance,
        }
    }
}

/// Raise a lower index: `u^A = ε^{AB} u_B`, i.e. `(a, b) -> (b, -a)`.
pub fn epsilon_raise<R: RealScalar>(u: &Spinor<R>) -> Result<Spinor<R>, SpinorError> {
    if u.variance != Variance::Lower {
        return Err(SpinorError::VarianceMismatch {
            expected: Variance::Lower,
        });
    }
    Ok(Spinor::upper(
        u.components[1].clone(),
        -u.components[0].clone(),
    ))
}

/// Lower an upper index: `u_A = ε_{AB} u^B`, i.e. `(a, b) -> (b, -a)`.
///
/// Both epsilon maps act the same way on components, which is what makes the
/// round trip an involution up to sign: raise(lower(u)) = lower(raise(u)) = -u.
pub fn epsilon_lower<R: RealScalar>(u: &Spinor<R>) -> Result<Spinor<R>, SpinorError> {
    if u.variance != Variance::Upper {
        return Err(SpinorError::VarianceMismatch {
            expected: Variance::Upper,
        });
    }
    Ok(Spinor::lower(
        u.components[1].clone(),
        -u.components[0].clone(),
    ))
}

/// The symplectic contraction `u_A v^A = ε_{AB} u^A v^B = u⁰v¹ - u¹v⁰`
/// of two upper-index spinors.
///
/// Note the sign: summing `epsilon_lower(u)` against `v` componentwise would
/// give the opposite value; the NW–SE order used here is the one under which
/// the standard dyad contracts to `+1`.
pub fn symplectic<R: RealScalar>(u: &Spinor<R>, v: &Spinor<R>) -> C<R> {
    u.components[0].clone() * v.components[1].clone()
        - u.components[1].clone() * v.components[0].clone()
}

/// A spinor dyad: two spinors with symplectic normalization `u_A v^A = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dyad<R: RealScalar> {
    pub u: Spinor<R>,
    pub v: Spinor<R>,
}

impl<R: RealScalar> Dyad<R> {
    /// Builds the dyad without normalizing. `symplectic_norm` tells whether
    /// the pair actually satisfies the dyad condition.
    pub fn new(u: Spinor<R>, v: Spinor<R>) -> Self {
        Dyad { u, v }
    }

    /// `u_A v^A`, which should equal one for a proper dyad.
    pub fn symplectic_norm(&self) -> C<R> {
        symplectic(&self.u, &self.v)
    }

    /// Rescales `v` so that `u_A v^A = 1` exactly. Fails when the pair is
    /// degenerate (contraction zero within `tol`).
    pub fn normalized(u: Spinor<R>, v: Spinor<R>, tol: f64) -> Option<Self> {
        let s = symplectic(&u, &v);
        if norm_sqr(&s).is_zero_within(tol * tol) {
            return None;
        }
        let inv = Complex::new(R::one(), R::zero()) / s;
        let v = v.scale(&inv);
        Some(Dyad { u, v })
    }
}

/// Real four-vector `k_μ` in signature `(+,-,-,-)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourVector<R: RealScalar> {
    pub components: [R; 4],
}

impl<R: RealScalar> FourVector<R> {
    pub fn new(t: R, x: R, y: R, z: R) -> Self {
        FourVector {
            components: [t, x, y, z],
        }
    }

    pub fn from_i64(t: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(R::from_i64(t), R::from_i64(x), R::from_i64(y), R::from_i64(z))
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0, 0, 0)
    }

    /// Minkowski inner product `a·b = a₀b₀ - a₁b₁ - a₂b₂ - a₃b₃`.
    pub fn minkowski(&self, other: &Self) -> R {
        let a = &self.components;
        let b = &other.components;
        a[0].clone() * b[0].clone()
            - a[1].clone() * b[1].clone()
            - a[2].clone() * b[2].clone()
            - a[3].clone() * b[3].clone()
    }

    /// `k·k`.
    pub fn norm(&self) -> R {
        self.minkowski(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        FourVector {
            components: std::array::from_fn(|i| {
                self.components[i].clone() + other.components[i].clone()
            }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        FourVector {
            components: std::array::from_fn(|i| {
                self.components[i].clone() - other.components[i].clone()
            }),
        }
    }

    pub fn scale(&self, f: &R) -> Self {
        FourVector {
            components: std::array::from_fn(|i| self.components[i].clone() * f.clone()),
        }
    }
}

/// Complex four-vector, needed for the mixed null leg of a tetrad.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexFourVector<R: RealScalar> {
    pub components: [C<R>; 4],
}

impl<R: RealScalar> ComplexFourVector<R> {
    pub fn new(components: [C<R>; 4]) -> Self {
        ComplexFourVector { components }
    }

    pub fn from_real(v: &FourVector<R>) -> Self {
        ComplexFourVector {
            components: std::array::from_fn(|i| {
                Complex::new(v.components[i].clone(), R::zero())
            }),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexFourVector {
            components: std::array::from_fn(|i| self.components[i].conj()),
        }
    }

    /// Bilinear (not sesquilinear) Minkowski product.
    pub fn minkowski(&self, other: &Self) -> C<R> {
        let a = &self.components;
        let b = &other.components;
        a[0].clone() * b[0].clone()
            - a[1].clone() * b[1].clone()
            - a[2].clone() * b[2].clone()
            - a[3].clone() * b[3].clone()
    }

    pub fn norm(&self) -> C<R> {
        self.minkowski(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexFourVector {
            components: std::array::from_fn(|i| {
                self.components[i].clone() + other.components[i].clone()
            }),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        ComplexFourVector {
            components: std::array::from_fn(|i| {
                self.components[i].clone() - other.components[i].clone()
            }),
        }
    }

    pub fn scale(&self, f: &C<R>) -> Self {
        ComplexFourVector {
            components: std::array::from_fn(|i| self.components[i].clone() * f.clone()),
        }
    }
}

/// 2×2 complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2<R: RealScalar> {
    pub e: [[C<R>; 2]; 2],
}

impl<R: RealScalar> Matrix2<R> {
    pub fn new(e: [[C<R>; 2]; 2]) -> Self {
        Matrix2 { e }
    }

    pub fn identity() -> Self {
        Matrix2 {
            e: [
                [c_from_i64(1, 0), c_zero()],
                [c_zero(), c_from_i64(1, 0)],
            ],
        }
    }

    pub fn from_i64(e: [[(i64, i64); 2]; 2]) -> Self {
        Matrix2 {
            e: std::array::from_fn(|r| std::array::from_fn(|c| c_from_i64(e[r][c].0, e[r][c].1))),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[c_zero::<R>(), c_zero()], [c_zero(), c_zero()]];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = self.e[r][0].clone() * other.e[0][c].clone()
                    + self.e[r][1].clone() * other.e[1][c].clone();
            }
        }
        Matrix2 { e: out }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Matrix2 {
            e: [
                [self.e[0][0].conj(), self.e[1][0].conj()],
                [self.e[0][1].conj(), self.e[1][1].conj()],
            ],
        }
    }

    pub fn det(&self) -> C<R> {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    pub fn trace(&self) -> C<R> {
        self.e[0][0].clone() + self.e[1][1].clone()
    }

    pub fn neg(&self) -> Self {
        Matrix2 {
            e: std::array::from_fn(|r| std::array::from_fn(|c| -self.e[r][c].clone())),
        }
    }

    pub fn apply(&self, s: &Spinor<R>) -> Spinor<R> {
        Spinor::new(
            self.e[0][0].clone() * s.component(0).clone()
                + self.e[0][1].clone() * s.component(1).clone(),
            self.e[1][0].clone() * s.component(0).clone()
                + self.e[1][1].clone() * s.component(1).clone(),
            s.variance(),
        )
    }
}

/// The Pauli basis `σ⁰..σ³` used by the null map.
pub fn pauli_matrices<R: RealScalar>() -> [Matrix2<R>; 4] {
    [
        Matrix2::from_i64([[(1, 0), (0, 0)], [(0, 0), (1, 0)]]),
        Matrix2::from_i64([[(0, 0), (1, 0)], [(1, 0), (0, 0)]]),
        Matrix2::from_i64([[(0, 0), (0, -1)], [(0, 1), (0, 0)]]),
        Matrix2::from_i64([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]),
    ]
}

/// `σ^μ k_μ` for a real four-vector, the bispinor form of `k`.
pub fn sigma_contract<R: RealScalar>(k: &FourVector<R>) -> Matrix2<R> {
    let sigma = pauli_matrices::<R>();
    let mut out = [[c_zero::<R>(), c_zero()], [c_zero(), c_zero()]];
    for (mu, s) in sigma.iter().enumerate() {
        for (r, row) in out.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                *entry = entry.clone()
                    + s.e[r][c].clone()
                        * Complex::new(k.components[mu].clone(), R::zero());
            }
        }
    }
    Matrix2 { e: out }
}

/// The null map `k_μ = σ^μ_{ȦB} ū^Ȧ u^B`, written out componentwise so the
/// result is manifestly real:
///
/// ```text
/// k₀ = |u⁰|² + |u¹|²      k₁ = 2 Re(ū⁰u¹)
/// k₂ = 2 Im(ū⁰u¹)         k₃ = |u⁰|² - |u¹|²
/// ```
///
/// Total on all spinors; the zero spinor maps to the zero vector. The output
/// is always future-pointing (`k₀ ≥ 0`) and exactly null:
/// `k·k = 4(|u⁰u¹|² - |ū⁰u¹|²) = 0`.
pub fn spinor_to_null<R: RealScalar>(u: &Spinor<R>) -> FourVector<R> {
    let a = u.component(0);
    let b = u.component(1);
    let na = norm_sqr(a);
    let nb = norm_sqr(b);
    let cross = a.conj() * b.clone();
    let two = R::from_i64(2);
    FourVector::new(
        na.clone() + nb.clone(),
        two.clone() * cross.re.clone(),
        two * cross.im.clone(),
        na - nb,
    )
}

/// The mixed contraction `m_μ = σ^μ_{ȦB} ū^Ȧ v^B`, complex in general.
///
/// Satisfies `m·m = 0` (bilinear norm) and `mixed_null(u, v) = mixed_null(v, u)*`;
/// coincident arguments reduce to the real null map.
pub fn mixed_null<R: RealScalar>(u: &Spinor<R>, v: &Spinor<R>) -> ComplexFourVector<R> {
    let ua = u.component(0).conj();
    let ub = u.component(1).conj();
    let va = v.component(0);
    let vb = v.component(1);
    let m0 = ua.clone() * va.clone() + ub.clone() * vb.clone();
    let m1 = ua.clone() * vb.clone() + ub.clone() * va.clone();
    // σ² slot: -i ū⁰v¹ + i ū¹v⁰
    let i = Complex::new(R::zero(), R::one());
    let m2 = i.clone() * (ub.clone() * va.clone()) - i * (ua.clone() * vb.clone());
    let m3 = ua * va - ub * vb;
    ComplexFourVector::new([m0, m1, m2, m3])
}

/// Real 4×4 matrix, used for Lorentz transformations and Gram matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix4<R: RealScalar> {
    pub e: [[R; 4]; 4],
}

impl<R: RealScalar> Matrix4<R> {
    pub fn new(e: [[R; 4]; 4]) -> Self {
        Matrix4 { e }
    }

    pub fn identity() -> Self {
        Matrix4 {
            e: std::array::from_fn(|r| {
                std::array::from_fn(|c| if r == c { R::one() } else { R::zero() })
            }),
        }
    }

    /// `η = diag(1,-1,-1,-1)`.
    pub fn eta() -> Self {
        let mut m = Self::identity();
        for i in 1..4 {
            m.e[i][i] = -R::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        Matrix4 {
            e: std::array::from_fn(|r| {
                std::array::from_fn(|c| {
                    (0..4).fold(R::zero(), |acc, k| {
                        acc + self.e[r][k].clone() * other.e[k][c].clone()
                    })
                })
            }),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix4 {
            e: std::array::from_fn(|r| std::array::from_fn(|c| self.e[c][r].clone())),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix4 {
            e: std::array::from_fn(|r| {
                std::array::from_fn(|c| self.e[r][c].clone() - other.e[r][c].clone())
            }),
        }
    }

    pub fn apply(&self, v: &FourVector<R>) -> FourVector<R> {
        FourVector {
            components: std::array::from_fn(|r| {
                (0..4).fold(R::zero(), |acc, c| {
                    acc + self.e[r][c].clone() * v.components[c].clone()
                })
            }),
        }
    }

    /// Largest absolute entry, as f64; handy for tolerance checks.
    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .map(|x| x.to_f64_lossy().abs())
            .fold(0.0, f64::max)
    }

    /// Determinant by cofactor expansion; exact in the rational backend.
    pub fn det(&self) -> R {
        fn det3<R: RealScalar>(m: [[R; 3]; 3]) -> R {
            m[0][0].clone()
                * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
                - m[0][1].clone()
                    * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
                + m[0][2].clone()
                    * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
        }
        let mut acc = R::zero();
        for col in 0..4 {
            let minor: [[R; 3]; 3] = std::array::from_fn(|r| {
                let mut row = Vec::with_capacity(3);
                for c in 0..4 {
                    if c != col {
                        row.push(self.e[r + 1][c].clone());
                    }
                }
                std::array::from_fn(|c| row[c].clone())
            });
            let term = self.e[0][col].clone() * det3(minor);
            if col % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }
}

/// Element of SL(2,ℂ): a unimodular 2×2 complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SL2CElement<R: RealScalar> {
    m: Matrix2<R>,
}

/// Tolerance on `|det A - 1|` in the float backend; the rational backend
/// demands exact unimodularity.
pub const UNIMODULAR_TOL: f64 = 1e-9;

impl<R: RealScalar> SL2CElement<R> {
    pub fn new(m: Matrix2<R>) -> Result<Self, SpinorError> {
        let one = Complex::new(R::one(), R::zero());
        let dev = m.det() - one;
        let dev_sq = norm_sqr(&dev);
        if !dev_sq.is_zero_within(UNIMODULAR_TOL * UNIMODULAR_TOL) {
            return Err(SpinorError::NonUnimodular {
                deviation: dev_sq.to_f64_lossy().sqrt(),
            });
        }
        Ok(SL2CElement { m })
    }

    pub fn identity() -> Self {
        SL2CElement {
            m: Matrix2::identity(),
        }
    }

    pub fn matrix(&self) -> &Matrix2<R> {
        &self.m
    }

    pub fn neg(&self) -> Self {
        SL2CElement { m: self.m.neg() }
    }

    pub fn compose(&self, other: &Self) -> Self {
        SL2CElement {
            m: self.m.mul(&other.m),
        }
    }

    pub fn apply(&self, s: &Spinor<R>) -> Spinor<R> {
        self.m.apply(s)
    }
}

/// The Lorentz transformation induced by `A ∈ SL(2,ℂ)` through the null map:
/// `Λ_{μν} = ½ tr(σ^μ A σ^ν A†)`, acting on lower-index component vectors so
/// that `Λ · spinor_to_null(u) = spinor_to_null(A·u)` for every spinor.
///
/// `Λ` is real, satisfies `Λᵀ η Λ = η`, `det Λ = 1`, `Λ⁰₀ ≥ 1`, and is
/// insensitive to the sign of `A` (the kernel of the double cover).
pub fn induced_lorentz<R: RealScalar>(a: &SL2CElement<R>) -> Matrix4<R> {
    let sigma = pauli_matrices::<R>();
    let adj = a.matrix().adjoint();
    let half = R::from_ratio(1, 2);
    Matrix4 {
        e: std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                let prod = sigma[mu].mul(a.matrix()).mul(&sigma[nu]).mul(&adj);
                // The trace is real because σ^μ A σ^ν A† pairs with its own
                // adjoint under the trace; keep only the real part.
                half.clone() * prod.trace().re
            })
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gq;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Rq = BigRational;

    fn rq(n: i64) -> Rq {
        Rq::from_i64(n)
    }

    #[test]
    fn null_map_basis_spinor() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let k = spinor_to_null(&u);
        assert_eq!(k, FourVector::from_i64(1, 0, 0, 1));
    }

    #[test]
    fn null_map_zero_spinor() {
        let u = Spinor::<Rq>::upper_i64(0, 0, 0, 0);
        assert_eq!(spinor_to_null(&u), FourVector::zero());
    }

    #[test]
    fn null_map_is_exactly_null() {
        let u = Spinor::<Rq>::upper(gq_pair(3, -2), gq_pair(1, 5));
        let k = spinor_to_null(&u);
        assert!(k.norm().is_zero());
        assert!(k.components[0] >= rq(0));
    }

    fn gq_pair(re: i64, im: i64) -> C<Rq> {
        gq(re, im)
    }

    #[test]
    fn null_map_scaling() {
        // spinor_to_null(λu) = |λ|² spinor_to_null(u)
        let u = Spinor::<Rq>::upper(gq_pair(2, 1), gq_pair(-1, 3));
        let lam = gq_pair(2, -3);
        let scaled = spinor_to_null(&u.scale(&lam));
        let expect = spinor_to_null(&u).scale(&norm_sqr(&lam));
        assert_eq!(scaled, expect);
    }

    #[test]
    fn mixed_null_standard_dyad() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let v = Spinor::<Rq>::upper_i64(0, 0, 1, 0);
        let m = mixed_null(&u, &v);
        // Our conjugation-slot convention gives m = (0, 1, -i, 0).
        assert_eq!(
            m.components,
            [gq_pair(0, 0), gq_pair(1, 0), gq_pair(0, -1), gq_pair(0, 0)]
        );
        assert!(norm_sqr(&m.norm()).is_zero());
    }

    #[test]
    fn mixed_null_coincident_is_real_null_map() {
        let u = Spinor::<Rq>::upper(gq_pair(2, -1), gq_pair(0, 3));
        let m = mixed_null(&u, &u);
        let k = ComplexFourVector::from_real(&spinor_to_null(&u));
        assert_eq!(m, k);
    }

    #[test]
    fn mixed_null_conjugation_symmetry() {
        let u = Spinor::<Rq>::upper(gq_pair(1, 2), gq_pair(3, -1));
        let v = Spinor::<Rq>::upper(gq_pair(-2, 1), gq_pair(1, 1));
        assert_eq!(mixed_null(&u, &v), mixed_null(&v, &u).conj());
    }

    #[test]
    fn epsilon_raise_matches_convention() {
        let u = Spinor::<Rq>::lower(gq_pair(1, 0), gq_pair(0, 0));
        let raised = epsilon_raise(&u).unwrap();
        assert_eq!(raised, Spinor::upper(gq_pair(0, 0), gq_pair(-1, 0)));
    }

    #[test]
    fn epsilon_round_trip_is_minus_identity() {
        let u = Spinor::<Rq>::upper(gq_pair(4, -1), gq_pair(2, 7));
        let back = epsilon_raise(&epsilon_lower(&u).unwrap()).unwrap();
        assert_eq!(back, u.neg());
        let w = Spinor::<Rq>::lower(gq_pair(3, 5), gq_pair(-2, 1));
        let back = epsilon_lower(&epsilon_raise(&w).unwrap()).unwrap();
        assert_eq!(back, w.neg());
    }

    #[test]
    fn epsilon_variance_mismatch() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        assert_eq!(
            epsilon_raise(&u),
            Err(SpinorError::VarianceMismatch {
                expected: Variance::Lower
            })
        );
    }

    #[test]
    fn standard_dyad_contraction() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let v = Spinor::<Rq>::upper_i64(0, 0, 1, 0);
        assert_eq!(symplectic(&u, &v), gq_pair(1, 0));
        assert_eq!(symplectic(&v, &u), gq_pair(-1, 0));
        assert!(norm_sqr(&symplectic(&u, &u)).is_zero());
    }

    #[test]
    fn lorentz_of_identity() {
        let a = SL2CElement::<Rq>::identity();
        assert_eq!(induced_lorentz(&a), Matrix4::identity());
    }

    #[test]
    fn lorentz_kernel_of_double_cover() {
        let a = SL2CElement::<Rq>::identity();
        assert_eq!(induced_lorentz(&a.neg()), Matrix4::identity());
    }

    #[test]
    fn lorentz_of_rational_boost() {
        // A = diag(2, 1/2) is a z-boost with cosh s = 17/8, sinh s = 15/8.
        let m = Matrix2::new([
            [gq_pair(2, 0), gq_pair(0, 0)],
            [gq_pair(0, 0), Complex::new(Rq::from_ratio(1, 2), rq(0))],
        ]);
        let a = SL2CElement::new(m).unwrap();
        let lam = induced_lorentz(&a);
        let ch = Rq::from_ratio(17, 8);
        let sh = Rq::from_ratio(15, 8);
        let mut expect = Matrix4::<Rq>::identity();
        expect.e[0][0] = ch.clone();
        expect.e[3][3] = ch;
        expect.e[0][3] = sh.clone();
        expect.e[3][0] = sh;
        assert_eq!(lam, expect);
        // Λᵀ η Λ = η and det Λ = 1 exactly.
        let eta = Matrix4::<Rq>::eta();
        assert_eq!(lam.transpose().mul(&eta).mul(&lam), eta);
        assert_eq!(lam.det(), rq(1));
    }

    #[test]
    fn lorentz_equivariance_exact() {
        let m = Matrix2::new([
            [gq_pair(1, 0), gq_pair(2, -1)],
            [gq_pair(0, 0), gq_pair(1, 0)],
        ]);
        let a = SL2CElement::new(m).unwrap();
        let lam = induced_lorentz(&a);
        let u = Spinor::<Rq>::upper(gq_pair(3, 1), gq_pair(-2, 2));
        let lhs = lam.apply(&spinor_to_null(&u));
        let rhs = spinor_to_null(&a.apply(&u));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_unimodular_rejected() {
        let m = Matrix2::<Rq>::from_i64([[(2, 0), (0, 0)], [(0, 0), (2, 0)]]);
        assert!(matches!(
            SL2CElement::new(m),
            Err(SpinorError::NonUnimodular { .. })
        ));
    }

    #[test]
    fn det_sigma_contract_is_minkowski_norm() {
        let k = FourVector::<Rq>::new(rq(5), rq(1), rq(-3), rq(2));
        let det = sigma_contract(&k).det();
        assert_eq!(det.re, k.norm());
        assert!(det.im.is_zero());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small() -> impl Strategy<Value = i64> {
            -20i64..=20
        }

        fn spinor() -> impl Strategy<Value = Spinor<Rq>> {
            (small(), small(), small(), small())
                .prop_map(|(a, b, c, d)| Spinor::upper_i64(a, b, c, d))
        }

        proptest! {
            #[test]
            fn null_and_future_pointing(u in spinor()) {
                let k = spinor_to_null(&u);
                prop_assert!(k.norm().is_zero());
                prop_assert!(k.components[0] >= rq(0));
            }

            #[test]
            fn scaling_by_modulus_squared(u in spinor(), lr in small(), li in small()) {
                let lam = gq(lr, li);
                let scaled = spinor_to_null(&u.scale(&lam));
                prop_assert_eq!(scaled, spinor_to_null(&u).scale(&norm_sqr(&lam)));
            }

            #[test]
            fn double_cover_sign_blind(b in small(), c in small()) {
                // Shear A = [[1, b+ci], [0, 1]] is unimodular for any b, c.
                let m = Matrix2::new([
                    [gq(1, 0), gq(b, c)],
                    [gq(0, 0), gq(1, 0)],
                ]);
                let a = SL2CElement::new(m).unwrap();
                prop_assert_eq!(induced_lorentz(&a), induced_lorentz(&a.neg()));
            }

            #[test]
            fn polarization_identity(t in small(), x in small(), y in small(), z in small()) {
                let k = FourVector::<Rq>::from_i64(t, x, y, z);
                let det = sigma_contract(&k).det();
                prop_assert_eq!(det.re, k.norm());
                prop_assert!(det.im.is_zero());
            }
        }
    }
}
