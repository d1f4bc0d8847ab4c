//! Symbolic algebra of normal-ordered quadratic forms in four bosonic modes,
//! the quantization of the tetrad, and a truncated-Fock-space oracle.
//!
//! Modes 1 and 2 quantize the components of the dyad spinor `u`, modes 3 and
//! 4 those of `v`. An operator is stored in normal-ordered form
//!
//! ```text
//! P = c + Σ α_{rs} a†_r a_s + Σ β_{rs} a†_r a†_s + Σ γ_{rs} a_r a_s
//! ```
//!
//! with Gaussian-rational coefficients, `β` and `γ` symmetric. The canonical
//! commutation relations `[a_r, a†_s] = δ_{rs}` close this sector under the
//! bracket, which is evaluated exactly:
//!
//! ```text
//! α'' = [α, α'] - 4(βγ' - β'γ)
//! β'' = sym(αβ') - sym(α'β)          sym(M) = M + Mᵀ
//! γ'' = sym(γα') - sym(γ'α)
//! c'' = 2 tr(β'γ) - 2 tr(βγ')
//! ```
//!
//! The truncated oracle works in the unnormalized monomial basis
//! `|n⟩ = (a†₁)^{n₁}···(a†₄)^{n₄}|0⟩`, where every matrix element of a
//! quadratic operator is rational: `a_r|n⟩ = n_r |n - e_r⟩` and
//! `a†_r|n⟩ = |n + e_r⟩`.

use crate::scalar::{gq, Gq};
use crate::spinor::pauli_matrices;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Number of bosonic modes in the dyad quantization.
pub const MODE_COUNT: usize = 4;

/// One-based mode label, `1..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModeIndex(u8);

impl ModeIndex {
    pub fn new(r: u8) -> Option<Self> {
        (1..=MODE_COUNT as u8).contains(&r).then_some(ModeIndex(r))
    }

    /// Zero-based index into coefficient arrays.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn label(self) -> u8 {
        self.0
    }
}

type Coeffs = [[Gq; MODE_COUNT]; MODE_COUNT];

fn zero_coeffs() -> Coeffs {
    std::array::from_fn(|_| std::array::from_fn(|_| gq(0, 0)))
}

/// Normal-ordered quadratic form in the four mode operators.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticOperator {
    scalar: Gq,
    alpha: Coeffs,
    beta: Coeffs,
    gamma: Coeffs,
}

impl QuadraticOperator {
    pub fn zero() -> Self {
        QuadraticOperator {
            scalar: gq(0, 0),
            alpha: zero_coeffs(),
            beta: zero_coeffs(),
            gamma: zero_coeffs(),
        }
    }

    pub fn constant(c: Gq) -> Self {
        let mut op = Self::zero();
        op.scalar = c;
        op
    }

    /// `a†_r a_s`.
    pub fn raise_lower(r: ModeIndex, s: ModeIndex) -> Self {
        let mut op = Self::zero();
        op.alpha[r.index()][s.index()] = gq(1, 0);
        op
    }

    /// `a†_r a†_s` (stored symmetrically).
    pub fn raise_raise(r: ModeIndex, s: ModeIndex) -> Self {
        let mut op = Self::zero();
        let half = gq_ratio_half();
        if r == s {
            op.beta[r.index()][s.index()] = gq(1, 0);
        } else {
            op.beta[r.index()][s.index()] = half.clone();
            op.beta[s.index()][r.index()] = half;
        }
        op
    }

    /// `a_r a_s` (stored symmetrically).
    pub fn lower_lower(r: ModeIndex, s: ModeIndex) -> Self {
        let mut op = Self::zero();
        let half = gq_ratio_half();
        if r == s {
            op.gamma[r.index()][s.index()] = gq(1, 0);
        } else {
            op.gamma[r.index()][s.index()] = half.clone();
            op.gamma[s.index()][r.index()] = half;
        }
        op
    }

    pub fn scalar_part(&self) -> &Gq {
        &self.scalar
    }

    pub fn alpha(&self) -> &Coeffs {
        &self.alpha
    }

    pub fn beta(&self) -> &Coeffs {
        &self.beta
    }

    pub fn gamma(&self) -> &Coeffs {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
            && self.alpha.iter().flatten().all(Complex::is_zero)
            && self.beta.iter().flatten().all(Complex::is_zero)
            && self.gamma.iter().flatten().all(Complex::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        QuadraticOperator {
            scalar: self.scalar.clone() + other.scalar.clone(),
            alpha: mat_add(&self.alpha, &other.alpha),
            beta: mat_add(&self.beta, &other.beta),
            gamma: mat_add(&self.gamma, &other.gamma),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&gq(-1, 0)))
    }

    pub fn scale(&self, f: &Gq) -> Self {
        QuadraticOperator {
            scalar: self.scalar.clone() * f.clone(),
            alpha: mat_scale(&self.alpha, f),
            beta: mat_scale(&self.beta, f),
            gamma: mat_scale(&self.gamma, f),
        }
    }

    /// Formal adjoint: conjugate the scalar, conjugate-transpose `α`, and
    /// swap `β ↔ γ̄`.
    pub fn adjoint(&self) -> Self {
        QuadraticOperator {
            scalar: self.scalar.conj(),
            alpha: mat_adjoint(&self.alpha),
            beta: mat_conj(&self.gamma),
            gamma: mat_conj(&self.beta),
        }
    }

    /// An operator is Hermitian iff it equals its formal adjoint, i.e. `α`
    /// Hermitian, `γ = β̄` and the scalar real.
    pub fn is_hermitian(&self) -> bool {
        *self == self.adjoint()
    }

    /// Exact normal-ordered commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        let (a, b, g) = (&self.alpha, &self.beta, &self.gamma);
        let (a2, b2, g2) = (&other.alpha, &other.beta, &other.gamma);

        let four = gq(4, 0);
        let alpha = mat_sub(
            &mat_sub(&mat_mul(a, a2), &mat_mul(a2, a)),
            &mat_scale(&mat_sub(&mat_mul(b, g2), &mat_mul(b2, g)), &four),
        );
        let beta = mat_sub(&sym2(&mat_mul(a, b2)), &sym2(&mat_mul(a2, b)));
        let gamma = mat_sub(&sym2(&mat_mul(g, a2)), &sym2(&mat_mul(g2, a)));
        let two = gq(2, 0);
        let scalar = two.clone() * trace_prod(b2, g) - two * trace_prod(b, g2);
        QuadraticOperator {
            scalar,
            alpha,
            beta,
            gamma,
        }
    }

    /// Applies the operator to a state in the unnormalized monomial basis.
    /// Components pushed beyond the truncation bound are dropped.
    pub fn apply(&self, state: &FockState) -> FockState {
        let mut out: BTreeMap<Occupation, Gq> = BTreeMap::new();
        let mut push = |occ: Occupation, amp: Gq| {
            if amp.is_zero() {
                return;
            }
            let total: u32 = occ.iter().sum();
            if total > state.truncation() {
                return;
            }
            let entry = out.entry(occ).or_insert_with(|| gq(0, 0));
            *entry = entry.clone() + amp;
        };

        for (occ, amp) in state.amplitudes() {
            if !self.scalar.is_zero() {
                push(*occ, amp.clone() * self.scalar.clone());
            }
            for r in 0..MODE_COUNT {
                for s in 0..MODE_COUNT {
                    // a†_r a_s : coefficient n_s in the monomial basis.
                    let c = &self.alpha[r][s];
                    if !c.is_zero() && occ[s] > 0 {
                        let mut t = *occ;
                        t[s] -= 1;
                        let factor = gq(occ[s] as i64, 0);
                        t[r] += 1;
                        push(t, amp.clone() * c.clone() * factor);
                    }
                    // a†_r a†_s : coefficient 1.
                    let c = &self.beta[r][s];
                    if !c.is_zero() {
                        let mut t = *occ;
                        t[r] += 1;
                        t[s] += 1;
                        push(t, amp.clone() * c.clone());
                    }
                    // a_r a_s : coefficient n_r n_s (r≠s) or n_r(n_r - 1).
                    let c = &self.gamma[r][s];
                    if !c.is_zero() {
                        let factor = if r == s {
                            occ[r] as i64 * (occ[r] as i64 - 1)
                        } else {
                            occ[r] as i64 * occ[s] as i64
                        };
                        if factor != 0 {
                            let mut t = *occ;
                            t[r] -= 1;
                            t[s] -= 1;
                            push(t, amp.clone() * c.clone() * gq(factor, 0));
                        }
                    }
                }
            }
        }
        FockState::from_map(out, state.truncation())
    }

    /// `⟨0|P|0⟩`, which for a normal-ordered form is just the scalar part.
    pub fn vacuum_expectation(&self) -> Gq {
        self.scalar.clone()
    }
}

fn gq_ratio_half() -> Gq {
    Complex::new(BigRational::new(1.into(), 2.into()), BigRational::zero())
}

fn mat_add(a: &Coeffs, b: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][c].clone() + b[r][c].clone()))
}

fn mat_sub(a: &Coeffs, b: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][c].clone() - b[r][c].clone()))
}

fn mat_scale(a: &Coeffs, f: &Gq) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][c].clone() * f.clone()))
}

fn mat_mul(a: &Coeffs, b: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            (0..MODE_COUNT).fold(gq(0, 0), |acc, k| acc + a[r][k].clone() * b[k][c].clone())
        })
    })
}

fn mat_conj(a: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][c].conj()))
}

fn mat_adjoint(a: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| a[c][r].conj()))
}

fn sym2(m: &Coeffs) -> Coeffs {
    std::array::from_fn(|r| std::array::from_fn(|c| m[r][c].clone() + m[c][r].clone()))
}

fn trace_prod(a: &Coeffs, b: &Coeffs) -> Gq {
    let mut acc = gq(0, 0);
    for r in 0..MODE_COUNT {
        for s in 0..MODE_COUNT {
            acc += a[r][s].clone() * b[s][r].clone();
        }
    }
    acc
}

/// The ur-number operator `n̂ = ½ Σ_r {a†_r, a_r} = Σ_r a†_r a_r + 2`; the
/// constant is the zero-point `½ · 4` of the anticommutator over four modes.
pub fn number_operator() -> QuadraticOperator {
    let mut op = QuadraticOperator::constant(gq(2, 0));
    for r in 0..MODE_COUNT {
        op.alpha[r][r] = gq(1, 0);
    }
    op
}

/// The zero-point constant of [`number_operator`].
pub const NUMBER_ZERO_POINT: i64 = 2;

fn block_bilinear(sigma_mu: &[[Gq; 2]; 2], row_base: usize, col_base: usize) -> QuadraticOperator {
    let mut op = QuadraticOperator::zero();
    for i in 0..2 {
        for j in 0..2 {
            op.alpha[row_base + i][col_base + j] = sigma_mu[i][j].clone();
        }
    }
    op
}

/// Quantized null legs `(l̂_μ, n̂_μ, m̂_μ, m̂̄_μ)` obtained by transcribing the
/// classical contractions with `ū → a†`: `l̂_μ = Σ σ^μ_{ij} a†_{1+i} a_{1+j}`
/// over the `u` modes, `n̂_μ` the same over the `v` modes, and the mixed legs
/// across the two blocks.
pub fn quantize_null_tetrad() -> [[QuadraticOperator; 4]; 4] {
    let sigma = pauli_matrices::<BigRational>();
    let sig: Vec<[[Gq; 2]; 2]> = sigma
        .iter()
        .map(|m| std::array::from_fn(|r| std::array::from_fn(|c| m.e[r][c].clone())))
        .collect();
    std::array::from_fn(|leg| {
        std::array::from_fn(|mu| match leg {
            0 => block_bilinear(&sig[mu], 0, 0),
            1 => block_bilinear(&sig[mu], 2, 2),
            2 => block_bilinear(&sig[mu], 0, 2),
            _ => block_bilinear(&sig[mu], 2, 0),
        })
    })
}

/// The 16 quantized real-tetrad operators `θ̂_μ^α`, ordered
/// `[t̂_0..t̂_3, x̂_0..x̂_3, ŷ_0..ŷ_3, ẑ_0..ẑ_3]`, using the same linear
/// combinations as the classical frame: `t̂ = (l̂+n̂)/2`, `ẑ = (l̂-n̂)/2`,
/// `x̂ = (m̂+m̂̄)/2`, `ŷ = i(m̂-m̂̄)/2`.
///
/// All 16 are Hermitian, and the time component satisfies the recorded
/// affine relation `n̂ = 2 t̂₀ + 2` with the number operator.
pub fn quantize_tetrad() -> [QuadraticOperator; 16] {
    let [l, n, m, m_bar] = quantize_null_tetrad();
    let half = gq_ratio_half();
    let i_half = Complex::new(BigRational::zero(), BigRational::new(1.into(), 2.into()));
    let mut out: Vec<QuadraticOperator> = Vec::with_capacity(16);
    for mu in 0..4 {
        out.push(l[mu].add(&n[mu]).scale(&half));
    }
    for mu in 0..4 {
        out.push(m[mu].add(&m_bar[mu]).scale(&half));
    }
    for mu in 0..4 {
        out.push(m[mu].sub(&m_bar[mu]).scale(&i_half));
    }
    for mu in 0..4 {
        out.push(l[mu].sub(&n[mu]).scale(&half));
    }
    out.try_into().expect("exactly 16 operators")
}

/// Occupation-number tuple for the four modes.
pub type Occupation = [u32; MODE_COUNT];

/// State on the truncated Fock space, stored as amplitudes over the
/// unnormalized monomial basis `|n⟩ = (a†₁)^{n₁}···(a†₄)^{n₄}|0⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    amps: BTreeMap<Occupation, Gq>,
    n_max: u32,
}

impl FockState {
    pub fn vacuum(n_max: u32) -> Self {
        Self::basis_ket([0; MODE_COUNT], n_max)
    }

    /// A single monomial basis ket. Panics if the tuple exceeds the bound.
    pub fn basis_ket(occ: Occupation, n_max: u32) -> Self {
        assert!(occ.iter().sum::<u32>() <= n_max, "occupation exceeds truncation");
        let mut amps = BTreeMap::new();
        amps.insert(occ, gq(1, 0));
        FockState { amps, n_max }
    }

    pub fn from_map(mut amps: BTreeMap<Occupation, Gq>, n_max: u32) -> Self {
        amps.retain(|_, a| !a.is_zero());
        FockState { amps, n_max }
    }

    pub fn truncation(&self) -> u32 {
        self.n_max
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (&Occupation, &Gq)> {
        self.amps.iter()
    }

    pub fn amplitude(&self, occ: &Occupation) -> Gq {
        self.amps.get(occ).cloned().unwrap_or_else(|| gq(0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut amps = self.amps.clone();
        for (occ, amp) in &other.amps {
            let entry = amps.entry(*occ).or_insert_with(|| gq(0, 0));
            *entry = entry.clone() - amp.clone();
        }
        Self::from_map(amps, self.n_max.max(other.n_max))
    }

    /// Squared Fock norm `Σ |amp|² Π n_r!`; the factorial weights are the
    /// monomial-basis Gram factors `⟨n|n⟩`.
    pub fn norm_sqr(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for (occ, amp) in &self.amps {
            let mut weight = BigRational::one();
            for &n in occ {
                for k in 1..=n as i64 {
                    weight *= BigRational::from_integer(k.into());
                }
            }
            acc += crate::scalar::norm_sqr(amp) * weight;
        }
        acc
    }
}

/// Enumerates the occupation basis with total occupation ≤ `n_max` in graded
/// lexicographic order.
pub fn occupation_basis(n_max: u32) -> Vec<Occupation> {
    let mut out = Vec::new();
    for total in 0..=n_max {
        for n1 in 0..=total {
            for n2 in 0..=total - n1 {
                for n3 in 0..=total - n1 - n2 {
                    let n4 = total - n1 - n2 - n3;
                    out.push([n1, n2, n3, n4]);
                }
            }
        }
    }
    out
}

/// Sparse matrix of an operator on the truncated Fock space, columns indexed
/// by [`occupation_basis`].
#[derive(Debug, Clone, PartialEq)]
pub struct FockMatrix {
    basis: Vec<Occupation>,
    index: BTreeMap<Occupation, usize>,
    /// `columns[j]` lists `(row, entry)` pairs for basis ket `j`.
    columns: Vec<Vec<(usize, Gq)>>,
}

impl FockMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Occupation] {
        &self.basis
    }

    pub fn entry(&self, row: usize, col: usize) -> Gq {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(|| gq(0, 0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Gq> = BTreeMap::new();
                for (mid, w) in col {
                    for (row, v) in &self.columns[*mid] {
                        let entry = acc.entry(*row).or_insert_with(|| gq(0, 0));
                        *entry = entry.clone() + v.clone() * w.clone();
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        FockMatrix {
            basis: self.basis.clone(),
            index: self.index.clone(),
            columns,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Gq> = BTreeMap::new();
                for (row, v) in a {
                    acc.insert(*row, v.clone());
                }
                for (row, v) in b {
                    let entry = acc.entry(*row).or_insert_with(|| gq(0, 0));
                    *entry = entry.clone() - v.clone();
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        FockMatrix {
            basis: self.basis.clone(),
            index: self.index.clone(),
            columns,
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// True when the columns over kets with total occupation ≤ `total_bound`
    /// agree with `other`. Restricting to an interior bound discounts
    /// truncation leakage from raising terms.
    pub fn columns_agree_on(&self, other: &Self, total_bound: u32) -> bool {
        for (j, occ) in self.basis.iter().enumerate() {
            if occ.iter().sum::<u32>() > total_bound {
                continue;
            }
            let mut a = self.columns[j].clone();
            let mut b = other.columns[j].clone();
            a.sort_by_key(|(r, _)| *r);
            b.sort_by_key(|(r, _)| *r);
            if a != b {
                return false;
            }
        }
        true
    }
}

/// Matrix of `op` on the occupation basis with total occupation ≤ `n_max`,
/// in the unnormalized monomial basis (all entries exact rationals).
pub fn matrix_representation(op: &QuadraticOperator, n_max: u32) -> FockMatrix {
    let basis = occupation_basis(n_max);
    let index: BTreeMap<Occupation, usize> =
        basis.iter().enumerate().map(|(i, occ)| (*occ, i)).collect();
    let columns = basis
        .iter()
        .map(|occ| {
            let image = op.apply(&FockState::basis_ket(*occ, n_max));
            image
                .amplitudes()
                .map(|(t, amp)| (index[t], amp.clone()))
                .collect()
        })
        .collect();
    FockMatrix {
        basis,
        index,
        columns,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(r: u8) -> ModeIndex {
        ModeIndex::new(r).unwrap()
    }

    #[test]
    fn number_operator_on_vacuum_and_one_ur() {
        let n = number_operator();
        let vac = FockState::vacuum(4);
        assert_eq!(n.apply(&vac), FockState::from_map(
            [([0, 0, 0, 0], gq(2, 0))].into_iter().collect(),
            4,
        ));
        let one_ur = FockState::basis_ket([1, 0, 0, 0], 4);
        let image = n.apply(&one_ur);
        assert_eq!(image.amplitude(&[1, 0, 0, 0]), gq(3, 0));
        assert_eq!(image.amplitudes().count(), 1);
    }

    #[test]
    fn number_operator_is_hermitian() {
        assert!(number_operator().is_hermitian());
    }

    #[test]
    fn single_ccr_bracket() {
        // [a†₁a₁, a†₁a₂] = a†₁a₂
        let p = QuadraticOperator::raise_lower(m(1), m(1));
        let q = QuadraticOperator::raise_lower(m(1), m(2));
        assert_eq!(p.commutator(&q), q);
    }

    #[test]
    fn bracket_antisymmetry_and_self() {
        let p = QuadraticOperator::raise_lower(m(1), m(3))
            .add(&QuadraticOperator::raise_raise(m(2), m(2)).scale(&gq(0, 1)));
        let q = QuadraticOperator::lower_lower(m(1), m(2))
            .add(&QuadraticOperator::raise_lower(m(4), m(4)).scale(&gq(3, -1)));
        assert!(p.commutator(&p).is_zero());
        assert!(p.commutator(&q).add(&q.commutator(&p)).is_zero());
    }

    #[test]
    fn single_mode_pair_bracket() {
        // [a†₁a†₁, a₁a₁] = -4 a†₁a₁ - 2
        let b = QuadraticOperator::raise_raise(m(1), m(1));
        let c = QuadraticOperator::lower_lower(m(1), m(1));
        let expect = QuadraticOperator::raise_lower(m(1), m(1))
            .scale(&gq(-4, 0))
            .add(&QuadraticOperator::constant(gq(-2, 0)));
        assert_eq!(b.commutator(&c), expect);
    }

    #[test]
    fn quantized_tetrad_hermitian_and_vacuum_silent() {
        let theta = quantize_tetrad();
        for op in &theta {
            assert!(op.is_hermitian());
            assert!(op.vacuum_expectation().is_zero());
        }
        // The spatial x̂ and ŷ legs have no diagonal raise-lower terms.
        for op in &theta[4..12] {
            for r in 0..MODE_COUNT {
                assert!(op.alpha()[r][r].is_zero());
            }
        }
    }

    #[test]
    fn time_component_matches_number_operator() {
        // n̂ = 2 t̂₀ + 2
        let theta = quantize_tetrad();
        let reconstructed = theta[0]
            .scale(&gq(2, 0))
            .add(&QuadraticOperator::constant(gq(NUMBER_ZERO_POINT, 0)));
        assert_eq!(reconstructed, number_operator());
        assert!(theta[0].commutator(&number_operator()).is_zero());
    }

    #[test]
    fn truncated_space_dimension() {
        assert_eq!(occupation_basis(4).len(), 70);
        assert_eq!(occupation_basis(3).len(), 35);
    }

    #[test]
    fn number_operator_matrix_is_diagonal_with_zero_point() {
        let mat = matrix_representation(&number_operator(), 2);
        for (j, occ) in mat.basis().to_vec().iter().enumerate() {
            let total: u32 = occ.iter().sum();
            for i in 0..mat.dim() {
                let expect = if i == j {
                    gq(total as i64 + NUMBER_ZERO_POINT, 0)
                } else {
                    gq(0, 0)
                };
                assert_eq!(mat.entry(i, j), expect);
            }
        }
    }

    #[test]
    fn single_hop_matrix_element() {
        // a†₁a₂ maps |0,1,0,0⟩ to |1,0,0,0⟩.
        let hop = QuadraticOperator::raise_lower(m(1), m(2));
        let image = hop.apply(&FockState::basis_ket([0, 1, 0, 0], 4));
        assert_eq!(image, FockState::basis_ket([1, 0, 0, 0], 4));
    }

    #[test]
    fn symbolic_commutator_matches_matrix_commutator() {
        let p = QuadraticOperator::raise_lower(m(1), m(2))
            .add(&QuadraticOperator::raise_raise(m(1), m(3)).scale(&gq(2, 1)));
        let q = QuadraticOperator::lower_lower(m(2), m(3))
            .add(&QuadraticOperator::raise_lower(m(3), m(3)).scale(&gq(0, -2)));
        let n_max = 7;
        let lhs = matrix_representation(&p.commutator(&q), n_max);
        let rhs = matrix_representation(&p, n_max).commutator(&matrix_representation(&q, n_max));
        assert!(lhs.columns_agree_on(&rhs, 3));
    }

    #[test]
    fn fock_norm_uses_factorial_weights() {
        let state = FockState::basis_ket([2, 0, 1, 0], 4);
        // ⟨n|n⟩ = 2!·1! = 2 in the monomial basis.
        assert_eq!(state.norm_sqr(), BigRational::from_integer(2.into()));
        assert!(state.norm_sqr() > BigRational::zero());
    }

    #[test]
    fn mode_index_range() {
        assert!(ModeIndex::new(0).is_none());
        assert!(ModeIndex::new(5).is_none());
        assert_eq!(ModeIndex::new(3).unwrap().index(), 2);
    }
}
