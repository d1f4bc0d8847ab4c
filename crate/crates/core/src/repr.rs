//! SU(2) representation bookkeeping: tensor-product multiplicities of N
//! spin-½ factors, Peter–Weyl dimensions on S³, the wavelength cutoff, and
//! SL(2,ℂ) label products.
//!
//! Spin labels are stored as twice-j integers so every count stays exact;
//! multiplicities use arbitrary precision since they grow like binomials.
//! "Tensor product" here is the ordinary one with full multiplicities.

use crate::biglog::BigLogNumber;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Half-integer spin label, stored as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpinLabel {
    twice_j: u32,
}

impl SpinLabel {
    pub fn from_twice_j(twice_j: u32) -> Self {
        SpinLabel { twice_j }
    }

    pub fn from_integer_j(j: u32) -> Self {
        SpinLabel { twice_j: 2 * j }
    }

    pub fn twice_j(self) -> u32 {
        self.twice_j
    }

    /// `2j + 1`.
    pub fn dimension(self) -> u64 {
        self.twice_j as u64 + 1
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice_j % 2 == 0 {
            write!(f, "{}", self.twice_j / 2)
        } else {
            write!(f, "{}/2", self.twice_j)
        }
    }
}

/// SL(2,ℂ) finite-dimensional label `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LorentzLabel {
    pub left: SpinLabel,
    pub right: SpinLabel,
}

impl LorentzLabel {
    pub fn new(left: SpinLabel, right: SpinLabel) -> Self {
        LorentzLabel { left, right }
    }

    /// `(2a+1)(2b+1)`.
    pub fn dimension(self) -> u64 {
        self.left.dimension() * self.right.dimension()
    }
}

impl fmt::Display for LorentzLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{})", self.left, self.right)
    }
}

/// Multiplicities `m(j, N)` of the spin-j irreducible in the N-fold tensor
/// power of the spin-½ representation.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityTable {
    n: u32,
    entries: BTreeMap<u32, BigUint>,
}

impl MultiplicityTable {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Multiplicity of spin `j` given as twice-j; zero when `2j > N` or
    /// `N - 2j` is odd.
    pub fn get(&self, twice_j: u32) -> BigUint {
        self.entries.get(&twice_j).cloned().unwrap_or_default()
    }

    /// `(twice_j, multiplicity)` pairs in increasing twice-j order.
    pub fn entries(&self) -> impl Iterator<Item = (&u32, &BigUint)> {
        self.entries.iter()
    }

    /// `Σ_j (2j+1) m(j,N)`, which must equal `2^N`.
    pub fn dimension_sum(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for (&t, m) in &self.entries {
            acc += BigUint::from(t as u64 + 1) * m;
        }
        acc
    }

    pub fn satisfies_sum_rule(&self) -> bool {
        self.dimension_sum() == BigUint::one() << self.n
    }
}

fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k as u64 {
        acc = acc * BigUint::from(n as u64 - i) / BigUint::from(i + 1);
    }
    acc
}

/// Multiplicity table of the N-fold tensor power of spin ½ from the ballot
/// (Catalan-triangle) formula `m(j, N) = C(N, N/2 - j) - C(N, N/2 - j - 1)`.
pub fn multiplicity(n: u32) -> MultiplicityTable {
    assert!(n >= 1, "need at least one tensor factor");
    let mut entries = BTreeMap::new();
    let mut twice_j = n % 2;
    while twice_j <= n {
        let k = (n - twice_j) / 2;
        let value = if k == 0 {
            BigUint::one()
        } else {
            binomial(n, k) - binomial(n, k - 1)
        };
        entries.insert(twice_j, value);
        twice_j += 2;
    }
    MultiplicityTable { n, entries }
}

/// Dimension of the spin-j block of L²(S³) under the regular representation:
/// the block occurs with multiplicity `2j+1`, giving `(2j+1)²`.
pub fn peter_weyl_dimension(j: SpinLabel) -> u64 {
    let d = j.dimension();
    d * d
}

/// `Σ_{j ≤ J} (2j+1)²` over half-integer steps, the count of hyperspherical
/// harmonics up to band `J`.
pub fn peter_weyl_cumulative(max: SpinLabel) -> u64 {
    (0..=max.twice_j())
        .map(|t| peter_weyl_dimension(SpinLabel::from_twice_j(t)))
        .sum()
}

/// The minimum resolvable wavelength `l₀ = R/√N` in a cosmos of `N` urs.
/// Exact when `√N` is rational (the fiducial powers of ten are); otherwise
/// the square root falls back to the deterministic digit-bounded
/// approximation of [`BigLogNumber::sqrt`].
pub fn cutoff_length(r: &BigLogNumber, n: &BigLogNumber) -> BigLogNumber {
    r.div(&n.sqrt())
}

/// Inverse of [`cutoff_length`]: the ur count `N = (R/l₀)²` implied by a
/// cutoff.
pub fn urs_for_cutoff(r: &BigLogNumber, l0: &BigLogNumber) -> BigLogNumber {
    let ratio = r.div(l0);
    ratio.mul(&ratio)
}

/// Clebsch–Gordan product of two SL(2,ℂ) labels:
/// `(a,b)⊗(c,d) = ⊕_{e=|a-c|..a+c} ⊕_{f=|b-d|..b+d} (e,f)`, each with
/// multiplicity one.
pub fn lorentz_decompose(left: LorentzLabel, right: LorentzLabel) -> Vec<(LorentzLabel, u64)> {
    let range = |a: SpinLabel, c: SpinLabel| -> Vec<SpinLabel> {
        let (ta, tc) = (a.twice_j(), c.twice_j());
        (ta.abs_diff(tc)..=ta + tc)
            .step_by(2)
            .map(SpinLabel::from_twice_j)
            .collect()
    };
    let mut out = Vec::new();
    for e in range(left.left, right.left) {
        for f in range(left.right, right.right) {
            out.push((LorentzLabel::new(e, f), 1));
        }
    }
    out
}

/// True when the product of the input dimensions equals the summed dimension
/// of the decomposition.
pub fn lorentz_dimensions_balance(left: LorentzLabel, right: LorentzLabel) -> bool {
    let total: u64 = lorentz_decompose(left, right)
        .iter()
        .map(|(label, mult)| label.dimension() * mult)
        .sum();
    total == left.dimension() * right.dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force branching oracle: couple one spin-½ factor at a time,
    /// `m'(j) = m(j-½) + m(j+½)`.
    fn branching_oracle(n: u32) -> BTreeMap<u32, BigUint> {
        let mut table: BTreeMap<u32, BigUint> = BTreeMap::new();
        table.insert(1, BigUint::one());
        for _ in 1..n {
            let mut next: BTreeMap<u32, BigUint> = BTreeMap::new();
            for (&t, m) in &table {
                if t >= 1 {
                    *next.entry(t - 1).or_default() += m.clone();
                }
                *next.entry(t + 1).or_default() += m.clone();
            }
            table = next;
        }
        table
    }

    #[test]
    fn two_factors_triplet_plus_singlet() {
        let t = multiplicity(2);
        assert_eq!(t.get(2), BigUint::one());
        assert_eq!(t.get(0), BigUint::one());
        assert_eq!(t.entries().count(), 2);
    }

    #[test]
    fn four_factors_match_hand_branching() {
        let t = multiplicity(4);
        assert_eq!(t.get(4), BigUint::one());
        assert_eq!(t.get(2), BigUint::from(3u32));
        assert_eq!(t.get(0), BigUint::from(2u32));
    }

    #[test]
    fn sum_rule_exact_up_to_thirty() {
        for n in 1..=30 {
            assert!(multiplicity(n).satisfies_sum_rule(), "sum rule fails at N={n}");
        }
        assert_eq!(
            multiplicity(30).dimension_sum(),
            BigUint::from(1073741824u64)
        );
    }

    #[test]
    fn matches_branching_oracle() {
        for n in 1..=12 {
            let t = multiplicity(n);
            let oracle = branching_oracle(n);
            for (&twice_j, m) in &oracle {
                assert_eq!(t.get(twice_j), m.clone(), "N={n}, 2j={twice_j}");
            }
            assert_eq!(t.entries().count(), oracle.len());
        }
    }

    #[test]
    fn top_spin_is_simple_and_table_unimodal() {
        for n in 1..=30 {
            let t = multiplicity(n);
            assert_eq!(t.get(n), BigUint::one());
            let values: Vec<BigUint> = t.entries().map(|(_, m)| m.clone()).collect();
            let peak = values
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1))
                .map(|(i, _)| i)
                .unwrap();
            for w in values[..=peak].windows(2) {
                assert!(w[0] <= w[1], "not unimodal below peak at N={n}");
            }
            for w in values[peak..].windows(2) {
                assert!(w[0] >= w[1], "not unimodal above peak at N={n}");
            }
        }
    }

    #[test]
    fn peter_weyl_small_blocks() {
        assert_eq!(peter_weyl_dimension(SpinLabel::from_twice_j(0)), 1);
        assert_eq!(peter_weyl_dimension(SpinLabel::from_twice_j(1)), 4);
        assert_eq!(peter_weyl_cumulative(SpinLabel::from_integer_j(1)), 14);
    }

    #[test]
    fn cutoff_closes_the_large_number_loop() {
        let r = BigLogNumber::pow10(60);
        let n = BigLogNumber::pow10(120);
        let l0 = cutoff_length(&r, &n);
        assert_eq!(l0, BigLogNumber::one());
        assert_eq!(l0.div(&r), BigLogNumber::pow10(-60));
        // Inverse mode recovers N.
        assert_eq!(urs_for_cutoff(&r, &l0), n);
        // N = 1 leaves the radius unchanged.
        assert_eq!(cutoff_length(&r, &BigLogNumber::one()), r);
    }

    #[test]
    fn lorentz_product_of_fundamentals() {
        let half = SpinLabel::from_twice_j(1);
        let zero = SpinLabel::from_twice_j(0);
        let d_half_0 = LorentzLabel::new(half, zero);
        let d_0_half = LorentzLabel::new(zero, half);
        // Same-chirality square: D(0,0) ⊕ D(1,0), singlet plus triplet.
        let same = lorentz_decompose(d_half_0, d_half_0);
        assert_eq!(
            same,
            vec![
                (LorentzLabel::new(zero, zero), 1),
                (LorentzLabel::new(SpinLabel::from_twice_j(2), zero), 1),
            ]
        );
        // Opposite-chirality product: the vector representation D(½,½).
        let mixed = lorentz_decompose(d_half_0, d_0_half);
        assert_eq!(mixed, vec![(LorentzLabel::new(half, half), 1)]);
        assert!(lorentz_dimensions_balance(d_half_0, d_half_0));
        assert!(lorentz_dimensions_balance(d_half_0, d_0_half));
    }

    #[test]
    fn identity_label_acts_trivially() {
        let id = LorentzLabel::new(SpinLabel::from_twice_j(0), SpinLabel::from_twice_j(0));
        let lab = LorentzLabel::new(SpinLabel::from_twice_j(3), SpinLabel::from_twice_j(2));
        assert_eq!(lorentz_decompose(id, lab), vec![(lab, 1)]);
    }

    #[test]
    fn dimension_balance_sweep() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let label = |rng: &mut rand_chacha::ChaCha8Rng| {
                LorentzLabel::new(
                    SpinLabel::from_twice_j(rng.gen_range(0..6)),
                    SpinLabel::from_twice_j(rng.gen_range(0..6)),
                )
            };
            let (a, b) = (label(&mut rng), label(&mut rng));
            assert!(lorentz_dimensions_balance(a, b));
        }
    }
}
