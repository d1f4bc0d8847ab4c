//! Real Lie-algebra closure of quadratic operators and exact classification
//! of the result: Killing form, center, derived algebra, and the
//! decomposition into commuting minimal ideals.
//!
//! Everything here runs in rational arithmetic. A closure is computed by
//! iterating brackets and real-linear spans until the span stabilizes; an
//! element like `i·P` enters only when a bracket produces it. The ambient
//! space is the quadratic sector over four modes, whose real dimension is
//!
//! ```text
//! 2·(1 scalar + 16 a†a + 10 a†a† + 10 aa) = 74
//! ```
//!
//! Classification works from the structure constants alone. Minimal ideals
//! are found by κ-orthogonal splitting: below [`CENTROID_CERT_BOUND`] the
//! split is driven by the centroid (the commutant of the adjoint
//! representation), which also certifies simplicity — centroid dimension 1
//! means absolutely simple, dimension 2 with an irreducible negative-
//! discriminant minimal polynomial means simple of complex type (the
//! `sl(2,ℂ)`-as-real case). Above the bound only generator probing is used
//! and pieces that resist splitting are reported as uncertified.

use crate::fock::{ModeIndex, QuadraticOperator};
use crate::scalar::gq;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

type Q = BigRational;

/// Real dimension of the quadratic sector over four modes.
pub const AMBIENT_REAL_DIM: usize = 74;

/// Largest piece for which the centroid certificate is computed.
pub const CENTROID_CERT_BOUND: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum LieError {
    #[error("closure requires at least one nonzero generator")]
    EmptyGenerators,
    #[error("closure exceeded the ambient quadratic-sector dimension {0}; the bracket engine is broken")]
    NoConvergence(usize),
    #[error("structure constants are not a Lie algebra: {0}")]
    NotClosed(String),
}

// ---------------------------------------------------------------------------
// Coordinates and exact linear algebra helpers
// ---------------------------------------------------------------------------

/// Flattens an operator into real coordinates: scalar, α (row-major), and the
/// upper triangles of β and γ, real and imaginary parts interleaved.
pub fn real_coordinates(op: &QuadraticOperator) -> Vec<Q> {
    let mut v = Vec::with_capacity(AMBIENT_REAL_DIM);
    v.push(op.scalar_part().re.clone());
    v.push(op.scalar_part().im.clone());
    for r in 0..4 {
        for s in 0..4 {
            v.push(op.alpha()[r][s].re.clone());
            v.push(op.alpha()[r][s].im.clone());
        }
    }
    for r in 0..4 {
        for s in r..4 {
            v.push(op.beta()[r][s].re.clone());
            v.push(op.beta()[r][s].im.clone());
        }
    }
    for r in 0..4 {
        for s in r..4 {
            v.push(op.gamma()[r][s].re.clone());
            v.push(op.gamma()[r][s].im.clone());
        }
    }
    v
}

fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Q::is_zero)
}

/// Incremental echelon span with bookkeeping that expresses every reduced row
/// as a combination of the inserted basis elements, so membership tests also
/// return exact coordinates.
struct SpanSolver {
    rows: Vec<Vec<Q>>,
    exprs: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    basis_count: usize,
}

impl SpanSolver {
    fn new() -> Self {
        SpanSolver {
            rows: Vec::new(),
            exprs: Vec::new(),
            pivots: Vec::new(),
            basis_count: 0,
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; returns the residual and the combination
    /// of basis elements that was subtracted.
    fn reduce(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        let mut res = v.to_vec();
        let mut combo = vec![Q::zero(); self.basis_count];
        for (row, (expr, &p)) in self
            .rows
            .iter()
            .zip(self.exprs.iter().zip(self.pivots.iter()))
        {
            if res[p].is_zero() {
                continue;
            }
            let factor = res[p].clone() / row[p].clone();
            for (r, x) in res.iter_mut().zip(row.iter()) {
                if !x.is_zero() {
                    *r -= factor.clone() * x.clone();
                }
            }
            for (c, e) in combo.iter_mut().zip(expr.iter()) {
                if !e.is_zero() {
                    *c += factor.clone() * e.clone();
                }
            }
        }
        (res, combo)
    }

    /// Expresses `v` in terms of the inserted basis if it lies in the span.
    fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (res, combo) = self.reduce(v);
        is_zero_vec(&res).then_some(combo)
    }

    /// Inserts `v` as basis element number `basis_count` if independent.
    fn insert(&mut self, v: Vec<Q>) -> bool {
        let (res, combo) = self.reduce(&v);
        let Some(p) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        for expr in &mut self.exprs {
            expr.push(Q::zero());
        }
        let mut expr = combo
            .iter()
            .map(|c| -c.clone())
            .collect::<Vec<_>>();
        expr.push(Q::one());
        self.rows.push(res);
        self.exprs.push(expr);
        self.pivots.push(p);
        self.basis_count += 1;
        true
    }
}

/// Reduced echelon basis of a list of vectors, deterministic.
fn echelon_basis(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in vectors {
        let mut res = v.clone();
        for (row, &p) in rows.iter().zip(pivots.iter()) {
            if !res[p].is_zero() {
                let factor = res[p].clone() / row[p].clone();
                for (r, x) in res.iter_mut().zip(row.iter()) {
                    if !x.is_zero() {
                        *r -= factor.clone() * x.clone();
                    }
                }
            }
        }
        if let Some(p) = res.iter().position(|x| !x.is_zero()) {
            let lead = res[p].clone();
            for x in res.iter_mut() {
                *x /= lead.clone();
            }
            rows.push(res);
            pivots.push(p);
        }
    }
    rows
}

/// Basis of `{x : M x = 0}` where `rows` are the rows of `M`.
fn kernel_of(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    // Full reduced row echelon form (echelon_basis already normalizes the
    // leading entries), then one free variable per non-pivot column.
    let mut rref = echelon_basis(rows);
    let pivot_cols: Vec<usize> = rref
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    for i in 0..rref.len() {
        let p = pivot_cols[i];
        let upper = rref[i].clone();
        for j in 0..i {
            let factor = rref[j][p].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in rref[j].iter_mut().zip(upper.iter()) {
                if !y.is_zero() {
                    *x -= factor.clone() * y.clone();
                }
            }
        }
    }
    let mut kernel = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in rref.iter().zip(pivot_cols.iter()) {
            v[p] = -row[free].clone();
        }
        kernel.push(v);
    }
    kernel
}

/// Signature `(positive, negative, zero)` of a symmetric rational matrix via
/// exact congruence diagonalization.
pub fn symmetric_signature(mat: &[Vec<Q>]) -> (usize, usize, usize) {
    let n = mat.len();
    let mut a: Vec<Vec<Q>> = mat.to_vec();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut idx = 0;
    while idx < n {
        if a[idx][idx].is_zero() {
            if let Some(j) = (idx + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(idx, j);
                for row in a.iter_mut() {
                    row.swap(idx, j);
                }
            } else if let Some(j) = (idx + 1..n).find(|&j| !a[idx][j].is_zero()) {
                // Make the diagonal entry nonzero: row/col idx += row/col j.
                for c in 0..n {
                    let add = a[j][c].clone();
                    a[idx][c] += add;
                }
                for r in 0..n {
                    let add = a[r][j].clone();
                    a[r][idx] += add;
                }
            } else {
                zero += 1;
                idx += 1;
                continue;
            }
        }
        let d = a[idx][idx].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in idx + 1..n {
            if a[r][idx].is_zero() {
                continue;
            }
            let factor = a[r][idx].clone() / d.clone();
            for c in 0..n {
                let sub = factor.clone() * a[idx][c].clone();
                a[r][c] -= sub;
            }
            for rr in 0..n {
                let sub = factor.clone() * a[rr][idx].clone();
                a[rr][r] -= sub;
            }
        }
        idx += 1;
    }
    (pos, neg, zero)
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

/// Structure constants `c_{ij}^k` of a real Lie algebra on an ordered basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Vec<Vec<Q>>>,
}

impl StructureConstants {
    pub fn new(dim: usize, c: Vec<Vec<Vec<Q>>>) -> Self {
        assert_eq!(c.len(), dim);
        StructureConstants { dim, c }
    }

    /// Builds from integer entries `(i, j, k, value)`; missing entries are
    /// zero and the antisymmetric counterpart is filled in automatically.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
        for &(i, j, k, v) in entries {
            c[i][j][k] = Q::from_integer(v.into());
            c[j][i][k] = Q::from_integer((-v).into());
        }
        StructureConstants { dim, c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[i][j][k]
    }

    /// Coordinates of `[x, y]`.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (k, o) in out.iter_mut().enumerate() {
                    if !self.c[i][j][k].is_zero() {
                        *o += xy.clone() * self.c[i][j][k].clone();
                    }
                }
            }
        }
        out
    }

    /// Checks antisymmetry and the Jacobi identity exactly.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.c[i][j][k] != -self.c[j][i][k].clone() {
                        return Err(LieError::NotClosed(format!(
                            "antisymmetry fails at ({i},{j})^{k}"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in 0..n {
                        let mut acc = Q::zero();
                        for m in 0..n {
                            if !self.c[i][j][m].is_zero() && !self.c[m][k][l].is_zero() {
                                acc += self.c[i][j][m].clone() * self.c[m][k][l].clone();
                            }
                            if !self.c[j][k][m].is_zero() && !self.c[m][i][l].is_zero() {
                                acc += self.c[j][k][m].clone() * self.c[m][i][l].clone();
                            }
                            if !self.c[k][i][m].is_zero() && !self.c[m][j][l].is_zero() {
                                acc += self.c[k][i][m].clone() * self.c[m][j][l].clone();
                            }
                        }
                        if !acc.is_zero() {
                            return Err(LieError::NotClosed(format!(
                                "Jacobi fails on triple ({i},{j},{k}) component {l}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Killing form `κ_{ij} = tr(ad_i ∘ ad_j)`.
    pub fn killing_form(&self) -> Vec<Vec<Q>> {
        let n = self.dim;
        let mut kappa = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut acc = Q::zero();
                for k in 0..n {
                    for l in 0..n {
                        if !self.c[i][k][l].is_zero() && !self.c[j][l][k].is_zero() {
                            acc += self.c[i][k][l].clone() * self.c[j][l][k].clone();
                        }
                    }
                }
                kappa[i][j] = acc.clone();
                kappa[j][i] = acc;
            }
        }
        kappa
    }

    /// Structure constants restricted to an ideal, in the ideal's own basis.
    /// Returns `None` if the subspace is not closed under the bracket.
    pub fn restrict(&self, subspace: &[Vec<Q>]) -> Option<StructureConstants> {
        let mut solver = SpanSolver::new();
        for v in subspace {
            solver.insert(v.clone());
        }
        let d = subspace.len();
        let mut c = vec![vec![vec![Q::zero(); d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let br = self.bracket(&subspace[i], &subspace[j]);
                let coords = solver.coordinates(&br)?;
                c[i][j] = coords;
            }
        }
        Some(StructureConstants { dim: d, c })
    }
}

// ---------------------------------------------------------------------------
// Closure
// ---------------------------------------------------------------------------

/// Result of a Lie closure: a reduced basis and its structure constants.
#[derive(Debug, Clone)]
pub struct LieClosure {
    pub basis: Vec<QuadraticOperator>,
    pub constants: StructureConstants,
}

impl LieClosure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// True when `other` spans the same subspace.
    pub fn same_span(&self, other: &LieClosure) -> bool {
        let mut solver = SpanSolver::new();
        for op in &self.basis {
            solver.insert(real_coordinates(op));
        }
        if other.basis.len() != solver.dim() {
            return false;
        }
        other
            .basis
            .iter()
            .all(|op| solver.coordinates(&real_coordinates(op)).is_some())
    }
}

/// Smallest real Lie algebra containing the generators: iterated brackets and
/// real-linear spans until the span stabilizes, with exact rank tests.
pub fn lie_closure(generators: &[QuadraticOperator]) -> Result<LieClosure, LieError> {
    let mut solver = SpanSolver::new();
    let mut basis: Vec<QuadraticOperator> = Vec::new();
    for g in generators {
        if solver.insert(real_coordinates(g)) {
            basis.push(g.clone());
        }
    }
    if basis.is_empty() {
        return Err(LieError::EmptyGenerators);
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let w = basis[i].commutator(&basis[j]);
            if w.is_zero() {
                continue;
            }
            if solver.insert(real_coordinates(&w)) {
                basis.push(w);
                if basis.len() > AMBIENT_REAL_DIM {
                    return Err(LieError::NoConvergence(AMBIENT_REAL_DIM));
                }
            }
        }
        i += 1;
    }

    let dim = basis.len();
    let mut c = vec![vec![vec![Q::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let w = basis[i].commutator(&basis[j]);
            let coords = solver
                .coordinates(&real_coordinates(&w))
                .expect("bracket of closure basis stays in the closure");
            c[i][j] = coords;
        }
    }
    Ok(LieClosure {
        basis,
        constants: StructureConstants { dim, c },
    })
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// Summary of one minimal ideal in the decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSummary {
    pub dim: usize,
    /// Killing signature `(pos, neg, zero)` of the ideal as its own algebra.
    pub killing_signature: (usize, usize, usize),
    /// True when the centroid certificate proves the ideal simple.
    pub simple_certified: bool,
    /// `Some(true)` when the centroid is an imaginary-quadratic field, the
    /// complex-type case of `sl(2,ℂ)` viewed as a real algebra.
    pub complex_type: Option<bool>,
    pub centroid_dim: Option<usize>,
}

/// Full classification report for a structure-constant set.
#[derive(Debug, Clone)]
pub struct AlgebraReport {
    pub dim: usize,
    pub killing_rank: usize,
    pub killing_signature: (usize, usize, usize),
    pub center_dim: usize,
    pub derived_dim: usize,
    pub reductive: bool,
    pub semisimple: bool,
    /// Minimal ideals of the semisimple part (the whole algebra when it is
    /// semisimple, the derived algebra when merely reductive).
    pub ideals: Vec<IdealSummary>,
    /// Whether the algebra is exactly two commuting 6-dimensional simple
    /// ideals of complex type with the `sl(2,ℂ)`-as-real Killing signature.
    pub matches_sl2c_pair: bool,
    pub notes: Vec<String>,
}

fn identity_subspace(dim: usize) -> Vec<Vec<Q>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![Q::zero(); dim];
            v[i] = Q::one();
            v
        })
        .collect()
}

/// The ideal of the full algebra generated by `x`.
fn ideal_generated(sc: &StructureConstants, x: &[Q]) -> Vec<Vec<Q>> {
    let mut solver = SpanSolver::new();
    let mut members: Vec<Vec<Q>> = Vec::new();
    if solver.insert(x.to_vec()) {
        members.push(x.to_vec());
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..sc.dim() {
            let mut e = vec![Q::zero(); sc.dim()];
            e[j] = Q::one();
            let w = sc.bracket(&members[i], &e);
            if !is_zero_vec(&w) && solver.insert(w.clone()) {
                members.push(w);
            }
        }
        i += 1;
    }
    echelon_basis(&members)
}

/// κ-orthogonal complement of `inner` within `outer`.
fn kappa_complement(
    kappa: &[Vec<Q>],
    inner: &[Vec<Q>],
    outer: &[Vec<Q>],
) -> Vec<Vec<Q>> {
    // Solve for coefficients t (over outer's basis) with κ(Σ t_a outer_a, inner_b) = 0.
    let n = kappa.len();
    let rows: Vec<Vec<Q>> = inner
        .iter()
        .map(|w| {
            // row_a = κ(outer_a, w)
            (0..outer.len())
                .map(|a| {
                    let mut acc = Q::zero();
                    for i in 0..n {
                        if outer[a][i].is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            if !w[j].is_zero() && !kappa[i][j].is_zero() {
                                acc += outer[a][i].clone() * kappa[i][j].clone() * w[j].clone();
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let coeff_kernel = kernel_of(&rows, outer.len());
    let vectors: Vec<Vec<Q>> = coeff_kernel
        .iter()
        .map(|t| {
            let mut v = vec![Q::zero(); n];
            for (a, ta) in t.iter().enumerate() {
                if ta.is_zero() {
                    continue;
                }
                for (vi, oi) in v.iter_mut().zip(outer[a].iter()) {
                    *vi += ta.clone() * oi.clone();
                }
            }
            v
        })
        .collect();
    echelon_basis(&vectors)
}

/// Centroid of the algebra given by `sc`: all `T` with `T[x,y] = [Tx,y]`.
/// Returned as a basis of matrices (row-major `dim×dim`).
fn centroid(sc: &StructureConstants) -> Vec<Vec<Q>> {
    let n = sc.dim();
    // Unknowns: T[k][l], row-major. Equations: for all basis pairs (i,j) and
    // output component m:  Σ_k c_{ij}^k T[m? ...]
    // T([e_i,e_j]) = [T e_i, e_j]  componentwise:
    //   Σ_k c_{ij}^k T[m][k]  =  Σ_k T[k][i] c_{kj}^m
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for k in 0..n {
                    if !sc.get(i, j, k).is_zero() {
                        row[m * n + k] += sc.get(i, j, k).clone();
                    }
                    if !sc.get(k, j, m).is_zero() {
                        row[k * n + i] -= sc.get(k, j, m).clone();
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    kernel_of(&rows, n * n)
}

fn mat_mul_flat(a: &[Q], b: &[Q], n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n * n];
    for r in 0..n {
        for k in 0..n {
            if a[r * n + k].is_zero() {
                continue;
            }
            for c in 0..n {
                if !b[k * n + c].is_zero() {
                    out[r * n + c] += a[r * n + k].clone() * b[k * n + c].clone();
                }
            }
        }
    }
    out
}

/// Minimal polynomial of the matrix `t` (flat `n×n`), found as the first
/// linear dependency among its powers. Coefficients from constant upward.
fn minimal_polynomial(t: &[Q], n: usize) -> Vec<Q> {
    let mut solver = SpanSolver::new();
    let mut power: Vec<Q> = {
        let mut id = vec![Q::zero(); n * n];
        for i in 0..n {
            id[i * n + i] = Q::one();
        }
        id
    };
    loop {
        if let Some(coords) = solver.coordinates(&power) {
            // power = Σ coords_k T^k, so the minimal polynomial is
            // x^deg - Σ coords_k x^k.
            let mut poly: Vec<Q> = coords.iter().map(|c| -c.clone()).collect();
            poly.push(Q::one());
            return poly;
        }
        solver.insert(power.clone());
        power = mat_mul_flat(&power, t, n);
    }
}

/// Rational roots of a rational polynomial (constant coefficient first),
/// found by exact evaluation over divisor candidates of the normalized
/// integer polynomial.
fn rational_roots(poly: &[Q]) -> Vec<Q> {
    use num_bigint::BigInt;
    // Clear denominators.
    let mut lcm = BigInt::from(1);
    for c in poly {
        let d = c.denom().clone();
        let g = num_integer::Integer::gcd(&lcm, &d);
        lcm = lcm / g * d;
    }
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let Some(lead) = ints.last().filter(|x| !x.is_zero()) else {
        return Vec::new();
    };
    let tail = match ints.iter().position(|x| !x.is_zero()) {
        Some(k) => k,
        None => return Vec::new(),
    };
    // x^tail divides; root 0 when tail > 0.
    let mut roots = Vec::new();
    if tail > 0 {
        roots.push(Q::zero());
    }
    let a0 = &ints[tail];
    let eval = |x: &Q| -> Q {
        let mut acc = Q::zero();
        for c in ints.iter().rev() {
            acc = acc * x.clone() + Q::from_integer(c.clone());
        }
        acc
    };
    let divisors = |x: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let target = x.magnitude().clone();
        let mut d = num_bigint::BigUint::from(1u32);
        // Candidate divisors up to |x|; the polynomials here are tiny.
        while &d * &d <= target {
            if (&target % &d).is_zero() {
                out.push(BigInt::from(d.clone()));
                out.push(BigInt::from(&target / &d));
            }
            d += 1u32;
        }
        out.sort();
        out.dedup();
        out
    };
    for p in divisors(a0) {
        for q in divisors(lead) {
            for sign in [1i64, -1] {
                let cand = Q::new(p.clone() * BigInt::from(sign), q.clone());
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

enum PieceOutcome {
    Split(Vec<Vec<Q>>, Vec<Vec<Q>>),
    Final(IdealSummary, Option<String>),
}

/// Analyzes one κ-nondegenerate piece: try to split it into smaller ideals,
/// otherwise finalize it with whatever certificate is available.
fn analyze_piece(
    sc: &StructureConstants,
    kappa: &[Vec<Q>],
    piece: &[Vec<Q>],
) -> PieceOutcome {
    let local = sc
        .restrict(piece)
        .expect("piece is an ideal, closed under the bracket");
    let local_kappa = local.killing_form();
    let signature = symmetric_signature(&local_kappa);
    let p = piece.len();

    if p <= CENTROID_CERT_BOUND {
        let cent = centroid(&local);
        let cdim = cent.len();
        // Look for a centroid element with a proper rational eigenspace.
        for t in &cent {
            let poly = minimal_polynomial(t, p);
            if poly.len() <= 2 {
                continue; // scalar element
            }
            for root in rational_roots(&poly) {
                // rows of (T - root·I)
                let rows: Vec<Vec<Q>> = (0..p)
                    .map(|r| {
                        (0..p)
                            .map(|c| {
                                let mut v = t[r * p + c].clone();
                                if r == c {
                                    v -= root.clone();
                                }
                                v
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel_of(&rows, p);
                if !ker.is_empty() && ker.len() < p {
                    // Map local coordinates back to the ambient algebra.
                    let to_global = |loc: &Vec<Q>| -> Vec<Q> {
                        let mut v = vec![Q::zero(); sc.dim()];
                        for (a, la) in loc.iter().enumerate() {
                            if la.is_zero() {
                                continue;
                            }
                            for (vi, pi) in v.iter_mut().zip(piece[a].iter()) {
                                *vi += la.clone() * pi.clone();
                            }
                        }
                        v
                    };
                    let inner: Vec<Vec<Q>> =
                        echelon_basis(&ker.iter().map(to_global).collect::<Vec<_>>());
                    let rest = kappa_complement(kappa, &inner, piece);
                    if inner.len() + rest.len() == p {
                        return PieceOutcome::Split(inner, rest);
                    }
                }
            }
        }
        // No rational split: classify by centroid dimension.
        let (certified, complex_type, note) = match cdim {
            1 => (true, Some(false), None),
            2 => {
                let t = cent
                    .iter()
                    .find(|t| minimal_polynomial(t, p).len() > 2)
                    .cloned();
                match t {
                    Some(t) => {
                        let poly = minimal_polynomial(&t, p);
                        // Degree-2 minimal polynomial x² + bx + c.
                        let b = poly[1].clone() / poly[2].clone();
                        let c = poly[0].clone() / poly[2].clone();
                        let disc = b.clone() * b - Q::from_integer(4.into()) * c;
                        if disc.is_negative() {
                            (true, Some(true), None)
                        } else {
                            (
                                false,
                                None,
                                Some(
                                    "centroid is a real quadratic field; the piece splits over \
                                     the reals but not over the rationals"
                                        .to_string(),
                                ),
                            )
                        }
                    }
                    None => (false, None, Some("degenerate centroid basis".to_string())),
                }
            }
            _ => (
                false,
                None,
                Some(format!(
                    "centroid dimension {cdim} with no rational split found"
                )),
            ),
        };
        PieceOutcome::Final(
            IdealSummary {
                dim: p,
                killing_signature: signature,
                simple_certified: certified,
                complex_type,
                centroid_dim: Some(cdim),
            },
            note,
        )
    } else {
        // Above the certificate bound: probe with basis vectors only.
        for probe in piece {
            let ideal = ideal_generated(sc, probe);
            if ideal.len() < p {
                let rest = kappa_complement(kappa, &ideal, piece);
                if ideal.len() + rest.len() == p {
                    return PieceOutcome::Split(ideal, rest);
                }
            }
        }
        PieceOutcome::Final(
            IdealSummary {
                dim: p,
                killing_signature: signature,
                simple_certified: false,
                complex_type: None,
                centroid_dim: None,
            },
            Some(format!(
                "piece of dimension {p} exceeds the centroid certificate bound \
                 {CENTROID_CERT_BOUND}; no proper ideal found by generator probing"
            )),
        )
    }
}

/// Killing signature of `sl(2,ℂ)` viewed as a real 6-dimensional algebra,
/// computed from a hand-built structure-constant set rather than hardcoded.
pub fn sl2c_real_signature() -> (usize, usize, usize) {
    let sc = sl2c_real_structure_constants();
    sc.validate().expect("reference constants are a Lie algebra");
    symmetric_signature(&sc.killing_form())
}

/// Structure constants of `sl(2,ℂ)` as a real algebra on the ordered basis
/// `(H, E, F, iH, iE, iF)`.
pub fn sl2c_real_structure_constants() -> StructureConstants {
    // [H,E]=2E [H,F]=-2F [E,F]=H, with the complex unit distributed:
    // [x, iy] = i[x,y] and [ix, iy] = -[x,y].
    let mut entries: Vec<(usize, usize, usize, i64)> = Vec::new();
    // (index of H,E,F) = (0,1,2), (iH,iE,iF) = (3,4,5)
    let table: [(usize, usize, Vec<(usize, i64)>); 3] = [
        (0, 1, vec![(1, 2)]),  // [H,E] = 2E
        (0, 2, vec![(2, -2)]), // [H,F] = -2F
        (1, 2, vec![(0, 1)]),  // [E,F] = H
    ];
    for (i, j, terms) in &table {
        for &(k, v) in terms {
            entries.push((*i, *j, k, v)); // [x,y]
            entries.push((*i, j + 3, k + 3, v)); // [x,iy] = i[x,y]
            entries.push((i + 3, *j, k + 3, v)); // [ix,y] = i[x,y]
            entries.push((i + 3, j + 3, k, -v)); // [ix,iy] = -[x,y]
        }
    }
    StructureConstants::from_entries(6, &entries)
}

/// Classifies a structure-constant set: Killing data, center, derived
/// algebra, minimal-ideal decomposition, and the verdict against two
/// commuting copies of `sl(2,ℂ)` as a real algebra.
pub fn identify_algebra(sc: &StructureConstants) -> Result<AlgebraReport, LieError> {
    sc.validate()?;
    let n = sc.dim();
    let kappa = sc.killing_form();
    let signature = symmetric_signature(&kappa);
    let killing_rank = signature.0 + signature.1;

    // Center: kernel of x ↦ ad(x).
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let row: Vec<Q> = (0..n).map(|i| sc.get(i, j, k).clone()).collect();
            if !is_zero_vec(&row) {
                rows.push(row);
            }
        }
    }
    let center = kernel_of(&rows, n);
    let center_dim = center.len();

    // Derived algebra: span of all brackets.
    let mut bracket_vecs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<Q> = (0..n).map(|k| sc.get(i, j, k).clone()).collect();
            if !is_zero_vec(&v) {
                bracket_vecs.push(v);
            }
        }
    }
    let derived = echelon_basis(&bracket_vecs);
    let derived_dim = derived.len();

    // Reductive: L = Z ⊕ [L, L].
    let mut solver = SpanSolver::new();
    for v in &center {
        solver.insert(v.clone());
    }
    let mut independent = true;
    for v in &derived {
        if !solver.insert(v.clone()) {
            independent = false;
        }
    }
    let reductive = independent && center_dim + derived_dim == n;
    let semisimple = killing_rank == n;

    let mut notes = Vec::new();
    let mut ideals = Vec::new();

    // Decompose the semisimple part into minimal ideals.
    let semisimple_part: Option<Vec<Vec<Q>>> = if semisimple {
        Some(identity_subspace(n))
    } else if reductive && derived_dim > 0 {
        // The derived algebra of a reductive Lie algebra; analyze it with its
        // own Killing form.
        Some(derived.clone())
    } else {
        if derived_dim > 0 && !reductive {
            notes.push(
                "algebra is neither semisimple nor reductive; ideal decomposition limited to \
                 the center/derived split"
                    .to_string(),
            );
        }
        None
    };

    if let Some(part) = semisimple_part {
        let part_sc = match sc.restrict(&part) {
            Some(s) => s,
            None => {
                notes.push("derived subspace not closed; skipping decomposition".to_string());
                StructureConstants::new(0, Vec::new())
            }
        };
        if part_sc.dim() > 0 {
            let part_kappa_ok = {
                let k = part_sc.killing_form();
                let (p, m, z) = symmetric_signature(&k);
                let _ = p + m;
                z == 0
            };
            if part_kappa_ok {
                let mut worklist: Vec<Vec<Vec<Q>>> = vec![part];
                while let Some(piece) = worklist.pop() {
                    match analyze_piece(sc, &kappa, &piece) {
                        PieceOutcome::Split(a, b) => {
                            worklist.push(a);
                            worklist.push(b);
                        }
                        PieceOutcome::Final(summary, note) => {
                            if let Some(note) = note {
                                notes.push(note);
                            }
                            ideals.push(summary);
                        }
                    }
                }
                ideals.sort_by_key(|i| i.dim);
            } else {
                notes.push(
                    "derived algebra has degenerate Killing form; minimal-ideal decomposition \
                     skipped"
                        .to_string(),
                );
            }
        }
    }

    let reference = sl2c_real_signature();
    let matches_sl2c_pair = semisimple
        && n == 12
        && ideals.len() == 2
        && ideals.iter().all(|i| {
            i.dim == 6
                && i.simple_certified
                && i.complex_type == Some(true)
                && i.killing_signature == reference
        });

    Ok(AlgebraReport {
        dim: n,
        killing_rank,
        killing_signature: signature,
        center_dim,
        derived_dim,
        reductive,
        semisimple,
        ideals,
        matches_sl2c_pair,
        notes,
    })
}

/// The hand-built reference: two commuting copies of `sl(2,ℂ)` realized as
/// traceless quadratic operators on the `u` block (modes 1,2) and the `v`
/// block (modes 3,4), each with basis `(H, E, F, iH, iE, iF)`.
pub fn sl2c_pair_generators() -> Vec<QuadraticOperator> {
    let m = |r| ModeIndex::new(r).unwrap();
    let mut out = Vec::with_capacity(12);
    for base in [1u8, 3u8] {
        let h = QuadraticOperator::raise_lower(m(base), m(base)).sub(
            &QuadraticOperator::raise_lower(m(base + 1), m(base + 1)),
        );
        let e = QuadraticOperator::raise_lower(m(base), m(base + 1));
        let f = QuadraticOperator::raise_lower(m(base + 1), m(base));
        for op in [h, e, f] {
            out.push(op.clone());
            out.push(op.scale(&gq(0, 1)));
        }
    }
    out
}
