//! Seeded random inputs for property sweeps, shared by the command-line
//! front end and the test suites. Everything is driven by a ChaCha stream
//! cipher so a run is reproducible from its printed seed.

use crate::fock::{ModeIndex, QuadraticOperator};
use crate::scalar::gq;
use crate::spinor::{Dyad, FourVector, Matrix2, SL2CElement, Spinor};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn c_f64(rng: &mut ChaCha8Rng) -> Complex<f64> {
    Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    BigRational::new(num.into(), den.into())
}

fn c_rational(rng: &mut ChaCha8Rng) -> Complex<BigRational> {
    Complex::new(rational(rng), rational(rng))
}

pub fn spinor_f64(rng: &mut ChaCha8Rng) -> Spinor<f64> {
    Spinor::upper(c_f64(rng), c_f64(rng))
}

pub fn nonzero_spinor_f64(rng: &mut ChaCha8Rng) -> Spinor<f64> {
    loop {
        let s = spinor_f64(rng);
        let size = s.component(0).norm_sqr() + s.component(1).norm_sqr();
        if size > 0.1 {
            return s;
        }
    }
}

pub fn spinor_rational(rng: &mut ChaCha8Rng) -> Spinor<BigRational> {
    Spinor::upper(c_rational(rng), c_rational(rng))
}

pub fn nonzero_spinor_rational(rng: &mut ChaCha8Rng) -> Spinor<BigRational> {
    loop {
        let s = spinor_rational(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn fourvector_f64(rng: &mut ChaCha8Rng) -> FourVector<f64> {
    FourVector::new(
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-3.0..3.0),
    )
}

pub fn fourvector_rational(rng: &mut ChaCha8Rng) -> FourVector<BigRational> {
    FourVector::new(rational(rng), rational(rng), rational(rng), rational(rng))
}

/// Random element of SL(2,ℂ) in floats: a random matrix rescaled by a
/// principal square root of its determinant.
pub fn sl2c_f64(rng: &mut ChaCha8Rng) -> SL2CElement<f64> {
    loop {
        let m = Matrix2::new([[c_f64(rng), c_f64(rng)], [c_f64(rng), c_f64(rng)]]);
        let det = m.det();
        if det.norm_sqr() < 0.04 {
            continue;
        }
        let scale = det.sqrt().inv();
        let scaled = Matrix2::new(std::array::from_fn(|r| {
            std::array::from_fn(|c| m.e[r][c] * scale)
        }));
        if let Ok(a) = SL2CElement::new(scaled) {
            return a;
        }
    }
}

/// Random element of SL(2,ℂ) with Gaussian-rational entries and determinant
/// exactly one: a product of shears and a diagonal rescaling.
pub fn sl2c_rational(rng: &mut ChaCha8Rng) -> SL2CElement<BigRational> {
    let one = gq(1, 0);
    let zero = gq(0, 0);
    let mut m = Matrix2::new([[one.clone(), zero.clone()], [zero.clone(), one.clone()]]);
    for _ in 0..3 {
        let factor = match rng.gen_range(0..3) {
            0 => Matrix2::new([
                [one.clone(), c_rational(rng)],
                [zero.clone(), one.clone()],
            ]),
            1 => Matrix2::new([
                [one.clone(), zero.clone()],
                [c_rational(rng), one.clone()],
            ]),
            _ => {
                let mut a = rational(rng);
                if a.is_zero() {
                    a = BigRational::new(2.into(), 1.into());
                }
                let inv = BigRational::new(1.into(), 1.into()) / a.clone();
                Matrix2::new([
                    [Complex::new(a, BigRational::zero()), zero.clone()],
                    [zero.clone(), Complex::new(inv, BigRational::zero())],
                ])
            }
        };
        m = m.mul(&factor);
    }
    SL2CElement::new(m).expect("shear products are unimodular")
}

/// Random normalized dyad in floats. The acceptance threshold on the raw
/// symplectic norm keeps the rescaled components O(10), so squaring them in
/// downstream frame checks stays well clear of the 1e-10 tolerances.
pub fn dyad_f64(rng: &mut ChaCha8Rng) -> Dyad<f64> {
    loop {
        let u = nonzero_spinor_f64(rng);
        let v = spinor_f64(rng);
        if let Some(d) = Dyad::normalized(u, v, 0.25) {
            return d;
        }
    }
}

/// Random normalized dyad with exact rational symplectic norm one.
pub fn dyad_rational(rng: &mut ChaCha8Rng) -> Dyad<BigRational> {
    loop {
        let u = nonzero_spinor_rational(rng);
        let v = spinor_rational(rng);
        if let Some(d) = Dyad::normalized(u, v, 0.0) {
            return d;
        }
    }
}

/// Random quadratic operator with small Gaussian-rational coefficients,
/// mixing all three sectors.
pub fn quadratic_operator(rng: &mut ChaCha8Rng) -> QuadraticOperator {
    let mode = |rng: &mut ChaCha8Rng| ModeIndex::new(rng.gen_range(1..=4)).unwrap();
    let mut op = QuadraticOperator::zero();
    for _ in 0..3 {
        let r = mode(rng);
        let s = mode(rng);
        let coeff = gq(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        let term = match rng.gen_range(0..3) {
            0 => QuadraticOperator::raise_lower(r, s),
            1 => QuadraticOperator::raise_raise(r, s),
            _ => QuadraticOperator::lower_lower(r, s),
        };
        op = op.add(&term.scale(&coeff));
    }
    op
}
