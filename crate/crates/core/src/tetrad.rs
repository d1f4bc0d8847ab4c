//! Null tetrads from spinor dyads and their real orthonormal form.
//!
//! A normalized dyad `(u, v)` determines four null directions through the
//! null map: `l` from `(u,u)`, `n` from `(v,v)` and the complex pair `m`,
//! `m̄` from the mixed contractions. With the conventions of [`crate::spinor`]
//! the nonvanishing products are pinned to
//!
//! ```text
//! l·n = 2,    m·m̄ = -2
//! ```
//!
//! (equal up to the sign forced by the `(+,-,-,-)` signature). The real frame
//! uses the combinations `t = (l+n)/2`, `z = (l-n)/2`, `x = Re m`, `y = -Im m`,
//! normalized so the standard dyad `u=(1,0), v=(0,1)` yields the identity
//! frame; the resulting `(x,y,z)` triple is right-handed and the frame
//! determinant is `+1`.

use crate::scalar::RealScalar;
use crate::spinor::{
    mixed_null, spinor_to_null, ComplexFourVector, Dyad, FourVector, Matrix4,
};
use thiserror::Error;

/// `l·n` for a normalized dyad under this crate's conventions.
pub const L_DOT_N: i64 = 2;
/// `m·m̄` for a normalized dyad under this crate's conventions.
pub const M_DOT_MBAR: i64 = -2;

/// Below this the symplectic contraction counts as zero in the float
/// backend; the rational backend requires exact nonvanishing.
pub const DEGENERATE_DYAD_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum TetradError {
    #[error("degenerate dyad: |u_A v^A| below tolerance, not normalizable")]
    DegenerateDyad,
}

/// The four null legs built from a dyad.
#[derive(Debug, Clone, PartialEq)]
pub struct NullTetrad<R: RealScalar> {
    pub l: FourVector<R>,
    pub n: FourVector<R>,
    pub m: ComplexFourVector<R>,
    pub m_bar: ComplexFourVector<R>,
}

/// The real orthonormal frame `θ_μ^α = (t_μ, x_μ, y_μ, z_μ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealTetrad<R: RealScalar> {
    pub t: FourVector<R>,
    pub x: FourVector<R>,
    pub y: FourVector<R>,
    pub z: FourVector<R>,
}

impl<R: RealScalar> RealTetrad<R> {
    pub fn legs(&self) -> [&FourVector<R>; 4] {
        [&self.t, &self.x, &self.y, &self.z]
    }

    /// Frame matrix with the legs as columns (`M[μ][α]`).
    pub fn frame_matrix(&self) -> Matrix4<R> {
        let legs = self.legs();
        Matrix4::new(std::array::from_fn(|mu| {
            std::array::from_fn(|alpha| legs[alpha].components[mu].clone())
        }))
    }
}

/// Builds the null tetrad of a dyad. Fails with [`TetradError::DegenerateDyad`]
/// when the symplectic contraction vanishes (exactly in the rational backend,
/// within [`DEGENERATE_DYAD_TOL`] in floats).
pub fn dyad_to_null_tetrad<R: RealScalar>(
    d: &Dyad<R>,
) -> Result<NullTetrad<R>, TetradError> {
    let s = d.symplectic_norm();
    let s_sq = crate::scalar::norm_sqr(&s);
    if s_sq.is_zero_within(DEGENERATE_DYAD_TOL * DEGENERATE_DYAD_TOL) {
        return Err(TetradError::DegenerateDyad);
    }
    let m = mixed_null(&d.u, &d.v);
    let m_bar = mixed_null(&d.v, &d.u);
    Ok(NullTetrad {
        l: spinor_to_null(&d.u),
        n: spinor_to_null(&d.v),
        m,
        m_bar,
    })
}

/// Converts the null tetrad to the real frame via the fixed combinations
/// `t = (l+n)/2`, `z = (l-n)/2`, `x = Re m`, `y = -Im m`.
pub fn null_to_real_tetrad<R: RealScalar>(nt: &NullTetrad<R>) -> RealTetrad<R> {
    let half = R::from_ratio(1, 2);
    let t = nt.l.add(&nt.n).scale(&half);
    let z = nt.l.sub(&nt.n).scale(&half);
    let x = FourVector {
        components: std::array::from_fn(|i| nt.m.components[i].re.clone()),
    };
    let y = FourVector {
        components: std::array::from_fn(|i| -nt.m.components[i].im.clone()),
    };
    RealTetrad { t, x, y, z }
}

/// Gram matrix of Minkowski products of the frame legs, ordered `(t,x,y,z)`.
/// Equals `η` exactly for any tetrad built from a normalized dyad.
pub fn tetrad_metric<R: RealScalar>(rt: &RealTetrad<R>) -> Matrix4<R> {
    let legs = rt.legs();
    Matrix4::new(std::array::from_fn(|a| {
        std::array::from_fn(|b| legs[a].minkowski(legs[b]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gq;
    use crate::spinor::{induced_lorentz, Matrix2, SL2CElement, Spinor};
    use num_complex::Complex;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Rq = BigRational;

    fn standard_dyad() -> Dyad<Rq> {
        Dyad::new(
            Spinor::upper_i64(1, 0, 0, 0),
            Spinor::upper_i64(0, 0, 1, 0),
        )
    }

    #[test]
    fn standard_dyad_null_tetrad() {
        let nt = dyad_to_null_tetrad(&standard_dyad()).unwrap();
        assert_eq!(nt.l, FourVector::from_i64(1, 0, 0, 1));
        assert_eq!(nt.n, FourVector::from_i64(1, 0, 0, -1));
        assert_eq!(
            nt.m.components,
            [gq(0, 0), gq(1, 0), gq(0, -1), gq(0, 0)]
        );
        assert_eq!(nt.m_bar, nt.m.conj());
        // Normalization constants.
        assert_eq!(nt.l.minkowski(&nt.n), Rq::from_i64(L_DOT_N));
        assert_eq!(nt.m.minkowski(&nt.m_bar), gq(M_DOT_MBAR, 0));
        // All four legs null, l·m = n·m = 0.
        assert!(nt.l.norm().is_zero());
        assert!(nt.n.norm().is_zero());
        assert!(crate::scalar::norm_sqr(&nt.m.norm()).is_zero());
        let lc = ComplexFourVector::from_real(&nt.l);
        let nc = ComplexFourVector::from_real(&nt.n);
        assert!(crate::scalar::norm_sqr(&lc.minkowski(&nt.m)).is_zero());
        assert!(crate::scalar::norm_sqr(&nc.minkowski(&nt.m)).is_zero());
    }

    #[test]
    fn standard_dyad_gives_identity_frame() {
        let nt = dyad_to_null_tetrad(&standard_dyad()).unwrap();
        let rt = null_to_real_tetrad(&nt);
        assert_eq!(rt.t, FourVector::from_i64(1, 0, 0, 0));
        assert_eq!(rt.x, FourVector::from_i64(0, 1, 0, 0));
        assert_eq!(rt.y, FourVector::from_i64(0, 0, 1, 0));
        assert_eq!(rt.z, FourVector::from_i64(0, 0, 0, 1));
        assert_eq!(tetrad_metric(&rt), Matrix4::eta());
        assert_eq!(rt.frame_matrix().det(), Rq::one());
    }

    #[test]
    fn degenerate_dyad_rejected() {
        let u = Spinor::<Rq>::upper_i64(1, 0, 0, 0);
        let d = Dyad::new(u.clone(), u);
        assert_eq!(dyad_to_null_tetrad(&d), Err(TetradError::DegenerateDyad));
    }

    #[test]
    fn inner_products_invariant_under_sl2c() {
        let a = SL2CElement::new(Matrix2::new([
            [gq(1, 0), gq(3, -2)],
            [gq(0, 0), gq(1, 0)],
        ]))
        .unwrap();
        let d = standard_dyad();
        let td = Dyad::new(a.apply(&d.u), a.apply(&d.v));
        let nt = dyad_to_null_tetrad(&td).unwrap();
        assert_eq!(nt.l.minkowski(&nt.n), Rq::from_i64(L_DOT_N));
        assert_eq!(nt.m.minkowski(&nt.m_bar), gq(M_DOT_MBAR, 0));
    }

    #[test]
    fn boosted_dyad_mixes_t_and_z_only() {
        // A = diag(2, 1/2): a rational z-boost. x and y legs stay put while
        // t and z mix with the cosh/sinh entries of the induced Lorentz map.
        let a = SL2CElement::new(Matrix2::new([
            [gq(2, 0), gq(0, 0)],
            [gq(0, 0), Complex::new(Rq::from_ratio(1, 2), Rq::zero())],
        ]))
        .unwrap();
        let lam = induced_lorentz(&a);
        let d = standard_dyad();
        let boosted = Dyad::new(a.apply(&d.u), a.apply(&d.v));
        let rt = null_to_real_tetrad(&dyad_to_null_tetrad(&boosted).unwrap());
        let base = null_to_real_tetrad(&dyad_to_null_tetrad(&d).unwrap());
        assert_eq!(rt.t, lam.apply(&base.t));
        assert_eq!(rt.z, lam.apply(&base.z));
        assert_eq!(rt.x, base.x);
        assert_eq!(rt.y, base.y);
        assert_eq!(tetrad_metric(&rt), Matrix4::eta());
    }

    #[test]
    fn equivariance_of_real_tetrad() {
        let a = SL2CElement::new(Matrix2::new([
            [gq(1, 0), gq(0, 0)],
            [gq(2, 5), gq(1, 0)],
        ]))
        .unwrap();
        let lam = induced_lorentz(&a);
        let d = standard_dyad();
        let td = Dyad::new(a.apply(&d.u), a.apply(&d.v));
        let rt = null_to_real_tetrad(&dyad_to_null_tetrad(&td).unwrap());
        let base = null_to_real_tetrad(&dyad_to_null_tetrad(&d).unwrap());
        for (leg, base_leg) in rt.legs().iter().zip(base.legs().iter()) {
            assert_eq!(**leg, lam.apply(base_leg));
        }
        assert_eq!(rt.frame_matrix().det(), Rq::one());
    }

    #[test]
    fn scaled_leg_shows_in_metric() {
        let nt = dyad_to_null_tetrad(&standard_dyad()).unwrap();
        let mut rt = null_to_real_tetrad(&nt);
        rt.z = rt.z.scale(&Rq::from_i64(2));
        let g = tetrad_metric(&rt);
        let mut expect = Matrix4::<Rq>::eta();
        expect.e[3][3] = Rq::from_i64(-4);
        assert_eq!(g, expect);
    }
}
