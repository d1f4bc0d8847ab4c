//! Order-of-magnitude cosmology calculator: ur counts, Bekenstein entropies,
//! and the holographic comparison, in exact exponent arithmetic.
//!
//! Two reporting modes. Exact mode keeps formula constants like `4π` and
//! `8π` symbolically next to the exact parameter-driven magnitude.
//! Order-of-magnitude mode first rounds every input to its nearest power of
//! ten and then reads off the decimal exponent of the parameter-driven part
//! alone, dropping the `O(1)` formula prefactors — which is the style of
//! arithmetic the large-number coincidences are stated in. Separating the
//! two makes every reproduced exponent auditable.
//!
//! All masses and lengths are in Planck units; a particle's mass is the
//! inverse of its Compton wavelength.

use crate::biglog::{BigLogNumber, SymbolicPower};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CosmicError {
    #[error("parameter {0} must be positive")]
    NonPositiveInput(&'static str),
    #[error("area must be nonnegative")]
    NegativeArea,
    #[error("mass must be nonnegative")]
    NegativeMass,
    #[error("parameter file: {0}")]
    Parse(String),
}

/// Reporting mode for the calculator front ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    Exact,
    OrderOfMagnitude,
}

/// π to 38 decimal digits, enough for every display path here.
fn pi_rational() -> BigRational {
    let digits = "314159265358979323846264338327950288419";
    let num: BigInt = digits.parse().expect("valid digits");
    let mut den = BigInt::one();
    for _ in 1..digits.len() {
        den *= 10;
    }
    BigRational::new(num, den)
}

/// A cosmological quantity split as `prefactor · π^pi_power · magnitude`:
/// an exact formula constant, a π power, and the parameter-driven power
/// part. Order-of-magnitude reports use the magnitude only.
#[derive(Debug, Clone, PartialEq)]
pub struct CosmicQuantity {
    pub prefactor: BigRational,
    pub pi_power: i32,
    pub magnitude: BigLogNumber,
}

impl CosmicQuantity {
    pub fn plain(magnitude: BigLogNumber) -> Self {
        CosmicQuantity {
            prefactor: BigRational::one(),
            pi_power: 0,
            magnitude,
        }
    }

    pub fn with_prefactor(prefactor: BigRational, pi_power: i32, magnitude: BigLogNumber) -> Self {
        CosmicQuantity {
            prefactor,
            pi_power,
            magnitude,
        }
    }

    /// Fully evaluated value with π replaced by its rational approximation.
    pub fn numeric(&self) -> BigLogNumber {
        let mut value = BigLogNumber::from_rational(self.prefactor.clone());
        let pi = BigLogNumber::from_rational(pi_rational());
        for _ in 0..self.pi_power.unsigned_abs() {
            value = if self.pi_power > 0 {
                value.mul(&pi)
            } else {
                value.div(&pi)
            };
        }
        value.mul(&self.magnitude)
    }

    /// Decimal exponent of the parameter-driven magnitude, prefactors
    /// dropped; `None` for a zero magnitude.
    pub fn oom_exponent(&self) -> Option<BigInt> {
        if self.magnitude.is_zero() {
            return None;
        }
        Some(
            self.magnitude
                .round_to_power_of_ten()
                .exponent()
                .clone(),
        )
    }
}

impl fmt::Display for CosmicQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.magnitude.is_zero() {
            return write!(f, "0");
        }
        if !self.prefactor.is_one() {
            if self.prefactor.denom().is_one() {
                write!(f, "{}·", self.prefactor)?;
            } else {
                write!(f, "({})·", self.prefactor)?;
            }
        }
        match self.pi_power {
            0 => {}
            1 => write!(f, "π·")?,
            p => write!(f, "π^{p}·")?,
        }
        write!(f, "{}", self.magnitude)
    }
}

/// Cosmological inputs in Planck units.
#[derive(Debug, Clone, PartialEq)]
pub struct CosmologyParams {
    /// Cosmic radius.
    pub r: BigLogNumber,
    /// Nucleon Compton wavelength.
    pub lambda_nucleon: BigLogNumber,
    /// Electron Compton wavelength.
    pub lambda_electron: BigLogNumber,
    /// Cosmic mass.
    pub m_u: BigLogNumber,
    /// Elementary length.
    pub l_0: BigLogNumber,
}

impl Default for CosmologyParams {
    /// The fiducial set: `l₀ = 1`, `R = 10⁶⁰`, `λ_n = 10²⁰`,
    /// `λ_e = 1836 λ_n`, `M_u = 10⁶⁰`.
    fn default() -> Self {
        CosmologyParams {
            r: BigLogNumber::pow10(60),
            lambda_nucleon: BigLogNumber::pow10(20),
            lambda_electron: BigLogNumber::from_u64(1836).mul(&BigLogNumber::pow10(20)),
            m_u: BigLogNumber::pow10(60),
            l_0: BigLogNumber::one(),
        }
    }
}

impl CosmologyParams {
    pub fn validate(&self) -> Result<(), CosmicError> {
        for (name, v) in self.fields() {
            if !v.is_positive() {
                return Err(CosmicError::NonPositiveInput(name));
            }
        }
        Ok(())
    }

    fn fields(&self) -> [(&'static str, &BigLogNumber); 5] {
        [
            ("r", &self.r),
            ("lambda_nucleon", &self.lambda_nucleon),
            ("lambda_electron", &self.lambda_electron),
            ("m_u", &self.m_u),
            ("l_0", &self.l_0),
        ]
    }

    /// Every field rounded to its nearest power of ten, the input convention
    /// of order-of-magnitude mode (`1836 λ_n` becomes the `10²³` scale).
    pub fn rounded(&self) -> Self {
        CosmologyParams {
            r: self.r.round_to_power_of_ten(),
            lambda_nucleon: self.lambda_nucleon.round_to_power_of_ten(),
            lambda_electron: self.lambda_electron.round_to_power_of_ten(),
            m_u: self.m_u.round_to_power_of_ten(),
            l_0: self.l_0.round_to_power_of_ten(),
        }
    }

    /// Nucleon mass `1/λ_n` in Planck units.
    pub fn nucleon_mass(&self) -> BigLogNumber {
        BigLogNumber::one().div(&self.lambda_nucleon)
    }

    /// Electron mass `1/λ_e` in Planck units.
    pub fn electron_mass(&self) -> BigLogNumber {
        BigLogNumber::one().div(&self.lambda_electron)
    }

    /// Parses a key-value parameter file. Lines are `key = value` with `#`
    /// comments; keys are the field names `r`, `lambda_nucleon`,
    /// `lambda_electron`, `m_u`, `l_0`. Missing keys keep their defaults.
    pub fn from_key_values(text: &str) -> Result<Self, CosmicError> {
        let mut params = CosmologyParams::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CosmicError::Parse(format!(
                    "line {}: expected `key = value`, got {raw:?}",
                    lineno + 1
                )));
            };
            let value = BigLogNumber::from_str(value.trim())
                .map_err(|e| CosmicError::Parse(format!("line {}: {e}", lineno + 1)))?;
            match key.trim() {
                "r" => params.r = value,
                "lambda_nucleon" => params.lambda_nucleon = value,
                "lambda_electron" => params.lambda_electron = value,
                "m_u" => params.m_u = value,
                "l_0" => params.l_0 = value,
                other => {
                    return Err(CosmicError::Parse(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        params.validate()?;
        Ok(params)
    }
}

fn require_positive(v: &BigLogNumber, name: &'static str) -> Result<(), CosmicError> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(CosmicError::NonPositiveInput(name))
    }
}

/// Urs needed to localize a particle: `R / λ`.
pub fn ur_count_particle(
    r: &BigLogNumber,
    lambda: &BigLogNumber,
) -> Result<BigLogNumber, CosmicError> {
    require_positive(r, "r")?;
    require_positive(lambda, "lambda")?;
    Ok(r.div(lambda))
}

/// Total number of elementary spatial cells: `(R/λ)³`.
pub fn total_urs(r: &BigLogNumber, lambda: &BigLogNumber) -> Result<BigLogNumber, CosmicError> {
    Ok(ur_count_particle(r, lambda)?.powu(3))
}

/// Number of nucleons implied by the cell count: `(R/λ)³ / (R/λ)`.
pub fn nucleon_count(params: &CosmologyParams) -> Result<BigLogNumber, CosmicError> {
    let per_particle = ur_count_particle(&params.r, &params.lambda_nucleon)?;
    let total = total_urs(&params.r, &params.lambda_nucleon)?;
    Ok(total.div(&per_particle))
}

/// Dimension of the state space of `N` binary alternatives, kept symbolic
/// because `2^(10¹²⁰)` must never be expanded.
pub fn hilbert_dimension(params: &CosmologyParams) -> Result<SymbolicPower, CosmicError> {
    Ok(SymbolicPower {
        base: 2,
        exponent: total_urs(&params.r, &params.lambda_nucleon)?,
    })
}

/// Horizon-area entropy `S = A/4` in Planck units.
pub fn bekenstein_area_entropy(a: &BigLogNumber) -> Result<CosmicQuantity, CosmicError> {
    if a.is_negative() {
        return Err(CosmicError::NegativeArea);
    }
    Ok(CosmicQuantity::with_prefactor(
        BigRational::new(1.into(), 4.into()),
        0,
        a.clone(),
    ))
}

/// Spherical-horizon entropy `S = 4πM²` from the area law with the
/// Schwarzschild radius `R = 2M`.
pub fn bekenstein_mass_entropy(m: &BigLogNumber) -> Result<CosmicQuantity, CosmicError> {
    if m.is_negative() {
        return Err(CosmicError::NegativeMass);
    }
    Ok(CosmicQuantity::with_prefactor(
        BigRational::from_integer(4.into()),
        1,
        m.mul(m),
    ))
}

/// Entropy cost of adding a particle of mass `m` to a universe of mass `M`:
/// the exact difference `4π((M+m)² - M²) = 4π(2Mm + m²)` next to its
/// linearization `8πMm`, with the relative deviation bound `m/(2M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaEntropy {
    pub exact: CosmicQuantity,
    /// Relative-error bound recorded when the exact sum collapsed to its
    /// dominant term under the addition policy.
    pub dominant_term_bound: Option<BigLogNumber>,
    pub linearized: CosmicQuantity,
    /// `m/(2M)`, bounding `|ΔS - 8πMm| / ΔS`.
    pub relative_deviation_bound: BigLogNumber,
}

pub fn particle_entropy_delta(
    m_u: &BigLogNumber,
    m: &BigLogNumber,
) -> Result<DeltaEntropy, CosmicError> {
    if m_u.is_negative() || m.is_negative() {
        return Err(CosmicError::NegativeMass);
    }
    let two = BigLogNumber::from_u64(2);
    let cross = two.mul(m_u).mul(m);
    let (core, bound) = cross.add_with_bound(&m.mul(m));
    let four = BigRational::from_integer(4.into());
    let eight = BigRational::from_integer(8.into());
    let rel = if m_u.is_zero() {
        BigLogNumber::zero()
    } else {
        m.div(&two.mul(m_u))
    };
    Ok(DeltaEntropy {
        exact: CosmicQuantity::with_prefactor(four, 1, core),
        dominant_term_bound: bound,
        linearized: CosmicQuantity::with_prefactor(eight, 1, m_u.mul(m)),
        relative_deviation_bound: rel,
    })
}

/// Holographic bit count of a particle: `(λ/l₀)²`.
pub fn holographic_particle_bits(
    lambda: &BigLogNumber,
    l_0: &BigLogNumber,
) -> Result<CosmicQuantity, CosmicError> {
    require_positive(lambda, "lambda")?;
    require_positive(l_0, "l_0")?;
    let ratio = lambda.div(l_0);
    Ok(CosmicQuantity::plain(ratio.mul(&ratio)))
}

/// The full large-number summary from one parameter set.
#[derive(Debug, Clone)]
pub struct CosmicSummary {
    pub nucleon_urs: BigLogNumber,
    pub electron_urs: BigLogNumber,
    pub total_urs: BigLogNumber,
    pub nucleon_count: BigLogNumber,
    /// `l₀/R` with `l₀ = R/√N` for the total ur count.
    pub cutoff_over_radius: BigLogNumber,
    pub hilbert_dimension: SymbolicPower,
    pub entropy_universe: CosmicQuantity,
    pub entropy_nucleon: DeltaEntropy,
    pub entropy_electron: DeltaEntropy,
    pub holographic_universe: CosmicQuantity,
    pub holographic_nucleon: CosmicQuantity,
    pub holographic_electron: CosmicQuantity,
}

pub fn cosmic_summary(params: &CosmologyParams) -> Result<CosmicSummary, CosmicError> {
    params.validate()?;
    let total = total_urs(&params.r, &params.lambda_nucleon)?;
    let cutoff = crate::repr::cutoff_length(&params.r, &total);
    Ok(CosmicSummary {
        nucleon_urs: ur_count_particle(&params.r, &params.lambda_nucleon)?,
        electron_urs: ur_count_particle(&params.r, &params.lambda_electron)?,
        total_urs: total.clone(),
        nucleon_count: nucleon_count(params)?,
        cutoff_over_radius: cutoff.div(&params.r),
        hilbert_dimension: hilbert_dimension(params)?,
        entropy_universe: bekenstein_mass_entropy(&params.m_u)?,
        entropy_nucleon: particle_entropy_delta(&params.m_u, &params.nucleon_mass())?,
        entropy_electron: particle_entropy_delta(&params.m_u, &params.electron_mass())?,
        holographic_universe: holographic_particle_bits(&params.r, &params.l_0)?,
        holographic_nucleon: holographic_particle_bits(&params.lambda_nucleon, &params.l_0)?,
        holographic_electron: holographic_particle_bits(&params.lambda_electron, &params.l_0)?,
    })
}

/// One row of the ur-count vs holographic-count comparison.
#[derive(Debug, Clone)]
pub struct DiscrepancyRow {
    pub name: &'static str,
    pub ur_route: CosmicQuantity,
    pub holographic: CosmicQuantity,
}

impl DiscrepancyRow {
    /// Order-of-magnitude agreement of the two routes.
    pub fn agree(&self) -> bool {
        self.ur_route.oom_exponent() == self.holographic.oom_exponent()
    }

    /// Absolute exponent gap between the routes.
    pub fn exponent_gap(&self) -> Option<BigInt> {
        let a = self.ur_route.oom_exponent()?;
        let b = self.holographic.oom_exponent()?;
        Some((a - b).abs())
    }
}

#[derive(Debug, Clone)]
pub struct DiscrepancyReport {
    pub mode: ReportMode,
    pub rows: Vec<DiscrepancyRow>,
}

/// Side-by-side comparison of the ur route (entropy difference) and the
/// holographic route (boundary area) for nucleon, electron and universe. In
/// order-of-magnitude mode the parameters are rounded first.
pub fn discrepancy_report(
    params: &CosmologyParams,
    mode: ReportMode,
) -> Result<DiscrepancyReport, CosmicError> {
    let params = match mode {
        ReportMode::Exact => params.clone(),
        ReportMode::OrderOfMagnitude => params.rounded(),
    };
    let summary = cosmic_summary(&params)?;
    let rows = vec![
        DiscrepancyRow {
            name: "nucleon",
            ur_route: summary.entropy_nucleon.linearized.clone(),
            holographic: summary.holographic_nucleon.clone(),
        },
        DiscrepancyRow {
            name: "electron",
            ur_route: summary.entropy_electron.linearized.clone(),
            holographic: summary.holographic_electron.clone(),
        },
        DiscrepancyRow {
            name: "universe",
            ur_route: summary.entropy_universe.clone(),
            holographic: summary.holographic_universe.clone(),
        },
    ];
    Ok(DiscrepancyReport { mode, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> BigLogNumber {
        s.parse().unwrap()
    }

    fn exp_of(q: &CosmicQuantity) -> i64 {
        use num_traits::ToPrimitive;
        q.oom_exponent().unwrap().to_i64().unwrap()
    }

    #[test]
    fn fiducial_counts() {
        let p = CosmologyParams::default();
        assert_eq!(ur_count_particle(&p.r, &p.lambda_nucleon).unwrap(), n("1e40"));
        assert_eq!(total_urs(&p.r, &p.lambda_nucleon).unwrap(), n("1e120"));
        assert_eq!(nucleon_count(&p).unwrap(), n("1e80"));
        assert_eq!(hilbert_dimension(&p).unwrap().to_string(), "2^(1e120)");
    }

    #[test]
    fn degenerate_wavelength_equals_radius() {
        let r = n("1e60");
        assert_eq!(ur_count_particle(&r, &r).unwrap(), BigLogNumber::one());
        assert_eq!(total_urs(&r, &r).unwrap(), BigLogNumber::one());
    }

    #[test]
    fn electron_count_at_mantissa_level() {
        let p = CosmologyParams::default();
        let e = ur_count_particle(&p.r, &p.lambda_electron).unwrap();
        // 10⁶⁰ / 1836·10²⁰ = 5.446…×10³⁶, i.e. about 10³⁷ urs.
        assert_eq!(*e.exponent(), 36.into());
        assert_eq!(e.round_to_power_of_ten(), n("1e37"));
    }

    #[test]
    fn doubled_radius_scales_cell_count() {
        let p = CosmologyParams::default();
        let r2 = p.r.mul(&n("2"));
        let total = total_urs(&r2, &p.lambda_nucleon).unwrap();
        let per = ur_count_particle(&r2, &p.lambda_nucleon).unwrap();
        assert_eq!(total.div(&per), n("4e80"));
    }

    #[test]
    fn area_entropy() {
        assert_eq!(
            bekenstein_area_entropy(&n("4")).unwrap().numeric(),
            BigLogNumber::one()
        );
        let universe = bekenstein_area_entropy(&n("1e120")).unwrap();
        assert_eq!(exp_of(&universe), 120);
        assert_eq!(
            bekenstein_area_entropy(&n("-1")).unwrap_err(),
            CosmicError::NegativeArea
        );
    }

    #[test]
    fn mass_entropy() {
        let s = bekenstein_mass_entropy(&n("1e60")).unwrap();
        assert_eq!(s.to_string(), "4·π·1e120");
        assert_eq!(exp_of(&s), 120);
        let unit = bekenstein_mass_entropy(&BigLogNumber::one()).unwrap();
        let v = unit.numeric().to_f64_lossy();
        assert!((v - 4.0 * std::f64::consts::PI).abs() < 1e-12);
        assert!(bekenstein_mass_entropy(&BigLogNumber::zero())
            .unwrap()
            .numeric()
            .is_zero());
    }

    #[test]
    fn entropy_delta_linearization() {
        let d = particle_entropy_delta(&n("1e60"), &n("1e-20")).unwrap();
        assert_eq!(exp_of(&d.linearized), 40);
        // Exponent gap 80 exceeds the exact-addition window, so the exact
        // route records a dominant-term bound.
        let bound = d.dominant_term_bound.unwrap();
        assert_eq!(bound, n("1e-79"));
        assert_eq!(d.relative_deviation_bound, n("5e-81"));
        assert!(d.relative_deviation_bound < bound);
        // Zero mass adds nothing.
        let zero = particle_entropy_delta(&n("1e60"), &BigLogNumber::zero()).unwrap();
        assert!(zero.exact.numeric().is_zero());
        assert!(zero.linearized.numeric().is_zero());
    }

    #[test]
    fn exact_vs_linearized_within_bound_when_exact() {
        // Small gap: the addition stays exact and the deviation obeys m/(2M).
        let m_u = n("1e3");
        let m = n("1e-3");
        let d = particle_entropy_delta(&m_u, &m).unwrap();
        assert!(d.dominant_term_bound.is_none());
        let exact = d.exact.numeric();
        let lin = d.linearized.numeric();
        let dev = exact.sub(&lin).abs().div(&exact);
        assert!(dev <= d.relative_deviation_bound);
    }

    #[test]
    fn holographic_routes() {
        let p = CosmologyParams::default().rounded();
        let nuc = holographic_particle_bits(&p.lambda_nucleon, &p.l_0).unwrap();
        let el = holographic_particle_bits(&p.lambda_electron, &p.l_0).unwrap();
        assert_eq!(exp_of(&nuc), 40);
        assert_eq!(exp_of(&el), 46);
        let unit = holographic_particle_bits(&p.l_0, &p.l_0).unwrap();
        assert_eq!(unit.numeric(), BigLogNumber::one());
    }

    #[test]
    fn discrepancy_flags_only_the_electron() {
        let report =
            discrepancy_report(&CosmologyParams::default(), ReportMode::OrderOfMagnitude)
                .unwrap();
        let by_name = |name: &str| report.rows.iter().find(|r| r.name == name).unwrap();
        assert!(by_name("nucleon").agree());
        assert!(by_name("universe").agree());
        let electron = by_name("electron");
        assert!(!electron.agree());
        assert_eq!(electron.exponent_gap().unwrap(), 9.into());
        assert_eq!(exp_of(&electron.ur_route), 37);
        assert_eq!(exp_of(&electron.holographic), 46);
    }

    #[test]
    fn degenerate_electron_matches_nucleon() {
        let mut p = CosmologyParams::default();
        p.lambda_electron = p.lambda_nucleon.clone();
        let report = discrepancy_report(&p, ReportMode::OrderOfMagnitude).unwrap();
        let rows = &report.rows;
        assert_eq!(
            rows[0].ur_route.oom_exponent(),
            rows[1].ur_route.oom_exponent()
        );
        assert_eq!(
            rows[0].holographic.oom_exponent(),
            rows[1].holographic.oom_exponent()
        );
    }

    #[test]
    fn custom_particle_both_routes() {
        let p = CosmologyParams::default();
        let lambda = n("1e10");
        let holo = holographic_particle_bits(&lambda, &p.l_0).unwrap();
        assert_eq!(exp_of(&holo), 20);
        let mass = BigLogNumber::one().div(&lambda);
        let ur = particle_entropy_delta(&p.m_u, &mass).unwrap();
        assert_eq!(exp_of(&ur.linearized), 50);
    }

    #[test]
    fn params_file_round_trip() {
        let text = "# fiducial overrides\nr = 1e60\nlambda_electron = 1.836e23\n";
        let p = CosmologyParams::from_key_values(text).unwrap();
        assert_eq!(p, CosmologyParams::default());
        assert!(matches!(
            CosmologyParams::from_key_values("bogus = 1"),
            Err(CosmicError::Parse(_))
        ));
        assert!(matches!(
            CosmologyParams::from_key_values("r = 0"),
            Err(CosmicError::NonPositiveInput("r"))
        ));
        assert!(matches!(
            CosmologyParams::from_key_values("r 1e60"),
            Err(CosmicError::Parse(_))
        ));
    }

    #[test]
    fn summary_reproduces_all_fiducial_exponents() {
        let summary = cosmic_summary(&CosmologyParams::default().rounded()).unwrap();
        assert_eq!(*summary.nucleon_urs.exponent(), 40.into());
        assert_eq!(*summary.total_urs.exponent(), 120.into());
        assert_eq!(*summary.nucleon_count.exponent(), 80.into());
        assert_eq!(*summary.cutoff_over_radius.exponent(), (-60).into());
        assert_eq!(*summary.electron_urs.exponent(), 37.into());
        assert_eq!(exp_of(&summary.entropy_universe), 120);
        assert_eq!(exp_of(&summary.entropy_nucleon.linearized), 40);
        assert_eq!(exp_of(&summary.entropy_electron.linearized), 37);
        assert_eq!(exp_of(&summary.holographic_nucleon), 40);
        assert_eq!(exp_of(&summary.holographic_electron), 46);
        assert_eq!(exp_of(&summary.holographic_universe), 120);
    }
}
