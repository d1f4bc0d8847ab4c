//! C ABI over the core verification entry points, so other languages can
//! drive the same checks: flat float buffers for the spinor and tetrad maps,
//! an opaque handle for multiplicity tables, and plain status codes for
//! every fallible call. The header `include/urkit.h` is generated by
//! cbindgen at build time.
//!
//! Pointer arguments must be valid for the documented lengths; null pointers
//! are reported as [`UrkStatus::NullPointer`], never dereferenced.

use std::os::raw::c_char;
use urkit::fock::occupation_basis;
use urkit::repr::{multiplicity, MultiplicityTable};
use urkit::spinor::{induced_lorentz, spinor_to_null, Dyad, FourVector, Matrix2, SL2CElement, Spinor};
use urkit::tetrad::{dyad_to_null_tetrad, null_to_real_tetrad};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UrkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DegenerateDyad = 3,
    Overflow = 4,
}

/// Crate version as a NUL-terminated static string.
#[no_mangle]
pub extern "C" fn urk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

fn spinor_from(parts: &[f64]) -> Spinor<f64> {
    Spinor::upper(
        num_complex::Complex::new(parts[0], parts[1]),
        num_complex::Complex::new(parts[2], parts[3]),
    )
}

/// Null four-vector of a spinor. `spinor` holds `re0, im0, re1, im1`; `out`
/// receives `k0, k1, k2, k3`.
///
/// # Safety
/// `spinor` must point to 4 readable doubles and `out` to 4 writable ones.
#[no_mangle]
pub unsafe extern "C" fn urk_spinor_to_null(spinor: *const f64, out: *mut f64) -> UrkStatus {
    if spinor.is_null() || out.is_null() {
        return UrkStatus::NullPointer;
    }
    let parts = std::slice::from_raw_parts(spinor, 4);
    let k = spinor_to_null(&spinor_from(parts));
    let out = std::slice::from_raw_parts_mut(out, 4);
    out.copy_from_slice(&k.components);
    UrkStatus::Ok
}

/// Real orthonormal tetrad of a dyad. `dyad` holds the two spinors as
/// `u_re0, u_im0, u_re1, u_im1, v_re0, v_im0, v_re1, v_im1`; `out` receives
/// the legs `t, x, y, z`, each as four consecutive components (16 doubles).
/// The dyad is rescaled to symplectic norm one first; a degenerate pair is
/// rejected.
///
/// # Safety
/// `dyad` must point to 8 readable doubles and `out` to 16 writable ones.
#[no_mangle]
pub unsafe extern "C" fn urk_dyad_to_real_tetrad(dyad: *const f64, out: *mut f64) -> UrkStatus {
    if dyad.is_null() || out.is_null() {
        return UrkStatus::NullPointer;
    }
    let parts = std::slice::from_raw_parts(dyad, 8);
    let u = spinor_from(&parts[0..4]);
    let v = spinor_from(&parts[4..8]);
    let Some(d) = Dyad::normalized(u, v, urkit::tetrad::DEGENERATE_DYAD_TOL) else {
        return UrkStatus::DegenerateDyad;
    };
    let Ok(nt) = dyad_to_null_tetrad(&d) else {
        return UrkStatus::DegenerateDyad;
    };
    let rt = null_to_real_tetrad(&nt);
    let out = std::slice::from_raw_parts_mut(out, 16);
    for (slot, leg) in rt.legs().iter().enumerate() {
        out[slot * 4..slot * 4 + 4].copy_from_slice(&leg.components);
    }
    UrkStatus::Ok
}

/// Lorentz matrix induced by an element of SL(2,C). `matrix` holds the 2x2
/// complex entries row-major as `re, im` pairs (8 doubles); `out` receives
/// the 4x4 transformation row-major (16 doubles). Rejects matrices whose
/// determinant is not 1 within the library tolerance.
///
/// # Safety
/// `matrix` must point to 8 readable doubles and `out` to 16 writable ones.
#[no_mangle]
pub unsafe extern "C" fn urk_induced_lorentz(matrix: *const f64, out: *mut f64) -> UrkStatus {
    if matrix.is_null() || out.is_null() {
        return UrkStatus::NullPointer;
    }
    let p = std::slice::from_raw_parts(matrix, 8);
    let m = Matrix2::new([
        [
            num_complex::Complex::new(p[0], p[1]),
            num_complex::Complex::new(p[2], p[3]),
        ],
        [
            num_complex::Complex::new(p[4], p[5]),
            num_complex::Complex::new(p[6], p[7]),
        ],
    ]);
    let Ok(a) = SL2CElement::new(m) else {
        return UrkStatus::InvalidArgument;
    };
    let lam = induced_lorentz(&a);
    let out = std::slice::from_raw_parts_mut(out, 16);
    for (r, row) in lam.e.iter().enumerate() {
        out[r * 4..r * 4 + 4].copy_from_slice(row);
    }
    UrkStatus::Ok
}

/// Max-norm residual of the discrete wave operator on a plane wave with
/// carrier `k` (4 doubles), spacing `h` and `extent` points per axis.
///
/// # Safety
/// `k` must point to 4 readable doubles and `out` to one writable double.
#[no_mangle]
pub unsafe extern "C" fn urk_kg_residual(
    k: *const f64,
    h: f64,
    extent: usize,
    out: *mut f64,
) -> UrkStatus {
    if k.is_null() || out.is_null() {
        return UrkStatus::NullPointer;
    }
    if !(h > 0.0) {
        return UrkStatus::InvalidArgument;
    }
    let parts = std::slice::from_raw_parts(k, 4);
    let wave = urkit::fields::PlaneWave::new(
        FourVector::new(parts[0], parts[1], parts[2], parts[3]),
        h,
        extent,
    );
    match urkit::fields::kg_residual(&wave) {
        Ok(res) => {
            *out = res;
            UrkStatus::Ok
        }
        Err(_) => UrkStatus::InvalidArgument,
    }
}

/// Opaque multiplicity table handle.
pub struct UrkMultiplicityTable {
    inner: MultiplicityTable,
}

/// Builds the multiplicity table of `n` tensored binary alternatives.
/// Returns null for `n = 0` or `n > 4096`.
#[no_mangle]
pub extern "C" fn urk_multiplicity_new(n: u32) -> *mut UrkMultiplicityTable {
    if n == 0 || n > 4096 {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(UrkMultiplicityTable {
        inner: multiplicity(n),
    }))
}

/// Number of distinct spin blocks in the table; 0 for a null handle.
///
/// # Safety
/// `table` must be null or a handle from [`urk_multiplicity_new`].
#[no_mangle]
pub unsafe extern "C" fn urk_multiplicity_len(table: *const UrkMultiplicityTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).inner.entries().count()
}

/// Entry `idx` of the table in increasing-spin order: twice the spin label
/// and the multiplicity. Fails with `Overflow` when the exact count does not
/// fit in 64 bits.
///
/// # Safety
/// `table` must be a handle from [`urk_multiplicity_new`]; the out pointers
/// must each reference writable storage.
#[no_mangle]
pub unsafe extern "C" fn urk_multiplicity_entry(
    table: *const UrkMultiplicityTable,
    idx: usize,
    out_twice_j: *mut u32,
    out_count: *mut u64,
) -> UrkStatus {
    if table.is_null() || out_twice_j.is_null() || out_count.is_null() {
        return UrkStatus::NullPointer;
    }
    let Some((&twice_j, count)) = (*table).inner.entries().nth(idx) else {
        return UrkStatus::InvalidArgument;
    };
    let digits = count.to_u64_digits();
    if digits.len() > 1 {
        return UrkStatus::Overflow;
    }
    *out_twice_j = twice_j;
    *out_count = digits.first().copied().unwrap_or(0);
    UrkStatus::Ok
}

/// Whether the table satisfies the exact dimension sum rule.
///
/// # Safety
/// `table` must be null or a handle from [`urk_multiplicity_new`].
#[no_mangle]
pub unsafe extern "C" fn urk_multiplicity_sum_rule_holds(
    table: *const UrkMultiplicityTable,
) -> bool {
    if table.is_null() {
        return false;
    }
    (*table).inner.satisfies_sum_rule()
}

/// Releases a table handle. Null is allowed.
///
/// # Safety
/// `table` must be null or an unreleased handle from
/// [`urk_multiplicity_new`].
#[no_mangle]
pub unsafe extern "C" fn urk_multiplicity_free(table: *mut UrkMultiplicityTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// The seven fiducial decimal exponents, in the order: urs per nucleon,
/// total urs, nucleon count, cutoff over radius, holographic nucleon bits,
/// holographic electron bits, electron entropy bits.
///
/// # Safety
/// `out` must point to 7 writable 64-bit integers.
#[no_mangle]
pub unsafe extern "C" fn urk_cosmic_fiducial_exponents(out: *mut i64) -> UrkStatus {
    if out.is_null() {
        return UrkStatus::NullPointer;
    }
    use num_traits::ToPrimitive;
    let params = urkit::cosmic::CosmologyParams::default().rounded();
    let Ok(summary) = urkit::cosmic::cosmic_summary(&params) else {
        return UrkStatus::InvalidArgument;
    };
    let exps = [
        summary.nucleon_urs.exponent().to_i64(),
        summary.total_urs.exponent().to_i64(),
        summary.nucleon_count.exponent().to_i64(),
        summary.cutoff_over_radius.exponent().to_i64(),
        summary
            .holographic_nucleon
            .oom_exponent()
            .and_then(|e| e.to_i64()),
        summary
            .holographic_electron
            .oom_exponent()
            .and_then(|e| e.to_i64()),
        summary
            .entropy_electron
            .linearized
            .oom_exponent()
            .and_then(|e| e.to_i64()),
    ];
    let out = std::slice::from_raw_parts_mut(out, 7);
    for (slot, e) in out.iter_mut().zip(exps.iter()) {
        match e {
            Some(v) => *slot = *v,
            None => return UrkStatus::Overflow,
        }
    }
    UrkStatus::Ok
}

/// Dimension of the truncated Fock space with total occupation at most
/// `n_max` over the four dyad modes.
#[no_mangle]
pub extern "C" fn urk_fock_dimension(n_max: u32) -> u64 {
    occupation_basis(n_max).len() as u64
}
