//! Exercises the C ABI from Rust, the same call patterns a C client uses.

use urkit_ffi::*;

#[test]
fn version_is_nul_terminated() {
    let ptr = urk_version();
    let s = unsafe { std::ffi::CStr::from_ptr(ptr) };
    assert_eq!(s.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn spinor_to_null_basis_case() {
    let spinor = [1.0, 0.0, 0.0, 0.0];
    let mut out = [0.0f64; 4];
    let status = unsafe { urk_spinor_to_null(spinor.as_ptr(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::Ok);
    assert_eq!(out, [1.0, 0.0, 0.0, 1.0]);
    let status = unsafe { urk_spinor_to_null(std::ptr::null(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::NullPointer);
}

#[test]
fn dyad_tetrad_identity_frame() {
    let dyad = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0];
    let mut out = [0.0f64; 16];
    let status = unsafe { urk_dyad_to_real_tetrad(dyad.as_ptr(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::Ok);
    let mut expect = [0.0f64; 16];
    for i in 0..4 {
        expect[i * 4 + i] = 1.0;
    }
    assert_eq!(out, expect);

    // Degenerate dyad (v = u) is refused.
    let degenerate = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
    let status = unsafe { urk_dyad_to_real_tetrad(degenerate.as_ptr(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::DegenerateDyad);
}

#[test]
fn induced_lorentz_identity_and_guard() {
    let identity = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0];
    let mut out = [0.0f64; 16];
    let status = unsafe { urk_induced_lorentz(identity.as_ptr(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::Ok);
    for r in 0..4 {
        for c in 0..4 {
            let expect = if r == c { 1.0 } else { 0.0 };
            assert!((out[r * 4 + c] - expect).abs() < 1e-12);
        }
    }
    let not_unimodular = [2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.0, 0.0];
    let status = unsafe { urk_induced_lorentz(not_unimodular.as_ptr(), out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::InvalidArgument);
}

#[test]
fn multiplicity_table_lifecycle() {
    let table = urk_multiplicity_new(4);
    assert!(!table.is_null());
    unsafe {
        assert_eq!(urk_multiplicity_len(table), 3);
        assert!(urk_multiplicity_sum_rule_holds(table));
        let mut twice_j = 0u32;
        let mut count = 0u64;
        // Entries in increasing-spin order: j = 0, 1, 2 with counts 2, 3, 1.
        let expected = [(0u32, 2u64), (2, 3), (4, 1)];
        for (idx, (ej, ec)) in expected.iter().enumerate() {
            let status = urk_multiplicity_entry(table, idx, &mut twice_j, &mut count);
            assert_eq!(status, UrkStatus::Ok);
            assert_eq!((twice_j, count), (*ej, *ec));
        }
        let status = urk_multiplicity_entry(table, 99, &mut twice_j, &mut count);
        assert_eq!(status, UrkStatus::InvalidArgument);
        urk_multiplicity_free(table);
    }
    assert!(urk_multiplicity_new(0).is_null());
}

#[test]
fn fiducial_exponents_via_abi() {
    let mut out = [0i64; 7];
    let status = unsafe { urk_cosmic_fiducial_exponents(out.as_mut_ptr()) };
    assert_eq!(status, UrkStatus::Ok);
    assert_eq!(out, [40, 120, 80, -60, 40, 46, 37]);
}

#[test]
fn kg_residual_via_abi() {
    let k = [6.0, 4.0, 4.0, 2.0];
    let mut out = 0.0f64;
    let status = unsafe { urk_kg_residual(k.as_ptr(), 0.1, 9, &mut out) };
    assert_eq!(status, UrkStatus::Ok);
    // Stencil error of the order 64 h².
    assert!((out - 0.64).abs() < 0.1);
    let status = unsafe { urk_kg_residual(k.as_ptr(), 0.1, 2, &mut out) };
    assert_eq!(status, UrkStatus::InvalidArgument);
}

#[test]
fn fock_dimension_reference_values() {
    assert_eq!(urk_fock_dimension(4), 70);
    assert_eq!(urk_fock_dimension(3), 35);
    assert_eq!(urk_fock_dimension(0), 1);
}

#[test]
fn generated_header_covers_the_surface() {
    let header = include_str!("../include/urkit.h");
    for symbol in [
        "urk_version",
        "urk_spinor_to_null",
        "urk_dyad_to_real_tetrad",
        "urk_induced_lorentz",
        "urk_kg_residual",
        "urk_multiplicity_new",
        "urk_multiplicity_entry",
        "urk_multiplicity_free",
        "urk_cosmic_fiducial_exponents",
        "urk_fock_dimension",
        "UrkMultiplicityTable",
        "UrkStatus",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
