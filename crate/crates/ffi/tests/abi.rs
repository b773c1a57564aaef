use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use jordan_strata_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(js_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn scalar_calls() {
    let mut v = f64::NAN;
    assert_eq!(unsafe { js_sinc(0.0, &mut v) }, JS_OK);
    assert_eq!(v, 1.0);
    assert_eq!(unsafe { js_phi(JS_KIND_TWO_PARAM, 0.1, 1.0, std::f64::consts::FRAC_PI_4, &mut v) }, JS_OK);
    assert!((v - 0.106_616_911_110_035_06).abs() < 1e-14);
    assert_eq!(unsafe { js_sup_deviation(JS_KIND_B_TYPE, 0.0, 4.0, 1024, 1e-12, &mut v) }, JS_OK);
    assert!((v - 0.204_225_284_540_523).abs() < 1e-12);
}

#[test]
fn error_codes() {
    let mut v = 0.0;
    assert_eq!(unsafe { js_sinc(-1.0, &mut v) }, JS_ERR_INVALID_ARGUMENT);
    assert!(last_error().contains("x must be"));
    assert_eq!(unsafe { js_sinc(1.0, ptr::null_mut()) }, JS_ERR_NULL_POINTER);
    assert_eq!(unsafe { js_phi(JS_KIND_FIXED_Q, 0.1, 5.0, 0.5, &mut v) }, JS_ERR_INVALID_ARGUMENT);
    assert_eq!(unsafe { js_phi(JS_KIND_A_TYPE, 0.0, 2.0, 2.0, &mut v) }, JS_ERR_INVALID_ARGUMENT);
    assert_eq!(unsafe { js_sup_deviation(JS_KIND_A_TYPE, 0.0, 2.0, 8, 1e-12, &mut v) }, JS_ERR_SOLVE);
    assert_eq!(unsafe { js_sinc(1.0, &mut v) }, JS_OK);
    assert_eq!(last_error(), "");
}

#[test]
fn minimax_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { js_minimax_solve(JS_KIND_FIXED_Q, 2, 1e-12, &mut h) }, JS_OK);
    assert!(!h.is_null());
    unsafe {
        assert!((js_minimax_param(h) - 0.036_014_805_347_863_41).abs() < 1e-9);
        assert!((js_minimax_deviation(h) - 0.007_928_346_266_769_347).abs() < 1e-9);
        assert_eq!(js_minimax_exponent(h), 2.0);
        assert!(js_minimax_residual(h) <= 1e-10);
        js_minimax_free(h);
        assert!(js_minimax_param(ptr::null()).is_nan());
        js_minimax_free(ptr::null_mut());
    }
    assert_eq!(unsafe { js_minimax_solve(JS_KIND_FIXED_Q, 7, 1e-12, &mut h) }, JS_ERR_INVALID_ARGUMENT);
    assert!(h.is_null());
    assert_eq!(unsafe { js_minimax_solve(JS_KIND_TWO_PARAM, 0, 1e-12, &mut h) }, JS_ERR_INVALID_ARGUMENT);
}

#[test]
fn certificate_handle() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { js_certify(JS_LEMMA_GA, 0, 1, 8, 5, &mut h) }, JS_OK);
    unsafe {
        let poly = CStr::from_ptr(js_certificate_polynomial(h)).to_str().unwrap();
        assert_eq!(poly, "2/2835*x^9 - 1/240*x^7");
        let text = CStr::from_ptr(js_certificate_text(h)).to_str().unwrap();
        assert!(text.starts_with("lemma ga-monotone\n"));
        assert_eq!(js_certificate_root_count(h), 0);
        js_certificate_free(h);
    }
    // 2/2835 x^2 - 1/240 changes sign near 2.43
    assert_eq!(unsafe { js_certify(JS_LEMMA_GA, 0, 1, 5, 2, &mut h) }, JS_ERR_CERTIFICATE);
    assert!(h.is_null());
    assert!(last_error().contains("sturm"));
    assert_eq!(unsafe { js_certify(JS_LEMMA_GB, 0, 0, 8, 5, &mut h) }, JS_ERR_INVALID_ARGUMENT);
}

#[test]
fn version_is_crate_version() {
    let v = unsafe { CStr::from_ptr(js_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// The static library next to this test binary (`target/<profile>/`).
fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libjordan_strata_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn header_compiles_and_links_from_c() {
    let header_dir = manifest_dir().join("include");
    assert!(header_dir.join("jordan_strata.h").exists(), "header not generated");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".to_string());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let src = manifest_dir().join("tests/c/smoke.c");
    let Some(lib) = static_lib() else {
        // header-only check when the static library is not in the usual place
        let st = Command::new(&cc)
            .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
            .arg(&header_dir)
            .arg(&src)
            .status()
            .unwrap();
        assert!(st.success());
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let out = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(&header_dir)
        .arg(&src)
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.contains("phi -0.008838626935"), "{stdout}");
    assert!(stdout.contains("q0 1.848235050"), "{stdout}");
    assert!(stdout.contains("poly -4/315*x^8 + 2/45*x^6 roots 0"), "{stdout}");
}
