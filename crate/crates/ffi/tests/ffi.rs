use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use mzv_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mzv_string_free(s);
    owned
}

fn last_error() -> String {
    let p = mzv_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn closed_form_matches_power_through_handles() {
    unsafe {
        for kind in [MzvProductKind::Harmonic, MzvProductKind::Star] {
            let mut a = ptr::null_mut();
            let mut b = ptr::null_mut();
            assert_eq!(mzv_expand_closed_form(3, 4, kind, &mut a), MzvStatus::Ok);
            assert_eq!(mzv_power(3, 4, kind, &mut b), MzvStatus::Ok);
            let mut eq = false;
            assert_eq!(mzv_poly_equal(a, b, &mut eq), MzvStatus::Ok);
            assert!(eq);
            assert_eq!(mzv_poly_term_count(a), 8);
            mzv_poly_free(a);
            mzv_poly_free(b);
        }
    }
}

#[test]
fn text_and_json_renderings() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            mzv_power(2, 2, MzvProductKind::Harmonic, &mut p),
            MzvStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(mzv_poly_to_text(p, &mut s), MzvStatus::Ok);
        assert_eq!(take_string(s), "2*z2 z2 + 1*z4");
        assert_eq!(mzv_poly_to_json(p, &mut s), MzvStatus::Ok);
        assert_eq!(
            take_string(s),
            r#"[{"word":[2,2],"coeff":{"num":"2","den":"1"}},{"word":[4],"coeff":{"num":"1","den":"1"}}]"#
        );
        mzv_poly_free(p);
    }
}

#[test]
fn product_and_positional_step() {
    unsafe {
        let mut u = ptr::null_mut();
        let mut z = ptr::null_mut();
        let mut prod = ptr::null_mut();
        let mut step = ptr::null_mut();
        let parts = [2u32, 4, 2];
        assert_eq!(mzv_poly_from_word(parts.as_ptr(), 3, &mut u), MzvStatus::Ok);
        assert_eq!(
            mzv_poly_from_word([2u32].as_ptr(), 1, &mut z),
            MzvStatus::Ok
        );
        assert_eq!(
            mzv_poly_product(u, z, MzvProductKind::Star, &mut prod),
            MzvStatus::Ok
        );
        assert_eq!(
            mzv_lemma1_step(parts.as_ptr(), 3, 2, MzvProductKind::Star, &mut step),
            MzvStatus::Ok
        );
        let mut eq = false;
        assert_eq!(mzv_poly_equal(prod, step, &mut eq), MzvStatus::Ok);
        assert!(eq);
        for p in [u, z, prod, step] {
            mzv_poly_free(p);
        }

        let mut out = ptr::null_mut();
        assert_eq!(
            mzv_lemma1_step([3u32].as_ptr(), 1, 2, MzvProductKind::Harmonic, &mut out),
            MzvStatus::NotMultiple
        );
        assert!(out.is_null());
        assert!(last_error().contains("not a multiple"));
    }
}

#[test]
fn evaluation_and_homomorphism() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            mzv_expand_closed_form(2, 2, MzvProductKind::Harmonic, &mut p),
            MzvStatus::Ok
        );
        let mut lhs = MzvEvalResult {
            value: 0.0,
            tail_bound: 0.0,
        };
        assert_eq!(
            mzv_eval_poly(p, MzvZetaKind::Mzv, 10_000, 1.0, &mut lhs),
            MzvStatus::Ok
        );
        let mut z2 = lhs;
        assert_eq!(
            mzv_eval([2u32].as_ptr(), 1, MzvZetaKind::Mzv, 10_000, 1.0, &mut z2),
            MzvStatus::Ok
        );
        assert!((lhs.value - z2.value * z2.value).abs() < 1e-12);
        assert_eq!(
            mzv_eval_poly(p, MzvZetaKind::T, 10_000, 1.0, &mut lhs),
            MzvStatus::InvalidArgument
        );
        mzv_poly_free(p);

        let mut t = z2;
        assert_eq!(
            mzv_eval([2u32].as_ptr(), 1, MzvZetaKind::T, 100_000, 0.0, &mut t),
            MzvStatus::Ok
        );
        let pi = std::f64::consts::PI;
        assert!((t.value - pi * pi / 8.0).abs() < 1e-5);
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut r = MzvEvalResult {
            value: 0.0,
            tail_bound: 0.0,
        };
        assert_eq!(
            mzv_eval([1u32, 1].as_ptr(), 2, MzvZetaKind::Mzv, 100, 1.0, &mut r),
            MzvStatus::Inadmissible
        );
        assert!(last_error().contains("z1 z1"));
        assert_eq!(
            mzv_eval(
                [2u32].as_ptr(),
                1,
                MzvZetaKind::HurwitzMzv,
                100,
                -1.0,
                &mut r
            ),
            MzvStatus::InvalidArgument
        );
        assert_eq!(
            mzv_eval(ptr::null(), 2, MzvZetaKind::Mzv, 100, 1.0, &mut r),
            MzvStatus::NullPointer
        );
        assert_eq!(
            mzv_power(2, 2, MzvProductKind::Harmonic, ptr::null_mut()),
            MzvStatus::NullPointer
        );
        let mut eq = false;
        assert_eq!(
            mzv_poly_equal(ptr::null(), ptr::null(), &mut eq),
            MzvStatus::NullPointer
        );
        assert_eq!(mzv_poly_term_count(ptr::null()), 0);
        mzv_poly_free(ptr::null_mut());
        mzv_string_free(ptr::null_mut());

        let mut p = ptr::null_mut();
        assert_eq!(
            mzv_poly_from_word([0u32].as_ptr(), 1, &mut p),
            MzvStatus::InvalidArgument
        );

        // A successful call clears the previous message.
        assert_eq!(mzv_power(2, 1, MzvProductKind::Star, &mut p), MzvStatus::Ok);
        assert!(mzv_last_error_message().is_null());
        mzv_poly_free(p);
    }
}

#[test]
fn combinatorics_as_strings() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(mzv_fubini(3, &mut s), MzvStatus::Ok);
        assert_eq!(take_string(s), "13");

        let mut eq = false;
        let mut lhs = ptr::null_mut();
        let mut rhs = ptr::null_mut();
        assert_eq!(
            mzv_verify_theorem3(14, 5, &mut eq, &mut lhs, &mut rhs),
            MzvStatus::Ok
        );
        assert!(eq);
        assert_eq!(take_string(lhs), take_string(rhs));
        assert_eq!(
            mzv_verify_theorem3(4, 4, &mut eq, ptr::null_mut(), ptr::null_mut()),
            MzvStatus::InvalidArgument
        );
    }
}

#[test]
fn header_matches_exported_symbols() {
    let header =
        std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/mzv.h"))
            .unwrap();
    for symbol in [
        "mzv_last_error_message",
        "mzv_string_free",
        "mzv_poly_free",
        "mzv_poly_from_word",
        "mzv_power",
        "mzv_expand_closed_form",
        "mzv_poly_product",
        "mzv_lemma1_step",
        "mzv_poly_term_count",
        "mzv_poly_equal",
        "mzv_poly_to_text",
        "mzv_poly_to_json",
        "mzv_eval",
        "mzv_eval_poly",
        "mzv_fubini",
        "mzv_verify_theorem3",
        "typedef struct MzvPoly MzvPoly;",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}

/// Compiles and runs a C program against the generated header and the static
/// library. Skipped when no C compiler is on PATH.
#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("skipping: no C compiler found");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let staticlib = profile_dir.join("libmzv_ffi.a");
    assert!(staticlib.exists(), "{} not built", staticlib.display());

    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let binary = out_dir.join("mzv_smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&staticlib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&binary)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");

    let run = Command::new(&binary).output().unwrap();
    assert!(
        run.status.success(),
        "smoke test failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok() {
            return Ok(cc.to_owned());
        }
    }
    Err(())
}
