use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hfroot_ffi::*;

#[test]
fn module_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hf_seifert_brieskorn(2, 7, 17, &mut s), HfStatus::Ok);
        let mut m = ptr::null_mut();
        assert_eq!(hf_module_compute(s, &mut m), HfStatus::Ok);
        assert_eq!(hf_module_d(m), 0);
        assert_eq!(hf_module_tower_count(m), 3);
        let mut towers = Vec::new();
        for i in 0..3 {
            let (mut b, mut l, mut k) = (0, 0, 0);
            assert_eq!(hf_module_tower(m, i, &mut b, &mut l, &mut k), HfStatus::Ok);
            towers.push((b, l, k));
        }
        assert_eq!(towers, vec![(0, 1, 3), (2, 1, 2), (6, 1, 2)]);
        let (mut b, mut l, mut k) = (0, 0, 0);
        assert_eq!(
            hf_module_tower(m, 3, &mut b, &mut l, &mut k),
            HfStatus::OutOfRange
        );

        let name = CString::new("-Sigma(2,7,17)").unwrap();
        let mut json = ptr::null_mut();
        assert_eq!(hf_module_to_json(m, name.as_ptr(), &mut json), HfStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        hf_string_free(json);
        let (n, back) = hfroot::report::module_from_json(&text).unwrap();
        assert_eq!(n, "-Sigma(2,7,17)");
        assert_eq!(back.d, 0);

        hf_module_free(m);
        hf_seifert_free(s);
    }
}

#[test]
fn tau_access() {
    unsafe {
        let text = CString::new("e0=-2 arms=2/1,5/3,9/8").unwrap();
        let mut s = ptr::null_mut();
        assert_eq!(hf_seifert_parse(text.as_ptr(), &mut s), HfStatus::Ok);
        let mut t = ptr::null_mut();
        assert_eq!(hf_tau_compute(s, &mut t), HfStatus::Ok);
        let len = hf_tau_len(t);
        assert_eq!(len, 181);
        let values = std::slice::from_raw_parts(hf_tau_values(t), len);
        assert_eq!(&values[..3], &[0, 1, 1]);
        assert_eq!(hf_tau_min(t), 0);
        hf_tau_free(t);
        hf_seifert_free(s);
    }
}

#[test]
fn dedekind() {
    let (mut num, mut den) = (0, 0);
    unsafe {
        assert_eq!(hf_dedekind(8, 9, &mut num, &mut den), HfStatus::Ok);
        assert_eq!((num, den), (-14, 27));
        assert_eq!(hf_dedekind(6, 9, &mut num, &mut den), HfStatus::NotCoprime);
        assert_eq!(hf_dedekind(1, 0, &mut num, &mut den), HfStatus::InvalidArgs);
        assert_eq!(
            hf_dedekind(1, 4, ptr::null_mut(), &mut den),
            HfStatus::NullPointer
        );
    }
}

#[test]
fn errors_carry_messages() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hf_seifert_brieskorn(2, 4, 7, &mut s), HfStatus::NotCoprime);
        assert!(s.is_null());
        let msg = CStr::from_ptr(hf_last_error()).to_str().unwrap();
        assert!(msg.contains("gcd"), "{msg}");
        assert_eq!(
            hf_seifert_brieskorn(2, 3, 5, ptr::null_mut()),
            HfStatus::NullPointer
        );
        let bad = CString::new("e0=-1 arms=2/1,3/1,5/1").unwrap();
        assert_eq!(
            hf_seifert_parse(bad.as_ptr(), &mut s),
            HfStatus::InvalidArgs
        );
        let garbage = CString::new("arms").unwrap();
        assert_eq!(hf_seifert_parse(garbage.as_ptr(), &mut s), HfStatus::Parse);
        let mut m = ptr::null_mut();
        assert_eq!(
            hf_module_compute(ptr::null(), &mut m),
            HfStatus::NullPointer
        );
        assert_eq!(hf_module_d(ptr::null()), 0);
        hf_seifert_free(ptr::null_mut());
        hf_module_free(ptr::null_mut());
        hf_tau_free(ptr::null_mut());
        hf_string_free(ptr::null_mut());
        let ok = CStr::from_ptr(hf_status_message(HfStatus::Ok));
        assert_eq!(ok.to_str().unwrap(), "ok");
    }
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/capi-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

fn have_cc() -> bool {
    Command::new("cc")
        .arg("--version")
        .output()
        .is_ok_and(|o| o.status.success())
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hfroot.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "hf_seifert_brieskorn",
        "hf_seifert_parse",
        "hf_module_compute",
        "hf_module_tower",
        "hf_module_to_json",
        "hf_tau_values",
        "hf_dedekind",
        "hf_last_error",
        "typedef struct HfModule HfModule",
        "HF_STATUS_OUT_OF_RANGE = 9",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    if !have_cc() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libhfroot_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::temp_dir().join(format!("hfroot-smoke-{}", std::process::id()));
    let out = Command::new("cc")
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(dir.join("include"))
        .arg(dir.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&exe)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let run = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert_eq!(run.status.code(), Some(0));
    let json = String::from_utf8(run.stdout).unwrap();
    assert!(
        json.starts_with("{\"manifold\":\"-Sigma(2,7,17)\",\"d\":0"),
        "{json}"
    );
}
