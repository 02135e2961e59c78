use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use nakayama_ffi::*;

fn preset(name: &str) -> *mut NkPresentation {
    let n = CString::new(name).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { nk_presentation_preset(n.as_ptr(), &mut p) }, NkStatus::Ok);
    assert!(!p.is_null());
    p
}

fn take(s: *mut std::ffi::c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { nk_string_free(s) };
    out
}

fn last_error() -> String {
    let m = nk_last_error_message();
    assert!(!m.is_null());
    unsafe { CStr::from_ptr(m) }.to_string_lossy().into_owned()
}

#[test]
fn index_of_presets() {
    for (name, want) in [("a_5_source_at_2", 4), ("commutative_square", 3), ("a_3_linear", 1), ("kronecker", -1)] {
        let p = preset(name);
        let mut n = 0;
        assert_eq!(unsafe { nk_nakayama_index(p, &mut n) }, NkStatus::Ok);
        assert_eq!(n, want, "{name}");
        unsafe { nk_presentation_free(p) };
    }
}

#[test]
fn json_and_dot_outputs() {
    let p = preset("a_3_linear");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nk_classify_json(p, false, &mut s) }, NkStatus::Ok);
    assert!(take(s).starts_with("{\"index\":1,"));
    assert_eq!(unsafe { nk_modules_json(p, &mut s) }, NkStatus::Ok);
    assert!(take(s).contains("\"count\":6"));
    assert_eq!(unsafe { nk_validate_json(p, &mut s) }, NkStatus::Ok);
    assert!(take(s).contains("\"representation_finite\":true"));
    assert_eq!(unsafe { nk_arquiver_dot(p, &mut s) }, NkStatus::Ok);
    let dot = take(s);
    assert_eq!(dot.matches("shape=").count(), 6);
    unsafe { nk_presentation_free(p) };
}

#[test]
fn parse_round_trip() {
    let text = CString::new("vertices: 1 2 3\narrows: a: 1->2, b: 2->3\nrelations: a*b\n").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { nk_presentation_parse(text.as_ptr(), &mut p) }, NkStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nk_presentation_serialize(p, &mut s) }, NkStatus::Ok);
    let canon = CString::new(take(s)).unwrap();
    let mut p2 = ptr::null_mut();
    assert_eq!(unsafe { nk_presentation_parse(canon.as_ptr(), &mut p2) }, NkStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { nk_nakayama_index(p2, &mut n) }, NkStatus::Ok);
    assert_eq!(n, 1);
    unsafe {
        nk_presentation_free(p);
        nk_presentation_free(p2);
    }
}

#[test]
fn error_codes() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { nk_presentation_parse(ptr::null(), &mut p) }, NkStatus::NullPointer);
    let bad = CString::new("vertices: 1 2\narrows: a: 1->\n").unwrap();
    assert_eq!(unsafe { nk_presentation_parse(bad.as_ptr(), &mut p) }, NkStatus::Syntax);
    assert!(p.is_null());
    assert!(last_error().contains("line 2"));
    let invalid = [0xffu8, 0];
    assert_eq!(unsafe { nk_presentation_parse(invalid.as_ptr().cast(), &mut p) }, NkStatus::InvalidUtf8);

    let k = preset("kronecker");
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nk_modules_json(k, &mut s) }, NkStatus::BandExists);
    assert!(s.is_null());
    assert!(last_error().contains("a b^-1"));
    assert_eq!(unsafe { nk_presentation_set_characteristic(k, 4) }, NkStatus::Validation);
    assert_eq!(unsafe { nk_presentation_set_characteristic(k, 5) }, NkStatus::Ok);
    unsafe { nk_presentation_free(k) };

    let mut n = 0;
    assert_eq!(unsafe { nk_nakayama_index(ptr::null(), &mut n) }, NkStatus::NullPointer);
    unsafe {
        nk_presentation_free(ptr::null_mut());
        nk_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_api() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let h = std::fs::read_to_string(dir.join("include/nakayama.h")).unwrap();
    for f in [
        "nk_presentation_parse",
        "nk_presentation_preset",
        "nk_presentation_free",
        "nk_classify_json",
        "nk_modules_json",
        "nk_validate_json",
        "nk_arquiver_dot",
        "nk_nakayama_index",
        "nk_string_free",
        "nk_last_error_message",
        "NK_STATUS_PANIC = 9",
        "typedef struct NkPresentation NkPresentation",
    ] {
        assert!(h.contains(f), "header lacks {f}");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libnakayama_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("nk_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler on PATH");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "smoke program exited with {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
