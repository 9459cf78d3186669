use std::ffi::{CStr, CString};
use std::ptr;

use geochroma_ffi::*;

fn last_error() -> String {
    let p = gc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn convex_edges_round_trip() {
    unsafe {
        let mut cfg = ptr::null_mut();
        assert_eq!(gc_config_convex(7, &mut cfg), GcStatus::Ok);
        assert_eq!(gc_config_len(cfg), 7);
        let mut d = ptr::null_mut();
        assert_eq!(gc_build_edges(cfg, &mut d), GcStatus::Ok);
        assert_eq!(gc_decomposition_part_count(d), 21);
        assert_eq!(gc_decomposition_palette_size(d), 0);
        let mut valid = -1;
        assert_eq!(gc_decomposition_validate(d, &mut valid), GcStatus::Ok);
        assert_eq!(valid, 1);
        let mut v = 0usize;
        assert_eq!(gc_decomposition_verify_coloring(d, &mut v), GcStatus::InvalidArgument);

        let mut json = ptr::null_mut();
        assert_eq!(gc_decomposition_to_json(d, &mut json), GcStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(gc_decomposition_from_json(json, &mut back), GcStatus::Ok);
        assert_eq!(gc_decomposition_part_count(back), 21);
        gc_string_free(json);
        gc_decomposition_free(back);
        gc_decomposition_free(d);
        gc_config_free(cfg);
    }
}

#[test]
fn colored_constructions() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(gc_build_thm32(4, &mut d), GcStatus::Ok);
        assert_eq!(gc_decomposition_palette_size(d), 219);
        let mut v = usize::MAX;
        assert_eq!(gc_decomposition_verify_coloring(d, &mut v), GcStatus::Ok);
        assert_eq!(v, 0);
        gc_decomposition_free(d);

        let mut cfg = ptr::null_mut();
        assert_eq!(gc_config_generate(90, 1 << 20, 4, &mut cfg), GcStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(gc_build_thm5(cfg, 72, &mut d), GcStatus::Ok);
        let mut valid = 0;
        assert_eq!(gc_decomposition_validate(d, &mut valid), GcStatus::Ok);
        assert_eq!(valid, 1);
        gc_decomposition_free(d);

        let mut d = ptr::null_mut();
        assert_eq!(gc_build_thm3(cfg, 3, &mut d), GcStatus::Ok);
        assert!(gc_decomposition_part_count(d) > 0);
        gc_decomposition_free(d);
        gc_config_free(cfg);

        let mut d = ptr::null_mut();
        assert_eq!(gc_build_thm4(12, &mut d), GcStatus::Ok);
        gc_decomposition_free(d);
    }
}

#[test]
fn error_paths() {
    unsafe {
        let mut cfg = ptr::null_mut();
        assert_eq!(gc_config_convex(2, &mut cfg), GcStatus::InvalidConfiguration);
        assert!(cfg.is_null());
        assert!(last_error().contains("n >= 3"));

        assert_eq!(gc_config_convex(5, ptr::null_mut()), GcStatus::NullPointer);
        let mut d = ptr::null_mut();
        assert_eq!(gc_build_edges(ptr::null(), &mut d), GcStatus::NullPointer);
        assert_eq!(gc_build_thm32(5, &mut d), GcStatus::InvalidArgument);

        let bad = CString::new("{\"mode\": \"coordinates\", \"n\": 3}").unwrap();
        assert_eq!(gc_config_from_json(bad.as_ptr(), &mut cfg), GcStatus::Json);
        let collinear = CString::new(r#"{"mode":"coordinates","n":3,"points":[[0,0],[1,1],[2,2]]}"#).unwrap();
        assert_eq!(gc_config_from_json(collinear.as_ptr(), &mut cfg), GcStatus::Json);
        assert!(last_error().contains("collinear"), "{}", last_error());

        // freeing NULL is a no-op
        gc_config_free(ptr::null_mut());
        gc_decomposition_free(ptr::null_mut());
        gc_string_free(ptr::null_mut());
        assert_eq!(gc_decomposition_part_count(ptr::null()), 0);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(gc_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
