use std::ffi::{CStr, CString};
use std::ptr;

use unigraphs_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn graph(text: &str) -> *mut UgGraph {
    let mut g = ptr::null_mut();
    assert_eq!(ug_graph_from_graph6(c(text).as_ptr(), &mut g), UgStatus::Ok);
    g
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let text = CStr::from_ptr(s).to_str().unwrap().to_string();
    ug_string_free(s);
    text
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ug_last_error_message()).to_str().unwrap().to_string() }
}

#[test]
fn graph_round_trip() {
    unsafe {
        let g = graph("DhC");
        assert_eq!(ug_graph_order(g), 5);
        let mut s = ptr::null_mut();
        assert_eq!(ug_graph_to_graph6(g, &mut s), UgStatus::Ok);
        assert_eq!(take_string(s), "DhC");
        ug_graph_free(g);
    }
}

#[test]
fn canonical_strings_identify_isomorphic_graphs() {
    unsafe {
        let (a, b) = (graph("Ch"), graph("CR"));
        let (mut sa, mut sb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ug_canonical_graph6(a, &mut sa), UgStatus::Ok);
        assert_eq!(ug_canonical_graph6(b, &mut sb), UgStatus::Ok);
        assert_eq!(take_string(sa), take_string(sb));
        ug_graph_free(a);
        ug_graph_free(b);
    }
}

#[test]
fn unigraph_queries() {
    unsafe {
        let p5 = graph("DhC");
        let mut v = true;
        assert_eq!(ug_is_unigraph(p5, &mut v), UgStatus::Ok);
        assert!(!v);
        assert_eq!(ug_is_a_unigraph(p5, c("bipartite").as_ptr(), &mut v), UgStatus::Ok);
        assert!(v);
        assert_eq!(ug_is_hereditary_a_unigraph(p5, ptr::null(), &mut v), UgStatus::Ok);
        assert!(!v);

        let k3 = graph("Bw");
        assert_eq!(ug_is_a_unigraph(k3, c("bipartite").as_ptr(), &mut v), UgStatus::NotMember);
        assert!(last_error().contains("bipartite"));
        assert_eq!(ug_is_hereditary_a_unigraph(k3, c("bipartite").as_ptr(), &mut v), UgStatus::Ok);
        assert!(!v);
        assert_eq!(ug_is_a_unigraph(k3, c("tripartite").as_ptr(), &mut v), UgStatus::Parse);
        ug_graph_free(p5);
        ug_graph_free(k3);
    }
}

#[test]
fn realization_lists() {
    unsafe {
        let mut list = ptr::null_mut();
        assert_eq!(ug_enumerate_realizations(c("2,2,2,1,1").as_ptr(), ptr::null(), 0, &mut list), UgStatus::Ok);
        assert_eq!(ug_graph_list_len(list), 2);
        let mut g = ptr::null_mut();
        assert_eq!(ug_graph_list_get(list, 1, &mut g), UgStatus::Ok);
        assert_eq!(ug_graph_order(g), 5);
        ug_graph_free(g);
        assert_eq!(ug_graph_list_get(list, 2, &mut g), UgStatus::OutOfRange);
        ug_graph_list_free(list);

        assert_eq!(
            ug_enumerate_realizations(c("2,2,2,1,1").as_ptr(), c("bipartite").as_ptr(), 0, &mut list),
            UgStatus::Ok
        );
        assert_eq!(ug_graph_list_len(list), 1);
        ug_graph_list_free(list);

        assert_eq!(ug_enumerate_realizations(c("2^9").as_ptr(), ptr::null(), 2, &mut list), UgStatus::Ok);
        assert_eq!(ug_graph_list_len(list), 2);
        ug_graph_list_free(list);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(ug_graph_from_graph6(ptr::null(), &mut g), UgStatus::NullPointer);
        assert_eq!(ug_graph_from_graph6(c("not graph6").as_ptr(), &mut g), UgStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(ug_graph_from_graph6(c("A_").as_ptr(), ptr::null_mut()), UgStatus::NullPointer);

        let mut list = ptr::null_mut();
        assert_eq!(ug_enumerate_realizations(c("9,1").as_ptr(), ptr::null(), 0, &mut list), UgStatus::NotGraphic);
        assert_eq!(ug_enumerate_realizations(c("1^24").as_ptr(), ptr::null(), 0, &mut list), UgStatus::Capacity);

        let mut v = false;
        assert_eq!(ug_is_unigraph(ptr::null(), &mut v), UgStatus::NullPointer);
        assert_eq!(ug_graph_order(ptr::null()), 0);
        assert_eq!(ug_graph_list_len(ptr::null()), 0);
        ug_graph_free(ptr::null_mut());
        ug_graph_list_free(ptr::null_mut());
        ug_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/unigraphs.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["ug_graph_from_graph6", "ug_enumerate_realizations", "ug_last_error_message", "UG_STATUS_NOT_MEMBER"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c99", "-Wall", "-Werror", header])
        .status()
    else {
        return;
    };
    assert!(status.success());
}

#[test]
fn c_program_links_and_runs() {
    let dir = env!("CARGO_MANIFEST_DIR");
    // The test binary lives in target/<profile>/deps; the static library one level up.
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    if !lib_dir.join("libunigraphs_ffi.a").exists() {
        return;
    }
    let out = std::env::temp_dir().join(format!("unigraphs-smoke-{}", std::process::id()));
    let Ok(status) = std::process::Command::new("cc")
        .arg(format!("{dir}/tests/c/smoke.c"))
        .arg(format!("-I{dir}/include"))
        .arg(lib_dir.join("libunigraphs_ffi.a"))
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
    else {
        return;
    };
    assert!(status.success(), "compiling the C smoke test failed");
    let run = std::process::Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with('E'));
}
