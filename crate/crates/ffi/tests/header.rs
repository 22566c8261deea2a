//! Compiles a C program against the generated header and links it with the
//! static library.

use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// `target/<profile>`, two levels above this test executable.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(manifest_dir().join("include/motivic.h")).unwrap();
    for name in [
        "typedef struct MotivicClass MotivicClass;",
        "MOTIVIC_STATUS_OK = 0",
        "MOTIVIC_STATUS_PANIC",
        "motivic_class_parse(",
        "motivic_class_free(",
        "motivic_last_error_message(",
        "motivic_verify_json(",
        "motivic_count_punctual_ideals(",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let lib = profile_dir().join("libmotivic_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let out = tempfile_path("motivic_smoke");
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&out)
        .status();
    let Ok(status) = status else {
        eprintln!("skipping: no C compiler");
        return;
    };
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}

fn tempfile_path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("{stem}-{}", std::process::id()))
}
