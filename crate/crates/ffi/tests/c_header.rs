//! Compiles a small C program against the generated header and the static
//! library. Skipped when no C compiler is on the path.

use std::path::PathBuf;
use std::process::Command;

/// The static library next to this test binary (`target/<profile>/deps`)
/// or one level up.
fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let deps = exe.parent()?;
    [deps, deps.parent()?]
        .iter()
        .map(|d| d.join("libfreebraid_ffi.a"))
        .find(|p| p.exists())
}

#[test]
fn c_program_links_and_runs() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let Some(lib) = static_lib() else {
        eprintln!("static library not built; skipping");
        return;
    };
    let exe = std::env::temp_dir().join(format!("freebraid_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "exit {:?}", out.status);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("n=3 k=2: e\n"), "{stdout}");
}
