use std::path::Path;
use std::process::Command;

#[test]
fn header_and_demo_compile_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("quadbook-demo-{}.o", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-c"])
        .arg("-I")
        .arg(dir.join("include"))
        .arg(dir.join("examples/demo.c"))
        .arg("-o")
        .arg(&out)
        .status()
        .expect("C compiler available");
    let _ = std::fs::remove_file(&out);
    assert!(status.success());
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/quadbook.h")).unwrap();
    let source = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    for line in source.lines() {
        let Some(rest) = line.split("extern \"C\" fn ").nth(1) else { continue };
        let name = rest.split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}
