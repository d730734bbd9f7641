//! Criterion 12: the golden-file suite runs byte-exactly against the built
//! binary, and repeated runs are byte-identical.

use std::path::Path;
use std::process::Command;

// the binary also embeds this module; only `run_cases` is needed here
#[path = "../src/golden.rs"]
#[allow(dead_code)]
mod golden;

fn exe() -> &'static Path {
    Path::new(env!("CARGO_BIN_EXE_polymat"))
}

#[test]
fn criterion_12_golden_suite() {
    match golden::run_cases(exe()) {
        Ok(count) => {
            println!("criterion 12 golden-file suite .......... PASS ({count} cases byte-exact)");
        }
        Err(e) => panic!("criterion 12 golden-file suite FAIL: {e}"),
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = std::env::temp_dir().join(format!("polymat-determinism-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = dir.join("p0.json");
    std::fs::write(&doc, r#"{"elements":["1","2"],"type":[2,1],"rank":[0,2,1,2]}"#).unwrap();
    for args in [
        vec!["fan", doc.to_str().unwrap()],
        vec!["volume", doc.to_str().unwrap()],
        vec!["points", doc.to_str().unwrap(), "--format", "csv"],
    ] {
        let first = Command::new(exe()).args(&args).output().unwrap();
        let second = Command::new(exe()).args(&args).output().unwrap();
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn suite_command_reports_every_criterion() {
    let output = Command::new(exe()).arg("suite").output().unwrap();
    assert_eq!(output.status.code(), Some(0), "suite failed: {:?}", String::from_utf8_lossy(&output.stdout));
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    for (k, line) in lines.iter().enumerate() {
        assert!(line.starts_with(&format!("criterion {:2}", k + 1)), "line {k}: {line}");
        assert!(line.contains("PASS"), "line {k}: {line}");
    }
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("polymat-outflag-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = dir.join("p0.json");
    let target = dir.join("degree.json");
    std::fs::write(&doc, r#"{"elements":["1","2"],"type":[2,1],"rank":[0,2,1,2]}"#).unwrap();
    let output = Command::new(exe())
        .args([
            "degree",
            doc.to_str().unwrap(),
            "--seq",
            "{1},{1}",
            "--out",
            target.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), "{\"degree\":1}\n");
    std::fs::remove_dir_all(&dir).unwrap();
}
