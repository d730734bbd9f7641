//! Embedded golden cases: fixed inputs, byte-exact expected output, expected
//! exit code. The `suite` command replays them against the running binary and
//! the integration tests replay them against the freshly built one.

use std::path::Path;
use std::process::Stdio;

pub struct Case {
    pub name: &'static str,
    /// Subcommand arguments; `$F0`, `$F1`, .. stand for input files.
    pub args: &'static [&'static str],
    pub files: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub want_stdout: &'static str,
    pub want_exit: i32,
}

const P0: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[0,2,1,2]}"#;
const P0_SPARSE: &str =
    r#"{"elements":["1","2"],"type":[2,1],"rank":{"{}":0,"{1}":2,"{1,2}":2,"{2}":1}}"#;
const P0_DUAL: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[0,1,1,1]}"#;
const D2: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[0,0,1,1]}"#;
const H2: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[0,2,0,2]}"#;
const ZERO21: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[0,0,0,0]}"#;
const BAD_NORMALIZATION: &str = r#"{"elements":["1","2"],"type":[2,1],"rank":[1,2,1,2]}"#;
const BAD_SUBMODULAR: &str = r#"{"elements":["1","2"],"type":[1,1],"rank":[0,0,0,1]}"#;
const B1: &str = r#"{"elements":["e"],"type":[1],"rank":[0,1]}"#;
const P1: &str = r#"{"elements":["1","2"],"type":[2,2],"rank":[0,2,2,3]}"#;
const P22: &str = r#"{"elements":["1","2"],"type":[2,2],"rank":[0,2,2,2]}"#;
const MATRIX_P0: &str = r#"{"blocks":[2,1],"rows":[[1,0,1],[0,1,1]]}"#;
const RELATION_SPLIT: &str = concat!(
    r#"{"terms":["#,
    r#"{"coeff":1,"polymatroid":{"elements":["1","2"],"type":[2,2],"rank":[0,2,2,2]}},"#,
    r#"{"coeff":-1,"polymatroid":{"elements":["1","2"],"type":[2,2],"rank":[0,1,2,2]}},"#,
    r#"{"coeff":-1,"polymatroid":{"elements":["1","2"],"type":[2,2],"rank":[0,2,1,2]}},"#,
    r#"{"coeff":1,"polymatroid":{"elements":["1","2"],"type":[2,2],"rank":[0,1,1,2]}}"#,
    r#"]}"#
);

pub const CASES: &[Case] = &[
    Case {
        name: "validate-p0",
        args: &["validate", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"valid\":true,\"rank\":2}\n",
        want_exit: 0,
    },
    Case {
        name: "validate-sparse-rank-map",
        args: &["validate", "$F0"],
        files: &[P0_SPARSE],
        stdin: None,
        want_stdout: "{\"valid\":true,\"rank\":2}\n",
        want_exit: 0,
    },
    Case {
        name: "validate-normalization-error",
        args: &["validate", "$F0"],
        files: &[BAD_NORMALIZATION],
        stdin: None,
        want_stdout: "{\"error\":\"Normalization\",\"operation\":\"validate\"}\n",
        want_exit: 1,
    },
    Case {
        name: "validate-submodularity-witness",
        args: &["validate", "$F0"],
        files: &[BAD_SUBMODULAR],
        stdin: None,
        want_stdout:
            "{\"error\":\"Submodularity\",\"operation\":\"validate\",\"witness\":[\"{1}\",\"{2}\"]}\n",
        want_exit: 1,
    },
    Case {
        name: "validate-over-cap",
        args: &["validate", "$F0", "--max-m", "1"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"error\":\"GroundTooLarge\",\"operation\":\"validate\",\"witness\":{\"cap\":1,\"m\":2}}\n",
        want_exit: 1,
    },
    Case {
        name: "parse-error",
        args: &["validate", "$F0"],
        files: &["{"],
        stdin: None,
        want_stdout:
            "{\"error\":\"Parse\",\"operation\":\"validate\",\"detail\":\"EOF while parsing an object at line 1 column 1\"}\n",
        want_exit: 2,
    },
    Case {
        name: "dual-p0",
        args: &["dual", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,1,1,1]}\n",
        want_exit: 0,
    },
    Case {
        name: "dual-involution",
        args: &["dual", "$F0"],
        files: &[P0_DUAL],
        stdin: None,
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,2,1,2]}\n",
        want_exit: 0,
    },
    Case {
        name: "dual-from-stdin",
        args: &["dual", "-"],
        files: &[],
        stdin: Some(P0),
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,1,1,1]}\n",
        want_exit: 0,
    },
    Case {
        name: "union-of-duals",
        args: &["union", "$F0", "$F1"],
        files: &[P0_DUAL, D2],
        stdin: None,
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,1,1,2]}\n",
        want_exit: 0,
    },
    Case {
        name: "union-ground-mismatch",
        args: &["union", "$F0", "$F1"],
        files: &[P0, P1],
        stdin: None,
        want_stdout: "{\"error\":\"GroundMismatch\",\"operation\":\"union\"}\n",
        want_exit: 1,
    },
    Case {
        name: "meet-with-generator",
        args: &["meet", "$F0", "$F1"],
        files: &[P0, H2],
        stdin: None,
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,1,0,1]}\n",
        want_exit: 0,
    },
    Case {
        name: "meet-csv",
        args: &["meet", "$F0", "$F1", "--format", "csv"],
        files: &[P0, H2],
        stdin: None,
        want_stdout: "subset,rank\n{},0\n{1},1\n{2},0\n\"{1,2}\",1\n",
        want_exit: 0,
    },
    Case {
        name: "lift-p0",
        args: &["lift", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"elements\":[\"1a\",\"1b\",\"2\"],\"type\":[1,1,1],\"rank\":[0,1,1,2,1,2,2,2]}\n",
        want_exit: 0,
    },
    Case {
        name: "expand-p0",
        args: &["expand", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"elements\":[\"1a\",\"1b\",\"2\"],\"type\":[2,2,1],\"rank\":[0,2,2,2,1,2,2,2]}\n",
        want_exit: 0,
    },
    Case {
        name: "flats-p0",
        args: &["flats", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"flats\":[\"{}\",\"{2}\",\"{1,2}\"],\"loops\":\"{}\"}\n",
        want_exit: 0,
    },
    Case {
        name: "flats-zero",
        args: &["flats", "$F0"],
        files: &[ZERO21],
        stdin: None,
        want_stdout: "{\"flats\":[\"{1,2}\"],\"loops\":\"{1,2}\"}\n",
        want_exit: 0,
    },
    Case {
        name: "points-p0",
        args: &["points", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"independence\":[[0,0],[0,1],[1,0],[1,1],[2,0]],\"base\":[[1,1],[2,0]]}\n",
        want_exit: 0,
    },
    Case {
        name: "points-csv",
        args: &["points", "$F0", "--format", "csv"],
        files: &[P0],
        stdin: None,
        want_stdout: "kind,point\nindependence,0 0\nindependence,0 1\nindependence,1 0\nindependence,1 1\nindependence,2 0\nbase,1 1\nbase,2 0\n",
        want_exit: 0,
    },
    Case {
        name: "fan-rank-one",
        args: &["fan", "$F0"],
        files: &[B1],
        stdin: None,
        want_stdout: "{\"cones\":[{\"I\":[],\"chain\":[],\"weight\":1},{\"I\":[],\"chain\":[[]],\"weight\":1},{\"I\":[0],\"chain\":[],\"weight\":1}]}\n",
        want_exit: 0,
    },
    Case {
        name: "fan-p0",
        args: &["fan", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: concat!(
            "{\"cones\":[",
            "{\"I\":[],\"chain\":[],\"weight\":1},",
            "{\"I\":[],\"chain\":[[]],\"weight\":1},",
            "{\"I\":[],\"chain\":[[],[\"2\"]],\"weight\":1},",
            "{\"I\":[],\"chain\":[[\"2\"]],\"weight\":1},",
            "{\"I\":[0],\"chain\":[],\"weight\":1},",
            "{\"I\":[0],\"chain\":[[]],\"weight\":1},",
            "{\"I\":[1],\"chain\":[],\"weight\":1},",
            "{\"I\":[1],\"chain\":[[]],\"weight\":1},",
            "{\"I\":[0,1],\"chain\":[],\"weight\":1},",
            "{\"I\":[2],\"chain\":[],\"weight\":1},",
            "{\"I\":[2],\"chain\":[[\"2\"]],\"weight\":1},",
            "{\"I\":[0,2],\"chain\":[],\"weight\":1},",
            "{\"I\":[1,2],\"chain\":[],\"weight\":1}",
            "]}\n"
        ),
        want_exit: 0,
    },
    Case {
        name: "star-p0",
        args: &["star", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: concat!(
            "{\"cones\":[",
            "{\"I\":[],\"chain\":[],\"weight\":1},",
            "{\"I\":[],\"chain\":[[\"2\"]],\"weight\":1},",
            "{\"I\":[0],\"chain\":[],\"weight\":1},",
            "{\"I\":[1],\"chain\":[],\"weight\":1}",
            "]}\n"
        ),
        want_exit: 0,
    },
    Case {
        name: "star-with-loops",
        args: &["star", "$F0"],
        files: &[H2],
        stdin: None,
        want_stdout: "{\"error\":\"LoopyPolymatroid\",\"operation\":\"star\"}\n",
        want_exit: 1,
    },
    Case {
        name: "balanced-p0",
        args: &["balanced", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"balanced\":true}\n",
        want_exit: 0,
    },
    Case {
        name: "degree-one",
        args: &["degree", "$F0", "--seq", "{1},{1}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"degree\":1}\n",
        want_exit: 0,
    },
    Case {
        name: "degree-zero",
        args: &["degree", "$F0", "--seq", "{2},{2}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"degree\":0}\n",
        want_exit: 0,
    },
    Case {
        name: "degree-csv",
        args: &["degree", "$F0", "--seq", "{1},{1}", "--format", "csv"],
        files: &[P0],
        stdin: None,
        want_stdout: "degree\n1\n",
        want_exit: 0,
    },
    Case {
        name: "degree-length-mismatch",
        args: &["degree", "$F0", "--seq", "{1}"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"error\":\"LengthMismatch\",\"operation\":\"degree\",\"witness\":{\"expected\":2,\"got\":1}}\n",
        want_exit: 1,
    },
    Case {
        name: "cascade-degree",
        args: &["cascade", "$F0", "--seq", "{2},{1}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"degree\":1}\n",
        want_exit: 0,
    },
    Case {
        name: "volume-p0",
        args: &["volume", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"poly\":\"1/2*t1^2 + t1*t2\"}\n",
        want_exit: 0,
    },
    Case {
        name: "egf-p0",
        args: &["egf", "$F0"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"poly\":\"1/2*t1^2 + t1*t2\"}\n",
        want_exit: 0,
    },
    Case {
        name: "egf-zero",
        args: &["egf", "$F0"],
        files: &[ZERO21],
        stdin: None,
        want_stdout: "{\"poly\":\"1\"}\n",
        want_exit: 0,
    },
    Case {
        name: "hr-with-matching",
        args: &["hr", "$F0", "--seq", "{1},{2}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"hall_rado\":true,\"matching\":[\"1\",\"2\"]}\n",
        want_exit: 0,
    },
    Case {
        name: "hr-without-matching",
        args: &["hr", "$F0", "--seq", "{2},{2}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"hall_rado\":false,\"matching\":null}\n",
        want_exit: 0,
    },
    Case {
        name: "dragon-one",
        args: &["dragon", "$F0", "--seq", "{1}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"degree\":1,\"condition\":true}\n",
        want_exit: 0,
    },
    Case {
        name: "dragon-zero",
        args: &["dragon", "$F0", "--seq", "{2}"],
        files: &[P0],
        stdin: None,
        want_stdout: "{\"degree\":0,\"condition\":false}\n",
        want_exit: 0,
    },
    Case {
        name: "split-p1",
        args: &["split", "$F0", "--element", "1", "--value", "1"],
        files: &[P1],
        stdin: None,
        want_stdout: concat!(
            "{\"le\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,1,2,3]},",
            "\"ge\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,2,2,3]},",
            "\"eq\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,1,2,3]}}\n"
        ),
        want_exit: 0,
    },
    Case {
        name: "split-three-ways",
        args: &["split", "$F0", "--element", "1", "--value", "1"],
        files: &[P22],
        stdin: None,
        want_stdout: concat!(
            "{\"le\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,1,2,2]},",
            "\"ge\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,2,1,2]},",
            "\"eq\":{\"elements\":[\"1\",\"2\"],\"type\":[2,2],\"rank\":[0,1,1,2]}}\n"
        ),
        want_exit: 0,
    },
    Case {
        name: "split-out-of-range",
        args: &["split", "$F0", "--element", "1", "--value", "0"],
        files: &[P0],
        stdin: None,
        want_stdout:
            "{\"error\":\"SplitOutOfRange\",\"operation\":\"split\",\"witness\":{\"got\":0,\"high\":2,\"low\":1}}\n",
        want_exit: 1,
    },
    Case {
        name: "valcheck-split-relation",
        args: &["valcheck", "$F0"],
        files: &[RELATION_SPLIT],
        stdin: None,
        want_stdout: "{\"lhs_zero\":true,\"rhs_zero\":true}\n",
        want_exit: 0,
    },
    Case {
        name: "valcheck-single-term",
        args: &["valcheck", "$F0"],
        files: &[r#"{"terms":[{"coeff":1,"polymatroid":{"elements":["1","2"],"type":[2,1],"rank":[0,2,1,2]}}]}"#],
        stdin: None,
        want_stdout: "{\"lhs_zero\":false,\"rhs_zero\":false}\n",
        want_exit: 0,
    },
    Case {
        name: "realize-p0",
        args: &["realize", "$F0"],
        files: &[MATRIX_P0],
        stdin: None,
        want_stdout: "{\"elements\":[\"1\",\"2\"],\"type\":[2,1],\"rank\":[0,2,1,2]}\n",
        want_exit: 0,
    },
    Case {
        name: "realize-dependent-rows",
        args: &["realize", "$F0"],
        files: &[r#"{"blocks":[1,1],"rows":[[1,1],["2/1","2"]]}"#],
        stdin: None,
        want_stdout: "{\"error\":\"RankDeficientRows\",\"operation\":\"realize\"}\n",
        want_exit: 1,
    },
];

pub struct GoldenOutcome {
    pub pass: bool,
    pub detail: String,
}

impl GoldenOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion 12 {:.<46} {} ({})",
            "golden-file suite ",
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Replays the cases against this very binary.
pub fn run_embedded_cases() -> GoldenOutcome {
    let exe = match std::env::current_exe() {
        Ok(exe) => exe,
        Err(e) => return GoldenOutcome { pass: false, detail: format!("no current exe: {e}") },
    };
    match run_cases(&exe) {
        Ok(count) => GoldenOutcome { pass: true, detail: format!("{count} cases byte-exact") },
        Err(e) => GoldenOutcome { pass: false, detail: e },
    }
}

/// Runs every case against the given binary, comparing stdout bytes and exit
/// codes. Returns the number of cases on success.
pub fn run_cases(exe: &Path) -> Result<usize, String> {
    use std::io::Write;
    let dir = std::env::temp_dir().join(format!("polymat-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| format!("tempdir: {e}"))?;
    let result = (|| {
        for (idx, case) in CASES.iter().enumerate() {
            let mut paths = Vec::new();
            for (k, content) in case.files.iter().enumerate() {
                let path = dir.join(format!("case-{idx}-f{k}.json"));
                std::fs::write(&path, content).map_err(|e| format!("{}: {e}", case.name))?;
                paths.push(path);
            }
            let args: Vec<String> = case
                .args
                .iter()
                .map(|a| {
                    let mut s = a.to_string();
                    for (k, p) in paths.iter().enumerate() {
                        s = s.replace(&format!("$F{k}"), &p.display().to_string());
                    }
                    s
                })
                .collect();
            let mut command = std::process::Command::new(exe);
            command.args(&args).stdout(Stdio::piped()).stderr(Stdio::piped());
            command.stdin(if case.stdin.is_some() { Stdio::piped() } else { Stdio::null() });
            let mut child = command.spawn().map_err(|e| format!("{}: spawn: {e}", case.name))?;
            if let Some(input) = case.stdin {
                child
                    .stdin
                    .take()
                    .expect("stdin was piped")
                    .write_all(input.as_bytes())
                    .map_err(|e| format!("{}: stdin: {e}", case.name))?;
            }
            let output = child.wait_with_output().map_err(|e| format!("{}: {e}", case.name))?;
            let got_exit = output.status.code().unwrap_or(-1);
            let got_stdout = String::from_utf8_lossy(&output.stdout);
            if got_exit != case.want_exit {
                return Err(format!(
                    "{}: exit {} wanted {} (stdout {:?})",
                    case.name, got_exit, case.want_exit, got_stdout
                ));
            }
            if got_stdout != case.want_stdout {
                return Err(format!(
                    "{}: stdout {:?} wanted {:?}",
                    case.name, got_stdout, case.want_stdout
                ));
            }
        }
        Ok(CASES.len())
    })();
    let _ = std::fs::remove_dir_all(&dir);
    result
}
