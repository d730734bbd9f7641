//! Command-line surface: document ingestion, batch computations, the
//! verification suite, and JSON/CSV report emission.

mod docs;
mod golden;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use polymat::acceptance;
use polymat::chow;
use polymat::fans::{Balance, WeightedFan};
use polymat::lift;
use polymat::polytopes;
use polymat::rado;
use polymat::realization::RealizationMatrix;
use polymat::{CoreError, GroundData, GroundMap, Polymatroid, SetSequence, Subset, ValidationError};

use docs::{DocError, NamedPolymatroid, PolymatroidDoc};

#[derive(Parser)]
#[command(name = "polymat", version, about = "Exact polymatroid computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every randomized subcommand
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Trial count for sampling checks
    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,
    /// Cap on the ground-set size
    #[arg(long = "max-m", global = true, default_value_t = 12)]
    max_m: usize,
    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the four rank axioms
    Validate { file: String },
    /// Dual rank table
    Dual { file: String },
    /// Union of two polymatroids on the same ground
    Union { file1: String, file2: String },
    /// Intersection of two polymatroids on the same ground
    Meet { file1: String, file2: String },
    /// Multisymmetric lift to the blown-up ground set
    Lift { file: String },
    /// Expansion to the blown-up ground set
    Expand { file: String },
    /// Flats and loops
    Flats { file: String },
    /// Independence and base lattice points
    Points { file: String },
    /// Augmented Bergman fan
    Fan { file: String },
    /// Star of the fan at the empty-set ray
    Star { file: String },
    /// Balancing check for the augmented Bergman fan
    Balanced { file: String },
    /// Matching-condition degree of sequences of rank length; repeat --seq
    /// for a batch
    Degree {
        file: String,
        #[arg(long, required = true)]
        seq: Vec<String>,
    },
    /// Meet-cascade degree of sequences of rank length; repeat --seq for a
    /// batch
    Cascade {
        file: String,
        #[arg(long, required = true)]
        seq: Vec<String>,
    },
    /// Volume polynomial
    Volume { file: String },
    /// Basis exponential generating function
    Egf { file: String },
    /// Hall-Rado condition and a witness matching
    Hr {
        file: String,
        #[arg(long)]
        seq: String,
    },
    /// Dragon degree and dragon condition for a sequence of length rank-1
    Dragon {
        file: String,
        #[arg(long)]
        seq: String,
    },
    /// Slice the base polytope along a coordinate hyperplane
    Split {
        file: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        value: u32,
    },
    /// Compare class and indicator vanishing for a relation document
    Valcheck { file: String },
    /// Rank function of a rational realization matrix
    Realize { file: String },
    /// Run the acceptance battery
    Suite,
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

struct Rendered {
    json: String,
    csv: Table,
}

enum CmdError {
    Parse(String),
    Domain { err: CoreError, names: Option<Vec<String>> },
}

impl From<DocError> for CmdError {
    fn from(e: DocError) -> CmdError {
        match e {
            DocError::Parse(msg) => CmdError::Parse(msg),
            DocError::Domain(err) => CmdError::Domain { err, names: None },
        }
    }
}

impl From<CoreError> for CmdError {
    fn from(err: CoreError) -> CmdError {
        CmdError::Domain { err, names: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let op = operation_name(&cli.command);
    let (text, code) = if let Command::Suite = cli.command {
        let (text, ok) = run_suite(&cli);
        (text, if ok { 0u8 } else { 1 })
    } else {
        match run(&cli) {
            Ok(out) => (out, 0u8),
            Err(CmdError::Parse(detail)) => (error_doc(op, "Parse", None, Some(detail)), 2),
            Err(CmdError::Domain { err, names }) => {
                let (kind, witness) = domain_error_parts(&err, names.as_deref());
                (error_doc(op, kind, witness, None), 1)
            }
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}

fn operation_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Dual { .. } => "dual",
        Command::Union { .. } => "union",
        Command::Meet { .. } => "meet",
        Command::Lift { .. } => "lift",
        Command::Expand { .. } => "expand",
        Command::Flats { .. } => "flats",
        Command::Points { .. } => "points",
        Command::Fan { .. } => "fan",
        Command::Star { .. } => "star",
        Command::Balanced { .. } => "balanced",
        Command::Degree { .. } => "degree",
        Command::Cascade { .. } => "cascade",
        Command::Volume { .. } => "volume",
        Command::Egf { .. } => "egf",
        Command::Hr { .. } => "hr",
        Command::Dragon { .. } => "dragon",
        Command::Split { .. } => "split",
        Command::Valcheck { .. } => "valcheck",
        Command::Realize { .. } => "realize",
        Command::Suite => "suite",
    }
}

fn run(cli: &Cli) -> Result<String, CmdError> {
    let rendered = dispatch(cli)?;
    Ok(match cli.format {
        Format::Json => rendered.json + "\n",
        Format::Csv => render_csv(&rendered.csv),
    })
}

fn dispatch(cli: &Cli) -> Result<Rendered, CmdError> {
    let cap = cli.max_m;
    match &cli.command {
        Command::Validate { file } => {
            let p = load_polymatroid(file, cap)?;
            #[derive(Serialize)]
            struct Out {
                valid: bool,
                rank: u32,
            }
            let rank = p.value.rank_total();
            Ok(Rendered {
                json: to_json(&Out { valid: true, rank }),
                csv: Table {
                    header: svec(&["valid", "rank"]),
                    rows: vec![vec!["true".into(), rank.to_string()]],
                },
            })
        }
        Command::Dual { file } => {
            let p = load_polymatroid(file, cap)?;
            Ok(render_doc(&p.names, &p.value.dual()))
        }
        Command::Union { file1, file2 } => {
            let (a, b) = load_pair(file1, file2, cap)?;
            Ok(render_doc(&a.names, &a.value.union(&b.value).map_err(|e| domain(e, &a))?))
        }
        Command::Meet { file1, file2 } => {
            let (a, b) = load_pair(file1, file2, cap)?;
            Ok(render_doc(&a.names, &a.value.meet(&b.value).map_err(|e| domain(e, &a))?))
        }
        Command::Lift { file } => {
            let p = load_polymatroid(file, cap)?;
            let map = GroundMap::of_type_with_cap(p.value.ground(), cap).map_err(|e| domain(e, &p))?;
            let lifted = lift::msym_lift(&p.value, &map).map_err(|e| domain(e, &p))?;
            let names = docs::lifted_names(&p.names, p.value.ground().type_vector());
            Ok(render_doc(&names, &lifted))
        }
        Command::Expand { file } => {
            let p = load_polymatroid(file, cap)?;
            let map = GroundMap::of_type_with_cap(p.value.ground(), cap).map_err(|e| domain(e, &p))?;
            let expanded = lift::expand(&p.value, &map).map_err(|e| domain(e, &p))?;
            let names = docs::lifted_names(&p.names, p.value.ground().type_vector());
            Ok(render_doc(&names, &expanded))
        }
        Command::Flats { file } => {
            let p = load_polymatroid(file, cap)?;
            let flats = p.value.flats();
            #[derive(Serialize)]
            struct Out {
                flats: Vec<String>,
                loops: String,
            }
            let strings: Vec<String> =
                flats.flats.iter().map(|&f| docs::subset_string(f, &p.names)).collect();
            let loops = docs::subset_string(flats.loops, &p.names);
            let mut rows: Vec<Vec<String>> =
                strings.iter().map(|s| vec!["flat".into(), s.clone()]).collect();
            rows.push(vec!["loops".into(), loops.clone()]);
            Ok(Rendered {
                json: to_json(&Out { flats: strings, loops }),
                csv: Table { header: svec(&["kind", "subset"]), rows },
            })
        }
        Command::Points { file } => {
            let p = load_polymatroid(file, cap)?;
            #[derive(Serialize)]
            struct Out {
                independence: Vec<Vec<u32>>,
                base: Vec<Vec<u32>>,
            }
            let independence = polytopes::independence_points(&p.value);
            let base = polytopes::base_points(&p.value);
            let mut rows = Vec::new();
            for x in &independence {
                rows.push(vec!["independence".into(), join_nums(x)]);
            }
            for x in &base {
                rows.push(vec!["base".into(), join_nums(x)]);
            }
            Ok(Rendered {
                json: to_json(&Out { independence, base }),
                csv: Table { header: svec(&["kind", "point"]), rows },
            })
        }
        Command::Fan { file } => {
            let p = load_polymatroid(file, cap)?;
            let fan = build_fan(&p, cap)?;
            Ok(render_fan(&fan, &p.names))
        }
        Command::Star { file } => {
            let p = load_polymatroid(file, cap)?;
            let fan = build_fan(&p, cap)?;
            let star = fan.star_at_empty_ray(&p.value).map_err(|e| domain(e, &p))?;
            Ok(render_fan(&star, &p.names))
        }
        Command::Balanced { file } => {
            let p = load_polymatroid(file, cap)?;
            let fan = build_fan(&p, cap)?;
            let balance = fan.balance().map_err(|e| domain(e, &p))?;
            #[derive(Serialize)]
            struct Out {
                balanced: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                witness: Option<ConeDoc>,
            }
            let (balanced, witness) = match balance {
                Balance::Balanced => (true, None),
                Balance::Unbalanced { witness } => (false, Some(cone_doc(&witness, 0, &p.names))),
            };
            let row = vec![
                balanced.to_string(),
                witness.as_ref().map(cone_csv).unwrap_or_default(),
            ];
            Ok(Rendered {
                json: to_json(&Out { balanced, witness }),
                csv: Table { header: svec(&["balanced", "witness"]), rows: vec![row] },
            })
        }
        Command::Degree { file, seq } => run_degrees(file, seq, cap, chow::degree_hr),
        Command::Cascade { file, seq } => run_degrees(file, seq, cap, chow::degree_cascade),
        Command::Volume { file } => {
            let p = load_polymatroid(file, cap)?;
            Ok(render_poly(&chow::volume_polynomial(&p.value)))
        }
        Command::Egf { file } => {
            let p = load_polymatroid(file, cap)?;
            Ok(render_poly(&chow::basis_egf(&p.value)))
        }
        Command::Hr { file, seq } => {
            let (p, sequence) = load_with_sequence(file, seq, cap)?;
            let holds = rado::hall_rado(&p.value, &sequence);
            let matching = rado::rado_matching(&p.value, &sequence)
                .map(|f| f.into_iter().map(|e| p.names[e].clone()).collect::<Vec<_>>());
            #[derive(Serialize)]
            struct Out {
                hall_rado: bool,
                matching: Option<Vec<String>>,
            }
            let row = vec![
                holds.to_string(),
                matching.as_ref().map(|f| f.join(" ")).unwrap_or_default(),
            ];
            Ok(Rendered {
                json: to_json(&Out { hall_rado: holds, matching }),
                csv: Table { header: svec(&["hall_rado", "matching"]), rows: vec![row] },
            })
        }
        Command::Dragon { file, seq } => {
            let (p, sequence) = load_with_sequence(file, seq, cap)?;
            let degree = chow::dragon_degree(&p.value, &sequence).map_err(|e| domain(e, &p))?;
            let condition = chow::dragon_check(&p.value, &sequence).map_err(|e| domain(e, &p))?;
            #[derive(Serialize)]
            struct Out {
                degree: i64,
                condition: bool,
            }
            Ok(Rendered {
                json: to_json(&Out { degree, condition }),
                csv: Table {
                    header: svec(&["degree", "condition"]),
                    rows: vec![vec![degree.to_string(), condition.to_string()]],
                },
            })
        }
        Command::Split { file, element, value } => {
            let p = load_polymatroid(file, cap)?;
            let at = p
                .names
                .iter()
                .position(|n| n == element)
                .ok_or_else(|| CmdError::Parse(format!("unknown element {element:?}")))?;
            let (le, ge, eq) =
                chow::hyperplane_split(&p.value, at, *value).map_err(|e| domain(e, &p))?;
            #[derive(Serialize)]
            struct Out {
                le: PolymatroidDoc,
                ge: PolymatroidDoc,
                eq: PolymatroidDoc,
            }
            let mut rows = Vec::new();
            for (part, q) in [("le", &le), ("ge", &ge), ("eq", &eq)] {
                for s in Subset::all(q.m()) {
                    rows.push(vec![
                        part.into(),
                        docs::subset_string(s, &p.names),
                        q.rank(s).to_string(),
                    ]);
                }
            }
            Ok(Rendered {
                json: to_json(&Out {
                    le: docs::doc_of(&p.names, &le),
                    ge: docs::doc_of(&p.names, &ge),
                    eq: docs::doc_of(&p.names, &eq),
                }),
                csv: Table { header: svec(&["part", "subset", "rank"]), rows },
            })
        }
        Command::Valcheck { file } => {
            let doc: docs::RelationDoc = load_json(file)?;
            let mut names: Option<Vec<String>> = None;
            let mut terms = Vec::new();
            for term in &doc.terms {
                let parsed = docs::parse_polymatroid(&term.polymatroid, cap)?;
                match &names {
                    None => names = Some(parsed.names.clone()),
                    Some(ns) if *ns != parsed.names => {
                        return Err(CmdError::Domain {
                            err: CoreError::GroundMismatch,
                            names: Some(ns.clone()),
                        });
                    }
                    Some(_) => {}
                }
                terms.push((term.coeff, parsed.value));
            }
            let (lhs_zero, rhs_zero) = chow::valuative_check(&terms)?;
            #[derive(Serialize)]
            struct Out {
                lhs_zero: bool,
                rhs_zero: bool,
            }
            Ok(Rendered {
                json: to_json(&Out { lhs_zero, rhs_zero }),
                csv: Table {
                    header: svec(&["lhs_zero", "rhs_zero"]),
                    rows: vec![vec![lhs_zero.to_string(), rhs_zero.to_string()]],
                },
            })
        }
        Command::Realize { file } => {
            let doc: docs::MatrixDoc = load_json(file)?;
            let names = match &doc.elements {
                Some(names) => {
                    docs::check_names(names).map_err(CmdError::Parse)?;
                    if names.len() != doc.blocks.len() {
                        return Err(CmdError::Parse("elements and blocks have different lengths".into()));
                    }
                    names.clone()
                }
                None => (1..=doc.blocks.len()).map(|i| i.to_string()).collect(),
            };
            let ground = GroundData::with_cap(doc.blocks.clone(), cap)?;
            let rows: Vec<Vec<BigRational>> = doc
                .rows
                .iter()
                .map(|row| row.iter().map(|e| BigRational::new(e.0.clone(), e.1.clone())).collect())
                .collect();
            let mat = RealizationMatrix::new(&ground, rows)?;
            Ok(render_doc(&names, &mat.rank_function()))
        }
        Command::Suite => unreachable!("suite is handled before dispatch"),
    }
}

fn run_suite(cli: &Cli) -> (String, bool) {
    let cfg = acceptance::Config { seed: cli.seed, trials: cli.trials };
    let mut lines = Vec::new();
    let mut all_pass = true;
    for outcome in acceptance::run_all(&cfg) {
        all_pass &= outcome.pass;
        lines.push(outcome.line());
    }
    let golden = golden::run_embedded_cases();
    all_pass &= golden.pass;
    lines.push(golden.line());
    let mut text = lines.join("\n");
    text.push('\n');
    (text, all_pass)
}

#[derive(Serialize)]
struct ConeDoc {
    #[serde(rename = "I")]
    i: Vec<usize>,
    chain: Vec<Vec<String>>,
    weight: u32,
}

fn cone_doc(label: &polymat::fans::ConeLabel, weight: u32, names: &[String]) -> ConeDoc {
    ConeDoc {
        i: label.elems.iter().collect(),
        chain: label
            .chain
            .iter()
            .map(|f| {
                let mut list: Vec<String> = f.iter().map(|e| names[e].clone()).collect();
                list.sort();
                list
            })
            .collect(),
        weight,
    }
}

fn cone_csv(c: &ConeDoc) -> String {
    let i = c.i.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let chain = c
        .chain
        .iter()
        .map(|f| format!("{{{}}}", f.join(",")))
        .collect::<Vec<_>>()
        .join("|");
    format!("I={i};chain={chain}")
}

fn render_fan(fan: &WeightedFan, names: &[String]) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        cones: Vec<ConeDoc>,
    }
    let cones: Vec<ConeDoc> = fan.cones().map(|(label, w)| cone_doc(label, w, names)).collect();
    let rows = cones
        .iter()
        .map(|c| {
            vec![
                c.i.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
                c.chain
                    .iter()
                    .map(|f| format!("{{{}}}", f.join(",")))
                    .collect::<Vec<_>>()
                    .join("|"),
                c.weight.to_string(),
            ]
        })
        .collect();
    Rendered {
        json: to_json(&Out { cones }),
        csv: Table { header: svec(&["I", "chain", "weight"]), rows },
    }
}

fn render_degree(degree: i64) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        degree: i64,
    }
    Rendered {
        json: to_json(&Out { degree }),
        csv: Table { header: svec(&["degree"]), rows: vec![vec![degree.to_string()]] },
    }
}

fn render_poly(poly: &chow::VolumePoly) -> Rendered {
    #[derive(Serialize)]
    struct Out {
        poly: String,
    }
    let text = poly.to_string();
    Rendered {
        json: to_json(&Out { poly: text.clone() }),
        csv: Table { header: svec(&["poly"]), rows: vec![vec![text]] },
    }
}

fn render_doc(names: &[String], p: &Polymatroid) -> Rendered {
    let doc = docs::doc_of(names, p);
    let rows = Subset::all(p.m())
        .map(|s| vec![docs::subset_string(s, names), p.rank(s).to_string()])
        .collect();
    Rendered {
        json: to_json(&doc),
        csv: Table { header: svec(&["subset", "rank"]), rows },
    }
}

fn build_fan(p: &NamedPolymatroid, cap: usize) -> Result<WeightedFan, CmdError> {
    let map = GroundMap::of_type_with_cap(p.value.ground(), cap).map_err(|e| domain(e, p))?;
    WeightedFan::augmented_bergman(&p.value, &map).map_err(|e| domain(e, p))
}

fn domain(err: CoreError, p: &NamedPolymatroid) -> CmdError {
    CmdError::Domain { err, names: Some(p.names.clone()) }
}

fn load_json<T: serde::de::DeserializeOwned>(file: &str) -> Result<T, CmdError> {
    let text = if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CmdError::Parse(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| CmdError::Parse(format!("cannot read {file}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CmdError::Parse(e.to_string()))
}

fn load_polymatroid(file: &str, cap: usize) -> Result<NamedPolymatroid, CmdError> {
    let doc: PolymatroidDoc = load_json(file)?;
    let parsed = docs::parse_polymatroid(&doc, cap).map_err(|e| match e {
        DocError::Parse(msg) => CmdError::Parse(msg),
        DocError::Domain(err) => CmdError::Domain { err, names: Some(doc.elements.clone()) },
    })?;
    Ok(parsed)
}

fn load_pair(
    file1: &str,
    file2: &str,
    cap: usize,
) -> Result<(NamedPolymatroid, NamedPolymatroid), CmdError> {
    let a = load_polymatroid(file1, cap)?;
    let b = load_polymatroid(file2, cap)?;
    if a.names != b.names {
        return Err(CmdError::Domain {
            err: CoreError::GroundMismatch,
            names: Some(a.names.clone()),
        });
    }
    Ok((a, b))
}

fn load_with_sequence(
    file: &str,
    seq: &str,
    cap: usize,
) -> Result<(NamedPolymatroid, SetSequence), CmdError> {
    let p = load_polymatroid(file, cap)?;
    let sets = docs::parse_sequence(seq, &p.names).map_err(CmdError::Parse)?;
    let sequence = SetSequence::new(sets, p.value.ground()).map_err(|e| domain(e, &p))?;
    Ok((p, sequence))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output structs serialize")
}

fn svec(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn join_nums(x: &[u32]) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

fn render_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(
        &table.header.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","),
    );
    out.push('\n');
    for row in &table.rows {
        out.push_str(&row.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

/// Maps a domain error to its kind name and an optional witness document.
fn domain_error_parts(
    err: &CoreError,
    names: Option<&[String]>,
) -> (&'static str, Option<serde_json::Value>) {
    use serde_json::json;
    let subset = |s: Subset| -> serde_json::Value {
        match names {
            Some(ns) => json!(docs::subset_string(s, ns)),
            None => json!(s.iter().collect::<Vec<_>>()),
        }
    };
    let element = |i: usize| -> serde_json::Value {
        match names {
            Some(ns) if i < ns.len() => json!(ns[i]),
            _ => json!(i),
        }
    };
    match err {
        CoreError::Validation(v) => match v {
            ValidationError::WrongTableLength { expected, got } => (
                "WrongTableLength",
                Some(json!({"expected": expected, "got": got})),
            ),
            ValidationError::NegativeEntry { subset: s } => ("NegativeEntry", Some(subset(*s))),
            ValidationError::Normalization => ("Normalization", None),
            ValidationError::Monotonicity { smaller, larger } => (
                "Monotonicity",
                Some(json!([subset(*smaller), subset(*larger)])),
            ),
            ValidationError::Submodularity { s1, s2 } => (
                "Submodularity",
                Some(json!([subset(*s1), subset(*s2)])),
            ),
            ValidationError::TypeBound { element: e } => ("TypeBound", Some(element(*e))),
        },
        CoreError::EmptyGround => ("EmptyGround", None),
        CoreError::GroundTooLarge { m, cap } => (
            "GroundTooLarge",
            Some(json!({"m": m, "cap": cap})),
        ),
        CoreError::GroundMismatch => ("GroundMismatch", None),
        CoreError::UnknownElement { element: e } => ("UnknownElement", Some(element(*e))),
        CoreError::EmptySubset => ("EmptySubset", None),
        CoreError::EmptySetInSequence { position } => (
            "EmptySetInSequence",
            Some(json!({"position": position})),
        ),
        CoreError::LengthMismatch { expected, got } => (
            "LengthMismatch",
            Some(json!({"expected": expected, "got": got})),
        ),
        CoreError::DimensionUnderflow => ("DimensionUnderflow", None),
        CoreError::EmptyCombination => ("EmptyCombination", None),
        CoreError::MixedDimensions => ("MixedDimensions", None),
        CoreError::SplitOutOfRange { low, high, got } => (
            "SplitOutOfRange",
            Some(json!({"low": low, "high": high, "got": got})),
        ),
        CoreError::LoopyPolymatroid => ("LoopyPolymatroid", None),
        CoreError::NotPure => ("NotPure", None),
        CoreError::EmptyPointSet => ("EmptyPointSet", None),
        CoreError::RankDeficientRows => ("RankDeficientRows", None),
        CoreError::GenerationFailed { attempts } => (
            "GenerationFailed",
            Some(json!({"attempts": attempts})),
        ),
        CoreError::FlatExpected { subset: s } => ("FlatExpected", Some(subset(*s))),
        CoreError::EmptyLiftedGround => ("EmptyLiftedGround", None),
    }
}

fn error_doc(
    operation: &str,
    kind: &str,
    witness: Option<serde_json::Value>,
    detail: Option<String>,
) -> String {
    #[derive(Serialize)]
    struct Out<'a> {
        error: &'a str,
        operation: &'a str,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<serde_json::Value>,
        #[serde(skip_serializing_if = "Option::is_none")]
        detail: Option<String>,
    }
    to_json(&Out { error: kind, operation, witness, detail }) + "\n"
}
