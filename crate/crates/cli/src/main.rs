//! `homlie`: checks on anticommutative and Hom-Lie algebras, reported as sorted-key JSON.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use homlie::algebra::{AnticommAlgebra, IdealReport};
use homlie::exactmath::{FieldSpec, Subspace};
use homlie::homlie::{
    classify_membership, hs_space, inside_twist, is_hom_simple, is_multiplicative, is_regular, is_twisting_map,
    outside_twist, yau_twist,
};
use homlie::io::{self, AlgebraDocument};
use homlie::rootsys::{self, RootType};
use homlie::{lowdim, suite, zoo, Error};

#[derive(Parser)]
#[command(name = "homlie", version, about = "Exact checks for Hom-Lie algebras over Q and GF(p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// Algebra document; stdin when omitted or `-`.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TwistMode {
    Outside,
    Inside,
    Yau,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and check the twisting map, if present.
    Validate(Input),
    /// Structural summary of an algebra.
    Info {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The space of twisting maps.
    Hs(Input),
    /// Simplicity by exhaustive line scan or irreducibility test.
    Simple(Input),
    /// Hom-simplicity of the document's (algebra, sigma).
    HomSimple(Input),
    /// Twist the algebra by a map theta.
    Twist {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        theta: PathBuf,
        #[arg(long, value_enum)]
        mode: TwistMode,
    },
    /// A named algebra from the built-in collection.
    Zoo {
        name: String,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Compare enumerated and closed-form traces for a root system.
    TraceCheck {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Isomorphism classes of simple twisting maps on aff over GF(q).
    AffClasses {
        #[arg(long)]
        q: u64,
    },
    /// Outside twists of so3 and the twisting maps they determine.
    Dim3Check {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Every reference criterion, one entry each.
    PaperSuite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Report {
    verb: &'static str,
    field: Option<FieldSpec>,
    dim: Option<usize>,
    results: Map<String, Value>,
    discrepancies: Vec<String>,
    failed: bool,
}

impl Report {
    fn new(verb: &'static str) -> Self {
        Report {
            verb,
            field: None,
            dim: None,
            results: Map::new(),
            discrepancies: Vec::new(),
            failed: false,
        }
    }

    fn for_algebra(verb: &'static str, a: &AnticommAlgebra) -> Self {
        let mut r = Report::new(verb);
        r.field = Some(a.field());
        r.dim = Some(a.dim());
        r
    }

    fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    fn fail(&mut self, why: String) {
        self.failed = true;
        self.discrepancies.push(why);
    }

    fn to_json(&self) -> Value {
        json!({
            "verb": self.verb,
            "field": self.field.map(io::field_to_json),
            "dim": self.dim,
            "results": self.results,
            "discrepancies": self.discrepancies,
        })
    }
}

fn read_text(path: &Option<PathBuf>) -> Result<String, Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Error::Parse { path: p.display().to_string(), message: e.to_string() })
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse { path: "<stdin>".into(), message: e.to_string() })?;
            Ok(s)
        }
    }
}

fn load(input: &Input) -> Result<AlgebraDocument, Error> {
    io::parse_algebra(&read_text(&input.input)?)
}

fn subspace_json(s: &Subspace) -> Value {
    io::matrix_to_json(s.basis())
}

fn ideal_report_json(r: &IdealReport) -> Value {
    json!({
        "verdict": r.verdict.to_string(),
        "method": r.method,
        "witness": r.witness.as_ref().map(subspace_json),
        "inconclusive": r.is_inconclusive(),
        "notes": r.notes,
    })
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Validate(input) => {
            let doc = load(&input)?;
            let mut r = Report::for_algebra("validate", &doc.algebra);
            r.set("lie", json!(doc.algebra.is_lie()));
            r.set("has_sigma", json!(doc.sigma.is_some()));
            if let Some(s) = &doc.sigma {
                let ok = is_twisting_map(&doc.algebra, s)?;
                r.set("twisting", json!(ok));
                if !ok {
                    r.fail("sigma is not a twisting map".into());
                }
            }
            r.set("canonical", doc.to_json());
            Ok(r)
        }
        Command::Info { input, seed } => {
            let doc = load(&input)?;
            let a = &doc.algebra;
            let mut r = Report::for_algebra("info", a);
            r.set("lie", json!(a.is_lie()));
            r.set("abelian", json!(a.is_abelian()));
            r.set("solvable", json!(a.is_solvable()));
            r.set("nilpotent", json!(a.is_nilpotent()));
            r.set("nilpotency_class", json!(a.nilpotency_class()));
            r.set("derived_dim", json!(a.derived_algebra().dim()));
            r.set("center_dim", json!(a.center().dim()));
            r.set("simplicity", ideal_report_json(&a.is_simple()));
            let m = classify_membership(a, seed);
            r.set(
                "classes",
                json!({"ss": m.ss, "ss_star": m.ss_star, "ps": m.ps.to_string(), "hs_dim": m.hs_dim, "notes": m.notes}),
            );
            if let Some(s) = &doc.sigma {
                r.set("twisting", json!(is_twisting_map(a, s)?));
                r.set("multiplicative", json!(is_multiplicative(a, s)?));
                r.set("regular", json!(is_regular(a, s)?));
            }
            Ok(r)
        }
        Command::Hs(input) => {
            let doc = load(&input)?;
            let hs = hs_space(&doc.algebra);
            let mut r = Report::for_algebra("hs", &doc.algebra);
            r.set("hs_dim", json!(hs.dim()));
            r.set("basis", Value::Array(hs.basis().iter().map(io::matrix_to_json).collect()));
            Ok(r)
        }
        Command::Simple(input) => {
            let doc = load(&input)?;
            let mut r = Report::for_algebra("simple", &doc.algebra);
            r.set("simplicity", ideal_report_json(&doc.algebra.is_simple()));
            Ok(r)
        }
        Command::HomSimple(input) => {
            let doc = load(&input)?;
            let h = doc.hom_lie()?;
            let mut r = Report::for_algebra("hom-simple", h.algebra());
            r.set("hom_simplicity", ideal_report_json(&is_hom_simple(h.algebra(), h.sigma())?));
            Ok(r)
        }
        Command::Twist { input, theta, mode } => {
            let doc = load(&input)?;
            let a = &doc.algebra;
            let theta = io::parse_matrix(&read_text(&Some(theta))?, a.field())?;
            let mut r = Report::for_algebra("twist", a);
            let twisted = match mode {
                TwistMode::Outside => AlgebraDocument { algebra: outside_twist(a, &theta)?, sigma: None },
                TwistMode::Inside => AlgebraDocument { algebra: inside_twist(a, &theta)?, sigma: None },
                TwistMode::Yau => {
                    let h = yau_twist(&doc.hom_lie()?, &theta)?;
                    AlgebraDocument { algebra: h.algebra().clone(), sigma: Some(h.sigma().clone()) }
                }
            };
            if let Some(s) = &twisted.sigma {
                r.set("twisting", json!(is_twisting_map(&twisted.algebra, s)?));
            }
            r.set("lie", json!(twisted.algebra.is_lie()));
            r.set("document", twisted.to_json());
            Ok(r)
        }
        Command::Zoo { name, params, field } => {
            let field: FieldSpec = field.parse()?;
            let e = zoo::by_name(&name, &params, field)?;
            let mut r = Report::for_algebra("zoo", &e.algebra);
            r.set("name", json!(e.name));
            r.set("params", json!(e.params));
            r.set("expected", json!(e.expected));
            r.set("ideal", json!(e.ideal.as_ref().map(subspace_json)));
            let doc = AlgebraDocument { algebra: e.algebra, sigma: e.sigma };
            r.set("document", doc.to_json());
            Ok(r)
        }
        Command::TraceCheck { root_type, rank, i } => {
            let t: RootType = root_type.parse()?;
            let mut r = Report::new("trace-check");
            r.set("type", json!(t.to_string()));
            r.set("rank", json!(rank));
            let mut rows = Map::new();
            for c in rootsys::verify_traces(t, rank)? {
                if i.is_some_and(|k| k != c.i) {
                    continue;
                }
                let status = if c.matches() { "match" } else { "mismatch" };
                rows.insert(
                    c.i.to_string(),
                    json!({
                        "status": status,
                        "closed_form": c.closed_form.to_string(),
                        "enumerated": c.enumerated.to_string(),
                        "difference": c.difference().to_string(),
                    }),
                );
                if !c.matches() {
                    r.fail(format!("i={}: enumerated - closed form = {}", c.i, c.difference()));
                }
            }
            if let Some(k) = i {
                if rows.is_empty() {
                    return Err(Error::Parse { path: "--i".into(), message: format!("i must lie in 1..={rank}, got {k}") });
                }
            }
            r.set("traces", Value::Object(rows));
            Ok(r)
        }
        Command::AffClasses { q } => {
            let field = FieldSpec::prime(q)?;
            let mut r = Report::new("aff-classes");
            r.field = Some(field);
            r.dim = Some(2);
            let classes = lowdim::aff_classes(q)?;
            let rows: Vec<Value> = classes
                .iter()
                .map(|c| {
                    json!({
                        "representative": io::matrix_to_json(&c.representative.sigma),
                        "trace": c.trace.to_string(),
                        "det": c.det.to_string(),
                        "size": c.size,
                    })
                })
                .collect();
            r.set("class_count", json!(classes.len()));
            r.set("classes", Value::Array(rows));
            Ok(r)
        }
        Command::Dim3Check { field, samples, seed } => {
            let field: FieldSpec = field.parse()?;
            let mut r = Report::new("dim3-check");
            r.field = Some(field);
            r.dim = Some(3);
            let results = lowdim::dim3_check(field, samples, seed)?;
            let failures = results.iter().filter(|s| !s.ok()).count();
            for (k, s) in results.iter().enumerate().filter(|(_, s)| !s.ok()) {
                r.fail(format!(
                    "sample {k}: bijective={} twisting={} induced_is_so3={}",
                    s.bijective, s.twisting, s.induced_is_so3
                ));
            }
            r.set("samples", json!(results.len()));
            r.set("failures", json!(failures));
            Ok(r)
        }
        Command::PaperSuite { seed } => {
            let mut r = Report::new("paper-suite");
            let outcomes = suite::run_all(seed);
            for o in &outcomes {
                if !o.passed {
                    r.failed = true;
                }
                r.discrepancies.extend(o.discrepancies.iter().map(|d| format!("criterion {}: {d}", o.id)));
            }
            r.set("seed", json!(seed));
            r.set("all_passed", json!(outcomes.iter().all(|o| o.passed)));
            r.set("criteria", Value::Array(outcomes.iter().map(|o| o.to_json()).collect()));
            Ok(r)
        }
    }
}

/// 2 for malformed input, 1 for everything else that stops a check.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::NotPrime(_)
        | Error::NotSquare { .. }
        | Error::DimensionMismatch { .. }
        | Error::FieldMismatch { .. }
        | Error::InvalidRootSystem(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let text = serde_json::to_string_pretty(&report.to_json()).expect("json values serialize");
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{text}");
            ExitCode::from(u8::from(report.failed))
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            ExitCode::from(exit_code(&e))
        }
    }
}
