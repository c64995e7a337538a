use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use lr3_core::chamber::{ChamberComplex, LrPoint};
use lr3_core::lift::{certify_symmetry, full_symmetry_group, known_symmetries};
use lr3_core::{check_gl3_generator, lr_coefficient, Error, LinearSymmetry, Partition};
use serde_json::{json, Value};

const SCHEMA: &str = "lr3/1";

/// Evaluate the SL3 Littlewood-Richardson function and its linear symmetries.
#[derive(Parser)]
#[command(name = "lr3", version)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// C at λ = (l1,l2), μ = (m1,m2), ν = (n1,n2,n3).
    Eval {
        #[arg(required = true, num_args = 7, allow_negative_numbers = true,
              value_names = ["L1", "L2", "M1", "M2", "N1", "N2", "N3"])]
        values: Vec<i64>,
    },
    /// LR coefficient by tableau counting; partitions as comma lists, e.g. 2,1.
    Oracle { lam: String, mu: String, nu: String },
    /// Chambers containing a point of Z⁶.
    Chamber {
        #[arg(required = true, num_args = 6, allow_negative_numbers = true, value_names = POINT)]
        point: Vec<i64>,
    },
    /// Compute and certify the full symmetry group.
    Symmetries,
    /// Certify a 6×6 integer matrix read from a JSON file.
    VerifyMap { path: PathBuf },
    /// Orbit of a point under the symmetry group.
    Orbit {
        #[arg(required = true, num_args = 6, allow_negative_numbers = true, value_names = POINT)]
        point: Vec<i64>,
    },
    /// Compare the chamber formulas against the oracle on [0,N]⁶.
    CrossValidate {
        #[arg(long, default_value_t = 4)]
        bound: u32,
    },
    /// Check the extra GL3 symmetry on triples with parts at most N.
    CheckGl3 {
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
}

const POINT: [&str; 6] = ["L1", "L2", "M1", "M2", "N1", "N2"];

enum Failure {
    Usage(anyhow::Error),
    Validation,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

/// Printed output plus whether the command's check passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn point(coords: &[i64]) -> LrPoint {
    LrPoint(coords.try_into().expect("clap enforces six values"))
}

fn parse_partition(s: &str) -> anyhow::Result<Partition> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u32>()
                .with_context(|| format!("bad part {p:?} in {s:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Partition::new(parts).with_context(|| format!("{s:?} is not a partition"))
}

fn eval(values: &[i64]) -> Report {
    let p = point(&values[..6]);
    let n3 = values[6];
    let expected = p.nu3();
    let (value, warning) = if n3 == expected {
        (ChamberComplex::standard().evaluate(p), None)
    } else {
        let w = format!("weight mismatch: |λ|+|μ|-ν1-ν2 = {expected}, got ν3 = {n3}");
        eprintln!("warning: {w}");
        (0, Some(w))
    };
    Report::ok(
        value.to_string(),
        json!({ "point": p, "nu3": n3, "value": value, "warning": warning }),
    )
}

fn oracle(lam: &str, mu: &str, nu: &str) -> anyhow::Result<Report> {
    let (lam, mu, nu) = (
        parse_partition(lam)?,
        parse_partition(mu)?,
        parse_partition(nu)?,
    );
    let value = lr_coefficient(&lam, &mu, &nu);
    Ok(Report::ok(
        value.to_string(),
        json!({ "lambda": lam, "mu": mu, "nu": nu, "value": value }),
    ))
}

fn chamber(coords: &[i64]) -> Report {
    let cx = ChamberComplex::standard();
    let p = point(coords);
    let ids = cx.chambers_containing(p);
    let value = cx.evaluate(p);
    let list = if ids.is_empty() {
        "none".to_string()
    } else {
        ids.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    Report::ok(
        format!("chambers: {list}\nvalue: {value}"),
        json!({ "point": p, "chambers": ids, "value": value }),
    )
}

fn symmetries() -> anyhow::Result<Report> {
    let group = full_symmetry_group(ChamberComplex::standard())?;
    let r = &group.report;
    let n = lr3_core::chamber::NUM_CHAMBERS;

    let mut text = String::new();
    writeln!(text, "order: {}", r.order)?;
    writeln!(
        text,
        "valid certificates: {}/{}",
        r.valid_certificates, r.order
    )?;
    let yes = if r.is_transitive() { "yes" } else { "no" };
    writeln!(text, "transitive: {yes} ({}/{n})", r.chamber_orbit.len())?;
    let orbit: Vec<String> = r.chamber_orbit.iter().map(|c| c.to_string()).collect();
    writeln!(text, "orbit of k1: {}", orbit.join(" "))?;
    writeln!(text, "known subgroup order: {}", r.known_subgroup_order)?;
    writeln!(text, "generated by S, T, U, X: {}", r.generated_order)?;
    let lift_basis: Vec<String> = r.lift_basis.iter().map(|c| c.to_string()).collect();
    writeln!(text, "lift basis: {}", lift_basis.join(" "))?;
    let mut generators = serde_json::Map::new();
    for (name, f) in known_symmetries().named() {
        writeln!(text, "\n{name}:\n{f}")?;
        generators.insert(name.to_string(), json!(f));
    }
    writeln!(text, "\ncertificates:")?;
    for (i, e) in group.elements.iter().enumerate() {
        let c = &e.certificate;
        let status = if c.is_valid() { "ok" } else { "FAIL" };
        write!(
            text,
            "{:>3} {status} {:>2}/{n}  {:<28} {}",
            i + 1,
            c.passed(),
            e.ray_permutation.to_string(),
            c.chamber_permutation
        )?;
        if i + 1 < group.elements.len() {
            text.push('\n');
        }
    }

    let elements: Vec<Value> = group
        .elements
        .iter()
        .map(|e| {
            json!({
                "ray_permutation": e.ray_permutation,
                "matrix": e.map,
                "chamber_permutation": e.certificate.chamber_permutation,
                "valid": e.certificate.is_valid(),
                "identities_passed": e.certificate.passed(),
            })
        })
        .collect();
    let json = json!({
        "order": r.order,
        "valid_certificates": r.valid_certificates,
        "transitive": r.is_transitive(),
        "chamber_orbit": r.chamber_orbit,
        "known_subgroup_order": r.known_subgroup_order,
        "generated_order": r.generated_order,
        "lift_basis": r.lift_basis,
        "generators": generators,
        "elements": elements,
    });
    Ok(Report {
        text,
        json,
        ok: r.is_complete() && r.is_transitive() && r.generated_order == r.order,
    })
}

fn verify_map(path: &PathBuf) -> Result<Report, Failure> {
    let raw =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let matrix: [[i64; 6]; 6] = serde_json::from_str(&raw)
        .with_context(|| format!("{} is not a JSON 6×6 integer matrix", path.display()))?;
    let map = LinearSymmetry::from_matrix_unchecked(matrix);
    let report = match certify_symmetry(&map, ChamberComplex::standard()) {
        Ok(c) => {
            let rays = c
                .ray_permutation
                .as_ref()
                .map_or_else(|| "not a ray permutation".to_string(), |p| p.to_string());
            let status = if c.is_valid() { "valid" } else { "invalid" };
            let mut text = format!(
                "{status}\nray permutation: {rays}\nchamber permutation: {}\nidentities: {}/{}",
                c.chamber_permutation,
                c.passed(),
                c.polynomial_checks.len()
            );
            for check in c.polynomial_checks.iter().filter(|k| !k.holds) {
                write!(text, "\n  fails at {} -> {}", check.chamber, check.image)
                    .map_err(anyhow::Error::from)?;
            }
            Report {
                text,
                ok: c.is_valid(),
                json: json!({ "valid": c.is_valid(), "certificate": c }),
            }
        }
        Err(
            e @ (Error::NotUnimodular(_) | Error::NotChamberMap { .. } | Error::SingularMatrix),
        ) => {
            let kind = match e {
                Error::NotUnimodular(_) => "NotUnimodular",
                Error::NotChamberMap { .. } => "NotChamberMap",
                _ => "SingularMatrix",
            };
            Report {
                text: format!("invalid\n{kind}: {e}"),
                ok: false,
                json: json!({ "valid": false, "error": kind, "message": e.to_string() }),
            }
        }
        Err(e) => return Err(Failure::Usage(e.into())),
    };
    Ok(report)
}

fn orbit(coords: &[i64]) -> anyhow::Result<Report> {
    let cx = ChamberComplex::standard();
    let p = point(coords);
    let group = full_symmetry_group(cx)?;
    let points = group.orbit_of_triple(p);
    let value = cx.evaluate(p);
    let mut text = format!("{} points, value {value}", points.len());
    for q in &points {
        write!(text, "\n{q}")?;
    }
    Ok(Report::ok(
        text,
        json!({ "point": p, "value": value, "orbit": points }),
    ))
}

fn cross_validate(bound: u32) -> Report {
    let r = ChamberComplex::standard().cross_validate(bound);
    let mut text = format!(
        "{} points, {} mismatches",
        r.points_checked,
        r.mismatches.len()
    );
    for m in &r.mismatches {
        let chamber = m
            .chamber
            .map_or_else(|| "none".to_string(), |v| v.to_string());
        let _ = write!(
            text,
            "\n  {}: formula {chamber}, oracle {}",
            m.point, m.oracle
        );
    }
    Report {
        ok: r.is_clean(),
        json: json!(r),
        text,
    }
}

fn check_gl3(bound: u32) -> Report {
    let r = check_gl3_generator(bound);
    let mut text = format!(
        "{} triples, {} nonzero, {} mismatches",
        r.triples_checked,
        r.nonzero,
        r.mismatches.len()
    );
    for m in &r.mismatches {
        let _ = write!(
            text,
            "\n  {} ({}) -> {} ({})",
            m.triple, m.coefficient, m.image, m.image_coefficient
        );
    }
    Report {
        ok: r.is_clean(),
        json: json!(r),
        text,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Oracle { .. } => "oracle",
        Command::Chamber { .. } => "chamber",
        Command::Symmetries => "symmetries",
        Command::VerifyMap { .. } => "verify-map",
        Command::Orbit { .. } => "orbit",
        Command::CrossValidate { .. } => "cross-validate",
        Command::CheckGl3 { .. } => "check-gl3",
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let report = match &cli.command {
        Command::Eval { values } => eval(values),
        Command::Oracle { lam, mu, nu } => oracle(lam, mu, nu)?,
        Command::Chamber { point } => chamber(point),
        Command::Symmetries => symmetries()?,
        Command::VerifyMap { path } => verify_map(path)?,
        Command::Orbit { point } => orbit(point)?,
        Command::CrossValidate { bound } => cross_validate(*bound),
        Command::CheckGl3 { bound } => check_gl3(*bound),
    };
    let out = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("schema".into(), SCHEMA.into());
            doc.insert("command".into(), command_name(&cli.command).into());
            if let Value::Object(fields) = report.json {
                doc.extend(fields);
            }
            serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?
        }
    };
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{out}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            return Err(Failure::Usage(e.into()));
        }
        _ => {}
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Validation)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
