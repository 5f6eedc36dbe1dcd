//! The `toric` command-line front end.
//!
//! Every subcommand reads polytope files (see [`crate::polytope::PolytopeFile`]),
//! prints a human-readable report by default and a JSON report with
//! `--json`. Exit codes:
//!
//! | code | meaning                                                   |
//! |------|-----------------------------------------------------------|
//! | 0    | success                                                   |
//! | 1    | the input was rejected (invalid polytope, bad direction)  |
//! | 2    | I/O, parse or usage error                                 |
//! | 3    | internal invariant violation (cross-check disagreement)   |

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use itertools::Itertools;
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::delzant::{self, build_construction};
use crate::error::Error;
use crate::exact_lattice::{format_int_vector, format_rational_vector, FiniteAbelianGroup};
use crate::fan::build_fan;
use crate::local_model::structure_group;
use crate::morse::{self, MorseInequality};
use crate::polytope::{compare, Face, Isomorphism, LabeledPolytope};
use report::{factors, ints, matrix, rationals, to_json, JsonInt};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// Seed used for random directions and sample points when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Labeled polytopes and compact symplectic toric orbifolds")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file describes a labeled simple rational polytope.
    Validate { file: PathBuf },
    /// List the vertices.
    Vertices { file: PathBuf },
    /// List every nonempty face with its facets and vertices.
    Faces { file: PathBuf },
    /// Orbifold structure group of every proper face.
    StructureGroups { file: PathBuf },
    /// Fan of dual cones.
    Fan { file: PathBuf },
    /// Compare two labeled polytopes.
    #[command(group(ArgGroup::new("mode").required(true).args(["symplectic", "biholomorphic"])))]
    Compare {
        /// Labeled-polytope isomorphism (equivariant symplectomorphism).
        #[arg(long)]
        symplectic: bool,
        /// Fan equality (equivariant biholomorphism).
        #[arg(long)]
        biholomorphic: bool,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Reduction data: projection, kernel, level, stabilizers.
    Delzant { file: PathBuf },
    /// Stabilizers of the reduction checked against the structure groups.
    Stabilizers { file: PathBuf },
    /// Betti numbers from a generic moment-map component.
    Betti {
        file: PathBuf,
        /// Direction, comma separated; random generic when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        xi: Option<Vec<i64>>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Check the reduction invariants on seeded sample points.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::ParseRational(_) => EXIT_IO,
            _ => EXIT_VALIDATION,
        };
        Failure { code, message: e.to_string() }
    }
}

fn invariant(message: String) -> Failure {
    Failure { code: EXIT_INVARIANT, message }
}

type Outcome = std::result::Result<String, Failure>;

/// Parses `argv` (including the program name), runs the subcommand, and
/// writes the report to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut warnings = Vec::new();
    match execute(&cli, &mut warnings) {
        Ok(text) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = write!(out, "{text}");
            if !text.ends_with('\n') {
                let _ = writeln!(out);
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path, warnings: &mut Vec<String>) -> std::result::Result<LabeledPolytope, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })?;
    let p = LabeledPolytope::from_json(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure { message: format!("{}: {}", path.display(), f.message), ..f }
    })?;
    warnings.extend(p.warnings().iter().map(|w| format!("{}: {w}", path.display())));
    Ok(p)
}

fn execute(cli: &Cli, warnings: &mut Vec<String>) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Validate { file } => validate(&load(file, warnings)?, json),
        Command::Vertices { file } => vertices(&load(file, warnings)?, json),
        Command::Faces { file } => faces(&load(file, warnings)?, json),
        Command::StructureGroups { file } => structure_groups(&load(file, warnings)?, json),
        Command::Fan { file } => fan(&load(file, warnings)?, json),
        Command::Compare { symplectic, file1, file2, .. } => {
            let p = load(file1, warnings)?;
            let q = load(file2, warnings)?;
            if *symplectic {
                compare_symplectic(&p, &q, json)
            } else {
                compare_biholomorphic(&p, &q, json)
            }
        }
        Command::Delzant { file } => delzant_report(&load(file, warnings)?, json),
        Command::Stabilizers { file } => stabilizers(&load(file, warnings)?, json),
        Command::Betti { file, xi, seed } => betti(&load(file, warnings)?, xi.as_deref(), *seed, json),
        Command::Verify { file, samples, seed } => verify(&load(file, warnings)?, *samples, *seed, json),
    }
}

/// Short human name for a face: the whole polytope, a facet, a vertex, or
/// the set of facets containing it.
fn describe_face(p: &LabeledPolytope, face: &Face) -> String {
    if face.is_whole() {
        "interior".to_string()
    } else if face.codim() == p.dim() {
        format!("vertex {}", format_rational_vector(&p.vertices()[face.vertices[0]].point))
    } else if face.codim() == 1 {
        format!("facet {}", face.active[0])
    } else {
        format!("face {face}")
    }
}

fn validate(p: &LabeledPolytope, json: bool) -> Outcome {
    if json {
        return Ok(to_json(&report::ValidateReport {
            dim: p.dim(),
            facets: p.facet_count(),
            labels: p.labels(),
            vertices: p.vertices().iter().map(|v| rationals(&v.point)).collect(),
            f_vector: p.f_vector(),
            warnings: p.warnings().to_vec(),
        }));
    }
    Ok(format!(
        "valid labeled polytope: dimension {}, {} facets, {} vertices\nsimple, rational, bounded; facets labeled {}\n",
        p.dim(),
        p.facet_count(),
        p.vertices().len(),
        p.labels().iter().join(", ")
    ))
}

fn vertices(p: &LabeledPolytope, json: bool) -> Outcome {
    if json {
        let v: Vec<Vec<String>> = p.vertices().iter().map(|v| rationals(&v.point)).collect();
        return Ok(to_json(&v));
    }
    Ok(p.vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            format!("v{i} {} on facets {{{}}}\n", format_rational_vector(&v.point), v.active.iter().join(","))
        })
        .collect())
}

fn faces(p: &LabeledPolytope, json: bool) -> Outcome {
    if json {
        let records: Vec<report::FaceRecord> = p
            .face_lattice()
            .iter()
            .map(|f| report::FaceRecord { active: f.active.clone(), vertices: f.vertices.clone(), codim: f.codim() })
            .collect();
        return Ok(to_json(&records));
    }
    let mut text = format!("{} faces, f-vector {:?}\n", p.face_lattice().len(), p.f_vector());
    for f in p.face_lattice() {
        text += &format!(
            "{:<8} codim {}  vertices [{}]  ({})\n",
            f.to_string(),
            f.codim(),
            f.vertices.iter().join(", "),
            describe_face(p, f)
        );
    }
    Ok(text)
}

fn structure_table(p: &LabeledPolytope) -> std::result::Result<Vec<(Face, FiniteAbelianGroup)>, Failure> {
    p.proper_faces().map(|f| Ok((f.clone(), structure_group(p, f)?))).collect()
}

fn structure_groups(p: &LabeledPolytope, json: bool) -> Outcome {
    let table = structure_table(p)?;
    if json {
        let records: Vec<report::GroupRecord> = table
            .iter()
            .map(|(f, g)| report::GroupRecord { face: f.active.clone(), invariant_factors: factors(g) })
            .collect();
        return Ok(to_json(&records));
    }
    Ok(table.iter().map(|(f, g)| format!("{:<8} {:<24} {g}\n", f.to_string(), describe_face(p, f))).collect())
}

fn fan(p: &LabeledPolytope, json: bool) -> Outcome {
    let fan = build_fan(p);
    if json {
        let cones: Vec<Vec<Vec<JsonInt>>> =
            fan.to_ray_lists().iter().map(|c| c.iter().map(|r| ints(r)).collect()).collect();
        return Ok(to_json(&cones));
    }
    let mut text = format!("{} cones, rays {}\n", fan.len(), fan.rays().iter().map(|r| format_int_vector(r)).join(" "));
    for cone in fan.cones() {
        text +=
            &format!("dim {}  [{}]\n", cone.dim(), cone.generators().iter().map(|g| format_int_vector(g)).join(", "));
    }
    Ok(text)
}

fn isomorphism_reason(iso: &Isomorphism) -> Option<String> {
    match iso {
        Isomorphism::Translation(_) => None,
        Isomorphism::NormalsDiffer => Some("facet normals differ".into()),
        Isomorphism::OffsetsDiffer => Some("not a translate".into()),
        Isomorphism::LabelsDiffer { facet } => Some(format!("labels differ at facet {facet}")),
    }
}

fn compare_symplectic(p: &LabeledPolytope, q: &LabeledPolytope, json: bool) -> Outcome {
    let iso = compare(p, q)?;
    let reason = isomorphism_reason(&iso);
    let translation = match &iso {
        Isomorphism::Translation(c) => Some(c.clone()),
        _ => None,
    };
    if json {
        return Ok(to_json(&report::SymplecticComparison {
            isomorphic: translation.is_some(),
            translation: translation.as_deref().map(rationals),
            reason,
        }));
    }
    Ok(match translation {
        Some(c) => format!("isomorphic labeled polytopes: second = first + {}\n", format_rational_vector(&c)),
        None => format!("NOT isomorphic ({})\n", reason.unwrap_or_default()),
    })
}

fn compare_biholomorphic(p: &LabeledPolytope, q: &LabeledPolytope, json: bool) -> Outcome {
    let fans_equal = crate::fan::fans_equal(&build_fan(p), &build_fan(q))?;
    let iso = compare(p, q)?;
    let reason = isomorphism_reason(&iso);
    let symplectomorphic = reason.is_none();
    if json {
        return Ok(to_json(&report::BiholomorphicComparison { fans_equal, symplectomorphic, reason }));
    }
    let fans = if fans_equal { "fans equal" } else { "fans differ" };
    let sym = match (symplectomorphic, &iso) {
        (true, _) => "symplectomorphic".to_string(),
        (false, Isomorphism::LabelsDiffer { .. }) => "NOT symplectomorphic (labels differ)".to_string(),
        (false, _) => format!("NOT symplectomorphic ({})", reason.unwrap_or_default()),
    };
    Ok(format!("{fans}; {sym}\n"))
}

fn delzant_report(p: &LabeledPolytope, json: bool) -> Outcome {
    let d = build_construction(p);
    if !d.level_identity_holds() {
        return Err(invariant("level identity K·c = −κ fails".into()));
    }
    let info = delzant::kernel_group(&d);
    let stabilizers: Vec<(Face, FiniteAbelianGroup)> = p
        .proper_faces()
        .map(|f| Ok((f.clone(), delzant::face_stabilizer(&d, f)?)))
        .collect::<std::result::Result<_, Failure>>()?;
    if json {
        return Ok(to_json(&report::DelzantReport {
            projection: matrix(&d.projection),
            kernel_basis: matrix(&d.kernel_basis),
            level: rationals(&d.level),
            component_group: factors(&info.component_group),
            stabilizers: stabilizers
                .iter()
                .map(|(f, g)| report::GroupRecord { face: f.active.clone(), invariant_factors: factors(g) })
                .collect(),
        }));
    }
    let mut text = String::new();
    text += &format!("projection   {}\n", d.projection);
    text += &format!("kernel basis {}\n", d.kernel_basis);
    text += &format!("level        {}\n", format_rational_vector(&d.level));
    text += &format!("K: torus of dimension {}, component group {}\n", info.torus_dim, info.component_group);
    for (f, g) in &stabilizers {
        text += &format!("{:<8} {:<24} {g}\n", f.to_string(), describe_face(p, f));
    }
    Ok(text)
}

fn stabilizers(p: &LabeledPolytope, json: bool) -> Outcome {
    let d = build_construction(p);
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for (face, group) in structure_table(p)? {
        let stab = delzant::face_stabilizer(&d, &face)?;
        if stab != group {
            disagreements.push(format!("{}: stabilizer {stab}, structure group {group}", describe_face(p, &face)));
        }
        rows.push((face, stab, group));
    }
    if !disagreements.is_empty() {
        return Err(invariant(format!("oracles disagree: {}", disagreements.join("; "))));
    }
    if json {
        return Ok(to_json(&report::StabilizerReport {
            stabilizers: rows
                .iter()
                .map(|(f, s, g)| report::StabilizerRecord {
                    face: f.active.clone(),
                    invariant_factors: factors(s),
                    structure_group: factors(g),
                })
                .collect(),
            oracles_agree: true,
        }));
    }
    let mut text = String::new();
    for (f, s, _) in &rows {
        let list = format!("[{}]", s.invariant_factors().iter().join(", "));
        text += &format!("{:<8} {:<24} {list}\n", f.to_string(), describe_face(p, f));
    }
    text += "oracles agree\n";
    Ok(text)
}

fn format_polynomial(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn betti(p: &LabeledPolytope, xi: Option<&[i64]>, seed: u64, json: bool) -> Outcome {
    let xi: Vec<BigInt> = match xi {
        Some(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
        None => morse::random_generic_xi(p, &mut ChaCha8Rng::seed_from_u64(seed)),
    };
    let report = morse::morse_report(p, &xi)?;
    if morse::morse_inequality_check(&report.morse_poly, &report.poincare) != MorseInequality::Quotient(vec![]) {
        return Err(invariant(format!(
            "Morse polynomial {:?} differs from the h-vector Betti numbers {:?}",
            report.morse_poly, report.poincare
        )));
    }
    if json {
        return Ok(to_json(&report.morse_poly));
    }
    Ok(format!(
        "xi = {}\nPoincare polynomial: {}\ncoefficients {:?}\n",
        format_int_vector(&xi),
        format_polynomial(&report.morse_poly),
        report.morse_poly
    ))
}

fn verify(p: &LabeledPolytope, samples: usize, seed: u64, json: bool) -> Outcome {
    let d = build_construction(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = p.enumerate_vertices();
    points.extend((0..samples).map(|_| p.random_interior_point(&mut rng)));
    let reduction = delzant::verify_reduction_invariants(&d, p, &points)?;
    let regular = delzant::verify_regular_level(&d, p);
    let identity = d.level_identity_holds();
    let passed = reduction.passed && regular.regular && identity && reduction.vertices_attained == p.vertices().len();
    let counterexample = reduction
        .counterexample
        .clone()
        .or(regular.failure.clone())
        .or((!identity).then(|| "level identity K·c = −κ fails".to_string()));
    if !passed {
        return Err(invariant(format!(
            "reduction invariants fail: {}",
            counterexample.unwrap_or_else(|| "not every vertex attained".into())
        )));
    }
    if json {
        return Ok(to_json(&report::VerifyReport {
            passed,
            samples: points.len(),
            vertices_attained: reduction.vertices_attained,
            vertex_count: p.vertices().len(),
            level: rationals(&d.level),
            regular: regular.regular,
            max_stabilizer_order: JsonInt(regular.max_stabilizer_order),
            counterexample,
        }));
    }
    Ok(format!(
        "reduction invariants hold on {} samples ({} vertices + {} interior points)\nlevel {}; {}/{} vertices attained; regular level, largest stabilizer order {}\n",
        points.len(),
        p.vertices().len(),
        samples,
        format_rational_vector(&d.level),
        reduction.vertices_attained,
        p.vertices().len(),
        regular.max_stabilizer_order
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_text() {
        assert_eq!(format_polynomial(&[1, 0, 1, 0, 1]), "1 + x^2 + x^4");
        assert_eq!(format_polynomial(&[1, 0, 2, 0, 1]), "1 + 2x^2 + x^4");
        assert_eq!(format_polynomial(&[0, 1]), "x");
        assert_eq!(format_polynomial(&[]), "0");
    }

    #[test]
    fn usage_errors_exit_with_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["toric", "frobnicate"], &mut out, &mut err), EXIT_IO);
        assert_eq!(run(["toric", "compare", "a.json", "b.json"], &mut out, &mut err), EXIT_IO);
        assert_eq!(run(["toric", "validate", "/nonexistent/file.json"], &mut out, &mut err), EXIT_IO);
    }
}
