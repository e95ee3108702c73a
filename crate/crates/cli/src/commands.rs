//! Subcommand dispatch. Every command produces a human-readable text and a
//! machine document (JSON with sorted keys) from the same report, and an
//! exit code that depends only on the report: 0 success, 1 mathematical
//! failure, 2 input error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hlysa_core::algebra::classify_degenerate;
use hlysa_core::cohomology::{h23, CochainPair};
use hlysa_core::deformation::{
    equivalent_infinitesimals, infinitesimal, trivialize, verify_deformation, Deformation, ObstructionReport,
};
use hlysa_core::derivations::{center_with, check_tower, family_basis, CenterReading, Family, NORMALIZATIONS};
use hlysa_core::representation::{
    extract_rep, random_rep, seeded_rng, semidirect_sum, verify_representation_with, RepReading, RepReport, Split,
};
use hlysa_core::scalar::format_scalar;
use hlysa_core::{verify_axioms, AxiomReport, GradedMap, HomLYSA, IdentityStatus, Matrix, Parity, Scalar, SuperSpace};
use serde_json::{json, Value};

use crate::files::{AlgebraFile, DeformationFile, FileError, IsoFile, RepFile};

#[derive(Debug, Parser)]
#[command(name = "hlysa", version, about = "Exact checks for Hom-Lie-Yamaguti superalgebras")]
pub struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    /// Seed for randomized sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the eight defining identities.
    Verify { algebra: PathBuf },
    /// Derivation-type families and the inclusions between them.
    Derivations(DerivationArgs),
    /// Degree-(2,3) cohomology with adjoint coefficients.
    Cohomology { algebra: PathBuf },
    /// Check a representation, or sample random ones.
    Rep(RepArgs),
    /// Formal deformations.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// The center of the algebra.
    Center {
        algebra: PathBuf,
        #[arg(long, value_enum, default_value_t = CenterArg::Full)]
        reading: CenterArg,
    },
}

#[derive(Debug, Args)]
pub struct DerivationArgs {
    pub algebra: PathBuf,
    /// der, gder, qder, c, qc or zder; all families when omitted.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    /// 0, 1 or both.
    #[arg(long, default_value = "both")]
    pub parity: String,
    /// Also check every inclusion and closure claim; exit 1 on a violation.
    #[arg(long)]
    pub check_tower: bool,
    #[arg(long, default_value_t = 2)]
    pub kmax: u32,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    pub algebra: PathBuf,
    /// Representation file; omit together with --random to sample.
    pub rep: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReadingArg::Induced)]
    pub reading: ReadingArg,
    /// Module shape `EVEN:ODD` for random sampling.
    #[arg(long)]
    pub random: Option<String>,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum DeformCommand {
    /// Check the deformation equations order by order.
    Verify { algebra: PathBuf, deformation: PathBuf },
    /// Remove coboundary coefficients order by order.
    Trivialize {
        algebra: PathBuf,
        deformation: PathBuf,
        /// Write the trivializing isomorphism here.
        #[arg(long)]
        iso_out: Option<PathBuf>,
    },
    /// Whether two infinitesimals are cohomologous.
    Compare {
        algebra: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Transport a deformation along a formal isomorphism.
    Transport {
        algebra: PathBuf,
        deformation: PathBuf,
        iso: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Induced,
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CenterArg {
    Full,
    FirstSlot,
}

/// Result of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub human: String,
    pub machine: Value,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.human.clone(),
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.machine).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }

    fn input_error(command: &str, e: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            human: format!("error: {e}\n"),
            machine: json!({ "command": command, "status": "input-error", "error": e.to_string() }),
        }
    }
}

/// Parses arguments and runs; returns the exit code and the rendered text.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let out = run(&cli);
            (out.code, out.render(cli.format))
        }
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (code, e.to_string())
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { algebra } => cmd_verify(algebra),
        Command::Derivations(args) => cmd_derivations(args),
        Command::Cohomology { algebra } => cmd_cohomology(algebra),
        Command::Rep(args) => cmd_rep(args, cli.seed),
        Command::Deform(d) => cmd_deform(d),
        Command::Center { algebra, reading } => cmd_center(algebra, *reading),
    }
}

fn s(c: &Scalar) -> Value {
    Value::String(format_scalar(c))
}

fn vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(s).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_json(m.row(i))).collect())
}

fn vec_text(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
}

fn matrix_text(m: &Matrix) -> String {
    format!(
        "[{}]",
        (0..m.rows()).map(|i| vec_text(m.row(i))).collect::<Vec<_>>().join(" ")
    )
}

fn status_json(name: &str, st: &IdentityStatus) -> Value {
    json!({
        "name": name,
        "violations": st.violations,
        "first": st.first.as_ref().map(|(t, r)| json!({ "tuple": t, "residual": vec_json(r) })),
    })
}

fn status_line(name: &str, st: &IdentityStatus) -> String {
    match &st.first {
        None => format!("  {name:<16} ok\n"),
        Some((t, r)) => format!(
            "  {name:<16} FAIL  {} violations, first at {t:?}, residual {}\n",
            st.violations,
            vec_text(r)
        ),
    }
}

fn load_algebra(path: &Path) -> Result<(HomLYSA, String), FileError> {
    let file = AlgebraFile::load(path)?;
    let name = file
        .name
        .clone()
        .unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
    Ok((file.to_algebra()?, name))
}

fn axiom_section(report: &AxiomReport) -> (String, Value) {
    let mut human = String::new();
    for (a, st) in &report.statuses {
        human.push_str(&status_line(a.name(), st));
    }
    let machine = Value::Array(report.statuses.iter().map(|(a, st)| status_json(a.name(), st)).collect());
    (human, machine)
}

/// Loads and verifies; an axiom failure is returned as a finished outcome.
fn valid_algebra(command: &str, path: &Path) -> Result<(HomLYSA, String), Outcome> {
    let (a, name) = load_algebra(path).map_err(|e| Outcome::input_error(command, e))?;
    let report = verify_axioms(&a);
    if report.all_pass() {
        return Ok((a, name));
    }
    let (human, axioms) = axiom_section(&report);
    Err(Outcome {
        code: 1,
        human: format!("{name}: not a Hom-Lie-Yamaguti superalgebra\n{human}"),
        machine: json!({ "command": command, "algebra": name, "status": "invalid-algebra", "axioms": axioms }),
    })
}

pub fn cmd_verify(path: &Path) -> Outcome {
    let (a, name) = match load_algebra(path) {
        Ok(x) => x,
        Err(e) => return Outcome::input_error("verify", e),
    };
    let report = verify_axioms(&a);
    let (body, axioms) = axiom_section(&report);
    let tags: Vec<String> = classify_degenerate(&a).iter().map(|t| format!("{t:?}")).collect();
    let pass = report.all_pass();
    let mut human = format!(
        "{name}: dims ({}|{}), {}\n",
        a.space().even_dim,
        a.space().odd_dim,
        if pass { "all identities hold" } else { "identities FAIL" }
    );
    human.push_str(&body);
    if !tags.is_empty() {
        human.push_str(&format!("  special cases: {}\n", tags.join(", ")));
    }
    Outcome {
        code: if pass { 0 } else { 1 },
        human,
        machine: json!({
            "command": "verify",
            "algebra": name,
            "dims": [a.space().even_dim, a.space().odd_dim],
            "status": if pass { "pass" } else { "fail" },
            "axioms": axioms,
            "special_cases": tags,
        }),
    }
}

fn parse_parities(text: &str) -> Option<Vec<Parity>> {
    match text {
        "0" | "even" => Some(vec![Parity::Even]),
        "1" | "odd" => Some(vec![Parity::Odd]),
        "both" => Some(vec![Parity::Even, Parity::Odd]),
        _ => None,
    }
}

pub fn cmd_derivations(args: &DerivationArgs) -> Outcome {
    let families = match &args.family {
        None => Family::ALL.to_vec(),
        Some(f) => match Family::parse(f) {
            Some(f) => vec![f],
            None => return Outcome::input_error("derivations", format!("unknown family {f:?}")),
        },
    };
    let Some(parities) = parse_parities(&args.parity) else {
        return Outcome::input_error("derivations", format!("parity must be 0, 1 or both, got {:?}", args.parity));
    };
    let (a, name) = match valid_algebra("derivations", &args.algebra) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let mut human = format!("{name}: k = {}\n", args.k);
    let mut fam_json = Vec::new();
    for f in &families {
        for &p in &parities {
            let b = family_basis(&a, *f, args.k, p);
            human.push_str(&format!("  {:<5} parity {}: dim {}\n", f.name(), p.bit(), b.dim()));
            for (m, w) in b.basis.iter().zip(&b.witnesses) {
                human.push_str(&format!("    {}", matrix_text(m.matrix())));
                if !w.is_empty() {
                    let ws: Vec<String> = w.iter().map(|x| matrix_text(x.matrix())).collect();
                    human.push_str(&format!("  witnesses {}", ws.join(" ")));
                }
                human.push('\n');
            }
            fam_json.push(json!({
                "family": f.name(),
                "parity": p.bit(),
                "dim": b.dim(),
                "basis": b.basis.iter().map(|m| matrix_json(m.matrix())).collect::<Vec<_>>(),
                "witnesses": b.witnesses.iter()
                    .map(|w| w.iter().map(|x| matrix_json(x.matrix())).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            }));
        }
    }
    let mut code = 0;
    let mut tower = Value::Null;
    if args.check_tower {
        let r = check_tower(&a, args.kmax);
        human.push_str(&format!(
            "tower (kmax {}, α {}surjective, center dim {}):\n",
            r.kmax,
            if r.alpha_surjective { "" } else { "not " },
            r.center_dim
        ));
        for c in &r.checks {
            human.push_str(&format!("  {c}\n"));
        }
        human.push_str("normalizations:\n");
        for n in NORMALIZATIONS {
            human.push_str(&format!("  {n}\n"));
        }
        if !r.all_hold() {
            code = 1;
        }
        tower = json!({
            "kmax": r.kmax,
            "alpha_surjective": r.alpha_surjective,
            "center_dim": r.center_dim,
            "all_hold": r.all_hold(),
            "checks": r.checks.iter().map(|c| json!({
                "claim": c.claim,
                "statement": c.statement,
                "holds": c.holds,
                "witness": c.witness,
            })).collect::<Vec<_>>(),
            "normalizations": r.normalizations,
        });
    }
    Outcome {
        code,
        human,
        machine: json!({
            "command": "derivations",
            "algebra": name,
            "k": args.k,
            "families": fam_json,
            "tower": tower,
        }),
    }
}

pub fn cmd_cohomology(path: &Path) -> Outcome {
    let (a, name) = match valid_algebra("cohomology", path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    match h23(&a) {
        Ok(h) => {
            let (z, b, hd) = h.dims();
            Outcome {
                code: 0,
                human: format!(
                    "{name}: degree (2,3), adjoint coefficients\n  cochains {}\n  dim Z {z}\n  dim B {b}\n  dim H {hd}\n",
                    h.cochains.dim()
                ),
                machine: json!({
                    "command": "cohomology",
                    "algebra": name,
                    "cochains": h.cochains.dim(),
                    "z": z,
                    "b": b,
                    "h": hd,
                }),
            }
        }
        Err(e) => Outcome {
            code: 1,
            human: format!("{name}: {e}\n"),
            machine: json!({ "command": "cohomology", "algebra": name, "status": "fail", "error": e.to_string() }),
        },
    }
}

fn rep_section(r: &RepReport) -> (String, Value) {
    let mut human = String::new();
    let line = |c: &str, st: &hlysa_core::representation::RepStatus| match &st.first {
        None => format!("  {c:<6} ok\n"),
        Some((t, m)) => format!(
            "  {c:<6} FAIL  {} violations, first at {t:?}, residual {}\n",
            st.violations,
            matrix_text(m)
        ),
    };
    let js = |c: &str, st: &hlysa_core::representation::RepStatus| {
        json!({
            "name": c,
            "violations": st.violations,
            "first": st.first.as_ref().map(|(t, m)| json!({ "tuple": t, "residual": matrix_json(m) })),
        })
    };
    for (c, st) in &r.statuses {
        human.push_str(&line(c.name(), st));
    }
    human.push_str(&format!("  other reading ({:?}):\n", r.reading.other()));
    for (c, st) in &r.alternative {
        human.push_str(&line(c.name(), st));
    }
    let machine = json!({
        "reading": format!("{:?}", r.reading).to_lowercase(),
        "conditions": r.statuses.iter().map(|(c, st)| js(c.name(), st)).collect::<Vec<_>>(),
        "other_reading": r.alternative.iter().map(|(c, st)| js(c.name(), st)).collect::<Vec<_>>(),
    });
    (human, machine)
}

fn reading(r: ReadingArg) -> RepReading {
    match r {
        ReadingArg::Induced => RepReading::Induced,
        ReadingArg::Printed => RepReading::Printed,
    }
}

pub fn cmd_rep(args: &RepArgs, seed: u64) -> Outcome {
    let (a, name) = match valid_algebra("rep", &args.algebra) {
        Ok(x) => x,
        Err(o) => return o,
    };
    match (&args.rep, &args.random) {
        (Some(path), None) => {
            let r = match RepFile::load(path).and_then(|f| f.to_rep(a.space())) {
                Ok(r) => r,
                Err(e) => return Outcome::input_error("rep", e),
            };
            let report = verify_representation_with(&a, &r, reading(args.reading));
            let semi = verify_axioms(&semidirect_sum(&a, &r));
            let (body, conds) = rep_section(&report);
            let pass = report.all_pass();
            let human = format!(
                "{name}: representation on ({}|{}) {}\n{body}  semidirect sum: {}\n",
                r.module().even_dim,
                r.module().odd_dim,
                if pass { "valid" } else { "INVALID" },
                if semi.all_pass() { "all identities hold" } else { "identities fail" },
            );
            Outcome {
                code: if pass { 0 } else { 1 },
                human,
                machine: json!({
                    "command": "rep",
                    "algebra": name,
                    "status": if pass { "pass" } else { "fail" },
                    "report": conds,
                    "semidirect_valid": semi.all_pass(),
                }),
            }
        }
        (None, Some(shape)) => {
            let dims: Option<(usize, usize)> = shape
                .split_once(':')
                .and_then(|(e, o)| Some((e.trim().parse().ok()?, o.trim().parse().ok()?)));
            let Some((e, o)) = dims else {
                return Outcome::input_error("rep", format!("--random expects EVEN:ODD, got {shape:?}"));
            };
            let module = SuperSpace::new(e, o);
            let mut rng = seeded_rng(seed);
            let (mut valid, mut agree, mut roundtrip) = (0, 0, 0);
            for _ in 0..args.samples {
                let r = random_rep(a.space(), module, &mut rng);
                let rep_ok = verify_representation_with(&a, &r, reading(args.reading)).all_pass();
                let s = semidirect_sum(&a, &r);
                let semi_ok = verify_axioms(&s).all_pass();
                agree += usize::from(rep_ok == semi_ok);
                if rep_ok {
                    valid += 1;
                    let back = extract_rep(&s, Split::new(a.space(), module));
                    roundtrip += usize::from(matches!(back, Ok((ref b, ref r2)) if *b == a && *r2 == r));
                }
            }
            let ok = agree == args.samples && roundtrip == valid;
            Outcome {
                code: if ok { 0 } else { 1 },
                human: format!(
                    "{name}: {} random representations on ({e}|{o}), seed {seed}\n  valid {valid}\n  agreement with semidirect sum {agree}/{}\n  extract round-trips {roundtrip}/{valid}\n",
                    args.samples, args.samples
                ),
                machine: json!({
                    "command": "rep",
                    "algebra": name,
                    "seed": seed,
                    "module": [e, o],
                    "samples": args.samples,
                    "valid": valid,
                    "agree": agree,
                    "roundtrip": roundtrip,
                    "status": if ok { "pass" } else { "fail" },
                }),
            }
        }
        _ => Outcome::input_error("rep", "give either a representation file or --random EVEN:ODD"),
    }
}

fn load_deformation(a: &HomLYSA, path: &Path) -> Result<Deformation, FileError> {
    DeformationFile::load(path)?.to_deformation(a)
}

fn pair_json(p: &CochainPair) -> Value {
    let entries = |t: &hlysa_core::MultiTensor| {
        t.entries()
            .into_iter()
            .map(|(idx, m, v)| json!({ "args": idx, "out": m, "value": s(&v) }))
            .collect::<Vec<_>>()
    };
    json!({ "f": entries(&p.f), "g": entries(&p.g) })
}

fn map_text(m: &GradedMap) -> String {
    matrix_text(m.matrix())
}

pub fn cmd_deform(cmd: &DeformCommand) -> Outcome {
    let algebra = match cmd {
        DeformCommand::Verify { algebra, .. }
        | DeformCommand::Trivialize { algebra, .. }
        | DeformCommand::Compare { algebra, .. }
        | DeformCommand::Transport { algebra, .. } => algebra,
    };
    let (a, name) = match valid_algebra("deform", algebra) {
        Ok(x) => x,
        Err(o) => return o,
    };
    match cmd {
        DeformCommand::Verify { deformation, .. } => {
            let d = match load_deformation(&a, deformation) {
                Ok(d) => d,
                Err(e) => return Outcome::input_error("deform verify", e),
            };
            let report = verify_deformation(&d);
            let mut human = format!("{name}: deformation of order {}\n", d.order());
            let mut orders = Vec::new();
            for o in &report.orders {
                human.push_str(&format!("  order {}: {}\n", o.order, if o.passed() { "ok" } else { "FAIL" }));
                for (eq, st) in &o.statuses {
                    if !st.passed() {
                        human.push_str(&format!("  {}", status_line(eq.name(), st)));
                    }
                }
                orders.push(json!({
                    "order": o.order,
                    "pass": o.passed(),
                    "equations": o.statuses.iter().map(|(e, st)| status_json(e.name(), st)).collect::<Vec<_>>(),
                }));
            }
            let pass = report.passed();
            let mut cocycle = Value::Null;
            if report.passed_through(1) {
                let cert = infinitesimal(&d).is_ok();
                human.push_str(&format!("  infinitesimal is a cocycle: {cert}\n"));
                cocycle = json!(cert);
            }
            Outcome {
                code: if pass { 0 } else { 1 },
                human,
                machine: json!({
                    "command": "deform verify",
                    "algebra": name,
                    "order": d.order(),
                    "status": if pass { "pass" } else { "fail" },
                    "orders": orders,
                    "infinitesimal_cocycle": cocycle,
                }),
            }
        }
        DeformCommand::Trivialize { deformation, iso_out, .. } => {
            let d = match load_deformation(&a, deformation) {
                Ok(d) => d,
                Err(e) => return Outcome::input_error("deform trivialize", e),
            };
            let report = match trivialize(&d) {
                Ok(r) => r,
                Err(e) => {
                    return Outcome {
                        code: 1,
                        human: format!("{name}: {e}\n"),
                        machine: json!({ "command": "deform trivialize", "algebra": name, "status": "fail", "error": e.to_string() }),
                    }
                }
            };
            match report {
                ObstructionReport::Trivializable { iso, steps } => {
                    let mut human = format!("{name}: trivializable through order {}\n", d.order());
                    for st in &steps {
                        human.push_str(&format!("  order {}: h = {}\n", st.order, map_text(&st.h)));
                    }
                    for k in 1..=iso.order() {
                        human.push_str(&format!("  φ_{k} = {}\n", map_text(iso.coeff(k))));
                    }
                    if let Some(p) = iso_out {
                        if let Err(e) = std::fs::write(p, IsoFile::from_iso(&iso, None)) {
                            return Outcome::input_error("deform trivialize", e);
                        }
                    }
                    Outcome {
                        code: 0,
                        human,
                        machine: json!({
                            "command": "deform trivialize",
                            "algebra": name,
                            "status": "trivializable",
                            "steps": steps.iter().map(|s| json!({ "order": s.order, "h": matrix_json(s.h.matrix()) })).collect::<Vec<_>>(),
                            "iso": (1..=iso.order()).map(|k| matrix_json(iso.coeff(k).matrix())).collect::<Vec<_>>(),
                        }),
                    }
                }
                ObstructionReport::Obstructed { order, cocycle, is_cocycle, dims, steps } => Outcome {
                    code: 0,
                    human: format!(
                        "{name}: obstructed at order {order}\n  coefficient is {}a cocycle and not a coboundary\n  (dim Z, dim B, dim H) = ({}, {}, {})\n",
                        if is_cocycle { "" } else { "not " },
                        dims.0, dims.1, dims.2
                    ),
                    machine: json!({
                        "command": "deform trivialize",
                        "algebra": name,
                        "status": "obstructed",
                        "order": order,
                        "is_cocycle": is_cocycle,
                        "cocycle": pair_json(&cocycle),
                        "h23": [dims.0, dims.1, dims.2],
                        "steps_before": steps.len(),
                    }),
                },
            }
        }
        DeformCommand::Compare { first, second, .. } => {
            let (d1, d2) = match (load_deformation(&a, first), load_deformation(&a, second)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return Outcome::input_error("deform compare", e),
            };
            match equivalent_infinitesimals(&d1, &d2) {
                Ok(eq) => Outcome {
                    code: 0,
                    human: format!(
                        "{name}: infinitesimals are {}cohomologous\n",
                        if eq { "" } else { "not " }
                    ),
                    machine: json!({ "command": "deform compare", "algebra": name, "equivalent": eq }),
                },
                Err(e) => Outcome {
                    code: 1,
                    human: format!("{name}: {e}\n"),
                    machine: json!({ "command": "deform compare", "algebra": name, "status": "fail", "error": e.to_string() }),
                },
            }
        }
        DeformCommand::Transport { deformation, iso, out, .. } => {
            let loaded = load_deformation(&a, deformation)
                .and_then(|d| Ok((d, IsoFile::load(iso)?.to_iso(&a)?)));
            let (d, phi) = match loaded {
                Ok(x) => x,
                Err(e) => return Outcome::input_error("deform transport", e),
            };
            let t = match hlysa_core::deformation::transport(&d, &phi) {
                Ok(t) => t,
                Err(e) => return Outcome::input_error("deform transport", e),
            };
            let text = DeformationFile::from_deformation(&t, None);
            if let Some(p) = out {
                if let Err(e) = std::fs::write(p, &text) {
                    return Outcome::input_error("deform transport", e);
                }
            }
            Outcome {
                code: 0,
                human: text.clone(),
                machine: serde_json::from_str(&text).expect("canonical output is JSON"),
            }
        }
    }
}

pub fn cmd_center(path: &Path, which: CenterArg) -> Outcome {
    let (a, name) = match valid_algebra("center", path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let (r, other) = match which {
        CenterArg::Full => (CenterReading::Full, CenterReading::FirstSlot),
        CenterArg::FirstSlot => (CenterReading::FirstSlot, CenterReading::Full),
    };
    let z = center_with(&a, r);
    let zo = center_with(&a, other);
    let mut human = format!("{name}: center ({r:?} reading) dim {}\n", z.dim());
    for v in z.vectors() {
        human.push_str(&format!("  {}\n", vec_text(v)));
    }
    human.push_str(&format!("  {other:?} reading: dim {}\n", zo.dim()));
    Outcome {
        code: 0,
        human,
        machine: json!({
            "command": "center",
            "algebra": name,
            "reading": format!("{r:?}").to_lowercase(),
            "dim": z.dim(),
            "basis": z.vectors().iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
            "other_reading_dim": zo.dim(),
        }),
    }
}
