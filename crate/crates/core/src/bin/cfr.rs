//! Command-line driver: builds surfaces, verifies their congruences of
//! 5-secant conics, samples cubics and reports normal-sheaf and map data.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cfr::congruence::{
    default_cap, random_nodal_cubic_by, random_smooth_cubic_by, singularity_report, CongruenceCertificate,
    CongruencePipeline, SingularityReport,
};
use cfr::field::{random_pipeline_prime, Field, FieldDesc, PrimeField, Rationals};
use cfr::ideals::IdealHandle;
use cfr::maps::degree_profile;
use cfr::modcoh::h0_normal;
use cfr::poly::serial::{from_json, to_json, transfer, PolyJson};
use cfr::poly::{Poly, Ring};
use cfr::rng::{stage_rng, WINDOW};
use cfr::surfaces::{build_surface, is_admissible, SurfaceId, SurfaceInstance, SurfaceJson, SurfaceRecipe};
use cfr::{Error, Result};

#[derive(Parser)]
#[command(name = "cfr", version, about = "Special cubic fourfolds and congruences of 5-secant conics")]
struct Cli {
    /// Run seed; every random choice is derived from it.
    #[arg(long, env = "CFR_SEED", default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Surface construction.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Congruence verification.
    #[command(subcommand)]
    Congruence(CongruenceCmd),
    /// Cubic fourfolds through a surface.
    #[command(subcommand)]
    Cubic(CubicCmd),
    /// Normal sheaf.
    #[command(subcommand)]
    Normal(NormalCmd),
    /// The map given by the cubics through a surface.
    #[command(subcommand)]
    Map(MapCmd),
    /// Whether `d` is an admissible discriminant.
    Admissible { d: i64 },
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Build a surface and write its JSON record.
    Build {
        id: String,
        /// Characteristic (0 for ℚ). Without it the surface is built over two
        /// random primes that must agree, and the first is written.
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// Run the conic construction at random points.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Comma-separated characteristics; 0 means exact arithmetic.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Degree cap for the equations of the image.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CubicCmd {
    /// Sample a smooth cubic, or one with a single node, through the surface.
    Sample {
        file: PathBuf,
        #[command(flatten)]
        kind: CubicKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CubicKind {
    #[arg(long)]
    smooth: bool,
    #[arg(long)]
    nodal: bool,
}

#[derive(Subcommand)]
enum NormalCmd {
    /// h⁰ of the normal sheaf of the surface in the cubic and in P⁵.
    H0 { surface: PathBuf, cubic: PathBuf },
}

#[derive(Subcommand)]
enum MapCmd {
    /// Degree, multidegree and image equations.
    Analyze {
        surface: PathBuf,
        #[arg(long)]
        cap: Option<u32>,
    },
}

/// `cubic.json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct CubicJson {
    surface: SurfaceId,
    field: FieldDesc,
    kind: String,
    node: Option<Vec<String>>,
    cubic: PolyJson,
    singular_locus: (i64, i64),
    /// Characteristic in which the singular locus was computed.
    checked_in_char: u64,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    surface: SurfaceId,
    seed: u64,
    cap: u32,
    primes: Vec<u64>,
    trials: usize,
    agreement: bool,
    passed: bool,
    certificates: Vec<CongruenceCertificate>,
}

#[derive(Debug, Serialize)]
struct NormalRecord {
    field_char: u64,
    h0_in_cubic: usize,
    h0_in_p5: usize,
}

#[derive(Debug, Serialize)]
struct MapRecord {
    field_char: u64,
    map_degree: i64,
    multidegree: Vec<i64>,
    cap: u32,
    image_equations: BTreeMap<u32, usize>,
    image_dim_degree: (i64, i64),
}

#[derive(Debug, Serialize)]
struct Agreement<T> {
    agreement: bool,
    records: Vec<T>,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(3),
        Err(e) => {
            eprintln!("cfr: {e}");
            ExitCode::from(match e {
                Error::Genericity { .. } => 2,
                Error::Io(_) | Error::Json(_) | Error::Parse(_) | Error::InvalidArgument(_) | Error::InvalidField(_) => 4,
                _ => 3,
            })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    match &cli.cmd {
        Cmd::Surface(SurfaceCmd::Build { id, characteristic, out }) => {
            surface_build(SurfaceId::parse(id)?, *characteristic, seed, out.as_deref())
        }
        Cmd::Congruence(CongruenceCmd::Verify { file, trials, primes, cap, out }) => {
            congruence_verify(&read_json(file)?, *trials, primes, *cap, seed, out.as_deref())
        }
        Cmd::Cubic(CubicCmd::Sample { file, kind, out }) => {
            cubic_sample(&read_json(file)?, kind.nodal, seed, out.as_deref())
        }
        Cmd::Normal(NormalCmd::H0 { surface, cubic }) => normal_h0(&read_json(surface)?, &read_json(cubic)?, seed),
        Cmd::Map(MapCmd::Analyze { surface, cap }) => map_analyze(&read_json(surface)?, *cap, seed),
        Cmd::Admissible { d } => {
            println!("{}", is_admissible(*d));
            Ok(Outcome::Pass)
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn write_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn prime_field(p: u64) -> Result<PrimeField> {
    FieldDesc { characteristic: p }.validate_explicit()?;
    PrimeField::new(p)
}

/// Two distinct primes: `avoid` (when given) and random ones from the
/// pipeline range, drawn from the seed.
fn random_primes(seed: u64, avoid: Option<u64>) -> Vec<u64> {
    let mut rng = stage_rng(seed, "primes");
    let mut out: Vec<u64> = avoid.into_iter().collect();
    while out.len() < 2 {
        let p = random_pipeline_prime(&mut rng);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// The surface of a record over `F_p`: the recorded ideal reduced mod p when
/// the record is over ℚ or `F_p`, otherwise rebuilt from its recipe and seed.
fn surface_mod_p(json: &SurfaceJson, p: u64) -> Result<SurfaceInstance<PrimeField>> {
    let field = prime_field(p)?;
    let c = json.field.characteristic;
    if c == 0 || c == p {
        SurfaceInstance::from_json(field, json)
    } else {
        build_surface(&SurfaceRecipe::of(json.recipe), field, json.seed)
    }
}

/// Characteristics to run on: the record's own prime plus a random one, or
/// two random primes for a record over ℚ.
fn default_primes(json: &SurfaceJson, seed: u64) -> Vec<u64> {
    match json.field.characteristic {
        0 => random_primes(seed, None),
        p => random_primes(seed, Some(p)),
    }
}

fn summary<F: Field>(s: &SurfaceInstance<F>) -> String {
    format!(
        "{} over char {}: profile {:?}, dim/degree {:?}, h0(I(2)) = {}, h0(I(3)) = {}",
        s.recipe.id,
        s.field().characteristic(),
        s.profile,
        s.ideal.dim_degree(),
        s.ideal.graded_piece_dim(2),
        s.ideal.graded_piece_dim(3)
    )
}

fn surface_build(id: SurfaceId, characteristic: Option<u64>, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let recipe = SurfaceRecipe::of(id);
    match characteristic {
        Some(0) => {
            let s = build_surface(&recipe, Rationals, seed)?;
            eprintln!("{}", summary(&s));
            write_json(&s.to_json(), out)?;
        }
        Some(p) => {
            let s = build_surface(&recipe, prime_field(p)?, seed)?;
            eprintln!("{}", summary(&s));
            write_json(&s.to_json(), out)?;
        }
        None => {
            let built = random_primes(seed, None)
                .into_par_iter()
                .map(|p| build_surface(&recipe, PrimeField::new(p)?, seed))
                .collect::<Result<Vec<_>>>()?;
            let key = |s: &SurfaceInstance<PrimeField>| {
                (s.profile.clone(), s.ideal.dim_degree(), s.ideal.graded_piece_dim(3))
            };
            for s in &built {
                eprintln!("{}", summary(s));
            }
            if key(&built[0]) != key(&built[1]) {
                eprintln!("cfr: the two primes disagree");
                return Ok(Outcome::Fail);
            }
            write_json(&built[0].to_json(), out)?;
        }
    }
    Ok(Outcome::Pass)
}

fn verify_over<F: Field>(s: &SurfaceInstance<F>, trials: usize, cap: u32) -> Result<Vec<CongruenceCertificate>> {
    CongruencePipeline::from_surface(s, cap)?.verify(trials)
}

fn congruence_verify(
    json: &SurfaceJson,
    trials: usize,
    primes: &[u64],
    cap: Option<u32>,
    seed: u64,
    out: Option<&Path>,
) -> Result<Outcome> {
    let primes = if primes.is_empty() { default_primes(json, seed) } else { primes.to_vec() };
    let mut distinct = primes.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != primes.len() {
        return Err(Error::InvalidArgument("primes must be distinct".into()));
    }
    let cap = cap.unwrap_or_else(|| default_cap(Some(json.recipe)));
    let runs = primes
        .par_iter()
        .map(|&p| {
            if p == 0 {
                if json.field.characteristic != 0 {
                    return Err(Error::InvalidArgument("exact mode needs a record over the rationals".into()));
                }
                verify_over(&SurfaceInstance::from_json(Rationals, json)?, trials, cap)
            } else {
                verify_over(&surface_mod_p(json, p)?, trials, cap)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let certificates: Vec<CongruenceCertificate> = runs.into_iter().flatten().collect();
    let agreement = certificates.windows(2).all(|w| w[0].counts() == w[1].counts());
    let passed = agreement && certificates.iter().all(|c| c.passed);
    for c in &certificates {
        eprintln!(
            "char {} trial {}: counts {:?} {}",
            c.field_char,
            c.trial,
            c.counts(),
            if c.passed { "passed" } else { c.failed_stage.as_deref().unwrap_or("failed") }
        );
    }
    let report = VerifyReport {
        surface: json.recipe,
        seed: json.seed,
        cap,
        primes,
        trials,
        agreement,
        passed,
        certificates,
    };
    write_json(&report, out)?;
    Ok(if passed { Outcome::Pass } else { Outcome::Fail })
}

/// Samples the cubic over the record's field. Its singularities are read off
/// over `check`'s field: the record's own, or `F_p` for a record over ℚ,
/// where a smooth (or singly nodal) reduction certifies the same over ℚ.
fn sample_cubic<F: Field>(
    s: &SurfaceInstance<F>,
    nodal: bool,
    seed: u64,
    check: Option<PrimeField>,
) -> Result<CubicJson> {
    let field = s.field();
    let report = |f: &Poly<F>, q: Option<&[F::Elem]>| -> Result<SingularityReport> {
        match &check {
            None => singularity_report(f, q),
            Some(fp) => {
                let ring = Ring::indexed(fp.clone(), "x", s.ambient.nvars());
                let q = q
                    .map(|q| q.iter().map(|c| fp.parse(&field.format(c))).collect::<Result<Vec<_>>>())
                    .transpose()?;
                singularity_report(&transfer(&ring, f)?, q.as_deref())
            }
        }
    };
    let (f, node) = if nodal {
        let mut rng = stage_rng(seed, "node");
        let q = loop {
            let q: Vec<F::Elem> = (0..s.ambient.nvars()).map(|_| field.random(&mut rng, WINDOW)).collect();
            if !s.contains_point(&q)? {
                break q;
            }
        };
        (random_nodal_cubic_by(&s.ideal, &q, seed, |f| report(f, Some(&q)))?, Some(q))
    } else {
        (random_smooth_cubic_by(&s.ideal, seed, |f| Ok(report(f, None)?.dim_degree.0 == -1))?, None)
    };
    let rep = report(&f, node.as_deref())?;
    Ok(CubicJson {
        surface: s.recipe.id,
        field: field.desc(),
        kind: if nodal { "nodal" } else { "smooth" }.into(),
        node: node.map(|q| q.iter().map(|c| field.format(c)).collect()),
        cubic: to_json(&f),
        singular_locus: rep.dim_degree,
        checked_in_char: check.map_or(field.characteristic(), |fp| fp.characteristic()),
    })
}

fn cubic_sample(json: &SurfaceJson, nodal: bool, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    let cubic = match json.field.characteristic {
        0 => {
            let check = PrimeField::new(random_primes(seed, None)[0])?;
            sample_cubic(&SurfaceInstance::from_json(Rationals, json)?, nodal, seed, Some(check))?
        }
        p => sample_cubic(&surface_mod_p(json, p)?, nodal, seed, None)?,
    };
    eprintln!(
        "{} cubic, singular locus dim/degree {:?} (char {})",
        cubic.kind, cubic.singular_locus, cubic.checked_in_char
    );
    write_json(&cubic, out)?;
    Ok(Outcome::Pass)
}

fn normal_over<F: Field>(s: &SurfaceInstance<F>, cubic: &PolyJson) -> Result<NormalRecord> {
    let f = from_json(&s.ambient, cubic)?;
    Ok(NormalRecord {
        field_char: s.field().characteristic(),
        h0_in_cubic: h0_normal(&s.ideal, Some(&f))?,
        h0_in_p5: h0_normal(&s.ideal, None)?,
    })
}

fn normal_h0(json: &SurfaceJson, cubic: &CubicJson, seed: u64) -> Result<Outcome> {
    if cubic.field != json.field || cubic.surface != json.recipe {
        return Err(Error::InvalidArgument("cubic and surface records do not match".into()));
    }
    // a record over ℚ is reduced modulo two primes; otherwise its own prime
    let primes = match json.field.characteristic {
        0 => random_primes(seed, None),
        p => vec![p],
    };
    let records = primes
        .par_iter()
        .map(|&p| normal_over(&SurfaceInstance::from_json(prime_field(p)?, json)?, &cubic.cubic))
        .collect::<Result<Vec<_>>>()?;
    let agreement = records
        .windows(2)
        .all(|w| (w[0].h0_in_cubic, w[0].h0_in_p5) == (w[1].h0_in_cubic, w[1].h0_in_p5));
    println!("{}", records[0].h0_in_cubic);
    write_json(&Agreement { agreement, records }, None)?;
    Ok(if agreement { Outcome::Pass } else { Outcome::Fail })
}

fn map_over<F: Field>(s: &SurfaceInstance<F>, cap: u32) -> Result<MapRecord> {
    let phi = s.cubic_map()?;
    let eqs = phi.image_up_to_degree(cap)?;
    let image_dim_degree = if eqs.is_empty() {
        (phi.target().nvars() as i64 - 1, 1)
    } else {
        IdealHandle::new(phi.target(), eqs.clone())?.dim_degree()
    };
    Ok(MapRecord {
        field_char: s.field().characteristic(),
        map_degree: phi.map_degree()?,
        multidegree: phi.multidegree()?,
        cap,
        image_equations: degree_profile(&eqs),
        image_dim_degree,
    })
}

fn map_analyze(json: &SurfaceJson, cap: Option<u32>, seed: u64) -> Result<Outcome> {
    let cap = cap.unwrap_or_else(|| default_cap(Some(json.recipe)));
    let records = default_primes(json, seed)
        .par_iter()
        .map(|&p| map_over(&surface_mod_p(json, p)?, cap))
        .collect::<Result<Vec<_>>>()?;
    let agreement = records.windows(2).all(|w| {
        (w[0].map_degree, &w[0].multidegree, &w[0].image_equations, w[0].image_dim_degree)
            == (w[1].map_degree, &w[1].multidegree, &w[1].image_equations, w[1].image_dim_degree)
    });
    write_json(&Agreement { agreement, records }, None)?;
    Ok(if agreement { Outcome::Pass } else { Outcome::Fail })
}
