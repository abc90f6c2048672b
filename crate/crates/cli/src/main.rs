//! `pnc4`: command-line front end for the four-way relay network-coding
//! toolkit. Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;

use pnc4_core::fadespace::{enumerate_singular_subspaces, sample_subspace_point, FadeState};
use pnc4_core::fixtures::{CASE2_AB_CLASSES, CASE4_D1_CLASSES};
use pnc4_core::hypercube::{
    build_codebook, load_codebook, satisfies_exclusive_law, store_codebook, table1_map,
    table2_map, build_constraints, ClusterMap, SymbolTuple,
};
use pnc4_core::selection::{min_cluster_distance, SelectionCache};
use pnc4_core::simulator::{run_ber, run_throughput, BcMode, Scheme, SimConfig};
use pnc4_core::{DifferenceVector, Error, EPS};

#[derive(Parser)]
#[command(
    name = "pnc4",
    version,
    about = "Adaptive physical-layer network coding for the four-way relay channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List singular fade subspace classes as CSV
    Enumerate {
        /// Restrict to one case (1-4); all cases when omitted
        #[arg(long)]
        case: Option<u8>,
        /// Output format (only csv is supported)
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Build the 960-entry codebook and write it to a file
    BuildCodebook {
        /// Output path for the codebook file
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full invariant suite; exit 0 iff everything holds
    Verify {
        /// Codebook file to verify in addition to the built-in checks
        #[arg(long)]
        codebook: Option<PathBuf>,
    },
    /// Pick the best codebook map for a fade state
    Select {
        /// Codebook file
        #[arg(long)]
        codebook: PathBuf,
        /// Fade state as four complex coefficients: "re,im re,im re,im re,im"
        #[arg(long)]
        fade: String,
    },
    /// Monte Carlo bit-error-rate sweep (CSV out)
    SimulateBer(SimArgs),
    /// Monte Carlo throughput sweep (CSV out)
    SimulateThroughput(SimArgs),
    /// Dump the embedded fixture data for external diffing
    Fixtures,
}

#[derive(Args)]
struct SimArgs {
    /// First SNR point in dB
    #[arg(long, default_value_t = 10.0)]
    snr_start: f64,
    /// Last SNR point in dB (inclusive)
    #[arg(long, default_value_t = 40.0)]
    snr_stop: f64,
    /// SNR step in dB
    #[arg(long, default_value_t = 5.0)]
    snr_step: f64,
    /// Rician factor in dB
    #[arg(long, default_value_t = 20.0)]
    rician_k_db: f64,
    /// Bits per user per frame (one fade realization per frame)
    #[arg(long, default_value_t = 256)]
    frame_bits: usize,
    /// Frames per SNR point
    #[arg(long, default_value_t = 200)]
    frames: usize,
    /// RNG seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Relaying scheme
    #[arg(long, value_enum, default_value_t = SchemeArg::Adaptive)]
    scheme: SchemeArg,
    /// Broadcast-phase model
    #[arg(long, value_enum, default_value_t = BcArg::Ideal)]
    bc: BcArg,
    /// Codebook file (required for the adaptive scheme)
    #[arg(long)]
    codebook: Option<PathBuf>,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Adaptive,
    Nonadaptive2,
    Nonadaptive3,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Adaptive => Scheme::AdaptiveTwoUse,
            SchemeArg::Nonadaptive2 => Scheme::NonAdaptiveTwoUse,
            SchemeArg::Nonadaptive3 => Scheme::NonAdaptiveThreeUse,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BcArg {
    Ideal,
    Modulated,
}

impl From<BcArg> for BcMode {
    fn from(b: BcArg) -> BcMode {
        match b {
            BcArg::Ideal => BcMode::IdealBC,
            BcArg::Modulated => BcMode::ModulatedBC,
        }
    }
}

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Enumerate { case, format } => cmd_enumerate(case, &format),
        Command::BuildCodebook { out } => cmd_build_codebook(&out),
        Command::Verify { codebook } => cmd_verify(codebook.as_deref()),
        Command::Select { codebook, fade } => cmd_select(&codebook, &fade),
        Command::SimulateBer(args) => cmd_simulate(args, false),
        Command::SimulateThroughput(args) => cmd_simulate(args, true),
        Command::Fixtures => cmd_fixtures(),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Config(_) | Error::UnsupportedOrder(_) | Error::LengthMismatch { .. } => {
                    EXIT_USAGE
                }
                _ => EXIT_VERIFY,
            })
        }
    }
}

fn canonical_field(v: &DifferenceVector) -> String {
    v.to_flat()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_enumerate(case: Option<u8>, format: &str) -> Result<u8, Error> {
    if format != "csv" {
        return Err(Error::Config(format!("unsupported format {format:?}")));
    }
    if let Some(c) = case {
        if !(1..=4).contains(&c) {
            return Err(Error::Config(format!("case must be 1-4, got {c}")));
        }
    }
    println!("case,subcase,orbit_size,canonical");
    for class in enumerate_singular_subspaces() {
        if case.is_some_and(|c| c != class.case_id) {
            continue;
        }
        println!(
            "{},{},{},{}",
            class.case_id,
            class.subcase_id,
            class.orbit.len(),
            canonical_field(&class.canonical)
        );
    }
    Ok(0)
}

fn cmd_build_codebook(out: &std::path::Path) -> Result<u8, Error> {
    let cb = build_codebook()?;
    store_codebook(&cb, out)?;
    let ts: Vec<u16> = cb.entries().iter().map(|(_, m)| m.label_count()).collect();
    let (min_t, max_t) = (ts.iter().min().unwrap(), ts.iter().max().unwrap());
    let over = ts.iter().filter(|&&t| t > 90).count();
    println!("wrote {} maps to {}", cb.len(), out.display());
    println!("cluster counts: min {min_t}, max {max_t}");
    if over > 0 {
        println!("note: {over} maps exceed the 64-90 target range");
    }
    Ok(0)
}

struct Report {
    failures: usize,
}

impl Report {
    fn check(&mut self, name: &str, ok: bool) {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            self.failures += 1;
        }
    }
}

fn fixture_class_sets(fixture: &[&[[i8; 8]]]) -> Vec<Vec<DifferenceVector>> {
    fixture
        .iter()
        .map(|group| {
            let mut v: Vec<DifferenceVector> =
                group.iter().map(DifferenceVector::from_flat).collect();
            v.sort();
            v
        })
        .collect()
}

fn cmd_verify(codebook: Option<&std::path::Path>) -> Result<u8, Error> {
    let mut rep = Report { failures: 0 };
    let classes = enumerate_singular_subspaces();

    let count = |case: u8| classes.iter().filter(|c| c.case_id == case).count();
    rep.check(
        "subspace census (4, 72, 448, 960; total 1484)",
        classes.len() == 1484
            && count(1) == 4
            && count(2) == 72
            && count(3) == 448
            && count(4) == 960,
    );
    rep.check(
        "orbit sizes in {4, 8} summing to raw counts",
        (1..=4u8).all(|case| {
            let sum: usize = classes
                .iter()
                .filter(|c| c.case_id == case)
                .map(|c| c.orbit.len())
                .inspect(|&n| debug_assert!(n == 4 || n == 8))
                .sum();
            classes
                .iter()
                .filter(|c| c.case_id == case)
                .all(|c| c.orbit.len() == 4 || c.orbit.len() == 8)
                && sum == [32, 384, 2048, 4096][usize::from(case) - 1]
        }),
    );

    // embedded two-user and inner-ring class fixtures, compared as sets
    let mut computed_ab: Vec<Vec<DifferenceVector>> = classes
        .iter()
        .filter(|c| c.case_id == 2 && c.subcase_id == 6)
        .map(|c| c.orbit.clone())
        .collect();
    let mut fixture_ab = fixture_class_sets(&CASE2_AB_CLASSES);
    computed_ab.sort();
    fixture_ab.sort();
    rep.check("12 two-user classes match embedded fixture", computed_ab == fixture_ab);

    let mut computed_d1: Vec<Vec<DifferenceVector>> = classes
        .iter()
        .filter(|c| c.case_id == 4 && c.subcase_id == 4)
        .map(|c| c.orbit.clone())
        .collect();
    let mut fixture_d1 = fixture_class_sets(&CASE4_D1_CLASSES);
    computed_d1.sort();
    fixture_d1.sort();
    rep.check("64 inner-ring classes match embedded fixture", computed_d1 == fixture_d1);

    rep.check(
        "embedded relay maps satisfy the exclusive law",
        satisfies_exclusive_law(&table1_map()) && satisfies_exclusive_law(&table2_map()),
    );

    if let Some(path) = codebook {
        let cb = load_codebook(path)?;
        rep.check("codebook has 960 entries", cb.len() == 960);
        rep.check(
            "codebook canonical vectors match the removable classes in order",
            cb.entries()
                .iter()
                .map(|(v, _)| *v)
                .eq(classes.iter().filter(|c| c.removable).map(|c| c.canonical)),
        );
        rep.check(
            "every codebook map satisfies the exclusive law",
            cb.entries().iter().all(|(_, m)| satisfies_exclusive_law(m)),
        );
        rep.check(
            "every codebook map is monochromatic on its constraints",
            classes
                .iter()
                .filter(|c| c.removable)
                .zip(cb.entries())
                .all(|(class, (_, m))| {
                    build_constraints(class).parts().iter().all(|part| {
                        part.iter().all(|x| m.label(*x) == m.label(part[0]))
                    })
                }),
        );
        rep.check(
            "every codebook map removes its subspace at a sampled point",
            classes
                .iter()
                .filter(|c| c.removable)
                .zip(cb.entries())
                .enumerate()
                .all(|(k, (class, (_, m)))| {
                    let h = sample_subspace_point(class, k as u64).expect("generic point");
                    min_cluster_distance(m, &h) > EPS * h.norm()
                }),
        );
    }

    if rep.failures == 0 {
        println!("all checks passed");
        Ok(0)
    } else {
        println!("{} check(s) failed", rep.failures);
        Ok(EXIT_VERIFY)
    }
}

fn parse_fade(s: &str) -> Result<FadeState, Error> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 4 {
        return Err(Error::Config(format!(
            "fade state needs 4 coefficients, got {}",
            parts.len()
        )));
    }
    let mut h = [Complex::new(0.0, 0.0); 4];
    for (i, p) in parts.iter().enumerate() {
        let (re, im) = p
            .split_once(',')
            .ok_or_else(|| Error::Config(format!("bad coefficient {p:?}, expected re,im")))?;
        let re: f64 = re
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad real part in {p:?}")))?;
        let im: f64 = im
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("bad imaginary part in {p:?}")))?;
        h[i] = Complex::new(re, im);
    }
    Ok(FadeState(h))
}

fn cmd_select(codebook: &std::path::Path, fade: &str) -> Result<u8, Error> {
    let h = parse_fade(fade)?;
    let cb = load_codebook(codebook)?;
    if cb.is_empty() {
        return Err(Error::Format("codebook is empty".into()));
    }
    let (idx, d) = SelectionCache::new(&cb).select(&h);
    println!("index {idx}");
    println!("min_cluster_distance {d}");
    Ok(0)
}

fn cmd_simulate(args: SimArgs, throughput: bool) -> Result<u8, Error> {
    if args.snr_step <= 0.0 {
        return Err(Error::Config("snr-step must be positive".into()));
    }
    if args.snr_stop < args.snr_start {
        return Err(Error::Config("snr-stop must be >= snr-start".into()));
    }
    let mut snr_db_list = Vec::new();
    let mut s = args.snr_start;
    while s <= args.snr_stop + 1e-9 {
        snr_db_list.push(s);
        s += args.snr_step;
    }
    let cfg = SimConfig {
        snr_db_list,
        rician_k_db: args.rician_k_db,
        frame_bits: args.frame_bits,
        frames_per_snr: args.frames,
        seed: args.seed,
        scheme: args.scheme.into(),
        bc_mode: args.bc.into(),
    };
    let cb = match (&cfg.scheme, &args.codebook) {
        (Scheme::AdaptiveTwoUse, Some(path)) => Some(load_codebook(path)?),
        (Scheme::AdaptiveTwoUse, None) => {
            return Err(Error::Config(
                "--codebook is required for the adaptive scheme".into(),
            ))
        }
        _ => None,
    };
    let result = if throughput {
        run_throughput(&cfg, cb.as_ref())?
    } else {
        run_ber(&cfg, cb.as_ref())?
    };
    for p in &result.points {
        if p.bit_errors < 100 {
            eprintln!(
                "warning: only {} bit errors at {} dB; confidence interval is unreliable",
                p.bit_errors, p.snr_db
            );
        }
    }
    let csv = result.to_csv();
    match &args.out {
        Some(path) => std::fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(0)
}

fn print_map(name: &str, m: &ClusterMap) {
    println!("{name} (t = {})", m.label_count());
    for a in 0..4u8 {
        for b in 0..4u8 {
            let row: Vec<String> = (0..16)
                .map(|cd| {
                    let x = SymbolTuple::new(a, b, cd / 4, cd % 4);
                    m.label(x).to_string()
                })
                .collect();
            println!("  a={a} b={b}: {}", row.join(" "));
        }
    }
}

fn cmd_fixtures() -> Result<u8, Error> {
    print_map("fixed two-use relay map", &table2_map());
    print_map("worked-example adaptive map", &table1_map());
    println!("two-user classes ({} groups)", CASE2_AB_CLASSES.len());
    for (i, group) in CASE2_AB_CLASSES.iter().enumerate() {
        let members: Vec<String> = group
            .iter()
            .map(|g| canonical_field(&DifferenceVector::from_flat(g)))
            .collect();
        println!("  group {}: {}", i + 1, members.join(" | "));
    }
    println!("inner-ring classes ({} groups)", CASE4_D1_CLASSES.len());
    for (i, group) in CASE4_D1_CLASSES.iter().enumerate() {
        let members: Vec<String> = group
            .iter()
            .map(|g| canonical_field(&DifferenceVector::from_flat(g)))
            .collect();
        println!("  group {}: {}", i + 1, members.join(" | "));
    }
    Ok(0)
}
