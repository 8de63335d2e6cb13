//! The `hypermatch` command line.
//!
//! Exit codes: 0 for success or a positive answer, 1 for a valid negative
//! answer (no perfect matching, a failed condition, a lemma counterexample,
//! an absorption that could not be routed), 2 for usage and input errors.
//! `-` stands for standard input or output wherever a path is expected.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::absorbing::{absorb, build_family, AbsorberSearch, FamilyOptions};
use crate::constructions::Family;
use crate::error::Error;
use crate::extremal::{certify_counterexample, closed_form_max, sweep_max_sigma2, MatchingMethod};
use crate::hypergraph::Vertex;
use crate::io::{parse_edge_list, write_annotated, EdgeList};
use crate::lemmas::{verify_by_id, LemmaParams, LemmaVerdict, Mode, SearchMode, LEMMA_IDS};
use crate::matching::{has_perfect_matching, max_matching};
use crate::report::RunReport;
use crate::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "hypermatch",
    version,
    about = "Degree-sum perfect matching toolkit for 3-graphs"
)]
struct Cli {
    /// Worker threads for partitionable work (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit an extremal construction as an annotated edge list.
    Construct(ConstructArgs),
    /// Print n, m, minimum degree, sigma_2 and independence number.
    #[command(alias = "inspect")]
    Stats(StatsArgs),
    /// Find a perfect or a maximum matching.
    #[command(name = "match")]
    Match(MatchArgs),
    /// Sweep sigma_2 of H^{1,2}_{n,x,y} over all (x, y).
    Sweep(SweepArgs),
    /// Certify the sigma_2-maximising H^{1,2}_{n,x,y} as a counterexample.
    Certify(CertifyArgs),
    /// Run a finite lemma verifier.
    VerifyLemma(LemmaArgs),
    /// Build an absorbing family and absorb a random leftover set.
    Absorb(AbsorbArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    H1,
    H2,
    H3,
    H12,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    family: FamilyName,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    #[arg(long)]
    y: Option<usize>,
    /// Output file.
    #[arg(long, short, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct StatsArgs {
    file: PathBuf,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct MatchArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "max", required_unless_present = "max")]
    perfect: bool,
    #[arg(long)]
    max: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CertifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LemmaArgs {
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(LEMMA_IDS))]
    id: String,
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AbsorbArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Random 3-sets outside the family used to measure coverage.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Absorbers wanted per sampled 3-set.
    #[arg(long, default_value_t = 2)]
    target: usize,
    /// Size of the leftover set absorbed in the demonstration.
    #[arg(long, default_value_t = 6)]
    leftover: usize,
    #[arg(long, default_value_t = 0.05)]
    epsilon: f64,
    /// Construction attempts per absorber.
    #[arg(long, default_value_t = 200)]
    budget: usize,
    #[arg(long)]
    max_sets: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    json: Option<PathBuf>,
}

type CliResult = std::result::Result<i32, String>;

struct Io<'a> {
    out: &'a mut (dyn Write + Send),
    err: &'a mut (dyn Write + Send),
}

impl Io<'_> {
    fn emit(&mut self, target: &PathBuf, text: &str) -> std::result::Result<(), String> {
        if target.as_os_str() == "-" {
            self.out
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string())
        } else {
            std::fs::write(target, text).map_err(|e| format!("{}: {e}", target.display()))
        }
    }

    fn human(&mut self, json: &Option<PathBuf>, text: &str) -> std::result::Result<(), String> {
        let to_stdout = json.as_ref().is_some_and(|p| p.as_os_str() == "-");
        if to_stdout {
            Ok(())
        } else {
            self.out
                .write_all(text.as_bytes())
                .map_err(|e| e.to_string())
        }
    }

    fn report<P: Serialize, R: Serialize>(
        &mut self,
        json: &Option<PathBuf>,
        subcommand: &str,
        parameters: &P,
        seed: Option<u64>,
        started: Instant,
        result: &R,
    ) -> std::result::Result<(), String> {
        if let Some(path) = json {
            let report = RunReport::new(subcommand, parameters, seed, started, result)
                .map_err(|e| e.to_string())?;
            self.emit(path, &report.to_json())?;
        }
        Ok(())
    }
}

fn read_graph(path: &PathBuf) -> std::result::Result<EdgeList, String> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| e.to_string())?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn lib(e: Error) -> String {
    e.to_string()
}

fn construct(a: &ConstructArgs, io: &mut Io) -> CliResult {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| format!("--{flag} is required"));
    let family = match a.family {
        FamilyName::H12 => Family::H12 {
            n: a.n,
            x: need(a.x, "x")?,
            y: need(a.y, "y")?,
        },
        f => Family::HEll {
            n: a.n,
            s: need(a.s, "s")?,
            ell: match f {
                FamilyName::H1 => 1,
                FamilyName::H2 => 2,
                _ => 3,
            },
        },
    };
    let inst = family.build().map_err(lib)?;
    let text = write_annotated(&inst.graph, &inst.partition, &[family.label()]);
    io.emit(&a.out, &text)?;
    Ok(0)
}

fn stats(a: &StatsArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let el = read_graph(&a.file)?;
    let h = &el.graph;
    let profile = h.degree_profile();
    let witness = h.sigma2_witness();
    let (alpha, independent_set) = h.independence_number();
    let blocks: Vec<_> = el
        .blocks
        .iter()
        .map(|b| {
            let degs: Vec<usize> = b.vertices().map(|v| profile.degree(v)).collect();
            json!({
                "name": b.name,
                "start": b.start,
                "len": b.len,
                "min_degree": degs.iter().min(),
                "max_degree": degs.iter().max(),
            })
        })
        .collect();
    let mut text = String::new();
    writeln!(text, "n       {}", h.n()).unwrap();
    writeln!(text, "m       {}", h.edge_count()).unwrap();
    let show = |v: Option<usize>| v.map_or("none".to_string(), |v| v.to_string());
    writeln!(text, "delta1  {}", show(profile.min_vertex_degree())).unwrap();
    writeln!(text, "sigma2  {}", show(witness.map(|w| w.0))).unwrap();
    writeln!(text, "alpha   {alpha}").unwrap();
    for b in &blocks {
        writeln!(
            text,
            "block {}: degree {}..{}",
            b["name"].as_str().unwrap_or(""),
            b["min_degree"],
            b["max_degree"]
        )
        .unwrap();
    }
    io.human(&a.json, &text)?;
    let result = json!({
        "n": h.n(),
        "m": h.edge_count(),
        "delta1": profile.min_vertex_degree(),
        "sigma2": witness.map(|w| w.0),
        "sigma2_pair": witness.map(|w| [w.1, w.2]),
        "alpha": alpha,
        "independent_set": independent_set,
        "blocks": blocks,
    });
    let params = json!({ "file": a.file });
    io.report(&a.json, "stats", &params, None, started, &result)?;
    Ok(0)
}

fn matching(a: &MatchArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let el = read_graph(&a.file)?;
    let cert = if a.perfect {
        has_perfect_matching(&el.graph).map_err(lib)?
    } else {
        Some(max_matching(&el.graph))
    };
    let mut text = String::new();
    match &cert {
        Some(c) => {
            for e in &c.edges {
                writeln!(text, "M: {} {} {}", e[0], e[1], e[2]).unwrap();
            }
        }
        None => writeln!(text, "no perfect matching").unwrap(),
    }
    io.human(&a.json, &text)?;
    let params = json!({ "file": a.file, "mode": if a.perfect { "perfect" } else { "max" } });
    let result = json!({ "found": cert.is_some(), "matching": cert });
    io.report(&a.json, "match", &params, None, started, &result)?;
    Ok(if cert.is_some() { 0 } else { 1 })
}

fn sweep(a: &SweepArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let s = sweep_max_sigma2(a.n).map_err(lib)?;
    let closed = closed_form_max(a.n).map_err(lib)?;
    let csv = s.to_csv();
    match (&a.csv, &a.json) {
        (Some(path), _) => {
            io.emit(path, &csv)?;
            if path.as_os_str() != "-" {
                let text = format!(
                    "max sigma2 {} at {:?}; closed form {closed}\n",
                    s.max, s.argmax
                );
                io.human(&a.json, &text)?;
            }
        }
        (None, None) => io.emit(&PathBuf::from("-"), &csv)?,
        (None, Some(_)) => {}
    }
    let result = json!({ "sweep": s, "closed_form_max": closed });
    io.report(
        &a.json,
        "sweep",
        &json!({ "n": a.n }),
        None,
        started,
        &result,
    )?;
    Ok(if s.max == closed { 0 } else { 1 })
}

fn certify(a: &CertifyArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let r = certify_counterexample(a.n).map_err(lib)?;
    let mut text = String::new();
    writeln!(
        text,
        "graph              H^{{1,2}}_{{{},{},{}}} ({} edges)",
        r.n, r.x, r.y, r.edge_count
    )
    .unwrap();
    writeln!(
        text,
        "sigma2             {} at pair {:?}",
        r.sigma2, r.sigma2_pair
    )
    .unwrap();
    writeln!(
        text,
        "closed form        {} ({})",
        r.closed_form_max,
        if r.closed_form_agrees {
            "agrees"
        } else {
            "DISAGREES"
        }
    )
    .unwrap();
    writeln!(text, "threshold          {}", r.threshold).unwrap();
    writeln!(
        text,
        "max matching       {} ({}; structural bound {})",
        r.max_matching,
        match r.matching_method {
            MatchingMethod::Exact => "exact",
            MatchingMethod::Structural => "structural",
        },
        r.structural_bound
    )
    .unwrap();
    writeln!(text, "independence       {}", r.independence_number).unwrap();
    writeln!(text, "isolated vertices  {}", r.isolated_vertices).unwrap();
    writeln!(text, "sigma2 > threshold {}", r.sigma2_exceeds_threshold).unwrap();
    writeln!(text, "no perfect match   {}", r.no_perfect_matching).unwrap();
    writeln!(text, "not inside H^2     {}", r.not_subgraph_of_h2).unwrap();
    io.human(&a.json, &text)?;
    io.report(&a.json, "certify", &json!({ "n": a.n }), None, started, &r)?;
    Ok(if r.all_conditions_hold && r.closed_form_agrees {
        0
    } else {
        1
    })
}

fn verdict_text(v: &LemmaVerdict) -> String {
    let mut t = String::new();
    writeln!(t, "lemma            {}", v.lemma).unwrap();
    for (k, val) in &v.parameters {
        writeln!(t, "  {k} = {val}").unwrap();
    }
    let mode = match v.mode {
        Mode::Exhaustive => "exhaustive".to_string(),
        Mode::Randomized {
            samples,
            restarts,
            seed,
        } => {
            format!("randomized, {samples} samples + {restarts} restarts, seed {seed:#x}")
        }
    };
    writeln!(t, "mode             {mode}").unwrap();
    writeln!(
        t,
        "universe         {} ({} covered, {} satisfying)",
        v.universe, v.universe_size, v.satisfying
    )
    .unwrap();
    writeln!(t, "bound            {}", v.bound).unwrap();
    let max = v.max_observed.map_or("none".into(), |m| m.to_string());
    writeln!(t, "max observed     {max}").unwrap();
    writeln!(t, "witnesses        {}", v.witnesses.len()).unwrap();
    for c in &v.classes {
        writeln!(
            t,
            "class {}  {} edges, {} labelled, pairs {:?}",
            c.name, c.edge_count, c.labelled_count, c.representative
        )
        .unwrap();
    }
    writeln!(t, "counterexamples  {}", v.counterexamples.len()).unwrap();
    writeln!(
        t,
        "verdict          {}",
        if v.holds() { "holds" } else { "FAILS" }
    )
    .unwrap();
    t
}

fn verify_lemma(a: &LemmaArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let mode = match (a.exhaustive, a.samples) {
        (true, _) => SearchMode::Exhaustive,
        (false, Some(samples)) => SearchMode::Randomized {
            samples,
            seed: a.seed,
        },
        (false, None) => SearchMode::Auto { seed: a.seed },
    };
    let params = LemmaParams {
        n: a.n,
        s: a.s,
        a: a.a,
        b: a.b,
    };
    writeln!(io.err, "verifying {} ...", a.id).ok();
    let v = verify_by_id(&a.id, params, mode).map_err(lib)?;
    io.human(&a.json, &verdict_text(&v))?;
    for c in &v.counterexamples {
        write!(io.err, "{}", c.to_edge_list()).ok();
    }
    let seed = matches!(v.mode, Mode::Randomized { .. }).then_some(a.seed);
    let parameters = json!({
        "id": a.id, "exhaustive": a.exhaustive, "samples": a.samples,
        "n": a.n, "s": a.s, "a": a.a, "b": a.b,
    });
    io.report(&a.json, "verify-lemma", &parameters, seed, started, &v)?;
    Ok(if v.holds() { 0 } else { 1 })
}

fn absorb_cmd(a: &AbsorbArgs, io: &mut Io) -> CliResult {
    let started = Instant::now();
    let el = read_graph(&a.graph)?;
    let h = &el.graph;
    let opts = FamilyOptions {
        search: AbsorberSearch {
            attempts: a.budget,
            epsilon: a.epsilon,
            ..Default::default()
        },
        max_sets: a.max_sets,
        seed: a.seed,
        ..Default::default()
    };
    let split = crate::absorbing::degree_split(h, a.epsilon).map_err(lib)?;
    let family = build_family(h, a.samples, a.target, &opts).map_err(lib)?;
    let fam_vertices = family.vertices();
    let mut rest: Vec<Vertex> = (0..h.n()).filter(|v| !fam_vertices.contains(v)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    rest.shuffle(&mut rng);
    let mut v_prime: Vec<Vertex> = rest.into_iter().take(a.leftover).collect();
    v_prime.sort_unstable();
    let outcome = absorb(h, &family, &v_prime, a.seed);
    let (code, transcript) = match &outcome {
        Ok(r) => (
            0,
            json!({ "success": true, "v_prime": v_prime, "absorption": r }),
        ),
        Err(
            e @ (Error::RoutingFailure(_)
            | Error::NotEnoughAbsorbers { .. }
            | Error::NotDivisibleByThree(_)),
        ) => (
            1,
            json!({ "success": false, "v_prime": v_prime, "error": e.to_string() }),
        ),
        Err(e) => return Err(e.to_string()),
    };
    let mut text = String::new();
    writeln!(
        text,
        "W'/U' split        {} / {} (sigma2 hypothesis {})",
        split.low.len(),
        split.high.len(),
        split.sigma2_hypothesis
    )
    .unwrap();
    writeln!(text, "absorbers          {}", family.sets.len()).unwrap();
    writeln!(
        text,
        "coverage           {:.3} of {} samples with >= {} (min {})",
        family.coverage.fraction,
        family.coverage.samples.len(),
        family.coverage.target,
        family.coverage.min_count
    )
    .unwrap();
    writeln!(text, "leftover V'        {v_prime:?}").unwrap();
    match &outcome {
        Ok(r) => {
            for route in &r.routes {
                writeln!(
                    text,
                    "route {:?} -> absorber {}",
                    route.triple, route.absorber
                )
                .unwrap();
            }
            writeln!(
                text,
                "matching           {} edges covering V(M) and V'",
                r.certificate.size
            )
            .unwrap();
        }
        Err(e) => writeln!(text, "absorption failed  {e}").unwrap(),
    }
    io.human(&a.json, &text)?;
    let parameters = json!({
        "graph": a.graph, "samples": a.samples, "target": a.target, "leftover": a.leftover,
        "epsilon": a.epsilon, "budget": a.budget, "max_sets": a.max_sets,
    });
    let result = json!({ "split": split, "family": family, "demo": transcript });
    io.report(
        &a.json,
        "absorb",
        &parameters,
        Some(a.seed),
        started,
        &result,
    )?;
    Ok(code)
}

fn dispatch(cmd: &Command, io: &mut Io) -> CliResult {
    match cmd {
        Command::Construct(a) => construct(a, io),
        Command::Stats(a) => stats(a, io),
        Command::Match(a) => matching(a, io),
        Command::Sweep(a) => sweep(a, io),
        Command::Certify(a) => certify(a, io),
        Command::VerifyLemma(a) => verify_lemma(a, io),
        Command::Absorb(a) => absorb_cmd(a, io),
    }
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing payloads to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    out.write_all(text.as_bytes()).ok();
                    0
                }
                _ => {
                    err.write_all(text.as_bytes()).ok();
                    2
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            return 2;
        }
    };
    let mut io = Io { out, err };
    match pool.install(|| dispatch(&cli.command, &mut io)) {
        Ok(code) => code,
        Err(message) => {
            writeln!(io.err, "error: {message}").ok();
            2
        }
    }
}
