//! `knspatial`: build spatial complete graphs, compute their invariant sums
//! and check the identities and congruences they satisfy.

mod run;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use knspatial::graph;
use knspatial::{
    a2, a2_gauss_formula, c_n, congruence_verdict, diagram_from_points, identity_verdict,
    invariant_report, invariant_report_with_workers, lk, plan_realization, r_n, random_embedding,
    residue_modulus, sachs_verdict, sigma, standard_diagram, tau, twist_embedding, Cycle,
    CyclePair, Diagram, Error, InvariantReport, Meta, PointSet, Projection, TwistParams,
};
use num::{BigInt, Integer};
use run::{RunReport, Verdict};

/// Largest n enumerated by brute force unless `--force` is given.
const BRUTE_FORCE_LIMIT: u32 = 9;

#[derive(Parser)]
#[command(name = "knspatial", version, about = "Invariant sums of spatial complete graphs")]
struct Cli {
    /// Output style for the run report.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Threads for cycle enumeration (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Enumerate even when n exceeds the brute-force limit.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Build a diagram and write it to a file.
    Build {
        #[command(subcommand)]
        kind: Build,
    },
    /// Compute all invariant sums of a diagram and check them.
    Report { diagram: PathBuf },
    /// Run one family of checks.
    Verify {
        #[command(subcommand)]
        check: Verify,
    },
    /// Build an embedding with a prescribed Hamiltonian a2 sum.
    Realize {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: BigInt,
        /// Recompute the sum by enumeration and compare.
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Knot invariants of one cycle.
    Knot {
        #[command(subcommand)]
        what: Knot,
    },
    /// Link invariants of a pair of disjoint cycles.
    Link {
        #[command(subcommand)]
        what: Link,
    },
}

#[derive(Subcommand)]
enum Build {
    /// Vertices in order on the moment curve.
    Standard {
        #[arg(long)]
        n: u32,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The standard embedding with s full twists between two edges.
    Twist {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        s: u64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Random integer vertices in general position.
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        seed: u64,
        /// Coordinates are drawn from [-bound, bound].
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Straight edges between vertices read from a point file.
    Points {
        points: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Verify {
    Identity { diagram: PathBuf },
    Congruence {
        diagram: PathBuf,
        /// Defaults to (n-5)!.
        #[arg(long)]
        modulus: Option<BigInt>,
    },
    Sachs { diagram: PathBuf },
    /// Twist sums against the closed form for every (k, l) and s <= max-s.
    Twists {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        max_s: u64,
    },
}

#[derive(Subcommand)]
enum Knot {
    A2 {
        diagram: PathBuf,
        /// Vertices of the cycle, comma separated.
        #[arg(long)]
        cycle: String,
    },
}

#[derive(Subcommand)]
enum Link {
    Lk {
        diagram: PathBuf,
        /// Two cycles, e.g. `1,3,5/2,4,6`.
        #[arg(long)]
        pair: String,
    },
}

struct Ctx {
    workers: Option<usize>,
    force: bool,
}

impl Ctx {
    fn report(&self, d: &Diagram, out: &mut RunReport) -> Result<InvariantReport> {
        self.guard(d.n(), out)?;
        let r = match self.workers {
            Some(w) => invariant_report_with_workers(d, w)?,
            None => invariant_report(d)?,
        };
        out.report = Some(r.clone());
        Ok(r)
    }

    fn guard(&self, n: u32, out: &mut RunReport) -> Result<()> {
        if n > BRUTE_FORCE_LIMIT {
            let cycles = graph::factorial(n - 1) / 2u32;
            let msg = format!("n = {n} means enumerating {cycles} Hamiltonian cycles");
            if !self.force {
                bail!("{msg}; refusing above n = {BRUTE_FORCE_LIMIT} without --force");
            }
            eprintln!("warning: {msg}");
            out.warnings.push(msg);
        }
        Ok(())
    }
}

fn read_diagram(path: &Path) -> Result<Diagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = Diagram::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    d.ensure_valid().with_context(|| format!("validating {}", path.display()))?;
    Ok(d)
}

fn write_diagram(d: &Diagram, path: &Path, out: &mut RunReport) -> Result<()> {
    fs::write(path, d.to_json()).with_context(|| format!("writing {}", path.display()))?;
    out.input("n", d.n());
    out.input("crossings", d.crossing_count());
    out.input("written", path.display().to_string());
    out.provenance = d.meta.clone();
    Ok(())
}

fn parse_cycle(text: &str) -> Result<Cycle> {
    let vs = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().with_context(|| format!("bad vertex {t:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cycle::new(vs)?)
}

fn identity(r: &InvariantReport) -> Verdict {
    let v = identity_verdict(r);
    Verdict::new("identity", v.rhs, v.lhs, v.pass)
}

fn congruence(r: &InvariantReport, modulus: Option<BigInt>) -> Result<Option<Verdict>> {
    let v = congruence_verdict(r, modulus)?;
    Ok(v.expected.map(|e| {
        Verdict::new(
            format!("congruence mod {}", v.modulus),
            e,
            &v.residue,
            v.pass == Some(true),
        )
    }))
}

fn sachs(r: &InvariantReport) -> Option<Verdict> {
    sachs_verdict(r).map(|pass| {
        let parity = if pass { "odd" } else { "even" };
        Verdict::new("sachs parity of sum lk", "odd", format!("{} ({parity})", r.sum_lk_triangles), pass)
    })
}

/// A note on how to get from an inadmissible `m` to the neighbouring
/// admissible values.
fn admissible_hint(n: u32, m: &BigInt) -> Option<String> {
    let r = r_n(n).ok()?;
    let modulus = residue_modulus(n).ok()?;
    let below = m - (m - &r).mod_floor(&modulus);
    let above = &below + &modulus;
    Some(format!(
        "m must be ≡ {} (mod {modulus}); nearest admissible values are {below} and {above}",
        r.mod_floor(&modulus)
    ))
}

fn execute(cmd: Command, ctx: &Ctx, out: &mut RunReport) -> Result<()> {
    match cmd {
        Command::Build { kind } => {
            let (d, path) = match kind {
                Build::Standard { n, out: path } => (standard_diagram(n)?, path),
                Build::Twist { n, k, l, s, out: path } => (twist_embedding(TwistParams::new(n, k, l, s)?)?, path),
                Build::Random { n, seed, bound, out: path } => {
                    out.input("seed", seed);
                    let p = random_embedding(n, seed, bound)?;
                    (diagram_from_points(&p, Projection::Z)?, path)
                }
                Build::Points { points, out: path } => {
                    let text = fs::read_to_string(&points)
                        .with_context(|| format!("reading {}", points.display()))?;
                    let mut p = PointSet::parse(&text)?;
                    p.provenance = Some(
                        Meta::new("points")
                            .param("n", p.n())
                            .param("points", p.to_text()),
                    );
                    (diagram_from_points(&p, Projection::Z)?, path)
                }
            };
            write_diagram(&d, &path, out)?;
        }
        Command::Report { diagram } => {
            out.input("diagram", diagram.display().to_string());
            let d = read_diagram(&diagram)?;
            out.provenance = d.meta.clone();
            let r = ctx.report(&d, out)?;
            out.verdicts.push(identity(&r));
            out.verdicts.extend(congruence(&r, None)?);
            out.verdicts.extend(sachs(&r));
        }
        Command::Verify { check } => match check {
            Verify::Identity { diagram } => {
                out.input("diagram", diagram.display().to_string());
                let r = ctx.report(&read_diagram(&diagram)?, out)?;
                out.verdicts.push(identity(&r));
            }
            Verify::Congruence { diagram, modulus } => {
                out.input("diagram", diagram.display().to_string());
                if let Some(m) = &modulus {
                    out.input("modulus", m.to_string());
                }
                let r = ctx.report(&read_diagram(&diagram)?, out)?;
                match congruence(&r, modulus.clone())? {
                    Some(v) => out.verdicts.push(v),
                    None => out.warnings.push(format!(
                        "modulus {} does not divide {}, so no residue is predicted",
                        modulus.unwrap_or_default(),
                        r.residue_modulus
                    )),
                }
            }
            Verify::Sachs { diagram } => {
                out.input("diagram", diagram.display().to_string());
                let r = ctx.report(&read_diagram(&diagram)?, out)?;
                match sachs(&r) {
                    Some(v) => out.verdicts.push(v),
                    None => bail!("the parity check applies to K_6 only, got n = {}", r.n),
                }
            }
            Verify::Twists { n, max_s } => {
                out.input("n", n).input("max_s", max_s);
                ctx.guard(n, out)?;
                let f = |m: u32| BigInt::from(graph::factorial(m));
                for (k, l) in TwistParams::all_kl(n) {
                    for s in 0..=max_s {
                        let p = TwistParams::new(n, k, l, s)?;
                        let want = c_n(n)? + f(n - 4) * sigma(k, l, s) + f(n - 5) * tau(n, k, l, s)?;
                        let mut scratch = RunReport::new(Vec::new());
                        let got = ctx.report(&twist_embedding(p)?, &mut scratch)?.sum_a2_hamiltonian;
                        out.verdicts.push(Verdict::equal(format!("k={k} l={l} s={s}"), want, got));
                    }
                }
            }
        },
        Command::Realize { n, m, verify, out: path } => {
            out.input("n", n).input("m", m.to_string());
            let plan = match plan_realization(n, &m) {
                Err(e @ Error::InadmissibleTarget { .. }) => {
                    let hint = admissible_hint(n, &m).unwrap_or_default();
                    bail!("{e}\n{hint}");
                }
                other => other?,
            };
            out.input("s", plan.twist.s)
                .input("k", plan.twist.k)
                .input("l", plan.twist.l)
                .input("delta_count", plan.delta_count.to_string());
            let d = plan.build()?;
            write_diagram(&d, &path, out)?;
            if verify {
                let r = ctx.report(&d, out)?;
                out.verdicts.push(Verdict::equal("realized sum", &m, r.sum_a2_hamiltonian));
                out.verdicts.push(identity(&r));
            }
        }
        Command::Knot { what: Knot::A2 { diagram, cycle } } => {
            out.input("diagram", diagram.display().to_string()).input("cycle", cycle.clone());
            let d = read_diagram(&diagram)?;
            let k = d.extract_knot(&parse_cycle(&cycle)?)?;
            let (primary, oracle) = (a2(&k)?, a2_gauss_formula(&k)?);
            out.input("a2", primary).input("crossings", k.crossing_count());
            out.verdicts.push(Verdict::equal("skein vs Gauss-diagram formula", oracle, primary));
        }
        Command::Link { what: Link::Lk { diagram, pair } } => {
            out.input("diagram", diagram.display().to_string()).input("pair", pair.clone());
            let d = read_diagram(&diagram)?;
            let Some((a, b)) = pair.split_once('/') else {
                bail!("expected two cycles separated by '/', got {pair:?}");
            };
            let pair = CyclePair::new(parse_cycle(a)?, parse_cycle(b)?)?;
            let value = lk(&d.extract_link(&pair)?)?;
            let l = d.extract_link(&pair)?;
            let swapped = lk(&l.swapped())?;
            out.input("lk", value);
            out.verdicts.push(Verdict::equal("symmetry under swapping components", value, swapped));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { workers: cli.workers, force: cli.force };
    let mut out = RunReport::new(std::env::args().skip(1).collect());
    let start = Instant::now();
    let result = execute(cli.command, &ctx, &mut out);
    out.timing_ms = start.elapsed().as_millis();
    if let Err(e) = result {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match cli.format {
        Format::Table => print!("{}", out.to_table()),
        Format::Structured => println!("{}", out.to_json()),
    }
    if out.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
