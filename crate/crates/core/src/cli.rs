//! Command-line front end. Reports go to the given writer; design files are
//! written only through `--out`.
//!
//! Exit codes: 0 success, 1 invalid design (for `verify`) or classification
//! disagreement (for `search --cross-check`), 2 parse error, 3 precondition
//! failure, 4 resource cap exceeded.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::constructions::{
    build_sixth_root_with_limits, build_split_subline_with_limits, build_subline_with_limits, classify,
    construction_is_flag_transitive, invariant_sqs_search_with_limits, preserving_overgroups,
    subline_psl_orbit_unsanctioned, Construction, SqsFamily, Verdict,
};
use crate::design::{derived, read_design, verify, write_design, Block};
use crate::error::Error;
use crate::field::{prime_power, Field};
use crate::group::{Family, GroupSpec, Limits, ProjectiveGroup};
use crate::orbit::stabilizer_action_on_block;

pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "psl-sqs", version, about = "Steiner quadruple systems with projective linear automorphism groups")]
pub struct Cli {
    /// Cap on block orbit sizes.
    #[arg(long, global = true, default_value_t = Limits::default().max_orbit)]
    pub max_orbit: u64,
    /// Cap on the number of k-subsets enumerated for orbit partitions.
    #[arg(long, global = true, default_value_t = Limits::default().max_subsets)]
    pub max_subsets: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one of the three families and report its properties.
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: u64,
        /// Acting group for ex1 (psl or pgl; default pgl).
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow ex1 with PSL for even d (orbit report only).
        #[arg(long)]
        unsanctioned: bool,
    },
    /// Check that a design file is a t-design.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Write the derived design at a point.
    Derive {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        point: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Orbits of a group on k-subsets of PG(n-1, q).
    Orbits {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Setwise stabilizer of a block on the projective line.
    Stabilizer {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        group: String,
        /// Comma-separated point indices.
        #[arg(long)]
        block: String,
    },
    /// Exhaustive search for PSL_n(q)-invariant SQS.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        /// Compare the outcome with the closed-form classification.
        #[arg(long)]
        cross_check: bool,
    },
    /// Closed-form classification for (n, q).
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Field parameters for GF(p^d).
    FieldInfo {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        d: u32,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Invalid,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(e.into())
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Resource { .. } => EXIT_RESOURCE,
        Error::Domain(_) | Error::Structure(_) | Error::Io(_) => EXIT_PRECONDITION,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Errors are written to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Invalid) => EXIT_INVALID,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits { max_orbit: cli.max_orbit, max_subsets: cli.max_subsets, ..Limits::default() }
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn exponent_of_three(q: u64) -> Result<u32, Error> {
    match prime_power(q) {
        Some((3, d)) => Ok(d),
        _ => Err(Error::Domain(format!("q = 3^d required (got q = {q})"))),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let lim = limits(cli);
    match &cli.command {
        Command::Construct { family, q, group, out: path, unsanctioned } => {
            let family: SqsFamily = family.parse()?;
            let construction = match family {
                SqsFamily::Subline => {
                    let d = exponent_of_three(*q)?;
                    let acting = parse_family(group.as_deref().unwrap_or("pgl"))?;
                    if *unsanctioned && acting == Family::PSL && d % 2 == 0 {
                        let u = subline_psl_orbit_unsanctioned(d)?;
                        writeln!(out, "unsanctioned parameters: PSL_2({q}) with even d = {d}; not a recognized family")?;
                        writeln!(out, "PSL orbit: {} blocks", u.blocks.len())?;
                        writeln!(out, "PGL orbit: {} blocks", u.pgl_orbit_size)?;
                        writeln!(out, "coincides with PGL orbit: {}", yes_no(u.coincides_with_pgl_orbit))?;
                        return Ok(());
                    }
                    build_subline_with_limits(d, acting, lim)?
                }
                SqsFamily::SixthRoot => build_sixth_root_with_limits(*q, lim)?,
                SqsFamily::SplitSubline => {
                    let d = exponent_of_three(*q)?;
                    if d % 2 != 0 {
                        return Err(Error::Domain(format!("q = 3^(2d) required (got q = {q})")).into());
                    }
                    build_split_subline_with_limits(d / 2, lim)?
                }
            };
            report_construction(&construction, *q, out)?;
            if let Some(path) = path {
                let mut w = BufWriter::new(File::create(path)?);
                write_design(&construction.design, &mut w)?;
                w.flush()?;
            }
        }
        Command::Verify { input } => {
            let design = read_design(BufReader::new(File::open(input)?))?;
            let report = verify(&design);
            if report.is_valid {
                writeln!(out, "valid {}, b = {}", design.parameters(), report.b)?;
            } else {
                writeln!(
                    out,
                    "invalid {}, b = {}, {} bad {}-subsets",
                    design.parameters(),
                    report.b,
                    report.violation_count,
                    design.t()
                )?;
                for (s, c) in &report.violations {
                    writeln!(out, "  {:?} covered {c} times", s)?;
                }
                return Err(Failure::Invalid);
            }
        }
        Command::Derive { input, point, out: path } => {
            let design = read_design(BufReader::new(File::open(input)?))?;
            let dx = derived(&design, *point)?;
            writeln!(out, "derived at point {point}: {}, b = {}", dx.parameters(), dx.b())?;
            let mut w = BufWriter::new(File::create(path)?);
            write_design(&dx, &mut w)?;
            w.flush()?;
        }
        Command::Orbits { q, group, k, n } => {
            let field = Arc::new(Field::with_order(*q)?);
            let g = ProjectiveGroup::new(GroupSpec::new(parse_family(group)?, *n, field)?)?.with_limits(lim);
            let orbits = g.orbits_on_k_subsets(*k)?;
            writeln!(out, "{}_{}({}) on {}-subsets of {} points", group_label(g.spec().unwrap().family), n, q, k, g.degree())?;
            writeln!(out, "orbits: {}", orbits.count())?;
            for (rep, size) in orbits.representatives().iter().zip(orbits.sizes()) {
                writeln!(out, "  rep {{{}}} size {size}", join(rep.points()))?;
            }
        }
        Command::Stabilizer { q, group, block } => {
            let pts: Vec<u32> = block
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| Error::Parse { line: 0, msg: format!("bad block `{block}`") })?;
            let base = Block::new(pts)?;
            let g = ProjectiveGroup::standard(parse_family(group)?, 2, *q)?.with_limits(lim);
            let order = g.order().expect("standard group");
            let orbit = g.orbit_of_block(&base)?;
            let stab = g.stabilizer_from_orbit(&orbit, order)?;
            let act = stabilizer_action_on_block(&g, &stab.elements, &base)?;
            writeln!(out, "block {{{}}} under {}_2({q})", join(base.points()), group_label(g.spec().unwrap().family))?;
            writeln!(out, "orbit length: {}", orbit.len())?;
            writeln!(out, "stabilizer order: {}", stab.order)?;
            writeln!(out, "image on block: {}", act.size())?;
            writeln!(out, "full symmetric: {}", yes_no(act.is_full_symmetric()))?;
            writeln!(out, "faithful: {}", yes_no(act.size() as u64 == stab.order))?;
        }
        Command::Search { n, q, cross_check } => {
            let report = invariant_sqs_search_with_limits(*n, *q, lim)?;
            write!(out, "{}", report.render())?;
            if *cross_check {
                let verdict = classify(*n, *q)?;
                let agree = verdict.families().is_empty() == report.solutions.is_empty();
                writeln!(out, "classification agrees: {}", yes_no(agree))?;
                if !agree {
                    return Err(Failure::Invalid);
                }
            }
        }
        Command::Classify { n, q } => {
            let verdict = classify(*n, *q)?;
            write!(out, "{}", render_verdict(&verdict, *n, *q))?;
        }
        Command::FieldInfo { p, d } => {
            let f = Field::new(*p, *d)?;
            writeln!(out, "q = {}", f.q())?;
            writeln!(out, "p = {}, d = {}", f.p(), f.d())?;
            writeln!(out, "modulus: {}", render_poly(f.modulus()))?;
            writeln!(out, "primitive element: {}", f.generator())?;
            let minus_one = f.neg(crate::field::FieldElement::ONE);
            writeln!(out, "-1 = {} (square: {})", minus_one, yes_no(f.is_square(minus_one)?))?;
            match f.smallest_nonsquare() {
                Ok(a) => writeln!(out, "smallest non-square: {a}")?,
                Err(_) => writeln!(out, "smallest non-square: none")?,
            }
            match f.primitive_sixth_root() {
                Ok(e) => writeln!(out, "primitive sixth root: {e}")?,
                Err(_) => writeln!(out, "primitive sixth root: none")?,
            }
        }
    }
    Ok(())
}

fn report_construction(c: &Construction, q: u64, out: &mut dyn Write) -> Result<(), Failure> {
    let report = verify(&c.design);
    let sizes: Vec<String> = c.orbit_sizes.iter().map(usize::to_string).collect();
    writeln!(out, "family: {} ({})", c.family.id(), c.family.description())?;
    writeln!(out, "group: {}_2({})", group_label(c.acting), c.q)?;
    for b in &c.base_blocks {
        writeln!(out, "base block: {{{}}}", join(b.points()))?;
    }
    writeln!(out, "v = {}, b = {}", c.design.v(), c.design.b())?;
    writeln!(out, "valid {}: {}", c.design.parameters(), yes_no(report.is_valid))?;
    writeln!(out, "orbits: {}", sizes.join(" + "))?;
    writeln!(out, "flag-transitive: {}", yes_no(construction_is_flag_transitive(c)?))?;
    let over = preserving_overgroups(&c.design, q)?;
    writeln!(out, "maximal group: {}", over.maximal)?;
    Ok(())
}

/// Human-readable classification.
pub fn render_verdict(verdict: &Verdict, n: u32, q: u64) -> String {
    match verdict {
        Verdict::None(reason) => format!("none: {}\n", reason.describe(n, q)),
        Verdict::Families(cases) => {
            let mut s = format!("families: {}\n", cases.len());
            for c in cases {
                let acting: Vec<String> = c.acting.iter().map(|f| format!("{}_2({q})", group_label(*f))).collect();
                s.push_str(&format!("  {}: {}\n", c.family.id(), c.family.description()));
                if let Some(d) = c.d {
                    s.push_str(&format!("    d = {d}\n"));
                }
                for b in &c.base_blocks {
                    s.push_str(&format!("    base block {{{}}}\n", join(b)));
                }
                s.push_str(&format!("    generated by: {}\n", acting.join(", ")));
                s.push_str(&format!("    group range: PSL_2({q}) <= G <= {}_2({q})\n", group_label(c.overgroup)));
            }
            s
        }
    }
}

fn group_label(f: Family) -> &'static str {
    f.name()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(pts: &[u32]) -> String {
    pts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn render_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
