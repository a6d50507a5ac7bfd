//! `snakelab`: tables, enumerations, series, continued fractions and the
//! claim report from the command line.

mod output;
mod scheme_file;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use snakelab::cfrac::{builtin_scheme, builtin_schemes, cf_convergent_series, MAX_ORDER};
use snakelab::entringer::build_triangle;
use snakelab::perm::{enumerate_class_with, stat, ClassTag, EnumConfig, StatVariant, DEFAULT_ENUM_CAP};
use snakelab::verify::{self, Caps, ReportFormat};
use snakelab::{andre, jacobi, perm, Rat, WPoly};

use output::{Format, Table};

const MAX_TRIANGLE_ROWS: usize = 100;
const MAX_ANDRE_N: usize = 500;
const MAX_JACOBI_N: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "snakelab", version, about = "Exact checks for elliptically weighted alternating permutations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SNAKELAB_FORMAT", default_value = "text")]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    /// up-down of odd size (S_odd)
    Sn,
    /// up-down of even size (C_even)
    Cn,
    /// down-up of even size (D_even)
    Dn,
    /// up-down of any size
    Ascending,
}

impl ClassArg {
    fn tag(self) -> ClassTag {
        match self {
            ClassArg::Sn => ClassTag::SOdd,
            ClassArg::Cn => ClassTag::CEven,
            ClassArg::Dn => ClassTag::DEven,
            ClassArg::Ascending => ClassTag::Ascending,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Entringer triangle from the recurrence.
    Entringer {
        /// Last row index.
        #[arg(long)]
        rows: usize,
    },
    /// List the permutations of one class and size in lexicographic order.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        size: usize,
        /// Also print this statistic for every permutation.
        #[arg(long)]
        stat: Option<StatVariant>,
        /// Refuse sizes above this cap (at most 13).
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        cap: usize,
    },
    /// Weight polynomial of a class for every admissible size up to a bound.
    Weights {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Largest permutation size.
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        stat: StatVariant,
    },
    /// Taylor coefficients of sn, cn, dn as polynomials in m.
    Jacobi {
        #[arg(long)]
        max_n: usize,
        /// Evaluate at a rational modulus, e.g. `m=1/2`.
        #[arg(long, value_parser = parse_at)]
        at: Option<Rat>,
    },
    /// Convergent of a J-fraction expanded as an ordinary power series.
    Cfrac {
        /// Built-in scheme name.
        #[arg(long, conflicts_with = "scheme_file", required_unless_present = "scheme_file")]
        scheme: Option<String>,
        /// TOML file with `name`, `leading`, `alpha`, `beta`.
        #[arg(long)]
        scheme_file: Option<PathBuf>,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        order: usize,
        /// Fix the modulus before expanding, e.g. `m=0`.
        #[arg(long, value_parser = parse_at)]
        at: Option<Rat>,
    },
    /// Secant-tangent numbers from the recurrence.
    Andre {
        #[arg(long)]
        max_n: usize,
    },
    /// Run the claim harness and print the report.
    Verify(VerifyArgs),
    /// Run the full claim harness and write the report to `--out`.
    Report(CapsArgs),
    /// List the built-in continued fraction schemes.
    Schemes,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Comma-separated claim ids or family prefixes such as `JAC-1`.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// Exit with status 2 when an anchor or cross-route claim does not pass.
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    caps: CapsArgs,
}

#[derive(Args, Debug)]
struct CapsArgs {
    /// Largest permutation size enumerated (3..=11).
    #[arg(long, default_value_t = verify::DEFAULT_ENUM_SIZE)]
    enum_size: usize,
    /// Series order for analytic and continued fraction checks.
    #[arg(long, default_value_t = verify::DEFAULT_ORDER)]
    order: usize,
    /// Deepest continued fraction convergent.
    #[arg(long, default_value_t = Caps::default().cf_depth)]
    cf_depth: usize,
    /// Largest secant-tangent index (2..=12).
    #[arg(long, default_value_t = Caps::default().andre_max_n)]
    andre_max_n: usize,
}

impl CapsArgs {
    fn caps(&self) -> Result<Caps> {
        let caps = Caps {
            enum_size: self.enum_size,
            order: self.order,
            cf_depth: self.cf_depth,
            andre_max_n: self.andre_max_n,
        };
        caps.validate()?;
        Ok(caps)
    }
}

fn parse_at(s: &str) -> std::result::Result<Rat, String> {
    let v = s.strip_prefix("m=").unwrap_or(s);
    v.trim().parse::<Rat>().map_err(|e| format!("'{v}' is not a rational number: {e}"))
}

/// How a run that did not error ends.
enum Outcome {
    Done,
    StrictFailure(Vec<String>),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::StrictFailure(ids)) => {
            eprintln!("error: claims did not pass: {}", ids.join(", "));
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    let doc = match &cli.command {
        Command::Entringer { rows } => {
            if *rows > MAX_TRIANGLE_ROWS {
                bail!("--rows {rows} exceeds {MAX_TRIANGLE_ROWS}");
            }
            let tri = build_triangle(*rows);
            let rows = tri.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
            Table::ragged(rows).render(format)?
        }
        Command::Enumerate { class, size, stat: variant, cap } => {
            let cfg = EnumConfig::with_cap(*cap)?;
            let mut header = vec!["permutation".to_string()];
            if let Some(v) = variant {
                header.push(v.name().to_string());
            }
            let mut t = Table::new(header);
            for p in enumerate_class_with(class.tag(), *size, cfg)? {
                let mut row = vec![p.to_string()];
                if let Some(v) = variant {
                    row.push(stat(&p, *v).to_string());
                }
                t.push(row);
            }
            t.render(format)?
        }
        Command::Weights { class, max_n, stat: variant } => {
            if *max_n > DEFAULT_ENUM_CAP {
                bail!("--max-n {max_n} exceeds {DEFAULT_ENUM_CAP}");
            }
            let tag = class.tag();
            let mut t = Table::new(vec!["size".into(), "count".into(), "weight".into()]);
            for n in (0..=*max_n).filter(|&n| tag.admits_size(n)) {
                let p: WPoly = perm::class_weight_poly(tag, n, *variant)?;
                let count = p.eval(&Rat::from_integer(1.into()));
                t.push(vec![n.to_string(), count.to_string(), p.display_in("w")]);
            }
            t.render(format)?
        }
        Command::Jacobi { max_n, at } => {
            if *max_n > MAX_JACOBI_N {
                bail!("--max-n {max_n} exceeds {MAX_JACOBI_N}");
            }
            let jt: snakelab::JacobiTaylor = jacobi::jacobi_taylor(*max_n);
            let show = |p: &WPoly| match at {
                Some(m) => p.eval(m).to_string(),
                None => p.display_in("m"),
            };
            let mut t = Table::new(vec!["n".into(), "s".into(), "c".into(), "d".into()]);
            for n in 0..=*max_n {
                t.push(vec![n.to_string(), show(&jt.s[n]), show(&jt.c[n]), show(&jt.d[n])]);
            }
            t.render(format)?
        }
        Command::Cfrac { scheme, scheme_file, depth, order, at } => {
            if *order > MAX_ORDER {
                bail!("--order {order} exceeds {MAX_ORDER}");
            }
            let mut s = match (scheme, scheme_file) {
                (Some(name), None) => builtin_scheme(name)?,
                (None, Some(path)) => scheme_file::load(path)?,
                _ => bail!("give exactly one of --scheme and --scheme-file"),
            };
            if let Some(m) = at {
                s = s.specialize(m);
            }
            let series = cf_convergent_series(&s, *depth, *order)
                .with_context(|| format!("expanding scheme '{}' at depth {depth}", s.name))?;
            let mut t = Table::new(vec!["power".into(), "coefficient".into()]);
            for i in 0..=series.order() {
                t.push(vec![i.to_string(), series.coeff(i).display_in("m")]);
            }
            t.render(format)?
        }
        Command::Andre { max_n } => {
            if *max_n > MAX_ANDRE_N {
                bail!("--max-n {max_n} exceeds {MAX_ANDRE_N}");
            }
            let a = andre::a_recurrence((*max_n).max(1))?;
            let mut t = Table::new(vec!["n".into(), "A_n".into()]);
            for (n, v) in a.iter().take(max_n + 1).enumerate() {
                t.push(vec![n.to_string(), v.to_string()]);
            }
            t.render(format)?
        }
        Command::Schemes => {
            let mut t = Table::new(vec!["name".into(), "leading".into(), "alpha".into(), "beta".into()]);
            for s in builtin_schemes() {
                t.push(vec![s.name.clone(), s.leading.to_string(), s.alpha.to_string(), s.beta.to_string()]);
            }
            t.render(format)?
        }
        Command::Verify(args) => {
            let caps = args.caps.caps()?;
            let verdicts = verify::run_claims(&args.claims, &caps)?;
            let doc = verify::render_report(&verdicts, report_format(format))?;
            emit(cli, &doc)?;
            let failed: Vec<String> = verify::failed_anchors(&verdicts).iter().map(|v| v.claim_id.clone()).collect();
            if args.strict && !failed.is_empty() {
                return Ok(Outcome::StrictFailure(failed));
            }
            return Ok(Outcome::Done);
        }
        Command::Report(caps) => {
            if cli.out.is_none() {
                bail!("report needs --out PATH");
            }
            let verdicts = verify::run_claims(&[], &caps.caps()?)?;
            verify::render_report(&verdicts, report_format(format))?
        }
    };
    emit(cli, &doc)?;
    Ok(Outcome::Done)
}

fn report_format(f: Format) -> ReportFormat {
    match f {
        Format::Json => ReportFormat::Json,
        Format::Csv => ReportFormat::Csv,
        Format::Text => ReportFormat::Text,
    }
}

fn emit(cli: &Cli, doc: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, doc).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{doc}");
            Ok(())
        }
    }
}
