use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcharsum::chars::{
    involution_count, u_eps_split_gf, u_real_sum_closed, u_real_sum_gf, weyl_sums, gl_real_sum_gf, WeylFamily,
};
use qcharsum::error::{Error, Result};
use qcharsum::exact::{parse_rational_function, q, ExactRational};
use qcharsum::groups::count_square_roots_of_identity;
use qcharsum::hl::hl_value;
use qcharsum::partitions::Partition;
use qcharsum::polycount::census_tsv;
use qcharsum::qseries::named_gf_at;
use qcharsum::verify::{run_specs, registry, Budget, ParamOverrides, QSelect, Status, TSV_HEADER};
use qcharsum::{Flavor, Parity};

#[derive(Parser)]
#[command(name = "qcharsum", version, about = "Exact checks on real character degree sums of GL(n,q) and U(n,q)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run registered checks and report pass/fail.
    Verify(VerifyArgs),
    /// Sum of real character degrees.
    DegreeSum(GroupArgs),
    /// Number of h with h^2 = 1, from the closed sums.
    Involutions(GroupArgs),
    /// Degree sums of the characters with indicator +1 and -1 in U(n,q).
    EpsSplit(GroupArgs),
    /// Principal value P_lambda(1, z, z^2, ...; t).
    HlValue {
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Count h with h^2 = 1 by enumerating the group.
    BruteInvolutions {
        #[arg(long)]
        group: Flavor,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Polynomial class counts as TSV.
    Census {
        #[arg(long, default_value = "gl")]
        flavor: Flavor,
        #[arg(long, default_value_t = 4)]
        dmax: usize,
        #[arg(long)]
        q: u64,
        /// Count by enumeration instead of the formulas.
        #[arg(long)]
        brute: bool,
    },
    /// Coefficients of a named generating function.
    Gf {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[command(flatten)]
        at: QArgs,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only these ids (repeatable).
    #[arg(long)]
    id: Vec<String>,
    /// Run only checks carrying this tag.
    #[arg(long)]
    tag: Option<String>,
    /// Write the JSON report array here.
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Comma-separated q values.
    #[arg(long, value_delimiter = ',', conflicts_with = "symbolic")]
    q: Option<Vec<u64>>,
    #[arg(long)]
    symbolic: bool,
    /// Print a TSV table instead of one line per check.
    #[arg(long)]
    tsv: bool,
    /// Omit timings so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Clone)]
struct QArgs {
    /// Numeric q; its parity decides the characteristic.
    #[arg(long, conflicts_with = "symbolic")]
    q: Option<u64>,
    /// Formal q (the default).
    #[arg(long)]
    symbolic: bool,
    /// Characteristic parity for symbolic q.
    #[arg(long, default_value = "even")]
    parity: Parity,
}

#[derive(Args)]
struct GroupArgs {
    /// gl, u, weylA, weylB or weylD.
    #[arg(long)]
    group: String,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    at: QArgs,
    /// Use the Hall-Littlewood partition sums instead of the products (u only).
    #[arg(long)]
    closed: bool,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Evaluates `f` at the requested q, printing the exact result.
macro_rules! at_q {
    ($qa:expr, |$qv:ident, $par:ident| $body:expr) => {{
        match $qa.q {
            Some(n) => {
                let $qv = ExactRational::from(n as i64);
                let $par = Parity::of(n);
                $body.map(|v| v.to_string())
            }
            None => {
                let $qv = q();
                let $par = $qa.parity;
                $body.map(|v| v.to_string())
            }
        }
    }};
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify(a) => verify(a),
        Cmd::DegreeSum(a) => {
            if let Ok(family) = a.group.parse::<WeylFamily>() {
                println!("{}", weyl_sums(family, a.n)?.degree_sum);
                return Ok(ExitCode::SUCCESS);
            }
            let flavor: Flavor = a.group.parse()?;
            let n = a.n;
            let out = match (flavor, a.closed) {
                (Flavor::Gl, false) => at_q!(a.at, |qv, par| gl_real_sum_gf(n, &qv, par)),
                (Flavor::U, false) => at_q!(a.at, |qv, par| u_real_sum_gf(n, &qv, par)),
                (Flavor::U, true) => at_q!(a.at, |qv, par| u_real_sum_closed(n, &qv, par).map(|c| c.total)),
                (Flavor::Gl, true) => return Err(Error::Precondition("--closed applies to u".into())),
            }?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Involutions(a) => {
            if let Ok(family) = a.group.parse::<WeylFamily>() {
                println!("{}", weyl_sums(family, a.n)?.involutions);
                return Ok(ExitCode::SUCCESS);
            }
            let flavor: Flavor = a.group.parse()?;
            let n = a.n;
            println!("{}", at_q!(a.at, |qv, par| involution_count(flavor, n, &qv, par))?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::EpsSplit(a) => {
            if a.group.parse::<Flavor>()? != Flavor::U {
                return Err(Error::Precondition("eps-split is defined for --group u".into()));
            }
            let n = a.n;
            let out = if a.closed {
                at_q!(a.at, |qv, par| u_real_sum_closed(n, &qv, par).map(|c| format!("+1\t{}\n-1\t{}", c.eps_plus, c.eps_minus)))
            } else {
                at_q!(a.at, |qv, par| u_eps_split_gf(n, &qv, par).map(|(p, m)| format!("+1\t{p}\n-1\t{m}")))
            }?;
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::HlValue { lambda, z, t } => {
            let lam: Partition = lambda.parse()?;
            let v = hl_value(&lam, &parse_rational_function(&z)?, &parse_rational_function(&t)?)?;
            println!("{}", v.value);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::BruteInvolutions { group, n, q } => {
            println!("{}", count_square_roots_of_identity(group, n, q)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Census { flavor, dmax, q, brute } => {
            print!("{}", census_tsv(flavor, dmax, q, brute)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gf { name, order, at } => {
            let name = name.parse()?;
            let s = at_q!(at, |qv, par| named_gf_at(name, par, &qv, order).map(|s| {
                s.coeffs().iter().enumerate().map(|(k, c)| format!("{k}\t{c}")).collect::<Vec<_>>().join("\n")
            }))?;
            println!("{s}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let overrides = ParamOverrides {
        nmax: a.nmax,
        order: a.order,
        q: match (a.q, a.symbolic) {
            (Some(qs), _) => Some(QSelect::List(qs)),
            (None, true) => Some(QSelect::Symbolic),
            (None, false) => None,
        },
        perturb_gamma: None,
    };
    let mut specs: Vec<_> = registry().iter().collect();
    if !a.id.is_empty() {
        for id in &a.id {
            qcharsum::verify::find(id)?;
        }
        specs.retain(|s| a.id.iter().any(|i| i == s.id));
    }
    if let Some(tag) = &a.tag {
        specs.retain(|s| s.has_tag(tag));
    }
    let mut summary = run_specs(&specs, Budget::from_env(), &overrides);
    if a.no_timing {
        summary.reports = summary.reports.into_iter().map(|r| r.without_timing()).collect();
    }
    if a.tsv {
        println!("{TSV_HEADER}");
        for r in &summary.reports {
            println!("{}", r.tsv_row());
        }
    } else {
        for r in &summary.reports {
            let label = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let mut line = format!("{label} {}", r.id);
            if !a.no_timing {
                line.push_str(&format!(" ({} ms)", r.millis));
            }
            if let Some(w) = &r.witness {
                line.push_str(&format!("\n    at {}\n    lhs {}\n    rhs {}", w.at, w.lhs, w.rhs));
            }
            if let Some(reason) = &r.reason {
                line.push_str(&format!(" [{reason}]"));
            }
            for n in &r.notes {
                line.push_str(&format!("\n    note: {n}"));
            }
            println!("{line}");
        }
        println!("{} passed, {} failed, {} skipped", summary.passed, summary.failed, summary.skipped);
    }
    if let Some(path) = a.json {
        let body = serde_json::to_string_pretty(&summary.reports).expect("reports serialize");
        std::fs::write(&path, body + "\n").map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    }
    Ok(if summary.ok() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
