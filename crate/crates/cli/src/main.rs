use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_residue::characters::{
    char_sum, gauss_sum, jacobi_gauss_relation_check, jacobi_sum, jacobi_sum_cubic, DlogTable, ExactSum,
};
use cubic_residue::representations::{solve_4p, solve_norm_form, solve_p_27, split_rational_prime};
use cubic_residue::solvability::{cube_table, cubic2_full, cubic2_oracle};
use cubic_residue::symbols::{cubic_symbol, gauss_four_case, quad_char_of_2};
use cubic_residue::verify::{verify_range, VerifyOptions, VerifyReport};
use cubic_residue::{arith, EisensteinInt, Error};
use serde_json::json;

mod report;

#[derive(Parser)]
#[command(name = "cubres", version, about = "Cubic and quadratic characters of 2 in exact arithmetic")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cubic residue symbol (α/π)₃.
    Symbol {
        #[arg(long, allow_hyphen_values = true)]
        alpha: EisensteinInt,
        #[arg(long, allow_hyphen_values = true)]
        pi: EisensteinInt,
    },
    /// Is x³ ≡ 2 (mod n) solvable?
    Cubic2 {
        n: u64,
        /// Only run the exhaustive root search; accepts composite moduli.
        #[arg(long)]
        oracle_only: bool,
    },
    /// Representations a² − ab + b², A² + 27B² (of 4p) and C² + 27D².
    Represent { p: u64 },
    /// Quadratic character of ±2.
    Quad2 { p: u64 },
    /// Character sum, Gauss sum and Jacobi sum of the order-k character mod p.
    Sums {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        order: u64,
    },
    /// Table of powers modulo n.
    Table {
        kind: TableKind,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Split p ≡ 1 (mod 3) as π·π̄ with π primary.
    Split { p: u64 },
    /// Norm a² − ab + b².
    Norm {
        #[arg(allow_hyphen_values = true)]
        x: EisensteinInt,
    },
    /// Primary associate.
    Primary {
        #[arg(allow_hyphen_values = true)]
        x: EisensteinInt,
    },
    /// Normalized gcd in Z[ω].
    Gcd {
        #[arg(allow_hyphen_values = true)]
        x: EisensteinInt,
        #[arg(allow_hyphen_values = true)]
        y: EisensteinInt,
    },
    /// Verify every prime up to --max and emit a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Cubes,
    Squares,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    max: u64,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Append informational records for published examples that conflict
    /// with exhaustive search.
    #[arg(long)]
    paper_examples: bool,
    /// Run randomized ring-property trials with this seed.
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Domain(String),
    Io(io::Error),
    /// The command ran but found discrepancies.
    Discrepancy,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Discrepancy) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("I/O error: {e}");
            ExitCode::from(3)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn route(v: Option<bool>) -> &'static str {
    v.map_or("n/a", yes_no)
}

fn run(cli: &Cli, out: &mut impl Write) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Symbol { alpha, pi } => {
            let v = cubic_symbol(*alpha, *pi)?;
            if json {
                writeln!(out, "{}", json!({"alpha": alpha, "pi": pi, "symbol": v}))?;
            } else {
                writeln!(out, "{v}")?;
            }
        }
        Command::Cubic2 { n, oracle_only } => cmd_cubic2(*n, *oracle_only, json, out)?,
        Command::Represent { p } => {
            let nf = solve_norm_form(*p)?;
            let four = solve_4p(*p)?;
            let p27 = solve_p_27(*p)?;
            if json {
                writeln!(out, "{}", json!({"p": p, "norm_form": nf, "four_p": four, "p27": p27}))?;
            } else {
                writeln!(out, "a² - ab + b² = {p}: ({}, {})", nf.a, nf.b)?;
                writeln!(out, "A² + 27B² = 4·{p}: ({}, {})", four.a, four.b)?;
                match p27 {
                    Some(r) => writeln!(out, "C² + 27D² = {p}: ({}, {})", r.c, r.d)?,
                    None => writeln!(out, "C² + 27D² = {p}: none")?,
                }
            }
        }
        Command::Quad2 { p } => {
            let case = gauss_four_case(*p)?;
            let formula = quad_char_of_2(*p)?;
            if json {
                writeln!(out, "{}", json!({"p": p, "case": case, "formula": formula}))?;
            } else {
                let word = |s: i8| if s == 1 { "residue" } else { "nonresidue" };
                writeln!(out, "(2/{p}) = {}: {} (case 8n+{})", case.plus2, word(case.plus2), case.residue_class)?;
                writeln!(out, "(-2/{p}) = {}: {}", case.minus2, word(case.minus2))?;
                writeln!(out, "(-1)^((p²-1)/8) = {formula}")?;
            }
        }
        Command::Sums { p, order } => cmd_sums(*p, *order, json, out)?,
        Command::Table { kind, modulus } => {
            let rows: Vec<(u64, u64)> = match kind {
                TableKind::Cubes => cube_table(*modulus)?,
                TableKind::Squares => {
                    if *modulus < 2 {
                        return Err(Error::ModulusTooSmall(*modulus).into());
                    }
                    (0..*modulus).map(|t| (t, arith::mul_mod(t, t, *modulus))).collect()
                }
            };
            let exp = match kind {
                TableKind::Cubes => 3,
                TableKind::Squares => 2,
            };
            if json {
                let rows: Vec<_> = rows.iter().map(|(t, v)| json!({"t": t, "value": v})).collect();
                writeln!(out, "{}", json!({"modulus": modulus, "power": exp, "rows": rows}))?;
            } else {
                for (t, v) in rows {
                    writeln!(out, "{t}^{exp} ≡ {v} (mod {modulus})")?;
                }
            }
        }
        Command::Split { p } => {
            let (pi, pi_bar) = split_rational_prime(*p)?;
            if json {
                writeln!(out, "{}", json!({"p": p, "pi": pi, "pi_bar": pi_bar}))?;
            } else {
                writeln!(out, "{p} = ({pi})({pi_bar})")?;
            }
        }
        Command::Norm { x } => {
            let n = x.norm()?.0;
            if json {
                writeln!(out, "{}", json!({"x": x, "norm": n}))?;
            } else {
                writeln!(out, "{n}")?;
            }
        }
        Command::Primary { x } => {
            let (u, y) = x.primary_associate()?;
            if json {
                writeln!(out, "{}", json!({"x": x, "unit": u, "primary": y}))?;
            } else {
                writeln!(out, "{y} = ({u})·({x})")?;
            }
        }
        Command::Gcd { x, y } => {
            let g = x.gcd(*y)?;
            if json {
                writeln!(out, "{}", json!({"x": x, "y": y, "gcd": g}))?;
            } else {
                writeln!(out, "{g}")?;
            }
        }
        Command::Verify(args) => cmd_verify(args, json, out)?,
    }
    Ok(())
}

fn cmd_cubic2(n: u64, oracle_only: bool, json: bool, out: &mut impl Write) -> CmdResult {
    if oracle_only || n < 2 {
        let root = cubic2_oracle(n)?;
        let composite = !arith::is_prime(n);
        if json {
            writeln!(out, "{}", json!({"n": n, "solvable": root.is_some(), "root": root, "composite": composite}))?;
        } else {
            match root {
                Some(x) => writeln!(out, "x^3 ≡ 2 (mod {n}): solvable, root {x}")?,
                None => writeln!(out, "x^3 ≡ 2 (mod {n}): unsolvable")?,
            }
            if composite {
                writeln!(out, "note: {n} is composite; only the exhaustive search applies")?;
            }
        }
        return Ok(());
    }
    if !arith::is_prime(n) {
        return Err(Failure::Domain(format!(
            "{n} is composite; the C² + 27D² criterion needs a prime modulus (use --oracle-only)"
        )));
    }
    let v = cubic2_full(n)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&v).expect("serializable"))?;
    } else {
        writeln!(out, "p = {n} ({})", v.class)?;
        match v.root {
            Some(x) => writeln!(out, "x^3 ≡ 2 (mod {n}): solvable, root {x}")?,
            None => writeln!(out, "x^3 ≡ 2 (mod {n}): unsolvable")?,
        }
        writeln!(out, "by representation C² + 27D²: {}", route(v.by_representation))?;
        writeln!(out, "by cubic symbol (2/π)₃: {}", route(v.by_symbol))?;
        writeln!(out, "by exhaustive search: {}", yes_no(v.by_oracle))?;
        writeln!(out, "routes agree: {}", yes_no(v.consistent()))?;
    }
    if v.consistent() {
        Ok(())
    } else {
        Err(Failure::Discrepancy)
    }
}

fn exact_sum_json(s: &ExactSum) -> serde_json::Value {
    match s {
        ExactSum::Integer(n) => json!(n),
        ExactSum::Eisenstein(x) => json!(x),
        ExactSum::Cyclotomic { order, coeffs } => json!({"order": order, "coeffs": coeffs}),
    }
}

fn cmd_sums(p: u64, order: u64, json: bool, out: &mut impl Write) -> CmdResult {
    let table = DlogTable::new(p)?;
    let chi = table.character(order)?;
    let sum = char_sum(&chi);
    let g = gauss_sum(&chi, 1);
    let square = chi.product(&chi)?;
    let jacobi = (!chi.is_trivial() && !square.is_trivial()).then(|| jacobi_sum(&chi, &chi)).transpose()?;
    let exact_j = if order == 3 { Some(jacobi_sum_cubic(&chi, &chi)?) } else { None };
    let relation = (!chi.is_trivial() && !square.is_trivial())
        .then(|| jacobi_gauss_relation_check(&chi, &chi))
        .transpose()?;
    if json {
        writeln!(
            out,
            "{}",
            json!({
                "p": p,
                "order": order,
                "generator": table.generator(),
                "char_sum": exact_sum_json(&sum),
                "gauss_sum": {"re": g.re, "im": g.im},
                "gauss_abs_sq": g.norm_sqr(),
                "jacobi": jacobi.map(|j| json!({"re": j.re, "im": j.im})),
                "jacobi_exact": exact_j,
                "jacobi_norm": exact_j.map(|j| j.norm().map(|n| n.0).ok()),
                "relation_holds": relation,
            })
        )?;
    } else {
        writeln!(out, "p = {p}, order {order}, generator {}", table.generator())?;
        let sum = match &sum {
            ExactSum::Integer(n) => n.to_string(),
            ExactSum::Eisenstein(x) => x.to_string(),
            ExactSum::Cyclotomic { order, coeffs } => format!("{coeffs:?} in powers of ζ_{order}"),
        };
        writeln!(out, "Σ χ(t) = {sum}")?;
        writeln!(out, "g(χ) = {:.9} {:+.9}i, |g(χ)|² = {:.9}", g.re, g.im, g.norm_sqr())?;
        match (jacobi, exact_j) {
            (_, Some(j)) => writeln!(out, "J(χ,χ) = {j}, norm {}", j.norm()?.0)?,
            (Some(j), None) => writeln!(out, "J(χ,χ) ≈ {:.9} {:+.9}i, |J|² = {:.9}", j.re, j.im, j.norm_sqr())?,
            (None, None) => writeln!(out, "J(χ,χ): n/a (χ or χ² trivial)")?,
        }
        match relation {
            Some(r) => writeln!(out, "J = g(χ)²/g(χ²) and |J| = √p: {r}")?,
            None => writeln!(out, "J = g(χ)²/g(χ²): n/a")?,
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, json: bool, out: &mut impl Write) -> CmdResult {
    let report = verify_range(
        args.max,
        VerifyOptions {
            jobs: args.jobs,
            paper_examples: args.paper_examples,
            seed: args.seed,
        },
    )?;
    match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write_report(&report, args.csv, json, &mut file)?;
            file.flush()?;
        }
        None => write_report(&report, args.csv, json, out)?,
    }
    if report.has_failures() {
        eprintln!("verification failed on {} prime(s)", report.summary.failed_primes);
        return Err(Failure::Discrepancy);
    }
    Ok(())
}

fn write_report(report: &VerifyReport, csv: bool, json: bool, out: &mut impl Write) -> io::Result<()> {
    if csv {
        report::write_csv(report, out)
    } else if json {
        report::write_json_lines(report, out)
    } else {
        report::write_text(report, out)
    }
}
