//! `poplat`: enumerate lattices, apply Pop, list images and preimages, and
//! compare brute-force Pop polynomials with their closed forms.

mod lattices;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poplat_core::formulas::{self, Formula};
use poplat_core::lattice::{BuildOptions, PopDirection, DEFAULT_MAX_ELEMENTS};
use poplat_core::series::{self, SeriesName};
use poplat_core::weak::census_coefficient;
use poplat_core::Error;
use serde_json::json;

use lattices::{pop_one, preimage_one, AnyLattice, LatticeName};
use report::{monomial, CaseRecord, RunReport};

/// Pop-stack sorting on weak orders, Tamari lattices and root poset ideals.
///
/// Sizes: weak-a takes --n for permutations of 1..=n; weak-b, tam-b and j-b
/// take the rank n; tam-a takes n for Tam(A_n), whose elements are
/// permutations of 1..=n+1; j-a takes --semilength m for Dyck paths with m
/// rises. The J(A) polynomial of semi-length m is the closed form indexed
/// by m - 2.
#[derive(Parser, Debug)]
#[command(name = "poplat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Skip the meet/join validation of built lattices
    #[arg(long, global = true)]
    no_validate: bool,
    /// Report wall-clock times on stderr
    #[arg(long, global = true)]
    timings: bool,
    /// Largest number of lattice elements to build
    #[arg(long, global = true, env = "POPLAT_MAX_ELEMENTS", default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct Size {
    /// Rank or length parameter
    #[arg(long)]
    n: Option<usize>,
    /// Semi-length of the Dyck paths (j-a only)
    #[arg(long)]
    semilength: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Down,
    Up,
}

impl From<Direction> for PopDirection {
    fn from(d: Direction) -> Self {
        match d {
            Direction::Down => PopDirection::Down,
            Direction::Up => PopDirection::Up,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// [q^(n-1)] of Pop(Weak(B_n)) is 3^n - 2n - 1
    Weak,
    /// Pop(Tam(A_n)) closed form
    TamA,
    /// Pop(Tam(B_n)) closed form
    TamB,
    /// Pop on J(A) of semi-length n+2
    JayA,
    /// Pop on J(B) of rank n
    JayB,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a lattice and report its size
    Enumerate {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        #[command(flatten)]
        size: Size,
        /// Print every element
        #[arg(long)]
        list: bool,
    },
    /// Apply Pop to a single element (Pop-up on the path lattices)
    Pop {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        /// Element as comma-separated entries or an r/f path
        #[arg(long)]
        x: String,
    },
    /// Brute-force Pop polynomial of a built lattice
    PopPoly {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        #[command(flatten)]
        size: Size,
        /// Defaults to down, or up for j-a and j-b
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Pop image of a built lattice
    Image {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum)]
        direction: Option<Direction>,
        #[arg(long)]
        list: bool,
        /// Compare the image with its characterization (for weak-b: check
        /// the necessary run condition)
        #[arg(long)]
        check_predicate: bool,
    },
    /// Canonical Pop preimage of an image element (tam-a, tam-b)
    Preimage {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        #[arg(long)]
        x: String,
    },
    /// Image elements of Weak(B_n) with n-1 upper covers, by first entry
    Census {
        #[arg(long, value_enum)]
        lattice: LatticeName,
        #[arg(long)]
        n: usize,
        /// Accepted for compatibility; the census is always split by first entry
        #[arg(long)]
        by_first_entry: bool,
        /// Allow n = 5
        #[arg(long)]
        extended: bool,
    },
    /// Evaluate a closed-form polynomial
    Formula {
        /// weak-b, tam-a, tam-b, jay-a, jay-b or jay-b-printed
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
    },
    /// Compare brute-force Pop polynomials with the closed forms for n = 1..=max-n
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        max_n: usize,
        /// For jay-b: compare with the formula as displayed, without the j = 0 term
        #[arg(long)]
        as_printed: bool,
    },
    /// Solve a generating function and cross-check its coefficients
    Series {
        /// G, F, H, I, J, M, N or K; repeat for several, default all
        #[arg(long)]
        check: Vec<String>,
        #[arg(long, default_value_t = series::DEFAULT_ORDER)]
        order: usize,
    },
}

/// Failure modes that map to exit codes.
enum Failure {
    Mismatch,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    json: bool,
    timings: bool,
    options: BuildOptions,
}

impl Ctx {
    fn time<T>(&self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let v = f();
        if self.timings {
            eprintln!("{label}: {:.3?}", start.elapsed());
        }
        v
    }

    fn emit(&self, value: serde_json::Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
        } else {
            println!("{}", text());
        }
    }
}

fn size_of(lattice: LatticeName, size: Size) -> Result<usize, Failure> {
    match (lattice, size.n, size.semilength) {
        (LatticeName::JA, _, Some(m)) => Ok(m),
        (LatticeName::JA, _, None) => Err(Failure::Usage("j-a needs --semilength".into())),
        (_, Some(n), None) => Ok(n),
        (_, _, Some(_)) => Err(Failure::Usage("--semilength applies to j-a only".into())),
        (_, None, None) => Err(Failure::Usage(format!("{} needs --n", lattice.as_str()))),
    }
}

fn build(ctx: &Ctx, lattice: LatticeName, n: usize) -> Result<AnyLattice, Failure> {
    Ok(ctx.time(&format!("build {} {n}", lattice.as_str()), || AnyLattice::build(lattice, n, &ctx.options))?)
}

fn enumerate(ctx: &Ctx, lattice: LatticeName, size: Size, list: bool) -> Outcome {
    let n = size_of(lattice, size)?;
    let l = build(ctx, lattice, n)?;
    let mut value = json!({
        "lattice": lattice.as_str(),
        "n": n,
        "elements": l.len(),
        "covers": l.cover_count(),
    });
    if list {
        value["hasse"] = l.to_json();
    }
    ctx.emit(value, || {
        let mut s = format!("{} n={n}: {} elements, {} covers", lattice.as_str(), l.len(), l.cover_count());
        if list {
            for e in l.elements() {
                s.push('\n');
                s.push_str(&e);
            }
        }
        s
    });
    Ok(())
}

fn pop_poly(ctx: &Ctx, lattice: LatticeName, size: Size, direction: Option<Direction>) -> Outcome {
    let n = size_of(lattice, size)?;
    let d = direction.map_or(lattice.natural_direction(), Into::into);
    let l = build(ctx, lattice, n)?;
    let p = ctx.time("pop polynomial", || l.pop_polynomial(d));
    ctx.emit(json!({ "lattice": lattice.as_str(), "n": n, "direction": direction_name(d), "polynomial": p }), || {
        p.to_string()
    });
    Ok(())
}

fn direction_name(d: PopDirection) -> &'static str {
    match d {
        PopDirection::Down => "down",
        PopDirection::Up => "up",
    }
}

fn image(
    ctx: &Ctx,
    lattice: LatticeName,
    size: Size,
    direction: Option<Direction>,
    list: bool,
    check: bool,
) -> Outcome {
    let n = size_of(lattice, size)?;
    let d = direction.map_or(lattice.natural_direction(), Into::into);
    let l = build(ctx, lattice, n)?;
    let image = ctx.time("image", || l.image(d));
    let mut value = json!({ "lattice": lattice.as_str(), "n": n, "direction": direction_name(d), "size": image.len() });
    let mut failed = false;
    let mut lines = vec![format!("{} n={n}: {} image elements", lattice.as_str(), image.len())];
    if list {
        value["image"] = json!(image);
        lines.extend(image.iter().cloned());
    }
    if check {
        let (kind, bad) = match (l.predicate_mismatches(d), l.run_condition_violations()) {
            (Some(bad), _) => ("characterization", bad),
            (None, Some(bad)) if d == PopDirection::Down => ("necessary condition", bad),
            _ => {
                return Err(Failure::Usage(format!("no image predicate for {} with this direction", lattice.as_str())))
            }
        };
        failed = !bad.is_empty();
        value["predicate"] = json!({ "kind": kind, "holds": !failed, "counterexamples": bad });
        lines.push(if failed { format!("{kind} fails at: {}", bad.join(" ")) } else { format!("{kind} holds") });
    }
    ctx.emit(value, || lines.join("\n"));
    if failed {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn census(ctx: &Ctx, lattice: LatticeName, n: usize, extended: bool) -> Outcome {
    if lattice != LatticeName::WeakB {
        return Err(Failure::Usage("census is defined for weak-b only".into()));
    }
    let got = ctx.time("census", || census_coefficient(n, extended))?;
    let want = formulas::weak_b_census_prediction(n);
    let rows: Vec<_> = got
        .iter()
        .map(|(i, c)| {
            let predicted = want[i].clone();
            json!({ "first_entry": i, "count": c, "predicted": predicted, "match": predicted == (*c).into() })
        })
        .collect();
    let total: u64 = got.values().sum();
    let ok = rows.iter().all(|r| r["match"] == true);
    ctx.emit(
        json!({ "lattice": "weak-b", "n": n, "census": rows, "total": total, "expected_total": formulas::weak_b_coefficient(n) }),
        || {
            let mut s: Vec<String> = got.iter().map(|(i, c)| format!("x1={i}: {c} (predicted {})", want[i])).collect();
            s.push(format!("total {total} (3^n - 2n - 1 = {})", formulas::weak_b_coefficient(n)));
            s.join("\n")
        },
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn verify_case(ctx: &Ctx, theorem: Theorem, n: usize, as_printed: bool) -> Result<CaseRecord, Failure> {
    let label = format!("verify {theorem:?} n={n}");
    Ok(match theorem {
        Theorem::Weak => {
            let l = ctx.time(&label, || AnyLattice::build(LatticeName::WeakB, n, &ctx.options))?;
            let full = l.pop_polynomial(PopDirection::Down);
            let degree = n.checked_sub(1).ok_or_else(|| Failure::Usage("n must be at least 1".into()))? as u32;
            let mut rec = CaseRecord::new(
                "weak-b",
                n,
                monomial(degree, full.coefficient(degree)),
                monomial(degree, formulas::weak_b_coefficient(n)),
            );
            rec.pop_polynomial = Some(full);
            rec
        }
        Theorem::TamA => {
            let l = ctx.time(&label, || AnyLattice::build(LatticeName::TamA, n, &ctx.options))?;
            CaseRecord::new("tam-a", n, l.pop_polynomial(PopDirection::Down), formulas::tam_a_polynomial(n))
        }
        Theorem::TamB => {
            let l = ctx.time(&label, || AnyLattice::build(LatticeName::TamB, n, &ctx.options))?;
            CaseRecord::new("tam-b", n, l.pop_polynomial(PopDirection::Down), formulas::tam_b_polynomial(n))
        }
        Theorem::JayA => {
            let l = ctx.time(&label, || AnyLattice::build(LatticeName::JA, n + 2, &ctx.options))?;
            CaseRecord::new("j-a", n, l.pop_polynomial(PopDirection::Up), formulas::jayan_polynomial(n)?)
        }
        Theorem::JayB => {
            let l = ctx.time(&label, || AnyLattice::build(LatticeName::JB, n, &ctx.options))?;
            CaseRecord::new("j-b", n, l.pop_polynomial(PopDirection::Up), formulas::jaybn_polynomial(n, !as_printed))
        }
    })
}

fn verify(ctx: &Ctx, theorem: Theorem, max_n: usize, as_printed: bool, command: Vec<String>) -> Outcome {
    if as_printed && theorem != Theorem::JayB {
        return Err(Failure::Usage("--as-printed applies to jay-b only".into()));
    }
    let start = if theorem == Theorem::JayA { 0 } else { 1 };
    let cases = (start..=max_n).map(|n| verify_case(ctx, theorem, n, as_printed)).collect::<Result<Vec<_>, _>>()?;
    let report = RunReport::new(command, cases);
    if ctx.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        for c in &report.cases {
            let delta = c.delta.as_ref().map(|d| format!("  delta {d}")).unwrap_or_default();
            println!("{} n={}: {:?}  computed {}  formula {}{delta}", c.lattice, c.n, c.verdict, c.computed, c.formula);
        }
        println!("{}/{} match", report.totals.matched, report.totals.cases);
    }
    if report.all_match() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run_series(ctx: &Ctx, names: &[String], order: usize) -> Outcome {
    let names: Vec<SeriesName> = if names.is_empty() {
        SeriesName::ALL.to_vec()
    } else {
        names.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(ctx.time(&format!("series {name}"), || series::lab::run(name, order))?);
    }
    ctx.emit(json!(reports), || {
        let mut out = Vec::new();
        for r in &reports {
            out.push(format!("{} to order {}", r.series, r.order));
            for (n, row) in r.rows.iter().enumerate() {
                out.push(format!("  x^{n}: {}", row.to_string().replace('q', "y")));
            }
            for c in &r.checks {
                let tag = if c.passed { "ok" } else { "FAILED" };
                let detail = c.detail.as_ref().map(|d| format!(" ({d})")).unwrap_or_default();
                out.push(format!("  check {}: {tag}{detail}", c.name));
            }
        }
        out.join("\n")
    });
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli, command_echo: Vec<String>) -> Outcome {
    let ctx = Ctx {
        json: cli.global.json,
        timings: cli.global.timings,
        options: BuildOptions { validate: !cli.global.no_validate, max_elements: cli.global.max_elements },
    };
    match cli.command {
        Command::Enumerate { lattice, size, list } => enumerate(&ctx, lattice, size, list),
        Command::Pop { lattice, x } => {
            let y = pop_one(lattice, &x)?;
            ctx.emit(json!({ "lattice": lattice.as_str(), "input": x, "output": y }), || y.clone());
            Ok(())
        }
        Command::PopPoly { lattice, size, direction } => pop_poly(&ctx, lattice, size, direction),
        Command::Image { lattice, size, direction, list, check_predicate } => {
            image(&ctx, lattice, size, direction, list, check_predicate)
        }
        Command::Preimage { lattice, x } => {
            let y = preimage_one(lattice, &x)?;
            ctx.emit(json!({ "lattice": lattice.as_str(), "input": x, "preimage": y }), || y.clone());
            Ok(())
        }
        Command::Census { lattice, n, extended, .. } => census(&ctx, lattice, n, extended),
        Command::Formula { name, n } => {
            let f: Formula = name.parse()?;
            let p = f.evaluate(n)?;
            ctx.emit(json!({ "name": f.name(), "n": n, "polynomial": p }), || p.to_string());
            Ok(())
        }
        Command::Verify { theorem, max_n, as_printed } => verify(&ctx, theorem, max_n, as_printed, command_echo),
        Command::Series { check, order } => run_series(&ctx, &check, order),
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(cli, echo) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
