//! Command-line front end: alcove listings, S-matrices, verdicts and
//! rank tables, with exact values and numeric companions.

use category::{
    integer_weight_subcategory, BuildOptions, CategoryBuild, CategoryError, Expected,
    PreModularData,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclo::{numeric_value, CycloNumber, QSpec};
use lie_core::{build_root_system, enumerate_alcove, LieError, LieType, Weight};
use serde_json::{json, Value};

mod exit_codes {
    pub const ARGUMENT: i32 = 2;
    pub const LEVEL_OR_SCOPE: i32 = 3;
    pub const CAPACITY: i32 = 4;
    pub const INTERNAL: i32 = 5;
}

#[derive(Parser)]
#[command(
    name = "qcat",
    about = "Exact pre-modular category data from quantum groups at roots of unity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Clone)]
struct Common {
    /// Lie type, e.g. A1, B2, G2
    lie_type: String,
    /// Level (an integer at or above the minimal non-degenerate one)
    level: String,
    /// Exponent z in q = e^{z pi i / l}
    #[arg(long, default_value_t = 1)]
    z: i64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Digits for the numeric companions
    #[arg(long, default_value_t = 12)]
    digits: u32,
    /// Allow expensive types (E family, classical rank above 4)
    #[arg(long)]
    large: bool,
    /// Cap for explicit Weyl-group enumeration
    #[arg(long)]
    weyl_limit: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// List the alcove labels with exact dimensions and twists
    Alcove(Common),
    /// Emit the S-matrix (optionally of the integer-weight subcategory)
    Smatrix {
        #[command(flatten)]
        common: Common,
        /// Restrict to the integer-weight subcategory
        #[arg(long)]
        sub: bool,
    },
    /// Modularity and unitarity verdicts, cross-examined against the
    /// published classification
    Verdict(Common),
    /// Rank of the label set, from the partition generating function;
    /// LEVEL may be a range a..b
    Rank(Common),
    /// Cross-check suite for one specialization: two-route S-matrix
    /// equality, Verlinde round trip, verdict concordance
    Check(Common),
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.code
        }
    };
    std::process::exit(code);
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        let code = match &e {
            LieError::Level { .. } => exit_codes::LEVEL_OR_SCOPE,
            LieError::Capacity { .. } => exit_codes::CAPACITY,
            _ => exit_codes::ARGUMENT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CategoryError> for Failure {
    fn from(e: CategoryError) -> Self {
        let code = match &e {
            CategoryError::Lie(le) => return Failure::from(le.clone()),
            CategoryError::Cyclo(_) | CategoryError::Label(_) | CategoryError::Modularity(_) => {
                exit_codes::ARGUMENT
            }
            CategoryError::Scope(_) | CategoryError::DegenerateSpec(_) => {
                exit_codes::LEVEL_OR_SCOPE
            }
            CategoryError::Internal(_) => exit_codes::INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<rank_gen::RankError> for Failure {
    fn from(e: rank_gen::RankError) -> Self {
        match e {
            rank_gen::RankError::Lie(le) => Failure::from(le),
            other => Failure::new(exit_codes::ARGUMENT, other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Alcove(c) => cmd_alcove(&c),
        Command::Smatrix { common, sub } => cmd_smatrix(&common, sub),
        Command::Verdict(c) => cmd_verdict(&c),
        Command::Rank(c) => cmd_rank(&c),
        Command::Check(c) => cmd_check(&c),
    }
}

fn parse_type(s: &str) -> Result<LieType, Failure> {
    LieType::parse(s).map_err(Failure::from)
}

fn parse_level(s: &str) -> Result<i64, Failure> {
    s.parse()
        .map_err(|_| Failure::new(exit_codes::ARGUMENT, format!("invalid level `{s}`")))
}

fn build_options(c: &Common) -> BuildOptions {
    BuildOptions {
        allow_large: c.large,
        weyl_limit: c.weyl_limit.unwrap_or(lie_core::DEFAULT_WEYL_LIMIT),
    }
}

fn cyclo_json(x: &CycloNumber, digits: u32) -> Value {
    let (re, im) = numeric_value(x, digits);
    json!({
        "conductor": x.conductor(),
        "coeffs": x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "approx": [re, im],
    })
}

fn approx_string(x: &CycloNumber, digits: u32) -> String {
    let (re, im) = numeric_value(x, digits);
    let d = digits as usize;
    if im.abs() < 10f64.powi(-(digits as i32)) {
        format!("{re:.d$}")
    } else if im >= 0.0 {
        format!("{re:.d$}+{im:.d$}i")
    } else {
        format!("{re:.d$}{im:.d$}i")
    }
}

fn label_strings(t: LieType, fund: &[i64]) -> (String, Option<String>) {
    let w = Weight::from_ints(fund);
    let fund_str = format!(
        "({})",
        fund.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    );
    let eps = lie_core::eps::to_epsilon(t, &w).map(|eps| {
        format!(
            "({})",
            eps.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        )
    });
    (fund_str, eps)
}

fn spec_json(t: LieType, level: i64, spec: &QSpec, m: i64) -> Value {
    json!({
        "type": t.to_string(),
        "level": level,
        "z": spec.z,
        "d": spec.d,
        "m": m,
        "conductor": spec.conductor,
    })
}

// ------------------------------------------------------------------ alcove

fn cmd_alcove(c: &Common) -> Result<(), Failure> {
    let t = parse_type(&c.lie_type)?;
    let level = parse_level(&c.level)?;
    let rs = build_root_system(t);
    let alcove = enumerate_alcove(&rs, level)?;
    let spec = QSpec::new(level, c.z, rs.d)
        .map_err(|e| Failure::new(exit_codes::ARGUMENT, e.to_string()))?;
    let dims = category::dims::qdims_batch(&rs, &spec, &alcove).map_err(Failure::from)?;
    let rows: Vec<(Vec<i64>, CycloNumber, CycloNumber)> = alcove
        .labels
        .iter()
        .zip(dims)
        .map(|(lam, d)| {
            let e = category::dims::twist_exponent(&rs, &spec, lam);
            let th = CycloNumber::root_of_unity(spec.conductor, e);
            (lam.clone(), d, th)
        })
        .collect();

    match c.format {
        Format::Json => {
            let labels: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(i, (lam, _, _))| {
                    let (fund, eps) = label_strings(t, lam);
                    json!({
                        "index": i,
                        "fund": lam,
                        "fund_str": fund,
                        "eps": eps,
                        "grade": alcove.grades[i],
                    })
                })
                .collect();
            let out = json!({
                "spec": spec_json(t, level, &spec, rs.m),
                "labels": labels,
                "dims": rows.iter().map(|(_, d, _)| cyclo_json(d, c.digits)).collect::<Vec<_>>(),
                "twists": rows.iter().map(|(_, _, th)| cyclo_json(th, c.digits)).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("index,fund,eps,grade,dim,dim_approx,twist,twist_approx");
            for (i, (lam, d, th)) in rows.iter().enumerate() {
                let (fund, eps) = label_strings(t, lam);
                println!(
                    "{i},\"{fund}\",\"{}\",{},\"{d}\",{},\"{th}\",{}",
                    eps.unwrap_or_default(),
                    alcove.grades[i],
                    approx_string(d, c.digits),
                    approx_string(th, c.digits),
                );
            }
        }
        Format::Table => {
            println!(
                "# {t} level {level} z {}  ({} labels, conductor {})",
                spec.z,
                rows.len(),
                spec.conductor
            );
            for (i, (lam, d, th)) in rows.iter().enumerate() {
                let (fund, eps) = label_strings(t, lam);
                let label = match eps {
                    Some(e) => format!("{fund} = {e}"),
                    None => fund,
                };
                println!(
                    "{i:>4}  {label:<22} dim {:<34} twist {}",
                    format!("{} ~ {}", d, approx_string(d, c.digits)),
                    format!("{} ~ {}", th, approx_string(th, c.digits)),
                );
            }
        }
    }
    Ok(())
}

// ----------------------------------------------------------------- smatrix

fn build_data(c: &Common, sub: bool) -> Result<PreModularData, Failure> {
    let t = parse_type(&c.lie_type)?;
    let level = parse_level(&c.level)?;
    let ctx = CategoryBuild::new(t, level, &build_options(c))?;
    let data = ctx.with_z(c.z)?;
    if sub {
        let rs = build_root_system(t);
        Ok(integer_weight_subcategory(&rs, &data)?)
    } else {
        Ok(data)
    }
}

fn cmd_smatrix(c: &Common, sub: bool) -> Result<(), Failure> {
    let data = build_data(c, sub)?;
    let t = data.lie_type;
    let n = data.rank();
    match c.format {
        Format::Json => {
            let s: Vec<Vec<Value>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| cyclo_json(&data.s.entry_cyclo(i, j), c.digits))
                        .collect()
                })
                .collect();
            let fusion: Vec<Value> = (0..n)
                .flat_map(|i| {
                    let data = &data;
                    (0..n).flat_map(move |j| {
                        data.fusion
                            .row(i, j)
                            .iter()
                            .map(move |&(k, v)| json!([i, j, k, v]))
                    })
                })
                .collect();
            let out = json!({
                "spec": spec_json(t, data.level, &data.spec, data.m),
                "subcategory": sub,
                "labels": data.labels.iter().enumerate().map(|(i, lam)| {
                    let (fund, eps) = label_strings(t, lam);
                    json!({"index": i, "fund": lam, "fund_str": fund, "eps": eps})
                }).collect::<Vec<_>>(),
                "dims": data.dims.iter().map(|d| cyclo_json(d, c.digits)).collect::<Vec<_>>(),
                "twists": data.twists.iter().map(|th| cyclo_json(th, c.digits)).collect::<Vec<_>>(),
                "fusion": fusion,
                "S": s,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| approx_string(&data.s.entry_cyclo(i, j), c.digits))
                    .collect();
                println!("{}", row.join(","));
            }
        }
        Format::Table => {
            println!(
                "# S-matrix of {t} level {} z {}{} ({n} x {n}, conductor {})",
                data.level,
                data.spec.z,
                if sub { " [integer-weight subcategory]" } else { "" },
                data.spec.conductor
            );
            for (i, lam) in data.labels.iter().enumerate() {
                let (fund, eps) = label_strings(t, lam);
                match eps {
                    Some(e) => println!("# label {i}: {fund} = {e}"),
                    None => println!("# label {i}: {fund}"),
                }
            }
            for i in 0..n {
                let row: Vec<String> = (0..n)
                    .map(|j| approx_string(&data.s.entry_cyclo(i, j), c.digits))
                    .collect();
                println!("[{}]", row.join(", "));
            }
        }
    }
    Ok(())
}

// ----------------------------------------------------------------- verdict

fn cmd_verdict(c: &Common) -> Result<(), Failure> {
    let data = build_data(c, false)?;
    let t = data.lie_type;
    let verdict = data.modularity_check()?;
    let expected = data.expected_modularity();
    let unitary = data.unitarity_report();

    let concordant = match expected {
        Expected::Modular => verdict.is_modular,
        Expected::NotModular => !verdict.is_modular,
        Expected::Unknown => true,
    };

    let obstruction_labels: Vec<String> = verdict
        .obstructions
        .iter()
        .map(|&i| {
            let (fund, eps) = label_strings(t, &data.labels[i]);
            eps.unwrap_or(fund)
        })
        .collect();

    match c.format {
        Format::Json => {
            let out = json!({
                "spec": spec_json(t, data.level, &data.spec, data.m),
                "verdicts": {
                    "modular": verdict.is_modular,
                    "det_nonzero": verdict.det_nonzero,
                    "obstructions": verdict.obstructions,
                    "obstruction_labels": obstruction_labels,
                    "expected": expected.to_string(),
                    "concordant": concordant,
                    "unitarity": {
                        "known_unitary": unitary.known_unitary,
                        "known_not_unitarizable": unitary.known_not_unitarizable,
                        "dims_positive": unitary.dims_positive,
                    },
                }
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("type,level,z,modular,det_nonzero,obstructions,expected,known_unitary,known_not_unitarizable,dims_positive");
            println!(
                "{t},{},{},{},{},\"{}\",{},{},{},{}",
                data.level,
                data.spec.z,
                verdict.is_modular,
                verdict.det_nonzero,
                obstruction_labels.join(" "),
                expected,
                unitary.known_unitary,
                unitary.known_not_unitarizable,
                unitary.dims_positive,
            );
        }
        Format::Table => {
            println!("# verdict for {t} level {} z {}", data.level, data.spec.z);
            println!(
                "modular: {} (obstructions: {})",
                verdict.is_modular,
                if obstruction_labels.len() == 1 {
                    "none beyond the unit".to_string()
                } else {
                    obstruction_labels[1..].join(", ")
                }
            );
            println!("det(S) nonzero: {}", verdict.det_nonzero);
            println!("expected from the classification: {expected}");
            println!(
                "unitarity: known_unitary {} / known_not_unitarizable {} / dims_positive {}",
                unitary.known_unitary, unitary.known_not_unitarizable, unitary.dims_positive
            );
        }
    }

    if !concordant {
        return Err(Failure::new(
            exit_codes::INTERNAL,
            format!(
                "computed verdict (modular = {}) contradicts the classification ({expected})",
                verdict.is_modular
            ),
        ));
    }
    Ok(())
}

// ------------------------------------------------------------------- check

fn cmd_check(c: &Common) -> Result<(), Failure> {
    let t = parse_type(&c.lie_type)?;
    let level = parse_level(&c.level)?;
    let opts = build_options(c);
    let ctx = CategoryBuild::new(t, level, &opts)?;
    let data = ctx.with_z(c.z)?;
    let mut all_ok = true;
    let mut report = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "[PASS]" } else { "[FAIL]" });
        all_ok &= ok;
    };

    data.check_structure().map_err(Failure::from)?;
    report("structure: dims/twists/S symmetry and duality identities", true);

    let route = category::weyl_route_matches(&ctx.rs, &data.spec, &ctx.alcove, &data.s, opts.weyl_limit)
        .map_err(Failure::from)?;
    report("two-route S-matrix equality (fusion route vs Weyl sums)", route);

    let verdict = data.modularity_check()?;
    let expected = data.expected_modularity();
    let concordant = match expected {
        Expected::Modular => verdict.is_modular,
        Expected::NotModular => !verdict.is_modular,
        Expected::Unknown => true,
    };
    report(
        &format!(
            "verdict concordance (computed {}, classification {expected})",
            if verdict.is_modular { "modular" } else { "not-modular" }
        ),
        concordant,
    );

    if verdict.is_modular {
        let ok = category::verlinde_round_trip(&data.s, &data.dims, &data.dual, &data.fusion)
            .map_err(Failure::from)?;
        report("Verlinde round trip recovers the fusion tensor", ok);
    } else {
        println!("[SKIP] Verlinde round trip (category is not modular)");
    }

    if all_ok {
        Ok(())
    } else {
        Err(Failure::new(
            exit_codes::INTERNAL,
            "cross-check suite found a discrepancy",
        ))
    }
}

// -------------------------------------------------------------------- rank

fn cmd_rank(c: &Common) -> Result<(), Failure> {
    let t = parse_type(&c.lie_type)?;
    let (from, to) = match c.level.split_once("..") {
        Some((a, b)) => (parse_level(a)?, parse_level(b)?),
        None => {
            let l = parse_level(&c.level)?;
            (l, l)
        }
    };
    if from > to {
        return Err(Failure::new(
            exit_codes::ARGUMENT,
            format!("empty level range {from}..{to}"),
        ));
    }
    let single = from == to;
    let mut rows: Vec<(i64, Option<u128>)> = Vec::new();
    for level in from..=to {
        match rank_gen::rank_by_gf(t, level) {
            Ok(n) => rows.push((level, Some(n))),
            Err(e) if single => return Err(Failure::from(e)),
            Err(_) => rows.push((level, None)),
        }
    }
    match c.format {
        Format::Json => {
            let out = json!({
                "type": t.to_string(),
                "ranks": rows.iter().map(|(l, n)| json!({
                    "level": l,
                    "rank": n.map(|v| v.to_string()),
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("level,rank");
            for (l, n) in &rows {
                match n {
                    Some(v) => println!("{l},{v}"),
                    None => println!("{l},"),
                }
            }
        }
        Format::Table => {
            if single {
                let (_, n) = rows[0];
                println!("{}", n.unwrap());
            } else {
                println!("# rank of {t} by level");
                for (l, n) in &rows {
                    match n {
                        Some(v) => println!("{l:>6}  {v}"),
                        None => println!("{l:>6}  (below the minimal level)"),
                    }
                }
            }
        }
    }
    Ok(())
}
