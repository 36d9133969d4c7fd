//! `ellimod`: command-line front end. Every subcommand wraps one library
//! operation and prints a JSON envelope `{"input", "result", "provenance"}`
//! on standard output. Exit codes: 0 success, 2 for inputs the library
//! rejects (the envelope is replaced by `{"error": {...}}`), 1 for usage
//! errors. Table-shaped results can be rendered with `--markdown` instead.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num::BigUint;
use serde_json::{json, Value};

use ellimod_core::moduli::ParabolicRule;
use ellimod_core::{
    cover_index, family_table, n_p, parabolic_data, regular_adjoint_blocks, sl_class_from_mu,
    sl_classify, sl_spectral_fiber, so_validate, sp_class_from_mu, sp_spectral_fiber, sp_validate,
    split_adjoint, stratum_dim, verify, wp_space, BundleDecomp, ELambdaPoint, Error, GroupTag,
    Kind, RootSystem, DEFAULT_ORBIT_BOUND,
};

#[derive(Parser)]
#[command(name = "ellimod", version, about = "Moduli of semistable principal bundles over an elliptic curve", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weights of the weighted projective space of bundles.
    Weights {
        #[arg(long)]
        group: String,
        /// Render as a markdown table instead of JSON.
        #[arg(long)]
        markdown: bool,
    },
    /// Exponents, invariant degrees and the group-theoretic constants.
    Casimir {
        #[arg(long)]
        group: String,
    },
    /// Dimension of the locus whose coordinates of weight not divisible by d vanish.
    Strata {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: i64,
    },
    /// Canonical (least) representative of the Weyl orbit of a point.
    Canon {
        #[arg(long)]
        group: String,
        /// Point of E tensor the coweight lattice: "a/b,c/d;..." with one
        /// pair per node.
        #[arg(long)]
        mu: String,
        /// Skip the orbit search; emit only the orbit fingerprint, marked
        /// as heuristic.
        #[arg(long)]
        fingerprint_only: bool,
    },
    /// Regularity of the split bundle attached to a point.
    Regular {
        #[arg(long)]
        group: String,
        #[arg(long)]
        mu: String,
    },
    /// Block structure of the adjoint bundle: split form and regular form.
    Adjoint {
        #[arg(long)]
        group: String,
        #[arg(long)]
        mu: String,
    },
    /// Classify an SL(n) decomposition (JSON) and report regularity.
    ClassifySl {
        #[arg(long)]
        decomp: String,
    },
    /// Validate a decomposition against the regular Sp(2n) shape.
    ClassifySp {
        #[arg(long)]
        decomp: String,
    },
    /// Validate a decomposition against the regular SO shape.
    ClassifySo {
        #[arg(long)]
        decomp: String,
    },
    /// Regular decomposition attached to a torus point (A and C types).
    FromMu {
        #[arg(long)]
        group: String,
        #[arg(long)]
        mu: String,
    },
    /// Marked node, level counts and Levi components of the distinguished
    /// parabolic.
    Parabolic {
        #[arg(long)]
        group: String,
        /// Degree choice, required for type A and forbidden elsewhere.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        markdown: bool,
    },
    /// Weight/exponent pairs of the universal family over the moduli space.
    Family {
        #[arg(long)]
        group: String,
        #[arg(long)]
        markdown: bool,
    },
    /// Order of the descent obstruction for the parabolic construction.
    Np {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Spectral-cover fiber of a decomposition or a torus point.
    Spectral {
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        /// Decomposition JSON; alternative to --group/--mu.
        #[arg(long)]
        decomp: Option<String>,
    },
    /// Degree of the cover cut out by a weight-coordinate vector.
    CoverIndex {
        #[arg(long)]
        group: String,
        /// Comma-separated integer coordinates, one per node.
        #[arg(long)]
        weight: String,
    },
    /// Run the full cross-check suite; exits 0 only if every criterion passes.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Rendered {
    Json(Value),
    Text(String),
}

enum CmdError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage_error { 1 } else { 0 });
        }
    };
    let bound = orbit_bound();
    match execute(cli.command, bound) {
        Ok((Rendered::Json(v), code)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::from(code)
        }
        Ok((Rendered::Text(t), code)) => {
            println!("{t}");
            ExitCode::from(code)
        }
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Lib(e)) => {
            let v = json!({"error": {"code": e.code(), "message": e.to_string()}});
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::from(2)
        }
    }
}

fn orbit_bound() -> usize {
    std::env::var("ELLIMOD_ORBIT_BOUND")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORBIT_BOUND)
}

fn parse_group(spec: &str) -> Result<Arc<RootSystem>, CmdError> {
    let spec = spec.trim();
    let mut chars = spec.chars();
    let letter = chars.next();
    let kind = match letter.map(|c| c.to_ascii_uppercase()) {
        Some('A') => Kind::A,
        Some('B') => Kind::B,
        Some('C') => Kind::C,
        Some('D') => Kind::D,
        Some('E') => Kind::E,
        Some('F') => Kind::F,
        Some('G') => Kind::G,
        _ => {
            return Err(CmdError::Usage(format!(
                "group {spec:?} is not of the form <letter><rank>, e.g. E8 or A4"
            )))
        }
    };
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CmdError::Usage(format!("group {spec:?} has no readable rank")))?;
    Ok(RootSystem::get(kind, rank)?)
}

fn parse_mu(sys: &Arc<RootSystem>, mu: &str) -> Result<ELambdaPoint, CmdError> {
    Ok(ELambdaPoint::parse(sys.clone(), mu)?)
}

fn parse_decomp(text: &str) -> Result<BundleDecomp, CmdError> {
    serde_json::from_str(text)
        .map_err(|e| CmdError::Usage(format!("decomposition JSON does not parse: {e}")))
}

fn envelope(input: Value, result: Value, provenance: &str) -> Rendered {
    Rendered::Json(json!({"input": input, "result": result, "provenance": provenance}))
}

fn big(value: &BigUint) -> Value {
    match u64::try_from(value) {
        Ok(small) => json!(small),
        Err(_) => json!(value.to_string()),
    }
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize")
}

fn execute(cmd: Command, bound: usize) -> Result<(Rendered, u8), CmdError> {
    let out = match cmd {
        Command::Weights { group, markdown } => {
            let sys = parse_group(&group)?;
            let wp = wp_space(&sys);
            if markdown {
                let mut t = format!("Weighted projective space of {sys} bundles\n\n");
                t.push_str("| coordinate | weight |\n| --- | --- |\n");
                for (i, g) in wp.weights.iter().enumerate() {
                    t.push_str(&format!("| {i} | {g} |\n"));
                }
                Rendered::Text(t.trim_end().to_string())
            } else {
                envelope(
                    json!({"group": sys.to_string()}),
                    json!({"weights": wp.weights}),
                    "comark-expansion",
                )
            }
        }
        Command::Casimir { group } => {
            let sys = parse_group(&group)?;
            envelope(
                json!({"group": sys.to_string()}),
                json!({
                    "exponents": sys.exponents(),
                    "casimir_weights": sys.casimir_weights(),
                    "coxeter_number": sys.coxeter_number(),
                    "dual_coxeter_number": sys.dual_coxeter_number(),
                    "weyl_order": big(sys.weyl_order()),
                    "dim_g": sys.dim_g(),
                }),
                "coxeter-spectrum",
            )
        }
        Command::Strata { group, d } => {
            let sys = parse_group(&group)?;
            let dim = stratum_dim(&sys, d)?;
            envelope(
                json!({"group": sys.to_string(), "d": d}),
                json!({"dim": dim}),
                "weight-divisibility",
            )
        }
        Command::Canon {
            group,
            mu,
            fingerprint_only,
        } => {
            let sys = parse_group(&group)?;
            let point = parse_mu(&sys, &mu)?;
            let input = json!({"group": sys.to_string(), "mu": point.to_string()});
            if fingerprint_only {
                envelope(
                    input,
                    json!({
                        "fingerprint": format!("{:016x}", point.fingerprint()),
                        "method": "heuristic",
                    }),
                    "fingerprint-heuristic",
                )
            } else {
                let canon = point.canonicalize();
                envelope(
                    input,
                    json!({
                        "representative": canon.representative.to_string(),
                        "stabilizer_order": big(&canon.stabilizer_order),
                    }),
                    "orbit-minimum",
                )
            }
        }
        Command::Regular { group, mu } => {
            let sys = parse_group(&group)?;
            let point = parse_mu(&sys, &mu)?;
            envelope(
                json!({"group": sys.to_string(), "mu": point.to_string()}),
                json!({
                    "is_regular": point.is_torus_regular(),
                    "split_aut_dim": point.split_aut_dim(),
                    "vanishing_roots": point.vanishing_roots().len(),
                }),
                "vanishing-roots",
            )
        }
        Command::Adjoint { group, mu } => {
            let sys = parse_group(&group)?;
            let point = parse_mu(&sys, &mu)?;
            let split = split_adjoint(&point);
            let regular = regular_adjoint_blocks(&point);
            envelope(
                json!({"group": sys.to_string(), "mu": point.to_string()}),
                json!({
                    "split": to_value(&split),
                    "split_dimension": split.dimension(),
                    "regular": to_value(&regular),
                    "regular_dimension": regular.dimension(),
                }),
                "block-partition",
            )
        }
        Command::ClassifySl { decomp } => {
            let v = parse_decomp(&decomp)?;
            let class = sl_classify(&v)?;
            envelope(json!({"decomp": to_value(&v)}), to_value(&class), "section-count")
        }
        Command::ClassifySp { decomp } => {
            let v = parse_decomp(&decomp)?;
            sp_validate(&v)?;
            envelope(
                json!({"decomp": to_value(&v)}),
                json!({"valid": true}),
                "pairing-shape",
            )
        }
        Command::ClassifySo { decomp } => {
            let v = parse_decomp(&decomp)?;
            so_validate(&v)?;
            envelope(
                json!({"decomp": to_value(&v)}),
                json!({"valid": true}),
                "pairing-shape",
            )
        }
        Command::FromMu { group, mu } => {
            let sys = parse_group(&group)?;
            let point = parse_mu(&sys, &mu)?;
            let v = match sys.kind() {
                Kind::C => sp_class_from_mu(&point)?,
                _ => sl_class_from_mu(&point)?,
            };
            envelope(
                json!({"group": sys.to_string(), "mu": point.to_string()}),
                to_value(&v),
                "coordinate-lift",
            )
        }
        Command::Parabolic { group, d, markdown } => {
            let sys = parse_group(&group)?;
            let data = parabolic_data(&sys, d)?;
            if markdown {
                Rendered::Text(parabolic_markdown(&sys, &data))
            } else {
                envelope(
                    json!({"group": sys.to_string(), "d": d}),
                    to_value(&data),
                    "marked-node",
                )
            }
        }
        Command::Family { group, markdown } => {
            let sys = parse_group(&group)?;
            let rows = family_table(&sys)?;
            if markdown {
                let mut t = format!("Universal family over the {sys} moduli space\n\n");
                t.push_str("| weight | exponent |\n| --- | --- |\n");
                for row in &rows {
                    t.push_str(&format!("| {} | {} |\n", row.weight, row.exponent));
                }
                Rendered::Text(t.trim_end().to_string())
            } else {
                envelope(
                    json!({"group": sys.to_string()}),
                    json!({"rows": to_value(&rows)}),
                    "invariant-degrees",
                )
            }
        }
        Command::Np { group, d } => {
            let sys = parse_group(&group)?;
            let order = n_p(&sys, d)?;
            envelope(
                json!({"group": sys.to_string(), "d": d}),
                json!({"n_P": order}),
                "descent-order",
            )
        }
        Command::Spectral { group, mu, decomp } => {
            let (input, v) = match (group, mu, decomp) {
                (Some(group), Some(mu), None) => {
                    let sys = parse_group(&group)?;
                    let point = parse_mu(&sys, &mu)?;
                    let v = match sys.kind() {
                        Kind::C => sp_class_from_mu(&point)?,
                        _ => sl_class_from_mu(&point)?,
                    };
                    (json!({"group": sys.to_string(), "mu": point.to_string()}), v)
                }
                (None, None, Some(decomp)) => {
                    let v = parse_decomp(&decomp)?;
                    (json!({"decomp": to_value(&v)}), v)
                }
                _ => {
                    return Err(CmdError::Usage(
                        "spectral needs either --group with --mu, or --decomp".into(),
                    ))
                }
            };
            let fiber = match v.group {
                GroupTag::SL => sl_spectral_fiber(&v)?,
                GroupTag::Sp => sp_spectral_fiber(&v)?,
                GroupTag::SOeven | GroupTag::SOodd => {
                    return Err(CmdError::Usage(
                        "spectral fibers are defined for SL and Sp decompositions".into(),
                    ))
                }
            };
            envelope(input, to_value(&fiber), "fiber-divisor")
        }
        Command::CoverIndex { group, weight } => {
            let sys = parse_group(&group)?;
            let coords: Vec<i64> = weight
                .split(',')
                .map(|c| c.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| {
                    CmdError::Usage(format!("weight {weight:?} is not a comma-separated integer list"))
                })?;
            let index = cover_index(&sys, &coords, bound)?;
            envelope(
                json!({"group": sys.to_string(), "weight": coords}),
                json!({"index": index}),
                "weight-orbit",
            )
        }
        Command::Verify { seed } => {
            let reports = verify::run_all(seed, bound);
            let passed = reports.iter().all(|r| r.passed);
            let rendered = envelope(
                json!({"seed": seed, "orbit_bound": bound}),
                json!({"passed": passed, "criteria": to_value(&reports)}),
                "cross-check-suite",
            );
            return Ok((rendered, if passed { 0 } else { 2 }));
        }
    };
    Ok((out, 0))
}

fn parabolic_markdown(sys: &RootSystem, data: &ellimod_core::ParabolicData) -> String {
    let rule = match data.rule {
        ParabolicRule::Trivalent => "trivalent node".to_string(),
        ParabolicRule::MultipleEdgeLongRoot => "long end of the multiple edge".to_string(),
        ParabolicRule::ATypeChoice { d } => format!("degree choice d = {d}"),
    };
    let levi = if data.levi_components.is_empty() {
        "trivial".to_string()
    } else {
        data.levi_components
            .iter()
            .map(|c| format!("{}{}", c.kind, c.rank))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    let mut t = format!(
        "Distinguished parabolic of {sys}\n\nmarked node: {}\nrule: {rule}\nlevi: {levi}\n\n| level | roots |\n| --- | --- |\n",
        data.marked_node
    );
    for (level, count) in &data.level_counts {
        t.push_str(&format!("| {level} | {count} |\n"));
    }
    t.trim_end().to_string()
}
