//! `dehn` command-line front end.
//!
//! Every subcommand produces a [`QueryResult`]: the echoed command, a JSON
//! value, the citations the value rests on, and a status. `--json` prints the
//! result as a single JSON object; otherwise a short text rendering is printed.

use std::fmt::Display;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use dehn_core::bott_ac::{self, ContactClass};
use dehn_core::classification::{self, Category};
use dehn_core::cross_check;
use dehn_core::lattice_core::matrix_pow;
use dehn_core::plumbing::{self, BoundaryInvariants};
use dehn_core::twist_action::{self, RelativeTwistAction, Sign};
use dehn_core::{AbelianGroupDescriptor, Error, IntMatrix, OrderResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const CITE_PAIRING: &str =
    "intersection pairing <[D],[S^n]> = 1, <[S^n],[S^n]> = 2(-1)^(n/2) (Arnold's orientations)";
const CITE_BOUNDARY_LES: &str =
    "long exact sequence of (plumbing, boundary): H_n = coker(Gram), H_{n+1} = ker(Gram)";
const CITE_ARF_SCAN: &str =
    "Arf invariant by exhaustive count of q over (Z/2)^l, q = 1 on vanishing cycles";
const CITE_CONSISTENCY: &str =
    "order m forces τ ~ τ^(1+jm); with jm ≡ 0 mod 8 the contact classes force jm/2 ≡ 0 mod d(n)";

#[derive(Parser, Debug)]
#[command(name = "dehn", version, about = "Orders of higher-dimensional Dehn twists and related invariants")]
pub struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CategoryArg {
    Symp,
    AlmostComplex,
    Diff,
    Homeo,
    Haut,
}

impl From<CategoryArg> for Category {
    fn from(c: CategoryArg) -> Self {
        match c {
            CategoryArg::Symp => Category::Symp,
            CategoryArg::AlmostComplex => Category::AlmostComplex,
            CategoryArg::Diff => Category::Diff,
            CategoryArg::Homeo => Category::Homeo,
            CategoryArg::Haut => Category::HAut,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BottSpace {
    O,
    OModU,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order of the twist in a mapping class group
    Order {
        #[arg(long, value_enum)]
        category: CategoryArg,
        #[arg(long)]
        n: u64,
    },
    /// Action on H_n(D*S^n, B; Z) and its powers
    Matrix {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        power: u64,
    },
    /// Actions preserving the intersection pairing, by brute force
    EnumerateActions {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = twist_action::DEFAULT_A_RANGE)]
        a_range: u64,
    },
    /// Whether [[epsilon, A], [0, 1]] preserves the intersection pairing
    Pairing {
        #[arg(long, allow_negative_numbers = true)]
        epsilon: i64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long)]
        n: u64,
    },
    /// Homology of the open book X_{τ^k}
    Boundary {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Arf invariant of the skew A_l chain
    Arf {
        #[arg(long)]
        l: usize,
    },
    /// Which (homotopy) sphere X_{τ^k} is
    SphereType {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Whether the Kervaire sphere of a dimension is standard
    Kervaire {
        #[arg(long)]
        dim: u64,
    },
    /// Target of χ_r in the variation kernel extension
    ChiR {
        #[arg(long)]
        n: u64,
    },
    /// Θ_13 and the triviality of τ^2 for n = 6
    Theta13,
    /// Whether a sphere bundle over S^m can be fibre homotopy trivial
    FibreTrivial {
        #[arg(long)]
        base_dim: u64,
    },
    /// Stable homotopy groups of O or O/U
    Bott {
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum, default_value_t = BottSpace::O)]
        space: BottSpace,
    },
    /// Order of π_{2n+1}(O(2n)/U(n))
    Harris {
        #[arg(long)]
        n: u64,
    },
    /// Bound on the order of π_1 of the space of almost-complex structures
    AcPi1 {
        #[arg(long)]
        n: u64,
    },
    /// Almost-contact class of X_{τ^k} for k ≡ ±1 mod 8
    ContactClass {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    /// Bounds on the order in the almost-complex mapping class group
    AcBounds {
        #[arg(long)]
        n: u64,
    },
    /// Orders compatible with the almost-contact classes
    AcConsistent {
        #[arg(long)]
        n: u64,
    },
    /// Exact cross-product identity self-test in R^3 and R^7
    CrossSelftest {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub command: String,
    pub value: Value,
    pub provenance: Vec<String>,
    pub status: Status,
}

/// Exit code plus the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A computed answer before rendering.
struct Answer {
    value: Value,
    text: String,
    provenance: Vec<String>,
}

impl Answer {
    fn new(value: Value, text: impl Into<String>, provenance: &[&str]) -> Self {
        Self {
            value,
            text: text.into(),
            provenance: provenance.iter().map(|s| s.to_string()).collect(),
        }
    }
}

enum Failure {
    Precondition(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

/// Decimal JSON number of arbitrary size.
pub fn num(x: impl Display) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal integer is valid JSON")
}

pub fn order_json(o: &OrderResult) -> Value {
    match o {
        OrderResult::Infinite => json!({ "kind": "infinite" }),
        OrderResult::Finite(m) => json!({ "kind": "finite", "order": num(m) }),
        OrderResult::Bounded { lower, upper } => {
            json!({ "kind": "bounded", "lower": num(lower), "upper": num(upper) })
        }
        OrderResult::Ambiguous(c) => json!({
            "kind": "ambiguous",
            "candidates": c.iter().map(num).collect::<Vec<_>>(),
        }),
    }
}

pub fn group_json(g: &AbelianGroupDescriptor) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(num).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(num).collect()))
            .collect(),
    )
}

fn action_json(a: &RelativeTwistAction) -> Value {
    json!({
        "epsilon": a.epsilon().value(),
        "a": num(a.a()),
        "matrix": matrix_json(&a.matrix()),
    })
}

fn contact_json(c: &ContactClass) -> Value {
    json!({ "residue": num(c.residue()), "modulus": num(c.modulus()) })
}

fn boundary_json(b: &BoundaryInvariants) -> Value {
    json!({
        "h_n": group_json(&b.h_n),
        "h_n_plus_1": group_json(&b.h_n_plus_1),
        "sphere_type": format!("{:?}", b.sphere_type),
        "arf": b.arf,
        "note": b.note,
    })
}

fn run(cmd: &Command) -> Result<Answer, Failure> {
    use classification::*;
    let answer = match *cmd {
        Command::Order { category, n } => {
            let cat = Category::from(category);
            if cat == Category::AlmostComplex {
                let order = bott_ac::ac_order_bounds(n)?;
                Answer::new(
                    order_json(&order),
                    format!("order of τ in the almost-complex group of T*S^{n}: {order}"),
                    &[bott_ac::CITE_HARRIS, bott_ac::CITE_BOTT, bott_ac::CITE_USTILOVSKY, CITE_KK],
                )
            } else {
                let c = classify_twist(&KervaireTable::default(), cat, n)?;
                Answer {
                    value: order_json(&c.order),
                    text: format!("order of τ in the {cat} group of T*S^{n}: {}", c.order),
                    provenance: c.provenance,
                }
            }
        }
        Command::Matrix { n, power } => {
            let action = twist_action::twist_matrix(n)?;
            let powered = matrix_pow(&action.matrix(), power)?;
            let order = twist_action::homological_order(n)?;
            Answer::new(
                json!({
                    "n": n,
                    "action": action_json(&action),
                    "power": power,
                    "power_matrix": matrix_json(&powered),
                    "homological_order": order_json(&order),
                }),
                format!("τ on H_{n}(D*S^{n}, B): {action}\nτ^{power}: {powered}\nhomological order: {order}"),
                &[CITE_ARNOLD_ACTION],
            )
        }
        Command::EnumerateActions { n, a_range } => {
            let acts = twist_action::enumerate_homology_actions(n, a_range)?;
            let text = acts.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            Answer::new(
                Value::Array(acts.iter().map(action_json).collect()),
                text,
                &[CITE_PAIRING],
            )
        }
        Command::Pairing { epsilon, a, n } => {
            let sign = match epsilon {
                1 => Sign::Plus,
                -1 => Sign::Minus,
                other => {
                    return Err(Failure::Precondition(format!("epsilon must be ±1, got {other}")))
                }
            };
            let ok = twist_action::pairing_constraint(sign, &a.into(), n)?;
            Answer::new(json!(ok), format!("preserves pairing: {ok}"), &[CITE_PAIRING])
        }
        Command::Boundary { k, n } => {
            let b = plumbing::open_book_boundary_homology(k, n)?;
            Answer::new(
                json!({ "h_n": group_json(&b.h_n), "h_n_plus_1": group_json(&b.h_n_plus_1) }),
                format!("H_{n}(X) = {}\nH_{}(X) = {}", b.h_n, n + 1, b.h_n_plus_1),
                &[CITE_OPEN_BOOK, CITE_BOUNDARY_LES],
            )
        }
        Command::Arf { l } => {
            let arf = plumbing::arf_a_chain(l)?;
            Answer::new(json!(arf), format!("Arf(A_{l}) = {arf}"), &[CITE_ARF_SCAN])
        }
        Command::SphereType { k, n } => {
            let b = plumbing::boundary_sphere_type(k, n)?;
            let mut text = format!("X_τ^{k} for n = {n}: {}", b.sphere_type);
            if let Some(note) = &b.note {
                text.push_str(&format!("\nnote: {note}"));
            }
            let mut cites = vec![CITE_OPEN_BOOK, CITE_BOUNDARY_LES];
            if b.arf.is_some() {
                cites.push(CITE_ARF_SCAN);
            }
            if b.arf == Some(1) {
                cites.push(KervaireTable::default().lookup(2 * n + 1)?.citation);
            }
            Answer::new(boundary_json(&b), text, &cites)
        }
        Command::Kervaire { dim } => {
            let entry = KervaireTable::default().lookup(dim)?;
            Answer::new(
                json!(entry.status.to_string()),
                format!("Kervaire sphere of dimension {dim}: {}", entry.status),
                &[entry.citation],
            )
        }
        Command::ChiR { n } => {
            let g = chi_r_target(n)?;
            Answer::new(group_json(&g), format!("χ_r target for n = {n}: {g}"), &[CITE_KK])
        }
        Command::Theta13 => {
            let fact = theta13_fact();
            Answer::new(
                json!({ "group": group_json(&fact.group), "tau_squared_trivial": fact.tau_squared_trivial }),
                format!(
                    "Θ_13 = {}; τ^2 trivial for n = 6: {}",
                    fact.group, fact.tau_squared_trivial
                ),
                &[CITE_THETA13],
            )
        }
        Command::FibreTrivial { base_dim } => {
            let ok = fibre_homotopy_trivial_possible(base_dim);
            Answer::new(
                json!(ok),
                format!("fibre homotopy trivial possible over S^{base_dim}: {ok}"),
                &[CITE_MILNOR_SPANIER],
            )
        }
        Command::Bott { degree, space } => {
            let (g, name, cites): (_, _, &[&str]) = match space {
                BottSpace::O => (bott_ac::pi_o(degree), "O", &[bott_ac::CITE_BOTT]),
                BottSpace::OModU => (
                    bott_ac::pi_o_mod_u(degree)?,
                    "O/U",
                    &[bott_ac::CITE_BOTT, bott_ac::CITE_O_MOD_U],
                ),
            };
            Answer::new(group_json(&g), format!("π_{degree}({name}) = {g}"), cites)
        }
        Command::Harris { n } => {
            let h = bott_ac::harris_order(n)?;
            Answer::new(num(&h), format!("|π_{}(O({})/U({n}))| = {h}", 2 * n + 1, 2 * n), &[bott_ac::CITE_HARRIS])
        }
        Command::AcPi1 { n } => {
            let b = bott_ac::ac_pi1_bound(n)?;
            Answer::new(
                num(&b),
                format!("|π_1(AC_c(T*S^{n}))| divides {b}"),
                &[bott_ac::CITE_HARRIS, bott_ac::CITE_BOTT, bott_ac::CITE_O_MOD_U],
            )
        }
        Command::ContactClass { k, n } => {
            let c = bott_ac::ustilovsky_class(k, n)?;
            Answer::new(
                contact_json(&c),
                format!("[ξ_{k}] = {c}"),
                &[bott_ac::CITE_USTILOVSKY],
            )
        }
        Command::AcBounds { n } => {
            let o = bott_ac::ac_order_bounds(n)?;
            let OrderResult::Bounded { lower, upper } = &o else {
                return Err(Failure::Internal("bounds are not a divisibility interval".into()));
            };
            Answer::new(
                json!({ "lower": num(lower), "upper": num(upper) }),
                format!("order of τ in the almost-complex group: {o}"),
                &[bott_ac::CITE_HARRIS, bott_ac::CITE_BOTT, bott_ac::CITE_USTILOVSKY, CITE_KK],
            )
        }
        Command::AcConsistent { n } => {
            let set: Vec<BigUint> = bott_ac::ac_consistent_orders(n)?;
            let text = set.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            Answer::new(
                Value::Array(set.iter().map(num).collect()),
                format!("orders consistent with the contact classes: {text}"),
                &[bott_ac::CITE_USTILOVSKY, CITE_CONSISTENCY],
            )
        }
        Command::CrossSelftest { samples, seed } => {
            let mut dims = Vec::new();
            let mut lines = Vec::new();
            let mut passed = true;
            for dim in [3usize, 7] {
                let report = cross_check::verify_cross_identities(dim, samples, seed)?;
                let rot = cross_check::count_rotation_failures(dim, samples, seed)?;
                let failure = report
                    .first_failure
                    .as_ref()
                    .map(|c| format!("{} fails at u = {}, v = {}, w = {}", c.identity, c.u, c.v, c.w));
                passed &= report.passed() && rot == 0;
                lines.push(format!(
                    "R^{dim}: identities {}, rotation failures {rot}/{samples}",
                    failure.clone().unwrap_or_else(|| "pass".into())
                ));
                dims.push(json!({
                    "dim": dim,
                    "samples": samples,
                    "identities_pass": report.passed(),
                    "first_failure": failure,
                    "rotation_failures": rot,
                }));
            }
            if !passed {
                return Err(Failure::Internal(lines.join("; ")));
            }
            Answer::new(
                json!({ "passed": passed, "dims": dims }),
                lines.join("\n"),
                &[classification::CITE_KRONHEIMER],
            )
        }
    };
    Ok(answer)
}

fn render(json_mode: bool, result: &QueryResult, text: &str) -> String {
    if json_mode {
        return serde_json::to_string(result).expect("query results serialize") + "\n";
    }
    let mut out = String::new();
    match &result.status {
        Status::Ok => {
            out.push_str(text);
            out.push('\n');
            if !result.provenance.is_empty() {
                out.push_str("provenance:\n");
                for p in &result.provenance {
                    out.push_str(&format!("  - {p}\n"));
                }
            }
        }
        Status::Error(msg) => out.push_str(&format!("error: {msg}\n")),
    }
    out
}

fn clap_message(e: &clap::Error) -> String {
    let text = e.to_string();
    let first = text.lines().next().unwrap_or_default();
    first.strip_prefix("error: ").unwrap_or(first).to_string()
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let echo = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let json_mode = argv.iter().any(|a| a == "--json");

    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                ErrorKind::InvalidSubcommand
                | ErrorKind::MissingSubcommand
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
                _ => {
                    let result = QueryResult {
                        command: echo,
                        value: Value::Null,
                        provenance: Vec::new(),
                        status: Status::Error(clap_message(&e)),
                    };
                    let stdout = if json_mode { render(true, &result, "") } else { String::new() };
                    Outcome {
                        code: EXIT_PRECONDITION,
                        stdout,
                        stderr: rendered,
                    }
                }
            };
        }
    };

    let (code, result, text) = match run(&cli.command) {
        Ok(answer) => (
            EXIT_OK,
            QueryResult {
                command: echo,
                value: answer.value,
                provenance: answer.provenance,
                status: Status::Ok,
            },
            answer.text,
        ),
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Precondition(m) => (EXIT_PRECONDITION, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            (
                code,
                QueryResult {
                    command: echo,
                    value: Value::Null,
                    provenance: Vec::new(),
                    status: Status::Error(msg),
                },
                String::new(),
            )
        }
    };
    let rendered = render(cli.json, &result, &text);
    if code == EXIT_OK || cli.json {
        Outcome {
            code,
            stdout: rendered,
            stderr: String::new(),
        }
    } else {
        Outcome {
            code,
            stdout: String::new(),
            stderr: rendered,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_overrun_is_internal() {
        let f = Failure::from(Error::OrderExceedsBound { bound: 3 });
        assert!(matches!(f, Failure::Internal(_)));
        let f = Failure::from(Error::ArfDegenerate { rank: 3 });
        assert!(matches!(f, Failure::Precondition(_)));
    }
}
