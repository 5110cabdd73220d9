//! Command-line front end. [`run`] does all the work and returns the exit
//! code with both output streams, so the binary is a thin wrapper.

pub mod format;
pub mod parse;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::arith::{self, Natural};
use crate::construct::{self, FactoredPolynomial};
use crate::error::{Error, Result};
use crate::ideal::{self, BasisVariant};
use crate::oracle::{self, Budget};
use crate::polyring::{Polynomial, RingDescriptor};
use crate::product;

pub use format::{format_polynomial, polynomial_json, Mode};
pub use parse::{parse_element, parse_polynomial, parse_ring};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "vanpoly",
    version,
    about = "Vanishing polynomials over Z_n and finite products of Z_m"
)]
struct Cli {
    /// Emit {command, inputs, result, meta} as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Least s with n | s!.
    Kempner {
        n: Natural,
    },
    /// The generators (n / gcd(k!, n)) B_k of the vanishing ideal.
    Generators {
        n: Natural,
        #[arg(long, default_value = "rising")]
        basis: BasisVariant,
        /// Drop generators that are multiples of later ones.
        #[arg(long)]
        minimal: bool,
    },
    IsVanishing {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Coefficients b_k with P = sum b_k B_k.
    Decompose {
        n: Natural,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "rising")]
        basis: BasisVariant,
    },
    NormalForm {
        n: Natural,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "rising")]
        basis: BasisVariant,
    },
    /// Whether two polynomials induce the same function on Z_n.
    Equal {
        n: Natural,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    CountFunctions {
        n: Natural,
    },
    MinVanishing {
        n: Natural,
        #[arg(long)]
        monic: bool,
        #[arg(long, default_value = "rising")]
        basis: BasisVariant,
    },
    /// Carry a polynomial over Z_n to the product of its prime-power parts.
    Crt {
        n: Natural,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Repeat component `dup` of every coefficient.
    Lift {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        dup: usize,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Vanishing polynomial from zero divisors y_1 ... y_n with zero product.
    Construct {
        #[arg(long)]
        ring: String,
        /// Elements separated by ';', tuples as 1,0 or (1,0).
        #[arg(long, allow_hyphen_values = true)]
        ys: String,
        /// Indices whose coset polynomial is expanded; the rest are scalars.
        #[arg(long, default_value = "")]
        expand: String,
        #[arg(long)]
        reduce: bool,
    },
    /// Brute-force checks.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    EvalAll {
        #[arg(long)]
        ring: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = Budget::default().max_elements)]
        max_elements: u64,
    },
    Count {
        n: Natural,
        /// Defaults to kempner(n) - 1.
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long, default_value_t = Budget::default().max_enumeration)]
        max_enumeration: u64,
    },
    MinDegree {
        n: Natural,
        #[arg(long, default_value_t = Budget::default().max_enumeration)]
        max_enumeration: u64,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    inputs: Map<String, Value>,
    result: Value,
    text: String,
    basis: Option<String>,
    ring: Option<String>,
}

impl Report {
    fn new(command: &'static str, text: impl Into<String>, result: Value) -> Self {
        Self {
            command,
            inputs: Map::new(),
            result,
            text: text.into(),
            basis: None,
            ring: None,
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs
            .insert(key.to_owned(), Value::String(value.to_string()));
        self
    }

    fn basis(mut self, b: &BasisVariant) -> Self {
        self.basis = Some(b.to_string());
        self
    }

    fn ring(mut self, r: &RingDescriptor) -> Self {
        self.ring = Some(r.to_string());
        self
    }

    fn render(self, json: bool) -> String {
        if !json {
            return self.text + "\n";
        }
        let doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "meta": {
                "basis": self.basis,
                "ring": self.ring,
                "version": env!("CARGO_PKG_VERSION"),
            },
        });
        serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: report.render(cli.json),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

fn zn_poly(n: &Natural, text: &str) -> Result<(RingDescriptor, Polynomial)> {
    let ring = RingDescriptor::zn(n.clone())?;
    let p = parse_polynomial(text, &ring)?;
    Ok((ring, p))
}

fn poly_text(p: &Polynomial) -> String {
    format_polynomial(p, Mode::Text)
}

fn factored_json(f: &FactoredPolynomial) -> Value {
    let factors: Vec<Value> = f
        .factors
        .iter()
        .map(|l| json!({"root": format::element_json(&l.root), "sources": l.sources}))
        .collect();
    json!({
        "factored": f.to_string(),
        "scalar": format::element_json(&f.scalar),
        "degree": f.degree(),
        "factors": factors,
    })
}

fn bool_report(command: &'static str, value: bool) -> Report {
    Report::new(command, value.to_string(), Value::Bool(value))
}

fn execute(command: Command) -> Result<Report> {
    Ok(match command {
        Command::Kempner { n } => {
            let s = arith::kempner(&n)?;
            Report::new("kempner", s.to_string(), json!(s.to_string())).input("n", &n)
        }
        Command::Generators { n, basis, minimal } => {
            let set = ideal::generating_set(&n, &basis, minimal)?;
            let text = set
                .entries
                .iter()
                .map(|e| format!("{}: {}", e.k, poly_text(&e.poly)))
                .collect::<Vec<_>>()
                .join("\n");
            let entries: Vec<Value> = set
                .entries
                .iter()
                .map(|e| json!({"k": e.k, "polynomial": polynomial_json(&e.poly)}))
                .collect();
            Report::new("generators", text, Value::Array(entries))
                .input("n", &n)
                .input("minimal", minimal)
                .basis(&basis)
                .ring(&RingDescriptor::zn(n)?)
        }
        Command::IsVanishing { ring, poly } => {
            let r = parse_ring(&ring)?;
            let p = parse_polynomial(&poly, &r)?;
            let v = match r.single_modulus() {
                Some(m) => ideal::is_vanishing(m, &p, &BasisVariant::default())?,
                None => product::is_vanishing_product(&p)?,
            };
            bool_report("is-vanishing", v).input("poly", &poly).ring(&r)
        }
        Command::Decompose { n, poly, basis } => {
            let (ring, p) = zn_poly(&n, &poly)?;
            let d = ideal::decompose(&n, &p, &basis)?;
            let coeffs: Vec<String> = d.coeffs.iter().map(|b| b.to_string()).collect();
            Report::new(
                "decompose",
                format!("[{}]", coeffs.join(", ")),
                json!(coeffs),
            )
            .input("n", &n)
            .input("poly", &poly)
            .basis(&basis)
            .ring(&ring)
        }
        Command::NormalForm { n, poly, basis } => {
            let (ring, p) = zn_poly(&n, &poly)?;
            let nf = ideal::normal_form(&n, &p, &basis)?;
            Report::new("normal-form", poly_text(&nf), polynomial_json(&nf))
                .input("n", &n)
                .input("poly", &poly)
                .basis(&basis)
                .ring(&ring)
        }
        Command::Equal { n, a, b } => {
            let (ring, pa) = zn_poly(&n, &a)?;
            let pb = parse_polynomial(&b, &ring)?;
            bool_report("equal", ideal::functions_equal(&n, &pa, &pb)?)
                .input("n", &n)
                .input("a", &a)
                .input("b", &b)
                .basis(&BasisVariant::default())
                .ring(&ring)
        }
        Command::CountFunctions { n } => {
            let c = ideal::count_polynomial_functions(&n)?;
            Report::new("count-functions", c.to_string(), json!(c.to_string()))
                .input("n", &n)
                .ring(&RingDescriptor::zn(n)?)
        }
        Command::MinVanishing { n, monic, basis } => {
            let (p, used) = if monic {
                (ideal::min_monic_vanishing(&n, &basis)?, basis)
            } else {
                (ideal::min_vanishing(&n)?, BasisVariant::Falling)
            };
            Report::new("min-vanishing", poly_text(&p), polynomial_json(&p))
                .input("n", &n)
                .input("monic", monic)
                .basis(&used)
                .ring(&RingDescriptor::zn(n)?)
        }
        Command::Crt { n, poly } => {
            let (ring, p) = zn_poly(&n, &poly)?;
            let split = product::crt_split(&n)?;
            let q = split.transport(&p)?;
            let text = format!("{}: {}", split.descriptor(), poly_text(&q));
            let result = json!({
                "ring": split.descriptor().to_string(),
                "polynomial": polynomial_json(&q),
            });
            Report::new("crt", text, result)
                .input("n", &n)
                .input("poly", &poly)
                .ring(&ring)
        }
        Command::Lift { ring, dup, poly } => {
            let r = parse_ring(&ring)?;
            let p = parse_polynomial(&poly, &r)?;
            let q = product::lift_duplicate(&p, dup)?;
            let text = format!("{}: {}", q.ring(), poly_text(&q));
            let result = json!({
                "ring": q.ring().to_string(),
                "polynomial": polynomial_json(&q),
            });
            Report::new("lift", text, result)
                .input("dup", dup)
                .input("poly", &poly)
                .ring(&r)
        }
        Command::Construct {
            ring,
            ys,
            expand,
            reduce,
        } => {
            let r = parse_ring(&ring)?;
            let elems = ys
                .split(';')
                .map(|e| parse_element(e, &r))
                .collect::<Result<Vec<_>>>()?;
            let indices = parse_indices(&expand)?;
            let g = construct::general_vanishing(&r, &elems, &indices)?;
            let out = if reduce {
                construct::reduce_grouping(&g)?
            } else {
                g.clone()
            };
            let expanded = out.expand();
            let vanishing = if r.order() <= Natural::from(Budget::default().max_elements) {
                Value::Bool(oracle::eval_all_zero(&r, &expanded, &Budget::default())?)
            } else {
                Value::Null
            };
            let mut result = factored_json(&out);
            result["expanded"] = polynomial_json(&expanded);
            result["vanishing"] = vanishing;
            result["input_degree"] = json!(g.degree());
            Report::new("construct", out.to_string(), result)
                .input("ys", &ys)
                .input("expand", &expand)
                .input("reduce", reduce)
                .ring(&r)
        }
        Command::Oracle(cmd) => oracle_command(cmd)?,
    })
}

fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse().map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("bad index {s:?}"),
            })
        })
        .collect()
}

fn oracle_command(cmd: OracleCommand) -> Result<Report> {
    Ok(match cmd {
        OracleCommand::EvalAll {
            ring,
            poly,
            max_elements,
        } => {
            let r = parse_ring(&ring)?;
            let p = parse_polynomial(&poly, &r)?;
            let budget = Budget {
                max_elements,
                ..Budget::default()
            };
            bool_report("oracle eval-all", oracle::eval_all_zero(&r, &p, &budget)?)
                .input("poly", &poly)
                .ring(&r)
        }
        OracleCommand::Count {
            n,
            dmax,
            max_enumeration,
        } => {
            let dmax = match dmax {
                Some(d) => d,
                None => {
                    let s = arith::kempner(&n)?;
                    let s = usize::try_from(&s).map_err(|_| Error::TooLarge(s.to_string()))?;
                    s.saturating_sub(1)
                }
            };
            let budget = Budget {
                max_enumeration,
                ..Budget::default()
            };
            let c = oracle::brute_count_functions(&n, dmax, &budget)?;
            Report::new("oracle count", c.to_string(), json!(c.to_string()))
                .input("n", &n)
                .input("dmax", dmax)
                .ring(&RingDescriptor::zn(n)?)
        }
        OracleCommand::MinDegree { n, max_enumeration } => {
            let budget = Budget {
                max_enumeration,
                ..Budget::default()
            };
            let d = oracle::brute_min_vanishing_degree(&n, &budget)?;
            Report::new("oracle min-degree", d.to_string(), json!(d))
                .input("n", &n)
                .ring(&RingDescriptor::zn(n)?)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> String {
        let out = run(std::iter::once("vanpoly").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        out.stdout
    }

    fn code(args: &[&str]) -> i32 {
        run(std::iter::once("vanpoly").chain(args.iter().copied())).code
    }

    #[test]
    fn text_commands() {
        assert_eq!(ok(&["kempner", "12"]), "4\n");
        assert_eq!(ok(&["is-vanishing", "--ring", "12", "6x^2+6x"]), "true\n");
        assert_eq!(
            ok(&["is-vanishing", "--ring", "2,3", "(1,0)x^2 + (1,0)x"]),
            "true\n"
        );
        assert_eq!(ok(&["count-functions", "4"]), "64\n");
        assert_eq!(ok(&["equal", "12", "x^4", "x^4 + 6x^2 + 6x"]), "true\n");
        assert_eq!(ok(&["normal-form", "12", "6x^2 + 6x"]), "0\n");
        assert_eq!(ok(&["min-vanishing", "12"]), "6x^2 + 6x\n");
        assert_eq!(
            ok(&[
                "construct",
                "--ring",
                "12",
                "--ys",
                "2;2;3",
                "--expand",
                "0,1,2",
                "--reduce"
            ]),
            "(x-1)(x-2)(x-3)(x-2)\n"
        );
        assert_eq!(
            ok(&["construct", "--ring", "6", "--ys", "2;3", "--expand", "0"]),
            "3(x-1)(x-2)\n"
        );
        assert_eq!(ok(&["oracle", "min-degree", "12"]), "2\n");
        assert_eq!(
            ok(&["lift", "--ring", "2,3", "--dup", "0", "(1,2)x"]),
            "2,2,3: (1,1,2)x\n"
        );
        assert_eq!(ok(&["crt", "12", "x + 5"]), "4,3: x + (1,2)\n");
        assert_eq!(ok(&["is-vanishing", "--ring", "12", "-x + x"]), "true\n");
    }

    #[test]
    fn json_schema() {
        let out = ok(&["--json", "kempner", "12"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "kempner");
        assert_eq!(v["result"], "4");
        assert_eq!(v["inputs"]["n"], "12");
        assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
        assert!(v["meta"]["basis"].is_null());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(code(&["kempner", "abc"]), EXIT_INVALID);
        assert_eq!(code(&["is-vanishing", "--ring", "12", "x +"]), EXIT_INVALID);
        assert_eq!(code(&["min-vanishing", "7"]), EXIT_INVALID);
        assert_eq!(
            code(&["construct", "--ring", "12", "--ys", "2;3", "--expand", "0"]),
            EXIT_INVALID
        );
        assert_eq!(code(&["oracle", "count", "10", "--dmax", "7"]), EXIT_BUDGET);
        assert_eq!(
            code(&[
                "oracle",
                "eval-all",
                "--ring",
                "12",
                "x",
                "--max-elements",
                "5"
            ]),
            EXIT_BUDGET
        );
        assert_eq!(code(&["nope"]), EXIT_INVALID);
        assert_eq!(code(&["--help"]), EXIT_OK);
        assert_eq!(code(&["--version"]), EXIT_OK);
    }

    #[test]
    fn deterministic_output() {
        let args = ["--json", "generators", "36", "--basis", "shifted:2"];
        assert_eq!(ok(&args), ok(&args));
        assert_eq!(ok(&["kempner", "1"]), "0\n");
    }
}
