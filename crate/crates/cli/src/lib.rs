//! The `octassoc` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 evaluation error, 3 an identity
//! check failed (which indicates a bug).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use octassoc::{
    additive_associator, additive_commutator, cayley_dickson, eval_expr, identities,
    multiplicative_associator, multiplicative_commutator, parse, sample, AssociatorMatrix,
    Environment, Error, Octonion, ProductTree, Rational, Scalar,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EVAL: i32 = 2;
pub const EXIT_IDENTITY: i32 = 3;

const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "octassoc",
    version,
    about = "Octonion commutators and associators"
)]
pub struct Cli {
    /// Scalar backend.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,

    /// Componentwise tolerance for comparisons (float backend only).
    #[arg(long, global = true, value_name = "T")]
    tolerance: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Args)]
struct KindArgs {
    /// Difference form: xy - yx or x(yz) - (xy)z.
    #[arg(long, conflicts_with = "multiplicative")]
    additive: bool,

    /// Unit-norm factor form (the default).
    #[arg(long)]
    multiplicative: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Bind a variable, e.g. `--let x=1+e2`.
        #[arg(long = "let", value_name = "NAME=OCTONION")]
        bindings: Vec<String>,
    },
    /// Commutator of two octonions.
    Commutator {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Associator of three octonions, with the conversion checks.
    Associator {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Every evaluation order of a product, optionally with the associator matrix.
    ///
    /// A factor starting with `-` must be bracketed, `(-e1)`, or follow `--`.
    Orders {
        #[arg(required = true)]
        factors: Vec<String>,
        #[arg(long)]
        matrix: bool,
    },
    /// Run the randomized identity suite.
    Check {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = sample::DEFAULT_SEED)]
        seed: u64,
    },
    /// Print the derived multiplication table of the basis units.
    Table,
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Syntax { .. }
        | Error::InvalidNumber { .. }
        | Error::InvalidTolerance(_)
        | Error::ReservedIdentifier(_)
        | Error::InvalidIdentifier(_)
        | Error::InvalidLength(_)
        | Error::InvalidWord(_)
        | Error::OutOfRange { .. } => EXIT_USAGE,
        _ => EXIT_EVAL,
    }
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match cli.backend {
        Backend::Exact => with_backend::<Rational>(&cli, out, err),
        Backend::Float => with_backend::<f64>(&cli, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn with_backend<S: Scalar>(
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let tolerance = match &cli.tolerance {
        Some(t) => S::parse_coeff(t)?,
        None if S::EXACT => S::zero(),
        None => S::parse_coeff(&DEFAULT_FLOAT_TOLERANCE.to_string())?,
    };
    octassoc::check_tolerance(&tolerance)?;
    let ctx = Context {
        tolerance,
        machine: cli.format == Format::Machine,
    };
    let mut lines = Vec::new();
    let code = ctx.dispatch(&cli.command, &mut lines, err)?;
    for line in lines {
        let _ = writeln!(out, "{line}");
    }
    Ok(code)
}

struct Context<S: Scalar> {
    tolerance: S,
    machine: bool,
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "OK"
    } else {
        "FAILED"
    }
}

fn operand<S: Scalar>(text: &str) -> Result<Octonion<S>, Error> {
    eval_expr(&parse::<S>(text)?.expr, &Environment::new())
}

impl<S: Scalar> Context<S> {
    fn eq(&self, a: &Octonion<S>, b: &Octonion<S>) -> Result<bool, Error> {
        a.equals(b, &self.tolerance)
    }

    fn value_line(&self, key: &str, v: &Octonion<S>) -> String {
        if self.machine {
            format!("{key}\t{}", v.to_machine())
        } else {
            v.to_string()
        }
    }

    fn dispatch(
        &self,
        command: &Command,
        lines: &mut Vec<String>,
        err: &mut dyn Write,
    ) -> Result<i32, Error> {
        match command {
            Command::Eval { expr, bindings } => self.eval(expr, bindings, lines, err),
            Command::Commutator { x, y, kind } => {
                self.commutator(&operand(x)?, &operand(y)?, kind.additive, lines)
            }
            Command::Associator { x, y, z, kind } => self.associator(
                &operand(x)?,
                &operand(y)?,
                &operand(z)?,
                kind.additive,
                lines,
            ),
            Command::Orders { factors, matrix } => {
                let factors = factors
                    .iter()
                    .map(|f| operand(f))
                    .collect::<Result<Vec<_>, _>>()?;
                self.orders(&factors, *matrix, lines)
            }
            Command::Check { cases, seed } => self.check(*cases, *seed, lines),
            Command::Table => {
                lines.extend(cayley_dickson::render_table().lines().map(String::from));
                Ok(EXIT_OK)
            }
        }
    }

    fn eval(
        &self,
        source: &str,
        bindings: &[String],
        lines: &mut Vec<String>,
        err: &mut dyn Write,
    ) -> Result<i32, Error> {
        let mut env = Environment::new();
        for binding in bindings {
            let (name, value) = binding.split_once('=').ok_or_else(|| Error::Syntax {
                offset: 0,
                expected: vec!["NAME=OCTONION".into()],
                found: format!("`{binding}`"),
            })?;
            env.bind(name.trim(), operand(value)?)?;
        }
        let parsed = parse::<S>(source)?;
        for chain in &parsed.defaulted {
            let left = chain.left_grouped();
            let right = chain.right_grouped();
            let text = &source[chain.span.clone()];
            let note = match (eval_expr(&left, &env), eval_expr(&right, &env)) {
                (Ok(l), Ok(r)) if !self.eq(&l, &r)? => {
                    format!("{left} = {l} but {right} = {r}")
                }
                (Ok(_), Ok(_)) => format!("{left} and {right} agree here"),
                _ => format!("{left} and {right} could not both be evaluated"),
            };
            let _ = writeln!(
                err,
                "warning: `{text}` has no brackets and groups to the left; {note}"
            );
        }
        let value = eval_expr(&parsed.expr, &env)?;
        lines.push(self.value_line("value", &value));
        Ok(EXIT_OK)
    }

    fn commutator(
        &self,
        x: &Octonion<S>,
        y: &Octonion<S>,
        additive: bool,
        lines: &mut Vec<String>,
    ) -> Result<i32, Error> {
        if additive {
            lines.push(self.value_line("value", &additive_commutator(x, y)));
            return Ok(EXIT_OK);
        }
        let c = multiplicative_commutator(x, y)?;
        let xy = x * y;
        let yx = y * x;
        let forward = self.eq(&(&xy * &c), &yx)?;
        let backward = self.eq(&xy, &(&yx * &c.conjugate()))?;
        lines.push(self.value_line("value", &c));
        if self.machine {
            lines.push(format!("xyc=yx\t{}", ok(forward)));
            lines.push(format!("xy=yxc~\t{}", ok(backward)));
        } else {
            lines.push(format!(
                "(xy)c = yx: {}  xy = (yx)c~: {}",
                ok(forward),
                ok(backward)
            ));
        }
        Ok(if forward && backward {
            EXIT_OK
        } else {
            EXIT_IDENTITY
        })
    }

    fn associator(
        &self,
        x: &Octonion<S>,
        y: &Octonion<S>,
        z: &Octonion<S>,
        additive: bool,
        lines: &mut Vec<String>,
    ) -> Result<i32, Error> {
        if additive {
            lines.push(self.value_line("value", &additive_associator(x, y, z)));
            return Ok(EXIT_OK);
        }
        let a = multiplicative_associator(x, y, z)?;
        let left = &(x * y) * z;
        let right = x * &(y * z);
        let eq2 = self.eq(&(&left * &a), &right)?;
        let eq3 = self.eq(&left, &(&right * &a.conjugate()))?;
        lines.push(self.value_line("value", &a));
        if self.machine {
            lines.push(format!("eq2\t{}", ok(eq2)));
            lines.push(format!("eq3\t{}", ok(eq3)));
        } else {
            lines.push(format!("Eq2: {}  Eq3: {}", ok(eq2), ok(eq3)));
        }
        Ok(if eq2 && eq3 { EXIT_OK } else { EXIT_IDENTITY })
    }

    fn orders(
        &self,
        factors: &[Octonion<S>],
        matrix: bool,
        lines: &mut Vec<String>,
    ) -> Result<i32, Error> {
        let names: Vec<String> = (1..=factors.len()).map(|k| format!("x{k}")).collect();
        let trees = octassoc::enumerate_trees(factors.len())?;
        let products = trees
            .iter()
            .map(|t| t.evaluate(factors))
            .collect::<Result<Vec<_>, _>>()?;
        let width = trees
            .iter()
            .map(|t| t.render(&names).len())
            .max()
            .unwrap_or(0);
        for (name, f) in names.iter().zip(factors) {
            lines.push(if self.machine {
                format!("{name}\t{}", f.to_machine())
            } else {
                format!("{name} = {f}")
            });
        }
        for (k, (tree, value)) in trees.iter().zip(&products).enumerate() {
            lines.push(self.order_line(k, tree, &names, value, width));
        }
        if !matrix {
            return Ok(EXIT_OK);
        }
        let m = AssociatorMatrix::new(factors)?;
        let diagonal = m.has_unit_diagonal(&self.tolerance)?;
        let symmetric = m.is_conjugate_symmetric(&self.tolerance)?;
        let unit = m.all_unit_norm(&self.tolerance)?;
        let census = m.chain_census(&self.tolerance)?;
        if self.machine {
            lines.extend(m.render_machine().lines().map(String::from));
            lines.push(format!("diagonal\t{}", ok(diagonal)));
            lines.push(format!("symmetry\t{}", ok(symmetric)));
            lines.push(format!("unit-norm\t{}", ok(unit)));
            lines.push(format!("chain\t{}/{}", census.holding, census.triples));
        } else {
            lines.push(String::new());
            lines.push("a_ij = inverse(p_i) * p_j".into());
            lines.extend(m.render_text().lines().map(String::from));
            lines.push(String::new());
            lines.push(format!("unit diagonal a_ii = 1: {}", ok(diagonal)));
            lines.push(format!(
                "conjugate symmetry a_ji = conj(a_ij): {}",
                ok(symmetric)
            ));
            lines.push(format!("unit norm |a_ij| = 1: {}", ok(unit)));
            lines.push(format!(
                "a_ij * a_jk = a_ik held for {} of {} index triples (reported, not required)",
                census.holding, census.triples
            ));
        }
        Ok(if diagonal && symmetric && unit {
            EXIT_OK
        } else {
            EXIT_IDENTITY
        })
    }

    fn order_line(
        &self,
        k: usize,
        tree: &ProductTree,
        names: &[String],
        value: &Octonion<S>,
        width: usize,
    ) -> String {
        let rendered = tree.render(names);
        if self.machine {
            format!("p{}\t{rendered}\t{}", k + 1, value.to_machine())
        } else {
            format!("p{:<3} {rendered:<width$} = {value}", k + 1)
        }
    }

    fn check(&self, cases: usize, seed: u64, lines: &mut Vec<String>) -> Result<i32, Error> {
        let report = identities::run_suite(cases, seed, &self.tolerance)?;
        if !self.machine {
            lines.push(format!("backend {}, seed {seed}, {cases} cases", S::NAME));
        }
        for o in &report.outcomes {
            lines.push(match (self.machine, o.failed) {
                (true, _) => format!("{}\t{}/{}", o.name, o.passed, cases),
                (false, 0) => format!("{}: all {cases} cases passed", o.name),
                (false, failed) => format!(
                    "{}: {failed} of {cases} cases FAILED (first failing case {})",
                    o.name,
                    o.first_failure.unwrap_or(0)
                ),
            });
        }
        Ok(if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_IDENTITY
        })
    }
}
