//! The `thompson` command-line tool.
//!
//! Every operand is either a file path or inline text given with `-e`, and
//! operands are consumed in the order they appear on the command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Arg, ArgAction, ArgMatches, Command};

use crate::addresses::{Address, Antichain};
use crate::error::Error;
use crate::formats::{
    parse_address, parse_addresses, parse_certificate, parse_element, print_element, ParseError,
    Style,
};
use crate::genmax::{
    check_certificate, double_coset_invariant, maximality_certificate, swap_decompose, Certificate,
};
use crate::structure::{
    common_tree_form, cycle_decomposition, in_f, in_t, interleave, shape_in_t, DEFAULT_LEAF_BOUND,
};
use crate::word::Token;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

enum Failure {
    Parse(String),
    Group(Error),
    Io(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Group(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

const SUBCOMMANDS: &[(&str, &str, &[&str])] = &[
    ("compose", "Product F·G, applying F first", &["F", "G"]),
    ("invert", "Inverse of F", &["F"]),
    ("reduce", "Reduced pair list of F", &["F"]),
    ("eq", "Exit 0 when F and G are equal", &["F", "G"]),
    ("eval", "Image of an address under F", &["F", "ADDR"]),
    ("order", "Order of F", &["F"]),
    ("in-t", "Exit 0 when F lies in T", &["F"]),
    ("in-f", "Exit 0 when F lies in F", &["F"]),
    ("cycles", "Cycle notation for a finite-order F", &["F"]),
    ("swaps", "F as an even product of swaps", &["F"]),
    (
        "interleave",
        "Conjugate F to an interleaved permutation",
        &["F"],
    ),
    (
        "shape",
        "Element of T carrying the cones ALPHAS of tree A onto BETAS of tree B",
        &["A", "ALPHAS", "B", "BETAS"],
    ),
    ("dcoset", "Double-coset invariant of F", &["F"]),
    (
        "maximal",
        "Certificate expressing TARGET in <A, T>",
        &["A", "TARGET"],
    ),
    ("verify", "Check a certificate against A", &["CERT", "A"]),
];

fn command() -> Command {
    let mut cmd = Command::new("thompson")
        .about("Thompson's groups F < T < V acting on Cantor space")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for &(name, about, operands) in SUBCOMMANDS {
        let mut sub = Command::new(name)
            .about(about)
            .after_help(format!(
                "Operands, in order: {}. Each is a file path or inline text after -e.",
                operands.join(" ")
            ))
            .arg(
                Arg::new("file")
                    .value_name("FILE")
                    .action(ArgAction::Append)
                    .help("Operand read from a file"),
            )
            .arg(
                Arg::new("expr")
                    .short('e')
                    .value_name("TEXT")
                    .action(ArgAction::Append)
                    .allow_hyphen_values(true)
                    .help("Operand given inline"),
            );
        if name == "maximal" {
            sub = sub.arg(
                Arg::new("output")
                    .short('o')
                    .value_name("CERT")
                    .help("Write the certificate here instead of standard output"),
            );
        }
        cmd = cmd.subcommand(sub);
    }
    cmd
}

/// Operand texts in command-line order, files already read.
fn operands(m: &ArgMatches, expected: usize) -> std::result::Result<Vec<String>, Failure> {
    let mut indexed: Vec<(usize, String, bool)> = Vec::new();
    for (id, inline) in [("file", false), ("expr", true)] {
        if let (Some(idx), Some(vals)) = (m.indices_of(id), m.get_many::<String>(id)) {
            indexed.extend(idx.zip(vals).map(|(i, v)| (i, v.clone(), inline)));
        }
    }
    indexed.sort_by_key(|x| x.0);
    if indexed.len() != expected {
        return Err(Failure::Parse(format!(
            "expected {expected} operands, found {}",
            indexed.len()
        )));
    }
    indexed
        .into_iter()
        .map(|(_, v, inline)| {
            if inline {
                Ok(v)
            } else {
                std::fs::read_to_string(&v).map_err(|e| Failure::Io(format!("{v}: {e}")))
            }
        })
        .collect()
}

fn truth(out: &mut dyn Write, b: bool) -> Outcome {
    writeln!(out, "{b}")?;
    Ok(if b { EXIT_OK } else { EXIT_FALSE })
}

fn write_certificate(out: &mut dyn Write, cert: &Certificate) -> std::io::Result<()> {
    write!(out, "{cert}")
}

fn dispatch(name: &str, m: &ArgMatches, out: &mut dyn Write) -> Outcome {
    let arity = SUBCOMMANDS
        .iter()
        .find(|s| s.0 == name)
        .map(|s| s.2.len())
        .unwrap_or(0);
    let ops = operands(m, arity)?;
    let el = |i: usize| parse_element(&ops[i]);
    match name {
        "compose" => {
            writeln!(out, "{}", el(0)?.compose(&el(1)?)?)?;
        }
        "invert" => writeln!(out, "{}", el(0)?.invert())?,
        "reduce" => writeln!(out, "{}", el(0)?.reduce())?,
        "eq" => return truth(out, el(0)? == el(1)?),
        "eval" => {
            let addr: Address = parse_address(&ops[1])?;
            writeln!(out, "{}", el(0)?.apply(&addr)?)?;
        }
        "order" => {
            let p = common_tree_form(&el(0)?, DEFAULT_LEAF_BOUND)?;
            writeln!(out, "{}", p.order())?;
        }
        "in-t" => return truth(out, in_t(&el(0)?)),
        "in-f" => return truth(out, in_f(&el(0)?)),
        "cycles" => writeln!(out, "{}", cycle_decomposition(&el(0)?)?)?,
        "swaps" => {
            for (x, y) in swap_decompose(&el(0)?)? {
                writeln!(out, "({x} {y})")?;
            }
        }
        "interleave" => {
            let il = interleave(&el(0)?)?;
            writeln!(out, "conjugator:")?;
            for t in il.conjugator.tokens() {
                match t {
                    Token::A => writeln!(out, "A")?,
                    Token::AInv => writeln!(out, "A^-1")?,
                    Token::T(e) => writeln!(out, "T: {}", e.to_line())?,
                }
            }
            writeln!(
                out,
                "interleaved: {}",
                print_element(&il.perm.to_element(), Style::Cycles)?
            )?;
        }
        "shape" => {
            let tree = |i: usize| -> std::result::Result<Antichain, Failure> {
                Antichain::new(parse_addresses(&ops[i])?).ok_or_else(|| {
                    Failure::Parse(ParseError::Semantic("incomplete antichain".into()).to_string())
                })
            };
            let t = shape_in_t(
                &tree(0)?,
                &parse_addresses(&ops[1])?,
                &tree(2)?,
                &parse_addresses(&ops[3])?,
            )?;
            writeln!(out, "{t}")?;
        }
        "dcoset" => writeln!(out, "{}", double_coset_invariant(&el(0)?))?,
        "maximal" => {
            let cert = maximality_certificate(&el(0)?, &el(1)?)?;
            match m.get_one::<String>("output") {
                Some(path) => {
                    let mut f = std::fs::File::create(path)?;
                    write_certificate(&mut f, &cert)?;
                }
                None => write_certificate(out, &cert)?,
            }
        }
        "verify" => {
            let cert = parse_certificate(&ops[0])?;
            return match check_certificate(&cert, &el(1)?) {
                Ok(()) => {
                    writeln!(out, "ok")?;
                    Ok(EXIT_OK)
                }
                Err(r) => {
                    writeln!(out, "rejected: {r}")?;
                    Ok(EXIT_FALSE)
                }
            };
        }
        _ => unreachable!("clap rejects unknown subcommands"),
    }
    Ok(EXIT_OK)
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match command().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let (name, sub) = matches.subcommand().expect("a subcommand is required");
    match dispatch(name, sub, out) {
        Ok(code) => code,
        Err(Failure::Parse(msg)) | Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PARSE
        }
        Err(Failure::Group(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
