//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code: `0` on success, `1` when `check` finds different
//! character sets (or `gaudin-verify` a nonzero residual), `2` on usage or
//! validation errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use cellchar::combinatorics::{enumerate_dpartitions, enumerate_standard_tableaux};
use cellchar::conjecture::{check_conjecture, params_from_r, ConjectureInput};
use cellchar::fock::{canonical_basis, enumerate_standard_symbols, lm_constructible};
use cellchar::gd12::{cm_cells_n2, verify_gaudin_eigensystem};
use cellchar::jm::jm_cellular_characters;
use cellchar::qlaurent::{parse_rational, rational, Rational};
use cellchar::{CMParams, ChargeVector};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "cellchar", version, about = "Cellular and constructible characters of G(d,1,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Number of components `d` (inferred from --r or --k when given).
    #[arg(long, global = true)]
    d: Option<usize>,

    /// Size `n` (height of the symbols).
    #[arg(long, global = true)]
    n: Option<u32>,

    /// The parameter c0, an integer or a fraction `p/q`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    c0: Option<String>,

    /// Parameters k#_1,...,k#_d (integers or fractions).
    #[arg(long, global = true, allow_hyphen_values = true)]
    k: Option<String>,

    /// Charges r_1,...,r_d, weakly decreasing.
    #[arg(long, global = true, allow_hyphen_values = true)]
    r: Option<String>,

    /// Common integer shift added to the charges.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 0)]
    shift: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// List the d-partitions of n (needs --d, --n).
    Dpartitions,
    /// List the standard d-tableaux of size n (needs --d, --n).
    Tableaux,
    /// Jucys-Murphy cells (needs --n and --c0 with --k, or --r).
    JmCells,
    /// Standard symbols up to height n (needs --r, --n).
    StandardSymbols,
    /// Canonical basis vectors at height n (needs --r, --n).
    CanonicalBasis,
    /// Constructible characters at height n (needs --r, --n).
    LmCells,
    /// Calogero-Moser cellular characters of G(d,1,2) (needs --c0 with --k, or --r).
    CmCellsN2,
    /// Check the Gaudin matrices of every pair i < j (needs --c0 with --k, or --r).
    GaudinVerify,
    /// Compare both character sets (needs --n and --r or --k; --c0 defaults to 1).
    Check,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

fn parse_list<T>(flag: &str, s: &str, f: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, Usage> {
    s.split(',')
        .map(|x| {
            let x = x.trim();
            f(x).ok_or_else(|| Usage(format!("--{flag}: cannot parse '{x}' in '{s}'")))
        })
        .collect()
}

impl Cli {
    fn need_n(&self) -> Result<u32, Usage> {
        self.n.ok_or_else(|| Usage("--n is required".into()))
    }

    fn c0(&self) -> Result<Option<Rational>, Usage> {
        self.c0
            .as_deref()
            .map(|s| parse_rational(s).map_err(|e| Usage(format!("--c0: {e}"))))
            .transpose()
    }

    fn charges(&self) -> Result<Option<ChargeVector>, Usage> {
        let Some(s) = self.r.as_deref() else {
            return Ok(None);
        };
        let v = parse_list("r", s, |x| x.parse::<i64>().ok())?;
        let r = ChargeVector::new(v).map_err(|e| Usage(format!("--r: {e}")))?;
        self.check_d(r.d(), "--r")?;
        Ok(Some(r.shifted(self.shift)))
    }

    fn need_charges(&self) -> Result<ChargeVector, Usage> {
        self.charges()?.ok_or_else(|| Usage("--r is required".into()))
    }

    fn check_d(&self, d: usize, from: &str) -> Result<(), Usage> {
        match self.d {
            Some(x) if x != d => Err(Usage(format!("--d {x} disagrees with {from} of length {d}"))),
            _ => Ok(()),
        }
    }

    fn need_d(&self) -> Result<usize, Usage> {
        if let Some(r) = self.charges()? {
            return Ok(r.d());
        }
        if let Some(s) = self.k.as_deref() {
            let ks = parse_list("k", s, |x| parse_rational(x).ok())?;
            self.check_d(ks.len(), "--k")?;
            return Ok(ks.len());
        }
        match self.d {
            Some(0) => Err(Usage("--d must be at least 1".into())),
            Some(d) => Ok(d),
            None => Err(Usage("--d is required".into())),
        }
    }

    /// Reflection parameters from --c0/--k, or from --r through
    /// `k#_i = -c0 r_i` with `c0` defaulting to 1.
    fn params(&self) -> Result<CMParams, Usage> {
        if let Some(s) = self.k.as_deref() {
            if self.r.is_some() {
                return Err(Usage("give either --k or --r, not both".into()));
            }
            let ks = parse_list("k", s, |x| parse_rational(x).ok())?;
            self.check_d(ks.len(), "--k")?;
            let c0 = self.c0()?.ok_or_else(|| Usage("--c0 is required with --k".into()))?;
            return Ok(CMParams::from_ksharp(c0, ks)?);
        }
        let r = self
            .charges()?
            .ok_or_else(|| Usage("one of --k or --r is required".into()))?;
        let c0 = self.c0()?.unwrap_or_else(|| rational(1));
        params_from_r(&r, &c0).map_err(|e| Usage(format!("--c0: {e}")))
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Usage> {
    let mut text = String::new();
    let mut code = 0;
    let json = match cli.command {
        Command::Dpartitions => {
            let (d, n) = (cli.need_d()?, cli.need_n()?);
            let all = enumerate_dpartitions(d, n);
            for l in &all {
                writeln!(text, "{l}").unwrap();
            }
            json!({ "d": d, "n": n, "dpartitions": all })
        }
        Command::Tableaux => {
            let (d, n) = (cli.need_d()?, cli.need_n()?);
            let mut rows = Vec::new();
            for shape in enumerate_dpartitions(d, n) {
                for t in enumerate_standard_tableaux(&shape) {
                    writeln!(text, "{t}").unwrap();
                    let boxes: Vec<String> = t.boxes().iter().map(|b| b.to_string()).collect();
                    rows.push(json!({ "shape": shape, "boxes": boxes }));
                }
            }
            json!({ "d": d, "n": n, "tableaux": rows })
        }
        Command::JmCells => {
            let (p, n) = (cli.params()?, cli.need_n()?);
            let cells = jm_cellular_characters(&p, n);
            writeln!(text, "# {p}, n={n}, generic={}", cells.generic).unwrap();
            let specs: Vec<String> = cells.cells.iter().map(|c| c.spectrum.to_string()).collect();
            let w = specs.iter().map(|s| s.chars().count()).max().unwrap_or(0);
            for (s, c) in specs.iter().zip(&cells.cells) {
                writeln!(text, "{s:<w$}  {}", c.character).unwrap();
            }
            json!({ "params": p, "cells": cells })
        }
        Command::StandardSymbols => {
            let (r, n) = (cli.need_charges()?, cli.need_n()?);
            let comp = enumerate_standard_symbols(&r, n);
            let mut levels = Vec::new();
            for h in 0..=n {
                let syms: Vec<String> = comp.at_height(h).iter().map(|l| l.to_string()).collect();
                writeln!(text, "{h}  {}", syms.join("  ")).unwrap();
                levels.push(json!({ "height": h, "symbols": syms }));
            }
            json!({ "r": r, "n": n, "levels": levels })
        }
        Command::CanonicalBasis => {
            let (r, n) = (cli.need_charges()?, cli.need_n()?);
            let basis = canonical_basis(&r, n)?;
            let mut vectors = Vec::new();
            let w = basis.at_height(n).map(|(s, _)| s.to_string().chars().count()).max().unwrap_or(0);
            for (sigma, b) in basis.at_height(n) {
                writeln!(text, "{:<w$}  {b}", sigma.to_string()).unwrap();
                let terms: serde_json::Map<String, Value> = b
                    .terms()
                    .map(|(s, c)| (s.to_string(), Value::String(c.to_string())))
                    .collect();
                vectors.push(json!({ "symbol": sigma, "terms": terms }));
            }
            for w in &basis.warnings {
                writeln!(text, "# warning: {w}").unwrap();
            }
            json!({ "r": r, "n": n, "vectors": vectors, "warnings": basis.warnings })
        }
        Command::LmCells => {
            let (r, n) = (cli.need_charges()?, cli.need_n()?);
            let cells = lm_constructible(&r, n)?;
            let w = cells.cells.iter().map(|c| c.symbol.to_string().chars().count()).max().unwrap_or(0);
            for c in &cells.cells {
                writeln!(text, "{:<w$}  {}", c.symbol.to_string(), c.character).unwrap();
            }
            writeln!(text, "# {} cells, {} distinct characters", cells.cells.len(), cells.set().len()).unwrap();
            json!({ "r": r, "n": n, "cells": cells.cells, "set": cells.set() })
        }
        Command::CmCellsN2 => {
            let p = cli.params()?;
            let cells = cm_cells_n2(&p);
            writeln!(text, "# {p}").unwrap();
            let w = cells.family.iter().map(|c| c.label.chars().count()).max().unwrap_or(0);
            for c in &cells.family {
                writeln!(text, "{:<w$}  {}", c.label, c.character).unwrap();
            }
            json!({ "params": p, "classes": cells.classes, "family": cells.family, "set": cells.set() })
        }
        Command::GaudinVerify => {
            let p = cli.params()?;
            let d = p.d();
            let mut reports = Vec::new();
            for i in 1..=d {
                for j in i + 1..=d {
                    let rep = verify_gaudin_eigensystem(&p, i, j)?;
                    let status = if rep.passed { "ok" } else { "FAILED" };
                    writeln!(text, "({i},{j})  {:?}  {status}", rep.regime).unwrap();
                    for res in rep.nonzero_residuals() {
                        writeln!(text, "    {}: {}", res.check, res.value).unwrap();
                    }
                    if !rep.passed {
                        code = 1;
                    }
                    reports.push(rep);
                }
            }
            json!({ "params": p, "reports": reports })
        }
        Command::Check => {
            let n = cli.need_n()?;
            let input = if cli.k.is_some() {
                ConjectureInput::Params(cli.params()?)
            } else {
                let r = cli.need_charges()?;
                let c0 = cli.c0()?.unwrap_or_else(|| rational(1));
                if c0 == rational(0) {
                    return Err(Usage("--c0 must be nonzero for check".into()));
                }
                ConjectureInput::Charges { r, c0 }
            };
            let v = check_conjecture(&input, n)?;
            let join = |s: &mut dyn Iterator<Item = String>| s.collect::<Vec<_>>().join("; ");
            writeln!(text, "r       {}", v.r).unwrap();
            writeln!(text, "params  {}", v.params).unwrap();
            writeln!(text, "n       {}", v.n).unwrap();
            writeln!(text, "mode    {:?}", v.mode).unwrap();
            writeln!(text, "equal   {}", v.equal).unwrap();
            writeln!(text, "CM      {}", join(&mut v.cm_set.iter().map(|c| c.to_string()))).unwrap();
            writeln!(text, "LM      {}", join(&mut v.lm_set.iter().map(|c| c.to_string()))).unwrap();
            if !v.equal {
                writeln!(text, "only CM {}", join(&mut v.only_cm.iter().map(|c| c.to_string()))).unwrap();
                writeln!(text, "only LM {}", join(&mut v.only_lm.iter().map(|c| c.to_string()))).unwrap();
            }
            writeln!(text, "multisets equal  {}", v.multiset_equal).unwrap();
            if let Some(c) = &v.caveat {
                writeln!(text, "caveat  {c}").unwrap();
            }
            if !v.equal {
                code = 1;
            }
            serde_json::to_value(&v)?
        }
    };
    Ok(Output { text, json, code })
}

/// Runs the tool on `args` (including the program name), writing results
/// to `out` unless --out is given and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = match dispatch(&cli) {
        Ok(r) => r,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let body = match cli.format {
        Format::Text => result.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&result.json).expect("serializable");
            s.push('\n');
            s
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return 2;
    }
    result.code
}
