//! Command-line front end. Exit codes: 0 pass, 1 falsified, 2 usage or
//! data error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::ajscat::{check_structure, Base, KObject};
use crate::alcove::{parse_word, Refl};
use crate::dualtilt::bs_selfdual_witness;
use crate::error::{AjsError, Result};
use crate::field::{Field, Fp, Q};
use crate::json::{dump_object, load_object, witness_to_json, ObjectJson};
use crate::report::Report;
use crate::rootsys::{RootDatum, RootType, WeylElt};
use crate::suites::{run as run_suite, Suite, SuiteConfig, SuiteResult};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ajs", version, about = "Exact checks for translation, duality and tilting of sheaves on alcoves")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build T_w(base){shift} and print it.
    Build(ObjectArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Write an object (or its self-duality witness) as JSON.
    Dump(DumpArgs),
    /// Read an object dump, validate it and print it.
    Load(LoadArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Root system: A1, A2, B2 (G2 with the `g2` feature).
    #[arg(long = "type", default_value = "A1")]
    root_type: String,
    /// Coefficients: Q or Fp for p in 3, 5, 7, 11, 13, 101.
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args, Debug)]
struct ObjectArgs {
    #[command(flatten)]
    common: Common,
    /// Word such as "s0 s1 sA"; empty for the base itself.
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long, default_value = "P0")]
    base: String,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    shift: i32,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// alcove-lemmas, density, verma, dualtrans, kipptrans, q0dual,
    /// q0summand, mainthm, selfdualanti, controls or all.
    suite: String,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    window: Option<usize>,
    #[arg(long = "max-word")]
    max_word: Option<usize>,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Finite Weyl group element for the kipptrans suite, e.g. "e" or "s0 s1".
    #[arg(long = "tilt-by")]
    tilt_by: Option<String>,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[command(flatten)]
    obj: ObjectArgs,
    /// Dump the self-duality witness of T_w(Q0) instead of the object.
    #[arg(long)]
    witness: bool,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct LoadArgs {
    /// Path of an object dump, or "-" for standard input.
    path: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

/// Parse arguments, run, print to `out`/`err` and return the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn field_of(cmd: &Cmd) -> Result<(String, Option<RootType>)> {
    Ok(match cmd {
        Cmd::Build(o) => (o.common.field.clone(), Some(o.common.root_type.parse()?)),
        Cmd::Verify(v) => (v.common.field.clone(), Some(v.common.root_type.parse()?)),
        Cmd::Dump(d) => (d.obj.common.field.clone(), Some(d.obj.common.root_type.parse()?)),
        Cmd::Load(_) => (String::new(), None),
    })
}

fn check_field(field: &str, ty: Option<RootType>) -> Result<()> {
    let bad = |why: &str| AjsError::BadField { field: field.into(), ty: why.into() };
    match field.to_ascii_uppercase().as_str() {
        "F2" => Err(bad("characteristic 2 is excluded")),
        "F3" if ty == Some(RootType::G2) => Err(bad("G2")),
        "Q" | "F3" | "F5" | "F7" | "F11" | "F13" | "F101" => Ok(()),
        _ => Err(bad("unsupported field")),
    }
}

macro_rules! with_field {
    ($field:expr, $f:ident, $body:expr) => {
        match $field.to_ascii_uppercase().as_str() {
            "Q" => {
                type $f = Q;
                $body
            }
            "F3" => {
                type $f = Fp<3>;
                $body
            }
            "F5" => {
                type $f = Fp<5>;
                $body
            }
            "F7" => {
                type $f = Fp<7>;
                $body
            }
            "F11" => {
                type $f = Fp<11>;
                $body
            }
            "F13" => {
                type $f = Fp<13>;
                $body
            }
            "F101" => {
                type $f = Fp<101>;
                $body
            }
            other => Err(AjsError::BadField { field: other.into(), ty: "unsupported field".into() }),
        }
    };
}

fn dispatch(cmd: &Cmd, out: &mut dyn Write) -> Result<i32> {
    if let Cmd::Load(l) = cmd {
        return load(l, out);
    }
    let (field, ty) = field_of(cmd)?;
    check_field(&field, ty)?;
    with_field!(field, F, match cmd {
        Cmd::Build(o) => build::<F>(o, out),
        Cmd::Verify(v) => verify::<F>(v, out),
        Cmd::Dump(d) => dump::<F>(d, out),
        Cmd::Load(_) => unreachable!(),
    })
}

fn io(e: std::io::Error) -> AjsError {
    AjsError::Schema(format!("i/o: {e}"))
}

fn object<F: Field>(o: &ObjectArgs) -> Result<(&'static RootDatum, Vec<Refl>, KObject<F>)> {
    let rd = RootDatum::get(o.common.root_type.parse()?);
    let word = parse_word(rd, &o.word)?;
    let base: Base = o.base.parse()?;
    Ok((rd, word.clone(), KObject::bott_samelson(rd, &word, base, o.shift)))
}

fn build<F: Field>(o: &ObjectArgs, out: &mut dyn Write) -> Result<i32> {
    let (_, _, m) = object::<F>(o)?;
    match o.common.format {
        Format::Json => writeln!(out, "{}", dump_object(&m)).map_err(io)?,
        Format::Table => {
            writeln!(out, "{}", m.summary()).map_err(io)?;
            write!(out, "{m}").map_err(io)?;
        }
    }
    Ok(EXIT_PASS)
}

fn dump<F: Field>(d: &DumpArgs, out: &mut dyn Write) -> Result<i32> {
    let (rd, word, m) = object::<F>(&d.obj)?;
    let text = if d.witness {
        if d.obj.base.parse::<Base>()? != Base::Q0 || d.obj.shift != 0 {
            return Err(AjsError::Parse("witness dumps need --base Q0 and no shift".into()));
        }
        let w = bs_selfdual_witness::<F>(rd, &word)?;
        serde_json::to_string_pretty(&witness_to_json(&w)?).expect("witness JSON")
    } else {
        dump_object(&m)
    };
    match &d.out {
        Some(p) => std::fs::write(p, text + "\n").map_err(io)?,
        None => writeln!(out, "{text}").map_err(io)?,
    }
    Ok(EXIT_PASS)
}

fn load(l: &LoadArgs, out: &mut dyn Write) -> Result<i32> {
    let text = if l.path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)?
    } else {
        std::fs::read_to_string(&l.path).map_err(io)?
    };
    let head: ObjectJson = serde_json::from_str(&text).map_err(|e| AjsError::Schema(e.to_string()))?;
    check_field(&head.field, Some(head.root_type)).map_err(|e| AjsError::Schema(e.to_string()))?;
    with_field!(head.field, F, load_as::<F>(&text, l.format, out))
}

fn load_as<F: Field>(text: &str, format: Format, out: &mut dyn Write) -> Result<i32> {
    let m = load_object::<F>(text)?;
    let mut rep = Report::new();
    check_structure(&m, &mut rep)?;
    match format {
        Format::Json => writeln!(out, "{}", dump_object(&m)).map_err(io)?,
        Format::Table => {
            writeln!(out, "{}", m.summary()).map_err(io)?;
            writeln!(out, "structure checks: {} checked, {} failed", rep.checked(), rep.failed()).map_err(io)?;
            for f in &rep.failures {
                writeln!(out, "  {f}").map_err(io)?;
            }
        }
    }
    Ok(if rep.passed() { EXIT_PASS } else { EXIT_FALSIFIED })
}

fn parse_tilt(rd: &RootDatum, s: &str) -> Result<WeylElt> {
    if s.trim() == "e" {
        return Ok(WeylElt::E);
    }
    if s.trim() == "w0" {
        return Ok(rd.longest_element());
    }
    let word = parse_word(rd, s)?;
    let fin = word
        .iter()
        .map(|r| if r.is_affine(rd) { Err(AjsError::BadWord(format!("{s}: not a finite Weyl group word"))) } else { Ok(r.0 as usize) })
        .collect::<Result<Vec<_>>>()?;
    rd.from_word(&fin)
}

fn verify<F: Field>(v: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let suite: Suite = v.suite.parse()?;
    let ty: RootType = v.common.root_type.parse()?;
    let rd = RootDatum::get(ty);
    let cfg = SuiteConfig {
        root_type: ty,
        window: v.window,
        max_word: v.max_word,
        seed: v.seed,
        tilt_by: v.tilt_by.as_deref().map(|s| parse_tilt(rd, s)).transpose()?,
    };
    let results = run_suite::<F>(suite, &cfg)?;
    let ok = results.iter().all(SuiteResult::passed);
    match v.common.format {
        Format::Json => {
            let doc = serde_json::json!({ "passed": ok, "results": results });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("report JSON")).map_err(io)?;
        }
        Format::Table => {
            for r in &results {
                print_table(r, out).map_err(io)?;
            }
        }
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FALSIFIED })
}

fn print_table(r: &SuiteResult, out: &mut dyn Write) -> std::io::Result<()> {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{verdict} {} [{} over {}]: {} checked, {} failed, {} ms",
        r.suite,
        r.root_type,
        r.field,
        r.report.checked(),
        r.report.failed(),
        r.millis
    )?;
    for (clause, t) in &r.report.clauses {
        writeln!(out, "    {clause:<40} {:>8} {:>6}", t.checked, t.failed)?;
    }
    for n in &r.notes {
        writeln!(out, "    note: {n}")?;
    }
    for f in &r.report.failures {
        writeln!(out, "    failure: {f}")?;
    }
    Ok(())
}
