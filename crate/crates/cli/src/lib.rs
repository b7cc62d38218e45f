//! Command-line front end for `zcolor`.
//!
//! Exit codes: 0 success, 1 a verification or coloring check failed,
//! 2 invalid input or a violated hypothesis.

pub mod verify;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;
use zcolor::{
    coloring_space, count_colors, gen_pretzel, gen_torus, is_z_colorable, link_determinant,
    min_colors, nontrivial_basis, normalize, verify_coloring, BigInt, ColoringError, ColoringFile,
    Diagram, PretzelSpec, TorusSpec, ZColoring, DEFAULT_BOUND,
};

use verify::{all_pass, load_fixture, parse_int_list, VerificationOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zcolor", version, about = "Integer colorings of link diagrams")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a pretzel or torus diagram as JSON.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Summarize a diagram: connectivity, determinant, coloring space.
    Analyze { diagram: PathBuf },
    /// Search for a coloring with the fewest distinct colors.
    Mincolor {
        diagram: PathBuf,
        /// Coefficient bound for the kernel search.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Check a named result over a sweep of parameters.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    /// Print the determinant of a connected diagram.
    Det { diagram: PathBuf },
    /// Check a coloring against a diagram.
    Color {
        diagram: PathBuf,
        coloring: PathBuf,
        /// Shift to minimum 0 and divide by the gcd.
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write the result document to this file.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Pretzel link P(a_1, ..., a_k), e.g. `pretzel 2,-2,2,-2`.
    Pretzel {
        #[arg(allow_hyphen_values = true)]
        twists: String,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Torus link T(pn, n).
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum Claim {
    /// Four-coloring of T(pn, n), n even and above 2.
    Thm1 {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        p: Vec<i64>,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// P(n, -n, ..., n, -n) needs exactly n + 2 colors.
    Thm2 {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<i64>,
        #[arg(long, value_delimiter = ',', default_value = "4")]
        strands: Vec<usize>,
    },
    /// P(-n, n+1, n(n+1)) needs exactly n^2 + n + 3 colors.
    Thm3 {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<i64>,
    },
    /// Connected Z-colorable diagrams need at least four colors.
    Fact {
        /// Diagram files or generator names such as `P(2,-2,2,-2)`, `T(8,4)`.
        #[arg(required = true)]
        fixtures: Vec<String>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_BAD_INPUT };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_BAD_INPUT
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Gen { family } => cmd_gen(family, cli.json, out),
        Command::Analyze { diagram } => cmd_analyze(&read_diagram(diagram)?, cli.json, out),
        Command::Mincolor {
            diagram,
            bound,
            output,
        } => cmd_mincolor(&read_diagram(diagram)?, *bound, output, cli.json, out),
        Command::Verify { claim } => cmd_verify(claim, cli.json, out, err),
        Command::Det { diagram } => cmd_det(&read_diagram(diagram)?, cli.json, out),
        Command::Color {
            diagram,
            coloring,
            normalize,
            output,
        } => cmd_color(
            &read_diagram(diagram)?,
            &read_coloring(coloring)?,
            *normalize,
            output,
            cli.json,
            out,
        ),
    }
}

pub fn read_diagram(path: &Path) -> Result<Diagram> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Diagram::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Accepts a coloring document `{"colors": [...]}` or a bare array.
pub fn read_coloring(path: &Path) -> Result<ZColoring> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let colors = match value {
        Value::Object(ref map) if map.contains_key("colors") => map["colors"].clone(),
        other => other,
    };
    let colors: Vec<i64> = serde_json::from_value(colors)
        .with_context(|| format!("{}: colors must be an array of integers", path.display()))?;
    Ok(ZColoring::new(colors))
}

fn write_json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, format!("{contents}\n"))
        .with_context(|| format!("writing {}", path.display()))
}

fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

fn fmt_list(xs: impl IntoIterator<Item = i64>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    parts.join(", ")
}

fn cmd_gen(family: &Family, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (d, output) = match family {
        Family::Pretzel { twists, output } => {
            let spec = PretzelSpec::new(parse_int_list(twists)?)?;
            (gen_pretzel(&spec)?, output)
        }
        Family::Torus { p, n, output } => (gen_torus(&TorusSpec::new(*p, *n)?), output),
    };
    let text = d.serialize();
    match &output.output {
        None => writeln!(out, "{text}")?,
        Some(path) => {
            write_file(path, &text)?;
            if json {
                write_json_line(
                    out,
                    &serde_json::json!({
                        "name": d.name,
                        "arcs": d.arc_count,
                        "crossings": d.crossing_count(),
                        "output": path.display().to_string(),
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "wrote {}: {} arcs, {} crossings -> {}",
                    d.name,
                    d.arc_count,
                    d.crossing_count(),
                    path.display()
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct Analysis {
    name: String,
    arcs: usize,
    crossings: usize,
    free_circles: usize,
    connected: bool,
    components: usize,
    determinant: Option<Value>,
    kernel_dim: usize,
    z_colorable: bool,
    sample_coloring: Option<Vec<i64>>,
}

fn cmd_analyze(d: &Diagram, json: bool, out: &mut dyn Write) -> Result<i32> {
    let determinant = match link_determinant(d) {
        Ok(x) => Some(x),
        Err(ColoringError::Unsupported) => None,
        Err(e) => return Err(e.into()),
    };
    let z_colorable = is_z_colorable(d)?;
    let sample_coloring = if z_colorable {
        let basis = nontrivial_basis(d)?;
        Some(normalize(&ZColoring::try_from_big(&basis.vectors[0])?).colors)
    } else {
        None
    };
    let a = Analysis {
        name: d.name.clone(),
        arcs: d.arc_count,
        crossings: d.crossing_count(),
        free_circles: d.free_circles,
        connected: d.is_connected(),
        components: d.component_count(),
        determinant: determinant.as_ref().map(big_json),
        kernel_dim: coloring_space(d)?.dim(),
        z_colorable,
        sample_coloring,
    };
    if json {
        write_json_line(out, &a)?;
        return Ok(EXIT_OK);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "name: {}", a.name)?;
    writeln!(out, "arcs: {}", a.arcs)?;
    writeln!(out, "crossings: {}", a.crossings)?;
    writeln!(out, "free circles: {}", a.free_circles)?;
    writeln!(out, "connected: {}", yes_no(a.connected))?;
    writeln!(out, "components: {}", a.components)?;
    match &determinant {
        Some(x) => writeln!(out, "determinant: {x}")?,
        None => writeln!(out, "determinant: undefined (split diagram)")?,
    }
    writeln!(out, "kernel dimension: {}", a.kernel_dim)?;
    writeln!(out, "Z-colorable: {}", yes_no(a.z_colorable))?;
    if let Some(c) = &a.sample_coloring {
        writeln!(out, "sample coloring: [{}]", fmt_list(c.iter().copied()))?;
    }
    Ok(EXIT_OK)
}

fn cmd_mincolor(
    d: &Diagram,
    bound: u32,
    output: &OutputArg,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    if !is_z_colorable(d)? {
        anyhow::bail!("{} admits no nontrivial Z-coloring", d.name);
    }
    let r = min_colors(d, bound)?;
    if let Some(path) = &output.output {
        let doc = ColoringFile::new(d, &r.witness);
        write_file(path, &serde_json::to_string(&doc)?)?;
    }
    if json {
        write_json_line(
            out,
            &serde_json::json!({
                "diagram": d.name,
                "minimum": r.minimum.0,
                "exact": r.exact,
                "bound": r.bound_used,
                "witness": r.witness.colors,
                "color_set": r.witness.color_set(),
            }),
        )?;
    } else {
        let qualifier = if r.exact {
            "exact".to_string()
        } else {
            format!("upper bound, coefficients in [-{0}, {0}]", r.bound_used)
        };
        writeln!(out, "diagram: {}", d.name)?;
        writeln!(out, "minimum colors: {} ({qualifier})", r.minimum)?;
        writeln!(
            out,
            "witness: [{}]",
            fmt_list(r.witness.colors.iter().copied())
        )?;
        writeln!(out, "color set: {{{}}}", fmt_list(r.witness.color_set()))?;
    }
    Ok(EXIT_OK)
}

fn cmd_det(d: &Diagram, json: bool, out: &mut dyn Write) -> Result<i32> {
    let det = link_determinant(d).with_context(|| format!("determinant of {}", d.name))?;
    if json {
        write_json_line(
            out,
            &serde_json::json!({ "diagram": d.name, "determinant": big_json(&det) }),
        )?;
    } else {
        writeln!(out, "{det}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_color(
    d: &Diagram,
    c: &ZColoring,
    normalize_it: bool,
    output: &OutputArg,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = verify_coloring(d, c)?;
    let result = if normalize_it {
        normalize(c)
    } else {
        c.clone()
    };
    if let Some(path) = &output.output {
        write_file(
            path,
            &serde_json::to_string(&ColoringFile::new(d, &result))?,
        )?;
    }
    let colors: BTreeSet<i64> = result.color_set();
    if json {
        write_json_line(
            out,
            &serde_json::json!({
                "diagram": d.name,
                "valid": report.is_valid(),
                "failed_crossings": report.failed_crossings,
                "trivial": c.is_trivial(),
                "color_count": count_colors(c).0,
                "colors": result.colors,
            }),
        )?;
    } else if report.is_valid() {
        let kind = if c.is_trivial() { " (trivial)" } else { "" };
        writeln!(
            out,
            "valid{kind}: {} colors {{{}}}",
            count_colors(c),
            fmt_list(colors)
        )?;
        if normalize_it && output.output.is_none() {
            writeln!(
                out,
                "normalized: [{}]",
                fmt_list(result.colors.iter().copied())
            )?;
        }
    } else {
        let failed: Vec<i64> = report.failed_crossings.iter().map(|&i| i as i64).collect();
        writeln!(
            out,
            "invalid: relation fails at crossings [{}]",
            fmt_list(failed)
        )?;
    }
    Ok(if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_verify(claim: &Claim, json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let (name, outcomes) = match claim {
        Claim::Thm1 { p, n } => {
            let mut all = Vec::new();
            for &p in p {
                for &n in n {
                    all.extend(verify::verify_thm1(p, n)?);
                }
            }
            ("thm1", all)
        }
        Claim::Thm2 { n, strands } => {
            let mut all = Vec::new();
            for &n in n {
                for &s in strands {
                    all.extend(verify::verify_thm2(n, s)?);
                }
            }
            ("thm2", all)
        }
        Claim::Thm3 { n } => {
            let mut all = Vec::new();
            for &n in n {
                all.extend(verify::verify_thm3(n)?);
            }
            ("thm3", all)
        }
        Claim::Fact { fixtures } => {
            let loaded = fixtures
                .iter()
                .map(|f| Ok((f.clone(), load_fixture(f)?)))
                .collect::<Result<Vec<_>>>()?;
            ("fact", verify::verify_fact(&loaded)?)
        }
    };
    report_outcomes(name, &outcomes, json, out, err)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    claim: &'a str,
    passed: bool,
    outcomes: &'a [VerificationOutcome],
}

fn report_outcomes(
    claim: &str,
    outcomes: &[VerificationOutcome],
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let passed = all_pass(outcomes);
    if json {
        write_json_line(
            out,
            &VerifyReport {
                claim,
                passed,
                outcomes,
            },
        )?;
    } else {
        for o in outcomes {
            writeln!(out, "{o}")?;
        }
        let failed = outcomes.iter().filter(|o| !o.pass).count();
        if failed == 0 {
            writeln!(out, "{claim}: all {} checks passed", outcomes.len())?;
        } else {
            writeln!(out, "{claim}: {failed} of {} checks FAILED", outcomes.len())?;
        }
    }
    if !passed {
        writeln!(err, "{claim}: verification failed")?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}
