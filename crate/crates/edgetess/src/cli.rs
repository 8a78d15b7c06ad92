//! The `edgetess` command-line front end.
//!
//! Exit codes are part of the contract: 0 for success (including an
//! accepted classification and a passing verification), 2 when `classify`
//! rejects, 3 when `verify` fails, 64 for invalid usage, and 1 for runtime
//! errors such as missing or malformed files. Results go to stdout,
//! diagnostics to stderr.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::catalog::{Family, Polygon};
use crate::io::read_polygon_file;
use crate::scalar::{parse_rational, ExtScalar};
use crate::solver::{enumerate_multisets, solve_system};
use crate::svg::{render_svg, RenderStyle};
use crate::tiling::{expand, Verdict};

pub const USAGE: &str = "\
edgetess - polygons that tile the plane by edge reflections

USAGE:
    edgetess solve <e>           angle-count solutions (a b c d) for e edges
    edgetess enumerate <e>       angle multisets as counts of 30 45 60 90 120
    edgetess classify <file>     family of the polygon in <file>; exit 2 if rejected
    edgetess tile <family|file> [--generations N] [--ratio p/q] [--out <svg>]
                                 expand by reflection and render (stdout if no --out)
    edgetess verify <family|file> [--generations N] [--ratio p/q] [--defects]
                                 expand and check the patch; exit 3 on failure
    edgetess catalog --out-dir <dir> [--generations N]
                                 write the eight family tessellation figures

FAMILIES:
    equilateral, thirty-right, isosceles-right, one-twenty-isosceles,
    rectangle (aspect from --ratio, default 1/2), sixty-rhombus,
    kite-60-90-120-90, regular-hexagon

FILES:
    one vertex per line, in boundary order: eight whitespace-separated
    rationals, the x coordinate as coefficients of (1 sqrt2 sqrt3 sqrt6),
    then the y coordinate likewise. `#` starts a comment line.";

enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError::Usage(message.into())
    }

    fn runtime(message: impl std::fmt::Display) -> CliError {
        CliError::Runtime(message.to_string())
    }
}

/// Run the command line. `args` excludes the program name.
pub fn run_cli(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(CliError::Usage(message)) => {
            let _ = writeln!(err, "error: {message}\n\n{USAGE}");
            64
        }
        Err(CliError::Runtime(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
    }
}

fn dispatch(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let Some(command) = args.first() else {
        return Err(CliError::usage("missing subcommand"));
    };
    let rest = &args[1..];
    match command.as_str() {
        "solve" => cmd_solve(rest, out),
        "enumerate" => cmd_enumerate(rest, out),
        "classify" => cmd_classify(rest, out),
        "tile" => cmd_tile(rest, out),
        "verify" => cmd_verify(rest, out),
        "catalog" => cmd_catalog(rest, out),
        "help" | "--help" | "-h" => {
            let _ = writeln!(out, "{USAGE}");
            Ok(0)
        }
        other => Err(CliError::usage(format!("unknown subcommand `{other}`"))),
    }
}

struct Options {
    positional: Vec<String>,
    generations: u32,
    ratio: ExtScalar,
    out: Option<PathBuf>,
    out_dir: Option<PathBuf>,
    defects: bool,
}

fn parse_options(args: &[String]) -> Result<Options, CliError> {
    let mut options = Options {
        positional: Vec::new(),
        generations: 4,
        ratio: ExtScalar::from_ratio(1, 2),
        out: None,
        out_dir: None,
        defects: false,
    };
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let mut value_for = |flag: &str| {
            iter.next()
                .cloned()
                .ok_or_else(|| CliError::usage(format!("{flag} needs a value")))
        };
        match arg.as_str() {
            "--generations" => {
                let raw = value_for("--generations")?;
                options.generations = raw.parse().map_err(|_| {
                    CliError::usage(format!("--generations expects an integer, got `{raw}`"))
                })?;
            }
            "--ratio" => {
                let raw = value_for("--ratio")?;
                let parsed =
                    parse_rational(&raw).map_err(|e| CliError::usage(format!("--ratio: {e}")))?;
                options.ratio = ExtScalar::from_rational(parsed);
            }
            "--out" => options.out = Some(PathBuf::from(value_for("--out")?)),
            "--out-dir" => options.out_dir = Some(PathBuf::from(value_for("--out-dir")?)),
            "--defects" => options.defects = true,
            flag if flag.starts_with("--") => {
                return Err(CliError::usage(format!("unknown flag `{flag}`")));
            }
            positional => options.positional.push(positional.to_string()),
        }
    }
    Ok(options)
}

fn parse_edge_count(args: &[String], command: &str) -> Result<u32, CliError> {
    match args {
        [e] => e
            .parse()
            .map_err(|_| CliError::usage(format!("{command} expects an integer edge count"))),
        _ => Err(CliError::usage(format!(
            "{command} takes exactly one argument: the edge count"
        ))),
    }
}

fn cmd_solve(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let e = parse_edge_count(args, "solve")?;
    let solutions = solve_system(e).map_err(CliError::runtime)?;
    for solution in solutions {
        let _ = writeln!(out, "{solution}");
    }
    Ok(0)
}

fn cmd_enumerate(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let e = parse_edge_count(args, "enumerate")?;
    let multisets = enumerate_multisets(e).map_err(CliError::runtime)?;
    for multiset in multisets {
        let _ = writeln!(out, "{multiset}");
    }
    Ok(0)
}

fn cmd_classify(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let [file] = args else {
        return Err(CliError::usage("classify takes exactly one file argument"));
    };
    let polygon = read_polygon_file(Path::new(file)).map_err(CliError::runtime)?;
    match polygon.classify() {
        Ok(family) => {
            let _ = writeln!(out, "{family}");
            Ok(0)
        }
        Err(rejection) => {
            let _ = writeln!(out, "rejected: {rejection}");
            Ok(2)
        }
    }
}

/// Interpret a seed argument as a family name first, then as a file path.
fn resolve_seed(token: &str, ratio: &ExtScalar) -> Result<Polygon, CliError> {
    if let Some(family) = family_from_name(token, ratio) {
        return family.canonical_polygon().map_err(CliError::runtime);
    }
    read_polygon_file(Path::new(token)).map_err(CliError::runtime)
}

fn family_from_name(name: &str, ratio: &ExtScalar) -> Option<Family> {
    let key: String = name
        .chars()
        .filter(|c| c.is_ascii_alphanumeric())
        .collect::<String>()
        .to_ascii_lowercase();
    match key.as_str() {
        "equilateral" => Some(Family::Equilateral),
        "thirtyright" => Some(Family::ThirtyRight),
        "isoscelesright" => Some(Family::IsoscelesRight),
        "onetwentyisosceles" => Some(Family::OneTwentyIsosceles),
        "rectangle" => Some(Family::Rectangle {
            aspect: ratio.clone(),
        }),
        "sixtyrhombus" => Some(Family::SixtyRhombus),
        "kite" | "kite609012090" => Some(Family::Kite609012090),
        "regularhexagon" | "hexagon" => Some(Family::RegularHexagon),
        _ => None,
    }
}

fn cmd_tile(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let options = parse_options(args)?;
    let [target] = &options.positional[..] else {
        return Err(CliError::usage("tile takes exactly one family or file"));
    };
    let seed = resolve_seed(target, &options.ratio)?;
    let patch = expand(&seed, options.generations);
    let svg = render_svg(&patch, &RenderStyle::default());
    match &options.out {
        Some(path) => {
            std::fs::write(path, svg).map_err(CliError::runtime)?;
        }
        None => {
            let _ = write!(out, "{svg}");
        }
    }
    Ok(0)
}

fn cmd_verify(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let options = parse_options(args)?;
    let [target] = &options.positional[..] else {
        return Err(CliError::usage("verify takes exactly one family or file"));
    };
    let seed = resolve_seed(target, &options.ratio)?;
    let report = expand(&seed, options.generations).verify();
    let _ = writeln!(out, "{}", report.summary());
    if options.defects {
        for line in report.defect_lines() {
            let _ = writeln!(out, "{line}");
        }
    }
    Ok(match report.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => 3,
    })
}

/// Fixed output names for the eight catalog figures.
pub fn catalog_file_names() -> [(&'static str, Family); 8] {
    let families = Family::catalog();
    let names = [
        "equilateral",
        "thirty-right",
        "isosceles-right",
        "one-twenty-isosceles",
        "rectangle",
        "sixty-rhombus",
        "kite-60-90-120-90",
        "regular-hexagon",
    ];
    let mut iter = families.into_iter();
    names.map(|name| (name, iter.next().expect("eight families")))
}

fn cmd_catalog(args: &[String], out: &mut dyn Write) -> Result<i32, CliError> {
    let options = parse_options(args)?;
    if !options.positional.is_empty() {
        return Err(CliError::usage("catalog takes no positional arguments"));
    }
    let Some(dir) = &options.out_dir else {
        return Err(CliError::usage("catalog requires --out-dir"));
    };
    std::fs::create_dir_all(dir).map_err(CliError::runtime)?;
    for (name, family) in catalog_file_names() {
        let seed = family.canonical_polygon().map_err(CliError::runtime)?;
        let patch = expand(&seed, options.generations);
        let svg = render_svg(&patch, &RenderStyle::default());
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, svg).map_err(CliError::runtime)?;
        let _ = writeln!(out, "{}", path.display());
    }
    Ok(0)
}
