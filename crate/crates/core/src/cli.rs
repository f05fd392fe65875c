//! Command-line front end. [`run`] parses arguments, executes one command and returns the
//! process exit code; the binary is a thin wrapper around it.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::alexander::{self, Beta, LabelingMode, ModulePresentation};
use crate::diagram::{self, all_matchings, catalan_matchings, LinkDiagram, Matching, TangleDiagram};
use crate::error::{Error, Result};
use crate::linalg::{minor_gcd, smith_normal_form, to_integer_matrix, to_rational_laurent, RingMatrix, DEFAULT_MINOR_CAP};
use crate::skein::{self, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_OBSTRUCTED: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// Version of the `--json` report layout.
pub const JSON_SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "tangle-gate", version, about = "Persistent tangle invariants and embedding obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of classical crossings for state sums and skein recursions.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Colored,
    Oriented,
    Unoriented,
}

impl From<Mode> for LabelingMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Colored => LabelingMode::Colored,
            Mode::Oriented => LabelingMode::Oriented,
            Mode::Unoriented => LabelingMode::Unoriented,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a diagram and print it back.
    Parse { file: PathBuf },
    /// Closures of a tangle: bracket and component count per matching, or one closed diagram.
    Closures {
        file: PathBuf,
        /// Include crossing matchings (virtual closures).
        #[arg(long)]
        all_matchings: bool,
        /// Print the diagram closed by this matching, e.g. "m (1 3)(2 4)".
        #[arg(long)]
        emit: Option<String>,
    },
    /// List the noncrossing matchings of 2n points.
    Catalan {
        n: usize,
        /// List all perfect matchings, not only the noncrossing ones.
        #[arg(long)]
        all_matchings: bool,
    },
    /// Kauffman bracket of a link, or the Temperley–Lieb expansion of a tangle.
    Bracket { file: PathBuf },
    /// Ideal generated by the brackets of a tangle's closures.
    Ideal {
        file: PathBuf,
        /// Use every matching, giving the virtual bracket ideal.
        #[arg(long)]
        all_matchings: bool,
        /// Test membership of the bracket of these links.
        #[arg(long)]
        contains: Vec<PathBuf>,
        /// Also print the image of the ideal at a primitive eighth root of unity.
        #[arg(long)]
        zeta: bool,
    },
    /// Jones polynomial of an oriented classical link.
    Jones { file: PathBuf },
    /// HOMFLYPT polynomial of an oriented classical link.
    Homflypt { file: PathBuf },
    /// Alexander–Conway polynomial of an oriented classical link.
    Conway { file: PathBuf },
    /// Alexander polynomial of a link diagram or of a presented module.
    Alexander {
        file: Option<PathBuf>,
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// Determinant of a link.
    Det { file: PathBuf },
    /// Torsion and boundary invariants of a tangle or of a presented module.
    TauBeta {
        file: Option<PathBuf>,
        #[arg(long)]
        presentation: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
    /// gcd of the determinants of the numerator and denominator closures of a 4-tangle.
    Krebes { file: PathBuf },
    /// Smith normal form of a matrix (integer or univariate Laurent entries).
    Snf {
        file: Option<PathBuf>,
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Test whether a tangle can embed in a link.
    CheckEmbed {
        #[arg(long)]
        tangle: PathBuf,
        #[arg(long)]
        link: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<Mode>,
    },
}

/// Text lines plus the same content as JSON fields.
#[derive(Default)]
struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
    exit: i32,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn field(&mut self, k: &str, v: impl Into<Value>) {
        self.fields.insert(k.to_string(), v.into());
    }

    /// `name = value` in text, `"name": "value"` in JSON.
    fn value(&mut self, k: &str, v: impl ToString) {
        let v = v.to_string();
        self.line(format!("{k} = {v}"));
        self.field(k, v);
    }
}

/// Run the CLI on `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let name = command_name(&cli.command);
    let res = execute(&cli);
    match res {
        Ok(r) => {
            if cli.json {
                let mut m = Map::new();
                m.insert("schema".into(), json!(JSON_SCHEMA));
                m.insert("command".into(), json!(name));
                m.extend(r.fields);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(m)).unwrap());
            } else {
                for l in &r.lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            r.exit
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let v = json!({ "schema": JSON_SCHEMA, "command": name, "error": { "kind": error_kind(&e), "message": e.to_string() } });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Parse { .. } => "parse",
        Command::Closures { .. } => "closures",
        Command::Catalan { .. } => "catalan",
        Command::Bracket { .. } => "bracket",
        Command::Ideal { .. } => "ideal",
        Command::Jones { .. } => "jones",
        Command::Homflypt { .. } => "homflypt",
        Command::Conway { .. } => "conway",
        Command::Alexander { .. } => "alexander",
        Command::Det { .. } => "det",
        Command::TauBeta { .. } => "tau-beta",
        Command::Krebes { .. } => "krebes",
        Command::Snf { .. } => "snf",
        Command::CheckEmbed { .. } => "check-embed",
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_USAGE,
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Invalid(_) => "invalid",
        Error::NonInvertible(_) | Error::Unassigned(_) => "evaluation",
        Error::CapExceeded { .. } => "cap",
        Error::Mismatch(_) => "mismatch",
        Error::Unsupported(_) => "unsupported",
        Error::IllegalMove(_) => "illegal-move",
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, 0, format!("cannot read {}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<TangleDiagram> {
    TangleDiagram::load(&read(path)?)
}

fn load_link(path: &Path) -> Result<LinkDiagram> {
    let d = load_diagram(path)?;
    if !d.is_link() {
        return Err(Error::Unsupported(format!("{} is a tangle; a closed diagram is required", path.display())));
    }
    Ok(d)
}

fn load_tangle(path: &Path) -> Result<TangleDiagram> {
    let d = load_diagram(path)?;
    if d.is_link() {
        return Err(Error::Unsupported(format!("{} is a closed diagram; a tangle is required", path.display())));
    }
    Ok(d)
}

/// Richest mode the diagram supports.
fn auto_mode(d: &TangleDiagram) -> LabelingMode {
    if d.is_oriented() && d.is_colored() {
        LabelingMode::Colored
    } else if d.is_oriented() {
        LabelingMode::Oriented
    } else {
        LabelingMode::Unoriented
    }
}

/// Mode implied by the variables occurring in a presentation.
fn presentation_mode(p: &ModulePresentation) -> LabelingMode {
    let vars: BTreeSet<String> = (0..p.relations.rows()).flat_map(|i| p.relations.row(i).iter().flat_map(|x| x.vars().to_vec())).collect();
    match vars.len() {
        0 => LabelingMode::Unoriented,
        1 if vars.contains("x") => LabelingMode::Oriented,
        _ => LabelingMode::Colored,
    }
}

fn require_input<'a>(file: &'a Option<PathBuf>, presentation: &'a Option<PathBuf>) -> Result<(Option<&'a Path>, Option<&'a Path>)> {
    match (file, presentation) {
        (Some(f), None) => Ok((Some(f), None)),
        (None, Some(p)) => Ok((None, Some(p))),
        _ => Err(Error::parse(0, 0, "give exactly one of a diagram file or --presentation")),
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let cap = cli.cap;
    let mut r = Report::default();
    match &cli.command {
        Command::Parse { file } => {
            let d = TangleDiagram::parse(&read(file)?)?;
            d.validate()?;
            r.field("n", d.n);
            r.field("crossings", d.crossing_count());
            r.field("virtual", d.virtual_count());
            r.field("components", d.components.len());
            r.field("diagram", d.to_string());
            r.lines.extend(d.to_string().lines().map(str::to_string));
        }
        Command::Closures { file, all_matchings: all, emit } => {
            let t = load_tangle(file)?;
            if let Some(m) = emit {
                let m = Matching::parse(m)?;
                let (c, warnings) = diagram::close_with_warnings(&t, &m)?;
                for w in &warnings {
                    r.line(format!("# warning: {w}"));
                }
                r.field("warnings", warnings);
                r.field("diagram", c.to_string());
                r.lines.extend(c.to_string().lines().map(str::to_string));
                return Ok(r);
            }
            let ms = if *all { all_matchings(t.n) } else { catalan_matchings(t.n) };
            let brackets = skein::closure_brackets(&t, &ms, cap)?;
            let mut rows = Vec::new();
            for (m, b) in ms.iter().zip(&brackets) {
                let comps = t.closure_component_count(m);
                r.line(format!("{m}  components={comps}  bracket = {b}"));
                rows.push(json!({ "matching": m.to_string(), "components": comps, "bracket": b.to_string() }));
            }
            r.field("closures", rows);
        }
        Command::Catalan { n, all_matchings: all } => {
            if *n == 0 {
                return Err(Error::parse(0, 0, "n must be at least 1"));
            }
            let ms = if *all { all_matchings(*n) } else { catalan_matchings(*n) };
            r.field("count", ms.len());
            r.field("matchings", ms.iter().map(|m| m.to_string()).collect::<Vec<_>>());
            r.line(format!("count = {}", ms.len()));
            r.lines.extend(ms.iter().map(|m| m.to_string()));
        }
        Command::Bracket { file } => {
            let d = load_diagram(file)?;
            if d.is_link() {
                r.value("bracket", skein::bracket_with_cap(&d, cap)?);
            } else {
                let flat = skein::flat_decompose(&d, cap)?;
                let mut rows = Map::new();
                for (m, c) in &flat {
                    r.line(format!("[{m}]  {c}"));
                    rows.insert(m.to_string(), json!(c.to_string()));
                }
                r.field("expansion", rows);
            }
        }
        Command::Ideal { file, all_matchings: all, contains, zeta } => {
            let t = load_tangle(file)?;
            let i = if *all { skein::virtual_bracket_ideal_with_cap(&t, cap)? } else { skein::bracket_ideal_with_cap(&t, cap)? };
            r.line(i.to_string());
            r.field("ideal", i.to_string());
            r.field("basis", i.basis().iter().map(|g| g.to_string()).collect::<Vec<_>>());
            if *zeta {
                let z = i.at_zeta();
                r.value("at_zeta", &z);
            }
            let mut rows = Vec::new();
            for path in contains {
                let l = load_link(path)?;
                let b = skein::bracket_with_cap(&l, cap)?;
                let inside = i.contains(&b);
                r.line(format!("{}: bracket {} ideal", path.display(), if inside { "in" } else { "not in" }));
                rows.push(json!({ "link": path.display().to_string(), "bracket": b.to_string(), "contained": inside }));
            }
            if !contains.is_empty() {
                r.field("membership", rows);
            }
        }
        Command::Jones { file } => {
            let d = load_link(file)?;
            let v = skein::jones_with_cap(&d, cap)?;
            r.value("jones", skein::format_quarter(&v, "s", "t"));
        }
        Command::Homflypt { file } => {
            let d = load_link(file)?;
            r.value("homflypt", skein::homflypt_with_cap(&d, cap)?);
        }
        Command::Conway { file } => {
            let d = load_link(file)?;
            r.value("conway", skein::conway_with_cap(&d, cap)?);
        }
        Command::Alexander { file, presentation, mode } => match require_input(file, presentation)? {
            (Some(f), _) => {
                let d = load_link(f)?;
                let mode = mode.map_or_else(|| auto_mode(&d), LabelingMode::from);
                r.field("mode", mode.to_string());
                r.value("alexander", alexander::alexander_polynomial(&d, mode)?);
            }
            (_, Some(p)) => {
                let p = ModulePresentation::parse(&read(p)?)?;
                let q = p.generator_count();
                r.value("alexander", minor_gcd(&p.relations, q - 1, DEFAULT_MINOR_CAP)?.normalize());
            }
            _ => unreachable!(),
        },
        Command::Det { file } => {
            let d = load_link(file)?;
            r.value("det", alexander::determinant(&d)?);
        }
        Command::TauBeta { file, presentation, mode } => {
            let (p, mode) = match require_input(file, presentation)? {
                (Some(f), _) => {
                    let t = load_tangle(f)?;
                    let mode = mode.map_or_else(|| auto_mode(&t), LabelingMode::from);
                    (alexander::fox_presentation(&t, mode)?, mode)
                }
                (_, Some(p)) => {
                    let p = ModulePresentation::parse(&read(p)?)?;
                    let m = mode.map_or_else(|| presentation_mode(&p), LabelingMode::from);
                    (p.specialize(m)?, m)
                }
                _ => unreachable!(),
            };
            r.field("mode", mode.to_string());
            let tau = alexander::tau_of(&p)?;
            let beta = alexander::beta_of(&p, mode)?;
            r.value("tau", &tau);
            r.value("beta", &beta);
            if let Beta::Value(b) = &beta {
                let tb = (&tau * b).normalize();
                r.line(format!("tau*beta = {tb}"));
                r.field("tau_beta", tb.to_string());
            }
        }
        Command::Krebes { file } => {
            let t = load_tangle(file)?;
            let n = alexander::determinant(&diagram::numerator(&t))?;
            let d = alexander::determinant(&diagram::denominator(&t))?;
            r.value("det_numerator", n);
            r.value("det_denominator", d);
            r.value("gcd", alexander::krebes_gcd(&t)?);
        }
        Command::Snf { file, presentation } => {
            let m = match require_input(file, presentation)? {
                (Some(f), _) => RingMatrix::parse(&read(f)?)?,
                (_, Some(p)) => ModulePresentation::parse(&read(p)?)?.relations,
                _ => unreachable!(),
            };
            let diag = snf_diagonal(&m)?;
            r.line(format!("diagonal = {}", diag.join(", ")));
            r.field("diagonal", diag);
        }
        Command::CheckEmbed { tangle, link, mode } => {
            let t = load_tangle(tangle)?;
            let l = load_link(link)?;
            let auto = mode.is_none();
            let mut mode = mode.map_or_else(|| poorer(auto_mode(&t), auto_mode(&l)), LabelingMode::from);
            let mut notes = Vec::new();
            if mode == LabelingMode::Colored && !alexander::colors_compatible(&t, &l) && auto {
                mode = LabelingMode::Oriented;
                notes.push("tangle colors do not all occur in the link; using oriented mode".to_string());
            }
            let mut v = alexander::check_embedding_obstruction(&t, &l, mode)?;
            v.notes.splice(0..0, notes);
            if t.crossing_count() <= cap && l.crossing_count() <= cap {
                let i = if l.is_classical() && t.is_classical() { skein::bracket_ideal_with_cap(&t, cap)? } else { skein::virtual_bracket_ideal_with_cap(&t, cap)? };
                let b = skein::bracket_with_cap(&l, cap)?;
                v.lines.push(alexander::TestLine {
                    name: "bracket ideal".into(),
                    detail: format!("<l> in {i}?"),
                    obstructed: !i.contains(&b),
                });
            } else {
                v.notes.push(format!("bracket ideal skipped: more than {cap} crossings"));
            }
            r.field("mode", mode.to_string());
            r.field(
                "tests",
                v.lines.iter().map(|l| json!({ "name": l.name, "detail": l.detail, "obstructed": l.obstructed })).collect::<Vec<_>>(),
            );
            r.field("notes", v.notes.clone());
            r.field("verdict", if v.obstructed() { "OBSTRUCTED" } else { "passes" });
            r.lines.extend(v.to_string().lines().map(str::to_string));
            if v.obstructed() {
                r.exit = EXIT_OBSTRUCTED;
            }
        }
    }
    Ok(r)
}

/// The poorer of two modes, so that both diagrams support it.
fn poorer(a: LabelingMode, b: LabelingMode) -> LabelingMode {
    let rank = |m: LabelingMode| match m {
        LabelingMode::Unoriented => 0,
        LabelingMode::Oriented => 1,
        LabelingMode::Colored => 2,
    };
    if rank(a) <= rank(b) {
        a
    } else {
        b
    }
}

/// Smith diagonal over the integers, or over `Q[x^±1]` printed as integer-primitive
/// associates.
fn snf_diagonal(m: &RingMatrix) -> Result<Vec<String>> {
    let vars: BTreeSet<String> = (0..m.rows()).flat_map(|i| m.row(i).iter().flat_map(|x| x.vars().to_vec())).collect();
    match vars.len() {
        0 => Ok(smith_normal_form(&to_integer_matrix(m)?).diagonal.iter().map(|d| d.abs().to_string()).collect()),
        1 => {
            let var = vars.into_iter().next().unwrap();
            let q = to_rational_laurent(m, &var)?;
            Ok(smith_normal_form(&q).diagonal.iter().map(|d| d.primitive(&var).to_string()).collect())
        }
        _ => Err(Error::Unsupported("Smith form needs integer or univariate entries".into())),
    }
}
