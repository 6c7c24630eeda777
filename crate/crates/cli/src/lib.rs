//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code: 0 on success, 1 when a verification fails,
//! 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scheme_forge::io::Document;
use scheme_forge::{
    catalog, check_triangle_condition, geometry_from_hypergroup, parallel, search_realization,
    to_hypergroup, AssociationScheme, ClassSet, Error, Hypergroup, Report,
};

#[derive(Parser, Debug)]
#[command(
    name = "scheme-forge",
    version,
    about = "Association schemes and hypergroups"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the resulting object as canonical JSON to this path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of violations printed.
    #[arg(long, global = true, default_value_t = 5)]
    witnesses: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Scheme,
    Hypergroup,
    Geometry,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate a scheme from a relation-matrix file or catalog name.
    Build { source: String },
    /// Check the axioms of a scheme, hypergroup or geometry.
    Verify { kind: Kind, source: String },
    /// Print the class hypergroup of a scheme.
    Hyper { source: String },
    /// Complex product of two class sets, e.g. `1,2`.
    Mult {
        source: String,
        lhs: String,
        rhs: String,
    },
    /// Closed subsets of a scheme or sub-hypergroups of a hypergroup.
    Sub { source: String },
    /// Quotient by a closed normal subset (or normal sub-hypergroup).
    Quotient { source: String, subset: String },
    /// Product of two schemes or two hypergroups.
    Product { lhs: String, rhs: String },
    /// Restriction of a scheme to a closed subset, through point `--x0`.
    Restrict {
        source: String,
        subset: String,
        #[arg(long, default_value_t = 0)]
        x0: usize,
    },
    /// Bounded search for a scheme realizing a hypergroup.
    Search {
        source: String,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Projective geometry of a K-vector space hypergroup.
    Geometry { source: String },
    /// Triangle condition of a named valued ring.
    Triangle { name: String },
    /// List the named instances.
    Catalog,
    /// Print (or write with --out) the canonical JSON of an object.
    Export { kind: Kind, source: String },
}

struct Ctx<'a> {
    json: bool,
    out_path: Option<PathBuf>,
    out: &'a mut dyn Write,
}

enum Failure {
    Verification(String, Option<Report>),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Scheme(r) => {
                Failure::Verification("association scheme axioms violated".into(), Some(r))
            }
            Error::Hypergroup(r) => {
                Failure::Verification("hypergroup axioms violated".into(), Some(r))
            }
            Error::Structure(r) => {
                Failure::Verification("structure axioms violated".into(), Some(r))
            }
            Error::Precondition(m) => Failure::Verification(m, None),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let json = cli.json;
    let witnesses = cli.witnesses;
    let mut ctx = Ctx {
        json,
        out_path: cli.out,
        out,
    };
    match execute(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(Failure::Verification(msg, report)) => {
            if json {
                let v = json!({"error": msg, "valid": false, "violations": violations_json(report.as_ref(), witnesses)});
                let _ = writeln!(ctx.out, "{v}");
            } else {
                let _ = writeln!(ctx.out, "invalid: {msg}");
                if let Some(r) = &report {
                    for v in r.violations.iter().take(witnesses) {
                        let _ = writeln!(ctx.out, "{v}");
                    }
                }
            }
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn violations_json(report: Option<&Report>, limit: usize) -> Value {
    let list: Vec<Value> = report
        .map(|r| {
            r.violations
                .iter()
                .take(limit)
                .map(|v| json!({"axiom": v.axiom, "witness": v.witness}))
                .collect()
        })
        .unwrap_or_default();
    Value::Array(list)
}

fn load(source: &str) -> std::result::Result<Option<Document>, Failure> {
    let path = Path::new(source);
    if path.is_file() || source.ends_with(".json") {
        return match Document::load(path) {
            Ok(doc) => Ok(Some(doc)),
            Err(Error::Io(e)) => Err(Failure::Usage(format!("{source}: {e}"))),
            Err(Error::Json(e)) => Err(Failure::Usage(format!("{source}: malformed JSON: {e}"))),
            Err(e) => Err(e.into()),
        };
    }
    Ok(None)
}

fn scheme(source: &str) -> std::result::Result<AssociationScheme, Failure> {
    match load(source)? {
        Some(Document::Scheme(s)) => Ok(s),
        Some(_) => Err(Failure::Usage(format!(
            "{source} does not contain a scheme"
        ))),
        None => Ok(catalog::scheme(source)?),
    }
}

fn hypergroup(source: &str) -> std::result::Result<Hypergroup, Failure> {
    match load(source)? {
        Some(Document::Hypergroup(h)) => Ok(h),
        Some(Document::Scheme(s)) => Ok(to_hypergroup(&s).map_err(Error::Hypergroup)?),
        Some(_) => Err(Failure::Usage(format!(
            "{source} does not contain a hypergroup"
        ))),
        None => Ok(catalog::hypergroup(source)?),
    }
}

/// A scheme when the source names one, otherwise a hypergroup.
fn either(source: &str) -> std::result::Result<Document, Failure> {
    match load(source)? {
        Some(d @ (Document::Scheme(_) | Document::Hypergroup(_))) => Ok(d),
        Some(_) => Err(Failure::Usage(format!(
            "{source} contains neither a scheme nor a hypergroup"
        ))),
        None => match catalog::scheme(source) {
            Ok(s) => Ok(Document::Scheme(s)),
            Err(Error::Precondition(_)) => Ok(Document::Hypergroup(catalog::hypergroup(source)?)),
            Err(e) => Err(e.into()),
        },
    }
}

fn parse_set(text: &str) -> std::result::Result<ClassSet, Failure> {
    text.trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad set element `{t}` in `{text}`")))
        })
        .collect()
}

fn fmt_set(set: &ClassSet) -> String {
    let items: Vec<String> = set.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn commutativity(c: bool) -> &'static str {
    if c {
        "commutative"
    } else {
        "non-commutative"
    }
}

impl Ctx<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> std::io::Result<()> {
        writeln!(self.out, "{}", text.as_ref())
    }

    /// Writes `doc` to `--out` if given.
    fn save(&mut self, doc: &Document) -> std::result::Result<(), Failure> {
        if let Some(path) = &self.out_path {
            std::fs::write(path, doc.to_json())?;
        }
        Ok(())
    }

    fn scheme_summary(&mut self, s: &AssociationScheme) -> std::result::Result<(), Failure> {
        if self.json {
            let v = json!({"commutative": s.is_commutative(), "n": s.n(), "s": s.s(), "valencies": s.valencies(), "valid": true});
            self.line(v.to_string())?;
        } else {
            self.line(format!(
                "valid, n={}, s={}, {}, valencies {:?}",
                s.n(),
                s.s(),
                commutativity(s.is_commutative()),
                s.valencies()
            ))?;
        }
        self.save(&Document::Scheme(s.clone()))
    }

    fn hypergroup_table(&mut self, h: &Hypergroup) -> std::result::Result<(), Failure> {
        if self.json {
            self.line(Document::Hypergroup(h.clone()).to_json())?;
        } else {
            self.line(format!(
                "hypergroup, m={}, e={}, inv={:?}, {}",
                h.m(),
                h.identity(),
                h.inverses(),
                commutativity(h.is_commutative())
            ))?;
            for a in 0..h.m() {
                for b in 0..h.m() {
                    self.line(format!("{a}*{b}={}", fmt_set(h.mult(a, b))))?;
                }
            }
        }
        self.save(&Document::Hypergroup(h.clone()))
    }
}

fn execute(ctx: &mut Ctx<'_>, command: Command) -> Outcome {
    match command {
        Command::Build { source } => {
            let s = scheme(&source)?;
            ctx.scheme_summary(&s)?;
            Ok(0)
        }
        Command::Verify { kind, source } => verify(ctx, kind, &source),
        Command::Hyper { source } => {
            let h = to_hypergroup(&scheme(&source)?).map_err(Error::Hypergroup)?;
            ctx.hypergroup_table(&h)?;
            Ok(0)
        }
        Command::Mult { source, lhs, rhs } => {
            let s = scheme(&source)?;
            let product = s.complex_mult(&parse_set(&lhs)?, &parse_set(&rhs)?)?;
            if ctx.json {
                ctx.line(json!(product).to_string())?;
            } else {
                ctx.line(fmt_set(&product))?;
            }
            Ok(0)
        }
        Command::Sub { source } => {
            let (subsets, flags): (Vec<ClassSet>, Vec<(bool, bool)>) = match either(&source)? {
                Document::Scheme(s) => {
                    let subs = s.closed_subsets()?;
                    let flags = subs
                        .iter()
                        .map(|t| s.is_normal_closed(t))
                        .collect::<Result<_, _>>()?;
                    (subs, flags)
                }
                Document::Hypergroup(h) => {
                    let subs = h.sub_hypergroups()?;
                    let flags = subs
                        .iter()
                        .map(|t| h.is_normal_sub(t))
                        .collect::<Result<_, _>>()?;
                    (subs, flags)
                }
                _ => unreachable!(),
            };
            if ctx.json {
                let list: Vec<Value> = subsets
                    .iter()
                    .zip(&flags)
                    .map(|(t, (n, sn))| json!({"normal": n, "set": t, "strongly_normal": sn}))
                    .collect();
                ctx.line(Value::Array(list).to_string())?;
            } else {
                for (t, (n, sn)) in subsets.iter().zip(&flags) {
                    let mut text = fmt_set(t);
                    if *sn {
                        text.push_str(" strongly-normal");
                    } else if *n {
                        text.push_str(" normal");
                    }
                    ctx.line(text)?;
                }
            }
            Ok(0)
        }
        Command::Quotient { source, subset } => {
            let n = parse_set(&subset)?;
            match either(&source)? {
                Document::Scheme(s) => {
                    let q = s.quotient(&n)?;
                    ctx.scheme_summary(&q.scheme)?;
                }
                Document::Hypergroup(h) => {
                    let q = h.quotient(&n)?;
                    ctx.hypergroup_table(&q.hypergroup)?;
                }
                _ => unreachable!(),
            }
            Ok(0)
        }
        Command::Product { lhs, rhs } => {
            match (either(&lhs)?, either(&rhs)?) {
                (Document::Scheme(a), Document::Scheme(b)) => ctx.scheme_summary(&a.product(&b))?,
                (Document::Hypergroup(a), Document::Hypergroup(b)) => {
                    ctx.hypergroup_table(&a.product(&b))?
                }
                _ => {
                    return Err(Failure::Usage(
                        "product needs two schemes or two hypergroups".to_string(),
                    ))
                }
            }
            Ok(0)
        }
        Command::Restrict { source, subset, x0 } => {
            let s = scheme(&source)?;
            if x0 >= s.n() {
                return Err(Failure::Usage(format!(
                    "--x0 {x0} is not a point of the scheme"
                )));
            }
            let r = s.restrict(&parse_set(&subset)?, x0)?;
            ctx.scheme_summary(&r)?;
            Ok(0)
        }
        Command::Search { source, nmax } => {
            let h = hypergroup(&source)?;
            let outcome = search_realization(&h, nmax, parallel::threads())?;
            if ctx.json {
                let scheme = outcome
                    .scheme
                    .as_ref()
                    .map(|s| serde_json::from_str::<Value>(&Document::Scheme(s.clone()).to_json()))
                    .transpose()
                    .map_err(|e| Failure::Usage(e.to_string()))?;
                let v = json!({"found": outcome.scheme.is_some(), "log": outcome.log, "n_max": nmax, "scheme": scheme});
                ctx.line(v.to_string())?;
            } else {
                for l in &outcome.log {
                    ctx.line(l)?;
                }
            }
            match outcome.scheme {
                Some(s) => {
                    if !ctx.json {
                        ctx.line(format!("realized on {} points", s.n()))?;
                    }
                    ctx.save(&Document::Scheme(s))?;
                    Ok(0)
                }
                None => {
                    if !ctx.json {
                        ctx.line(format!("no realization on ≤ {nmax} points"))?;
                    }
                    Ok(1)
                }
            }
        }
        Command::Geometry { source } => {
            let g = geometry_from_hypergroup(&hypergroup(&source)?)?;
            let doc = Document::Geometry(g.clone());
            if ctx.json {
                ctx.line(doc.to_json())?;
            } else {
                let mut head = format!("valid, points={}, lines={}", g.points(), g.lines().len());
                if g.is_degenerate() {
                    head.push_str(", degenerate");
                }
                ctx.line(head)?;
                for l in g.lines() {
                    ctx.line(format!("{l:?}"))?;
                }
            }
            ctx.save(&doc)?;
            Ok(0)
        }
        Command::Triangle { name } => {
            let v = catalog::valued_ring(&name)?;
            let report = check_triangle_condition(&v);
            report_outcome(ctx, &report, "triangle condition holds".to_string())
        }
        Command::Catalog => {
            let sections: [(&str, &[&str]); 4] = [
                ("schemes", catalog::SCHEME_NAMES),
                ("rings", catalog::RING_NAMES),
                ("valued-rings", catalog::VALUED_RING_NAMES),
                ("hypergroups", catalog::HYPERGROUP_NAMES),
            ];
            if ctx.json {
                let map: serde_json::Map<String, Value> = sections
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                ctx.line(Value::Object(map).to_string())?;
            } else {
                for (title, names) in sections {
                    ctx.line(format!("{title}: {}", names.join(" ")))?;
                }
            }
            Ok(0)
        }
        Command::Export { kind, source } => {
            let doc = match kind {
                Kind::Scheme => Document::Scheme(scheme(&source)?),
                Kind::Hypergroup => Document::Hypergroup(hypergroup(&source)?),
                Kind::Geometry => match load(&source)? {
                    Some(d @ Document::Geometry(_)) => d,
                    Some(_) => return Err(Failure::Usage(format!("{source} is not a geometry"))),
                    None => Document::Geometry(geometry_from_hypergroup(&catalog::hypergroup(
                        &source,
                    )?)?),
                },
            };
            if ctx.out_path.is_some() {
                ctx.save(&doc)?;
            } else {
                ctx.line(doc.to_json())?;
            }
            Ok(0)
        }
    }
}

fn report_outcome(ctx: &mut Ctx<'_>, report: &Report, ok_text: String) -> Outcome {
    if report.valid {
        if ctx.json {
            ctx.line(json!({"valid": true, "violations": []}).to_string())?;
        } else {
            ctx.line(ok_text)?;
        }
        Ok(0)
    } else {
        Err(Failure::Verification(
            "axioms violated".to_string(),
            Some(report.clone()),
        ))
    }
}

fn verify(ctx: &mut Ctx<'_>, kind: Kind, source: &str) -> Outcome {
    match kind {
        Kind::Scheme => {
            let s = scheme(source)?;
            let text = format!("valid, s={}, {}", s.s(), commutativity(s.is_commutative()));
            report_outcome(ctx, &Report::ok(), text)
        }
        Kind::Hypergroup => {
            let h = hypergroup(source)?;
            let text = format!("valid, m={}, {}", h.m(), commutativity(h.is_commutative()));
            report_outcome(ctx, &h.verify(), text)
        }
        Kind::Geometry => {
            let g = match load(source)? {
                Some(Document::Geometry(g)) => g,
                Some(_) => return Err(Failure::Usage(format!("{source} is not a geometry"))),
                None => geometry_from_hypergroup(&catalog::hypergroup(source)?)?,
            };
            let mut text = format!("valid, points={}, lines={}", g.points(), g.lines().len());
            if g.is_degenerate() {
                text.push_str(", degenerate");
            }
            report_outcome(ctx, &g.verify(), text)
        }
    }
}
