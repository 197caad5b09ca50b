//! Command-line front end. The `tclink` binary is a thin wrapper around
//! [`run`], which writes to caller-supplied streams so it can be driven
//! from tests.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::alexander::{unknot_check, UnknotVerdict};
use crate::braid::{parse_braid, BraidWord};
use crate::cocycle::{cocycle_breakdown, mirror_chart};
use crate::error::Error;
use crate::movie::{slide_movie, ChartMovie};
use crate::presentation::{
    abelianization, quotient_by_center, tietze_eliminate, torus_covering_group, AbelianInvariants,
    CommutationPolicy, GroupPresentation,
};
use crate::quandle::{colors_used, torus_colorings, Quandle};
use crate::quotients::{finite_quotient_count, TargetGroup};
use crate::ribbon::{ribbon_verdict, CableDecomposition, RibbonVerdict};
use crate::transforms::{h_membership, rho_with, tau, ChartData, IntMatrix3, RotationConvention};

pub const JSON_SCHEMA: &str = "tclink/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

const AFTER_HELP: &str = "\
Braid words are whitespace-separated signed generator indices (\"1 -2 3\"),
with s<i>^k, D^k for powers of the Garside half twist, and (w)^k.

Scope: the tool computes group presentations, abelianizations, finite
quotient counts, quandle colorings, the R_3 cocycle invariant, ribbon
certificates and chart transforms. It does not decide whether two
torus-covering links are equivalent or inequivalent, nor whether a link
group is a classical link group; equal or different invariants are
reported as such and nothing more.

Exit codes: 0 success, 2 invalid input or failed precondition,
3 undecided (Unknown) verdict.";

#[derive(Parser, Debug)]
#[command(name = "tclink", version, about = "Invariants of torus-covering T^2-links given by commuting boundary braids", after_help = AFTER_HELP)]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct PairArgs {
    /// Braid degree.
    #[arg(short = 'm', long = "degree")]
    degree: usize,
    /// Vertical boundary braid.
    #[arg(short = 'a', allow_hyphen_values = true)]
    a: String,
    /// Horizontal boundary braid.
    #[arg(short = 'b', allow_hyphen_values = true)]
    b: String,
    /// Proceed when the boundary braids do not commute, with a warning.
    #[arg(long)]
    allow_noncommuting: bool,
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Add the known central word as a relator.
    #[arg(long)]
    quotient_center: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Presentation of the link group.
    Group {
        #[command(flatten)]
        args: GroupArgs,
        /// Skip Tietze elimination.
        #[arg(long)]
        raw: bool,
    },
    /// Abelianization of the link group.
    Abelianization {
        #[command(flatten)]
        args: GroupArgs,
    },
    /// Homomorphism counts into small finite groups.
    Quotients {
        #[command(flatten)]
        args: GroupArgs,
        /// Target groups, comma separated: S3, D5, Z6, 1.
        #[arg(long, default_value = "S3")]
        target: String,
    },
    /// Quandle colourings fixed by both boundary monodromies.
    Colorings {
        #[command(flatten)]
        pair: PairArgs,
        /// Dihedral quandle order p.
        #[arg(long, default_value_t = 3)]
        quandle: usize,
    },
    /// Cocycle invariant for the R_3 3-cocycle.
    Cocycle {
        #[command(flatten)]
        pair: PairArgs,
        /// Chart movie file; generated when absent.
        #[arg(long)]
        movie: Option<PathBuf>,
        /// Write the movie used to this file.
        #[arg(long)]
        emit_movie: Option<PathBuf>,
        /// Evaluate on the mirror image instead.
        #[arg(long)]
        mirror: bool,
        /// Only p = 3 is supported.
        #[arg(long, default_value_t = 3)]
        quandle: usize,
    },
    /// Ribbon certificate from a cable decomposition.
    Ribbon {
        #[command(flatten)]
        pair: PairArgs,
        /// Strands per block.
        #[arg(long, short = 'n')]
        block_size: usize,
        /// Certificate file to verify instead of searching.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Write the certificate to this file.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Rotate or turn a chart.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        #[arg(short = 'm', long = "degree")]
        degree: Option<usize>,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: Option<String>,
        /// Chart file (degree, a, b lines) instead of -m/-a/-b.
        #[arg(long, conflicts_with_all = ["degree", "a", "b"])]
        chart: Option<PathBuf>,
        /// Word-level rotation convention.
        #[arg(long, value_enum, default_value_t = Convention::Inverse)]
        convention: Convention,
        /// Apply this many times.
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// Membership in the matrix group H.
    HMember {
        /// Rows separated by ';', e.g. "1 0 0; 0 0 -1; 0 1 0".
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Three-valued unknot test for a closed braid.
    Unknot {
        #[arg(short = 'm', long = "degree")]
        degree: usize,
        #[arg(short = 'w', long = "word", allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum TransformKind {
    Rho,
    Tau,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Convention {
    Inverse,
    Reverse,
}

struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { code: EXIT_OK, text, json }
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type CliResult = std::result::Result<Outcome, Failure>;

/// Parse `args` (including the program name), execute, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PRECONDITION } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command, err) {
        Ok(o) => {
            if cli.json {
                let mut doc = json!({ "schema": JSON_SCHEMA, "command": name });
                if let (Value::Object(d), Value::Object(extra)) = (&mut doc, o.json) {
                    d.extend(extra);
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            } else {
                let _ = out.write_all(o.text.as_bytes());
            }
            o.code
        }
        Err(f) => {
            let msg = match f {
                Failure::Lib(e) => e.to_string(),
                Failure::Io(s) => s,
            };
            if cli.json {
                let doc = json!({ "schema": JSON_SCHEMA, "command": name, "error": msg });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            }
            let _ = writeln!(err, "tclink {name}: {msg}");
            EXIT_PRECONDITION
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group { .. } => "group",
        Command::Abelianization { .. } => "abelianization",
        Command::Quotients { .. } => "quotients",
        Command::Colorings { .. } => "colorings",
        Command::Cocycle { .. } => "cocycle",
        Command::Ribbon { .. } => "ribbon",
        Command::Transform { .. } => "transform",
        Command::HMember { .. } => "h-member",
        Command::Unknot { .. } => "unknot",
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &PathBuf, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

/// Parsed boundary braids; commutation is checked here unless waived.
fn load_pair(p: &PairArgs, err: &mut dyn Write) -> std::result::Result<(BraidWord, BraidWord), Failure> {
    let a = parse_braid(&p.a, p.degree)?;
    let b = parse_braid(&p.b, p.degree)?;
    if p.degree >= 2 && !crate::garside::commute_check(&a, &b)? {
        if !p.allow_noncommuting {
            return Err(Error::NotCommuting.into());
        }
        let _ = writeln!(err, "warning: boundary braids do not commute; results describe no torus-covering link");
    }
    Ok((a, b))
}

fn load_group(g: &GroupArgs, err: &mut dyn Write) -> std::result::Result<GroupPresentation, Failure> {
    let (a, b) = load_pair(&g.pair, err)?;
    let mut p = torus_covering_group(&a, &b, CommutationPolicy::Allow)?;
    if g.quotient_center {
        p = quotient_by_center(&p)?;
    }
    Ok(p)
}

fn big_json(d: &num_bigint::BigInt) -> Value {
    d.to_i64().map(Value::from).unwrap_or_else(|| Value::from(d.to_string()))
}

fn abelian_json(inv: &AbelianInvariants) -> Value {
    json!({
        "free_rank": inv.free_rank,
        "torsion": inv.torsion.iter().map(big_json).collect::<Vec<_>>(),
        "display": inv.to_string(),
    })
}

fn dispatch(command: Command, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Group { args, raw } => {
            let mut p = load_group(&args, err)?;
            if !raw {
                p = tietze_eliminate(&p);
            }
            let relators: Vec<String> = p.relators.iter().map(|r| r.display_with(&p.generators)).collect();
            let central = p.central.as_ref().map(|c| c.display_with(&p.generators));
            let j = json!({ "generators": p.generators, "relators": relators, "central": central });
            Ok(Outcome::ok(p.to_text(), j))
        }
        Command::Abelianization { args } => {
            let inv = abelianization(&load_group(&args, err)?);
            Ok(Outcome::ok(format!("{inv}\n"), abelian_json(&inv)))
        }
        Command::Quotients { args, target } => {
            let p = tietze_eliminate(&load_group(&args, err)?);
            let mut text = String::new();
            let mut rows = Vec::new();
            for t in target.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let t: TargetGroup = t.parse()?;
                let c = finite_quotient_count(&p, t)?;
                text.push_str(&format!(
                    "{t}: homomorphisms {}, epimorphisms {}, abelian image {}\n",
                    c.homomorphisms, c.epimorphisms, c.abelian_image
                ));
                if c.central_violations > 0 {
                    text.push_str(&format!("{t}: central word fails to be central in {} images\n", c.central_violations));
                }
                rows.push(json!({
                    "target": t.to_string(),
                    "homomorphisms": c.homomorphisms,
                    "epimorphisms": c.epimorphisms,
                    "abelian_image": c.abelian_image,
                    "central_violations": c.central_violations,
                }));
            }
            Ok(Outcome::ok(text, json!({ "quotients": rows })))
        }
        Command::Colorings { pair, quandle } => {
            let (a, b) = load_pair(&pair, err)?;
            let q = Quandle::dihedral(quandle)?;
            let cs = torus_colorings(&a, &b, &q)?;
            let constant = cs.iter().filter(|c| c.iter().all(|&x| x == c[0])).count();
            let mut text = format!("colorings {} (constant {constant})\n", cs.len());
            let mut rows = Vec::new();
            for c in &cs {
                let used = colors_used(&a, &b, &q, c)?;
                let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                text.push_str(&format!("{}  # colours used: {}\n", join(c), join(&used)));
                rows.push(json!({ "strands": c, "colors_used": used }));
            }
            let j = json!({ "quandle": quandle, "count": cs.len(), "constant": constant, "colorings": rows });
            Ok(Outcome::ok(text, j))
        }
        Command::Cocycle { pair, movie, emit_movie, mirror, quandle } => {
            if quandle != 3 {
                return Err(Error::InvalidArgument(format!(
                    "the cocycle is defined on R_3 only, got --quandle {quandle}"
                ))
                .into());
            }
            let (mut a, mut b) = load_pair(&pair, err)?;
            if mirror {
                (a, b) = mirror_chart(&a, &b);
            }
            let mv = match &movie {
                Some(path) => ChartMovie::from_text(&read(path)?)?,
                None => slide_movie(&a, &b)?,
            };
            if let Some(path) = &emit_movie {
                write(path, &mv.to_text())?;
            }
            let (phi, weights) = cocycle_breakdown(&a, &b, Some(&mv))?;
            let c = phi.coefficients();
            let text = format!(
                "{phi}\ncoefficients [{}, {}, {}]\ncolorings {}\nR3 steps {}\n",
                c[0],
                c[1],
                c[2],
                weights.len(),
                mv.r3_count()
            );
            let j = json!({
                "display": phi.to_string(),
                "coefficients": c,
                "r3_steps": mv.r3_count(),
                "weights": weights,
            });
            Ok(Outcome::ok(text, j))
        }
        Command::Ribbon { pair, block_size, witness, emit_certificate } => {
            let (a, b) = load_pair(&pair, err)?;
            if block_size == 0 || a.degree() % block_size != 0 {
                return Err(Error::InvalidArgument(format!(
                    "block size {block_size} does not divide degree {}",
                    a.degree()
                ))
                .into());
            }
            let m = a.degree() / block_size;
            let w = match &witness {
                Some(path) => Some(CableDecomposition::from_text(&read(path)?)?),
                None => None,
            };
            let verdict = ribbon_verdict(&a, &b, block_size, m, w.as_ref())?;
            match verdict {
                RibbonVerdict::Ribbon(d) => {
                    if let Some(path) = &emit_certificate {
                        write(path, &d.to_text())?;
                    }
                    let text = format!(
                        "ribbon\n# b = N(R(b)) . iota(beta_1) ... iota(beta_m) and a = iota(R_1(a)) ... iota(R_m(a)) hold in the braid group\n{}",
                        d.to_text()
                    );
                    Ok(Outcome::ok(text, json!({ "verdict": "ribbon", "certificate": d.to_text() })))
                }
                RibbonVerdict::Unknown(reason) => Ok(Outcome {
                    code: EXIT_UNKNOWN,
                    text: format!("unknown\n# {reason}\n"),
                    json: json!({ "verdict": "unknown", "reason": reason }),
                }),
            }
        }
        Command::Transform { kind, degree, a, b, chart, convention, times } => {
            let mut c = match (&chart, degree, a, b) {
                (Some(path), ..) => ChartData::from_text(&read(path)?)?,
                (None, Some(m), Some(a), Some(b)) => ChartData::new(parse_braid(&a, m)?, parse_braid(&b, m)?)?,
                _ => {
                    return Err(Error::InvalidArgument("give --chart or all of -m, -a, -b".into()).into());
                }
            };
            let conv = match convention {
                Convention::Inverse => RotationConvention::Inverse,
                Convention::Reverse => RotationConvention::Reverse,
            };
            for _ in 0..times {
                c = match kind {
                    TransformKind::Rho => rho_with(&c, conv)?,
                    TransformKind::Tau => tau(&c)?,
                };
            }
            let j = json!({ "degree": c.degree, "a": c.a.to_string(), "b": c.b.to_string() });
            Ok(Outcome::ok(c.to_text(), j))
        }
        Command::HMember { matrix } => {
            let m: IntMatrix3 = matrix.parse()?;
            let member = h_membership(&m);
            let j = json!({ "matrix": m.0, "determinant": m.determinant(), "member": member });
            Ok(Outcome::ok(format!("{member}\n"), j))
        }
        Command::Unknot { degree, word } => {
            let beta = parse_braid(&word, degree)?;
            let v = unknot_check(&beta)?;
            let (code, j) = match &v {
                UnknotVerdict::Unknot { reduced } => {
                    (EXIT_OK, json!({ "verdict": "unknot", "reduced": reduced.to_string(), "reduced_degree": reduced.degree() }))
                }
                UnknotVerdict::NotUnknot { alexander } => {
                    (EXIT_OK, json!({ "verdict": "not_unknot", "alexander": alexander.to_string() }))
                }
                UnknotVerdict::Unknown { reduced, alexander } => (
                    EXIT_UNKNOWN,
                    json!({ "verdict": "unknown", "reduced": reduced.to_string(), "reduced_degree": reduced.degree(), "alexander": alexander.to_string() }),
                ),
            };
            Ok(Outcome { code, text: format!("{v}\n"), json: j })
        }
    }
}
