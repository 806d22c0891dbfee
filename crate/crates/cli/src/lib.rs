//! Argument parsing and deterministic execution for the `dessins` binary.

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use dessins_core::arith::text::poly_text;
use dessins_core::arith::{parse_ratfunc, parse_rational, Grammar, RatFunc};
use dessins_core::belyi::{is_belyi, minus_one, ram_profile, verify_identity, RatMap};
use dessins_core::dessin::{
    diagnostics, export_dot, passport_from_construction1, passport_from_construction2,
    triple_from_construction1, DessinPassport, MonodromyTriple,
};
use dessins_core::isogeny::{
    default_samples, preset, verify_isogeny, verify_wp_identity, EllCurveHyper, IsogenyMap,
    WpIdentity, DEFAULT_TOL,
};
use dessins_core::modeq::{jvalue_table, level_pair, modular_polynomial, symmetric_route_check};
use dessins_core::psl2::{coset_table, cusp_classes, Ambient, SubgroupSpec};
use dessins_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "dessins",
    version,
    about = "Dessins d'enfants, Belyi maps and modular equations"
)]
struct Cli {
    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: RawCommand,
}

#[derive(Subcommand, Debug)]
enum RawCommand {
    /// Subgroups of the modular group.
    #[command(subcommand)]
    Subgroup(SubgroupCmd),
    /// Dessins of subgroups.
    #[command(subcommand)]
    Dessin(DessinCmd),
    /// Belyi maps.
    #[command(subcommand)]
    Belyi(BelyiCmd),
    /// Modular equation of a pair of maps on the same line.
    Modeq(ModeqArgs),
    /// Exact j-values at registered points of X0(N).
    Jvalues {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        level: u32,
    },
    /// Elliptic-curve isogenies.
    #[command(subcommand)]
    Isogeny(IsogenyCmd),
    /// Weierstrass p identities.
    #[command(subcommand)]
    Wp(WpCmd),
}

#[derive(Subcommand, Debug)]
enum SubgroupCmd {
    /// Index, genus, elliptic points and cusp widths.
    Info { spec: String },
}

#[derive(Subcommand, Debug)]
enum DessinCmd {
    /// Passport of the dessin of a subgroup.
    Passport {
        spec: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        construction: u8,
        /// Also print monodromy-group diagnostics.
        #[arg(long)]
        diagnostics: bool,
    },
    /// Graphviz rendering of the dessin.
    Dot {
        spec: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        construction: u8,
    },
}

#[derive(Subcommand, Debug)]
enum BelyiCmd {
    /// Ramification profile and Belyi test.
    Verify {
        #[arg(long)]
        f: String,
        #[arg(long, default_value = "z")]
        var: String,
        /// Expected form of f - 1.
        #[arg(long)]
        minus_one: Option<String>,
    },
}

#[derive(Args, Debug)]
struct ModeqArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3), conflicts_with_all = ["f", "g"])]
    level: Option<u32>,
    #[arg(long, requires = "g")]
    f: Option<String>,
    #[arg(long, requires = "f")]
    g: Option<String>,
    #[arg(long, default_value = "1728")]
    scale: String,
    /// Cross-check through y = z + 1/z after shifting z by --shift.
    #[arg(long)]
    check_symmetric_route: bool,
    #[arg(long, default_value = "1")]
    shift: String,
}

#[derive(Subcommand, Debug)]
enum IsogenyCmd {
    /// Exact check of C(h(x)) = g(x)^2 C(x).
    Verify {
        /// `hexagonal3` or `square5`; omit to give --curve, --h and --g.
        preset: Option<String>,
        #[arg(long, conflicts_with = "preset", requires_all = ["h", "g"])]
        curve: Option<String>,
        /// Target curve; defaults to the source curve.
        #[arg(long, requires = "curve")]
        target: Option<String>,
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        g: Option<String>,
        /// Replace g by -g.
        #[arg(long)]
        negate_g: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WpCmd {
    /// Numerical check of a p-function identity.
    Check {
        /// `hexagonal` or `square`.
        identity: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Comma-separated sample points such as `0.23+0.11i`.
        #[arg(long, value_delimiter = ',')]
        samples: Vec<String>,
    },
}

/// A fully validated command.
#[derive(Clone, Debug)]
pub enum Command {
    SubgroupInfo(SubgroupSpec),
    DessinPassport {
        spec: SubgroupSpec,
        construction: u8,
        diagnostics: bool,
    },
    DessinDot {
        spec: SubgroupSpec,
        construction: u8,
    },
    BelyiVerify {
        f: RatMap,
        minus_one: Option<RatMap>,
    },
    ModEq(ModEqInput),
    JValues(u32),
    IsogenyVerify {
        source: EllCurveHyper,
        target: EllCurveHyper,
        map: IsogenyMap,
    },
    WpCheck {
        identity: WpIdentity,
        samples: Vec<Complex64>,
        tol: f64,
    },
}

#[derive(Clone, Debug)]
pub struct ModEqInput {
    pub level: Option<u32>,
    pub f: RatFunc<BigRational>,
    pub g: RatFunc<BigRational>,
    pub scale: BigInt,
    pub route_shift: Option<BigRational>,
}

#[derive(Clone, Debug)]
pub struct Invocation {
    pub json: bool,
    pub command: Command,
}

fn invalid(flag: &str, err: impl std::fmt::Display) -> clap::Error {
    Cli::command().error(
        ErrorKind::ValueValidation,
        format!("invalid value for '{flag}': {err}"),
    )
}

fn spec_arg(s: &str) -> Result<SubgroupSpec, clap::Error> {
    SubgroupSpec::parse(s).map_err(|e| invalid("<SPEC>", e))
}

fn map_arg(flag: &str, src: &str, var: &str, allow_i: bool) -> Result<RatMap, clap::Error> {
    parse_ratfunc(src, Grammar { var, allow_i }).map_err(|e| invalid(flag, e))
}

fn rational_arg(flag: &str, src: &str) -> Result<RatFunc<BigRational>, clap::Error> {
    parse_rational(src, "z").map_err(|e| invalid(flag, e))
}

fn constant_arg(flag: &str, src: &str) -> Result<BigRational, clap::Error> {
    let f = rational_arg(flag, src)?;
    if !f.is_constant() {
        return Err(invalid(flag, "expected a rational constant"));
    }
    Ok(f.numer().coeff(0) / f.denom().coeff(0))
}

fn build(raw: RawCommand) -> Result<Command, clap::Error> {
    Ok(match raw {
        RawCommand::Subgroup(SubgroupCmd::Info { spec }) => Command::SubgroupInfo(spec_arg(&spec)?),
        RawCommand::Dessin(DessinCmd::Passport {
            spec,
            construction,
            diagnostics,
        }) => Command::DessinPassport {
            spec: spec_arg(&spec)?,
            construction,
            diagnostics,
        },
        RawCommand::Dessin(DessinCmd::Dot { spec, construction }) => Command::DessinDot {
            spec: spec_arg(&spec)?,
            construction,
        },
        RawCommand::Belyi(BelyiCmd::Verify { f, var, minus_one }) => Command::BelyiVerify {
            f: map_arg("--f", &f, &var, false)?,
            minus_one: minus_one
                .map(|m| map_arg("--minus-one", &m, &var, false))
                .transpose()?,
        },
        RawCommand::Modeq(a) => {
            let scale = constant_arg("--scale", &a.scale)?;
            if !scale.is_integer() || num_traits::Zero::is_zero(&scale) {
                return Err(invalid("--scale", "expected a nonzero integer"));
            }
            let (f, g) = match (a.level, a.f, a.g) {
                (Some(n), _, _) => level_pair(n).map_err(|e| invalid("--level", e))?,
                (None, Some(f), Some(g)) => (rational_arg("--f", &f)?, rational_arg("--g", &g)?),
                _ => {
                    return Err(Cli::command().error(
                        ErrorKind::MissingRequiredArgument,
                        "modeq needs --level or both --f and --g",
                    ))
                }
            };
            let route_shift = if a.check_symmetric_route {
                Some(constant_arg("--shift", &a.shift)?)
            } else {
                None
            };
            Command::ModEq(ModEqInput {
                level: a.level,
                f,
                g,
                scale: scale.to_integer(),
                route_shift,
            })
        }
        RawCommand::Jvalues { level } => Command::JValues(level),
        RawCommand::Isogeny(IsogenyCmd::Verify {
            preset: name,
            curve,
            target,
            h,
            g,
            negate_g,
        }) => {
            let (source, target, map) = match (name, curve, h, g) {
                (Some(name), _, _, _) => {
                    let p = preset(&name).map_err(|e| invalid("<PRESET>", e))?;
                    (p.curve.clone(), p.curve, p.map)
                }
                (None, Some(c), Some(h), Some(g)) => {
                    let source = EllCurveHyper::parse(&c).map_err(|e| invalid("--curve", e))?;
                    let target = match target {
                        Some(t) => EllCurveHyper::parse(&t).map_err(|e| invalid("--target", e))?,
                        None => source.clone(),
                    };
                    let map = IsogenyMap::new(
                        map_arg("--h", &h, "x", true)?,
                        map_arg("--g", &g, "x", true)?,
                    )
                    .map_err(|e| invalid("--g", e))?;
                    (source, target, map)
                }
                _ => {
                    return Err(Cli::command().error(
                        ErrorKind::MissingRequiredArgument,
                        "isogeny verify needs a preset or --curve, --h and --g",
                    ))
                }
            };
            let map = if negate_g { map.negate_g() } else { map };
            Command::IsogenyVerify {
                source,
                target,
                map,
            }
        }
        RawCommand::Wp(WpCmd::Check {
            identity,
            tol,
            samples,
        }) => {
            let identity = WpIdentity::parse(&identity).map_err(|e| invalid("<IDENTITY>", e))?;
            if tol.is_nan() || tol <= 0.0 {
                return Err(invalid("--tol", "expected a positive number"));
            }
            let samples = if samples.is_empty() {
                default_samples()
            } else {
                samples
                    .iter()
                    .map(|s| {
                        s.trim()
                            .parse::<Complex64>()
                            .map_err(|e| invalid("--samples", e))
                    })
                    .collect::<Result<_, _>>()?
            };
            Command::WpCheck {
                identity,
                samples,
                tol,
            }
        }
    })
}

/// Parse `argv` (including the program name) into a validated invocation.
pub fn parse_invocation<I, T>(argv: I) -> Result<Invocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    Ok(Invocation {
        json: cli.json,
        command: build(cli.command)?,
    })
}

/// Text and JSON renderings of one result, and whether it verified.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn computed(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn bools(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn passport_json(p: &DessinPassport) -> Value {
    json!({
        "degree": p.degree,
        "genus": p.genus,
        "black": p.black,
        "white": p.white,
        "faces": p.faces,
        "nu2": p.nu2,
        "nu3": p.nu3,
        "nu_inf": p.nu_inf,
    })
}

fn triple_for(
    spec: &SubgroupSpec,
    construction: u8,
) -> dessins_core::Result<(DessinPassport, MonodromyTriple)> {
    if construction == 1 {
        let t = coset_table(spec, Ambient::Gamma1)?;
        Ok((
            passport_from_construction1(&t)?,
            triple_from_construction1(&t)?,
        ))
    } else {
        passport_from_construction2(&coset_table(spec, Ambient::Gamma2)?)
    }
}

fn run(cmd: &Command) -> dessins_core::Result<Report> {
    match cmd {
        Command::SubgroupInfo(spec) => {
            let t = coset_table(spec, Ambient::Gamma1)?;
            let p = passport_from_construction1(&t)?;
            let cusps = cusp_classes(&t)?;
            let cusp_text: Vec<String> = cusps.iter().map(|(c, w)| format!("({c},{w})")).collect();
            let (nu2, nu3) = (p.nu2.unwrap_or(0), p.nu3.unwrap_or(0));
            Ok(Report::computed(
                format!(
                    "index={} genus={} nu2={nu2} nu3={nu3} cusps=[{}]",
                    p.degree,
                    p.genus,
                    cusp_text.join(",")
                ),
                json!({
                    "spec": spec.to_string(),
                    "index": p.degree,
                    "genus": p.genus,
                    "nu2": nu2,
                    "nu3": nu3,
                    "cusps": cusps
                        .iter()
                        .map(|(c, w)| json!({"cusp": c.to_string(), "width": w}))
                        .collect::<Vec<_>>(),
                }),
            ))
        }
        Command::DessinPassport {
            spec,
            construction,
            diagnostics: diag,
        } => {
            let (p, triple) = triple_for(spec, *construction)?;
            let mut text = p.to_string();
            let mut doc = passport_json(&p);
            if *diag {
                let d = diagnostics(&triple)?;
                text.push_str(&format!(
                    "\ntransitive={} uniform={} regular={} group_order={} center_trivial={}",
                    bools(d.transitive),
                    bools(d.uniform),
                    bools(d.regular),
                    d.monodromy_group_order,
                    bools(d.center_trivial)
                ));
                doc["diagnostics"] = json!({
                    "transitive": d.transitive,
                    "uniform": d.uniform,
                    "regular": d.regular,
                    "group_order": d.monodromy_group_order,
                    "center_trivial": d.center_trivial,
                });
            }
            Ok(Report::computed(text, doc))
        }
        Command::DessinDot { spec, construction } => {
            let (_, triple) = triple_for(spec, *construction)?;
            let dot = export_dot(&triple);
            Ok(Report::computed(
                dot.trim_end().to_string(),
                json!({ "dot": dot }),
            ))
        }
        Command::BelyiVerify {
            f,
            minus_one: expected,
        } => {
            let profile = ram_profile(f)?;
            let belyi = is_belyi(f)?;
            let mut text = format!("belyi={}\n{profile}", bools(belyi));
            let mut doc = json!({
                "belyi": belyi,
                "degree": profile.degree,
                "over0": profile.over0,
                "over1": profile.over1,
                "overinf": profile.over_inf,
            });
            let mut ok = belyi;
            if let Some(g) = expected {
                let holds = verify_identity(&minus_one(f), g)?;
                text.push_str(&format!("\nminus_one={}", bools(holds)));
                doc["minus_one"] = json!(holds);
                ok &= holds;
            }
            Ok(Report {
                text,
                json: doc,
                ok,
            })
        }
        Command::ModEq(input) => {
            let mut m = modular_polynomial(&input.f, &input.g, &input.scale)?;
            m.level = input.level;
            let phi = m.poly.to_text();
            let mut text = phi.clone();
            let mut doc = json!({
                "level": m.level,
                "phi": phi,
                "content": m.content.to_string(),
                "sign_flipped": m.sign_flipped,
                "symmetric": m.symmetric,
            });
            let mut ok = true;
            if let Some(shift) = &input.route_shift {
                let r = symmetric_route_check(&input.f, &input.g, shift, &input.scale)?;
                let (p, q) = (poly_text(&r.p, "y"), poly_text(&r.q, "y"));
                text.push_str(&format!(
                    "\np={p}\nq={q}\nroute={}",
                    if r.matches { "match" } else { "mismatch" }
                ));
                doc["route"] = json!({
                    "p": p,
                    "q": q,
                    "relation": r.relation.to_text(),
                    "matches": r.matches,
                });
                ok = r.matches;
            }
            Ok(Report {
                text,
                json: doc,
                ok,
            })
        }
        Command::JValues(level) => {
            let rows = jvalue_table(*level)?;
            let lines: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{} {} z={} value={} factored={}{}",
                        r.label,
                        r.vertex,
                        r.point,
                        r.value,
                        r.factored,
                        if r.factored_matches {
                            ""
                        } else {
                            " (mismatch)"
                        }
                    )
                })
                .collect();
            let doc = json!({
                "level": level,
                "rows": rows
                    .iter()
                    .map(|r| json!({
                        "label": r.label,
                        "vertex": r.vertex,
                        "point": r.point.to_string(),
                        "value": r.value.to_string(),
                        "factored": r.factored,
                        "factored_matches": r.factored_matches,
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok(Report {
                text: lines.join("\n"),
                json: doc,
                ok: rows.iter().all(|r| r.factored_matches),
            })
        }
        Command::IsogenyVerify {
            source,
            target,
            map,
        } => {
            let c = verify_isogeny(source, target, map)?;
            Ok(Report {
                text: format!("isogeny={} degree={}", bools(c.holds), c.degree),
                json: json!({ "isogeny": c.holds, "degree": c.degree }),
                ok: c.holds,
            })
        }
        Command::WpCheck {
            identity,
            samples,
            tol,
        } => {
            let r = verify_wp_identity(*identity, samples, *tol)?;
            let name = match identity {
                WpIdentity::Hexagonal => "hexagonal",
                WpIdentity::Square => "square",
            };
            let mut text = format!(
                "identity={name} passed={} max_error={:.3e} checked={} skipped={}",
                bools(r.passed),
                r.max_error,
                r.checked,
                r.skipped
            );
            if let Some(a) = r.assignment {
                text.push_str(&format!(" halfperiods={a}"));
            }
            let doc = json!({
                "identity": name,
                "passed": r.passed,
                "max_error": r.max_error,
                "checked": r.checked,
                "skipped": r.skipped,
                "halfperiods": r.assignment.map(|a| a.to_string()),
            });
            Ok(Report {
                text,
                json: doc,
                ok: r.passed,
            })
        }
    }
}

/// Run a validated invocation. Output is a pure function of the input.
pub fn execute(inv: &Invocation) -> Outcome {
    match run(&inv.command) {
        Ok(r) => {
            let body = if inv.json {
                serde_json::to_string_pretty(&r.json).expect("serializable")
            } else {
                r.text
            };
            Outcome {
                code: if r.ok { EXIT_OK } else { EXIT_FAILED },
                stdout: body + "\n",
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: error_line(&e),
        },
    }
}

/// `error[<code>]: <message>`.
pub fn error_line(e: &Error) -> String {
    format!("error[{}]: {e}\n", e.code())
}

/// Parse and execute; clap's own help and usage output is passed through.
pub fn run_args<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_invocation(argv) {
        Ok(inv) => execute(&inv),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}
