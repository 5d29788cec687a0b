//! `iwalog`: compute, serialize and check.
//!
//! Every subcommand writes one JSON document to standard output or `--out`.
//! Exit status is 2 for usage errors, 1 for a failed check or computation,
//! 0 otherwise.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use iwalog::{json, suites};
use iwalog_core::frac;
use iwalog_core::galimg::{self, Field, MatGroupGen};
use iwalog_core::iwadist::{self, CharPoint, Sign};
use iwalog_core::logmat::{self, CrystalParams, QForm, Route};
use iwalog_core::qexp::{self, ImagQuadCtx};
use iwalog_core::regdiv::{self, SpecFamily};
use iwalog_core::split::{self, AlphaBetaPair, SignedPair};
use iwalog_core::PrimeCtx;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "iwalog", version, about = "p-adic logarithmic matrices, signed splittings and their checks")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Quotient,
    Series,
}

#[derive(clap::Args)]
struct LogArgs {
    #[arg(long)]
    p: u64,
    /// Weight parameter: the form has weight `k + 2`.
    #[arg(long)]
    k: u32,
    #[arg(long)]
    level: u32,
    #[arg(long, default_value_t = 8)]
    prec: u32,
    /// Nebentypus value `ε(p)`.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    eps: i64,
    #[arg(long, value_enum, default_value_t = RouteArg::Quotient)]
    route: RouteArg,
    /// Truncation degree for the series route.
    #[arg(long, default_value_t = 260)]
    cap: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Truncated half-logarithm `log^±_{p,m}` at a level.
    Halflog {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 12)]
        prec: u32,
    },
    /// Logarithmic matrix `M′` for `a_p = 0`.
    Logmatrix {
        #[command(flatten)]
        args: LogArgs,
        /// Return `Q_g^{-1}·M′` instead.
        #[arg(long)]
        combined: bool,
    },
    /// Recover `(L_+, L_−)` from `{"alpha", "beta"}`, or apply the forward map to `{"plus", "minus"}`.
    Split {
        #[command(flatten)]
        args: LogArgs,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        forward: bool,
        #[arg(long, default_value_t = 0)]
        denom_budget: u32,
    },
    /// Divide `{"l": series}` by `det(Q_g^{-1}M′)`.
    Antisym {
        #[command(flatten)]
        args: LogArgs,
        #[arg(long)]
        input: PathBuf,
    },
    /// Specialization checks for `F | G` given `{"f", "g", "points"}`.
    Regdiv {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 8)]
        prec: u32,
        #[arg(long, default_value_t = 2)]
        nvars: usize,
        #[arg(long, default_value_t = 5)]
        deg_cap: u32,
        #[arg(long)]
        input: PathBuf,
    },
    /// Closure of `{"gens": [...]}` (or the standard `SL_2` pair) with its invariants.
    Galimg {
        #[arg(long)]
        p: u64,
        /// Work over `F_{p²}`.
        #[arg(long)]
        quadratic: bool,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Theta series of `ψ = (·)^t` on an imaginary quadratic order.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(long)]
        power: u32,
        #[arg(long)]
        nmax: usize,
    },
    /// Depleted Eisenstein series over `Z[ζ_m]`.
    Eis {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 1)]
        zeta_index: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        nmax: usize,
    },
    /// Remove the coefficients at multiples of `p` from a q-expansion file.
    Deplete {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate a series file at `ζ_{p^t}·u^j − 1`.
    Eval {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 12)]
        prec: u32,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        j: i64,
    },
    /// Run a named invariant suite.
    Check {
        #[arg(long)]
        suite: String,
    },
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&s).with_context(|| format!("parsing {}", path.display()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| anyhow!("input is missing {key:?}"))
}

fn log_matrix(a: &LogArgs) -> Result<(CrystalParams, logmat::LogMatrix)> {
    let prm = CrystalParams::ap_zero(a.p, a.prec, a.k, a.eps)?;
    let route = match a.route {
        RouteArg::Quotient => Route::Quotient { modulus: iwadist::omega_tw(prm.ctx, a.level + 1, a.k + 1)? },
        RouteArg::Series => Route::Series { cap: a.cap },
    };
    let m = logmat::log_matrix_ap0(&prm, a.level, &route)?;
    Ok((prm, m))
}

fn combined(a: &LogArgs) -> Result<(CrystalParams, logmat::LogMatrix)> {
    let (prm, m) = log_matrix(a)?;
    let qi = frac::mat_inv(&logmat::q_matrix(&prm, QForm::G)?)?;
    let r = logmat::combined(&qi, &m)?;
    Ok((prm, r))
}

/// The report and whether it counts as success.
fn execute(cli: &Cli) -> Result<(Value, bool)> {
    Ok(match &cli.cmd {
        Cmd::Halflog { p, m, sign, level, prec } => {
            let ctx = PrimeCtx::new(*p, *prec)?;
            let s = match sign {
                SignArg::Plus => Sign::Plus,
                SignArg::Minus => Sign::Minus,
            };
            (json::series(&iwadist::halflog(ctx, s, *m, *level)?), true)
        }
        Cmd::Logmatrix { args, combined: c } => {
            let (_, m) = if *c { combined(args)? } else { log_matrix(args)? };
            (json::matrix(&m), true)
        }
        Cmd::Split { args, input, forward, denom_budget } => {
            let (prm, r) = combined(args)?;
            let v = read_json(input)?;
            let ctx = prm.ctx;
            if *forward {
                let pair = SignedPair {
                    plus: json::series_in(ctx, field(&v, "plus")?)?,
                    minus: json::series_in(ctx, field(&v, "minus")?)?,
                    level: args.level,
                };
                let ab = split::forward(&pair, &r)?;
                (json!({ "alpha": json::series(&ab.alpha), "beta": json::series(&ab.beta), "level": ab.level }), true)
            } else {
                let ab = AlphaBetaPair {
                    alpha: json::series_in(ctx, field(&v, "alpha")?)?,
                    beta: json::series_in(ctx, field(&v, "beta")?)?,
                    level: args.level,
                };
                let s = split::signed_split(&ab, &r, args.level, *denom_budget)?;
                (json!({ "plus": json::series(&s.plus), "minus": json::series(&s.minus), "level": s.level }), true)
            }
        }
        Cmd::Antisym { args, input } => {
            let (prm, r) = combined(args)?;
            let l = json::series_in(prm.ctx, field(&read_json(input)?, "l")?)?;
            (json::series(&split::antisym_factor(&l, &r)?), true)
        }
        Cmd::Regdiv { p, prec, nvars, deg_cap, input } => {
            let ctx = PrimeCtx::new(*p, *prec)?;
            let v = read_json(input)?;
            let f = json::mseries_in(ctx, *nvars, *deg_cap, field(&v, "f")?)?;
            let g = json::mseries_in(ctx, *nvars, *deg_cap, field(&v, "g")?)?;
            let pts = field(&v, "points")?
                .as_array()
                .ok_or_else(|| anyhow!("points must be an array"))?
                .iter()
                .map(|x| json::padic_in(ctx, x))
                .collect::<Result<Vec<_>>>()?;
            let rep = regdiv::chevalley_check(&f, &g, &SpecFamily::new(pts)?)?;
            let points: Vec<Value> = rep
                .points
                .iter()
                .map(|r| json!({ "point": json::padic(&r.point), "divides": r.divides, "window": r.window }))
                .collect();
            let out = json!({
                "content": rep.content,
                "x0_coprime": rep.x0_coprime,
                "specializations": rep.specializations,
                "points": points,
                "direct": rep.direct,
                "all_hypotheses": rep.all_hypotheses(),
            });
            (out, true)
        }
        Cmd::Galimg { p, quadratic, input, budget } => {
            let f = if *quadratic { Field::quadratic(*p)? } else { Field::prime(*p)? };
            let g = match input {
                None => MatGroupGen::sl2_standard(f),
                Some(path) => {
                    let v = read_json(path)?;
                    let gens = field(&v, "gens")?
                        .as_array()
                        .ok_or_else(|| anyhow!("gens must be an array"))?
                        .iter()
                        .map(|m| json::mat_in(&f, m))
                        .collect::<Result<Vec<_>>>()?;
                    let dim = gens.first().map_or(2, |m| m.rows().len());
                    MatGroupGen::new(f, dim, gens)?
                }
            };
            let grp = galimg::closure(&g, *budget)?;
            let tau = if g.dim == 4 { galimg::find_tau(&g, *budget)? } else { None };
            let out = json!({
                "field_order": f.order(),
                "dim": g.dim,
                "order": grp.order(),
                "abelian": grp.is_abelian(),
                "solvable": galimg::is_solvable(&g, *budget)?,
                "tau": tau.map(|c| json!({
                    "element": json::mat(&c.element),
                    "min_poly": c.min_poly,
                    "rank_t_minus_1": c.rank_t_minus_1,
                    "quotient_rank": c.quotient_rank,
                })),
            });
            (out, true)
        }
        Cmd::Theta { disc, power, nmax } => {
            let ctx = ImagQuadCtx::trivial(*disc, *power)?;
            (json::qexp(&qexp::theta_series(&ctx, *nmax)?), true)
        }
        Cmd::Eis { k, m, zeta_index, p, nmax } => {
            (json::qexp(&qexp::eisenstein_depleted(*k, *m, *zeta_index, *p, *nmax)?), true)
        }
        Cmd::Deplete { p, input } => (json::qexp(&qexp::deplete(&json::qexp_in(&read_json(input)?)?, *p)), true),
        Cmd::Eval { p, prec, input, t, j } => {
            let ctx = PrimeCtx::new(*p, *prec)?;
            let s = json::series_in(ctx, &read_json(input)?)?;
            let pt = CharPoint { t: *t, j: *j };
            (json::char_value(pt, &s.eval_at(pt)?), true)
        }
        Cmd::Check { suite } => {
            let rep = suites::run(suite, cli.seed)?;
            let pass = rep.pass;
            (serde_json::to_value(rep)?, pass)
        }
    })
}

fn emit(cli: &Cli, v: &Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, s).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().lock().write_all(s.as_bytes())?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli).and_then(|(v, ok)| emit(&cli, &v).map(|_| ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("iwalog: {e:#}");
            ExitCode::from(1)
        }
    }
}
