//! JSON forms of the core objects.
//!
//! Residues are written as decimal strings so that values up to `2^62` survive
//! any JSON reader.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use iwalog_core::galimg::{Field, Mat};
use iwalog_core::iwadist::{CharPoint, CharValue, Growth, IwaSeries};
use iwalog_core::logmat::LogMatrix;
use iwalog_core::qexp::QExpansion;
use iwalog_core::regdiv::MSeries;
use iwalog_core::{Ext, PadicElt, PrimeCtx};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExtDto {
    Unramified { d: u64 },
    Ramified { c: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PadicDto {
    pub p: u64,
    pub prec: u32,
    pub coords: Vec<String>,
    pub ext: Option<ExtDto>,
}

pub fn ext_dto(ctx: PrimeCtx) -> Option<ExtDto> {
    match ctx.ext() {
        Ext::None => None,
        Ext::Unramified { d } => Some(ExtDto::Unramified { d }),
        Ext::Ramified { c } => Some(ExtDto::Ramified { c }),
    }
}

pub fn padic(x: &PadicElt) -> PadicDto {
    let ctx = x.ctx();
    let c = x.canonical_coords();
    let coords = if ctx.has_ext() { vec![c[0].to_string(), c[1].to_string()] } else { vec![c[0].to_string()] };
    PadicDto { p: ctx.p(), prec: x.prec(), coords, ext: ext_dto(ctx) }
}

/// A coefficient read into `ctx`: a full object, a decimal string or an integer.
pub fn padic_in(ctx: PrimeCtx, v: &Value) -> Result<PadicElt> {
    match v {
        Value::Number(n) => {
            let x = n.as_i64().ok_or_else(|| anyhow!("coefficient {n} is not a 64-bit integer"))?;
            Ok(PadicElt::from_i64(ctx, x))
        }
        Value::String(s) => {
            let x: i128 = s.parse().with_context(|| format!("bad coefficient {s:?}"))?;
            Ok(PadicElt::from_i128(ctx, x))
        }
        Value::Object(_) => {
            let d: PadicDto = serde_json::from_value(v.clone())?;
            if d.p != ctx.p() {
                bail!("coefficient over p = {} in a p = {} context", d.p, ctx.p());
            }
            if d.ext.is_some() && d.ext != ext_dto(ctx) {
                bail!("coefficient extension does not match the context");
            }
            let parse = |i: usize| -> Result<u64> {
                d.coords.get(i).map_or(Ok(0), |s| s.parse::<u64>().with_context(|| format!("bad residue {s:?}")))
            };
            Ok(PadicElt::from_coords(ctx, parse(0)?, parse(1)?).with_prec(d.prec))
        }
        _ => bail!("unsupported coefficient {v}"),
    }
}

pub fn growth_str(g: Growth) -> String {
    g.to_string()
}

fn parse_growth(s: &str) -> Result<Growth> {
    match s.split_once('/') {
        Some((a, b)) => Ok(Growth::new(a.trim().parse()?, b.trim().parse()?)),
        None => Ok(Growth::new(s.trim().parse()?, 1)),
    }
}

pub fn series(s: &IwaSeries) -> Value {
    json!({
        "var": "X",
        "growth": growth_str(s.growth),
        "deg_cap": s.coeffs.len(),
        "exact": s.exact,
        "denom": s.denom,
        "coeffs": s.coeffs.iter().map(padic).collect::<Vec<_>>(),
    })
}

pub fn series_in(ctx: PrimeCtx, v: &Value) -> Result<IwaSeries> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("series needs a coeffs array"))?
        .iter()
        .map(|c| padic_in(ctx, c))
        .collect::<Result<Vec<_>>>()?;
    let exact = v.get("exact").and_then(Value::as_bool).unwrap_or(true);
    let denom = v.get("denom").and_then(Value::as_u64).unwrap_or(0) as u32;
    let growth = match v.get("growth").and_then(Value::as_str) {
        Some(g) => parse_growth(g)?,
        None => Growth::ZERO,
    };
    let s = if exact { IwaSeries::poly(ctx, coeffs) } else { IwaSeries::series(ctx, coeffs) };
    Ok(s.with_denom(denom).with_growth(growth))
}

pub fn matrix(m: &LogMatrix) -> Value {
    json!({
        "dim": m.dim,
        "level": m.level,
        "provenance": m.provenance,
        "entries": m.entries.iter().map(|r| r.iter().map(series).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn char_value(pt: CharPoint, v: &CharValue) -> Value {
    json!({
        "t": pt.t,
        "j": pt.j,
        "denom": v.denom,
        "zero": v.is_zero(),
        "value": v.value.coeffs.iter().map(padic).collect::<Vec<_>>(),
    })
}

pub fn qexp(q: &QExpansion) -> Value {
    json!({
        "ring": q.ring.descriptor(),
        "nmax": q.nmax,
        "coeffs": q.coeffs.iter().map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn qexp_in(v: &Value) -> Result<QExpansion> {
    use iwalog_core::qexp::Ring;
    let ring_s = v.get("ring").and_then(Value::as_str).ok_or_else(|| anyhow!("q-expansion needs a ring"))?;
    let ring = match ring_s.split_once(':') {
        None if ring_s == "integers" => Ring::Integers,
        Some(("quadratic", d)) => Ring::Quadratic { disc: d.parse()? },
        Some(("cyclotomic", m)) => Ring::Cyclotomic { m: m.parse()? },
        _ => bail!("unknown ring {ring_s:?}"),
    };
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("q-expansion needs coeffs"))?
        .iter()
        .map(|c| {
            c.as_array()
                .ok_or_else(|| anyhow!("coefficient must be an array"))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => s.parse::<i128>().map_err(Into::into),
                    Value::Number(n) => n.as_i64().map(i128::from).ok_or_else(|| anyhow!("bad coefficient {n}")),
                    _ => bail!("bad coefficient {x}"),
                })
                .collect::<Result<Vec<i128>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if coeffs.iter().any(|c| c.len() != ring.rank()) {
        bail!("coefficient length does not match the ring rank {}", ring.rank());
    }
    Ok(QExpansion { ring, nmax: coeffs.len(), coeffs })
}

fn exp_key(e: &[u32]) -> String {
    e.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn mseries(f: &MSeries) -> Value {
    let m: BTreeMap<String, PadicDto> =
        f.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (exp_key(e), padic(c))).collect();
    json!({ "nvars": f.nvars, "deg_cap": f.deg_cap, "coeffs": m })
}

/// `{"1,0": 3, "0,2": "-1", …}` keyed by exponent tuples, bare or under `"coeffs"`.
pub fn mseries_in(ctx: PrimeCtx, nvars: usize, deg_cap: u32, v: &Value) -> Result<MSeries> {
    let obj = v
        .get("coeffs")
        .unwrap_or(v)
        .as_object()
        .ok_or_else(|| anyhow!("multivariate series must be an object keyed by exponents"))?;
    let mut f = MSeries::zero(ctx, nvars, deg_cap);
    for (k, c) in obj {
        let e: Vec<u32> = k.split(',').map(|s| s.trim().parse::<u32>()).collect::<std::result::Result<_, _>>()?;
        if e.len() != nvars {
            bail!("exponent {k:?} has {} entries, expected {nvars}", e.len());
        }
        if e.iter().sum::<u32>() < deg_cap {
            let x = padic_in(ctx, c)?;
            let old = f.coeff(&e);
            f.set(e, old + x);
        }
    }
    Ok(f)
}

/// Row-major entries; an element `a + b·θ` of `F_{p²}` is written `a + b·p`.
pub fn mat(m: &Mat) -> Value {
    json!(m.rows())
}

pub fn mat_in(f: &Field, v: &Value) -> Result<Mat> {
    let rows: Vec<Vec<i64>> = serde_json::from_value(v.clone()).context("matrix must be an array of integer rows")?;
    Mat::from_rows(f, &rows).map_err(|e| anyhow!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_round_trip() {
        let ctx = PrimeCtx::new(5, 9).unwrap().with_ramified(2).unwrap();
        let s = IwaSeries::poly(ctx, vec![PadicElt::from_coords(ctx, 7, 3), PadicElt::from_i64(ctx, -2).with_prec(4)])
            .with_denom(2);
        let back = series_in(ctx, &series(&s)).unwrap();
        assert!(back.approx_eq(&s));
        assert_eq!(back.denom, 2);
        assert_eq!(back.coeffs[1].prec(), 4);
    }

    #[test]
    fn mseries_and_qexp_round_trip() {
        let ctx = PrimeCtx::new(3, 6).unwrap();
        let f = MSeries::from_terms(ctx, 2, 4, &[(vec![1, 0], 2), (vec![0, 2], -1)]).unwrap();
        assert!(mseries_in(ctx, 2, 4, &mseries(&f)).unwrap().approx_eq(&f));
        let th = iwalog_core::qexp::theta_series(&iwalog_core::qexp::ImagQuadCtx::trivial(-3, 6).unwrap(), 30).unwrap();
        assert_eq!(qexp_in(&qexp(&th)).unwrap(), th);
    }

    #[test]
    fn rejects_mismatched_prime() {
        let ctx = PrimeCtx::new(3, 6).unwrap();
        let other = padic(&PadicElt::from_i64(PrimeCtx::new(5, 6).unwrap(), 4));
        assert!(padic_in(ctx, &serde_json::to_value(other).unwrap()).is_err());
    }
}
