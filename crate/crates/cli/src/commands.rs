use num_complex::Complex64;
use palinform::codes::{
    conjecture_scan, d_from_zeros_identity, extremal_enumerator, genus, is_extremal, is_virtually_self_dual,
    macwilliams, mds_enumerator, mds_expand, rh_check, self_reciprocal_check, type_classify, zeta_polynomial,
    WeightEnumerator, SCAN_RH_TOL,
};
use palinform::curves::{curve_form, verify_theorem, CurveField, CurveSpec};
use palinform::golden::{default_golden_path, verify_goldens};
use palinform::json::{
    enumerator_from_json, enumerator_to_json, error_to_json, form_from_json, form_to_json, poly_from_json,
    poly_to_json, tagged, JsonScalar, SCHEMA,
};
use palinform::polycore::{
    classify, compose_half, conjugate, decompose_half, forced_root_quotient, inversive, product, reciprocal,
};
use palinform::reduction::{
    act, cayley_to_circle, cayley_to_real, g_covariant, julia_quadratic, reduce, reduce_from_circle,
    sigma_involution_check, trace_string, zero_map, BinaryForm, Moebius,
};
use palinform::rootloc::{
    circle_report, cohn_test, default_grid, epsilon_condition, lakatos_losonczi, max_modulus, ohara_bounds,
    product_chain, roots_seeded, symm_incr_step_condition, symmetric_increasing, vieira_predict, CircleReport, LlRange,
    DEFAULT_BAND, DEFAULT_SOLVER_TOL,
};
use palinform::{Eisenstein, Error, Gaussian, Poly, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::input::{load, scalar};
use crate::{Cli, CodeVerb, Command, CovariantVerb, CriteriaVerb, DecomposeVerb, EnumIn, Global, LlRangeArg, TransformOp};

/// Default slack for exact-or-float coefficient comparisons.
const CLASSIFY_TOL: f64 = 1e-9;

pub struct Output {
    pub value: Value,
    /// Some batch item failed.
    pub failed: bool,
}

trait Field: JsonScalar + Send + Sync {}
impl<S: JsonScalar + Send + Sync> Field for S {}

macro_rules! by_mode {
    ($g:expr, $f:ident, $field:ty, $($arg:expr),*) => {
        if $g.float { $f::<Complex64>($($arg),*) } else { $f::<$field>($($arg),*) }
    };
}

fn ser<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn obj(kind: &str, v: Value) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), Value::String(kind.into()));
    if let Value::Object(rest) = v {
        m.extend(rest);
    }
    tagged(Value::Object(m))
}

fn point(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Run `f` on the input, or on each element of it under `--batch`.
fn each(global: &Global, input: Value, f: impl Fn(&Value) -> Result<Value> + Sync) -> Result<Output> {
    if !global.batch {
        return Ok(Output {
            value: f(&input)?,
            failed: false,
        });
    }
    let items = match input {
        Value::Array(a) => a,
        other => return Err(Error::Parse(format!("--batch expects a JSON array, got {other}"))),
    };
    let results: Vec<Result<Value>> = items.par_iter().map(&f).collect();
    let failed = results.iter().any(|r| r.is_err());
    let results: Vec<Value> = results
        .into_iter()
        .map(|r| r.unwrap_or_else(|e| error_to_json(&e)))
        .collect();
    Ok(Output {
        value: json!({ "schema": SCHEMA, "kind": "batch", "results": results }),
        failed,
    })
}

fn single(v: Value) -> Result<Output> {
    Ok(Output { value: v, failed: false })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify(p) => each(g, load(&p.input)?, |v| by_mode!(g, classify_cmd, Gaussian, v, g)),
        Command::Transform { poly, op, with } => {
            let with = with.as_deref().map(load).transpose()?;
            each(g, load(&poly.input)?, |v| {
                by_mode!(g, transform_cmd, Gaussian, v, *op, with.as_ref())
            })
        }
        Command::Decompose { verb } => match verb {
            DecomposeVerb::Half(p) => each(g, load(&p.input)?, |v| by_mode!(g, half_cmd, Gaussian, v)),
            DecomposeVerb::Compose { poly, m } => {
                each(g, load(&poly.input)?, |v| by_mode!(g, compose_cmd, Gaussian, v, *m))
            }
            DecomposeVerb::Forced(p) => each(g, load(&p.input)?, |v| by_mode!(g, forced_cmd, Gaussian, v)),
        },
        Command::Roots(p) => each(g, load(&p.input)?, |v| by_mode!(g, roots_cmd, Gaussian, v, g)),
        Command::Criteria { verb } => criteria(g, verb),
        Command::Reduce { form, circle } => each(g, load(form)?, |v| {
            if *circle {
                by_mode!(g, circle_reduce_cmd, Gaussian, v, g)
            } else {
                by_mode!(g, reduce_cmd, Gaussian, v, g)
            }
        }),
        Command::Covariant { verb } => covariant(g, verb),
        Command::Curve {
            group,
            case_index,
            level,
            lambdas,
        } => {
            let lambdas = load(lambdas)?;
            let v = by_mode!(g, curve_cmd, Eisenstein, *group, *case_index, *level, &lambdas)?;
            single(v)
        }
        Command::Code { verb } => code(g, verb),
        Command::VerifyGoldens { path } => {
            let path = path.clone().unwrap_or_else(default_golden_path);
            let outcomes = verify_goldens(&path)?;
            let passing = outcomes.iter().filter(|o| o.symmetric_increasing).count();
            single(obj(
                "goldens",
                json!({
                    "path": path.display().to_string(),
                    "products": ser(&outcomes),
                    "matched": outcomes.len(),
                    "symmetric_increasing": passing,
                    "not_symmetric_increasing": outcomes.len() - passing,
                }),
            ))
        }
    }
}

fn classify_cmd<S: Field>(v: &Value, g: &Global) -> Result<Value> {
    let p: Poly<S> = poly_from_json(v)?;
    let c = classify(&p, g.tol.unwrap_or(CLASSIFY_TOL))?;
    Ok(obj(
        "classification",
        json!({
            "mode": S::MODE,
            "palindromic": c.palindromic,
            "antipalindromic": c.antipalindromic,
            "quasi_palindromic": c.quasi_palindromic,
            "self_inversive": c.is_self_inversive(),
            "witness": c.self_inversive.as_ref().map(JsonScalar::to_json),
        }),
    ))
}

fn transform_cmd<S: Field>(v: &Value, op: TransformOp, with: Option<&Value>) -> Result<Value> {
    let p: Poly<S> = poly_from_json(v)?;
    let out = match op {
        TransformOp::Conjugate => conjugate(&p),
        TransformOp::Reciprocal => reciprocal(&p),
        TransformOp::Inversive => inversive(&p),
        TransformOp::Product => {
            let q = with.ok_or_else(|| Error::BadParameters("--op product needs --with".into()))?;
            product(&p, &poly_from_json(q)?)
        }
    };
    Ok(poly_to_json(&out))
}

fn half_cmd<S: Field>(v: &Value) -> Result<Value> {
    let (m, g) = decompose_half(&poly_from_json::<S>(v)?)?;
    Ok(obj("half_decomposition", json!({ "m": m, "g": poly_to_json(&g) })))
}

fn compose_cmd<S: Field>(v: &Value, m: usize) -> Result<Value> {
    Ok(poly_to_json(&compose_half(m, &poly_from_json::<S>(v)?)?))
}

fn forced_cmd<S: Field>(v: &Value) -> Result<Value> {
    let (factors, q) = forced_root_quotient(&poly_from_json::<S>(v)?)?;
    Ok(obj("forced_roots", json!({ "factors": ser(&factors), "quotient": poly_to_json(&q) })))
}

fn roots_cmd<S: Field>(v: &Value, g: &Global) -> Result<Value> {
    let p: Poly<S> = poly_from_json(v)?;
    let set = roots_seeded(&p, g.tol.unwrap_or(DEFAULT_SOLVER_TOL), g.seed)?;
    let circle = CircleReport::from_roots(&set, DEFAULT_BAND);
    let roots: Vec<Value> = set
        .roots
        .iter()
        .map(|&(z, m)| json!({ "z": point(z), "multiplicity": m, "modulus": z.norm() }))
        .collect();
    let mut out = json!({
        "roots": roots,
        "residual": set.residual,
        "tol": set.tol,
        "circle": ser(&circle),
    });
    if g.emit_points {
        out["points"] = set.flat().into_iter().map(point).collect();
    }
    Ok(obj("roots", out))
}

fn criteria(g: &Global, verb: &CriteriaVerb) -> Result<Output> {
    let tol = g.tol.unwrap_or(DEFAULT_BAND);
    match verb {
        CriteriaVerb::Cohn(p) => each(g, load(&p.input)?, |v| by_mode!(g, cohn_cmd, Gaussian, v, tol)),
        CriteriaVerb::Circle(p) => each(g, load(&p.input)?, |v| by_mode!(g, circle_cmd, Gaussian, v, tol)),
        CriteriaVerb::Ll { poly, range } => {
            let range = match range {
                LlRangeArg::Literal => LlRange::Literal,
                LlRangeArg::ExcludeLeading => LlRange::ExcludeLeading,
            };
            each(g, load(&poly.input)?, |v| by_mode!(g, ll_cmd, Gaussian, v, range, tol))
        }
        CriteriaVerb::Vieira { poly, lambda } => {
            each(g, load(&poly.input)?, |v| by_mode!(g, vieira_cmd, Gaussian, v, *lambda, tol))
        }
        CriteriaVerb::Ohara(p) => each(g, load(&p.input)?, |v| by_mode!(g, ohara_cmd, Gaussian, v, tol)),
        CriteriaVerb::MaxModulus { poly, grid } => {
            each(g, load(&poly.input)?, |v| by_mode!(g, max_modulus_cmd, Gaussian, v, *grid))
        }
        CriteriaVerb::Symmetric(p) => {
            let tol = g.tol.unwrap_or(0.0);
            each(g, load(&p.input)?, |v| by_mode!(g, symmetric_cmd, Gaussian, v, tol))
        }
        CriteriaVerb::Step { poly, alpha } => {
            let tol = g.tol.unwrap_or(0.0);
            let alpha = scalar(alpha);
            each(g, load(&poly.input)?, |v| by_mode!(g, step_cmd, Gaussian, v, &alpha, tol))
        }
        CriteriaVerb::Epsilon(p) => {
            let tol = g.tol.unwrap_or(1e-12);
            each(g, load(&p.input)?, |v| by_mode!(g, epsilon_cmd, Gaussian, v, tol))
        }
        CriteriaVerb::Chain { alphas, scale } => {
            let scale = scalar(scale);
            each(g, load(alphas)?, |v| by_mode!(g, chain_cmd, Gaussian, v, &scale))
        }
    }
}

fn cohn_cmd<S: Field>(v: &Value, tol: f64) -> Result<Value> {
    let unimodular = cohn_test(&poly_from_json::<S>(v)?, tol)?;
    Ok(obj("cohn", json!({ "all_roots_unimodular": unimodular })))
}

fn circle_cmd<S: Field>(v: &Value, tol: f64) -> Result<Value> {
    let r = circle_report(&poly_from_json::<S>(v)?, tol)?;
    let mut out = ser(&r);
    out["all_on_circle"] = r.all_on_circle().into();
    Ok(obj("circle", out))
}

fn ll_cmd<S: Field>(v: &Value, range: LlRange, tol: f64) -> Result<Value> {
    let holds = lakatos_losonczi(&poly_from_json::<S>(v)?, range, tol)?;
    Ok(obj("lakatos_losonczi", json!({ "range": ser(&range), "holds": holds })))
}

fn vieira_cmd<S: Field>(v: &Value, lambda: usize, tol: f64) -> Result<Value> {
    let predicted = vieira_predict(&poly_from_json::<S>(v)?, lambda, tol)?;
    Ok(obj(
        "vieira",
        json!({ "lambda": lambda, "hypothesis_holds": predicted.is_some(), "unimodular_roots": predicted }),
    ))
}

fn ohara_cmd<S: Field>(v: &Value, tol: f64) -> Result<Value> {
    Ok(obj("ohara", ser(&ohara_bounds(&poly_from_json::<S>(v)?, tol)?)))
}

fn max_modulus_cmd<S: Field>(v: &Value, grid: Option<usize>) -> Result<Value> {
    let p: Poly<S> = poly_from_json(v)?;
    let grid = grid.unwrap_or_else(|| default_grid(p.degree().unwrap_or(0)));
    Ok(obj("max_modulus", json!({ "grid": grid, "norm": max_modulus(&p, grid)? })))
}

fn symmetric_cmd<S: Field>(v: &Value, tol: f64) -> Result<Value> {
    Ok(obj("symmetric_increasing", ser(&symmetric_increasing(&poly_from_json::<S>(v)?, tol)?)))
}

fn step_cmd<S: Field>(v: &Value, alpha: &Value, tol: f64) -> Result<Value> {
    let holds = symm_incr_step_condition(&poly_from_json::<S>(v)?, &S::from_json(alpha)?, tol)?;
    Ok(obj("step_condition", json!({ "holds": holds })))
}

fn epsilon_cmd<S: Field>(v: &Value, tol: f64) -> Result<Value> {
    let windows = epsilon_condition(&poly_from_json::<S>(v)?, tol);
    let all = windows.iter().all(|&b| b);
    Ok(obj("epsilon_condition", json!({ "windows": windows, "all": all })))
}

fn chain_cmd<S: Field>(v: &Value, scale: &Value) -> Result<Value> {
    let alphas = match v {
        Value::Array(a) => a.iter().map(S::from_json).collect::<Result<Vec<S>>>()?,
        _ => return Err(Error::Parse("--alphas expects a JSON array".into())),
    };
    let p = product_chain(&alphas, S::from_json(scale)?);
    let si = symmetric_increasing(&p, 0.0)?;
    Ok(obj("product_chain", json!({ "product": poly_to_json(&p), "symmetric_increasing": ser(&si) })))
}

fn matrix_json<S: Field>(m: &Moebius<S>) -> Value {
    let [a, b, c, d] = m.entries();
    json!([[a.to_json(), b.to_json()], [c.to_json(), d.to_json()]])
}

fn reduce_cmd<S: Field>(v: &Value, g: &Global) -> Result<Value> {
    let f: BinaryForm<S> = form_from_json(v)?;
    let r = reduce(&f)?;
    let mut out = json!({
        "form": form_to_json(&r.form),
        "matrix": matrix_json(&r.matrix),
        "trace": trace_string(&r.trace),
        "xi_before": point(r.xi_before),
        "xi_after": point(r.xi_after),
        "residuals": r.residuals,
        "norm_before": r.norm_before,
        "norm_after": r.norm_after,
    });
    if g.emit_points {
        out["points"] = json!([point(r.xi_before), point(r.xi_after)]);
    }
    Ok(obj("reduction", out))
}

fn circle_reduce_cmd<S: Field>(v: &Value, g: &Global) -> Result<Value> {
    let p: Poly<S> = poly_from_json(v)?;
    let r = reduce_from_circle(&p, g.tol.unwrap_or(DEFAULT_BAND))?;
    let mut out = json!({
        "real_form": form_to_json(&r.real_form),
        "epsilon": point(r.epsilon),
        "region": ser(&r.region),
        "form": form_to_json(&r.form),
        "swapped": r.swapped,
        "epsilon_after": point(r.epsilon_after),
        "lemma_certified": r.lemma_certified,
        "multiset_invariant": r.multiset_invariant,
        "norm_before": r.norm_before,
        "norm_after": r.norm_after,
    });
    if g.emit_points {
        out["points"] = json!([point(r.epsilon), point(r.epsilon_after)]);
    }
    Ok(obj("circle_reduction", out))
}

fn covariant(g: &Global, verb: &CovariantVerb) -> Result<Output> {
    match verb {
        CovariantVerb::G(p) => each(g, load(&p.input)?, |v| by_mode!(g, g_cmd, Gaussian, v)),
        CovariantVerb::Julia(p) => each(g, load(&p.input)?, |v| by_mode!(g, julia_cmd, Gaussian, v)),
        CovariantVerb::Zero(p) => each(g, load(&p.input)?, |v| by_mode!(g, zero_cmd, Gaussian, v)),
        CovariantVerb::Sigma(p) => each(g, load(&p.input)?, |v| by_mode!(g, sigma_cmd, Gaussian, v)),
        CovariantVerb::ToCircle(p) => each(g, load(&p.input)?, |v| by_mode!(g, to_circle_cmd, Gaussian, v)),
        CovariantVerb::ToReal(p) => each(g, load(&p.input)?, |v| by_mode!(g, to_real_cmd, Gaussian, v)),
        CovariantVerb::Act { poly, matrix } => {
            let m = load(matrix)?;
            each(g, load(&poly.input)?, |v| by_mode!(g, act_cmd, Gaussian, v, &m))
        }
    }
}

fn g_cmd<S: Field>(v: &Value) -> Result<Value> {
    Ok(form_to_json(&g_covariant(&form_from_json::<S>(v)?)?))
}

fn julia_cmd<S: Field>(v: &Value) -> Result<Value> {
    let j = julia_quadratic(&form_from_json::<S>(v)?)?;
    Ok(obj("julia_quadratic", json!({ "coeffs": j.coeffs, "xi": point(j.xi) })))
}

fn zero_cmd<S: Field>(v: &Value) -> Result<Value> {
    Ok(obj("zero", json!({ "xi": point(zero_map(&form_from_json::<S>(v)?)?) })))
}

fn sigma_cmd<S: Field>(v: &Value) -> Result<Value> {
    let (gf, report) = sigma_involution_check(&form_from_json::<S>(v)?)?;
    Ok(obj("sigma", json!({ "covariant": form_to_json(&gf), "report": ser(&report) })))
}

fn to_circle_cmd<S: Field>(v: &Value) -> Result<Value> {
    Ok(form_to_json(&cayley_to_circle(&form_from_json::<S>(v)?)?))
}

fn to_real_cmd<S: Field>(v: &Value) -> Result<Value> {
    Ok(form_to_json(&cayley_to_real(&form_from_json::<S>(v)?)?))
}

fn act_cmd<S: Field>(v: &Value, m: &Value) -> Result<Value> {
    let e = match m {
        Value::Array(a) if a.len() == 4 => a.iter().map(S::from_json).collect::<Result<Vec<S>>>()?,
        _ => return Err(Error::Parse("--matrix expects [a, b, c, d]".into())),
    };
    let [a, b, c, d]: [S; 4] = e.try_into().map_err(|_| Error::Parse("matrix".into()))?;
    Ok(form_to_json(&act(&form_from_json::<S>(v)?, &Moebius::new(a, b, c, d))?))
}

fn curve_cmd<S: Field + CurveField>(
    group: palinform::curves::Group,
    case_index: usize,
    level: usize,
    lambdas: &Value,
) -> Result<Value> {
    let lambdas = match lambdas {
        Value::Array(a) => a.iter().map(S::from_json).collect::<Result<Vec<S>>>()?,
        _ => return Err(Error::Parse("--lambdas expects a JSON array".into())),
    };
    let spec = CurveSpec {
        level,
        group,
        case_index,
        lambdas,
    };
    let eq = curve_form(&spec)?;
    let report = verify_theorem(&eq)?;
    let factors: Vec<Value> = eq
        .factors
        .iter()
        .map(|f| json!({ "name": f.name, "poly": poly_to_json(&f.poly) }))
        .collect();
    Ok(obj(
        "curve",
        json!({
            "level": eq.level,
            "group": ser(&eq.group),
            "case": eq.case_index,
            "x_factor": eq.x_factor,
            "rhs": poly_to_json(&eq.rhs),
            "factors": factors,
            "theorem": ser(&report),
        }),
    ))
}

/// Items for an enumerator command, before `--batch` splitting.
fn enum_items(e: &EnumIn) -> Result<(Value, Header, bool)> {
    let header = Header { q: e.q, n: e.n };
    match (&e.a, &e.input) {
        (Some(a), _) => Ok((load(a)?, header, true)),
        (None, Some(i)) => Ok((load(i)?, header, false)),
        (None, None) => Err(Error::BadParameters("give --A with --q, or --in".into())),
    }
}

/// `--q` and `--n` from the command line, filled in where the item lacks them.
#[derive(Clone, Copy)]
struct Header {
    q: Option<u64>,
    n: Option<u64>,
}

fn enumerator(v: &Value, header: Header, bare: bool) -> Result<WeightEnumerator> {
    let mut v = if bare { json!({ "A": v }) } else { v.clone() };
    if let Value::Object(m) = &mut v {
        for (key, val) in [("q", header.q), ("n", header.n)] {
            if let Some(x) = val {
                m.entry(key).or_insert(x.into());
            }
        }
    }
    enumerator_from_json(&v)
}

fn each_enum(g: &Global, e: &EnumIn, f: impl Fn(&WeightEnumerator) -> Result<Value> + Sync) -> Result<Output> {
    let (input, header, bare) = enum_items(e)?;
    each(g, input, |v| f(&enumerator(v, header, bare)?))
}

fn code(g: &Global, verb: &CodeVerb) -> Result<Output> {
    match verb {
        CodeVerb::Zeta(e) => each_enum(g, e, |f| {
            let p = zeta_polynomial(f)?;
            let reciprocity = match self_reciprocal_check(f) {
                Ok((_, r)) => ser(&r),
                Err(Error::NotSelfDual | Error::OddLength(_)) => Value::Null,
                Err(err) => return Err(err),
            };
            let mut out = ser(&p);
            out["self_reciprocity"] = reciprocity;
            Ok(obj("zeta", out))
        }),
        CodeVerb::Rh(e) => {
            let tol = g.tol.unwrap_or(SCAN_RH_TOL);
            each_enum(g, e, |f| {
                let r = rh_check(&zeta_polynomial(f)?, tol)?;
                let mut out = ser(&r);
                if !g.emit_points {
                    if let Value::Object(m) = &mut out {
                        m.remove("zeros");
                    }
                }
                Ok(obj("riemann_hypothesis", out))
            })
        }
        CodeVerb::DIdentity(e) => each_enum(g, e, |f| Ok(obj("d_identity", ser(&d_from_zeros_identity(f)?)))),
        CodeVerb::Classify(e) => each_enum(g, e, |f| {
            let self_dual = match is_virtually_self_dual(f) {
                Ok(b) => b,
                Err(Error::OddLength(_)) => false,
                Err(err) => return Err(err),
            };
            let tag = type_classify(f).ok();
            let extremal = tag.map(|t| is_extremal(f, t)).transpose()?;
            let genus = genus(f).ok();
            Ok(obj(
                "code_classification",
                json!({
                    "n": f.n,
                    "q": f.q,
                    "d": f.min_distance(),
                    "virtually_self_dual": self_dual,
                    "type": tag.map(|t| t.to_string()),
                    "extremal": extremal,
                    "genus": genus,
                    "nonnegative": f.is_nonnegative(),
                    "integral": f.is_integral(),
                }),
            ))
        }),
        CodeVerb::Macwilliams(e) => each_enum(g, e, |f| {
            let image = macwilliams(f);
            let mut out = ser(&image);
            out["rational"] = image.to_rational().as_ref().map(enumerator_to_json).into();
            Ok(obj("macwilliams", out))
        }),
        CodeVerb::Expand(e) => each_enum(g, e, |f| Ok(obj("mds_expansion", ser(&mds_expand(f)?)))),
        CodeVerb::Mds { n, d, q } => single(enumerator_to_json(&mds_enumerator(*n, *d, *q)?)),
        CodeVerb::Extremal { tag, n } => {
            let e = extremal_enumerator(*tag, *n)?;
            single(obj("extremal", ser(&e)))
        }
        CodeVerb::Scan { types, n_max } => {
            let rows = conjecture_scan(types, *n_max)?;
            single(obj("scan", json!({ "rows": ser(&rows) })))
        }
    }
}
