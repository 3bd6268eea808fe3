//! Dispatch of validated jobs to the library.

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Map, Value};

use okounkov_core::exactgeom::rat::fmt_rat;
use okounkov_core::exactgeom::{intersect_subspace, rat, Polytope, Rat, SliceSpec};
use okounkov_core::invariants::{
    check_eps_eq_xi, conditional_non_effectivity, homogeneous_eps, irrationality_certificate, is_standard_form,
    nagata_check, nef_boundary_check, seshadri_eps_at, slice_volume_check, xi_constant, Check, WeightVec, MODEL_EXACT,
};
use okounkov_core::surfacepic::{bigness_walk, surface_body_outer, zariski, PicClass, SurfaceModel};
use okounkov_core::toricbody::{extended_body_toric, monomial_body, semigroup_body_approx, semigroup_sample};

use crate::fixtures::{self, PairedData, ToricData};
use crate::schema::{Job, RList, R};
use crate::CliError;

/// Command-line overrides of job parameters.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub grid_step: Option<Rat>,
    pub m_max: Option<u64>,
}

/// What a job produced: the result document, an optional 2-D drawing, and its checks.
pub struct Outcome {
    pub result: Value,
    pub drawing: Option<(Polytope, String)>,
    pub checks: Vec<Check>,
}

impl Outcome {
    fn plain(result: Value) -> Self {
        Self { result, drawing: None, checks: Vec::new() }
    }
}

fn get<T: DeserializeOwned>(input: &Map<String, Value>, key: &str) -> Result<Option<T>, CliError> {
    input
        .get(key)
        .map(|v| serde_json::from_value(v.clone()).map_err(|e| CliError::input(format!("$.input.{key}: {e}"))))
        .transpose()
}

fn need<T: DeserializeOwned>(input: &Map<String, Value>, key: &str) -> Result<T, CliError> {
    get(input, key)?.ok_or_else(|| CliError::input(format!("$.input.{key}: missing required field")))
}

fn need_rat(input: &Map<String, Value>, key: &str) -> Result<Rat, CliError> {
    Ok(need::<R>(input, key)?.0)
}

fn need_rats(input: &Map<String, Value>, key: &str) -> Result<Vec<Rat>, CliError> {
    Ok(need::<RList>(input, key)?.0)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn toric_data(input: &Map<String, Value>) -> Result<ToricData, CliError> {
    match get::<String>(input, "fixture")? {
        Some(name) => fixtures::toric(&name),
        None => Ok(ToricData { fan: need(input, "fan")?, divisor: need(input, "divisor")?, flags: need(input, "flags")? }),
    }
}

fn paired_data(input: &Map<String, Value>) -> Result<Option<PairedData>, CliError> {
    get::<String>(input, "fixture")?.map(|name| fixtures::paired(&name)).transpose()
}

fn points_or_all(input: &Map<String, Value>, model: &SurfaceModel) -> Result<Vec<usize>, CliError> {
    Ok(get(input, "points")?.unwrap_or_else(|| (0..model.s).collect()))
}

pub fn run_job(job: &Job, ov: &Overrides) -> Result<Outcome, CliError> {
    let input = &job.input;
    Ok(match job.kind {
        "toric-body" => {
            let t = toric_data(input)?;
            let method = get::<String>(input, "method")?.unwrap_or_else(|| "extended".into());
            let body = match method.as_str() {
                "extended" => extended_body_toric(&t.fan, &t.divisor, &t.flags)?,
                "monomial" => monomial_body(&t.fan, &t.divisor, &t.flags)?,
                other => return Err(CliError::input(format!("$.input.method: expected \"extended\" or \"monomial\", got {other:?}"))),
            };
            let result = json!({ "polytope": to_value(&body), "volume": to_value(&body.volume()) });
            Outcome { result, drawing: Some((body, "toric body".into())), checks: Vec::new() }
        }
        "semigroup-sample" => {
            let t = toric_data(input)?;
            let m_max = ov.m_max.or(get(input, "m_max")?).unwrap_or(1);
            if m_max == 0 {
                return Err(CliError::input("m_max: must be at least 1"));
            }
            let sample = semigroup_sample(&t.fan, &t.divisor, &t.flags, m_max)?;
            let body = semigroup_body_approx(&t.fan, &t.divisor, &t.flags, m_max)?;
            let result = json!({ "m_max": m_max, "valuations": to_value(&sample), "body": to_value(&body) });
            Outcome { result, drawing: Some((body, format!("semigroup body, m_max = {m_max}"))), checks: Vec::new() }
        }
        "surface-zariski" => {
            let model: SurfaceModel = need(input, "model")?;
            let class: PicClass = need(input, "class")?;
            let z = zariski(&model, &class)?;
            let verified = z.verify(&model, &class);
            let checks = vec![Check::new("zariski invariants", verified.is_ok(), verified.err().unwrap_or_else(|| "P nef, P·N = 0, N negative definite, P + N = D".into()))];
            let vol = model.vol(&class)?;
            Outcome { result: json!({ "decomposition": to_value(&z), "volume": fmt_rat(&vol) }), drawing: None, checks }
        }
        "surface-body" => {
            let model: SurfaceModel = need(input, "model")?;
            let class: PicClass = need(input, "class")?;
            let points: Vec<usize> = need(input, "points")?;
            let step = match &ov.grid_step {
                Some(s) => s.clone(),
                None => get::<R>(input, "grid_step")?.map_or_else(|| Rat::new(1.into(), 2.into()), |r| r.0),
            };
            let t_max = get::<R>(input, "t_max")?.map(|r| r.0);
            let sb = surface_body_outer(&model, &class, &points, &step, t_max)?;
            let drawing = Some((sb.body.clone(), format!("surface body, grid step {}", fmt_rat(&step))));
            Outcome { result: to_value(&sb), drawing, checks: Vec::new() }
        }
        "seshadri" => {
            let model: SurfaceModel = need(input, "model")?;
            let class: PicClass = need(input, "class")?;
            let w: WeightVec = need(input, "weights")?;
            let points = points_or_all(input, &model)?;
            let eps = seshadri_eps_at(&model, &class, &points, &w)?;
            Outcome::plain(json!({ "epsilon": to_value(&eps), "points": points, "weights": to_value(&w), "note": MODEL_EXACT }))
        }
        "nakayama" => {
            let model: SurfaceModel = need(input, "model")?;
            let class: PicClass = need(input, "class")?;
            let points = points_or_all(input, &model)?;
            if points.iter().any(|&p| p >= model.s) {
                return Err(CliError::input(format!("$.input.points: entries must be < {}", model.s)));
            }
            let mut w = vec![rat(0); model.s];
            for &p in &points {
                w[p] = rat(1);
            }
            let walk = bigness_walk(&model, &class, &PicClass::exceptional_sum(&w))?;
            Outcome::plain(json!({ "mu": to_value(&walk.threshold), "breakpoints": walk.breakpoints.iter().map(fmt_rat).collect::<Vec<_>>(), "points": points, "note": MODEL_EXACT }))
        }
        "xi" => {
            let w: WeightVec = need(input, "weights")?;
            let (body, n) = match paired_data(input)? {
                Some(p) => (p.body, p.n),
                None => (need::<Polytope>(input, "body")?, need::<usize>(input, "n")?),
            };
            let xi = xi_constant(&body, &w, n)?;
            let drawing = Some((body, format!("xi = {}", fmt_rat(&xi))));
            Outcome { result: json!({ "xi": fmt_rat(&xi), "weights": to_value(&w) }), drawing, checks: Vec::new() }
        }
        "eps-xi-check" => {
            let p = match paired_data(input)? {
                Some(mut p) => {
                    if let Some(w) = get::<Vec<WeightVec>>(input, "weights")? {
                        p.weights = w;
                    }
                    p
                }
                None => PairedData {
                    model: need(input, "model")?,
                    class: need(input, "class")?,
                    points: need(input, "points")?,
                    body: need(input, "body")?,
                    n: need(input, "n")?,
                    weights: need(input, "weights")?,
                },
            };
            let mut reports = Vec::new();
            let mut checks = Vec::new();
            for w in &p.weights {
                let rep = check_eps_eq_xi(&p.model, &p.class, &p.points, w, &p.body, p.n)?;
                checks.extend(rep.checks.iter().cloned());
                reports.push(to_value(&rep));
            }
            Outcome { result: json!({ "reports": reports }), drawing: Some((p.body, "eps = xi".into())), checks }
        }
        "slice-volume" => {
            let w: WeightVec = need(input, "weights")?;
            let (body, n, vol_x) = match paired_data(input)? {
                Some(p) => {
                    let v = p.model.vol(&p.class)?;
                    (p.body, p.n, v)
                }
                None => (need::<Polytope>(input, "body")?, need::<usize>(input, "n")?, need_rat(input, "vol_x")?),
            };
            let rep = slice_volume_check(&body, &w, n, &vol_x)?;
            let (slice, _) = intersect_subspace(&body, &SliceSpec::new(n, w.rats())?)?;
            let checks = rep.checks.clone();
            let drawing = Some((slice, format!("slice for weights {:?} (slice coordinates)", w.as_slice())));
            Outcome { result: to_value(&rep), drawing, checks }
        }
        "nagata" => {
            let r: u64 = need(input, "r")?;
            let d = need_rat(input, "d")?;
            let m = need_rats(input, "m")?;
            if r == 0 || m.iter().any(|x| *x < rat(0)) {
                return Err(CliError::input("$.input: need r ≥ 1 and nonnegative multiplicities"));
            }
            Outcome::plain(json!({ "inequality_holds": nagata_check(r, &d, &m) }))
        }
        "standard-form" => {
            let d = need_rat(input, "d")?;
            let m = need_rats(input, "m")?;
            Outcome::plain(json!({
                "standard_form": is_standard_form(&d, &m),
                "non_effectivity": to_value(&conditional_non_effectivity(&d, &m)),
            }))
        }
        "irrationality" => {
            let s: usize = need(input, "s")?;
            Outcome::plain(to_value(&irrationality_certificate(s, &need_rat(input, "d")?, &need_rats(input, "m")?)))
        }
        "homogeneous" => {
            let s: usize = need(input, "s")?;
            Outcome::plain(to_value(&homogeneous_eps(s, &need_rat(input, "d")?, &need_rat(input, "c")?)?))
        }
        "nef-boundary" => Outcome::plain(to_value(&nef_boundary_check(&need_rat(input, "d")?, &need_rats(input, "m")?))),
        other => unreachable!("validated kind {other}"),
    })
}
