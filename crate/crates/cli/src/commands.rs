use std::collections::BTreeMap;

use deligne::acceptance::{report, run_all};
use deligne::arith::{binom_poly, parse_rational};
use deligne::chars::FiniteSubgroup;
use deligne::diagrams::{gram_pairing, SetPartitionDiagram};
use deligne::frob::{
    binom_product_expand, enumerate_frobenius_functors_bounded, functor_exists_bounded,
    BinomialCone, WitnessBounds,
};
use deligne::lie::{cartan_dim, CartanDim, CartanType, ClassificationDatum, LieKind, WittAlgebra};
use deligne::oracle::{frobenius_gram, fun_g_algebra, invariant_simple};
use deligne::repst::{Engine, HBiObject, RepObject};
use deligne::{Error, Partition, Result};
use serde_json::{json, Value};

use crate::output::*;

pub fn parse_object(s: &str) -> Result<RepObject> {
    s.parse()
}

fn parse_subgroup(spec: &str, j: usize) -> Result<FiniteSubgroup> {
    FiniteSubgroup::parse(spec, Some(j))
}

/// Parses `[1]:1;[2]:0,0`: for each support partition, the character labels of
/// its multiplicity space.
pub fn parse_action(s: &str) -> Result<BTreeMap<Partition, Vec<usize>>> {
    let mut out = BTreeMap::new();
    for entry in s.split(';').map(str::trim).filter(|e| !e.is_empty()) {
        let (lam, labels) = entry.rsplit_once(':').ok_or_else(|| {
            Error::Parse(format!("action entry {entry:?} needs partition:labels"))
        })?;
        let lam: Partition = lam.trim().parse()?;
        let labels = labels
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad label {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.insert(lam, labels);
    }
    Ok(out)
}

pub fn dim(input: &str) -> Result<Out> {
    let obj = parse_object(input)?;
    let p = obj.dim_poly()?;
    Ok(Out {
        text: format!("{p}\nbinomial: {}", p.to_binomial_string()),
        json: json!({ "object": obj.to_string(), "dim": p.to_string(), "binomial": p.to_binomial_string() }),
        rows: vec![vec![obj.to_string(), p.to_string(), p.to_binomial_string()]],
    })
}

pub fn power(engine: &Engine, m: usize) -> Result<Out> {
    Ok(object_out(&engine.power(m)?.result))
}

pub fn tensor(engine: &Engine, a: &str, b: &str) -> Result<Out> {
    Ok(object_out(
        &engine.tensor(&parse_object(a)?, &parse_object(b)?)?.result,
    ))
}

pub fn restrict(engine: &Engine, v: &str, k: usize) -> Result<Out> {
    let b = engine.restrict(&parse_object(v)?, k)?.result;
    let mut rows = vec![vec!["nu".into(), "beta".into(), "mult".into()]];
    for ((nu, beta), m) in &b.terms {
        rows.push(vec![nu.to_string(), beta.to_string(), m.to_string()]);
    }
    Ok(Out {
        text: format!("{b}\ndim: {}", b.dim_poly()?),
        json: bi_json(&b),
        rows,
    })
}

pub fn induce(engine: &Engine, j: usize, h: &str, inner: &str, label: usize) -> Result<Out> {
    let h = parse_subgroup(h, j)?;
    let inner = parse_object(inner)?;
    let mut w = HBiObject::new(h);
    for (nu, &m) in inner.terms() {
        w.add(nu.clone(), label, m);
    }
    Ok(object_out(&engine.induce(&w)?.result))
}

fn parse_diagram(s: &str) -> Result<SetPartitionDiagram> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("diagram JSON: {e}")))?;
    let field = |k: &str| {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Parse(format!("diagram JSON needs an integer {k:?}")))
    };
    let blocks: Vec<Vec<i64>> = v
        .get("blocks")
        .and_then(|b| serde_json::from_value(b.clone()).ok())
        .ok_or_else(|| Error::Parse("diagram JSON needs \"blocks\": [[int]]".into()))?;
    SetPartitionDiagram::from_blocks(field("n")?, field("m")?, &blocks)
}

pub fn diagram_compose(upper: &str, lower: &str) -> Result<Out> {
    let (mu, lambda) = (parse_diagram(upper)?, parse_diagram(lower)?);
    let c = mu.compose(&lambda)?;
    let mut text = Vec::new();
    let mut terms = Vec::new();
    let mut rows = vec![vec!["coeff".into(), "diagram".into()]];
    for (d, p) in c.terms() {
        text.push(format!("({p}) {d}"));
        terms.push(json!({ "coeff": p.to_string(), "diagram": { "n": d.source(), "m": d.target(), "blocks": d.blocks() } }));
        rows.push(vec![p.to_string(), d.to_string()]);
    }
    Ok(Out {
        text: if text.is_empty() {
            "0".into()
        } else {
            text.join("\n")
        },
        json: json!({ "n": c.n, "m": c.m, "terms": terms }),
        rows,
    })
}

pub fn gram(n: usize) -> Result<Out> {
    let g = gram_pairing(n)?;
    let rows: Vec<Vec<String>> = g
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    Ok(Out {
        text: grid_text(&rows),
        json: json!({ "n": n, "matrix": rows }),
        rows,
    })
}

pub struct LieBuild<'a> {
    pub j: usize,
    pub h: &'a str,
    pub kind: &'a str,
    pub v: &'a str,
    pub w: Option<&'a str>,
    pub t0: Option<&'a str>,
    pub action: Option<&'a str>,
    pub action_w: Option<&'a str>,
}

pub fn datum_json(d: &ClassificationDatum) -> Value {
    let action = |a: &BTreeMap<Partition, Vec<usize>>| -> Value {
        a.iter()
            .map(|(l, ls)| json!({ "lambda": partition_json(l), "labels": ls }))
            .collect()
    };
    json!({
        "j": d.j,
        "H": subgroup_json(&d.h),
        "kind": d.kind.to_string(),
        "V": d.v.to_string(),
        "W": d.w.as_ref().map(ToString::to_string),
        "action_V": action(&d.action_v),
        "action_W": d.action_w.as_ref().map(action),
        "t0": d.t0.as_ref().map(rat_str),
    })
}

pub fn lie_build(engine: &Engine, a: LieBuild<'_>) -> Result<Out> {
    let h = parse_subgroup(a.h, a.j)?;
    let kind: LieKind = a.kind.parse()?;
    let mut d = match kind {
        LieKind::Exceptional(e) => ClassificationDatum::exceptional(h, e),
        _ => ClassificationDatum::new(h, kind, parse_object(a.v)?),
    };
    if let Some(w) = a.w {
        d = d.with_w(parse_object(w)?);
    }
    if let Some(t0) = a.t0 {
        d = d.with_t0(parse_rational(t0)?);
    }
    if let Some(s) = a.action {
        d.action_v = parse_action(s)?;
    }
    if let Some(s) = a.action_w {
        d.action_w = Some(parse_action(s)?);
    }
    let lie = engine.build_simple_lie(&d)?;
    let text = format!(
        "{d}\neven: {}\nodd: {}\ndim: {}\nsuperdim: {}",
        lie.even, lie.odd, lie.dim, lie.superdim
    );
    let json = json!({
        "datum": datum_json(&d),
        "inner_even": h_json(&lie.inner_even),
        "inner_odd": h_json(&lie.inner_odd),
        "even": object_json(&lie.even),
        "odd": object_json(&lie.odd),
        "dim": poly_json(&lie.dim),
        "superdim": poly_json(&lie.superdim),
    });
    let rows = vec![
        vec!["even".into(), lie.even.to_string()],
        vec!["odd".into(), lie.odd.to_string()],
        vec!["dim".into(), lie.dim.to_string()],
        vec!["superdim".into(), lie.superdim.to_string()],
    ];
    Ok(Out { text, json, rows })
}

pub fn lie_enum(engine: &Engine, jmax: usize, size: usize, kinds: &str) -> Result<Out> {
    let kinds = LieKind::parse_list(kinds)?;
    let data = engine.enumerate_classification(jmax, size, &kinds)?;
    let text: Vec<String> = data.iter().map(ToString::to_string).collect();
    let rows = data
        .iter()
        .map(|d| {
            vec![
                d.j.to_string(),
                d.h.to_string(),
                d.kind.to_string(),
                d.v.to_string(),
                d.w.as_ref().map(ToString::to_string).unwrap_or_default(),
                d.t0.as_ref().map(rat_str).unwrap_or_default(),
            ]
        })
        .collect();
    Ok(Out {
        text: format!("{}\n{} data", text.join("\n"), data.len()),
        json: json!({ "count": data.len(), "data": data.iter().map(datum_json).collect::<Vec<_>>() }),
        rows,
    })
}

pub fn witt(p: u64, check: &str) -> Result<Out> {
    let w = WittAlgebra::new(p)?;
    let mut results: Vec<(String, Value)> = vec![("dim".into(), json!(w.dim()))];
    let all = check == "all";
    if !all && !["antisymmetry", "jacobi", "ideal"].contains(&check) {
        return Err(Error::Parse(format!(
            "unknown check {check:?}; use antisymmetry, jacobi, ideal or all"
        )));
    }
    if all || check == "antisymmetry" {
        results.push(("antisymmetry".into(), json!(w.check_antisymmetry())));
    }
    if all || check == "jacobi" {
        results.push(("jacobi".into(), json!(w.check_jacobi())));
    }
    if all || check == "ideal" {
        let witness = w.proper_ideal_witness();
        results.push(("simple".into(), json!(witness.is_none())));
        if let Some(x) = witness {
            results.push(("ideal_generator".into(), json!(x.to_string())));
        }
    }
    let text = results
        .iter()
        .map(|(k, v)| format!("{k}: {}", v.to_string().trim_matches('"')))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = results
        .iter()
        .map(|(k, v)| vec![k.clone(), v.to_string().trim_matches('"').to_string()])
        .collect();
    let mut obj = serde_json::Map::new();
    obj.insert("p".into(), json!(p));
    for (k, v) in results {
        obj.insert(k, v);
    }
    Ok(Out {
        text,
        json: Value::Object(obj),
        rows,
    })
}

pub fn cartan(kind: &str, nums: &[usize]) -> Result<Out> {
    let kind: CartanType = kind.parse()?;
    if nums.len() < 3 {
        return Err(Error::Parse("cartan-dim needs TYPE m n_1 .. n_m p".into()));
    }
    let m = nums[0];
    let p = nums[nums.len() - 1] as u64;
    let n = &nums[1..nums.len() - 1];
    let d = cartan_dim(kind, m, n, p)?;
    let candidates: Vec<String> = match &d {
        CartanDim::Exact(x) => vec![x.to_string()],
        CartanDim::Either(a, b) => vec![a.to_string(), b.to_string()],
    };
    Ok(Out {
        text: d.to_string(),
        json: json!({ "type": kind.to_string(), "m": m, "n": n, "p": p, "dims": candidates }),
        rows: vec![candidates],
    })
}

fn cone_json(c: &BinomialCone) -> Value {
    let coeffs: serde_json::Map<String, Value> = c
        .coeffs
        .iter()
        .map(|(k, a)| (k.to_string(), json!(a)))
        .collect();
    json!({ "coeffs": coeffs })
}

pub fn frob_exists(from: &str, to: &str, bounds: WitnessBounds) -> Result<Out> {
    let (src, tgt) = (parse_rational(from)?, parse_rational(to)?);
    let d = functor_exists_bounded(&src, &tgt, bounds)?;
    let verdict = if d.exists { "exists" } else { "does not exist" };
    let mut text = format!(
        "Rep(S_{{{}}}) -> Rep(S_{{{}}}): {verdict} ({})",
        rat_str(&src),
        rat_str(&tgt),
        d.mode
    );
    if let Some(w) = &d.witness {
        text.push_str(&format!("\nwitness: {w}"));
    }
    let mode = match d.mode {
        deligne::frob::DecisionMode::DenominatorTest => "denominator",
        deligne::frob::DecisionMode::IntegerTest => "integer",
    };
    Ok(Out {
        text,
        json: json!({
            "from": rat_str(&src),
            "to": rat_str(&tgt),
            "exists": d.exists,
            "mode": mode,
            "witness": d.witness.as_ref().map(cone_json),
        }),
        rows: vec![vec![
            verdict.to_string(),
            mode.to_string(),
            d.witness.map(|w| w.to_string()).unwrap_or_default(),
        ]],
    })
}

pub fn frob_enum(t: &str, dim: &str, jmax: usize, max_summands: usize) -> Result<Out> {
    let (tgt, src) = (parse_rational(t)?, parse_rational(dim)?);
    let data = enumerate_frobenius_functors_bounded(&src, &tgt, jmax, max_summands)?;
    let text: Vec<String> = data.iter().map(ToString::to_string).collect();
    let json_data: Vec<Value> = data
        .iter()
        .map(|d| {
            let summands: Vec<Value> = d.summands.iter().map(|(j, h)| json!({ "j": j, "H": subgroup_json(h) })).collect();
            json!({ "summands": summands, "dim": d.dim_poly().map(|p| p.to_string()).unwrap_or_default() })
        })
        .collect();
    Ok(Out {
        text: format!("{}\n{} algebras", text.join("\n"), data.len())
            .trim_start()
            .to_string(),
        json: json!({ "t": rat_str(&tgt), "dim": rat_str(&src), "count": data.len(), "algebras": json_data }),
        rows: text.into_iter().map(|s| vec![s]).collect(),
    })
}

pub fn binom_expand(i: usize, j: usize) -> Result<Out> {
    let c = binom_product_expand(i, j);
    let product = &binom_poly(i) * &binom_poly(j);
    Ok(Out {
        text: format!("C(t,{i})*C(t,{j}) = {c}"),
        json: json!({ "i": i, "j": j, "expansion": cone_json(&c), "product": product.to_string() }),
        rows: c
            .coeffs
            .iter()
            .map(|(k, a)| vec![k.to_string(), a.to_string()])
            .collect(),
    })
}

pub fn oracle_simple(n: usize, g: &str, m: usize) -> Result<Out> {
    let g = parse_subgroup(g, n)?;
    let a = fun_g_algebra(n, &g, m, None)?;
    let r = invariant_simple(&a);
    let witness_dim = r.witness.as_ref().map(Vec::len);
    let mut text = format!(
        "Fun_G(S_{n}, Mat_{m}) with G = {g}, |G| = {}\ndim: {}\nsimple: {}",
        g.order(),
        a.dim(),
        r.simple
    );
    if let Some(d) = witness_dim {
        text.push_str(&format!("\nwitness ideal dimension: {d}"));
    }
    Ok(Out {
        text,
        json: json!({ "N": n, "G": subgroup_json(&g), "m": m, "dim": a.dim(), "simple": r.simple, "witness_dim": witness_dim }),
        rows: vec![vec![a.dim().to_string(), r.simple.to_string()]],
    })
}

pub fn oracle_gram(n: usize, j: usize, h: Option<&str>) -> Result<Out> {
    let h = match h {
        Some(s) => parse_subgroup(s, j)?,
        None => FiniteSubgroup::symmetric(j),
    };
    let g = frobenius_gram(n, &h)?;
    let rows = matrix_grid(&g);
    Ok(Out {
        text: grid_text(&rows),
        json: json!({ "N": n, "j": j, "H": subgroup_json(&h), "identity": g.is_identity(), "matrix": rows }),
        rows,
    })
}

/// The report and whether every criterion passed.
pub fn selftest(seed: u64) -> (Out, bool) {
    let results = run_all(seed);
    let ok = results.iter().all(|r| r.passed);
    let json_rows: Vec<Value> = results
        .iter()
        .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
        .collect();
    let passed = results.iter().filter(|r| r.passed).count();
    let out = Out {
        text: report(&results),
        json: json!({ "seed": seed, "passed": passed, "total": results.len(), "criteria": json_rows }),
        rows: results
            .iter()
            .map(|r| {
                vec![
                    r.id.to_string(),
                    if r.passed { "PASS" } else { "FAIL" }.into(),
                    r.name.into(),
                    r.detail.clone(),
                ]
            })
            .collect(),
    };
    (out, ok)
}
