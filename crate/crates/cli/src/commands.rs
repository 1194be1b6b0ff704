use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use coxeter_shuffle::coxeter::{
    build_group_with_caps, fixed_space_dimension, subset_equivalence_classes, CoxeterGroup, Family, GroupDescriptor,
};
use coxeter_shuffle::descent_algebra::{idempotent_checks, DescentAlgebra};
use coxeter_shuffle::gfpoly::{type_a_orbit_census, type_b_orbit_census, sl3_remark_counts};
use coxeter_shuffle::markov::spectrum_checks_with_caps;
use coxeter_shuffle::measures::{
    class_distribution, closed_form, gsr_shuffle_with_caps, identity_value, longest_value, measure as build_measure,
    sample as draw, total_variation_to_uniform,
};
use coxeter_shuffle::necklaces::{
    closed_d, closed_p, enumerate_necklaces_with_caps, ornament_type_counts_with_caps, reiner_checks, NecklaceKind,
};
use coxeter_shuffle::rational::{format_q, int, parse_q, pow, Q};
use coxeter_shuffle::{Caps, Error};

use crate::output::OutputRecord;
use crate::SampleMethod;

type Outcome = Result<OutputRecord, Error>;

fn rq(x: &Q) -> Value {
    Value::from(format_q(x))
}

fn group_params(desc: &GroupDescriptor) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("group".into(), Value::from(desc.to_string()));
    m
}

fn element_name(g: &CoxeterGroup, w: usize) -> String {
    g.element(w).form.to_string()
}

pub fn group(desc: &GroupDescriptor, caps: &Caps) -> Outcome {
    let g = build_group_with_caps(*desc, caps)?;
    let mut rec = OutputRecord::new("group", Value::Object(group_params(desc)));
    let classes: Vec<Value> = g
        .conjugacy_classes()
        .iter()
        .zip(g.class_labels())
        .map(|(c, label)| {
            json!({
                "label": label.to_string(),
                "size": c.len(),
                "representative": element_name(&g, c[0]),
                "fixed_space_dimension": fixed_space_dimension(&g, c[0]),
            })
        })
        .collect();
    let subset_classes: Vec<Value> = subset_equivalence_classes(&g)
        .iter()
        .map(|c| {
            json!({
                "rank": c.rank(),
                "members": c.members().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut fix_census = vec![0u128; g.rank() + 1];
    for w in 0..g.order() {
        fix_census[fixed_space_dimension(&g, w)] += 1;
    }
    let product = g.exponents().iter().fold(vec![1u128], |acc, &m| {
        let mut next = vec![0; acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i] += c * m as u128;
            next[i + 1] += c;
        }
        next
    });
    rec.results = json!({
        "order": g.order(),
        "rank": g.rank(),
        "exponents": g.exponents(),
        "identity": element_name(&g, g.identity()),
        "longest_element": element_name(&g, g.longest_element()),
        "conjugacy_classes": classes,
        "subset_classes": subset_classes,
        "fixed_space_dimension_census": fix_census,
    });
    rec.check("order = prod (1 + m_i)", g.order() as u128 == desc.order());
    rec.check("sum x^dim Fix(w) = prod (x + m_i)", fix_census == product);
    Ok(rec)
}

pub fn measure(desc: &GroupDescriptor, x: &str, caps: &Caps) -> Outcome {
    let x = parse_q(x)?;
    let g = build_group_with_caps(*desc, caps)?;
    let m = build_measure(&g, x)?;
    let mut params = group_params(desc);
    params.insert("x".into(), rq(&x));
    let mut rec = OutputRecord::new("measure", Value::Object(params));
    let elements: Vec<Value> = (0..g.order())
        .map(|w| {
            json!({
                "element": element_name(&g, w),
                "descents": g.element(w).descents.to_string(),
                "coefficient": format_q(&m.coefficient(w)),
            })
        })
        .collect();
    rec.results = json!({
        "identity": rq(&m.coefficient(g.identity())),
        "longest_element": rq(&m.coefficient(g.longest_element())),
        "total": rq(&m.total()),
        "nonnegative": m.is_nonnegative(),
        "total_variation_to_uniform": rq(&total_variation_to_uniform(&g, &m)),
        "class_distribution": serde_json::to_value(class_distribution(&g, &m)).expect("serializable"),
        "elements": elements,
    });
    rec.check("coefficients sum to 1", m.total() == int(1));
    rec.check("M(id) = prod (x + m_i) / (x^n |W|)", m.coefficient(g.identity()) == identity_value(&g, x));
    rec.check("M(w0) = prod (x - m_i) / (x^n |W|)", m.coefficient(g.longest_element()) == longest_value(&g, x));
    if desc.family != Family::D {
        let mut ok = true;
        for w in 0..g.order() {
            ok &= closed_form(&g, x, w)? == m.coefficient(w);
        }
        rec.check("closed form matches every coefficient", ok);
    }
    Ok(rec)
}

pub fn idempotents(desc: &GroupDescriptor, caps: &Caps) -> Outcome {
    let g = build_group_with_caps(*desc, caps)?;
    let algebra = DescentAlgebra::new(&g)?;
    let mut rec = OutputRecord::new("idempotents", Value::Object(group_params(desc)));
    let beta = algebra.beta();
    let mut entries = Vec::new();
    for (c, j) in beta.subsets().iter().enumerate() {
        for (r, k) in beta.subsets().iter().enumerate() {
            let v = beta.at(r, c);
            if !v.is_zero() {
                entries.push(json!({"K": k.to_string(), "J": j.to_string(), "beta": format_q(&v)}));
            }
        }
    }
    let idempotents: Vec<Value> = subset_equivalence_classes(&g)
        .iter()
        .map(|class| {
            let e = algebra.e_lambda(class);
            json!({
                "members": class.members().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "rank": class.rank(),
                "identity_coefficient": format_q(&e.coefficient(g.identity())),
                "coefficient_sum": format_q(&e.coefficient_sum()),
                "support_size": e.coefficients().iter().filter(|c| !c.is_zero()).count(),
            })
        })
        .collect();
    rec.results = json!({"beta": entries, "idempotents": idempotents});
    rec.checks_from(&idempotent_checks(&g)?);
    Ok(rec)
}

pub fn spectrum(desc: &GroupDescriptor, x: &str, caps: &Caps) -> Outcome {
    let x = parse_q(x)?;
    let g = build_group_with_caps(*desc, caps)?;
    let report = spectrum_checks_with_caps(&g, x, caps)?;
    let mut params = group_params(desc);
    params.insert("x".into(), rq(&x));
    let mut rec = OutputRecord::new("spectrum", Value::Object(params));
    let eigen: Vec<Value> = report
        .multiplicities
        .iter()
        .enumerate()
        .map(|(i, &k)| json!({"i": i, "eigenvalue": format_q(&pow(x, -(i as i32))), "multiplicity": k}))
        .collect();
    rec.results = json!({"eigenvalues": eigen, "trace": rq(&report.trace)});
    rec.checks_from(&report.checks);
    Ok(rec)
}

pub fn conjecture(family: Family, n: usize, q: u32, caps: &Caps) -> Outcome {
    let (desc, census) = match family {
        Family::A => (GroupDescriptor::symmetric(n), type_a_orbit_census(n, q, caps)?),
        Family::B => (GroupDescriptor::b(n), type_b_orbit_census(n, q, caps)?),
        other => return Err(Error::UnsupportedFamily(format!("{other}: no polynomial model"))),
    };
    let g = build_group_with_caps(desc, caps)?;
    let m = build_measure(&g, int(q as i128))?;
    let predicted = class_distribution(&g, &m);
    let observed = census.distribution();
    let mut rec = OutputRecord::new("conjecture", json!({"family": family.to_string(), "n": n, "q": q}));
    let id_label = &g.class_labels()[g.conjugacy_class_of(g.identity())];
    let lehrer: Q = desc.exponents().iter().map(|&m| int((q + m) as i128) / int(1 + m as i128)).product();
    rec.results = json!({
        "group": desc.to_string(),
        "polynomials": census.total,
        "counts": serde_json::to_value(&census).expect("serializable"),
        "orbit_distribution": serde_json::to_value(&observed).expect("serializable"),
        "measure_distribution": serde_json::to_value(&predicted).expect("serializable"),
        "identity_class_count": census.count(id_label),
    });
    rec.check("orbit distribution = class distribution of M_{W,q}", observed.agrees_with(&predicted));
    rec.check("identity class count = prod (q + m_i) / (1 + m_i)", int(census.count(id_label) as i128) == lehrer);
    rec.check("M_{W,q} is nonnegative", m.is_nonnegative());
    Ok(rec)
}

pub fn necklaces(n: usize, q: u32, caps: &Caps) -> Outcome {
    if q % 2 == 0 {
        return Err(Error::InvalidParameter(format!("q = {q} must be odd")));
    }
    let s = (q - 1) / 2;
    let mut rec = OutputRecord::new("necklaces", json!({"n": n, "q": q}));
    let mut sizes = Vec::new();
    let mut closed_ok = true;
    for m in 1..=n {
        let d = enumerate_necklaces_with_caps(NecklaceKind::Blinking, s, m, caps)?;
        let p = enumerate_necklaces_with_caps(NecklaceKind::Twisted, s, m, caps)?;
        let (cd, cp) = (closed_d(q as u64, m as u32)?, closed_p(q as u64, m as u32)?);
        closed_ok &= d == cd && p == cp;
        sizes.push(json!({"m": m, "blinking": d, "blinking_closed": cd, "twisted": p, "twisted_closed": cp}));
    }
    let types = ornament_type_counts_with_caps(n, q, caps)?;
    let total: u128 = types.values().sum();
    let by_type: BTreeMap<String, u128> = types.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    rec.results = json!({"necklaces": sizes, "ornament_types": by_type, "ornaments": total});
    rec.check("enumerated necklaces = closed forms", closed_ok);
    rec.check("ornaments = q^n", total == (q as u128).pow(n as u32));
    if q > 1 {
        rec.checks_from(&reiner_checks(n, q, caps)?);
    }
    Ok(rec)
}

pub fn counterexample() -> Outcome {
    let (enumerated, predicted) = sl3_remark_counts()?;
    let mut rec = OutputRecord::new("counterexample", json!({"q": 5, "n": 3}));
    rec.results = json!({"enumerated": enumerated, "predicted": predicted});
    rec.check("uniform choice among semisimple classes differs from the prediction", enumerated != predicted);
    Ok(rec)
}

pub fn sample(desc: &GroupDescriptor, x: &str, count: usize, seed: u64, method: SampleMethod, caps: &Caps) -> Outcome {
    let x = parse_q(x)?;
    let g = build_group_with_caps(*desc, caps)?;
    let m = build_measure(&g, x)?;
    caps_check(count, caps)?;
    let draws: Vec<usize> = match method {
        SampleMethod::Exact => draw(&g, &m, seed, count)?,
        SampleMethod::Gsr => {
            let a = if desc.family == Family::A && x.is_integer() && x >= int(2) {
                *x.numer() as u32
            } else {
                return Err(Error::InvalidParameter("gsr sampling needs type A and an integer x >= 2".into()));
            };
            gsr_shuffle_with_caps(desc.rank_or_p + 1, a, seed, count, caps)?
                .into_iter()
                .map(|p| {
                    let form = coxeter_shuffle::coxeter::ConcreteForm::Signed(p.iter().map(|&c| c as i8).collect());
                    g.index_of(&form).ok_or_else(|| Error::InternalInconsistency("shuffle is not in the group".into()))
                })
                .collect::<Result<_, _>>()?
        }
    };
    let mut counts = vec![0u64; g.order()];
    for w in draws {
        counts[w] += 1;
    }
    let mut params = group_params(desc);
    params.insert("x".into(), rq(&x));
    params.insert("count".into(), json!(count));
    params.insert("seed".into(), json!(seed));
    params.insert("method".into(), json!(format!("{method:?}").to_lowercase()));
    let mut rec = OutputRecord::new("sample", Value::Object(params));
    let frequencies: Vec<Value> = (0..g.order())
        .filter(|&w| counts[w] > 0)
        .map(|w| json!({"element": element_name(&g, w), "count": counts[w], "probability": format_q(&m.coefficient(w))}))
        .collect();
    rec.results = json!({"frequencies": frequencies});
    rec.check("every draw has positive mass", (0..g.order()).all(|w| counts[w] == 0 || m.coefficient(w) > Q::zero()));
    Ok(rec)
}

fn caps_check(count: usize, caps: &Caps) -> Result<(), Error> {
    if count as u128 > caps.enumeration_budget {
        return Err(Error::Budget { what: "samples".into(), needed: count as u128, budget: caps.enumeration_budget });
    }
    Ok(())
}
