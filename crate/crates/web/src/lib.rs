//! JSON entry points for the static browser demo in `www/`.
//!
//! Every function returns a JSON document; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use coxeter_shuffle::coxeter::{build_group_with_caps, Family, GroupDescriptor};
use coxeter_shuffle::gfpoly::{type_a_orbit_census, type_b_orbit_census};
use coxeter_shuffle::measures::{class_distribution, measure, total_variation_to_uniform};
use coxeter_shuffle::rational::{format_q, int, parse_q, Q};
use coxeter_shuffle::{Caps, Error};

fn demo_caps() -> Caps {
    Caps { max_rank_a: 5, max_rank_b: 4, max_rank_d: 4, enumeration_budget: 100_000, ..Caps::default() }
}

fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({"error": e.to_string()}).to_string(),
    }
}

/// Coefficients of `M_{W,x}` grouped by descent set, plus class
/// probabilities. `group` is a descriptor such as `B3` or `I2(5)`.
#[wasm_bindgen]
pub fn explore_measure(group: &str, x: &str) -> String {
    respond((|| {
        let caps = demo_caps();
        let desc: GroupDescriptor = group.parse()?;
        let g = build_group_with_caps(desc, &caps)?;
        let x = parse_q(x)?;
        let m = measure(&g, x)?;
        let mut by_descents: Vec<(u32, usize, Q)> = Vec::new();
        for (w, e) in g.elements().iter().enumerate() {
            match by_descents.iter_mut().find(|(d, _, _)| *d == e.descents.0) {
                Some(entry) => entry.1 += 1,
                None => by_descents.push((e.descents.0, 1, m.coefficient(w))),
            }
        }
        by_descents.sort_by_key(|&(d, _, _)| (d.count_ones(), d));
        let rows: Vec<Value> = by_descents
            .iter()
            .map(|(d, count, c)| {
                json!({
                    "descents": coxeter_shuffle::coxeter::SimpleSet(*d).to_string(),
                    "elements": count,
                    "coefficient": format_q(c),
                    "value": to_f64(c),
                })
            })
            .collect();
        let classes: Vec<Value> = class_distribution(&g, &m)
            .iter()
            .map(|(label, p)| json!({"label": label.to_string(), "probability": format_q(p), "value": to_f64(p)}))
            .collect();
        Ok(json!({
            "group": desc.to_string(),
            "order": g.order(),
            "x": format_q(&x),
            "identity": format_q(&m.coefficient(g.identity())),
            "longest_element": format_q(&m.coefficient(g.longest_element())),
            "nonnegative": m.is_nonnegative(),
            "total_variation": format_q(&total_variation_to_uniform(&g, &m)),
            "by_descents": rows,
            "classes": classes,
        }))
    })())
}

/// Total variation distance to uniform at `x = 2, 3, ..., max_x`.
#[wasm_bindgen]
pub fn tv_curve(group: &str, max_x: u32) -> String {
    respond((|| {
        let caps = demo_caps();
        let desc: GroupDescriptor = group.parse()?;
        let g = build_group_with_caps(desc, &caps)?;
        if !(2..=256).contains(&max_x) {
            return Err(Error::InvalidParameter("max_x must be in 2..=256".into()));
        }
        let points = (2..=max_x)
            .map(|x| {
                let tv = total_variation_to_uniform(&g, &measure(&g, int(x as i128))?);
                Ok(json!({"x": x, "tv": format_q(&tv), "value": to_f64(&tv)}))
            })
            .collect::<Result<Vec<Value>, Error>>()?;
        Ok(json!({"group": desc.to_string(), "points": points}))
    })())
}

/// Class probabilities from polynomials over `F_q` next to those of
/// `M_{W,q}`, for `family` `A` (`W = S_n`) or `B` (`W = B_n`).
#[wasm_bindgen]
pub fn compare_orbits(family: &str, n: usize, q: u32) -> String {
    respond((|| {
        let caps = demo_caps();
        let family: Family = family.parse()?;
        let (desc, census) = match family {
            Family::A => (GroupDescriptor::symmetric(n), type_a_orbit_census(n, q, &caps)?),
            Family::B => (GroupDescriptor::b(n), type_b_orbit_census(n, q, &caps)?),
            other => return Err(Error::UnsupportedFamily(other.to_string())),
        };
        let g = build_group_with_caps(desc, &caps)?;
        let predicted = class_distribution(&g, &measure(&g, int(q as i128))?);
        let observed = census.distribution();
        let rows: Vec<Value> = predicted
            .iter()
            .map(|(label, p)| {
                let o = observed.get(label);
                json!({
                    "label": label.to_string(),
                    "polynomials": census.count(label),
                    "orbit_probability": format_q(&o),
                    "measure_probability": format_q(p),
                    "agree": o == *p,
                })
            })
            .collect();
        Ok(json!({
            "group": desc.to_string(),
            "q": q,
            "polynomials": census.total,
            "agree": observed.agrees_with(&predicted),
            "classes": rows,
        }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_measure() {
        let v: Value = serde_json::from_str(&explore_measure("G2", "7")).unwrap();
        assert_eq!(v["identity"], "8/49");
        assert_eq!(v["longest_element"], "1/49");
    }

    #[test]
    fn errors_are_json() {
        let v: Value = serde_json::from_str(&explore_measure("Q7", "2")).unwrap();
        assert!(v["error"].is_string());
        let v: Value = serde_json::from_str(&explore_measure("A2", "0")).unwrap();
        assert!(v["error"].is_string());
    }
}
