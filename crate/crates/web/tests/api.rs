use coxeter_shuffle_web::{compare_orbits, explore_measure, tv_curve};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn s2_explorer() {
    let v = parse(explore_measure("S2", "2"));
    assert_eq!(v["identity"], "3/4");
    assert_eq!(v["total_variation"], "1/4");
    assert_eq!(v["by_descents"].as_array().unwrap().len(), 2);
}

#[test]
fn tv_curve_is_monotone_for_s4() {
    let v = parse(tv_curve("S4", 32));
    let values: Vec<f64> = v["points"].as_array().unwrap().iter().map(|p| p["value"].as_f64().unwrap()).collect();
    assert_eq!(values.len(), 31);
    assert!(values.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn orbit_comparison_agrees() {
    let v = parse(compare_orbits("B", 2, 3));
    assert_eq!(v["agree"], true);
    assert_eq!(v["polynomials"], 9);
    let v = parse(compare_orbits("A", 4, 2));
    assert!(v["error"].is_string());
}
